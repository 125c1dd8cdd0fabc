//! Category-agnostic law harness: an operation-table adapter trait over
//! the two concrete categories, retract verification, finite chain
//! composition, and the closure-law suites for pure monomorphisms.

mod ab_adapter;
mod adapter;
mod closure;
mod quiver_adapter;

pub use ab_adapter::AbAdapter;
pub use adapter::{
    compose_chain, verify_retract, CatError, CatFlags, CategoryAdapter, ChainComposition,
    RetractWitness,
};
pub use closure::{closure_suite, LawReport, SampleConfig, UnreliablePurity};
pub use quiver_adapter::QuiverAdapter;
