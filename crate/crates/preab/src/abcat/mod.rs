//! The category of finitely generated abelian groups.
//!
//! Objects are presentations: `n` generators and a relation matrix whose
//! rows span the relation lattice in `Z^n`. Morphisms are integer matrices
//! sending generators to generator combinations, certified well-defined.
//! Two independent purity checkers are provided: an algebraic divisibility
//! test and a bounded lifting-square oracle.

mod group;
mod lifting;
mod morphism;
mod ops;
mod purity;
pub mod sample;

pub use group::{FGAbGroup, GroupInvariants};
pub use lifting::{purity_lifting, LiftBound, LiftingOutcome, LiftingSquare};
pub use morphism::{solve_morphism, AbError, AbMorphism, MorphismConstraint};
pub use ops::{
    classify, cokernel, direct_sum, has_rlp, image_factor, kernel, pullback, pushout,
    CokernelData, DirectSum, ImageFactorization, KernelData, MorphismFlags, PullbackData,
    PushoutData,
};
pub use purity::{purity_divisibility, ImpureWitness, PurityCertificate, PurityVerdict};
pub use sample::AbSampler;
