//! Exact computational workbench for preabelian categories at desk scale.
//!
//! Everything here reduces to exact linear algebra: Smith normal form over
//! the integers, Gaussian elimination over a field. On top of that sit two
//! concrete categories — finitely generated abelian groups presented by
//! relation matrices ([`abcat`]) and representations of the A3 quiver
//! `1 -> 2 -> 3` over a field ([`quiver`]) — together with purity and
//! lifting-property checkers and a category-agnostic law harness
//! ([`catcore`]).
//!
//! No floating point is used anywhere; all verdicts are exact.

pub mod catcore;
pub mod lattice;
pub mod matrix;
pub mod scalar;
pub mod snf;
pub mod solve;
pub mod wire;

pub mod abcat;
pub mod quiver;

pub use matrix::Matrix;
pub use scalar::{EnumerableField, Field, Fp, Int, Rat, Scalar, F2, F3, F5, F7};
pub use snf::{smith_normal_form, SmithDecomposition};

/// Dense matrix over arbitrary-precision integers.
pub type IntegerMatrix = Matrix<Int>;
/// Dense matrix over the rationals.
pub type RationalMatrix = Matrix<Rat>;
/// Dense matrix over a prime field.
pub type FpMatrix<const P: u64> = Matrix<Fp<P>>;
