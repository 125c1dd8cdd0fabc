//! Representations of the quiver `1 -> 2 -> 3` over a field: two
//! composable linear maps `a: V1 -> V2` and `b: V2 -> V3`.

use crate::matrix::Matrix;
use crate::scalar::Field;

/// The six indecomposable representations, named by their support
/// interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indecomposable {
    E1,
    E2,
    E3,
    E12,
    E23,
    E123,
}

pub const ALL_INDECOMPOSABLES: [Indecomposable; 6] = [
    Indecomposable::E1,
    Indecomposable::E2,
    Indecomposable::E3,
    Indecomposable::E12,
    Indecomposable::E23,
    Indecomposable::E123,
];

impl Indecomposable {
    /// Dimension vector `(d1, d2, d3)`.
    pub fn dims(self) -> (usize, usize, usize) {
        match self {
            Indecomposable::E1 => (1, 0, 0),
            Indecomposable::E2 => (0, 1, 0),
            Indecomposable::E3 => (0, 0, 1),
            Indecomposable::E12 => (1, 1, 0),
            Indecomposable::E23 => (0, 1, 1),
            Indecomposable::E123 => (1, 1, 1),
        }
    }

    /// The representation with identity structure maps on the support.
    pub fn realize<F: Field>(self) -> QuiverRep<F> {
        let (d1, d2, d3) = self.dims();
        let a = if d1 == 1 && d2 == 1 {
            Matrix::identity(1)
        } else {
            Matrix::zero(d2, d1)
        };
        let b = if d2 == 1 && d3 == 1 {
            Matrix::identity(1)
        } else {
            Matrix::zero(d3, d2)
        };
        QuiverRep::new(a, b)
    }

    pub fn label(self) -> &'static str {
        match self {
            Indecomposable::E1 => "E1",
            Indecomposable::E2 => "E2",
            Indecomposable::E3 => "E3",
            Indecomposable::E12 => "E12",
            Indecomposable::E23 => "E23",
            Indecomposable::E123 => "E123",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        ALL_INDECOMPOSABLES.iter().copied().find(|e| e.label() == s)
    }
}

/// A finite-dimensional representation `V1 -a-> V2 -b-> V3`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep<F: Field> {
    a: Matrix<F>,
    b: Matrix<F>,
}

impl<F: Field> QuiverRep<F> {
    pub fn new(a: Matrix<F>, b: Matrix<F>) -> Self {
        assert_eq!(
            a.rows(),
            b.cols(),
            "the maps must compose: a lands where b starts"
        );
        QuiverRep { a, b }
    }

    pub fn zero_rep() -> Self {
        QuiverRep {
            a: Matrix::zero(0, 0),
            b: Matrix::zero(0, 0),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.cols(), self.a.rows(), self.b.rows())
    }

    pub fn dim(&self, level: usize) -> usize {
        match level {
            0 => self.a.cols(),
            1 => self.a.rows(),
            2 => self.b.rows(),
            _ => panic!("levels are 0, 1, 2"),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dim(0) + self.dim(1) + self.dim(2)
    }

    pub fn a(&self) -> &Matrix<F> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<F> {
        &self.b
    }

    pub fn is_zero_rep(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        QuiverRep {
            a: self.a.block_diag(&other.a),
            b: self.b.block_diag(&other.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::F2;

    #[test]
    fn indecomposable_shapes() {
        for e in ALL_INDECOMPOSABLES {
            let r: QuiverRep<F2> = e.realize();
            assert_eq!(r.dims(), e.dims());
        }
    }

    #[test]
    fn interval_maps_are_identities() {
        let r: QuiverRep<F2> = Indecomposable::E123.realize();
        assert!(r.a().is_identity());
        assert!(r.b().is_identity());
        let r12: QuiverRep<F2> = Indecomposable::E12.realize();
        assert!(r12.a().is_identity());
        assert_eq!(r12.b().rows(), 0);
    }

    #[test]
    fn sums_add_dims() {
        let x: QuiverRep<F2> = Indecomposable::E12.realize();
        let y: QuiverRep<F2> = Indecomposable::E3.realize();
        assert_eq!(x.direct_sum(&y).dims(), (1, 1, 1));
    }
}
