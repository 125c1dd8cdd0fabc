//! Morphisms of quiver representations and exact hom-space computation.

use super::rep::QuiverRep;
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::solve::{nullspace, solve_field};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuiverError {
    #[error("component shapes do not match the representation dimensions")]
    ShapeMismatch,
    #[error("a structure square does not commute")]
    NonCommuting,
    #[error("objects at the shared corner do not match")]
    CornerMismatch,
    #[error("subcategory is not reflective")]
    NotReflective,
    #[error("subcategory is not coreflective")]
    NotCoreflective,
    #[error("object decomposes outside the subcategory")]
    ObjectNotInSubcategory,
}

/// A morphism of representations: three component matrices commuting with
/// the structure maps.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMorphism<F: Field> {
    src: QuiverRep<F>,
    dst: QuiverRep<F>,
    phi: [Matrix<F>; 3],
}

impl<F: Field> RepMorphism<F> {
    pub fn new(
        src: QuiverRep<F>,
        dst: QuiverRep<F>,
        phi: [Matrix<F>; 3],
    ) -> Result<Self, QuiverError> {
        for level in 0..3 {
            if phi[level].rows() != dst.dim(level) || phi[level].cols() != src.dim(level) {
                return Err(QuiverError::ShapeMismatch);
            }
        }
        if phi[1].mul(src.a()) != dst.a().mul(&phi[0])
            || phi[2].mul(src.b()) != dst.b().mul(&phi[1])
        {
            return Err(QuiverError::NonCommuting);
        }
        Ok(RepMorphism { src, dst, phi })
    }

    pub fn identity(x: &QuiverRep<F>) -> Self {
        RepMorphism {
            src: x.clone(),
            dst: x.clone(),
            phi: [
                Matrix::identity(x.dim(0)),
                Matrix::identity(x.dim(1)),
                Matrix::identity(x.dim(2)),
            ],
        }
    }

    pub fn zero(src: &QuiverRep<F>, dst: &QuiverRep<F>) -> Self {
        RepMorphism {
            src: src.clone(),
            dst: dst.clone(),
            phi: [
                Matrix::zero(dst.dim(0), src.dim(0)),
                Matrix::zero(dst.dim(1), src.dim(1)),
                Matrix::zero(dst.dim(2), src.dim(2)),
            ],
        }
    }

    pub fn src(&self) -> &QuiverRep<F> {
        &self.src
    }

    pub fn dst(&self) -> &QuiverRep<F> {
        &self.dst
    }

    pub fn phi(&self, level: usize) -> &Matrix<F> {
        &self.phi[level]
    }

    pub fn components(&self) -> &[Matrix<F>; 3] {
        &self.phi
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &RepMorphism<F>) -> Result<RepMorphism<F>, QuiverError> {
        if self.src != other.dst {
            return Err(QuiverError::CornerMismatch);
        }
        Ok(RepMorphism {
            src: other.src.clone(),
            dst: self.dst.clone(),
            phi: [
                self.phi[0].mul(&other.phi[0]),
                self.phi[1].mul(&other.phi[1]),
                self.phi[2].mul(&other.phi[2]),
            ],
        })
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.phi.iter().all(Matrix::is_zero)
    }

    pub fn is_identity_morphism(&self) -> bool {
        self.src == self.dst && self.phi.iter().all(Matrix::is_identity)
    }

    /// All components square and invertible.
    pub fn is_iso(&self) -> bool {
        (0..3).all(|l| {
            self.phi[l].rows() == self.phi[l].cols()
                && crate::solve::rank(&self.phi[l]) == self.phi[l].rows()
        })
    }

    pub fn direct_sum(&self, other: &RepMorphism<F>) -> RepMorphism<F> {
        RepMorphism {
            src: self.src.direct_sum(&other.src),
            dst: self.dst.direct_sum(&other.dst),
            phi: [
                self.phi[0].block_diag(&other.phi[0]),
                self.phi[1].block_diag(&other.phi[1]),
                self.phi[2].block_diag(&other.phi[2]),
            ],
        }
    }

    /// Concatenated column-major flattening of the three components.
    pub fn flatten(&self) -> Vec<F> {
        let mut v = Vec::new();
        for m in &self.phi {
            v.extend(m.vectorize());
        }
        v
    }

    pub fn from_flat(src: &QuiverRep<F>, dst: &QuiverRep<F>, v: &[F]) -> RepMorphism<F> {
        let sizes = [
            (dst.dim(0), src.dim(0)),
            (dst.dim(1), src.dim(1)),
            (dst.dim(2), src.dim(2)),
        ];
        let mut off = 0;
        let mut phi = Vec::with_capacity(3);
        for (r, c) in sizes {
            phi.push(Matrix::from_vec(r, c, &v[off..off + r * c]));
            off += r * c;
        }
        assert_eq!(off, v.len());
        RepMorphism {
            src: src.clone(),
            dst: dst.clone(),
            phi: [phi[0].clone(), phi[1].clone(), phi[2].clone()],
        }
    }
}

/// Basis of the space of morphisms `X -> Y`, in the deterministic
/// free-variable order of the underlying nullspace computation.
pub fn hom_space<F: Field>(x: &QuiverRep<F>, y: &QuiverRep<F>) -> Vec<RepMorphism<F>> {
    let n1 = y.dim(0) * x.dim(0);
    let n2 = y.dim(1) * x.dim(1);
    let n3 = y.dim(2) * x.dim(2);
    let total = n1 + n2 + n3;
    // Rows: phi2 a_X - a_Y phi1 = 0 and phi3 b_X - b_Y phi2 = 0,
    // vectorized with vec(LMR) = (R^T (x) L) vec(M).
    let r1 = y.dim(1) * x.dim(0);
    let r2 = y.dim(2) * x.dim(1);
    let mut sys = Matrix::zero(r1 + r2, total);
    let put = |sys: &mut Matrix<F>, block: &Matrix<F>, r0: usize, c0: usize| {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                sys[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    };
    let c1 = x.a().transpose().kronecker(&Matrix::identity(y.dim(1)));
    let c2 = Matrix::identity(x.dim(0)).kronecker(y.a()).neg();
    put(&mut sys, &c2, 0, 0);
    put(&mut sys, &c1, 0, n1);
    let c3 = x.b().transpose().kronecker(&Matrix::identity(y.dim(2)));
    let c4 = Matrix::identity(x.dim(1)).kronecker(y.b()).neg();
    put(&mut sys, &c4, r1, n1);
    put(&mut sys, &c3, r1, n1 + n2);
    let ns = nullspace(&sys);
    (0..ns.cols())
        .map(|j| RepMorphism::from_flat(x, y, &ns.col(j)))
        .collect()
}

pub fn hom_dim<F: Field>(x: &QuiverRep<F>, y: &QuiverRep<F>) -> usize {
    hom_space(x, y).len()
}

/// Solves `sum_k c_k transform(basis_k) = rhs` for scalars `c_k` and
/// returns the combined morphism `sum c_k basis_k`. The `transform` must
/// be linear (for instance pre- or post-composition).
pub fn solve_combination<F: Field>(
    src: &QuiverRep<F>,
    dst: &QuiverRep<F>,
    basis: &[RepMorphism<F>],
    transform: impl Fn(&RepMorphism<F>) -> RepMorphism<F>,
    rhs: &RepMorphism<F>,
) -> Option<(RepMorphism<F>, bool)> {
    let cols: Vec<Vec<F>> = basis.iter().map(|m| transform(m).flatten()).collect();
    let target = rhs.flatten();
    if basis.is_empty() {
        return if target.iter().all(num_traits::Zero::is_zero) {
            Some((RepMorphism::zero(src, dst), true))
        } else {
            None
        };
    }
    let sys = Matrix::from_cols(target.len(), &cols);
    let sol = solve_field(&sys, &target).expect("shapes agree")?;
    let mut acc = RepMorphism::zero(src, dst);
    for (k, c) in sol.particular.iter().enumerate() {
        acc = RepMorphism {
            src: acc.src,
            dst: acc.dst,
            phi: [
                acc.phi[0].add(&basis[k].phi[0].scale(c)),
                acc.phi[1].add(&basis[k].phi[1].scale(c)),
                acc.phi[2].add(&basis[k].phi[2].scale(c)),
            ],
        };
    }
    // The basis is linearly independent, so the solved morphism is unique
    // exactly when the coefficient system has trivial nullspace.
    Some((acc, sol.nullspace.cols() == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::rep::Indecomposable::*;
    use crate::scalar::F2;

    fn e(l: crate::quiver::rep::Indecomposable) -> QuiverRep<F2> {
        l.realize()
    }

    #[test]
    fn hom_dims_between_indecomposables() {
        assert_eq!(hom_dim(&e(E3), &e(E123)), 1);
        assert_eq!(hom_dim(&e(E2), &e(E123)), 0);
        assert_eq!(hom_dim(&e(E2), &e(E2)), 1);
        assert_eq!(hom_dim(&e(E123), &e(E1)), 1);
        assert_eq!(hom_dim(&e(E12), &e(E1)), 1);
        assert_eq!(hom_dim(&e(E1), &e(E12)), 0);
        assert_eq!(hom_dim(&e(E23), &e(E2)), 1);
        assert_eq!(hom_dim(&e(E2), &e(E12)), 1);
        assert_eq!(hom_dim(&e(E123), &e(E123)), 1);
    }

    #[test]
    fn hom_basis_elements_commute() {
        for x in crate::quiver::rep::ALL_INDECOMPOSABLES {
            for y in crate::quiver::rep::ALL_INDECOMPOSABLES {
                for m in hom_space(&e(x), &e(y)) {
                    let again =
                        RepMorphism::new(m.src().clone(), m.dst().clone(), m.components().clone());
                    assert!(again.is_ok());
                }
            }
        }
    }

    #[test]
    fn composition_of_interval_maps() {
        let z = hom_space(&e(E3), &e(E23)).remove(0);
        let w = hom_space(&e(E23), &e(E123)).remove(0);
        let c = w.compose(&z).unwrap();
        assert!(!c.is_zero_morphism());
    }
}
