//! Morphisms of finitely generated abelian groups, plus the affine solver
//! used for retractions, diagonals, and mediating maps.

use super::group::FGAbGroup;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::solve::{solve_integer, LinAlgError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AbError {
    #[error("morphism not well-defined: source relation {relation} maps outside the relation lattice of the destination")]
    IllDefined { relation: usize },
    #[error("matrix shape {got:?} does not match generator counts {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("objects at the shared corner do not match")]
    CornerMismatch,
    #[error("the given square does not commute")]
    NonCommutingSquare,
    #[error("operation requires a monomorphism")]
    NotMono,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A morphism of presented groups: column `j` of `matrix` is the image of
/// source generator `j`, written in destination generators.
#[derive(Clone, Debug)]
pub struct AbMorphism {
    src: FGAbGroup,
    dst: FGAbGroup,
    matrix: Matrix<Int>,
}

impl AbMorphism {
    /// Certifies well-definedness: every source relation must land in the
    /// destination relation lattice.
    pub fn new(src: FGAbGroup, dst: FGAbGroup, matrix: Matrix<Int>) -> Result<Self, AbError> {
        if matrix.rows() != dst.generators() || matrix.cols() != src.generators() {
            return Err(AbError::ShapeMismatch {
                expected: (dst.generators(), src.generators()),
                got: (matrix.rows(), matrix.cols()),
            });
        }
        for r in 0..src.relations().rows() {
            let rel = src.relations().row(r);
            let image = matrix.mul_vec(&rel);
            if !dst.relation_lattice().contains(&image) {
                return Err(AbError::IllDefined { relation: r });
            }
        }
        Ok(AbMorphism { src, dst, matrix })
    }

    pub fn from_rows(
        src: FGAbGroup,
        dst: FGAbGroup,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self, AbError> {
        let m = if rows.is_empty() {
            Matrix::zero(dst.generators(), src.generators())
        } else {
            Matrix::from_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(Int::from).collect())
                    .collect(),
            )
        };
        Self::new(src, dst, m)
    }

    pub fn identity(g: &FGAbGroup) -> Self {
        AbMorphism {
            src: g.clone(),
            dst: g.clone(),
            matrix: Matrix::identity(g.generators()),
        }
    }

    pub fn zero(src: &FGAbGroup, dst: &FGAbGroup) -> Self {
        AbMorphism {
            src: src.clone(),
            dst: dst.clone(),
            matrix: Matrix::zero(dst.generators(), src.generators()),
        }
    }

    pub fn src(&self) -> &FGAbGroup {
        &self.src
    }

    pub fn dst(&self) -> &FGAbGroup {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix<Int> {
        &self.matrix
    }

    pub fn apply(&self, v: &[Int]) -> Vec<Int> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AbMorphism) -> Result<AbMorphism, AbError> {
        if self.src != other.dst {
            return Err(AbError::CornerMismatch);
        }
        Ok(AbMorphism {
            src: other.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// Equality modulo the destination relation lattice, column by column.
    pub fn eq_morphism(&self, other: &AbMorphism) -> bool {
        if self.src != other.src || self.dst != other.dst {
            return false;
        }
        (0..self.matrix.cols()).all(|j| {
            let diff: Vec<Int> = self
                .matrix
                .col(j)
                .iter()
                .zip(other.matrix.col(j))
                .map(|(a, b)| a - b)
                .collect();
            self.dst.relation_lattice().contains(&diff)
        })
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.eq_morphism(&AbMorphism::zero(&self.src, &self.dst))
    }
}

/// One linear side condition on an unknown morphism `X: src -> dst`:
/// `left · X · right ≡ rhs` modulo `modulo`, columnwise.
#[derive(Clone, Debug)]
pub struct MorphismConstraint {
    pub left: Matrix<Int>,
    pub right: Matrix<Int>,
    pub rhs: Matrix<Int>,
    pub modulo: Lattice,
}

impl MorphismConstraint {
    /// `X · right ≡ rhs (mod dst relations)`.
    pub fn post(right: Matrix<Int>, rhs: Matrix<Int>, dst: &FGAbGroup) -> Self {
        MorphismConstraint {
            left: Matrix::identity(dst.generators()),
            right,
            rhs,
            modulo: dst.relation_lattice().clone(),
        }
    }

    /// `left · X ≡ rhs (mod target relations)` for `left: dst -> T`.
    pub fn pre(left: Matrix<Int>, rhs: Matrix<Int>, target: &FGAbGroup) -> Self {
        let cols = rhs.cols();
        MorphismConstraint {
            left,
            right: Matrix::identity(cols),
            rhs,
            modulo: target.relation_lattice().clone(),
        }
    }
}

/// Outcome of the affine morphism solver.
pub struct MorphismSolution {
    pub morphism: AbMorphism,
    /// Whether the solution is unique as a morphism (all homogeneous
    /// solutions are zero modulo the destination relations).
    pub unique: bool,
}

/// Searches for a well-defined morphism `X: src -> dst` satisfying all
/// constraints. Well-definedness is imposed automatically. The underlying
/// system is solved exactly over the integers.
pub fn solve_morphism(
    src: &FGAbGroup,
    dst: &FGAbGroup,
    constraints: &[MorphismConstraint],
) -> Option<MorphismSolution> {
    let nx = dst.generators() * src.generators();
    let mut all = Vec::with_capacity(constraints.len() + 1);
    // Well-definedness: X * R_src^T ≡ 0 (mod dst relations).
    if src.relations().rows() > 0 {
        all.push(MorphismConstraint::post(
            src.relations().transpose(),
            Matrix::zero(dst.generators(), src.relations().rows()),
            dst,
        ));
    }
    all.extend_from_slice(constraints);

    // Assemble a block system over the unknowns vec(X) ++ aux lattice
    // coefficients, one aux block per constraint column.
    let mut aux_total = 0usize;
    for c in &all {
        aux_total += c.modulo.rank() * c.right.cols();
    }
    let total_cols = nx + aux_total;
    let mut rows_acc: Vec<Matrix<Int>> = Vec::new();
    let mut rhs_acc: Vec<Int> = Vec::new();
    let mut aux_off = nx;
    for c in &all {
        assert_eq!(c.left.cols(), dst.generators());
        assert_eq!(c.right.rows(), src.generators());
        assert_eq!(c.rhs.rows(), c.left.rows());
        assert_eq!(c.rhs.cols(), c.right.cols());
        let coeff = c.right.transpose().kronecker(&c.left); // rows: left.rows * right.cols
        let eq_rows = coeff.rows();
        let mut block = Matrix::zero(eq_rows, total_cols);
        for i in 0..eq_rows {
            for j in 0..nx {
                block[(i, j)] = coeff[(i, j)].clone();
            }
        }
        // Subtract lattice combinations per rhs column.
        let lat = c.modulo.basis();
        let lr = c.modulo.rank();
        for col in 0..c.right.cols() {
            for i in 0..c.left.rows() {
                for k in 0..lr {
                    block[(col * c.left.rows() + i, aux_off + col * lr + k)] =
                        -lat[(i, k)].clone();
                }
            }
        }
        aux_off += lr * c.right.cols();
        rhs_acc.extend(c.rhs.vectorize());
        rows_acc.push(block);
    }

    let system = rows_acc
        .into_iter()
        .reduce(|a, b| a.vstack(&b))
        .unwrap_or_else(|| Matrix::zero(0, total_cols));
    let sol = solve_integer(&system, &rhs_acc).expect("assembled shapes agree")?;

    let x = Matrix::from_vec(dst.generators(), src.generators(), &sol.particular[..nx]);
    let morphism = AbMorphism::new(src.clone(), dst.clone(), x)
        .expect("well-definedness was part of the system");

    let unique = (0..sol.kernel.cols()).all(|j| {
        let hx = Matrix::from_vec(
            dst.generators(),
            src.generators(),
            &sol.kernel.col(j)[..nx],
        );
        (0..hx.cols()).all(|c| dst.relation_lattice().contains(&hx.col(c)))
    });

    Some(MorphismSolution { morphism, unique })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_defined_doubling_into_z4() {
        let z2 = FGAbGroup::cyclic(2);
        let z4 = FGAbGroup::cyclic(4);
        assert!(AbMorphism::from_rows(z2.clone(), z4.clone(), vec![vec![2]]).is_ok());
        let bad = AbMorphism::from_rows(z2, z4, vec![vec![1]]);
        assert!(matches!(bad, Err(AbError::IllDefined { relation: 0 })));
    }

    #[test]
    fn example_overgroup_inclusion_is_well_defined() {
        // Z^2 -> G sending e1 -> x, e2 -> y, with G = <x,y,t | x+y=2t>.
        let z2 = FGAbGroup::free(2);
        let g = FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]);
        let h = AbMorphism::from_rows(z2, g, vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert!(h.is_ok());
    }

    #[test]
    fn morphism_equality_mod_relations() {
        let z = FGAbGroup::free(1);
        let z2 = FGAbGroup::cyclic(2);
        let a = AbMorphism::from_rows(z.clone(), z2.clone(), vec![vec![1]]).unwrap();
        let b = AbMorphism::from_rows(z, z2, vec![vec![3]]).unwrap();
        assert!(a.eq_morphism(&b));
    }

    #[test]
    fn solver_finds_retraction_of_coordinate_inclusion() {
        let z = FGAbGroup::free(1);
        let z2 = FGAbGroup::free(2);
        let incl = AbMorphism::from_rows(z.clone(), z2.clone(), vec![vec![1], vec![0]]).unwrap();
        let sol = solve_morphism(
            &z2,
            &z,
            &[MorphismConstraint::post(
                incl.matrix().clone(),
                Matrix::identity(1),
                &z,
            )],
        )
        .expect("retraction exists");
        let r = sol.morphism;
        assert!(r
            .compose(&incl)
            .unwrap()
            .eq_morphism(&AbMorphism::identity(&z)));
    }

    #[test]
    fn solver_rejects_halving() {
        // No g with 2g = 1 over Z.
        let z = FGAbGroup::free(1);
        let two = Matrix::from_rows(vec![vec![Int::from(2)]]);
        let sol = solve_morphism(
            &z,
            &z,
            &[MorphismConstraint::post(two, Matrix::identity(1), &z)],
        );
        assert!(sol.is_none());
    }
}
