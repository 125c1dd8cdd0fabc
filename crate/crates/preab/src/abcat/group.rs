//! Finitely generated abelian groups given by presentation matrices.

use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::snf::smith_normal_form;
use num_traits::{One, Zero};

/// Isomorphism invariants: free rank and torsion coefficients in a
/// divisibility chain `d1 | d2 | ...`, all `di > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl GroupInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// A finitely generated abelian group `Z^n / (row span of relations)`.
#[derive(Clone, Debug)]
pub struct FGAbGroup {
    generators: usize,
    relations: Matrix<Int>,
    relation_lattice: Lattice,
    invariants: GroupInvariants,
}

impl PartialEq for FGAbGroup {
    /// On-the-nose presentation equality; use [`FGAbGroup::is_isomorphic_to`]
    /// for abstract isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.relations == other.relations
    }
}

impl FGAbGroup {
    pub fn new(generators: usize, relations: Matrix<Int>) -> Self {
        assert_eq!(
            relations.cols(),
            generators,
            "each relation row must have one entry per generator"
        );
        let relation_lattice = Lattice::from_rows(&relations);
        let dec = smith_normal_form(&relations);
        let diag = dec.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let torsion: Vec<Int> = diag
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect();
        FGAbGroup {
            generators,
            relations,
            relation_lattice,
            invariants: GroupInvariants {
                free_rank: generators - rank,
                torsion,
            },
        }
    }

    pub fn from_rows(generators: usize, rows: Vec<Vec<i64>>) -> Self {
        let rel = if rows.is_empty() {
            Matrix::zero(0, generators)
        } else {
            Matrix::from_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(Int::from).collect())
                    .collect(),
            )
        };
        Self::new(generators, rel)
    }

    /// The free group `Z^n`.
    pub fn free(n: usize) -> Self {
        Self::new(n, Matrix::zero(0, n))
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    /// `Z/n` for `n > 0`, `Z` for `n == 0`.
    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            Self::free(1)
        } else {
            Self::from_rows(1, vec![vec![n as i64]])
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Matrix<Int> {
        &self.relations
    }

    pub fn relation_lattice(&self) -> &Lattice {
        &self.relation_lattice
    }

    pub fn invariants(&self) -> &GroupInvariants {
        &self.invariants
    }

    pub fn is_zero_group(&self) -> bool {
        self.invariants.is_trivial()
    }

    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.invariants == other.invariants
    }

    /// Whether two generator tuples represent the same element.
    pub fn elements_equal(&self, a: &[Int], b: &[Int]) -> bool {
        let diff: Vec<Int> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.relation_lattice.contains(&diff)
    }

    pub fn element_is_zero(&self, a: &[Int]) -> bool {
        self.relation_lattice.contains(a)
    }

    /// The canonical presentation `Z/d1 + ... + Z/dk + Z^r` together with
    /// matrices realizing the isomorphism in both directions (as raw
    /// generator maps; wrap them in morphisms at the call site).
    pub fn canonical_form(&self) -> (FGAbGroup, Matrix<Int>, Matrix<Int>) {
        // Relation lattice is im(R^T); SNF of R^T diagonalizes it:
        // U R^T V = S, so x -> U x maps the lattice onto im(S).
        let rt = self.relations.transpose();
        let dec = smith_normal_form(&rt);
        let n = self.generators;
        let diag = dec.diagonal();
        // Keep the coordinates whose invariant is not 1.
        let kept: Vec<usize> = (0..n)
            .filter(|&i| !(i < diag.len() && diag[i].is_one()))
            .collect();
        let mut rel_rows = Vec::new();
        for (slot, &i) in kept.iter().enumerate() {
            if i < diag.len() && !diag[i].is_zero() {
                let mut row = vec![Int::zero(); kept.len()];
                row[slot] = diag[i].clone();
                rel_rows.push(row);
            }
        }
        let canon = FGAbGroup::new(
            kept.len(),
            if rel_rows.is_empty() {
                Matrix::zero(0, kept.len())
            } else {
                Matrix::from_rows(rel_rows)
            },
        );
        // to: pick the kept rows of U; from: the kept columns of U^-1.
        let mut to = Matrix::zero(kept.len(), n);
        let mut from = Matrix::zero(n, kept.len());
        for (slot, &i) in kept.iter().enumerate() {
            for j in 0..n {
                to[(slot, j)] = dec.u[(i, j)].clone();
                from[(j, slot)] = dec.u_inv[(j, i)].clone();
            }
        }
        (canon, to, from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_invariants() {
        let g = FGAbGroup::cyclic(2);
        assert_eq!(g.invariants().free_rank, 0);
        assert_eq!(g.invariants().torsion, vec![Int::from(2)]);
    }

    #[test]
    fn free_rank_two() {
        let g = FGAbGroup::free(2);
        assert_eq!(g.invariants().free_rank, 2);
        assert!(g.invariants().torsion.is_empty());
    }

    #[test]
    fn index_two_overgroup_of_z2() {
        // Three generators x, y, t with x + y = 2t: free of rank 2.
        // Oracle: SNF of [1,1,-2] is diag(1).
        let g = FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]);
        assert_eq!(g.invariants().free_rank, 2);
        assert!(g.invariants().torsion.is_empty());
    }

    #[test]
    fn canonical_form_roundtrip() {
        let g = FGAbGroup::from_rows(3, vec![vec![1, 1, -2], vec![0, 4, 0]]);
        let (canon, to, from) = g.canonical_form();
        assert_eq!(canon.invariants(), g.invariants());
        // from . to must be the identity of g modulo relations.
        let comp = from.mul(&to);
        for j in 0..g.generators() {
            let mut e = vec![Int::zero(); g.generators()];
            e[j] = Int::one();
            assert!(g.elements_equal(&comp.col(j), &e));
        }
    }

    #[test]
    fn zero_group() {
        assert!(FGAbGroup::zero().is_zero_group());
        assert!(FGAbGroup::cyclic(1).is_zero_group());
    }
}
