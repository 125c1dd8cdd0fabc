//! Sublattices of Z^n: reduction of generating sets to bases, membership,
//! intersection, sum, and preimages under integer maps. These back every
//! diagram-chasing computation in the abelian-group category.

use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::snf::smith_normal_form;
use crate::solve::{kernel_basis, solve_integer};
use num_traits::Zero;

/// A sublattice of `Z^ambient`, stored as an independent column basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Lattice {
    ambient: usize,
    basis: Matrix<Int>,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: Matrix::zero(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the columns of `gens`, reduced to an independent basis.
    pub fn from_generators(gens: &Matrix<Int>) -> Self {
        let ambient = gens.rows();
        if gens.cols() == 0 {
            return Lattice::zero(ambient);
        }
        // im(G) = U^-1 * im(S): basis vectors d_i * col_i(U^-1).
        let dec = smith_normal_form(gens);
        let mut cols = Vec::new();
        for i in 0..dec.s.rows().min(dec.s.cols()) {
            let d = &dec.s[(i, i)];
            if d.is_zero() {
                break;
            }
            let col: Vec<Int> = dec.u_inv.col(i).iter().map(|x| x * d).collect();
            cols.push(col);
        }
        Lattice {
            ambient,
            basis: Matrix::from_cols(ambient, &cols),
        }
    }

    /// Span of the rows of `rows` (e.g. a relation matrix).
    pub fn from_rows(rows: &Matrix<Int>) -> Self {
        Self::from_generators(&rows.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<Int> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.cols() == 0
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        solve_integer(&self.basis, v)
            .expect("ambient dimensions agree")
            .is_some()
    }

    /// Expresses `v` in the basis, if it lies in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        solve_integer(&self.basis, v)
            .expect("ambient dimensions agree")
            .map(|s| s.particular)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        (0..other.basis.cols()).all(|j| self.contains(&other.basis.col(j)))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        Lattice::from_generators(&self.basis.hstack(&other.basis))
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Lattice::zero(self.ambient);
        }
        // x = A a = B b  <=>  [A | -B](a,b) = 0; project kernel to x = A a.
        let stacked = self.basis.hstack(&other.basis.neg());
        let ker = kernel_basis(&stacked);
        let a_part = ker.submatrix(0, self.basis.cols(), 0, ker.cols());
        Lattice::from_generators(&self.basis.mul(&a_part))
    }

    /// `{x : M x in self}` as a lattice in the domain of `M`.
    pub fn preimage(&self, m: &Matrix<Int>) -> Lattice {
        assert_eq!(m.rows(), self.ambient);
        let stacked = m.hstack(&self.basis.neg());
        let ker = kernel_basis(&stacked);
        let x_part = ker.submatrix(0, m.cols(), 0, ker.cols());
        Lattice::from_generators(&x_part)
    }

    /// Image `{M x : x in self}` in the codomain of `M`.
    pub fn image(&self, m: &Matrix<Int>) -> Lattice {
        assert_eq!(m.cols(), self.ambient);
        Lattice::from_generators(&m.mul(&self.basis))
    }

    pub fn scaled(&self, n: &Int) -> Lattice {
        if n.is_zero() {
            return Lattice::zero(self.ambient);
        }
        Lattice {
            ambient: self.ambient,
            basis: self.basis.scale(n),
        }
    }

    pub fn eq_lattice(&self, other: &Lattice) -> bool {
        self.contains_lattice(other) && other.contains_lattice(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(ambient: usize, cols: Vec<Vec<i64>>) -> Matrix<Int> {
        let cols: Vec<Vec<Int>> = cols
            .into_iter()
            .map(|c| c.into_iter().map(Int::from).collect())
            .collect();
        Matrix::from_cols(ambient, &cols)
    }

    fn v(xs: Vec<i64>) -> Vec<Int> {
        xs.into_iter().map(Int::from).collect()
    }

    #[test]
    fn membership() {
        let l = Lattice::from_generators(&cols(2, vec![vec![2, 0], vec![0, 3]]));
        assert!(l.contains(&v(vec![4, 3])));
        assert!(!l.contains(&v(vec![1, 0])));
        assert!(l.contains(&v(vec![0, 0])));
    }

    #[test]
    fn dependent_generators_reduce() {
        let l = Lattice::from_generators(&cols(2, vec![vec![1, 1], vec![2, 2], vec![3, 3]]));
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&v(vec![1, 1])));
        assert!(!l.contains(&v(vec![1, 2])));
    }

    #[test]
    fn intersection_of_even_and_diagonal() {
        // 2Z^2 meets Z(1,1) in Z(2,2).
        let even = Lattice::from_generators(&cols(2, vec![vec![2, 0], vec![0, 2]]));
        let diag = Lattice::from_generators(&cols(2, vec![vec![1, 1]]));
        let meet = even.intersect(&diag);
        assert_eq!(meet.rank(), 1);
        assert!(meet.contains(&v(vec![2, 2])));
        assert!(!meet.contains(&v(vec![1, 1])));
    }

    #[test]
    fn preimage_under_doubling() {
        // {x : 2x in 6Z} = 3Z.
        let l = Lattice::from_generators(&cols(1, vec![vec![6]]));
        let m = Matrix::from_rows(vec![vec![Int::from(2)]]);
        let pre = l.preimage(&m);
        assert!(pre.contains(&v(vec![3])));
        assert!(!pre.contains(&v(vec![1])));
    }

    #[test]
    fn sum_and_equality() {
        let a = Lattice::from_generators(&cols(2, vec![vec![2, 0]]));
        let b = Lattice::from_generators(&cols(2, vec![vec![0, 2]]));
        let s = a.sum(&b);
        let even = Lattice::from_generators(&cols(2, vec![vec![2, 0], vec![0, 2]]));
        assert!(s.eq_lattice(&even));
    }
}
