//! Decomposition of a representation into the six indecomposables, with
//! explicit two-sided isomorphism witnesses.
//!
//! Multiplicities come from rank formulas; the witness comes from an
//! adapted basis: vectors whose images under `a`, `b`, and `ba` trace out
//! the interval summands, completed by kernel and cokernel directions.

use super::morphism::RepMorphism;
use super::rep::{Indecomposable, QuiverRep, ALL_INDECOMPOSABLES};
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::solve::{column_space_basis, invert, nullspace, rank, solve_field};

/// Multiplicities indexed in the order of [`ALL_INDECOMPOSABLES`], plus
/// verified isomorphism witnesses to and from the canonical sum.
pub struct Decomposition<F: Field> {
    pub multiplicities: [usize; 6],
    pub canonical: QuiverRep<F>,
    /// Isomorphism `input -> canonical`.
    pub to: RepMorphism<F>,
    /// Isomorphism `canonical -> input`.
    pub from: RepMorphism<F>,
}

impl<F: Field> Decomposition<F> {
    pub fn multiplicity(&self, e: Indecomposable) -> usize {
        let idx = ALL_INDECOMPOSABLES.iter().position(|&x| x == e).unwrap();
        self.multiplicities[idx]
    }

    pub fn uses_only(&self, allowed: &[Indecomposable]) -> bool {
        ALL_INDECOMPOSABLES
            .iter()
            .all(|&e| self.multiplicity(e) == 0 || allowed.contains(&e))
    }

    pub fn verify(&self, x: &QuiverRep<F>) -> bool {
        let fwd = match self.to.compose(&self.from) {
            Ok(m) => m,
            Err(_) => return false,
        };
        let bwd = match self.from.compose(&self.to) {
            Ok(m) => m,
            Err(_) => return false,
        };
        fwd.is_identity_morphism() && bwd.is_identity_morphism() && self.from.src() == &self.canonical
            && self.from.dst() == x
    }
}

/// Greedily extends the independent columns of `acc` by columns of
/// `candidates`, returning the adjoined columns.
fn extend_basis<F: Field>(acc: &mut Matrix<F>, candidates: &Matrix<F>) -> Matrix<F> {
    let d = acc.rows();
    let mut added: Vec<Vec<F>> = Vec::new();
    for j in 0..candidates.cols() {
        let col = candidates.col(j);
        let trial = acc.hstack(&Matrix::from_cols(d, &[col.clone()]));
        if rank(&trial) > acc.cols() {
            *acc = trial;
            added.push(col);
        }
    }
    Matrix::from_cols(d, &added)
}

/// Vectors `x` with `m x` running through a basis of the column space of
/// `m`: the pivot columns' standard vectors.
fn preimage_basis_vectors<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let (_, pivots) = crate::solve::rref(m);
    let cols: Vec<Vec<F>> = pivots
        .iter()
        .map(|&j| {
            let mut e = vec![F::zero(); m.cols()];
            e[j] = F::one();
            e
        })
        .collect();
    Matrix::from_cols(m.cols(), &cols)
}

/// Basis of the intersection of two column spaces.
fn intersect_spaces<F: Field>(u: &Matrix<F>, v: &Matrix<F>) -> Matrix<F> {
    if u.cols() == 0 || v.cols() == 0 {
        return Matrix::zero(u.rows(), 0);
    }
    let ns = nullspace(&u.hstack(&v.neg()));
    let upart = ns.submatrix(0, u.cols(), 0, ns.cols());
    column_space_basis(&u.mul(&upart))
}

pub fn decompose<F: Field>(x: &QuiverRep<F>) -> Decomposition<F> {
    let (d1, d2, d3) = x.dims();
    let a = x.a();
    let b = x.b();
    let ba = b.mul(a);
    let (ra, rb, rba) = (rank(a), rank(b), rank(&ba));
    let m123 = rba;
    let m12 = ra - rba;
    let m23 = rb - rba;
    let m1 = d1 - ra;
    let m3 = d3 - rb;
    let m2 = d2 + rba - ra - rb;

    // Level-1 vectors: x_i (full strands), u_j (strands dying at level 3),
    // z_k (kernel of a).
    let xs = preimage_basis_vectors(&ba);
    let w = intersect_spaces(&column_space_basis(a), &nullspace(b));
    let us = {
        // Solve a u = w column by column.
        let mut cols = Vec::new();
        for j in 0..w.cols() {
            let sol = solve_field(a, &w.col(j)).expect("shapes agree").unwrap();
            cols.push(sol.particular);
        }
        Matrix::from_cols(d1, &cols)
    };
    let mut acc1 = xs.hstack(&us);
    let zs = extend_basis(&mut acc1, &nullspace(a));
    debug_assert_eq!(zs.cols(), m1);

    // Level-2 vectors: a x_i, a u_j, v_k (new strands starting here),
    // w_l (isolated directions inside ker b).
    let axs = a.mul(&xs);
    let aus = a.mul(&us);
    let mut im_b_acc = b.mul(&axs);
    let vs = {
        // Candidates v with b v extending im(ba) to im(b).
        let mut added: Vec<Vec<F>> = Vec::new();
        for j in 0..d2 {
            if added.len() == m23 {
                break;
            }
            let mut e = vec![F::zero(); d2];
            e[j] = F::one();
            let bv = b.mul_vec(&e);
            let trial = im_b_acc.hstack(&Matrix::from_cols(d3, &[bv]));
            if rank(&trial) > im_b_acc.cols() {
                im_b_acc = trial;
                added.push(e);
            }
        }
        Matrix::from_cols(d2, &added)
    };
    debug_assert_eq!(vs.cols(), m23);
    let mut acc2 = axs.hstack(&aus).hstack(&vs);
    let ws = extend_basis(&mut acc2, &nullspace(b));
    debug_assert_eq!(ws.cols(), m2);

    // Level-3 vectors: ba x_i, b v_k, and a completion y_l.
    let baxs = ba.mul(&xs);
    let bvs = b.mul(&vs);
    let mut acc3 = baxs.hstack(&bvs);
    let ys = extend_basis(&mut acc3, &Matrix::identity(d3));
    debug_assert_eq!(ys.cols(), m3);

    let multiplicities = [m1, m2, m3, m12, m23, m123];
    let canonical = canonical_sum::<F>(&multiplicities);

    // Canonical coordinate order per level matches the label order
    // E1, E2, E3, E12, E23, E123:
    //   level 1: E1 | E12 | E123   ->  z | u | x
    //   level 2: E2 | E12 | E23 | E123  ->  w | a u | v | a x
    //   level 3: E3 | E23 | E123  ->  y | b v | ba x
    let b1 = zs.hstack(&us).hstack(&xs);
    let b2 = ws.hstack(&aus).hstack(&vs).hstack(&axs);
    let b3 = ys.hstack(&bvs).hstack(&baxs);
    let from = RepMorphism::new(canonical.clone(), x.clone(), [b1.clone(), b2.clone(), b3.clone()])
        .expect("adapted basis intertwines the structure maps");
    let inv = [
        invert(&b1).expect("adapted vectors form a basis"),
        invert(&b2).expect("adapted vectors form a basis"),
        invert(&b3).expect("adapted vectors form a basis"),
    ];
    let to = RepMorphism::new(x.clone(), canonical.clone(), inv)
        .expect("inverse of an intertwiner intertwines");
    Decomposition {
        multiplicities,
        canonical,
        to,
        from,
    }
}

/// The direct sum `E1^m1 + E2^m2 + E3^m3 + E12^m12 + E23^m23 + E123^m123`
/// with level coordinates grouped by label in that order.
pub fn canonical_sum<F: Field>(m: &[usize; 6]) -> QuiverRep<F> {
    let [m1, m2, m3, m12, m23, m123] = *m;
    let d1 = m1 + m12 + m123;
    let d2 = m2 + m12 + m23 + m123;
    let d3 = m3 + m23 + m123;
    let mut a = Matrix::zero(d2, d1);
    for j in 0..m12 {
        a[(m2 + j, m1 + j)] = F::one();
    }
    for j in 0..m123 {
        a[(m2 + m12 + m23 + j, m1 + m12 + j)] = F::one();
    }
    let mut b = Matrix::zero(d3, d2);
    for j in 0..m23 {
        b[(m3 + j, m2 + m12 + j)] = F::one();
    }
    for j in 0..m123 {
        b[(m3 + m23 + j, m2 + m12 + m23 + j)] = F::one();
    }
    QuiverRep::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::rep::Indecomposable::*;
    use crate::scalar::F2;

    fn check(x: &QuiverRep<F2>, expected: [usize; 6]) {
        let d = decompose(x);
        assert_eq!(d.multiplicities, expected);
        assert!(d.verify(x));
    }

    #[test]
    fn indecomposables_are_their_own_decomposition() {
        for (i, e) in ALL_INDECOMPOSABLES.iter().enumerate() {
            let mut expected = [0; 6];
            expected[i] = 1;
            check(&e.realize::<F2>(), expected);
        }
    }

    #[test]
    fn union_corner_splits_with_extra_strand() {
        // F -> F -> F^2 with a = 1, b = (1,1)^T splits as E123 + E3.
        let a = Matrix::identity(1);
        let b = Matrix::from_rows(vec![vec![F2::new(1)], vec![F2::new(1)]]);
        let x = QuiverRep::new(a, b);
        let d = decompose(&x);
        assert_eq!(d.multiplicity(E123), 1);
        assert_eq!(d.multiplicity(E3), 1);
        assert_eq!(d.multiplicities.iter().sum::<usize>(), 2);
        assert!(d.verify(&x));
    }

    #[test]
    fn dual_union_corner_splits() {
        // F^2 -> F -> F with a = (1,1), b = 1 splits as E1 + E123.
        let a = Matrix::from_rows(vec![vec![F2::new(1), F2::new(1)]]);
        let b = Matrix::identity(1);
        let x = QuiverRep::new(a, b);
        let d = decompose(&x);
        assert_eq!(d.multiplicity(E1), 1);
        assert_eq!(d.multiplicity(E123), 1);
        assert!(d.verify(&x));
    }

    #[test]
    fn zero_rep_decomposes_trivially() {
        check(&QuiverRep::zero_rep(), [0; 6]);
    }
}
