//! Exact linear solvers: integer systems via Smith normal form, field
//! systems via Gaussian elimination.

use crate::matrix::Matrix;
use crate::scalar::{Field, Int};
use crate::snf::{smith_normal_form, SmithDecomposition};
use num_traits::Zero;
use thiserror::Error;


#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A particular solution of `A x = b` together with a basis (as columns)
/// of the homogeneous solution lattice `{x : A x = 0}`.
#[derive(Debug, Clone)]
pub struct IntSolution {
    pub particular: Vec<Int>,
    pub kernel: Matrix<Int>,
}

/// Solves `A x = b` over the integers. `Ok(None)` means no solution.
pub fn solve_integer(a: &Matrix<Int>, b: &[Int]) -> Result<Option<IntSolution>, LinAlgError> {
    if b.len() != a.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "rhs length {} but matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let dec = smith_normal_form(a);
    match particular_from_snf(&dec, b) {
        Some(particular) => Ok(Some(IntSolution {
            particular,
            kernel: kernel_from_snf(&dec),
        })),
        None => Ok(None),
    }
}

/// Basis (as columns) of the integer kernel lattice of `a`.
pub fn kernel_basis(a: &Matrix<Int>) -> Matrix<Int> {
    kernel_from_snf(&smith_normal_form(a))
}

fn particular_from_snf(dec: &SmithDecomposition, b: &[Int]) -> Option<Vec<Int>> {
    let rows = dec.s.rows();
    let cols = dec.s.cols();
    let c = dec.u.mul_vec(b);
    let mut y = vec![Int::zero(); cols];
    for (i, ci) in c.iter().enumerate().take(rows) {
        if i < cols {
            let d = &dec.s[(i, i)];
            if d.is_zero() {
                if !ci.is_zero() {
                    return None;
                }
            } else {
                if !(ci % d).is_zero() {
                    return None;
                }
                y[i] = ci / d;
            }
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(dec.v.mul_vec(&y))
}

fn kernel_from_snf(dec: &SmithDecomposition) -> Matrix<Int> {
    let rows = dec.s.rows();
    let cols = dec.s.cols();
    let free: Vec<usize> = (0..cols)
        .filter(|&j| j >= rows.min(cols) || dec.s[(j, j)].is_zero())
        .collect();
    let cols_vec: Vec<Vec<Int>> = free.iter().map(|&j| dec.v.col(j)).collect();
    Matrix::from_cols(dec.v.rows(), &cols_vec)
}

/// A particular solution of `A x = b` over a field together with a
/// nullspace basis (as columns).
#[derive(Debug, Clone)]
pub struct FieldSolution<F: Field> {
    pub particular: Vec<F>,
    pub nullspace: Matrix<F>,
}

/// Solves `A x = b` by exact Gaussian elimination.
pub fn solve_field<F: Field>(
    a: &Matrix<F>,
    b: &[F],
) -> Result<Option<FieldSolution<F>>, LinAlgError> {
    if b.len() != a.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "rhs length {} but matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let rhs = Matrix::from_cols(b.len(), &[b.to_vec()]);
    let aug = a.hstack(&rhs);
    let (r, pivots) = rref(&aug);
    // Inconsistent iff the rhs column is a pivot.
    if pivots.contains(&a.cols()) {
        return Ok(None);
    }
    let mut particular = vec![F::zero(); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = r[(row, a.cols())].clone();
    }
    Ok(Some(FieldSolution {
        particular,
        nullspace: nullspace(a),
    }))
}

/// Reduced row echelon form with the list of pivot columns.
pub fn rref<F: Field>(a: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = m[(row, col)].inv().expect("pivot is nonzero");
        m.scale_row(row, &inv);
        for i in 0..rows {
            if i != row && !m[(i, col)].is_zero() {
                let c = -m[(i, col)].clone();
                m.add_row_multiple(i, row, &c);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    rref(a).1.len()
}

/// Basis of `{x : A x = 0}` as columns, in the standard free-variable
/// parametrization (deterministic).
pub fn nullspace<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let (r, pivots) = rref(a);
    let cols = a.cols();
    let free: Vec<usize> = (0..cols).filter(|j| !pivots.contains(j)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![F::zero(); cols];
        v[f] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(row, f)].clone();
        }
        basis.push(v);
    }
    Matrix::from_cols(cols, &basis)
}

/// Basis of the column space: the pivot columns of `a`.
pub fn column_space_basis<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let (_, pivots) = rref(a);
    let cols: Vec<Vec<F>> = pivots.iter().map(|&j| a.col(j)).collect();
    Matrix::from_cols(a.rows(), &cols)
}

/// Inverse of a square matrix over a field, if it exists.
pub fn invert<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    if a.rows() != a.cols() {
        return None;
    }
    let n = a.rows();
    let aug = a.hstack(&Matrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots.iter().take(n).copied().ne(0..n) {
        return None;
    }
    Some(r.submatrix(0, n, n, 2 * n))
}

/// Solves `A X = B` column by column; `None` if any column is
/// inconsistent.
pub fn solve_matrix<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    let mut cols = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        match solve_field(a, &b.col(j)).expect("shapes agree") {
            Some(sol) => cols.push(sol.particular),
            None => return None,
        }
    }
    Some(Matrix::from_cols(a.cols(), &cols))
}

/// Given columns spanning a subspace `W` of `F^d`, returns `(proj, dim)`
/// where `proj` is a surjection `F^d -> F^(d-dim W)` with kernel exactly
/// `W`. Used to present quotient spaces on concrete coordinates.
pub fn quotient_projection<F: Field>(span: &Matrix<F>) -> Matrix<F> {
    let d = span.rows();
    let basis = column_space_basis(span);
    let r = basis.cols();
    // Complete the basis with standard vectors on the non-pivot
    // coordinates of the row space.
    let (_, pivots) = rref(&basis.transpose());
    let free: Vec<usize> = (0..d).filter(|j| !pivots.contains(j)).collect();
    debug_assert_eq!(free.len(), d - r);
    let mut m = basis;
    for &j in &free {
        let mut e = vec![F::zero(); d];
        e[j] = F::one();
        m = m.hstack(&Matrix::from_cols(d, &[e]));
    }
    let minv = invert(&m).expect("completed basis is invertible");
    minv.submatrix(r, d, 0, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rat, F2};

    fn mi(rows: Vec<Vec<i64>>) -> Matrix<Int> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect(),
        )
    }

    #[test]
    fn integer_solvable() {
        let a = mi(vec![vec![2]]);
        let sol = solve_integer(&a, &[Int::from(4)]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![Int::from(2)]);
        assert_eq!(sol.kernel.cols(), 0);
    }

    #[test]
    fn integer_parity_obstruction() {
        let a = mi(vec![vec![2]]);
        assert!(solve_integer(&a, &[Int::from(1)]).unwrap().is_none());
    }

    #[test]
    fn integer_kernel_rank_two() {
        // Oracle: kernel of [1,1,-2] contains (1,-1,0) and (2,0,1); both
        // must lie in the span and the span must have rank 2.
        let a = mi(vec![vec![1, 1, -2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        for j in 0..k.cols() {
            assert!(a.mul_vec(&k.col(j)).iter().all(|x| x.is_zero()));
        }
        for probe in [[1i64, -1, 0], [2, 0, 1]] {
            let v: Vec<Int> = probe.iter().map(|&x| Int::from(x)).collect();
            let sol = solve_integer(&k, &v).unwrap();
            assert!(sol.is_some(), "{probe:?} should be in the kernel lattice");
        }
    }

    #[test]
    fn integer_dimension_mismatch() {
        let a = mi(vec![vec![1, 2]]);
        assert!(solve_integer(&a, &[Int::from(1), Int::from(2)]).is_err());
    }

    #[test]
    fn field_single() {
        let a = Matrix::from_rows(vec![vec![Rat::from_integer(1.into())]]);
        let sol = solve_field(&a, &[Rat::from_integer(5.into())])
            .unwrap()
            .unwrap();
        assert_eq!(sol.particular, vec![Rat::from_integer(5.into())]);
        assert_eq!(sol.nullspace.cols(), 0);
    }

    #[test]
    fn field_f2_symmetry() {
        let a = Matrix::from_rows(vec![vec![F2::new(1), F2::new(1)]]);
        let sol = solve_field(&a, &[F2::new(0)]).unwrap().unwrap();
        assert_eq!(sol.nullspace.cols(), 1);
        assert_eq!(sol.nullspace.col(0), vec![F2::new(1), F2::new(1)]);
    }

    #[test]
    fn quotient_projection_kernel() {
        let span = Matrix::from_cols(3, &[vec![F2::new(1), F2::new(1), F2::new(0)]]);
        let p = quotient_projection(&span);
        assert_eq!(p.rows(), 2);
        assert!(p.mul(&span).is_zero());
        assert_eq!(rank(&p), 2);
    }
}
