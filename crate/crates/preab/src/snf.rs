//! Smith normal form of integer matrices.
//!
//! Pivoting picks the smallest nonzero absolute value in the remaining
//! block, scanning row-major, so decompositions are reproducible across
//! runs. Arbitrary-precision entries make intermediate growth harmless.

use crate::matrix::Matrix;
use crate::scalar::Int;
use num_traits::{One, Signed, Zero};

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal satisfying
/// the divisibility chain `d1 | d2 | ...`, all `di >= 0`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Matrix<Int>,
    pub u_inv: Matrix<Int>,
    pub s: Matrix<Int>,
    pub v: Matrix<Int>,
    pub v_inv: Matrix<Int>,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// The nonzero diagonal entries, including any 1s.
    pub fn elementary_divisors(&self) -> Vec<Int> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn verify(&self, m: &Matrix<Int>) -> bool {
        self.u.mul(m).mul(&self.v) == self.s
            && self.u.mul(&self.u_inv).is_identity()
            && self.v.mul(&self.v_inv).is_identity()
            && divisibility_chain_holds(&self.diagonal())
    }
}

pub fn divisibility_chain_holds(diag: &[Int]) -> bool {
    for w in diag.windows(2) {
        if w[0].is_negative() || w[1].is_negative() {
            return false;
        }
        if w[0].is_zero() {
            if !w[1].is_zero() {
                return false;
            }
        } else if !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    diag.last().map_or(true, |d| !d.is_negative())
}

struct Calc {
    s: Matrix<Int>,
    u: Matrix<Int>,
    u_inv: Matrix<Int>,
    v: Matrix<Int>,
    v_inv: Matrix<Int>,
}

impl Calc {
    fn row_add(&mut self, a: usize, b: usize, c: &Int) {
        self.s.add_row_multiple(a, b, c);
        self.u.add_row_multiple(a, b, c);
        self.u_inv.add_col_multiple(b, a, &-c.clone());
    }

    fn col_add(&mut self, a: usize, b: usize, c: &Int) {
        self.s.add_col_multiple(a, b, c);
        self.v.add_col_multiple(a, b, c);
        self.v_inv.add_row_multiple(b, a, &-c.clone());
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn row_neg(&mut self, a: usize) {
        self.s.negate_row(a);
        self.u.negate_row(a);
        self.u_inv.negate_col(a);
    }

    /// Smallest nonzero |entry| in the block starting at (t,t), row-major
    /// tie-break.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = &self.s[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if e.abs() < self.s[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &Matrix<Int>) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut calc = Calc {
        s: m.clone(),
        u: Matrix::identity(r),
        u_inv: Matrix::identity(r),
        v: Matrix::identity(c),
        v_inv: Matrix::identity(c),
    };

    for t in 0..r.min(c) {
        if calc.find_pivot(t).is_none() {
            break;
        }
        loop {
            let (pi, pj) = calc.find_pivot(t).expect("pivot vanished");
            calc.row_swap(t, pi);
            calc.col_swap(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if calc.s[(i, t)].is_zero() {
                    continue;
                }
                let q = &calc.s[(i, t)] / &calc.s[(t, t)];
                if !q.is_zero() {
                    calc.row_add(i, t, &-q);
                }
                if !calc.s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if calc.s[(t, j)].is_zero() {
                    continue;
                }
                let q = &calc.s[(t, j)] / &calc.s[(t, t)];
                if !q.is_zero() {
                    calc.col_add(j, t, &-q);
                }
                if !calc.s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Pivot must divide every remaining entry before we move on.
            let mut fixed = true;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !(&calc.s[(i, j)] % &calc.s[(t, t)]).is_zero() {
                        calc.row_add(t, i, &Int::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if calc.s[(t, t)].is_negative() {
            calc.row_neg(t);
        }
    }

    SmithDecomposition {
        u: calc.u,
        u_inv: calc.u_inv,
        s: calc.s,
        v: calc.v,
        v_inv: calc.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Int> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_is_fixed() {
        let id = Matrix::<Int>::identity(2);
        let d = smith_normal_form(&id);
        assert!(d.verify(&id));
        assert_eq!(d.s, id);
    }

    #[test]
    fn textbook_two_by_two() {
        // Independent oracle: row/col reduce [[2,4],[6,8]] by hand.
        // r2 -= 3 r1 -> [[2,4],[0,-4]]; c2 -= 2 c1 -> [[2,0],[0,-4]];
        // normalize signs -> diag(2,4).
        let a = m(vec![vec![2, 4], vec![6, 8]]);
        let d = smith_normal_form(&a);
        assert!(d.verify(&a));
        assert_eq!(
            d.diagonal(),
            vec![Int::from(2), Int::from(4)]
        );
    }

    #[test]
    fn zero_one_by_one() {
        let a = m(vec![vec![0]]);
        let d = smith_normal_form(&a);
        assert!(d.verify(&a));
        assert_eq!(d.diagonal(), vec![Int::from(0)]);
    }

    #[test]
    fn empty_matrix() {
        let a = Matrix::<Int>::zero(0, 3);
        let d = smith_normal_form(&a);
        assert!(d.verify(&a));
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn example_relation_row() {
        // The single relation x + y - 2t: SNF is diag(1).
        let a = m(vec![vec![1, 1, -2]]);
        let d = smith_normal_form(&a);
        assert!(d.verify(&a));
        assert_eq!(d.diagonal(), vec![Int::from(1)]);
    }
}
