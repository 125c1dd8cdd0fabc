//! Randomized invariants for the exact linear algebra layer and the
//! quiver decomposition.

use num_traits::Zero;
use preab::quiver::{canonical_sum, decompose, QuiverRep};
use preab::scalar::Int;
use preab::snf::smith_normal_form;
use preab::solve::{invert, kernel_basis, nullspace, rank, solve_integer};
use preab::{Matrix, F2};
use proptest::prelude::*;

/// Integer matrices up to 4 x 4 with single-digit entries.
fn int_matrix() -> impl Strategy<Value = Matrix<Int>> {
    (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |entries| {
            let ints: Vec<Int> = entries.into_iter().map(Int::from).collect();
            Matrix::from_vec(r, c, &ints)
        })
    })
}

/// F2 matrices with the given shape.
fn f2_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<F2>> {
    prop::collection::vec(0i64..=1, rows * cols).prop_map(move |entries| {
        let scalars: Vec<F2> = entries.into_iter().map(F2::new).collect();
        Matrix::from_vec(rows, cols, &scalars)
    })
}

/// Quiver representations with component dimensions at most 3.
fn f2_rep() -> impl Strategy<Value = QuiverRep<F2>> {
    (0usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(d1, d2, d3)| {
        (f2_matrix(d2, d1), f2_matrix(d3, d2)).prop_map(|(a, b)| QuiverRep::new(a, b))
    })
}

proptest! {
    #[test]
    fn smith_decomposition_reconstructs_the_input(m in int_matrix()) {
        let d = smith_normal_form(&m);
        prop_assert!(d.verify(&m));
    }

    #[test]
    fn integer_solver_finds_planted_solutions(
        m in int_matrix(),
        x in prop::collection::vec(-9i64..=9, 0..=4),
    ) {
        let x: Vec<Int> = x.into_iter().take(m.cols()).map(Int::from).collect();
        prop_assume!(x.len() == m.cols());
        let b = m.mul_vec(&x);
        let sol = solve_integer(&m, &b).unwrap();
        let sol = sol.expect("a planted solution always exists");
        prop_assert_eq!(m.mul_vec(&sol.particular), b);
        for j in 0..sol.kernel.cols() {
            prop_assert!(m.mul_vec(&sol.kernel.col(j)).iter().all(Int::is_zero));
        }
    }

    #[test]
    fn integer_kernel_has_complementary_rank(m in int_matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.cols(), m.cols() - smith_normal_form(&m).rank());
        for j in 0..k.cols() {
            prop_assert!(m.mul_vec(&k.col(j)).iter().all(Int::is_zero));
        }
    }

    #[test]
    fn nullspace_and_rank_partition_the_columns(
        (r, c) in (0usize..=4, 0usize..=4),
        bits in prop::collection::vec(0i64..=1, 16),
    ) {
        let scalars: Vec<F2> = bits.into_iter().take(r * c).map(F2::new).collect();
        prop_assume!(scalars.len() == r * c);
        let m = Matrix::from_vec(r, c, &scalars);
        let n = nullspace(&m);
        prop_assert_eq!(rank(&m) + n.cols(), c);
        prop_assert!(m.mul(&n).is_zero());
    }

    #[test]
    fn inverses_are_two_sided(
        n in 0usize..=3,
        bits in prop::collection::vec(0i64..=1, 9),
    ) {
        let scalars: Vec<F2> = bits.into_iter().take(n * n).map(F2::new).collect();
        prop_assume!(scalars.len() == n * n);
        let m = Matrix::from_vec(n, n, &scalars);
        if let Some(inv) = invert(&m) {
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert!(inv.mul(&m).is_identity());
        } else {
            prop_assert!(rank(&m) < n);
        }
    }

    #[test]
    fn decomposition_reconstructs_random_representations(x in f2_rep()) {
        let d = decompose(&x);
        prop_assert!(d.verify(&x));
        let total: usize = d.multiplicities.iter().sum();
        let (d1, d2, d3) = x.dims();
        prop_assert!(total <= d1 + d2 + d3);
        prop_assert_eq!(d.canonical.dims(), canonical_sum::<F2>(&d.multiplicities).dims());
    }
}
