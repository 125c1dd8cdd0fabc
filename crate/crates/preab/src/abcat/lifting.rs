//! Bounded lifting-square purity oracle.
//!
//! A monomorphism `f: A -> B` is pure exactly when every commuting square
//! `v ∘ t = f ∘ u` over a finitely presented map `t: M -> N` admits a
//! partial diagonal `g: N -> A` with `g ∘ t = u`. This module enumerates
//! the test maps `t` up to a size bound and decides each one exactly by
//! comparing three solution lattices in the coordinates of `u`, so no
//! search over `u` or `v` is ever needed:
//!
//! * `U_w`: the `u` that are well-defined on `M`,
//! * `U_v`: the `u` that extend to some `v` closing the square,
//! * `U_g`: the `u` that factor through `t` via some `g`.
//!
//! The triple passes iff `U_w ∩ U_v ⊆ U_g`; a violating basis vector is
//! returned as an explicit square with no diagonal.

use super::group::FGAbGroup;
use super::morphism::{solve_morphism, AbError, AbMorphism, MorphismConstraint};
use super::ops::classify;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::solve::kernel_basis;
use rayon::prelude::*;

/// Size cap for the enumerated test maps: presentations use at most
/// `gens` generators and `rels` torsion relations with moduli up to
/// `max_entry`, and free matrix entries range over `0..=max_entry`.
#[derive(Clone, Copy, Debug)]
pub struct LiftBound {
    pub gens: usize,
    pub rels: usize,
    pub max_entry: u64,
}

impl Default for LiftBound {
    fn default() -> Self {
        LiftBound {
            gens: 2,
            rels: 2,
            max_entry: 3,
        }
    }
}

/// A commuting square `bottom ∘ test_map = f ∘ top` with no diagonal
/// `g: test_map.dst() -> f.src()` satisfying `g ∘ test_map = top`.
#[derive(Clone, Debug)]
pub struct LiftingSquare {
    pub test_map: AbMorphism,
    pub top: AbMorphism,
    pub bottom: AbMorphism,
}

impl LiftingSquare {
    /// Rechecks commutativity and the absence of a diagonal from scratch.
    pub fn verify(&self, f: &AbMorphism) -> bool {
        let commutes = match (self.bottom.compose(&self.test_map), f.compose(&self.top)) {
            (Ok(a), Ok(b)) => a.eq_morphism(&b),
            _ => return false,
        };
        let no_diagonal = solve_morphism(
            self.test_map.dst(),
            f.src(),
            &[MorphismConstraint::post(
                self.test_map.matrix().clone(),
                self.top.matrix().clone(),
                f.src(),
            )],
        )
        .is_none();
        commutes && no_diagonal
    }
}

/// Outcome of the bounded oracle: `witness` is `None` when every
/// enumerated triple lifts.
#[derive(Debug)]
pub struct LiftingOutcome {
    pub witness: Option<LiftingSquare>,
    pub triples_checked: usize,
}

impl LiftingOutcome {
    pub fn is_pure(&self) -> bool {
        self.witness.is_none()
    }
}

/// One homogeneous congruence `sum_i C_i x_i ≡ 0 (mod lattice)` on a
/// tuple of vector variables.
struct Congruence {
    coeffs: Vec<(usize, Matrix<Int>)>,
    modulo: Lattice,
}

/// Solution set of a homogeneous congruence system, projected onto the
/// first variable. The projection of the solution lattice is again a
/// lattice, so a kernel basis of the augmented system suffices.
fn projected_solutions(var_sizes: &[usize], eqs: &[Congruence]) -> Lattice {
    let offsets: Vec<usize> = var_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let nvars: usize = var_sizes.iter().sum();
    let aux: usize = eqs.iter().map(|e| e.modulo.rank()).sum();
    let total_rows: usize = eqs.iter().map(|e| e.modulo.ambient()).sum();
    let mut system = Matrix::zero(total_rows, nvars + aux);
    let mut row0 = 0;
    let mut aux0 = nvars;
    for eq in eqs {
        for (var, c) in &eq.coeffs {
            assert_eq!(c.rows(), eq.modulo.ambient());
            assert_eq!(c.cols(), var_sizes[*var]);
            for i in 0..c.rows() {
                for j in 0..c.cols() {
                    system[(row0 + i, offsets[*var] + j)] = c[(i, j)].clone();
                }
            }
        }
        let b = eq.modulo.basis();
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                system[(row0 + i, aux0 + j)] = -b[(i, j)].clone();
            }
        }
        row0 += eq.modulo.ambient();
        aux0 += eq.modulo.rank();
    }
    let ker = kernel_basis(&system);
    Lattice::from_generators(&ker.submatrix(0, var_sizes[0], 0, ker.cols()))
}

/// `cols` side-by-side copies of `l`, as a lattice over the column-major
/// flattening of a matrix with `cols` columns.
fn column_block(l: &Lattice, cols: usize) -> Lattice {
    Lattice::from_generators(&Matrix::<Int>::identity(cols).kronecker(l.basis()))
}

/// Decides one test triple. Returns a violating square if `f` fails to be
/// pure with respect to `t: M -> N`.
fn check_triple(f: &AbMorphism, t: &AbMorphism) -> Option<LiftingSquare> {
    let (a, b) = (f.src(), f.dst());
    let (m, n) = (t.src(), t.dst());
    let (na, nb) = (a.generators(), b.generators());
    let (nm, nn) = (m.generators(), n.generators());
    let nu = na * nm;
    let nv = nb * nn;
    let ng = na * nn;
    let id_a = Matrix::<Int>::identity(na);
    let id_b = Matrix::<Int>::identity(nb);

    let mut u_valid = {
        // U R_M^T ≡ 0 (mod L_A) columnwise.
        let rm = m.relations();
        if rm.rows() == 0 {
            Lattice::full(nu)
        } else {
            projected_solutions(
                &[nu],
                &[Congruence {
                    coeffs: vec![(0, rm.kronecker(&id_a))],
                    modulo: column_block(a.relation_lattice(), rm.rows()),
                }],
            )
        }
    };

    let u_extends = {
        // V T − M_f U ≡ 0 (mod L_B) and V R_N^T ≡ 0 (mod L_B).
        let mut eqs = vec![Congruence {
            coeffs: vec![
                (1, t.matrix().transpose().kronecker(&id_b)),
                (0, Matrix::<Int>::identity(nm).kronecker(f.matrix()).neg()),
            ],
            modulo: column_block(b.relation_lattice(), nm),
        }];
        let rn = n.relations();
        if rn.rows() > 0 {
            eqs.push(Congruence {
                coeffs: vec![(1, rn.kronecker(&id_b))],
                modulo: column_block(b.relation_lattice(), rn.rows()),
            });
        }
        projected_solutions(&[nu, nv], &eqs)
    };

    u_valid = u_valid.intersect(&u_extends);

    let u_factors = {
        // U − G T ≡ 0 (mod L_A) and G R_N^T ≡ 0 (mod L_A).
        let mut eqs = vec![Congruence {
            coeffs: vec![
                (0, Matrix::<Int>::identity(nu)),
                (1, t.matrix().transpose().kronecker(&id_a).neg()),
            ],
            modulo: column_block(a.relation_lattice(), nm),
        }];
        let rn = n.relations();
        if rn.rows() > 0 {
            eqs.push(Congruence {
                coeffs: vec![(1, rn.kronecker(&id_a))],
                modulo: column_block(a.relation_lattice(), rn.rows()),
            });
        }
        projected_solutions(&[nu, ng], &eqs)
    };

    if u_factors.contains_lattice(&u_valid) {
        return None;
    }
    let basis = u_valid.basis();
    let j = (0..basis.cols())
        .find(|&j| !u_factors.contains(&basis.col(j)))
        .expect("some basis vector escapes the factoring lattice");
    let u_mat = Matrix::from_vec(na, nm, &basis.col(j));
    let top = AbMorphism::new(m.clone(), a.clone(), u_mat)
        .expect("violating vector lies in the well-defined lattice");
    let bottom_rhs = f.matrix().mul(top.matrix());
    let bottom = solve_morphism(
        n,
        b,
        &[MorphismConstraint::post(t.matrix().clone(), bottom_rhs, b)],
    )
    .expect("violating vector lies in the extendable lattice")
    .morphism;
    Some(LiftingSquare {
        test_map: t.clone(),
        top,
        bottom,
    })
}

/// Canonical presentations with at most `gens` generators and torsion
/// moduli forming a divisibility chain within the bound.
fn test_groups(bound: &LiftBound) -> Vec<FGAbGroup> {
    let cap = bound.rels.min(bound.gens);
    let mut chains: Vec<Vec<u64>> = vec![vec![]];
    let mut frontier: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for c in &frontier {
            let lo = c.last().copied().unwrap_or(1);
            for d in 2..=bound.max_entry {
                if d >= lo && d % lo == 0 {
                    let mut ext = c.clone();
                    ext.push(d);
                    next.push(ext);
                }
            }
        }
        chains.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for g in 0..=bound.gens {
        for c in &chains {
            if c.len() > g {
                continue;
            }
            let mut rows = Vec::new();
            for (i, d) in c.iter().enumerate() {
                let mut row = vec![0i64; g];
                row[i] = *d as i64;
                rows.push(row);
            }
            out.push(FGAbGroup::from_rows(g, rows));
        }
    }
    out
}

/// All well-defined test maps `M -> N` within the entry bound, with
/// columns of interchangeable source generators sorted to cut duplicates.
fn test_maps(m: &FGAbGroup, n: &FGAbGroup, bound: &LiftBound) -> Vec<AbMorphism> {
    let (nm, nn) = (m.generators(), n.generators());
    // Per-entry ranges: rows of torsion target generators are reduced
    // modulo the torsion; rows of free generators range over the bound.
    let mut row_max = vec![bound.max_entry as i64; nn];
    for r in 0..n.relations().rows() {
        for i in 0..nn {
            let e = &n.relations()[(r, i)];
            if !num_traits::Zero::is_zero(e) {
                let e: i64 = e.try_into().expect("bounded torsion modulus");
                row_max[i] = row_max[i].min(e.abs() - 1);
            }
        }
    }
    let mut out = Vec::new();
    let total: usize = nm * nn;
    let mut entries = vec![0i64; total];
    loop {
        let mat = Matrix::from_rows(
            (0..nn)
                .map(|i| (0..nm).map(|j| Int::from(entries[i * nm + j])).collect())
                .collect::<Vec<Vec<Int>>>(),
        );
        let mat = if nn == 0 || nm == 0 {
            Matrix::zero(nn, nm)
        } else {
            mat
        };
        let sorted = (1..nm).all(|j| {
            if same_generator_kind(m, j - 1, j) {
                col_lex(&mat, j - 1) <= col_lex(&mat, j)
            } else {
                true
            }
        });
        if sorted {
            if let Ok(t) = AbMorphism::new(m.clone(), n.clone(), mat) {
                out.push(t);
            }
        }
        // Odometer over the entry ranges.
        let mut k = 0;
        loop {
            if k == total {
                return out;
            }
            let i = k / nm;
            if entries[k] < row_max[i] {
                entries[k] += 1;
                break;
            }
            entries[k] = 0;
            k += 1;
        }
    }
}

fn same_generator_kind(g: &FGAbGroup, a: usize, b: usize) -> bool {
    let col = |j: usize| -> Vec<Int> {
        (0..g.relations().rows())
            .map(|r| g.relations()[(r, j)].clone())
            .collect()
    };
    col(a) == col(b)
}

fn col_lex(m: &Matrix<Int>, j: usize) -> Vec<Int> {
    m.col(j)
}

/// Runs the bounded oracle. Returns the first violating square in the
/// deterministic enumeration order, or none when every triple lifts.
pub fn purity_lifting(f: &AbMorphism, bound: &LiftBound) -> Result<LiftingOutcome, AbError> {
    if !classify(f).mono {
        return Err(AbError::NotMono);
    }
    let groups = test_groups(bound);
    let mut triples: Vec<AbMorphism> = Vec::new();
    for m in &groups {
        for n in &groups {
            triples.extend(test_maps(m, n, bound));
        }
    }
    let witness = triples
        .par_iter()
        .find_map_first(|t| check_triple(f, t));
    Ok(LiftingOutcome {
        witness,
        triples_checked: triples.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abcat::ops::direct_sum;

    #[test]
    fn group_enumeration_is_modest() {
        let gs = test_groups(&LiftBound::default());
        // Zero group, Z, Z/2, Z/3, and the rank-two combinations.
        assert!(gs.len() >= 9);
        assert!(gs.iter().all(|g| g.generators() <= 2));
    }

    #[test]
    fn doubling_fails_with_cyclic_witness() {
        let z = FGAbGroup::free(1);
        let two = AbMorphism::from_rows(z.clone(), z, vec![vec![2]]).unwrap();
        let out = purity_lifting(&two, &LiftBound::default()).unwrap();
        let w = out.witness.expect("doubling is impure");
        assert!(w.verify(&two));
        assert_eq!(w.test_map.matrix().entries(), &[Int::from(2)]);
    }

    #[test]
    fn split_inclusion_passes() {
        let z = FGAbGroup::free(1);
        let sum = direct_sum(&z, &z);
        let out = purity_lifting(&sum.inj_left, &LiftBound::default()).unwrap();
        assert!(out.is_pure());
        assert!(out.triples_checked > 100);
    }

    #[test]
    fn overgroup_embedding_fails() {
        let z2 = FGAbGroup::free(2);
        let g = FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]);
        let h =
            AbMorphism::from_rows(z2, g, vec![vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        let out = purity_lifting(&h, &LiftBound::default()).unwrap();
        let w = out.witness.expect("the overgroup embedding is impure");
        assert!(w.verify(&h));
    }

    #[test]
    fn torsion_identity_passes() {
        let z4 = FGAbGroup::cyclic(4);
        let out = purity_lifting(
            &AbMorphism::identity(&z4),
            &LiftBound {
                gens: 2,
                rels: 2,
                max_entry: 4,
            },
        )
        .unwrap();
        assert!(out.is_pure());
    }
}
