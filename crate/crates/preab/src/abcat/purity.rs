//! Divisibility-based purity test for monomorphisms of finitely
//! generated abelian groups.
//!
//! A monomorphism `f: A -> B` is pure when `f(A) ∩ nB = n f(A)` for every
//! `n ≥ 2`. On presentations this becomes a lattice inclusion in `Z^nB`:
//! `(im f + L_B) ∩ (n Z^nB + L_B) ⊆ n im f + L_B`. It suffices to test
//! divisors of the product of the torsion coefficients of `coker f`; for
//! all other `n` the cokernel has no `n`-torsion obstruction.

use super::morphism::{AbError, AbMorphism};
use super::ops::{classify, cokernel};
use crate::lattice::Lattice;
use crate::scalar::Int;
use num_traits::{One, ToPrimitive};

/// A concrete failure of purity: `element` lies in `f(A) ∩ nB` but not in
/// `n f(A)`, read in the generator coordinates of the target.
#[derive(Clone, Debug)]
pub struct ImpureWitness {
    pub n: Int,
    pub element: Vec<Int>,
}

impl ImpureWitness {
    /// Rechecks the three memberships from scratch.
    pub fn verify(&self, f: &AbMorphism) -> bool {
        let (inside, scaled) = purity_lattices(f, &self.n);
        inside.contains(&self.element) && !scaled.contains(&self.element)
    }
}

#[derive(Clone, Debug)]
pub enum PurityVerdict {
    Pure,
    Impure(ImpureWitness),
}

impl PurityVerdict {
    pub fn is_pure(&self) -> bool {
        matches!(self, PurityVerdict::Pure)
    }
}

/// Result of the divisibility test, with the list of moduli inspected.
#[derive(Clone, Debug)]
pub struct PurityCertificate {
    pub verdict: PurityVerdict,
    pub divisors_checked: Vec<Int>,
}

/// `(f(A) ∩ nB, n f(A))` as lattices in the generator coordinates of the
/// target (both taken modulo the target relations, hence the `+ L_B`).
fn purity_lattices(f: &AbMorphism, n: &Int) -> (Lattice, Lattice) {
    let lb = f.dst().relation_lattice();
    let im = Lattice::from_generators(f.matrix()).sum(lb);
    let n_full = Lattice::full(f.dst().generators()).scaled(n).sum(lb);
    let scaled = Lattice::from_generators(f.matrix()).scaled(n).sum(lb);
    (im.intersect(&n_full), scaled)
}

fn divisors_ascending(p: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= p {
        if p % d == 0 {
            small.push(d);
            if d * d != p {
                large.push(p / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Decides purity of the monomorphism `f` by checking the divisibility
/// condition at every divisor `n ≥ 2` of the torsion exponent product of
/// `coker f`. Returns the first (smallest-`n`) witness on failure.
pub fn purity_divisibility(f: &AbMorphism) -> Result<PurityCertificate, AbError> {
    if !classify(f).mono {
        return Err(AbError::NotMono);
    }
    let coker = cokernel(f);
    let product = coker
        .object
        .invariants()
        .torsion
        .iter()
        .fold(Int::one(), |acc, d| acc * d);
    let product = product
        .to_u64()
        .expect("torsion exponent product fits in u64 for supported inputs");
    let mut checked = Vec::new();
    for n in divisors_ascending(product).into_iter().filter(|&n| n >= 2) {
        let n = Int::from(n);
        let (inside, scaled) = purity_lattices(f, &n);
        checked.push(n.clone());
        if !scaled.contains_lattice(&inside) {
            let basis = inside.basis();
            let j = (0..basis.cols())
                .find(|&j| !scaled.contains(&basis.col(j)))
                .expect("some basis vector escapes");
            let witness = ImpureWitness {
                n,
                element: basis.col(j),
            };
            debug_assert!(witness.verify(f));
            return Ok(PurityCertificate {
                verdict: PurityVerdict::Impure(witness),
                divisors_checked: checked,
            });
        }
    }
    Ok(PurityCertificate {
        verdict: PurityVerdict::Pure,
        divisors_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abcat::group::FGAbGroup;
    use crate::abcat::ops::direct_sum;

    #[test]
    fn doubling_is_not_pure() {
        let z = FGAbGroup::free(1);
        let two = AbMorphism::from_rows(z.clone(), z, vec![vec![2]]).unwrap();
        let cert = purity_divisibility(&two).unwrap();
        match cert.verdict {
            PurityVerdict::Impure(w) => {
                assert_eq!(w.n, Int::from(2));
                assert!(w.verify(&two));
            }
            PurityVerdict::Pure => panic!("doubling must fail the test"),
        }
    }

    #[test]
    fn split_inclusion_is_pure() {
        let z = FGAbGroup::free(1);
        let sum = direct_sum(&z, &z);
        let cert = purity_divisibility(&sum.inj_left).unwrap();
        assert!(cert.verdict.is_pure());
    }

    #[test]
    fn torsion_inclusion_of_index_two() {
        // Z/2 -> Z/4 by x -> 2x: mono, not pure.
        let f = AbMorphism::from_rows(FGAbGroup::cyclic(2), FGAbGroup::cyclic(4), vec![vec![2]])
            .unwrap();
        let cert = purity_divisibility(&f).unwrap();
        match cert.verdict {
            PurityVerdict::Impure(w) => assert!(w.verify(&f)),
            PurityVerdict::Pure => panic!("index-two torsion inclusion is impure"),
        }
    }

    #[test]
    fn half_diagonal_overgroup_witness_at_two() {
        // Z^2 inside <x, y, t | x + y = 2t>: (1,1,0) is divisible by 2 in
        // the overgroup but (1,1) is not twice anything in the image.
        let z2 = FGAbGroup::free(2);
        let g = FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]);
        let h =
            AbMorphism::from_rows(z2, g, vec![vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        let cert = purity_divisibility(&h).unwrap();
        match cert.verdict {
            PurityVerdict::Impure(w) => {
                assert_eq!(w.n, Int::from(2));
                assert!(w.verify(&h));
            }
            PurityVerdict::Pure => panic!("the overgroup embedding is impure"),
        }
        assert_eq!(cert.divisors_checked, vec![Int::from(2)]);
    }

    #[test]
    fn identity_on_torsion_is_pure() {
        let z4 = FGAbGroup::cyclic(4);
        let id = AbMorphism::identity(&z4);
        assert!(purity_divisibility(&id).unwrap().verdict.is_pure());
    }

    #[test]
    fn non_mono_is_rejected() {
        let z = FGAbGroup::free(1);
        let q = AbMorphism::from_rows(z, FGAbGroup::cyclic(2), vec![vec![1]]).unwrap();
        assert!(matches!(purity_divisibility(&q), Err(AbError::NotMono)));
    }
}
