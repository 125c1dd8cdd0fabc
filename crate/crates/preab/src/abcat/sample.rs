//! Seeded random generation of groups and morphisms for the statistical
//! test suites. All draws go through one ChaCha stream, so a fixed seed
//! reproduces the exact sample sequence.

use super::group::FGAbGroup;
use super::morphism::AbMorphism;
use super::ops::{classify, direct_sum};
use crate::matrix::Matrix;
use crate::scalar::Int;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct AbSampler {
    rng: ChaCha8Rng,
}

impl AbSampler {
    pub fn new(seed: u64) -> Self {
        AbSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random canonical group: some free generators plus a torsion
    /// divisibility chain with moduli up to `max_entry`.
    pub fn group(&mut self, max_gens: usize, max_entry: u64) -> FGAbGroup {
        let gens = self.rng.gen_range(0..=max_gens);
        let torsion = self.rng.gen_range(0..=gens);
        let mut rows = Vec::new();
        let mut d = 1u64;
        for i in 0..torsion {
            let step = self.rng.gen_range(2..=max_entry.max(2));
            d *= step;
            let mut row = vec![0i64; gens];
            row[i] = d as i64;
            rows.push(row);
        }
        FGAbGroup::from_rows(gens, rows)
    }

    /// A random well-defined morphism, by rejection with a zero-map
    /// fallback.
    pub fn morphism(&mut self, src: &FGAbGroup, dst: &FGAbGroup, max_entry: i64) -> AbMorphism {
        for _ in 0..64 {
            let m = self.matrix(dst.generators(), src.generators(), max_entry);
            if let Ok(f) = AbMorphism::new(src.clone(), dst.clone(), m) {
                return f;
            }
        }
        AbMorphism::zero(src, dst)
    }

    /// A random monomorphism between random groups; falls back to a split
    /// inclusion when rejection takes too long.
    pub fn mono(&mut self, max_gens: usize, max_entry: u64) -> AbMorphism {
        for _ in 0..64 {
            let src = self.group(max_gens, max_entry);
            let dst = self.group(max_gens, max_entry);
            let f = self.morphism(&src, &dst, max_entry as i64);
            if classify(&f).mono {
                return f;
            }
        }
        self.split_mono(max_gens, max_entry).0
    }

    /// A split monomorphism together with a retraction: a block inclusion
    /// `A -> A + T` twisted by a random automorphism of the sum.
    pub fn split_mono(&mut self, max_gens: usize, max_entry: u64) -> (AbMorphism, AbMorphism) {
        let a = self.group(max_gens, max_entry);
        self.split_mono_from(&a, max_gens, max_entry)
    }

    /// Like [`AbSampler::split_mono`], but with a prescribed source.
    pub fn split_mono_from(
        &mut self,
        a: &FGAbGroup,
        max_gens: usize,
        max_entry: u64,
    ) -> (AbMorphism, AbMorphism) {
        let t = self.group(max_gens, max_entry);
        let sum = direct_sum(a, &t);
        let phi = self.automorphism(&sum.object, 4, max_entry as i64);
        let phi_inv = invert_automorphism(&phi);
        let f = phi.compose(&sum.inj_left).expect("shapes agree");
        let r = sum.proj_left.compose(&phi_inv).expect("shapes agree");
        debug_assert!(r
            .compose(&f)
            .unwrap()
            .eq_morphism(&AbMorphism::identity(a)));
        (f, r)
    }

    /// A random automorphism of a diagonally presented group, as a
    /// product of elementary shears that respect the torsion moduli.
    pub fn automorphism(&mut self, g: &FGAbGroup, steps: usize, max_entry: i64) -> AbMorphism {
        let n = g.generators();
        let Some(moduli) = diagonal_moduli(g) else {
            return AbMorphism::identity(g);
        };
        let mut m = Matrix::<Int>::identity(n);
        if n >= 2 {
            for _ in 0..steps {
                let i = self.rng.gen_range(0..n);
                let mut j = self.rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                // gen i picks up c * gen j; c must keep the relation
                // d_i * gen i inside the lattice, so d_j | d_i * c.
                let unit = shear_unit(moduli[i], moduli[j]);
                if unit == 0 {
                    continue;
                }
                let k = self.rng.gen_range(-max_entry..=max_entry);
                let c = Int::from(unit) * Int::from(k);
                if c.is_zero() {
                    continue;
                }
                let mut shear = Matrix::<Int>::identity(n);
                shear[(j, i)] = c;
                m = shear.mul(&m);
            }
        }
        AbMorphism::new(g.clone(), g.clone(), m).expect("shears preserve the relation lattice")
    }

    fn matrix(&mut self, rows: usize, cols: usize, max_entry: i64) -> Matrix<Int> {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = Int::from(self.rng.gen_range(-max_entry..=max_entry));
            }
        }
        m
    }
}

/// For gen i of modulus `di` shearing into gen j of modulus `dj`
/// (0 meaning free), the smallest admissible coefficient step.
fn shear_unit(di: u64, dj: u64) -> i64 {
    match (di, dj) {
        (0, _) => 1,
        (_, 0) => 0,
        (di, dj) => (dj / di.gcd(&dj)) as i64,
    }
}

/// Per-generator torsion modulus when every relation row touches a single
/// generator; `None` otherwise.
fn diagonal_moduli(g: &FGAbGroup) -> Option<Vec<u64>> {
    let mut moduli = vec![0u64; g.generators()];
    for r in 0..g.relations().rows() {
        let row = g.relations().row(r);
        let nz: Vec<usize> = (0..row.len()).filter(|&j| !row[j].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        let j = nz[0];
        let d = row[j].to_i64()?.unsigned_abs();
        if moduli[j] != 0 {
            return None;
        }
        moduli[j] = d;
    }
    Some(moduli)
}

fn invert_automorphism(phi: &AbMorphism) -> AbMorphism {
    // Shear products are unimodular over Z, so the rational inverse is
    // integral.
    use crate::scalar::Rat;
    let rat = phi.matrix().map(|x| Rat::from_integer(x.clone()));
    let inv = crate::solve::invert(&rat).expect("automorphism matrix is invertible");
    let back = inv.map(|q| {
        assert!(q.is_integer());
        q.to_integer()
    });
    AbMorphism::new(phi.dst().clone(), phi.src().clone(), back)
        .expect("inverse of a lattice-preserving map preserves the lattice")
}
