//! Adapter over finitely generated abelian groups.

use super::adapter::{CatError, CatFlags, CategoryAdapter, RetractWitness};
use crate::abcat::{
    classify, cokernel, direct_sum, kernel, purity_divisibility, pushout, pullback, AbMorphism,
    AbSampler, FGAbGroup,
};
use rand::RngCore;
use rand_chacha::ChaCha8Rng;

/// Finitely generated abelian groups with presentation matrices; purity
/// is decided by the divisibility checker.
#[derive(Clone, Copy, Debug)]
pub struct AbAdapter {
    pub max_gens: usize,
    pub max_entry: u64,
}

impl Default for AbAdapter {
    fn default() -> Self {
        AbAdapter {
            max_gens: 2,
            max_entry: 3,
        }
    }
}

impl AbAdapter {
    fn sampler(&self, rng: &mut ChaCha8Rng) -> AbSampler {
        AbSampler::new(rng.next_u64())
    }
}

impl CategoryAdapter for AbAdapter {
    type Obj = FGAbGroup;
    type Mor = AbMorphism;

    fn name(&self) -> &'static str {
        "fg-abelian-groups"
    }

    fn source(&self, f: &AbMorphism) -> FGAbGroup {
        f.src().clone()
    }

    fn target(&self, f: &AbMorphism) -> FGAbGroup {
        f.dst().clone()
    }

    fn identity(&self, x: &FGAbGroup) -> AbMorphism {
        AbMorphism::identity(x)
    }

    fn compose(&self, g: &AbMorphism, f: &AbMorphism) -> Result<AbMorphism, CatError> {
        g.compose(f).map_err(|e| CatError::Engine(e.to_string()))
    }

    fn equal(&self, f: &AbMorphism, g: &AbMorphism) -> bool {
        f.src() == g.src() && f.dst() == g.dst() && f.eq_morphism(g)
    }

    fn kernel_object(&self, f: &AbMorphism) -> Result<FGAbGroup, CatError> {
        Ok(kernel(f).object)
    }

    fn cokernel_object(&self, f: &AbMorphism) -> Result<FGAbGroup, CatError> {
        Ok(cokernel(f).object)
    }

    fn pushout(
        &self,
        f: &AbMorphism,
        g: &AbMorphism,
    ) -> Result<(AbMorphism, AbMorphism), CatError> {
        let p = pushout(f, g).map_err(|e| CatError::Engine(e.to_string()))?;
        Ok((p.from_right, p.from_left))
    }

    fn pullback(
        &self,
        f: &AbMorphism,
        g: &AbMorphism,
    ) -> Result<(AbMorphism, AbMorphism), CatError> {
        let p = pullback(f, g).map_err(|e| CatError::Engine(e.to_string()))?;
        Ok((p.to_right, p.to_left))
    }

    fn classify(&self, f: &AbMorphism) -> Result<CatFlags, CatError> {
        let flags = classify(f);
        Ok(CatFlags {
            mono: flags.mono,
            epi: flags.epi,
            split_mono: flags.split_mono,
            split_epi: flags.split_epi,
        })
    }

    fn is_pure(&self, f: &AbMorphism) -> Result<bool, CatError> {
        if !classify(f).mono {
            return Ok(false);
        }
        purity_divisibility(f)
            .map(|c| c.verdict.is_pure())
            .map_err(|e| CatError::Engine(e.to_string()))
    }

    fn sample_split_mono(&self, rng: &mut ChaCha8Rng) -> (AbMorphism, AbMorphism) {
        self.sampler(rng).split_mono(self.max_gens, self.max_entry)
    }

    fn sample_split_mono_from(
        &self,
        rng: &mut ChaCha8Rng,
        src: &FGAbGroup,
    ) -> (AbMorphism, AbMorphism) {
        self.sampler(rng)
            .split_mono_from(src, self.max_gens, self.max_entry)
    }

    fn sample_morphism_from(&self, rng: &mut ChaCha8Rng, src: &FGAbGroup) -> AbMorphism {
        let mut s = self.sampler(rng);
        let dst = s.group(self.max_gens, self.max_entry);
        s.morphism(src, &dst, self.max_entry as i64)
    }

    fn sample_morphism(&self, rng: &mut ChaCha8Rng) -> AbMorphism {
        let mut s = self.sampler(rng);
        let src = s.group(self.max_gens, self.max_entry);
        let dst = s.group(self.max_gens, self.max_entry);
        s.morphism(&src, &dst, self.max_entry as i64)
    }

    fn direct_sum_retract(
        &self,
        f: &AbMorphism,
        g: &AbMorphism,
    ) -> (AbMorphism, RetractWitness<AbMorphism>) {
        let src_sum = direct_sum(f.src(), g.src());
        let dst_sum = direct_sum(f.dst(), g.dst());
        let fp = AbMorphism::new(
            src_sum.object.clone(),
            dst_sum.object.clone(),
            f.matrix().block_diag(g.matrix()),
        )
        .expect("block sum of well-defined morphisms is well defined");
        let w = RetractWitness {
            i: src_sum.inj_left,
            r: src_sum.proj_left,
            j: dst_sum.inj_left,
            s: dst_sum.proj_left,
        };
        (fp, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catcore::adapter::verify_retract;
    use rand::SeedableRng;

    #[test]
    fn direct_sum_retract_witness_verifies() {
        let adapter = AbAdapter::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let (f, _) = adapter.sample_split_mono(&mut rng);
            let g = adapter.sample_morphism(&mut rng);
            let (fp, w) = adapter.direct_sum_retract(&f, &g);
            assert!(verify_retract(&adapter, &f, &fp, &w).unwrap());
        }
    }

    #[test]
    fn split_mono_samples_are_pure() {
        let adapter = AbAdapter::default();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let (f, _) = adapter.sample_split_mono(&mut rng);
            assert!(adapter.is_pure(&f).unwrap());
        }
    }
}
