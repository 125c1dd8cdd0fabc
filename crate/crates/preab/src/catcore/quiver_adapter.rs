//! Adapter over a reflective or coreflective subcategory of A3 quiver
//! representations; purity is the split-mono flag computed in the
//! subcategory.

use super::adapter::{CatError, CatFlags, CategoryAdapter, RetractWitness};
use crate::quiver::{
    canonical_sum, classify_in_k, direct_sum_l, hom_space, k_cokernel, k_kernel, k_pullback,
    k_pushout, QuiverRep, RepMorphism, Subcategory, ALL_INDECOMPOSABLES,
};
use crate::scalar::EnumerableField;
use crate::solve::invert;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::marker::PhantomData;

/// Quiver representations decomposing into the allowed indecomposables,
/// sampled as random sums with bounded total multiplicity.
#[derive(Clone, Debug)]
pub struct QuiverAdapter<F: EnumerableField> {
    sub: Subcategory,
    mult_bound: usize,
    _scalars: PhantomData<F>,
}

impl<F: EnumerableField> QuiverAdapter<F> {
    pub fn new(sub: Subcategory, mult_bound: usize) -> Self {
        QuiverAdapter {
            sub,
            mult_bound,
            _scalars: PhantomData,
        }
    }

    pub fn subcategory(&self) -> &Subcategory {
        &self.sub
    }

    fn sample_object(&self, rng: &mut ChaCha8Rng) -> QuiverRep<F> {
        let mut m = [0usize; 6];
        let total = rng.gen_range(0..=self.mult_bound);
        for _ in 0..total {
            let e = self.sub.allowed()[rng.gen_range(0..self.sub.allowed().len())];
            let idx = ALL_INDECOMPOSABLES.iter().position(|&x| x == e).unwrap();
            m[idx] += 1;
        }
        canonical_sum::<F>(&m)
    }

    fn sample_between(
        &self,
        rng: &mut ChaCha8Rng,
        src: &QuiverRep<F>,
        dst: &QuiverRep<F>,
    ) -> RepMorphism<F> {
        let basis = hom_space(src, dst);
        let elements = F::elements();
        let mut sum = RepMorphism::zero(src, dst);
        for m in &basis {
            let c = elements[rng.gen_range(0..elements.len())].clone();
            let mut phi = sum.components().clone();
            for l in 0..3 {
                phi[l] = phi[l].add(&m.phi(l).scale(&c));
            }
            sum = RepMorphism::new(src.clone(), dst.clone(), phi)
                .expect("linear combinations of intertwiners intertwine");
        }
        sum
    }

    /// A random automorphism of `x`, by rejection over random
    /// endomorphisms with an identity fallback.
    fn sample_automorphism(&self, rng: &mut ChaCha8Rng, x: &QuiverRep<F>) -> RepMorphism<F> {
        for _ in 0..16 {
            let e = self.sample_between(rng, x, x);
            if e.is_iso() {
                return e;
            }
        }
        RepMorphism::identity(x)
    }
}

fn invert_iso<F: EnumerableField>(phi: &RepMorphism<F>) -> RepMorphism<F> {
    let inv = [
        invert(phi.phi(0)).expect("isomorphism component is invertible"),
        invert(phi.phi(1)).expect("isomorphism component is invertible"),
        invert(phi.phi(2)).expect("isomorphism component is invertible"),
    ];
    RepMorphism::new(phi.dst().clone(), phi.src().clone(), inv)
        .expect("inverse of an intertwiner intertwines")
}

impl<F: EnumerableField> CategoryAdapter for QuiverAdapter<F> {
    type Obj = QuiverRep<F>;
    type Mor = RepMorphism<F>;

    fn name(&self) -> &'static str {
        "quiver-subcategory"
    }

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        f.src().clone()
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        f.dst().clone()
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        RepMorphism::identity(x)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, CatError> {
        g.compose(f).map_err(|e| CatError::Engine(e.to_string()))
    }

    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f == g
    }

    fn kernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, CatError> {
        k_kernel(f, &self.sub)
            .map(|k| k.object)
            .map_err(|e| CatError::Engine(e.to_string()))
    }

    fn cokernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, CatError> {
        k_cokernel(f, &self.sub)
            .map(|c| c.object)
            .map_err(|e| CatError::Engine(e.to_string()))
    }

    fn pushout(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Mor, Self::Mor), CatError> {
        let p = k_pushout(f, g, &self.sub).map_err(|e| CatError::Engine(e.to_string()))?;
        Ok((p.from_right, p.from_left))
    }

    fn pullback(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Mor, Self::Mor), CatError> {
        let p = k_pullback(f, g, &self.sub).map_err(|e| CatError::Engine(e.to_string()))?;
        Ok((p.to_right, p.to_left))
    }

    fn classify(&self, f: &Self::Mor) -> Result<CatFlags, CatError> {
        let flags = classify_in_k(f, &self.sub).map_err(|e| CatError::Engine(e.to_string()))?;
        Ok(CatFlags {
            mono: flags.mono,
            epi: flags.epi,
            split_mono: flags.split_mono,
            split_epi: flags.split_epi,
        })
    }

    fn is_pure(&self, f: &Self::Mor) -> Result<bool, CatError> {
        classify_in_k(f, &self.sub)
            .map(|flags| flags.pure)
            .map_err(|e| CatError::Engine(e.to_string()))
    }

    fn sample_split_mono(&self, rng: &mut ChaCha8Rng) -> (Self::Mor, Self::Mor) {
        let src = self.sample_object(rng);
        self.sample_split_mono_from(rng, &src)
    }

    fn sample_split_mono_from(
        &self,
        rng: &mut ChaCha8Rng,
        src: &Self::Obj,
    ) -> (Self::Mor, Self::Mor) {
        let extra = self.sample_object(rng);
        let sum = direct_sum_l(src, &extra);
        let phi = self.sample_automorphism(rng, &sum.object);
        let phi_inv = invert_iso(&phi);
        let f = phi.compose(&sum.inj_left).expect("shapes agree");
        let r = sum.proj_left.compose(&phi_inv).expect("shapes agree");
        debug_assert!(r.compose(&f).unwrap().is_identity_morphism());
        (f, r)
    }

    fn sample_morphism_from(&self, rng: &mut ChaCha8Rng, src: &Self::Obj) -> Self::Mor {
        let dst = self.sample_object(rng);
        self.sample_between(rng, src, &dst)
    }

    fn sample_morphism(&self, rng: &mut ChaCha8Rng) -> Self::Mor {
        let src = self.sample_object(rng);
        let dst = self.sample_object(rng);
        self.sample_between(rng, &src, &dst)
    }

    fn direct_sum_retract(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Mor, RetractWitness<Self::Mor>) {
        let src_sum = direct_sum_l(f.src(), g.src());
        let dst_sum = direct_sum_l(f.dst(), g.dst());
        let fp = f.direct_sum(g);
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
    use crate::scalar::F2;
    use rand::SeedableRng;

    fn adapter() -> QuiverAdapter<F2> {
        QuiverAdapter::new(Subcategory::all::<F2>(), 2)
    }

    #[test]
    fn split_mono_samples_are_split_and_pure() {
        let a = adapter();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let (f, r) = a.sample_split_mono(&mut rng);
            assert!(a
                .compose(&r, &f)
                .unwrap()
                .is_identity_morphism());
            assert!(a.is_pure(&f).unwrap());
        }
    }

    #[test]
    fn direct_sum_retract_witness_verifies() {
        let a = adapter();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let (f, _) = a.sample_split_mono(&mut rng);
            let g = a.sample_morphism(&mut rng);
            let (fp, w) = a.direct_sum_retract(&f, &g);
            assert!(verify_retract(&a, &f, &fp, &w).unwrap());
        }
    }
}
