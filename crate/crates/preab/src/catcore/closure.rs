//! Statistical law suite for the closure properties of pure
//! monomorphisms: split monos are pure, purity is left-cancellable,
//! stable under pushouts, and transfers along retracts of morphisms.
//!
//! Instances are drawn sequentially from one seeded stream, evaluated in
//! parallel, and merged in draw order, so reports are reproducible.

use super::adapter::{verify_retract, CategoryAdapter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub samples: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<String>,
    pub seed: u64,
}

/// One sampled instance: a premise flag (instances with a false premise
/// are vacuous), a conclusion flag, and a printable transcript.
struct Instance {
    premise: bool,
    conclusion: bool,
    transcript: String,
}

fn run_law<A, S>(
    adapter: &A,
    law: &str,
    config: SampleConfig,
    stream: u64,
    mut draw: S,
) -> LawReport
where
    A: CategoryAdapter,
    S: FnMut(&A, &mut ChaCha8Rng) -> Instance,
{
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(stream));
    let instances: Vec<Instance> = (0..config.samples)
        .map(|_| draw(adapter, &mut rng))
        .collect();
    let failures: Vec<(usize, &Instance)> = instances
        .par_iter()
        .enumerate()
        .filter(|(_, inst)| inst.premise && !inst.conclusion)
        .collect();
    let first = failures.iter().min_by_key(|(i, _)| *i);
    LawReport {
        law: law.to_string(),
        samples: config.samples,
        violations: failures.len(),
        first_counterexample: first.map(|(i, inst)| format!("sample {}: {}", i, inst.transcript)),
        seed: config.seed,
    }
}

/// Runs all four closure laws against the adapter and returns one report
/// per law. A correct engine yields zero violations on every law.
pub fn closure_suite<A: CategoryAdapter>(adapter: &A, config: SampleConfig) -> Vec<LawReport> {
    let split_monos_pure = run_law(
        adapter,
        "split monomorphisms are pure",
        config,
        1,
        |a, rng| {
            let (f, _) = a.sample_split_mono(rng);
            Instance {
                premise: true,
                conclusion: a.is_pure(&f).unwrap_or(false),
                transcript: format!("split mono {f:?}"),
            }
        },
    );

    let left_cancel = run_law(
        adapter,
        "pure monomorphisms are left-cancellable",
        config,
        2,
        |a, rng| {
            let (f, _) = a.sample_split_mono(rng);
            let (g, _) = a.sample_split_mono_from(rng, &a.target(&f));
            let gf = a.compose(&g, &f).expect("endpoints match by construction");
            Instance {
                premise: a.is_pure(&gf).unwrap_or(false),
                conclusion: a.is_pure(&f).unwrap_or(false),
                transcript: format!("f = {f:?}, g = {g:?}, g f pure but f not"),
            }
        },
    );

    let pushout_stable = run_law(
        adapter,
        "pure monomorphisms are stable under pushouts",
        config,
        3,
        |a, rng| {
            let (f, _) = a.sample_split_mono(rng);
            let g = a.sample_morphism_from(rng, &a.source(&f));
            let premise = a.is_pure(&f).unwrap_or(false);
            let conclusion = match a.pushout(&f, &g) {
                Ok((f_pushed, _)) => a.is_pure(&f_pushed).unwrap_or(false),
                Err(_) => false,
            };
            Instance {
                premise,
                conclusion,
                transcript: format!("f = {f:?} pushed along g = {g:?} is not pure"),
            }
        },
    );

    let retract_transfer = run_law(
        adapter,
        "purity transfers along retracts of morphisms",
        config,
        4,
        |a, rng| {
            let (f, _) = a.sample_split_mono(rng);
            let g = a.sample_morphism(rng);
            let (fp, w) = a.direct_sum_retract(&f, &g);
            let witness_ok = verify_retract(a, &f, &fp, &w).unwrap_or(false);
            Instance {
                premise: witness_ok && a.is_pure(&fp).unwrap_or(false),
                conclusion: a.is_pure(&f).unwrap_or(false),
                transcript: format!("f = {f:?} is a retract of the pure {fp:?} but is not pure"),
            }
        },
    );

    vec![split_monos_pure, left_cancel, pushout_stable, retract_transfer]
}

/// Wraps an adapter and corrupts its purity answers deterministically, as
/// a negative control: the suite must report violations against it.
pub struct UnreliablePurity<A> {
    pub inner: A,
    pub salt: u64,
}

impl<A: CategoryAdapter> CategoryAdapter for UnreliablePurity<A> {
    type Obj = A::Obj;
    type Mor = A::Mor;

    fn name(&self) -> &'static str {
        "unreliable-purity-control"
    }

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.source(f)
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.target(f)
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.inner.identity(x)
    }

    fn compose(
        &self,
        g: &Self::Mor,
        f: &Self::Mor,
    ) -> Result<Self::Mor, super::adapter::CatError> {
        self.inner.compose(g, f)
    }

    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.inner.equal(f, g)
    }

    fn kernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, super::adapter::CatError> {
        self.inner.kernel_object(f)
    }

    fn cokernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, super::adapter::CatError> {
        self.inner.cokernel_object(f)
    }

    fn pushout(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> Result<(Self::Mor, Self::Mor), super::adapter::CatError> {
        self.inner.pushout(f, g)
    }

    fn pullback(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> Result<(Self::Mor, Self::Mor), super::adapter::CatError> {
        self.inner.pullback(f, g)
    }

    fn classify(
        &self,
        f: &Self::Mor,
    ) -> Result<super::adapter::CatFlags, super::adapter::CatError> {
        self.inner.classify(f)
    }

    fn is_pure(&self, f: &Self::Mor) -> Result<bool, super::adapter::CatError> {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.salt.hash(&mut h);
        format!("{f:?}").hash(&mut h);
        Ok(h.finish() % 2 == 0)
    }

    fn sample_split_mono(&self, rng: &mut ChaCha8Rng) -> (Self::Mor, Self::Mor) {
        self.inner.sample_split_mono(rng)
    }

    fn sample_split_mono_from(
        &self,
        rng: &mut ChaCha8Rng,
        src: &Self::Obj,
    ) -> (Self::Mor, Self::Mor) {
        self.inner.sample_split_mono_from(rng, src)
    }

    fn sample_morphism_from(&self, rng: &mut ChaCha8Rng, src: &Self::Obj) -> Self::Mor {
        self.inner.sample_morphism_from(rng, src)
    }

    fn sample_morphism(&self, rng: &mut ChaCha8Rng) -> Self::Mor {
        self.inner.sample_morphism(rng)
    }

    fn direct_sum_retract(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Mor, super::adapter::RetractWitness<Self::Mor>) {
        self.inner.direct_sum_retract(f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::super::ab_adapter::AbAdapter;
    use super::*;

    #[test]
    fn ab_suite_is_clean_at_small_size() {
        let reports = closure_suite(
            &AbAdapter::default(),
            SampleConfig {
                samples: 25,
                seed: 0,
            },
        );
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert_eq!(r.violations, 0, "law {:?} violated: {:?}", r.law, r);
            assert_eq!(r.samples, 25);
        }
    }

    #[test]
    fn negative_control_is_caught() {
        let broken = UnreliablePurity {
            inner: AbAdapter::default(),
            salt: 1,
        };
        let reports = closure_suite(
            &broken,
            SampleConfig {
                samples: 25,
                seed: 0,
            },
        );
        let total: usize = reports.iter().map(|r| r.violations).sum();
        assert!(total > 0, "corrupted purity must trip at least one law");
        assert!(reports
            .iter()
            .any(|r| r.first_counterexample.is_some()));
    }

    #[test]
    fn reports_are_reproducible() {
        let a = AbAdapter::default();
        let cfg = SampleConfig {
            samples: 10,
            seed: 42,
        };
        let r1 = closure_suite(&a, cfg);
        let r2 = closure_suite(&a, cfg);
        let s1 = serde_json::to_string(&r1).unwrap();
        let s2 = serde_json::to_string(&r2).unwrap();
        assert_eq!(s1, s2);
    }
}
