//! Category-agnostic plumbing: an operation-table trait over a concrete
//! category, plus retract verification and finite chain composition.

use rand_chacha::ChaCha8Rng;
use std::fmt::Debug;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatError {
    #[error("morphism endpoints do not match")]
    EndpointMismatch,
    #[error("operation failed in the underlying category: {0}")]
    Engine(String),
}

/// Classification flags shared by both concrete categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatFlags {
    pub mono: bool,
    pub epi: bool,
    pub split_mono: bool,
    pub split_epi: bool,
}

/// Exhibits `f: A -> B` as a retract of `fp: A' -> B'` in the arrow
/// category: `i: A -> A'`, `r: A' -> A`, `j: B -> B'`, `s: B' -> B`.
#[derive(Clone, Debug)]
pub struct RetractWitness<M> {
    pub i: M,
    pub r: M,
    pub j: M,
    pub s: M,
}

/// A finite composable chain together with its fold.
#[derive(Clone, Debug)]
pub struct ChainComposition<M> {
    pub links: Vec<M>,
    pub composite: M,
}

/// Operation table over one concrete category, with seeded sample
/// generators for the law suites. All operations are total on the values
/// the samplers produce.
pub trait CategoryAdapter: Sync {
    type Obj: Clone + Debug + PartialEq + Send + Sync;
    type Mor: Clone + Debug + Send + Sync;

    fn name(&self) -> &'static str;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g` after `f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, CatError>;
    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn kernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, CatError>;
    fn cokernel_object(&self, f: &Self::Mor) -> Result<Self::Obj, CatError>;
    /// For `f: A -> B`, `g: A -> C`, the cocone legs out of the pushout:
    /// `(f pushed along g: C -> P, g pushed along f: B -> P)`.
    fn pushout(&self, f: &Self::Mor, g: &Self::Mor)
        -> Result<(Self::Mor, Self::Mor), CatError>;
    /// For `f: B -> A`, `g: C -> A`, the cone legs out of the pullback:
    /// `(f pulled back along g: P -> C, g pulled back along f: P -> B)`.
    fn pullback(&self, f: &Self::Mor, g: &Self::Mor)
        -> Result<(Self::Mor, Self::Mor), CatError>;
    fn classify(&self, f: &Self::Mor) -> Result<CatFlags, CatError>;
    fn is_pure(&self, f: &Self::Mor) -> Result<bool, CatError>;

    /// A random split mono together with a retraction.
    fn sample_split_mono(&self, rng: &mut ChaCha8Rng) -> (Self::Mor, Self::Mor);
    /// A random split mono with prescribed source.
    fn sample_split_mono_from(
        &self,
        rng: &mut ChaCha8Rng,
        src: &Self::Obj,
    ) -> (Self::Mor, Self::Mor);
    /// A random morphism with prescribed source.
    fn sample_morphism_from(&self, rng: &mut ChaCha8Rng, src: &Self::Obj) -> Self::Mor;
    /// A random morphism between random objects.
    fn sample_morphism(&self, rng: &mut ChaCha8Rng) -> Self::Mor;
    /// `f + g` in the arrow category, with the canonical witness
    /// exhibiting `f` as a retract of the sum.
    fn direct_sum_retract(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> (Self::Mor, RetractWitness<Self::Mor>);
}

/// Checks the four retract identities `r i = id`, `s j = id`,
/// `f' i = j f`, `f r = s f'` exactly. Endpoint mismatches are errors;
/// a failed identity yields `Ok(false)`.
pub fn verify_retract<A: CategoryAdapter>(
    adapter: &A,
    f: &A::Mor,
    fp: &A::Mor,
    w: &RetractWitness<A::Mor>,
) -> Result<bool, CatError> {
    let ok_shapes = adapter.source(&w.i) == adapter.source(f)
        && adapter.target(&w.i) == adapter.source(fp)
        && adapter.source(&w.r) == adapter.source(fp)
        && adapter.target(&w.r) == adapter.source(f)
        && adapter.source(&w.j) == adapter.target(f)
        && adapter.target(&w.j) == adapter.target(fp)
        && adapter.source(&w.s) == adapter.target(fp)
        && adapter.target(&w.s) == adapter.target(f);
    if !ok_shapes {
        return Err(CatError::EndpointMismatch);
    }
    let ri = adapter.compose(&w.r, &w.i)?;
    let sj = adapter.compose(&w.s, &w.j)?;
    let fpi = adapter.compose(fp, &w.i)?;
    let jf = adapter.compose(&w.j, f)?;
    let fr = adapter.compose(f, &w.r)?;
    let sfp = adapter.compose(&w.s, fp)?;
    Ok(adapter.equal(&ri, &adapter.identity(&adapter.source(f)))
        && adapter.equal(&sj, &adapter.identity(&adapter.target(f)))
        && adapter.equal(&fpi, &jf)
        && adapter.equal(&fr, &sfp))
}

/// Folds a finite chain starting at `x`; the empty chain composes to the
/// identity of `x`.
pub fn compose_chain<A: CategoryAdapter>(
    adapter: &A,
    x: &A::Obj,
    links: &[A::Mor],
) -> Result<ChainComposition<A::Mor>, CatError> {
    let mut composite = adapter.identity(x);
    for f in links {
        if adapter.source(f) != adapter.target(&composite) {
            return Err(CatError::EndpointMismatch);
        }
        composite = adapter.compose(f, &composite)?;
    }
    Ok(ChainComposition {
        links: links.to_vec(),
        composite,
    })
}
