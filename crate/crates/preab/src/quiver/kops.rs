//! Kernels, cokernels, pushouts, pullbacks, and classification inside a
//! reflective or coreflective subcategory `K`.
//!
//! Recipe: limits of a reflective `K` and colimits of a coreflective `K`
//! are computed in the ambient category; the other side is corrected by
//! applying the (co)reflector to the ambient construction.

use super::morphism::{hom_space, solve_combination, QuiverError, RepMorphism};
use super::ops::{
    cokernel_l, kernel_l, pullback_l, pushout_l, RepCokernel, RepKernel, RepPullback, RepPushout,
};
use super::rep::QuiverRep;
use super::subcat::{coreflect, member, reflect, Subcategory};
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::solve::{solve_field, solve_matrix};

fn require_member<F: Field>(x: &QuiverRep<F>, i: &Subcategory) -> Result<(), QuiverError> {
    if member(x, i) {
        Ok(())
    } else {
        Err(QuiverError::ObjectNotInSubcategory)
    }
}

pub fn k_kernel<F: Field>(
    z: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<RepKernel<F>, QuiverError> {
    require_member(z.src(), i)?;
    require_member(z.dst(), i)?;
    let k = kernel_l(z);
    if i.closure_kind().allows_reflective() {
        return Ok(k);
    }
    if !i.closure_kind().allows_coreflective() {
        return Err(QuiverError::NotCoreflective);
    }
    let (object, counit) = coreflect(&k.object, i)?;
    let inclusion = k.inclusion.compose(&counit)?;
    Ok(RepKernel { object, inclusion })
}

pub fn k_cokernel<F: Field>(
    z: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<RepCokernel<F>, QuiverError> {
    require_member(z.src(), i)?;
    require_member(z.dst(), i)?;
    let c = cokernel_l(z);
    if i.closure_kind().allows_coreflective() {
        return Ok(c);
    }
    if !i.closure_kind().allows_reflective() {
        return Err(QuiverError::NotReflective);
    }
    let (object, unit) = reflect(&c.object, i)?;
    let projection = unit.compose(&c.projection)?;
    Ok(RepCokernel { object, projection })
}

pub fn k_pushout<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<RepPushout<F>, QuiverError> {
    for x in [f.src(), f.dst(), g.dst()] {
        require_member(x, i)?;
    }
    let p = pushout_l(f, g)?;
    if i.closure_kind().allows_coreflective() {
        return Ok(p);
    }
    if !i.closure_kind().allows_reflective() {
        return Err(QuiverError::NotReflective);
    }
    let (object, unit) = reflect(&p.object, i)?;
    Ok(RepPushout {
        object,
        from_left: unit.compose(&p.from_left)?,
        from_right: unit.compose(&p.from_right)?,
    })
}

pub fn k_pullback<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<RepPullback<F>, QuiverError> {
    for x in [f.src(), f.dst(), g.src()] {
        require_member(x, i)?;
    }
    let p = pullback_l(f, g)?;
    if i.closure_kind().allows_reflective() {
        return Ok(p);
    }
    if !i.closure_kind().allows_coreflective() {
        return Err(QuiverError::NotCoreflective);
    }
    let (object, counit) = coreflect(&p.object, i)?;
    Ok(RepPullback {
        object,
        to_left: p.to_left.compose(&counit)?,
        to_right: p.to_right.compose(&counit)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KFlags {
    pub mono: bool,
    pub epi: bool,
    pub regular_mono: bool,
    pub regular_epi: bool,
    pub split_mono: bool,
    pub split_epi: bool,
    /// Purity in these categories coincides with being a split mono.
    pub pure: bool,
}

/// Solves `m ∘ j = z` componentwise for `j`, where `m` is componentwise
/// injective.
fn factor_through_mono<F: Field>(
    m: &RepMorphism<F>,
    z: &RepMorphism<F>,
) -> Result<RepMorphism<F>, QuiverError> {
    let phi: Vec<Matrix<F>> = (0..3)
        .map(|l| solve_matrix(m.phi(l), z.phi(l)).expect("z lands inside the subobject"))
        .collect();
    RepMorphism::new(
        z.src().clone(),
        m.src().clone(),
        [phi[0].clone(), phi[1].clone(), phi[2].clone()],
    )
}

/// Solves `w ∘ q = z` componentwise for `w`, where `q` is componentwise
/// surjective.
fn factor_through_epi<F: Field>(
    q: &RepMorphism<F>,
    z: &RepMorphism<F>,
) -> Result<RepMorphism<F>, QuiverError> {
    let phi: Vec<Matrix<F>> = (0..3)
        .map(|l| {
            solve_matrix(&q.phi(l).transpose(), &z.phi(l).transpose())
                .expect("z kills the kernel of the quotient")
                .transpose()
        })
        .collect();
    RepMorphism::new(
        q.dst().clone(),
        z.dst().clone(),
        [phi[0].clone(), phi[1].clone(), phi[2].clone()],
    )
}

pub fn classify_in_k<F: Field>(
    z: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<KFlags, QuiverError> {
    require_member(z.src(), i)?;
    require_member(z.dst(), i)?;
    let mono = k_kernel(z, i)?.object.is_zero_rep();
    let epi = k_cokernel(z, i)?.object.is_zero_rep();

    let regular_mono = {
        let coker = k_cokernel(z, i)?;
        let ker = k_kernel(&coker.projection, i)?;
        let j = factor_through_mono(&ker.inclusion, z)?;
        j.is_iso()
    };
    let regular_epi = {
        let ker = k_kernel(z, i)?;
        let coker = k_cokernel(&ker.inclusion, i)?;
        let w = factor_through_epi(&coker.projection, z)?;
        w.is_iso()
    };
    let back = hom_space(z.dst(), z.src());
    let split_mono = solve_combination(
        z.dst(),
        z.src(),
        &back,
        |r| r.compose(z).expect("shapes agree"),
        &RepMorphism::identity(z.src()),
    )
    .is_some();
    let split_epi = solve_combination(
        z.dst(),
        z.src(),
        &back,
        |s| z.compose(s).expect("shapes agree"),
        &RepMorphism::identity(z.dst()),
    )
    .is_some();
    Ok(KFlags {
        mono,
        epi,
        regular_mono,
        regular_epi,
        split_mono,
        split_epi,
        pure: split_mono,
    })
}

pub struct CoimImFactorization<F: Field> {
    pub coimage: QuiverRep<F>,
    pub coim_proj: RepMorphism<F>,
    pub image: QuiverRep<F>,
    pub im_incl: RepMorphism<F>,
    pub mid: RepMorphism<F>,
    pub mid_flags: KFlags,
}

/// Canonical factorization `X -> coimage -> image -> Y` inside `K`.
pub fn coim_im_factor<F: Field>(
    z: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<CoimImFactorization<F>, QuiverError> {
    let ker = k_kernel(z, i)?;
    let coim = k_cokernel(&ker.inclusion, i)?;
    let coker = k_cokernel(z, i)?;
    let im = k_kernel(&coker.projection, i)?;
    let j = factor_through_mono(&im.inclusion, z)?;
    let mid = factor_through_epi(&coim.projection, &j)?;
    debug_assert_eq!(
        im.inclusion
            .compose(&mid)
            .and_then(|m| m.compose(&coim.projection))
            .expect("factorization composes"),
        *z
    );
    let mid_flags = classify_in_k(&mid, i)?;
    Ok(CoimImFactorization {
        coimage: coim.object.clone(),
        coim_proj: coim.projection,
        image: im.object.clone(),
        im_incl: im.inclusion,
        mid,
        mid_flags,
    })
}

pub struct EffectiveUnionReport<F: Field> {
    pub intersection: QuiverRep<F>,
    pub to_left: RepMorphism<F>,
    pub to_right: RepMorphism<F>,
    pub union_candidate: QuiverRep<F>,
    pub from_left: RepMorphism<F>,
    pub from_right: RepMorphism<F>,
    pub h: RepMorphism<F>,
    pub h_flags: KFlags,
    pub left_flags: KFlags,
    pub right_flags: KFlags,
}

/// The pushout-over-pullback comparison map for two subobjects
/// `f: A -> C`, `g: B -> C`, with its classification.
pub fn effective_union<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
    i: &Subcategory,
) -> Result<EffectiveUnionReport<F>, QuiverError> {
    if f.dst() != g.dst() {
        return Err(QuiverError::CornerMismatch);
    }
    let left_flags = classify_in_k(f, i)?;
    let right_flags = classify_in_k(g, i)?;
    let pb = k_pullback(f, g, i)?;
    let po = k_pushout(&pb.to_left, &pb.to_right, i)?;
    // Solve h: E -> C with h f' = f and h g' = g; the pushout property
    // makes the solution unique, which is asserted.
    let basis = hom_space(&po.object, f.dst());
    let cols: Vec<Vec<F>> = basis
        .iter()
        .map(|phi| {
            let mut v = phi
                .compose(&po.from_left)
                .expect("shapes agree")
                .flatten();
            v.extend(phi.compose(&po.from_right).expect("shapes agree").flatten());
            v
        })
        .collect();
    let mut target = f.flatten();
    target.extend(g.flatten());
    let sys = Matrix::from_cols(target.len(), &cols);
    let sol = solve_field(&sys, &target)
        .expect("shapes agree")
        .expect("the pushout property provides the comparison map");
    assert_eq!(
        sol.nullspace.cols(),
        0,
        "comparison map out of a pushout must be unique"
    );
    let mut h = RepMorphism::zero(&po.object, f.dst());
    for (k, c) in sol.particular.iter().enumerate() {
        h = RepMorphism::new(
            po.object.clone(),
            f.dst().clone(),
            [
                h.phi(0).add(&basis[k].phi(0).scale(c)),
                h.phi(1).add(&basis[k].phi(1).scale(c)),
                h.phi(2).add(&basis[k].phi(2).scale(c)),
            ],
        )
        .expect("linear combinations of morphisms are morphisms");
    }
    let h_flags = classify_in_k(&h, i)?;
    Ok(EffectiveUnionReport {
        intersection: pb.object,
        to_left: pb.to_left,
        to_right: pb.to_right,
        union_candidate: po.object,
        from_left: po.from_left,
        from_right: po.from_right,
        h,
        h_flags,
        left_flags,
        right_flags,
    })
}
