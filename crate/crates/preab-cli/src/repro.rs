//! Canned reproductions of the worked examples, driven by the JSON
//! fixtures shipped under `fixtures/`.

use crate::{Flags, ReproCase};
use anyhow::{anyhow, Result};
use preab::abcat::{
    classify, purity_divisibility, purity_lifting, pushout, AbMorphism, FGAbGroup, PurityVerdict,
};
use preab::catcore::{closure_suite, AbAdapter, QuiverAdapter, SampleConfig};
use preab::quiver::{
    coim_im_factor, effective_union, hom_space, is_regular_injective, k_pushout, reflect,
    coreflect, Indecomposable, QuiverRep, RepMorphism, Subcategory,
};
use preab::scalar::{EnumerableField, Field};
use preab::wire::{ab_morphism_from_wire, rep_morphism_from_wire, WireAbMorphism, WireRepMorphism};
use preab::{F2, F3, F5, F7, Rat};
use serde::{Deserialize, Serialize};

pub const FIX_OVERGROUP: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/ab_overgroup_inclusion.json"));
pub const FIX_INTERVAL: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/quiver_interval_inclusion.json"
));
pub const FIX_PROJECTION: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/quiver_projection.json"
));
pub const FIX_UNION_LEFT: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/union_reflective.json"
));
pub const FIX_UNION_RIGHT: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../fixtures/union_coreflective.json"
));

#[derive(Serialize)]
pub struct ReproReport {
    pub case: &'static str,
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn report(
    case: &'static str,
    check: &str,
    expected: impl ToString,
    computed: impl ToString,
) -> ReproReport {
    let expected = expected.to_string();
    let computed = computed.to_string();
    ReproReport {
        case,
        check: check.to_string(),
        pass: expected == computed,
        expected,
        computed,
    }
}

#[derive(Deserialize)]
struct UnionFixture {
    subcategory: Vec<String>,
    f: WireRepMorphism,
    g: WireRepMorphism,
}

fn labels(names: &[String]) -> Result<Vec<Indecomposable>> {
    names
        .iter()
        .map(|s| Indecomposable::from_label(s).ok_or_else(|| anyhow!("unknown label {s}")))
        .collect()
}

fn e<F: Field>(x: Indecomposable) -> QuiverRep<F> {
    x.realize()
}

fn i1<F: Field>() -> Subcategory {
    use Indecomposable::*;
    Subcategory::new::<F>(&[E1, E2, E3, E23, E123])
}

fn i2<F: Field>() -> Subcategory {
    use Indecomposable::*;
    Subcategory::new::<F>(&[E1, E2, E3, E12, E123])
}

fn unions(flags: &Flags) -> Result<Vec<ReproReport>> {
    const CASE: &str = "unions";
    let mut out = Vec::new();

    let zero = FGAbGroup::zero();
    let z = FGAbGroup::free(1);
    let po = pushout(
        &AbMorphism::zero(&zero, &z),
        &AbMorphism::zero(&zero, &z),
    )
    .map_err(|e| anyhow!(e.to_string()))?;
    out.push(report(
        CASE,
        "pushout of Z <- 0 -> Z is Z^2",
        true,
        po.object.is_isomorphic_to(&FGAbGroup::free(2)),
    ));

    let wire: WireAbMorphism = serde_json::from_str(FIX_OVERGROUP)?;
    let h = ab_morphism_from_wire(&wire).map_err(|e| anyhow!(e))?;
    out.push(report(CASE, "h is a monomorphism", true, classify(&h).mono));

    let cert = purity_divisibility(&h).map_err(|e| anyhow!(e.to_string()))?;
    let (impure, witness_n, witness_ok) = match &cert.verdict {
        PurityVerdict::Pure => (false, String::from("-"), false),
        PurityVerdict::Impure(w) => (true, w.n.to_string(), w.verify(&h)),
    };
    out.push(report(CASE, "divisibility checker finds h impure", true, impure));
    out.push(report(CASE, "divisibility witness is n = 2", "2", witness_n));
    out.push(report(CASE, "divisibility witness verifies", true, witness_ok));

    let lift = purity_lifting(&h, &flags.lift_bound).map_err(|e| anyhow!(e.to_string()))?;
    out.push(report(CASE, "lifting oracle finds h impure", true, !lift.is_pure()));
    out.push(report(
        CASE,
        "both purity checkers agree",
        true,
        lift.is_pure() == cert.verdict.is_pure(),
    ));
    Ok(out)
}

/// The field-generic part of the reflective-subcategory reproduction;
/// `k`, `p` and the union legs are passed in so the F2 path can take
/// them from the fixtures.
#[allow(clippy::too_many_arguments)]
fn left_quiver_core<F: Field>(
    k: RepMorphism<F>,
    p: RepMorphism<F>,
    union_f: RepMorphism<F>,
    union_g: RepMorphism<F>,
) -> Result<Vec<ReproReport>> {
    const CASE: &str = "left-quiver";
    use Indecomposable::*;
    let i = i1::<F>();
    let mut out = Vec::new();

    let (r, unit) = reflect::<F>(&e(E12), &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "reflection of E12 is E1",
        format!("{:?}", E1.dims()),
        format!("{:?}", r.dims()),
    ));
    out.push(report(CASE, "reflection unit is epi and nonzero", true,
        preab::quiver::classify_l(&unit).epi && !unit.is_zero_morphism()));

    let z = hom_space::<F>(&e(E3), &e(E123)).remove(0);
    let fac = coim_im_factor(&z, &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "coimage-image of E3 -> E123 passes through E3 and E23",
        format!("{:?} {:?}", E3.dims(), E23.dims()),
        format!("{:?} {:?}", fac.coimage.dims(), fac.image.dims()),
    ));
    out.push(report(
        CASE,
        "middle map is a regular mono that is not epi",
        true,
        fac.mid_flags.regular_mono && !fac.mid_flags.epi,
    ));

    let po = k_pushout(&k, &p, &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "pushout of k along p lands in E1",
        format!("{:?}", E1.dims()),
        format!("{:?}", po.object.dims()),
    ));
    out.push(report(
        CASE,
        "pushout of k along p is the zero map",
        true,
        po.from_right.is_zero_morphism(),
    ));

    let union = effective_union(&union_f, &union_g, &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "the two E3 subobjects intersect trivially",
        true,
        union.intersection.is_zero_rep(),
    ));
    out.push(report(
        CASE,
        "union comparison h is mono but not regular mono",
        true,
        union.h_flags.mono && !union.h_flags.regular_mono,
    ));
    Ok(out)
}

fn left_quiver_scan<F: EnumerableField>(dim_bound: usize) -> Result<Vec<ReproReport>> {
    const CASE: &str = "left-quiver";
    use Indecomposable::*;
    let i = i1::<F>();
    let rep = is_regular_injective(&e::<F>(E2), &i, dim_bound)
        .map_err(|err| anyhow!(err.to_string()))?;
    let mut out = vec![report(CASE, "E2 is not regular injective", false, rep.injective)];
    let witness_dims = rep
        .witness
        .as_ref()
        .map(|(m, u)| format!("{:?} {:?} {:?}", m.src().dims(), m.dst().dims(), u.dst().dims()))
        .unwrap_or_else(|| "-".into());
    out.push(report(
        CASE,
        "injectivity counterexample is k against the projection to E2",
        format!("{:?} {:?} {:?}", E23.dims(), E123.dims(), E2.dims()),
        witness_dims,
    ));
    Ok(out)
}

fn right_quiver_core<F: Field>(
    union_f: RepMorphism<F>,
    union_g: RepMorphism<F>,
) -> Result<Vec<ReproReport>> {
    const CASE: &str = "right-quiver";
    use Indecomposable::*;
    let i = i2::<F>();
    let mut out = Vec::new();

    let (s, counit) = coreflect::<F>(&e(E23), &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "coreflection of E23 is E3",
        format!("{:?}", E3.dims()),
        format!("{:?}", s.dims()),
    ));
    out.push(report(CASE, "coreflection counit is mono", true,
        preab::quiver::classify_l(&counit).mono));

    let z = hom_space::<F>(&e(E123), &e(E1)).remove(0);
    let fac = coim_im_factor(&z, &i).map_err(|err| anyhow!(err.to_string()))?;
    out.push(report(
        CASE,
        "coimage-image of E123 -> E1 passes through E12 and E1",
        format!("{:?} {:?}", E12.dims(), E1.dims()),
        format!("{:?} {:?}", fac.coimage.dims(), fac.image.dims()),
    ));
    out.push(report(
        CASE,
        "middle map is a regular epi that is not mono",
        true,
        fac.mid_flags.regular_epi && !fac.mid_flags.mono,
    ));

    let union = effective_union(&union_f, &union_g, &i).map_err(|err| anyhow!(err.to_string()))?;
    let d = preab::quiver::decompose(&union.intersection);
    let du = preab::quiver::decompose(&union.union_candidate);
    out.push(report(
        CASE,
        "the two E123 subobjects intersect in E3",
        "E3",
        summand_labels(&d.multiplicities).join(" + "),
    ));
    out.push(report(
        CASE,
        "union object is E12 + E123",
        "E12 + E123",
        summand_labels(&du.multiplicities).join(" + "),
    ));
    out.push(report(
        CASE,
        "union comparison h is a regular epi that is not mono",
        true,
        union.h_flags.regular_epi && !union.h_flags.mono,
    ));
    Ok(out)
}

fn summand_labels(mults: &[usize; 6]) -> Vec<&'static str> {
    let mut v = Vec::new();
    for (idx, &m) in mults.iter().enumerate() {
        for _ in 0..m {
            v.push(preab::quiver::ALL_INDECOMPOSABLES[idx].label());
        }
    }
    v
}

fn parse_union_fixture(text: &str) -> Result<(Vec<Indecomposable>, RepMorphism<F2>, RepMorphism<F2>)> {
    let fix: UnionFixture = serde_json::from_str(text)?;
    let f = rep_morphism_from_wire::<F2>(&fix.f).map_err(|e| anyhow!(e))?;
    let g = rep_morphism_from_wire::<F2>(&fix.g).map_err(|e| anyhow!(e))?;
    Ok((labels(&fix.subcategory)?, f, g))
}

/// Constructs the union legs generically: the two hom-basis embeddings
/// of `sub` into the glued two-summand representation `c`.
fn union_legs<F: Field>(sub: Indecomposable, c: &QuiverRep<F>) -> (RepMorphism<F>, RepMorphism<F>) {
    let mut homs = hom_space(&sub.realize(), c);
    assert_eq!(homs.len(), 2, "the configured target has two copies of the subobject");
    let g = homs.remove(1);
    let f = homs.remove(0);
    (f, g)
}

fn glued_left<F: Field>() -> QuiverRep<F> {
    // E123 + E3 presented with a = 1, b = (1,1)^T.
    let a = preab::Matrix::identity(1);
    let b = preab::Matrix::from_rows(vec![vec![F::one()], vec![F::one()]]);
    QuiverRep::new(a, b)
}

fn glued_right<F: Field>() -> QuiverRep<F> {
    // E1 + E123 presented with a = (1,1), b = 1.
    let a = preab::Matrix::from_rows(vec![vec![F::one(), F::one()]]);
    let b = preab::Matrix::identity(1);
    QuiverRep::new(a, b)
}

fn left_quiver(flags: &Flags) -> Result<Vec<ReproReport>> {
    fn generic<F: Field>() -> Result<Vec<ReproReport>> {
        use Indecomposable::*;
        let k = hom_space::<F>(&e(E23), &e(E123)).remove(0);
        let p = hom_space::<F>(&e(E23), &e(E2)).remove(0);
        let (f, g) = union_legs(E3, &glued_left::<F>());
        left_quiver_core(k, p, f, g)
    }
    fn with_scan<F: EnumerableField>(dim_bound: usize) -> Result<Vec<ReproReport>> {
        let mut out = generic::<F>()?;
        out.extend(left_quiver_scan::<F>(dim_bound)?);
        Ok(out)
    }
    match flags.field.as_str() {
        "Q" => generic::<Rat>(),
        "Fp:2" => {
            // Over the default field the inputs come from the fixtures.
            let kw: WireRepMorphism = serde_json::from_str(FIX_INTERVAL)?;
            let pw: WireRepMorphism = serde_json::from_str(FIX_PROJECTION)?;
            let k = rep_morphism_from_wire::<F2>(&kw).map_err(|e| anyhow!(e))?;
            let p = rep_morphism_from_wire::<F2>(&pw).map_err(|e| anyhow!(e))?;
            let (_, f, g) = parse_union_fixture(FIX_UNION_LEFT)?;
            let mut out = left_quiver_core(k, p, f, g)?;
            out.extend(left_quiver_scan::<F2>(flags.dim_bound)?);
            Ok(out)
        }
        "Fp:3" => with_scan::<F3>(flags.dim_bound),
        "Fp:5" => with_scan::<F5>(flags.dim_bound),
        "Fp:7" => with_scan::<F7>(flags.dim_bound),
        other => Err(anyhow!("unsupported field {other}")),
    }
}

fn right_quiver(flags: &Flags) -> Result<Vec<ReproReport>> {
    fn generic<F: Field>() -> Result<Vec<ReproReport>> {
        let (f, g) = union_legs(Indecomposable::E123, &glued_right::<F>());
        right_quiver_core(f, g)
    }
    match flags.field.as_str() {
        "Q" => generic::<Rat>(),
        "Fp:2" => {
            let (_, f, g) = parse_union_fixture(FIX_UNION_RIGHT)?;
            right_quiver_core(f, g)
        }
        "Fp:3" => generic::<F3>(),
        "Fp:5" => generic::<F5>(),
        "Fp:7" => generic::<F7>(),
        other => Err(anyhow!("unsupported field {other}")),
    }
}

fn closure_reports<A: preab::catcore::CategoryAdapter>(
    case: &'static str,
    adapter: &A,
    seed: u64,
) -> Vec<ReproReport> {
    let cfg = SampleConfig { samples: 200, seed };
    closure_suite(adapter, cfg)
        .into_iter()
        .map(|law| {
            report(
                case,
                &format!("{} ({} samples)", law.law, law.samples),
                "0 violations",
                format!("{} violations", law.violations),
            )
        })
        .collect()
}

pub fn run(case: ReproCase, flags: &Flags) -> Result<u8> {
    let mut reports: Vec<ReproReport> = Vec::new();
    let cases: Vec<ReproCase> = match case {
        ReproCase::All => vec![
            ReproCase::Unions,
            ReproCase::LeftQuiver,
            ReproCase::RightQuiver,
            ReproCase::ClosureAb,
            ReproCase::ClosureQuiver,
        ],
        c => vec![c],
    };
    for c in cases {
        match c {
            ReproCase::Unions => reports.extend(unions(flags)?),
            ReproCase::LeftQuiver => reports.extend(left_quiver(flags)?),
            ReproCase::RightQuiver => reports.extend(right_quiver(flags)?),
            ReproCase::ClosureAb => reports.extend(closure_reports(
                "closure-ab",
                &AbAdapter::default(),
                flags.seed,
            )),
            ReproCase::ClosureQuiver => reports.extend(closure_reports(
                "closure-quiver",
                &QuiverAdapter::<F2>::new(Subcategory::all::<F2>(), 2),
                flags.seed,
            )),
            ReproCase::All => unreachable!(),
        }
    }
    let all_pass = reports.iter().all(|r| r.pass);
    if flags.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for r in &reports {
            println!(
                "[{}] {} / {}: expected {}, computed {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.case,
                r.check,
                r.expected,
                r.computed
            );
        }
        println!(
            "{} checks, {} failed",
            reports.len(),
            reports.iter().filter(|r| !r.pass).count()
        );
    }
    Ok(if all_pass { 0 } else { 1 })
}
