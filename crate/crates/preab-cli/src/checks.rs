//! `check`: run a single checker on user-supplied JSON and print a
//! certificate or witness report. The verdict is data; the exit code is
//! 0 whenever the input was valid.

use crate::{CheckKind, Flags};
use anyhow::{anyhow, Result};
use preab::abcat::{classify, purity_divisibility, purity_lifting, PurityVerdict};
use preab::quiver::{
    effective_union, is_regular_injective, semiabelian_scan, Indecomposable, Subcategory,
};
use preab::scalar::{EnumerableField, Field};
use preab::wire::{
    ab_morphism_from_wire, rep_from_wire, rep_morphism_from_wire, WireAbMorphism, WireRep,
    WireRepMorphism,
};
use preab::{F2, F3, F5, F7};
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::Path;

#[derive(Deserialize)]
struct UnionInput {
    subcategory: Vec<String>,
    f: WireRepMorphism,
    g: WireRepMorphism,
}

#[derive(Deserialize)]
struct SemiabelianInput {
    field: String,
    subcategory: Vec<String>,
}

#[derive(Deserialize)]
struct InjectiveInput {
    subcategory: Vec<String>,
    object: WireRep,
}

fn labels(names: &[String]) -> Result<Vec<Indecomposable>> {
    names
        .iter()
        .map(|s| Indecomposable::from_label(s).ok_or_else(|| anyhow!("unknown label {s}")))
        .collect()
}

fn check_purity(text: &str, flags: &Flags) -> Result<Value> {
    let wire: WireAbMorphism = serde_json::from_str(text)?;
    let f = ab_morphism_from_wire(&wire).map_err(|e| anyhow!(e))?;
    if !classify(&f).mono {
        return Ok(json!({ "mono": false, "verdict": "not a monomorphism" }));
    }
    let cert = purity_divisibility(&f).map_err(|e| anyhow!(e.to_string()))?;
    let lift = purity_lifting(&f, &flags.lift_bound).map_err(|e| anyhow!(e.to_string()))?;
    let witness = match &cert.verdict {
        PurityVerdict::Pure => Value::Null,
        PurityVerdict::Impure(w) => json!({
            "n": w.n.to_string(),
            "element": w.element.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "verified": w.verify(&f),
        }),
    };
    Ok(json!({
        "mono": true,
        "verdict": if cert.verdict.is_pure() { "pure" } else { "impure" },
        "divisors_checked": cert.divisors_checked.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "witness": witness,
        "lifting": {
            "pure": lift.is_pure(),
            "triples_checked": lift.triples_checked,
        },
        "checkers_agree": cert.verdict.is_pure() == lift.is_pure(),
    }))
}

fn check_classify(text: &str) -> Result<Value> {
    let wire: WireAbMorphism = serde_json::from_str(text)?;
    let f = ab_morphism_from_wire(&wire).map_err(|e| anyhow!(e))?;
    let flags = classify(&f);
    Ok(json!({
        "mono": flags.mono,
        "epi": flags.epi,
        "split_mono": flags.split_mono,
        "split_epi": flags.split_epi,
        "iso": flags.iso,
    }))
}

fn check_union<F: Field>(input: &UnionInput) -> Result<Value> {
    let i = Subcategory::new::<F>(&labels(&input.subcategory)?);
    let f = rep_morphism_from_wire::<F>(&input.f).map_err(|e| anyhow!(e))?;
    let g = rep_morphism_from_wire::<F>(&input.g).map_err(|e| anyhow!(e))?;
    let r = effective_union(&f, &g, &i).map_err(|e| anyhow!(e.to_string()))?;
    Ok(json!({
        "intersection_dims": r.intersection.dims(),
        "union_dims": r.union_candidate.dims(),
        "h": {
            "mono": r.h_flags.mono,
            "epi": r.h_flags.epi,
            "regular_mono": r.h_flags.regular_mono,
            "regular_epi": r.h_flags.regular_epi,
            "pure": r.h_flags.pure,
        },
        "effective": r.h_flags.regular_mono,
    }))
}

fn check_semiabelian<F: EnumerableField>(input: &SemiabelianInput, dim_bound: usize) -> Result<Value> {
    let i = Subcategory::new::<F>(&labels(&input.subcategory)?);
    let r = semiabelian_scan::<F>(&i, dim_bound);
    Ok(json!({
        "left": r.left,
        "right": r.right,
        "left_witness_dims": r.left_witness.as_ref().map(|w| (w.src().dims(), w.dst().dims())),
        "right_witness_dims": r.right_witness.as_ref().map(|w| (w.src().dims(), w.dst().dims())),
        "dim_bound": dim_bound,
    }))
}

fn check_injective<F: EnumerableField>(input: &InjectiveInput, dim_bound: usize) -> Result<Value> {
    let i = Subcategory::new::<F>(&labels(&input.subcategory)?);
    let q = rep_from_wire::<F>(&input.object).map_err(|e| anyhow!(e))?;
    let r = is_regular_injective(&q, &i, dim_bound).map_err(|e| anyhow!(e.to_string()))?;
    Ok(json!({
        "regular_injective": r.injective,
        "witness_dims": r.witness.as_ref().map(|(m, u)| {
            json!({
                "mono_src": m.src().dims(),
                "mono_dst": m.dst().dims(),
                "map_dst": u.dst().dims(),
            })
        }),
        "dim_bound": dim_bound,
    }))
}

pub fn run(kind: CheckKind, input: &Path, flags: &Flags) -> Result<u8> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| anyhow!("cannot read {}: {e}", input.display()))?;
    let value = match kind {
        CheckKind::Purity => check_purity(&text, flags)?,
        CheckKind::Classify => check_classify(&text)?,
        CheckKind::EffectiveUnion => {
            let parsed: UnionInput = serde_json::from_str(&text)?;
            match parsed.f.field.as_str() {
                "Q" => check_union::<preab::Rat>(&parsed)?,
                "Fp:2" => check_union::<F2>(&parsed)?,
                "Fp:3" => check_union::<F3>(&parsed)?,
                "Fp:5" => check_union::<F5>(&parsed)?,
                "Fp:7" => check_union::<F7>(&parsed)?,
                other => return Err(anyhow!("unsupported field {other}")),
            }
        }
        CheckKind::Semiabelian => {
            let parsed: SemiabelianInput = serde_json::from_str(&text)?;
            match parsed.field.as_str() {
                "Fp:2" => check_semiabelian::<F2>(&parsed, flags.dim_bound)?,
                "Fp:3" => check_semiabelian::<F3>(&parsed, flags.dim_bound)?,
                "Fp:5" => check_semiabelian::<F5>(&parsed, flags.dim_bound)?,
                "Fp:7" => check_semiabelian::<F7>(&parsed, flags.dim_bound)?,
                other => {
                    return Err(anyhow!(
                        "exhaustive scans need a finite field, got {other}"
                    ))
                }
            }
        }
        CheckKind::Injective => {
            let parsed: InjectiveInput = serde_json::from_str(&text)?;
            match parsed.object.field.as_str() {
                "Fp:2" => check_injective::<F2>(&parsed, flags.dim_bound)?,
                "Fp:3" => check_injective::<F3>(&parsed, flags.dim_bound)?,
                "Fp:5" => check_injective::<F5>(&parsed, flags.dim_bound)?,
                "Fp:7" => check_injective::<F7>(&parsed, flags.dim_bound)?,
                other => {
                    return Err(anyhow!(
                        "exhaustive scans need a finite field, got {other}"
                    ))
                }
            }
        }
    };
    if flags.json {
        println!("{}", serde_json::to_string(&value)?);
    } else {
        println!("{}", serde_json::to_string_pretty(&value)?);
    }
    Ok(0)
}
