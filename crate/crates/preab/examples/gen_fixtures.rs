//! Regenerates the JSON fixtures under `fixtures/` from the library
//! constructions, so the shipped data stays auditable:
//!
//! ```sh
//! cargo run -p preab --example gen_fixtures
//! ```

use preab::abcat::{AbMorphism, FGAbGroup};
use preab::quiver::{hom_space, Indecomposable, QuiverRep};
use preab::wire::{
    ab_morphism_to_wire, rep_morphism_to_wire, rep_to_wire, WireRep, WireRepMorphism,
};
use preab::{Matrix, F2};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

fn write(dir: &Path, name: &str, value: &Value) {
    let mut text = serde_json::to_string_pretty(value).unwrap();
    text.push('\n');
    fs::write(dir.join(name), text).unwrap();
    println!("wrote {name}");
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    fs::create_dir_all(&dir).unwrap();

    // Inclusion of Z^2 into the overgroup <x, y, t | x + y = 2t>, the
    // standard example of a non-pure mono between f.g. abelian groups.
    let overgroup = FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]);
    let h = AbMorphism::from_rows(
        FGAbGroup::free(2),
        overgroup,
        vec![vec![1, 0], vec![0, 1], vec![0, 0]],
    )
    .unwrap();
    write(
        &dir,
        "ab_overgroup_inclusion.json",
        &serde_json::to_value(ab_morphism_to_wire(&h)).unwrap(),
    );

    write(
        &dir,
        "ab_identity.json",
        &serde_json::to_value(ab_morphism_to_wire(&AbMorphism::identity(&FGAbGroup::free(
            2,
        ))))
        .unwrap(),
    );

    // The six indecomposable representations of 1 -> 2 -> 3 over F2.
    let mut reps: BTreeMap<&str, WireRep> = BTreeMap::new();
    for e in preab::quiver::ALL_INDECOMPOSABLES {
        reps.insert(e.label(), rep_to_wire::<F2>(&e.realize()));
    }
    write(
        &dir,
        "quiver_indecomposables.json",
        &serde_json::to_value(&reps).unwrap(),
    );

    let rep = |e: Indecomposable| e.realize::<F2>();
    let basis_map = |x: &QuiverRep<F2>, y: &QuiverRep<F2>| -> WireRepMorphism {
        rep_morphism_to_wire(&hom_space(x, y).remove(0))
    };

    write(
        &dir,
        "quiver_interval_inclusion.json",
        &serde_json::to_value(basis_map(
            &rep(Indecomposable::E23),
            &rep(Indecomposable::E123),
        ))
        .unwrap(),
    );
    write(
        &dir,
        "quiver_projection.json",
        &serde_json::to_value(basis_map(&rep(Indecomposable::E23), &rep(Indecomposable::E2)))
            .unwrap(),
    );

    let i1_labels = ["E1", "E2", "E3", "E23", "E123"];
    let i2_labels = ["E1", "E2", "E3", "E12", "E123"];

    // Union configuration in the subcategory without E12: two copies of
    // E3 inside C with C = E123 + E3 glued by b = (1, 1)^T.
    let c_left = QuiverRep::<F2>::new(
        Matrix::identity(1),
        Matrix::from_rows(vec![vec![F2::new(1)], vec![F2::new(1)]]),
    );
    let homs = hom_space(&rep(Indecomposable::E3), &c_left);
    write(
        &dir,
        "union_reflective.json",
        &json!({
            "subcategory": i1_labels,
            "f": rep_morphism_to_wire(&homs[0]),
            "g": rep_morphism_to_wire(&homs[1]),
        }),
    );

    // Dual configuration in the subcategory without E23: two copies of
    // E123 inside C with C = E1 + E123 glued by a = (1, 1).
    let c_right = QuiverRep::<F2>::new(
        Matrix::from_rows(vec![vec![F2::new(1), F2::new(1)]]),
        Matrix::identity(1),
    );
    let homs = hom_space(&rep(Indecomposable::E123), &c_right);
    write(
        &dir,
        "union_coreflective.json",
        &json!({
            "subcategory": i2_labels,
            "f": rep_morphism_to_wire(&homs[0]),
            "g": rep_morphism_to_wire(&homs[1]),
        }),
    );

    write(
        &dir,
        "semiabelian_reflective.json",
        &json!({ "field": "Fp:2", "subcategory": i1_labels }),
    );
    write(
        &dir,
        "injective_middle.json",
        &json!({
            "subcategory": i1_labels,
            "object": rep_to_wire::<F2>(&rep(Indecomposable::E2)),
        }),
    );
}
