//! JSON wire formats. All numeric entries travel as decimal strings so
//! values survive any JSON reader without float rounding; reps and their
//! morphisms carry a field tag (`"Q"` or `"Fp:<p>"`).

use crate::abcat::{AbMorphism, FGAbGroup};
use crate::matrix::Matrix;
use crate::quiver::{QuiverRep, RepMorphism};
use crate::scalar::{parse_int, Field, Scalar};
use serde::{Deserialize, Serialize};

pub type WireMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireGroup {
    pub generators: usize,
    pub relations: WireMatrix,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireAbMorphism {
    pub src: WireGroup,
    pub dst: WireGroup,
    pub matrix: WireMatrix,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireRep {
    pub field: String,
    pub dims: [usize; 3],
    pub a: WireMatrix,
    pub b: WireMatrix,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireRepMorphism {
    pub field: String,
    pub src: WireRep,
    pub dst: WireRep,
    pub m1: WireMatrix,
    pub m2: WireMatrix,
    pub m3: WireMatrix,
}

fn matrix_to_wire<T: Scalar>(m: &Matrix<T>) -> WireMatrix {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

fn wire_to_matrix<T: Scalar>(
    w: &WireMatrix,
    rows: usize,
    cols: usize,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Matrix<T>, String> {
    if w.len() != rows || w.iter().any(|r| r.len() != cols) {
        return Err(format!("expected a {rows}x{cols} matrix"));
    }
    let mut m = Matrix::zero(rows, cols);
    for (i, row) in w.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m[(i, j)] = parse(s).map_err(|e| format!("entry ({i},{j}): {e}"))?;
        }
    }
    Ok(m)
}

pub fn group_to_wire(g: &FGAbGroup) -> WireGroup {
    WireGroup {
        generators: g.generators(),
        relations: matrix_to_wire(g.relations()),
    }
}

pub fn group_from_wire(w: &WireGroup) -> Result<FGAbGroup, String> {
    let rel = wire_to_matrix(&w.relations, w.relations.len(), w.generators, |s| {
        parse_int(s)
    })?;
    Ok(FGAbGroup::new(w.generators, rel))
}

pub fn ab_morphism_to_wire(f: &AbMorphism) -> WireAbMorphism {
    WireAbMorphism {
        src: group_to_wire(f.src()),
        dst: group_to_wire(f.dst()),
        matrix: matrix_to_wire(f.matrix()),
    }
}

pub fn ab_morphism_from_wire(w: &WireAbMorphism) -> Result<AbMorphism, String> {
    let src = group_from_wire(&w.src)?;
    let dst = group_from_wire(&w.dst)?;
    let m = wire_to_matrix(&w.matrix, dst.generators(), src.generators(), |s| {
        parse_int(s)
    })?;
    AbMorphism::new(src, dst, m).map_err(|e| e.to_string())
}

pub fn rep_to_wire<F: Field>(x: &QuiverRep<F>) -> WireRep {
    let (d1, d2, d3) = x.dims();
    WireRep {
        field: F::tag(),
        dims: [d1, d2, d3],
        a: matrix_to_wire(x.a()),
        b: matrix_to_wire(x.b()),
    }
}

pub fn rep_from_wire<F: Field>(w: &WireRep) -> Result<QuiverRep<F>, String> {
    if w.field != F::tag() {
        return Err(format!("field tag {} does not match {}", w.field, F::tag()));
    }
    let [d1, d2, d3] = w.dims;
    let a = wire_to_matrix(&w.a, d2, d1, F::parse)?;
    let b = wire_to_matrix(&w.b, d3, d2, F::parse)?;
    Ok(QuiverRep::new(a, b))
}

pub fn rep_morphism_to_wire<F: Field>(f: &RepMorphism<F>) -> WireRepMorphism {
    WireRepMorphism {
        field: F::tag(),
        src: rep_to_wire(f.src()),
        dst: rep_to_wire(f.dst()),
        m1: matrix_to_wire(f.phi(0)),
        m2: matrix_to_wire(f.phi(1)),
        m3: matrix_to_wire(f.phi(2)),
    }
}

pub fn rep_morphism_from_wire<F: Field>(w: &WireRepMorphism) -> Result<RepMorphism<F>, String> {
    if w.field != F::tag() {
        return Err(format!("field tag {} does not match {}", w.field, F::tag()));
    }
    let src = rep_from_wire::<F>(&w.src)?;
    let dst = rep_from_wire::<F>(&w.dst)?;
    let phi = [
        wire_to_matrix(&w.m1, dst.dim(0), src.dim(0), F::parse)?,
        wire_to_matrix(&w.m2, dst.dim(1), src.dim(1), F::parse)?,
        wire_to_matrix(&w.m3, dst.dim(2), src.dim(2), F::parse)?,
    ];
    RepMorphism::new(src, dst, phi).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{hom_space, Indecomposable};
    use crate::scalar::F2;

    #[test]
    fn ab_morphism_round_trips() {
        let f = AbMorphism::from_rows(
            FGAbGroup::free(2),
            FGAbGroup::from_rows(3, vec![vec![1, 1, -2]]),
            vec![vec![1, 0], vec![0, 1], vec![0, 0]],
        )
        .unwrap();
        let wire = ab_morphism_to_wire(&f);
        let json = serde_json::to_string(&wire).unwrap();
        let back: WireAbMorphism = serde_json::from_str(&json).unwrap();
        let g = ab_morphism_from_wire(&back).unwrap();
        assert_eq!(g.src(), f.src());
        assert!(g.eq_morphism(&f));
    }

    #[test]
    fn rep_morphism_round_trips() {
        let k = hom_space::<F2>(
            &Indecomposable::E23.realize(),
            &Indecomposable::E123.realize(),
        )
        .remove(0);
        let wire = rep_morphism_to_wire(&k);
        let json = serde_json::to_string(&wire).unwrap();
        let back: WireRepMorphism = serde_json::from_str(&json).unwrap();
        let k2 = rep_morphism_from_wire::<F2>(&back).unwrap();
        assert_eq!(k2, k);
    }

    #[test]
    fn wrong_field_tag_is_rejected() {
        let wire = rep_to_wire::<F2>(&Indecomposable::E1.realize());
        assert!(rep_from_wire::<crate::scalar::F3>(&wire).is_err());
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let mut wire = rep_to_wire::<F2>(&Indecomposable::E123.realize());
        wire.dims = [2, 1, 1];
        assert!(rep_from_wire::<F2>(&wire).is_err());
    }
}
