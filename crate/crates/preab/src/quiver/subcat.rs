//! Full subcategories generated by a subset of the indecomposables, with
//! computed closure kind and the reflector / coreflector constructions.

use super::decompose::decompose;
use super::morphism::{hom_space, QuiverError, RepMorphism};
use super::ops::{classify_l, image_factor_l};
use super::rep::{Indecomposable, QuiverRep, ALL_INDECOMPOSABLES};
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::solve::{column_space_basis, solve_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Reflective,
    Coreflective,
    Both,
    Neither,
}

impl ClosureKind {
    pub fn allows_reflective(self) -> bool {
        matches!(self, ClosureKind::Reflective | ClosureKind::Both)
    }

    pub fn allows_coreflective(self) -> bool {
        matches!(self, ClosureKind::Coreflective | ClosureKind::Both)
    }
}

#[derive(Clone, Debug)]
pub struct Subcategory {
    allowed: Vec<Indecomposable>,
    closure_kind: ClosureKind,
}

impl Subcategory {
    /// Builds the subcategory and computes its closure kind by scanning
    /// monos and epis between indecomposables.
    pub fn new<F: Field>(labels: &[Indecomposable]) -> Self {
        let mut allowed: Vec<Indecomposable> = ALL_INDECOMPOSABLES
            .iter()
            .copied()
            .filter(|e| labels.contains(e))
            .collect();
        allowed.dedup();
        let sub_closed = closed_under::<F>(&allowed, true);
        let quot_closed = closed_under::<F>(&allowed, false);
        let closure_kind = match (sub_closed, quot_closed) {
            (true, true) => ClosureKind::Both,
            (true, false) => ClosureKind::Reflective,
            (false, true) => ClosureKind::Coreflective,
            (false, false) => ClosureKind::Neither,
        };
        Subcategory {
            allowed,
            closure_kind,
        }
    }

    pub fn all<F: Field>() -> Self {
        Self::new::<F>(&ALL_INDECOMPOSABLES)
    }

    pub fn allowed(&self) -> &[Indecomposable] {
        &self.allowed
    }

    pub fn closure_kind(&self) -> ClosureKind {
        self.closure_kind
    }

    pub fn contains_label(&self, e: Indecomposable) -> bool {
        self.allowed.contains(&e)
    }
}

/// Whether every sub-indecomposable (`subs = true`) or
/// quotient-indecomposable (`subs = false`) of an allowed label is
/// allowed. Hom spaces between indecomposables are at most
/// one-dimensional, so checking basis elements decides existence.
fn closed_under<F: Field>(allowed: &[Indecomposable], subs: bool) -> bool {
    for &e in allowed {
        for other in ALL_INDECOMPOSABLES {
            if allowed.contains(&other) {
                continue;
            }
            let basis = if subs {
                hom_space::<F>(&other.realize(), &e.realize())
            } else {
                hom_space::<F>(&e.realize(), &other.realize())
            };
            assert!(basis.len() <= 1, "interval hom spaces are at most a line");
            if let Some(m) = basis.first() {
                let flags = classify_l(m);
                if (subs && flags.mono) || (!subs && flags.epi) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `x` decomposes using only allowed indecomposables.
pub fn member<F: Field>(x: &QuiverRep<F>, i: &Subcategory) -> bool {
    decompose(x).uses_only(&i.allowed)
}

/// Reflector: image of the evaluation map into the product of allowed
/// indecomposables, one factor per hom-basis element.
pub fn reflect<F: Field>(
    x: &QuiverRep<F>,
    i: &Subcategory,
) -> Result<(QuiverRep<F>, RepMorphism<F>), QuiverError> {
    if !i.closure_kind().allows_reflective() {
        return Err(QuiverError::NotReflective);
    }
    // Stack all hom-basis morphisms X -> E over allowed E.
    let mut target = QuiverRep::<F>::zero_rep();
    let mut rows: [Vec<Matrix<F>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for &e in &i.allowed {
        let er: QuiverRep<F> = e.realize();
        for m in hom_space(x, &er) {
            target = target.direct_sum(&er);
            for l in 0..3 {
                rows[l].push(m.phi(l).clone());
            }
        }
    }
    let stack = |parts: &[Matrix<F>], cols: usize| -> Matrix<F> {
        parts
            .iter()
            .fold(Matrix::zero(0, cols), |acc, p| acc.vstack(p))
    };
    let ev = RepMorphism::new(
        x.clone(),
        target.clone(),
        [
            stack(&rows[0], x.dim(0)),
            stack(&rows[1], x.dim(1)),
            stack(&rows[2], x.dim(2)),
        ],
    )
    .expect("stacked morphisms commute componentwise");
    let fac = image_factor_l(&ev);
    Ok((fac.object, fac.epi))
}

/// Coreflector: the largest subrepresentation reached from allowed
/// indecomposables, with its inclusion.
pub fn coreflect<F: Field>(
    x: &QuiverRep<F>,
    i: &Subcategory,
) -> Result<(QuiverRep<F>, RepMorphism<F>), QuiverError> {
    if !i.closure_kind().allows_coreflective() {
        return Err(QuiverError::NotCoreflective);
    }
    let mut span: [Matrix<F>; 3] = [
        Matrix::zero(x.dim(0), 0),
        Matrix::zero(x.dim(1), 0),
        Matrix::zero(x.dim(2), 0),
    ];
    for &e in &i.allowed {
        let er: QuiverRep<F> = e.realize();
        for m in hom_space(&er, x) {
            for l in 0..3 {
                span[l] = span[l].hstack(m.phi(l));
            }
        }
    }
    let basis: Vec<Matrix<F>> = span.iter().map(column_space_basis).collect();
    let a_s = solve_matrix(&basis[1], &x.a().mul(&basis[0]))
        .expect("the trace is a subrepresentation");
    let b_s = solve_matrix(&basis[2], &x.b().mul(&basis[1]))
        .expect("the trace is a subrepresentation");
    let object = QuiverRep::new(a_s, b_s);
    let counit = RepMorphism::new(
        object.clone(),
        x.clone(),
        [basis[0].clone(), basis[1].clone(), basis[2].clone()],
    )
    .expect("inclusion of a subrepresentation commutes");
    Ok((object, counit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::rep::Indecomposable::*;
    use crate::scalar::F2;

    pub fn i1() -> Subcategory {
        Subcategory::new::<F2>(&[E1, E2, E3, E23, E123])
    }

    pub fn i2() -> Subcategory {
        Subcategory::new::<F2>(&[E1, E2, E3, E12, E123])
    }

    #[test]
    fn closure_kinds_of_the_two_examples() {
        assert_eq!(i1().closure_kind(), ClosureKind::Reflective);
        assert_eq!(i2().closure_kind(), ClosureKind::Coreflective);
        assert_eq!(Subcategory::all::<F2>().closure_kind(), ClosureKind::Both);
    }

    #[test]
    fn membership_follows_decomposition() {
        let e12: QuiverRep<F2> = E12.realize();
        assert!(!member(&e12, &i1()));
        assert!(member(&e12, &i2()));
        assert!(member(&E123.realize::<F2>(), &i1()));
    }

    #[test]
    fn reflector_sends_excluded_interval_to_its_socle_quotient() {
        let (r, unit) = reflect::<F2>(&E12.realize(), &i1()).unwrap();
        assert_eq!(r.dims(), E1.dims());
        assert!(!unit.is_zero_morphism());
        assert!(classify_l(&unit).epi);
    }

    #[test]
    fn reflector_fixes_members() {
        let (r, unit) = reflect::<F2>(&E1.realize(), &i1()).unwrap();
        assert_eq!(r.dims(), E1.dims());
        assert!(unit.is_iso());
    }

    #[test]
    fn reflector_is_additive() {
        let x = E12.realize::<F2>().direct_sum(&E3.realize());
        let (r, _) = reflect::<F2>(&x, &i1()).unwrap();
        let d = decompose(&r);
        assert_eq!(d.multiplicity(E1), 1);
        assert_eq!(d.multiplicity(E3), 1);
        assert_eq!(d.multiplicities.iter().sum::<usize>(), 2);
    }

    #[test]
    fn coreflector_sends_excluded_interval_to_its_socle() {
        let (s, counit) = coreflect::<F2>(&E23.realize(), &i2()).unwrap();
        assert_eq!(s.dims(), E3.dims());
        assert!(classify_l(&counit).mono);
    }

    #[test]
    fn coreflector_fixes_members_and_adds() {
        let (s, counit) = coreflect::<F2>(&E123.realize(), &i2()).unwrap();
        assert_eq!(s.dims(), E123.dims());
        assert!(counit.is_iso());

        let x = E23.realize::<F2>().direct_sum(&E1.realize());
        let (s, _) = coreflect::<F2>(&x, &i2()).unwrap();
        let d = decompose(&s);
        assert_eq!(d.multiplicity(E3), 1);
        assert_eq!(d.multiplicity(E1), 1);
        assert_eq!(d.multiplicities.iter().sum::<usize>(), 2);
    }
}
