//! Limits, colimits, and factorizations of abelian-group morphisms, all
//! computed through lattice arithmetic on presentations.

use super::group::FGAbGroup;
use super::morphism::{solve_morphism, AbError, AbMorphism, MorphismConstraint};
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Int;

/// Kernel as a presented group with its inclusion into the source.
pub struct KernelData {
    pub object: FGAbGroup,
    pub inclusion: AbMorphism,
}

/// Cokernel as a presented group with the projection from the target.
pub struct CokernelData {
    pub object: FGAbGroup,
    pub projection: AbMorphism,
}

/// Epi-mono factorization `f = m ∘ e` through the image.
pub struct ImageFactorization {
    pub image: FGAbGroup,
    pub epi: AbMorphism,
    pub mono: AbMorphism,
}

/// Biproduct with its structural injections and projections.
pub struct DirectSum {
    pub object: FGAbGroup,
    pub inj_left: AbMorphism,
    pub inj_right: AbMorphism,
    pub proj_left: AbMorphism,
    pub proj_right: AbMorphism,
}

/// Pushout corner with the two structural legs.
pub struct PushoutData {
    pub object: FGAbGroup,
    pub from_left: AbMorphism,
    pub from_right: AbMorphism,
}

/// Pullback corner with the two structural legs.
pub struct PullbackData {
    pub object: FGAbGroup,
    pub to_left: AbMorphism,
    pub to_right: AbMorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismFlags {
    pub mono: bool,
    pub epi: bool,
    pub split_mono: bool,
    pub split_epi: bool,
    pub iso: bool,
}

fn rows_from_lattice(l: &Lattice) -> Matrix<Int> {
    l.basis().transpose()
}

/// Kernel of `f: A -> B`: elements of `A` mapping into the relation
/// lattice of `B`, presented on a basis of that preimage lattice.
pub fn kernel(f: &AbMorphism) -> KernelData {
    let pre = f.dst().relation_lattice().preimage(f.matrix());
    let gens = pre.basis().clone();
    let inner = f.src().relation_lattice().preimage(&gens);
    let object = FGAbGroup::new(gens.cols(), rows_from_lattice(&inner));
    let inclusion = AbMorphism::new(object.clone(), f.src().clone(), gens)
        .expect("kernel relations land in the source relation lattice");
    KernelData { object, inclusion }
}

/// Cokernel of `f: A -> B`: same generators as `B`, with the columns of
/// `f` adjoined as relations.
pub fn cokernel(f: &AbMorphism) -> CokernelData {
    let extra = f.matrix().transpose();
    let rels = f.dst().relations().vstack(&extra);
    let object = FGAbGroup::new(f.dst().generators(), rels);
    let projection = AbMorphism::new(
        f.dst().clone(),
        object.clone(),
        Matrix::identity(f.dst().generators()),
    )
    .expect("relations of the target survive in the quotient");
    CokernelData { object, projection }
}

/// Epi-mono factorization of `f: A -> B`: the image keeps the generators
/// of `A` and takes the full preimage lattice as relations.
pub fn image_factor(f: &AbMorphism) -> ImageFactorization {
    let pre = f.dst().relation_lattice().preimage(f.matrix());
    let image = FGAbGroup::new(f.src().generators(), rows_from_lattice(&pre));
    let epi = AbMorphism::new(
        f.src().clone(),
        image.clone(),
        Matrix::identity(f.src().generators()),
    )
    .expect("source relations land in the enlarged lattice");
    let mono = AbMorphism::new(image.clone(), f.dst().clone(), f.matrix().clone())
        .expect("the preimage lattice maps into the target relations");
    ImageFactorization { image, epi, mono }
}

pub fn direct_sum(a: &FGAbGroup, b: &FGAbGroup) -> DirectSum {
    let (na, nb) = (a.generators(), b.generators());
    let rels = a.relations().block_diag(b.relations());
    let object = FGAbGroup::new(na + nb, rels);
    let mut ia = Matrix::zero(na + nb, na);
    let mut ib = Matrix::zero(na + nb, nb);
    for j in 0..na {
        ia[(j, j)] = Int::from(1);
    }
    for j in 0..nb {
        ib[(na + j, j)] = Int::from(1);
    }
    let inj_left = AbMorphism::new(a.clone(), object.clone(), ia.clone()).expect("block inclusion");
    let inj_right =
        AbMorphism::new(b.clone(), object.clone(), ib.clone()).expect("block inclusion");
    let proj_left =
        AbMorphism::new(object.clone(), a.clone(), ia.transpose()).expect("block projection");
    let proj_right =
        AbMorphism::new(object.clone(), b.clone(), ib.transpose()).expect("block projection");
    DirectSum {
        object,
        inj_left,
        inj_right,
        proj_left,
        proj_right,
    }
}

/// Pushout of the span `A <-f- D -g-> B`.
pub fn pushout(f: &AbMorphism, g: &AbMorphism) -> Result<PushoutData, AbError> {
    if f.src() != g.src() {
        return Err(AbError::CornerMismatch);
    }
    let sum = direct_sum(f.dst(), g.dst());
    let (na, nb) = (f.dst().generators(), g.dst().generators());
    let nd = f.src().generators();
    let mut glue = Matrix::zero(nd, na + nb);
    for d in 0..nd {
        for i in 0..na {
            glue[(d, i)] = f.matrix()[(i, d)].clone();
        }
        for i in 0..nb {
            glue[(d, na + i)] = -g.matrix()[(i, d)].clone();
        }
    }
    let rels = sum.object.relations().vstack(&glue);
    let object = FGAbGroup::new(na + nb, rels);
    let from_left = AbMorphism::new(f.dst().clone(), object.clone(), sum.inj_left.matrix().clone())
        .expect("relations only grow");
    let from_right = AbMorphism::new(
        g.dst().clone(),
        object.clone(),
        sum.inj_right.matrix().clone(),
    )
    .expect("relations only grow");
    Ok(PushoutData {
        object,
        from_left,
        from_right,
    })
}

/// Pullback of the cospan `A -f-> C <-g- B`.
pub fn pullback(f: &AbMorphism, g: &AbMorphism) -> Result<PullbackData, AbError> {
    if f.dst() != g.dst() {
        return Err(AbError::CornerMismatch);
    }
    let sum = direct_sum(f.src(), g.src());
    let diff = f
        .matrix()
        .mul(sum.proj_left.matrix())
        .sub(&g.matrix().mul(sum.proj_right.matrix()));
    let combined = AbMorphism::new(sum.object.clone(), f.dst().clone(), diff)
        .expect("difference of well-defined maps");
    let k = kernel(&combined);
    let to_left = sum
        .proj_left
        .compose(&k.inclusion)
        .expect("kernel includes into the sum");
    let to_right = sum
        .proj_right
        .compose(&k.inclusion)
        .expect("kernel includes into the sum");
    Ok(PullbackData {
        object: k.object,
        to_left,
        to_right,
    })
}

/// Looks for a diagonal in the commuting square
/// `top ∘ ? = ?` precisely: given `left: A -> B`, `right: X -> Y`,
/// `top: A -> X`, `bottom: B -> Y` with `right ∘ top = bottom ∘ left`,
/// finds `d: B -> X` with `d ∘ left = top` and `right ∘ d = bottom`.
pub fn has_rlp(
    left: &AbMorphism,
    right: &AbMorphism,
    top: &AbMorphism,
    bottom: &AbMorphism,
) -> Result<Option<AbMorphism>, AbError> {
    if top.src() != left.src()
        || top.dst() != right.src()
        || bottom.src() != left.dst()
        || bottom.dst() != right.dst()
    {
        return Err(AbError::CornerMismatch);
    }
    if !right
        .compose(top)?
        .eq_morphism(&bottom.compose(left)?)
    {
        return Err(AbError::NonCommutingSquare);
    }
    let constraints = [
        MorphismConstraint::post(left.matrix().clone(), top.matrix().clone(), right.src()),
        MorphismConstraint::pre(right.matrix().clone(), bottom.matrix().clone(), right.dst()),
    ];
    Ok(solve_morphism(left.dst(), right.src(), &constraints).map(|s| s.morphism))
}

/// Monicity, epicity, and splitting of `f`, decided exactly.
pub fn classify(f: &AbMorphism) -> MorphismFlags {
    let mono = kernel(f).object.is_zero_group();
    let epi = cokernel(f).object.is_zero_group();
    let split_mono = mono
        && solve_morphism(
            f.dst(),
            f.src(),
            &[MorphismConstraint::post(
                f.matrix().clone(),
                Matrix::identity(f.src().generators()),
                f.src(),
            )],
        )
        .is_some();
    let split_epi = epi
        && solve_morphism(
            f.dst(),
            f.src(),
            &[MorphismConstraint::pre(
                f.matrix().clone(),
                Matrix::identity(f.dst().generators()),
                f.dst(),
            )],
        )
        .is_some();
    MorphismFlags {
        mono,
        epi,
        split_mono,
        split_epi,
        iso: mono && epi,
    }
}
