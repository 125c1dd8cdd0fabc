//! Ambient abelian-category operations on quiver representations,
//! computed level by level with induced structure maps.

use super::morphism::{QuiverError, RepMorphism};
use super::rep::QuiverRep;
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::solve::{column_space_basis, nullspace, quotient_projection, solve_matrix};

pub struct RepKernel<F: Field> {
    pub object: QuiverRep<F>,
    pub inclusion: RepMorphism<F>,
}

pub struct RepCokernel<F: Field> {
    pub object: QuiverRep<F>,
    pub projection: RepMorphism<F>,
}

pub struct RepImage<F: Field> {
    pub object: QuiverRep<F>,
    pub epi: RepMorphism<F>,
    pub mono: RepMorphism<F>,
}

pub struct RepSum<F: Field> {
    pub object: QuiverRep<F>,
    pub inj_left: RepMorphism<F>,
    pub inj_right: RepMorphism<F>,
    pub proj_left: RepMorphism<F>,
    pub proj_right: RepMorphism<F>,
}

pub struct RepPushout<F: Field> {
    pub object: QuiverRep<F>,
    pub from_left: RepMorphism<F>,
    pub from_right: RepMorphism<F>,
}

pub struct RepPullback<F: Field> {
    pub object: QuiverRep<F>,
    pub to_left: RepMorphism<F>,
    pub to_right: RepMorphism<F>,
}

/// Kernel: componentwise nullspaces with the restricted structure maps.
pub fn kernel_l<F: Field>(f: &RepMorphism<F>) -> RepKernel<F> {
    let n: Vec<Matrix<F>> = (0..3).map(|l| nullspace(f.phi(l))).collect();
    let x = f.src();
    // a maps ker(phi1) into ker(phi2), so solve for the restriction.
    let ak = solve_matrix(&n[1], &x.a().mul(&n[0])).expect("kernel is a subrepresentation");
    let bk = solve_matrix(&n[2], &x.b().mul(&n[1])).expect("kernel is a subrepresentation");
    let object = QuiverRep::new(ak, bk);
    let inclusion = RepMorphism::new(
        object.clone(),
        x.clone(),
        [n[0].clone(), n[1].clone(), n[2].clone()],
    )
    .expect("inclusion commutes by construction");
    RepKernel { object, inclusion }
}

/// Cokernel: componentwise quotients by the image columns.
pub fn cokernel_l<F: Field>(f: &RepMorphism<F>) -> RepCokernel<F> {
    let p: Vec<Matrix<F>> = (0..3).map(|l| quotient_projection(f.phi(l))).collect();
    let y = f.dst();
    // Induced map: a_C P1 = P2 a_Y, solved through the transpose.
    let ac = solve_matrix(&p[0].transpose(), &p[1].mul(y.a()).transpose())
        .expect("the induced map exists on the quotient")
        .transpose();
    let bc = solve_matrix(&p[1].transpose(), &p[2].mul(y.b()).transpose())
        .expect("the induced map exists on the quotient")
        .transpose();
    let object = QuiverRep::new(ac, bc);
    let projection = RepMorphism::new(
        y.clone(),
        object.clone(),
        [p[0].clone(), p[1].clone(), p[2].clone()],
    )
    .expect("projection commutes by construction");
    RepCokernel { object, projection }
}

/// Epi-mono factorization through the componentwise image.
pub fn image_factor_l<F: Field>(f: &RepMorphism<F>) -> RepImage<F> {
    let m: Vec<Matrix<F>> = (0..3).map(|l| column_space_basis(f.phi(l))).collect();
    let x = f.src();
    let ai = solve_matrix(&m[1], &f.dst().a().mul(&m[0])).expect("image is a subrepresentation");
    let bi = solve_matrix(&m[2], &f.dst().b().mul(&m[1])).expect("image is a subrepresentation");
    let object = QuiverRep::new(ai, bi);
    let mono = RepMorphism::new(
        object.clone(),
        f.dst().clone(),
        [m[0].clone(), m[1].clone(), m[2].clone()],
    )
    .expect("image includes into the target");
    let e: Vec<Matrix<F>> = (0..3)
        .map(|l| solve_matrix(&m[l], f.phi(l)).expect("columns of f lie in its image"))
        .collect();
    let epi = RepMorphism::new(
        x.clone(),
        object.clone(),
        [e[0].clone(), e[1].clone(), e[2].clone()],
    )
    .expect("corestriction commutes");
    RepImage { object, epi, mono }
}

pub fn direct_sum_l<F: Field>(x: &QuiverRep<F>, y: &QuiverRep<F>) -> RepSum<F> {
    let object = x.direct_sum(y);
    let block = |top: bool, l: usize| -> Matrix<F> {
        let (dx, dy) = (x.dim(l), y.dim(l));
        let mut m = Matrix::zero(dx + dy, if top { dx } else { dy });
        for j in 0..m.cols() {
            let i = if top { j } else { dx + j };
            m[(i, j)] = F::one();
        }
        m
    };
    let il = [block(true, 0), block(true, 1), block(true, 2)];
    let ir = [block(false, 0), block(false, 1), block(false, 2)];
    let inj_left = RepMorphism::new(x.clone(), object.clone(), il.clone()).expect("block maps");
    let inj_right = RepMorphism::new(y.clone(), object.clone(), ir.clone()).expect("block maps");
    let proj_left = RepMorphism::new(
        object.clone(),
        x.clone(),
        [il[0].transpose(), il[1].transpose(), il[2].transpose()],
    )
    .expect("block maps");
    let proj_right = RepMorphism::new(
        object.clone(),
        y.clone(),
        [ir[0].transpose(), ir[1].transpose(), ir[2].transpose()],
    )
    .expect("block maps");
    RepSum {
        object,
        inj_left,
        inj_right,
        proj_left,
        proj_right,
    }
}

fn difference<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
) -> Result<RepMorphism<F>, QuiverError> {
    if f.src() != g.src() || f.dst() != g.dst() {
        return Err(QuiverError::CornerMismatch);
    }
    RepMorphism::new(
        f.src().clone(),
        f.dst().clone(),
        [
            f.phi(0).sub(g.phi(0)),
            f.phi(1).sub(g.phi(1)),
            f.phi(2).sub(g.phi(2)),
        ],
    )
}

/// Pushout of the span `A <-f- D -g-> B` as the cokernel of `(f, -g)`.
pub fn pushout_l<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
) -> Result<RepPushout<F>, QuiverError> {
    if f.src() != g.src() {
        return Err(QuiverError::CornerMismatch);
    }
    let sum = direct_sum_l(f.dst(), g.dst());
    let lhs = sum.inj_left.compose(f)?;
    let rhs = sum.inj_right.compose(g)?;
    let diff = difference(&lhs, &rhs)?;
    let coker = cokernel_l(&diff);
    Ok(RepPushout {
        object: coker.object,
        from_left: coker.projection.compose(&sum.inj_left)?,
        from_right: coker.projection.compose(&sum.inj_right)?,
    })
}

/// Pullback of the cospan `A -f-> C <-g- B` as the kernel of `f - g` on
/// the sum.
pub fn pullback_l<F: Field>(
    f: &RepMorphism<F>,
    g: &RepMorphism<F>,
) -> Result<RepPullback<F>, QuiverError> {
    if f.dst() != g.dst() {
        return Err(QuiverError::CornerMismatch);
    }
    let sum = direct_sum_l(f.src(), g.src());
    let lhs = f.compose(&sum.proj_left)?;
    let rhs = g.compose(&sum.proj_right)?;
    let diff = difference(&lhs, &rhs)?;
    let ker = kernel_l(&diff);
    Ok(RepPullback {
        object: ker.object,
        to_left: sum.proj_left.compose(&ker.inclusion)?,
        to_right: sum.proj_right.compose(&ker.inclusion)?,
    })
}

/// Componentwise flags in the ambient category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepFlags {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

pub fn classify_l<F: Field>(f: &RepMorphism<F>) -> RepFlags {
    let mono = (0..3).all(|l| crate::solve::rank(f.phi(l)) == f.src().dim(l));
    let epi = (0..3).all(|l| crate::solve::rank(f.phi(l)) == f.dst().dim(l));
    RepFlags {
        mono,
        epi,
        iso: mono && epi,
    }
}
