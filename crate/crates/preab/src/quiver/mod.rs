//! Representations of the quiver `1 -> 2 -> 3`, their six
//! indecomposables, and the subcategory engine for reflective and
//! coreflective full subcategories generated by indecomposables.

mod decompose;
mod kops;
mod morphism;
mod ops;
mod rep;
mod scan;
mod subcat;

pub use decompose::{canonical_sum, decompose, Decomposition};
pub use kops::{
    classify_in_k, coim_im_factor, effective_union, k_cokernel, k_kernel, k_pullback, k_pushout,
    CoimImFactorization, EffectiveUnionReport, KFlags,
};
pub use morphism::{hom_dim, hom_space, solve_combination, QuiverError, RepMorphism};
pub use ops::{
    classify_l, cokernel_l, direct_sum_l, image_factor_l, kernel_l, pullback_l, pushout_l,
    RepCokernel, RepFlags, RepImage, RepKernel, RepPullback, RepPushout, RepSum,
};
pub use rep::{Indecomposable, QuiverRep, ALL_INDECOMPOSABLES};
pub use scan::{
    all_morphisms, is_regular_injective, k_objects, k_purity_lifting, mono_scan,
    semiabelian_scan, subrepresentations, InjectivityReport, MonoScanReport, SemiabelianReport,
};
pub use subcat::{coreflect, member, reflect, ClosureKind, Subcategory};
