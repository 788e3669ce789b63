//! Fusion systems over finite p-groups: construction from ambient groups or
//! declared generator data, saturation checking, subgroup classification,
//! certificates, quotients, products, and isomorphism testing.

pub mod alperin;
pub mod build;
pub mod classify;
pub mod error;
pub mod iso;
pub mod lift;
pub mod map;
pub mod of_group;
pub mod product;
pub mod quotient;
pub mod saturation;
pub mod spec_io;
pub mod system;

pub use alperin::{certificate_hosts, morphism_certificate, AlperinWord, Certificate, WordStep};
pub use build::{generated_fusion, inner_fusion, is_p_group, GeneratorDatum, CLOSURE_CAP};
pub use classify::{
    classify_subgroup, element_fusion, has_strongly_p_embedded, outer_group,
    strongly_closed_lattice, ElementFusion, StronglyClosedLattice, SubgroupFlags,
};
pub use error::{FusionError, Result};
pub use iso::{fusion_isomorphism, FusionIso, AUT_CAP};
pub use lift::{lift_mod_q, normalizer_map_exists};
pub use map::{submap_from_gen_images, Ambient, SubMap};
pub use of_group::{fusion_of_group, fusion_of_group_sylow, sylow_subgroup, GroupFusion};
pub use product::{product_fusion, ProductFusion};
pub use quotient::{quotient_fusion, QuotientFusion};
pub use saturation::{
    saturation_check, Axiom, ClassSummary, SaturationFailure, SaturationReport,
};
pub use spec_io::{
    build_fusion, fusion_spec_to_json, parse_fusion_spec, system_from_json, system_to_json,
    DatumFile, FusionSpecFile, SystemFile,
};
pub use system::{FClass, FusionSystem};
