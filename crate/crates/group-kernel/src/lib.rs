//! Finite group kernel: enumerated groups over several element realizations,
//! subgroup and quotient machinery, conjugacy, Sylow subgroups, subgroup
//! lattices, automorphisms, and JSON group descriptions.

pub mod autgrp;
pub mod bits;
pub mod conjugacy;
pub mod elem;
pub mod error;
pub mod group;
pub mod lattice;
pub mod quotient;
pub mod realization;
pub mod spec_io;
pub mod subgroup;
pub mod sylow;
pub mod zmat;
pub mod zmod;

pub use autgrp::{
    abelian_invariants, automorphism_group, automorphisms, fingerprint, group_isomorphism,
    hom_from_gen_images, Fingerprint, Hom, IsoResult, IsoVerdict,
};
pub use elem::ElemData;
pub use error::{KernelError, Result};
pub use group::{Group, DEFAULT_AUT_CAP, DEFAULT_ENUM_CAP, DEFAULT_LATTICE_CAP};
pub use realization::{Realization, TameCtx};
pub use spec_io::{build_group, group_spec_to_json, parse_group_spec, spec_of, GroupSpec};
pub use subgroup::Subgroup;
