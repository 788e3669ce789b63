//! Structure analysis for finite p-groups: omega/agemo layers, the
//! subexponent invariant with witness chief series, homocyclic detection,
//! large normal abelian subgroups with self-centralizing layers, p-ranks,
//! and correction-map enumeration for abelian pairs.

pub mod error;
pub mod expt;
pub mod homocyclic;
pub mod largeabel;
pub mod omega;
pub mod ranks;
pub mod subexp;

pub use error::{AnalysisError, Result};
pub use expt::{correction_exponent, correction_maps, CorrectionMaps};
pub use homocyclic::{abelian_basis, is_homocyclic};
pub use largeabel::{find_large_abelian, FoundLargeAbelian, LargeAbelianReport};
pub use omega::{
    agemo_layer, frattini, generator_rank, is_p_subgroup, omega_layer, p_group_prime,
    upper_central_pair,
};
pub use ranks::{p_ranks, srk_bound, PRanks};
pub use subexp::{subexp_witness, subexponent, ChiefSeries, ChiefStep, Subexponent};
