//! JSON interchange: declared fusion data (a Sylow group plus generator
//! automorphisms) and the canonical serialized form of a computed system.
//! Serialization is deterministic, so golden files compare byte for byte.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use group_kernel::spec_io::{build_group, GroupSpec};

use crate::build::{generated_fusion, GeneratorDatum};
use crate::error::{FusionError, Result};
use crate::map::{Ambient, SubMap};
use crate::system::{FClass, FusionSystem};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionSpecFile {
    pub sylow: GroupSpec,
    #[serde(default)]
    pub generators: Vec<DatumFile>,
}

/// Subgroup generators by element id, automorphisms by generator images.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumFile {
    pub subgroup: Vec<u32>,
    pub automorphisms: Vec<Vec<u32>>,
}

pub fn parse_fusion_spec(json: &str) -> Result<FusionSpecFile> {
    serde_json::from_str(json)
        .map_err(|e| FusionError::InvalidDatum(format!("fusion spec parse error: {e}")))
}

pub fn fusion_spec_to_json(spec: &FusionSpecFile) -> String {
    serde_json::to_string_pretty(spec).expect("fusion spec serializes")
}

/// Build the declared system: the group from its spec, then the generated
/// fusion closure.
pub fn build_fusion(spec: &FusionSpecFile, p: u64, cap: usize) -> Result<FusionSystem> {
    let s = Arc::new(build_group(&spec.sylow, cap)?);
    let data: Vec<GeneratorDatum> = spec
        .generators
        .iter()
        .map(|d| GeneratorDatum {
            subgroup: d.subgroup.clone(),
            automorphisms: d.automorphisms.clone(),
        })
        .collect();
    generated_fusion(s, p, &data, cap)
}

/// One fusion class in the canonical system file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassRow {
    pub order: usize,
    pub rep: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    /// Image lists, each aligned with the sorted elements of its member.
    pub to_rep: Vec<Vec<u32>>,
    pub automizer_order: u64,
    /// Canonical outer automizer labels on the representative.
    pub outer: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    pub sylow: GroupSpec,
    pub prime: u64,
    pub order: u64,
    pub class_count: usize,
    pub saturated: bool,
    pub classes: Vec<ClassRow>,
}

pub fn system_to_file(f: &FusionSystem) -> SystemFile {
    let amb = &f.amb;
    let classes: Vec<ClassRow> = f
        .classes
        .iter()
        .enumerate()
        .map(|(c, cl)| ClassRow {
            order: amb.subs[cl.rep].order(),
            rep: amb.elems(cl.rep).to_vec(),
            members: cl.members.iter().map(|&m| amb.elems(m).to_vec()).collect(),
            to_rep: cl.to_rep.iter().map(|m| m.img.clone()).collect(),
            automizer_order: f.aut_order(c),
            outer: cl.outer.iter().map(|m| m.img.clone()).collect(),
        })
        .collect();
    SystemFile {
        sylow: group_kernel::spec_io::spec_of(&amb.s),
        prime: f.p,
        order: amb.s.order() as u64,
        class_count: classes.len(),
        saturated: f.is_saturated(),
        classes,
    }
}

pub fn system_to_json(f: &FusionSystem) -> String {
    serde_json::to_string_pretty(&system_to_file(f)).expect("system file serializes")
}

/// Rebuild a system from its canonical file. The class table is trusted but
/// revalidated structurally: each stored map must be a morphism.
pub fn system_from_file(file: &SystemFile, cap: usize) -> Result<FusionSystem> {
    let s = Arc::new(build_group(&file.sylow, cap)?);
    s.ensure_mul_table();
    let amb = Ambient::new(Arc::clone(&s), file.prime, cap)?;
    let mut classes: Vec<FClass> = Vec::with_capacity(file.classes.len());
    for row in &file.classes {
        let rep = amb.idx_of_ids(&row.rep);
        let members: Vec<usize> =
            row.members.iter().map(|ids| amb.idx_of_ids(ids)).collect();
        let to_rep: Vec<SubMap> = members
            .iter()
            .zip(&row.to_rep)
            .map(|(&m, img)| SubMap { src: m, img: img.clone() })
            .collect();
        let outer: Vec<SubMap> = row
            .outer
            .iter()
            .map(|img| SubMap { src: rep, img: img.clone() })
            .collect();
        for m in to_rep.iter().chain(outer.iter()) {
            if !m.is_homomorphism(&amb) {
                return Err(FusionError::InvalidDatum(
                    "stored class table contains a non-morphism".into(),
                ));
            }
        }
        classes.push(FClass::new(rep, members, to_rep, outer));
    }
    Ok(FusionSystem::new(amb, file.prime, classes))
}

pub fn system_from_json(json: &str, cap: usize) -> Result<FusionSystem> {
    let file: SystemFile = serde_json::from_str(json)
        .map_err(|e| FusionError::InvalidDatum(format!("system file parse error: {e}")))?;
    system_from_file(&file, cap)
}
