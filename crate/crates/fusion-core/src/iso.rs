//! Isomorphism of fusion systems: a group isomorphism of the underlying
//! p-groups conjugating one morphism set onto the other.

use std::collections::HashSet;

use group_kernel::autgrp::{self, IsoVerdict};

use crate::error::{FusionError, Result};
use crate::map::SubMap;
use crate::system::FusionSystem;

#[derive(Clone, Debug)]
pub enum FusionIso {
    /// Element map S₁ → S₂ carrying the first system onto the second.
    Map(Vec<u32>),
    Absent,
}

pub const AUT_CAP: usize = 512;

/// Cheap class-level invariants that any isomorphism must preserve.
fn invariants(f: &FusionSystem) -> Vec<(usize, usize, u64)> {
    let mut v: Vec<(usize, usize, u64)> = f
        .classes
        .iter()
        .enumerate()
        .map(|(c, cl)| (f.amb.subs[cl.rep].order(), cl.members.len(), f.aut_order(c)))
        .collect();
    v.sort_unstable();
    v
}

/// Does ρ (an isomorphism of the underlying groups) carry f1 into f2?
/// Since ρ is bijective and the invariants already match, carrying every
/// generator-level map into f2 makes the images coincide.
fn carries(f1: &FusionSystem, f2: &FusionSystem, rho: &[u32]) -> bool {
    let a1 = &f1.amb;
    let a2 = &f2.amb;
    for cl in &f1.classes {
        for m in cl.to_rep.iter().chain(cl.outer.iter()) {
            let src_ids: Vec<u32> =
                a1.elems(m.src).iter().map(|&x| rho[x as usize]).collect();
            let src2 = a2.idx_of_ids(&src_ids);
            let img: Vec<u32> = {
                let mut pairs: Vec<(u32, u32)> = a1
                    .elems(m.src)
                    .iter()
                    .zip(&m.img)
                    .map(|(&x, &y)| (rho[x as usize], rho[y as usize]))
                    .collect();
                pairs.sort_unstable();
                pairs.into_iter().map(|p| p.1).collect()
            };
            let moved = SubMap { src: src2, img };
            if !f2.contains_map(&moved) {
                return false;
            }
        }
    }
    true
}

pub fn fusion_isomorphism(f1: &FusionSystem, f2: &FusionSystem) -> Result<FusionIso> {
    if f1.p != f2.p
        || f1.s().order() != f2.s().order()
        || invariants(f1) != invariants(f2)
        || f1.morphism_count() != f2.morphism_count()
    {
        return Ok(FusionIso::Absent);
    }
    let base = autgrp::group_isomorphism(f1.s(), f2.s());
    let rho0 = match (&base.verdict, base.witness) {
        (IsoVerdict::Isomorphic, Some(w)) => w.images,
        (IsoVerdict::NotIsomorphic, _) | (IsoVerdict::FingerprintsDiffer, _) => {
            return Ok(FusionIso::Absent)
        }
        _ => {
            return Err(FusionError::SearchFailed(
                "underlying group isomorphism search exceeded its budget".into(),
            ))
        }
    };
    let auts = autgrp::automorphisms(f1.s(), usize::MAX, AUT_CAP)?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for alpha in &auts {
        let rho: Vec<u32> = alpha.images.iter().map(|&x| rho0[x as usize]).collect();
        if !seen.insert(rho.clone()) {
            continue;
        }
        if carries(f1, f2, &rho) {
            return Ok(FusionIso::Map(rho));
        }
    }
    Ok(FusionIso::Absent)
}
