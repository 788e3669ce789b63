//! JSON descriptions of concrete groups: permutation, matrix, tame
//! (abelian-by-finite), and direct products. These are the interchange format
//! for the command-line tools and the fixture catalog.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elem::ElemData;
use crate::error::{KernelError, Result};
use crate::group::Group;
use crate::realization::{Realization, TameCtx};
use crate::zmod;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    /// Permutations of {0, .., degree-1} given by image tables.
    Perm { degree: usize, generators: Vec<Vec<u16>> },
    /// Invertible dim x dim matrices over Z/p^k, rows nested.
    Matrix { p: u64, k: u32, dim: usize, generators: Vec<Vec<Vec<u32>>> },
    /// (Z/p^e)^rank twisted by a finite complement acting through `action`,
    /// one matrix per complement generator. On the wire the matrices travel
    /// under the key "matrices".
    Tame {
        p: u64,
        e: u32,
        rank: usize,
        complement: Box<GroupSpec>,
        #[serde(rename = "matrices")]
        action: Vec<Vec<Vec<u32>>>,
    },
    /// Direct product of the factors.
    Product { factors: Vec<GroupSpec> },
}

pub fn parse_group_spec(json: &str) -> Result<GroupSpec> {
    serde_json::from_str(json)
        .map_err(|e| KernelError::InvalidSpec(format!("group spec parse error: {e}")))
}

pub fn group_spec_to_json(spec: &GroupSpec) -> String {
    serde_json::to_string_pretty(spec).expect("group spec serializes")
}

fn flatten_matrix(m: &[Vec<u32>], dim: usize, modulus: u32) -> Result<Vec<u32>> {
    if m.len() != dim {
        return Err(KernelError::InvalidSpec(format!(
            "matrix has {} rows, expected {dim}",
            m.len()
        )));
    }
    let mut flat = Vec::with_capacity(dim * dim);
    for row in m {
        if row.len() != dim {
            return Err(KernelError::InvalidSpec(format!(
                "matrix row has {} entries, expected {dim}",
                row.len()
            )));
        }
        for &x in row {
            if x >= modulus {
                return Err(KernelError::InvalidSpec(format!(
                    "matrix entry {x} out of range for modulus {modulus}"
                )));
            }
            flat.push(x);
        }
    }
    Ok(flat)
}

fn prime_power_modulus(p: u64, k: u32) -> Result<u32> {
    if !zmod::is_prime(p) {
        return Err(KernelError::InvalidSpec(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(KernelError::InvalidSpec("exponent must be at least 1".into()));
    }
    let mut m: u64 = 1;
    for _ in 0..k {
        m = m.checked_mul(p).filter(|&x| x <= u32::MAX as u64).ok_or_else(|| {
            KernelError::InvalidSpec(format!("modulus {p}^{k} does not fit in 32 bits"))
        })?;
    }
    Ok(m as u32)
}

/// Builds the group a spec describes, enumerating up to `cap` elements.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<Group> {
    match spec {
        GroupSpec::Perm { degree, generators } => {
            if *degree > u16::MAX as usize {
                return Err(KernelError::InvalidSpec(format!(
                    "permutation degree {degree} exceeds {}",
                    u16::MAX
                )));
            }
            let gens: Vec<ElemData> =
                generators.iter().map(|g| ElemData::Perm(g.clone())).collect();
            // Realization::validate inside generate rejects non-permutations.
            Group::generate(Realization::Perm { degree: *degree }, &gens, cap)
        }
        GroupSpec::Matrix { p, k, dim, generators } => {
            let modulus = prime_power_modulus(*p, *k)?;
            let mut gens = Vec::with_capacity(generators.len());
            for m in generators {
                gens.push(ElemData::Mat(flatten_matrix(m, *dim, modulus)?));
            }
            let real = Realization::Matrix { p: *p, k: *k, dim: *dim, modulus };
            Group::generate(real, &gens, cap)
        }
        GroupSpec::Tame { p, e, rank, complement, action } => {
            let modulus = prime_power_modulus(*p, *e)?;
            if *rank == 0 {
                return Err(KernelError::InvalidSpec("torus rank must be at least 1".into()));
            }
            let w = build_group(complement, cap)?;
            let mut mats = Vec::with_capacity(action.len());
            for m in action {
                mats.push(flatten_matrix(m, *rank, modulus)?);
            }
            let ctx = TameCtx::new(*p, *e, *rank, Arc::new(w), mats)?;
            let mut gens: Vec<ElemData> = Vec::new();
            for i in 0..*rank {
                let mut v = vec![0u32; *rank];
                v[i] = 1;
                gens.push(ElemData::Tame { v, w: ctx.w.identity });
            }
            for &wid in &ctx.w.gens {
                gens.push(ElemData::Tame { v: vec![0; *rank], w: wid });
            }
            Group::generate(Realization::Tame(ctx), &gens, cap)
        }
        GroupSpec::Product { factors } => {
            if factors.is_empty() {
                return Err(KernelError::InvalidSpec("product needs at least one factor".into()));
            }
            let built: Vec<Group> =
                factors.iter().map(|f| build_group(f, cap)).collect::<Result<_>>()?;
            let reals: Vec<Realization> = built.iter().map(|g| g.realization.clone()).collect();
            let idents: Vec<ElemData> = reals.iter().map(|r| r.identity()).collect();
            let mut gens: Vec<ElemData> = Vec::new();
            for (i, g) in built.iter().enumerate() {
                for &gid in &g.gens {
                    let mut comps = idents.clone();
                    comps[i] = g.elems[gid as usize].clone();
                    gens.push(ElemData::Prod(comps));
                }
            }
            Group::generate(Realization::Product(reals), &gens, cap)
        }
    }
}

fn perm_vec(e: &ElemData) -> Vec<u16> {
    match e {
        ElemData::Perm(v) => v.clone(),
        _ => unreachable!("permutation realization holds permutation data"),
    }
}

fn mat_rows(flat: &[u32], dim: usize) -> Vec<Vec<u32>> {
    (0..dim).map(|r| flat[r * dim..(r + 1) * dim].to_vec()).collect()
}

/// Reconstructs a spec for a group from its realization and generators. For
/// products the generators are projected componentwise.
pub fn spec_of(g: &Group) -> GroupSpec {
    let gen_data: Vec<&ElemData> = g.gens.iter().map(|&i| &g.elems[i as usize]).collect();
    match &g.realization {
        Realization::Perm { degree } => GroupSpec::Perm {
            degree: *degree,
            generators: gen_data.iter().map(|e| perm_vec(e)).collect(),
        },
        Realization::Matrix { p, k, dim, .. } => GroupSpec::Matrix {
            p: *p,
            k: *k,
            dim: *dim,
            generators: gen_data
                .iter()
                .map(|e| match e {
                    ElemData::Mat(flat) => mat_rows(flat, *dim),
                    _ => unreachable!("matrix realization holds matrix data"),
                })
                .collect(),
        },
        Realization::Tame(ctx) => {
            let action: Vec<Vec<Vec<u32>>> = ctx
                .w
                .gens
                .iter()
                .map(|&wid| mat_rows(&ctx.wmats[wid as usize], ctx.rank))
                .collect();
            GroupSpec::Tame {
                p: ctx.p,
                e: ctx.e,
                rank: ctx.rank,
                complement: Box::new(spec_of(&ctx.w)),
                action,
            }
        }
        Realization::Product(reals) => {
            let mut factors = Vec::with_capacity(reals.len());
            for (i, real) in reals.iter().enumerate() {
                let comp_gens: Vec<ElemData> = gen_data
                    .iter()
                    .map(|e| match e {
                        ElemData::Prod(comps) => comps[i].clone(),
                        _ => unreachable!("product realization holds product data"),
                    })
                    .collect();
                let comp_group = Group::generate(real.clone(), &comp_gens, usize::MAX)
                    .expect("projection of an enumerated group stays enumerable");
                factors.push(spec_of(&comp_group));
            }
            GroupSpec::Product { factors }
        }
    }
}

/// A convenience for matrix fixtures assembled in code.
pub fn matrix_spec(p: u64, k: u32, dim: usize, generators: Vec<Vec<Vec<u32>>>) -> GroupSpec {
    GroupSpec::Matrix { p, k, dim, generators }
}
