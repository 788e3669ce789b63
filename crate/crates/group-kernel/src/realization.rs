//! Realizations: the arithmetic context for each element kind.

use std::sync::Arc;

use crate::elem::ElemData;
use crate::error::{KernelError, Result};
use crate::group::Group;
use crate::zmat;
use crate::zmod;

#[derive(Clone, Debug)]
pub enum Realization {
    Perm { degree: usize },
    Matrix { p: u64, k: u32, dim: usize, modulus: u32 },
    Tame(Arc<TameCtx>),
    Product(Vec<Realization>),
}

/// Context for a torus extension (Z/p^e)^rank ⋊ W: the complement W as a built
/// group plus one action matrix per W element, extended from generator matrices
/// and checked to be a homomorphism.
#[derive(Debug)]
pub struct TameCtx {
    pub p: u64,
    pub e: u32,
    pub rank: usize,
    pub modulus: u32,
    pub w: Arc<Group>,
    pub wmats: Vec<Vec<u32>>,
}

impl TameCtx {
    pub fn new(
        p: u64,
        e: u32,
        rank: usize,
        w: Arc<Group>,
        gen_mats: Vec<Vec<u32>>,
    ) -> Result<Arc<TameCtx>> {
        let modulus = (p as u128).pow(e) as u64;
        if modulus > u32::MAX as u64 {
            return Err(KernelError::InvalidSpec("torus modulus exceeds u32".into()));
        }
        let modulus = modulus as u32;
        if gen_mats.len() != w.gens.len() {
            return Err(KernelError::InvalidSpec(format!(
                "complement has {} generators, {} action matrices given",
                w.gens.len(),
                gen_mats.len()
            )));
        }
        for m in &gen_mats {
            if m.len() != rank * rank {
                return Err(KernelError::InvalidSpec("action matrix has wrong shape".into()));
            }
            if zmat::mat_inv(rank, modulus, m).is_none() {
                return Err(KernelError::InvalidSpec("action matrix is singular".into()));
            }
        }
        // Extend generator matrices along the Cayley graph of W; any edge
        // disagreement means the assignment is not a homomorphism.
        let n = w.order();
        let mut wmats: Vec<Option<Vec<u32>>> = vec![None; n];
        wmats[w.identity as usize] = Some(zmat::mat_id(rank, modulus));
        let mut queue = std::collections::VecDeque::from([w.identity]);
        while let Some(cur) = queue.pop_front() {
            let cur_mat = wmats[cur as usize].clone().unwrap();
            for (gi, &g) in w.gens.iter().enumerate() {
                let nxt = w.mul(cur, g);
                let mat = zmat::mat_mul(rank, modulus, &cur_mat, &gen_mats[gi]);
                match &wmats[nxt as usize] {
                    None => {
                        wmats[nxt as usize] = Some(mat);
                        queue.push_back(nxt);
                    }
                    Some(prev) => {
                        if *prev != mat {
                            return Err(KernelError::NotHomomorphism(
                                "action matrices are inconsistent over the complement".into(),
                            ));
                        }
                    }
                }
            }
        }
        let wmats: Vec<Vec<u32>> = wmats
            .into_iter()
            .map(|m| m.ok_or_else(|| KernelError::InvalidSpec("complement generators do not generate it".into())))
            .collect::<Result<_>>()?;
        // Closure above fixes each wmat by one BFS path; recheck every edge.
        for cur in 0..n as u32 {
            for (gi, &g) in w.gens.iter().enumerate() {
                let nxt = w.mul(cur, g);
                let mat = zmat::mat_mul(rank, modulus, &wmats[cur as usize], &gen_mats[gi]);
                if wmats[nxt as usize] != mat {
                    return Err(KernelError::NotHomomorphism(
                        "action matrices are inconsistent over the complement".into(),
                    ));
                }
            }
        }
        Ok(Arc::new(TameCtx { p, e, rank, modulus, w, wmats }))
    }
}

impl Realization {
    pub fn identity(&self) -> ElemData {
        match self {
            Realization::Perm { degree } => ElemData::Perm((0..*degree as u16).collect()),
            Realization::Matrix { dim, modulus, .. } => ElemData::Mat(zmat::mat_id(*dim, *modulus)),
            Realization::Tame(ctx) => {
                ElemData::Tame { v: vec![0; ctx.rank], w: ctx.w.identity }
            }
            Realization::Product(parts) => {
                ElemData::Prod(parts.iter().map(|r| r.identity()).collect())
            }
        }
    }

    pub fn mul(&self, a: &ElemData, b: &ElemData) -> ElemData {
        match (self, a, b) {
            (Realization::Perm { .. }, ElemData::Perm(pa), ElemData::Perm(pb)) => {
                ElemData::Perm(pb.iter().map(|&i| pa[i as usize]).collect())
            }
            (Realization::Matrix { dim, modulus, .. }, ElemData::Mat(ma), ElemData::Mat(mb)) => {
                ElemData::Mat(zmat::mat_mul(*dim, *modulus, ma, mb))
            }
            (Realization::Tame(ctx), ElemData::Tame { v: v1, w: w1 }, ElemData::Tame { v: v2, w: w2 }) => {
                let moved = zmat::mat_vec(ctx.rank, ctx.modulus, &ctx.wmats[*w1 as usize], v2);
                let v = v1
                    .iter()
                    .zip(&moved)
                    .map(|(&x, &y)| zmod::add(x, y, ctx.modulus))
                    .collect();
                ElemData::Tame { v, w: ctx.w.mul(*w1, *w2) }
            }
            (Realization::Product(parts), ElemData::Prod(xa), ElemData::Prod(xb)) => ElemData::Prod(
                parts
                    .iter()
                    .zip(xa.iter().zip(xb))
                    .map(|(r, (x, y))| r.mul(x, y))
                    .collect(),
            ),
            _ => panic!("element data does not match realization"),
        }
    }

    pub fn inv(&self, a: &ElemData) -> ElemData {
        match (self, a) {
            (Realization::Perm { degree }, ElemData::Perm(pa)) => {
                let mut out = vec![0u16; *degree];
                for (i, &img) in pa.iter().enumerate() {
                    out[img as usize] = i as u16;
                }
                ElemData::Perm(out)
            }
            (Realization::Matrix { dim, modulus, .. }, ElemData::Mat(ma)) => {
                ElemData::Mat(zmat::mat_inv(*dim, *modulus, ma).expect("group element must be invertible"))
            }
            (Realization::Tame(ctx), ElemData::Tame { v, w }) => {
                let wi = ctx.w.inv(*w);
                let moved = zmat::mat_vec(ctx.rank, ctx.modulus, &ctx.wmats[wi as usize], v);
                let nv = moved.iter().map(|&x| zmod::neg(x, ctx.modulus)).collect();
                ElemData::Tame { v: nv, w: wi }
            }
            (Realization::Product(parts), ElemData::Prod(xs)) => {
                ElemData::Prod(parts.iter().zip(xs).map(|(r, x)| r.inv(x)).collect())
            }
            _ => panic!("element data does not match realization"),
        }
    }

    /// Structural validity of raw element data against this realization.
    pub fn validate(&self, a: &ElemData) -> Result<()> {
        match (self, a) {
            (Realization::Perm { degree }, ElemData::Perm(pa)) => {
                if pa.len() != *degree {
                    return Err(KernelError::InvalidSpec("permutation has wrong degree".into()));
                }
                let mut seen = vec![false; *degree];
                for &i in pa {
                    if (i as usize) >= *degree || seen[i as usize] {
                        return Err(KernelError::InvalidSpec("not a permutation".into()));
                    }
                    seen[i as usize] = true;
                }
                Ok(())
            }
            (Realization::Matrix { dim, modulus, .. }, ElemData::Mat(ma)) => {
                if ma.len() != dim * dim {
                    return Err(KernelError::InvalidSpec("matrix has wrong shape".into()));
                }
                if ma.iter().any(|&x| x >= *modulus) {
                    return Err(KernelError::InvalidSpec("matrix entry out of range".into()));
                }
                if zmat::mat_inv(*dim, *modulus, ma).is_none() {
                    return Err(KernelError::InvalidSpec("matrix is singular".into()));
                }
                Ok(())
            }
            (Realization::Tame(ctx), ElemData::Tame { v, w }) => {
                if v.len() != ctx.rank || v.iter().any(|&x| x >= ctx.modulus) {
                    return Err(KernelError::InvalidSpec("torus part out of range".into()));
                }
                if *w as usize >= ctx.w.order() {
                    return Err(KernelError::InvalidSpec("complement id out of range".into()));
                }
                Ok(())
            }
            (Realization::Product(parts), ElemData::Prod(xs)) => {
                if parts.len() != xs.len() {
                    return Err(KernelError::InvalidSpec("product tuple has wrong arity".into()));
                }
                for (r, x) in parts.iter().zip(xs) {
                    r.validate(x)?;
                }
                Ok(())
            }
            _ => Err(KernelError::InvalidSpec("element kind does not match realization".into())),
        }
    }
}
