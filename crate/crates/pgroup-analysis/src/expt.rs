//! Automorphisms of an abelian group A that fix a subgroup B pointwise and
//! act trivially on A/B.  Each such map is a ↦ a·h(aB) for a homomorphism
//! h: A/B → B, so they are enumerated through h, never by filtering Aut(A).

use group_kernel::autgrp::Hom;
use group_kernel::group::{lcm_u64, Group};
use group_kernel::quotient;
use group_kernel::subgroup::Subgroup;

use crate::error::{AnalysisError, Result};
use crate::homocyclic::abelian_basis;

pub struct CorrectionMaps {
    pub maps: Vec<Hom>,
    pub exponent: u64,
}

/// All automorphisms of abelian `a` restricting to the identity on `b` with
/// image offsets inside `b`.  The count is |Hom(A/B, B)| and the exponent is
/// gcd(exp B, exp A/B).
pub fn correction_maps(a: &Group, b: &Subgroup) -> Result<CorrectionMaps> {
    if !a.is_abelian() {
        return Err(AnalysisError::NotAbelian);
    }
    let q = quotient::quotient(a, b)?;
    let basis = abelian_basis(&q.group)?;
    let radix: Vec<u64> = basis.iter().map(|&x| q.group.order_of(x) as u64).collect();

    // Mixed-radix coordinates of every quotient element in the chosen basis.
    let qn = q.group.order() as usize;
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; qn];
    let mut tuple = vec![0u64; basis.len()];
    loop {
        let mut x = q.group.identity;
        for (i, &bi) in basis.iter().enumerate() {
            x = q.group.mul(x, q.group.pow(bi, tuple[i] as i64));
        }
        debug_assert!(coords[x as usize].is_none());
        coords[x as usize] = Some(tuple.clone());
        let mut i = 0;
        loop {
            if i == basis.len() {
                break;
            }
            tuple[i] += 1;
            if tuple[i] < radix[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == basis.len() {
            break;
        }
    }
    let coords: Vec<Vec<u64>> = coords.into_iter().map(|c| c.expect("basis spans quotient")).collect();

    // For each basis position, images must satisfy y^{d_i} = 1 inside B.
    let candidates: Vec<Vec<u32>> = radix
        .iter()
        .map(|&d| {
            b.elems
                .iter()
                .copied()
                .filter(|&y| a.pow(y, d as i64) == a.identity)
                .collect()
        })
        .collect();

    let mut maps = Vec::new();
    let mut exponent = 1u64;
    let mut pick = vec![0usize; candidates.len()];
    loop {
        let ys: Vec<u32> = pick.iter().enumerate().map(|(i, &j)| candidates[i][j]).collect();
        let mut images = vec![0u32; a.order() as usize];
        for xid in a.all_ids() {
            let c = &coords[q.proj[xid as usize] as usize];
            let mut off = a.identity;
            for (i, &y) in ys.iter().enumerate() {
                off = a.mul(off, a.pow(y, c[i] as i64));
            }
            images[xid as usize] = a.mul(xid, off);
        }
        let hom = Hom { images };
        debug_assert!(hom.is_bijective(a.order() as usize));
        let ord = ys.iter().fold(1u64, |m, &y| lcm_u64(m, a.order_of(y) as u64));
        exponent = lcm_u64(exponent, ord);
        maps.push(hom);

        let mut i = 0;
        loop {
            if i == pick.len() {
                break;
            }
            pick[i] += 1;
            if pick[i] < candidates[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            break;
        }
    }
    Ok(CorrectionMaps { maps, exponent })
}

pub fn correction_exponent(a: &Group, b: &Subgroup) -> Result<u64> {
    Ok(correction_maps(a, b)?.exponent)
}
