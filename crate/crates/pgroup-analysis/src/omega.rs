//! Ω-layers, Frattini subgroups and the lower central structure used by the
//! other analyses.

use group_kernel::group::Group;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::zmod;

use crate::error::{AnalysisError, Result};

/// The unique prime dividing the order, when the order is a prime power > 1.
pub fn p_group_prime(g: &Group) -> Option<u64> {
    let n = g.order() as u64;
    if n == 1 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return (n == zmod::p_part(n, p)).then_some(p);
        }
        p += 1;
    }
    Some(n)
}

pub fn is_p_subgroup(h: &Subgroup, p: u64) -> bool {
    h.order() as u64 == zmod::p_part(h.order() as u64, p)
}

/// Ω_n(P): the subgroup generated by elements of P of order dividing p^n.
pub fn omega_layer(g: &Group, h: &Subgroup, p: u64, n: u32) -> Result<Subgroup> {
    if !is_p_subgroup(h, p) {
        return Err(AnalysisError::NotPGroup(p));
    }
    let bound = p.checked_pow(n).unwrap_or(u64::MAX);
    let gens: Vec<u32> = h
        .elems
        .iter()
        .copied()
        .filter(|&x| (g.order_of(x) as u64) <= bound)
        .collect();
    Ok(subgroup::generate(g, &gens))
}

/// ℧_n(P): the subgroup generated by p^n-th powers.
pub fn agemo_layer(g: &Group, h: &Subgroup, p: u64, n: u32) -> Result<Subgroup> {
    if !is_p_subgroup(h, p) {
        return Err(AnalysisError::NotPGroup(p));
    }
    let q = p.checked_pow(n).and_then(|x| i64::try_from(x).ok()).unwrap_or(i64::MAX);
    let gens: Vec<u32> = h.elems.iter().map(|&x| g.pow(x, q)).collect();
    Ok(subgroup::generate(g, &gens))
}

/// Frattini subgroup of a p-group: commutators and p-th powers.
pub fn frattini(g: &Group, h: &Subgroup, p: u64) -> Result<Subgroup> {
    if !is_p_subgroup(h, p) {
        return Err(AnalysisError::NotPGroup(p));
    }
    let mut gens: Vec<u32> = h.elems.iter().map(|&x| g.pow(x, p as i64)).collect();
    for &a in &h.gens {
        for &b in &h.gens {
            gens.push(g.comm(a, b));
        }
    }
    // The commutators of generators normally generate the derived subgroup;
    // close under conjugation by h.
    let mut cur = subgroup::generate(g, &gens);
    loop {
        let extra: Vec<u32> = h
            .gens
            .iter()
            .flat_map(|&x| cur.gens.clone().into_iter().map(move |e| (x, e)))
            .map(|(x, e)| g.conj(x, e))
            .filter(|&y| !cur.contains(y))
            .collect();
        if extra.is_empty() {
            break;
        }
        cur = subgroup::extend(g, &cur, &extra);
    }
    Ok(cur)
}

/// Minimal generator count of a p-group: log_p of the Frattini quotient index.
pub fn generator_rank(g: &Group, h: &Subgroup, p: u64) -> Result<u32> {
    let phi = frattini(g, h, p)?;
    let index = (h.order() / phi.order()) as u64;
    Ok(zmod::valuation(index, p))
}

/// (Z(S), Z₂(S)): the center and the preimage of the center of S/Z(S).
pub fn upper_central_pair(g: &Group) -> (Subgroup, Subgroup) {
    let z = subgroup::center(g);
    let ids: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| g.gens.iter().all(|&s| z.contains(g.comm(x, s))))
        .collect();
    let z2 = subgroup::from_closed_set(g, &ids);
    (z, z2)
}
