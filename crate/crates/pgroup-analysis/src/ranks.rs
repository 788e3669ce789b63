//! p-rank (largest elementary abelian subgroup) and sectional p-rank (largest
//! generator count over p-subgroups), with the linear-group ceiling used by
//! the characteristic-zero obstruction reports.

use group_kernel::group::Group;
use group_kernel::lattice;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::sylow;
use group_kernel::zmod;

use crate::error::Result;
use crate::omega;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PRanks {
    pub rank: u32,
    pub sectional_rank: u32,
}

fn is_elementary_abelian(g: &Group, h: &Subgroup, p: u64) -> bool {
    h.elems.iter().all(|&x| {
        let o = g.order_of(x) as u64;
        o == 1 || o == p
    }) && h.gens.iter().all(|&a| h.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Both ranks are invariant under conjugation, so the p-subgroups of one
/// Sylow subgroup see every value.
pub fn p_ranks(g: &Group, p: u64, cap: usize) -> Result<PRanks> {
    let syl = sylow::sylow(g, p);
    if syl.order() == 1 {
        return Ok(PRanks { rank: 0, sectional_rank: 0 });
    }
    let (sp, _) = subgroup::lift(g, &syl);
    let subs = lattice::all_subgroups(&sp, None, cap)?;
    let mut rank = 0u32;
    let mut sectional = 0u32;
    for h in &subs {
        if is_elementary_abelian(&sp, h, p) {
            rank = rank.max(zmod::valuation(h.order() as u64, p));
        }
        sectional = sectional.max(omega::generator_rank(&sp, h, p)?);
    }
    Ok(PRanks { rank, sectional_rank: sectional })
}

/// Ceiling for the sectional p-rank of a compact-Lie-type group of rank n:
/// ⌊pn/(p−1)⌋.
pub fn srk_bound(p: u64, n: u64) -> u64 {
    assert!(p >= 2 && n >= 1);
    p * n / (p - 1)
}
