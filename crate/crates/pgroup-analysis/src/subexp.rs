//! The subexponent of a finite p-group: the smallest bound n such that some
//! chief series has, at every index-p step, a new element of order at most n.
//!
//! Search runs bottom-up over normal subgroups. From a node N the legal next
//! steps are exactly the N' = ⟨N, x⟩ with x^p ∈ N and [S, x] ⊆ N: such cosets
//! xN are the order-p elements of the center of S/N, and every index-p normal
//! step arises this way. Values are memoized per node, so the exponential
//! space of series collapses to the normal subgroup lattice.

use std::collections::HashMap;

use group_kernel::bits::BitSet;
use group_kernel::group::Group;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::zmod;

use crate::error::{AnalysisError, Result};
use crate::omega;

#[derive(Clone, Debug)]
pub struct ChiefStep {
    /// The series member after this step.
    pub subgroup: Subgroup,
    /// A new element of minimal order at this step; ties take the least id.
    pub witness: u32,
    pub witness_order: u64,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub steps: Vec<ChiefStep>,
}

#[derive(Clone, Debug)]
pub struct Subexponent {
    pub p: u64,
    pub value: u64,
    pub series: ChiefSeries,
}

struct Search<'a> {
    g: &'a Group,
    p: u64,
    /// Node -> (best value above the node, successor bits when not the top).
    memo: HashMap<BitSet, (u64, Option<BitSet>)>,
    subs: HashMap<BitSet, Subgroup>,
}

impl<'a> Search<'a> {
    /// All one-step normal extensions of n, deduplicated.
    fn ascents(&self, n: &Subgroup) -> Vec<(Subgroup, u64)> {
        let g = self.g;
        let mut seen: Vec<BitSet> = Vec::new();
        let mut out = Vec::new();
        for x in 0..g.order() as u32 {
            if n.contains(x) {
                continue;
            }
            if !n.contains(g.pow(x, self.p as i64)) {
                continue;
            }
            if !g.gens.iter().all(|&s| n.contains(g.comm(s, x))) {
                continue;
            }
            let mut bits = n.bits.clone();
            let mut elems = n.elems.clone();
            for j in 1..self.p {
                let xj = g.pow(x, j as i64);
                for &m in &n.elems {
                    let y = g.mul(xj, m);
                    if bits.insert(y as usize) {
                        elems.push(y);
                    }
                }
            }
            if seen.contains(&bits) {
                continue;
            }
            seen.push(bits.clone());
            let new_min = elems[n.order()..]
                .iter()
                .map(|&y| g.order_of(y) as u64)
                .min()
                .expect("a proper extension adds elements");
            elems.sort_unstable();
            let mut gens = n.gens.clone();
            gens.push(x);
            out.push((Subgroup { bits, elems, gens }, new_min));
        }
        out
    }

    fn best_above(&mut self, n: &Subgroup) -> u64 {
        if n.order() == self.g.order() {
            return 1;
        }
        if let Some(&(v, _)) = self.memo.get(&n.bits) {
            return v;
        }
        let mut best = u64::MAX;
        let mut succ: Option<BitSet> = None;
        for (next, new_min) in self.ascents(n) {
            let above = self.best_above(&next);
            let through = new_min.max(above);
            if through < best {
                best = through;
                succ = Some(next.bits.clone());
            }
            self.subs.entry(next.bits.clone()).or_insert(next);
        }
        assert!(best != u64::MAX, "a proper normal subgroup of a p-group always extends");
        self.memo.insert(n.bits.clone(), (best, succ));
        best
    }
}

fn min_order_witness(g: &Group, larger: &Subgroup, smaller: &Subgroup) -> (u32, u64) {
    larger
        .elems
        .iter()
        .copied()
        .filter(|&y| !smaller.contains(y))
        .map(|y| (y, g.order_of(y) as u64))
        .min_by_key(|&(y, o)| (o, y))
        .expect("series steps are strict")
}

/// The subexponent with an optimal witness series. The trivial group reports
/// value 1 with an empty series.
pub fn subexponent(g: &Group) -> Result<Subexponent> {
    if g.order() == 1 {
        return Ok(Subexponent {
            p: 0,
            value: 1,
            series: ChiefSeries { steps: vec![] },
        });
    }
    let p = omega::p_group_prime(g).ok_or_else(|| {
        AnalysisError::NotPGroup(
            group_kernel::lattice::prime_divisors(g.order() as u64).first().copied().unwrap_or(0),
        )
    })?;
    g.ensure_mul_table();
    g.orders();
    let mut search = Search { g, p, memo: HashMap::new(), subs: HashMap::new() };
    let bottom = subgroup::trivial(g);
    let value = search.best_above(&bottom);
    // Rebuild the optimal series by following stored successors.
    let mut steps = Vec::new();
    let mut cur = bottom;
    while cur.order() < g.order() {
        let (_, succ) = search.memo.get(&cur.bits).expect("path nodes are memoized");
        let next_bits = succ.clone().expect("non-top nodes store a successor");
        let next = search.subs.get(&next_bits).expect("successors are cached").clone();
        let (witness, witness_order) = min_order_witness(g, &next, &cur);
        steps.push(ChiefStep { subgroup: next.clone(), witness, witness_order });
        cur = next;
    }
    debug_assert_eq!(steps.iter().map(|s| s.witness_order).max().unwrap_or(1), value);
    if g.is_abelian() {
        debug_assert_eq!(value, g.exponent());
    }
    Ok(Subexponent { p, value, series: ChiefSeries { steps } })
}

/// An element x outside a normal abelian subgroup A with order ≤ the
/// subexponent and [x, S] inside Ω_n(A), where p^n is the subexponent. Such an
/// element always exists; failure signals a bug, not a mathematical outcome.
pub fn subexp_witness(g: &Group, a: &Subgroup) -> Result<(u32, Subexponent)> {
    let sub = subexponent(g)?;
    let p = sub.p;
    if !subgroup::is_normal(g, a) {
        return Err(AnalysisError::NotNormal);
    }
    if !a.gens.iter().all(|&x| a.gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x))) {
        return Err(AnalysisError::NotAbelian);
    }
    let n = zmod::valuation(sub.value, p);
    let shell = omega::omega_layer(g, a, p, n)?;
    let found = (0..g.order() as u32).find(|&x| {
        !a.contains(x)
            && g.order_of(x) as u64 <= sub.value
            && g.gens.iter().all(|&s| shell.contains(g.comm(x, s)))
    });
    match found {
        Some(x) => Ok((x, sub)),
        None => Err(AnalysisError::WitnessSearchFailed(format!(
            "no element outside the abelian normal subgroup has order ≤ {} with commutators in the Ω_{} layer",
            sub.value, n
        ))),
    }
}
