//! Abelian structure helpers: homocyclic recognition and a constructive basis
//! of independent cyclic generators.

use group_kernel::abelian_invariants;
use group_kernel::group::Group;
use group_kernel::quotient;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::zmod;

use crate::error::{AnalysisError, Result};

/// True with (rank, e) when the abelian subgroup is (Z/p^e)^rank; exponent is
/// reported through e with p^e the common order. The trivial group is
/// homocyclic of rank 0.
pub fn is_homocyclic(g: &Group, h: &Subgroup, p: u64) -> Result<Option<(u32, u32)>> {
    let (lifted, _) = subgroup::lift(g, h);
    if !lifted.is_abelian() {
        return Err(AnalysisError::NotAbelian);
    }
    if lifted.order() == 1 {
        return Ok(Some((0, 0)));
    }
    if lifted.order() as u64 != zmod::p_part(lifted.order() as u64, p) {
        return Err(AnalysisError::NotPGroup(p));
    }
    let inv = abelian_invariants(&lifted);
    let first = inv[0];
    if inv.iter().any(|&d| d != first) {
        return Ok(None);
    }
    Ok(Some((inv.len() as u32, zmod::valuation(first, p))))
}

/// Independent generators with ord(b_1) ≥ ord(b_2) ≥ ..., whose cyclic groups
/// decompose the abelian group as a direct product. The first generator
/// attains the exponent.
pub fn abelian_basis(g: &Group) -> Result<Vec<u32>> {
    if !g.is_abelian() {
        return Err(AnalysisError::NotAbelian);
    }
    if g.order() == 1 {
        return Ok(vec![]);
    }
    let exp = g.exponent();
    let top = (0..g.order() as u32)
        .find(|&x| g.order_of(x) as u64 == exp)
        .expect("abelian group attains its exponent");
    let cyc = subgroup::generate(g, &[top]);
    let q = quotient::quotient(g, &cyc).expect("abelian subgroups are normal");
    let qbasis = abelian_basis(&q.group)?;
    // Powers of the top generator, for discharging x^d into the cyclic part.
    let mut power_ids = Vec::with_capacity(exp as usize);
    let mut acc = g.identity;
    for _ in 0..exp {
        power_ids.push(acc);
        acc = g.mul(acc, top);
    }
    let mut basis = vec![top];
    for &qb in &qbasis {
        let d = q.group.order_of(qb) as i64;
        let x = q.reps[qb as usize];
        let xd = g.pow(x, d);
        let c = power_ids
            .iter()
            .position(|&pid| pid == xd)
            .expect("power of a coset representative lands in the cyclic part")
            as i64;
        // x^d = top^c with d | c because the top generator attains the
        // exponent; the corrected element has exact order d.
        debug_assert_eq!(c % d, 0);
        let fixed = g.mul(x, g.pow(top, -(c / d)));
        debug_assert_eq!(g.order_of(fixed) as i64, d);
        basis.push(fixed);
    }
    basis.sort_by_key(|&b| std::cmp::Reverse(g.order_of(b)));
    debug_assert_eq!(
        basis.iter().map(|&b| g.order_of(b) as usize).product::<usize>(),
        g.order()
    );
    debug_assert_eq!(subgroup::generate(g, &basis).order(), g.order());
    Ok(basis)
}
