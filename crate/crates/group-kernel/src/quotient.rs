//! Cosets and quotient groups. Quotients are realized as permutation groups on
//! the coset space, which is faithful exactly because the kernel is the normal
//! subgroup being factored out.

use crate::error::{KernelError, Result};
use crate::group::Group;
use crate::realization::Realization;
use crate::subgroup::{self, Subgroup};
use crate::elem::ElemData;

pub struct Cosets {
    /// Coset index per element id.
    pub coset_of: Vec<u32>,
    /// Minimal element id of each coset; ascending.
    pub reps: Vec<u32>,
}

/// Left cosets x·H. Representatives are id-minimal.
pub fn left_cosets(g: &Group, h: &Subgroup) -> Cosets {
    let n = g.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let ci = reps.len() as u32;
        reps.push(x);
        for &e in &h.elems {
            coset_of[g.mul(x, e) as usize] = ci;
        }
    }
    Cosets { coset_of, reps }
}

pub struct Quotient {
    pub group: Group,
    /// Element id in the parent to element id in the quotient.
    pub proj: Vec<u32>,
    /// Quotient element id to the id-minimal coset representative.
    pub reps: Vec<u32>,
}

pub fn quotient(g: &Group, n: &Subgroup) -> Result<Quotient> {
    if !subgroup::is_normal(g, n) {
        return Err(KernelError::NotNormal);
    }
    let cosets = left_cosets(g, n);
    let deg = cosets.reps.len();
    if deg > u16::MAX as usize {
        return Err(KernelError::CapExceeded { what: "coset space", need: deg, cap: u16::MAX as usize });
    }
    let perm_of = |x: u32| -> ElemData {
        ElemData::Perm(
            cosets
                .reps
                .iter()
                .map(|&r| cosets.coset_of[g.mul(x, r) as usize] as u16)
                .collect(),
        )
    };
    let gen_perms: Vec<ElemData> = g.gens.iter().map(|&x| perm_of(x)).collect();
    let q = Group::generate(Realization::Perm { degree: deg }, &gen_perms, deg + 1)?;
    debug_assert_eq!(q.order(), deg);
    let mut proj = vec![0u32; g.order()];
    // The quotient image of x is the permutation r ↦ x·r on cosets; elements of
    // one coset share it.
    let mut image_of_coset = vec![u32::MAX; deg];
    for (ci, &r) in cosets.reps.iter().enumerate() {
        image_of_coset[ci] = q.id_of(&perm_of(r)).expect("coset action closed");
    }
    for x in 0..g.order() {
        proj[x] = image_of_coset[cosets.coset_of[x] as usize];
    }
    // Quotient id -> minimal coset rep.
    let mut reps = vec![u32::MAX; deg];
    for ci in (0..deg).rev() {
        reps[image_of_coset[ci] as usize] = cosets.reps[ci];
    }
    Ok(Quotient { group: q, proj, reps })
}
