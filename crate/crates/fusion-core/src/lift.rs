//! Lifting morphisms of a quotient system back to the parent, and the
//! normalizer-extension existence guaranteed at fully normalized targets.

use group_kernel::subgroup;

use crate::error::{FusionError, Result};
use crate::map::SubMap;
use crate::quotient::QuotientFusion;
use crate::system::FusionSystem;

/// A parent morphism projecting to the given quotient morphism. Sources and
/// targets are the full preimages; the first candidate in canonical order
/// wins, so repeated calls agree.
pub fn lift_mod_q(
    f: &FusionSystem,
    fq: &QuotientFusion,
    phi_bar: &SubMap,
) -> Result<SubMap> {
    if !f.is_saturated() {
        return Err(FusionError::NotSaturated);
    }
    let amb = &f.amb;
    let qamb = &fq.system.amb;
    let src_up = fq.preimage[phi_bar.src];
    let tgt_up = fq.preimage[phi_bar.image_idx(qamb)];

    if f.class_of[src_up] == f.class_of[tgt_up] {
        let cl = f.class(src_up);
        let pos_s = cl.member_pos(src_up).unwrap();
        let pos_t = cl.member_pos(tgt_up).unwrap();
        let into_rep = &cl.to_rep[pos_s];
        let from_rep = cl.to_rep[pos_t].inverse(amb);
        let mut candidates: Vec<SubMap> = f
            .automorphisms_of_rep(f.class_of[src_up])
            .iter()
            .map(|alpha| into_rep.then(amb, alpha).then(amb, &from_rep))
            .collect();
        candidates.sort_by(|a, b| a.img.cmp(&b.img));
        for cand in candidates {
            let projects = qamb
                .elems(phi_bar.src)
                .iter()
                .zip(&phi_bar.img)
                .all(|(&xq, &yq)| {
                    let x = fq.reps[xq as usize];
                    fq.proj[cand.apply(amb, x) as usize] == yq
                });
            if projects {
                return Ok(cand);
            }
        }
    }
    Err(FusionError::SearchFailed(
        "no parent morphism projects to the given quotient morphism".into(),
    ))
}

/// For Q fusion-conjugate to a fully normalized P: a morphism defined on all
/// of N_S(Q) carrying Q onto P. Saturation guarantees one exists.
pub fn normalizer_map_exists(
    f: &FusionSystem,
    p_idx: usize,
    q_idx: usize,
) -> Result<SubMap> {
    if !f.is_saturated() {
        return Err(FusionError::NotSaturated);
    }
    let amb = &f.amb;
    if f.class_of[p_idx] != f.class_of[q_idx] {
        return Err(FusionError::InvalidDatum(
            "subgroups lie in different fusion classes".into(),
        ));
    }
    if q_idx == p_idx {
        let n = subgroup::normalizer(&amb.s, &amb.subs[p_idx]);
        return Ok(SubMap::identity(amb, amb.idx_of(&n.bits)));
    }
    let nq = subgroup::normalizer(&amb.s, &amb.subs[q_idx]);
    let np = subgroup::normalizer(&amb.s, &amb.subs[p_idx]);
    let nq_idx = amb.idx_of(&nq.bits);
    let cl = f.class(nq_idx);
    let pos = cl.member_pos(nq_idx).unwrap();
    let into_rep = &cl.to_rep[pos];
    let autos = f.automorphisms_of_rep(f.class_of[nq_idx]);
    let mut candidates: Vec<SubMap> = Vec::new();
    for (pos_t, &tgt) in cl.members.iter().enumerate() {
        if !amb.subs[tgt].bits.is_subset(&np.bits) {
            continue;
        }
        let from_rep = cl.to_rep[pos_t].inverse(amb);
        for alpha in &autos {
            let psi = into_rep.then(amb, alpha).then(amb, &from_rep);
            let carries = amb
                .elems(q_idx)
                .iter()
                .all(|&x| amb.subs[p_idx].contains(psi.apply(amb, x)));
            if carries {
                candidates.push(psi);
            }
        }
    }
    candidates.sort_by(|a, b| a.img.cmp(&b.img));
    candidates.into_iter().next().ok_or_else(|| {
        FusionError::SearchFailed(
            "no morphism on the full normalizer carries the subgroup onto its fully normalized conjugate".into(),
        )
    })
}
