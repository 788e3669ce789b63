//! Saturation axioms, checked exhaustively: the Sylow condition at fully
//! normalized members and receptivity at fully centralized members. The
//! continuity condition is vacuous at finite order and recorded as such.

use std::collections::HashSet;

use group_kernel::subgroup;
use group_kernel::zmod;

use crate::map::SubMap;
use crate::system::FusionSystem;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    Sylow,
    Extension,
    Continuity,
}

/// A concrete counterexample, re-checkable without rerunning the scan.
#[derive(Clone, Debug)]
pub struct SaturationFailure {
    pub axiom: Axiom,
    pub class: usize,
    /// Subgroup index of the offending member.
    pub member: usize,
    /// For extension failures: the morphism with no extension over its
    /// control subgroup, and that subgroup's index.
    pub morphism: Option<SubMap>,
    pub control: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ClassSummary {
    pub rep: usize,
    pub order: usize,
    pub members: Vec<usize>,
    pub fully_normalized: Vec<bool>,
    pub fully_centralized: Vec<bool>,
    pub aut_order: u64,
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub saturated: bool,
    pub sylow_axiom: bool,
    pub extension_axiom: bool,
    /// Vacuously true at finite order; carried so reports list every axiom.
    pub continuity_axiom: bool,
    pub classes: Vec<ClassSummary>,
    pub failures: Vec<SaturationFailure>,
}

/// Sizes of N_S(member) and C_S(member) for every member of every class.
pub(crate) fn norm_cent_sizes(f: &FusionSystem) -> Vec<(Vec<usize>, Vec<usize>)> {
    let amb = &f.amb;
    f.classes
        .iter()
        .map(|cl| {
            let ns: Vec<usize> = cl
                .members
                .iter()
                .map(|&m| subgroup::normalizer(&amb.s, &amb.subs[m]).order())
                .collect();
            let cs: Vec<usize> = cl
                .members
                .iter()
                .map(|&m| subgroup::centralizer(&amb.s, &amb.subs[m]).order())
                .collect();
            (ns, cs)
        })
        .collect()
}

/// The image lists of all of Aut_S(Q) = {c_n restricted to Q}.
fn ambient_automizer_set(f: &FusionSystem, q: usize) -> HashSet<Vec<u32>> {
    let amb = &f.amb;
    let n = subgroup::normalizer(&amb.s, &amb.subs[q]);
    n.elems
        .iter()
        .map(|&x| SubMap::conj(amb, x, q).img)
        .collect()
}

/// The subgroup of g in N_S(P) whose conjugation transports through φ into
/// Aut_S(φP).
pub fn control_subgroup(f: &FusionSystem, phi: &SubMap) -> usize {
    let amb = &f.amb;
    let p_idx = phi.src;
    let q_idx = phi.image_idx(amb);
    let aut_s_q = ambient_automizer_set(f, q_idx);
    let inv = phi.inverse(amb);
    let n = subgroup::normalizer(&amb.s, &amb.subs[p_idx]);
    let ids: Vec<u32> = n
        .elems
        .iter()
        .copied()
        .filter(|&g| {
            let conj = SubMap::conj(amb, g, p_idx);
            let transported = inv.then(amb, &conj).then(amb, phi);
            aut_s_q.contains(&transported.img)
        })
        .collect();
    let sub = subgroup::from_closed_set(&amb.s, &ids);
    amb.idx_of(&sub.bits)
}

/// Does some morphism of F out of `control` restrict to φ on φ's source?
pub fn extends_over(f: &FusionSystem, phi: &SubMap, control: usize) -> bool {
    let amb = &f.amb;
    let src_elems = amb.elems(phi.src);
    let cl = f.class(control);
    let pos = cl.member_pos(control).unwrap();
    let into_rep = &cl.to_rep[pos];
    let autos = f.automorphisms_of_rep(f.class_of[control]);
    for pos_t in 0..cl.members.len() {
        let from_rep = cl.to_rep[pos_t].inverse(amb);
        for alpha in &autos {
            let psi = into_rep.then(amb, alpha).then(amb, &from_rep);
            if src_elems
                .iter()
                .zip(&phi.img)
                .all(|(&x, &y)| psi.apply(amb, x) == y)
            {
                return true;
            }
        }
    }
    false
}

pub fn saturation_check(f: &FusionSystem) -> SaturationReport {
    let amb = &f.amb;
    let sizes = norm_cent_sizes(f);
    let mut classes = Vec::with_capacity(f.classes.len());
    let mut failures: Vec<SaturationFailure> = Vec::new();
    let mut sylow_ok = true;
    let mut ext_ok = true;

    for (c, cl) in f.classes.iter().enumerate() {
        let (ns, cs) = &sizes[c];
        let max_n = *ns.iter().max().unwrap();
        let max_c = *cs.iter().max().unwrap();
        let fully_normalized: Vec<bool> = ns.iter().map(|&x| x == max_n).collect();
        let fully_centralized: Vec<bool> = cs.iter().map(|&x| x == max_c).collect();
        let aut_order = f.aut_order(c);
        let aut_p_part = zmod::p_part(aut_order, f.p);

        // Sylow condition at each fully normalized member.
        for (i, &m) in cl.members.iter().enumerate() {
            if !fully_normalized[i] {
                continue;
            }
            let aut_s = (ns[i] / cs[i]) as u64;
            if aut_s != aut_p_part {
                sylow_ok = false;
                failures.push(SaturationFailure {
                    axiom: Axiom::Sylow,
                    class: c,
                    member: m,
                    morphism: None,
                    control: None,
                    detail: format!(
                        "fully normalized member is not fully automized: |Aut_S| = {aut_s}, p-part of |Aut_F| = {aut_p_part}"
                    ),
                });
            }
            if !fully_centralized[i] {
                sylow_ok = false;
                failures.push(SaturationFailure {
                    axiom: Axiom::Sylow,
                    class: c,
                    member: m,
                    morphism: None,
                    control: None,
                    detail: "fully normalized member is not fully centralized".into(),
                });
            }
        }

        // Receptivity at each fully centralized member.
        let whole = amb.subs[cl.rep].order() == amb.s.order() as usize;
        for (i, &q) in cl.members.iter().enumerate() {
            if !fully_centralized[i] || whole {
                // Automorphisms of S itself transport inner to inner, so the
                // control subgroup is all of S and every map extends itself.
                continue;
            }
            let into_q = cl.to_rep[i].inverse(amb);
            let autos = f.automorphisms_of_rep(c);
            'phis: for (j, &p_sub) in cl.members.iter().enumerate() {
                let from_p = &cl.to_rep[j];
                for alpha in &autos {
                    let phi = from_p.then(amb, alpha).then(amb, &into_q);
                    let control = control_subgroup(f, &phi);
                    if amb.subs[control].bits == amb.subs[p_sub].bits {
                        continue;
                    }
                    if !extends_over(f, &phi, control) {
                        ext_ok = false;
                        failures.push(SaturationFailure {
                            axiom: Axiom::Extension,
                            class: c,
                            member: q,
                            morphism: Some(phi),
                            control: Some(control),
                            detail: "fully centralized member is not receptive".into(),
                        });
                        // One witness per member keeps reports readable.
                        break 'phis;
                    }
                }
            }
        }

        classes.push(ClassSummary {
            rep: cl.rep,
            order: amb.subs[cl.rep].order(),
            members: cl.members.clone(),
            fully_normalized,
            fully_centralized,
            aut_order,
        });
    }

    SaturationReport {
        saturated: sylow_ok && ext_ok,
        sylow_axiom: sylow_ok,
        extension_axiom: ext_ok,
        continuity_axiom: true,
        classes,
        failures,
    }
}
