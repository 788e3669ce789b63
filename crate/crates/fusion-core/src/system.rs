//! The fusion system proper: conjugacy classes of subgroups with one
//! automizer per class representative and one identification map per member.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use group_kernel::group::Group;

use crate::map::{Ambient, SubMap};
use crate::saturation::SaturationReport;

/// One class of F-conjugate subgroups. `to_rep[i]` identifies `members[i]`
/// with `rep`; the entry for `rep` itself is the identity. `outer` holds one
/// canonical representative per coset of inner automorphisms in the full
/// automizer of `rep`.
pub struct FClass {
    pub rep: usize,
    pub members: Vec<usize>,
    pub to_rep: Vec<SubMap>,
    pub outer: Vec<SubMap>,
    outer_set: OnceLock<HashSet<Vec<u32>>>,
}

impl FClass {
    pub fn new(rep: usize, members: Vec<usize>, to_rep: Vec<SubMap>, outer: Vec<SubMap>) -> FClass {
        FClass { rep, members, to_rep, outer, outer_set: OnceLock::new() }
    }

    pub fn outer_set(&self) -> &HashSet<Vec<u32>> {
        self.outer_set
            .get_or_init(|| self.outer.iter().map(|m| m.img.clone()).collect())
    }

    pub fn member_pos(&self, sub: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == sub)
    }
}

pub struct FusionSystem {
    pub amb: Ambient,
    pub p: u64,
    pub classes: Vec<FClass>,
    /// Subgroup index → class index.
    pub class_of: Vec<usize>,
    report: OnceLock<SaturationReport>,
}

impl FusionSystem {
    pub fn new(amb: Ambient, p: u64, classes: Vec<FClass>) -> FusionSystem {
        let mut class_of = vec![usize::MAX; amb.subs.len()];
        for (c, cl) in classes.iter().enumerate() {
            for &m in &cl.members {
                class_of[m] = c;
            }
        }
        debug_assert!(class_of.iter().all(|&c| c != usize::MAX));
        FusionSystem { amb, p, classes, class_of, report: OnceLock::new() }
    }

    pub fn s(&self) -> &Arc<Group> {
        &self.amb.s
    }

    pub fn class(&self, sub: usize) -> &FClass {
        &self.classes[self.class_of[sub]]
    }

    /// Order of the full automizer of the class representative.
    pub fn aut_order(&self, class: usize) -> u64 {
        let cl = &self.classes[class];
        let r = cl.rep;
        let sub = &self.amb.subs[r];
        let z = group_kernel::subgroup::center_of(&self.amb.s, sub);
        let inner = (sub.order() / z.order()) as u64;
        inner * cl.outer.len() as u64
    }

    /// All automorphisms of the representative of `class`: inner transversal
    /// times outer coset labels.
    pub fn automorphisms_of_rep(&self, class: usize) -> Vec<SubMap> {
        let cl = &self.classes[class];
        let r = cl.rep;
        let amb = &self.amb;
        let sub = &amb.subs[r];
        let z = group_kernel::subgroup::center_of(&amb.s, sub);
        let mut seen = vec![false; amb.s.order() as usize];
        let mut transversal: Vec<u32> = Vec::new();
        for &x in &sub.elems {
            let key = z.elems.iter().map(|&c| amb.s.mul(x, c)).min().unwrap() as usize;
            if !seen[key] {
                seen[key] = true;
                transversal.push(x);
            }
        }
        let mut out = Vec::with_capacity(transversal.len() * cl.outer.len());
        for om in &cl.outer {
            for &x in &transversal {
                out.push(om.then(amb, &SubMap::conj(amb, x, r)));
            }
        }
        out
    }

    /// Is φ a morphism of the system? φ must be injective with source a
    /// subgroup in the table; composes member identifications with the
    /// canonical outer labels.
    pub fn contains_map(&self, phi: &SubMap) -> bool {
        let amb = &self.amb;
        let src = phi.src;
        let tgt = phi.image_idx(amb);
        if self.class_of[src] != self.class_of[tgt] {
            return false;
        }
        let cl = self.class(src);
        let ps = cl.member_pos(src).unwrap();
        let pt = cl.member_pos(tgt).unwrap();
        // Transport to an automorphism of the representative.
        let psi = cl.to_rep[ps].inverse(amb).then(amb, phi).then(amb, &cl.to_rep[pt]);
        let canon = psi.canonical_mod_inner(amb);
        cl.outer_set().contains(&canon.img)
    }

    /// Hom_F(P, Q) as maps P → Q modulo inner automorphisms of Q. Returns the
    /// canonical member of each class, sorted.
    pub fn hom_classes(&self, p_idx: usize, q_idx: usize) -> Vec<SubMap> {
        let amb = &self.amb;
        let cl = self.class(p_idx);
        let pos_p = cl.member_pos(p_idx).unwrap();
        let into_rep = &cl.to_rep[pos_p];
        let q_elems = amb.elems(q_idx);
        let autos = self.automorphisms_of_rep(self.class_of[p_idx]);
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out: Vec<SubMap> = Vec::new();
        for (pos_r, &r) in cl.members.iter().enumerate() {
            if !amb.subs[r].bits.is_subset(&amb.subs[q_idx].bits) {
                continue;
            }
            let from_rep = cl.to_rep[pos_r].inverse(amb);
            for alpha in &autos {
                let phi = into_rep.then(amb, alpha).then(amb, &from_rep);
                // Least label over the coset Inn(Q) ∘ φ.
                let mut best: Option<Vec<u32>> = None;
                for &x in q_elems {
                    let cand: Vec<u32> =
                        phi.img.iter().map(|&y| amb.s.conj(x, y)).collect();
                    if best.as_ref().map_or(true, |b| cand < *b) {
                        best = Some(cand);
                    }
                }
                let img = best.unwrap();
                if seen.insert(img.clone()) {
                    out.push(SubMap { src: p_idx, img });
                }
            }
        }
        out.sort_by(|a, b| a.img.cmp(&b.img));
        out
    }

    /// Total number of morphisms with source P, over all targets, counted as
    /// actual maps. Used as a cheap complete invariant when comparing systems
    /// over the same ambient group.
    pub fn morphism_count(&self) -> u64 {
        let mut total = 0u64;
        for (c, cl) in self.classes.iter().enumerate() {
            let n = cl.members.len() as u64;
            total += n * n * self.aut_order(c);
        }
        total
    }

    pub fn saturation_report(&self) -> &SaturationReport {
        self.report.get_or_init(|| crate::saturation::saturation_check(self))
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation_report().saturated
    }
}
