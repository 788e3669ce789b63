//! Fusion induced on a p-subgroup by conjugation in an ambient finite group.

use std::collections::HashMap;
use std::sync::Arc;

use group_kernel::bits::BitSet;
use group_kernel::group::Group;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::zmod;

use crate::error::{FusionError, Result};
use crate::map::{Ambient, SubMap};
use crate::system::{FClass, FusionSystem};

pub struct GroupFusion {
    pub system: FusionSystem,
    /// Whether the chosen p-subgroup is a full Sylow p-subgroup.
    pub sylow: bool,
}

/// A Sylow p-subgroup, grown through normalizers from the trivial subgroup.
pub fn sylow_subgroup(g: &Arc<Group>, p: u64) -> Subgroup {
    let target = zmod::p_part(g.order() as u64, p);
    let mut cur = subgroup::trivial(g);
    while (cur.order() as u64) < target {
        let n = subgroup::normalizer(g, &cur);
        let mut grown = false;
        for x in &n.elems {
            if cur.contains(*x) {
                continue;
            }
            let mut gens: Vec<u32> = cur.gens.clone();
            gens.push(*x);
            let cand = subgroup::generate(g, &gens);
            if crate::build::is_p_group_order(cand.order() as u64, p) {
                cur = cand;
                grown = true;
                break;
            }
        }
        assert!(grown, "normalizer of a non-Sylow p-subgroup must grow it");
    }
    cur
}

fn bits_in_parent(g: &Group, to_parent: &[u32], elems: &[u32]) -> BitSet {
    let mut bits = BitSet::new(g.order() as usize);
    for &x in elems {
        bits.insert(to_parent[x as usize] as usize);
    }
    bits
}

/// The fusion system on `s_sub` whose morphisms are conjugations by elements
/// of `g`. Saturated whenever `s_sub` is Sylow.
pub fn fusion_of_group(
    g: &Arc<Group>,
    s_sub: &Subgroup,
    p: u64,
    lattice_cap: usize,
) -> Result<GroupFusion> {
    g.ensure_mul_table();
    if !crate::build::is_p_group_order(s_sub.order() as u64, p) {
        return Err(FusionError::NotPSubgroup(p));
    }
    let sylow = s_sub.order() as u64 == zmod::p_part(g.order() as u64, p);
    let (sg, to_parent) = subgroup::lift(g, s_sub);
    let sg = Arc::new(sg);
    let amb = Ambient::new(Arc::clone(&sg), p, lattice_cap)?;
    let mut sg_of: HashMap<u32, u32> = HashMap::new();
    for (i, &gx) in to_parent.iter().enumerate() {
        sg_of.insert(gx, i as u32);
    }
    let gid = g.identity;

    let mut placed = vec![false; amb.subs.len()];
    let mut classes: Vec<FClass> = Vec::new();
    for start in 0..amb.subs.len() {
        if placed[start] {
            continue;
        }
        // Orbit of the subgroup under conjugation in g, with one conjugating
        // element per orbit member.
        let start_bits = bits_in_parent(g, &to_parent, amb.elems(start));
        let mut seen: HashMap<BitSet, u32> = HashMap::new();
        seen.insert(start_bits.clone(), gid);
        let mut frontier = vec![start_bits];
        while let Some(bits) = frontier.pop() {
            let conj_elem = seen[&bits];
            let ids: Vec<u32> = bits.iter().map(|x| x as u32).collect();
            for &h in &g.gens {
                let mut moved = BitSet::new(g.order() as usize);
                for &x in &ids {
                    moved.insert(g.conj(h, x) as usize);
                }
                if !seen.contains_key(&moved) {
                    seen.insert(moved.clone(), g.mul(h, conj_elem));
                    frontier.push(moved);
                }
            }
        }
        // Members that land inside the chosen p-subgroup.
        let mut members: Vec<(usize, u32)> = Vec::new();
        for (bits, &c) in &seen {
            if bits.is_subset(&s_sub.bits) {
                let ids: Vec<u32> = bits.iter().map(|x| sg_of[&(x as u32)]).collect();
                members.push((amb.idx_of_ids(&ids), c));
            }
        }
        members.sort_unstable_by_key(|&(i, _)| i);
        let (rep, c_rep) = *members
            .iter()
            .min_by(|a, b| amb.elems(a.0).cmp(amb.elems(b.0)))
            .unwrap();
        let c_rep_inv = g.inv(c_rep);
        let to_rep: Vec<SubMap> = members
            .iter()
            .map(|&(m, c_m)| {
                if m == rep {
                    return SubMap::identity(&amb, rep);
                }
                // member = rep conjugated by c, so c⁻¹ carries member to rep.
                let c = g.mul(c_m, c_rep_inv);
                let ci = g.inv(c);
                let img: Vec<u32> = amb
                    .elems(m)
                    .iter()
                    .map(|&y| sg_of[&g.conj(ci, to_parent[y as usize])])
                    .collect();
                SubMap { src: m, img }
            })
            .collect();
        // Automizer of the representative: the normalizer in g acting by
        // conjugation, recorded modulo inner automorphisms.
        let rep_parent_bits = bits_in_parent(g, &to_parent, amb.elems(rep));
        let rep_parent_ids: Vec<u32> =
            rep_parent_bits.iter().map(|x| x as u32).collect();
        let mut outer: Vec<SubMap> = Vec::new();
        let mut outer_seen: std::collections::HashSet<Vec<u32>> =
            std::collections::HashSet::new();
        for n in g.all_ids() {
            if !rep_parent_ids.iter().all(|&x| rep_parent_bits.contains(g.conj(n, x) as usize)) {
                continue;
            }
            let img: Vec<u32> = amb
                .elems(rep)
                .iter()
                .map(|&y| sg_of[&g.conj(n, to_parent[y as usize])])
                .collect();
            let canon = SubMap { src: rep, img }.canonical_mod_inner(&amb);
            if outer_seen.insert(canon.img.clone()) {
                outer.push(canon);
            }
        }
        outer.sort_by(|a, b| a.img.cmp(&b.img));
        for &(m, _) in &members {
            placed[m] = true;
        }
        let member_idx: Vec<usize> = members.iter().map(|&(m, _)| m).collect();
        classes.push(FClass::new(rep, member_idx, to_rep, outer));
    }
    classes.sort_by(|a, b| {
        (amb.subs[a.rep].order(), amb.elems(a.rep))
            .cmp(&(amb.subs[b.rep].order(), amb.elems(b.rep)))
    });
    Ok(GroupFusion { system: FusionSystem::new(amb, p, classes), sylow })
}

/// Convenience: fusion of `g` at a freshly computed Sylow p-subgroup.
pub fn fusion_of_group_sylow(g: &Arc<Group>, p: u64, lattice_cap: usize) -> Result<GroupFusion> {
    let s = sylow_subgroup(g, p);
    fusion_of_group(g, &s, p, lattice_cap)
}
