//! Quotient of a fusion system by a weakly closed subgroup: subgroups
//! containing it project to the quotient group, and their morphisms project
//! with them. The image category is already closed, so no new closure pass
//! is run.

use std::sync::Arc;

use group_kernel::quotient as gq;

use crate::error::{FusionError, Result};
use crate::map::{Ambient, SubMap};
use crate::system::{FClass, FusionSystem};

pub struct QuotientFusion {
    pub system: FusionSystem,
    /// Index of the collapsed subgroup in the parent ambient table.
    pub q: usize,
    /// Parent element id → quotient element id.
    pub proj: Vec<u32>,
    /// Quotient element id → parent coset representative.
    pub reps: Vec<u32>,
    /// Quotient subgroup index → parent subgroup index of its preimage.
    pub preimage: Vec<usize>,
}

pub fn quotient_fusion(f: &FusionSystem, q: usize) -> Result<QuotientFusion> {
    let amb = &f.amb;
    if f.class(q).members.len() != 1 {
        return Err(FusionError::NotWeaklyClosed);
    }
    // Weak closure inside a fusion system over S forces normality in S, since
    // S-conjugation is made of morphisms.
    let quo = gq::quotient(&amb.s, &amb.subs[q])?;
    let sq = Arc::new(quo.group);
    let new_amb = Ambient::new(Arc::clone(&sq), f.p, usize::MAX)?;

    // Preimage of each quotient subgroup, as a parent table index.
    let preimage: Vec<usize> = new_amb
        .subs
        .iter()
        .map(|h| {
            let ids: Vec<u32> = (0..amb.s.order() as u32)
                .filter(|&x| h.contains(quo.proj[x as usize]))
                .collect();
            amb.idx_of_ids(&ids)
        })
        .collect();
    let mut downstairs = vec![usize::MAX; amb.subs.len()];
    for (j, &pi) in preimage.iter().enumerate() {
        downstairs[pi] = j;
    }

    let project = |m: &SubMap, new_src: usize| -> SubMap {
        let img: Vec<u32> = new_amb
            .elems(new_src)
            .iter()
            .map(|&xq| {
                let x = quo.reps[xq as usize];
                quo.proj[m.apply(amb, x) as usize]
            })
            .collect();
        SubMap { src: new_src, img }
    };

    let mut classes: Vec<FClass> = Vec::new();
    for cl in &f.classes {
        if !amb.subs[q].bits.is_subset(&amb.subs[cl.rep].bits) {
            continue;
        }
        let members: Vec<usize> =
            cl.members.iter().map(|&m| downstairs[m]).collect();
        let rep_down = downstairs[cl.rep];
        let to_rep: Vec<SubMap> = cl
            .members
            .iter()
            .zip(&members)
            .map(|(&up, &down)| project(&cl.to_rep[cl.member_pos(up).unwrap()], down))
            .collect();
        let mut outer: Vec<SubMap> = cl
            .outer
            .iter()
            .map(|m| project(m, rep_down).canonical_mod_inner(&new_amb))
            .collect();
        outer.sort_by(|a, b| a.img.cmp(&b.img));
        outer.dedup_by(|a, b| a.img == b.img);
        // Members can collide only if two parent members shared an image,
        // impossible since both contain the collapsed subgroup.
        let mut order: Vec<usize> = (0..members.len()).collect();
        order.sort_by_key(|&i| members[i]);
        let members_sorted: Vec<usize> = order.iter().map(|&i| members[i]).collect();
        let to_rep_sorted: Vec<SubMap> = order.iter().map(|&i| to_rep[i].clone()).collect();
        classes.push(FClass::new(rep_down, members_sorted, to_rep_sorted, outer));
    }
    classes.sort_by(|a, b| {
        (new_amb.subs[a.rep].order(), new_amb.elems(a.rep))
            .cmp(&(new_amb.subs[b.rep].order(), new_amb.elems(b.rep)))
    });

    Ok(QuotientFusion {
        system: FusionSystem::new(new_amb, f.p, classes),
        q,
        proj: quo.proj,
        reps: quo.reps,
        preimage,
    })
}
