//! Certificates: every morphism of a saturated system factors as a chain of
//! restricted automorphisms of fully normalized centric radical subgroups
//! (with the whole group always admitted as a host). The certificate search
//! is a breadth-first walk, so words come out shortest-first.

use std::collections::HashMap;

use group_kernel::subgroup;

use crate::error::{FusionError, Result};
use crate::map::SubMap;
use crate::system::FusionSystem;

#[derive(Clone, Debug)]
pub struct WordStep {
    /// Subgroup index of the host whose automorphism is being restricted.
    pub host: usize,
    /// The automorphism of the host, before restriction.
    pub auto: SubMap,
}

#[derive(Clone, Debug)]
pub struct AlperinWord {
    pub steps: Vec<WordStep>,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Word(AlperinWord),
    /// The morphism does not belong to the system.
    Absent,
}

impl AlperinWord {
    /// Recompose the word into the morphism it certifies, starting from the
    /// given source subgroup.
    pub fn recompose(&self, f: &FusionSystem, src: usize) -> SubMap {
        let amb = &f.amb;
        let mut cur = SubMap::identity(amb, src);
        for step in &self.steps {
            debug_assert!(cur
                .image_bits(amb)
                .is_subset(&amb.subs[step.host].bits));
            cur = cur.then(amb, &step.auto);
        }
        cur
    }
}

/// Hosts for certificate steps: fully normalized members of centric radical
/// classes, plus the full group.
pub fn certificate_hosts(f: &FusionSystem) -> Result<Vec<usize>> {
    let amb = &f.amb;
    let mut hosts = Vec::new();
    for (c, cl) in f.classes.iter().enumerate() {
        let centric = cl.members.iter().all(|&m| {
            subgroup::centralizer(&amb.s, &amb.subs[m])
                .bits
                .is_subset(&amb.subs[m].bits)
        });
        if !centric {
            continue;
        }
        let out = crate::classify::outer_group(f, c)?;
        let radical =
            group_kernel::lattice::o_p(&out, f.p, usize::MAX)?.order() == 1;
        if !radical {
            continue;
        }
        let best = cl
            .members
            .iter()
            .map(|&m| subgroup::normalizer(&amb.s, &amb.subs[m]).order())
            .max()
            .unwrap();
        for &m in &cl.members {
            if subgroup::normalizer(&amb.s, &amb.subs[m]).order() == best {
                hosts.push(m);
            }
        }
    }
    let top = amb.idx_of(&subgroup::full(&amb.s).bits);
    if !hosts.contains(&top) {
        hosts.push(top);
    }
    hosts.sort_unstable();
    Ok(hosts)
}

/// Generators of Aut_F(host): conjugation by subgroup generators together
/// with the outer labels transported from the class representative.
fn host_auto_generators(f: &FusionSystem, host: usize) -> Vec<SubMap> {
    let amb = &f.amb;
    let cl = f.class(host);
    let pos = cl.member_pos(host).unwrap();
    let into_rep = &cl.to_rep[pos];
    let from_rep = into_rep.inverse(amb);
    let mut gens: Vec<SubMap> = Vec::new();
    for &x in &amb.subs[host].gens {
        gens.push(SubMap::conj(amb, x, host));
    }
    for om in &cl.outer {
        gens.push(into_rep.then(amb, om).then(amb, &from_rep));
    }
    gens
}

/// A certificate word for φ, or Absent when φ is not in the system. Fails
/// only if φ belongs to the system yet no chain of host automorphisms
/// produces it, which a saturated system never exhibits.
pub fn morphism_certificate(f: &FusionSystem, phi: &SubMap) -> Result<Certificate> {
    let amb = &f.amb;
    if !f.contains_map(phi) {
        return Ok(Certificate::Absent);
    }
    let src = phi.src;
    let hosts = certificate_hosts(f)?;
    let host_gens: Vec<(usize, Vec<SubMap>)> = hosts
        .iter()
        .map(|&h| (h, host_auto_generators(f, h)))
        .collect();

    let start = SubMap::identity(amb, src);
    if start.img == phi.img {
        return Ok(Certificate::Word(AlperinWord { steps: Vec::new() }));
    }
    // Breadth-first over reachable maps out of src; parents reconstruct the
    // word.
    let mut states: Vec<SubMap> = vec![start];
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    seen.insert(states[0].img.clone(), 0);
    let mut parent: Vec<Option<(usize, usize, SubMap)>> = vec![None];
    let mut qi = 0;
    while qi < states.len() {
        let cur = states[qi].clone();
        qi += 1;
        let cur_img_bits = cur.image_bits(amb);
        for (h, gens) in &host_gens {
            if !cur_img_bits.is_subset(&amb.subs[*h].bits) {
                continue;
            }
            for gmap in gens {
                let next = cur.then(amb, gmap);
                if seen.contains_key(&next.img) {
                    continue;
                }
                let idx = states.len();
                seen.insert(next.img.clone(), idx);
                parent.push(Some((qi - 1, *h, gmap.clone())));
                if next.img == phi.img {
                    let mut steps = Vec::new();
                    let mut at = idx;
                    states.push(next);
                    while let Some((prev, host, auto)) = parent[at].clone() {
                        steps.push(WordStep { host, auto });
                        at = prev;
                    }
                    steps.reverse();
                    return Ok(Certificate::Word(AlperinWord { steps }));
                }
                states.push(next);
            }
        }
    }
    Err(FusionError::SearchFailed(
        "morphism belongs to the system but no host chain reaches it".into(),
    ))
}
