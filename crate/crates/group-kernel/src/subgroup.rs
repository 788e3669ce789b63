//! Subgroups as id sets over a parent group, with closure, normalizer,
//! centralizer and conjugation.

use crate::bits::BitSet;
use crate::elem::ElemData;
use crate::group::Group;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub bits: BitSet,
    /// Ascending ids.
    pub elems: Vec<u32>,
    /// Small generating set kept for cheap re-closure.
    pub gens: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.bits.contains(id as usize)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn key(&self) -> &BitSet {
        &self.bits
    }
}

pub fn trivial(g: &Group) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    bits.insert(g.identity as usize);
    Subgroup { bits, elems: vec![g.identity], gens: vec![] }
}

pub fn full(g: &Group) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    for i in 0..g.order() {
        bits.insert(i);
    }
    Subgroup { bits, elems: g.all_ids(), gens: g.gens.clone() }
}

/// Closure of a generating set inside the parent.
pub fn generate(g: &Group, gen_ids: &[u32]) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    bits.insert(g.identity as usize);
    let mut elems = vec![g.identity];
    let mut frontier = vec![g.identity];
    let live: Vec<u32> = {
        let mut v: Vec<u32> = gen_ids.iter().copied().filter(|&x| x != g.identity).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    while let Some(cur) = frontier.pop() {
        for &x in &live {
            let nxt = g.mul(cur, x);
            if bits.insert(nxt as usize) {
                elems.push(nxt);
                frontier.push(nxt);
            }
        }
    }
    elems.sort_unstable();
    Subgroup { bits, elems, gens: live }
}

/// Builds a subgroup from a set already known to be closed, attaching a small
/// generating set found greedily.
pub fn from_closed_set(g: &Group, ids: &[u32]) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    for &x in ids {
        bits.insert(x as usize);
    }
    let mut elems: Vec<u32> = ids.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let mut gens: Vec<u32> = Vec::new();
    let mut have = trivial(g);
    for &x in &elems {
        if !have.contains(x) {
            gens.push(x);
            have = generate(g, &gens);
            if have.order() == elems.len() {
                break;
            }
        }
    }
    debug_assert_eq!(have.order(), elems.len(), "input set was not closed");
    Subgroup { bits, elems, gens }
}

/// ⟨h, extra⟩
pub fn extend(g: &Group, h: &Subgroup, extra: &[u32]) -> Subgroup {
    let mut gens = h.gens.clone();
    gens.extend_from_slice(extra);
    generate(g, &gens)
}

pub fn conjugate(g: &Group, x: u32, h: &Subgroup) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    let mut elems: Vec<u32> = h.elems.iter().map(|&e| g.conj(x, e)).collect();
    for &e in &elems {
        bits.insert(e as usize);
    }
    elems.sort_unstable();
    let gens = h.gens.iter().map(|&e| g.conj(x, e)).collect();
    Subgroup { bits, elems, gens }
}

/// Conjugation closure check on generators: h is normal iff every generator of
/// g maps every generator of h back into h.
pub fn is_normal(g: &Group, h: &Subgroup) -> bool {
    g.gens.iter().all(|&x| h.gens.iter().all(|&e| h.contains(g.conj(x, e))))
}

pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    let ids: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| h.gens.iter().all(|&e| h.contains(g.conj(x, e))))
        .collect();
    from_closed_set(g, &ids)
}

/// Centralizer of an arbitrary id set (not necessarily a subgroup).
pub fn centralizer_of_set(g: &Group, targets: &[u32]) -> Subgroup {
    let ids: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| targets.iter().all(|&t| g.mul(x, t) == g.mul(t, x)))
        .collect();
    from_closed_set(g, &ids)
}

pub fn centralizer(g: &Group, h: &Subgroup) -> Subgroup {
    centralizer_of_set(g, &h.gens)
}

pub fn center(g: &Group) -> Subgroup {
    centralizer_of_set(g, &g.gens.clone())
}

/// Center of a subgroup: elements of h commuting with all of h.
pub fn center_of(g: &Group, h: &Subgroup) -> Subgroup {
    let ids: Vec<u32> = h
        .elems
        .iter()
        .copied()
        .filter(|&x| h.gens.iter().all(|&t| g.mul(x, t) == g.mul(t, x)))
        .collect();
    from_closed_set(g, &ids)
}

/// Intersection of two subgroups.
pub fn intersect(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let bits = a.bits.intersect(&b.bits);
    let elems: Vec<u32> = bits.iter().map(|i| i as u32).collect();
    from_closed_set(g, &elems)
}

/// The subgroup as a standalone group in the parent's realization, together
/// with the id map into the parent.
pub fn lift(g: &Group, h: &Subgroup) -> (Group, Vec<u32>) {
    let gen_data: Vec<ElemData> =
        h.gens.iter().map(|&x| g.elems[x as usize].clone()).collect();
    let lifted = Group::generate(g.realization.clone(), &gen_data, h.order() + 1)
        .expect("closed subgroup enumerates within its own order");
    debug_assert_eq!(lifted.order(), h.order());
    let to_parent: Vec<u32> = lifted
        .elems
        .iter()
        .map(|e| g.id_of(e).expect("subgroup elements exist in the parent"))
        .collect();
    (lifted, to_parent)
}
