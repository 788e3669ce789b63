//! Homomorphisms, automorphism groups, isomorphism search, and structure
//! fingerprints.

use std::collections::HashMap;

use serde::Serialize;

use crate::conjugacy;
use crate::elem::ElemData;
use crate::error::{KernelError, Result};
use crate::group::Group;
use crate::lattice;
use crate::quotient;
use crate::realization::Realization;
use crate::subgroup;

/// Total map src → dst by element id. Validity is established at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hom {
    pub images: Vec<u32>,
}

impl Hom {
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn identity(n: usize) -> Hom {
        Hom { images: (0..n as u32).collect() }
    }

    pub fn is_bijective(&self, dst_order: usize) -> bool {
        if self.images.len() != dst_order {
            return false;
        }
        let mut seen = vec![false; dst_order];
        for &y in &self.images {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        true
    }

    /// self then `then`.
    pub fn compose(&self, then: &Hom) -> Hom {
        Hom { images: self.images.iter().map(|&y| then.images[y as usize]).collect() }
    }
}

/// Extends generator images to a total map by breadth-first closure and checks
/// every Cayley edge, which forces multiplicativity on all products.
pub fn hom_from_gen_images(src: &Group, dst: &Group, gen_images: &[u32]) -> Result<Hom> {
    if gen_images.len() != src.gens.len() {
        return Err(KernelError::NotHomomorphism("wrong number of generator images".into()));
    }
    let mut images = vec![u32::MAX; src.order()];
    images[src.identity as usize] = dst.identity;
    let mut queue = std::collections::VecDeque::from([src.identity]);
    while let Some(cur) = queue.pop_front() {
        let img_cur = images[cur as usize];
        for (gi, &g) in src.gens.iter().enumerate() {
            let nxt = src.mul(cur, g);
            let img_nxt = dst.mul(img_cur, gen_images[gi]);
            let slot = &mut images[nxt as usize];
            if *slot == u32::MAX {
                *slot = img_nxt;
                queue.push_back(nxt);
            } else if *slot != img_nxt {
                return Err(KernelError::NotHomomorphism(
                    "generator images are inconsistent along the Cayley graph".into(),
                ));
            }
        }
    }
    debug_assert!(images.iter().all(|&x| x != u32::MAX));
    Ok(Hom { images })
}

/// Trial map with generation stamps, so backtracking never re-initializes.
struct StampMap {
    stamp: Vec<u32>,
    val: Vec<u32>,
    cur: u32,
}

impl StampMap {
    fn new(n: usize) -> Self {
        StampMap { stamp: vec![0; n], val: vec![0; n], cur: 0 }
    }

    fn next_gen(&mut self) {
        self.cur += 1;
    }

    #[inline]
    fn get(&self, i: u32) -> Option<u32> {
        if self.stamp[i as usize] == self.cur { Some(self.val[i as usize]) } else { None }
    }

    #[inline]
    fn set(&mut self, i: u32, v: u32) {
        self.stamp[i as usize] = self.cur;
        self.val[i as usize] = v;
    }
}

struct IsoSearch<'a> {
    src: &'a Group,
    dst: &'a Group,
    chain: Vec<u32>,
    src_class_size: Vec<usize>,
    dst_class_size: Vec<usize>,
    /// Assigned pairs (src generator, image) for the committed prefix.
    assigned: Vec<(u32, u32)>,
    trial: StampMap,
    last_frontier: Vec<u32>,
    committed: Vec<u32>,
    found: Vec<Hom>,
    want_all: bool,
    result_cap: usize,
    node_budget: u64,
}

pub const ISO_NODE_BUDGET: u64 = 20_000_000;

impl<'a> IsoSearch<'a> {
    /// Rebuilds the closure of the committed prefix plus one candidate pair in
    /// the stamped trial map. Returns false on any Cayley-edge conflict.
    fn try_extend(&mut self, g: u32, img: u32) -> bool {
        self.trial.next_gen();
        self.trial.set(self.src.identity, self.dst.identity);
        let mut pairs: Vec<(u32, u32)> = self.assigned.clone();
        pairs.push((g, img));
        let mut frontier: Vec<u32> = vec![self.src.identity];
        let mut qi = 0;
        while qi < frontier.len() {
            let x = frontier[qi];
            qi += 1;
            let ix = self.trial.get(x).unwrap();
            for &(gs, gd) in &pairs {
                if self.node_budget == 0 {
                    return false;
                }
                self.node_budget -= 1;
                let xs = self.src.mul(x, gs);
                let xd = self.dst.mul(ix, gd);
                match self.trial.get(xs) {
                    None => {
                        // Injectivity within the closure comes free at the end:
                        // equal sizes of source closure and image set.
                        self.trial.set(xs, xd);
                        frontier.push(xs);
                    }
                    Some(prev) => {
                        if prev != xd {
                            return false;
                        }
                    }
                }
            }
        }
        // Homomorphic image of a subgroup: injective iff image values distinct.
        let mut img_set: Vec<u32> = frontier.iter().map(|&x| self.trial.get(x).unwrap()).collect();
        img_set.sort_unstable();
        img_set.dedup();
        if img_set.len() != frontier.len() {
            return false;
        }
        // Class sizes must correspond under any isomorphism extension.
        for &x in &frontier {
            let y = self.trial.get(x).unwrap();
            if self.src_class_size[x as usize] != self.dst_class_size[y as usize]
                || self.src.order_of(x) != self.dst.order_of(y)
            {
                return false;
            }
        }
        self.last_frontier = frontier;
        true
    }

    fn commit_trial(&mut self) -> Vec<(u32, u32)> {
        // Save the previous committed images of trial-touched ids for rollback.
        let frontier = std::mem::take(&mut self.last_frontier);
        let mut touched = Vec::with_capacity(frontier.len());
        for i in frontier {
            let v = self.trial.get(i).unwrap();
            touched.push((i, self.committed[i as usize]));
            self.committed[i as usize] = v;
        }
        touched
    }

    fn rollback(&mut self, saved: Vec<(u32, u32)>) {
        for (i, v) in saved {
            self.committed[i as usize] = v;
        }
    }

    fn run(&mut self, level: usize) -> Result<()> {
        if level == self.chain.len() {
            let hom = Hom { images: self.committed.clone() };
            debug_assert!(hom.is_bijective(self.dst.order()));
            if self.found.len() >= self.result_cap {
                return Err(KernelError::CapExceeded {
                    what: "isomorphism enumeration",
                    need: self.found.len() + 1,
                    cap: self.result_cap,
                });
            }
            self.found.push(hom);
            return Ok(());
        }
        let g = self.chain[level];
        let go = self.src.order_of(g);
        let gc = self.src_class_size[g as usize];
        for cand in 0..self.dst.order() as u32 {
            if self.dst.order_of(cand) != go || self.dst_class_size[cand as usize] != gc {
                continue;
            }
            if self.node_budget == 0 {
                return Err(KernelError::CapExceeded {
                    what: "isomorphism search nodes",
                    need: 1,
                    cap: ISO_NODE_BUDGET as usize,
                });
            }
            if self.try_extend(g, cand) {
                let saved = self.commit_trial();
                self.assigned.push((g, cand));
                self.run(level + 1)?;
                self.assigned.pop();
                self.rollback(saved);
                if !self.want_all && !self.found.is_empty() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

fn small_generating_chain(g: &Group) -> Vec<u32> {
    let mut chain: Vec<u32> = Vec::new();
    let mut cur = subgroup::trivial(g);
    // Highest element order first keeps candidate sets small early.
    let mut order_sorted: Vec<u32> = (0..g.order() as u32).collect();
    order_sorted.sort_by_key(|&x| (std::cmp::Reverse(g.order_of(x)), x));
    while cur.order() < g.order() {
        let next = order_sorted.iter().copied().find(|&x| !cur.contains(x)).unwrap();
        chain.push(next);
        cur = subgroup::extend(g, &cur, &[next]);
    }
    chain
}

fn iso_search(src: &Group, dst: &Group, want_all: bool, result_cap: usize) -> Result<Vec<Hom>> {
    if src.order() != dst.order() {
        return Ok(vec![]);
    }
    let src_classes = conjugacy::element_classes(src);
    let dst_classes = conjugacy::element_classes(dst);
    let src_class_size: Vec<usize> = (0..src.order())
        .map(|i| src_classes.classes[src_classes.class_of[i] as usize].len())
        .collect();
    let dst_class_size: Vec<usize> = (0..dst.order())
        .map(|i| dst_classes.classes[dst_classes.class_of[i] as usize].len())
        .collect();
    let mut committed = vec![u32::MAX; src.order()];
    committed[src.identity as usize] = dst.identity;
    let mut search = IsoSearch {
        src,
        dst,
        chain: small_generating_chain(src),
        src_class_size,
        dst_class_size,
        assigned: Vec::new(),
        trial: StampMap::new(src.order()),
        last_frontier: Vec::new(),
        committed,
        found: Vec::new(),
        want_all,
        result_cap,
        node_budget: ISO_NODE_BUDGET,
    };
    search.run(0)?;
    Ok(search.found)
}

pub fn automorphisms(g: &Group, elem_cap: usize, result_cap: usize) -> Result<Vec<Hom>> {
    if g.order() > elem_cap {
        return Err(KernelError::CapExceeded {
            what: "automorphism group",
            need: g.order(),
            cap: elem_cap,
        });
    }
    g.ensure_mul_table();
    iso_search(g, g, true, result_cap)
}

/// Aut(G) as a permutation group on the elements of G. The permutation data of
/// each element is exactly its image table.
pub fn automorphism_group(g: &Group, elem_cap: usize, result_cap: usize) -> Result<Group> {
    let auts = automorphisms(g, elem_cap, result_cap)?;
    let perms: Vec<ElemData> = auts
        .iter()
        .map(|h| ElemData::Perm(h.images.iter().map(|&x| x as u16).collect()))
        .collect();
    Group::generate(Realization::Perm { degree: g.order() }, &perms, auts.len() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub exponent: u64,
    pub center_order: u64,
    pub derived_length: u32,
    pub abelianization: Vec<u64>,
    /// (class size, multiplicity), ascending.
    pub class_sizes: Vec<(usize, usize)>,
    /// (element order, count), ascending.
    pub order_histogram: Vec<(u32, usize)>,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let classes = conjugacy::element_classes(g);
    let mut hist: HashMap<u32, usize> = HashMap::new();
    for &o in g.orders() {
        *hist.entry(o).or_default() += 1;
    }
    let mut order_histogram: Vec<(u32, usize)> = hist.into_iter().collect();
    order_histogram.sort_unstable();
    let derived = derived_series(g);
    // For perfect groups the series is just [G] and the quotient is trivial.
    let ab_sub = &derived[1.min(derived.len() - 1)];
    let q = quotient::quotient(g, ab_sub).expect("derived subgroup is normal");
    let abelianization = abelian_invariants(&q.group);
    let derived_length = if derived.last().unwrap().order() == 1 {
        (derived.len() - 1) as u32
    } else {
        // Non-solvable: series stabilizes above the trivial group; report the
        // stabilization depth.
        derived.len() as u32
    };
    Fingerprint {
        order: g.order() as u64,
        exponent: g.exponent(),
        center_order: subgroup::center(g).order() as u64,
        derived_length,
        abelianization,
        class_sizes: classes.size_multiset(),
        order_histogram,
    }
}

/// Derived subgroup of a subgroup, inside the parent: normal closure (in h) of
/// the commutators of its generators.
pub fn derived_of_subgroup(g: &Group, h: &subgroup::Subgroup) -> subgroup::Subgroup {
    let mut seeds: Vec<u32> = Vec::new();
    for &a in &h.gens {
        for &b in &h.gens {
            seeds.push(g.comm(a, b));
        }
    }
    let mut cur = lattice::closure_incremental(g, seeds);
    loop {
        let extra: Vec<u32> = h
            .gens
            .iter()
            .flat_map(|&x| cur.gens.iter().map(move |&e| (x, e)))
            .map(|(x, e)| g.conj(x, e))
            .filter(|&y| !cur.contains(y))
            .collect();
        if extra.is_empty() {
            break;
        }
        cur = subgroup::extend(g, &cur, &extra);
    }
    cur
}

/// Full group, derived subgroup, second derived subgroup, ... until stable.
pub fn derived_series(g: &Group) -> Vec<subgroup::Subgroup> {
    let mut series = vec![subgroup::full(g)];
    loop {
        let last = series.last().unwrap();
        let next = derived_of_subgroup(g, last);
        if next.order() == last.order() {
            break;
        }
        let stop = next.order() == 1;
        series.push(next);
        if stop {
            break;
        }
    }
    series
}

/// Invariant factors d_1 | d_2 | ... of an abelian group, largest last.
pub fn abelian_invariants(g: &Group) -> Vec<u64> {
    assert!(g.is_abelian());
    let mut factors: Vec<u64> = Vec::new();
    let mut cur: Option<Group> = None;
    loop {
        let gref = cur.as_ref().unwrap_or(g);
        if gref.order() == 1 {
            break;
        }
        let exp = gref.exponent();
        let top = (0..gref.order() as u32)
            .find(|&x| gref.order_of(x) as u64 == exp)
            .expect("abelian group attains its exponent");
        factors.push(exp);
        let sub = subgroup::generate(gref, &[top]);
        let q = quotient::quotient(gref, &sub).expect("abelian");
        cur = Some(q.group);
    }
    factors.reverse();
    factors
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    FingerprintsMatch,
    FingerprintsDiffer,
}

pub struct IsoResult {
    pub verdict: IsoVerdict,
    pub witness: Option<Hom>,
    /// True when the verdict rests on full search, false on fingerprint-level
    /// evidence only (large groups, or an exhausted search budget).
    pub exhaustive: bool,
}

pub const ISO_SEARCH_MAX: usize = 100_000;

pub fn group_isomorphism(a: &Group, b: &Group) -> IsoResult {
    if a.order() == b.order() && a.elems == b.elems {
        // Same realization and identical element tables: the identity map.
        return IsoResult {
            verdict: IsoVerdict::Isomorphic,
            witness: Some(Hom::identity(a.order())),
            exhaustive: true,
        };
    }
    if fingerprint(a) != fingerprint(b) {
        return IsoResult {
            verdict: IsoVerdict::FingerprintsDiffer,
            witness: None,
            exhaustive: false,
        };
    }
    if a.order() <= ISO_SEARCH_MAX {
        a.ensure_mul_table();
        b.ensure_mul_table();
        match iso_search(a, b, false, 1) {
            Ok(found) if !found.is_empty() => IsoResult {
                verdict: IsoVerdict::Isomorphic,
                witness: found.into_iter().next(),
                exhaustive: true,
            },
            Ok(_) => IsoResult { verdict: IsoVerdict::NotIsomorphic, witness: None, exhaustive: true },
            Err(_) => IsoResult {
                verdict: IsoVerdict::FingerprintsMatch,
                witness: None,
                exhaustive: false,
            },
        }
    } else {
        IsoResult { verdict: IsoVerdict::FingerprintsMatch, witness: None, exhaustive: false }
    }
}
