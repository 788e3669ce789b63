//! Closure engine: the smallest fusion system on S containing inner
//! conjugation together with a list of declared automorphisms.
//!
//! Classes live in a union-find over the subgroup table, each node holding a
//! map to its parent. Automizers of roots are kept as canonical coset labels
//! modulo inner automorphisms and grown to closed groups after every insert.
//! Divisibility is restored by restricting every new morphism to the maximal
//! subgroups of its source; the worklist drains when the system is closed.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use group_kernel::group::Group;

use crate::error::{FusionError, Result};
use crate::map::{submap_from_gen_images, Ambient, SubMap};
use crate::system::{FClass, FusionSystem};

/// One declared generator: a subgroup of S given by generators, and
/// automorphisms of it given by images of those generators.
#[derive(Clone, Debug)]
pub struct GeneratorDatum {
    pub subgroup: Vec<u32>,
    pub automorphisms: Vec<Vec<u32>>,
}

pub const CLOSURE_CAP: usize = 2_000_000;

struct Builder<'a> {
    amb: &'a Ambient,
    parent: Vec<usize>,
    /// up[i]: subs[i] → subs[parent[i]], identity at roots.
    up: Vec<SubMap>,
    /// Root → canonical outer labels (automorphisms of the root mod inner).
    outer: HashMap<usize, Vec<SubMap>>,
    outer_set: HashMap<usize, HashSet<Vec<u32>>>,
    queue: VecDeque<SubMap>,
    events: usize,
}

impl<'a> Builder<'a> {
    fn new(amb: &'a Ambient) -> Builder<'a> {
        let n = amb.subs.len();
        let parent = (0..n).collect();
        let up = (0..n).map(|i| SubMap::identity(amb, i)).collect();
        Builder {
            amb,
            parent,
            up,
            outer: HashMap::new(),
            outer_set: HashMap::new(),
            queue: VecDeque::new(),
            events: 0,
        }
    }

    fn bump(&mut self) -> Result<()> {
        self.events += 1;
        if self.events > CLOSURE_CAP {
            return Err(FusionError::ClosureCapExceeded(CLOSURE_CAP));
        }
        Ok(())
    }

    /// Root of i, with path compression; up[i] ends up mapping straight to it.
    fn find(&mut self, i: usize) -> usize {
        let mut chain = vec![i];
        let mut r = i;
        while self.parent[r] != r {
            r = self.parent[r];
            chain.push(r);
        }
        // Recompose maps along the chain, proceeding from just below the root
        // downwards so each node's parent already points straight at it.
        for &node in chain.iter().rev().skip(1) {
            debug_assert_eq!(self.parent[self.parent[node]], r);
            let pm = self.up[self.parent[node]].clone();
            let my = self.up[node].then(self.amb, &pm);
            self.up[node] = my;
            self.parent[node] = r;
        }
        r
    }

    fn outer_of(&mut self, r: usize) -> &mut Vec<SubMap> {
        self.outer.entry(r).or_insert_with(|| Vec::new())
    }

    /// Insert a canonical automorphism label of root r; grow the label set to
    /// a closed group and queue restrictions of genuinely new labels.
    fn add_outer(&mut self, r: usize, m: SubMap) -> Result<()> {
        if self
            .outer_set
            .get(&r)
            .map_or(false, |set| set.contains(&m.img))
        {
            return Ok(());
        }
        self.bump()?;
        self.outer_set.entry(r).or_insert_with(HashSet::new).insert(m.img.clone());
        self.outer_of(r).push(m.clone());
        self.queue_restrictions(&m);
        // Close under composition: new·old, old·new, inverses surface as
        // powers inside the finite closure.
        let mut fresh = vec![m];
        while let Some(f) = fresh.pop() {
            let existing: Vec<SubMap> = self.outer[&r].clone();
            for e in existing {
                for prod in [f.then(self.amb, &e), e.then(self.amb, &f)] {
                    let canon = prod.canonical_mod_inner(self.amb);
                    if self.outer_set[&r].contains(&canon.img) {
                        continue;
                    }
                    self.bump()?;
                    self.outer_set.get_mut(&r).unwrap().insert(canon.img.clone());
                    self.outer.get_mut(&r).unwrap().push(canon.clone());
                    self.queue_restrictions(&canon);
                    fresh.push(canon);
                }
            }
        }
        Ok(())
    }

    fn queue_restrictions(&mut self, m: &SubMap) {
        for &mx in &self.amb.maximals[m.src] {
            self.queue.push_back(m.restrict(self.amb, mx));
        }
    }

    /// Fold one injective morphism into the structure.
    fn integrate(&mut self, phi: SubMap) -> Result<()> {
        let amb = self.amb;
        let src = phi.src;
        let tgt = phi.image_idx(amb);
        let ra = self.find(src);
        let rb = self.find(tgt);
        // Transport to a map between roots.
        let ia = self.up[src].clone();
        let ib = self.up[tgt].clone();
        let psi = ia.inverse(amb).then(amb, &phi).then(amb, &ib);
        if ra == rb {
            let canon = psi.canonical_mod_inner(amb);
            self.add_outer(ra, canon)?;
            return Ok(());
        }
        self.bump()?;
        // Merge: keep the root with the smaller index.
        let (winner, loser, down) = if ra < rb {
            // psi: ra → rb, need loser rb → winner ra.
            (ra, rb, psi.inverse(amb))
        } else {
            (rb, ra, psi)
        };
        self.parent[loser] = winner;
        self.up[loser] = down.clone();
        // Transport the loser's automizer onto the winner.
        let moved: Vec<SubMap> = self
            .outer
            .remove(&loser)
            .unwrap_or_default()
            .into_iter()
            .map(|m| down.inverse(amb).then(amb, &m).then(amb, &down).canonical_mod_inner(amb))
            .collect();
        self.outer_set.remove(&loser);
        for m in moved {
            self.add_outer(winner, m)?;
        }
        // The merge map itself restricts downwards.
        self.queue_restrictions(&down);
        Ok(())
    }

    fn drain(&mut self) -> Result<()> {
        while let Some(m) = self.queue.pop_front() {
            self.bump()?;
            self.integrate(m)?;
        }
        Ok(())
    }

    /// Assemble classes from the union-find state.
    fn finish(mut self, p: u64) -> FusionSystem {
        let amb = self.amb;
        let n = amb.subs.len();
        for i in 0..n {
            self.find(i);
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..n {
            groups.entry(self.parent[i]).or_default().push(i);
        }
        let mut classes: Vec<FClass> = Vec::new();
        for (root, mut members) in groups {
            members.sort_unstable();
            // Representative: least element list among members.
            let rep = *members
                .iter()
                .min_by(|&&a, &&b| amb.elems(a).cmp(amb.elems(b)))
                .unwrap();
            let outer_root = self.outer.remove(&root).unwrap_or_default();
            // Automizer at the chosen representative.
            let root_to_rep = self.up[rep].inverse(amb);
            let mut outer: Vec<SubMap> = outer_root
                .into_iter()
                .map(|m| {
                    self.up[rep]
                        .then(amb, &m)
                        .then(amb, &root_to_rep)
                        .canonical_mod_inner(amb)
                })
                .collect();
            let ident = SubMap::identity(amb, rep).canonical_mod_inner(amb);
            if outer.is_empty() {
                outer.push(ident);
            }
            outer.sort_by(|a, b| a.img.cmp(&b.img));
            outer.dedup_by(|a, b| a.img == b.img);
            let to_rep: Vec<SubMap> = members
                .iter()
                .map(|&m| {
                    if m == rep {
                        SubMap::identity(amb, rep)
                    } else {
                        self.up[m].then(amb, &root_to_rep)
                    }
                })
                .collect();
            classes.push(FClass::new(rep, members, to_rep, outer));
        }
        classes.sort_by(|a, b| {
            (amb.subs[a.rep].order(), amb.elems(a.rep))
                .cmp(&(amb.subs[b.rep].order(), amb.elems(b.rep)))
        });
        let amb_owned = Ambient {
            s: Arc::clone(&amb.s),
            subs: amb.subs.clone(),
            index: amb.index.clone(),
            maximals: amb.maximals.clone(),
        };
        FusionSystem::new(amb_owned, p, classes)
    }
}

/// Close the given seed morphisms, together with all of S-conjugation, into a
/// fusion system over the ambient table.
pub(crate) fn close(amb: Ambient, p: u64, seeds: Vec<SubMap>) -> Result<FusionSystem> {
    let mut b = Builder::new(&amb);
    for i in 0..amb.subs.len() {
        for &g in &amb.s.gens {
            b.queue.push_back(SubMap::conj(&amb, g, i));
        }
    }
    for m in seeds {
        b.queue.push_back(m);
    }
    b.drain()?;
    Ok(b.finish(p))
}

/// The inner fusion system F_S(S): conjugation by elements of S only.
pub fn inner_fusion(s: Arc<Group>, p: u64, lattice_cap: usize) -> Result<FusionSystem> {
    generated_fusion(s, p, &[], lattice_cap)
}

/// The smallest fusion system on S containing S-conjugation and the declared
/// automorphisms.
pub fn generated_fusion(
    s: Arc<Group>,
    p: u64,
    data: &[GeneratorDatum],
    lattice_cap: usize,
) -> Result<FusionSystem> {
    if !is_p_group(&s, p) {
        return Err(FusionError::NotPSubgroup(p));
    }
    s.ensure_mul_table();
    let amb = Ambient::new(Arc::clone(&s), p, lattice_cap)?;
    let mut seeds = Vec::new();
    for d in data {
        if d.subgroup.is_empty() && !d.automorphisms.is_empty() {
            return Err(FusionError::InvalidDatum(
                "automorphisms of an empty generating set".into(),
            ));
        }
        let sub_idx = {
            let h = group_kernel::subgroup::generate(&s, &d.subgroup);
            amb.idx_of(&h.bits)
        };
        for a in &d.automorphisms {
            if a.len() != d.subgroup.len() {
                return Err(FusionError::InvalidDatum(
                    "image list length differs from generator list".into(),
                ));
            }
            let pairs: Vec<(u32, u32)> =
                d.subgroup.iter().copied().zip(a.iter().copied()).collect();
            let m = submap_from_gen_images(&amb, sub_idx, &pairs)?;
            if !m.is_automorphism(&amb) {
                return Err(FusionError::InvalidDatum(
                    "declared map is not an automorphism of its subgroup".into(),
                ));
            }
            seeds.push(m);
        }
    }
    close(amb, p, seeds)
}

pub(crate) fn is_p_group_order(order: u64, p: u64) -> bool {
    let mut n = order;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn is_p_group(g: &Group, p: u64) -> bool {
    is_p_group_order(g.order() as u64, p)
}
