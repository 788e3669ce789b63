//! Positional classification of a subgroup inside a fusion system, the
//! fused element classes, and the lattice of strongly closed subgroups.

use std::collections::HashMap;

use group_kernel::bits::BitSet;
use group_kernel::elem::ElemData;
use group_kernel::group::Group;
use group_kernel::lattice;
use group_kernel::subgroup;
use group_kernel::zmod;

use crate::error::Result;
use crate::system::FusionSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupFlags {
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub fully_automized: bool,
    pub receptive: bool,
    pub centric: bool,
    pub radical: bool,
    pub essential: bool,
    pub weakly_closed: bool,
    pub strongly_closed: bool,
}

/// Out_F(P) of the class representative as an abstract group, via its left
/// regular action on the outer coset labels.
pub fn outer_group(f: &FusionSystem, class: usize) -> Result<Group> {
    let amb = &f.amb;
    let cl = &f.classes[class];
    let labels: Vec<&Vec<u32>> = cl.outer.iter().map(|m| &m.img).collect();
    let pos: HashMap<&Vec<u32>, usize> =
        labels.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let n = labels.len();
    let mut perms: Vec<ElemData> = Vec::with_capacity(n);
    for a in &cl.outer {
        let mut images = vec![0u16; n];
        for (j, b) in cl.outer.iter().enumerate() {
            let prod = b.then(amb, a).canonical_mod_inner(amb);
            images[j] = pos[&prod.img] as u16;
        }
        perms.push(ElemData::Perm(images));
    }
    let real = group_kernel::realization::Realization::Perm { degree: n };
    Ok(Group::generate(real, &perms, n.max(1))?)
}

/// Union-find over element ids of S identifying x with φ(x) for every
/// morphism φ of the system.
pub struct ElementFusion {
    parent: Vec<u32>,
}

impl ElementFusion {
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    pub fn class_of(&mut self, x: u32) -> u32 {
        self.find(x)
    }

    /// All elements fused with x, sorted.
    pub fn class_members(&mut self, x: u32) -> Vec<u32> {
        let r = self.find(x);
        (0..self.parent.len() as u32).filter(|&y| self.find(y) == r).collect()
    }
}

/// The fused element classes: the finest partition joining x with φ(x) for
/// every morphism. Identification maps and automizer labels generate all
/// morphisms up to inner conjugation, which the ambient generators supply.
pub fn element_fusion(f: &FusionSystem) -> ElementFusion {
    let amb = &f.amb;
    let s = &amb.s;
    let n = s.order() as usize;
    let mut ef = ElementFusion { parent: (0..n as u32).collect() };
    for x in 0..n as u32 {
        for &g in &s.gens {
            ef.union(x, s.conj(g, x));
        }
    }
    for cl in &f.classes {
        for t in &cl.to_rep {
            for (pos, &x) in amb.elems(t.src).iter().enumerate() {
                ef.union(x, t.img[pos]);
            }
        }
        for om in &cl.outer {
            for (pos, &x) in amb.elems(cl.rep).iter().enumerate() {
                ef.union(x, om.img[pos]);
            }
        }
    }
    ef
}

/// Strongly closed: no element leaves the subgroup under any morphism.
fn strongly_closed_bits(f: &FusionSystem, ef: &mut ElementFusion) -> Vec<bool> {
    let amb = &f.amb;
    let n = amb.s.order() as usize;
    let mut class_bits: HashMap<u32, BitSet> = HashMap::new();
    for x in 0..n as u32 {
        let r = ef.class_of(x);
        class_bits
            .entry(r)
            .or_insert_with(|| BitSet::new(n))
            .insert(x as usize);
    }
    amb.subs
        .iter()
        .map(|h| {
            h.elems
                .iter()
                .all(|&x| class_bits[&ef.class_of(x)].is_subset(&h.bits))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct StronglyClosedLattice {
    /// Indices of the nontrivial strongly closed subgroups, ascending order.
    pub members: Vec<usize>,
    /// Index of the intersection of all of them.
    pub minimal: usize,
    /// Whether that intersection is the trivial subgroup.
    pub minimal_is_trivial: bool,
}

pub fn strongly_closed_lattice(f: &FusionSystem) -> StronglyClosedLattice {
    let amb = &f.amb;
    let mut ef = element_fusion(f);
    let closed = strongly_closed_bits(f, &mut ef);
    let members: Vec<usize> = (0..amb.subs.len())
        .filter(|&i| closed[i] && amb.subs[i].order() > 1)
        .collect();
    let mut meet = subgroup::full(&amb.s).bits;
    for &i in &members {
        meet = meet.intersect(&amb.subs[i].bits);
    }
    let minimal = amb.idx_of(&meet);
    let minimal_is_trivial = amb.subs[minimal].order() == 1;
    StronglyClosedLattice { members, minimal, minimal_is_trivial }
}

/// Does `out` contain a strongly p-embedded subgroup? Exhaustive over the
/// subgroup lattice: H proper with p dividing |H| and p coprime to |H ∩ H^x|
/// for every x outside H.
pub fn has_strongly_p_embedded(out: &Group, p: u64, lattice_cap: usize) -> Result<bool> {
    if out.order() as u64 % p != 0 {
        return Ok(false);
    }
    let subs = lattice::all_subgroups(out, None, lattice_cap)?;
    for h in &subs {
        if h.order() == out.order() as usize || h.order() as u64 % p != 0 {
            continue;
        }
        let good = out.all_ids().iter().all(|&x| {
            if h.contains(x) {
                return true;
            }
            let conj = subgroup::conjugate(out, x, h);
            let inter = subgroup::intersect(out, h, &conj);
            inter.order() as u64 % p != 0
        });
        if good {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn classify_subgroup(f: &FusionSystem, sub: usize) -> Result<SubgroupFlags> {
    let amb = &f.amb;
    let s = &amb.s;
    let c = f.class_of[sub];
    let cl = &f.classes[c];
    let pos = cl.member_pos(sub).unwrap();

    let sizes = crate::saturation::norm_cent_sizes(f);
    let (ns, cs) = &sizes[c];
    let fully_normalized = ns[pos] == *ns.iter().max().unwrap();
    let fully_centralized = cs[pos] == *cs.iter().max().unwrap();
    let aut_p_part = zmod::p_part(f.aut_order(c), f.p);
    let fully_automized = (ns[pos] / cs[pos]) as u64 == aut_p_part;

    let whole = amb.subs[sub].order() == s.order() as usize;
    let receptive = if whole {
        true
    } else {
        let into_q = cl.to_rep[pos].inverse(amb);
        let autos = f.automorphisms_of_rep(c);
        let mut ok = true;
        'outer: for from_p in &cl.to_rep {
            for alpha in &autos {
                let phi = from_p.then(amb, alpha).then(amb, &into_q);
                let control = crate::saturation::control_subgroup(f, &phi);
                if amb.subs[control].bits == amb.subs[phi.src].bits {
                    continue;
                }
                if !crate::saturation::extends_over(f, &phi, control) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };

    let centric = cl.members.iter().all(|&m| {
        let cz = subgroup::centralizer(s, &amb.subs[m]);
        cz.bits.is_subset(&amb.subs[m].bits)
    });

    let out = outer_group(f, c)?;
    let radical = lattice::o_p(&out, f.p, usize::MAX)?.order() == 1;
    let essential = centric
        && fully_normalized
        && has_strongly_p_embedded(&out, f.p, usize::MAX)?;

    let weakly_closed = cl.members.len() == 1;
    let mut ef = element_fusion(f);
    let strongly_closed = {
        let h = &amb.subs[sub];
        let n = s.order() as usize;
        let mut ok = true;
        'els: for &x in &h.elems {
            let r = ef.class_of(x);
            for y in 0..n as u32 {
                if ef.class_of(y) == r && !h.contains(y) {
                    ok = false;
                    break 'els;
                }
            }
        }
        ok
    };

    Ok(SubgroupFlags {
        fully_normalized,
        fully_centralized,
        fully_automized,
        receptive,
        centric,
        radical,
        essential,
        weakly_closed,
        strongly_closed,
    })
}
