//! Morphisms between subgroups of one ambient p-group, stored as image lists
//! aligned with the canonical element order of the source subgroup.

use std::collections::HashMap;
use std::sync::Arc;

use group_kernel::bits::BitSet;
use group_kernel::group::Group;
use group_kernel::lattice;
use group_kernel::subgroup::Subgroup;

use crate::error::{FusionError, Result};

/// The ambient group together with its full subgroup table. Subgroups are
/// referenced by index everywhere; maps close inside the table because images
/// of subgroups are subgroups.
pub struct Ambient {
    pub s: Arc<Group>,
    pub subs: Vec<Subgroup>,
    pub index: HashMap<BitSet, usize>,
    /// Maximal (index-p) subgroups per table entry.
    pub maximals: Vec<Vec<usize>>,
}

impl Ambient {
    pub fn new(s: Arc<Group>, p: u64, lattice_cap: usize) -> Result<Ambient> {
        s.ensure_mul_table();
        let subs = lattice::all_subgroups(&s, None, lattice_cap)?;
        let index: HashMap<BitSet, usize> =
            subs.iter().enumerate().map(|(i, h)| (h.bits.clone(), i)).collect();
        let mut by_order: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, h) in subs.iter().enumerate() {
            by_order.entry(h.order()).or_default().push(i);
        }
        let mut maximals = vec![Vec::new(); subs.len()];
        for (i, h) in subs.iter().enumerate() {
            let below = h.order() / p as usize;
            if let Some(cands) = by_order.get(&below) {
                for &j in cands {
                    if subs[j].bits.is_subset(&h.bits) {
                        maximals[i].push(j);
                    }
                }
            }
        }
        Ok(Ambient { s, subs, index, maximals })
    }

    pub fn elems(&self, i: usize) -> &[u32] {
        &self.subs[i].elems
    }

    pub fn idx_of(&self, bits: &BitSet) -> usize {
        self.index[bits]
    }

    pub fn idx_of_ids(&self, ids: &[u32]) -> usize {
        let mut bits = BitSet::new(self.s.order() as usize);
        for &x in ids {
            bits.insert(x as usize);
        }
        self.index[&bits]
    }
}

/// img[i] is the image of subs[src].elems[i]. Always injective.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubMap {
    pub src: usize,
    pub img: Vec<u32>,
}

impl SubMap {
    pub fn identity(amb: &Ambient, i: usize) -> SubMap {
        SubMap { src: i, img: amb.elems(i).to_vec() }
    }

    /// Conjugation x ↦ g x g⁻¹ as a map out of subs[i].
    pub fn conj(amb: &Ambient, g: u32, i: usize) -> SubMap {
        let s = &amb.s;
        SubMap { src: i, img: amb.elems(i).iter().map(|&x| s.conj(g, x)).collect() }
    }

    pub fn apply(&self, amb: &Ambient, x: u32) -> u32 {
        let pos = amb.elems(self.src).binary_search(&x).expect("element of the source");
        self.img[pos]
    }

    pub fn image_bits(&self, amb: &Ambient) -> BitSet {
        let mut bits = BitSet::new(amb.s.order() as usize);
        for &y in &self.img {
            bits.insert(y as usize);
        }
        bits
    }

    pub fn image_idx(&self, amb: &Ambient) -> usize {
        amb.idx_of(&self.image_bits(amb))
    }

    pub fn is_automorphism(&self, amb: &Ambient) -> bool {
        let mut sorted = self.img.clone();
        sorted.sort_unstable();
        sorted == amb.elems(self.src)
    }

    /// Apply self, then g. The image of self must lie inside g's source.
    pub fn then(&self, amb: &Ambient, g: &SubMap) -> SubMap {
        SubMap { src: self.src, img: self.img.iter().map(|&y| g.apply(amb, y)).collect() }
    }

    pub fn inverse(&self, amb: &Ambient) -> SubMap {
        let tgt = self.image_idx(amb);
        let mut pairs: Vec<(u32, u32)> = amb
            .elems(self.src)
            .iter()
            .zip(&self.img)
            .map(|(&x, &y)| (y, x))
            .collect();
        pairs.sort_unstable();
        debug_assert!(pairs.iter().map(|p| p.0).eq(amb.elems(tgt).iter().copied()));
        SubMap { src: tgt, img: pairs.into_iter().map(|p| p.1).collect() }
    }

    /// Restriction to a subgroup of the source.
    pub fn restrict(&self, amb: &Ambient, to: usize) -> SubMap {
        debug_assert!(amb.subs[to].bits.is_subset(&amb.subs[self.src].bits));
        SubMap { src: to, img: amb.elems(to).iter().map(|&x| self.apply(amb, x)).collect() }
    }

    /// For an automorphism of subs[r]: the least image list in its coset
    /// modulo inner automorphisms of subs[r]. Deterministic coset labels make
    /// set membership and dedup exact.
    pub fn canonical_mod_inner(&self, amb: &Ambient) -> SubMap {
        let s = &amb.s;
        let elems = amb.elems(self.src);
        let mut best: Option<Vec<u32>> = None;
        for &x in elems {
            let cand: Vec<u32> = self.img.iter().map(|&y| s.conj(x, y)).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        SubMap { src: self.src, img: best.unwrap() }
    }

    pub fn is_homomorphism(&self, amb: &Ambient) -> bool {
        let s = &amb.s;
        let elems = amb.elems(self.src);
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let ab = s.mul(a, b);
                let pos = elems.binary_search(&ab).unwrap();
                if s.mul(self.img[i], self.img[j]) != self.img[pos] {
                    return false;
                }
            }
        }
        true
    }
}

/// Build the map determined by images of a generating set of subs[src],
/// verifying it extends to an injective homomorphism.
pub fn submap_from_gen_images(
    amb: &Ambient,
    src: usize,
    gens: &[(u32, u32)],
) -> Result<SubMap> {
    let s = &amb.s;
    let elems = amb.elems(src);
    let n = s.order() as usize;
    let mut img: Vec<Option<u32>> = vec![None; n];
    img[s.identity as usize] = Some(s.identity);
    let mut frontier: Vec<u32> = vec![s.identity];
    for &(x, y) in gens {
        if !amb.subs[src].contains(x) {
            return Err(FusionError::InvalidDatum("generator outside the subgroup".into()));
        }
        match img[x as usize] {
            None => {
                img[x as usize] = Some(y);
                frontier.push(x);
            }
            Some(old) if old != y => {
                return Err(FusionError::InvalidDatum("conflicting generator images".into()))
            }
            _ => {}
        }
    }
    // Multiplicative closure over the generated subgroup.
    let gen_pairs: Vec<(u32, u32)> = gens.to_vec();
    let mut i = 0;
    while i < frontier.len() {
        let a = frontier[i];
        i += 1;
        let fa = img[a as usize].unwrap();
        for &(g, fg) in &gen_pairs {
            let ag = s.mul(a, g);
            let fag = s.mul(fa, fg);
            match img[ag as usize] {
                None => {
                    img[ag as usize] = Some(fag);
                    frontier.push(ag);
                }
                Some(old) if old != fag => {
                    return Err(FusionError::InvalidDatum(
                        "generator images do not define a homomorphism".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    if frontier.len() != elems.len() {
        return Err(FusionError::InvalidDatum(
            "generators do not generate the stated subgroup".into(),
        ));
    }
    let out: Vec<u32> = elems.iter().map(|&x| img[x as usize].unwrap()).collect();
    let mut dedup = out.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != out.len() {
        return Err(FusionError::InvalidDatum("map is not injective".into()));
    }
    let m = SubMap { src, img: out };
    if !m.is_homomorphism(amb) {
        return Err(FusionError::InvalidDatum(
            "generator images do not define a homomorphism".into(),
        ));
    }
    Ok(m)
}
