//! Subgroup and normal-subgroup enumeration.
//!
//! Full lattices use layered prime extension for nilpotent groups (every
//! subgroup is subnormal, so order-ascending extension inside normalizers is
//! complete) and cyclic join closure for small general groups. Normal lattices
//! come from conjugacy-class closures joined pairwise.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::bits::BitSet;
use crate::conjugacy;
use crate::error::{KernelError, Result};
use crate::group::Group;
use crate::subgroup::{self, Subgroup};
use crate::sylow;
use crate::zmod;

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_nilpotent(g: &Group) -> bool {
    prime_divisors(g.order() as u64)
        .into_iter()
        .all(|p| subgroup::is_normal(g, &sylow::sylow(g, p)))
}

/// Closure of a growing seed list: adds each seed not already inside and
/// re-closes, so the generating set stays logarithmic.
pub fn closure_incremental<I: IntoIterator<Item = u32>>(g: &Group, seeds: I) -> Subgroup {
    let mut gens: Vec<u32> = Vec::new();
    let mut cur = subgroup::trivial(g);
    for s in seeds {
        if !cur.contains(s) {
            gens.push(s);
            cur = subgroup::generate(g, &gens);
        }
    }
    cur
}

const SMALL_GENERAL_MAX: usize = 512;
const RESULT_SANITY_CAP: usize = 200_000;

/// Every subgroup, optionally only those of order ≤ max_order.
pub fn all_subgroups(g: &Group, max_order: Option<u64>, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(KernelError::CapExceeded { what: "subgroup lattice", need: g.order(), cap });
    }
    g.ensure_mul_table();
    let mut subs = if is_nilpotent(g) {
        layered_subgroups(g, max_order)?
    } else if g.order() <= SMALL_GENERAL_MAX {
        join_closure_subgroups(g, max_order)?
    } else {
        return Err(KernelError::CapExceeded {
            what: "subgroup lattice on a non-nilpotent group",
            need: g.order(),
            cap: SMALL_GENERAL_MAX,
        });
    };
    subs.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
    Ok(subs)
}

fn layered_subgroups(g: &Group, max_order: Option<u64>) -> Result<Vec<Subgroup>> {
    let primes = prime_divisors(g.order() as u64);
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut by_order: BTreeMap<usize, Vec<Subgroup>> = BTreeMap::new();
    let triv = subgroup::trivial(g);
    seen.insert(triv.bits.clone());
    by_order.insert(1, vec![triv]);
    let mut done: Vec<Subgroup> = Vec::new();
    while let Some((&ord, _)) = by_order.iter().next() {
        let layer = by_order.remove(&ord).unwrap();
        for h in layer {
            let n = subgroup::normalizer(g, &h);
            // Children found so far for this h; skipping members avoids
            // rebuilding the same extension once per coset element.
            let mut children: Vec<BitSet> = Vec::new();
            for &y in &n.elems {
                if h.contains(y) || children.iter().any(|c| c.contains(y as usize)) {
                    continue;
                }
                let extends = primes.iter().any(|&q| h.contains(g.pow(y, q as i64)));
                if !extends {
                    continue;
                }
                let k = subgroup::extend(g, &h, &[y]);
                if let Some(mo) = max_order {
                    if k.order() as u64 > mo {
                        continue;
                    }
                }
                children.push(k.bits.clone());
                if seen.insert(k.bits.clone()) {
                    if seen.len() > RESULT_SANITY_CAP {
                        return Err(KernelError::CapExceeded {
                            what: "subgroup lattice size",
                            need: seen.len(),
                            cap: RESULT_SANITY_CAP,
                        });
                    }
                    by_order.entry(k.order()).or_default().push(k);
                }
            }
            done.push(h);
        }
    }
    Ok(done)
}

fn join_closure_subgroups(g: &Group, max_order: Option<u64>) -> Result<Vec<Subgroup>> {
    // Canonical generator per cyclic subgroup: the minimal id generating it.
    let mut cyclics: Vec<(u32, Subgroup)> = Vec::new();
    let mut seen_cyc: HashSet<BitSet> = HashSet::new();
    for x in 0..g.order() as u32 {
        if x == g.identity {
            continue;
        }
        let c = subgroup::generate(g, &[x]);
        if seen_cyc.insert(c.bits.clone()) {
            cyclics.push((x, c));
        }
    }
    let fits = |s: &Subgroup| max_order.map_or(true, |mo| s.order() as u64 <= mo);
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut out: Vec<Subgroup> = Vec::new();
    let mut queue: Vec<Subgroup> = Vec::new();
    let triv = subgroup::trivial(g);
    seen.insert(triv.bits.clone());
    queue.push(triv);
    while let Some(h) = queue.pop() {
        for (x, _) in &cyclics {
            if h.contains(*x) {
                continue;
            }
            let j = subgroup::extend(g, &h, &[*x]);
            if !fits(&j) {
                continue;
            }
            if seen.insert(j.bits.clone()) {
                queue.push(j.clone());
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// All normal subgroups: conjugacy-class closures, then pairwise joins to a
/// fixpoint. Joins use the order identity |AB| = |A||B|/|A∩B| to skip closures
/// that are forced to be containments or the whole group.
pub fn normal_subgroups(g: &Group, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(KernelError::CapExceeded { what: "normal subgroup lattice", need: g.order(), cap });
    }
    g.ensure_mul_table();
    let classes = conjugacy::element_classes(g);
    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    let mut lattice: Vec<Subgroup> = Vec::new();
    let add = |s: Subgroup, lattice: &mut Vec<Subgroup>, seen: &mut HashMap<BitSet, usize>| -> bool {
        if seen.contains_key(&s.bits) {
            return false;
        }
        seen.insert(s.bits.clone(), lattice.len());
        lattice.push(s);
        true
    };
    add(subgroup::trivial(g), &mut lattice, &mut seen);
    add(subgroup::full(g), &mut lattice, &mut seen);
    for cls in &classes.classes {
        let n = closure_incremental(g, cls.iter().copied());
        debug_assert!(subgroup::is_normal(g, &n));
        add(n, &mut lattice, &mut seen);
    }
    // Pairwise joins until stable.
    let mut i = 0;
    while i < lattice.len() {
        let mut j = 0;
        while j < i {
            let (a, b) = (&lattice[i], &lattice[j]);
            let inter = a.bits.intersect(&b.bits).count();
            let target = a.order() * b.order() / inter;
            if target == a.order() || target == b.order() {
                j += 1;
                continue;
            }
            let joined = if target == g.order() {
                subgroup::full(g)
            } else {
                let gens: Vec<u32> =
                    a.gens.iter().chain(b.gens.iter()).copied().collect();
                subgroup::generate(g, &gens)
            };
            add(joined, &mut lattice, &mut seen);
            j += 1;
        }
        i += 1;
    }
    lattice.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
    Ok(lattice)
}

/// Normal subgroups of index coprime to p: exactly the normal overgroups of
/// O^p(G), pulled back from the normal lattice of the small quotient.
pub fn coprime_index_normals(g: &Group, p: u64) -> Result<Vec<Subgroup>> {
    let p_elements: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| {
            let o = g.order_of(x) as u64;
            o > 1 && o == zmod::p_part(o, p)
        })
        .collect();
    let op = closure_incremental(g, p_elements);
    let q = crate::quotient::quotient(g, &op)?;
    let qnormals = normal_subgroups(&q.group, q.group.order().max(1))?;
    let mut out = Vec::new();
    for nq in qnormals {
        let ids: Vec<u32> =
            (0..g.order() as u32).filter(|&x| nq.contains(q.proj[x as usize])).collect();
        let mut bits = BitSet::new(g.order());
        for &x in &ids {
            bits.insert(x as usize);
        }
        // Generated by O^p(G) together with lifts of the quotient generators.
        let mut gens = op.gens.clone();
        gens.extend(nq.gens.iter().map(|&qg| q.reps[qg as usize]));
        let sub = Subgroup { bits, elems: ids, gens };
        if crate::zmat::gcd_u64((g.order() / sub.order()) as u64, p) == 1 {
            out.push(sub);
        }
    }
    out.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
    Ok(out)
}

/// Largest normal p-subgroup.
pub fn o_p(g: &Group, p: u64, cap: usize) -> Result<Subgroup> {
    let normals = normal_subgroups(g, cap)?;
    Ok(normals
        .into_iter()
        .filter(|n| {
            let o = n.order() as u64;
            o == zmod::p_part(o, p)
        })
        .max_by_key(|n| n.order())
        .expect("trivial subgroup is always present"))
}
