//! Enumerated finite groups: closure from generators, canonical element table,
//! id-level arithmetic.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::elem::ElemData;
use crate::error::{KernelError, Result};
use crate::realization::Realization;

pub const DEFAULT_ENUM_CAP: usize = 2_000_000;
pub const DEFAULT_LATTICE_CAP: usize = 4096;
pub const DEFAULT_AUT_CAP: usize = 512;

/// Orders up to this get a full multiplication table on first demand.
pub const MUL_TABLE_MAX: usize = 4096;

#[derive(Debug)]
pub struct Group {
    pub realization: Realization,
    /// Sorted ascending in the canonical element order; ids are positions here.
    pub elems: Vec<ElemData>,
    index: HashMap<ElemData, u32>,
    pub gens: Vec<u32>,
    pub identity: u32,
    inv_tab: Vec<u32>,
    orders: OnceLock<Vec<u32>>,
    mul_tab: OnceLock<Vec<u32>>,
}

impl Group {
    pub fn generate(realization: Realization, gen_data: &[ElemData], cap: usize) -> Result<Group> {
        for g in gen_data {
            realization.validate(g)?;
        }
        let id = realization.identity();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<ElemData, u32> = HashMap::new();
        index.insert(id, 0);
        let mut frontier = vec![0u32];
        let gen_datas: Vec<ElemData> = gen_data.to_vec();
        while let Some(cur) = frontier.pop() {
            let cur_data = elems[cur as usize].clone();
            for g in &gen_datas {
                let nxt = realization.mul(&cur_data, g);
                if !index.contains_key(&nxt) {
                    if elems.len() >= cap {
                        return Err(KernelError::CapExceeded {
                            what: "element enumeration",
                            need: elems.len() + 1,
                            cap,
                        });
                    }
                    let nid = elems.len() as u32;
                    index.insert(nxt.clone(), nid);
                    elems.push(nxt);
                    frontier.push(nid);
                }
            }
        }
        elems.sort_unstable();
        let index: HashMap<ElemData, u32> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let identity = index[&realization.identity()];
        // Generator ids keep the input order; tame complements rely on it to
        // stay aligned with their action matrices. A trivial group keeps an
        // empty generator list.
        let gens: Vec<u32> = gen_data.iter().map(|g| index[g]).collect();
        let inv_tab = elems.iter().map(|e| index[&realization.inv(e)]).collect();
        Ok(Group {
            realization,
            elems,
            index,
            gens,
            identity,
            inv_tab,
            orders: OnceLock::new(),
            mul_tab: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn id_of(&self, e: &ElemData) -> Option<u32> {
        self.index.get(e).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(tab) = self.mul_tab.get() {
            return tab[a as usize * self.elems.len() + b as usize];
        }
        let d = self.realization.mul(&self.elems[a as usize], &self.elems[b as usize]);
        self.index[&d]
    }

    /// Builds the full multiplication table for small groups; cheap no-op above
    /// the size bound or when already built.
    pub fn ensure_mul_table(&self) {
        let n = self.elems.len();
        if n > MUL_TABLE_MAX || self.mul_tab.get().is_some() {
            return;
        }
        self.mul_tab.get_or_init(|| {
            let mut tab = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let d = self.realization.mul(&self.elems[a], &self.elems[b]);
                    tab[a * n + b] = self.index[&d];
                }
            }
            tab
        });
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv_tab[a as usize]
    }

    /// g h g^{-1}
    pub fn conj(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// [a, b] = a^{-1} b^{-1} a b
    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: u32, n: i64) -> u32 {
        let (mut base, mut e) = if n < 0 { (self.inv(a), (-n) as u64) } else { (a, n as u64) };
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, a: u32) -> u32 {
        if let Some(tab) = self.orders.get() {
            return tab[a as usize];
        }
        order_of_data(&self.realization, &self.elems[a as usize])
    }

    /// Orders of every element, computed once.
    pub fn orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            self.elems.iter().map(|e| order_of_data(&self.realization, e)).collect()
        })
    }

    pub fn exponent(&self) -> u64 {
        self.orders().iter().fold(1u64, |acc, &o| lcm_u64(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whole-group membership bitset / id list (the improper subgroup view).
    pub fn all_ids(&self) -> Vec<u32> {
        (0..self.order() as u32).collect()
    }
}

fn order_of_data(r: &Realization, e: &ElemData) -> u32 {
    if let ElemData::Perm(p) = e {
        // lcm of cycle lengths
        let mut seen = vec![false; p.len()];
        let mut acc: u64 = 1;
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = p[cur] as usize;
                len += 1;
            }
            acc = lcm_u64(acc, len);
        }
        return acc as u32;
    }
    if let ElemData::Prod(parts) = e {
        if let Realization::Product(rs) = r {
            return parts
                .iter()
                .zip(rs)
                .fold(1u64, |acc, (x, rr)| lcm_u64(acc, order_of_data(rr, x) as u64))
                as u32;
        }
    }
    let id = r.identity();
    let mut cur = e.clone();
    let mut n = 1u32;
    while cur != id {
        cur = r.mul(&cur, e);
        n += 1;
    }
    n
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / crate::zmat::gcd_u64(a, b) * b
}
