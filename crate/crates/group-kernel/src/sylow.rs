//! Deterministic Sylow subgroup: seed with the first p-element, then grow
//! inside normalizers. Each round strictly enlarges the p-subgroup, and a
//! proper p-subgroup always sees a p-element of its normalizer outside itself.

use crate::group::Group;
use crate::subgroup::{self, Subgroup};
use crate::zmod;

pub fn p_part_of_order(g: &Group, p: u64) -> u64 {
    zmod::p_part(g.order() as u64, p)
}

pub fn sylow(g: &Group, p: u64) -> Subgroup {
    let target = p_part_of_order(g, p);
    let mut cur = subgroup::trivial(g);
    while (cur.order() as u64) < target {
        let n = if cur.order() == 1 { subgroup::full(g) } else { subgroup::normalizer(g, &cur) };
        let grown = n.elems.iter().copied().find_map(|y| {
            if cur.contains(y) {
                return None;
            }
            let o = g.order_of(y) as u64;
            if o == 1 || o != zmod::p_part(o, p) {
                return None;
            }
            Some(subgroup::extend(g, &cur, &[y]))
        });
        match grown {
            Some(k) => {
                debug_assert!(k.order() > cur.order());
                cur = k;
            }
            None => unreachable!("proper p-subgroup with no p-element in its normalizer"),
        }
    }
    cur
}
