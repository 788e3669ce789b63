//! Product of two fusion systems, carried by the direct product of their
//! underlying groups and generated by componentwise morphisms.

use std::sync::Arc;

use group_kernel::elem::ElemData;
use group_kernel::group::Group;
use group_kernel::spec_io::{self, GroupSpec};

use crate::error::Result;
use crate::map::{Ambient, SubMap};
use crate::system::FusionSystem;

pub struct ProductFusion {
    pub system: FusionSystem,
    /// Factor element ids → product element id.
    pub pair_id: Vec<Vec<u32>>,
    /// Product element id → factor element ids.
    pub split: Vec<(u32, u32)>,
    /// Indices of S₁ × 1 and 1 × S₂ in the product ambient table.
    pub left_factor: usize,
    pub right_factor: usize,
}

pub fn product_fusion(f1: &FusionSystem, f2: &FusionSystem) -> Result<ProductFusion> {
    assert_eq!(f1.p, f2.p, "product factors must share the prime");
    let s1 = &f1.amb.s;
    let s2 = &f2.amb.s;
    let spec = GroupSpec::Product {
        factors: vec![spec_io::spec_of(s1), spec_io::spec_of(s2)],
    };
    let cap = s1.order() * s2.order();
    let s: Arc<Group> = Arc::new(spec_io::build_group(&spec, cap)?);
    assert_eq!(s.order(), cap, "product enumerates to the full order");
    s.ensure_mul_table();

    let split: Vec<(u32, u32)> = s
        .elems
        .iter()
        .map(|e| match e {
            ElemData::Prod(comps) => (
                s1.id_of(&comps[0]).expect("left component belongs to the left factor"),
                s2.id_of(&comps[1]).expect("right component belongs to the right factor"),
            ),
            _ => unreachable!("product realization holds product data"),
        })
        .collect();
    let mut pair_id = vec![vec![0u32; s2.order()]; s1.order()];
    for (pid, &(a, b)) in split.iter().enumerate() {
        pair_id[a as usize][b as usize] = pid as u32;
    }

    let amb = Ambient::new(Arc::clone(&s), f1.p, usize::MAX)?;

    // A subgroup A × B of the product, by table index.
    let embed_sub = |a_elems: &[u32], b_elems: &[u32]| -> usize {
        let mut ids: Vec<u32> = Vec::with_capacity(a_elems.len() * b_elems.len());
        for &x in a_elems {
            for &y in b_elems {
                ids.push(pair_id[x as usize][y as usize]);
            }
        }
        amb.idx_of_ids(&ids)
    };
    // The map φ₁ × φ₂ on such a subgroup.
    let embed_map = |m1: &SubMap, m2: &SubMap| -> SubMap {
        let src = embed_sub(f1.amb.elems(m1.src), f2.amb.elems(m2.src));
        let img: Vec<u32> = amb
            .elems(src)
            .iter()
            .map(|&pid| {
                let (a, b) = split[pid as usize];
                let ia = m1.apply(&f1.amb, a);
                let ib = m2.apply(&f2.amb, b);
                pair_id[ia as usize][ib as usize]
            })
            .collect();
        SubMap { src, img }
    };

    let full1 = f1.amb.idx_of(&group_kernel::subgroup::full(s1).bits);
    let full2 = f2.amb.idx_of(&group_kernel::subgroup::full(s2).bits);
    let id1 = SubMap::identity(&f1.amb, full1);
    let id2 = SubMap::identity(&f2.amb, full2);

    let mut seeds: Vec<SubMap> = Vec::new();
    for cl in &f1.classes {
        for t in &cl.to_rep {
            seeds.push(embed_map(t, &id2));
        }
        for om in &cl.outer {
            seeds.push(embed_map(om, &id2));
        }
    }
    for cl in &f2.classes {
        for t in &cl.to_rep {
            seeds.push(embed_map(&id1, t));
        }
        for om in &cl.outer {
            seeds.push(embed_map(&id1, om));
        }
    }

    let left_factor = embed_sub(f1.amb.elems(full1), &[s2.identity]);
    let right_factor = embed_sub(&[s1.identity], f2.amb.elems(full2));
    let system = crate::build::close(amb, f1.p, seeds)?;
    Ok(ProductFusion { system, pair_id, split, left_factor, right_factor })
}
