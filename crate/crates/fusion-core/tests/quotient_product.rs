//! Quotients by weakly closed subgroups, direct products, and lifting
//! morphisms back from a quotient, cross-checked against realizations.

mod common;

use common::*;
use fusion_core::{
    fusion_isomorphism, fusion_of_group_sylow, inner_fusion, lift_mod_q, normalizer_map_exists,
    product_fusion, quotient_fusion, strongly_closed_lattice, FusionError, FusionIso,
};
use group_kernel::spec_io::{build_group, spec_of, GroupSpec};
use group_kernel::subgroup;
use std::sync::Arc;

fn central_involution_idx(f: &fusion_core::FusionSystem) -> usize {
    let s = f.s();
    let z = *subgroup::center_of(s, &subgroup::full(s))
        .elems
        .iter()
        .find(|&&x| s.order_of(x) == 2)
        .expect("a central involution");
    sub_idx(f, &[z])
}

#[test]
fn quotient_by_the_central_involution_of_the_linear_group_fusion() {
    let gf = fusion_of_group_sylow(&gl23(), 2, CAP).unwrap();
    let f = &gf.system;
    let q = central_involution_idx(f);
    assert_eq!(f.class(q).members.len(), 1);

    let fq = quotient_fusion(f, q).unwrap();
    assert_eq!(fq.system.s().order(), 8);
    assert_eq!(fq.system.classes.len(), 7);
    assert!(fq.system.is_saturated());

    // The semidihedral group modulo its center is dihedral, and the linear
    // group modulo its center is the symmetric group on four points; the
    // quotient fusion system must match the directly realized one.
    let sym = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    assert!(matches!(
        fusion_isomorphism(&fq.system, &sym.system).unwrap(),
        FusionIso::Map(_)
    ));
}

#[test]
fn quotient_by_the_whole_group_is_the_trivial_system() {
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f = &gf.system;
    let top = (0..f.amb.subs.len())
        .find(|&i| f.amb.subs[i].order() == f.s().order())
        .unwrap();
    let fq = quotient_fusion(f, top).unwrap();
    assert_eq!(fq.system.s().order(), 1);
    assert_eq!(fq.system.classes.len(), 1);
    assert_eq!(fq.system.morphism_count(), 1);
    assert!(fq.system.is_saturated());
}

#[test]
fn collapsing_a_fused_subgroup_is_refused() {
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f = &gf.system;
    // The central involution of the Sylow subgroup fuses with two other
    // involutions inside the symmetric group, so it is not weakly closed.
    let q = central_involution_idx(f);
    assert_eq!(f.class(q).members.len(), 3);
    assert!(matches!(
        quotient_fusion(f, q),
        Err(FusionError::NotWeaklyClosed)
    ));
}

#[test]
fn lifting_quotient_morphisms_back_to_the_parent() {
    let gf = fusion_of_group_sylow(&gl23(), 2, CAP).unwrap();
    let f = &gf.system;
    let q = central_involution_idx(f);
    let fq = quotient_fusion(f, q).unwrap();
    let qamb = &fq.system.amb;

    // Every identification map in the quotient lifts to a parent morphism
    // between the full preimages, projecting back to what we started with.
    let mut lifted = 0;
    for cl in &fq.system.classes {
        for t in &cl.to_rep {
            let up = lift_mod_q(f, &fq, t).unwrap();
            assert_eq!(up.src, fq.preimage[t.src]);
            assert_eq!(up.image_idx(&f.amb), fq.preimage[t.image_idx(qamb)]);
            assert!(f.contains_map(&up));
            for &x in f.amb.elems(up.src) {
                let xq = fq.proj[x as usize];
                assert_eq!(fq.proj[up.apply(&f.amb, x) as usize], t.apply(qamb, xq));
            }
            lifted += 1;
        }
    }
    assert!(lifted > 7);
}

#[test]
fn normalizer_maps_reach_fully_normalized_conjugates() {
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f = &gf.system;
    let amb = &f.amb;
    let cl = f
        .classes
        .iter()
        .find(|cl| amb.subs[cl.rep].order() == 2 && cl.members.len() == 3)
        .expect("the fused involution class");

    // The fully normalized member is the one with the largest normalizer:
    // the central involution, normalized by all of S.
    let by_norm = |m: usize| subgroup::normalizer(f.s(), &amb.subs[m]).order();
    let p_idx = *cl.members.iter().max_by_key(|&&m| by_norm(m)).unwrap();
    assert_eq!(by_norm(p_idx), 8);

    for &q_idx in &cl.members {
        let psi = normalizer_map_exists(f, p_idx, q_idx).unwrap();
        let nq = subgroup::normalizer(f.s(), &amb.subs[q_idx]);
        assert_eq!(psi.src, amb.idx_of(&nq.bits));
        assert!(f.contains_map(&psi));
        for &x in amb.elems(q_idx) {
            assert!(amb.subs[p_idx].contains(psi.apply(amb, x)));
        }
        if q_idx == p_idx {
            assert_eq!(psi, fusion_core::SubMap::identity(amb, psi.src));
        } else {
            // The source is the Klein subgroup, all that normalizes a
            // non-central involution.
            assert_eq!(nq.order(), 4);
        }
    }

    // Members of different classes are rejected outright.
    let trivial = sub_idx(f, &[f.s().identity]);
    assert!(matches!(
        normalizer_map_exists(f, p_idx, trivial),
        Err(FusionError::InvalidDatum(_))
    ));
}

#[test]
fn product_with_an_inert_factor_and_its_collapse() {
    let c2 = perm(2, &[vec![1, 0]]);
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f1 = &gf.system;
    let f2 = inner_fusion(c2, 2, CAP).unwrap();

    let prod = product_fusion(f1, &f2).unwrap();
    assert_eq!(prod.system.s().order(), 16);
    assert!(prod.system.is_saturated());

    // Both factor subgroups are strongly closed in the product.
    let lat = strongly_closed_lattice(&prod.system);
    assert!(lat.members.contains(&prod.left_factor));
    assert!(lat.members.contains(&prod.right_factor));

    // Collapsing the inert factor recovers the first system.
    let fq = quotient_fusion(&prod.system, prod.right_factor).unwrap();
    assert!(matches!(
        fusion_isomorphism(&fq.system, f1).unwrap(),
        FusionIso::Map(_)
    ));
}

#[test]
fn product_of_inner_systems_is_the_inner_system_of_the_product() {
    let c2 = perm(2, &[vec![1, 0]]);
    let f1 = inner_fusion(d8(), 2, CAP).unwrap();
    let f2 = inner_fusion(c2.clone(), 2, CAP).unwrap();
    let prod = product_fusion(&f1, &f2).unwrap();

    let spec = GroupSpec::Product {
        factors: vec![spec_of(&d8()), spec_of(&c2)],
    };
    let g = Arc::new(build_group(&spec, CAP).unwrap());
    let inn = inner_fusion(g, 2, CAP).unwrap();
    assert_same_system(&prod.system, &inn);
    assert!(system_contains(&prod.system, &inn));
    assert!(system_contains(&inn, &prod.system));
}
