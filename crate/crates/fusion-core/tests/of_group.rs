mod common;

use common::*;
use fusion_core::{
    classify_subgroup, fusion_of_group, fusion_of_group_sylow, strongly_closed_lattice,
    sylow_subgroup,
};
use group_kernel::subgroup;

#[test]
fn sylow_subgroups_are_found_and_flagged() {
    let g = s4();
    let s = sylow_subgroup(&g, 2);
    assert_eq!(s.order(), 8);
    let gf = fusion_of_group(&g, &s, 2, CAP).unwrap();
    assert!(gf.sylow);

    let s3 = sylow_subgroup(&g, 3);
    assert_eq!(s3.order(), 3);

    // A non-Sylow choice still builds, reported as such.
    let z = sub_of_perms(&g, &[vec![2, 3, 0, 1]]);
    let gf2 = fusion_of_group(&g, &z, 2, CAP).unwrap();
    assert!(!gf2.sylow);
    assert_eq!(gf2.system.classes.len(), 2);

    // A subgroup of composite order is rejected.
    let sym3 = sub_of_perms(&g, &[vec![1, 0, 2, 3], vec![1, 2, 0, 3]]);
    assert_eq!(sym3.order(), 6);
    assert!(fusion_of_group(&g, &sym3, 2, CAP).is_err());
}

#[test]
fn symmetric_group_fusion_class_table() {
    let g = s4();
    let gf = fusion_of_group_sylow(&g, 2, CAP).unwrap();
    let f = &gf.system;
    assert!(gf.sylow);
    // Classes: trivial, transposition pair, the fused central class (three
    // members), the cyclic four, both Kleins, and the whole group.
    assert_eq!(f.classes.len(), 7);
    let sizes: Vec<(usize, usize, u64)> = f
        .classes
        .iter()
        .enumerate()
        .map(|(c, cl)| (f.amb.subs[cl.rep].order(), cl.members.len(), f.aut_order(c)))
        .collect();
    assert_eq!(
        sizes,
        vec![
            (1, 1, 1),
            (2, 2, 1),
            (2, 3, 1),
            (4, 1, 2),
            (4, 1, 6),
            (4, 1, 2),
            (8, 1, 4),
        ]
    );
    assert!(f.is_saturated());
}

#[test]
fn normal_klein_is_essential_with_full_automizer_and_other_klein_is_not() {
    let g = s4();
    let f = fusion_of_group_sylow(&g, 2, CAP).unwrap().system;
    // Locate both Kleins inside the lifted Sylow by element orders and
    // centrality: the normal one is the class with automizer order 6.
    let mut normal_klein = None;
    let mut other_klein = None;
    for (c, cl) in f.classes.iter().enumerate() {
        if f.amb.subs[cl.rep].order() != 4 {
            continue;
        }
        let elems = f.amb.elems(cl.rep);
        let cyclic = elems.iter().any(|&x| f.s().order_of(x) == 4);
        if cyclic {
            continue;
        }
        match f.aut_order(c) {
            6 => normal_klein = Some(c),
            2 => other_klein = Some(c),
            o => panic!("unexpected Klein automizer order {o}"),
        }
    }
    let (nk, ok) = (normal_klein.unwrap(), other_klein.unwrap());

    let nk_flags = classify_subgroup(&f, f.classes[nk].rep).unwrap();
    assert!(nk_flags.centric);
    assert!(nk_flags.radical);
    assert!(nk_flags.essential);
    assert!(nk_flags.strongly_closed);
    assert!(nk_flags.weakly_closed);

    let ok_flags = classify_subgroup(&f, f.classes[ok].rep).unwrap();
    assert!(ok_flags.centric);
    assert!(!ok_flags.radical, "automizer of order 2 is its own 2-core");
    assert!(!ok_flags.essential);
    assert!(!ok_flags.strongly_closed);
    assert!(ok_flags.weakly_closed);
}

#[test]
fn cyclic_four_in_symmetric_fusion_is_neither_radical_nor_essential() {
    let g = s4();
    let f = fusion_of_group_sylow(&g, 2, CAP).unwrap().system;
    let c4 = f
        .classes
        .iter()
        .position(|cl| {
            f.amb.subs[cl.rep].order() == 4
                && f.amb.elems(cl.rep).iter().any(|&x| f.s().order_of(x) == 4)
        })
        .unwrap();
    let flags = classify_subgroup(&f, f.classes[c4].rep).unwrap();
    assert!(flags.centric);
    assert!(!flags.radical);
    assert!(!flags.essential);
}

#[test]
fn hom_classes_out_of_the_center() {
    let g = s4();
    let f = fusion_of_group_sylow(&g, 2, CAP).unwrap().system;
    let s_top = f.amb.idx_of(&subgroup::full(f.s()).bits);
    let z = f.amb.idx_of(&subgroup::center(f.s()).bits);
    assert_eq!(f.amb.subs[z].order(), 2);
    // The central involution maps to each double transposition; two of those
    // targets are interchanged by an inner map.
    assert_eq!(f.hom_classes(z, s_top).len(), 2);
    // The automizer of the whole Sylow subgroup is inner only.
    assert_eq!(f.hom_classes(s_top, s_top).len(), 1);
}

#[test]
fn strongly_closed_members_and_their_intersection() {
    let g = s4();
    let f = fusion_of_group_sylow(&g, 2, CAP).unwrap().system;
    let lat = strongly_closed_lattice(&f);
    let orders: Vec<usize> = lat.members.iter().map(|&i| f.amb.subs[i].order()).collect();
    assert_eq!(orders, vec![4, 8]);
    assert_eq!(f.amb.subs[lat.minimal].order(), 4);
    assert!(!lat.minimal_is_trivial);
    // The minimal member is the normal Klein: every element has order at
    // most 2 and it is normal in the Sylow subgroup.
    let elems = f.amb.elems(lat.minimal);
    assert!(elems.iter().all(|&x| f.s().order_of(x) <= 2));
}

#[test]
fn projective_fusion_fuses_all_involutions() {
    let g = psl27();
    assert_eq!(g.order(), 168);
    let gf = fusion_of_group_sylow(&g, 2, CAP).unwrap();
    let f = &gf.system;
    assert!(gf.sylow);
    assert_eq!(f.s().order(), 8);
    // One fused class of all five involution subgroups.
    assert_eq!(f.classes.len(), 6);
    let two_class = f
        .classes
        .iter()
        .position(|cl| f.amb.subs[cl.rep].order() == 2)
        .unwrap();
    assert_eq!(f.classes[two_class].members.len(), 5);
    // Both Klein classes now carry the full automorphism group.
    let klein_auts: Vec<u64> = f
        .classes
        .iter()
        .enumerate()
        .filter(|(_, cl)| {
            f.amb.subs[cl.rep].order() == 4
                && f.amb.elems(cl.rep).iter().all(|&x| f.s().order_of(x) <= 2)
        })
        .map(|(c, _)| f.aut_order(c))
        .collect();
    assert_eq!(klein_auts, vec![6, 6]);
    assert!(f.is_saturated());
    let lat = strongly_closed_lattice(&f);
    let orders: Vec<usize> = lat.members.iter().map(|&i| f.amb.subs[i].order()).collect();
    assert_eq!(orders, vec![8]);
}

#[test]
fn linear_group_fusion_on_its_semidihedral_sylow() {
    let g = gl23();
    assert_eq!(g.order(), 48);
    let gf = fusion_of_group_sylow(&g, 2, CAP).unwrap();
    let f = &gf.system;
    assert_eq!(f.s().order(), 16);
    assert!(f.is_saturated());
    // The quaternion subgroup is normal in the ambient group with automizer
    // the full symmetric group of its three cyclic subgroups.
    let q8 = f
        .classes
        .iter()
        .enumerate()
        .find(|(_, cl)| {
            f.amb.subs[cl.rep].order() == 8
                && f.amb.elems(cl.rep).iter().filter(|&&x| f.s().order_of(x) == 2).count() == 1
        })
        .map(|(c, _)| c)
        .unwrap();
    assert_eq!(f.classes[q8].outer.len(), 6);
    assert_eq!(f.aut_order(q8), 24);
    let flags = classify_subgroup(&f, f.classes[q8].rep).unwrap();
    assert!(flags.essential);
    // The cyclic maximal subgroup is not essential.
    let c8 = f
        .classes
        .iter()
        .enumerate()
        .find(|(_, cl)| {
            f.amb.subs[cl.rep].order() == 8
                && f.amb.elems(cl.rep).iter().any(|&x| f.s().order_of(x) == 8)
        })
        .map(|(c, _)| c)
        .unwrap();
    let c8_flags = classify_subgroup(&f, f.classes[c8].rep).unwrap();
    assert!(!c8_flags.essential);
}

#[test]
fn inner_fusion_of_every_group_in_a_small_sylow_corpus_is_saturated() {
    // Fusion of the Sylow subgroup inside its own normalizer closure: the
    // ambient group IS the p-group, so saturation is the base case.
    for (g, p) in [
        (d8(), 2u64),
        (a4(), 2),
        (s4(), 2),
        (s4(), 3),
        (gl23(), 2),
        (gl23(), 3),
        (sl23(), 2),
        (sl23(), 3),
        (psl27(), 2),
        (psl27(), 7),
        (sigma6(), 5),
    ] {
        let gf = fusion_of_group_sylow(&g, p, CAP).unwrap();
        assert!(gf.sylow);
        assert!(
            gf.system.is_saturated(),
            "fusion at p = {p} over a group of order {} must be saturated",
            g.order()
        );
    }
}
