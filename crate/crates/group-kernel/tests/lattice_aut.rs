//! Subgroup lattices against a brute-force subset oracle, normal lattices,
//! automorphism groups and isomorphism testing.

use std::collections::BTreeMap;

use group_kernel::elem::ElemData;
use group_kernel::group::Group;
use group_kernel::lattice;
use group_kernel::realization::Realization;
use group_kernel::spec_io::{build_group, GroupSpec};
use group_kernel::{
    abelian_invariants, automorphism_group, automorphisms, fingerprint, group_isomorphism,
    IsoVerdict,
};

fn perm_group(degree: usize, gens: &[Vec<u16>]) -> Group {
    let data: Vec<ElemData> = gens.iter().map(|g| ElemData::Perm(g.clone())).collect();
    Group::generate(Realization::Perm { degree }, &data, 1_000_000).unwrap()
}

fn s4() -> Group {
    perm_group(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
}

fn d8() -> Group {
    perm_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

fn q8() -> Group {
    perm_group(8, &[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]])
}

fn c12() -> Group {
    perm_group(12, &[(1..12).chain([0]).map(|x| x as u16).collect()])
}

/// Exhaustive subset oracle, viable through order 16: a subset containing the
/// identity is a subgroup exactly when it is closed under multiplication.
fn subgroup_count_by_subsets(g: &Group) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let mut count = 0usize;
    for mask in 0u32..(1 << n) {
        if mask & (1 << g.identity) == 0 {
            continue;
        }
        let members: Vec<u32> = (0..n as u32).filter(|&i| mask & (1 << i) != 0).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| mask & (1 << g.mul(a, b)) != 0));
        if closed {
            count += 1;
        }
    }
    count
}

fn order_histogram(subs: &[group_kernel::Subgroup]) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for s in subs {
        *hist.entry(s.order()).or_insert(0) += 1;
    }
    hist
}

#[test]
fn lattice_matches_subset_oracle_on_small_groups() {
    for g in [d8(), q8(), c12()] {
        let subs = lattice::all_subgroups(&g, None, 4096).unwrap();
        assert_eq!(subs.len(), subgroup_count_by_subsets(&g));
        for s in &subs {
            // Closure and Lagrange.
            assert!(s.elems.iter().all(|&a| s.elems.iter().all(|&b| s.contains(g.mul(a, b)))));
            assert_eq!(g.order() % s.order(), 0);
        }
    }
}

#[test]
fn dihedral_and_quaternion_lattice_shapes() {
    let subs = lattice::all_subgroups(&d8(), None, 4096).unwrap();
    assert_eq!(subs.len(), 10);
    assert_eq!(
        order_histogram(&subs),
        [(1, 1), (2, 5), (4, 3), (8, 1)].into_iter().collect()
    );
    let subs = lattice::all_subgroups(&q8(), None, 4096).unwrap();
    assert_eq!(subs.len(), 6);
    assert_eq!(order_histogram(&subs), [(1, 1), (2, 1), (4, 3), (8, 1)].into_iter().collect());
}

#[test]
fn symmetric_4_has_thirty_subgroups() {
    let subs = lattice::all_subgroups(&s4(), None, 4096).unwrap();
    assert_eq!(subs.len(), 30);
    assert_eq!(
        order_histogram(&subs),
        [(1, 1), (2, 9), (3, 4), (4, 7), (6, 4), (8, 3), (12, 1), (24, 1)]
            .into_iter()
            .collect()
    );
}

#[test]
fn alternating_4_has_ten_subgroups() {
    // A4 generated by two 3-cycles.
    let a4 = perm_group(4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]);
    assert_eq!(a4.order(), 12);
    let subs = lattice::all_subgroups(&a4, None, 4096).unwrap();
    assert_eq!(subs.len(), 10);
    // No subgroup of order 6.
    assert!(subs.iter().all(|s| s.order() != 6));
}

#[test]
fn order_filter_prunes_enumeration() {
    let subs = lattice::all_subgroups(&s4(), Some(4), 4096).unwrap();
    assert!(subs.iter().all(|s| s.order() <= 4));
    assert_eq!(subs.len(), 1 + 9 + 4 + 7);
}

#[test]
fn special_linear_mod3_lattice() {
    let spec = GroupSpec::Matrix {
        p: 3,
        k: 1,
        dim: 2,
        generators: vec![vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]],
    };
    let sl = build_group(&spec, 100).unwrap();
    assert_eq!(sl.order(), 24);
    let subs = lattice::all_subgroups(&sl, None, 4096).unwrap();
    assert_eq!(subs.len(), 15);
    assert_eq!(
        order_histogram(&subs),
        [(1, 1), (2, 1), (3, 4), (4, 3), (6, 4), (8, 1), (24, 1)].into_iter().collect()
    );
}

#[test]
fn normal_lattices() {
    let normals = lattice::normal_subgroups(&s4(), 4096).unwrap();
    let orders: Vec<usize> = normals.iter().map(|n| n.order()).collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
    let normals = lattice::normal_subgroups(&d8(), 4096).unwrap();
    assert_eq!(normals.len(), 6);
    let normals = lattice::normal_subgroups(&q8(), 4096).unwrap();
    // Every subgroup of the quaternion group is normal.
    assert_eq!(normals.len(), 6);
}

#[test]
fn largest_normal_p_subgroups() {
    assert_eq!(lattice::o_p(&s4(), 2, 4096).unwrap().order(), 4);
    assert_eq!(lattice::o_p(&s4(), 3, 4096).unwrap().order(), 1);
    assert_eq!(lattice::o_p(&d8(), 2, 4096).unwrap().order(), 8);
}

#[test]
fn coprime_index_normal_overgroups() {
    let s3 = perm_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
    let at3: Vec<usize> =
        lattice::coprime_index_normals(&s3, 3).unwrap().iter().map(|n| n.order()).collect();
    assert_eq!(at3, vec![3, 6]);
    let at3: Vec<usize> =
        lattice::coprime_index_normals(&s4(), 3).unwrap().iter().map(|n| n.order()).collect();
    assert_eq!(at3, vec![12, 24]);
    let at2: Vec<usize> =
        lattice::coprime_index_normals(&s4(), 2).unwrap().iter().map(|n| n.order()).collect();
    // Transpositions generate everything, so only the group itself remains.
    assert_eq!(at2, vec![24]);
}

#[test]
fn automorphisms_of_small_groups() {
    assert_eq!(automorphisms(&d8(), 512, 512).unwrap().len(), 8);
    assert_eq!(automorphisms(&c12(), 512, 512).unwrap().len(), 4);
    let auts = automorphisms(&q8(), 512, 512).unwrap();
    assert_eq!(auts.len(), 24);
    let aq = automorphism_group(&q8(), 512, 512).unwrap();
    assert_eq!(group_isomorphism(&aq, &s4()).verdict, IsoVerdict::Isomorphic);
}

#[test]
fn automorphism_count_of_rank_two_homocyclic_group() {
    // (Z/9)^2 as a tame group over a trivial complement.
    let spec = GroupSpec::Tame {
        p: 3,
        e: 2,
        rank: 2,
        complement: Box::new(GroupSpec::Perm { degree: 1, generators: vec![] }),
        action: vec![],
    };
    let g = build_group(&spec, 100).unwrap();
    assert_eq!(g.order(), 81);
    // Invertible 2x2 matrices over Z/9: reduction mod 3 is onto the 48-element
    // general linear group with kernel of size 81.
    let auts = automorphisms(&g, 100, 4000).unwrap();
    assert_eq!(auts.len(), 3888);
}

#[test]
fn abelian_invariant_chains() {
    assert_eq!(abelian_invariants(&c12()), vec![12]);
    let spec = GroupSpec::Product {
        factors: vec![
            GroupSpec::Perm { degree: 2, generators: vec![vec![1, 0]] },
            GroupSpec::Perm { degree: 4, generators: vec![vec![1, 2, 3, 0]] },
        ],
    };
    assert_eq!(abelian_invariants(&build_group(&spec, 100).unwrap()), vec![2, 4]);
    let spec = GroupSpec::Tame {
        p: 3,
        e: 2,
        rank: 2,
        complement: Box::new(GroupSpec::Perm { degree: 1, generators: vec![] }),
        action: vec![],
    };
    assert_eq!(abelian_invariants(&build_group(&spec, 100).unwrap()), vec![9, 9]);
    let c2 = GroupSpec::Perm { degree: 2, generators: vec![vec![1, 0]] };
    let c2cubed = GroupSpec::Product { factors: vec![c2.clone(), c2.clone(), c2] };
    assert_eq!(abelian_invariants(&build_group(&c2cubed, 100).unwrap()), vec![2, 2, 2]);
}

#[test]
fn fingerprints_separate_close_pairs() {
    let f_d8 = fingerprint(&d8());
    let f_q8 = fingerprint(&q8());
    assert_ne!(f_d8, f_q8);
    assert_eq!(f_d8.center_order, 2);
    assert_eq!(f_d8.derived_length, 2);
    let f_s4 = fingerprint(&s4());
    assert_eq!(f_s4.derived_length, 3);
    assert_eq!(f_s4.abelianization, vec![2]);
    assert_eq!(f_s4.class_sizes, vec![(1, 1), (3, 1), (6, 2), (8, 1)]);
}

#[test]
fn isomorphism_verdicts() {
    assert_eq!(group_isomorphism(&d8(), &q8()).verdict, IsoVerdict::FingerprintsDiffer);
    // Same group in two presentations.
    let d8_alt = perm_group(4, &[vec![3, 0, 1, 2], vec![2, 1, 0, 3]]);
    let res = group_isomorphism(&d8(), &d8_alt);
    assert_eq!(res.verdict, IsoVerdict::Isomorphic);
    let w = res.witness.unwrap();
    let (a, b) = (&d8(), &d8_alt);
    for x in 0..8u32 {
        for y in 0..8u32 {
            assert_eq!(w.apply(a.mul(x, y)), b.mul(w.apply(x), w.apply(y)));
        }
    }
    // Same order, different structure: dihedral of order 12 against A4.
    let d12 = perm_group(6, &[vec![1, 2, 3, 4, 5, 0], vec![0, 5, 4, 3, 2, 1]]);
    let a4 = perm_group(4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]);
    assert_eq!(group_isomorphism(&d12, &a4).verdict, IsoVerdict::FingerprintsDiffer);
}
