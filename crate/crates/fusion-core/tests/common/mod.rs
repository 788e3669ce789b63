#![allow(dead_code)]

use std::sync::Arc;

use group_kernel::elem::ElemData;
use group_kernel::group::Group;
use group_kernel::spec_io::{build_group, GroupSpec};
use group_kernel::subgroup::{self, Subgroup};

use fusion_core::{FusionSystem, GeneratorDatum};

pub const CAP: usize = 1 << 20;

pub fn perm(degree: usize, gens: &[Vec<u16>]) -> Arc<Group> {
    let spec = GroupSpec::Perm { degree, generators: gens.to_vec() };
    Arc::new(build_group(&spec, CAP).unwrap())
}

pub fn s4() -> Arc<Group> {
    perm(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]])
}

/// The dihedral Sylow 2-subgroup of the symmetric group on 4 points,
/// standalone: a 4-cycle and the reflection fixing its partition.
pub fn d8() -> Arc<Group> {
    perm(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]])
}

pub fn psl27() -> Arc<Group> {
    // x+1 and -1/x on the projective line over the 7-element field; the
    // point at infinity is 7.
    perm(
        8,
        &[
            vec![1, 2, 3, 4, 5, 6, 0, 7],
            vec![7, 6, 3, 2, 5, 4, 1, 0],
        ],
    )
}

pub fn sigma6() -> Arc<Group> {
    perm(6, &[vec![1, 2, 3, 4, 5, 0], vec![1, 0, 2, 3, 4, 5]])
}

pub fn gl23() -> Arc<Group> {
    let spec = GroupSpec::Matrix {
        p: 3,
        k: 1,
        dim: 2,
        generators: vec![
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        ],
    };
    Arc::new(build_group(&spec, CAP).unwrap())
}

pub fn sl23() -> Arc<Group> {
    let spec = GroupSpec::Matrix {
        p: 3,
        k: 1,
        dim: 2,
        generators: vec![
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![1, 0], vec![1, 1]],
        ],
    };
    Arc::new(build_group(&spec, CAP).unwrap())
}

pub fn a4() -> Arc<Group> {
    perm(4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]])
}

pub fn id_of_perm(g: &Group, images: &[usize]) -> u32 {
    let data = ElemData::perm_of(images);
    g.id_of(&data).expect("permutation belongs to the group")
}

pub fn sub_of_perms(g: &Arc<Group>, gens: &[Vec<usize>]) -> Subgroup {
    let ids: Vec<u32> = gens.iter().map(|v| id_of_perm(g, v)).collect();
    subgroup::generate(g, &ids)
}

/// Index of the subgroup generated by the given element ids.
pub fn sub_idx(f: &FusionSystem, gens: &[u32]) -> usize {
    let h = subgroup::generate(f.s(), gens);
    f.amb.idx_of(&h.bits)
}

pub fn sub_idx_perms(f: &FusionSystem, gens: &[Vec<usize>]) -> usize {
    let ids: Vec<u32> = gens.iter().map(|v| id_of_perm(f.s(), v)).collect();
    sub_idx(f, &ids)
}

/// Generator data giving a Klein four subgroup its full automorphism group:
/// the swap of the two listed generators and a 3-cycle of the involutions.
pub fn full_klein_aut(g: &Group, a: u32, b: u32) -> GeneratorDatum {
    let ab = g.mul(a, b);
    GeneratorDatum {
        subgroup: vec![a, b],
        automorphisms: vec![vec![b, a], vec![b, ab]],
    }
}

/// Structural equality of two systems over the same underlying group object:
/// identical class tables and automizer label sets.
pub fn assert_same_system(f1: &FusionSystem, f2: &FusionSystem) {
    assert_eq!(f1.s().order(), f2.s().order());
    assert_eq!(f1.classes.len(), f2.classes.len(), "class counts differ");
    for (c1, c2) in f1.classes.iter().zip(&f2.classes) {
        assert_eq!(f1.amb.elems(c1.rep), f2.amb.elems(c2.rep), "class reps differ");
        let m1: Vec<&[u32]> = c1.members.iter().map(|&m| f1.amb.elems(m)).collect();
        let m2: Vec<&[u32]> = c2.members.iter().map(|&m| f2.amb.elems(m)).collect();
        assert_eq!(m1, m2, "member lists differ");
        let mut o1: Vec<Vec<u32>> = c1.outer.iter().map(|m| m.img.clone()).collect();
        let mut o2: Vec<Vec<u32>> = c2.outer.iter().map(|m| m.img.clone()).collect();
        o1.sort();
        o2.sort();
        assert_eq!(o1, o2, "automizer labels differ");
    }
}

/// Every morphism of `inner` (its class identifications and automizer
/// labels) belongs to `outer`.
pub fn system_contains(outer: &FusionSystem, inner: &FusionSystem) -> bool {
    inner.classes.iter().all(|cl| {
        cl.to_rep
            .iter()
            .chain(cl.outer.iter())
            .all(|m| outer.contains_map(m))
    })
}
