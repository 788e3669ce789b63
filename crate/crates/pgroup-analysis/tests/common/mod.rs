#![allow(dead_code)]

use group_kernel::group::{Group, DEFAULT_ENUM_CAP};
use group_kernel::spec_io::{build_group, matrix_spec, GroupSpec};

pub fn perm(degree: usize, gens: &[Vec<u16>]) -> Group {
    let spec = GroupSpec::Perm { degree, generators: gens.to_vec() };
    build_group(&spec, DEFAULT_ENUM_CAP).unwrap()
}

pub fn cyclic(n: usize) -> Group {
    let rot: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    perm(n, &[rot])
}

/// Dihedral group of order 2n acting on n points.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    let refl: Vec<u16> = (0..n).map(|i| ((n - i) % n) as u16).collect();
    perm(n, &[rot, refl])
}

/// Semidihedral of order 2m on Z/m, m = 2^(k-1): x+1 and (m/2 - 1)x.
pub fn semidihedral(m: usize) -> Group {
    let t: Vec<u16> = (0..m).map(|i| ((i + 1) % m) as u16).collect();
    let s: Vec<u16> = (0..m).map(|i| (i * (m / 2 - 1) % m) as u16).collect();
    perm(m, &[t, s])
}

/// Generalized quaternion of order 2m inside GL2(F17); zeta = element of
/// order m in F17* pairs with the antidiagonal twist.
fn quaternion_from(zeta: u32) -> Group {
    let inv = group_kernel::zmod::inv(zeta, 17).unwrap();
    let a = vec![vec![zeta, 0], vec![0, inv]];
    let b = vec![vec![0, 1], vec![16, 0]];
    build_group(&matrix_spec(17, 1, 2, vec![a, b]), DEFAULT_ENUM_CAP).unwrap()
}

pub fn quaternion8() -> Group {
    quaternion_from(4)
}

pub fn quaternion16() -> Group {
    quaternion_from(2)
}

pub fn quaternion32() -> Group {
    quaternion_from(3)
}

/// Extraspecial 3^{1+2} of exponent 3 as unitriangular 3x3 matrices over F3.
pub fn heisenberg3() -> Group {
    let a = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let b = vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]];
    build_group(&matrix_spec(3, 1, 3, vec![a, b]), DEFAULT_ENUM_CAP).unwrap()
}

/// (Z/p^e)^rank twisted by the coordinate swap of the complement C2.
pub fn torus_swap(p: u64, e: u32) -> Group {
    let spec = GroupSpec::Tame {
        p,
        e,
        rank: 2,
        complement: Box::new(GroupSpec::Perm { degree: 2, generators: vec![vec![1, 0]] }),
        action: vec![vec![vec![0, 1], vec![1, 0]]],
    };
    build_group(&spec, DEFAULT_ENUM_CAP).unwrap()
}

pub fn product(factors: Vec<GroupSpec>) -> Group {
    build_group(&GroupSpec::Product { factors }, DEFAULT_ENUM_CAP).unwrap()
}

pub fn cyclic_spec(n: usize) -> GroupSpec {
    let rot: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    GroupSpec::Perm { degree: n, generators: vec![rot] }
}

/// Direct product of cyclic groups given by their orders.
pub fn abelian(orders: &[usize]) -> Group {
    product(orders.iter().map(|&n| cyclic_spec(n)).collect())
}
