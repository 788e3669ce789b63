//! Square matrices over Z/m (flat row-major u32) and integer matrices with
//! Smith/Hermite normal forms.

use crate::zmod;

pub fn mat_id(r: usize, m: u32) -> Vec<u32> {
    let mut a = vec![0u32; r * r];
    for i in 0..r {
        a[i * r + i] = 1 % m;
    }
    a
}

pub fn mat_mul(r: usize, m: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k] as u64;
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                let cur = out[i * r + j] as u64 + aik * b[k * r + j] as u64 % m as u64;
                out[i * r + j] = (cur % m as u64) as u32;
            }
        }
    }
    out
}

pub fn mat_vec(r: usize, m: u32, a: &[u32], v: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; r];
    for i in 0..r {
        let mut acc: u64 = 0;
        for j in 0..r {
            acc = (acc + a[i * r + j] as u64 * v[j] as u64) % m as u64;
        }
        out[i] = acc as u32;
    }
    out
}

/// Inverse mod m by Gaussian elimination; pivots must be units. None when singular mod m.
pub fn mat_inv(r: usize, m: u32, a: &[u32]) -> Option<Vec<u32>> {
    let mut left = a.to_vec();
    let mut right = mat_id(r, m);
    for col in 0..r {
        let pivot = (col..r).find(|&i| zmod::inv(left[i * r + col], m).is_some())?;
        if pivot != col {
            for j in 0..r {
                left.swap(col * r + j, pivot * r + j);
                right.swap(col * r + j, pivot * r + j);
            }
        }
        let pinv = zmod::inv(left[col * r + col], m).unwrap();
        for j in 0..r {
            left[col * r + j] = zmod::mul(left[col * r + j], pinv, m);
            right[col * r + j] = zmod::mul(right[col * r + j], pinv, m);
        }
        for i in 0..r {
            if i == col {
                continue;
            }
            let f = left[i * r + col];
            if f == 0 {
                continue;
            }
            for j in 0..r {
                let l = zmod::sub(left[i * r + j], zmod::mul(f, left[col * r + j], m), m);
                left[i * r + j] = l;
                let rr = zmod::sub(right[i * r + j], zmod::mul(f, right[col * r + j], m), m);
                right[i * r + j] = rr;
            }
        }
    }
    Some(right)
}

pub fn mat_pow(r: usize, m: u32, a: &[u32], mut e: u64) -> Vec<u32> {
    let mut acc = mat_id(r, m);
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(r, m, &acc, &base);
        }
        base = mat_mul(r, m, &base, &base);
        e >>= 1;
    }
    acc
}

/// Integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<i64>,
}

impl IMat {
    pub fn new(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, a: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::new(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        IMat { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::new(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self[(i, k)];
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] =
                        out[(i, j)].checked_add(v.checked_mul(other[(k, j)]).unwrap()).unwrap();
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.a.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[i] += f * row[j]
    fn add_row(&mut self, i: usize, j: usize, f: i64) {
        for c in 0..self.cols {
            let v = self[(j, c)].checked_mul(f).unwrap();
            self[(i, c)] = self[(i, c)].checked_add(v).unwrap();
        }
    }

    fn add_col(&mut self, i: usize, j: usize, f: i64) {
        for r in 0..self.rows {
            let v = self[(r, j)].checked_mul(f).unwrap();
            self[(r, i)] = self[(r, i)].checked_add(v).unwrap();
        }
    }

    fn neg_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -self[(i, c)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.a[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.a[r * self.cols + c]
    }
}

pub struct Smith {
    /// u * input * v = s with u, v unimodular, s diagonal and each
    /// diagonal entry dividing the next.
    pub u: IMat,
    pub s: IMat,
    pub v: IMat,
}

pub fn smith_normal_form(input: &IMat) -> Smith {
    let mut s = input.clone();
    let mut u = IMat::identity(s.rows);
    let mut v = IMat::identity(s.cols);
    let n = s.rows.min(s.cols);
    for t in 0..n {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    if s[(i, j)] != 0
                        && best.map_or(true, |(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != t {
                s.swap_rows(t, bi);
                u.swap_rows(t, bi);
            }
            if bj != t {
                s.swap_cols(t, bj);
                v.swap_cols(t, bj);
            }
            let mut clean = true;
            for i in t + 1..s.rows {
                let q = s[(i, t)].div_euclid(s[(t, t)]);
                if q != 0 {
                    s.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if s[(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..s.cols {
                let q = s[(t, j)].div_euclid(s[(t, t)]);
                if q != 0 {
                    s.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if s[(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot divides every entry of the remaining block, or pull the
            // offending row up and keep reducing.
            for i in t + 1..s.rows {
                for j in t + 1..s.cols {
                    if s[(i, j)] % s[(t, t)] != 0 {
                        s.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if s[(t, t)] < 0 {
            s.neg_row(t);
            u.neg_row(t);
        }
    }
    Smith { u, s, v }
}

/// Row-style Hermite normal form; returns the nonzero rows (a lattice basis,
/// upper triangular with entries above each pivot reduced into [0, pivot)).
pub fn hermite_rows(input: &IMat) -> IMat {
    let mut h = input.clone();
    let mut row = 0;
    for col in 0..h.cols {
        if row >= h.rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in row..h.rows {
                if h[(i, col)] != 0 && best.map_or(true, |b| h[(i, col)].abs() < h[(b, col)].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            if b != row {
                h.swap_rows(row, b);
            }
            let mut done = true;
            for i in row + 1..h.rows {
                let q = h[(i, col)].div_euclid(h[(row, col)]);
                if q != 0 {
                    h.add_row(i, row, -q);
                }
                if h[(i, col)] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)] != 0 {
            if h[(row, col)] < 0 {
                h.neg_row(row);
            }
            for i in 0..row {
                let q = h[(i, col)].div_euclid(h[(row, col)]);
                if q != 0 {
                    h.add_row(i, row, -q);
                }
            }
            row += 1;
        }
    }
    let rows: Vec<Vec<i64>> = (0..row).map(|i| (0..h.cols).map(|j| h[(i, j)]).collect()).collect();
    IMat::from_rows(rows)
}

/// Cyclic orders of a generating set for the solutions of A x = 0 over (Z/m)^cols,
/// one per column. The kernel is the direct sum of cyclic groups of these orders.
pub fn kernel_mod(input: &IMat, m: u64) -> Vec<u64> {
    let sm = smith_normal_form(input);
    let n = input.rows.min(input.cols);
    (0..input.cols)
        .map(|j| {
            let d = if j < n { sm.s[(j, j)].unsigned_abs() } else { 0 };
            gcd_u64(d % m, m)
        })
        .collect()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}
