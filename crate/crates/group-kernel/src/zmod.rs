//! Scalar arithmetic in Z/m for moduli that fit in u32.

pub fn add(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % m as u64) as u32
}

pub fn sub(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + (m - b % m) as u64;
    (s % m as u64) as u32
}

pub fn neg(a: u32, m: u32) -> u32 {
    if a % m == 0 { 0 } else { m - a % m }
}

pub fn mul(a: u32, b: u32, m: u32) -> u32 {
    ((a as u64 * b as u64) % m as u64) as u32
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), if a < 0 { -1 } else { 1 }, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse mod m; None when gcd(a, m) > 1.
pub fn inv(a: u32, m: u32) -> Option<u32> {
    let (g, x, _) = ext_gcd(a as i64, m as i64);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i64) as u32)
}

pub fn pow(mut a: u32, mut e: u64, m: u32) -> u32 {
    let mut acc: u32 = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, m);
        }
        a = mul(a, a, m);
        e >>= 1;
    }
    acc
}

/// p-adic valuation of n; n must be nonzero.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Largest power of p dividing n.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut q = 1;
    let mut n = n;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
