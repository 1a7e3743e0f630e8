//! Polynomials over GF(2) packed into a `u64` bitmask (bit i = coefficient of x^i).

pub fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Carry-less product; both inputs must have degree below 32.
pub fn clmul(a: u64, b: u64) -> u64 {
    debug_assert!(a < 1 << 32 && b < 1 << 32);
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

pub fn rem(a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("reduction modulo the zero polynomial");
    let mut a = a;
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    rem(clmul(a, b), m)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree m is irreducible iff `x^(2^m) ≡ x (mod f)` and
/// `gcd(x^(2^(m/p)) − x, f) = 1` for every prime `p | m`.
pub fn is_irreducible(f: u64) -> bool {
    let m = match degree(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(m) if m > 31 => panic!("degree {m} exceeds the supported 31"),
        Some(m) => m,
    };
    let x = 0b10u64;
    // powers[i] = x^(2^i) mod f
    let mut powers = Vec::with_capacity(m as usize + 1);
    let mut cur = x;
    powers.push(cur);
    for _ in 0..m {
        cur = mulmod(cur, cur, f);
        powers.push(cur);
    }
    if powers[m as usize] != x {
        return false;
    }
    prime_factors(m as u64).into_iter().all(|p| gcd(f, powers[(m as u64 / p) as usize] ^ x) == 1)
}
