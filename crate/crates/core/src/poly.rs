//! Dense polynomial arithmetic over F_p and small integer number theory.
//!
//! Polynomials are coefficient vectors, constant term first, kept trimmed
//! (no trailing zeros; the zero polynomial is the empty vector).

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn mod_add(p: u64, a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn mod_sub(p: u64, a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mod_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_pow(p: u64, mut base: u64, mut e: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(p, acc, base);
        }
        base = mod_mul(p, base, base);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue mod prime p.
pub(crate) fn mod_inv(p: u64, a: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(p, a, p - 2)
}

/// Deterministic Miller-Rabin for u64.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(n, a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(n, x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn is_odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime(n)
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |q: u64, n: &mut u64| {
        if *n % q == 0 {
            let mut e = 0;
            while *n % q == 0 {
                *n /= q;
                e += 1;
            }
            out.push((q, e));
        }
    };
    push(2, &mut n);
    let mut q = 3;
    while q as u128 * q as u128 <= n as u128 {
        push(q, &mut n);
        q += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn poly_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = mod_sub(p, x, y);
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mod_mul(p, x, y)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a monic polynomial `f`.
pub(crate) fn poly_rem(p: u64, a: &[u64], f: &[u64]) -> Vec<u64> {
    debug_assert!(!f.is_empty() && *f.last().unwrap() == 1);
    let df = f.len() - 1;
    if df == 0 {
        return Vec::new();
    }
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if lead != 0 {
            for j in 0..df {
                r[shift + j] = mod_sub(p, r[shift + j], mod_mul(p, lead, f[j]));
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub(crate) fn poly_mulmod(p: u64, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    poly_rem(p, &poly_mul(p, a, b), f)
}

pub(crate) fn poly_powmod(p: u64, base: &[u64], mut e: u128, f: &[u64]) -> Vec<u64> {
    let mut acc = poly_rem(p, &[1], f);
    let mut b = poly_rem(p, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(p, &acc, &b, f);
        }
        b = poly_mulmod(p, &b, &b, f);
        e >>= 1;
    }
    acc
}

/// Monic gcd of two polynomials over F_p.
pub(crate) fn poly_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // make b monic for the division step
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = mod_inv(p, lead);
            for c in b.iter_mut() {
                *c = mod_mul(p, *c, inv);
            }
        }
        let r = poly_rem(p, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = mod_inv(p, lead);
            for c in a.iter_mut() {
                *c = mod_mul(p, *c, inv);
            }
        }
    }
    a
}

/// Irreducibility of a monic polynomial over F_p.
///
/// Uses the Frobenius criterion: f of degree m is irreducible iff
/// x^(p^m) = x (mod f) and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
pub(crate) fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = f.len() - 1;
    debug_assert!(m >= 1 && *f.last().unwrap() == 1);
    if m == 1 {
        return true;
    }
    let x = [0u64, 1];
    // frob[j] = x^(p^j) mod f
    let mut frob: Vec<Vec<u64>> = Vec::with_capacity(m + 1);
    frob.push(poly_rem(p, &x, f));
    for _ in 0..m {
        let next = poly_powmod(p, frob.last().unwrap(), p as u128, f);
        frob.push(next);
    }
    if frob[m] != frob[0] {
        return false;
    }
    for (r, _) in factorize(m as u64) {
        let h = poly_sub(p, &frob[m / r as usize], &frob[0]);
        let g = poly_gcd(p, f, &h);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// `p^m` as u64, or None on overflow.
pub(crate) fn checked_pow_u64(p: u64, m: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub(crate) fn checked_pow_u128(p: u128, m: u32) -> Option<u128> {
    let mut acc = 1u128;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael
        assert!(!is_prime(1_000_001));
        assert!(is_odd_prime(97));
        assert!(!is_odd_prime(2));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(728), vec![(2, 3), (7, 1), (13, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(8), vec![(2, 3)]);
    }

    #[test]
    fn rem_and_gcd() {
        // (x^2 + 1) mod (x + 1) over F_3: x = -1 gives 1 + 1 = 2
        assert_eq!(poly_rem(3, &[1, 0, 1], &[1, 1]), vec![2]);
        // gcd(x^2 - 1, x - 1) = x - 1 = x + 2 over F_3
        assert_eq!(poly_gcd(3, &[2, 0, 1], &[2, 1]), vec![2, 1]);
    }

    #[test]
    fn irreducibility_small() {
        assert!(is_irreducible(3, &[1, 0, 1])); // x^2 + 1 over F_3
        assert!(!is_irreducible(3, &[2, 0, 1])); // x^2 + 2 = (x-1)(x+1)
        assert!(!is_irreducible(3, &[0, 1, 1])); // x^2 + x
        assert!(is_irreducible(5, &[2, 0, 1])); // x^2 + 2 over F_5
        assert!(!is_irreducible(5, &[1, 0, 1])); // x^2 + 1 = (x-2)(x+2)
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        // Independent oracle: a sextic over F_3 is irreducible iff no monic
        // polynomial of degree 1..=3 divides it.
        let p = 3u64;
        let divisors: Vec<Vec<u64>> = (1usize..=3)
            .flat_map(|d| {
                (0..p.pow(d as u32)).map(move |mut c| {
                    let mut poly = Vec::with_capacity(d + 1);
                    for _ in 0..d {
                        poly.push(c % p);
                        c /= p;
                    }
                    poly.push(1);
                    poly
                })
            })
            .collect();
        for mut c in 0..3u64.pow(6) {
            let mut f = Vec::with_capacity(7);
            for _ in 0..6 {
                f.push(c % p);
                c /= p;
            }
            f.push(1);
            let by_trial = divisors.iter().all(|g| !poly_rem(p, &f, g).is_empty());
            assert_eq!(is_irreducible(p, &f), by_trial, "poly {f:?}");
        }
    }
}
