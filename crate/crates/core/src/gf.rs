//! Exact arithmetic in F_p and F_{p^m}: field construction with a
//! deterministic minimal modulus and primitive element, trace map,
//! quadratic character, and optional exp/log/trace lookup tables.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly;

/// Largest supported field size `p^m`.
pub const MAX_FIELD_SIZE: u64 = 1 << 48;

/// Tables are built when `p^m` does not exceed this cap.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

/// An element of F_{p^m} in coordinates over the polynomial basis
/// {1, x, ..., x^(m-1)} of the modulus quotient. Always exactly `m`
/// coordinates, each in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Exp/log/trace lookup tables over element indices.
///
/// An element with coordinates (c_0, ..., c_{m-1}) has index
/// sum(c_i * p^i); `exp[i]` is the index of alpha^i, `log` is its inverse
/// (with `u32::MAX` at index 0), and `trace[e]` is Tr of the element with
/// index `e`.
pub struct FieldTables {
    n: usize,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

impl FieldTables {
    /// Multiplicative group order p^m - 1.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exp(&self) -> &[u32] {
        &self.exp
    }

    pub fn log(&self) -> &[u32] {
        &self.log
    }

    pub fn trace(&self) -> &[u32] {
        &self.trace
    }

    /// Product of two elements given by index.
    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        let mut l = self.log[a] as usize + self.log[b] as usize;
        if l >= self.n {
            l -= self.n;
        }
        self.exp[l] as usize
    }
}

/// A constructed extension field F_{p^m}.
///
/// Immutable after construction; safe to share across threads.
pub struct FieldCtx {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    alpha: FieldElement,
    tables: Option<FieldTables>,
}

/// Minimal monic irreducible of degree `m >= 2` over F_p, by radix-p order
/// of the low coefficient vector.
pub fn find_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    if !poly::is_odd_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    if m < 2 {
        return Err(Error::DegreeTooSmall { m, min: 2 });
    }
    let q = poly::checked_pow_u64(p, m).filter(|&q| q <= MAX_FIELD_SIZE);
    let q = q.ok_or(Error::FieldTooLarge { p, m })?;
    for c in 0..q {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut cc = c;
        for _ in 0..m {
            f.push(cc % p);
            cc /= p;
        }
        f.push(1);
        if poly::is_irreducible(p, &f) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

/// Construct F_{p^m} with the deterministic minimal modulus.
pub fn make_field(p: u64, m: u32) -> Result<FieldCtx> {
    FieldCtx::with_table_cap(p, m, None, DEFAULT_TABLE_CAP)
}

/// Construct F_{p^m} over a caller-supplied monic irreducible modulus
/// (coefficients constant term first, length m+1).
pub fn make_field_with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<FieldCtx> {
    FieldCtx::with_table_cap(p, m, Some(modulus), DEFAULT_TABLE_CAP)
}

/// The element of multiplicative order p^m - 1 that is minimal by the
/// radix-p integer of its coefficient vector.
pub fn find_primitive(ctx: &FieldCtx) -> FieldElement {
    let n = ctx.q - 1;
    let factors = poly::factorize(n);
    for idx in 2..ctx.q {
        let cand = ctx.element_from_index(idx);
        if factors
            .iter()
            .all(|&(f, _)| ctx.pow(&cand, (n / f) as u128) != ctx.one())
        {
            debug_assert!(ctx.pow(&cand, n as u128) == ctx.one());
            return cand;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// Multiplicative quadratic character of F_p, extended by eta(0) = 0.
pub fn quad_char(p: u64, c: u64) -> i8 {
    let c = c % p;
    if c == 0 {
        return 0;
    }
    let r = poly::mod_pow(p, c, (p - 1) / 2);
    if r == 1 {
        1
    } else {
        debug_assert_eq!(r, p - 1);
        -1
    }
}

impl FieldCtx {
    /// Full constructor: optional modulus override and table cap.
    pub fn with_table_cap(
        p: u64,
        m: u32,
        modulus: Option<&[u64]>,
        table_cap: u64,
    ) -> Result<FieldCtx> {
        if !poly::is_odd_prime(p) {
            return Err(Error::NotAnOddPrime(p));
        }
        if m < 1 {
            return Err(Error::DegreeTooSmall { m, min: 1 });
        }
        let q = poly::checked_pow_u64(p, m)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != m as usize + 1 {
                    return Err(Error::BadModulus("wrong degree"));
                }
                if *f.last().unwrap() != 1 {
                    return Err(Error::BadModulus("not monic"));
                }
                if f.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus("coefficient out of range"));
                }
                if !poly::is_irreducible(p, f) {
                    return Err(Error::BadModulus("reducible"));
                }
                f.to_vec()
            }
            None if m == 1 => vec![0, 1],
            None => find_irreducible(p, m)?,
        };
        let mut ctx = FieldCtx {
            p,
            m,
            q,
            modulus,
            alpha: FieldElement {
                coeffs: vec![0; m as usize],
            },
            tables: None,
        };
        ctx.alpha = find_primitive(&ctx);
        if q <= table_cap && q <= u32::MAX as u64 {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn build_tables(&self) -> FieldTables {
        let q = self.q as usize;
        let n = q - 1;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; q];
        let mut e = self.one();
        for (i, slot) in exp.iter_mut().enumerate() {
            let idx = self.index_of(&e);
            *slot = idx as u32;
            debug_assert_eq!(log[idx as usize], u32::MAX, "alpha order too small");
            log[idx as usize] = i as u32;
            e = self.mul(&e, &self.alpha);
        }
        debug_assert!(e == self.one());
        // trace is F_p-linear: tabulate on the basis, then extend by radix digits
        let tr_basis: Vec<u64> = (0..self.m)
            .map(|j| {
                let mut coeffs = vec![0u64; self.m as usize];
                coeffs[j as usize] = 1;
                self.trace_slow(&FieldElement { coeffs })
            })
            .collect();
        let mut trace = vec![0u32; q];
        for (idx, slot) in trace.iter_mut().enumerate() {
            let mut t = 0u64;
            let mut rem = idx as u64;
            for &tb in &tr_basis {
                t = (t + (rem % self.p) * tb) % self.p;
                rem /= self.p;
            }
            *slot = t as u32;
        }
        FieldTables { n, exp, log, trace }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size p^m.
    pub fn size(&self) -> u64 {
        self.q
    }

    /// Multiplicative group order p^m - 1.
    pub fn n(&self) -> u64 {
        self.q - 1
    }

    /// Modulus polynomial, constant term first, length m+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The primitive element located at construction (minimal by radix index).
    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn tables(&self) -> Option<&FieldTables> {
        self.tables.as_ref()
    }

    pub(crate) fn tables_or_err(&self) -> Result<&FieldTables> {
        self.tables.as_ref().ok_or(Error::NoTables)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.m as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.m as usize];
        coeffs[0] = 1 % self.p;
        FieldElement { coeffs }
    }

    /// Element from explicit coordinates (shorter vectors are zero-padded).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize {
            return Err(Error::BadModulus("too many coordinates"));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadModulus("coordinate out of range"));
        }
        let mut v = coeffs.to_vec();
        v.resize(self.m as usize, 0);
        Ok(FieldElement { coeffs: v })
    }

    /// Element whose radix-p coordinate integer is `idx`.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        debug_assert!(idx < self.q);
        let mut coeffs = Vec::with_capacity(self.m as usize);
        let mut rem = idx;
        for _ in 0..self.m {
            coeffs.push(rem % self.p);
            rem /= self.p;
        }
        FieldElement { coeffs }
    }

    /// Radix-p coordinate integer of an element.
    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in x.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Discrete log of a nonzero element, if tables are present.
    pub fn log_index(&self, x: &FieldElement) -> Option<u64> {
        let t = self.tables.as_ref()?;
        let l = t.log[self.index_of(x) as usize];
        (l != u32::MAX).then_some(l as u64)
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| poly::mod_add(self.p, a, b))
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| poly::mod_sub(self.p, a, b))
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .map(|&a| if a == 0 { 0 } else { self.p - a })
            .collect();
        FieldElement { coeffs }
    }

    /// Scale by a base field constant.
    pub fn scale(&self, c: u64, x: &FieldElement) -> FieldElement {
        let c = c % self.p;
        let coeffs = x
            .coeffs
            .iter()
            .map(|&a| poly::mod_mul(self.p, c, a))
            .collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let prod = poly::poly_mulmod(self.p, &x.coeffs, &y.coeffs, &self.modulus);
        self.pad_element(prod)
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroOperand("inverse of zero"));
        }
        Ok(self.pow(x, (self.q - 2) as u128))
    }

    /// Square-and-multiply power; the exponent is reduced mod p^m - 1 for
    /// nonzero bases.
    pub fn pow(&self, x: &FieldElement, e: u128) -> FieldElement {
        if x.is_zero() {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let e = e % (self.q - 1) as u128;
        let r = poly::poly_powmod(self.p, &x.coeffs, e, &self.modulus);
        self.pad_element(r)
    }

    /// Trace down to F_p: Tr(x) = sum of x^(p^i) for i < m.
    pub fn trace(&self, x: &FieldElement) -> u64 {
        if let Some(t) = &self.tables {
            return t.trace[self.index_of(x) as usize] as u64;
        }
        self.trace_slow(x)
    }

    fn trace_slow(&self, x: &FieldElement) -> u64 {
        let mut pw = x.clone();
        let mut acc = x.clone();
        for _ in 1..self.m {
            pw = self.pow(&pw, self.p as u128);
            acc = self.add(&acc, &pw);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0));
        acc.coeffs[0]
    }

    fn pad_element(&self, mut coeffs: Vec<u64>) -> FieldElement {
        coeffs.resize(self.m as usize, 0);
        FieldElement { coeffs }
    }
}
