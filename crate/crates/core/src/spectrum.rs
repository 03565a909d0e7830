//! Value distribution of the character sums attached to Q_a: per-a trace
//! histograms, the 2-adic case split, and the tallies of forms by rank and
//! sign class, both empirically (full a-sweep) and in closed form.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::poly;
use crate::quadform;

/// Default cap on full a-sweeps (field elements visited).
pub const DEFAULT_SWEEP_LIMIT: u128 = 1 << 20;

/// Case split by the 2-adic valuations of m and k. `s = m/gcd(k,m)` is odd
/// exactly when v2(m) <= v2(k); the boundary case is v2(m) = v2(k) + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    OddSOddM,
    OddSEvenM,
    Boundary,
    Deep,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::OddSOddM => "odd-s-odd-m",
            CaseLabel::OddSEvenM => "odd-s-even-m",
            CaseLabel::Boundary => "boundary",
            CaseLabel::Deep => "deep",
        }
    }
}

impl core::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Derived parameters of a (p, m, k) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseInfo {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub d: u32,
    pub s: u32,
    pub v2m: u32,
    pub v2k: u32,
    pub label: CaseLabel,
    /// m = 2k: both code families degenerate.
    pub degenerate: bool,
}

pub fn two_adic(x: u64) -> u32 {
    debug_assert!(x > 0);
    x.trailing_zeros()
}

pub fn case_of(p: u64, m: u32, k: u32) -> Result<CaseInfo> {
    if !poly::is_odd_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    if k < 1 || k >= m {
        return Err(Error::BadExponent { k, m });
    }
    let d = poly::gcd_u64(k as u64, m as u64) as u32;
    let s = m / d;
    let v2m = two_adic(m as u64);
    let v2k = two_adic(k as u64);
    debug_assert_eq!(s % 2 == 1, v2m <= v2k);
    let label = if v2m <= v2k {
        if m % 2 == 1 {
            CaseLabel::OddSOddM
        } else {
            CaseLabel::OddSEvenM
        }
    } else if v2m == v2k + 1 {
        CaseLabel::Boundary
    } else {
        CaseLabel::Deep
    };
    Ok(CaseInfo {
        p,
        m,
        k,
        d,
        s,
        v2m,
        v2k,
        label,
        degenerate: m == 2 * k,
    })
}

/// Cardinalities of the a-sets by (radical index i, sign class j).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RSetSizes {
    pub r0_plus: u64,
    pub r0_minus: u64,
    pub r1_plus: u64,
    pub r1_minus: u64,
}

impl RSetSizes {
    pub fn r0(&self) -> u64 {
        self.r0_plus + self.r0_minus
    }

    pub fn r1(&self) -> u64 {
        self.r1_plus + self.r1_minus
    }

    pub fn total(&self) -> u64 {
        self.r0() + self.r1()
    }

    pub fn merge(&mut self, other: &RSetSizes) {
        self.r0_plus += other.r0_plus;
        self.r0_minus += other.r0_minus;
        self.r1_plus += other.r1_plus;
        self.r1_minus += other.r1_minus;
    }
}

/// Closed-form R-set sizes.
///
/// Odd s: full rank throughout, signs split in exact halves. Even s:
/// the rank-deficient set has size (p^m-1)/(p^d+1) and carries one fixed
/// sign, the full-rank set carries the opposite fixed sign; which signs
/// depends on whether v2(m) = v2(k)+1 or exceeds it.
pub fn expected_rsets(p: u64, m: u32, k: u32) -> Result<RSetSizes> {
    let ci = case_of(p, m, k)?;
    let q = poly::checked_pow_u64(p, m).ok_or(Error::ArithmeticOverflow)?;
    let n = q - 1;
    let mut out = RSetSizes::default();
    match ci.label {
        CaseLabel::OddSOddM | CaseLabel::OddSEvenM => {
            debug_assert_eq!(n % 2, 0);
            out.r0_plus = n / 2;
            out.r0_minus = n / 2;
        }
        CaseLabel::Boundary | CaseLabel::Deep => {
            let pd = poly::checked_pow_u64(p, ci.d).ok_or(Error::ArithmeticOverflow)?;
            if n % (pd + 1) != 0 {
                return Err(Error::Inconsistency("p^d+1 must divide p^m-1 for even s"));
            }
            let small = n / (pd + 1);
            let big = pd * small;
            if ci.label == CaseLabel::Boundary {
                out.r0_minus = big;
                out.r1_plus = small;
            } else {
                out.r0_plus = big;
                out.r1_minus = small;
            }
        }
    }
    Ok(out)
}

/// Histogram (N_a(beta))_beta of Tr(a x^(p^k+1)) over all x, including
/// x = 0; the exact integer statistic that determines the character sum.
pub fn trace_histogram(ctx: &FieldCtx, k: u32, a: &FieldElement) -> Result<Vec<u64>> {
    if k < 1 || k >= ctx.m() {
        return Err(Error::BadExponent { k, m: ctx.m() });
    }
    let p = ctx.p();
    let q = ctx.size();
    let mut hist = vec![0u64; p as usize];
    if a.is_zero() {
        hist[0] = q;
        return Ok(hist);
    }
    hist[0] = 1; // x = 0
    let pk1 = poly::checked_pow_u64(p, k).ok_or(Error::ArithmeticOverflow)? + 1;
    if let Some(t) = ctx.tables() {
        let n = t.n();
        let exp = t.exp();
        let tr = t.trace();
        let ja = t.log()[ctx.index_of(a) as usize] as usize;
        let step = (pk1 % n as u64) as usize;
        let mut e = ja % n;
        for _ in 0..n {
            hist[tr[exp[e] as usize] as usize] += 1;
            e += step;
            if e >= n {
                e -= n;
            }
        }
    } else {
        let g = ctx.pow(ctx.alpha(), pk1 as u128);
        let mut u = a.clone(); // a * alpha^(i*(p^k+1)) walked multiplicatively
        for _ in 0..q - 1 {
            hist[ctx.trace(&u) as usize] += 1;
            u = ctx.mul(&u, &g);
        }
    }
    Ok(hist)
}

/// Cost of a full a-sweep, in elements visited per a.
pub fn sweep_cost(ctx: &FieldCtx) -> u128 {
    ctx.size() as u128
}

/// Tally (rank, sign) classes over a-indices in [lo, hi), skipping a = 0.
pub fn empirical_rsets_range(ctx: &FieldCtx, k: u32, lo: u64, hi: u64) -> Result<RSetSizes> {
    let mut out = RSetSizes::default();
    for ai in lo.max(1)..hi {
        let a = ctx.element_from_index(ai);
        let profile = quadform::classify(ctx, k, &a)?;
        match (profile.i, profile.eps) {
            (0, 1) => out.r0_plus += 1,
            (0, -1) => out.r0_minus += 1,
            (1, 1) => out.r1_plus += 1,
            (1, -1) => out.r1_minus += 1,
            _ => return Err(Error::Inconsistency("profile outside the four classes")),
        }
    }
    Ok(out)
}

/// Classify every nonzero a and tally by (rank, sign) class.
pub fn empirical_rsets(ctx: &FieldCtx, k: u32, work_limit: u128) -> Result<RSetSizes> {
    let needed = sweep_cost(ctx);
    if needed > work_limit {
        return Err(Error::WorkLimit {
            needed,
            limit: work_limit,
        });
    }
    empirical_rsets_range(ctx, k, 1, ctx.size())
}
