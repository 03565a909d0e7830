//! Codeword construction and exact empirical weight distributions for the
//! two trace-code families, with two independent enumeration strategies:
//! direct zero-counting and an additive-character transform that recovers
//! all zero-counts of one outer parameter at once.
//!
//! Coordinates are ordered by powers of the primitive element, which is
//! what makes the codes cyclic. Sweeps are exposed as range functions over
//! the outer parameter so callers can partition them across workers and
//! merge tallies by summation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement, FieldTables};
use crate::poly;
use crate::spectrum;
use crate::theory;
use crate::transform;

/// Default cap on pair sweeps for the two-parameter family.
pub const DEFAULT_PAIR_LIMIT: u128 = 1 << 32;

/// Tolerance on the transform path's rounding residuals.
const RESIDUAL_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    C1,
    C2,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::C1 => "C1",
            Family::C2 => "C2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Direct,
    Transform,
}

/// Parameters of one code: family, field, exponent, length, dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSpec {
    pub family: Family,
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub n: u64,
    pub dimension: u32,
}

impl CodeSpec {
    pub fn new(family: Family, p: u64, m: u32, k: u32) -> Result<CodeSpec> {
        let (n, dimension) = theory::params(p, m, k, family)?;
        Ok(CodeSpec {
            family,
            p,
            m,
            k,
            n,
            dimension,
        })
    }

    pub fn degenerate(&self) -> bool {
        self.m == 2 * self.k
    }
}

/// Exact weight distribution: weight -> codeword count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub spec: CodeSpec,
    pub counts: BTreeMap<u64, u128>,
}

impl WeightDistribution {
    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts
            .iter()
            .find(|&(&w, &c)| w > 0 && c > 0)
            .map(|(&w, _)| w)
    }
}

fn check_exponent(ctx: &FieldCtx, k: u32) -> Result<()> {
    if k < 1 || k >= ctx.m() {
        return Err(Error::BadExponent { k, m: ctx.m() });
    }
    Ok(())
}

fn pk1_exponent(ctx: &FieldCtx, k: u32) -> Result<u64> {
    Ok(poly::checked_pow_u64(ctx.p(), k).ok_or(Error::ArithmeticOverflow)? + 1)
}

/// Weight of the codeword (Tr(a x^(p^k+1) + b x))_x, by walking the
/// coordinates multiplicatively; independent of the table-driven sweeps.
pub fn weight_c1(ctx: &FieldCtx, k: u32, a: &FieldElement, b: &FieldElement) -> Result<u64> {
    check_exponent(ctx, k)?;
    let p = ctx.p();
    let g = ctx.pow(ctx.alpha(), pk1_exponent(ctx, k)? as u128);
    let mut x = ctx.one();
    let mut u = ctx.one();
    let mut zeros = 1u64; // x = 0
    for _ in 0..ctx.n() {
        let t = (ctx.trace(&ctx.mul(a, &u)) + ctx.trace(&ctx.mul(b, &x))) % p;
        if t == 0 {
            zeros += 1;
        }
        x = ctx.mul(&x, ctx.alpha());
        u = ctx.mul(&u, &g);
    }
    Ok(ctx.size() - zeros)
}

/// Weight of the codeword (Tr(a x^(p^k+1)) - lambda)_x. The x = 0 column
/// is absent, so the zero-count differs between lambda = 0 and lambda != 0.
pub fn weight_c2(ctx: &FieldCtx, k: u32, a: &FieldElement, lambda: u64) -> Result<u64> {
    if lambda >= ctx.p() {
        return Err(Error::OutOfRange("lambda"));
    }
    let hist = spectrum::trace_histogram(ctx, k, a)?;
    let matches = hist[lambda as usize];
    Ok(if lambda == 0 {
        ctx.size() - matches
    } else {
        ctx.size() - 1 - matches
    })
}

/// Explicit codeword of the two-parameter family over x = alpha^0..alpha^(n-1).
pub fn codeword_c1(ctx: &FieldCtx, k: u32, a: &FieldElement, b: &FieldElement) -> Result<Vec<u64>> {
    check_exponent(ctx, k)?;
    let p = ctx.p();
    let g = ctx.pow(ctx.alpha(), pk1_exponent(ctx, k)? as u128);
    let mut x = ctx.one();
    let mut u = ctx.one();
    let mut out = Vec::with_capacity(ctx.n() as usize);
    for _ in 0..ctx.n() {
        out.push((ctx.trace(&ctx.mul(a, &u)) + ctx.trace(&ctx.mul(b, &x))) % p);
        x = ctx.mul(&x, ctx.alpha());
        u = ctx.mul(&u, &g);
    }
    Ok(out)
}

/// Explicit codeword of the one-parameter family.
pub fn codeword_c2(ctx: &FieldCtx, k: u32, a: &FieldElement, lambda: u64) -> Result<Vec<u64>> {
    check_exponent(ctx, k)?;
    if lambda >= ctx.p() {
        return Err(Error::OutOfRange("lambda"));
    }
    let p = ctx.p();
    let g = ctx.pow(ctx.alpha(), pk1_exponent(ctx, k)? as u128);
    let mut u = ctx.one();
    let mut out = Vec::with_capacity(ctx.n() as usize);
    for _ in 0..ctx.n() {
        out.push((ctx.trace(&ctx.mul(a, &u)) + p - lambda) % p);
        u = ctx.mul(&u, &g);
    }
    Ok(out)
}

/// Pair-sweep cost of the two-parameter family: p^(2m).
pub fn c1_pair_cost(ctx: &FieldCtx) -> u128 {
    ctx.size() as u128 * ctx.size() as u128
}

/// a-sweep cost of the one-parameter family: p^m.
pub fn c2_sweep_cost(ctx: &FieldCtx) -> u128 {
    ctx.size() as u128
}

/// Table bundle shared by the sweep inner loops.
struct SweepAux<'t> {
    n: usize,
    /// trace of alpha^i, doubled so that indices up to 2n-1 avoid a mod.
    tr2: Vec<u32>,
    /// log index of x^(p^k+1) for x = alpha^i.
    pk1_log: Vec<u32>,
    tables: &'t FieldTables,
}

fn sweep_aux<'t>(ctx: &FieldCtx, tables: &'t FieldTables, k: u32) -> Result<SweepAux<'t>> {
    let n = tables.n();
    let exp = tables.exp();
    let tr = tables.trace();
    let mut tr2 = vec![0u32; 2 * n];
    for i in 0..n {
        let v = tr[exp[i] as usize];
        tr2[i] = v;
        tr2[i + n] = v;
    }
    let step = (pk1_exponent(ctx, k)? % n as u64) as usize;
    let mut pk1_log = vec![0u32; n];
    let mut e = 0usize;
    for slot in pk1_log.iter_mut() {
        *slot = e as u32;
        e += step;
        if e >= n {
            e -= n;
        }
    }
    Ok(SweepAux {
        n,
        tr2,
        pk1_log,
        tables,
    })
}

impl SweepAux<'_> {
    /// Fill `ta[i] = Tr(a * alpha^(i*(p^k+1)))` for a with element index `ea`.
    fn fill_quadratic_traces(&self, ea: u64, ta: &mut [u32]) {
        if ea == 0 {
            ta.fill(0);
            return;
        }
        let ja = self.tables.log()[ea as usize] as usize;
        for (slot, &off) in ta.iter_mut().zip(&self.pk1_log) {
            *slot = self.tr2[ja + off as usize];
        }
    }
}

/// Direct strategy for the two-parameter family: per pair (a, b), count
/// zeros of Tr(a x^(p^k+1) + b x) in one pass of table lookups.
fn c1_range_direct(ctx: &FieldCtx, k: u32, a_lo: u64, a_hi: u64) -> Result<Vec<u64>> {
    let tables = ctx.tables_or_err()?;
    let aux = sweep_aux(ctx, tables, k)?;
    let q = ctx.size();
    let p = ctx.p() as u32;
    let n = aux.n;
    let log = tables.log();
    let mut tally = vec![0u64; q as usize];
    let mut ta = vec![0u32; n];
    for ea in a_lo..a_hi {
        aux.fill_quadratic_traces(ea, &mut ta);
        // b = 0 column sum is just the quadratic part
        let zeros = 1 + ta.iter().filter(|&&v| v == 0).count() as u64;
        tally[(q - zeros) as usize] += 1;
        for eb in 1..q {
            let jb = log[eb as usize] as usize;
            let row = &aux.tr2[jb..jb + n];
            let mut zeros = 1u64;
            for (&x, &y) in ta.iter().zip(row) {
                let s = x + y;
                zeros += u64::from(s == 0 || s == p);
            }
            tally[(q - zeros) as usize] += 1;
        }
    }
    Ok(tally)
}

fn round_count(value: f64, q: u64) -> Result<u64> {
    let r = libm::round(value);
    if libm::fabs(value - r) >= RESIDUAL_TOL || r < 0.0 || r > q as f64 {
        return Err(Error::RoundingResidual);
    }
    Ok(r as u64)
}

/// Transform strategy: for each a, one radix-p group transform per
/// nonzero scalar multiple yields the zero-counts of every b at once via
/// N_(a,b)(0) = p^(m-1) + p^(-1) * sum_y V_(ya)[yb].
fn c1_range_transform(ctx: &FieldCtx, k: u32, a_lo: u64, a_hi: u64) -> Result<Vec<u64>> {
    let tables = ctx.tables_or_err()?;
    let aux = sweep_aux(ctx, tables, k)?;
    let p = ctx.p() as usize;
    let q = ctx.size();
    let qs = q as usize;
    let m = ctx.m();
    let n = aux.n;
    let exp = tables.exp();
    let tr = tables.trace();
    let zetas = transform::roots_of_unity(p);

    // tau_idx[e]: radix index of the coordinate vector (Tr(e * x^v))_v,
    // the character label that pairs element e with the transform output.
    let mut tau_idx = vec![0u32; qs];
    for (e, slot) in tau_idx.iter_mut().enumerate() {
        let mut idx = 0u64;
        let mut pw = 1u64;
        for _ in 0..m {
            let prod = tables.mul_idx(e, pw as usize);
            idx += tr[prod] as u64 * pw;
            pw *= ctx.p();
        }
        *slot = idx as u32;
    }

    let pf = ctx.p() as f64;
    let pm1f = (q / ctx.p()) as f64;
    let zero = Complex64::new(0.0, 0.0);
    let mut tally = vec![0u64; qs];
    let mut tvals = vec![0u32; qs];
    let mut ta = vec![0u32; n];
    let mut fbuf = vec![zero; qs];
    let mut acc = vec![zero; qs];
    for ea in a_lo..a_hi {
        aux.fill_quadratic_traces(ea, &mut ta);
        tvals[0] = 0;
        for i in 0..n {
            tvals[exp[i] as usize] = ta[i];
        }
        acc.fill(zero);
        for y in 1..p {
            for (f, &t) in fbuf.iter_mut().zip(&tvals) {
                *f = zetas[(y * t as usize) % p];
            }
            transform::dft_radix_p(&mut fbuf, p, m, &zetas);
            for (eb, a) in acc.iter_mut().enumerate() {
                let ybe = tables.mul_idx(y, eb);
                *a += fbuf[tau_idx[ybe] as usize];
            }
        }
        for a in &acc {
            if libm::fabs(a.im / pf) >= RESIDUAL_TOL {
                return Err(Error::RoundingResidual);
            }
            let zeros = round_count(pm1f + a.re / pf, q)?;
            // x = 0 always satisfies the equation, so a zero count here
            // can only come from precision loss
            if zeros == 0 {
                return Err(Error::RoundingResidual);
            }
            tally[(q - zeros) as usize] += 1;
        }
    }
    Ok(tally)
}

/// Tally weights of the two-parameter family over a-indices in [lo, hi)
/// crossed with every b; merge tallies from disjoint ranges by summation.
pub fn c1_tally_range(
    ctx: &FieldCtx,
    k: u32,
    strategy: Strategy,
    a_lo: u64,
    a_hi: u64,
) -> Result<Vec<u64>> {
    check_exponent(ctx, k)?;
    match strategy {
        Strategy::Direct => c1_range_direct(ctx, k, a_lo, a_hi),
        Strategy::Transform => c1_range_transform(ctx, k, a_lo, a_hi),
    }
}

/// Direct strategy for the one-parameter family: one integer trace
/// histogram per a yields all p weights.
fn c2_range_direct(ctx: &FieldCtx, k: u32, a_lo: u64, a_hi: u64) -> Result<Vec<u64>> {
    let tables = ctx.tables_or_err()?;
    let aux = sweep_aux(ctx, tables, k)?;
    let q = ctx.size();
    let p = ctx.p();
    let log = tables.log();
    let mut tally = vec![0u64; q as usize];
    let mut hist = vec![0u64; p as usize];
    for ea in a_lo..a_hi {
        hist.fill(0);
        hist[0] = 1;
        if ea == 0 {
            hist[0] = q;
        } else {
            let ja = log[ea as usize] as usize;
            for &off in &aux.pk1_log {
                hist[aux.tr2[ja + off as usize] as usize] += 1;
            }
        }
        for lam in 0..p {
            let matches = hist[lam as usize];
            let w = if lam == 0 {
                q - matches
            } else {
                q - 1 - matches
            };
            tally[w as usize] += 1;
        }
    }
    Ok(tally)
}

/// Transform strategy for the one-parameter family: accumulate the
/// character sums S_y = sum_x zeta^(y Tr(a x^(p^k+1))) as complex phases
/// and invert over the p characters to recover each count
/// N_a(lambda) = p^(m-1) + p^(-1) sum_y zeta^(-y lambda) S_y.
fn c2_range_transform(ctx: &FieldCtx, k: u32, a_lo: u64, a_hi: u64) -> Result<Vec<u64>> {
    let tables = ctx.tables_or_err()?;
    let aux = sweep_aux(ctx, tables, k)?;
    let q = ctx.size();
    let p = ctx.p() as usize;
    let n = aux.n;
    let log = tables.log();
    let zetas = transform::roots_of_unity(p);
    let pf = p as f64;
    let pm1f = (q / ctx.p()) as f64;
    let mut tally = vec![0u64; q as usize];
    let mut sums = vec![Complex64::new(0.0, 0.0); p];
    for ea in a_lo..a_hi {
        // x = 0 contributes phase 1 to every S_y
        for s in sums.iter_mut() {
            *s = Complex64::new(1.0, 0.0);
        }
        if ea == 0 {
            for s in sums.iter_mut().skip(1) {
                *s += Complex64::new(n as f64, 0.0);
            }
        } else {
            let ja = log[ea as usize] as usize;
            for &off in &aux.pk1_log {
                let t = aux.tr2[ja + off as usize] as usize;
                for (y, s) in sums.iter_mut().enumerate().skip(1) {
                    *s += zetas[(y * t) % p];
                }
            }
        }
        for lam in 0..p {
            let mut acc = Complex64::new(0.0, 0.0);
            for y in 1..p {
                acc += zetas[(p - (y * lam) % p) % p] * sums[y];
            }
            if libm::fabs(acc.im / pf) >= RESIDUAL_TOL {
                return Err(Error::RoundingResidual);
            }
            let matches = round_count(pm1f + acc.re / pf, q)?;
            let w = if lam == 0 {
                // x = 0 always matches lambda = 0
                if matches == 0 {
                    return Err(Error::RoundingResidual);
                }
                q - matches
            } else {
                q.checked_sub(1 + matches).ok_or(Error::RoundingResidual)?
            };
            tally[w as usize] += 1;
        }
    }
    Ok(tally)
}

/// Tally weights of the one-parameter family over a-indices in [lo, hi)
/// crossed with every lambda.
pub fn c2_tally_range(
    ctx: &FieldCtx,
    k: u32,
    strategy: Strategy,
    a_lo: u64,
    a_hi: u64,
) -> Result<Vec<u64>> {
    check_exponent(ctx, k)?;
    match strategy {
        Strategy::Direct => c2_range_direct(ctx, k, a_lo, a_hi),
        Strategy::Transform => c2_range_transform(ctx, k, a_lo, a_hi),
    }
}

fn finalize(ctx: &FieldCtx, spec: CodeSpec, tally: &[u64]) -> Result<WeightDistribution> {
    let p = ctx.p();
    let mut counts: BTreeMap<u64, u128> = BTreeMap::new();
    let kernel = if spec.degenerate() {
        poly::checked_pow_u64(p, spec.m / 2).ok_or(Error::ArithmeticOverflow)?
    } else {
        1
    };
    for (w, &c) in tally.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if w as u64 > spec.n {
            return Err(Error::Inconsistency("weight exceeds code length"));
        }
        // every codeword arises from exactly `kernel` parameter choices
        if c % kernel != 0 {
            return Err(Error::Inconsistency(
                "multiplicity not divisible by the kernel size",
            ));
        }
        counts.insert(w as u64, (c / kernel) as u128);
    }
    if counts.get(&0) != Some(&1) {
        return Err(Error::Inconsistency("zero weight must occur exactly once"));
    }
    let report = theory::moment_checks(p, spec.n, spec.dimension, &counts)?;
    if !report.all_ok() {
        return Err(Error::Inconsistency("moment identities violated"));
    }
    Ok(WeightDistribution { spec, counts })
}

/// Build the distribution from a fully merged tally of the two-parameter
/// family, applying the degenerate-case deduplication when m = 2k.
pub fn finalize_wd_c1(ctx: &FieldCtx, k: u32, tally: &[u64]) -> Result<WeightDistribution> {
    let spec = CodeSpec::new(Family::C1, ctx.p(), ctx.m(), k)?;
    finalize(ctx, spec, tally)
}

/// Build the distribution from a fully merged tally of the one-parameter
/// family.
pub fn finalize_wd_c2(ctx: &FieldCtx, k: u32, tally: &[u64]) -> Result<WeightDistribution> {
    let spec = CodeSpec::new(Family::C2, ctx.p(), ctx.m(), k)?;
    finalize(ctx, spec, tally)
}

/// Full serial enumeration of the two-parameter family.
pub fn empirical_wd_c1(
    ctx: &FieldCtx,
    k: u32,
    strategy: Strategy,
    work_limit: u128,
) -> Result<WeightDistribution> {
    let needed = c1_pair_cost(ctx);
    if needed > work_limit {
        return Err(Error::WorkLimit {
            needed,
            limit: work_limit,
        });
    }
    let tally = c1_tally_range(ctx, k, strategy, 0, ctx.size())?;
    finalize_wd_c1(ctx, k, &tally)
}

/// Full serial enumeration of the one-parameter family.
pub fn empirical_wd_c2(
    ctx: &FieldCtx,
    k: u32,
    strategy: Strategy,
    work_limit: u128,
) -> Result<WeightDistribution> {
    let needed = c2_sweep_cost(ctx);
    if needed > work_limit {
        return Err(Error::WorkLimit {
            needed,
            limit: work_limit,
        });
    }
    let tally = c2_tally_range(ctx, k, strategy, 0, ctx.size())?;
    finalize_wd_c2(ctx, k, &tally)
}
