//! Closed-form weight distributions for both code families, dispatched on
//! the 2-adic case split, plus the moment identities every distribution
//! must satisfy. All frequencies are evaluated in exact 128-bit integer
//! arithmetic with the stated divisibilities checked rather than assumed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::codes::{CodeSpec, Family};
use crate::error::{Error, Result};
use crate::poly;
use crate::spectrum::{case_of, CaseLabel};

/// A closed-form weight distribution, tagged with the case and formula
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoreticalWd {
    pub spec: CodeSpec,
    pub case: CaseLabel,
    pub formula: &'static str,
    pub counts: BTreeMap<u64, u128>,
}

/// Length and dimension of a code family at (p, m, k).
///
/// Length is p^m - 1 throughout. The dimensions drop from 2m and m+1 to
/// 3m/2 and m/2+1 exactly when m = 2k (the parameter map becomes
/// p^(m/2)-to-one).
pub fn params(p: u64, m: u32, k: u32, family: Family) -> Result<(u64, u32)> {
    if !poly::is_odd_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    if k < 1 || k >= m {
        return Err(Error::BadExponent { k, m });
    }
    let q = poly::checked_pow_u64(p, m).ok_or(Error::FieldTooLarge { p, m })?;
    let dimension = match (family, m == 2 * k) {
        (Family::C1, true) => 3 * m / 2,
        (Family::C1, false) => 2 * m,
        (Family::C2, true) => m / 2 + 1,
        (Family::C2, false) => m + 1,
    };
    Ok((q - 1, dimension))
}

fn pw(p: u64, e: u32) -> Result<u128> {
    poly::checked_pow_u128(p as u128, e).ok_or(Error::ArithmeticOverflow)
}

fn div_exact(a: u128, b: u128) -> Result<u128> {
    if b == 0 || a % b != 0 {
        return Err(Error::Inconsistency("frequency divisibility"));
    }
    Ok(a / b)
}

fn sub_pos(a: u128, b: u128) -> Result<u128> {
    a.checked_sub(b)
        .ok_or(Error::Inconsistency("negative frequency term"))
}

fn add_count(counts: &mut BTreeMap<u64, u128>, w: u128, c: u128) -> Result<()> {
    let w = u64::try_from(w).map_err(|_| Error::ArithmeticOverflow)?;
    if c > 0 {
        *counts.entry(w).or_insert(0) += c;
    }
    Ok(())
}

fn check_total(counts: &BTreeMap<u64, u128>, p: u64, dimension: u32) -> Result<()> {
    let expected = pw(p, dimension)?;
    let total: u128 = counts.values().sum();
    if total != expected {
        return Err(Error::Inconsistency("frequencies do not sum to p^dim"));
    }
    Ok(())
}

/// Closed-form weight distribution of the two-parameter family
/// (codewords Tr(a x^(p^k+1) + b x)). Only the even-s cases have a closed
/// form here; odd s is reported as unsupported.
pub fn wd_c1(p: u64, m: u32, k: u32) -> Result<TheoreticalWd> {
    let ci = case_of(p, m, k)?;
    let spec = CodeSpec::new(Family::C1, p, m, k)?;
    let d = ci.d;
    let q = pw(p, m)?;
    let n = q - 1;
    let pu = p as u128;
    let mut counts = BTreeMap::new();
    add_count(&mut counts, 0, 1)?;

    let formula = match (ci.label, ci.degenerate) {
        (CaseLabel::OddSOddM | CaseLabel::OddSEvenM, _) => {
            return Err(Error::UnsupportedCase { p, m, k });
        }
        (CaseLabel::Boundary, true) => {
            // three nonzero weights
            let h = pw(p, (m - 2) / 2)?;
            let pm1 = pw(p, m - 1)?;
            let root = pw(p, m / 2)?;
            add_count(&mut counts, (pu - 1) * pm1, n)?;
            add_count(
                &mut counts,
                (pu - 1) * (pm1 + h),
                sub_pos(pm1, (pu - 1) * h)? * (root - 1),
            )?;
            add_count(
                &mut counts,
                (pu - 1) * pm1 - h,
                (pu - 1) * (pm1 + h) * (root - 1),
            )?;
            "c1-degenerate"
        }
        (CaseLabel::Boundary, false) | (CaseLabel::Deep, false) => {
            let h = pw(p, (m - 2) / 2)?;
            let hd = pw(p, (m + 2 * d - 2) / 2)?;
            let pm1 = pw(p, m - 1)?;
            let pl1 = pw(p, m - 2 * d - 1)?;
            let l = pw(p, (m - 2 * d - 2) / 2)?;
            let pd = pw(p, d)?;
            let small = div_exact(n, pd + 1)?;
            let big = pd * small;
            add_count(
                &mut counts,
                (pu - 1) * pm1,
                n * (1 + pw(p, m - d)? - pw(p, m - 2 * d)?),
            )?;
            if ci.label == CaseLabel::Boundary {
                add_count(
                    &mut counts,
                    (pu - 1) * (pm1 + h),
                    sub_pos(pm1, (pu - 1) * h)? * big,
                )?;
                add_count(&mut counts, (pu - 1) * pm1 - h, (pu - 1) * (pm1 + h) * big)?;
                add_count(
                    &mut counts,
                    (pu - 1) * sub_pos(pm1, hd)?,
                    (pl1 + (pu - 1) * l) * small,
                )?;
                add_count(
                    &mut counts,
                    (pu - 1) * pm1 + hd,
                    (pu - 1) * sub_pos(pl1, l)? * small,
                )?;
                "c1-boundary"
            } else {
                add_count(
                    &mut counts,
                    (pu - 1) * sub_pos(pm1, h)?,
                    (pm1 + (pu - 1) * h) * big,
                )?;
                add_count(
                    &mut counts,
                    (pu - 1) * pm1 + h,
                    (pu - 1) * sub_pos(pm1, h)? * big,
                )?;
                add_count(
                    &mut counts,
                    (pu - 1) * (pm1 + hd),
                    sub_pos(pl1, (pu - 1) * l)? * small,
                )?;
                add_count(
                    &mut counts,
                    (pu - 1) * pm1 - hd,
                    (pu - 1) * (pl1 + l) * small,
                )?;
                "c1-deep"
            }
        }
        (CaseLabel::Deep, true) => unreachable!("m = 2k forces the boundary case"),
    };
    check_total(&counts, p, spec.dimension)?;
    Ok(TheoreticalWd {
        spec,
        case: ci.label,
        formula,
        counts,
    })
}

/// Closed-form weight distribution of the one-parameter family
/// (codewords Tr(a x^(p^k+1)) - lambda), covering all cases.
pub fn wd_c2(p: u64, m: u32, k: u32) -> Result<TheoreticalWd> {
    let ci = case_of(p, m, k)?;
    let spec = CodeSpec::new(Family::C2, p, m, k)?;
    let d = ci.d;
    let q = pw(p, m)?;
    let n = q - 1;
    let pu = p as u128;
    let pm1 = pw(p, m - 1)?;
    let mut counts = BTreeMap::new();
    add_count(&mut counts, 0, 1)?;
    add_count(&mut counts, n, pu - 1)?;

    let formula = match (ci.label, ci.degenerate) {
        (CaseLabel::OddSOddM, _) => {
            let g = pw(p, (m - 1) / 2)?;
            add_count(&mut counts, (pu - 1) * pm1, n)?;
            add_count(
                &mut counts,
                (pu - 1) * pm1 - g - 1,
                div_exact((pu - 1) * n, 2)?,
            )?;
            add_count(
                &mut counts,
                (pu - 1) * pm1 + g - 1,
                div_exact((pu - 1) * n, 2)?,
            )?;
            "c2-odd-m"
        }
        (CaseLabel::OddSEvenM, _) => {
            let h = pw(p, (m - 2) / 2)?;
            add_count(
                &mut counts,
                (pu - 1) * pm1 - h - 1,
                div_exact((pu - 1) * n, 2)?,
            )?;
            add_count(
                &mut counts,
                (pu - 1) * pm1 + h - 1,
                div_exact((pu - 1) * n, 2)?,
            )?;
            add_count(&mut counts, (pu - 1) * sub_pos(pm1, h)?, div_exact(n, 2)?)?;
            add_count(&mut counts, (pu - 1) * (pm1 + h), div_exact(n, 2)?)?;
            "c2-even-m"
        }
        (CaseLabel::Boundary, true) => {
            let h = pw(p, (m - 2) / 2)?;
            let root = pw(p, m / 2)?;
            add_count(&mut counts, (pu - 1) * (pm1 + h), root - 1)?;
            add_count(&mut counts, (pu - 1) * pm1 - h - 1, (pu - 1) * (root - 1))?;
            "c2-degenerate"
        }
        (CaseLabel::Boundary, false) | (CaseLabel::Deep, false) => {
            let h = pw(p, (m - 2) / 2)?;
            let hd = pw(p, (m + 2 * d - 2) / 2)?;
            let pd = pw(p, d)?;
            let small = div_exact(n, pd + 1)?;
            let big = pd * small;
            if ci.label == CaseLabel::Boundary {
                add_count(&mut counts, (pu - 1) * (pm1 + h), big)?;
                add_count(&mut counts, (pu - 1) * pm1 - h - 1, (pu - 1) * big)?;
                add_count(&mut counts, (pu - 1) * sub_pos(pm1, hd)?, small)?;
                add_count(&mut counts, (pu - 1) * pm1 + hd - 1, (pu - 1) * small)?;
                "c2-boundary"
            } else {
                add_count(&mut counts, (pu - 1) * sub_pos(pm1, h)?, big)?;
                add_count(&mut counts, (pu - 1) * pm1 + h - 1, (pu - 1) * big)?;
                add_count(&mut counts, (pu - 1) * (pm1 + hd), small)?;
                add_count(&mut counts, (pu - 1) * pm1 - hd - 1, (pu - 1) * small)?;
                "c2-deep"
            }
        }
        (CaseLabel::Deep, true) => unreachable!("m = 2k forces the boundary case"),
    };
    check_total(&counts, p, spec.dimension)?;
    Ok(TheoreticalWd {
        spec,
        case: ci.label,
        formula,
        counts,
    })
}

/// Moment identity report: total count and first power moment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub total_expected: u128,
    pub total_actual: u128,
    pub first_moment_expected: u128,
    pub first_moment_actual: u128,
}

impl MomentReport {
    pub fn total_ok(&self) -> bool {
        self.total_expected == self.total_actual
    }

    pub fn first_moment_ok(&self) -> bool {
        self.first_moment_expected == self.first_moment_actual
    }

    pub fn all_ok(&self) -> bool {
        self.total_ok() && self.first_moment_ok()
    }
}

/// Check sum(A_w) = p^dim and sum(w * A_w) = n (p-1) p^(dim-1) for any
/// weight distribution of a code on which no coordinate functional
/// vanishes identically.
pub fn moment_checks(
    p: u64,
    n: u64,
    dimension: u32,
    counts: &BTreeMap<u64, u128>,
) -> Result<MomentReport> {
    let total_expected = pw(p, dimension)?;
    let mut total_actual = 0u128;
    let mut first_moment_actual = 0u128;
    for (&w, &c) in counts {
        total_actual = total_actual
            .checked_add(c)
            .ok_or(Error::ArithmeticOverflow)?;
        let term = (w as u128)
            .checked_mul(c)
            .ok_or(Error::ArithmeticOverflow)?;
        first_moment_actual = first_moment_actual
            .checked_add(term)
            .ok_or(Error::ArithmeticOverflow)?;
    }
    let first_moment_expected = (n as u128)
        .checked_mul(p as u128 - 1)
        .and_then(|x| x.checked_mul(pw(p, dimension - 1).ok()?))
        .ok_or(Error::ArithmeticOverflow)?;
    Ok(MomentReport {
        total_expected,
        total_actual,
        first_moment_expected,
        first_moment_actual,
    })
}

/// Weights present with nonzero count, ascending.
pub fn support(counts: &BTreeMap<u64, u128>) -> Vec<u64> {
    counts
        .iter()
        .filter_map(|(&w, &c)| (c > 0).then_some(w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn map(entries: &[(u64, u128)]) -> BTreeMap<u64, u128> {
        entries.iter().copied().collect()
    }

    #[test]
    fn params_examples() {
        assert_eq!(params(3, 6, 1, Family::C1).unwrap(), (728, 12));
        assert_eq!(params(3, 6, 3, Family::C2).unwrap(), (728, 4));
        assert_eq!(params(3, 8, 1, Family::C2).unwrap(), (6560, 9));
        assert_eq!(params(3, 6, 3, Family::C1).unwrap(), (728, 9));
        assert!(params(3, 3, 3, Family::C1).is_err());
    }

    #[test]
    fn c1_known_distributions() {
        let wd = wd_c1(3, 6, 1).unwrap();
        assert_eq!(wd.formula, "c1-boundary");
        assert_eq!(
            wd.counts,
            map(&[
                (0, 1),
                (432, 6006),
                (477, 275184),
                (486, 118664),
                (504, 122850),
                (513, 8736),
            ])
        );

        let wd = wd_c1(5, 4, 1).unwrap();
        assert_eq!(wd.formula, "c1-deep");
        assert_eq!(
            wd.counts,
            map(&[
                (0, 1),
                (475, 2496),
                (480, 75400),
                (500, 63024),
                (505, 249600),
                (600, 104),
            ])
        );

        // m = 2k, frozen against direct enumeration of all 81 pairs
        let wd = wd_c1(3, 2, 1).unwrap();
        assert_eq!(wd.formula, "c1-degenerate");
        assert_eq!(wd.counts, map(&[(0, 1), (5, 16), (6, 8), (8, 2)]));
    }

    #[test]
    fn c1_rejects_odd_s() {
        assert!(matches!(
            wd_c1(3, 6, 2),
            Err(Error::UnsupportedCase { p: 3, m: 6, k: 2 })
        ));
        assert!(matches!(wd_c1(3, 3, 1), Err(Error::UnsupportedCase { .. })));
    }

    #[test]
    fn c2_known_distributions() {
        let wd = wd_c2(3, 6, 2).unwrap();
        assert_eq!(wd.formula, "c2-even-m");
        assert_eq!(
            wd.counts,
            map(&[
                (0, 1),
                (468, 364),
                (476, 728),
                (494, 728),
                (504, 364),
                (728, 2)
            ])
        );

        let wd = wd_c2(3, 8, 1).unwrap();
        assert_eq!(wd.formula, "c2-deep");
        assert_eq!(
            wd.counts,
            map(&[
                (0, 1),
                (4292, 3280),
                (4320, 4920),
                (4400, 9840),
                (4536, 1640),
                (6560, 2),
            ])
        );

        let wd = wd_c2(3, 6, 3).unwrap();
        assert_eq!(wd.formula, "c2-degenerate");
        assert_eq!(wd.counts, map(&[(0, 1), (476, 52), (504, 26), (728, 2)]));

        let wd = wd_c2(3, 3, 1).unwrap();
        assert_eq!(wd.formula, "c2-odd-m");
        assert_eq!(
            wd.counts,
            map(&[(0, 1), (14, 26), (18, 26), (20, 26), (26, 2)])
        );
    }

    #[test]
    fn c2_merges_colliding_weights() {
        // at (3,2,1) the full-weight count and one formula weight coincide
        let wd = wd_c2(3, 2, 1).unwrap();
        assert_eq!(wd.counts, map(&[(0, 1), (4, 4), (8, 4)]));
    }

    #[test]
    fn minimum_distances_match_reported_values() {
        for (p, m, k, family, dist) in [
            (3, 6, 1, Family::C1, 432),
            (5, 4, 1, Family::C1, 475),
            (3, 6, 2, Family::C2, 468),
            (3, 8, 1, Family::C2, 4292),
            (3, 6, 3, Family::C2, 476),
        ] {
            let wd = match family {
                Family::C1 => wd_c1(p, m, k).unwrap(),
                Family::C2 => wd_c2(p, m, k).unwrap(),
            };
            let min = support(&wd.counts).into_iter().find(|&w| w > 0).unwrap();
            assert_eq!(min, dist);
        }
    }

    #[test]
    fn moments_hold_on_known_distributions() {
        for wd in [wd_c1(3, 6, 1).unwrap(), wd_c1(3, 2, 1).unwrap()] {
            let r = moment_checks(wd.spec.p, wd.spec.n, wd.spec.dimension, &wd.counts).unwrap();
            assert!(r.all_ok());
        }
        for wd in [wd_c2(3, 6, 3).unwrap(), wd_c2(3, 8, 1).unwrap()] {
            let r = moment_checks(wd.spec.p, wd.spec.n, wd.spec.dimension, &wd.counts).unwrap();
            assert!(r.all_ok());
        }
    }

    #[test]
    fn moments_flag_violations() {
        let mut counts = wd_c2(3, 6, 3).unwrap().counts;
        counts.insert(0, 2);
        let r = moment_checks(3, 728, 4, &counts).unwrap();
        assert!(!r.total_ok());
        assert!(!r.all_ok());
    }

    #[test]
    fn divisibilities_always_exact_when_s_even() {
        // p^d + 1 divides p^m - 1 whenever s is even; sweep a grid
        for p in [3u64, 5, 7] {
            for m in 2..=10u32 {
                for k in 1..m {
                    let ci = case_of(p, m, k).unwrap();
                    if ci.s % 2 == 0 && pw(p, 2 * m).is_ok() {
                        wd_c1(p, m, k).unwrap();
                    }
                    if pw(p, m + 1).is_ok() {
                        wd_c2(p, m, k).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn support_lists_nonzero_weights() {
        let counts = map(&[(0, 1), (5, 0), (7, 3)]);
        assert_eq!(support(&counts), vec![0, 7]);
    }
}
