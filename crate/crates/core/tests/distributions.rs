//! Cross-module checks: closed forms against exact enumeration, basis
//! independence, dimension counts, and the aggregate rank/sign tallies.

use std::collections::HashSet;

use tracecodes::codes::{self, Family, Strategy};
use tracecodes::gf::{make_field, make_field_with_modulus, FieldCtx};
use tracecodes::spectrum;
use tracecodes::theory;

const SWEEP: u128 = 1 << 20;
const PAIRS: u128 = 1 << 32;

/// The first two monic irreducibles of degree m over F_p, in radix order.
fn two_moduli(p: u64, m: u32) -> (Vec<u64>, Vec<u64>) {
    let mut found = Vec::new();
    for mut c in 0..p.pow(m) {
        let mut poly = Vec::with_capacity(m as usize + 1);
        for _ in 0..m {
            poly.push(c % p);
            c /= p;
        }
        poly.push(1);
        if make_field_with_modulus(p, m, &poly).is_ok() {
            found.push(poly);
            if found.len() == 2 {
                break;
            }
        }
    }
    let second = found.pop().unwrap();
    (found.pop().unwrap(), second)
}

#[test]
fn theory_matches_enumeration_c1() {
    for (p, m, k) in [
        (3u64, 2u32, 1u32),
        (3, 4, 1),
        (3, 4, 2),
        (5, 2, 1),
        (7, 2, 1),
    ] {
        let f = make_field(p, m).unwrap();
        let emp = codes::empirical_wd_c1(&f, k, Strategy::Direct, PAIRS).unwrap();
        let th = theory::wd_c1(p, m, k).unwrap();
        assert_eq!(th.counts, emp.counts, "C1 p={p} m={m} k={k}");
        assert_eq!(th.spec, emp.spec);
    }
    // boundary, non-degenerate: too many pairs for the direct path here,
    // the transform handles it comfortably
    let f = make_field(3, 6).unwrap();
    let emp = codes::empirical_wd_c1(&f, 1, Strategy::Transform, PAIRS).unwrap();
    let th = theory::wd_c1(3, 6, 1).unwrap();
    assert_eq!(th.counts, emp.counts);
}

#[test]
fn theory_matches_enumeration_c2() {
    for (p, m, k) in [
        (3u64, 2u32, 1u32),
        (3, 3, 1),
        (3, 3, 2),
        (3, 4, 1),
        (3, 4, 2),
        (3, 5, 1),
        (3, 6, 1),
        (3, 6, 2),
        (3, 6, 3),
        (5, 2, 1),
        (5, 3, 1),
        (5, 4, 1),
        (7, 2, 1),
        (7, 3, 1),
    ] {
        let f = make_field(p, m).unwrap();
        let emp = codes::empirical_wd_c2(&f, k, Strategy::Direct, SWEEP).unwrap();
        let th = theory::wd_c2(p, m, k).unwrap();
        assert_eq!(th.counts, emp.counts, "C2 p={p} m={m} k={k}");
    }
}

#[test]
fn rset_tallies_match_closed_form() {
    for (p, m, k) in [
        (3u64, 2u32, 1u32),
        (3, 3, 1),
        (3, 4, 1),
        (3, 4, 2),
        (3, 5, 1),
        (3, 5, 2),
        (3, 6, 2),
        (3, 6, 3),
        (5, 2, 1),
        (5, 3, 1),
        (7, 2, 1),
    ] {
        let f = make_field(p, m).unwrap();
        let emp = spectrum::empirical_rsets(&f, k, SWEEP).unwrap();
        let want = spectrum::expected_rsets(p, m, k).unwrap();
        assert_eq!(emp, want, "p={p} m={m} k={k}");
        assert_eq!(emp.total(), f.size() - 1);
    }
}

#[test]
fn distributions_are_basis_independent() {
    for (p, m, k) in [(3u64, 2u32, 1u32), (3, 4, 1), (3, 4, 2), (5, 2, 1)] {
        let (mod1, mod2) = two_moduli(p, m);
        assert_ne!(mod1, mod2);
        let f1 = make_field_with_modulus(p, m, &mod1).unwrap();
        let f2 = make_field_with_modulus(p, m, &mod2).unwrap();
        let c1a = codes::empirical_wd_c1(&f1, k, Strategy::Direct, PAIRS).unwrap();
        let c1b = codes::empirical_wd_c1(&f2, k, Strategy::Direct, PAIRS).unwrap();
        assert_eq!(c1a.counts, c1b.counts, "C1 p={p} m={m} k={k}");
        let c2a = codes::empirical_wd_c2(&f1, k, Strategy::Direct, SWEEP).unwrap();
        let c2b = codes::empirical_wd_c2(&f2, k, Strategy::Direct, SWEEP).unwrap();
        assert_eq!(c2a.counts, c2b.counts, "C2 p={p} m={m} k={k}");
        assert_eq!(
            spectrum::empirical_rsets(&f1, k, SWEEP).unwrap(),
            spectrum::empirical_rsets(&f2, k, SWEEP).unwrap()
        );
    }
}

fn distinct_codewords(f: &FieldCtx, k: u32, family: Family) -> usize {
    let mut seen = HashSet::new();
    for ai in 0..f.size() {
        let a = f.element_from_index(ai);
        match family {
            Family::C1 => {
                for bi in 0..f.size() {
                    let b = f.element_from_index(bi);
                    seen.insert(codes::codeword_c1(f, k, &a, &b).unwrap());
                }
            }
            Family::C2 => {
                for lam in 0..f.p() {
                    seen.insert(codes::codeword_c2(f, k, &a, lam).unwrap());
                }
            }
        }
    }
    seen.len()
}

#[test]
fn distinct_codeword_count_is_p_to_the_dimension() {
    // validates the dimension claims, including the drop at m = 2k
    for (p, m, k) in [
        (3u64, 2u32, 1u32),
        (3, 3, 1),
        (3, 3, 2),
        (3, 4, 2),
        (5, 2, 1),
    ] {
        let f = make_field(p, m).unwrap();
        for family in [Family::C1, Family::C2] {
            let (_, dim) = theory::params(p, m, k, family).unwrap();
            assert_eq!(
                distinct_codewords(&f, k, family),
                p.pow(dim) as usize,
                "{} p={p} m={m} k={k}",
                family.as_str()
            );
        }
    }
}

#[test]
fn enumerated_distributions_satisfy_moments() {
    for (p, m, k) in [(3u64, 3u32, 1u32), (3, 4, 2), (5, 2, 1)] {
        let f = make_field(p, m).unwrap();
        let c1 = codes::empirical_wd_c1(&f, k, Strategy::Direct, PAIRS).unwrap();
        let r = theory::moment_checks(p, c1.spec.n, c1.spec.dimension, &c1.counts).unwrap();
        assert!(r.all_ok());
        assert_eq!(c1.total(), r.total_expected);
        let c2 = codes::empirical_wd_c2(&f, k, Strategy::Direct, SWEEP).unwrap();
        let r = theory::moment_checks(p, c2.spec.n, c2.spec.dimension, &c2.counts).unwrap();
        assert!(r.all_ok());
    }
}

#[test]
fn codeword_sets_are_cyclically_closed() {
    // shift every codeword and find it again among codewords
    for (p, m, k) in [(3u64, 2u32, 1u32), (3, 4, 1)] {
        let f = make_field(p, m).unwrap();
        let mut all = HashSet::new();
        for ai in 0..f.size() {
            let a = f.element_from_index(ai);
            for bi in 0..f.size() {
                let b = f.element_from_index(bi);
                all.insert(codes::codeword_c1(&f, k, &a, &b).unwrap());
            }
        }
        for w in &all {
            let mut shifted = w.clone();
            shifted.rotate_left(1);
            assert!(all.contains(&shifted));
            let mut right = w.clone();
            right.rotate_right(1);
            assert!(all.contains(&right));
        }
    }
}
