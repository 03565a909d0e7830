//! Property tests over randomly sampled fields, parameters and elements.

use std::sync::OnceLock;

use proptest::prelude::*;

use tracecodes::codes;
use tracecodes::gf::{quad_char, FieldCtx};
use tracecodes::quadform;
use tracecodes::spectrum;

/// Small fields shared across cases: (p, m) with p^m <= 343.
const FIELDS: &[(u64, u32)] = &[
    (3, 2),
    (3, 3),
    (3, 4),
    (3, 5),
    (5, 2),
    (5, 3),
    (7, 2),
    (7, 3),
];

fn field(i: usize) -> &'static FieldCtx {
    static CTXS: OnceLock<Vec<FieldCtx>> = OnceLock::new();
    &CTXS.get_or_init(|| {
        FIELDS
            .iter()
            .map(|&(p, m)| tracecodes::gf::make_field(p, m).unwrap())
            .collect()
    })[i]
}

fn field_and_elements(count: usize) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (0..FIELDS.len()).prop_flat_map(move |fi| {
        let q = FIELDS[fi].0.pow(FIELDS[fi].1);
        (Just(fi), proptest::collection::vec(0..q, count))
    })
}

fn field_k_and_elements(count: usize) -> impl Strategy<Value = (usize, u32, Vec<u64>)> {
    (0..FIELDS.len()).prop_flat_map(move |fi| {
        let (p, m) = FIELDS[fi];
        let q = p.pow(m);
        (Just(fi), 1..m, proptest::collection::vec(0..q, count))
    })
}

proptest! {
    #[test]
    fn ring_axioms((fi, idx) in field_and_elements(3)) {
        let f = field(fi);
        let x = f.element_from_index(idx[0]);
        let y = f.element_from_index(idx[1]);
        let z = f.element_from_index(idx[2]);
        prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
        prop_assert_eq!(f.add(&x, &y), f.add(&y, &x));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(
            f.mul(&x, &f.add(&y, &z)),
            f.add(&f.mul(&x, &y), &f.mul(&x, &z))
        );
        prop_assert_eq!(f.sub(&x, &x), f.zero());
        prop_assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
    }

    #[test]
    fn multiplicative_group_laws((fi, idx) in field_and_elements(1)) {
        let f = field(fi);
        let x = f.element_from_index(idx[0]);
        if !x.is_zero() {
            prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
            prop_assert_eq!(f.pow(&x, (f.size() - 1) as u128), f.one());
            // exponent reduction
            prop_assert_eq!(f.pow(&x, f.size() as u128), x.clone());
            if let Some(l) = f.log_index(&x) {
                let t = f.tables().unwrap();
                prop_assert_eq!(t.exp()[l as usize] as u64, f.index_of(&x));
            }
        }
    }

    #[test]
    fn trace_linearity_and_frobenius((fi, idx) in field_and_elements(2)) {
        let f = field(fi);
        let x = f.element_from_index(idx[0]);
        let y = f.element_from_index(idx[1]);
        prop_assert_eq!(
            f.trace(&f.add(&x, &y)),
            (f.trace(&x) + f.trace(&y)) % f.p()
        );
        prop_assert_eq!(f.trace(&f.pow(&x, f.p() as u128)), f.trace(&x));
        for c in 0..f.p() {
            prop_assert_eq!(f.trace(&f.scale(c, &x)), c * f.trace(&x) % f.p());
        }
    }

    #[test]
    fn classification_is_internally_consistent((fi, k, idx) in field_k_and_elements(1)) {
        // classify re-derives the sign class from point counts and errors
        // on any disagreement, so success is the property
        let f = field(fi);
        let a = f.element_from_index(idx[0]);
        if !a.is_zero() {
            let pr = quadform::classify(f, k, &a).unwrap();
            prop_assert!(pr.eps == 1 || pr.eps == -1);
            let d = {
                let (mut a, mut b) = (k as u64, f.m() as u64);
                while b != 0 { let r = a % b; a = b; b = r; }
                a as u32
            };
            prop_assert!(pr.rank == f.m() || pr.rank + 2 * d == f.m());
            let hist = spectrum::trace_histogram(f, k, &a).unwrap();
            prop_assert_eq!(hist, quadform::predicted_histogram(f.p(), f.m(), pr.rank, pr.eps));
        }
    }

    #[test]
    fn quadric_point_counts_sum_to_field_size((fi, k, idx) in field_k_and_elements(1)) {
        let f = field(fi);
        let a = f.element_from_index(idx[0]);
        if !a.is_zero() {
            let total: u64 = (0..f.p())
                .map(|beta| quadform::count_quadric_points(f, k, &a, beta).unwrap())
                .sum();
            prop_assert_eq!(total, f.size());
        }
    }

    #[test]
    fn weights_agree_with_vectors((fi, k, idx) in field_k_and_elements(2)) {
        let f = field(fi);
        let a = f.element_from_index(idx[0]);
        let b = f.element_from_index(idx[1]);
        let v = codes::codeword_c1(f, k, &a, &b).unwrap();
        let hw = v.iter().filter(|&&c| c != 0).count() as u64;
        prop_assert_eq!(hw, codes::weight_c1(f, k, &a, &b).unwrap());
        let lam = idx[1] % f.p();
        let v = codes::codeword_c2(f, k, &a, lam).unwrap();
        let hw = v.iter().filter(|&&c| c != 0).count() as u64;
        prop_assert_eq!(hw, codes::weight_c2(f, k, &a, lam).unwrap());
    }

    #[test]
    fn shift_identity_random((fi, k, idx) in field_k_and_elements(2)) {
        let f = field(fi);
        let a = f.element_from_index(idx[0]);
        let b = f.element_from_index(idx[1]);
        let g = f.pow(f.alpha(), (f.p().pow(k) + 1) as u128);
        let mut v = codes::codeword_c1(f, k, &a, &b).unwrap();
        v.rotate_left(1);
        let w = codes::codeword_c1(f, k, &f.mul(&a, &g), &f.mul(&b, f.alpha())).unwrap();
        prop_assert_eq!(v, w);
    }

    #[test]
    fn quad_char_is_multiplicative(p_i in 0usize..5, u in 1u64..100, v in 1u64..100) {
        let p = [3u64, 5, 7, 11, 13][p_i];
        let (u, v) = (u % (p - 1) + 1, v % (p - 1) + 1);
        prop_assert_eq!(quad_char(p, u * v % p), quad_char(p, u) * quad_char(p, v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_strategies_agree_on_random_small_fields(
        fi in 0usize..4, k_seed in 0u32..8
    ) {
        // restricted to p^m <= 81 so each case stays cheap
        let f = field(fi);
        prop_assume!(f.size() <= 81);
        let k = 1 + k_seed % (f.m() - 1);
        let d1 = codes::empirical_wd_c1(f, k, codes::Strategy::Direct, 1 << 32).unwrap();
        let t1 = codes::empirical_wd_c1(f, k, codes::Strategy::Transform, 1 << 32).unwrap();
        prop_assert_eq!(d1, t1);
        let d2 = codes::empirical_wd_c2(f, k, codes::Strategy::Direct, 1 << 20).unwrap();
        let t2 = codes::empirical_wd_c2(f, k, codes::Strategy::Transform, 1 << 20).unwrap();
        prop_assert_eq!(d2, t2);
    }
}
