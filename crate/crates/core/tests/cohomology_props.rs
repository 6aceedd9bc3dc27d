mod common;

use hsscohom::cohomology::{bott_dimension, cn_answer, classify_top_forms, quadric_nonvanishing, HSSDescriptor};
use num_traits::ToPrimitive;
use proptest::prelude::*;

#[test]
fn bott_matches_euler_contraction() {
    for n in 1..=3u32 {
        for p in 0..=n {
            for l in 0..=6i64 {
                let want = common::euler_contraction_h0(n as usize, p as usize, l);
                assert_eq!(bott_dimension(n, p, 0, l).to_usize().unwrap(), want, "n={n} p={p} l={l}");
            }
        }
    }
}

proptest! {
    #[test]
    fn serre_duality(n in 1u32..=6, p in 0u32..=6, q in 0u32..=6, l in -10i64..=10) {
        prop_assume!(p <= n && q <= n);
        prop_assert_eq!(bott_dimension(n, p, q, l), bott_dimension(n, n - p, n - q, -l));
    }

    #[test]
    fn quadric_top_forms_agree(n in 2u32..=8, q in 0u32..=8, l in -16i64..=16) {
        prop_assume!(q <= n && l.abs() <= 2 * n as i64);
        let desc = HSSDescriptor::quadric(n);
        prop_assert_eq!(quadric_nonvanishing(n, n - 1, q, l).unwrap(), classify_top_forms(&desc, q, l).unwrap());
    }
}

#[test]
fn hodge_numbers_of_projective_space() {
    for n in 1..=5u32 {
        for p in 0..=n {
            for q in 0..=n {
                let expected = u32::from(p == q);
                assert_eq!(bott_dimension(n, p, q, 0), expected.into());
            }
        }
    }
}

#[test]
fn lagrangian_grassmannian_example() {
    for l in 1..=4 {
        for q in 0..=10u64 {
            let (a, checked) = cn_answer(4, 9, Some(q), l).unwrap();
            assert!(a.is_zero(), "q={q} l={l}");
            assert_eq!(checked, 16);
        }
    }
}
