mod common;

use hsscohom::cohomology::HSSDescriptor;
use hsscohom::exactalg::{rat, ratio};
use hsscohom::stability::{
    general_hypersurface_verdict, hss_restriction_verdict, langer_bound, langer_threshold, slope, ChernData,
    GenericityFlags, SlopeData, StabilityStatus, StabilityVerdict,
};
use hsscohom::vanishing::CompleteIntersectionSpec;
use proptest::prelude::*;

const ALL: GenericityFlags = GenericityFlags { y_general: true, x_general: true, picard_surjective: true };

proptest! {
    #[test]
    fn slope_is_homogeneous(c in -50i64..50, rank in 1u32..8, k in 1u32..6) {
        let a = SlopeData::new(rat(c), rank).unwrap();
        let b = SlopeData::new(rat(c * k as i64), rank * k).unwrap();
        prop_assert_eq!(slope(&a), slope(&b));
    }

    #[test]
    fn langer_degree_is_sharp(p in 2u32..6, delta in 0i64..40, hn in 1i64..6) {
        let cd = ChernData::from_discriminant(p, rat(delta), rat(hn)).unwrap();
        let b = langer_bound(&cd);
        let t = langer_threshold(&cd);
        prop_assert!(rat(b.degree) > t);
        prop_assert!(rat(b.degree - 1) <= t);
        let (num, den) = common::langer_fraction(p as i128, delta as i128, hn as i128);
        prop_assert_eq!(b.degree, common::integer_above(num, den));
    }

    #[test]
    fn restriction_verdicts_never_conflict(n in 3u32..7, dh in 2u32..6, d in 1u32..6) {
        let spec = CompleteIntersectionSpec::new(HSSDescriptor::projective_space(n + 1), vec![dh]).unwrap();
        let a = hss_restriction_verdict(&spec, d, ALL).verdict;
        let b = general_hypersurface_verdict(n, dh, d, ALL).verdict;
        let clash = (a == StabilityStatus::Stable && b == StabilityStatus::Unstable)
            || (a == StabilityStatus::Unstable && b == StabilityStatus::Stable);
        prop_assert!(!clash, "n={} dh={} d={}", n, dh, d);
    }

    #[test]
    fn verdicts_round_trip(n in 3u32..6, dh in 2u32..5, d in 1u32..5) {
        let spec = CompleteIntersectionSpec::new(HSSDescriptor::projective_space(n + 1), vec![dh]).unwrap();
        for v in [hss_restriction_verdict(&spec, d, ALL), general_hypersurface_verdict(n, dh, d, ALL)] {
            let s = serde_json::to_string(&v).unwrap();
            prop_assert_eq!(serde_json::from_str::<StabilityVerdict>(&s).unwrap(), v);
        }
    }
}

#[test]
fn langer_hand_values() {
    let cases = [(2, 4, 1, 3), (2, 0, 1, 1), (3, 0, 2, 1)];
    for (p, delta, hn, d) in cases {
        let cd = ChernData::from_discriminant(p, rat(delta), rat(hn)).unwrap();
        assert_eq!(langer_bound(&cd).degree, d);
    }
    let cd = ChernData::from_discriminant(2, rat(4), rat(1)).unwrap();
    assert_eq!(langer_threshold(&cd), ratio(5, 2));
}

#[test]
fn stable_certificates_name_one_condition() {
    let spec = CompleteIntersectionSpec::new(HSSDescriptor::projective_space(4), vec![3]).unwrap();
    for d in 1..6 {
        let v = hss_restriction_verdict(&spec, d, ALL);
        if v.verdict == StabilityStatus::Stable {
            let named = ["(1)", "(2)", "(3)", "(4)"].iter().filter(|c| v.certificate.contains(*c)).count();
            assert_eq!(named, 1);
        }
    }
}
