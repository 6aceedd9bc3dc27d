use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cohomology::Family;
use crate::exactalg::Rational;
use crate::vanishing::CompleteIntersectionSpec;

use super::{ConditionEvaluation, StabilityError, StabilityStatus, StabilityVerdict};

/// Hypotheses supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityFlags {
    /// The hypersurface `Y` is general in its linear system.
    pub y_general: bool,
    /// The divisor `X` is general in its linear system.
    pub x_general: bool,
    /// Restriction of Picard groups to `X` is surjective.
    pub picard_surjective: bool,
}

fn stable(certificate: String, assumed: Vec<String>, evaluations: Vec<ConditionEvaluation>) -> StabilityVerdict {
    StabilityVerdict {
        verdict: StabilityStatus::Stable,
        certificate,
        destabilizer_hint: None,
        assumed_flags: assumed,
        evaluations,
    }
}

/// Stability of `T_Y` for a complete intersection of dimension `n >= 3`
/// with every `d_i >= 2` in an irreducible compact Hermitian symmetric space.
pub fn tangent_stability_verdict(spec: &CompleteIntersectionSpec) -> StabilityVerdict {
    let n = spec.n();
    if spec.r() == 0 {
        return StabilityVerdict::unknown("no equations: Y is the ambient space itself");
    }
    if !spec.ambient.is_known_hss() {
        return StabilityVerdict::unknown("ambient not known to be an irreducible Hermitian symmetric space");
    }
    if n < 3 {
        return StabilityVerdict::unknown(format!("needs n >= 3, got n = {n}"));
    }
    if !spec.all_degrees_at_least_two() {
        return StabilityVerdict::unknown(format!("needs all d_i >= 2, got {:?}", spec.degrees));
    }
    let mut assumed = Vec::new();
    if matches!(spec.ambient.family, Family::Other { .. }) {
        assumed.push("assume_irreducible_hss".to_string());
    }
    stable(
        format!("tangent stability of complete intersections: n={n} >= 3, degrees {:?} >= 2", spec.degrees),
        assumed,
        Vec::new(),
    )
}

/// Stability of `T_Y|_X` for a smooth `X` in `|O_Y(d)|`, by the first of
/// four sufficient conditions that holds. All four are evaluated and
/// reported.
pub fn hss_restriction_verdict(spec: &CompleteIntersectionSpec, d: u32, flags: GenericityFlags) -> StabilityVerdict {
    let n = spec.n();
    if spec.r() == 0 || n < 3 || !spec.all_degrees_at_least_two() {
        return StabilityVerdict::unknown(format!(
            "needs r >= 1, n >= 3 and all d_i >= 2 (r={}, n={n}, degrees {:?})",
            spec.r(),
            spec.degrees
        ));
    }
    if !spec.ambient.is_known_hss() {
        return StabilityVerdict::unknown("ambient not known to be an irreducible Hermitian symmetric space");
    }
    if !flags.picard_surjective {
        return StabilityVerdict::unknown("needs surjective Picard restriction to X (flag not set)");
    }
    let fano = spec.is_fano();
    let r_y = spec.index();
    let d1 = spec.degrees[0];
    let dr = *spec.degrees.last().expect("r >= 1");
    let is_p = spec.ambient.is_projective_space();
    let is_q = spec.ambient.is_quadric();
    // d > d_r - r_Y / n  <=>  n d > n d_r - r_Y
    let lhs = Rational::from_integer(BigInt::from(n as i64 * d as i64));
    let rhs = Rational::from_integer(BigInt::from(n as i64 * dr as i64 - r_y));
    let threshold = Rational::new(BigInt::from(n as i64 * dr as i64 - r_y), BigInt::from(n));
    let evaluations = vec![
        ConditionEvaluation {
            condition: "(1) Fano, ambient neither projective space nor quadric".into(),
            holds: fano && !is_p && !is_q,
            detail: format!("fano={fano}, ambient={}", spec.ambient.label()),
        },
        ConditionEvaluation {
            condition: "(2) Fano, projective ambient, d >= d_1".into(),
            holds: fano && is_p && d >= d1,
            detail: format!("fano={fano}, d={d}, d_1={d1}"),
        },
        ConditionEvaluation {
            condition: "(3) Fano, quadric ambient, d >= 2".into(),
            holds: fano && is_q && d >= 2,
            detail: format!("fano={fano}, d={d}"),
        },
        ConditionEvaluation {
            condition: "(4) X general, d > d_r - r_Y/n".into(),
            holds: flags.x_general && lhs > rhs,
            detail: format!("x_general={}, d={d}, threshold={threshold}", flags.x_general),
        },
    ];
    let mut assumed = vec!["picard_surjective".to_string()];
    match evaluations.iter().position(|e| e.holds) {
        Some(i) => {
            if i == 3 {
                assumed.push("x_general".into());
            }
            let cert = format!("effective restriction on Hermitian symmetric spaces, condition {}", evaluations[i].condition);
            stable(cert, assumed, evaluations)
        }
        None => StabilityVerdict {
            verdict: StabilityStatus::Unknown,
            certificate: "no sufficient condition holds".into(),
            destabilizer_hint: None,
            assumed_flags: assumed,
            evaluations,
        },
    }
}

/// Stability of `T_Y|_X` for a hypersurface `Y` of degree `d_h` in
/// `P^{n+1}` and `X` in `|O_Y(d)|`: stable unless `d = 1` and `Y` is a
/// hyperplane or a quadric.
pub fn general_hypersurface_verdict(n: u32, d_h: u32, d: u32, flags: GenericityFlags) -> StabilityVerdict {
    if n < 3 || d_h == 0 || d == 0 {
        return StabilityVerdict::unknown(format!("needs n >= 3 and positive degrees (n={n}, d_h={d_h}, d={d})"));
    }
    if d == 1 && d_h <= 2 {
        let y = if d_h == 1 { format!("P^{n}") } else { format!("Q^{n}") };
        return StabilityVerdict {
            verdict: StabilityStatus::Unstable,
            certificate: format!("linear section of {y}: T_X has larger slope than T_Y|_X"),
            destabilizer_hint: Some("T_X ⊂ T_Y|_X in the linear-section exception".into()),
            assumed_flags: Vec::new(),
            evaluations: Vec::new(),
        };
    }
    if d_h <= 2 {
        return stable(
            format!("restriction of T of {} to a smooth divisor of degree {d} >= 2", if d_h == 1 { "P^n" } else { "Q^n" }),
            Vec::new(),
            Vec::new(),
        );
    }
    let mut missing = Vec::new();
    if !flags.y_general {
        missing.push("y_general");
    }
    if !flags.x_general {
        missing.push("x_general");
    }
    if !flags.picard_surjective {
        missing.push("picard_surjective");
    }
    if !missing.is_empty() {
        return StabilityVerdict::unknown(format!("needs flags {missing:?}"));
    }
    stable(
        format!("general hypersurface restriction: d_h={d_h} >= 3, d={d}"),
        vec!["y_general".into(), "x_general".into(), "picard_surjective".into()],
        Vec::new(),
    )
}

/// The single twist that must be tested for stability of `T_Y|_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionTestSet {
    /// Largest integer `t <= -r_Y/n`.
    pub t_max: i64,
    pub justification: String,
}

/// `T_Y|_X` is stable iff `H^0(X, T_Y(t)|_X) = 0` for every `t <= -r_Y/n`.
/// Multiplying by a nonzero section of `O(1)` embeds the `t` group into the
/// `t + 1` group, so testing `t_max` alone suffices.
pub fn restriction_test_set(spec: &CompleteIntersectionSpec, d: u32) -> Result<RestrictionTestSet, StabilityError> {
    let n = spec.n();
    if n < 3 {
        return Err(StabilityError::SideCondition(format!("needs n >= 3, got {n}")));
    }
    if spec.r() == 0 || !spec.all_degrees_at_least_two() {
        return Err(StabilityError::SideCondition(format!("needs r >= 1 and all d_i >= 2, got {:?}", spec.degrees)));
    }
    if d == 0 {
        return Err(StabilityError::InvalidInput("d must be positive".into()));
    }
    let r_y = spec.index();
    // With every d_i >= 2, r_Y >= n happens only for Y a quadric.
    if r_y >= n as i64 && d < 2 {
        return Err(StabilityError::SideCondition(format!("Y is a quadric (r_Y={r_y}) and needs d >= 2, got {d}")));
    }
    let t_max = Integer::div_floor(&(-r_y), &(n as i64));
    Ok(RestrictionTestSet {
        t_max,
        justification: format!(
            "t_max = floor(-{r_y}/{n}); a nonzero section of O_X(1) embeds H^0(T_Y(t)|_X) into H^0(T_Y(t+1)|_X), so vanishing at t_max gives vanishing for all t <= t_max"
        ),
    })
}

/// Computed and recorded inputs for a general linear section `X` of a
/// general cubic threefold `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicSectionEvidence {
    /// `h^0(Y, T_Y)`.
    pub h0_tangent_y: usize,
    /// `H^0(Y, T_Y) -> H^0(X, T_Y|_X)` is onto.
    pub restriction_surjective_t0: bool,
    /// `h^0(X, T_Y(-1)|_X)`.
    pub h0_restricted_t_max: usize,
    /// Classes of degree `-2` against `-K_X` that survive the lattice
    /// search for invertible subsheaves of `Omega_X`.
    pub invertible_subsheaf_survivors: usize,
    /// Upper bound for `c_1(F) . (-K_X)` over rank-two saturated subsheaves;
    /// a recorded value, not computed here.
    pub rank_two_bound: i64,
}

/// Stability of `T_Y|_X` with respect to `O_X(1)`; `mu(Omega_Y|_X) = -2`,
/// and both subsheaf ranks must have slope strictly below it.
pub fn cubic_section_verdict(e: &CubicSectionEvidence) -> StabilityVerdict {
    let target = Rational::from_integer(BigInt::from(-2));
    let rank_one_bound: i64 = if e.invertible_subsheaf_survivors == 0 { -3 } else { -2 };
    let rank_two = Rational::new(BigInt::from(e.rank_two_bound), BigInt::from(2));
    let extension_inputs = e.h0_tangent_y == 0 && e.restriction_surjective_t0 && e.h0_restricted_t_max == 0;
    let evaluations = vec![
        ConditionEvaluation {
            condition: "no vector fields on Y and none on X extend nontrivially".into(),
            holds: extension_inputs,
            detail: format!(
                "h0(T_Y)={}, surjective at t=0: {}, h0(T_Y(-1)|_X)={}",
                e.h0_tangent_y, e.restriction_surjective_t0, e.h0_restricted_t_max
            ),
        },
        ConditionEvaluation {
            condition: "rank one: c_1(L).(-K_X) <= -3 < -2".into(),
            holds: Rational::from_integer(BigInt::from(rank_one_bound)) < target,
            detail: format!("survivors={}, bound={rank_one_bound}", e.invertible_subsheaf_survivors),
        },
        ConditionEvaluation {
            condition: "rank two: c_1(F).(-K_X)/2 < -2".into(),
            holds: rank_two < target,
            detail: format!("bound={}/2 (recorded value)", e.rank_two_bound),
        },
    ];
    if evaluations.iter().all(|c| c.holds) {
        stable(
            "linear section of a general cubic threefold: every saturated subsheaf has slope below -2".into(),
            vec!["y_general".into(), "x_general".into(), "rank_two_bound_recorded".into()],
            evaluations,
        )
    } else {
        StabilityVerdict {
            verdict: StabilityStatus::Unknown,
            certificate: "some slope bound not established".into(),
            destabilizer_hint: None,
            assumed_flags: Vec::new(),
            evaluations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::HSSDescriptor;

    fn ci(a: HSSDescriptor, d: &[u32]) -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(a, d.to_vec()).unwrap()
    }

    const ALL: GenericityFlags = GenericityFlags { y_general: true, x_general: true, picard_surjective: true };

    #[test]
    fn tangent_stability_examples() {
        let v = tangent_stability_verdict(&ci(HSSDescriptor::projective_space(4), &[3]));
        assert_eq!(v.verdict, StabilityStatus::Stable);
        let v = tangent_stability_verdict(&ci(HSSDescriptor::projective_space(5), &[1]));
        assert_eq!(v.verdict, StabilityStatus::Unknown);
        assert!(v.certificate.contains("d_i >= 2"));
        let v = tangent_stability_verdict(&ci(HSSDescriptor::quadric(6), &[2, 2]));
        assert_eq!(v.verdict, StabilityStatus::Stable);
    }

    #[test]
    fn restriction_examples() {
        let v = hss_restriction_verdict(&ci(HSSDescriptor::projective_space(4), &[3]), 3, ALL);
        assert_eq!(v.verdict, StabilityStatus::Stable);
        assert!(v.certificate.contains("(2)"));
        let q5 = ci(HSSDescriptor::quadric(5), &[2]);
        let v = hss_restriction_verdict(&q5, 1, ALL);
        assert_eq!(v.verdict, StabilityStatus::Unknown);
        assert!(v.evaluations[3].detail.contains("threshold=5/4"));
        let v = hss_restriction_verdict(&q5, 2, ALL);
        assert!(v.certificate.contains("(3)"));
        let v = hss_restriction_verdict(&ci(HSSDescriptor::lagrangian_grassmannian(4), &[2]), 1, ALL);
        assert!(v.certificate.contains("(1)"));
    }

    #[test]
    fn general_hypersurface_examples() {
        assert_eq!(general_hypersurface_verdict(3, 3, 1, ALL).verdict, StabilityStatus::Stable);
        let v = general_hypersurface_verdict(3, 1, 1, ALL);
        assert_eq!(v.verdict, StabilityStatus::Unstable);
        assert!(v.destabilizer_hint.unwrap().contains("T_X"));
        assert_eq!(general_hypersurface_verdict(4, 2, 2, ALL).verdict, StabilityStatus::Stable);
    }

    #[test]
    fn test_set_examples() {
        let t = restriction_test_set(&ci(HSSDescriptor::projective_space(4), &[3]), 1).unwrap();
        assert_eq!(t.t_max, -1);
        assert!(restriction_test_set(&ci(HSSDescriptor::projective_space(4), &[2]), 1).is_err());
        let t = restriction_test_set(&ci(HSSDescriptor::projective_space(5), &[2, 2]), 2).unwrap();
        assert_eq!(t.t_max, -1);
    }

    #[test]
    fn cubic_section() {
        let e = CubicSectionEvidence {
            h0_tangent_y: 0,
            restriction_surjective_t0: true,
            h0_restricted_t_max: 0,
            invertible_subsheaf_survivors: 0,
            rank_two_bound: -5,
        };
        assert_eq!(cubic_section_verdict(&e).verdict, StabilityStatus::Stable);
        let bad = CubicSectionEvidence { invertible_subsheaf_survivors: 1, ..e.clone() };
        assert_eq!(cubic_section_verdict(&bad).verdict, StabilityStatus::Unknown);
        let bad = CubicSectionEvidence { rank_two_bound: -4, ..e };
        assert_eq!(cubic_section_verdict(&bad).verdict, StabilityStatus::Unknown);
    }

    #[test]
    fn verdict_round_trip() {
        let v = hss_restriction_verdict(&ci(HSSDescriptor::quadric(5), &[2]), 1, ALL);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<StabilityVerdict>(&s).unwrap(), v);
    }
}
