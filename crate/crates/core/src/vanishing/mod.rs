//! Vanishing certificates for twisted forms on complete intersections.
//!
//! Every `MustVanish` answer carries the chain of rules that produced it, so
//! a caller can audit which inequality or which exact formula was used.

mod koszul;
mod predicates;
mod spec;

pub use koszul::{discharge_witness, discharge_witnesses, koszul_twists, koszul_witnesses, DischargeReport, KoszulWitness, WitnessCase};
pub use predicates::{akizuki_nakano_vanishes, kobayashi_ochiai, kodaira_vanishes, IndexBound};
pub use spec::CompleteIntersectionSpec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{family_answer, AnswerStatus, CohomologyError};
use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VanishingError {
    #[error("criterion not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    MustVanish,
    PossiblyNonzero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Untwisted forms off the diagonal vanish on the complete intersection.
    HodgeDiagonal,
    /// `l + q <= p r_Y / n` with `l != 0`.
    SlopeInequality,
    /// Zero read off an exact formula (Bott, quadric, top forms, C_n).
    FamilyExactZero,
    Kodaira,
    AkizukiNakano,
    /// Reduction through the Koszul resolution to ambient groups.
    KoszulReduction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCertificate {
    pub verdict: Verdict,
    pub reason_chain: Vec<RuleApplication>,
}

impl VanishingCertificate {
    fn must_vanish(chain: Vec<RuleApplication>) -> Self {
        VanishingCertificate { verdict: Verdict::MustVanish, reason_chain: chain }
    }

    fn possibly_nonzero(detail: String) -> Self {
        VanishingCertificate {
            verdict: Verdict::PossiblyNonzero,
            reason_chain: vec![RuleApplication { rule: Rule::SlopeInequality, detail }],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingOptions {
    /// Allow degree-one equations for the untwisted (`l = 0`) statement,
    /// which does not need `d_i >= 2`. Twisted queries still require it.
    pub relax_degrees_for_untwisted: bool,
}

/// `r_Y` of the complete intersection.
pub fn ci_index(spec: &CompleteIntersectionSpec) -> i64 {
    spec.index()
}

/// Vanishing predicate for `H^q(Y, Omega^p(l))` with `p >= 1`,
/// `p + q <= n - 1`, `n >= 2` and every `d_i >= 2`.
///
/// With no equations (`r = 0`) the answer comes from the ambient family's
/// exact formulas instead.
pub fn ci_vanishing_predicate(
    spec: &CompleteIntersectionSpec,
    p: u32,
    q: u32,
    l: i64,
) -> Result<VanishingCertificate, VanishingError> {
    ci_vanishing_predicate_with(spec, p, q, l, VanishingOptions::default())
}

pub fn ci_vanishing_predicate_with(
    spec: &CompleteIntersectionSpec,
    p: u32,
    q: u32,
    l: i64,
    options: VanishingOptions,
) -> Result<VanishingCertificate, VanishingError> {
    let n = spec.n();
    if n < 2 {
        return Err(VanishingError::NotApplicable(format!("need n >= 2, got {n}")));
    }
    if p < 1 {
        return Err(VanishingError::NotApplicable("need p >= 1".into()));
    }
    if p + q > n - 1 {
        return Err(VanishingError::NotApplicable(format!("need p + q <= n - 1 = {}, got {}", n - 1, p + q)));
    }
    if spec.r() == 0 {
        return ambient_exact(spec, p, q, l);
    }
    if !spec.all_degrees_at_least_two() && !(options.relax_degrees_for_untwisted && l == 0) {
        return Err(VanishingError::NotApplicable(format!("degrees {:?} include d_i < 2", spec.degrees)));
    }
    if l == 0 {
        if p != q {
            return Ok(VanishingCertificate::must_vanish(vec![RuleApplication {
                rule: Rule::HodgeDiagonal,
                detail: format!("l=0 and p={p} != q={q}"),
            }]));
        }
        return Ok(VanishingCertificate {
            verdict: Verdict::PossiblyNonzero,
            reason_chain: vec![RuleApplication { rule: Rule::HodgeDiagonal, detail: format!("l=0 and p=q={p}") }],
        });
    }
    let r_y = spec.index();
    let lhs = Rational::from_integer(BigInt::from(n as i64 * (l + q as i64)));
    let rhs = Rational::from_integer(BigInt::from(p as i64 * r_y));
    let shown = format!("l+q={} vs p r_Y/n={}/{}", l + q as i64, p as i64 * r_y, n);
    if lhs <= rhs {
        Ok(VanishingCertificate::must_vanish(vec![RuleApplication { rule: Rule::SlopeInequality, detail: shown }]))
    } else {
        Ok(VanishingCertificate::possibly_nonzero(shown))
    }
}

fn ambient_exact(spec: &CompleteIntersectionSpec, p: u32, q: u32, l: i64) -> Result<VanishingCertificate, VanishingError> {
    let a = family_answer(&spec.ambient, p, q, l)?;
    if a.is_zero() {
        return Ok(VanishingCertificate::must_vanish(vec![RuleApplication {
            rule: Rule::FamilyExactZero,
            detail: a.certificate,
        }]));
    }
    let detail = match a.status {
        AnswerStatus::PossiblyNonzero => a.certificate,
        _ => format!("nonzero: {}", a.certificate),
    };
    Ok(VanishingCertificate {
        verdict: Verdict::PossiblyNonzero,
        reason_chain: vec![RuleApplication { rule: Rule::FamilyExactZero, detail }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::HSSDescriptor;

    fn cubic_fourfold() -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(HSSDescriptor::projective_space(5), vec![3]).unwrap()
    }

    #[test]
    fn cubic_fourfold_examples() {
        let y = cubic_fourfold();
        assert_eq!(ci_index(&y), 3);
        assert_eq!(ci_vanishing_predicate(&y, 1, 0, 0).unwrap().verdict, Verdict::MustVanish);
        assert_eq!(ci_vanishing_predicate(&y, 1, 0, 1).unwrap().verdict, Verdict::PossiblyNonzero);
        assert_eq!(ci_vanishing_predicate(&y, 2, 0, 1).unwrap().verdict, Verdict::MustVanish);
    }

    #[test]
    fn out_of_range_is_not_a_verdict() {
        let y = cubic_fourfold();
        assert!(matches!(ci_vanishing_predicate(&y, 2, 2, 1), Err(VanishingError::NotApplicable(_))));
        assert!(matches!(ci_vanishing_predicate(&y, 0, 1, 1), Err(VanishingError::NotApplicable(_))));
    }

    #[test]
    fn relaxation_only_for_untwisted() {
        let y = CompleteIntersectionSpec::new(HSSDescriptor::projective_space(6), vec![1, 3]).unwrap();
        assert!(ci_vanishing_predicate(&y, 1, 0, 0).is_err());
        let opts = VanishingOptions { relax_degrees_for_untwisted: true };
        assert_eq!(ci_vanishing_predicate_with(&y, 1, 0, 0, opts).unwrap().verdict, Verdict::MustVanish);
        assert!(ci_vanishing_predicate_with(&y, 1, 0, 1, opts).is_err());
    }

    #[test]
    fn no_equations_uses_exact_formulas() {
        let q = CompleteIntersectionSpec::new(HSSDescriptor::quadric(5), vec![]).unwrap();
        let c = ci_vanishing_predicate(&q, 2, 0, 1).unwrap();
        assert_eq!(c.verdict, Verdict::MustVanish);
        assert_eq!(c.reason_chain[0].rule, Rule::FamilyExactZero);
    }

    #[test]
    fn certificate_round_trip() {
        let c = ci_vanishing_predicate(&cubic_fourfold(), 2, 0, 1).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<VanishingCertificate>(&s).unwrap(), c);
    }
}
