use num_bigint::BigInt;

use crate::exactalg::Rational;

use super::{
    cn_answer, projective_answer, quadric_answer, AnswerStatus, CohomologyAnswer, CohomologyError, Family,
    HSSDescriptor,
};

/// Nonvanishing of `H^q(M, Omega^{N-1}(l))` for an irreducible compact
/// Hermitian symmetric space `M` of dimension `N`, as a lookup over the four
/// known cases.
pub fn classify_top_forms(desc: &HSSDescriptor, q: u32, l: i64) -> Result<bool, CohomologyError> {
    desc.validate()?;
    let n = desc.dimension;
    if n < 2 {
        return Err(CohomologyError::Precondition(format!("dimension must be at least 2, got {n}")));
    }
    if !desc.is_known_hss() {
        return Err(CohomologyError::Unknown(format!(
            "no classification data for {}; set the irreducible-HSS assumption to use the lookup",
            desc.label()
        )));
    }
    let min = n.min(desc.index) as i64;
    Ok((q == 0 && l >= min)
        || (q == n - 1 && l == 0)
        || (q == n && l <= -2)
        || (desc.is_quadric() && q == 1 && l == n as i64 - 2))
}

/// `l + q >= p * r_M / N`, the necessary condition for
/// `H^q(M, Omega^p(l)) != 0` when `p, l >= 1` and `M` is not projective space.
/// `false` certifies vanishing.
pub fn bcm_necessary_inequality(desc: &HSSDescriptor, p: u32, q: u32, l: i64) -> Result<bool, CohomologyError> {
    desc.validate()?;
    if desc.is_projective_space() {
        return Err(CohomologyError::Precondition("inequality does not apply to projective space".into()));
    }
    if p < 1 || l < 1 {
        return Err(CohomologyError::Precondition(format!("need p >= 1 and l >= 1, got p={p}, l={l}")));
    }
    let lhs = Rational::from_integer(BigInt::from(l + q as i64));
    let rhs = Rational::new(BigInt::from(p as u64 * desc.index as u64), BigInt::from(desc.dimension));
    Ok(lhs >= rhs)
}

/// Best available answer for `H^q(M, Omega^p(l))` on an ambient family.
pub fn family_answer(desc: &HSSDescriptor, p: u32, q: u32, l: i64) -> Result<CohomologyAnswer, CohomologyError> {
    desc.validate()?;
    let n = desc.dimension;
    if desc.is_projective_space() {
        return Ok(projective_answer(n, p, q, l));
    }
    if desc.is_quadric() {
        return quadric_answer(n, p, q, l);
    }
    let answer = |status, certificate: String| Ok(CohomologyAnswer { status, certificate });
    if p > n || q > n {
        return answer(AnswerStatus::Zero, "degree exceeds dimension".into());
    }
    if !desc.is_known_hss() {
        return Err(CohomologyError::Unknown(format!("no cohomology data for {}", desc.label())));
    }
    if l == 0 {
        let status = if p == q { AnswerStatus::Nonzero } else { AnswerStatus::Zero };
        return answer(status, format!("untwisted forms: nonzero iff p=q (p={p}, q={q})"));
    }
    if n >= 2 && p == n - 1 {
        let nonzero = classify_top_forms(desc, q, l)?;
        let status = if nonzero { AnswerStatus::Nonzero } else { AnswerStatus::Zero };
        return answer(status, format!("top-forms classification (N={n}, q={q}, l={l})"));
    }
    if p >= 1 && l >= 1 && !bcm_necessary_inequality(desc, p, q, l)? {
        return answer(
            AnswerStatus::Zero,
            format!("l+q={} < p r_M/N = {}/{}", l + q as i64, p * desc.index, n),
        );
    }
    if let Family::LagrangianGrassmannian { n: rank } = desc.family {
        let (a, _) = cn_answer(rank, p as u64, Some(q as u64), l)?;
        return Ok(a);
    }
    answer(AnswerStatus::PossiblyNonzero, "no vanishing rule applies".into())
}
