use super::{AnswerStatus, CohomologyAnswer, CohomologyError};

/// Which clause of the quadric classification decides `(n, p, q, l)`.
fn quadric_case(n: u32, p: u32, q: u32, l: i64) -> (bool, &'static str) {
    let (n, p, q) = (n as i64, p as i64, q as i64);
    if l == 0 {
        (q == p, "l=0: nonzero iff q=p")
    } else if l == -n + 2 * p {
        (p + q == n, "l=2p-n: nonzero iff p+q=n")
    } else if l > p {
        (q == 0, "l>p: nonzero iff q=0")
    } else if l < -n + p {
        (q == n, "l<p-n: nonzero iff q=n")
    } else {
        (false, "p-n<=l<=p, l not in {0, 2p-n}: zero for all q")
    }
}

/// Whether `H^q(Q^n, Omega^p(l))` is nonzero.
pub fn quadric_nonvanishing(n: u32, p: u32, q: u32, l: i64) -> Result<bool, CohomologyError> {
    if n < 2 || p > n {
        return Err(CohomologyError::Precondition(format!("quadric needs n >= 2 and p <= n, got n={n}, p={p}")));
    }
    Ok(quadric_case(n, p, q, l).0)
}

pub fn quadric_answer(n: u32, p: u32, q: u32, l: i64) -> Result<CohomologyAnswer, CohomologyError> {
    if n < 2 {
        return Err(CohomologyError::Precondition(format!("quadric needs n >= 2, got {n}")));
    }
    if p > n || q > n {
        return Ok(CohomologyAnswer { status: AnswerStatus::Zero, certificate: "degree exceeds dimension".into() });
    }
    let (nonzero, case) = quadric_case(n, p, q, l);
    Ok(CohomologyAnswer {
        status: if nonzero { AnswerStatus::Nonzero } else { AnswerStatus::Zero },
        certificate: format!("quadric {case} (n={n}, p={p}, q={q}, l={l})"),
    })
}
