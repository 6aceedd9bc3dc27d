use num_bigint::BigUint;
use num_traits::One;

use crate::exactalg::binomial;

use super::{AnswerStatus, CohomologyAnswer};

/// `h^q(P^n, Omega^p(l))` by Bott's formula.
///
/// The case guards are checked before any binomial is evaluated, so
/// out-of-range arguments never reach the binomials.
pub fn bott_dimension(n: u32, p: u32, q: u32, l: i64) -> BigUint {
    let (n64, p64) = (n as i64, p as i64);
    if p > n {
        return BigUint::default();
    }
    if q == 0 && l > p64 {
        return binomial((n64 + l - p64) as u64, l as u64) * binomial((l - 1) as u64, p as u64);
    }
    if l == 0 && p == q {
        return BigUint::one();
    }
    if q == n && l < p64 - n64 {
        return binomial((p64 - l) as u64, (-l) as u64) * binomial((-l - 1) as u64, (n - p) as u64);
    }
    BigUint::default()
}

/// Signed-argument wrapper: negative `p` or `q` give zero.
pub fn bott_dimension_i64(n: u32, p: i64, q: i64, l: i64) -> BigUint {
    if p < 0 || q < 0 {
        return BigUint::default();
    }
    bott_dimension(n, p as u32, q as u32, l)
}

pub fn projective_answer(n: u32, p: u32, q: u32, l: i64) -> CohomologyAnswer {
    let value = bott_dimension(n, p, q, l);
    let case = if p > n {
        "p exceeds dimension"
    } else if q == 0 && l > p as i64 {
        "bott: q=0, l>p"
    } else if l == 0 && p == q {
        "bott: l=0, p=q"
    } else if q == n && l < p as i64 - n as i64 {
        "bott: q=n, l<p-n"
    } else {
        "bott: otherwise"
    };
    CohomologyAnswer {
        status: AnswerStatus::Dimension { value },
        certificate: format!("{case} (n={n}, p={p}, q={q}, l={l})"),
    }
}
