//! Exact rational arithmetic, monomial combinatorics and fraction-free linear
//! algebra shared by every engine in the crate.
//!
//! Everything here is a plain value type: once built, nothing mutates behind
//! the caller's back, so all of it can be shared freely between threads.

mod matrix;
mod monomial;
mod poly;
mod span;

pub use matrix::RationalMatrix;
pub use monomial::{monomials_of_degree, DegreeBasis, Monomial};
pub use poly::HomogeneousPolynomial;
pub use span::{EchelonSpan, SparseVec};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("monomial of degree {found} in a polynomial of degree {expected}")]
    InhomogeneousTerm { expected: u32, found: u32 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient C(n, k) as an exact big integer; zero when k > n.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    use num_traits::One;
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(7, 3), 35u32.into());
        assert_eq!(binomial(4, 0), 1u32.into());
        assert_eq!(binomial(3, 5), 0u32.into());
        assert_eq!(binomial(10, 10), 1u32.into());
    }

    #[test]
    fn rationals_are_reduced() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
