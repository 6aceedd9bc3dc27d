//! Slopes, Langer's effective restriction bound and stability verdicts for
//! tangent bundles of complete intersections and their restrictions.
//!
//! Hypotheses that cannot be decided here (genericity, surjectivity of Picard
//! restriction) enter as flags, and every verdict lists the flags it used.

mod verdicts;

pub use verdicts::{
    cubic_section_verdict, general_hypersurface_verdict, hss_restriction_verdict, restriction_test_set,
    tangent_stability_verdict, CubicSectionEvidence, GenericityFlags, RestrictionTestSet,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
}

/// `c_1(F) . H^{n-1}` and the rank of a sheaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeData {
    pub c1_degree: Rational,
    pub rank: u32,
}

impl SlopeData {
    pub fn new(c1_degree: Rational, rank: u32) -> Result<Self, StabilityError> {
        if rank == 0 {
            return Err(StabilityError::InvalidInput("rank must be positive".into()));
        }
        Ok(SlopeData { c1_degree, rank })
    }
}

pub fn slope(sd: &SlopeData) -> Rational {
    &sd.c1_degree / Rational::from_integer(BigInt::from(sd.rank))
}

/// Intersection numbers of a rank `p >= 2` sheaf against a polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub rank: u32,
    /// `c_1^2 . H^{n-2}`
    pub c1_squared: Rational,
    /// `c_2 . H^{n-2}`
    pub c2: Rational,
    /// `H^n`, positive.
    pub hn: Rational,
}

impl ChernData {
    pub fn new(rank: u32, c1_squared: Rational, c2: Rational, hn: Rational) -> Result<Self, StabilityError> {
        if rank < 2 {
            return Err(StabilityError::InvalidInput(format!("rank must be at least 2, got {rank}")));
        }
        if hn <= Rational::zero() {
            return Err(StabilityError::InvalidInput("H^n must be positive".into()));
        }
        Ok(ChernData { rank, c1_squared, c2, hn })
    }

    /// Data with the given discriminant and `c_1 = 0`.
    pub fn from_discriminant(rank: u32, discriminant: Rational, hn: Rational) -> Result<Self, StabilityError> {
        let c2 = discriminant / Rational::from_integer(BigInt::from(2 * rank));
        Self::new(rank, Rational::zero(), c2, hn)
    }

    /// `(2p c_2 - (p-1) c_1^2) . H^{n-2}`
    pub fn discriminant(&self) -> Rational {
        let p = Rational::from_integer(BigInt::from(self.rank));
        Rational::from_integer(BigInt::from(2)) * &p * &self.c2 - (p - Rational::one()) * &self.c1_squared
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LangerBound {
    /// `(p-1)/p * Delta + 1/(p (p-1) H^n)`, printed exactly.
    pub threshold: String,
    /// Smallest integer strictly above the threshold.
    pub degree: i64,
}

/// Smallest restriction degree `d` with `d > (p-1)/p Delta + 1/(p(p-1)H^n)`.
pub fn langer_bound(cd: &ChernData) -> LangerBound {
    let t = langer_threshold(cd);
    LangerBound { threshold: t.to_string(), degree: smallest_integer_above(&t) }
}

pub fn langer_threshold(cd: &ChernData) -> Rational {
    let p = Rational::from_integer(BigInt::from(cd.rank));
    let pm1 = &p - Rational::one();
    &pm1 / &p * cd.discriminant() + Rational::one() / (p * pm1 * &cd.hn)
}

pub(crate) fn smallest_integer_above(x: &Rational) -> i64 {
    let f = x.numer().div_floor(x.denom());
    i64::try_from(f + 1).expect("bound fits in i64")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityStatus {
    Stable,
    Semistable,
    Unstable,
    Unknown,
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StabilityStatus::Stable => "stable",
            StabilityStatus::Semistable => "semistable",
            StabilityStatus::Unstable => "unstable",
            StabilityStatus::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionEvaluation {
    pub condition: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub verdict: StabilityStatus,
    /// The rule that decided the verdict, or the failed precondition.
    pub certificate: String,
    pub destabilizer_hint: Option<String>,
    /// Hypotheses taken on trust.
    pub assumed_flags: Vec<String>,
    pub evaluations: Vec<ConditionEvaluation>,
}

impl StabilityVerdict {
    pub(crate) fn unknown(reason: impl Into<String>) -> Self {
        StabilityVerdict {
            verdict: StabilityStatus::Unknown,
            certificate: reason.into(),
            destabilizer_hint: None,
            assumed_flags: Vec::new(),
            evaluations: Vec::new(),
        }
    }
}
