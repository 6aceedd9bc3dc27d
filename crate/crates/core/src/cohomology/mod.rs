//! Twisted-form cohomology on projective spaces, quadrics and Lagrangian
//! Grassmannians.
//!
//! Projective spaces get exact dimensions, quadrics exact nonvanishing, and
//! Lagrangian Grassmannians a necessary condition only: a `PossiblyNonzero`
//! answer there is never upgraded to a nonvanishing claim.

mod bott;
mod cn;
mod descriptor;
mod quadric;
mod top_forms;

pub use bott::{bott_dimension, bott_dimension_i64, projective_answer};
pub use cn::{cn_answer, cn_possibly_nonzero, enumerate_admissible_sequences, enumerate_sequences, CnSequence};
pub use descriptor::{Family, HSSDescriptor};
pub use quadric::{quadric_answer, quadric_nonvanishing};
pub use top_forms::{bcm_necessary_inequality, classify_top_forms, family_answer};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown: {0}")]
    Unknown(String),
}

/// Outcome of a cohomology query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AnswerStatus {
    /// Exact dimension, only produced where a closed formula exists.
    Dimension {
        #[serde(with = "biguint_decimal")]
        value: BigUint,
    },
    Zero,
    /// Exact nonvanishing without a dimension.
    Nonzero,
    PossiblyNonzero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyAnswer {
    #[serde(flatten)]
    pub status: AnswerStatus,
    pub certificate: String,
}

impl CohomologyAnswer {
    pub fn is_zero(&self) -> bool {
        match &self.status {
            AnswerStatus::Zero => true,
            AnswerStatus::Dimension { value } => value == &BigUint::default(),
            _ => false,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        match &self.status {
            AnswerStatus::Nonzero => true,
            AnswerStatus::Dimension { value } => value != &BigUint::default(),
            _ => false,
        }
    }
}

pub(crate) mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn answer_round_trips_through_json() {
        let a = CohomologyAnswer {
            status: AnswerStatus::Dimension { value: BigUint::from(123456789012345678901234567890u128) },
            certificate: "test".into(),
        };
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"status\":\"dimension\""));
        assert_eq!(serde_json::from_str::<CohomologyAnswer>(&s).unwrap(), a);
    }
}
