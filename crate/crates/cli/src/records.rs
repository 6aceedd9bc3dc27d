//! Output records. Field names are part of the public schema; every record
//! also carries `schema_version` and `command`.

use std::collections::BTreeMap;

use hsscohom::cohomology::CohomologyAnswer;
use hsscohom::delpezzo::CandidateSearch;
use hsscohom::milnor::SlpCertificate;
use hsscohom::stability::{LangerBound, RestrictionTestSet, StabilityVerdict};
use hsscohom::vanishing::{RuleApplication, VanishingCertificate};
use hsscohom::vectorfields::RestrictionReport;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    #[serde(flatten)]
    pub body: T,
}

/// Exact count: a JSON number when it fits in 64 bits, a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Small(u64),
    Big(String),
}

impl From<&num_bigint::BigUint> for Count {
    fn from(v: &num_bigint::BigUint) -> Self {
        v.to_u64().map_or_else(|| Count::Big(v.to_string()), Count::Small)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottRecord {
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub l: i64,
    pub dimension: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnswerRecord {
    pub ambient: String,
    pub p: u64,
    pub q: Option<u64>,
    pub l: i64,
    #[serde(flatten)]
    pub answer: CohomologyAnswer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub admissible_sequences_checked: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub ambient: String,
    pub p: u32,
    pub q: u32,
    pub l: i64,
    pub nonvanishing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorRecord {
    pub h: String,
    pub num_vars: usize,
    pub degree: u32,
    pub rho: u32,
    pub hilbert_series: Vec<usize>,
    pub symmetric: bool,
    pub pairing_full_rank: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faithful_form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faithful_attempts: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlpRecord {
    #[serde(flatten)]
    pub certificate: SlpCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSummary {
    pub j_vector_count: usize,
    pub witnesses: usize,
    pub discharged: usize,
    pub all_discharged: bool,
    pub counts_by_rule: BTreeMap<String, usize>,
    pub closed_by_exact_model: Option<RuleApplication>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingRecord {
    pub ambient: String,
    pub degrees: Vec<u32>,
    pub p: u32,
    pub q: u32,
    pub l: i64,
    #[serde(flatten)]
    pub certificate: VanishingCertificate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<WitnessSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityRecord {
    pub check: String,
    pub input: String,
    #[serde(flatten)]
    pub verdict: StabilityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LangerRecord {
    pub rank: u32,
    pub discriminant: String,
    pub hn: String,
    #[serde(flatten)]
    pub bound: LangerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictBoundRecord {
    pub ambient: String,
    pub degrees: Vec<u32>,
    pub d: u32,
    #[serde(flatten)]
    pub test_set: RestrictionTestSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionRecord {
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    pub t: i64,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectivityRecord {
    pub h: String,
    pub f: String,
    pub t: i64,
    pub threshold: i64,
    #[serde(flatten)]
    pub report: RestrictionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionStatus {
    Extended,
    Obstructed,
    NotTangent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendRecord {
    pub h: String,
    pub f: String,
    pub t: i64,
    pub threshold: i64,
    pub input: Vec<String>,
    pub status: ExtensionStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRecord {
    pub r: usize,
    pub class: String,
    pub a: i64,
    pub b: Vec<i64>,
    pub family: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRecord {
    pub r: usize,
    pub canonical: String,
    pub k_squared: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    #[serde(flatten)]
    pub search: CandidateSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneFormRecord {
    pub a: u32,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZerosRecord {
    pub form: String,
    pub search_bound: u32,
    pub expected_count: u64,
    pub points: Vec<String>,
}
