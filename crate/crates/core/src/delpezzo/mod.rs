//! Picard lattices of blow-ups of the plane, their lines, projective one
//! forms and the lattice search bounding invertible subsheaves of the
//! cotangent bundle of a cubic surface.

mod forms;
mod lattice;
mod search;

pub use forms::{four_point_form, projective_one_forms, zeros_of_form, OneFormSpace, ProjectiveOneForm, ZeroSet};
pub use lattice::{enumerate_lines, line_families, DivisorClass, LineFamilies, PicardLattice};
pub use search::{invertible_subsheaf_search, CandidateSearch, ExclusionCheck};

use thiserror::Error;

use crate::exactalg::ExactAlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DelPezzoError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("zero locus is positive-dimensional: {0}")]
    PositiveDimensional(String),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}
