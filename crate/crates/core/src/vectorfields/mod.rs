//! Twisted vector fields as tuples of homogeneous polynomials: exact
//! `H^0` of `T(t)` on projective space, on a smooth hypersurface `Y` and
//! restricted to a complete intersection `X = {f = h = 0}`, plus the
//! Jacobian-ideal extension of sections from `X` to `Y`.

mod sections;

pub use sections::{
    extend_section, extension_threshold, general_section, h0_tangent_hypersurface, h0_tangent_projective,
    h0_tangent_restricted, is_tangent_along_x, is_tangent_to_y, restriction_surjectivity, vanishes_on_x,
    RestrictionReport,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExactAlgError, HomogeneousPolynomial};
use crate::milnor::MilnorError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorFieldError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("section is not tangent along X")]
    NotTangent,
    #[error("obstructed: {0}")]
    Obstructed(String),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// `f_0 d/dx_0 + ... + f_m d/dx_m` with every `f_i` of degree `t + 1`,
/// representing a section of `T(t)`. Fields differing by `p (x_0, ..., x_m)`
/// represent the same section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: Vec<HomogeneousPolynomial>,
    pub twist: i64,
}

impl PolyVectorField {
    pub fn new(components: Vec<HomogeneousPolynomial>, twist: i64) -> Result<Self, VectorFieldError> {
        let Some(first) = components.first() else {
            return Err(VectorFieldError::InvalidInput("no components".into()));
        };
        let n = first.num_vars();
        if components.len() != n {
            return Err(VectorFieldError::InvalidInput(format!(
                "{} components for {n} variables",
                components.len()
            )));
        }
        if twist < -1 {
            return Err(VectorFieldError::InvalidInput(format!("twist {twist} has no nonzero fields")));
        }
        for c in &components {
            if c.num_vars() != n {
                return Err(ExactAlgError::VariableCountMismatch { left: n, right: c.num_vars() }.into());
            }
            if !c.is_zero() && c.degree() as i64 != twist + 1 {
                return Err(ExactAlgError::DegreeMismatch { left: c.degree(), right: (twist + 1) as u32 }.into());
            }
        }
        let components = components.into_iter().map(|c| c.with_degree((twist + 1) as u32)).collect::<Result<_, _>>()?;
        Ok(PolyVectorField { components, twist })
    }

    pub fn zero(num_vars: usize, twist: i64) -> Self {
        PolyVectorField { components: vec![HomogeneousPolynomial::zero(num_vars, (twist + 1).max(0) as u32); num_vars], twist }
    }

    /// The Euler field `p (x_0, ..., x_m)`.
    pub fn euler(p: &HomogeneousPolynomial) -> Self {
        let n = p.num_vars();
        let components = (0..n).map(|i| p.mul(&HomogeneousPolynomial::var(n, i))).collect();
        PolyVectorField { components, twist: p.degree() as i64 }
    }

    pub fn num_vars(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, VectorFieldError> {
        if self.twist != other.twist || self.num_vars() != other.num_vars() {
            return Err(VectorFieldError::InvalidInput("fields of different shape".into()));
        }
        let components =
            self.components.iter().zip(&other.components).map(|(a, b)| a.try_add(b)).collect::<Result<_, _>>()?;
        Ok(PolyVectorField { components, twist: self.twist })
    }

    /// `sum f_i dh/dx_i`.
    pub fn apply(&self, h: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial, VectorFieldError> {
        let n = self.num_vars();
        let deg = (self.twist + h.degree() as i64).max(0) as u32;
        let mut acc = HomogeneousPolynomial::zero(n, deg);
        for (i, c) in self.components.iter().enumerate() {
            let term = c.mul(&h.partial(i)?);
            if !term.is_zero() {
                acc = acc.try_add(&term)?;
            }
        }
        Ok(acc)
    }
}

impl std::fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Data for `Y = {h = 0}` and optionally `X = {f = h = 0}` at twist `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyProblem {
    pub h: HomogeneousPolynomial,
    pub f: Option<HomogeneousPolynomial>,
    pub t: i64,
}

impl TangencyProblem {
    pub fn new(h: HomogeneousPolynomial, f: Option<HomogeneousPolynomial>, t: i64) -> Result<Self, VectorFieldError> {
        if h.is_zero() {
            return Err(VectorFieldError::InvalidInput("h is zero".into()));
        }
        if let Some(f) = &f {
            if f.num_vars() != h.num_vars() {
                return Err(ExactAlgError::VariableCountMismatch { left: h.num_vars(), right: f.num_vars() }.into());
            }
            if f.is_zero() || f.degree() == 0 {
                return Err(VectorFieldError::InvalidInput("f must be a nonconstant form".into()));
            }
        }
        Ok(TangencyProblem { h, f, t })
    }

    pub fn num_vars(&self) -> usize {
        self.h.num_vars()
    }

    fn section(&self) -> Result<&HomogeneousPolynomial, VectorFieldError> {
        self.f.as_ref().ok_or_else(|| VectorFieldError::InvalidInput("problem has no section f".into()))
    }
}

/// Independent representatives of a space of sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpace {
    pub dimension: usize,
    pub basis: Vec<PolyVectorField>,
}

impl SectionSpace {
    pub fn empty() -> Self {
        SectionSpace { dimension: 0, basis: Vec::new() }
    }

    fn from_basis(basis: Vec<PolyVectorField>) -> Self {
        SectionSpace { dimension: basis.len(), basis }
    }
}

/// Summary form of a section space for structured output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionSummary {
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&SectionSpace> for SectionSummary {
    fn from(s: &SectionSpace) -> Self {
        SectionSummary {
            dimension: s.dimension,
            basis: s.basis.iter().map(|v| v.components.iter().map(|c| c.to_string()).collect()).collect(),
        }
    }
}
