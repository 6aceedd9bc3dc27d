use serde::{Deserialize, Serialize};

use super::CohomologyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    ProjectiveSpace,
    Quadric,
    /// `Sp(2n)/U(n)`.
    LagrangianGrassmannian { n: u32 },
    /// Any other ambient space with user-supplied dimension and index. The
    /// flag records the assumption that it is an irreducible compact
    /// Hermitian symmetric space, which unlocks the classification lookups.
    Other { assume_irreducible_hss: bool },
}

/// Ambient space: family, dimension `N` and index `r_M` (so `-K = O(r_M)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HSSDescriptor {
    pub family: Family,
    pub dimension: u32,
    pub index: u32,
}

impl HSSDescriptor {
    pub fn projective_space(dimension: u32) -> Self {
        HSSDescriptor { family: Family::ProjectiveSpace, dimension, index: dimension + 1 }
    }

    pub fn quadric(dimension: u32) -> Self {
        HSSDescriptor { family: Family::Quadric, dimension, index: dimension }
    }

    pub fn lagrangian_grassmannian(n: u32) -> Self {
        HSSDescriptor {
            family: Family::LagrangianGrassmannian { n },
            dimension: n * (n + 1) / 2,
            index: n + 1,
        }
    }

    pub fn other(dimension: u32, index: u32, assume_irreducible_hss: bool) -> Result<Self, CohomologyError> {
        Self::new(Family::Other { assume_irreducible_hss }, dimension, index)
    }

    /// Checks the family's closed forms against the supplied numbers.
    pub fn new(family: Family, dimension: u32, index: u32) -> Result<Self, CohomologyError> {
        let d = HSSDescriptor { family, dimension, index };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), CohomologyError> {
        let bad = |msg: String| Err(CohomologyError::InvalidDescriptor(msg));
        if self.dimension == 0 || self.index == 0 {
            return bad("dimension and index must be positive".into());
        }
        let expected = match self.family {
            Family::ProjectiveSpace => Some((self.dimension, self.dimension + 1)),
            Family::Quadric => Some((self.dimension, self.dimension)),
            Family::LagrangianGrassmannian { n } => {
                if n == 0 {
                    return bad("Lagrangian Grassmannian needs n >= 1".into());
                }
                Some((n * (n + 1) / 2, n + 1))
            }
            Family::Other { .. } => None,
        };
        if let Some((dim, idx)) = expected {
            if (dim, idx) != (self.dimension, self.index) {
                return bad(format!(
                    "{:?} requires dimension {dim} and index {idx}, got {} and {}",
                    self.family, self.dimension, self.index
                ));
            }
        }
        Ok(())
    }

    pub fn is_projective_space(&self) -> bool {
        match self.family {
            Family::ProjectiveSpace => true,
            Family::LagrangianGrassmannian { n } => n == 1,
            _ => false,
        }
    }

    /// Quadrics, including `Sp(4)/U(2)`, which is the 3-dimensional quadric.
    pub fn is_quadric(&self) -> bool {
        match self.family {
            Family::Quadric => true,
            Family::LagrangianGrassmannian { n } => n == 2,
            _ => false,
        }
    }

    /// Whether the classification results for irreducible Hermitian symmetric
    /// spaces may be applied.
    pub fn is_known_hss(&self) -> bool {
        !matches!(self.family, Family::Other { assume_irreducible_hss: false })
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::ProjectiveSpace => format!("P^{}", self.dimension),
            Family::Quadric => format!("Q^{}", self.dimension),
            Family::LagrangianGrassmannian { n } => format!("LG({n},{})", 2 * n),
            Family::Other { .. } => format!("M(N={}, r={})", self.dimension, self.index),
        }
    }
}
