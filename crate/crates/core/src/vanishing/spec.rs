use serde::{Deserialize, Serialize};

use crate::cohomology::{Family, HSSDescriptor};

use super::VanishingError;

/// `Y = H_1 ∩ ... ∩ H_r` inside an ambient space, with `H_i` of degree `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersectionSpec {
    pub ambient: HSSDescriptor,
    /// Sorted non-decreasing.
    pub degrees: Vec<u32>,
}

impl CompleteIntersectionSpec {
    pub fn new(ambient: HSSDescriptor, mut degrees: Vec<u32>) -> Result<Self, VanishingError> {
        ambient.validate()?;
        if degrees.iter().any(|&d| d == 0) {
            return Err(VanishingError::InvalidSpec("degrees must be at least 1".into()));
        }
        if degrees.len() as u32 >= ambient.dimension {
            return Err(VanishingError::InvalidSpec(format!(
                "{} equations in dimension {} leave nothing of positive dimension",
                degrees.len(),
                ambient.dimension
            )));
        }
        degrees.sort_unstable();
        Ok(CompleteIntersectionSpec { ambient, degrees })
    }

    /// Codimension `r`.
    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    /// Dimension `n = N - r`.
    pub fn n(&self) -> u32 {
        self.ambient.dimension - self.degrees.len() as u32
    }

    /// Index `r_Y = r_M - sum d_i`; may be zero or negative.
    pub fn index(&self) -> i64 {
        self.ambient.index as i64 - self.degrees.iter().map(|&d| d as i64).sum::<i64>()
    }

    pub fn is_fano(&self) -> bool {
        self.index() > 0
    }

    pub fn all_degrees_at_least_two(&self) -> bool {
        self.degrees.iter().all(|&d| d >= 2)
    }

    /// The space `Y` is isomorphic to when that space has exact cohomology
    /// formulas: the ambient itself when `r = 0`, a projective space cut by
    /// hyperplanes, or a quadric.
    pub fn exact_model(&self) -> Option<HSSDescriptor> {
        let n = self.n();
        let ones = self.degrees.iter().filter(|&&d| d == 1).count();
        let twos = self.degrees.iter().filter(|&&d| d == 2).count();
        let rest = self.r() - ones - twos;
        if self.r() == 0 {
            return Some(self.ambient);
        }
        if rest > 0 {
            return None;
        }
        match (self.ambient.family, twos) {
            (Family::ProjectiveSpace, 0) => Some(HSSDescriptor::projective_space(n)),
            (Family::ProjectiveSpace, 1) if n >= 2 => Some(HSSDescriptor::quadric(n)),
            (Family::Quadric, 0) if n >= 2 => Some(HSSDescriptor::quadric(n)),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        format!("{} ∩ degrees {:?}", self.ambient.label(), self.degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices() {
        let p5 = HSSDescriptor::projective_space(5);
        assert_eq!(CompleteIntersectionSpec::new(p5, vec![3]).unwrap().index(), 3);
        let q5 = HSSDescriptor::quadric(5);
        assert_eq!(CompleteIntersectionSpec::new(q5, vec![2, 2]).unwrap().index(), 1);
        let p4 = HSSDescriptor::projective_space(4);
        let y = CompleteIntersectionSpec::new(p4, vec![3]).unwrap();
        assert_eq!((y.index(), y.n()), (2, 3));
    }

    #[test]
    fn degrees_sorted_and_validated() {
        let p6 = HSSDescriptor::projective_space(6);
        assert_eq!(CompleteIntersectionSpec::new(p6, vec![3, 2]).unwrap().degrees, vec![2, 3]);
        assert!(CompleteIntersectionSpec::new(p6, vec![0]).is_err());
        assert!(CompleteIntersectionSpec::new(HSSDescriptor::projective_space(2), vec![2, 2]).is_err());
    }

    #[test]
    fn exact_models() {
        let p4 = HSSDescriptor::projective_space(4);
        let y = CompleteIntersectionSpec::new(p4, vec![2]).unwrap();
        assert_eq!(y.exact_model(), Some(HSSDescriptor::quadric(3)));
        assert_eq!(y.index(), 3);
        assert_eq!(CompleteIntersectionSpec::new(p4, vec![3]).unwrap().exact_model(), None);
    }
}
