use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{HomogeneousPolynomial, Monomial, Rational, RationalMatrix};

use super::{jacobian_ideal, random_form, GradedQuotient, MilnorError, GENERIC_ATTEMPTS};

/// A hypersurface `{h = 0}` given by its defining form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    pub num_vars: usize,
    pub degree_h: u32,
    pub h: HomogeneousPolynomial,
}

impl HypersurfaceSpec {
    pub fn new(h: HomogeneousPolynomial) -> Result<Self, MilnorError> {
        if h.is_zero() {
            return Err(MilnorError::InvalidInput("defining polynomial is zero".into()));
        }
        if h.degree() < 2 {
            return Err(MilnorError::DegreeTooSmall(h.degree()));
        }
        Ok(HypersurfaceSpec { num_vars: h.num_vars(), degree_h: h.degree(), h })
    }

    pub fn fermat(num_vars: usize, degree: u32) -> Self {
        Self::new(HomogeneousPolynomial::fermat(num_vars, degree)).expect("degree >= 2")
    }
}

/// `M(Y) = R / J(Y)` for a smooth hypersurface, with top degree
/// `rho = (d - 2) * num_vars`.
#[derive(Debug)]
pub struct MilnorAlgebra {
    spec: HypersurfaceSpec,
    rho: u32,
    quotient: GradedQuotient,
}

impl MilnorAlgebra {
    /// Fails with `NotFinite` when the degree `rho + 1` piece is nonzero,
    /// which happens exactly when `h` is singular.
    pub fn new(spec: HypersurfaceSpec) -> Result<Self, MilnorError> {
        let rho = (spec.degree_h - 2) * spec.num_vars as u32;
        let quotient = GradedQuotient::new(spec.num_vars, jacobian_ideal(&spec.h))?;
        let top = quotient.quotient_dim(rho + 1);
        if top != 0 {
            return Err(MilnorError::NotFinite { degree: rho + 1, dim: top });
        }
        Ok(MilnorAlgebra { spec, rho, quotient })
    }

    pub fn of(h: HomogeneousPolynomial) -> Result<Self, MilnorError> {
        Self::new(HypersurfaceSpec::new(h)?)
    }

    pub fn spec(&self) -> &HypersurfaceSpec {
        &self.spec
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn jacobian_generators(&self) -> &[HomogeneousPolynomial] {
        self.quotient.generators()
    }

    pub fn quotient(&self) -> &GradedQuotient {
        &self.quotient
    }

    pub fn dim(&self, i: u32) -> usize {
        if i > self.rho {
            0
        } else {
            self.quotient.quotient_dim(i)
        }
    }

    /// Monomials whose residues form a basis of `M(Y)_i`.
    pub fn milnor_basis(&self, i: u32) -> Vec<Monomial> {
        if i > self.rho {
            Vec::new()
        } else {
            self.quotient.residue_monomials(i)
        }
    }

    /// `dim M(Y)_i` for `i = 0..=rho`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        (0..=self.rho).map(|i| self.dim(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let h = self.hilbert_series();
        h.iter().eq(h.iter().rev())
    }

    pub fn multiplication_map(&self, f: &HomogeneousPolynomial, i: u32) -> RationalMatrix {
        self.quotient.multiplication_map(f, i)
    }

    pub fn residue(&self, g: &HomogeneousPolynomial) -> Vec<Rational> {
        self.quotient.residue(g)
    }

    pub fn contains(&self, g: &HomogeneousPolynomial) -> bool {
        self.quotient.contains(g)
    }

    /// Whether `x f` has maximal rank between every pair of pieces. With a
    /// symmetric Hilbert function, injectivity up to the middle suffices.
    pub fn is_faithful(&self, f: &HomogeneousPolynomial) -> bool {
        if self.is_symmetric() {
            self.is_faithful_by_injectivity(f)
        } else {
            self.is_faithful_full(f)
        }
    }

    /// Injectivity of `x f` on `M(Y)_i` for `2 i <= rho - deg f`.
    pub fn is_faithful_by_injectivity(&self, f: &HomogeneousPolynomial) -> bool {
        let j = f.degree();
        if j > self.rho {
            return true;
        }
        let top = (self.rho - j) / 2;
        (0..=top).all(|i| self.quotient.is_injective(f, i))
    }

    /// Maximal rank of `x f` on every piece.
    pub fn is_faithful_full(&self, f: &HomogeneousPolynomial) -> bool {
        let j = f.degree();
        if j > self.rho {
            return true;
        }
        (0..=self.rho - j).all(|i| self.quotient.has_maximal_rank(f, i))
    }

    /// Matrix of the pairing `M_i x M_{rho-i} -> M_rho` (rows index `M_i`).
    pub fn pairing_matrix(&self, i: u32) -> RationalMatrix {
        assert!(i <= self.rho);
        let left = self.milnor_basis(i);
        let right = self.milnor_basis(self.rho - i);
        let n = self.spec.num_vars;
        let mut m = RationalMatrix::zero(left.len(), right.len());
        for (r, a) in left.iter().enumerate() {
            for (c, b) in right.iter().enumerate() {
                let prod = HomogeneousPolynomial::from_monomial(a.mul(b), Rational::from_integer(1.into()));
                debug_assert_eq!(prod.num_vars(), n);
                let coords = self.residue(&prod);
                m.set(r, c, coords[0].clone());
            }
        }
        m
    }

    /// A seeded form of degree `degree` whose multiplication map has maximal
    /// rank everywhere, with the attempt count. Redraws up to the budget.
    pub fn faithful_form(&self, degree: u32, seed: u64) -> Result<(HomogeneousPolynomial, usize), MilnorError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempt in 1..=GENERIC_ATTEMPTS {
            let f = random_form(self.spec.num_vars, degree, &mut rng);
            if !f.is_zero() && self.is_faithful_full(&f) {
                return Ok((f, attempt));
            }
        }
        Err(MilnorError::NoWitness { attempts: GENERIC_ATTEMPTS })
    }
}

/// Coefficients of `(1 + t + ... + t^(d-2))^k`.
pub fn product_formula(d: u32, k: usize) -> Vec<usize> {
    let base = vec![1usize; (d - 1) as usize];
    let mut acc = vec![1usize];
    for _ in 0..k {
        let mut next = vec![0usize; acc.len() + base.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in base.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_cubic_fourfold_series() {
        let ma = MilnorAlgebra::new(HypersurfaceSpec::fermat(5, 3)).unwrap();
        assert_eq!(ma.rho(), 5);
        assert_eq!(ma.hilbert_series(), vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(ma.milnor_basis(1).len(), 5);
        assert!(ma.milnor_basis(6).is_empty());
        assert_eq!(ma.milnor_basis(0), vec![Monomial::one(5)]);
    }

    #[test]
    fn fermat_quartic_surface_series() {
        let ma = MilnorAlgebra::new(HypersurfaceSpec::fermat(4, 4)).unwrap();
        assert_eq!(ma.hilbert_series(), product_formula(4, 4));
    }

    #[test]
    fn smooth_conic_in_two_variables() {
        let ma = MilnorAlgebra::of(HomogeneousPolynomial::parse(2, "x0^2 + x1^2").unwrap()).unwrap();
        assert_eq!(ma.hilbert_series(), vec![1]);
    }

    #[test]
    fn singular_form_is_rejected() {
        let h = HomogeneousPolynomial::parse(3, "x0^3 + x1^3").unwrap();
        assert!(matches!(MilnorAlgebra::of(h), Err(MilnorError::NotFinite { .. })));
    }

    #[test]
    fn faithful_examples() {
        let ma = MilnorAlgebra::new(HypersurfaceSpec::fermat(5, 3)).unwrap();
        assert!(ma.is_faithful(&HomogeneousPolynomial::one(5)));
        assert!(!ma.is_faithful(&HomogeneousPolynomial::parse(5, "x0^2").unwrap()));
        let (f, _) = ma.faithful_form(1, 7).unwrap();
        assert!(ma.is_faithful(&f));
    }

    #[test]
    fn product_formula_small() {
        assert_eq!(product_formula(3, 5), vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(product_formula(4, 2), vec![1, 2, 3, 2, 1]);
        assert_eq!(product_formula(2, 3), vec![1]);
    }
}
