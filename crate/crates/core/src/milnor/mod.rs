//! Jacobian ideals, Milnor algebras of smooth hypersurfaces and Lefschetz
//! checks on graded Artinian quotients.

mod algebra;
mod quotient;
mod slp;

pub use algebra::{product_formula, HypersurfaceSpec, MilnorAlgebra};
pub use quotient::{DegreePiece, GradedQuotient};
pub use slp::{check_slp, monomial_complete_intersection, SlpCertificate, SlpCheck};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactalg::{
    DegreeBasis, ExactAlgError, HomogeneousPolynomial, Monomial, Rational, RationalMatrix,
};

/// Redraw budget for seeded "general" choices.
pub const GENERIC_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("Milnor algebra not finite within bound: degree {degree} piece has dimension {dim}")]
    NotFinite { degree: u32, dim: usize },
    #[error("hypersurface degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("no witness found after {attempts} attempts")]
    NoWitness { attempts: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// The partial derivatives of `h`.
pub fn jacobian_ideal(h: &HomogeneousPolynomial) -> Vec<HomogeneousPolynomial> {
    h.gradient()
}

/// A basis of the degree-`k` piece of the ideal generated by `gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPiece {
    pub degree: u32,
    pub dimension: usize,
    /// Coefficient vectors in the canonical monomial basis of degree `k`.
    pub basis: Vec<Vec<Rational>>,
}

pub fn ideal_degree_piece(
    num_vars: usize,
    gens: &[HomogeneousPolynomial],
    k: u32,
) -> Result<IdealPiece, MilnorError> {
    let q = GradedQuotient::new(num_vars, gens.to_vec())?;
    let piece = q.piece(k);
    let n = piece.basis.len();
    let basis = piece
        .ideal
        .rows()
        .map(|(_, row)| {
            let mut v = vec![Rational::zero(); n];
            for (&c, x) in row {
                v[c] = x.clone();
            }
            v
        })
        .collect();
    Ok(IdealPiece { degree: k, dimension: piece.ideal_dim(), basis })
}

/// Cofactors `c_i` with `g = sum c_i * gens_i`, or `None` when `g` is not in
/// the ideal. Cofactor `i` has degree `deg g - deg gens_i` (the zero
/// polynomial when that is negative).
pub fn ideal_membership(
    g: &HomogeneousPolynomial,
    gens: &[HomogeneousPolynomial],
) -> Result<Option<Vec<HomogeneousPolynomial>>, MilnorError> {
    let n = g.num_vars();
    for gen in gens {
        if gen.num_vars() != n {
            return Err(ExactAlgError::VariableCountMismatch { left: n, right: gen.num_vars() }.into());
        }
    }
    let cofactor_degree = |gen: &HomogeneousPolynomial| g.degree().checked_sub(gen.degree());
    if g.is_zero() {
        return Ok(Some(
            gens.iter()
                .map(|gen| HomogeneousPolynomial::zero(n, cofactor_degree(gen).unwrap_or(0)))
                .collect(),
        ));
    }
    let target = DegreeBasis::new(n, g.degree());
    // One column per (generator, multiplier monomial).
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    let mut entries: Vec<Vec<(usize, Rational)>> = Vec::new();
    for (i, gen) in gens.iter().enumerate() {
        let Some(k) = cofactor_degree(gen) else { continue };
        if gen.is_zero() {
            continue;
        }
        for m in DegreeBasis::new(n, k).monomials() {
            let col = gen
                .terms()
                .map(|(gm, c)| (target.index_of(&gm.mul(m)).expect("degree"), c.clone()))
                .collect();
            columns.push((i, m.clone()));
            entries.push(col);
        }
    }
    let mut a = RationalMatrix::zero(target.len(), columns.len());
    for (j, col) in entries.into_iter().enumerate() {
        for (r, c) in col {
            a.set(r, j, c);
        }
    }
    let b = g.to_vector(&target);
    let Some(x) = a.solve_linear(&b)? else { return Ok(None) };
    let mut cofactors: Vec<HomogeneousPolynomial> = gens
        .iter()
        .map(|gen| HomogeneousPolynomial::zero(n, cofactor_degree(gen).unwrap_or(0)))
        .collect();
    for ((i, m), c) in columns.into_iter().zip(x) {
        if !c.is_zero() {
            let term = HomogeneousPolynomial::from_monomial(m, c);
            cofactors[i] = cofactors[i].try_add(&term)?;
        }
    }
    Ok(Some(cofactors))
}

/// Seeded form with integer coefficients drawn uniformly from `-3..=3`.
pub fn random_form(num_vars: usize, degree: u32, rng: &mut ChaCha8Rng) -> HomogeneousPolynomial {
    let basis = DegreeBasis::new(num_vars, degree);
    let coeffs: Vec<Rational> =
        (0..basis.len()).map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
    HomogeneousPolynomial::from_vector(&basis, &coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn p(n: usize, s: &str) -> HomogeneousPolynomial {
        HomogeneousPolynomial::parse(n, s).unwrap()
    }

    #[test]
    fn jacobian_of_fermat_and_product() {
        let j = jacobian_ideal(&HomogeneousPolynomial::fermat(5, 3));
        assert_eq!(j.len(), 5);
        assert_eq!(j[2], p(5, "3*x2^2"));
        assert_eq!(jacobian_ideal(&p(2, "x0*x1")), vec![p(2, "x1"), p(2, "x0")]);
    }

    #[test]
    fn ideal_piece_dimensions() {
        let gens = [p(2, "x0^2"), p(2, "x1^2")];
        assert_eq!(ideal_degree_piece(2, &gens, 2).unwrap().dimension, 2);
        assert_eq!(ideal_degree_piece(2, &gens, 3).unwrap().dimension, 4);
        let j = jacobian_ideal(&HomogeneousPolynomial::fermat(5, 3));
        assert_eq!(ideal_degree_piece(5, &j, 2).unwrap().dimension, 5);
    }

    #[test]
    fn membership_examples() {
        let j = jacobian_ideal(&HomogeneousPolynomial::fermat(5, 3));
        let c = ideal_membership(&p(5, "x0^2"), &j).unwrap().unwrap();
        assert_eq!(c[0], HomogeneousPolynomial::constant(5, ratio(1, 3)));
        assert!(c[1..].iter().all(|x| x.is_zero()));
        assert_eq!(ideal_membership(&p(5, "x0*x1"), &j).unwrap(), None);
        let z = ideal_membership(&HomogeneousPolynomial::zero(5, 4), &j).unwrap().unwrap();
        assert!(z.iter().all(|x| x.is_zero() && x.degree() == 2));
    }

    #[test]
    fn membership_cofactors_reconstruct() {
        let j = jacobian_ideal(&HomogeneousPolynomial::fermat(3, 3));
        let g = p(3, "x0^3 + 2*x0*x1^2 - x2^2*x1");
        let c = ideal_membership(&g, &j).unwrap().unwrap();
        let mut acc = HomogeneousPolynomial::zero(3, 3);
        for (ci, gi) in c.iter().zip(&j) {
            acc = acc.try_add(&ci.mul(gi)).unwrap();
        }
        assert_eq!(acc, g);
        let _ = rat(0);
    }
}
