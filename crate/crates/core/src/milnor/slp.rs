use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::{HomogeneousPolynomial, Monomial, Rational};

use super::{random_form, GradedQuotient, MilnorError};

/// Attempts made by [`check_slp`] before giving up.
pub const SLP_ATTEMPTS: usize = 16;

/// One verified multiplication map `x l^power : A_degree -> A_{degree+power}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlpCheck {
    pub power: u32,
    pub degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlpCertificate {
    pub degrees: Vec<u32>,
    pub socle_degree: u32,
    /// The witness linear form, printed.
    pub witness: String,
    pub witness_coefficients: Vec<i64>,
    pub attempts: usize,
    pub checks: Vec<SlpCheck>,
}

/// `k[x_1..x_r] / (x_1^{d_1}, ..., x_r^{d_r})`.
pub fn monomial_complete_intersection(degrees: &[u32]) -> Result<GradedQuotient, MilnorError> {
    let r = degrees.len();
    if r == 0 || degrees.iter().any(|&d| d == 0) {
        return Err(MilnorError::InvalidInput("degrees must be a nonempty list of positive integers".into()));
    }
    let gens = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut e = vec![0; r];
            e[i] = d;
            HomogeneousPolynomial::from_monomial(Monomial::new(e), Rational::one())
        })
        .collect();
    GradedQuotient::new(r, gens)
}

/// Finds a linear form `l` such that `x l^k` has maximal rank on every
/// graded piece for `1 <= k <= power_bound`. The sum of the variables is
/// tried first, then seeded random forms.
pub fn check_slp(degrees: &[u32], power_bound: u32, seed: u64) -> Result<SlpCertificate, MilnorError> {
    let a = monomial_complete_intersection(degrees)?;
    let r = degrees.len();
    let socle: u32 = degrees.iter().map(|d| d - 1).sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=SLP_ATTEMPTS {
        let l = if attempt == 1 {
            HomogeneousPolynomial::linear_form(&vec![Rational::one(); r])
        } else {
            random_form(r, 1, &mut rng)
        };
        if l.is_zero() {
            continue;
        }
        if let Some(checks) = verify(&a, &l, power_bound, socle) {
            let coeffs = (0..r)
                .map(|i| {
                    let c = l.coefficient(&Monomial::var(r, i));
                    i64::try_from(c.to_integer()).expect("small coefficient")
                })
                .collect();
            return Ok(SlpCertificate {
                degrees: degrees.to_vec(),
                socle_degree: socle,
                witness: l.to_string(),
                witness_coefficients: coeffs,
                attempts: attempt,
                checks,
            });
        }
    }
    Err(MilnorError::NoWitness { attempts: SLP_ATTEMPTS })
}

fn verify(a: &GradedQuotient, l: &HomogeneousPolynomial, power_bound: u32, socle: u32) -> Option<Vec<SlpCheck>> {
    let mut checks = Vec::new();
    let mut lk = l.clone();
    for k in 1..=power_bound {
        if k > 1 {
            lk = lk.mul(l);
        }
        if k > socle {
            // Every map lands in a zero piece.
            continue;
        }
        for i in 0..=socle - k {
            let m = a.multiplication_map(&lk, i);
            let rank = m.rank();
            if rank != m.rows().min(m.cols()) {
                return None;
            }
            checks.push(SlpCheck { power: k, degree: i, source_dim: m.cols(), target_dim: m.rows(), rank });
        }
    }
    debug_assert!(checks.iter().all(|c| c.rank <= c.source_dim));
    Some(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_witness_is_x() {
        let c = check_slp(&[3], 3, 0).unwrap();
        assert_eq!(c.witness, "x0");
        assert_eq!(c.attempts, 1);
    }

    #[test]
    fn two_squares_witness_is_sum() {
        let c = check_slp(&[2, 2], 2, 0).unwrap();
        assert_eq!(c.witness_coefficients, vec![1, 1]);
        let ranks: Vec<usize> = c.checks.iter().filter(|k| k.power == 1).map(|k| k.rank).collect();
        assert_eq!(ranks, vec![1, 1]);
    }

    #[test]
    fn three_squares() {
        let c = check_slp(&[2, 2, 2], 3, 0).unwrap();
        assert_eq!(c.socle_degree, 3);
        assert!(c.checks.iter().all(|k| k.rank == k.source_dim.min(k.target_dim)));
    }

    #[test]
    fn zero_degree_rejected() {
        assert!(check_slp(&[2, 0], 2, 0).is_err());
    }
}
