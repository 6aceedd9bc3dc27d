//! Integer constraints on a saturated invertible subsheaf `L` of
//! `Omega^1_S` of a cubic surface with `c_1(L) . K_S = 2`, written
//! `c_1(L) = -a E_0 - sum b_j E_j`.
//!
//! The filters, in order:
//! * degree: `3a + sum b_j = 2`, with `a >= 3` since `a = 2` gives only
//!   degrees 4 and 6;
//! * bound from below: the effective curves `C_i ~ K_S - L + 2E_0 - 2E_i`
//!   have degree 3 and meet `E_i` at most that often, so `b_j >= -2`;
//! * bound from above: with some `b_1 = -2`, `C_1` meets every other
//!   exceptional curve nonnegatively, so `b_j <= -1`, and a line component
//!   of `C_1` forces a second `b_j = -2`, so `sum b_j <= -8`.
//!
//! The survivor is then tested against the four-point form, whose extra
//! zeros all lie on lines through two of the four points.

use serde::{Deserialize, Serialize};

use crate::exactalg::Rational;

use super::forms::{four_point_form, zeros_of_form};
use super::{DelPezzoError, DivisorClass, PicardLattice};

/// Search window in the `(a; b)` coordinates of `-a E_0 - sum b_j E_j`.
const A_RANGE: std::ops::RangeInclusive<i64> = 3..=10;
const B_BOUND: i64 = 12;

/// Whether the extra zeros of the four-point form can host further blown-up
/// points in general position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionCheck {
    pub zeros: Vec<[String; 3]>,
    /// Extra zeros, each with the pair of base points it is collinear with.
    pub collinear_with: Vec<([String; 3], (usize, usize))>,
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSearch {
    /// Candidates up to permutation of `b` meeting the degree condition.
    pub enumerated: usize,
    pub after_lower_bound: usize,
    pub after_upper_bound: usize,
    /// Survivors in `a E_0 + sum b_j E_j` form, `b` sorted decreasingly.
    pub survivors: Vec<DivisorClass>,
    pub exclusion: ExclusionCheck,
    pub after_exclusion: Vec<DivisorClass>,
}

fn sorted_tuples(len: usize, lo: i64, hi: i64, sum: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let left = (len - prefix.len()) as i64;
    if left == 0 {
        if sum == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // Nondecreasing entries from `lo`.
    if sum < lo * left || sum > hi * left {
        return;
    }
    for x in lo..=hi {
        prefix.push(x);
        sorted_tuples(len, x, hi, sum - x, prefix, out);
        prefix.pop();
    }
}

fn det3(p: &[Rational; 3], q: &[Rational; 3], r: &[Rational; 3]) -> Rational {
    &p[0] * (&q[1] * &r[2] - &q[2] * &r[1]) - &p[1] * (&q[0] * &r[2] - &q[2] * &r[0])
        + &p[2] * (&q[0] * &r[1] - &q[1] * &r[0])
}

fn parse_point(p: &[String; 3]) -> [Rational; 3] {
    p.clone().map(|c| c.parse::<Rational>().expect("rational coordinate"))
}

fn exclusion_check() -> Result<ExclusionCheck, DelPezzoError> {
    use num_traits::Zero;
    let zeros = zeros_of_form(&four_point_form(), 8)?.points;
    let base: Vec<[Rational; 3]> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .iter()
        .map(|p| p.map(|c| Rational::from_integer(c.into())))
        .collect();
    let mut collinear_with = Vec::new();
    let mut all_collinear = true;
    for z in &zeros {
        let zp = parse_point(z);
        if base.contains(&zp) {
            continue;
        }
        let pair = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).find(|&(i, j)| det3(&zp, &base[i], &base[j]).is_zero());
        match pair {
            Some((i, j)) => collinear_with.push((z.clone(), (i + 1, j + 1))),
            None => all_collinear = false,
        }
    }
    Ok(ExclusionCheck { zeros, collinear_with, excluded: all_collinear })
}

/// Whether the class needs a simple zero at a blown-up point beyond the four
/// double ones, which the four-point form cannot provide.
fn needs_extra_point(a: i64, b: &[i64]) -> bool {
    a == 4 && b.iter().filter(|&&x| x == -2).count() == 4 && b.iter().any(|&x| x == -1)
}

/// Runs the constraint filters on `c_1(L) = -a E_0 - sum b_j E_j` over the
/// window `3 <= a <= 10`, `|b_j| <= 12`, modulo permutations of the `b_j`.
pub fn invertible_subsheaf_search() -> Result<CandidateSearch, DelPezzoError> {
    let lattice = PicardLattice::new(6)?;
    let k = lattice.canonical();
    let mut candidates = Vec::new();
    for a in A_RANGE {
        let mut tuples = Vec::new();
        sorted_tuples(6, -B_BOUND, B_BOUND, 2 - 3 * a, &mut Vec::new(), &mut tuples);
        candidates.extend(tuples.into_iter().map(|b| (a, b)));
    }
    for (a, b) in &candidates {
        let class = DivisorClass::new(-a, b.iter().map(|x| -x).collect());
        debug_assert_eq!(lattice.intersect(&class, &k)?, 2);
    }
    let enumerated = candidates.len();
    candidates.retain(|(_, b)| b.iter().all(|&x| x >= -2));
    let after_lower_bound = candidates.len();
    candidates.retain(|(_, b)| b.iter().all(|&x| x <= -1) && b.iter().sum::<i64>() <= -8);
    let after_upper_bound = candidates.len();
    let to_class = |(a, b): &(i64, Vec<i64>)| {
        let mut bs: Vec<i64> = b.iter().map(|x| -x).collect();
        bs.sort_by(|x, y| y.cmp(x));
        DivisorClass::new(-a, bs)
    };
    let survivors: Vec<DivisorClass> = candidates.iter().map(to_class).collect();
    let exclusion = exclusion_check()?;
    let after_exclusion = candidates
        .iter()
        .filter(|(a, b)| !(exclusion.excluded && needs_extra_point(*a, b)))
        .map(to_class)
        .collect();
    Ok(CandidateSearch { enumerated, after_lower_bound, after_upper_bound, survivors, exclusion, after_exclusion })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_survivor_then_none() {
        let s = invertible_subsheaf_search().unwrap();
        assert_eq!(s.survivors, vec![DivisorClass::new(-4, vec![2, 2, 2, 2, 1, 1])]);
        assert_eq!(s.survivors[0].to_string(), "(-4; 2,2,2,2,1,1)");
        assert!(s.exclusion.excluded);
        assert_eq!(s.exclusion.collinear_with.len(), 3);
        assert!(s.after_exclusion.is_empty());
        assert!(s.enumerated > s.after_lower_bound && s.after_lower_bound > s.after_upper_bound);
    }

    #[test]
    fn every_candidate_has_degree_two() {
        let lattice = PicardLattice::new(6).unwrap();
        let k = lattice.canonical();
        for a in A_RANGE {
            let mut tuples = Vec::new();
            sorted_tuples(6, -B_BOUND, B_BOUND, 2 - 3 * a, &mut Vec::new(), &mut tuples);
            for b in tuples {
                let c = DivisorClass::new(-a, b.iter().map(|x| -x).collect());
                assert_eq!(lattice.intersect(&c, &k).unwrap(), 2);
            }
        }
    }
}
