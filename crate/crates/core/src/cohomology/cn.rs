use serde::{Deserialize, Serialize};

use super::{AnswerStatus, CohomologyAnswer, CohomologyError};

/// Sign vector `(a_1..a_n)` with `|a_i| = i`, annotated at a level `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnSequence {
    pub entries: Vec<i64>,
    pub level: i64,
    /// Sum of the positive entries.
    pub weight: u64,
    /// Number of pairs `i <= j` with `a_i + a_j > 2l`.
    pub cohomological_degree: u64,
    /// No pair `i <= j` has `a_i + a_j = 2l`.
    pub admissible: bool,
}

impl CnSequence {
    pub fn new(entries: Vec<i64>, level: i64) -> Self {
        let weight = entries.iter().filter(|&&a| a > 0).map(|&a| a as u64).sum();
        let mut degree = 0;
        let mut admissible = true;
        for i in 0..entries.len() {
            for j in i..entries.len() {
                let s = entries[i] + entries[j];
                if s > 2 * level {
                    degree += 1;
                } else if s == 2 * level {
                    admissible = false;
                }
            }
        }
        CnSequence { entries, level, weight, cohomological_degree: degree, admissible }
    }

    /// Sequence with `a_i = +i` exactly for the set bits of `mask`.
    pub fn from_mask(n: u32, mask: u64, level: i64) -> Self {
        let entries = (1..=n as i64).map(|i| if mask >> (i - 1) & 1 == 1 { i } else { -i }).collect();
        Self::new(entries, level)
    }

    pub fn negated(&self) -> Self {
        Self::new(self.entries.iter().map(|a| -a).collect(), -self.level)
    }
}

/// All `2^n` sign assignments at level `l`, admissible or not.
pub fn enumerate_sequences(n: u32, l: i64) -> Vec<CnSequence> {
    assert!(n <= 20, "sign enumeration limited to n <= 20");
    (0..1u64 << n).map(|mask| CnSequence::from_mask(n, mask, l)).collect()
}

pub fn enumerate_admissible_sequences(n: u32, l: i64) -> Vec<CnSequence> {
    enumerate_sequences(n, l).into_iter().filter(|s| s.admissible).collect()
}

/// Whether some `l`-admissible sequence has weight `p` and, when given,
/// cohomological degree `q`. `false` certifies `H^q(LG, Omega^p(l)) = 0`.
pub fn cn_possibly_nonzero(n: u32, p: u64, q: Option<u64>, l: i64) -> bool {
    enumerate_admissible_sequences(n, l)
        .iter()
        .any(|s| s.weight == p && q.map_or(true, |q| s.cohomological_degree == q))
}

/// Answer for `H^q(Sp(2n)/U(n), Omega^p(l))`, with the number of sign
/// assignments examined.
pub fn cn_answer(n: u32, p: u64, q: Option<u64>, l: i64) -> Result<(CohomologyAnswer, usize), CohomologyError> {
    if n == 0 || n > 20 {
        return Err(CohomologyError::Precondition(format!("need 1 <= n <= 20, got {n}")));
    }
    let all = enumerate_sequences(n, l);
    let hit = all
        .iter()
        .find(|s| s.admissible && s.weight == p && q.map_or(true, |q| s.cohomological_degree == q));
    let q_text = q.map_or("any q".to_string(), |q| format!("q={q}"));
    let answer = match hit {
        Some(s) => CohomologyAnswer {
            status: AnswerStatus::PossiblyNonzero,
            certificate: format!("admissible sequence {:?} has weight {p} and degree {}", s.entries, s.cohomological_degree),
        },
        None => CohomologyAnswer {
            status: AnswerStatus::Zero,
            certificate: format!("no {l}-admissible C_{n} sequence has weight {p} and {q_text}"),
        },
    };
    Ok((answer, all.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_negative_at_level_zero() {
        let s = CnSequence::new(vec![-1, -2, -3, -4], 0);
        assert!(s.admissible);
        assert_eq!((s.weight, s.cohomological_degree), (0, 0));
    }

    #[test]
    fn level_two_blocks_repeated_two() {
        assert!(!CnSequence::new(vec![-1, 2, 3, 4], 2).admissible);
    }

    #[test]
    fn one_entry_both_signs() {
        assert_eq!(enumerate_admissible_sequences(1, 5).len(), 2);
    }

    #[test]
    fn weight_nine_excluded_for_small_positive_levels() {
        for l in 1..=4 {
            assert!(!cn_possibly_nonzero(4, 9, None, l));
        }
    }

    #[test]
    fn extreme_weights() {
        assert!(cn_possibly_nonzero(4, 0, Some(0), 0));
        assert!(cn_possibly_nonzero(4, 10, Some(10), 0));
    }

    #[test]
    fn answer_reports_checked_count() {
        let (a, checked) = cn_answer(4, 9, None, 2).unwrap();
        assert_eq!(a.status, AnswerStatus::Zero);
        assert_eq!(checked, 16);
    }
}
