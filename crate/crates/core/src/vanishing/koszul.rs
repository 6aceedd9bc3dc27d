use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cohomology::family_answer;

use super::{akizuki_nakano_vanishes, kodaira_vanishes, CompleteIntersectionSpec, Rule, RuleApplication, VanishingError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessCase {
    /// `H^{degree}(Y, O_Y(twist))` with `degree = p + q`.
    LineBundle { s: usize, degree: u32, twist: i64 },
    /// `H^q(Y, Omega_M^p(twist)|_Y)`.
    AmbientForm { p: u32, q: u32, twist: i64 },
}

/// One cohomology group that must be nonzero if the original group is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulWitness {
    pub case: WitnessCase,
    pub j: Vec<u32>,
    /// For each exterior power `k = 0..=r` of the splitting bundle, the
    /// degrees `d_{ik}` of its line-bundle summands.
    pub koszul_twists: Vec<Vec<u32>>,
}

/// Sums of `k` distinct entries of `degrees`, for each `k = 0..=r`, one entry
/// per index subset.
pub fn koszul_twists(degrees: &[u32]) -> Vec<Vec<u32>> {
    let r = degrees.len();
    let mut out = vec![Vec::new(); r + 1];
    for mask in 0u32..1 << r {
        let k = mask.count_ones() as usize;
        let sum = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i]).sum();
        out[k].push(sum);
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out
}

fn j_vectors(r: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            go(prefix, left - 1, budget - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(r), r, max_sum, &mut out);
    out
}

/// Every obligation produced by peeling off the equations one at a time:
/// for each `j` with `sum j_i <= p - 1`, one ambient-form group and one
/// line-bundle group per `2 <= s <= r + 1`.
pub fn koszul_witnesses(
    spec: &CompleteIntersectionSpec,
    p: u32,
    q: u32,
    l: i64,
) -> Result<Vec<KoszulWitness>, VanishingError> {
    if p < 1 || p + q > spec.n() {
        return Err(VanishingError::NotApplicable(format!("need p >= 1 and p + q <= n = {}", spec.n())));
    }
    let d: Vec<i64> = spec.degrees.iter().map(|&x| x as i64).collect();
    let twists = koszul_twists(&spec.degrees);
    let mut out = Vec::new();
    for j in j_vectors(spec.r(), p - 1) {
        let k: u32 = j.iter().sum();
        let jd: i64 = j.iter().zip(&d).map(|(&a, &b)| a as i64 * b).sum();
        out.push(KoszulWitness {
            case: WitnessCase::AmbientForm { p: p - k, q: q + k, twist: l - jd },
            j: j.clone(),
            koszul_twists: twists.clone(),
        });
        for s in 2..=spec.r() + 1 {
            let base = d[s - 2];
            let tail: i64 = (s - 1..spec.r()).map(|i| (d[i] - base) * j[i] as i64).sum();
            out.push(KoszulWitness {
                case: WitnessCase::LineBundle { s, degree: p + q, twist: l - p as i64 * base - tail },
                j: j.clone(),
                koszul_twists: twists.clone(),
            });
        }
    }
    Ok(out)
}

/// Tries the module's predicates on a single witness group.
pub fn discharge_witness(spec: &CompleteIntersectionSpec, w: &KoszulWitness) -> Option<RuleApplication> {
    let n = spec.n();
    match w.case {
        WitnessCase::LineBundle { degree, twist, .. } => {
            if kodaira_vanishes(n, degree, twist) {
                return Some(RuleApplication {
                    rule: Rule::Kodaira,
                    detail: format!("H^{degree}(Y, O({twist})) on dim {n}"),
                });
            }
            let model = spec.exact_model()?;
            let a = family_answer(&model, 0, degree, twist).ok()?;
            a.is_zero().then(|| RuleApplication {
                rule: Rule::FamilyExactZero,
                detail: format!("H^{degree}(O({twist})) on {}: {}", model.label(), a.certificate),
            })
        }
        WitnessCase::AmbientForm { p, q, twist } => {
            let big_n = spec.ambient.dimension;
            let mut parts = Vec::new();
            for (k, ds) in w.koszul_twists.iter().enumerate() {
                for &dk in ds {
                    let t = twist - dk as i64;
                    let qq = q + k as u32;
                    let exact = family_answer(&spec.ambient, p, qq, t).map(|a| a.is_zero()).unwrap_or(false);
                    if exact {
                        parts.push(format!("H^{qq}(M, Ω^{p}({t}))=0 exact"));
                    } else if akizuki_nakano_vanishes(big_n, p, qq, t) {
                        parts.push(format!("H^{qq}(M, Ω^{p}({t}))=0 Akizuki-Nakano"));
                    } else {
                        return None;
                    }
                }
            }
            Some(RuleApplication { rule: Rule::KoszulReduction, detail: parts.join("; ") })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DischargeReport {
    pub j_vector_count: usize,
    pub witnesses: Vec<(KoszulWitness, Option<RuleApplication>)>,
    /// Set when the target group itself is read as zero from an exact model
    /// of `Y`; this closes any witnesses the predicates leave open.
    pub closed_by_exact_model: Option<RuleApplication>,
}

impl DischargeReport {
    pub fn all_discharged(&self) -> bool {
        self.closed_by_exact_model.is_some() || self.witnesses.iter().all(|(_, r)| r.is_some())
    }

    pub fn counts_by_rule(&self) -> BTreeMap<Rule, usize> {
        let mut m = BTreeMap::new();
        for (_, r) in &self.witnesses {
            match r {
                Some(app) => *m.entry(app.rule).or_insert(0) += 1,
                None if self.closed_by_exact_model.is_some() => *m.entry(Rule::FamilyExactZero).or_insert(0) += 1,
                None => {}
            }
        }
        m
    }
}

/// Enumerates the witnesses and tries to discharge each one.
pub fn discharge_witnesses(
    spec: &CompleteIntersectionSpec,
    p: u32,
    q: u32,
    l: i64,
) -> Result<DischargeReport, VanishingError> {
    let ws = koszul_witnesses(spec, p, q, l)?;
    let j_vector_count = ws.iter().filter(|w| matches!(w.case, WitnessCase::AmbientForm { .. })).count();
    let witnesses: Vec<_> = ws.into_iter().map(|w| {
        let r = discharge_witness(spec, &w);
        (w, r)
    }).collect();
    let mut closed_by_exact_model = None;
    if witnesses.iter().any(|(_, r)| r.is_none()) {
        if let Some(model) = spec.exact_model() {
            if let Ok(a) = family_answer(&model, p, q, l) {
                if a.is_zero() {
                    closed_by_exact_model = Some(RuleApplication {
                        rule: Rule::FamilyExactZero,
                        detail: format!("target group on Y ≅ {}: {}", model.label(), a.certificate),
                    });
                }
            }
        }
    }
    Ok(DischargeReport { j_vector_count, witnesses, closed_by_exact_model })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::HSSDescriptor;

    fn ci(big_n: u32, d: &[u32]) -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(HSSDescriptor::projective_space(big_n), d.to_vec()).unwrap()
    }

    #[test]
    fn hypersurface_p_one() {
        let ws = koszul_witnesses(&ci(5, &[3]), 1, 0, 2).unwrap();
        assert_eq!(ws.len(), 2);
        assert_eq!(ws[0].case, WitnessCase::AmbientForm { p: 1, q: 0, twist: 2 });
        assert_eq!(ws[1].case, WitnessCase::LineBundle { s: 2, degree: 1, twist: -1 });
    }

    #[test]
    fn two_equations_p_two() {
        let ws = koszul_witnesses(&ci(7, &[2, 3]), 2, 0, 1).unwrap();
        let ambient: Vec<_> = ws.iter().filter(|w| matches!(w.case, WitnessCase::AmbientForm { .. })).collect();
        assert_eq!(ambient.len(), 3);
        assert_eq!(ws.len(), 3 * 3);
        // j = (0, 1), s = 2: l - p d_1 - (d_2 - d_1) j_2 = 1 - 4 - 1
        let w = ws.iter().find(|w| w.j == vec![0, 1] && matches!(w.case, WitnessCase::LineBundle { s: 2, .. })).unwrap();
        assert_eq!(w.case, WitnessCase::LineBundle { s: 2, degree: 2, twist: -4 });
    }

    #[test]
    fn koszul_twist_sums() {
        assert_eq!(koszul_twists(&[2, 3]), vec![vec![0], vec![2, 3], vec![5]]);
    }

    #[test]
    fn cubic_witnesses_discharge() {
        let rep = discharge_witnesses(&ci(5, &[3]), 2, 0, 1).unwrap();
        assert!(rep.witnesses.iter().all(|(_, r)| r.is_some()));
        assert!(rep.closed_by_exact_model.is_none());
    }

    #[test]
    fn quadric_equality_case_closed_by_exact_model() {
        let rep = discharge_witnesses(&ci(4, &[2]), 2, 0, 2).unwrap();
        assert!(rep.witnesses.iter().any(|(_, r)| r.is_none()));
        assert!(rep.all_discharged());
    }
}
