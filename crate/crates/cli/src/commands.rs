//! Turns parsed arguments into output records.

use hsscohom::cohomology::{
    bott_dimension, classify_top_forms, cn_answer, quadric_answer, HSSDescriptor,
};
use hsscohom::delpezzo::{
    enumerate_lines, four_point_form, invertible_subsheaf_search, projective_one_forms, zeros_of_form, PicardLattice,
    ProjectiveOneForm,
};
use hsscohom::exactalg::{HomogeneousPolynomial, Rational};
use hsscohom::milnor::{check_slp, MilnorAlgebra};
use hsscohom::stability::{
    cubic_section_verdict, general_hypersurface_verdict, hss_restriction_verdict, langer_bound, restriction_test_set,
    tangent_stability_verdict, ChernData, CubicSectionEvidence, GenericityFlags,
};
use hsscohom::vanishing::{ci_vanishing_predicate_with, discharge_witnesses, CompleteIntersectionSpec, VanishingOptions};
use hsscohom::vectorfields::{
    extend_section, extension_threshold, general_section, h0_tangent_hypersurface, h0_tangent_projective,
    h0_tangent_restricted, restriction_surjectivity, PolyVectorField, SectionSpace, TangencyProblem, VectorFieldError,
};
use serde::Serialize;
use serde_json::Value;

use crate::records::*;
use crate::{
    ClassifyArgs, CliError, Command, DelpezzoAction, ExtendArgs, FormArgs, HypersurfaceArgs, MilnorArgs, SectionArgs,
    SectionTarget, SlpArgs, SnowCnArgs, StabilityArgs, StabilityCheck, VanishingArgs, VectorFieldArgs,
};

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn record<T: Serialize>(command: &str, body: T) -> Result<Value, CliError> {
    let env = Envelope { schema_version: SCHEMA_VERSION, command: command.to_string(), body };
    serde_json::to_value(env).map_err(invalid)
}

/// Parses `P4`, `Q5`, `LG3` or `other:DIM:INDEX[:hss]`.
pub fn parse_ambient(s: &str) -> Result<HSSDescriptor, CliError> {
    let s = s.trim();
    let num = |t: &str| t.parse::<u32>().map_err(|_| invalid(format!("bad ambient {s:?}")));
    let upper = s.to_ascii_uppercase();
    if let Some(rest) = upper.strip_prefix("LG") {
        let n = num(rest)?;
        if n == 0 {
            return Err(invalid("LG needs n >= 1"));
        }
        return Ok(HSSDescriptor::lagrangian_grassmannian(n));
    }
    if let Some(rest) = upper.strip_prefix('P') {
        let n = num(rest)?;
        if n == 0 {
            return Err(invalid("projective space needs dimension >= 1"));
        }
        return Ok(HSSDescriptor::projective_space(n));
    }
    if let Some(rest) = upper.strip_prefix('Q') {
        let n = num(rest)?;
        if n == 0 {
            return Err(invalid("quadric needs dimension >= 1"));
        }
        return Ok(HSSDescriptor::quadric(n));
    }
    if let Some(rest) = s.strip_prefix("other:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let hss = match parts.get(2) {
            None => false,
            Some(&"hss") => true,
            Some(t) => return Err(invalid(format!("unknown ambient flag {t:?}"))),
        };
        if parts.len() < 2 || parts.len() > 3 {
            return Err(invalid(format!("expected other:DIM:INDEX[:hss], got {s:?}")));
        }
        return HSSDescriptor::other(num(parts[0])?, num(parts[1])?, hss).map_err(invalid);
    }
    Err(invalid(format!("unknown ambient {s:?}; use P<N>, Q<N>, LG<n> or other:DIM:INDEX[:hss]")))
}

fn hypersurface(args: &HypersurfaceArgs) -> Result<HomogeneousPolynomial, CliError> {
    match (&args.fermat, &args.h) {
        (Some(_), Some(_)) => Err(invalid("give either --fermat or --h, not both")),
        (Some(spec), None) => {
            let (k, d) = spec.split_once(',').ok_or_else(|| invalid("--fermat expects k,d"))?;
            let k: usize = k.trim().parse().map_err(|_| invalid("--fermat expects k,d"))?;
            let d: u32 = d.trim().parse().map_err(|_| invalid("--fermat expects k,d"))?;
            if k == 0 || d == 0 {
                return Err(invalid("--fermat needs positive k and d"));
            }
            Ok(HomogeneousPolynomial::fermat(k, d))
        }
        (None, Some(text)) => {
            let vars = args.vars.ok_or_else(|| invalid("--h needs --vars"))?;
            HomogeneousPolynomial::parse(vars, text).map_err(invalid)
        }
        (None, None) => Err(invalid("a hypersurface is required: --h with --vars, or --fermat")),
    }
}

fn section(args: &SectionArgs, h: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial, CliError> {
    match (&args.f, args.general_section) {
        (Some(_), Some(_)) => Err(invalid("give either --f or --general-section, not both")),
        (Some(text), None) => HomogeneousPolynomial::parse(h.num_vars(), text).map_err(invalid),
        (None, Some(d)) => Ok(general_section(h, d, args.seed).map_err(invalid)?.0),
        (None, None) => Err(invalid("a section is required: --f or --general-section")),
    }
}

fn basis_strings(s: &SectionSpace) -> Vec<Vec<String>> {
    s.basis.iter().map(field_strings).collect()
}

fn field_strings(v: &PolyVectorField) -> Vec<String> {
    v.components.iter().map(|c| c.to_string()).collect()
}

fn spec_of(ambient: &str, degrees: &[u32]) -> Result<CompleteIntersectionSpec, CliError> {
    CompleteIntersectionSpec::new(parse_ambient(ambient)?, degrees.to_vec()).map_err(invalid)
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|_| invalid(format!("--{name} must be a rational like 3/2, got {s:?}")))
}

/// Runs one parsed command.
pub fn execute(cmd: &Command) -> Result<Vec<Value>, CliError> {
    match cmd {
        Command::Bott(a) => bott(a),
        Command::Quadric(a) => quadric(a),
        Command::SnowCn(a) => snow_cn(a),
        Command::ClassifyTop(a) => classify_top(a),
        Command::Milnor(a) => milnor(a),
        Command::Slp(a) => slp(a),
        Command::Vanishing(a) => vanishing(a),
        Command::Stability(a) => stability(a),
        Command::RestrictBound(a) => {
            let spec = spec_of(&a.ambient, &a.degrees)?;
            let test_set = restriction_test_set(&spec, a.d).map_err(invalid)?;
            let body = RestrictBoundRecord { ambient: a.ambient.clone(), degrees: spec.degrees.clone(), d: a.d, test_set };
            Ok(vec![record("restrict-bound", body)?])
        }
        Command::Vectorfields(a) => vectorfields(a),
        Command::Extend(a) => extend(a),
        Command::Delpezzo(a) => delpezzo(&a.action),
    }
}

fn bott(a: &FormArgs) -> Result<Vec<Value>, CliError> {
    if a.n == 0 {
        return Err(invalid("n must be positive"));
    }
    let dimension = Count::from(&bott_dimension(a.n, a.p, a.q, a.l));
    Ok(vec![record("bott", BottRecord { n: a.n, p: a.p, q: a.q, l: a.l, dimension })?])
}

fn quadric(a: &FormArgs) -> Result<Vec<Value>, CliError> {
    let answer = quadric_answer(a.n, a.p, a.q, a.l).map_err(invalid)?;
    let body = AnswerRecord {
        ambient: format!("Q{}", a.n),
        p: a.p.into(),
        q: Some(a.q.into()),
        l: a.l,
        answer,
        admissible_sequences_checked: None,
    };
    Ok(vec![record("quadric", body)?])
}

fn snow_cn(a: &SnowCnArgs) -> Result<Vec<Value>, CliError> {
    let (answer, checked) = cn_answer(a.n, a.p, a.q, a.l).map_err(invalid)?;
    let body = AnswerRecord {
        ambient: format!("LG{}", a.n),
        p: a.p,
        q: a.q,
        l: a.l,
        answer,
        admissible_sequences_checked: Some(checked),
    };
    Ok(vec![record("snow-cn", body)?])
}

fn classify_top(a: &ClassifyArgs) -> Result<Vec<Value>, CliError> {
    let desc = parse_ambient(&a.ambient)?;
    let nonvanishing = classify_top_forms(&desc, a.q, a.l).map_err(invalid)?;
    let body = ClassifyRecord { ambient: a.ambient.clone(), p: desc.dimension - 1, q: a.q, l: a.l, nonvanishing };
    Ok(vec![record("classify-top", body)?])
}

fn milnor(a: &MilnorArgs) -> Result<Vec<Value>, CliError> {
    let h = hypersurface(&a.hyper)?;
    let text = h.to_string();
    let alg = MilnorAlgebra::of(h).map_err(invalid)?;
    let rho = alg.rho();
    let pairing_full_rank = (0..=rho).all(|i| alg.pairing_matrix(i).is_full_rank());
    let (faithful_form, faithful_attempts) = match a.faithful_degree {
        None => (None, None),
        Some(d) => {
            let (f, n) = alg.faithful_form(d, a.seed).map_err(invalid)?;
            (Some(f.to_string()), Some(n))
        }
    };
    let body = MilnorRecord {
        h: text,
        num_vars: alg.spec().num_vars,
        degree: alg.spec().degree_h,
        rho,
        hilbert_series: alg.hilbert_series(),
        symmetric: alg.is_symmetric(),
        pairing_full_rank,
        faithful_form,
        faithful_attempts,
    };
    Ok(vec![record("milnor", body)?])
}

fn slp(a: &SlpArgs) -> Result<Vec<Value>, CliError> {
    if a.degrees.iter().any(|&d| d == 0) {
        return Err(invalid("degrees must be positive"));
    }
    let socle: u32 = a.degrees.iter().map(|d| d - 1).sum();
    let certificate = check_slp(&a.degrees, a.power_bound.unwrap_or(socle), a.seed).map_err(invalid)?;
    Ok(vec![record("slp", SlpRecord { certificate })?])
}

fn vanishing(a: &VanishingArgs) -> Result<Vec<Value>, CliError> {
    let spec = spec_of(&a.ambient, &a.degrees)?;
    let options = VanishingOptions { relax_degrees_for_untwisted: a.relax };
    let certificate = ci_vanishing_predicate_with(&spec, a.p, a.q, a.l, options).map_err(invalid)?;
    let witnesses = if a.witnesses {
        let rep = discharge_witnesses(&spec, a.p, a.q, a.l).map_err(invalid)?;
        let counts_by_rule = rep
            .counts_by_rule()
            .into_iter()
            .map(|(rule, n)| {
                let key = serde_json::to_value(rule).ok().and_then(|v| v.as_str().map(String::from));
                (key.unwrap_or_else(|| format!("{rule:?}")), n)
            })
            .collect();
        Some(WitnessSummary {
            j_vector_count: rep.j_vector_count,
            witnesses: rep.witnesses.len(),
            discharged: rep.witnesses.iter().filter(|(_, r)| r.is_some()).count(),
            all_discharged: rep.all_discharged(),
            counts_by_rule,
            closed_by_exact_model: rep.closed_by_exact_model.clone(),
        })
    } else {
        None
    };
    let body = VanishingRecord {
        ambient: a.ambient.clone(),
        degrees: spec.degrees.clone(),
        p: a.p,
        q: a.q,
        l: a.l,
        certificate,
        witnesses,
    };
    Ok(vec![record("vanishing", body)?])
}

fn stability(a: &StabilityArgs) -> Result<Vec<Value>, CliError> {
    let flags = GenericityFlags { y_general: a.y_general, x_general: a.x_general, picard_surjective: a.picard_surjective };
    let need_ambient = || a.ambient.as_deref().ok_or_else(|| invalid("--ambient is required for this check"));
    let need_d = || a.d.ok_or_else(|| invalid("--d is required for this check"));
    let (check, input, verdict) = match a.check {
        StabilityCheck::Tangent => {
            let spec = spec_of(need_ambient()?, &a.degrees)?;
            ("tangent", spec.label(), tangent_stability_verdict(&spec))
        }
        StabilityCheck::Restriction => {
            let spec = spec_of(need_ambient()?, &a.degrees)?;
            let d = need_d()?;
            ("restriction", format!("{} with d={d}", spec.label()), hss_restriction_verdict(&spec, d, flags))
        }
        StabilityCheck::Hypersurface => {
            let n = a.n.ok_or_else(|| invalid("--n is required for this check"))?;
            let dh = a.dh.ok_or_else(|| invalid("--dh is required for this check"))?;
            let d = need_d()?;
            let v = general_hypersurface_verdict(n, dh, d, flags);
            ("hypersurface", format!("n={n}, d_h={dh}, d={d}"), v)
        }
        StabilityCheck::CubicSection => {
            let evidence = cubic_section_evidence(a.seed)?;
            let input = serde_json::to_string(&evidence).map_err(invalid)?;
            ("cubic-section", input, cubic_section_verdict(&evidence))
        }
        StabilityCheck::Langer => {
            let rank = a.rank.ok_or_else(|| invalid("--rank is required for this check"))?;
            let disc = parse_rational("discriminant", a.discriminant.as_deref().unwrap_or("0"))?;
            let hn = parse_rational("hn", a.hn.as_deref().ok_or_else(|| invalid("--hn is required"))?)?;
            let cd = ChernData::from_discriminant(rank, disc.clone(), hn.clone()).map_err(invalid)?;
            let body = LangerRecord { rank, discriminant: disc.to_string(), hn: hn.to_string(), bound: langer_bound(&cd) };
            return Ok(vec![record("stability", body)?]);
        }
    };
    Ok(vec![record("stability", StabilityRecord { check: check.into(), input, verdict })?])
}

/// Bound on `c_1(F).(-K_X)` for rank-two subsheaves of the cotangent bundle
/// of a cubic surface; taken as given rather than computed.
const RANK_TWO_BOUND: i64 = -5;

fn cubic_section_evidence(seed: u64) -> Result<CubicSectionEvidence, CliError> {
    let h = HomogeneousPolynomial::fermat(5, 3);
    let (f, _) = general_section(&h, 1, seed).map_err(invalid)?;
    let spec = CompleteIntersectionSpec::new(HSSDescriptor::projective_space(4), vec![3]).map_err(invalid)?;
    let t_max = restriction_test_set(&spec, 1).map_err(invalid)?.t_max;
    let h0_tangent_y = h0_tangent_hypersurface(&h, 0).map_err(invalid)?.dimension;
    let tp = TangencyProblem::new(h.clone(), Some(f.clone()), t_max).map_err(invalid)?;
    let h0_restricted_t_max = h0_tangent_restricted(&tp).map_err(invalid)?.dimension;
    let tp0 = TangencyProblem::new(h, Some(f), 0).map_err(invalid)?;
    let report = restriction_surjectivity(&tp0).map_err(invalid)?;
    let search = invertible_subsheaf_search().map_err(invalid)?;
    Ok(CubicSectionEvidence {
        h0_tangent_y,
        restriction_surjective_t0: report.surjective,
        h0_restricted_t_max,
        invertible_subsheaf_survivors: search.after_exclusion.len(),
        rank_two_bound: RANK_TWO_BOUND,
    })
}

fn vectorfields(a: &VectorFieldArgs) -> Result<Vec<Value>, CliError> {
    let body = match a.target {
        SectionTarget::Projective => {
            let m = a.m.ok_or_else(|| invalid("--m is required for the projective target"))?;
            if m == 0 {
                return Err(invalid("--m must be positive"));
            }
            let s = h0_tangent_projective(m, a.t);
            SectionRecord { target: "projective".into(), h: None, f: None, t: a.t, dimension: s.dimension, basis: basis_strings(&s) }
        }
        SectionTarget::Hypersurface => {
            let h = hypersurface(&a.hyper)?;
            let s = h0_tangent_hypersurface(&h, a.t).map_err(invalid)?;
            SectionRecord {
                target: "hypersurface".into(),
                h: Some(h.to_string()),
                f: None,
                t: a.t,
                dimension: s.dimension,
                basis: basis_strings(&s),
            }
        }
        SectionTarget::Restricted => {
            let h = hypersurface(&a.hyper)?;
            let f = section(&a.section, &h)?;
            let (hs, fs) = (h.to_string(), f.to_string());
            let s = h0_tangent_restricted(&TangencyProblem::new(h, Some(f), a.t).map_err(invalid)?).map_err(invalid)?;
            SectionRecord { target: "restricted".into(), h: Some(hs), f: Some(fs), t: a.t, dimension: s.dimension, basis: basis_strings(&s) }
        }
        SectionTarget::Surjectivity => {
            let h = hypersurface(&a.hyper)?;
            let f = section(&a.section, &h)?;
            let threshold = extension_threshold(h.num_vars(), h.degree(), f.degree());
            let (hs, fs) = (h.to_string(), f.to_string());
            let report = restriction_surjectivity(&TangencyProblem::new(h, Some(f), a.t).map_err(invalid)?).map_err(invalid)?;
            return Ok(vec![record("vectorfields", SurjectivityRecord { h: hs, f: fs, t: a.t, threshold, report })?]);
        }
    };
    Ok(vec![record("vectorfields", body)?])
}

fn extend(a: &ExtendArgs) -> Result<Vec<Value>, CliError> {
    let h = hypersurface(&a.hyper)?;
    let f = section(&a.section, &h)?;
    let threshold = extension_threshold(h.num_vars(), h.degree(), f.degree());
    let tp = TangencyProblem::new(h.clone(), Some(f.clone()), a.t).map_err(invalid)?;
    let inputs = match &a.field {
        Some(text) => {
            let comps = text
                .split(';')
                .map(|c| HomogeneousPolynomial::parse(h.num_vars(), c))
                .collect::<Result<Vec<_>, _>>()
                .map_err(invalid)?;
            vec![PolyVectorField::new(comps, a.t).map_err(invalid)?]
        }
        None => h0_tangent_restricted(&tp).map_err(invalid)?.basis,
    };
    let (hs, fs) = (h.to_string(), f.to_string());
    let mut out = Vec::with_capacity(inputs.len());
    for s in &inputs {
        let (status, extension, detail) = match extend_section(&tp, s) {
            Ok(e) => (ExtensionStatus::Extended, Some(field_strings(&e)), None),
            Err(VectorFieldError::NotTangent) => (ExtensionStatus::NotTangent, None, None),
            Err(VectorFieldError::Obstructed(why)) => (ExtensionStatus::Obstructed, None, Some(why)),
            Err(e) => return Err(invalid(e)),
        };
        let body = ExtendRecord {
            h: hs.clone(),
            f: fs.clone(),
            t: a.t,
            threshold,
            input: field_strings(s),
            status,
            extension,
            detail,
        };
        out.push(record("extend", body)?);
    }
    Ok(out)
}

fn delpezzo(action: &DelpezzoAction) -> Result<Vec<Value>, CliError> {
    match action {
        DelpezzoAction::Lines { r } => {
            let lattice = PicardLattice::new(*r).map_err(invalid)?;
            enumerate_lines(&lattice)
                .into_iter()
                .map(|d| {
                    let family = match d.a {
                        0 => "exceptional",
                        1 => "line_through_two",
                        2 => "conic",
                        _ => "higher",
                    };
                    let body = LineRecord { r: *r, class: d.to_string(), a: d.a, b: d.b.clone(), family: family.into() };
                    record("delpezzo-lines", body)
                })
                .collect()
        }
        DelpezzoAction::Canonical { r } => {
            let lattice = PicardLattice::new(*r).map_err(invalid)?;
            let k = lattice.canonical();
            let k_squared = lattice.intersect(&k, &k).map_err(invalid)?;
            Ok(vec![record("delpezzo-canonical", CanonicalRecord { r: *r, canonical: k.to_string(), k_squared })?])
        }
        DelpezzoAction::Search => {
            let search = invertible_subsheaf_search().map_err(invalid)?;
            Ok(vec![record("delpezzo-search", SearchRecord { search })?])
        }
        DelpezzoAction::Forms { a } => {
            let space = projective_one_forms(*a);
            let body = OneFormRecord { a: *a, dimension: space.dimension, basis: space.basis.iter().map(|f| f.to_string()).collect() };
            Ok(vec![record("delpezzo-forms", body)?])
        }
        DelpezzoAction::Zeros { form, four_point, bound } => {
            let form = match (form, four_point) {
                (Some(_), true) => return Err(invalid("give either --form or --four-point, not both")),
                (None, false) => return Err(invalid("a form is required: --form g0;g1;g2 or --four-point")),
                (None, true) => four_point_form(),
                (Some(text), false) => {
                    let parts: Vec<&str> = text.split(';').collect();
                    let parts: [&str; 3] = parts.try_into().map_err(|_| invalid("--form needs three components separated by ';'"))?;
                    ProjectiveOneForm::parse(parts).map_err(invalid)?
                }
            };
            let z = zeros_of_form(&form, *bound).map_err(invalid)?;
            let body = ZerosRecord {
                form: form.to_string(),
                search_bound: z.search_bound,
                expected_count: z.expected_count,
                points: z.points.iter().map(|[a, b, c]| format!("[{a}:{b}:{c}]")).collect(),
            };
            Ok(vec![record("delpezzo-zeros", body)?])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hsscohom::cohomology::family_answer;

    #[test]
    fn ambient_strings() {
        assert_eq!(parse_ambient("P4").unwrap(), HSSDescriptor::projective_space(4));
        assert_eq!(parse_ambient("q5").unwrap(), HSSDescriptor::quadric(5));
        assert_eq!(parse_ambient("LG3").unwrap(), HSSDescriptor::lagrangian_grassmannian(3));
        assert!(parse_ambient("other:6:3:hss").unwrap().is_known_hss());
        assert!(!parse_ambient("other:6:3").unwrap().is_known_hss());
        for bad in ["P0", "X3", "other:6", "other:6:3:maybe", "LG"] {
            assert!(parse_ambient(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn family_answer_agrees_with_quadric_command() {
        let q = quadric_answer(3, 1, 1, 0).unwrap();
        assert_eq!(family_answer(&HSSDescriptor::quadric(3), 1, 1, 0).unwrap(), q);
    }
}
