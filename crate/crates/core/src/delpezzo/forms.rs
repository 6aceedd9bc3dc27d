use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{DegreeBasis, HomogeneousPolynomial, Rational, RationalMatrix};
use crate::milnor::GradedQuotient;

use super::DelPezzoError;

/// `g_0 dx_0 + g_1 dx_1 + g_2 dx_2` with `deg g_i = a - 1` and
/// `sum x_i g_i = 0`: a section of `Omega^1_{P^2}(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveOneForm {
    pub components: [HomogeneousPolynomial; 3],
    pub twist: u32,
}

impl ProjectiveOneForm {
    pub fn new(components: [HomogeneousPolynomial; 3]) -> Result<Self, DelPezzoError> {
        let deg = components.iter().find(|c| !c.is_zero()).map(|c| c.degree()).unwrap_or(0);
        for c in &components {
            if c.num_vars() != 3 {
                return Err(DelPezzoError::InvalidInput("components must be forms in x0, x1, x2".into()));
            }
            if !c.is_zero() && c.degree() != deg {
                return Err(DelPezzoError::InvalidInput("components of different degrees".into()));
            }
        }
        let mut contraction = HomogeneousPolynomial::zero(3, deg + 1);
        for (i, c) in components.iter().enumerate() {
            contraction = contraction.try_add(&c.mul(&HomogeneousPolynomial::var(3, i)))?;
        }
        if !contraction.is_zero() {
            return Err(DelPezzoError::InvalidInput(format!("sum x_i g_i = {contraction} is not zero")));
        }
        let components = components.map(|c| c.with_degree(deg).expect("checked"));
        Ok(ProjectiveOneForm { components, twist: deg + 1 })
    }

    /// Parses three component strings in `x0, x1, x2`.
    pub fn parse(components: [&str; 3]) -> Result<Self, DelPezzoError> {
        let [a, b, c] = components.map(|s| HomogeneousPolynomial::parse(3, s));
        Self::new([a?, b?, c?])
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

impl std::fmt::Display for ProjectiveOneForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a}) dx0 + ({b}) dx1 + ({c}) dx2")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneFormSpace {
    pub dimension: usize,
    pub basis: Vec<ProjectiveOneForm>,
}

/// `H^0(P^2, Omega^1(a))` as the kernel of `(g_i) -> sum x_i g_i`.
pub fn projective_one_forms(a: u32) -> OneFormSpace {
    if a == 0 {
        return OneFormSpace { dimension: 0, basis: Vec::new() };
    }
    let src = DegreeBasis::new(3, a - 1);
    let tgt = DegreeBasis::new(3, a);
    let len = src.len();
    let mut m = RationalMatrix::zero(tgt.len(), 3 * len);
    for i in 0..3 {
        for (j, mono) in src.monomials().iter().enumerate() {
            m.set(tgt.index_of(&mono.times_var(i)).expect("degree"), i * len + j, Rational::one());
        }
    }
    let basis: Vec<ProjectiveOneForm> = m
        .kernel()
        .into_iter()
        .map(|v| {
            let c = |i: usize| HomogeneousPolynomial::from_vector(&src, &v[i * len..(i + 1) * len]);
            ProjectiveOneForm { components: [c(0), c(1), c(2)], twist: a }
        })
        .collect();
    OneFormSpace { dimension: basis.len(), basis }
}

/// Common zeros of a projective one form found by bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSet {
    /// Points normalized so the first nonzero coordinate is 1, as strings.
    pub points: Vec<[String; 3]>,
    /// Largest numerator and denominator searched.
    pub search_bound: u32,
    /// Number of zeros counted with multiplicity, `a^2 - 3a + 3`.
    pub expected_count: u64,
}

/// Coordinates `p/q` with `|p|, q <= bound`.
fn rationals(bound: i64) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    for q in 1..=bound {
        for p in -bound..=bound {
            set.insert(Rational::new(p.into(), q.into()));
        }
    }
    set.into_iter().collect()
}

/// The zero locus has dimension 0 exactly when the Hilbert function of the
/// component ideal is eventually constant.
fn zero_dimensional(form: &ProjectiveOneForm) -> bool {
    let q = GradedQuotient::new(3, form.components.to_vec()).expect("three variables");
    let top = 3 * form.twist + 3;
    q.quotient_dim(top) == q.quotient_dim(top - 1)
}

/// Rational zeros of `form` with coordinates `p/q`, `|p|, q <= bound`, in
/// every affine chart.
pub fn zeros_of_form(form: &ProjectiveOneForm, bound: u32) -> Result<ZeroSet, DelPezzoError> {
    if form.is_zero() {
        return Err(DelPezzoError::PositiveDimensional("the zero form".into()));
    }
    if !zero_dimensional(form) {
        return Err(DelPezzoError::PositiveDimensional(format!("components of {form} share a factor")));
    }
    let values = rationals(bound as i64);
    let (zero, one) = (Rational::zero(), Rational::one());
    let vanishes = |p: &[Rational; 3]| form.components.iter().all(|c| c.evaluate(p).is_zero());
    let mut points = Vec::new();
    // Chart x0 = 1, then x0 = 0 and x1 = 1, then [0:0:1].
    for u in &values {
        for v in &values {
            let p = [one.clone(), u.clone(), v.clone()];
            if vanishes(&p) {
                points.push(p);
            }
        }
    }
    for v in &values {
        let p = [zero.clone(), one.clone(), v.clone()];
        if vanishes(&p) {
            points.push(p);
        }
    }
    let p = [zero.clone(), zero, one];
    if vanishes(&p) {
        points.push(p);
    }
    let a = form.twist as u64;
    Ok(ZeroSet {
        points: points.into_iter().map(|p| p.map(|c| c.to_string())).collect(),
        search_bound: bound,
        expected_count: a * a + 3 - 3 * a,
    })
}

/// The form vanishing at the four standard points and the three
/// `[0:1:1], [1:0:1], [1:1:0]`.
pub fn four_point_form() -> ProjectiveOneForm {
    ProjectiveOneForm::parse(["x1^2*x2 - x1*x2^2", "x0*x2^2 - x0^2*x2", "x0^2*x1 - x0*x1^2"]).expect("valid form")
}
