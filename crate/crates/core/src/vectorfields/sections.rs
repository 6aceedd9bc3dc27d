use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::{DegreeBasis, EchelonSpan, HomogeneousPolynomial, Rational, RationalMatrix, SparseVec};
use crate::milnor::{ideal_membership, jacobian_ideal, random_form, GradedQuotient, MilnorAlgebra, GENERIC_ATTEMPTS};

use super::{PolyVectorField, SectionSpace, TangencyProblem, VectorFieldError};

/// Coordinates on `(S_{t+1})^n`: component `i`, monomial `j` sits at
/// `i * len + j`.
struct TupleSpace {
    n: usize,
    twist: i64,
    basis: DegreeBasis,
}

impl TupleSpace {
    /// `None` when `t + 1 < 0`.
    fn new(n: usize, t: i64) -> Option<Self> {
        (t >= -1).then(|| TupleSpace { n, twist: t, basis: DegreeBasis::new(n, (t + 1) as u32) })
    }

    fn dim(&self) -> usize {
        self.n * self.basis.len()
    }

    fn coordinates(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.basis.len()).map(move |j| (i, j)))
    }

    fn field(&self, v: &[Rational]) -> PolyVectorField {
        let len = self.basis.len();
        let components = (0..self.n).map(|i| HomogeneousPolynomial::from_vector(&self.basis, &v[i * len..(i + 1) * len])).collect();
        PolyVectorField { components, twist: self.twist }
    }

    fn vector(&self, s: &PolyVectorField) -> SparseVec {
        let len = self.basis.len();
        let mut out = SparseVec::new();
        for (i, c) in s.components.iter().enumerate() {
            for (m, x) in c.terms() {
                out.insert(i * len + self.basis.index_of(m).expect("degree"), x.clone());
            }
        }
        out
    }

    /// Tuples `g * (e_i)` for `g` running over `gens` times monomials.
    fn multiples(&self, gens: &[HomogeneousPolynomial]) -> Vec<SparseVec> {
        let k = self.basis.degree();
        let len = self.basis.len();
        let mut out = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero() && g.degree() <= k) {
            for m in DegreeBasis::new(self.n, k - g.degree()).monomials() {
                let p = g.mul_monomial(m, &Rational::one());
                for i in 0..self.n {
                    out.push(p.terms().map(|(mm, c)| (i * len + self.basis.index_of(mm).expect("degree"), c.clone())).collect());
                }
            }
        }
        out
    }
}

fn dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (&k, c) in v {
        out[k] = c.clone();
    }
    out
}

fn sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// Kernel of `F -> sum F_i dh/dx_i` modulo the ideal of `gens`.
fn tangency_kernel(space: &TupleSpace, h: &HomogeneousPolynomial, gens: &[HomogeneousPolynomial]) -> Result<Vec<Vec<Rational>>, VectorFieldError> {
    let q = GradedQuotient::new(space.n, gens.to_vec())?;
    let grad = h.gradient();
    let target = space.basis.degree() + h.degree() - 1;
    let rows = q.quotient_dim(target);
    let mut a = RationalMatrix::zero(rows, space.dim());
    for (col, (i, j)) in space.coordinates().enumerate() {
        if grad[i].is_zero() {
            continue;
        }
        let image = grad[i].mul_monomial(&space.basis.monomials()[j], &Rational::one());
        for (r, c) in q.residue(&image).into_iter().enumerate() {
            if !c.is_zero() {
                a.set(r, col, c);
            }
        }
    }
    Ok(a.kernel())
}

/// Tuples with every `x_a F_b - x_b F_a` in the ideal of `gens`.
fn vanishing_kernel(space: &TupleSpace, gens: &[HomogeneousPolynomial]) -> Result<Vec<Vec<Rational>>, VectorFieldError> {
    let n = space.n;
    let q = GradedQuotient::new(n, gens.to_vec())?;
    let target = space.basis.degree() + 1;
    let qd = q.quotient_dim(target);
    let pair_index = |a: usize, b: usize| a * n - a * (a + 1) / 2 + (b - a - 1);
    let pairs = n * (n - 1) / 2;
    let mut a = RationalMatrix::zero(pairs * qd, space.dim());
    for (col, (i, j)) in space.coordinates().enumerate() {
        let m = &space.basis.monomials()[j];
        for other in 0..n {
            if other == i {
                continue;
            }
            // x_a F_b - x_b F_a with F = m e_i.
            let (p, sign) = if other < i { (pair_index(other, i), Rational::one()) } else { (pair_index(i, other), -Rational::one()) };
            let image = HomogeneousPolynomial::from_monomial(m.times_var(other), sign);
            for (r, c) in q.residue(&image).into_iter().enumerate() {
                if !c.is_zero() {
                    let cur = a.get(p * qd + r, col) + c;
                    a.set(p * qd + r, col, cur);
                }
            }
        }
    }
    Ok(a.kernel())
}

/// Candidates independent modulo `span`, inserting each kept one.
fn independent_modulo(span: &mut EchelonSpan, candidates: &[Vec<Rational>]) -> Vec<usize> {
    candidates.iter().enumerate().filter(|(_, v)| span.insert(&sparse(v))).map(|(i, _)| i).collect()
}

fn check_smooth_hypersurface(h: &HomogeneousPolynomial) -> Result<(), VectorFieldError> {
    if h.is_zero() {
        return Err(VectorFieldError::InvalidInput("h is zero".into()));
    }
    // The tuple description needs H^1(O_Y(t)) = 0 for every t.
    if h.num_vars() < 4 {
        return Err(VectorFieldError::Degenerate(format!("Y has dimension {} < 2", h.num_vars() as i64 - 2)));
    }
    if h.degree() < 2 {
        return Ok(());
    }
    match MilnorAlgebra::of(h.clone()) {
        Ok(_) => Ok(()),
        Err(crate::milnor::MilnorError::NotFinite { .. }) => Err(VectorFieldError::Singular(format!("{{{h} = 0}} is singular"))),
        Err(e) => Err(e.into()),
    }
}

/// Smoothness of `{f = h = 0}`: the ideal of `f`, `h` and the 2x2 minors of
/// their Jacobian must contain every form of some degree.
pub(crate) fn complete_intersection_is_smooth(h: &HomogeneousPolynomial, f: &HomogeneousPolynomial) -> bool {
    let n = h.num_vars();
    let (gf, gh) = (f.gradient(), h.gradient());
    let mut gens = vec![f.clone(), h.clone()];
    for a in 0..n {
        for b in a + 1..n {
            let m = gf[a].mul(&gh[b]).try_sub(&gf[b].mul(&gh[a])).expect("same shape");
            gens.push(m);
        }
    }
    let top = gens.iter().map(|g| g.degree()).max().unwrap_or(1).max(1);
    let Ok(q) = GradedQuotient::new(n, gens) else { return false };
    (0..=n as u32 * top).any(|k| q.quotient_dim(k) == 0)
}

/// `H^0(P^m, T(t))`: tuples of degree `t + 1` modulo Euler multiples.
pub fn h0_tangent_projective(m: usize, t: i64) -> SectionSpace {
    let n = m + 1;
    let Some(space) = TupleSpace::new(n, t) else { return SectionSpace::empty() };
    let mut span = euler_and_multiples(&space, &[]);
    let units: Vec<Vec<Rational>> = (0..space.dim())
        .map(|k| {
            let mut v = vec![Rational::zero(); space.dim()];
            v[k] = Rational::one();
            v
        })
        .collect();
    let kept = independent_modulo(&mut span, &units);
    SectionSpace::from_basis(kept.into_iter().map(|k| space.field(&units[k])).collect())
}

fn euler_and_multiples(space: &TupleSpace, gens: &[HomogeneousPolynomial]) -> EchelonSpan {
    let mut span = EchelonSpan::new();
    if space.twist >= 0 {
        for p in DegreeBasis::new(space.n, space.twist as u32).monomials() {
            let e = PolyVectorField::euler(&HomogeneousPolynomial::from_monomial(p.clone(), Rational::one()));
            span.insert(&space.vector(&e));
        }
    }
    for v in space.multiples(gens) {
        span.insert(&v);
    }
    span
}

/// `H^0(Y, T_Y(t))` for smooth `Y = {h = 0}`: tuples with
/// `sum F_i dh/dx_i` in `(h)`, modulo Euler multiples and `h` times tuples.
pub fn h0_tangent_hypersurface(h: &HomogeneousPolynomial, t: i64) -> Result<SectionSpace, VectorFieldError> {
    check_smooth_hypersurface(h)?;
    let Some(space) = TupleSpace::new(h.num_vars(), t) else { return Ok(SectionSpace::empty()) };
    let kernel = tangency_kernel(&space, h, std::slice::from_ref(h))?;
    let mut span = euler_and_multiples(&space, std::slice::from_ref(h));
    let kept = independent_modulo(&mut span, &kernel);
    Ok(SectionSpace::from_basis(kept.into_iter().map(|k| space.field(&kernel[k])).collect()))
}

fn check_restricted(tp: &TangencyProblem) -> Result<&HomogeneousPolynomial, VectorFieldError> {
    let f = tp.section()?;
    let n = tp.num_vars();
    if n < 5 {
        return Err(VectorFieldError::Degenerate(format!("X has dimension {} < 2", n as i64 - 3)));
    }
    check_smooth_hypersurface(&tp.h)?;
    if !complete_intersection_is_smooth(&tp.h, f) {
        return Err(VectorFieldError::Singular(format!("{{{f} = {} = 0}} is singular", tp.h)));
    }
    Ok(f)
}

/// Sections vanishing on `X` and tangency-kernel candidates.
fn restricted_parts(
    space: &TupleSpace,
    h: &HomogeneousPolynomial,
    f: &HomogeneousPolynomial,
) -> Result<(EchelonSpan, Vec<Vec<Rational>>), VectorFieldError> {
    let gens = [f.clone(), h.clone()];
    let tangent = tangency_kernel(space, h, &gens)?;
    let mut vanishing = EchelonSpan::new();
    for v in vanishing_kernel(space, &gens)? {
        vanishing.insert(&sparse(&v));
    }
    Ok((vanishing, tangent))
}

/// `H^0(X, T_Y(t)|_X)` for `X = {f = h = 0}`: tuples with
/// `sum F_i dh/dx_i` in `(f, h)`, modulo tuples vanishing on `X`.
pub fn h0_tangent_restricted(tp: &TangencyProblem) -> Result<SectionSpace, VectorFieldError> {
    let f = check_restricted(tp)?;
    let Some(space) = TupleSpace::new(tp.num_vars(), tp.t) else { return Ok(SectionSpace::empty()) };
    let (mut vanishing, tangent) = restricted_parts(&space, &tp.h, f)?;
    let kept = independent_modulo(&mut vanishing, &tangent);
    Ok(SectionSpace::from_basis(kept.into_iter().map(|k| space.field(&tangent[k])).collect()))
}

/// Dimensions and rank of `H^0(Y, T_Y(t)) -> H^0(X, T_Y(t)|_X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub surjective: bool,
    pub dim_on_y: usize,
    pub dim_on_x: usize,
    pub rank: usize,
}

pub fn restriction_surjectivity(tp: &TangencyProblem) -> Result<RestrictionReport, VectorFieldError> {
    let f = check_restricted(tp)?;
    let on_y = h0_tangent_hypersurface(&tp.h, tp.t)?;
    let Some(space) = TupleSpace::new(tp.num_vars(), tp.t) else {
        return Ok(RestrictionReport { surjective: true, dim_on_y: 0, dim_on_x: 0, rank: 0 });
    };
    let (vanishing, tangent) = restricted_parts(&space, &tp.h, f)?;
    let mut image = vanishing.clone();
    let y_vectors: Vec<Vec<Rational>> = on_y.basis.iter().map(|s| dense(&space.vector(s), space.dim())).collect();
    let rank = independent_modulo(&mut image, &y_vectors).len();
    let mut all = vanishing;
    let dim_on_x = independent_modulo(&mut all, &tangent).len();
    Ok(RestrictionReport { surjective: rank == dim_on_x, dim_on_y: on_y.dimension, dim_on_x, rank })
}

/// Largest integer `t` with `t <= (rho + d)/2 - d_h`, where
/// `rho = (d_h - 2) * num_vars` is the socle degree of the Milnor algebra.
pub fn extension_threshold(num_vars: usize, d_h: u32, d: u32) -> i64 {
    let rho = (d_h as i64 - 2) * num_vars as i64;
    (rho + d as i64 - 2 * d_h as i64).div_euclid(2)
}

pub fn is_tangent_to_y(h: &HomogeneousPolynomial, s: &PolyVectorField) -> Result<bool, VectorFieldError> {
    let q = GradedQuotient::new(h.num_vars(), vec![h.clone()])?;
    Ok(q.contains(&s.apply(h)?))
}

pub fn is_tangent_along_x(h: &HomogeneousPolynomial, f: &HomogeneousPolynomial, s: &PolyVectorField) -> Result<bool, VectorFieldError> {
    let q = GradedQuotient::new(h.num_vars(), vec![f.clone(), h.clone()])?;
    Ok(q.contains(&s.apply(h)?))
}

/// Whether every `x_a s_b - x_b s_a` lies in `(f, h)`.
pub fn vanishes_on_x(h: &HomogeneousPolynomial, f: &HomogeneousPolynomial, s: &PolyVectorField) -> Result<bool, VectorFieldError> {
    let n = h.num_vars();
    let q = GradedQuotient::new(n, vec![f.clone(), h.clone()])?;
    for a in 0..n {
        for b in a + 1..n {
            let xa = HomogeneousPolynomial::var(n, a);
            let xb = HomogeneousPolynomial::var(n, b);
            let w = xa.mul(&s.components[b]).try_sub(&xb.mul(&s.components[a]))?;
            if !q.contains(&w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Extends a section of `T_Y(t)|_X` to a field tangent to `Y`.
///
/// Writes `sum s_i dh/dx_i = g f + p h`, expresses `g = sum g_i dh/dx_i` in
/// the Jacobian ideal and returns `s - f (g_0, ..., g_m)`, which agrees with
/// `s` on `X`. Fails with `Obstructed` when `g` is outside the Jacobian ideal,
/// which for general `f` only happens above [`extension_threshold`].
pub fn extend_section(tp: &TangencyProblem, s: &PolyVectorField) -> Result<PolyVectorField, VectorFieldError> {
    let f = tp.section()?;
    let n = tp.num_vars();
    if s.num_vars() != n || s.twist != tp.t {
        return Err(VectorFieldError::InvalidInput(format!(
            "field has {} components at twist {}, expected {n} at twist {}",
            s.num_vars(),
            s.twist,
            tp.t
        )));
    }
    let phi = s.apply(&tp.h)?;
    let Some(cof) = ideal_membership(&phi, &[f.clone(), tp.h.clone()])? else {
        return Err(VectorFieldError::NotTangent);
    };
    let g = &cof[0];
    if g.is_zero() {
        return Ok(s.clone());
    }
    let Some(gs) = ideal_membership(g, &jacobian_ideal(&tp.h))? else {
        return Err(VectorFieldError::Obstructed(format!("g = {g} is not in the Jacobian ideal")));
    };
    let components = s
        .components
        .iter()
        .zip(&gs)
        .map(|(c, gi)| if gi.is_zero() { Ok(c.clone()) } else { c.try_sub(&gi.mul(f)) })
        .collect::<Result<_, _>>()?;
    Ok(PolyVectorField { components, twist: s.twist })
}

/// A seeded form of degree `d` such that multiplication by it has maximal
/// rank on the Milnor algebra of `h` and `{f = h = 0}` is smooth. Returns the
/// form and the number of draws used.
pub fn general_section(h: &HomogeneousPolynomial, d: u32, seed: u64) -> Result<(HomogeneousPolynomial, usize), VectorFieldError> {
    if d == 0 {
        return Err(VectorFieldError::InvalidInput("section degree must be positive".into()));
    }
    let algebra = MilnorAlgebra::of(h.clone()).map_err(|e| match e {
        crate::milnor::MilnorError::NotFinite { .. } => VectorFieldError::Singular(format!("{{{h} = 0}} is singular")),
        e => e.into(),
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=GENERIC_ATTEMPTS {
        let f = random_form(h.num_vars(), d, &mut rng);
        if !f.is_zero() && algebra.is_faithful(&f) && complete_intersection_is_smooth(h, &f) {
            return Ok((f, attempt));
        }
    }
    Err(crate::milnor::MilnorError::NoWitness { attempts: GENERIC_ATTEMPTS }.into())
}
