use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{DegreeBasis, ExactAlgError, Monomial, Rational};

/// Sparse homogeneous polynomial with exact rational coefficients.
///
/// The zero polynomial carries a nominal degree like any other, and all
/// operations accept it at any degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPolynomial {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousPolynomial { num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::from_monomial(Monomial::one(num_vars), c)
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        Self::from_monomial(Monomial::var(num_vars, index), Rational::one())
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.num_vars(), m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(num_vars: usize, degree: u32, terms: I) -> Result<Self, ExactAlgError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(ExactAlgError::VariableCountMismatch { left: num_vars, right: m.num_vars() });
            }
            if m.degree() != degree {
                return Err(ExactAlgError::InhomogeneousTerm { expected: degree, found: m.degree() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear_form(coefficients: &[Rational]) -> Self {
        let n = coefficients.len();
        let mut p = Self::zero(n, 1);
        for (i, c) in coefficients.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// `sum_i x_i^degree` in `num_vars` variables.
    pub fn fermat(num_vars: usize, degree: u32) -> Self {
        let mut p = Self::zero(num_vars, degree);
        for i in 0..num_vars {
            let mut e = vec![0; num_vars];
            e[i] = degree;
            p.add_term(Monomial::new(e), Rational::one());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-labels the nominal degree of a zero polynomial; nonzero polynomials
    /// must already have that degree.
    pub fn with_degree(mut self, degree: u32) -> Result<Self, ExactAlgError> {
        if !self.is_zero() && self.degree != degree {
            return Err(ExactAlgError::DegreeMismatch { left: self.degree, right: degree });
        }
        self.degree = degree;
        Ok(self)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactAlgError> {
        if self.num_vars != other.num_vars {
            return Err(ExactAlgError::VariableCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(ExactAlgError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactAlgError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars, self.degree);
        }
        HomogeneousPolynomial {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Exact product; the degree of the result is the sum of the degrees.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Self::zero(self.num_vars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        let mut out = Self::zero(self.num_vars, self.degree + m.degree());
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to `x_index`. The result has
    /// nominal degree `degree - 1` (degree 0 for constants, where it is zero).
    pub fn partial(&self, index: usize) -> Result<Self, ExactAlgError> {
        if index >= self.num_vars {
            return Err(ExactAlgError::VariableOutOfRange { index, num_vars: self.num_vars });
        }
        let mut out = Self::zero(self.num_vars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.partial(index) {
                out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.num_vars).map(|i| self.partial(i).expect("index in range")).collect()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.num_vars, "point dimension");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Coefficient vector in the given monomial basis of the same degree.
    pub fn to_vector(&self, basis: &DegreeBasis) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); basis.len()];
        if self.is_zero() {
            return v;
        }
        assert_eq!(basis.degree(), self.degree, "basis degree");
        for (m, c) in &self.terms {
            let i = basis.index_of(m).expect("monomial in basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_vector(basis: &DegreeBasis, coefficients: &[Rational]) -> Self {
        assert_eq!(basis.len(), coefficients.len());
        let mut p = Self::zero(basis.num_vars(), basis.degree());
        for (m, c) in basis.monomials().iter().zip(coefficients) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    /// Parses text such as `x0^3 + 2*x1*x2 - 1/2*x3^2`.
    ///
    /// Variables are written `x<index>`. The text `0` gives the zero
    /// polynomial of nominal degree 0.
    pub fn parse(num_vars: usize, text: &str) -> Result<Self, ExactAlgError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ExactAlgError::Parse("empty input".into()));
        }
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && compact[..i].ends_with('^')) {
                if !current.is_empty() {
                    chunks.push((negative, std::mem::take(&mut current)));
                } else if i != 0 {
                    return Err(ExactAlgError::Parse(format!("dangling sign at position {i}")));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(ExactAlgError::Parse("trailing sign".into()));
        }
        chunks.push((negative, current));

        for (negative, chunk) in chunks {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; num_vars];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(ExactAlgError::Parse(format!("empty factor in `{chunk}`")));
                }
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((a, b)) => (a, b),
                        None => (rest, "1"),
                    };
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| ExactAlgError::Parse(format!("bad variable `{factor}`")))?;
                    let pow: u32 = pow
                        .parse()
                        .map_err(|_| ExactAlgError::Parse(format!("bad exponent `{factor}`")))?;
                    if idx >= num_vars {
                        return Err(ExactAlgError::VariableOutOfRange { index: idx, num_vars });
                    }
                    exps[idx] += pow;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((Monomial::new(exps), coeff));
        }
        let degree = terms.iter().find(|(_, c)| !c.is_zero()).map(|(m, _)| m.degree()).unwrap_or(0);
        let nonzero = terms.into_iter().filter(|(_, c)| !c.is_zero());
        Self::from_terms(num_vars, degree, nonzero)
    }
}

fn parse_rational(text: &str) -> Result<Rational, ExactAlgError> {
    let bad = || ExactAlgError::Parse(format!("bad coefficient `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let is_const = m.degree() == 0;
            if abs.is_one() {
                write!(f, "{}", if is_const { "1".to_string() } else { m.to_string() })?;
            } else if is_const {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn p(n: usize, s: &str) -> HomogeneousPolynomial {
        HomogeneousPolynomial::parse(n, s).unwrap()
    }

    #[test]
    fn partial_of_cube() {
        let x3 = p(1, "x0^3");
        assert_eq!(x3.partial(0).unwrap(), p(1, "3*x0^2"));
    }

    #[test]
    fn partial_in_absent_variable_is_zero() {
        let y2 = p(2, "x1^2");
        let d = y2.partial(0).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.degree(), 1);
    }

    #[test]
    fn difference_of_squares() {
        let a = p(2, "x0 + x1");
        let b = p(2, "x0 - x1");
        assert_eq!(a.mul(&b), p(2, "x0^2 - x1^2"));
    }

    #[test]
    fn zero_polynomial_adds_at_any_degree() {
        let z = HomogeneousPolynomial::zero(3, 7);
        let q = p(3, "x0*x1 + x2^2");
        assert_eq!(z.try_add(&q).unwrap(), q);
        assert_eq!(q.try_add(&z).unwrap(), q);
        assert!(q.try_add(&p(3, "x0")).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = p(4, "x0^3 + 2*x1*x2*x3 - 1/2*x3^3");
        assert_eq!(q.degree(), 3);
        assert_eq!(p(4, &q.to_string()), q);
        assert_eq!(q.coefficient(&Monomial::new(vec![0, 0, 0, 3])), ratio(-1, 2));
    }

    #[test]
    fn parse_rejects_inhomogeneous() {
        assert!(HomogeneousPolynomial::parse(2, "x0^2 + x1").is_err());
        assert!(HomogeneousPolynomial::parse(2, "x5").is_err());
    }

    #[test]
    fn evaluate_and_vectors() {
        let q = p(3, "x0^2 - 3*x1*x2");
        assert_eq!(q.evaluate(&[rat(2), rat(1), rat(1)]), rat(1));
        let basis = DegreeBasis::new(3, 2);
        let v = q.to_vector(&basis);
        assert_eq!(HomogeneousPolynomial::from_vector(&basis, &v), q);
    }

    #[test]
    fn euler_identity_for_fermat() {
        let h = HomogeneousPolynomial::fermat(4, 3);
        let mut acc = HomogeneousPolynomial::zero(4, 3);
        for (i, g) in h.gradient().iter().enumerate() {
            acc = acc.try_add(&g.mul(&HomogeneousPolynomial::var(4, i))).unwrap();
        }
        assert_eq!(acc, h.scale(&rat(3)));
    }
}
