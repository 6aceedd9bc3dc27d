use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A monomial `x_0^{e_0} ... x_{k-1}^{e_{k-1}}`.
///
/// Ordering is graded-lexicographic: lower total degree first, and within a
/// degree the monomial with the larger leading exponents comes first, so the
/// degree-2 monomials in two variables are ordered `x0^2, x0*x1, x1^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exponents: vec![0; num_vars] }
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[index] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiplies by the variable `x_index`.
    pub fn times_var(&self, index: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[index] += 1;
        Monomial { exponents }
    }

    /// Formal derivative with respect to `x_index`: the exponent that comes
    /// down and the resulting monomial, or `None` when the derivative is zero.
    pub fn partial(&self, index: usize) -> Option<(u32, Monomial)> {
        let e = self.exponents[index];
        if e == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[index] -= 1;
        Some((e, Monomial { exponents }))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of `degree` in `num_vars` variables, in canonical order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, remaining - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(num_vars), degree, num_vars, &mut out);
    out
}

/// The monomial basis of one degree piece together with a reverse index.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(num_vars, degree);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DegreeBasis { num_vars, degree, monomials, index }
    }

    /// Basis of a negative degree: the empty list.
    pub fn empty(num_vars: usize) -> Self {
        DegreeBasis { num_vars, degree: 0, monomials: Vec::new(), index: HashMap::new() }
    }

    /// Basis for a possibly negative degree.
    pub fn for_degree(num_vars: usize, degree: i64) -> Self {
        if degree < 0 {
            Self::empty(num_vars)
        } else {
            Self::new(num_vars, degree as u32)
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variables_degree_two() {
        let ms = monomials_of_degree(2, 2);
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x0^2", "x0*x1", "x1^2"]);
    }

    #[test]
    fn constant_monomial_only_in_degree_zero() {
        for k in 1..6 {
            let ms = monomials_of_degree(k, 0);
            assert_eq!(ms.len(), 1);
            assert_eq!(ms[0], Monomial::one(k));
        }
    }

    #[test]
    fn five_variables_degree_three() {
        // Direct count of exponent vectors summing to 3.
        let mut count = 0;
        for a in 0..=3u32 {
            for b in 0..=3 - a {
                for c in 0..=3 - a - b {
                    for d in 0..=3 - a - b - c {
                        let _e = 3 - a - b - c - d;
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 35);
        assert_eq!(monomials_of_degree(5, 3).len(), count);
    }

    #[test]
    fn canonical_order_is_sorted() {
        let ms = monomials_of_degree(4, 3);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn partial_of_monomial() {
        let m = Monomial::new(vec![3, 1]);
        assert_eq!(m.partial(0), Some((3, Monomial::new(vec![2, 1]))));
        assert_eq!(Monomial::new(vec![0, 2]).partial(0), None);
    }
}
