use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactAlgError, Rational};

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, ExactAlgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(ExactAlgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(RationalMatrix { rows: n, cols, data })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactAlgError> {
        if v.len() != self.cols {
            return Err(ExactAlgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactAlgError> {
        if self.cols != other.rows {
            return Err(ExactAlgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| clear_denominators(self.row(r))).collect()
    }

    /// Rank by fraction-free (Bareiss) elimination on integer rows.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        bareiss_rank(&mut a, self.cols)
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.rows.min(self.cols)
    }

    /// Basis of the right null space, one vector per free column, each scaled
    /// to a primitive integer vector.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut a = self.integer_rows();
        let pivots = gauss_jordan(&mut a, self.cols);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            // Row i reads p_i * x_{c_i} + a_{i,free} * x_free = 0 after setting
            // the other free variables to zero.
            let mut denom = BigInt::one();
            for &(r, c) in &pivots {
                let _ = r;
                denom = denom.lcm(&a[r][c]);
            }
            let mut v = vec![BigInt::zero(); self.cols];
            v[free] = denom.clone();
            for &(r, c) in &pivots {
                v[c] = -(&a[r][free] * &denom) / &a[r][c];
            }
            basis.push(primitive(v).into_iter().map(Rational::from_integer).collect());
        }
        basis
    }

    /// One solution of `A x = b`, or `None` if the system is inconsistent.
    pub fn solve_linear(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, ExactAlgError> {
        if b.len() != self.rows {
            return Err(ExactAlgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut row: Vec<Rational> = self.row(r).to_vec();
                row.push(b[r].clone());
                clear_denominators(&row)
            })
            .collect();
        let pivots = gauss_jordan(&mut a, self.cols);
        for row in a.iter().skip(pivots.len()) {
            if !row[self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(r, c) in &pivots {
            x[c] = Rational::new(a[r][self.cols].clone(), a[r][c].clone());
        }
        Ok(Some(x))
    }
}

/// Integer row proportional to `row`.
pub(crate) fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        for r in rank + 1..rows {
            let f = a[r][c].clone();
            for k in c..cols {
                let v = (&piv * &a[r][k] - &f * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Integer Gauss-Jordan on the first `cols` columns, carrying any extra
/// columns along. Each row is kept primitive. Returns (row, column) pivots;
/// pivot rows occupy the first positions.
fn gauss_jordan(a: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..cols {
        if r0 == rows {
            break;
        }
        let Some(p) = (r0..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(r0, p);
        if a[r0][c].is_negative() {
            for x in a[r0].iter_mut() {
                *x = -x.clone();
            }
        }
        for r in 0..rows {
            if r == r0 || a[r][c].is_zero() {
                continue;
            }
            let g = a[r0][c].gcd(&a[r][c]);
            let mp = &a[r0][c] / &g;
            let mr = &a[r][c] / &g;
            let pivot_row = a[r0].clone();
            let row = &mut a[r];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &mp - &mr * y;
            }
            let reduced = primitive(std::mem::take(row));
            *row = reduced;
        }
        pivots.push((r0, c));
        r0 += 1;
    }
    pivots
}
