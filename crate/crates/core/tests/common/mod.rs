//! Independent oracles shared by the integration tests and the acceptance
//! runner.
#![allow(dead_code)]

use hsscohom::exactalg::{DegreeBasis, Rational, RationalMatrix};
use num_traits::One;

/// `h^0(P^n, Omega^p(l))` as the kernel of contraction with the Euler field
/// on `Lambda^p V* (x) S_{l-p}`.
pub fn euler_contraction_h0(n: usize, p: usize, l: i64) -> usize {
    let vars = n + 1;
    if p > n || l < p as i64 {
        return 0;
    }
    let src_poly = DegreeBasis::new(vars, (l - p as i64) as u32);
    if p == 0 {
        return src_poly.len();
    }
    let tgt_poly = DegreeBasis::new(vars, (l - p as i64 + 1) as u32);
    let src_wedge = subsets(vars, p);
    let tgt_wedge = subsets(vars, p - 1);
    let tgt_index = |s: &[usize]| tgt_wedge.iter().position(|t| t == s).expect("subset");
    let cols = src_wedge.len() * src_poly.len();
    let rows = tgt_wedge.len() * tgt_poly.len();
    let mut m = RationalMatrix::zero(rows, cols);
    for (a, set) in src_wedge.iter().enumerate() {
        for (b, mono) in src_poly.monomials().iter().enumerate() {
            let col = a * src_poly.len() + b;
            for (k, &var) in set.iter().enumerate() {
                let mut rest = set.clone();
                rest.remove(k);
                let row = tgt_index(&rest) * tgt_poly.len() + tgt_poly.index_of(&mono.times_var(var)).expect("degree");
                let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                let cur = m.get(row, col) + sign;
                m.set(row, col, cur);
            }
        }
    }
    cols - m.rank()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Smallest integer strictly above `num/den` (`den > 0`), by integer floor.
pub fn integer_above(num: i128, den: i128) -> i64 {
    (num.div_euclid(den) + 1) as i64
}

/// Hand evaluation of `(p-1)/p * delta + 1/(p(p-1)hn)` as a fraction, for
/// integer `delta` and `hn`.
pub fn langer_fraction(p: i128, delta: i128, hn: i128) -> (i128, i128) {
    // ((p-1)^2 delta hn + 1) / (p (p-1) hn)
    ((p - 1) * (p - 1) * delta * hn + 1, p * (p - 1) * hn)
}
