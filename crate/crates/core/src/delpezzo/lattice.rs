use std::fmt;

use serde::{Deserialize, Serialize};

use super::DelPezzoError;

/// `Pic` of the plane blown up at `r <= 8` points: basis `E_0` (a line) and
/// the exceptional curves `E_1..E_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardLattice {
    pub r: usize,
}

/// `a E_0 + sum b_j E_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        DivisorClass { a, b }
    }

    pub fn e0(r: usize) -> Self {
        DivisorClass { a: 1, b: vec![0; r] }
    }

    /// The exceptional class `E_j`, `1 <= j <= r`.
    pub fn exceptional(r: usize, j: usize) -> Self {
        let mut b = vec![0; r];
        b[j - 1] = 1;
        DivisorClass { a: 0, b }
    }

    pub fn add(&self, other: &Self) -> Self {
        DivisorClass { a: self.a + other.a, b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect() }
    }

    pub fn neg(&self) -> Self {
        DivisorClass { a: -self.a, b: self.b.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        write!(f, "({}; {})", self.a, b.join(","))
    }
}

impl PicardLattice {
    pub fn new(r: usize) -> Result<Self, DelPezzoError> {
        if r > 8 {
            return Err(DelPezzoError::InvalidInput(format!("at most 8 points, got {r}")));
        }
        Ok(PicardLattice { r })
    }

    /// `K = -3 E_0 + sum E_j`.
    pub fn canonical(&self) -> DivisorClass {
        DivisorClass { a: -3, b: vec![1; self.r] }
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64, DelPezzoError> {
        if d1.b.len() != self.r || d2.b.len() != self.r {
            return Err(DelPezzoError::InvalidInput(format!(
                "classes of length {} and {} on a lattice with r = {}",
                d1.b.len(),
                d2.b.len(),
                self.r
            )));
        }
        Ok(d1.a * d2.a - d1.b.iter().zip(&d2.b).map(|(x, y)| x * y).sum::<i64>())
    }

    /// Whether `D^2 = D.K = -1`.
    pub fn is_line(&self, d: &DivisorClass) -> Result<bool, DelPezzoError> {
        let k = self.canonical();
        Ok(self.intersect(d, d)? == -1 && self.intersect(d, &k)? == -1)
    }
}

/// All classes with `D^2 = D.K = -1`, sorted.
///
/// Writing `D = a E_0 + sum b_j E_j`, the conditions read `sum b_j^2 = a^2 + 1`
/// and `sum b_j = 1 - 3a`; Cauchy-Schwarz then bounds `a` by
/// `(9 - r) a^2 - 6 a + 1 - r <= 0`.
pub fn enumerate_lines(lattice: &PicardLattice) -> Vec<DivisorClass> {
    let r = lattice.r;
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let admissible = |a: i64| (9 - r as i64) * a * a - 6 * a + 1 - r as i64 <= 0;
    // The admissible range lies inside [-1, 7] for every r <= 8.
    for a in (-2..=8).filter(|&a| admissible(a)) {
        let squares = a * a + 1;
        let sum = 1 - 3 * a;
        let mut b = Vec::with_capacity(r);
        fill(r, squares, sum, &mut b, &mut |b| out.push(DivisorClass { a, b: b.to_vec() }));
    }
    out.sort();
    out
}

/// All integer vectors of length `slots` extending `prefix` with the given
/// sum of squares and sum.
fn fill(slots: usize, squares: i64, sum: i64, prefix: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    let left = slots - prefix.len();
    if left == 0 {
        if squares == 0 && sum == 0 {
            emit(prefix);
        }
        return;
    }
    // The remaining entries need sum^2 <= left * squares.
    if sum * sum > left as i64 * squares {
        return;
    }
    let bound = (squares as f64).sqrt() as i64 + 1;
    for x in -bound..=bound {
        if x * x > squares {
            continue;
        }
        prefix.push(x);
        fill(slots, squares - x * x, sum - x, prefix, emit);
        prefix.pop();
    }
}

/// Lines split by their `E_0` coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineFamilies {
    /// `a = 0`: the exceptional curves.
    pub exceptional: usize,
    /// `a = 1`: lines through two points.
    pub lines_through_two: usize,
    /// `a = 2`: conics through five points.
    pub conics: usize,
    /// `a >= 3`.
    pub higher: usize,
}

pub fn line_families(lines: &[DivisorClass]) -> LineFamilies {
    let count = |a: i64| lines.iter().filter(|d| d.a == a).count();
    LineFamilies {
        exceptional: count(0),
        lines_through_two: count(1),
        conics: count(2),
        higher: lines.iter().filter(|d| d.a >= 3).count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_degree() {
        for r in 0..=8 {
            let l = PicardLattice::new(r).unwrap();
            let k = l.canonical();
            assert_eq!(l.intersect(&k, &k).unwrap(), 9 - r as i64);
        }
        assert!(PicardLattice::new(9).is_err());
    }

    #[test]
    fn basic_intersections() {
        let l = PicardLattice::new(6).unwrap();
        assert_eq!(l.intersect(&DivisorClass::e0(6), &DivisorClass::exceptional(6, 3)).unwrap(), 0);
        let d = DivisorClass::new(1, vec![-1, -1, 0, 0, 0, 0]);
        assert_eq!(l.intersect(&d, &d).unwrap(), -1);
        assert!(l.is_line(&DivisorClass::exceptional(6, 1)).unwrap());
        assert!(l.is_line(&DivisorClass::new(2, vec![-1, -1, -1, -1, -1, 0])).unwrap());
        assert!(l.intersect(&d, &DivisorClass::e0(5)).is_err());
    }

    #[test]
    fn twenty_seven_lines() {
        let l = PicardLattice::new(6).unwrap();
        let lines = enumerate_lines(&l);
        assert_eq!(lines.len(), 27);
        let f = line_families(&lines);
        assert_eq!((f.exceptional, f.lines_through_two, f.conics, f.higher), (6, 15, 6, 0));
    }

    #[test]
    fn line_counts_for_all_r() {
        let expected = [0, 1, 3, 6, 10, 16, 27, 56, 240];
        for (r, &n) in expected.iter().enumerate() {
            assert_eq!(enumerate_lines(&PicardLattice::new(r).unwrap()).len(), n, "r={r}");
        }
    }
}
