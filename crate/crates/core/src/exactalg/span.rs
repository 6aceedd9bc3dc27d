use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rational;

/// Sparse vector: column index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Incrementally built subspace of `Q^n`, held as fully reduced sparse rows.
///
/// Each row has coefficient 1 at its pivot, which is the row's largest
/// column, and no other row has a nonzero entry at that pivot. The columns that
/// are not pivots therefore give the greedy complement of the span in
/// increasing column order.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Columns in `0..ambient_dim` that are not pivots, ascending.
    pub fn non_pivot_columns(&self, ambient_dim: usize) -> Vec<usize> {
        (0..ambient_dim).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v: SparseVec = v.iter().filter(|(_, c)| !c.is_zero()).map(|(&k, c)| (k, c.clone())).collect();
        // Largest remaining pivot column first; rows only touch smaller columns
        // besides their own pivot, which is cleared for good.
        let mut cursor: Option<usize> = None;
        loop {
            let next = match cursor {
                None => v.keys().rev().find(|k| self.rows.contains_key(k)).copied(),
                Some(c) => v.range(..c).rev().map(|(k, _)| *k).find(|k| self.rows.contains_key(k)),
            };
            let Some(col) = next else { break };
            let factor = v.remove(&col).expect("present");
            for (&k, c) in &self.rows[&col] {
                if k == col {
                    continue;
                }
                let e = v.entry(k).or_insert_with(Rational::zero);
                *e -= &factor * c;
                if e.is_zero() {
                    v.remove(&k);
                }
            }
            cursor = Some(col);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next_back() else { return false };
        let inv = Rational::one() / lead;
        for c in r.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.remove(&pivot) {
                for (&k, c) in &r {
                    if k == pivot {
                        continue;
                    }
                    let e = row.entry(k).or_insert_with(Rational::zero);
                    *e -= &f * c;
                    if e.is_zero() {
                        row.remove(&k);
                    }
                }
            }
        }
        r.insert(pivot, Rational::one());
        self.rows.insert(pivot, r);
        true
    }

    /// The reduced basis rows, keyed by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|(&k, v)| (k, v))
    }
}
