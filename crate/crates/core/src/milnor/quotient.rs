use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::exactalg::{
    DegreeBasis, EchelonSpan, HomogeneousPolynomial, Monomial, Rational, RationalMatrix, SparseVec,
};

use super::MilnorError;

/// One degree of a graded quotient `R/I`: the monomial basis of `R_k`, the
/// ideal piece `I_k` in reduced echelon form and the residue monomials.
#[derive(Debug)]
pub struct DegreePiece {
    pub basis: DegreeBasis,
    pub ideal: EchelonSpan,
    /// Positions in `basis` of the monomials whose residues form a basis of
    /// the quotient, ascending.
    pub residue_columns: Vec<usize>,
    residue_index: HashMap<usize, usize>,
}

impl DegreePiece {
    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn quotient_dim(&self) -> usize {
        self.residue_columns.len()
    }

    pub fn residue_monomials(&self) -> Vec<Monomial> {
        self.residue_columns.iter().map(|&c| self.basis.monomials()[c].clone()).collect()
    }

    /// Coordinates of a remainder vector (already reduced) in the residue basis.
    fn coordinates(&self, reduced: &SparseVec) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.residue_columns.len()];
        for (col, c) in reduced {
            out[self.residue_index[col]] = c.clone();
        }
        out
    }
}

/// Quotient of the polynomial ring by a homogeneous ideal, computed one
/// degree at a time on demand. Pieces are memoized; concurrent readers see
/// the same values.
#[derive(Debug)]
pub struct GradedQuotient {
    num_vars: usize,
    generators: Vec<HomogeneousPolynomial>,
    pieces: Mutex<HashMap<u32, Arc<DegreePiece>>>,
}

impl GradedQuotient {
    pub fn new(num_vars: usize, generators: Vec<HomogeneousPolynomial>) -> Result<Self, MilnorError> {
        for g in &generators {
            if g.num_vars() != num_vars {
                return Err(MilnorError::InvalidInput(format!(
                    "generator in {} variables, expected {num_vars}",
                    g.num_vars()
                )));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedQuotient { num_vars, generators, pieces: Mutex::new(HashMap::new()) })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[HomogeneousPolynomial] {
        &self.generators
    }

    pub fn piece(&self, k: u32) -> Arc<DegreePiece> {
        if let Some(p) = self.pieces.lock().expect("poisoned").get(&k) {
            return Arc::clone(p);
        }
        // Built outside the lock; a racing thread computes the same value and
        // the first insert wins.
        let built = Arc::new(self.build_piece(k));
        let mut map = self.pieces.lock().expect("poisoned");
        Arc::clone(map.entry(k).or_insert(built))
    }

    fn build_piece(&self, k: u32) -> DegreePiece {
        let basis = DegreeBasis::new(self.num_vars, k);
        let ideal = span_of_multiples(&self.generators, &basis);
        let residue_columns = ideal.non_pivot_columns(basis.len());
        let residue_index = residue_columns.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        DegreePiece { basis, ideal, residue_columns, residue_index }
    }

    pub fn quotient_dim(&self, k: u32) -> usize {
        self.piece(k).quotient_dim()
    }

    pub fn ideal_dim(&self, k: u32) -> usize {
        self.piece(k).ideal_dim()
    }

    pub fn residue_monomials(&self, k: u32) -> Vec<Monomial> {
        self.piece(k).residue_monomials()
    }

    /// Coordinates of the residue class of `g` in the residue basis of its degree.
    pub fn residue(&self, g: &HomogeneousPolynomial) -> Vec<Rational> {
        let piece = self.piece(g.degree());
        let v = to_sparse(g, &piece.basis);
        piece.coordinates(&piece.ideal.reduce(&v))
    }

    pub fn contains(&self, g: &HomogeneousPolynomial) -> bool {
        if g.is_zero() {
            return true;
        }
        let piece = self.piece(g.degree());
        piece.ideal.contains(&to_sparse(g, &piece.basis))
    }

    /// Matrix of multiplication by `f` from degree `i` to degree `i + deg f`,
    /// in the residue bases (rows index the target).
    pub fn multiplication_map(&self, f: &HomogeneousPolynomial, i: u32) -> RationalMatrix {
        let src = self.piece(i);
        let tgt = self.piece(i + f.degree());
        let mut m = RationalMatrix::zero(tgt.quotient_dim(), src.quotient_dim());
        for (col, mono) in src.residue_monomials().iter().enumerate() {
            let prod = f.mul_monomial(mono, &Rational::from_integer(1.into()));
            let red = tgt.ideal.reduce(&to_sparse(&prod, &tgt.basis));
            for (c, v) in red {
                m.set(tgt.residue_index[&c], col, v);
            }
        }
        m
    }

    /// Whether `x f` has maximal rank on degree `i`.
    pub fn has_maximal_rank(&self, f: &HomogeneousPolynomial, i: u32) -> bool {
        self.multiplication_map(f, i).is_full_rank()
    }

    pub fn is_injective(&self, f: &HomogeneousPolynomial, i: u32) -> bool {
        let m = self.multiplication_map(f, i);
        m.rank() == m.cols()
    }
}

pub(crate) fn to_sparse(g: &HomogeneousPolynomial, basis: &DegreeBasis) -> SparseVec {
    g.terms()
        .map(|(m, c)| (basis.index_of(m).expect("monomial of matching degree"), c.clone()))
        .collect()
}

/// Echelon span of all products `m * g` of a monomial `m` with a generator
/// `g`, landing in the degree of `basis`.
pub(crate) fn span_of_multiples(gens: &[HomogeneousPolynomial], basis: &DegreeBasis) -> EchelonSpan {
    let k = basis.degree();
    let mut span = EchelonSpan::new();
    let full = basis.len();
    for g in gens {
        if g.is_zero() || g.degree() > k {
            continue;
        }
        for m in DegreeBasis::new(basis.num_vars(), k - g.degree()).monomials() {
            if span.dim() == full {
                return span;
            }
            let v: SparseVec = g
                .terms()
                .map(|(gm, c)| (basis.index_of(&gm.mul(m)).expect("degree"), c.clone()))
                .collect();
            span.insert(&v);
        }
    }
    span
}
