use hsscohom::exactalg::{binomial, monomials_of_degree, rat, DegreeBasis, HomogeneousPolynomial, RationalMatrix};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(rows in small_matrix()) {
        let m = RationalMatrix::from_i64_rows(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_survives_row_scaling(rows in small_matrix(), k in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let m = RationalMatrix::from_i64_rows(&rows);
        let scaled: Vec<Vec<i64>> = rows.iter().enumerate()
            .map(|(i, r)| if i == 0 { r.iter().map(|x| x * k).collect() } else { r.clone() })
            .collect();
        prop_assert_eq!(m.rank(), RationalMatrix::from_i64_rows(&scaled).rank());
    }

    #[test]
    fn rank_nullity(rows in small_matrix()) {
        let m = RationalMatrix::from_i64_rows(&rows);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_recovers_consistent_right_sides(rows in small_matrix(), seed in prop::collection::vec(-3i64..=3, 6)) {
        let m = RationalMatrix::from_i64_rows(&rows);
        let x0: Vec<_> = seed.iter().take(m.cols()).map(|&v| rat(v)).collect();
        let b = m.mul_vec(&x0).unwrap();
        let x = m.solve_linear(&b).unwrap().expect("consistent");
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn coefficient_vector_round_trip(coeffs in prop::collection::vec(-5i64..=5, 10)) {
        let basis = DegreeBasis::new(3, 2);
        let v: Vec<_> = coeffs.iter().take(basis.len()).map(|&c| rat(c)).collect();
        let p = HomogeneousPolynomial::from_vector(&basis, &v);
        prop_assert_eq!(p.to_vector(&basis), v);
        let reparsed = HomogeneousPolynomial::parse(3, &p.to_string()).unwrap().with_degree(2).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}

#[test]
fn monomial_counts_are_binomial() {
    for n in 1..=5usize {
        for d in 0..=6u32 {
            let expected = binomial((n as u64) + d as u64 - 1, d as u64).to_usize().unwrap();
            assert_eq!(monomials_of_degree(n, d).len(), expected);
        }
    }
}

#[test]
fn euler_identity() {
    let h = HomogeneousPolynomial::parse(4, "x0^3 + 2*x1*x2*x3 - x3^3").unwrap();
    let mut acc = HomogeneousPolynomial::zero(4, 3);
    for (i, g) in h.gradient().iter().enumerate() {
        acc = acc.try_add(&g.mul(&HomogeneousPolynomial::var(4, i))).unwrap();
    }
    assert_eq!(acc, h.scale(&rat(3)));
}
