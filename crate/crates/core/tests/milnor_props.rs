use hsscohom::exactalg::HomogeneousPolynomial;
use hsscohom::milnor::{ideal_membership, jacobian_ideal, product_formula, random_form, MilnorAlgebra};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn faithfulness_formulations_agree() {
    let m = MilnorAlgebra::of(HomogeneousPolynomial::fermat(4, 3)).unwrap();
    for seed in 0..24u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let degree = 1 + (seed % 2) as u32;
        let f = random_form(4, degree, &mut rng);
        assert_eq!(m.is_faithful_by_injectivity(&f), m.is_faithful_full(&f), "seed {seed}");
    }
    // A coordinate square is a zero divisor.
    let x0sq = HomogeneousPolynomial::parse(4, "x0^2").unwrap();
    assert!(!m.is_faithful_full(&x0sq));
    assert!(!m.is_faithful_by_injectivity(&x0sq));
}

#[test]
fn fermat_hilbert_series() {
    for d in 3..=4 {
        for k in 3..=4 {
            let m = MilnorAlgebra::of(HomogeneousPolynomial::fermat(k, d)).unwrap();
            assert_eq!(m.hilbert_series(), product_formula(d, k));
            assert!(m.is_symmetric());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn membership_agrees_with_residue(seed in 0u64..1000, degree in 1u32..=4) {
        let h = HomogeneousPolynomial::fermat(3, 3);
        let m = MilnorAlgebra::of(h.clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_form(3, degree, &mut rng);
        let gens = jacobian_ideal(&h);
        let cof = ideal_membership(&g, &gens).unwrap();
        prop_assert_eq!(cof.is_some(), m.contains(&g));
        if let Some(c) = cof {
            let mut acc = HomogeneousPolynomial::zero(3, degree);
            for (ci, gi) in c.iter().zip(&gens) {
                if !ci.is_zero() {
                    acc = acc.try_add(&ci.mul(gi)).unwrap();
                }
            }
            prop_assert_eq!(acc, g);
        }
    }
}
