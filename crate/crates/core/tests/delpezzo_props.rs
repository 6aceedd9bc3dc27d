use hsscohom::cohomology::bott_dimension;
use hsscohom::delpezzo::{enumerate_lines, invertible_subsheaf_search, projective_one_forms, zeros_of_form, PicardLattice};
use num_traits::ToPrimitive;

#[test]
fn lines_have_the_right_numerics() {
    let lattice = PicardLattice::new(6).unwrap();
    let k = lattice.canonical();
    for line in enumerate_lines(&lattice) {
        assert_eq!(lattice.intersect(&line, &line).unwrap(), -1);
        assert_eq!(lattice.intersect(&line, &k.neg()).unwrap(), 1);
    }
}

#[test]
fn one_forms_match_twisted_cotangent_sections() {
    for a in 0..=6u32 {
        assert_eq!(projective_one_forms(a).dimension, bott_dimension(2, 1, 0, a as i64).to_usize().unwrap());
    }
}

#[test]
fn basis_forms_of_degree_two_have_isolated_zeros() {
    for w in projective_one_forms(2).basis {
        let z = zeros_of_form(&w, 4).unwrap();
        assert_eq!(z.points.len(), 1);
    }
}

#[test]
fn search_is_stable() {
    let a = invertible_subsheaf_search().unwrap();
    let b = invertible_subsheaf_search().unwrap();
    assert_eq!(a, b);
    assert_eq!(a.survivors.len(), 1);
}
