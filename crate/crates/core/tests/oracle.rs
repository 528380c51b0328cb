//! Hand-computed values for the representation oracle in `common`, so the
//! acceptance comparisons rest on a checked reference.

mod common;

use common::{simple_profile, Algebra, SimpleProfile};

#[test]
fn two_vertex_line() {
    // P_0 = (S_0 over S_1), P_1 = S_1: 0 → P_1 → P_0 → S_0 → 0.
    let alg = Algebra::new(&[2, 1], false);
    assert_eq!(simple_profile(&alg, 0), SimpleProfile { pdim: Some(1), ext: vec![0, 1] });
    assert_eq!(simple_profile(&alg, 1), SimpleProfile { pdim: Some(0), ext: vec![2] });
    assert_eq!(alg.hom(&alg.projective(0), &alg.projective(1)), 0);
    assert_eq!(alg.hom(&alg.projective(1), &alg.projective(0)), 1);
    assert_eq!(alg.hom(&alg.projective(0), &alg.projective(0)), 1);
}

#[test]
fn radical_square_zero_line() {
    // Ω S_0 = S_1, Ω S_1 = S_2 = P_2; S_1 is the socle of P_0, so
    // Hom(S_1, A) ≠ 0.
    let alg = Algebra::new(&[2, 2, 1], false);
    let s0 = simple_profile(&alg, 0);
    assert_eq!(s0.pdim, Some(2));
    assert!(s0.regular(2));
    assert_eq!(simple_profile(&alg, 1), SimpleProfile { pdim: Some(1), ext: vec![1, 1] });
}

#[test]
fn selfinjective_cycle_has_infinite_dimension() {
    let alg = Algebra::new(&[2, 2], true);
    assert_eq!(simple_profile(&alg, 0).pdim, None);
    assert_eq!(simple_profile(&alg, 1).pdim, None);
}

#[test]
fn long_projectives_wrap_around() {
    // c_0 = 3 on a 2-cycle: P_0 has two basis paths at vertex 0.
    let alg = Algebra::new(&[3, 2], true);
    let p0 = alg.projective(0);
    assert_eq!(p0.dim(), 3);
    assert_eq!(alg.hom(&p0, &p0), 2);
    // Ω S_0 = P_1; Ω S_1 = S_0, so S_1 needs one more step.
    assert_eq!(simple_profile(&alg, 0).pdim, Some(1));
    assert_eq!(simple_profile(&alg, 1).pdim, Some(2));
}
