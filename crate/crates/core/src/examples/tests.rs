use super::*;
use crate::hopf::check_hopf;
use crate::report::AxiomId;
use crate::ydpost::{extract_post_lie, subadjacent_hopf};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn q(n: i64) -> Scalar {
    Scalar::from_int(n, Q)
}

fn e(terms: &[(usize, i64)]) -> Elem {
    el(Q, terms)
}

#[test]
fn sweedler_action_rows_for_k_two() {
    let s = build_sweedler(q(2), Q).unwrap();
    // x ⇀ x = 2(1 - g), x·g ⇀ x = 2(g - 1)
    assert_eq!(*s.action.basis(2, 2), e(&[(0, 2), (1, -2)]));
    assert_eq!(*s.action.basis(3, 2), e(&[(0, -2), (1, 2)]));
    assert_eq!(*s.action.basis(1, 3), e(&[(3, -1)]));
    assert!(s.action.basis(2, 0).is_zero());
}

#[test]
fn sweedler_with_k_zero_is_still_valid() {
    let s = build_sweedler(q(0), Q).unwrap();
    assert!(s.action.basis(2, 2).is_zero());
    assert_eq!(*s.carrier.algebra.mul_basis(2, 2), Elem::zero());
}

#[test]
fn sweedler_rejects_characteristic_two() {
    let f2 = FieldSpec::prime(2).unwrap();
    assert!(build_sweedler(Scalar::from_int(1, f2), f2).is_err());
}

#[test]
fn sweedler_rejects_parameter_from_another_field() {
    let f5 = FieldSpec::prime(5).unwrap();
    assert!(build_sweedler(q(1), f5).is_err());
}

#[test]
fn sweedler_over_a_prime_field() {
    let f5 = FieldSpec::prime(5).unwrap();
    assert!(build_sweedler(Scalar::from_int(3, f5), f5).is_ok());
}

#[test]
fn e1_matches_sweedler() {
    for k in [0, 1, -3] {
        let en = build_en(1, &[vec![q(k)]], Q).unwrap();
        let sw = build_sweedler(q(k), Q).unwrap();
        assert_eq!(en, sw, "k = {k}");
    }
}

#[test]
fn e2_identity_matrix() {
    let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
    let s = build_en(2, &a, Q).unwrap();
    assert_eq!(s.dim(), 8);
    let alg = &s.carrier.algebra;
    let idx = |l: &str| alg.labels.iter().position(|x| x == l).unwrap();
    let (x1, x2) = (idx("x1"), idx("x2"));
    assert!(s.action.basis(x1, x2).is_zero());
    assert_eq!(*s.action.basis(x1, x1), e(&[(idx("1"), 1), (idx("g"), -1)]));
    assert_eq!(s.params.get("A12"), Some(&q(0)));
}

#[test]
fn en_rejects_asymmetric_or_oversized_input() {
    let a = vec![vec![q(1), q(1)], vec![q(0), q(1)]];
    assert!(build_en(2, &a, Q).is_err());
    assert!(build_en(9, &vec![vec![q(0); 9]; 9], Q).is_err());
    assert!(ExampleSpec::En { a: vec![] }.build().is_err());
}

#[test]
fn suzuki_dimension_and_table() {
    let s = build_suzuki(q(1), q(1), Q).unwrap();
    assert_eq!(s.dim(), 16);
    let alg = &s.carrier.algebra;
    let idx = |l: &str| alg.labels.iter().position(|x| x == l).unwrap();
    let (a, b, c, d) = (idx("a"), idx("b"), idx("c"), idx("d"));
    assert_eq!(*s.action.basis(a, a), Elem::basis(d, Q));
    assert_eq!(*s.action.basis(d, b), Elem::basis(c, Q));
    for row in [b, c] {
        for col in [a, b, c, d] {
            assert!(s.action.basis(row, col).is_zero());
        }
    }
    assert_eq!(s.beta.as_ref(), Some(&s.action));
}

#[test]
fn suzuki_rejects_incompatible_parameters() {
    assert!(build_suzuki(q(2), q(1), Q).is_err());
}

#[test]
fn adjoint_of_cocommutative_inputs() {
    let (c2, l2) = cyclic_group(2);
    let (s3, l3) = symmetric_group_s3();
    let u = restricted_enveloping(3).unwrap();
    for h in [group_algebra(&c2, l2, Q).unwrap(), group_algebra(&s3, l3, Q).unwrap(), u] {
        let s = build_adjoint(&h).unwrap();
        let sub = subadjacent_hopf(&s).unwrap();
        assert_eq!(sub.algebra.mul, h.algebra.mul);
        assert_eq!(sub.antipode, h.antipode);
    }
}

#[test]
fn adjoint_of_group_algebra_is_conjugation() {
    let (s3, l3) = symmetric_group_s3();
    let h = group_algebra(&s3, l3, Q).unwrap();
    let s = build_adjoint(&h).unwrap();
    let inv = |x: usize| (0..6).find(|&y| s3[x][y] == 0).unwrap();
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(*s.action.basis(x, y), Elem::basis(s3[s3[x][y]][inv(x)], Q));
        }
    }
}

#[test]
fn adjoint_of_sweedler_is_rejected() {
    // The adjoint action of H4 is not a coalgebra map: Δ(x⇀g) has 1⊗gx
    // where (x1⇀g)⊗(x2⇀g) has g⊗gx.
    let h = sweedler_hopf(Q);
    assert!(check_hopf(&h).passed());
    let err = build_adjoint(&h).unwrap_err().to_string();
    assert!(err.contains("P-COALG"), "{err}");
}

#[test]
fn adjoint_rejects_a_non_hopf_input() {
    let mut h = sweedler_hopf(Q);
    h.antipode.images[2] = h.antipode.images[2].neg();
    assert!(build_adjoint(&h).is_err());
}

#[test]
fn s3_inversion_linearization() {
    let (t, l) = symmetric_group_s3();
    let grb = conjugation_inversion_rb(&t, &l);
    assert!(check_group_rb(&grb).passed());
    let s = build_group_rb_linearization(&grb, Q).unwrap();
    let sub = subadjacent_hopf(&s).unwrap();
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(*sub.algebra.mul_basis(x, y), Elem::basis(t[y][x], Q));
        }
    }
}

#[test]
fn identity_on_s3_is_not_a_conjugation_rb() {
    let (t, l) = symmetric_group_s3();
    let mut grb = conjugation_inversion_rb(&t, &l);
    grb.r = (0..6).collect();
    assert!(!check_group_rb(&grb).passed());
    assert!(build_group_rb_linearization(&grb, Q).is_err());
}

#[test]
fn trivial_structure() {
    let s = build_trivial(Q).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(extract_post_lie(&s).unwrap().dim, 0);
}

#[test]
fn restricted_enveloping_over_f3() {
    let h = restricted_enveloping(3).unwrap();
    assert_eq!(h.dim(), 9);
    assert!(check_hopf(&h).passed());
    let s = build_adjoint(&h).unwrap();
    let pl = extract_post_lie(&s).unwrap();
    assert_eq!(pl.dim, 2);
    assert!(crate::ydpost::check_post_lie(&pl).passed());
}

#[test]
fn word_labels_compress_runs() {
    assert_eq!(word_label(&["a", "b"], &[]), "1");
    assert_eq!(word_label(&["a", "b"], &[0, 0, 0, 1]), "a^3·b");
}

#[test]
fn every_builder_certifies_its_output() {
    for s in [build_sweedler(q(1), Q).unwrap(), build_trivial(Q).unwrap()] {
        let r = check_yd_post_hopf(&s);
        assert!(r.passed());
        assert!(r.get(AxiomId::PDelta).is_some());
    }
}
