use super::*;
use crate::examples::{
    build_adjoint, build_en, build_group_rb_linearization, build_sweedler, build_trivial,
    conjugation_inversion_rb, cyclic_group, restricted_enveloping, symmetric_group_s3, trivial_action_rb,
};
use crate::field::Scalar;
use crate::report::Status;

const Q: FieldSpec = FieldSpec::RATIONALS;

fn sweedler() -> YDPostHopf {
    build_sweedler(Scalar::from_int(1, Q), Q).unwrap()
}

fn e2() -> YDPostHopf {
    let (one, zero) = (Scalar::from_int(1, Q), Scalar::from_int(0, Q));
    build_en(2, &[vec![one.clone(), zero.clone()], vec![zero, one]], Q).unwrap()
}

fn diag(entries: &[i64]) -> LinMap {
    LinMap::from_fn(entries.len(), entries.len(), |i| Elem::term(i, Scalar::from_int(entries[i], Q)))
}

#[test]
fn l_of_sweedler_is_a_full_operator_in_d() {
    let s = sweedler();
    let r = functor_l(&s).unwrap();
    let report = check_rel_rb(&r, RbMode::Full);
    assert!(report.passed(), "{}", report.to_text());
    assert!(in_category(&r, Category::D).unwrap());
    assert!(in_category(&r, Category::CPrime).unwrap());
    assert_eq!(antipode_sk(&r).unwrap(), s.carrier.s_map);
}

#[test]
fn derived_coaction_is_reported() {
    let mut r = functor_l(&sweedler()).unwrap();
    let supplied = r.coaction.take().unwrap();
    let report = check_rel_rb(&r, RbMode::Full);
    assert!(report.passed());
    assert!(!report.notes.is_empty());
    assert_eq!(coaction_d(&r).unwrap(), supplied);
    assert_eq!(coaction_cprime(&r), supplied);
}

#[test]
fn rank_one_operator_is_trivial_but_not_bijective() {
    // R(a) = ε(a)1 is a unital coalgebra map and satisfies RB-1.
    let mut r = functor_l(&sweedler()).unwrap();
    let one = r.h.algebra.one().clone();
    r.r_map = LinMap::from_fn(4, 4, |i| one.scaled(&r.k_coalg.counit[i]));
    let report = check_rel_rb(&r, RbMode::Full);
    assert_eq!(report.status(AxiomId::RbCoalg), Some(Status::Pass));
    assert_eq!(report.status(AxiomId::Rb1), Some(Status::Pass));
    let rb3 = report.get(AxiomId::Rb3).unwrap();
    assert_eq!(rb3.status, Status::Fail);
    assert_eq!(rb3.detail.as_deref(), Some("not bijective"));
}

#[test]
fn round_trips_through_l() {
    for s in [sweedler(), build_trivial(Q).unwrap(), e2()] {
        let r = functor_l(&s).unwrap();
        assert!(functor_m(&r).unwrap().tensors_eq(&s));
        assert!(functor_r(&r, Category::D).unwrap().tensors_eq(&s));
        assert!(functor_r(&r, Category::CPrime).unwrap().tensors_eq(&s));
    }
}

#[test]
fn isomorphism_witnesses() {
    let r = functor_l(&sweedler()).unwrap();
    let lm = functor_l(&functor_m(&r).unwrap()).unwrap();
    assert!(check_rb_morphism(&r, &lm, &LinMap::identity(4, Q), &r.r_map).passed());
    let lr = functor_l(&functor_r(&r, Category::D).unwrap()).unwrap();
    let inv = r.r_inverse().unwrap().unwrap();
    assert!(check_rb_morphism(&r, &lr, &inv, &LinMap::identity(4, Q)).passed());
}

#[test]
fn perturbed_morphism_fails() {
    let r = functor_l(&sweedler()).unwrap();
    let mut f = LinMap::identity(4, Q);
    f.images[2] = Elem::term(2, Scalar::from_int(2, Q));
    let report = check_rb_morphism(&r, &r, &f, &LinMap::identity(4, Q));
    assert_eq!(report.status(AxiomId::RbMorR), Some(Status::Fail));
    assert_eq!(report.status(AxiomId::RbMorG), Some(Status::Pass));
}

#[test]
fn grouplikes_of_sweedler() {
    let r = functor_l(&sweedler()).unwrap();
    let g = restrict_to_grouplikes(&r, &[Elem::basis(0, Q), Elem::basis(1, Q)]).unwrap();
    assert_eq!(g.g_mul, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(g.r, vec![0, 1]);
    assert!(check_group_rb(&g).passed());
    assert!(restrict_to_grouplikes(&r, &[Elem::basis(0, Q), Elem::basis(2, Q)]).is_err());
}

#[test]
fn primitives_of_sweedler_are_zero() {
    let r = functor_l(&sweedler()).unwrap();
    let l = restrict_to_primitives(&r).unwrap();
    assert_eq!((l.r.dom, l.r.cod), (0, 0));
    assert!(check_lie_rb(&l).passed());
}

#[test]
fn primitives_of_a_restricted_enveloping_algebra() {
    let s = build_adjoint(&restricted_enveloping(3).unwrap()).unwrap();
    let r = functor_l(&s).unwrap();
    assert!(check_rel_rb(&r, RbMode::Full).passed());
    let l = restrict_to_primitives(&r).unwrap();
    assert_eq!(l.h_bracket.len(), 2);
    assert!(check_lie_rb(&l).passed());
    // The bracket is nonzero, so the weight-1 identity is not vacuous.
    assert!(l.h_bracket.iter().flatten().any(|v| !v.is_zero()));
}

#[test]
fn group_linearization_gives_a_cocommutative_operator() {
    let (t, labels) = symmetric_group_s3();
    let s = build_group_rb_linearization(&conjugation_inversion_rb(&t, &labels), Q).unwrap();
    let r = functor_l(&s).unwrap();
    let report = check_rel_rb(&r, RbMode::Full);
    assert!(report.passed());
    assert!(r.h.coalgebra.is_cocommutative() && r.k_coalg.is_cocommutative());
    assert!(report.get(AxiomId::Rb2).unwrap().checked > 0);
}

#[test]
fn trivial_and_constant_group_operators() {
    let (t, labels) = cyclic_group(2);
    assert!(check_group_rb(&trivial_action_rb(&t, &labels)).passed());
    let mut constant = trivial_action_rb(&t, &labels);
    constant.r = vec![0, 0];
    assert!(check_group_rb(&constant).passed());
    let mut swap = trivial_action_rb(&t, &labels);
    swap.r = vec![1, 0];
    assert!(!check_group_rb(&swap).passed());
}

#[test]
fn abelian_lie_operator() {
    let zero = vec![vec![Elem::zero(); 2]; 2];
    let l = LieRB { field: Q, g_bracket: zero.clone(), h_bracket: zero.clone(), phi: zero, r: LinMap::identity(2, Q) };
    let report = check_lie_rb(&l);
    assert!(report.passed());
    assert!(l.post_lie().action.iter().flatten().all(Elem::is_zero));
}

#[test]
fn adjunction_on_sweedler() {
    let s = sweedler();
    let rb = functor_l(&s).unwrap();
    let id = LinMap::identity(4, Q);
    let fwd = adjunction_bijection(&rb, &s, &AdjunctionData::Pair(id.clone(), id.clone())).unwrap();
    assert_eq!(fwd, AdjunctionData::Map(id.clone()));
    let back = adjunction_bijection(&rb, &s, &fwd).unwrap();
    assert_eq!(back, AdjunctionData::Pair(id.clone(), id.clone()));

    let neg = diag(&[1, 1, -1, -1]);
    let pair = adjunction_bijection(&rb, &s, &AdjunctionData::Map(neg.clone())).unwrap();
    assert_eq!(pair, AdjunctionData::Pair(neg.clone(), neg.clone()));
    assert_eq!(adjunction_bijection(&rb, &s, &pair).unwrap(), AdjunctionData::Map(neg));

    let bad = diag(&[1, 1, 2, 2]);
    assert!(adjunction_bijection(&rb, &s, &AdjunctionData::Map(bad)).is_err());
}
