use proptest::prelude::*;

use ydhopf::brace::{functor_f, functor_g};
use ydhopf::examples::{build_en, build_sweedler};
use ydhopf::format::{Structure, StructureFile};
use ydhopf::hopf::{check_hopf, LinMap};
use ydhopf::lin::Elem;
use ydhopf::rota::{check_rel_rb, functor_l, RbMode};
use ydhopf::suite::full_suite;
use ydhopf::ydpost::{bullet_algebra, check_yd_post_hopf, subadjacent_hopf, YDPostHopf};
use ydhopf::{FieldSpec, Scalar};

const Q: FieldSpec = FieldSpec::RATIONALS;

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| Scalar::parse(&format!("{n}/{d}"), Q).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |s| !s.is_zero())
}

fn prime_field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![3u64, 5, 7, 11, 101]).prop_map(|p| format!("Fp:{p}").parse().unwrap())
}

fn sweedler(k: &Scalar) -> YDPostHopf {
    build_sweedler(k.clone(), k.field()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a.div(&c).unwrap() * &c), &a);
        prop_assert_eq!(Scalar::parse(&a.to_string(), Q).unwrap(), a);
    }

    #[test]
    fn sweedler_passes_for_every_k(k in rational()) {
        let s = sweedler(&k);
        prop_assert!(check_yd_post_hopf(&s).passed());
    }

    #[test]
    fn sweedler_over_prime_fields(f in prime_field(), k in 0i64..50) {
        let s = build_sweedler(Scalar::from_int(k, f), f).unwrap();
        prop_assert!(full_suite(&Structure::YdPost(s)).passed());
    }

    #[test]
    fn subadjacent_is_always_hopf(k in rational()) {
        let s = sweedler(&k);
        let h = subadjacent_hopf(&s).unwrap();
        prop_assert!(check_hopf(&h).passed());
        prop_assert_eq!(&h.algebra, &bullet_algebra(&s));
    }

    #[test]
    fn solved_beta_matches_supplied(k in rational()) {
        let s = sweedler(&k);
        let mut bare = s.clone();
        bare.beta = None;
        let inv = bare.solve_beta().unwrap();
        prop_assert_eq!(inv.kernel_dim, 0);
        prop_assert_eq!(bare.beta, s.beta);
    }

    #[test]
    fn e1_is_sweedler(k in rational()) {
        let e1 = build_en(1, &[vec![k.clone()]], Q).unwrap();
        prop_assert_eq!(e1, sweedler(&k));
    }

    #[test]
    fn brace_round_trip(k in rational()) {
        let s = sweedler(&k);
        prop_assert!(functor_g(&functor_f(&s).unwrap()).unwrap().tensors_eq(&s));
    }

    #[test]
    fn l_gives_full_operators(k in rational()) {
        let r = functor_l(&sweedler(&k)).unwrap();
        prop_assert!(check_rel_rb(&r, RbMode::Full).passed());
    }

    #[test]
    fn emission_is_canonical(k in rational(), f in prime_field()) {
        for s in [sweedler(&k), build_sweedler(Scalar::from_int(2, f), f).unwrap()] {
            let file = StructureFile::new(s.field(), Structure::YdPost(s));
            let text = file.emit();
            let back = StructureFile::parse(&text).unwrap();
            prop_assert_eq!(&back, &file);
            prop_assert_eq!(back.emit(), text);
        }
    }

    #[test]
    fn scaling_the_action_breaks_it(k in nonzero_rational(), c in nonzero_rational()) {
        prop_assume!(!c.is_one());
        let mut s = sweedler(&k);
        s.action.table[2][2] = s.action.table[2][2].scaled(&c);
        prop_assert!(!check_yd_post_hopf(&s).passed());
    }

    #[test]
    fn identity_map_applies_as_identity(x in prop::collection::vec(rational(), 4)) {
        let e: Elem = x.iter().cloned().enumerate().collect();
        prop_assert_eq!(LinMap::identity(4, Q).apply(&e), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn e2_with_symmetric_matrices(a in rational(), b in rational(), d in rational()) {
        let s = build_en(2, &[vec![a, b.clone()], vec![b, d]], Q).unwrap();
        prop_assert!(full_suite(&Structure::YdPost(s)).passed());
    }
}
