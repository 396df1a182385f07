//! Acceptance gate: twelve criteria, one summary line each.
//!
//! Every criterion runs even if an earlier one fails; the test fails at the
//! end if any did. Oracle tables are written out here by hand rather than
//! taken from the library.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ydhopf::brace::{check_matched_pair, from_matched_pair, functor_f, functor_g, to_matched_pair};
use ydhopf::examples::{
    build_adjoint, build_en, build_group_rb_linearization, build_suzuki, build_sweedler, build_trivial,
    conjugation_inversion_rb, cyclic_group, group_algebra, restricted_enveloping, symmetric_group_s3,
};
use ydhopf::format::{Structure, StructureFile};
use ydhopf::hopf::{check_hopf, convolution, convolution_unit, ActionTensor, LinMap};
use ydhopf::lin::Elem;
use ydhopf::report::{AxiomId, Status};
use ydhopf::rota::{
    adjunction_bijection, antipode_sk, check_group_rb, check_lie_rb, check_rb_morphism, check_rel_rb,
    descendent_hopf, functor_l, functor_m, functor_r, restrict_to_grouplikes, restrict_to_primitives,
    AdjunctionData, Category, RbMode,
};
use ydhopf::suite::full_suite;
use ydhopf::ydpost::{
    check_post_lie, check_yd_hopf_monoid, check_yd_post_hopf, subadjacent_hopf, PostLieData, YDPostHopf,
};
use ydhopf::{FieldSpec, Scalar};

const Q: FieldSpec = FieldSpec::RATIONALS;

const SWEEDLER_LIMIT: Duration = Duration::from_secs(1);
const E2_LIMIT: Duration = Duration::from_secs(60);
const E3_LIMIT: Duration = Duration::from_secs(300);
const MUTATION_SAMPLES: usize = 50;

fn q(n: i64) -> Scalar {
    Scalar::from_int(n, Q)
}

fn v(terms: &[(usize, i64)]) -> Elem {
    terms.iter().map(|&(i, c)| (i, q(c))).collect()
}

fn sweedler() -> YDPostHopf {
    build_sweedler(q(1), Q).unwrap()
}

fn identity_matrix(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect()
}

fn e2() -> YDPostHopf {
    build_en(2, &identity_matrix(2), Q).unwrap()
}

fn e3_matrix() -> Vec<Vec<Scalar>> {
    let half = Scalar::parse("1/2", Q).unwrap();
    vec![vec![q(1), q(2), q(0)], vec![q(2), q(-1), q(3)], vec![q(0), q(3), half]]
}

fn e3() -> YDPostHopf {
    build_en(3, &e3_matrix(), Q).unwrap()
}

fn s3_linearization() -> YDPostHopf {
    let (t, l) = symmetric_group_s3();
    build_group_rb_linearization(&conjugation_inversion_rb(&t, &l), Q).unwrap()
}

fn examples() -> Vec<(&'static str, YDPostHopf)> {
    let (c2, c2l) = cyclic_group(2);
    let (s3, s3l) = symmetric_group_s3();
    vec![
        ("sweedler", sweedler()),
        ("trivial", build_trivial(Q).unwrap()),
        ("e2", e2()),
        ("e3", e3()),
        ("suzuki", build_suzuki(q(1), q(1), Q).unwrap()),
        ("adjoint-c2", build_adjoint(&group_algebra(&c2, c2l, Q).unwrap()).unwrap()),
        ("adjoint-s3", build_adjoint(&group_algebra(&s3, s3l, Q).unwrap()).unwrap()),
        ("adjoint-u3", build_adjoint(&restricted_enveloping(3).unwrap()).unwrap()),
        ("s3-inversion", s3_linearization()),
    ]
}

/// The published Sweedler tables in the basis 1, g, x, x·g.
fn sweedler_tables(k: i64) -> (Vec<Vec<Elem>>, Vec<Vec<Elem>>) {
    let id = |i| v(&[(i, 1)]);
    let neg = |i| v(&[(i, -1)]);
    let one_minus_g = v(&[(0, k), (1, -k)]);
    let g_minus_one = v(&[(0, -k), (1, k)]);
    let z = Elem::zero();
    let alpha = vec![
        vec![id(0), id(1), id(2), id(3)],
        vec![id(0), id(1), neg(2), neg(3)],
        vec![z.clone(), z.clone(), one_minus_g.clone(), g_minus_one.clone()],
        vec![z.clone(), z.clone(), g_minus_one.clone(), one_minus_g.clone()],
    ];
    let mut beta = alpha.clone();
    beta[2][2] = g_minus_one;
    beta[2][3] = one_minus_g;
    (alpha, beta)
}

fn prefix_count(report: &ydhopf::report::CheckReport, prefix: &str) -> (usize, usize) {
    let all = report.entries.iter().filter(|e| e.axiom.as_str().starts_with(prefix));
    let total = all.clone().count();
    (total, all.filter(|e| e.status == Status::Pass).count())
}

fn criterion_1() -> String {
    let start = Instant::now();
    let s = sweedler();
    let report = check_yd_post_hopf(&s);
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(prefix_count(&report, "P-"), (8, 8));
    assert_eq!(prefix_count(&report, "L-"), (9, 9));
    let (alpha, beta) = sweedler_tables(1);
    assert_eq!(s.action.table, alpha);
    let mut bare = s.clone();
    bare.beta = None;
    bare.solve_beta().unwrap();
    assert_eq!(bare.beta.unwrap().table, beta);
    let t = start.elapsed();
    assert!(t < SWEEDLER_LIMIT, "{t:?}");
    format!("{t:.2?}")
}

fn criterion_2() -> String {
    let start = Instant::now();
    let (alpha, beta) = sweedler_tables(1);
    let mut s = sweedler();
    s.action = ActionTensor { field: Q, acting_dim: 4, target_dim: 4, table: alpha };
    s.beta = None;
    let inv = s.solve_beta().unwrap();
    assert_eq!((inv.unknowns, inv.kernel_dim), (64, 0));
    assert_eq!(s.beta.unwrap().table, beta);
    let t = start.elapsed();
    assert!(t < SWEEDLER_LIMIT, "{t:?}");
    format!("{t:.2?}")
}

fn criterion_3() -> String {
    let s = sweedler();
    let h = subadjacent_hopf(&s).unwrap();
    let m = |i, j| h.algebra.mul_basis(i, j).clone();
    assert_eq!(m(1, 1), v(&[(0, 1)]));
    assert_eq!(m(2, 2), Elem::zero());
    assert_eq!(m(2, 1).add(&m(1, 2)), Elem::zero());
    assert_eq!(h.antipode.image(1), &v(&[(1, 1)]));
    // x·g in the carrier product.
    assert_eq!(h.antipode.image(2), s.carrier.algebra.mul_basis(2, 1));
    assert!(check_hopf(&h).passed());
    "H4 relations".into()
}

fn criterion_4() -> String {
    for k in [1, 0, -3, 5] {
        let e1 = build_en(1, &[vec![q(k)]], Q).unwrap();
        let a = StructureFile::new(Q, Structure::YdPost(e1)).emit();
        let b = StructureFile::new(Q, Structure::YdPost(build_sweedler(q(k), Q).unwrap())).emit();
        assert_eq!(a, b, "k = {k}");
    }
    let start = Instant::now();
    let s = e2();
    assert_eq!(s.dim(), 8);
    assert!(full_suite(&Structure::YdPost(s.clone())).passed());
    assert!(check_yd_hopf_monoid(&s).passed());
    assert!(check_matched_pair(&to_matched_pair(&s).unwrap()).passed());
    let t2 = start.elapsed();
    assert!(t2 < E2_LIMIT, "{t2:?}");
    let start = Instant::now();
    let s = e3();
    assert_eq!(s.dim(), 16);
    assert!(s.beta.is_some());
    let report = full_suite(&Structure::YdPost(s));
    assert!(report.passed(), "{}", report.to_text());
    let t3 = start.elapsed();
    assert!(t3 < E3_LIMIT, "{t3:?}");
    format!("E(2) {t2:.2?}, E(3) {t3:.2?}")
}

fn criterion_5() -> String {
    let s = build_suzuki(q(1), q(1), Q).unwrap();
    assert!(full_suite(&Structure::YdPost(s.clone())).passed());
    let labels = &s.carrier.algebra.labels;
    let idx = |name: &str| labels.iter().position(|l| l == name).unwrap();
    let (a, b, c, d) = (idx("a"), idx("b"), idx("c"), idx("d"));
    let gens = [a, b, c, d];
    let expected = [
        [d, c, b, a].map(|i| v(&[(i, 1)])),
        [(); 4].map(|_| Elem::zero()),
        [(); 4].map(|_| Elem::zero()),
        [d, c, b, a].map(|i| v(&[(i, 1)])),
    ];
    for (row, x) in gens.iter().enumerate() {
        for (col, y) in gens.iter().enumerate() {
            assert_eq!(s.action.basis(*x, *y), &expected[row][col], "{}⇀{}", labels[*x], labels[*y]);
        }
    }
    for x in [b, c] {
        assert!(s.action.table[x].iter().all(Elem::is_zero));
    }
    assert_eq!(s.beta.as_ref().unwrap(), &s.action);
    format!("dim {}", s.dim())
}

fn criterion_6(all: &[(&str, YDPostHopf)]) -> String {
    for (name, s) in all {
        let b = functor_f(s).unwrap();
        assert!(functor_g(&b).unwrap().tensors_eq(s), "GF on {name}");
        assert_eq!(functor_f(&functor_g(&b).unwrap()).unwrap(), b, "FG on {name}");
        let mp = to_matched_pair(s).unwrap();
        let report = check_matched_pair(&mp);
        assert!(report.passed(), "{name}: {}", report.to_text());
        for id in [AxiomId::Mp1, AxiomId::Mp2, AxiomId::Mp3, AxiomId::Mp4, AxiomId::Mp5, AxiomId::MpBc] {
            assert_eq!(report.status(id), Some(Status::Pass), "{name} {id:?}");
        }
        assert!(from_matched_pair(&mp).unwrap().tensors_eq(s), "matched pair on {name}");
    }
    format!("{} examples", all.len())
}

fn criterion_7(all: &[(&str, YDPostHopf)]) -> String {
    for (name, s) in all {
        let r = functor_l(s).unwrap();
        let report = check_rel_rb(&r, RbMode::Full);
        assert!(report.passed(), "{name}: {}", report.to_text());
        let m = functor_m(&r).unwrap();
        assert!(m.tensors_eq(s), "ML on {name}");
        let rr = functor_r(&r, Category::D).unwrap();
        assert!(rr.tensors_eq(s), "RL on {name}");
        let id = LinMap::identity(s.dim(), s.field());
        let lm = functor_l(&m).unwrap();
        assert!(check_rb_morphism(&r, &lm, &id, &r.r_map).passed(), "(Id, R) on {name}");
        let lr = functor_l(&rr).unwrap();
        let inv = r.r_inverse().unwrap().unwrap();
        assert!(check_rb_morphism(&r, &lr, &inv, &id).passed(), "(R⁻¹, Id) on {name}");
    }
    format!("{} examples", all.len())
}

fn criterion_8(all: &[(&str, YDPostHopf)]) -> String {
    for (name, s) in all {
        let r = functor_l(s).unwrap();
        let sk = antipode_sk(&r).unwrap();
        let (alg, co) = (&r.k_alg, &r.k_coalg);
        let id = LinMap::identity(s.dim(), s.field());
        let unit = convolution_unit(co, alg);
        assert_eq!(convolution(&sk, &id, co, alg).unwrap(), unit, "S*id on {name}");
        assert_eq!(convolution(&id, &sk, co, alg).unwrap(), unit, "id*S on {name}");
        assert!(check_hopf(&descendent_hopf(&r).unwrap()).passed(), "descendent Hopf algebra of {name}");
    }
    format!("{} examples", all.len())
}

fn post_lie_2d(e1_on_e2: Option<Elem>, bracket: bool) -> PostLieData {
    let z = Elem::zero();
    let mut action = vec![vec![z.clone(); 2]; 2];
    if let Some(x) = e1_on_e2 {
        action[0][1] = x;
    }
    let br = if bracket {
        vec![vec![z.clone(), v(&[(1, 1)])], vec![v(&[(1, -1)]), z.clone()]]
    } else {
        vec![vec![z.clone(); 2]; 2]
    };
    PostLieData { field: Q, dim: 2, bracket: br, action, embedding: vec![v(&[(0, 1)]), v(&[(1, 1)])] }
}

fn criterion_9() -> String {
    let r = functor_l(&sweedler()).unwrap();
    let g = restrict_to_grouplikes(&r, &[v(&[(0, 1)]), v(&[(1, 1)])]).unwrap();
    assert_eq!(g.g_mul, cyclic_group(2).0);
    assert!(check_group_rb(&g).passed());
    assert!(ydhopf::hopf::primitives(&r.h.algebra, &r.h.coalgebra).is_empty());
    let l = restrict_to_primitives(&r).unwrap();
    assert_eq!(l.g_bracket.len() + l.h_bracket.len(), 0);
    let lr = check_lie_rb(&l);
    assert!(lr.passed() && lr.entries.iter().all(|e| e.failed == 0));
    for pl in [post_lie_2d(None, false), post_lie_2d(None, true)] {
        let rep = check_post_lie(&pl);
        assert!(rep.all_pass(&[AxiomId::Pl1, AxiomId::Pl2]), "{}", rep.to_text());
    }
    let bad = check_post_lie(&post_lie_2d(Some(v(&[(0, 1)])), true));
    let pl1 = bad.get(AxiomId::Pl1).unwrap();
    assert_eq!(pl1.status, Status::Fail);
    assert_eq!(pl1.witness.as_ref().unwrap().indices, vec![0, 0, 1]);
    "3 post-Lie cases".into()
}

fn criterion_10() -> String {
    let s = sweedler();
    let rb = functor_l(&s).unwrap();
    let id = LinMap::identity(4, Q);
    let neg_x = LinMap::from_fn(4, 4, |i| v(&[(i, if i < 2 { 1 } else { -1 })]));
    assert!(ydhopf::ydpost::check_post_hopf_morphism(&neg_x, &s, &s).passed());
    let cases = [
        AdjunctionData::Pair(id.clone(), id.clone()),
        AdjunctionData::Map(id.clone()),
        AdjunctionData::Map(neg_x.clone()),
    ];
    for case in &cases {
        let there = adjunction_bijection(&rb, &s, case).unwrap();
        let back = adjunction_bijection(&rb, &s, &there).unwrap();
        assert_eq!(&back, case);
    }
    assert_eq!(adjunction_bijection(&rb, &s, &cases[0]).unwrap(), AdjunctionData::Map(id.clone()));
    assert_eq!(adjunction_bijection(&rb, &s, &cases[1]).unwrap(), AdjunctionData::Pair(id.clone(), id));
    "3 cases".into()
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Mul(usize, usize, usize),
    Comul(usize, (usize, usize)),
    Antipode(usize, usize),
    Action(usize, usize, usize),
}

fn slots(s: &YDPostHopf) -> Vec<Slot> {
    let d = s.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            out.extend(s.carrier.algebra.mul[i][j].keys().map(|&k| Slot::Mul(i, j, k)));
        }
    }
    for i in 0..d {
        out.extend(s.carrier.coalgebra.comul[i].keys().map(|&pq| Slot::Comul(i, pq)));
    }
    for i in 0..d {
        out.extend(s.carrier.s_map.images[i].keys().map(|&k| Slot::Antipode(i, k)));
    }
    for i in 0..d {
        for j in 0..d {
            out.extend(s.action.table[i][j].keys().map(|&k| Slot::Action(i, j, k)));
        }
    }
    out
}

fn flip<K: Ord + Clone>(e: &mut ydhopf::lin::Lin<K>, k: &K) {
    let c = e.get(k).unwrap().clone();
    let t = ydhopf::lin::Lin::term(k.clone(), c);
    *e = e.sub(&t).sub(&t);
}

fn mutate(s: &YDPostHopf, slot: Slot) -> YDPostHopf {
    let mut m = s.clone();
    match slot {
        Slot::Mul(i, j, k) => flip(&mut m.carrier.algebra.mul[i][j], &k),
        Slot::Comul(i, pq) => flip::<(usize, usize)>(&mut m.carrier.coalgebra.comul[i], &pq),
        Slot::Antipode(i, k) => flip(&mut m.carrier.s_map.images[i], &k),
        Slot::Action(i, j, k) => flip(&mut m.action.table[i][j], &k),
    }
    m
}

fn criterion_11(all: &[(&str, YDPostHopf)]) -> String {
    let mut tried = 0;
    for (name, s) in all {
        let every = slots(s);
        let n = every.len();
        let picked: Vec<Slot> = if s.dim() < 8 || n <= MUTATION_SAMPLES {
            every
        } else {
            // Evenly spaced, so every part of every tensor is represented.
            (0..MUTATION_SAMPLES).map(|i| every[i * n / MUTATION_SAMPLES]).collect()
        };
        for slot in picked {
            let m = mutate(s, slot);
            let report = full_suite(&Structure::YdPost(m));
            assert!(report.failures().count() > 0, "{name}: {slot:?} undetected");
            tried += 1;
        }
    }
    format!("{tried} mutations")
}

fn criterion_12(all: &[(&str, YDPostHopf)]) -> String {
    for (name, s) in all {
        let a = full_suite(&Structure::YdPost(s.clone())).to_machine();
        let b = full_suite(&Structure::YdPost(s.clone())).to_machine();
        assert_eq!(a, b, "{name}");
    }
    let first: Vec<String> = examples().into_iter().map(|(_, s)| StructureFile::new(Q, Structure::YdPost(s)).emit()).collect();
    let second: Vec<String> = all.iter().map(|(_, s)| StructureFile::new(Q, Structure::YdPost(s.clone())).emit()).collect();
    assert_eq!(first, second);
    format!("{} examples", all.len())
}

/// Bypasses libtest output capture so the summary shows in every run.
fn line(s: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

#[test]
fn acceptance() {
    let all = examples();
    let criteria: Vec<(&str, Box<dyn Fn() -> String + '_>)> = vec![
        ("sweedler reproduction", Box::new(criterion_1)),
        ("beta solver independence", Box::new(criterion_2)),
        ("subadjacent recovery", Box::new(criterion_3)),
        ("E(n) family", Box::new(criterion_4)),
        ("suzuki table", Box::new(criterion_5)),
        ("brace and matched-pair isomorphisms", Box::new(|| criterion_6(&all))),
        ("rota-baxter round trips", Box::new(|| criterion_7(&all))),
        ("descendent antipode", Box::new(|| criterion_8(&all))),
        ("restrictions", Box::new(criterion_9)),
        ("adjunction", Box::new(criterion_10)),
        ("mutation robustness", Box::new(|| criterion_11(&all))),
        ("determinism", Box::new(|| criterion_12(&all))),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let t = start.elapsed();
        match outcome {
            Ok(info) => line(format!("criterion {:>2} PASS {name} ({info}; {t:.2?})", n + 1)),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                line(format!("criterion {:>2} FAIL {name}: {msg}", n + 1));
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
