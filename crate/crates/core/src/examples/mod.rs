//! Built-in structures: the transmutations of Sweedler's algebra, of `E(n)`
//! and of the Suzuki algebra, the adjoint construction from an ordinary Hopf
//! algebra, the linearization of a group Rota-Baxter operator, and a few
//! ordinary Hopf algebras used as inputs.
//!
//! Every builder runs the full post-Hopf suite on its output and returns an
//! error instead of an unverified structure.

mod extend;
pub mod rewrite;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{check_hopf, ActionTensor, AlgebraData, BraidedPair, CoalgebraData, HopfData, LinMap};
use crate::lin::{Elem, Elem2};
use crate::rota::{check_group_rb, GroupRB};
use crate::ydpost::{check_yd_post_hopf, YDPostHopf};

use extend::{extend, GeneratorData, Leg};
use rewrite::{Rewriting, Word};

/// Upper bound on the number of normal words in a monomial closure.
pub const CLOSURE_CAP: usize = 4096;

#[derive(Clone, Debug)]
pub enum ExampleSpec {
    Sweedler { k: Scalar },
    En { a: Vec<Vec<Scalar>> },
    Suzuki { alpha: Scalar, beta: Scalar },
    AdjointFromHopf(HopfData),
    GroupRBLinearization(GroupRB, FieldSpec),
    Trivial(FieldSpec),
}

impl ExampleSpec {
    pub fn build(&self) -> Result<YDPostHopf> {
        match self {
            ExampleSpec::Sweedler { k } => build_sweedler(k.clone(), k.field()),
            ExampleSpec::En { a } => {
                let field = a.first().and_then(|r| r.first()).map(Scalar::field).ok_or_else(|| {
                    Error::Precondition("E(n) needs n ≥ 1".into())
                })?;
                build_en(a.len(), a, field)
            }
            ExampleSpec::Suzuki { alpha, beta } => build_suzuki(alpha.clone(), beta.clone(), alpha.field()),
            ExampleSpec::AdjointFromHopf(h) => build_adjoint(h),
            ExampleSpec::GroupRBLinearization(g, f) => build_group_rb_linearization(g, *f),
            ExampleSpec::Trivial(f) => build_trivial(*f),
        }
    }
}

fn s(n: i64, field: FieldSpec) -> Scalar {
    Scalar::from_int(n, field)
}

fn el(field: FieldSpec, terms: &[(usize, i64)]) -> Elem {
    terms.iter().map(|&(i, c)| (i, s(c, field))).collect()
}

fn require_odd_characteristic(field: FieldSpec) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("characteristic 2 is excluded".into()));
    }
    Ok(())
}

fn require_field(x: &Scalar, field: FieldSpec) -> Result<()> {
    if x.field() != field {
        return Err(Error::Field(format!("parameter {x} is not in {field}")));
    }
    Ok(())
}

/// Runs the full post-Hopf suite and rejects a failing structure.
fn certify(s: YDPostHopf) -> Result<YDPostHopf> {
    let report = check_yd_post_hopf(&s);
    if !report.passed() {
        let ids: Vec<&str> = report.entries.iter().filter(|e| !e.passed()).map(|e| e.axiom.as_str()).collect();
        return Err(Error::Construction(format!("built structure fails {}", ids.join(", "))));
    }
    Ok(s)
}

fn word_label(names: &[&str], w: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let run = j - i;
        parts.push(if run == 1 { names[w[i]].to_string() } else { format!("{}^{run}", names[w[i]]) });
        i = j;
    }
    parts.join("·")
}

/// Basis `1, g, x, x·g`.
pub fn build_sweedler(k: Scalar, field: FieldSpec) -> Result<YDPostHopf> {
    require_odd_characteristic(field)?;
    require_field(&k, field)?;
    let e = |t: &[(usize, i64)]| el(field, t);
    let one_minus_g = e(&[(0, 1), (1, -1)]).scaled(&k);
    let g_minus_one = one_minus_g.neg();
    let mul = vec![
        vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(2, 1)]), e(&[(3, 1)])],
        vec![e(&[(1, 1)]), e(&[(0, 1)]), e(&[(3, 1)]), e(&[(2, 1)])],
        vec![e(&[(2, 1)]), e(&[(3, 1)]), one_minus_g.clone(), g_minus_one.clone()],
        vec![e(&[(3, 1)]), e(&[(2, 1)]), g_minus_one.clone(), one_minus_g.clone()],
    ];
    let labels = ["1", "g", "x", "x·g"].iter().map(|l| l.to_string()).collect();
    let algebra = AlgebraData { field, labels, mul, unit: e(&[(0, 1)]) };
    let t = |pairs: &[((usize, usize), i64)]| -> Elem2 { pairs.iter().map(|&(p, c)| (p, s(c, field))).collect() };
    let coalgebra = CoalgebraData {
        field,
        comul: vec![
            t(&[((0, 0), 1)]),
            t(&[((1, 1), 1)]),
            t(&[((2, 0), 1), ((1, 2), 1)]),
            t(&[((3, 1), 1), ((0, 3), 1)]),
        ],
        counit: vec![s(1, field), s(1, field), s(0, field), s(0, field)],
    };
    let s_map = LinMap::new(4, 4, vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(3, -1)]), e(&[(2, -1)])])?;
    let ident_rows = vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(2, 1)]), e(&[(3, 1)])];
    let g_row = vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(2, -1)]), e(&[(3, -1)])];
    let zero = Elem::zero();
    let action = ActionTensor {
        field,
        acting_dim: 4,
        target_dim: 4,
        table: vec![
            ident_rows.clone(),
            g_row.clone(),
            vec![zero.clone(), zero.clone(), one_minus_g.clone(), g_minus_one.clone()],
            vec![zero.clone(), zero.clone(), g_minus_one.clone(), one_minus_g.clone()],
        ],
    };
    let beta = ActionTensor {
        field,
        acting_dim: 4,
        target_dim: 4,
        table: vec![
            ident_rows,
            g_row,
            vec![zero.clone(), zero.clone(), g_minus_one.clone(), one_minus_g.clone()],
            vec![zero.clone(), zero, g_minus_one, one_minus_g],
        ],
    };
    let mut out = YDPostHopf::new(BraidedPair { algebra, coalgebra, s_map }, action, Some(beta));
    out.params.insert("k".into(), k);
    certify(out)
}

/// Basis `x_{i1}···x_{ik}·g^a` (indices ascending) at position `2·mask + a`.
pub fn build_en(n: usize, a: &[Vec<Scalar>], field: FieldSpec) -> Result<YDPostHopf> {
    require_odd_characteristic(field)?;
    if n == 0 || n > 8 {
        return Err(Error::Precondition(format!("E(n) is supported for 1 ≤ n ≤ 8, got {n}")));
    }
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition(format!("A must be {n}×{n}")));
    }
    for i in 0..n {
        for j in 0..n {
            require_field(&a[i][j], field)?;
            if a[i][j] != a[j][i] {
                return Err(Error::Precondition("A must be symmetric".into()));
            }
        }
    }
    let gl = n;
    let one = field.one();
    let mut rw = Rewriting::new(field);
    rw.rule(&[gl, gl], vec![(vec![], one.clone())]);
    for i in 0..n {
        rw.rule(&[gl, i], vec![(vec![i, gl], one.clone())]);
        rw.rule(&[i, i], vec![(vec![], a[i][i].clone()), (vec![gl], -&a[i][i])]);
        for j in i + 1..n {
            let two_a = &a[i][j] * &s(2, field);
            rw.rule(&[j, i], vec![(vec![i, j], -one.clone()), (vec![], two_a.clone()), (vec![gl], -two_a)]);
        }
    }
    let words: Vec<Word> = (0..1usize << (n + 1))
        .map(|idx| {
            let (mask, g) = (idx >> 1, idx & 1);
            let mut w: Word = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if g == 1 {
                w.push(gl);
            }
            w
        })
        .collect();
    let closed = rw.closure(n + 1, CLOSURE_CAP)?;
    if closed != words.iter().cloned().collect::<BTreeSet<_>>() {
        return Err(Error::Construction("E(n) normal words differ from the expected basis".into()));
    }
    let names: Vec<String> =
        if n == 1 { vec!["x".into(), "g".into()] } else { (1..=n).map(|i| format!("x{i}")).chain(["g".into()]).collect() };
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let labels = words.iter().map(|w| word_label(&name_refs, w)).collect();
    let algebra = rw.algebra(&words, labels)?;

    let gi = 1;
    let xi = |i: usize| 2usize << i;
    let mut comul = Vec::new();
    let mut act = vec![vec![Elem::zero(); n + 1]; n + 1];
    let mut beta = act.clone();
    for i in 0..n {
        comul.push(vec![(Leg::Gen(i), Leg::One, one.clone()), (Leg::Gen(gl), Leg::Gen(i), one.clone())]);
        for j in 0..n {
            let v = el(field, &[(0, 1), (gi, -1)]).scaled(&a[i][j]);
            beta[i][j] = v.neg();
            act[i][j] = v;
        }
        act[gl][i] = el(field, &[(xi(i), -1)]);
        beta[gl][i] = act[gl][i].clone();
    }
    comul.push(vec![(Leg::Gen(gl), Leg::Gen(gl), one.clone())]);
    act[gl][gl] = el(field, &[(gi, 1)]);
    beta[gl][gl] = act[gl][gl].clone();
    let mut counit = vec![field.zero(); n];
    counit.push(one);
    let mut antipode: Vec<Elem> = (0..n).map(|i| el(field, &[(xi(i) + 1, -1)])).collect();
    antipode.push(el(field, &[(gi, 1)]));
    let gd = GeneratorData { algebra, words, comul, counit, act, beta, antipode };
    let ext = extend(&gd)?;
    let mut out = YDPostHopf::new(ext.carrier, ext.action, Some(ext.beta));
    if n == 1 {
        out.params.insert("k".into(), a[0][0].clone());
    } else {
        for i in 0..n {
            for j in i..n {
                out.params.insert(format!("A{}{}", i + 1, j + 1), a[i][j].clone());
            }
        }
    }
    certify(out)
}

/// Generators `a, b, c, d` with the matrix coproduct. The basis is the set
/// of normal words ordered by length, then lexicographically.
pub fn build_suzuki(alpha: Scalar, beta: Scalar, field: FieldSpec) -> Result<YDPostHopf> {
    require_odd_characteristic(field)?;
    require_field(&alpha, field)?;
    require_field(&beta, field)?;
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::Precondition("α and β must be nonzero".into()));
    }
    let (a, b, c, d) = (0, 1, 2, 3);
    let one = field.one();
    let r = alpha.div(&beta)?; // αβ⁻¹
    let r_inv = r.inv()?;
    let (a2b2, a2b2_inv) = {
        let v = &(&alpha * &alpha) * &(&beta * &beta);
        let inv = v.inv()?;
        (v, inv)
    };
    let a3b3 = r.pow(3)?;
    let a5b = r_inv.pow(5)?.div(&beta.pow(4)?)?; // α⁻⁵β
    let mut rw = Rewriting::new(field);
    for (x, y) in [(a, b), (b, a), (a, c), (c, a), (b, d), (d, b), (c, d), (d, c)] {
        rw.rule(&[x, y], vec![]);
    }
    rw.rule(&[d, a], vec![(vec![a, d], one.clone())]);
    rw.rule(&[c, b], vec![(vec![b, c], one.clone())]);
    rw.rule(&[d, d], vec![(vec![a, a], one.clone())]);
    rw.rule(&[c, c], vec![(vec![b, b], r.clone())]);
    // From a·S(a) + b·S(c) = 1 with the given antipode, and its consequences
    // b·a⁴ = 0 and a⁴·c = 0.
    rw.rule(&[a, a, a, a], vec![(vec![], a2b2_inv), (vec![b, b, b, b], -&a3b3)]);
    rw.rule(&[b, b, b, b, b], vec![(vec![b], a5b.clone())]);
    rw.rule(&[b, b, b, b, c], vec![(vec![c], a5b)]);
    let mut words: Vec<Word> = rw.closure(4, CLOSURE_CAP)?.into_iter().collect();
    words.sort_by(|u, v| u.len().cmp(&v.len()).then_with(|| u.cmp(v)));
    let names = ["a", "b", "c", "d"];
    let labels = words.iter().map(|w| word_label(&names, w)).collect();
    let algebra = rw.algebra(&words, labels)?;
    let idx = |w: &[usize]| words.iter().position(|x| x == w).expect("generator word present");
    let (ia, ib, ic, id) = (idx(&[a]), idx(&[b]), idx(&[c]), idx(&[d]));
    let term = |i: usize, c: &Scalar| Elem::term(i, c.clone());
    let m = |x: usize, y: usize| (Leg::Gen(x), Leg::Gen(y), one.clone());
    let comul = vec![vec![m(a, a), m(b, c)], vec![m(a, b), m(b, d)], vec![m(c, a), m(d, c)], vec![m(c, b), m(d, d)]];
    let counit = vec![one.clone(), field.zero(), field.zero(), one.clone()];
    let z = Elem::zero();
    let table = vec![
        vec![term(id, &one), term(ic, &r_inv), term(ib, &r), term(ia, &one)],
        vec![z.clone(); 4],
        vec![z.clone(); 4],
        vec![term(id, &one), term(ic, &r), term(ib, &r_inv), term(ia, &one)],
    ];
    let alg = &algebra;
    let word = |w: &[usize]| alg.basis(idx(w));
    let a4 = alpha.pow(4)?;
    let antipode = vec![
        alg.mul(&word(&[a]), &alg.mul(&word(&[d]), &word(&[d]))).scaled(&a2b2),
        alg.mul(&alg.mul(&word(&[b]), &word(&[b])), &word(&[c])).scaled(&a4),
        alg.mul(&word(&[b]), &alg.mul(&word(&[c]), &word(&[c]))).scaled(&a4),
        alg.mul(&word(&[d]), &alg.mul(&word(&[a]), &word(&[a]))).scaled(&a2b2),
    ];
    let gd = GeneratorData { algebra, words: words.clone(), comul, counit, act: table.clone(), beta: table, antipode };
    let ext = extend(&gd)?;
    let mut out = YDPostHopf::new(ext.carrier, ext.action, Some(ext.beta));
    out.params.insert("alpha".into(), alpha);
    out.params.insert("beta".into(), beta);
    certify(out)
}

/// The structure on an ordinary Hopf algebra `(H, •, T)` coming from the
/// adjoint action and the trivial right action.
pub fn build_adjoint(h: &HopfData) -> Result<YDPostHopf> {
    h.validate()?;
    let report = check_hopf(h);
    if !report.passed() {
        return Err(Error::Precondition(format!("input is not a Hopf algebra:\n{}", report.to_text())));
    }
    let (b, t) = (&h.algebra, &h.antipode);
    let legs = h.coalgebra.legs();
    let d = h.dim();
    let field = h.field();
    let tt = t.compose(t);
    let action = ActionTensor::from_fn(field, d, d, |x, y| {
        let mut out = Elem::zero();
        for ([x1, x2], k) in &legs.two[x] {
            out.add_scaled(&b.mul(&b.mul(&b.basis(*x1), &b.basis(y)), t.image(*x2)), k);
        }
        out
    });
    let mul = (0..d)
        .map(|x| {
            (0..d)
                .map(|y| {
                    let mut out = Elem::zero();
                    for ([x1, x2, x3], k) in &legs.three[x] {
                        let left = b.mul(&b.mul(&b.basis(*x1), t.image(*x3)), &b.basis(y));
                        out.add_scaled(&b.mul(&left, tt.image(*x2)), k);
                    }
                    out
                })
                .collect()
        })
        .collect();
    let s_map = LinMap::from_fn(d, d, |x| {
        let mut out = Elem::zero();
        for ([x1, x2, x3], k) in &legs.three[x] {
            out.add_scaled(&b.mul(&b.mul(&b.basis(*x1), t.image(*x3)), t.image(*x2)), k);
        }
        out
    });
    let beta = ActionTensor::from_fn(field, d, d, |x, y| action.act2(t.image(x), &b.basis(y)));
    let algebra = AlgebraData { field, labels: b.labels.clone(), mul, unit: b.unit.clone() };
    let carrier = BraidedPair { algebra, coalgebra: h.coalgebra.clone(), s_map };
    certify(YDPostHopf::new(carrier, action, Some(beta)))
}

/// The group algebra of the acted group with `h⇀k = φ(R(h))(k)`.
pub fn build_group_rb_linearization(grb: &GroupRB, field: FieldSpec) -> Result<YDPostHopf> {
    let report = check_group_rb(grb);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a group Rota-Baxter operator:\n{}", report.to_text())));
    }
    let h = group_algebra(&grb.h_mul, grb.h_labels.clone(), field)?;
    let n = h.dim();
    let action = ActionTensor::from_fn(field, n, n, |x, y| Elem::basis(grb.phi[grb.r[x]][y], field));
    let mut out = YDPostHopf::new(h.as_pair(), action, None);
    out.solve_beta()?;
    certify(out)
}

/// The one-dimensional structure on the ground field.
pub fn build_trivial(field: FieldSpec) -> Result<YDPostHopf> {
    let one = Elem::basis(0, field);
    let algebra = AlgebraData { field, labels: vec!["1".into()], mul: vec![vec![one.clone()]], unit: one.clone() };
    let coalgebra = CoalgebraData { field, comul: vec![Elem2::basis((0, 0), field)], counit: vec![field.one()] };
    let action = ActionTensor { field, acting_dim: 1, target_dim: 1, table: vec![vec![one.clone()]] };
    let carrier = BraidedPair { algebra, coalgebra, s_map: LinMap::identity(1, field) };
    certify(YDPostHopf::new(carrier, action.clone(), Some(action)))
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, g·x` with
/// `g² = 1`, `x² = 0`, `x·g = -g·x`.
pub fn sweedler_hopf(field: FieldSpec) -> HopfData {
    let e = |t: &[(usize, i64)]| el(field, t);
    let z = Elem::zero();
    let mul = vec![
        vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(2, 1)]), e(&[(3, 1)])],
        vec![e(&[(1, 1)]), e(&[(0, 1)]), e(&[(3, 1)]), e(&[(2, 1)])],
        vec![e(&[(2, 1)]), e(&[(3, -1)]), z.clone(), z.clone()],
        vec![e(&[(3, 1)]), e(&[(2, -1)]), z.clone(), z],
    ];
    let labels = ["1", "g", "x", "g·x"].iter().map(|l| l.to_string()).collect();
    let t = |pairs: &[((usize, usize), i64)]| -> Elem2 { pairs.iter().map(|&(p, c)| (p, s(c, field))).collect() };
    let comul = vec![t(&[((0, 0), 1)]), t(&[((1, 1), 1)]), t(&[((2, 0), 1), ((1, 2), 1)]), t(&[((3, 1), 1), ((0, 3), 1)])];
    HopfData {
        algebra: AlgebraData { field, labels, mul, unit: e(&[(0, 1)]) },
        coalgebra: CoalgebraData { field, comul, counit: vec![s(1, field), s(1, field), s(0, field), s(0, field)] },
        antipode: LinMap { dom: 4, cod: 4, images: vec![e(&[(0, 1)]), e(&[(1, 1)]), e(&[(3, -1)]), e(&[(2, 1)])] },
    }
}

/// The group algebra of a finite group given by its multiplication table.
pub fn group_algebra(table: &[Vec<usize>], labels: Vec<String>, field: FieldSpec) -> Result<HopfData> {
    let n = table.len();
    if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
        return Err(Error::Dimension("group table has the wrong shape".into()));
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Precondition("group table has no identity".into()))?;
    let inverse = |x: usize| (0..n).find(|&y| table[x][y] == unit && table[y][x] == unit);
    let mut antipode = Vec::with_capacity(n);
    for x in 0..n {
        let y = inverse(x).ok_or_else(|| Error::Precondition(format!("element {x} has no inverse")))?;
        antipode.push(Elem::basis(y, field));
    }
    let mul = table.iter().map(|r| r.iter().map(|&k| Elem::basis(k, field)).collect()).collect();
    Ok(HopfData {
        algebra: AlgebraData { field, labels, mul, unit: Elem::basis(unit, field) },
        coalgebra: CoalgebraData {
            field,
            comul: (0..n).map(|i| Elem2::basis((i, i), field)).collect(),
            counit: vec![field.one(); n],
        },
        antipode: LinMap { dom: n, cod: n, images: antipode },
    })
}

/// `Z/n` with elements `0..n` and labels `c0, c1, …`.
pub fn cyclic_group(n: usize) -> (Vec<Vec<usize>>, Vec<String>) {
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    (table, (0..n).map(|i| format!("c{i}")).collect())
}

/// `S₃` as permutations of three points in lexicographic order, composed as
/// `(p·q)(i) = p(q(i))`. Labels are one-line notation, identity first.
pub fn symmetric_group_s3() -> (Vec<Vec<usize>>, Vec<String>) {
    let perms: Vec<[usize; 3]> =
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation listed");
    let table = perms
        .iter()
        .map(|p| perms.iter().map(|q| pos([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    let labels = perms.iter().map(|p| p.iter().map(|i| (i + 1).to_string()).collect()).collect();
    (table, labels)
}

/// `R = inversion` relative to conjugation `φ(g)h = g·h·g⁻¹` on a group
/// given by its table; the linearization is `x⇀y = x⁻¹·y·x`.
pub fn conjugation_inversion_rb(table: &[Vec<usize>], labels: &[String]) -> GroupRB {
    let n = table.len();
    let e = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x)).unwrap_or(0);
    let inv: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| table[x][y] == e).unwrap_or(0)).collect();
    let phi = (0..n).map(|g| (0..n).map(|h| table[table[g][h]][inv[g]]).collect()).collect();
    GroupRB {
        g_mul: table.to_vec(),
        g_labels: labels.to_vec(),
        h_mul: table.to_vec(),
        h_labels: labels.to_vec(),
        phi,
        r: inv,
    }
}

/// `R = Id` relative to the trivial action.
pub fn trivial_action_rb(table: &[Vec<usize>], labels: &[String]) -> GroupRB {
    let n = table.len();
    GroupRB {
        g_mul: table.to_vec(),
        g_labels: labels.to_vec(),
        h_mul: table.to_vec(),
        h_labels: labels.to_vec(),
        phi: vec![(0..n).collect(); n],
        r: (0..n).collect(),
    }
}

/// The restricted enveloping algebra of the two-dimensional Lie algebra
/// `[s,t] = t` with `s^[p] = s`, `t^[p] = 0`, over `F_p`. Basis `s^i t^j`.
pub fn restricted_enveloping(p: u64) -> Result<HopfData> {
    let field = FieldSpec::prime(p)?;
    let q = p as usize;
    let one = field.one();
    let mut rw = Rewriting::new(field);
    rw.rule(&[1, 0], vec![(vec![0, 1], one.clone()), (vec![1], -&one)]);
    rw.rule(&vec![0; q], vec![(vec![0], one.clone())]);
    rw.rule(&vec![1; q], vec![]);
    let mut basis: Vec<Word> = rw.closure(2, CLOSURE_CAP)?.into_iter().collect();
    basis.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let labels = basis.iter().map(|w| word_label(&["s", "t"], w)).collect();
    let algebra = rw.algebra(&basis, labels)?;
    let d = algebra.dim();
    let gen = |u: usize| basis.iter().position(|w| *w == vec![u]).expect("generator is a basis word");
    let (unit, gens) = (basis.iter().position(Vec::is_empty).expect("unit word"), [gen(0), gen(1)]);
    let mut comul = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for w in &basis {
        let mut dw = Elem2::basis((unit, unit), field);
        let mut sw = algebra.one().clone();
        for &u in w {
            let g = gens[u];
            let mut du = Elem2::basis((g, unit), field);
            du.add_term((unit, g), one.clone());
            dw = algebra.mul2(&dw, &du);
            sw = algebra.mul(&Elem::basis(g, field).neg(), &sw);
        }
        comul.push(dw);
        antipode.push(sw);
    }
    let counit = (0..d).map(|i| if i == unit { one.clone() } else { field.zero() }).collect();
    let h = HopfData {
        algebra,
        coalgebra: CoalgebraData { field, comul, counit },
        antipode: LinMap::new(d, d, antipode)?,
    };
    let report = check_hopf(&h);
    if !report.passed() {
        return Err(Error::Construction(format!("restricted enveloping algebra:\n{}", report.to_text())));
    }
    Ok(h)
}

#[cfg(test)]
mod tests;
