//! Yetter-Drinfeld braces and matched pairs of actions, with the functors
//! relating them to post-Hopf structures.
//!
//! A brace pairs an ordinary Hopf algebra `(H, •, T)` with a braided one
//! `(H, ·, S)` on the same coalgebra. `F` reads a brace off a post-Hopf
//! structure via its subadjacent Hopf algebra and `G` recovers the action
//! `a⇀b = S(a1)·(a2•b)`.

use crate::error::{Error, Result};
use crate::hopf::{check_algebra, check_coalgebra, check_hopf, run_axiom, ActionTensor, AlgebraData, BraidedPair, HopfData, LinMap};
use crate::lin::{tensor, Elem};
use crate::report::{AxiomId, AxiomRun, CheckReport, Entry};
use crate::yd::{check_yd_object, YdObject};
use crate::ydpost::{adl, check_yd_post_hopf, mp5_run, Derived, YDPostHopf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDBrace {
    /// `(H, ·, 1, Δ, ε, S)`.
    pub dot_side: BraidedPair,
    /// `(H, •, 1, Δ, ε, T)` on the same coalgebra.
    pub bullet_side: HopfData,
}

/// An ordinary Hopf algebra with a left action `⇀` and a right action `↼`
/// on itself; `right.table[a][b] = a↼b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub hopf: HopfData,
    pub left: ActionTensor,
    pub right: ActionTensor,
}

impl YDBrace {
    pub fn dim(&self) -> usize {
        self.dot_side.dim()
    }

    /// `a⇀b = S(a1)·(a2•b)`.
    pub fn action(&self) -> ActionTensor {
        let (dot, bul) = (&self.dot_side.algebra, &self.bullet_side.algebra);
        let s = &self.dot_side.s_map;
        let c = &self.dot_side.coalgebra;
        ActionTensor::from_fn(dot.field, self.dim(), self.dim(), |a, b| {
            let mut out = Elem::zero();
            for (&(a1, a2), k) in &c.comul[a] {
                out.add_scaled(&dot.mul(s.image(a1), bul.mul_basis(a2, b)), k);
            }
            out
        })
    }

    /// `a↼b = T(a1⇀b1)•a2•b2` for a given `⇀`.
    fn right_action(&self, left: &ActionTensor) -> ActionTensor {
        let bul = &self.bullet_side.algebra;
        let t = &self.bullet_side.antipode;
        let c = &self.dot_side.coalgebra;
        ActionTensor::from_fn(bul.field, self.dim(), self.dim(), |a, b| {
            let mut out = Elem::zero();
            for (&(a1, a2), k) in &c.comul[a] {
                for (&(b1, b2), k2) in &c.comul[b] {
                    let v = bul.mul(&bul.mul(&t.apply(left.basis(a1, b1)), &bul.basis(a2)), &bul.basis(b2));
                    out.add_scaled(&v, &(k * k2));
                }
            }
            out
        })
    }
}

fn shape_ok(b: &YDBrace) -> std::result::Result<(), String> {
    b.dot_side.validate().map_err(|e| e.to_string())?;
    b.bullet_side.validate().map_err(|e| e.to_string())?;
    if b.dot_side.coalgebra != b.bullet_side.coalgebra {
        return Err("the two sides have different coalgebras".into());
    }
    if b.dot_side.algebra.unit != b.bullet_side.algebra.unit {
        return Err("the two sides have different units".into());
    }
    Ok(())
}

/// `HB-HOPF`, `HB-YD`, `HB-COMPAT` and `HB-MP5`.
pub fn check_yd_brace(b: &YDBrace) -> CheckReport {
    let mut report = CheckReport::new();
    if let Err(e) = shape_ok(b) {
        report.push(Entry::verdict(AxiomId::HbHopf, false, e));
        return report;
    }
    let (dot, bul) = (&b.dot_side.algebra, &b.bullet_side.algebra);
    let c = &b.dot_side.coalgebra;
    let s = &b.dot_side.s_map;
    let n = b.dim();
    let legs = c.legs();

    report.push(Entry::aggregate(AxiomId::HbHopf, &check_hopf(&b.bullet_side)));

    let action = b.action();
    let coaction = adl(&b.bullet_side, &legs);
    let mut yd = check_algebra(dot);
    yd.extend(check_coalgebra(c));
    yd.extend(check_yd_object(&YdObject {
        hopf: &b.bullet_side,
        algebra: dot,
        coalgebra: c,
        antipode: Some(s),
        action: &action,
        coaction: &coaction,
    }));
    report.push(Entry::aggregate(AxiomId::HbYd, &yd));

    report.push(run_axiom(AxiomId::HbCompat, |run| {
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let lhs = bul.lmul(a, dot.mul_basis(x, y));
                    let mut rhs = Elem::zero();
                    for ([a1, a2, a3], k) in &legs.three[a] {
                        let left = dot.mul(bul.mul_basis(*a1, x), s.image(*a2));
                        rhs.add_scaled(&dot.mul(&left, bul.mul_basis(*a3, y)), k);
                    }
                    run.compare(&[a, x, y], &lhs, &rhs);
                }
            }
        }
    }));

    let right = b.right_action(&action);
    report.push(run_axiom(AxiomId::HbMp5, |run| mp5_run(run, c, &action, &right)));
    report
}

fn act_run(run: &mut AxiomRun, h: &HopfData, act: &ActionTensor, on_left: bool) {
    let a = &h.algebra;
    let n = h.dim();
    // apply(actor, target)
    let apply = |x: &Elem, y: &Elem| if on_left { act.act2(x, y) } else { act.act2(y, x) };
    for y in 0..n {
        run.compare(&[y], &apply(a.one(), &a.basis(y)), &a.basis(y));
    }
    for x in 0..n {
        for z in 0..n {
            let (first, second) = if on_left { (z, x) } else { (x, z) };
            for y in 0..n {
                let lhs = apply(a.mul_basis(x, z), &a.basis(y));
                let rhs = apply(&a.basis(second), &apply(&a.basis(first), &a.basis(y)));
                run.compare(&[x, z, y], &lhs, &rhs);
            }
        }
    }
}

fn modc_run(run: &mut AxiomRun, h: &HopfData, act: &ActionTensor) {
    let c = &h.coalgebra;
    let n = h.dim();
    for x in 0..n {
        for y in 0..n {
            let lhs = c.delta(act.basis(x, y));
            let mut rhs = crate::lin::Elem2::zero();
            for (&(x1, x2), k) in &c.comul[x] {
                for (&(y1, y2), k2) in &c.comul[y] {
                    rhs.add_scaled(&tensor(act.basis(x1, y1), act.basis(x2, y2)), &(k * k2));
                }
            }
            run.compare(&[x, y], &lhs, &rhs);
            let e = c.eps(act.basis(x, y));
            let expect = &c.counit[x] * &c.counit[y];
            run.record(&[x, y], e == expect, || e.to_string(), || expect.to_string());
        }
    }
}

/// `MP-HOPF`, `MP-ACT`, `MP-MODC`, `MP-1` to `MP-5` and `MP-BC`.
pub fn check_matched_pair(mp: &MatchedPair) -> CheckReport {
    let mut report = CheckReport::new();
    let h = &mp.hopf;
    let n = h.dim();
    let shaped = h.validate().is_ok()
        && [&mp.left, &mp.right].iter().all(|t| t.validate().is_ok() && t.acting_dim == n && t.target_dim == n);
    if !shaped {
        report.push(Entry::verdict(AxiomId::MpHopf, false, "actions or Hopf algebra have the wrong shape"));
        return report;
    }
    let (a, c) = (&h.algebra, &h.coalgebra);
    let (l, r) = (&mp.left, &mp.right);
    let legs = c.legs();
    report.push(Entry::aggregate(AxiomId::MpHopf, &check_hopf(h)));
    report.push(run_axiom(AxiomId::MpAct, |run| {
        act_run(run, h, l, true);
        act_run(run, h, r, false);
    }));
    report.push(run_axiom(AxiomId::MpModc, |run| {
        modc_run(run, h, l);
        modc_run(run, h, r);
    }));
    report.push(run_axiom(AxiomId::Mp1, |run| {
        for x in 0..n {
            run.compare(&[x], &l.act(x, a.one()), &a.one().scaled(&c.counit[x]));
        }
    }));
    report.push(run_axiom(AxiomId::Mp2, |run| {
        for x in 0..n {
            run.compare(&[x], &r.act2(a.one(), &a.basis(x)), &a.one().scaled(&c.counit[x]));
        }
    }));
    report.push(run_axiom(AxiomId::Mp3, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = l.act(x, a.mul_basis(y, z));
                    let mut rhs = Elem::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        for ([y1, y2], k2) in &legs.two[y] {
                            let inner = l.act2(r.basis(*x2, *y2), &a.basis(z));
                            rhs.add_scaled(&a.mul(l.basis(*x1, *y1), &inner), &(k * k2));
                        }
                    }
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::Mp4, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = r.act2(a.mul_basis(x, y), &a.basis(z));
                    let mut rhs = Elem::zero();
                    for ([y1, y2], k) in &legs.two[y] {
                        for ([z1, z2], k2) in &legs.two[z] {
                            let left = r.act2(&a.basis(x), l.basis(*y1, *z1));
                            rhs.add_scaled(&a.mul(&left, r.basis(*y2, *z2)), &(k * k2));
                        }
                    }
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::MpBc, |run| {
        for x in 0..n {
            for y in 0..n {
                let mut rhs = Elem::zero();
                for ([x1, x2], k) in &legs.two[x] {
                    for ([y1, y2], k2) in &legs.two[y] {
                        rhs.add_scaled(&a.mul(l.basis(*x1, *y1), r.basis(*x2, *y2)), &(k * k2));
                    }
                }
                run.compare(&[x, y], a.mul_basis(x, y), &rhs);
            }
        }
    }));
    report.push(run_axiom(AxiomId::Mp5, |run| mp5_run(run, c, l, r)));
    report
}

fn require(report: CheckReport, what: &str) -> Result<()> {
    if report.passed() {
        return Ok(());
    }
    let ids: Vec<&str> = report.entries.iter().filter(|e| !e.passed()).map(|e| e.axiom.as_str()).collect();
    Err(Error::Precondition(format!("{what} fails {}", ids.join(", "))))
}

/// `F(s) = (H, ·, •⇀, S, S⇀)`.
pub fn functor_f(s: &YDPostHopf) -> Result<YDBrace> {
    require(check_yd_post_hopf(s), "post-Hopf input")?;
    let d = Derived::new(s)?;
    let b = YDBrace { dot_side: s.carrier.clone(), bullet_side: d.sub };
    require(check_yd_brace(&b), "brace built from a passing structure")
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(b)
}

/// `G(b)`: the action `a⇀b = S(a1)·(a2•b)` with `β_a = T(a)⇀-`.
pub fn functor_g(b: &YDBrace) -> Result<YDPostHopf> {
    require(check_yd_brace(b), "brace input")?;
    let action = b.action();
    let t = &b.bullet_side.antipode;
    let f = b.dot_side.algebra.field;
    let n = b.dim();
    let beta = ActionTensor::from_fn(f, n, n, |a, y| action.act2(t.image(a), &Elem::basis(y, f)));
    Ok(YDPostHopf::new(b.dot_side.clone(), action, Some(beta)))
}

/// `(H⇀, ⇀, ↼)`.
pub fn to_matched_pair(s: &YDPostHopf) -> Result<MatchedPair> {
    require(check_yd_post_hopf(s), "post-Hopf input")?;
    let d = Derived::new(s)?;
    let mp = MatchedPair { hopf: d.sub, left: s.action.clone(), right: d.right };
    require(check_matched_pair(&mp), "matched pair built from a passing structure")
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(mp)
}

/// `a·b = a1•(T(a2)⇀b)` and `S(a) = a1⇀T(a2)`, with `β_a = T(a)⇀-`.
pub fn from_matched_pair(mp: &MatchedPair) -> Result<YDPostHopf> {
    require(check_matched_pair(mp), "matched pair input")?;
    let h = &mp.hopf;
    let (bul, c, t) = (&h.algebra, &h.coalgebra, &h.antipode);
    let f = bul.field;
    let n = h.dim();
    let l = &mp.left;
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|y| {
                    let mut out = Elem::zero();
                    for (&(a1, a2), k) in &c.comul[a] {
                        out.add_scaled(&bul.lmul(a1, &l.act2(t.image(a2), &Elem::basis(y, f))), k);
                    }
                    out
                })
                .collect()
        })
        .collect();
    let s_map = LinMap::from_fn(n, n, |a| {
        let mut out = Elem::zero();
        for (&(a1, a2), k) in &c.comul[a] {
            out.add_scaled(&l.act(a1, t.image(a2)), k);
        }
        out
    });
    let algebra = AlgebraData { field: f, labels: bul.labels.clone(), mul, unit: bul.unit.clone() };
    let beta = ActionTensor::from_fn(f, n, n, |a, y| l.act2(t.image(a), &Elem::basis(y, f)));
    Ok(YDPostHopf::new(BraidedPair { algebra, coalgebra: c.clone(), s_map }, l.clone(), Some(beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{build_en, build_sweedler, build_trivial, cyclic_group, group_algebra, sweedler_hopf};
    use crate::field::{FieldSpec, Scalar};
    use crate::report::Status;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn sweedler() -> YDPostHopf {
        build_sweedler(Scalar::from_int(1, Q), Q).unwrap()
    }

    #[test]
    fn f_then_g_is_the_identity() {
        let one = Scalar::from_int(1, Q);
        let zero = Scalar::from_int(0, Q);
        let e2 = build_en(2, &[vec![one.clone(), zero.clone()], vec![zero, one]], Q).unwrap();
        for s in [sweedler(), build_trivial(Q).unwrap(), e2] {
            let b = functor_f(&s).unwrap();
            assert!(functor_g(&b).unwrap().tensors_eq(&s));
            assert_eq!(functor_f(&functor_g(&b).unwrap()).unwrap(), b);
        }
    }

    #[test]
    fn bullet_side_of_sweedler_is_h4() {
        let b = functor_f(&sweedler()).unwrap();
        let m = &b.bullet_side.algebra;
        assert!(m.mul_basis(2, 2).is_zero());
        assert_eq!(*m.mul_basis(1, 1), Elem::basis(0, Q));
        assert!(m.mul_basis(1, 2).add(m.mul_basis(2, 1)).is_zero());
    }

    #[test]
    fn replacing_s_by_t_breaks_the_brace() {
        let mut b = functor_f(&sweedler()).unwrap();
        b.dot_side.s_map = b.bullet_side.antipode.clone();
        let report = check_yd_brace(&b);
        assert!(!report.passed());
        assert!(report.status(AxiomId::HbYd) == Some(Status::Fail) || report.status(AxiomId::HbCompat) == Some(Status::Fail));
    }

    #[test]
    fn equal_operations_on_h4() {
        let h = sweedler_hopf(Q);
        let b = YDBrace { dot_side: h.as_pair(), bullet_side: h.clone() };
        let report = check_yd_brace(&b);
        assert_eq!(report.status(AxiomId::HbCompat), Some(Status::Pass));
        assert!(b.action().table.iter().enumerate().all(|(a, row)| row
            .iter()
            .enumerate()
            .all(|(y, v)| *v == Elem::basis(y, Q).scaled(&h.coalgebra.counit[a]))));
    }

    #[test]
    fn matched_pair_round_trip() {
        for s in [sweedler(), build_trivial(Q).unwrap()] {
            let mp = to_matched_pair(&s).unwrap();
            assert!(from_matched_pair(&mp).unwrap().tensors_eq(&s));
        }
    }

    fn trivial_pair() -> MatchedPair {
        let (t, l) = cyclic_group(2);
        let h = group_algebra(&t, l, Q).unwrap();
        let triv = ActionTensor::from_fn(Q, 2, 2, |_, y| Elem::basis(y, Q));
        let right = ActionTensor::from_fn(Q, 2, 2, |x, _| Elem::basis(x, Q));
        MatchedPair { hopf: h, left: triv, right }
    }

    #[test]
    fn trivial_actions_on_c2() {
        let mp = trivial_pair();
        assert!(check_matched_pair(&mp).passed());
        let s = from_matched_pair(&mp).unwrap();
        assert_eq!(s.carrier.algebra.mul, mp.hopf.algebra.mul);
        assert_eq!(s.carrier.s_map, mp.hopf.antipode);
    }

    #[test]
    fn perturbed_right_action_fails_bc() {
        let mut mp = trivial_pair();
        mp.right.table[1][1] = mp.right.table[1][1].neg();
        assert_eq!(check_matched_pair(&mp).status(AxiomId::MpBc), Some(Status::Fail));
    }
}
