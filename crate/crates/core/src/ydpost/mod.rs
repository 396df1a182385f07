//! Yetter-Drinfeld post-Hopf algebras.
//!
//! A structure is a braided pair `(H, ·, 1, Δ, ε, S)` with a bilinear action
//! `⇀` and the convolution inverse `β` of `α: x ↦ (x⇀-)`. From these we
//! derive the subadjacent Hopf algebra `(H, •, S⇀)` with
//! `x•y = x1·(x2⇀y)` and `S⇀(x) = β_{x1}(S(x2))`, the right action
//! `x↼y = S⇀(x1⇀y1)•x2•y2`, the coaction `Ad_L(a) = a1•S⇀(a3) ⊗ a2` and
//! the braiding `σ(a⊗b) = α_{a1}(β_{a3}(b)) ⊗ a2`.

mod postlie;

use std::collections::BTreeMap;

pub use postlie::{check_post_lie, extract_post_lie, PostLieData};
pub(crate) use postlie::{bilinear, coordinates};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{
    algebra_map_run, antipode_identities, check_algebra, check_coalgebra, coalgebra_map_run, eps_multiplicative,
    hom_inverse_failures, run_axiom, solve_hom_convolution_inverse, unit_coalgebra, ActionTensor, AlgebraData,
    BraidedPair, HomInverse, HopfData, Legs, LinMap,
};
use crate::lin::{tensor, Elem, Elem2};
use crate::report::{AxiomId, AxiomRun, CheckReport, Entry};
use crate::yd::{check_yd_object, Coaction, YdObject};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDPostHopf {
    pub carrier: BraidedPair,
    pub action: ActionTensor,
    pub beta: Option<ActionTensor>,
    pub params: BTreeMap<String, Scalar>,
}

impl YDPostHopf {
    pub fn new(carrier: BraidedPair, action: ActionTensor, beta: Option<ActionTensor>) -> Self {
        YDPostHopf { carrier, action, beta, params: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field()
    }

    pub fn validate(&self) -> Result<()> {
        self.carrier.validate()?;
        self.action.validate()?;
        let d = self.dim();
        if self.action.acting_dim != d || self.action.target_dim != d {
            return Err(Error::Dimension("action must be H ⊗ H → H".into()));
        }
        if let Some(b) = &self.beta {
            b.validate()?;
            if b.acting_dim != d || b.target_dim != d {
                return Err(Error::Dimension("beta must be H ⊗ H → H".into()));
            }
        }
        Ok(())
    }

    /// Solves for `β` and stores it. Fails when `α` has no convolution inverse.
    pub fn solve_beta(&mut self) -> Result<HomInverse> {
        let inv = solve_hom_convolution_inverse(&self.action, &self.carrier.coalgebra)?;
        match &inv.beta {
            Some(b) => self.beta = Some(b.clone()),
            None => {
                return Err(Error::NotInvertible(format!(
                    "α has no convolution inverse (consistent: {}, kernel dimension {})",
                    inv.consistent, inv.kernel_dim
                )))
            }
        }
        Ok(inv)
    }

    /// The supplied `β`, or a freshly solved one.
    pub fn beta_or_solve(&self) -> Result<ActionTensor> {
        match &self.beta {
            Some(b) => Ok(b.clone()),
            None => {
                let mut s = self.clone();
                s.solve_beta()?;
                Ok(s.beta.expect("beta just solved"))
            }
        }
    }

    /// Equality of all structure tensors, ignoring parameters.
    pub fn tensors_eq(&self, other: &YDPostHopf) -> bool {
        self.carrier == other.carrier && self.action == other.action && self.beta == other.beta
    }
}

/// Everything derived from a post-Hopf structure with a known `β`.
#[derive(Clone, Debug)]
pub struct Derived {
    pub beta: ActionTensor,
    pub legs: Legs,
    /// `(H, •, 1, Δ, ε, S⇀)`.
    pub sub: HopfData,
    /// `right.table[x][y] = x↼y`.
    pub right: ActionTensor,
}

impl Derived {
    pub fn new(s: &YDPostHopf) -> Result<Self> {
        let beta = s.beta_or_solve()?;
        Ok(Self::with_beta(s, beta))
    }

    pub(crate) fn with_beta(s: &YDPostHopf, beta: ActionTensor) -> Self {
        let legs = s.carrier.coalgebra.legs();
        let bullet = bullet_algebra(s);
        let s_harp = s_harpoon_with(s, &beta);
        let sub = HopfData { algebra: bullet, coalgebra: s.carrier.coalgebra.clone(), antipode: s_harp };
        let right = leftharpoon_with(s, &sub);
        Derived { beta, legs, sub, right }
    }

    pub fn s_harp(&self) -> &LinMap {
        &self.sub.antipode
    }

    pub fn bullet(&self) -> &AlgebraData {
        &self.sub.algebra
    }
}

/// `(H, •, 1)` with `x•y = x1·(x2⇀y)`; needs no `β`.
pub fn bullet_algebra(s: &YDPostHopf) -> AlgebraData {
    let (a, c) = (&s.carrier.algebra, &s.carrier.coalgebra);
    let d = s.dim();
    let mul = (0..d)
        .map(|x| {
            (0..d)
                .map(|y| {
                    let mut out = Elem::zero();
                    for (&(x1, x2), k) in &c.comul[x] {
                        out.add_scaled(&a.lmul(x1, s.action.basis(x2, y)), k);
                    }
                    out
                })
                .collect()
        })
        .collect();
    AlgebraData { field: a.field, labels: a.labels.clone(), mul, unit: a.unit.clone() }
}

fn s_harpoon_with(s: &YDPostHopf, beta: &ActionTensor) -> LinMap {
    let c = &s.carrier.coalgebra;
    LinMap::from_fn(s.dim(), s.dim(), |x| {
        let mut out = Elem::zero();
        for (&(x1, x2), k) in &c.comul[x] {
            out.add_scaled(&beta.act(x1, s.carrier.s_map.image(x2)), k);
        }
        out
    })
}

fn leftharpoon_with(s: &YDPostHopf, sub: &HopfData) -> ActionTensor {
    let c = &s.carrier.coalgebra;
    let b = &sub.algebra;
    ActionTensor::from_fn(s.field(), s.dim(), s.dim(), |x, y| {
        let mut out = Elem::zero();
        for (&(x1, x2), k) in &c.comul[x] {
            for (&(y1, y2), k2) in &c.comul[y] {
                let u = sub.antipode.apply(s.action.basis(x1, y1));
                let v = b.mul(&b.mul(&u, &b.basis(x2)), &b.basis(y2));
                out.add_scaled(&v, &(k * k2));
            }
        }
        out
    })
}

/// `S⇀(x) = β_{x1}(S(x2))`.
pub fn s_harpoon(s: &YDPostHopf) -> Result<LinMap> {
    Ok(s_harpoon_with(s, &s.beta_or_solve()?))
}

/// The subadjacent Hopf algebra `H⇀ = (H, •, 1, Δ, ε, S⇀)`.
pub fn subadjacent_hopf(s: &YDPostHopf) -> Result<HopfData> {
    Ok(Derived::new(s)?.sub)
}

/// The right action `x↼y`, stored as `table[x][y]`.
pub fn leftharpoon(s: &YDPostHopf) -> Result<ActionTensor> {
    Ok(Derived::new(s)?.right)
}

pub(crate) fn adl(sub: &HopfData, legs: &Legs) -> Coaction {
    let b = &sub.algebra;
    legs.three
        .iter()
        .map(|terms| {
            let mut out = Elem2::zero();
            for ([a1, a2, a3], k) in terms {
                let left = b.mul(&b.basis(*a1), sub.antipode.image(*a3));
                out.add_scaled(&tensor(&left, &b.basis(*a2)), k);
            }
            out
        })
        .collect()
}

/// `Ad_L(a) = a1•S⇀(a3) ⊗ a2`.
pub fn left_coaction_adl(s: &YDPostHopf) -> Result<Coaction> {
    let d = Derived::new(s)?;
    Ok(adl(&d.sub, &d.legs))
}

fn sigma_with(s: &YDPostHopf, d: &Derived) -> Vec<Vec<Elem2>> {
    let n = s.dim();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut out = Elem2::zero();
                    for ([a1, a2, a3], k) in &d.legs.three[a] {
                        let v = s.action.act(*a1, d.beta.basis(*a3, b));
                        out.add_scaled(&tensor(&v, &Elem::basis(*a2, s.field())), k);
                    }
                    out
                })
                .collect()
        })
        .collect()
}

/// `σ(e_a ⊗ e_b) = α_{a1}(β_{a3}(e_b)) ⊗ a2`, as `table[a][b]`.
pub fn braiding_sigma(s: &YDPostHopf) -> Result<Vec<Vec<Elem2>>> {
    Ok(sigma_with(s, &Derived::new(s)?))
}

/// Whether `m ∘ σ = m`.
pub fn is_pre_hopf(s: &YDPostHopf) -> Result<bool> {
    let sigma = braiding_sigma(s)?;
    let a = &s.carrier.algebra;
    Ok((0..s.dim()).all(|x| {
        (0..s.dim()).all(|y| sigma[x][y].map_linear(|&(p, q)| a.mul_basis(p, q).clone()) == *a.mul_basis(x, y))
    }))
}

/// The YD Hopf monoid axioms for `(H, ·, S)` over `H⇀` with `⇀` and `Ad_L`.
pub fn check_yd_hopf_monoid(s: &YDPostHopf) -> CheckReport {
    let mut report = check_algebra(&s.carrier.algebra);
    report.extend(check_coalgebra(&s.carrier.coalgebra));
    match Derived::new(s) {
        Ok(d) => {
            let co = adl(&d.sub, &d.legs);
            let obj = YdObject {
                hopf: &d.sub,
                algebra: &s.carrier.algebra,
                coalgebra: &s.carrier.coalgebra,
                antipode: Some(&s.carrier.s_map),
                action: &s.action,
                coaction: &co,
            };
            report.extend(check_yd_object(&obj));
        }
        Err(e) => report.push(Entry::verdict(AxiomId::YdAction, false, e.to_string())),
    }
    report
}

const AFTER_BASE: &[AxiomId] = &[
    AxiomId::PDot,
    AxiomId::PAssoc,
    AxiomId::PConv,
    AxiomId::PDelta,
    AxiomId::PAnti,
    AxiomId::PMp5,
    AxiomId::LU,
    AxiomId::L1Act,
    AxiomId::LSlin,
    AxiomId::LBeta,
    AxiomId::LDa,
    AxiomId::LDb,
    AxiomId::LMa,
    AxiomId::LMb,
    AxiomId::LAnti2,
    AxiomId::RecHarp,
    AxiomId::RecDot,
    AxiomId::RecAssoc,
];

/// Defining axioms, derived lemmas and recovery identities, in that order.
///
/// The algebra and coalgebra axioms, `P-COALG` and `P-S` come first; if any
/// fails, everything after is skipped. Identities that use `β` are skipped
/// when `P-CONV` fails.
pub fn check_yd_post_hopf(s: &YDPostHopf) -> CheckReport {
    let mut report = CheckReport::new();
    if let Err(e) = s.validate() {
        report.push(Entry::verdict(AxiomId::PCoalg, false, e.to_string()));
        return report;
    }
    let (a, c) = (&s.carrier.algebra, &s.carrier.coalgebra);
    let act = &s.action;
    let n = s.dim();
    let field = s.field();
    let e = |i: usize| Elem::basis(i, field);
    report.extend(check_algebra(a));
    report.extend(check_coalgebra(c));

    report.push(run_axiom(AxiomId::PCoalg, |run| {
        for x in 0..n {
            for y in 0..n {
                let lhs = c.delta(act.basis(x, y));
                let mut rhs = Elem2::zero();
                for (&(x1, x2), k) in &c.comul[x] {
                    for (&(y1, y2), k2) in &c.comul[y] {
                        rhs.add_scaled(&tensor(act.basis(x1, y1), act.basis(x2, y2)), &(k * k2));
                    }
                }
                run.compare(&[x, y], &lhs, &rhs);
                let ev = c.eps(act.basis(x, y));
                let expect = &c.counit[x] * &c.counit[y];
                run.record(&[x, y], ev == expect, || ev.to_string(), || expect.to_string());
            }
        }
        eps_multiplicative(run, a, c);
        unit_coalgebra(run, a, c);
    }));
    report.push(run_axiom(AxiomId::PS, |run| antipode_identities(run, a, c, &s.carrier.s_map)));

    if !report.passed() {
        for id in AFTER_BASE {
            report.push(Entry::skipped(*id, "prerequisite axioms fail"));
        }
        return report;
    }

    let legs = c.legs();
    report.push(run_axiom(AxiomId::PDot, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = act.act(x, a.mul_basis(y, z));
                    let mut rhs = Elem::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        rhs.add_scaled(&a.mul(act.basis(*x1, y), act.basis(*x2, z)), k);
                    }
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::PAssoc, |run| {
        for x in 0..n {
            for y in 0..n {
                let mut left = Elem::zero();
                for ([x1, x2], k) in &legs.two[x] {
                    left.add_scaled(&a.lmul(*x1, act.basis(*x2, y)), k);
                }
                for z in 0..n {
                    let lhs = act.act(x, act.basis(y, z));
                    let rhs = act.act2(&left, &e(z));
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));

    let (beta, conv_entry) = match &s.beta {
        Some(b) => {
            let mut run = AxiomRun::new(AxiomId::PConv);
            let ok = hom_inverse_failures(act, b, c, &mut run);
            (ok.then(|| b.clone()), run.finish())
        }
        None => match solve_hom_convolution_inverse(act, c) {
            Ok(inv) => {
                let detail = format!(
                    "{} unknowns, consistent: {}, kernel dimension {}",
                    inv.unknowns, inv.consistent, inv.kernel_dim
                );
                let ok = inv.beta.is_some();
                let mut entry = Entry::verdict(AxiomId::PConv, ok, detail);
                entry.checked = inv.unknowns;
                (inv.beta, entry)
            }
            Err(err) => (None, Entry::verdict(AxiomId::PConv, false, err.to_string())),
        },
    };
    if s.beta.is_none() && beta.is_some() {
        report.note("β solved from the convolution-inverse system");
    }
    report.push(conv_entry);
    let derived = beta.map(|b| Derived::with_beta(s, b));

    // Identities below are pushed in catalog order; those needing β are
    // skipped when it is unavailable.
    let mut pending: Vec<Entry> = Vec::new();
    let skip = |id: AxiomId| Entry::skipped(id, "β unavailable (P-CONV fails)");

    match &derived {
        Some(d) => {
            let beta = &d.beta;
            let sh = d.s_harp();
            let right = &d.right;
            pending.push(run_axiom(AxiomId::PDelta, |run| {
                for x in 0..n {
                    for y in 0..n {
                        let lhs = c.delta(a.mul_basis(x, y));
                        let mut rhs = Elem2::zero();
                        for ([x1, x2, x3, x4], k) in &legs.four[x] {
                            for ([y1, y2], k2) in &legs.two[y] {
                                let inner = act.act(*x2, beta.basis(*x4, *y1));
                                let t = tensor(&a.lmul(*x1, &inner), a.mul_basis(*x3, *y2));
                                rhs.add_scaled(&t, &(k * k2));
                            }
                        }
                        run.compare(&[x, y], &lhs, &rhs);
                    }
                }
            }));
            pending.push(run_axiom(AxiomId::PAnti, |run| {
                for x in 0..n {
                    let lhs = c.delta(sh.image(x));
                    let mut rhs = Elem2::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        rhs.add_scaled(&tensor(sh.image(*x2), sh.image(*x1)), k);
                    }
                    run.compare(&[x], &lhs, &rhs);
                }
            }));
            pending.push(run_axiom(AxiomId::PMp5, |run| mp5_run(run, c, act, right)));
        }
        None => {
            for id in [AxiomId::PDelta, AxiomId::PAnti, AxiomId::PMp5] {
                pending.push(skip(id));
            }
        }
    }

    pending.push(run_axiom(AxiomId::LU, |run| {
        for x in 0..n {
            run.compare(&[x], &act.act(x, a.one()), &a.one().scaled(&c.counit[x]));
        }
    }));
    pending.push(run_axiom(AxiomId::L1Act, |run| {
        for y in 0..n {
            run.compare(&[y], &act.act2(a.one(), &e(y)), &e(y));
        }
    }));
    pending.push(run_axiom(AxiomId::LSlin, |run| {
        let sm = &s.carrier.s_map;
        for x in 0..n {
            for y in 0..n {
                run.compare(&[x, y], &sm.apply(act.basis(x, y)), &act.act(x, sm.image(y)));
            }
        }
    }));
    match &derived {
        Some(d) => pending.push(run_axiom(AxiomId::LBeta, |run| {
            for x in 0..n {
                for y in 0..n {
                    run.compare(&[x, y], d.beta.basis(x, y), &act.act2(d.s_harp().image(x), &e(y)));
                }
            }
        })),
        None => pending.push(skip(AxiomId::LBeta)),
    }
    pending.push(run_axiom(AxiomId::LDa, |run| {
        for x in 0..n {
            for y in 0..n {
                let lhs = c.delta(act.basis(x, y));
                let mut rhs = Elem2::zero();
                for ([x1, x2], k) in &legs.two[x] {
                    for ([y1, y2], k2) in &legs.two[y] {
                        rhs.add_scaled(&tensor(act.basis(*x1, *y1), act.basis(*x2, *y2)), &(k * k2));
                    }
                }
                run.compare(&[x, y], &lhs, &rhs);
            }
        }
    }));
    match &derived {
        Some(d) => pending.push(run_axiom(AxiomId::LDb, |run| {
            let beta = &d.beta;
            for x in 0..n {
                for y in 0..n {
                    let lhs = c.delta(beta.basis(x, y));
                    let mut rhs = Elem2::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        for ([y1, y2], k2) in &legs.two[y] {
                            rhs.add_scaled(&tensor(beta.basis(*x2, *y1), beta.basis(*x1, *y2)), &(k * k2));
                        }
                    }
                    run.compare(&[x, y], &lhs, &rhs);
                }
            }
        })),
        None => pending.push(skip(AxiomId::LDb)),
    }
    pending.push(run_axiom(AxiomId::LMa, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = act.act(x, a.mul_basis(y, z));
                    let mut rhs = Elem::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        rhs.add_scaled(&a.mul(act.basis(*x1, y), act.basis(*x2, z)), k);
                    }
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    match &derived {
        Some(d) => {
            let beta = &d.beta;
            pending.push(run_axiom(AxiomId::LMb, |run| {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let lhs = beta.act(x, a.mul_basis(y, z));
                            let mut rhs = Elem::zero();
                            for ([x1, x2], k) in &legs.two[x] {
                                rhs.add_scaled(&a.mul(beta.basis(*x2, y), beta.basis(*x1, z)), k);
                            }
                            run.compare(&[x, y, z], &lhs, &rhs);
                        }
                    }
                }
            }));
            pending.push(run_axiom(AxiomId::LAnti2, |run| {
                let sm = &s.carrier.s_map;
                for x in 0..n {
                    let mut lhs = Elem::zero();
                    for ([x1, x2, x3, x4], k) in &legs.four[x] {
                        let left = beta.act(*x2, sm.image(*x3));
                        lhs.add_scaled(&a.mul(&left, beta.basis(*x1, *x4)), k);
                    }
                    run.compare(&[x], &lhs, &a.one().scaled(&c.counit[x]));
                }
            }));
        }
        None => {
            pending.push(skip(AxiomId::LMb));
            pending.push(skip(AxiomId::LAnti2));
        }
    }

    let bullet = bullet_algebra(s);
    pending.push(run_axiom(AxiomId::RecHarp, |run| {
        let sm = &s.carrier.s_map;
        for x in 0..n {
            for y in 0..n {
                let mut rhs = Elem::zero();
                for ([x1, x2], k) in &legs.two[x] {
                    rhs.add_scaled(&a.mul(sm.image(*x1), bullet.mul_basis(*x2, y)), k);
                }
                run.compare(&[x, y], act.basis(x, y), &rhs);
            }
        }
    }));
    match &derived {
        Some(d) => pending.push(run_axiom(AxiomId::RecDot, |run| {
            for x in 0..n {
                for y in 0..n {
                    let mut rhs = Elem::zero();
                    for ([x1, x2], k) in &legs.two[x] {
                        let moved = act.act2(d.s_harp().image(*x2), &e(y));
                        rhs.add_scaled(&bullet.mul(&e(*x1), &moved), k);
                    }
                    run.compare(&[x, y], a.mul_basis(x, y), &rhs);
                }
            }
        })),
        None => pending.push(skip(AxiomId::RecDot)),
    }
    pending.push(run_axiom(AxiomId::RecAssoc, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = act.act(x, act.basis(y, z));
                    let rhs = act.act2(bullet.mul_basis(x, y), &e(z));
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));

    for en in pending {
        report.push(en);
    }
    report
}

/// `(x1⇀y1)⊗(x2↼y2) = (x2⇀y2)⊗(x1↼y1)` for all basis pairs.
pub(crate) fn mp5_run(run: &mut AxiomRun, c: &crate::hopf::CoalgebraData, left: &ActionTensor, right: &ActionTensor) {
    let n = c.dim();
    for x in 0..n {
        for y in 0..n {
            let mut lhs = Elem2::zero();
            let mut rhs = Elem2::zero();
            for (&(x1, x2), k) in &c.comul[x] {
                for (&(y1, y2), k2) in &c.comul[y] {
                    let kk = k * k2;
                    lhs.add_scaled(&tensor(left.basis(x1, y1), right.basis(x2, y2)), &kk);
                    rhs.add_scaled(&tensor(left.basis(x2, y2), right.basis(x1, y1)), &kk);
                }
            }
            run.compare(&[x, y], &lhs, &rhs);
        }
    }
}

/// Checks that `g: s → t` preserves `·`, `1`, `Δ`, `ε` and `⇀`.
pub fn check_post_hopf_morphism(g: &LinMap, s: &YDPostHopf, t: &YDPostHopf) -> CheckReport {
    let mut report = CheckReport::new();
    if g.dom != s.dim() || g.cod != t.dim() {
        report.push(Entry::verdict(AxiomId::PmAlg, false, "map has the wrong shape"));
        return report;
    }
    report.push(run_axiom(AxiomId::PmAlg, |run| algebra_map_run(g, &s.carrier.algebra, &t.carrier.algebra, run)));
    report.push(run_axiom(AxiomId::PmCoalg, |run| {
        coalgebra_map_run(g, &s.carrier.coalgebra, &t.carrier.coalgebra, run)
    }));
    report.push(run_axiom(AxiomId::PmAct, |run| {
        for x in 0..s.dim() {
            for y in 0..s.dim() {
                let lhs = g.apply(s.action.basis(x, y));
                let rhs = t.action.act2(g.image(x), g.image(y));
                run.compare(&[x, y], &lhs, &rhs);
            }
        }
    }));
    report
}
