//! Hopf monoids in left-left Yetter-Drinfeld modules.
//!
//! An object is a space `V` with an algebra and coalgebra structure, a left
//! action `⇀` of a Hopf algebra `(K, •, T)` and a left coaction
//! `ρ(v) = v₋₁ ⊗ v₀` into `K ⊗ V`. The braiding is `σ(v⊗w) = v₋₁⇀w ⊗ v₀`.

use crate::hopf::{antipode_identities, eps_multiplicative, run_axiom, unit_coalgebra, ActionTensor, AlgebraData, CoalgebraData, HopfData, LinMap};
use crate::lin::{tensor, Elem, Elem2, Elem3};
use crate::report::{AxiomId, CheckReport, Entry};

/// Images `ρ(e_v) ∈ K ⊗ V` of basis vectors, keyed `(k, v)`.
pub type Coaction = Vec<Elem2>;

pub struct YdObject<'a> {
    pub hopf: &'a HopfData,
    pub algebra: &'a AlgebraData,
    pub coalgebra: &'a CoalgebraData,
    pub antipode: Option<&'a LinMap>,
    pub action: &'a ActionTensor,
    pub coaction: &'a [Elem2],
}

impl YdObject<'_> {
    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn rho(&self, x: &Elem) -> Elem2 {
        x.map_linear(|&i| self.coaction[i].clone())
    }

    /// `σ(e_v ⊗ e_w)`.
    pub fn braiding(&self, v: usize, w: usize) -> Elem2 {
        let mut out = Elem2::zero();
        for (&(h, v0), c) in &self.coaction[v] {
            let moved = self.action.act(h, &Elem::basis(w, self.algebra.field));
            out.add_scaled(&tensor(&moved, &Elem::basis(v0, self.algebra.field)), c);
        }
        out
    }

    pub fn braiding_table(&self) -> Vec<Vec<Elem2>> {
        (0..self.dim()).map(|v| (0..self.dim()).map(|w| self.braiding(v, w)).collect()).collect()
    }
}

/// Runs the YD Hopf monoid axioms. `YD-ANTIPODE` is included only when an
/// antipode is supplied.
pub fn check_yd_object(o: &YdObject) -> CheckReport {
    let mut report = CheckReport::new();
    let k = o.hopf;
    let (ka, kc) = (&k.algebra, &k.coalgebra);
    let (va, vc) = (o.algebra, o.coalgebra);
    let field = va.field;
    let dk = k.dim();
    let dv = o.dim();
    if o.action.acting_dim != dk || o.action.target_dim != dv || o.coaction.len() != dv {
        report.push(Entry::verdict(AxiomId::YdAction, false, "action or coaction has the wrong shape"));
        return report;
    }
    let klegs = kc.legs();
    let ev = |i: usize| Elem::basis(i, field);

    report.push(run_axiom(AxiomId::YdAction, |run| {
        for b in 0..dv {
            run.compare(&[b], &o.action.act2(ka.one(), &ev(b)), &ev(b));
        }
        for a in 0..dk {
            for a2 in 0..dk {
                for b in 0..dv {
                    let lhs = o.action.act2(ka.mul_basis(a, a2), &ev(b));
                    let rhs = o.action.act(a, o.action.basis(a2, b));
                    run.compare(&[a, a2, b], &lhs, &rhs);
                }
            }
        }
    }));

    report.push(run_axiom(AxiomId::YdComodule, |run| {
        for v in 0..dv {
            let rho = &o.coaction[v];
            let mut left = Elem3::zero();
            let mut right = Elem3::zero();
            let mut counit = Elem::zero();
            for (&(h, v0), c) in rho {
                for (&(h1, h2), c2) in &kc.comul[h] {
                    left.add_term((h1, h2, v0), c * c2);
                }
                for (&(h2, v00), c2) in &o.coaction[v0] {
                    right.add_term((h, h2, v00), c * c2);
                }
                counit.add_term(v0, c * &kc.counit[h]);
            }
            run.compare(&[v], &left, &right);
            run.compare(&[v], &counit, &ev(v));
        }
    }));

    report.push(run_axiom(AxiomId::YdCompat, |run| {
        for a in 0..dk {
            for v in 0..dv {
                let lhs = o.rho(o.action.basis(a, v));
                let mut rhs = Elem2::zero();
                for ([a1, a2, a3], c) in &klegs.three[a] {
                    for (&(h, v0), c2) in &o.coaction[v] {
                        let left = ka.mul(&ka.mul(&ka.basis(*a1), &ka.basis(h)), k.antipode.image(*a3));
                        let right = o.action.basis(*a2, v0);
                        rhs.add_scaled(&tensor(&left, right), &(c * c2));
                    }
                }
                run.compare(&[a, v], &lhs, &rhs);
            }
        }
    }));

    let sigma = o.braiding_table();
    report.push(run_axiom(AxiomId::YdDelta, |run| {
        for v in 0..dv {
            for w in 0..dv {
                let lhs = vc.delta(va.mul_basis(v, w));
                let mut rhs = Elem2::zero();
                for (&(v1, v2), c) in &vc.comul[v] {
                    for (&(w1, w2), c2) in &vc.comul[w] {
                        for (&(p, q), c3) in &sigma[v2][w1] {
                            let t = tensor(va.mul_basis(v1, p), va.mul_basis(q, w2));
                            rhs.add_scaled(&t, &(&(c * c2) * c3));
                        }
                    }
                }
                run.compare(&[v, w], &lhs, &rhs);
            }
        }
    }));

    report.push(run_axiom(AxiomId::YdColin, |run| {
        for v in 0..dv {
            for w in 0..dv {
                let lhs = o.rho(va.mul_basis(v, w));
                let mut rhs = Elem2::zero();
                for (&(h, v0), c) in &o.coaction[v] {
                    for (&(h2, w0), c2) in &o.coaction[w] {
                        rhs.add_scaled(&tensor(ka.mul_basis(h, h2), va.mul_basis(v0, w0)), &(c * c2));
                    }
                }
                run.compare(&[v, w], &lhs, &rhs);
            }
        }
        run.compare(&[], &o.rho(va.one()), &tensor(ka.one(), va.one()));
        for v in 0..dv {
            let mut lhs = Elem3::zero();
            for (&(h, v0), c) in &o.coaction[v] {
                for (&(p, q), c2) in &vc.comul[v0] {
                    lhs.add_term((h, p, q), c * c2);
                }
            }
            let mut rhs = Elem3::zero();
            for (&(v1, v2), c) in &vc.comul[v] {
                for (&(h, p), c2) in &o.coaction[v1] {
                    for (&(h2, q), c3) in &o.coaction[v2] {
                        for (&hh, c4) in ka.mul_basis(h, h2) {
                            rhs.add_term((hh, p, q), &(&(c * c2) * c3) * c4);
                        }
                    }
                }
            }
            run.compare(&[v], &lhs, &rhs);
            let mut eps = Elem::zero();
            for (&(h, v0), c) in &o.coaction[v] {
                eps.add_term(h, c * &vc.counit[v0]);
            }
            run.compare(&[v], &eps, &ka.one().scaled(&vc.counit[v]));
        }
    }));

    report.push(run_axiom(AxiomId::YdModAlg, |run| {
        for a in 0..dk {
            for v in 0..dv {
                for w in 0..dv {
                    let lhs = o.action.act(a, va.mul_basis(v, w));
                    let mut rhs = Elem::zero();
                    for (&(a1, a2), c) in &kc.comul[a] {
                        rhs.add_scaled(&va.mul(o.action.basis(a1, v), o.action.basis(a2, w)), c);
                    }
                    run.compare(&[a, v, w], &lhs, &rhs);
                }
            }
            run.compare(&[a], &o.action.act(a, va.one()), &va.one().scaled(&kc.counit[a]));
        }
    }));

    report.push(run_axiom(AxiomId::YdModCoalg, |run| {
        for a in 0..dk {
            for v in 0..dv {
                let lhs = vc.delta(o.action.basis(a, v));
                let mut rhs = Elem2::zero();
                for (&(a1, a2), c) in &kc.comul[a] {
                    for (&(v1, v2), c2) in &vc.comul[v] {
                        rhs.add_scaled(&tensor(o.action.basis(a1, v1), o.action.basis(a2, v2)), &(c * c2));
                    }
                }
                run.compare(&[a, v], &lhs, &rhs);
                let e = vc.eps(o.action.basis(a, v));
                let expect = &kc.counit[a] * &vc.counit[v];
                run.record(&[a, v], e == expect, || e.to_string(), || expect.to_string());
            }
        }
    }));

    if let Some(s) = o.antipode {
        report.push(run_axiom(AxiomId::YdAntipode, |run| antipode_identities(run, va, vc, s)));
    }
    report
}

/// The unit, counit and multiplicativity of ε on `V`, shared by callers
/// that need a bialgebra-like prerequisite on the object itself.
pub(crate) fn unit_counit_run(id: AxiomId, a: &AlgebraData, c: &CoalgebraData) -> Entry {
    run_axiom(id, |run| {
        eps_multiplicative(run, a, c);
        unit_coalgebra(run, a, c);
    })
}
