//! Relative Rota-Baxter operators `R: K → H` in Yetter-Drinfeld modules,
//! the functors between them and post-Hopf structures, and restrictions to
//! group-like and primitive elements.
//!
//! `H` is an ordinary Hopf algebra acting on `K` by `⇀`; `K` carries an
//! algebra, a coalgebra and a left `H`-coaction. `L` sends a post-Hopf
//! structure to `Id: H → H⇀`, `M` moves the structure of `K` onto `H` along
//! `R`, and the functor written `R` here as [`functor_r`] puts the action
//! `a ⇀_R b = R(a)⇀b` on `K` itself.

mod group;

pub use group::{check_group_rb, check_lie_rb, GroupRB, LieRB};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{
    algebra_map_run, antipode_identities, check_algebra, check_coalgebra, check_hopf, coalgebra_map_run,
    convolution_inverse, primitives, run_axiom, ActionTensor, AlgebraData, BraidedPair, CoalgebraData, HopfData,
    LinMap,
};
use crate::lin::{tensor, Elem, Elem2};
use crate::linalg;
use crate::report::{AxiomId, AxiomRun, CheckReport, Entry};
use crate::yd::{check_yd_object, Coaction, YdObject};
use crate::ydpost::{adl, check_post_hopf_morphism, coordinates, Derived, YDPostHopf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelRB {
    pub h: HopfData,
    pub k_alg: AlgebraData,
    pub k_coalg: CoalgebraData,
    pub k_antipode: Option<LinMap>,
    /// `action.table[h][k] = e_h ⇀ e_k`.
    pub action: ActionTensor,
    /// `ρ(e_k) ∈ H ⊗ K`; derived from the operator when absent.
    pub coaction: Option<Coaction>,
    pub r_map: LinMap,
}

/// Pre-Rota-Baxter axioms only, or additionally bijectivity and `RB-3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbMode {
    Pre,
    Full,
}

/// Which coaction formula the functor to post-Hopf structures on `K` expects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// Bijective `R` with coaction `(Id⊗R⁻¹)Ad_L R`.
    D,
    /// Injective `R` with coaction `a ↦ R(a1)S_H(R(a3)) ⊗ a2`.
    CPrime,
}

impl RelRB {
    pub fn field(&self) -> FieldSpec {
        self.h.field()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    pub fn dim_k(&self) -> usize {
        self.k_alg.dim()
    }

    pub fn validate(&self) -> Result<()> {
        self.h.validate()?;
        self.k_alg.validate()?;
        self.k_coalg.validate()?;
        self.action.validate()?;
        let (dh, dk) = (self.dim_h(), self.dim_k());
        if self.k_coalg.dim() != dk {
            return Err(Error::Dimension("K algebra and coalgebra dimensions differ".into()));
        }
        if self.action.acting_dim != dh || self.action.target_dim != dk {
            return Err(Error::Dimension("action must be H ⊗ K → K".into()));
        }
        if self.r_map.dom != dk || self.r_map.cod != dh {
            return Err(Error::Dimension("R must map K to H".into()));
        }
        if let Some(s) = &self.k_antipode {
            if s.dom != dk || s.cod != dk {
                return Err(Error::Dimension("S_K must be an endomorphism of K".into()));
            }
        }
        if let Some(co) = &self.coaction {
            if co.len() != dk || co.iter().flat_map(|t| t.keys()).any(|&(a, b)| a >= dh || b >= dk) {
                return Err(Error::Dimension("coaction must map K to H ⊗ K".into()));
            }
        }
        let fields = [self.k_alg.field, self.k_coalg.field, self.action.field];
        if fields.iter().any(|f| *f != self.field()) {
            return Err(Error::Field("H and K over different fields".into()));
        }
        Ok(())
    }

    pub fn r(&self, x: &Elem) -> Elem {
        self.r_map.apply(x)
    }

    pub fn r_inverse(&self) -> Result<Option<LinMap>> {
        if self.dim_h() != self.dim_k() {
            return Ok(None);
        }
        self.r_map.inverse(self.field())
    }

    pub fn is_injective(&self) -> bool {
        linalg::rank(&self.r_map.to_matrix(self.field())) == self.dim_k()
    }

    /// The supplied coaction, or the one given by the category formula:
    /// the `D` formula when `R` is invertible, the `C′` formula otherwise.
    pub fn coaction_or_derived(&self) -> Result<(Coaction, Option<&'static str>)> {
        if let Some(c) = &self.coaction {
            return Ok((c.clone(), None));
        }
        match self.r_inverse()? {
            Some(inv) => Ok((coaction_d_with(self, &inv), Some("coaction derived as (Id⊗R⁻¹)Ad_L R"))),
            None => Ok((coaction_cprime(self), Some("coaction derived as R(a1)S_H(R(a3))⊗a2"))),
        }
    }
}

fn coaction_d_with(r: &RelRB, inv: &LinMap) -> Coaction {
    let ad = adl(&r.h, &r.h.coalgebra.legs());
    let f = r.field();
    (0..r.dim_k())
        .map(|a| {
            let mut out = Elem2::zero();
            for (&h, c) in r.r_map.image(a) {
                let moved = ad[h].map_linear(|&(p, q)| tensor(&Elem::basis(p, f), inv.image(q)));
                out.add_scaled(&moved, c);
            }
            out
        })
        .collect()
}

/// `(Id⊗R⁻¹)Ad_L R`, the coaction of objects in `D`.
pub fn coaction_d(r: &RelRB) -> Result<Coaction> {
    let inv = r.r_inverse()?.ok_or_else(|| Error::NotInvertible("R is not bijective".into()))?;
    Ok(coaction_d_with(r, &inv))
}

/// `a ↦ R(a1)·S_H(R(a3)) ⊗ a2`, the coaction of objects in `C′`.
pub fn coaction_cprime(r: &RelRB) -> Coaction {
    let legs = r.k_coalg.legs();
    let ha = &r.h.algebra;
    let f = r.field();
    legs.three
        .iter()
        .map(|terms| {
            let mut out = Elem2::zero();
            for ([a1, a2, a3], c) in terms {
                let left = ha.mul(r.r_map.image(*a1), &r.h.antipode.apply(r.r_map.image(*a3)));
                out.add_scaled(&tensor(&left, &Elem::basis(*a2, f)), c);
            }
            out
        })
        .collect()
}

/// Whether the coaction (supplied or derived) has the shape required by `cat`,
/// together with the operator condition (bijective, resp. injective).
pub fn in_category(r: &RelRB, cat: Category) -> Result<bool> {
    let (co, _) = r.coaction_or_derived()?;
    Ok(match cat {
        Category::D => match r.r_inverse()? {
            Some(inv) => co == coaction_d_with(r, &inv),
            None => false,
        },
        Category::CPrime => r.is_injective() && co == coaction_cprime(r),
    })
}

/// The Rota-Baxter identities, the coalgebra condition on `R` and the
/// bimonoid axioms of `K`; in full mode also bijectivity, `RB-3` and `S_K`.
pub fn check_rel_rb(r: &RelRB, mode: RbMode) -> CheckReport {
    let mut report = CheckReport::new();
    if let Err(e) = r.validate() {
        report.push(Entry::verdict(AxiomId::RbHopf, false, e.to_string()));
        return report;
    }
    let (ha, hc, sh) = (&r.h.algebra, &r.h.coalgebra, &r.h.antipode);
    let (ka, kc) = (&r.k_alg, &r.k_coalg);
    let act = &r.action;
    let f = r.field();
    let (dh, dk) = (r.dim_h(), r.dim_k());
    let ek = |i: usize| Elem::basis(i, f);

    report.push(Entry::aggregate(AxiomId::RbHopf, &check_hopf(&r.h)));
    let mut kbase = check_algebra(ka);
    kbase.extend(check_coalgebra(kc));
    report.push(Entry::aggregate(AxiomId::RbKalg, &kbase));

    let coaction = match r.coaction_or_derived() {
        Ok((co, note)) => {
            report.push(Entry::verdict(AxiomId::RbCoact, true, ""));
            if let Some(n) = note {
                report.note(n);
            }
            Some(co)
        }
        Err(e) => {
            report.push(Entry::verdict(AxiomId::RbCoact, false, e.to_string()));
            None
        }
    };
    match &coaction {
        Some(co) => {
            let obj = YdObject {
                hopf: &r.h,
                algebra: ka,
                coalgebra: kc,
                antipode: r.k_antipode.as_ref(),
                action: act,
                coaction: co,
            };
            let mut sub = check_yd_object(&obj);
            sub.push(crate::yd::unit_counit_run(AxiomId::RbBimon, ka, kc));
            report.push(Entry::aggregate(AxiomId::RbBimon, &sub));
        }
        None => report.push(Entry::skipped(AxiomId::RbBimon, "no coaction")),
    }

    report.push(run_axiom(AxiomId::RbCoalg, |run| {
        coalgebra_map_run(&r.r_map, kc, hc, run);
        run.compare(&[], &r.r(ka.one()), ha.one());
    }));

    let klegs = kc.legs();
    report.push(run_axiom(AxiomId::Rb1, |run| {
        for a in 0..dk {
            for b in 0..dk {
                let lhs = ha.mul(r.r_map.image(a), r.r_map.image(b));
                let mut inner = Elem::zero();
                for ([a1, a2], c) in &klegs.two[a] {
                    inner.add_scaled(&ka.lmul(*a1, &act.act2(r.r_map.image(*a2), &ek(b))), c);
                }
                run.compare(&[a, b], &lhs, &r.r(&inner));
            }
        }
    }));

    report.push(run_axiom(AxiomId::Rb2, |run| {
        // u[a][b] = R(R(a)⇀b), su = S_H(u), p[a][b] = R(a)·R(b).
        let u: Vec<Vec<Elem>> =
            (0..dk).map(|a| (0..dk).map(|b| r.r(&act.act2(r.r_map.image(a), &ek(b)))).collect()).collect();
        let su: Vec<Vec<Elem>> = u.iter().map(|row| row.iter().map(|x| sh.apply(x)).collect()).collect();
        let p: Vec<Vec<Elem>> =
            (0..dk).map(|a| (0..dk).map(|b| ha.mul(r.r_map.image(a), r.r_map.image(b))).collect()).collect();
        for a in 0..dk {
            for b in 0..dk {
                let mut lhs = Elem2::zero();
                let mut rhs = Elem2::zero();
                for ([a1, a2, a3], c) in &klegs.three[a] {
                    for ([b1, b2, b3], c2) in &klegs.three[b] {
                        let cc = c * c2;
                        lhs.add_scaled(&tensor(&ha.mul(&su[*a1][*b1], &p[*a2][*b2]), &u[*a3][*b3]), &cc);
                        rhs.add_scaled(&tensor(&ha.mul(&su[*a2][*b2], &p[*a3][*b3]), &u[*a1][*b1]), &cc);
                    }
                }
                run.compare(&[a, b], &lhs, &rhs);
            }
        }
    }));

    if mode == RbMode::Pre {
        return report;
    }
    let inv = match r.r_inverse() {
        Ok(Some(inv)) => inv,
        Ok(None) | Err(_) => {
            report.push(Entry::verdict(AxiomId::Rb3, false, "not bijective"));
            report.push(Entry::skipped(AxiomId::RbSk, "R is not bijective"));
            return report;
        }
    };
    let hlegs = hc.legs();
    let inv_s = inv.compose(sh);
    report.push(run_axiom(AxiomId::Rb3, |run| {
        for a in 0..dh {
            let mut lhs = Elem::zero();
            for ([a1, a2, a3], c) in &hlegs.three[a] {
                lhs.add_scaled(&ka.mul(&act.act(*a1, inv_s.image(*a2)), inv.image(*a3)), c);
            }
            run.compare(&[a], &lhs, &ka.one().scaled(&hc.counit[a]));
        }
    }));
    report.push(match antipode_sk(r) {
        Ok(s) => match &r.k_antipode {
            Some(given) if *given != s => Entry::verdict(AxiomId::RbSk, false, "supplied S_K differs from the derived one"),
            _ => Entry::verdict(AxiomId::RbSk, true, ""),
        },
        Err(e) => Entry::verdict(AxiomId::RbSk, false, e.to_string()),
    });
    report
}

/// `S_K(a) = R(a1) ⇀ R⁻¹S_H R(a2)`, verified to be a two-sided antipode of `K`.
pub fn antipode_sk(r: &RelRB) -> Result<LinMap> {
    let inv = r.r_inverse()?.ok_or_else(|| Error::NotInvertible("R is not bijective".into()))?;
    let t = inv.compose(&r.h.antipode).compose(&r.r_map);
    let s = LinMap::from_fn(r.dim_k(), r.dim_k(), |a| {
        let mut out = Elem::zero();
        for (&(a1, a2), c) in &r.k_coalg.comul[a] {
            out.add_scaled(&r.action.act2(r.r_map.image(a1), t.image(a2)), c);
        }
        out
    });
    let mut run = AxiomRun::new(AxiomId::RbSk);
    antipode_identities(&mut run, &r.k_alg, &r.k_coalg, &s);
    let e = run.finish();
    if !e.passed() {
        return Err(Error::Construction(format!(
            "S_K is not an antipode of K (inconsistent input), witness {}",
            e.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(s)
}

fn require(report: CheckReport, what: &str) -> Result<()> {
    if report.passed() {
        return Ok(());
    }
    let ids: Vec<&str> = report.entries.iter().filter(|e| !e.passed()).map(|e| e.axiom.as_str()).collect();
    Err(Error::Precondition(format!("{what} fails {}", ids.join(", "))))
}

/// `L(s) = (Id: H → H⇀)` with the action `⇀` and the coaction `Ad_L`.
pub fn functor_l(s: &YDPostHopf) -> Result<RelRB> {
    require(crate::ydpost::check_yd_post_hopf(s), "post-Hopf input")?;
    let d = Derived::new(s)?;
    let coaction = adl(&d.sub, &d.legs);
    Ok(RelRB {
        h: d.sub,
        k_alg: s.carrier.algebra.clone(),
        k_coalg: s.carrier.coalgebra.clone(),
        k_antipode: Some(s.carrier.s_map.clone()),
        action: s.action.clone(),
        coaction: Some(coaction),
        r_map: LinMap::identity(s.dim(), s.field()),
    })
}

fn require_category(r: &RelRB, cat: Category) -> Result<()> {
    match cat {
        Category::D => require(check_rel_rb(r, RbMode::Full), "Rota-Baxter operator")?,
        Category::CPrime => {
            if !r.is_injective() {
                return Err(Error::Precondition("R is not injective".into()));
            }
            require(check_rel_rb(r, RbMode::Pre), "pre-Rota-Baxter operator")?;
        }
    }
    if !in_category(r, cat)? {
        return Err(Error::Precondition(format!("coaction on K is not the one required for {cat:?}")));
    }
    Ok(())
}

/// The structure `(H, ·_R, 1, Δ, ε, S_R, ⇀_R)` for `r` in `D`.
pub fn functor_m(r: &RelRB) -> Result<YDPostHopf> {
    require_category(r, Category::D)?;
    let inv = r.r_inverse()?.expect("bijective in D");
    let (ha, hc, sh) = (&r.h.algebra, &r.h.coalgebra, &r.h.antipode);
    let f = r.field();
    let d = r.dim_h();
    let mul = (0..d)
        .map(|a| (0..d).map(|b| r.r(&r.k_alg.mul(inv.image(a), inv.image(b)))).collect())
        .collect();
    let inv_s = inv.compose(sh);
    let s_map = LinMap::from_fn(d, d, |a| {
        let mut out = Elem::zero();
        for (&(a1, a2), c) in &hc.comul[a] {
            out.add_scaled(&r.action.act(a1, inv_s.image(a2)), c);
        }
        r.r(&out)
    });
    let action = ActionTensor::from_fn(f, d, d, |a, b| r.r(&r.action.act(a, inv.image(b))));
    let beta = ActionTensor::from_fn(f, d, d, |a, b| action.act2(sh.image(a), &Elem::basis(b, f)));
    let algebra = AlgebraData { field: f, labels: ha.labels.clone(), mul, unit: ha.unit.clone() };
    let carrier = BraidedPair { algebra, coalgebra: hc.clone(), s_map };
    Ok(YDPostHopf::new(carrier, action, Some(beta)))
}

/// The structure `(K, a ⇀_R b = R(a)⇀b)` with `β_a = S_H(R(a))⇀-`.
///
/// In `D` the antipode of `K` is `S_K` from [`antipode_sk`] and the
/// subadjacent antipode is checked to be `R⁻¹S_H R`; in `C′` the antipode is
/// the supplied one (or the convolution inverse of the identity) and
/// `R∘S⇀ = S_H∘R` is checked.
pub fn functor_r(r: &RelRB, cat: Category) -> Result<YDPostHopf> {
    require_category(r, cat)?;
    let (ka, kc) = (&r.k_alg, &r.k_coalg);
    let f = r.field();
    let d = r.dim_k();
    let sh = &r.h.antipode;
    let s_k = match cat {
        Category::D => antipode_sk(r)?,
        Category::CPrime => match &r.k_antipode {
            Some(s) => s.clone(),
            None => convolution_inverse(&LinMap::identity(d, f), kc, ka)?
                .ok_or_else(|| Error::Precondition("K has no antipode".into()))?,
        },
    };
    let action = ActionTensor::from_fn(f, d, d, |a, b| r.action.act2(r.r_map.image(a), &Elem::basis(b, f)));
    let beta =
        ActionTensor::from_fn(f, d, d, |a, b| r.action.act2(&sh.apply(r.r_map.image(a)), &Elem::basis(b, f)));
    let carrier = BraidedPair { algebra: ka.clone(), coalgebra: kc.clone(), s_map: s_k };
    let out = YDPostHopf::new(carrier, action, Some(beta));
    let s_harp = crate::ydpost::s_harpoon(&out)?;
    let consistent = match cat {
        Category::D => {
            let inv = r.r_inverse()?.expect("bijective in D");
            s_harp == inv.compose(sh).compose(&r.r_map)
        }
        Category::CPrime => r.r_map.compose(&s_harp) == sh.compose(&r.r_map),
    };
    if !consistent {
        return Err(Error::Internal("subadjacent antipode does not intertwine with R".into()));
    }
    Ok(out)
}

/// The descendent Hopf algebra `K_R = (K, a1·(R(a2)⇀b), R⁻¹S_H R)`.
pub fn descendent_hopf(r: &RelRB) -> Result<HopfData> {
    let s = functor_r(r, Category::D)?;
    crate::ydpost::subadjacent_hopf(&s)
}

/// `(f: H → H′, g: K → K′)` is a morphism of operators from `src` to `dst`.
pub fn check_rb_morphism(src: &RelRB, dst: &RelRB, f: &LinMap, g: &LinMap) -> CheckReport {
    let mut report = CheckReport::new();
    if f.dom != src.dim_h() || f.cod != dst.dim_h() || g.dom != src.dim_k() || g.cod != dst.dim_k() {
        report.push(Entry::verdict(AxiomId::RbMorF, false, "maps have the wrong shape"));
        return report;
    }
    report.push(run_axiom(AxiomId::RbMorF, |run| {
        algebra_map_run(f, &src.h.algebra, &dst.h.algebra, run);
        coalgebra_map_run(f, &src.h.coalgebra, &dst.h.coalgebra, run);
    }));
    report.push(run_axiom(AxiomId::RbMorG, |run| {
        algebra_map_run(g, &src.k_alg, &dst.k_alg, run);
        coalgebra_map_run(g, &src.k_coalg, &dst.k_coalg, run);
    }));
    report.push(run_axiom(AxiomId::RbMorR, |run| {
        for a in 0..src.dim_k() {
            run.compare(&[a], &f.apply(src.r_map.image(a)), &dst.r(g.image(a)));
        }
    }));
    report.push(run_axiom(AxiomId::RbMorAct, |run| {
        for h in 0..src.dim_h() {
            for k in 0..src.dim_k() {
                let lhs = g.apply(src.action.basis(h, k));
                let rhs = dst.action.act2(f.image(h), g.image(k));
                run.compare(&[h, k], &lhs, &rhs);
            }
        }
    }));
    report
}

/// One side of the bijection `Hom(L(s), rb) ≅ Hom(s, R′(rb))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjunctionData {
    /// A morphism `(f, g): L(s) → rb`.
    Pair(LinMap, LinMap),
    /// A post-Hopf morphism `g: s → R′(rb)`.
    Map(LinMap),
}

/// Sends `(f, g)` to `g` and `g` to `(R∘g, g)`, after checking that the
/// input is a morphism on its side. `rb` must lie in `C′`.
pub fn adjunction_bijection(rb: &RelRB, s: &YDPostHopf, input: &AdjunctionData) -> Result<AdjunctionData> {
    let target = functor_r(rb, Category::CPrime)?;
    let ls = functor_l(s)?;
    match input {
        AdjunctionData::Pair(f, g) => {
            require(check_rb_morphism(&ls, rb, f, g), "operator morphism")?;
            Ok(AdjunctionData::Map(g.clone()))
        }
        AdjunctionData::Map(g) => {
            require(check_post_hopf_morphism(g, s, &target), "post-Hopf morphism")?;
            Ok(AdjunctionData::Pair(rb.r_map.compose(g), g.clone()))
        }
    }
}

/// The induced operator between the groups spanned by the group-like
/// `candidates` of `K` and their images in `H`.
pub fn restrict_to_grouplikes(r: &RelRB, candidates: &[Elem]) -> Result<GroupRB> {
    let (ka, kc) = (&r.k_alg, &r.k_coalg);
    let ha = &r.h.algebra;
    for (i, v) in candidates.iter().enumerate() {
        if kc.delta(v) != tensor(v, v) || !kc.eps(v).is_one() {
            return Err(Error::Precondition(format!("candidate {i} ({v}) is not group-like")));
        }
    }
    let find = |set: &[Elem], x: &Elem| set.iter().position(|y| y == x);
    let n = candidates.len();
    let mut h_mul = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = ka.mul(&candidates[i], &candidates[j]);
            h_mul[i][j] = find(candidates, &p)
                .ok_or_else(|| Error::Precondition(format!("candidates not closed: {i}·{j} = {p}")))?;
        }
    }
    let mut images: Vec<Elem> = Vec::new();
    let mut rmap = Vec::with_capacity(n);
    for v in candidates {
        let img = r.r(v);
        let idx = match find(&images, &img) {
            Some(i) => i,
            None => {
                images.push(img);
                images.len() - 1
            }
        };
        rmap.push(idx);
    }
    let m = images.len();
    let mut g_mul = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let p = ha.mul(&images[i], &images[j]);
            g_mul[i][j] = find(&images, &p)
                .ok_or_else(|| Error::Precondition(format!("images of R not closed: {i}·{j} = {p}")))?;
        }
    }
    let mut phi = vec![vec![0; n]; m];
    for g in 0..m {
        for k in 0..n {
            let moved = r.action.act2(&images[g], &candidates[k]);
            phi[g][k] = find(candidates, &moved)
                .ok_or_else(|| Error::Precondition(format!("action of image {g} leaves the candidates")))?;
        }
    }
    let label = |labels: &[String], v: &Elem| match v.iter().next() {
        Some((&i, c)) if v.len() == 1 && c.is_one() => labels[i].clone(),
        _ => v.to_string(),
    };
    Ok(GroupRB {
        g_labels: images.iter().map(|v| label(&ha.labels, v)).collect(),
        h_labels: candidates.iter().map(|v| label(&ka.labels, v)).collect(),
        g_mul,
        h_mul,
        phi,
        r: rmap,
    })
}

/// The induced operator `P(K) → P(H)` between primitive elements, with
/// brackets given by commutators.
pub fn restrict_to_primitives(r: &RelRB) -> Result<LieRB> {
    let f = r.field();
    let pk = primitives(&r.k_alg, &r.k_coalg);
    let ph = primitives(&r.h.algebra, &r.h.coalgebra);
    let (dk, dh) = (r.dim_k(), r.dim_h());
    let not_closed = |what: &str| Error::Construction(format!("primitive elements not closed under {what}"));
    let bracket = |a: &AlgebraData, basis: &[Elem], ambient: usize| -> Result<Vec<Vec<Elem>>> {
        let mut out = Vec::with_capacity(basis.len());
        for x in basis {
            let mut row = Vec::with_capacity(basis.len());
            for y in basis {
                let comm = a.mul(x, y).sub(&a.mul(y, x));
                row.push(coordinates(basis, ambient, f, &comm)?.ok_or_else(|| not_closed("commutators"))?);
            }
            out.push(row);
        }
        Ok(out)
    };
    let h_bracket = bracket(&r.k_alg, &pk, dk)?;
    let g_bracket = bracket(&r.h.algebra, &ph, dh)?;
    let mut phi = Vec::with_capacity(ph.len());
    for x in &ph {
        let mut row = Vec::with_capacity(pk.len());
        for y in &pk {
            row.push(coordinates(&pk, dk, f, &r.action.act2(x, y))?.ok_or_else(|| not_closed("the action"))?);
        }
        phi.push(row);
    }
    let mut images = Vec::with_capacity(pk.len());
    for y in &pk {
        images.push(coordinates(&ph, dh, f, &r.r(y))?.ok_or_else(|| not_closed("R"))?);
    }
    Ok(LieRB { field: f, g_bracket, h_bracket, phi, r: LinMap { dom: pk.len(), cod: ph.len(), images } })
}

#[cfg(test)]
mod tests;
