//! Structure-constant containers for algebras, coalgebras and Hopf algebras,
//! plus convolution products and their inverses.
//!
//! All spaces have a fixed finite basis `e_0..e_{d-1}`. Tables are indexed by
//! basis positions: `mul[i][j] = e_i·e_j`, `comul[i] = Δ(e_i)`,
//! `counit[i] = ε(e_i)`, and a [`LinMap`] stores the images of basis vectors.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lin::{tensor, Elem, Elem2, Elem3, Lin};
use crate::linalg::{self, Matrix, Vector};
use crate::report::{AxiomId, AxiomRun, CheckReport, Entry};

/// A linear map between based spaces, stored as images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub dom: usize,
    pub cod: usize,
    pub images: Vec<Elem>,
}

impl LinMap {
    pub fn new(dom: usize, cod: usize, images: Vec<Elem>) -> Result<Self> {
        if images.len() != dom {
            return Err(Error::Dimension(format!("{} images for a domain of dim {dom}", images.len())));
        }
        if let Some(k) = images.iter().flat_map(|e| e.keys()).find(|&&k| k >= cod) {
            return Err(Error::Dimension(format!("image index {k} outside codomain of dim {cod}")));
        }
        Ok(LinMap { dom, cod, images })
    }

    pub fn identity(d: usize, field: FieldSpec) -> Self {
        LinMap { dom: d, cod: d, images: (0..d).map(|i| Elem::basis(i, field)).collect() }
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        LinMap { dom, cod, images: vec![Elem::zero(); dom] }
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl FnMut(usize) -> Elem) -> Self {
        LinMap { dom, cod, images: (0..dom).map(f).collect() }
    }

    pub fn image(&self, i: usize) -> &Elem {
        &self.images[i]
    }

    pub fn apply(&self, x: &Elem) -> Elem {
        x.map_linear(|&i| self.images[i].clone())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        LinMap { dom: other.dom, cod: self.cod, images: other.images.iter().map(|e| self.apply(e)).collect() }
    }

    /// Matrix whose column `j` holds the coordinates of the image of `e_j`.
    pub fn to_matrix(&self, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zeros(self.cod, self.dom, field);
        for (j, img) in self.images.iter().enumerate() {
            for (&i, c) in img {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let mut images = vec![Elem::zero(); m.cols()];
        for ((i, j), c) in m.entries() {
            images[j].add_term(i, c.clone());
        }
        LinMap { dom: m.cols(), cod: m.rows(), images }
    }

    pub fn inverse(&self, field: FieldSpec) -> Result<Option<LinMap>> {
        Ok(linalg::invert(&self.to_matrix(field))?.map(|m| LinMap::from_matrix(&m)))
    }

    pub fn is_identity(&self, field: FieldSpec) -> bool {
        self.dom == self.cod && *self == LinMap::identity(self.dom, field)
    }
}

/// A bilinear action `e_i ⇀ f_j = table[i][j]` of one based space on another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTensor {
    pub field: FieldSpec,
    pub acting_dim: usize,
    pub target_dim: usize,
    pub table: Vec<Vec<Elem>>,
}

impl ActionTensor {
    pub fn zero(field: FieldSpec, acting_dim: usize, target_dim: usize) -> Self {
        ActionTensor { field, acting_dim, target_dim, table: vec![vec![Elem::zero(); target_dim]; acting_dim] }
    }

    pub fn from_fn(field: FieldSpec, acting_dim: usize, target_dim: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let table = (0..acting_dim).map(|i| (0..target_dim).map(|j| f(i, j)).collect()).collect();
        ActionTensor { field, acting_dim, target_dim, table }
    }

    pub fn validate(&self) -> Result<()> {
        if self.table.len() != self.acting_dim || self.table.iter().any(|r| r.len() != self.target_dim) {
            return Err(Error::Dimension("action table has the wrong shape".into()));
        }
        if self.table.iter().flatten().flat_map(|e| e.keys()).any(|&k| k >= self.target_dim) {
            return Err(Error::Dimension("action value outside the target space".into()));
        }
        Ok(())
    }

    /// `e_i ⇀ y`.
    pub fn act(&self, i: usize, y: &Elem) -> Elem {
        y.map_linear(|&j| self.table[i][j].clone())
    }

    /// `x ⇀ y`.
    pub fn act2(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (&i, c) in x {
            out.add_scaled(&self.act(i, y), c);
        }
        out
    }

    pub fn basis(&self, i: usize, j: usize) -> &Elem {
        &self.table[i][j]
    }

    /// The endomorphism `e_i ⇀ -`.
    pub fn endo(&self, i: usize) -> LinMap {
        LinMap { dom: self.target_dim, cod: self.target_dim, images: self.table[i].clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub mul: Vec<Vec<Elem>>,
    pub unit: Elem,
}

impl AlgebraData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.mul.len() != d || self.mul.iter().any(|r| r.len() != d) {
            return Err(Error::Dimension("multiplication table has the wrong shape".into()));
        }
        let keys = self.mul.iter().flatten().flat_map(|e| e.keys()).chain(self.unit.keys());
        if keys.into_iter().any(|&k| k >= d) {
            return Err(Error::Dimension("product outside the basis".into()));
        }
        Ok(())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.mul[i][j]
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (&i, ca) in a {
            for (&j, cb) in b {
                out.add_scaled(&self.mul[i][j], &(ca * cb));
            }
        }
        out
    }

    /// `e_i · y`.
    pub fn lmul(&self, i: usize, y: &Elem) -> Elem {
        y.map_linear(|&j| self.mul[i][j].clone())
    }

    /// Componentwise product in `A ⊗ A`.
    pub fn mul2(&self, a: &Elem2, b: &Elem2) -> Elem2 {
        let mut out = Elem2::zero();
        for (&(i, j), ca) in a {
            for (&(k, l), cb) in b {
                out.add_scaled(&tensor(&self.mul[i][k], &self.mul[j][l]), &(ca * cb));
            }
        }
        out
    }

    pub fn one(&self) -> &Elem {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Elem {
        Elem::basis(i, self.field)
    }

    /// The linear map `x ↦ m(x)` for a fixed left factor.
    pub fn left_mult(&self, a: &Elem) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.mul(a, &self.basis(j)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub field: FieldSpec,
    pub comul: Vec<Elem2>,
    pub counit: Vec<Scalar>,
}

impl CoalgebraData {
    pub fn dim(&self) -> usize {
        self.comul.len()
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.counit.len() != d {
            return Err(Error::Dimension("counit has the wrong length".into()));
        }
        if self.comul.iter().flat_map(|e| e.keys()).any(|&(a, b)| a >= d || b >= d) {
            return Err(Error::Dimension("coproduct outside the basis".into()));
        }
        Ok(())
    }

    pub fn delta(&self, x: &Elem) -> Elem2 {
        x.map_linear(|&i| self.comul[i].clone())
    }

    pub fn eps(&self, x: &Elem) -> Scalar {
        let mut s = self.field.zero();
        for (&i, c) in x {
            s += &(c * &self.counit[i]);
        }
        s
    }

    /// `(Δ ⊗ id)` on `C ⊗ C`.
    pub fn delta_left(&self, t: &Elem2) -> Elem3 {
        let mut out = Elem3::zero();
        for (&(a, b), c) in t {
            for (&(a1, a2), c2) in &self.comul[a] {
                out.add_term((a1, a2, b), c * c2);
            }
        }
        out
    }

    /// `(id ⊗ Δ)` on `C ⊗ C`.
    pub fn delta_right(&self, t: &Elem2) -> Elem3 {
        let mut out = Elem3::zero();
        for (&(a, b), c) in t {
            for (&(b1, b2), c2) in &self.comul[b] {
                out.add_term((a, b1, b2), c * c2);
            }
        }
        out
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comul.iter().all(|t| *t == t.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect())
    }

    pub fn legs(&self) -> Legs {
        Legs::new(self)
    }
}

/// Iterated coproducts of basis vectors, bracketed to the right.
#[derive(Clone, Debug)]
pub struct Legs {
    pub two: Vec<Vec<([usize; 2], Scalar)>>,
    pub three: Vec<Vec<([usize; 3], Scalar)>>,
    pub four: Vec<Vec<([usize; 4], Scalar)>>,
}

impl Legs {
    pub fn new(c: &CoalgebraData) -> Self {
        let two: Vec<Vec<([usize; 2], Scalar)>> =
            c.comul.iter().map(|t| t.iter().map(|(&(a, b), s)| ([a, b], s.clone())).collect()).collect();
        let three = two
            .iter()
            .map(|terms| {
                let mut acc: Lin<[usize; 3]> = Lin::zero();
                for ([a, b], s) in terms {
                    for ([b1, b2], s2) in &two[*b] {
                        acc.add_term([*a, *b1, *b2], s * s2);
                    }
                }
                acc.into_map().into_iter().collect()
            })
            .collect::<Vec<Vec<_>>>();
        let four = three
            .iter()
            .map(|terms| {
                let mut acc: Lin<[usize; 4]> = Lin::zero();
                for ([a, b, c3], s) in terms {
                    for ([c1, c2], s2) in &two[*c3] {
                        acc.add_term([*a, *b, *c1, *c2], s * s2);
                    }
                }
                acc.into_map().into_iter().collect()
            })
            .collect();
        Legs { two, three, four }
    }
}

/// `(H, ·, 1, Δ, ε, S)` with Δ multiplicative for `·`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: LinMap,
}

/// Algebra and coalgebra on one space with an antipode, no compatibility assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedPair {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub s_map: LinMap,
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn validate(&self) -> Result<()> {
        validate_pair(&self.algebra, &self.coalgebra, &self.antipode)
    }

    pub fn as_pair(&self) -> BraidedPair {
        BraidedPair { algebra: self.algebra.clone(), coalgebra: self.coalgebra.clone(), s_map: self.antipode.clone() }
    }
}

impl BraidedPair {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn validate(&self) -> Result<()> {
        validate_pair(&self.algebra, &self.coalgebra, &self.s_map)
    }

    pub fn as_hopf(&self) -> HopfData {
        HopfData { algebra: self.algebra.clone(), coalgebra: self.coalgebra.clone(), antipode: self.s_map.clone() }
    }
}

fn validate_pair(a: &AlgebraData, c: &CoalgebraData, s: &LinMap) -> Result<()> {
    a.validate()?;
    c.validate()?;
    if c.dim() != a.dim() || s.dom != a.dim() || s.cod != a.dim() {
        return Err(Error::Dimension("algebra, coalgebra and antipode dimensions differ".into()));
    }
    if a.field != c.field {
        return Err(Error::Field("algebra and coalgebra over different fields".into()));
    }
    Ok(())
}

pub fn check_algebra(a: &AlgebraData) -> CheckReport {
    let d = a.dim();
    let mut report = CheckReport::new();
    let mut run = AxiomRun::new(AxiomId::AAssoc);
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul_basis(i, j);
            for k in 0..d {
                let lhs = a.mul(ij, &a.basis(k));
                let rhs = a.mul(&a.basis(i), a.mul_basis(j, k));
                run.compare(&[i, j, k], &lhs, &rhs);
            }
        }
    }
    report.push(run.finish());
    let mut run = AxiomRun::new(AxiomId::AUnit);
    for i in 0..d {
        let x = a.basis(i);
        run.compare(&[i], &a.mul(a.one(), &x), &x);
        run.compare(&[i], &a.mul(&x, a.one()), &x);
    }
    report.push(run.finish());
    report
}

pub fn check_coalgebra(c: &CoalgebraData) -> CheckReport {
    let mut report = CheckReport::new();
    let mut run = AxiomRun::new(AxiomId::CCoassoc);
    for (i, t) in c.comul.iter().enumerate() {
        run.compare(&[i], &c.delta_left(t), &c.delta_right(t));
    }
    report.push(run.finish());
    let mut run = AxiomRun::new(AxiomId::CCounit);
    for (i, t) in c.comul.iter().enumerate() {
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for (&(a, b), s) in t {
            left.add_term(b, s * &c.counit[a]);
            right.add_term(a, s * &c.counit[b]);
        }
        let x = Elem::basis(i, c.field);
        run.compare(&[i], &left, &x);
        run.compare(&[i], &right, &x);
    }
    report.push(run.finish());
    report
}

/// Axioms of an ordinary Hopf algebra.
pub fn check_hopf(h: &HopfData) -> CheckReport {
    let mut report = check_algebra(&h.algebra);
    report.extend(check_coalgebra(&h.coalgebra));
    let later = [AxiomId::HDeltaMult, AxiomId::HEpsMult, AxiomId::HUnit, AxiomId::HAntipode];
    if !report.passed() {
        for id in later {
            report.push(Entry::skipped(id, "algebra or coalgebra axioms fail"));
        }
        return report;
    }
    let (a, c) = (&h.algebra, &h.coalgebra);
    let d = h.dim();
    let mut run = AxiomRun::new(AxiomId::HDeltaMult);
    for i in 0..d {
        for j in 0..d {
            let lhs = c.delta(a.mul_basis(i, j));
            let rhs = a.mul2(&c.comul[i], &c.comul[j]);
            run.compare(&[i, j], &lhs, &rhs);
        }
    }
    report.push(run.finish());
    report.push(run_axiom(AxiomId::HEpsMult, |r| eps_multiplicative(r, a, c)));
    report.push(run_axiom(AxiomId::HUnit, |r| unit_coalgebra(r, a, c)));
    report.push(run_axiom(AxiomId::HAntipode, |r| antipode_identities(r, a, c, &h.antipode)));
    report
}

pub(crate) fn eps_multiplicative(run: &mut AxiomRun, a: &AlgebraData, c: &CoalgebraData) {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = c.eps(a.mul_basis(i, j));
            let rhs = &c.counit[i] * &c.counit[j];
            run.record(&[i, j], lhs == rhs, || lhs.to_string(), || rhs.to_string());
        }
    }
}

pub(crate) fn unit_coalgebra(run: &mut AxiomRun, a: &AlgebraData, c: &CoalgebraData) {
    run.compare(&[], &c.delta(a.one()), &tensor(a.one(), a.one()));
    let e = c.eps(a.one());
    run.record(&[], e.is_one(), || e.to_string(), || "1".into());
}

/// `x1·S(x2) = ε(x)1 = S(x1)·x2` on every basis vector.
pub(crate) fn antipode_identities(run: &mut AxiomRun, a: &AlgebraData, c: &CoalgebraData, s: &LinMap) {
    for i in 0..a.dim() {
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for (&(x1, x2), k) in &c.comul[i] {
            left.add_scaled(&a.mul(&a.basis(x1), s.image(x2)), k);
            right.add_scaled(&a.mul(s.image(x1), &a.basis(x2)), k);
        }
        let expect = a.one().scaled(&c.counit[i]);
        run.compare(&[i], &left, &expect);
        run.compare(&[i], &right, &expect);
    }
}

/// Runs `body` as the single instance set of axiom `id`.
pub(crate) fn run_axiom(id: AxiomId, body: impl FnOnce(&mut AxiomRun)) -> Entry {
    let mut run = AxiomRun::new(id);
    body(&mut run);
    run.finish()
}

/// `(f * g)(x) = f(x1)·g(x2)` in `Hom(C, A)`.
pub fn convolution(f: &LinMap, g: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<LinMap> {
    check_hom_shape(f, c, a)?;
    check_hom_shape(g, c, a)?;
    Ok(LinMap::from_fn(c.dim(), a.dim(), |i| {
        let mut out = Elem::zero();
        for (&(x1, x2), k) in &c.comul[i] {
            out.add_scaled(&a.mul(f.image(x1), g.image(x2)), k);
        }
        out
    }))
}

fn check_hom_shape(f: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<()> {
    if f.dom != c.dim() || f.cod != a.dim() {
        return Err(Error::Dimension(format!(
            "map {}→{} used in Hom of spaces {}→{}",
            f.dom,
            f.cod,
            c.dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// The unit `x ↦ ε(x)1` of the convolution algebra.
pub fn convolution_unit(c: &CoalgebraData, a: &AlgebraData) -> LinMap {
    LinMap::from_fn(c.dim(), a.dim(), |i| a.one().scaled(&c.counit[i]))
}

/// Two-sided convolution inverse of `f`, if it exists.
///
/// Solves `f * g = uε` for the `d_C·d_A` coordinates of `g`. A two-sided
/// inverse is in particular the unique right inverse, so a nonzero kernel
/// means no inverse; the left identity is verified afterwards.
pub fn convolution_inverse(f: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<Option<LinMap>> {
    check_hom_shape(f, c, a)?;
    let (dc, da) = (c.dim(), a.dim());
    let field = a.field;
    let mut m = Matrix::zeros(dc * da, dc * da, field);
    let mut rhs = Vector::zeros(dc * da, field);
    for x in 0..dc {
        for (&(x1, x2), k) in &c.comul[x] {
            for z in 0..da {
                let prod = a.mul(f.image(x1), &a.basis(z));
                for (&w, v) in &prod {
                    m.add_to(x * da + w, x2 * da + z, &(k * v));
                }
            }
        }
        for (&w, v) in a.one() {
            rhs.set(x * da + w, v * &c.counit[x]);
        }
    }
    let Some(sol) = linalg::solve(&m, &rhs)? else { return Ok(None) };
    if !sol.kernel.is_empty() {
        return Ok(None);
    }
    let g = LinMap::from_fn(dc, da, |k| {
        (0..da)
            .map(|z| (z, sol.particular.get(k * da + z)))
            .collect()
    });
    if convolution(&g, f, c, a)? != convolution_unit(c, a) {
        return Ok(None);
    }
    Ok(Some(g))
}

/// Result of inverting `α: C → End(V)` under `(α*β)(x) = α_{x1}∘β_{x2}`.
#[derive(Clone, Debug)]
pub struct HomInverse {
    pub beta: Option<ActionTensor>,
    pub unknowns: usize,
    pub kernel_dim: usize,
    pub consistent: bool,
}

/// Solves `α_{x1}∘β_{x2} = ε(x)id` for the `d_C·d_V²` coordinates of `β`.
///
/// The system splits into one block per basis vector `e_y` of `V`, since the
/// values `β_x(e_y)` only meet equations evaluated at `e_y`; the total
/// kernel dimension is the sum over blocks. The left identity
/// `β_{x1}∘α_{x2} = ε(x)id` is then verified.
pub fn solve_hom_convolution_inverse(alpha: &ActionTensor, c: &CoalgebraData) -> Result<HomInverse> {
    if alpha.acting_dim != c.dim() {
        return Err(Error::Dimension("action and coalgebra dimensions differ".into()));
    }
    let (dc, dv) = (c.dim(), alpha.target_dim);
    let field = alpha.field;
    let unknowns = dc * dv * dv;
    let mut beta = ActionTensor::zero(field, dc, dv);
    let mut kernel_dim = 0;
    let mut consistent = true;
    // Block matrix does not depend on y: rows (x, w), columns (x2, z).
    let mut m = Matrix::zeros(dc * dv, dc * dv, field);
    for x in 0..dc {
        for (&(x1, x2), k) in &c.comul[x] {
            for z in 0..dv {
                for (&w, v) in alpha.basis(x1, z) {
                    m.add_to(x * dv + w, x2 * dv + z, &(k * v));
                }
            }
        }
    }
    for y in 0..dv {
        let mut rhs = Vector::zeros(dc * dv, field);
        for x in 0..dc {
            rhs.set(x * dv + y, c.counit[x].clone());
        }
        match linalg::solve(&m, &rhs)? {
            None => consistent = false,
            Some(sol) => {
                kernel_dim += sol.kernel.len();
                for x in 0..dc {
                    beta.table[x][y] = (0..dv).map(|z| (z, sol.particular.get(x * dv + z))).collect();
                }
            }
        }
    }
    let ok = consistent && kernel_dim == 0 && hom_inverse_holds(alpha, &beta, c);
    Ok(HomInverse { beta: ok.then_some(beta), unknowns, kernel_dim, consistent })
}

pub fn hom_convolution_inverse_endo(alpha: &ActionTensor, c: &CoalgebraData) -> Result<Option<ActionTensor>> {
    Ok(solve_hom_convolution_inverse(alpha, c)?.beta)
}

/// Both `α*β` and `β*α` equal `ε(-)id`.
pub fn hom_inverse_holds(alpha: &ActionTensor, beta: &ActionTensor, c: &CoalgebraData) -> bool {
    hom_inverse_failures(alpha, beta, c, &mut AxiomRun::new(AxiomId::PConv))
}

pub(crate) fn hom_inverse_failures(alpha: &ActionTensor, beta: &ActionTensor, c: &CoalgebraData, run: &mut AxiomRun) -> bool {
    let mut all = true;
    for x in 0..c.dim() {
        for y in 0..alpha.target_dim {
            let ey = Elem::basis(y, alpha.field);
            let mut ab = Elem::zero();
            let mut ba = Elem::zero();
            for (&(x1, x2), k) in &c.comul[x] {
                ab.add_scaled(&alpha.act(x1, beta.basis(x2, y)), k);
                ba.add_scaled(&beta.act(x1, alpha.basis(x2, y)), k);
            }
            let expect = ey.scaled(&c.counit[x]);
            all &= run.compare(&[x, y], &ab, &expect);
            all &= run.compare(&[x, y], &ba, &expect);
        }
    }
    all
}

/// Records `f` as an algebra map `src → dst` into `run`.
pub(crate) fn algebra_map_run(f: &LinMap, src: &AlgebraData, dst: &AlgebraData, run: &mut AxiomRun) {
    run.compare(&[], &f.apply(src.one()), dst.one());
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply(src.mul_basis(i, j));
            let rhs = dst.mul(f.image(i), f.image(j));
            run.compare(&[i, j], &lhs, &rhs);
        }
    }
}

/// Records `f` as a coalgebra map `src → dst` into `run`.
pub(crate) fn coalgebra_map_run(f: &LinMap, src: &CoalgebraData, dst: &CoalgebraData, run: &mut AxiomRun) {
    for i in 0..src.dim() {
        let lhs = dst.delta(f.image(i));
        let rhs = src.comul[i].map_linear(|&(a, b)| tensor(f.image(a), f.image(b)));
        run.compare(&[i], &lhs, &rhs);
        let e = dst.eps(f.image(i));
        run.record(&[i], e == src.counit[i], || e.to_string(), || src.counit[i].to_string());
    }
}

/// Basis of the primitive elements `{v : Δv = v⊗1 + 1⊗v}` of a bialgebra.
pub fn primitives(a: &AlgebraData, c: &CoalgebraData) -> Vec<Elem> {
    let d = a.dim();
    let field = a.field;
    let mut m = Matrix::zeros(d * d, d, field);
    for i in 0..d {
        let mut t = c.comul[i].clone();
        t.sub_assign(&tensor(&a.basis(i), a.one()));
        t.sub_assign(&tensor(a.one(), &a.basis(i)));
        for (&(p, q), v) in &t {
            m.add_to(p * d + q, i, v);
        }
    }
    linalg::kernel(&m).iter().map(Vector::to_elem).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n, Q)
    }

    /// Group algebra of Z/n.
    fn cyclic(n: usize) -> HopfData {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let mul = (0..n).map(|i| (0..n).map(|j| Elem::basis((i + j) % n, Q)).collect()).collect();
        HopfData {
            algebra: AlgebraData { field: Q, labels, mul, unit: Elem::basis(0, Q) },
            coalgebra: CoalgebraData {
                field: Q,
                comul: (0..n).map(|i| Elem2::basis((i, i), Q)).collect(),
                counit: vec![s(1); n],
            },
            antipode: LinMap::from_fn(n, n, |i| Elem::basis((n - i) % n, Q)),
        }
    }

    #[test]
    fn cyclic_group_algebra_is_hopf() {
        let h = cyclic(3);
        let r = check_hopf(&h);
        assert!(r.passed(), "{}", r.to_text());
        let s = convolution_inverse(&LinMap::identity(3, Q), &h.coalgebra, &h.algebra).unwrap().unwrap();
        assert_eq!(s, h.antipode);
    }

    #[test]
    fn broken_counit_is_reported() {
        let mut h = cyclic(2);
        h.coalgebra.counit[1] = s(2);
        let r = check_hopf(&h);
        assert_eq!(r.status(AxiomId::CCounit), Some(crate::report::Status::Fail));
        assert_eq!(r.status(AxiomId::HAntipode), Some(crate::report::Status::Skipped));
    }

    #[test]
    fn zero_map_has_no_convolution_inverse() {
        let h = cyclic(2);
        let z = LinMap::zero(2, 2);
        assert!(convolution_inverse(&z, &h.coalgebra, &h.algebra).unwrap().is_none());
    }

    #[test]
    fn group_algebra_primitives_vanish() {
        let h = cyclic(4);
        assert!(primitives(&h.algebra, &h.coalgebra).is_empty());
    }

    #[test]
    fn legs_of_grouplikes() {
        let h = cyclic(2);
        let legs = h.coalgebra.legs();
        assert_eq!(legs.four[1], vec![([1, 1, 1, 1], s(1))]);
    }
}
