//! Exact sparse linear algebra.
//!
//! Systems over ℚ are cleared of denominators and reduced fraction-free over
//! ℤ, dividing every updated row by its content. Systems over 𝔽_p use plain
//! Gauss-Jordan elimination on residues. Narrow systems use dense rows.
//! Every returned solution is checked against the input before returning.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{denominator_lcm, inv_mod, mul_mod, FieldSpec, Scalar};
use crate::lin::Elem;

/// Below this many columns rows are stored densely.
pub const DENSE_COLUMN_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    dim: usize,
    field: FieldSpec,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zeros(dim: usize, field: FieldSpec) -> Self {
        Vector { dim, field, entries: BTreeMap::new() }
    }

    pub fn from_elem(dim: usize, field: FieldSpec, e: &Elem) -> Self {
        let mut v = Self::zeros(dim, field);
        for (&i, c) in e {
            v.set(i, c.clone());
        }
        v
    }

    pub fn to_elem(&self) -> Elem {
        self.entries.iter().map(|(&i, c)| (i, c.clone())).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        assert!(i < self.dim, "index {i} out of range {}", self.dim);
        if c.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// `self[r][c] += v`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c);
        self.set(r, c, &cur + v);
    }

    /// Nonzero entries in lexicographic `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn row_lists(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            out[r].push((c, v.clone()));
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rhs = other.row_lists();
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for (&(r, k), a) in &self.entries {
            for (c, b) in &rhs[k] {
                out.add_to(r, *c, &(a * b));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.dim {
            return Err(Error::Dimension(format!("{}x{} times vector of dim {}", self.rows, self.cols, v.dim)));
        }
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&(r, c), a) in &self.entries {
            if let Some(x) = v.entries.get(&c) {
                let t = a * x;
                let e = acc.entry(r).or_insert_with(|| self.field.zero());
                *e += &t;
            }
        }
        let mut out = Vector::zeros(self.rows, self.field);
        for (r, x) in acc {
            out.set(r, x);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for (&(r, c), v) in &self.entries {
            out.set(c, r, v.clone());
        }
        out
    }
}

/// One particular solution together with a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

/// Solves `a·x = b`. `Ok(None)` means the system is inconsistent.
pub fn solve(a: &Matrix, b: &Vector) -> Result<Option<Solution>> {
    if b.dim != a.rows {
        return Err(Error::Dimension(format!("rhs of dim {} for {} rows", b.dim, a.rows)));
    }
    if a.field != b.field {
        return Err(Error::Field("matrix and rhs over different fields".into()));
    }
    let rref = reduce(a, Some(b));
    if rref.inconsistent {
        return Ok(None);
    }
    let particular = rref.particular(a.cols, a.field);
    let kernel = rref.kernel(a.cols, a.field);
    if a.mul_vec(&particular)? != *b {
        return Err(Error::Internal("particular solution does not satisfy the system".into()));
    }
    for k in &kernel {
        if !a.mul_vec(k)?.is_zero() {
            return Err(Error::Internal("kernel vector is not annihilated".into()));
        }
    }
    Ok(Some(Solution { particular, kernel }))
}

/// Basis of `{x : a·x = 0}`; free variables are set to unit vectors in column order.
pub fn kernel(a: &Matrix) -> Vec<Vector> {
    reduce(a, None).kernel(a.cols, a.field)
}

pub fn rank(a: &Matrix) -> usize {
    reduce(a, None).pivots.len()
}

/// Two-sided inverse of a square matrix, `Ok(None)` when singular.
pub fn invert(a: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != a.cols {
        return Err(Error::Dimension(format!("cannot invert a {}x{} matrix", a.rows, a.cols)));
    }
    let n = a.rows;
    let mut inv = Matrix::zeros(n, n, a.field);
    for j in 0..n {
        let mut e = Vector::zeros(n, a.field);
        e.set(j, a.field.one());
        match solve(a, &e)? {
            Some(sol) if sol.kernel.is_empty() => {
                for (i, v) in sol.particular.entries() {
                    inv.set(i, j, v.clone());
                }
            }
            _ => return Ok(None),
        }
    }
    if a.mul(&inv)? != Matrix::identity(n, a.field) || inv.mul(a)? != Matrix::identity(n, a.field) {
        return Err(Error::Internal("computed inverse fails verification".into()));
    }
    Ok(Some(inv))
}

/// Reduced row echelon form, stored as `pivot column -> (pivot, row)` where
/// `row` lists the non-pivot coefficient columns and the rhs.
struct Rref {
    pivots: Vec<PivotRow>,
    inconsistent: bool,
}

struct PivotRow {
    col: usize,
    pivot: Scalar,
    /// Entries at free columns (pivot columns are cleared by Gauss-Jordan).
    free: Vec<(usize, Scalar)>,
    rhs: Scalar,
}

impl Rref {
    fn particular(&self, n: usize, field: FieldSpec) -> Vector {
        let mut x = Vector::zeros(n, field);
        for p in &self.pivots {
            x.set(p.col, p.rhs.div(&p.pivot).expect("nonzero pivot"));
        }
        x
    }

    fn kernel(&self, n: usize, field: FieldSpec) -> Vec<Vector> {
        let pivot_cols: std::collections::BTreeSet<usize> = self.pivots.iter().map(|p| p.col).collect();
        let mut by_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for p in &self.pivots {
            for (f, a) in &p.free {
                let v = -&a.div(&p.pivot).expect("nonzero pivot");
                by_free.entry(*f).or_default().push((p.col, v));
            }
        }
        (0..n)
            .filter(|c| !pivot_cols.contains(c))
            .map(|f| {
                let mut v = Vector::zeros(n, field);
                v.set(f, field.one());
                for (c, x) in by_free.remove(&f).unwrap_or_default() {
                    v.set(c, x);
                }
                v
            })
            .collect()
    }
}

/// Coefficient ring used during elimination.
trait Domain {
    type C: Clone;
    fn is_zero(&self, c: &Self::C) -> bool;
    /// `s*t - a*p`, the fraction-free (or field) update of one coefficient.
    fn update(&self, s: &Self::C, t: &Self::C, a: &Self::C, p: &Self::C) -> Self::C;
    /// Factors `(s, a)` so that `s*target - a*pivot` clears the pivot column.
    fn factors(&self, target: &Self::C, pivot: &Self::C) -> (Self::C, Self::C);
    /// Normalizes a freshly updated row in place.
    fn normalize<'a>(&self, coeffs: impl Iterator<Item = &'a mut Self::C>)
    where
        Self::C: 'a;
    fn zero(&self) -> Self::C;
    fn to_scalar(&self, c: &Self::C) -> Scalar;
}

struct Integers;

impl Domain for Integers {
    type C = BigInt;
    fn is_zero(&self, c: &BigInt) -> bool {
        c.is_zero()
    }
    fn update(&self, s: &BigInt, t: &BigInt, a: &BigInt, p: &BigInt) -> BigInt {
        s * t - a * p
    }
    fn factors(&self, target: &BigInt, pivot: &BigInt) -> (BigInt, BigInt) {
        let g = target.gcd(pivot);
        (pivot / &g, target / &g)
    }
    fn normalize<'a>(&self, coeffs: impl Iterator<Item = &'a mut BigInt>) {
        let coeffs: Vec<&mut BigInt> = coeffs.collect();
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in coeffs {
                *c = &*c / &g;
            }
        }
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn to_scalar(&self, c: &BigInt) -> Scalar {
        Scalar::from_ratio(c.clone(), BigInt::one(), FieldSpec::RATIONALS).expect("unit denominator")
    }
}

struct Residues(u64);

impl Domain for Residues {
    type C = u64;
    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }
    fn update(&self, s: &u64, t: &u64, a: &u64, p: &u64) -> u64 {
        let l = mul_mod(*s, *t, self.0);
        let r = mul_mod(*a, *p, self.0);
        if l >= r {
            l - r
        } else {
            self.0 - (r - l)
        }
    }
    fn factors(&self, target: &u64, pivot: &u64) -> (u64, u64) {
        (1, mul_mod(*target, inv_mod(*pivot, self.0), self.0))
    }
    fn normalize<'a>(&self, _coeffs: impl Iterator<Item = &'a mut u64>) {}
    fn zero(&self) -> u64 {
        0
    }
    fn to_scalar(&self, c: &u64) -> Scalar {
        Scalar::from_int(*c as i64, FieldSpec::prime(self.0).expect("prime modulus"))
    }
}

/// Row storage; column `ncols` holds the right-hand side.
trait Row<C>: Sized {
    fn from_sparse(entries: Vec<(usize, C)>, width: usize, zero: &C) -> Self;
    fn get(&self, col: usize) -> Option<&C>;
    fn nnz(&self) -> usize;
    fn combine<D: Domain<C = C>>(&mut self, pivot: &Self, col: usize, dom: &D);
    fn entries(&self) -> Vec<(usize, C)>;
}

struct SparseRow<C>(Vec<(usize, C)>);

impl<C: Clone> Row<C> for SparseRow<C> {
    fn from_sparse(entries: Vec<(usize, C)>, _width: usize, _zero: &C) -> Self {
        SparseRow(entries)
    }
    fn get(&self, col: usize) -> Option<&C> {
        self.0.binary_search_by_key(&col, |e| e.0).ok().map(|i| &self.0[i].1)
    }
    fn nnz(&self) -> usize {
        self.0.len()
    }
    fn combine<D: Domain<C = C>>(&mut self, pivot: &Self, col: usize, dom: &D) {
        let t = self.get(col).expect("target has entry").clone();
        let p = pivot.get(col).expect("pivot has entry").clone();
        let (s, a) = dom.factors(&t, &p);
        let mut out = Vec::with_capacity(self.0.len() + pivot.0.len());
        let (mut i, mut j) = (0, 0);
        let zero = dom.zero();
        while i < self.0.len() || j < pivot.0.len() {
            let ci = self.0.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cj = pivot.0.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            let (c, v) = if ci < cj {
                let v = dom.update(&s, &self.0[i].1, &a, &zero);
                i += 1;
                (ci, v)
            } else if cj < ci {
                let v = dom.update(&s, &zero, &a, &pivot.0[j].1);
                j += 1;
                (cj, v)
            } else {
                let v = dom.update(&s, &self.0[i].1, &a, &pivot.0[j].1);
                i += 1;
                j += 1;
                (ci, v)
            };
            if !dom.is_zero(&v) {
                out.push((c, v));
            }
        }
        dom.normalize(out.iter_mut().map(|e| &mut e.1));
        self.0 = out;
    }
    fn entries(&self) -> Vec<(usize, C)> {
        self.0.clone()
    }
}

struct DenseRow<C>(Vec<C>, C);

impl<C: Clone> Row<C> for DenseRow<C> {
    fn from_sparse(entries: Vec<(usize, C)>, width: usize, zero: &C) -> Self {
        let mut v = vec![zero.clone(); width];
        for (c, x) in entries {
            v[c] = x;
        }
        DenseRow(v, zero.clone())
    }
    fn get(&self, col: usize) -> Option<&C> {
        Some(&self.0[col])
    }
    fn nnz(&self) -> usize {
        self.0.len()
    }
    fn combine<D: Domain<C = C>>(&mut self, pivot: &Self, col: usize, dom: &D) {
        let t = self.0[col].clone();
        let p = pivot.0[col].clone();
        let (s, a) = dom.factors(&t, &p);
        for (x, y) in self.0.iter_mut().zip(&pivot.0) {
            *x = dom.update(&s, x, &a, y);
        }
        dom.normalize(self.0.iter_mut());
    }
    fn entries(&self) -> Vec<(usize, C)> {
        self.0.iter().enumerate().map(|(c, x)| (c, x.clone())).collect()
    }
}

fn nonzero<D: Domain, R: Row<D::C>>(dom: &D, row: &R, col: usize) -> bool {
    row.get(col).is_some_and(|x| !dom.is_zero(x))
}

fn eliminate<D: Domain, R: Row<D::C>>(dom: &D, raw: Vec<Vec<(usize, D::C)>>, ncols: usize) -> Rref {
    let width = ncols + 1;
    let zero = dom.zero();
    let mut rows: Vec<R> = raw.into_iter().map(|r| R::from_sparse(r, width, &zero)).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let chosen = (rank..rows.len())
            .filter(|&r| nonzero(dom, &rows[r], col))
            .min_by_key(|&r| (rows[r].nnz(), r));
        let Some(p) = chosen else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if nonzero(dom, row, col) {
                row.combine(pivot, col, dom);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let inconsistent = rows[rank..].iter().any(|r| nonzero(dom, r, ncols));
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let pivots = pivots
        .iter()
        .zip(&rows)
        .map(|(&col, row)| {
            let mut pivot = None;
            let mut free = Vec::new();
            let mut rhs = dom.to_scalar(&zero);
            for (c, x) in row.entries() {
                if dom.is_zero(&x) {
                    continue;
                }
                if c == col {
                    pivot = Some(dom.to_scalar(&x));
                } else if c == ncols {
                    rhs = dom.to_scalar(&x);
                } else {
                    debug_assert!(!pivot_set.contains(&c), "pivot column not cleared");
                    free.push((c, dom.to_scalar(&x)));
                }
            }
            PivotRow { col, pivot: pivot.expect("pivot entry"), free, rhs }
        })
        .collect();
    Rref { pivots, inconsistent }
}

fn reduce(a: &Matrix, b: Option<&Vector>) -> Rref {
    reduce_with_layout(a, b, a.cols < DENSE_COLUMN_LIMIT)
}

fn reduce_with_layout(a: &Matrix, b: Option<&Vector>, dense: bool) -> Rref {
    let ncols = a.cols;
    let mut rows = a.row_lists();
    if let Some(b) = b {
        for (i, v) in b.entries() {
            rows[i].push((ncols, v.clone()));
        }
    }
    match a.field.modulus() {
        None => {
            let raw: Vec<Vec<(usize, BigInt)>> = rows
                .into_iter()
                .map(|r| {
                    let l = denominator_lcm(r.iter().map(|(_, s)| s.as_rational().expect("rational entry")));
                    let mut out: Vec<(usize, BigInt)> = r
                        .iter()
                        .map(|(c, s)| {
                            let q = s.as_rational().expect("rational entry");
                            (*c, q.numer() * (&l / q.denom()))
                        })
                        .collect();
                    Integers.normalize(out.iter_mut().map(|e| &mut e.1));
                    out
                })
                .collect();
            if dense {
                eliminate::<_, DenseRow<BigInt>>(&Integers, raw, ncols)
            } else {
                eliminate::<_, SparseRow<BigInt>>(&Integers, raw, ncols)
            }
        }
        Some(p) => {
            let dom = Residues(p);
            let raw = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, s)| (c, s.residue().expect("residue entry"))).collect())
                .collect();
            if dense {
                eliminate::<_, DenseRow<u64>>(&dom, raw, ncols)
            } else {
                eliminate::<_, SparseRow<u64>>(&dom, raw, ncols)
            }
        }
    }
}
