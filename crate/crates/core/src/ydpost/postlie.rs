//! Post-Lie algebras, and the one carried by the primitive elements.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{primitives, run_axiom};
use crate::lin::Elem;
use crate::linalg::{self, Matrix, Vector};
use crate::report::{AxiomId, CheckReport};

use super::YDPostHopf;

/// A bracket and an action on `k^dim`, with an optional embedding of the
/// basis into an ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieData {
    pub field: FieldSpec,
    pub dim: usize,
    pub bracket: Vec<Vec<Elem>>,
    pub action: Vec<Vec<Elem>>,
    pub embedding: Vec<Elem>,
}

impl PostLieData {
    pub fn bracket(&self, x: &Elem, y: &Elem) -> Elem {
        bilinear(&self.bracket, x, y)
    }

    pub fn act(&self, x: &Elem, y: &Elem) -> Elem {
        bilinear(&self.action, x, y)
    }

    /// `[x,y]⇀ = x⇀y - y⇀x + [x,y]`.
    pub fn subadjacent(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = self.act(x, y);
        out.sub_assign(&self.act(y, x));
        out.add_assign(&self.bracket(x, y));
        out
    }
}

pub(crate) fn bilinear(table: &[Vec<Elem>], x: &Elem, y: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (&i, a) in x {
        for (&j, b) in y {
            out.add_scaled(&table[i][j], &(a * b));
        }
    }
    out
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
pub(crate) fn coordinates(basis: &[Elem], ambient: usize, field: FieldSpec, v: &Elem) -> Result<Option<Elem>> {
    let mut m = Matrix::zeros(ambient, basis.len(), field);
    for (j, b) in basis.iter().enumerate() {
        for (&i, c) in b {
            m.set(i, j, c.clone());
        }
    }
    let rhs = Vector::from_elem(ambient, field, v);
    Ok(linalg::solve(&m, &rhs)?.map(|s| s.particular.to_elem()))
}

/// Restricts the commutator of `·` and the action `⇀` to the primitive elements.
pub fn extract_post_lie(s: &YDPostHopf) -> Result<PostLieData> {
    let a = &s.carrier.algebra;
    let field = s.field();
    let basis = primitives(a, &s.carrier.coalgebra);
    let m = basis.len();
    let d = s.dim();
    let mut bracket = vec![vec![Elem::zero(); m]; m];
    let mut action = vec![vec![Elem::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let (x, y) = (&basis[i], &basis[j]);
            let comm = a.mul(x, y).sub(&a.mul(y, x));
            let acted = s.action.act2(x, y);
            let not_closed = || Error::Construction(format!("primitive elements are not closed at ({i},{j})"));
            bracket[i][j] = coordinates(&basis, d, field, &comm)?.ok_or_else(not_closed)?;
            action[i][j] = coordinates(&basis, d, field, &acted)?.ok_or_else(not_closed)?;
        }
    }
    Ok(PostLieData { field, dim: m, bracket, action, embedding: basis })
}

/// Lie axioms of the bracket, the two post-Lie identities and the Jacobi
/// identity of the subadjacent bracket.
pub fn check_post_lie(pl: &PostLieData) -> CheckReport {
    let n = pl.dim;
    let e = |i: usize| Elem::basis(i, pl.field);
    let mut report = CheckReport::new();
    report.push(run_axiom(AxiomId::PlClosure, |run| {
        let shaped = pl.bracket.len() == n
            && pl.action.len() == n
            && pl.bracket.iter().chain(&pl.action).all(|r| r.len() == n)
            && pl.bracket.iter().chain(&pl.action).flatten().flat_map(|v| v.keys()).all(|&k| k < n);
        run.record(&[], shaped, || "tables leave the space".into(), || "closed".into());
    }));
    if !report.passed() {
        return report;
    }
    let jacobi = |run: &mut crate::report::AxiomRun, br: &dyn Fn(&Elem, &Elem) -> Elem| {
        for x in 0..n {
            run.compare(&[x, x], &br(&e(x), &e(x)), &Elem::zero());
            for y in 0..n {
                for z in 0..n {
                    let mut sum = br(&e(x), &br(&e(y), &e(z)));
                    sum.add_assign(&br(&e(y), &br(&e(z), &e(x))));
                    sum.add_assign(&br(&e(z), &br(&e(x), &e(y))));
                    run.compare(&[x, y, z], &sum, &Elem::zero());
                }
            }
        }
    };
    report.push(run_axiom(AxiomId::PlLie, |run| jacobi(run, &|x, y| pl.bracket(x, y))));
    report.push(run_axiom(AxiomId::Pl1, |run| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = pl.act(&e(x), &pl.bracket(&e(y), &e(z)));
                    let mut rhs = pl.bracket(&pl.act(&e(x), &e(y)), &e(z));
                    rhs.add_assign(&pl.bracket(&e(y), &pl.act(&e(x), &e(z))));
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::Pl2, |run| {
        for x in 0..n {
            for y in 0..n {
                let sub = pl.subadjacent(&e(x), &e(y));
                for z in 0..n {
                    let lhs = pl.act(&sub, &e(z));
                    let mut rhs = pl.act(&e(x), &pl.act(&e(y), &e(z)));
                    rhs.sub_assign(&pl.act(&e(y), &pl.act(&e(x), &e(z))));
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::PlSubjac, |run| jacobi(run, &|x, y| pl.subadjacent(x, y))));
    report
}
