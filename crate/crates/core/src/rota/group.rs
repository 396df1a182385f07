//! Rota-Baxter operators on groups and Lie algebras.

use crate::field::FieldSpec;
use crate::hopf::{run_axiom, LinMap};
use crate::lin::Elem;
use crate::report::{AxiomId, AxiomRun, CheckReport, Entry};
use crate::ydpost::{bilinear, check_post_lie, PostLieData};

/// `R: H → G` of weight 1 relative to an action `φ` of `G` on `H`, given
/// by multiplication tables. `phi[g][h] = φ(g)(h)` and `r[h] = R(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRB {
    pub g_mul: Vec<Vec<usize>>,
    pub g_labels: Vec<String>,
    pub h_mul: Vec<Vec<usize>>,
    pub h_labels: Vec<String>,
    pub phi: Vec<Vec<usize>>,
    pub r: Vec<usize>,
}

fn group_run(run: &mut AxiomRun, which: usize, t: &[Vec<usize>]) {
    let n = t.len();
    let shaped = t.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n));
    run.record(&[which], shaped && n > 0, || "table is not square over its labels".into(), || "group table".into());
    if !shaped || n == 0 {
        return;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (l, r) = (t[t[a][b]][c], t[a][t[b][c]]);
                run.record(&[which, a, b, c], l == r, || l.to_string(), || r.to_string());
            }
        }
    }
    let e = (0..n).find(|&e| (0..n).all(|a| t[e][a] == a && t[a][e] == a));
    run.record(&[which], e.is_some(), || "no identity".into(), || "identity".into());
    if let Some(e) = e {
        for a in 0..n {
            let inv = (0..n).any(|b| t[a][b] == e && t[b][a] == e);
            run.record(&[which, a], inv, || "no inverse".into(), || "inverse".into());
        }
    }
}

fn identity_of(t: &[Vec<usize>]) -> Option<usize> {
    (0..t.len()).find(|&e| (0..t.len()).all(|a| t[e][a] == a && t[a][e] == a))
}

/// Group axioms for both tables, `φ` a homomorphism into `Aut(H)`, and the
/// weight-1 identity.
pub fn check_group_rb(g: &GroupRB) -> CheckReport {
    let mut report = CheckReport::new();
    let (m, n) = (g.g_mul.len(), g.h_mul.len());
    report.push(run_axiom(AxiomId::RbGGrp, |run| {
        group_run(run, 0, &g.g_mul);
        group_run(run, 1, &g.h_mul);
        let labels = g.g_labels.len() == m && g.h_labels.len() == n;
        run.record(&[], labels, || "label count differs from table size".into(), || "labels".into());
    }));
    let shaped = g.phi.len() == m
        && g.phi.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n))
        && g.r.len() == n
        && g.r.iter().all(|&x| x < m);
    if !report.passed() || !shaped {
        if !shaped {
            report.push(Entry::verdict(AxiomId::RbGAct, false, "φ or R has the wrong shape"));
        }
        return report;
    }
    let (hm, gm, phi) = (&g.h_mul, &g.g_mul, &g.phi);
    report.push(run_axiom(AxiomId::RbGAct, |run| {
        let eg = identity_of(gm).expect("checked group");
        for h in 0..n {
            run.record(&[eg, h], phi[eg][h] == h, || phi[eg][h].to_string(), || h.to_string());
        }
        for x in 0..m {
            for h in 0..n {
                for k in 0..n {
                    let (l, r) = (phi[x][hm[h][k]], hm[phi[x][h]][phi[x][k]]);
                    run.record(&[x, h, k], l == r, || l.to_string(), || r.to_string());
                }
                for y in 0..m {
                    let (l, r) = (phi[gm[x][y]][h], phi[x][phi[y][h]]);
                    run.record(&[x, y, h], l == r, || l.to_string(), || r.to_string());
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::RbGW1, |run| {
        for h in 0..n {
            for k in 0..n {
                let l = gm[g.r[h]][g.r[k]];
                let r = g.r[hm[h][phi[g.r[h]][k]]];
                run.record(&[h, k], l == r, || g.g_labels[l].clone(), || g.g_labels[r].clone());
            }
        }
    }));
    report
}

/// `R: h → g` relative to an action `φ` of `g` on `h` by derivations.
/// `phi[x][y] = φ(e_x)(e_y)` and both brackets are given on bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRB {
    pub field: FieldSpec,
    pub g_bracket: Vec<Vec<Elem>>,
    pub h_bracket: Vec<Vec<Elem>>,
    pub phi: Vec<Vec<Elem>>,
    pub r: LinMap,
}

impl LieRB {
    /// `x⇀y = φ(R x) y` on `h`.
    pub fn post_lie(&self) -> PostLieData {
        let n = self.h_bracket.len();
        let action = (0..n)
            .map(|x| (0..n).map(|y| bilinear(&self.phi, self.r.image(x), &Elem::basis(y, self.field))).collect())
            .collect();
        PostLieData {
            field: self.field,
            dim: n,
            bracket: self.h_bracket.clone(),
            action,
            embedding: (0..n).map(|i| Elem::basis(i, self.field)).collect(),
        }
    }
}

fn lie_run(run: &mut AxiomRun, which: usize, t: &[Vec<Elem>], field: FieldSpec) {
    let n = t.len();
    let e = |i: usize| Elem::basis(i, field);
    let br = |x: &Elem, y: &Elem| bilinear(t, x, y);
    for x in 0..n {
        run.compare(&[which, x, x], &t[x][x], &Elem::zero());
        for y in 0..n {
            for z in 0..n {
                let mut sum = br(&e(x), &t[y][z]);
                sum.add_assign(&br(&e(y), &t[z][x]));
                sum.add_assign(&br(&e(z), &t[x][y]));
                run.compare(&[which, x, y, z], &sum, &Elem::zero());
            }
        }
    }
}

/// Lie axioms of both brackets, `φ` a Lie homomorphism into `Der(h)`, the
/// weight-1 identity and the post-Lie structure it induces on `h`.
pub fn check_lie_rb(l: &LieRB) -> CheckReport {
    let mut report = CheckReport::new();
    let (m, n) = (l.g_bracket.len(), l.h_bracket.len());
    let f = l.field;
    let within = |t: &[Vec<Elem>], rows: usize, cols: usize, bound: usize| {
        t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().flat_map(|v| v.keys()).all(|&k| k < bound))
    };
    let shaped = within(&l.g_bracket, m, m, m)
        && within(&l.h_bracket, n, n, n)
        && within(&l.phi, m, n, n)
        && l.r.dom == n
        && l.r.cod == m;
    if !shaped {
        report.push(Entry::verdict(AxiomId::RbLLie, false, "tables have inconsistent shapes"));
        return report;
    }
    let e = |i: usize| Elem::basis(i, f);
    let phi = |x: &Elem, y: &Elem| bilinear(&l.phi, x, y);
    let gb = |x: &Elem, y: &Elem| bilinear(&l.g_bracket, x, y);
    let hb = |x: &Elem, y: &Elem| bilinear(&l.h_bracket, x, y);
    report.push(run_axiom(AxiomId::RbLLie, |run| {
        lie_run(run, 0, &l.g_bracket, f);
        lie_run(run, 1, &l.h_bracket, f);
    }));
    report.push(run_axiom(AxiomId::RbLDer, |run| {
        for x in 0..m {
            for y in 0..n {
                for z in 0..n {
                    let lhs = phi(&e(x), &l.h_bracket[y][z]);
                    let mut rhs = hb(&l.phi[x][y], &e(z));
                    rhs.add_assign(&hb(&e(y), &l.phi[x][z]));
                    run.compare(&[x, y, z], &lhs, &rhs);
                }
            }
            for x2 in 0..m {
                for y in 0..n {
                    let lhs = phi(&l.g_bracket[x][x2], &e(y));
                    let mut rhs = phi(&e(x), &l.phi[x2][y]);
                    rhs.sub_assign(&phi(&e(x2), &l.phi[x][y]));
                    run.compare(&[x, x2, y], &lhs, &rhs);
                }
            }
        }
    }));
    report.push(run_axiom(AxiomId::RbLW1, |run| {
        for x in 0..n {
            for y in 0..n {
                let (rx, ry) = (l.r.image(x), l.r.image(y));
                let lhs = gb(rx, ry);
                let mut inner = phi(rx, &e(y));
                inner.sub_assign(&phi(ry, &e(x)));
                inner.add_assign(&l.h_bracket[x][y]);
                run.compare(&[x, y], &lhs, &l.r.apply(&inner));
            }
        }
    }));
    report.push(Entry::aggregate(AxiomId::RbLPost, &check_post_lie(&l.post_lie())));
    report
}
