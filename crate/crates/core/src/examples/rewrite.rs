//! Finite monomial rewriting for presented algebras.
//!
//! Rules are oriented by hand and assumed confluent; the associativity check
//! on the resulting table catches a bad orientation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::AlgebraData;
use crate::lin::{Elem, Lin};

pub type Word = Vec<usize>;

pub struct Rule {
    pub lhs: Word,
    pub rhs: Lin<Word>,
}

pub struct Rewriting {
    pub field: FieldSpec,
    pub rules: Vec<Rule>,
    /// Upper bound on rewrite steps for a single normal form.
    pub step_cap: usize,
}

impl Rewriting {
    pub fn new(field: FieldSpec) -> Self {
        Rewriting { field, rules: Vec::new(), step_cap: 100_000 }
    }

    pub fn rule(&mut self, lhs: &[usize], rhs: Vec<(Word, Scalar)>) {
        self.rules.push(Rule { lhs: lhs.to_vec(), rhs: Lin::from_pairs(rhs) });
    }

    fn find(&self, w: &[usize]) -> Option<(usize, &Rule)> {
        for start in 0..w.len() {
            for r in &self.rules {
                if w[start..].starts_with(&r.lhs) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    pub fn normal_form(&self, w: &[usize]) -> Result<Lin<Word>> {
        let mut todo: Lin<Word> = Lin::basis(w.to_vec(), self.field);
        let mut done: Lin<Word> = Lin::zero();
        let mut steps = 0;
        while let Some((word, c)) = todo.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            todo.add_term(word.clone(), -&c);
            match self.find(&word) {
                None => done.add_term(word, c),
                Some((start, rule)) => {
                    steps += 1;
                    if steps > self.step_cap {
                        return Err(Error::Construction("rewriting did not terminate".into()));
                    }
                    for (rw, rc) in &rule.rhs {
                        let mut nw = word[..start].to_vec();
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&word[start + rule.lhs.len()..]);
                        todo.add_term(nw, &c * rc);
                    }
                }
            }
        }
        Ok(done)
    }

    /// All normal words reachable from the empty word by right
    /// multiplication with generators. Fails past `cap` words.
    pub fn closure(&self, ngens: usize, cap: usize) -> Result<BTreeSet<Word>> {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        seen.insert(Vec::new());
        let mut frontier = vec![Vec::new()];
        while let Some(w) = frontier.pop() {
            for g in 0..ngens {
                let mut next = w.clone();
                next.push(g);
                for (nw, _) in &self.normal_form(&next)? {
                    if seen.insert(nw.clone()) {
                        if seen.len() > cap {
                            return Err(Error::Construction(format!("monomial closure exceeds {cap} words")));
                        }
                        frontier.push(nw.clone());
                    }
                }
            }
        }
        Ok(seen)
    }

    /// The multiplication table on `basis`, which must be closed.
    pub fn algebra(&self, basis: &[Word], labels: Vec<String>) -> Result<AlgebraData> {
        let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let to_elem = |l: &Lin<Word>| -> Result<Elem> {
            let mut out = Elem::zero();
            for (w, c) in l {
                let i = index
                    .get(w)
                    .ok_or_else(|| Error::Construction(format!("normal word {w:?} is not a basis word")))?;
                out.add_term(*i, c.clone());
            }
            Ok(out)
        };
        let mut mul = Vec::with_capacity(basis.len());
        for u in basis {
            let mut row = Vec::with_capacity(basis.len());
            for v in basis {
                let mut w = u.clone();
                w.extend_from_slice(v);
                row.push(to_elem(&self.normal_form(&w)?)?);
            }
            mul.push(row);
        }
        let unit = to_elem(&Lin::basis(Vec::new(), self.field))?;
        Ok(AlgebraData { field: self.field, labels, mul, unit })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_algebra_on_two_generators() {
        let q = FieldSpec::RATIONALS;
        let mut rw = Rewriting::new(q);
        rw.rule(&[0, 0], vec![]);
        rw.rule(&[1, 1], vec![]);
        rw.rule(&[1, 0], vec![(vec![0, 1], -q.one())]);
        let words = rw.closure(2, 100).unwrap();
        assert_eq!(words.len(), 4);
        let basis: Vec<Word> = words.into_iter().collect();
        let labels = basis.iter().map(|w| format!("{w:?}")).collect();
        let alg = rw.algebra(&basis, labels).unwrap();
        assert!(crate::hopf::check_algebra(&alg).passed());
    }

    #[test]
    fn runaway_closure_is_capped() {
        let rw = Rewriting::new(FieldSpec::RATIONALS);
        assert!(rw.closure(1, 10).is_err());
    }
}
