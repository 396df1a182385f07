//! Extends generator tables of `⇀`, `β` and `Δ` to a full post-Hopf
//! structure on a monomial basis.
//!
//! On monomials `v·m` (with `v` a generator) the actions are determined by
//! `u⇀(v·m) = (u1⇀v)·(u2⇀m)` and `β_u(v·m) = β_{u2}(v)·β_{u1}(m)`. The
//! elements `B_w = w1•(w2•(…•1))` span `H`, `(x•y)⇀z = x⇀(y⇀z)` and
//! `β_{x•y} = β_y∘β_x` give the actions of arbitrary elements, and `Δ` is
//! multiplicative for `•`. `S` is the convolution inverse of the identity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{convolution_inverse, ActionTensor, AlgebraData, BraidedPair, CoalgebraData, LinMap};
use crate::lin::{tensor, Elem, Elem2};
use crate::linalg;

use super::rewrite::Word;

/// A leg of a generator coproduct.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Leg {
    One,
    Gen(usize),
}

pub(crate) struct GeneratorData {
    pub algebra: AlgebraData,
    /// Generator word of each basis vector.
    pub words: Vec<Word>,
    pub comul: Vec<Vec<(Leg, Leg, Scalar)>>,
    pub counit: Vec<Scalar>,
    /// `act[u][v] = u⇀v` for generators `u, v`.
    pub act: Vec<Vec<Elem>>,
    pub beta: Vec<Vec<Elem>>,
    /// Expected antipode on generators, compared with the solved one.
    pub antipode: Vec<Elem>,
}

pub(crate) struct Extended {
    pub carrier: BraidedPair,
    pub action: ActionTensor,
    pub beta: ActionTensor,
}

pub(crate) fn extend(g: &GeneratorData) -> Result<Extended> {
    let a = &g.algebra;
    let field = a.field;
    let d = a.dim();
    let ngen = g.comul.len();
    let index: BTreeMap<&Word, usize> = g.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let gen_basis: Vec<usize> = (0..ngen)
        .map(|u| {
            index.get(&vec![u]).copied().ok_or_else(|| Error::Construction(format!("generator {u} is not a basis word")))
        })
        .collect::<Result<_>>()?;
    let unit = *index.get(&Vec::new()).ok_or_else(|| Error::Construction("empty word missing".into()))?;
    let leg = |l: Leg| match l {
        Leg::One => unit,
        Leg::Gen(u) => gen_basis[u],
    };

    // Generator actions on every basis vector, by increasing word length.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&m| g.words[m].len());
    let mut act = vec![vec![Elem::zero(); d]; ngen];
    let mut beta = vec![vec![Elem::zero(); d]; ngen];
    let on_leg = |tab: &Vec<Vec<Elem>>, l: Leg, y: &Elem| -> Elem {
        match l {
            Leg::One => y.clone(),
            Leg::Gen(u) => y.map_linear(|&j| tab[u][j].clone()),
        }
    };
    let gen_on = |tab: &Vec<Vec<Elem>>, l: Leg, v: usize| -> Elem {
        match l {
            Leg::One => Elem::basis(gen_basis[v], field),
            Leg::Gen(u) => tab[u][v].clone(),
        }
    };
    for &m in &order {
        let w = &g.words[m];
        for u in 0..ngen {
            if w.is_empty() {
                act[u][m] = a.one().scaled(&g.counit[u]);
                beta[u][m] = a.one().scaled(&g.counit[u]);
                continue;
            }
            let rest = *index
                .get(&w[1..].to_vec())
                .ok_or_else(|| Error::Construction(format!("suffix of basis word {w:?} is not a basis word")))?;
            if *a.mul_basis(gen_basis[w[0]], rest) != Elem::basis(m, field) {
                return Err(Error::Construction(format!("basis word {w:?} is not its own normal form")));
            }
            let er = Elem::basis(rest, field);
            let mut x = Elem::zero();
            let mut y = Elem::zero();
            for (l1, l2, c) in &g.comul[u] {
                x.add_scaled(&a.mul(&gen_on(&g.act, *l1, w[0]), &on_leg(&act, *l2, &er)), c);
                y.add_scaled(&a.mul(&gen_on(&g.beta, *l2, w[0]), &on_leg(&beta, *l1, &er)), c);
            }
            act[u][m] = x;
            beta[u][m] = y;
        }
    }

    // u•y = u1·(u2⇀y) for generators u.
    let bullet = |u: Leg, y: &Elem| -> Elem {
        match u {
            Leg::One => y.clone(),
            Leg::Gen(u) => {
                let mut out = Elem::zero();
                for (l1, l2, c) in &g.comul[u] {
                    out.add_scaled(&a.lmul(leg(*l1), &on_leg(&act, *l2, y)), c);
                }
                out
            }
        }
    };
    let mut b_words = Vec::with_capacity(d);
    let mut b_delta = Vec::with_capacity(d);
    for w in &g.words {
        let mut b = a.one().clone();
        let mut db = tensor(a.one(), a.one());
        for &u in w.iter().rev() {
            let mut next = Elem2::zero();
            for (l1, l2, c) in &g.comul[u] {
                for (&(p, q), c2) in &db {
                    let t = tensor(&bullet(*l1, &Elem::basis(p, field)), &bullet(*l2, &Elem::basis(q, field)));
                    next.add_scaled(&t, &(c * c2));
                }
            }
            b = bullet(Leg::Gen(u), &b);
            db = next;
        }
        b_words.push(b);
        b_delta.push(db);
    }
    let p = LinMap::new(d, d, b_words)?.to_matrix(field);
    let pinv = linalg::invert(&p)?
        .ok_or_else(|| Error::Construction("•-monomials do not span the algebra".into()))?;

    let word_map = |tab: &Vec<Vec<Elem>>, w: &Word, reversed: bool| -> LinMap {
        let mut f = LinMap::identity(d, field);
        let letters: Vec<usize> = if reversed { w.iter().rev().copied().collect() } else { w.clone() };
        for u in letters {
            f = LinMap { dom: d, cod: d, images: tab[u].clone() }.compose(&f);
        }
        f
    };
    let mut comul = vec![Elem2::zero(); d];
    let mut counit = vec![field.zero(); d];
    let mut full_act = ActionTensor::zero(field, d, d);
    let mut full_beta = ActionTensor::zero(field, d, d);
    for (wi, w) in g.words.iter().enumerate() {
        // (w1•…•wk)⇀ applies wk first; β_{w1•…•wk} applies β_{w1} first.
        let aw = word_map(&act, w, true);
        let bw = word_map(&beta, w, false);
        let eps_w = w.iter().fold(field.one(), |acc, &u| &acc * &g.counit[u]);
        for m in 0..d {
            let c = pinv.get(wi, m);
            if c.is_zero() {
                continue;
            }
            comul[m].add_scaled(&b_delta[wi], &c);
            counit[m] += &(&c * &eps_w);
            for z in 0..d {
                full_act.table[m][z].add_scaled(aw.image(z), &c);
                full_beta.table[m][z].add_scaled(bw.image(z), &c);
            }
        }
    }

    let coalgebra = CoalgebraData { field, comul, counit };
    let s_map = convolution_inverse(&LinMap::identity(d, field), &coalgebra, a)?
        .ok_or_else(|| Error::Construction("identity has no convolution inverse".into()))?;
    for (u, expect) in g.antipode.iter().enumerate() {
        if s_map.image(gen_basis[u]) != expect {
            return Err(Error::Construction(format!(
                "solved antipode of generator {u} is {} instead of {expect}",
                s_map.image(gen_basis[u])
            )));
        }
    }
    Ok(Extended {
        carrier: BraidedPair { algebra: a.clone(), coalgebra, s_map },
        action: full_act,
        beta: full_beta,
    })
}
