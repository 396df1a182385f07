//! Sparse linear combinations of basis keys.
//!
//! `Lin<usize>` is an element of a based space, `Lin<(usize, usize)>` an
//! element of a tensor square, and so on. Zero coefficients are never stored,
//! so structural equality is equality of vectors.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lin<K: Ord>(BTreeMap<K, Scalar>);

pub type Elem = Lin<usize>;
pub type Elem2 = Lin<(usize, usize)>;
pub type Elem3 = Lin<(usize, usize, usize)>;

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K, field: FieldSpec) -> Self {
        Self::term(k, field.one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut out = Self::default();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: &K) -> Option<&Scalar> {
        self.0.get(k)
    }

    /// Coefficient of `k`, zero when absent.
    pub fn coeff(&self, k: &K, field: FieldSpec) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.0.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.0.keys()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Lin<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in &other.0 {
            self.add_term(k.clone(), if unit { v.clone() } else { v * c });
        }
    }

    pub fn add_assign(&mut self, other: &Lin<K>) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Lin<K>) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::default();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        Lin(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }

    pub fn sub(&self, other: &Lin<K>) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn add(&self, other: &Lin<K>) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<J>) -> Lin<J> {
        let mut out = Lin::default();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn into_map(self) -> BTreeMap<K, Scalar> {
        self.0
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut out = Self::default();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl<'a, K: Ord> IntoIterator for &'a Lin<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `a ⊗ b`.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &Lin<A>, b: &Lin<B>) -> Lin<(A, B)> {
    let mut out = Lin::default();
    for (ka, ca) in a {
        for (kb, cb) in b {
            out.add_term((ka.clone(), kb.clone()), ca * cb);
        }
    }
    out
}

/// Flattens `(a, (b, c))` keys into triples.
pub fn tensor3(a: &Elem, bc: &Elem2) -> Elem3 {
    let mut out = Lin::default();
    for (ka, ca) in a {
        for (&(kb, kc), cbc) in bc {
            out.add_term((*ka, kb, kc), ca * cbc);
        }
    }
    out
}

/// Formats basis keys for witnesses.
pub trait KeyFmt {
    fn fmt_key(&self) -> String;
}

impl KeyFmt for usize {
    fn fmt_key(&self) -> String {
        format!("e{self}")
    }
}

impl KeyFmt for (usize, usize) {
    fn fmt_key(&self) -> String {
        format!("e{}⊗e{}", self.0, self.1)
    }
}

impl KeyFmt for (usize, usize, usize) {
    fn fmt_key(&self) -> String {
        format!("e{}⊗e{}⊗e{}", self.0, self.1, self.2)
    }
}

impl<K: Ord + KeyFmt> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}", k.fmt_key())?;
            } else {
                write!(f, "({c}){}", k.fmt_key())?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n, Q)
    }

    #[test]
    fn cancellation_removes_keys() {
        let mut a = Elem::term(1, s(2));
        a.add_term(1, s(-2));
        assert!(a.is_zero());
        assert_eq!(a, Elem::zero());
    }

    #[test]
    fn tensor_is_bilinear() {
        let a = Elem::from_pairs([(0, s(1)), (1, s(2))]);
        let b = Elem::from_pairs([(2, s(3))]);
        let t = tensor(&a, &b);
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&(1, 2)), Some(&s(6)));
        assert_eq!(t.to_string(), "(3)e0⊗e2 + (6)e1⊗e2");
    }
}
