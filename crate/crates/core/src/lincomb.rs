//! Sparse linear combinations over a coefficient ring.

use std::collections::hash_map::Entry;
use std::fmt;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::coeffring::{LaurentScalar, ScalarFraction};

/// Coefficients usable in a [`LinComb`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar::zero()
    }
    fn one() -> Self {
        LaurentScalar::one()
    }
    fn is_zero(&self) -> bool {
        LaurentScalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for ScalarFraction {
    fn zero() -> Self {
        ScalarFraction::zero()
    }
    fn one() -> Self {
        ScalarFraction::one()
    }
    fn is_zero(&self) -> bool {
        ScalarFraction::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A finitely supported map from basis keys to nonzero coefficients.
#[derive(Clone)]
pub struct LinComb<K, S> {
    terms: FxHashMap<K, S>,
}

impl<K: Eq + Hash, S: PartialEq> PartialEq for LinComb<K, S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Eq + Hash, S: Coeff> Default for LinComb<K, S> {
    fn default() -> Self {
        Self { terms: FxHashMap::default() }
    }
}

impl<K: Clone + Eq + Hash + Ord, S: Coeff> LinComb<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, S::one())
    }

    pub fn term(key: K, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Option<&S> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Terms sorted by key.
    pub fn sorted_terms(&self) -> Vec<(&K, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, key: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_term_ref(&mut self, key: &K, c: &S) {
        if c.is_zero() {
            return;
        }
        if let Some(cur) = self.terms.get_mut(key) {
            cur.add_assign_ref(c);
            if cur.is_zero() {
                self.terms.remove(key);
            }
        } else {
            self.terms.insert(key.clone(), c.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term_ref(k, c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.neg_ref());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<T: Coeff>(&self, mut f: impl FnMut(&S) -> T) -> LinComb<K, T> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Relabels keys; colliding keys are summed.
    pub fn map_keys<K2: Clone + Eq + Hash + Ord>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2, S> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Clone + Eq + Hash + Ord> LinComb<K, LaurentScalar> {
    /// Lifts coefficients into the fraction field.
    pub fn to_fractions(&self) -> LinComb<K, ScalarFraction> {
        self.map_coeffs(|c| ScalarFraction::from(c.clone()))
    }
}

impl<K, S> FromIterator<(K, S)> for LinComb<K, S>
where
    K: Clone + Eq + Hash + Ord,
    S: Coeff,
{
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: fmt::Debug + Ord + Clone + Eq + Hash, S: Coeff> fmt::Debug for LinComb<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        f.debug_map().entries(v).finish()
    }
}
