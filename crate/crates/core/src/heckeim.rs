//! The Iwahori-Matsumoto model: elements are sparse combinations of the
//! basis `T_a`, `a` in the extended affine Weyl group.
//!
//! Products are computed one simple generator at a time along reduced
//! words, using
//!
//! ```text
//! T_u T_s = T_{us}                      if l(us) > l(u)
//!         = q T_{us} + (q - 1) T_u      otherwise
//! ```
//!
//! and `T_u T_w = T_{uw}` for `w` of length zero.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::coeffring::LaurentScalar;
use crate::error::{Error, Result};
use crate::extweyl::ExtAffElt;
use crate::heckebern::BernElement;
use crate::lincomb::LinComb;
use crate::rootdata::{LatticeElt, RootDatum, WeylElt};

pub type ImElement = LinComb<ExtAffElt, LaurentScalar>;

/// Largest basis length produced before an operation gives up.
pub const DEFAULT_BUDGET: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum QuadraticRule {
    Standard,
    /// Drops the `(q - 1) T_u` term; only for exercising failure paths.
    Corrupted,
}

/// An affine Hecke algebra over `Z[v, v^-1]` for one root datum, carrying
/// both the Iwahori-Matsumoto and the Bernstein models.
///
/// Elements are plain values; the algebra holds the root datum, the length
/// budget and memo tables for `theta_x` and for basis conversion.
pub struct AffineHecke {
    rd: Arc<RootDatum>,
    budget: usize,
    rule: QuadraticRule,
    theta_cache: Mutex<FxHashMap<LatticeElt, Arc<ImElement>>>,
    pub(crate) from_im_cache: Mutex<FxHashMap<ExtAffElt, Arc<BernElement>>>,
}

impl AffineHecke {
    pub fn new(rd: impl Into<Arc<RootDatum>>) -> Self {
        Self {
            rd: rd.into(),
            budget: DEFAULT_BUDGET,
            rule: QuadraticRule::Standard,
            theta_cache: Mutex::default(),
            from_im_cache: Mutex::default(),
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget.max(1);
        self
    }

    /// Replaces the quadratic relation with a wrong one. Used to check that
    /// the verification suites catch a broken multiplication.
    #[doc(hidden)]
    pub fn with_corrupted_quadratic(mut self) -> Self {
        self.rule = QuadraticRule::Corrupted;
        self
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn shared_root_datum(&self) -> Arc<RootDatum> {
        self.rd.clone()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub(crate) fn check_budget(&self, length: usize) -> Result<()> {
        if length > self.budget {
            Err(Error::BudgetExceeded { length, budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn q_minus_one(&self) -> LaurentScalar {
        match self.rule {
            QuadraticRule::Standard => &LaurentScalar::q() - &LaurentScalar::one(),
            QuadraticRule::Corrupted => LaurentScalar::zero(),
        }
    }

    // Basis elements

    pub fn im_basis(&self, a: ExtAffElt) -> ImElement {
        ImElement::basis(a)
    }

    pub fn im_one(&self) -> ImElement {
        ImElement::basis(ExtAffElt::identity(self.rd.dim()))
    }

    /// `T_{s_i}` for an affine simple reflection `i` in `0..=rank`.
    pub fn im_simple(&self, i: usize) -> ImElement {
        ImElement::basis(self.rd.affine_simple(i))
    }

    pub fn im_finite(&self, w: WeylElt) -> ImElement {
        ImElement::basis(ExtAffElt::finite(self.rd.dim(), w))
    }

    pub fn im_translation(&self, x: &LatticeElt) -> ImElement {
        ImElement::basis(ExtAffElt::translation(x.clone()))
    }

    // Generator actions

    /// `f * T_{s_i}`.
    pub fn im_mul_simple_right(&self, f: &ImElement, i: usize) -> Result<ImElement> {
        let rd = &*self.rd;
        let q = LaurentScalar::q();
        let qm1 = self.q_minus_one();
        let mut out = ImElement::zero();
        for (u, c) in f.iter() {
            let us = rd.ext_simple_right(u, i);
            let lu = rd.ext_length(u);
            let lus = rd.ext_length(&us);
            if lus > lu {
                self.check_budget(lus)?;
                out.add_term(us, c.clone());
            } else {
                out.add_term(us, c * &q);
                out.add_term(u.clone(), c * &qm1);
            }
        }
        Ok(out)
    }

    /// `T_{s_i} * f`.
    pub fn im_mul_simple_left(&self, i: usize, f: &ImElement) -> Result<ImElement> {
        let rd = &*self.rd;
        let q = LaurentScalar::q();
        let qm1 = self.q_minus_one();
        let mut out = ImElement::zero();
        for (u, c) in f.iter() {
            let su = rd.ext_simple_left(i, u);
            let lu = rd.ext_length(u);
            let lsu = rd.ext_length(&su);
            if lsu > lu {
                self.check_budget(lsu)?;
                out.add_term(su, c.clone());
            } else {
                out.add_term(su, c * &q);
                out.add_term(u.clone(), c * &qm1);
            }
        }
        Ok(out)
    }

    /// `f * T_{s_i}^{-1}`, with `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)`.
    pub fn im_mul_simple_inverse_right(&self, f: &ImElement, i: usize) -> Result<ImElement> {
        let rd = &*self.rd;
        let qinv = LaurentScalar::q_pow(-1);
        let coef = &qinv - &LaurentScalar::one();
        let mut out = ImElement::zero();
        for (u, c) in f.iter() {
            let us = rd.ext_simple_right(u, i);
            if rd.ext_length(&us) > rd.ext_length(u) {
                self.check_budget(rd.ext_length(&us))?;
                out.add_term(us, c * &qinv);
                out.add_term(u.clone(), c * &coef);
            } else {
                out.add_term(us, c.clone());
            }
        }
        Ok(out)
    }

    fn shift_right(&self, f: &ImElement, omega: &ExtAffElt) -> ImElement {
        if omega.is_identity() {
            return f.clone();
        }
        f.map_keys(|u| self.rd.ext_mul(u, omega))
    }

    fn shift_left(&self, omega: &ExtAffElt, f: &ImElement) -> ImElement {
        if omega.is_identity() {
            return f.clone();
        }
        f.map_keys(|u| self.rd.ext_mul(omega, u))
    }

    /// `f * T_a`.
    pub fn im_mul_basis_right(&self, f: &ImElement, a: &ExtAffElt) -> Result<ImElement> {
        let word = self.rd.reduced_word(a)?;
        let mut cur = f.clone();
        for &i in &word.indices {
            cur = self.im_mul_simple_right(&cur, i as usize)?;
        }
        Ok(self.shift_right(&cur, &word.omega))
    }

    /// `T_a * f`.
    pub fn im_mul_basis_left(&self, a: &ExtAffElt, f: &ImElement) -> Result<ImElement> {
        let word = self.rd.reduced_word(a)?;
        let mut cur = self.shift_left(&word.omega, f);
        for &i in word.indices.iter().rev() {
            cur = self.im_mul_simple_left(i as usize, &cur)?;
        }
        Ok(cur)
    }

    /// Product in the Iwahori-Matsumoto model.
    ///
    /// Walks the reduced words of whichever factor has fewer terms.
    pub fn im_mul(&self, f: &ImElement, g: &ImElement) -> Result<ImElement> {
        let mut out = ImElement::zero();
        if f.len() <= g.len() {
            for (a, c) in f.iter() {
                let part = self.im_mul_basis_left(a, g)?;
                out.add_scaled(&part, c);
            }
        } else {
            for (a, c) in g.iter() {
                let part = self.im_mul_basis_right(f, a)?;
                out.add_scaled(&part, c);
            }
        }
        Ok(out)
    }

    /// `T_a^{-1}`, the reversed product of generator inverses.
    pub fn im_inverse_basis(&self, a: &ExtAffElt) -> Result<ImElement> {
        let word = self.rd.reduced_word(a)?;
        let mut cur = ImElement::basis(self.rd.ext_inverse(&word.omega));
        for &i in word.indices.iter().rev() {
            cur = self.im_mul_simple_inverse_right(&cur, i as usize)?;
        }
        Ok(cur)
    }

    /// `theta_x = v^(l(z) - l(y)) T_y T_z^{-1}` for the canonical decomposition
    /// `x = y - z` into dominant parts. Memoized.
    pub fn theta_im(&self, x: &LatticeElt) -> Result<Arc<ImElement>> {
        if let Some(t) = self.theta_cache.lock().unwrap().get(x) {
            return Ok(t.clone());
        }
        let (y, z) = self.rd.dominant_decomposition(x);
        let t = Arc::new(self.theta_im_from(&y, &z)?);
        self.theta_cache.lock().unwrap().insert(x.clone(), t.clone());
        Ok(t)
    }

    /// `theta_{y - z}` computed from an explicit decomposition with `y`, `z`
    /// dominant.
    pub fn theta_im_from(&self, y: &LatticeElt, z: &LatticeElt) -> Result<ImElement> {
        let rd = &*self.rd;
        for p in [y, z] {
            if !rd.is_dominant(p) {
                return Err(Error::NotDominant(p.coords().to_vec()));
            }
        }
        let ty = ExtAffElt::translation(y.clone());
        let tz = ExtAffElt::translation(z.clone());
        let (ly, lz) = (rd.ext_length(&ty), rd.ext_length(&tz));
        self.check_budget(ly)?;
        self.check_budget(lz)?;
        // T_y T_z^{-1} = T_{y omega^-1} T_{s_ik}^{-1} ... T_{s_i1}^{-1}
        let word = rd.reduced_word(&tz)?;
        let start = rd.ext_mul(&ty, &rd.ext_inverse(&word.omega));
        let mut cur = ImElement::term(start, LaurentScalar::monomial(lz as i32 - ly as i32, 1));
        for &i in word.indices.iter().rev() {
            cur = self.im_mul_simple_inverse_right(&cur, i as usize)?;
        }
        Ok(cur)
    }

    /// Sum of `T_a` over the distinct `a` in `W t_lambda W`.
    pub fn spherical_indicator(&self, lambda: &LatticeElt) -> Result<ImElement> {
        let rd = &*self.rd;
        if !rd.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.coords().to_vec()));
        }
        let mut out = ImElement::zero();
        let mut seen = rustc_hash::FxHashSet::default();
        for w in rd.weyl_elements() {
            let x = rd.act(w, lambda);
            for w2 in rd.weyl_elements() {
                let a = ExtAffElt::new(x.clone(), rd.weyl_mul(w, w2));
                if seen.insert(a.clone()) {
                    self.check_budget(rd.ext_length(&a))?;
                    out.add_term(a, LaurentScalar::one());
                }
            }
        }
        Ok(out)
    }

    /// Largest basis length in the support.
    pub fn im_max_length(&self, f: &ImElement) -> usize {
        f.keys().map(|a| self.rd.ext_length(a)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CartanType, LatticeKind};

    fn alg(ty: CartanType, lat: LatticeKind) -> AffineHecke {
        AffineHecke::new(RootDatum::build(ty, lat).unwrap())
    }

    fn v(c: &[i64]) -> LatticeElt {
        LatticeElt::from_slice(c)
    }

    fn lp(terms: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_terms(terms.iter().copied())
    }

    #[test]
    fn quadratic_relation_a1() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected);
        let ts = h.im_simple(1);
        let prod = h.im_mul(&ts, &ts).unwrap();
        let mut expected = ts.scale(&lp(&[(2, 1), (0, -1)]));
        expected.add_term(ExtAffElt::identity(1), LaurentScalar::q());
        assert_eq!(prod, expected);
    }

    #[test]
    fn dominant_translations_multiply() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected);
        let t = h.im_translation(&v(&[1]));
        assert_eq!(h.im_mul(&t, &t).unwrap(), h.im_translation(&v(&[2])));
    }

    #[test]
    fn unit_and_inverses() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected);
        let one = h.im_one();
        let f = h.im_simple(0).add(&h.im_translation(&v(&[-1])).scale(&LaurentScalar::v()));
        assert_eq!(h.im_mul(&f, &one).unwrap(), f);
        assert_eq!(h.im_mul(&one, &f).unwrap(), f);
        assert_eq!(h.im_inverse_basis(&ExtAffElt::identity(1)).unwrap(), one);

        let s = ExtAffElt::finite(1, h.root_datum().simple_reflection(0));
        let sinv = h.im_inverse_basis(&s).unwrap();
        let mut expected = ImElement::term(s.clone(), LaurentScalar::q_pow(-1));
        expected.add_term(ExtAffElt::identity(1), lp(&[(-2, 1), (0, -1)]));
        assert_eq!(sinv, expected);
        assert_eq!(h.im_mul(&h.im_basis(s), &sinv).unwrap(), one);

        let t = ExtAffElt::translation(v(&[1]));
        let tinv = h.im_inverse_basis(&t).unwrap();
        assert_eq!(h.im_mul(&tinv, &h.im_basis(t)).unwrap(), one);
    }

    #[test]
    fn theta_examples_a1() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected);
        assert_eq!(*h.theta_im(&v(&[0])).unwrap(), h.im_one());
        let th = h.theta_im(&v(&[1])).unwrap();
        assert_eq!(*th, h.im_translation(&v(&[1])).scale(&LaurentScalar::q_pow(-1)));
        assert_eq!(h.theta_im_from(&v(&[2]), &v(&[1])).unwrap(), *th);
        let thm = h.theta_im(&v(&[-1])).unwrap();
        assert_eq!(h.im_mul(&th, &thm).unwrap(), h.im_one());
    }

    #[test]
    fn spherical_indicator_sizes() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected);
        let c0 = h.spherical_indicator(&v(&[0])).unwrap();
        assert_eq!(c0.len(), 2);
        let c1 = h.spherical_indicator(&v(&[1])).unwrap();
        let s = h.root_datum().simple_reflection(0);
        for a in [
            ExtAffElt::new(v(&[1]), WeylElt::IDENTITY),
            ExtAffElt::new(v(&[1]), s),
            ExtAffElt::new(v(&[-1]), s),
            ExtAffElt::new(v(&[-1]), WeylElt::IDENTITY),
        ] {
            assert_eq!(c1.coeff(&a), Some(&LaurentScalar::one()));
        }
        assert_eq!(c1.len(), 4);
        assert!(matches!(h.spherical_indicator(&v(&[-1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn budget_guard() {
        let h = alg(CartanType::A(1), LatticeKind::SimplyConnected).with_budget(3);
        let t = h.im_translation(&v(&[1]));
        assert!(matches!(h.im_mul(&t, &t), Err(Error::BudgetExceeded { .. })));
    }
}
