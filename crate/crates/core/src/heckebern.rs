//! The Bernstein model: elements in the basis `theta_x T_w`, `x` in the
//! lattice and `w` in the finite Weyl group.
//!
//! Products push every `T_{s_i}` to the right of the `theta`s with
//!
//! ```text
//! T_s theta_x = theta_{s(x)} T_s + (q - 1) Q(x, s)
//! ```
//!
//! where `Q(x, s) = (theta_x - theta_{s(x)}) / (1 - theta_{-a})` is expanded
//! as a finite telescoping sum (see [`AffineHecke::geometric_quotient`]).

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::coeffring::LaurentScalar;
use crate::error::{Error, Result};
use crate::extweyl::ExtAffElt;
use crate::heckeim::{AffineHecke, ImElement};
use crate::lincomb::LinComb;
use crate::linalg;
use crate::rootdata::{LatticeElt, WeylElt};

/// The basis element `theta_x T_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BernKey {
    pub x: LatticeElt,
    pub w: WeylElt,
}

impl BernKey {
    pub fn new(x: LatticeElt, w: WeylElt) -> Self {
        Self { x, w }
    }

    pub fn theta(x: LatticeElt) -> Self {
        Self { x, w: WeylElt::IDENTITY }
    }
}

impl fmt::Debug for BernKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "th{:?} T{}", self.x, self.w.index())
    }
}

pub type BernElement = LinComb<BernKey, LaurentScalar>;

/// A generator of the algebra used in commutator tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `T_{s_i}`, finite simple index `i` (0-based).
    Simple(usize),
    Theta(LatticeElt),
}

/// A nonzero commutator `[g, f] = g f - f g`.
#[derive(Clone, Debug)]
pub struct Commutator {
    pub generator: Generator,
    pub value: BernElement,
}

fn q_minus_one() -> LaurentScalar {
    &LaurentScalar::q() - &LaurentScalar::one()
}

impl AffineHecke {
    pub fn bern_one(&self) -> BernElement {
        BernElement::basis(BernKey::theta(LatticeElt::zero(self.root_datum().dim())))
    }

    pub fn bern_theta(&self, x: &LatticeElt) -> BernElement {
        BernElement::basis(BernKey::theta(x.clone()))
    }

    pub fn bern_finite(&self, w: WeylElt) -> BernElement {
        BernElement::basis(BernKey::new(LatticeElt::zero(self.root_datum().dim()), w))
    }

    /// `T_{s_i}` for a finite simple index `i` (0-based).
    pub fn bern_simple(&self, i: usize) -> BernElement {
        self.bern_finite(self.root_datum().simple_reflection(i))
    }

    fn check_bern_key(&self, k: &BernKey) -> Result<()> {
        self.check_budget(self.root_datum().ext_length(&ExtAffElt::new(k.x.clone(), k.w)))
    }

    /// `(theta_x - theta_{s_i(x)}) / (1 - theta_{-a_i})` as a finite sum.
    ///
    /// With `n = a_i(x)`: for `n >= 0` this is `sum_{k=0}^{n-1} theta_{x - k a_i}`,
    /// for `n < 0` it is `-sum_{k=1}^{-n} theta_{x + k a_i}`.
    pub fn geometric_quotient(&self, x: &LatticeElt, i: usize) -> BernElement {
        let rd = self.root_datum();
        let n = crate::rootdata::pair(rd.simple_root(i), x);
        let cor = rd.simple_coroot(i);
        let mut out = BernElement::zero();
        if n >= 0 {
            for k in 0..n {
                out.add_term(BernKey::theta(x.add_scaled(cor, -k)), LaurentScalar::one());
            }
        } else {
            for k in 1..=-n {
                out.add_term(BernKey::theta(x.add_scaled(cor, k)), -LaurentScalar::one());
            }
        }
        out
    }

    /// `theta_y * f`.
    pub fn bern_theta_left(&self, y: &LatticeElt, f: &BernElement) -> BernElement {
        f.map_keys(|k| BernKey::new(&k.x + y, k.w))
    }

    /// `T_{s_i} * f` in the Bernstein model.
    pub fn bern_mul_simple_left(&self, i: usize, f: &BernElement) -> Result<BernElement> {
        let rd = self.root_datum();
        let q = LaurentScalar::q();
        let qm1 = q_minus_one();
        let s = rd.simple_reflection(i);
        let mut out = BernElement::zero();
        for (k, c) in f.iter() {
            let sx = rd.act(s, &k.x);
            let su = rd.mul_simple_left(i, k.w);
            if rd.weyl_length(su) > rd.weyl_length(k.w) {
                out.add_term(BernKey::new(sx, su), c.clone());
            } else {
                out.add_term(BernKey::new(sx.clone(), su), c * &q);
                out.add_term(BernKey::new(sx, k.w), c * &qm1);
            }
            let cq = c * &qm1;
            for (z, d) in self.geometric_quotient(&k.x, i).iter() {
                let key = BernKey::new(z.x.clone(), k.w);
                self.check_bern_key(&key)?;
                out.add_term(key, d * &cq);
            }
        }
        Ok(out)
    }

    /// `T_w * f`, along the lex-least reduced word of `w`.
    pub fn bern_mul_finite_left(&self, w: WeylElt, f: &BernElement) -> Result<BernElement> {
        let word = self.root_datum().weyl_word(w).to_vec();
        let mut cur = f.clone();
        for &i in word.iter().rev() {
            cur = self.bern_mul_simple_left(i as usize, &cur)?;
        }
        Ok(cur)
    }

    /// Product in the Bernstein model.
    pub fn bern_mul(&self, f: &BernElement, g: &BernElement) -> Result<BernElement> {
        let mut by_w: FxHashMap<WeylElt, Vec<(&LatticeElt, &LaurentScalar)>> = FxHashMap::default();
        for (k, c) in f.iter() {
            by_w.entry(k.w).or_default().push((&k.x, c));
        }
        let mut out = BernElement::zero();
        for (w, thetas) in by_w {
            let wg = self.bern_mul_finite_left(w, g)?;
            for (x, c) in thetas {
                for (k, d) in wg.iter() {
                    let key = BernKey::new(x + &k.x, k.w);
                    self.check_bern_key(&key)?;
                    out.add_term(key, c * d);
                }
            }
        }
        Ok(out)
    }

    /// `sum_{w in W} theta_{w(x)}`, with multiplicity.
    pub fn orbit_sum(&self, x: &LatticeElt) -> BernElement {
        let rd = self.root_datum();
        rd.weyl_elements().map(|w| (BernKey::theta(rd.act(w, x)), LaurentScalar::one())).collect()
    }

    pub fn commutator(&self, a: &BernElement, b: &BernElement) -> Result<BernElement> {
        Ok(self.bern_mul(a, b)?.sub(&self.bern_mul(b, a)?))
    }

    /// The first nonzero commutator of `f` with the generators `T_{s_i}` and
    /// `theta_b` for `b` a lattice basis, or `None` when `f` is central.
    pub fn central_witness(&self, f: &BernElement) -> Result<Option<Commutator>> {
        let rd = self.root_datum();
        let gens = (0..rd.rank())
            .map(Generator::Simple)
            .chain(rd.lattice_basis().into_iter().map(Generator::Theta));
        for g in gens {
            let ge = match &g {
                Generator::Simple(i) => self.bern_simple(*i),
                Generator::Theta(b) => self.bern_theta(b),
            };
            let value = self.commutator(&ge, f)?;
            if !value.is_zero() {
                return Ok(Some(Commutator { generator: g, value }));
            }
        }
        Ok(None)
    }

    pub fn is_central(&self, f: &BernElement) -> Result<bool> {
        Ok(self.central_witness(f)?.is_none())
    }

    /// Looks for `y` with `[theta_y, f] != 0`.
    ///
    /// Returns `None` when `f` lies in the commutative subalgebra spanned by
    /// the `theta_x`. Otherwise takes a term `theta_x T_w` with `w != 1` of
    /// largest `l(w)` and tries `y = k e_j` and `y = k d0` for
    /// `k = 1..=trials`, keeping only `y` with `w(y) != y`.
    pub fn centralizer_probe(&self, f: &BernElement, trials: usize) -> Result<Option<Commutator>> {
        let rd = self.root_datum();
        let Some(w) = f.keys().filter(|k| !k.w.is_identity()).map(|k| k.w).max_by_key(|&w| (rd.weyl_length(w), w))
        else {
            return Ok(None);
        };
        let mut dirs = rd.lattice_basis();
        dirs.push(rd.regular_dominant().clone());
        for k in 1..=trials as i64 {
            for d in &dirs {
                let y = d.scale(k);
                if rd.act(w, &y) == y {
                    continue;
                }
                let value = self.commutator(&self.bern_theta(&y), f)?;
                if !value.is_zero() {
                    return Ok(Some(Commutator { generator: Generator::Theta(y), value }));
                }
            }
        }
        Err(Error::InconclusiveAfterTrials(trials))
    }

    // Conversion

    /// `theta_x T_w -> theta_im(x) T_{(0, w)}`, extended linearly.
    pub fn to_im(&self, f: &BernElement) -> Result<ImElement> {
        let dim = self.root_datum().dim();
        let mut by_x: FxHashMap<&LatticeElt, ImElement> = FxHashMap::default();
        for (k, c) in f.iter() {
            by_x.entry(&k.x).or_default().add_term(ExtAffElt::finite(dim, k.w), c.clone());
        }
        let mut out = ImElement::zero();
        for (x, fin) in by_x {
            let th = self.theta_im(x)?;
            out.add_assign(&self.im_mul(&th, &fin)?);
        }
        Ok(out)
    }

    /// `T_{w}^{-1}` for finite `w`, as a Bernstein element supported on `x = 0`.
    pub fn bern_finite_inverse(&self, w: WeylElt) -> BernElement {
        let rd = self.root_datum();
        let qinv = LaurentScalar::q_pow(-1);
        let coef = &qinv - &LaurentScalar::one();
        let mut cur = self.bern_one();
        // T_w^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1}
        for &i in rd.weyl_word(w) {
            let i = i as usize;
            let mut next = BernElement::zero();
            for (k, c) in cur.iter() {
                let su = rd.mul_simple_left(i, k.w);
                if rd.weyl_length(su) > rd.weyl_length(k.w) {
                    next.add_term(BernKey::new(k.x.clone(), su), c * &qinv);
                    next.add_term(k.clone(), c * &coef);
                } else {
                    next.add_term(BernKey::new(k.x.clone(), su), c.clone());
                }
            }
            cur = next;
        }
        cur
    }

    /// Bernstein expansion of a single `T_a`, memoized.
    ///
    /// When `a = (x, w)` has `x` dominant and `l(a) + l(w) = rho(x)`, the product
    /// `T_a T_{w^-1}` is `T_x = v^{rho(x)} theta_x`, which gives a closed form.
    /// This covers every length-zero element and the affine reflection. Other
    /// elements are peeled one letter at a time from the left.
    pub fn from_im_basis(&self, a: &ExtAffElt) -> Result<Arc<BernElement>> {
        if let Some(hit) = self.from_im_cache.lock().unwrap().get(a) {
            return Ok(hit.clone());
        }
        let rd = self.root_datum();
        let len = rd.ext_length(a);
        self.check_budget(len)?;
        let rho = rd.rho_pairing(&a.x);
        let out = if rd.is_dominant(&a.x) && (len + rd.weyl_length(a.w)) as i64 == rho {
            let inv = self.bern_finite_inverse(rd.weyl_inverse(a.w));
            self.bern_theta_left(&a.x, &inv).scale(&LaurentScalar::monomial(rho as i32, 1))
        } else {
            let i = (0..=rd.rank())
                .find(|&i| rd.ext_length(&rd.ext_simple_left(i, a)) < len)
                .ok_or(Error::NoDescent(len))?;
            let rest = self.from_im_basis(&rd.ext_simple_left(i, a))?;
            if i == 0 {
                let s0 = self.from_im_basis(&rd.affine_simple(0))?;
                self.bern_mul(&s0, &rest)?
            } else {
                self.bern_mul_simple_left(i - 1, &rest)?
            }
        };
        let out = Arc::new(out);
        self.from_im_cache.lock().unwrap().insert(a.clone(), out.clone());
        Ok(out)
    }

    /// Bernstein expansion of an IM element, verified by converting back.
    pub fn from_im(&self, f: &ImElement) -> Result<BernElement> {
        let out = self.from_im_unverified(f)?;
        if self.to_im(&out)? != *f {
            return Err(Error::SolveFailed("round trip mismatch".into()));
        }
        Ok(out)
    }

    pub fn from_im_unverified(&self, f: &ImElement) -> Result<BernElement> {
        let mut out = BernElement::zero();
        for (a, c) in f.iter() {
            out.add_scaled(&*self.from_im_basis(a)?, c);
        }
        Ok(out)
    }

    /// Bernstein expansion by exact linear solving over the fraction field.
    ///
    /// Unknowns are `theta_x T_w` with `x` in a box around the translation
    /// parts of `f`; the box grows by one up to `max_growth` times.
    pub fn from_im_solve(&self, f: &ImElement, max_growth: usize) -> Result<BernElement> {
        let rd = self.root_datum();
        let dim = rd.dim();
        if f.is_zero() {
            return Ok(BernElement::zero());
        }
        let mut lo = vec![i64::MAX; dim];
        let mut hi = vec![i64::MIN; dim];
        for a in f.keys() {
            for (j, &c) in a.x.coords().iter().enumerate() {
                lo[j] = lo[j].min(c);
                hi[j] = hi[j].max(c);
            }
        }
        for pad in 0..=max_growth as i64 {
            let lo_p: Vec<i64> = lo.iter().map(|c| c - pad).collect();
            let hi_p: Vec<i64> = hi.iter().map(|c| c + pad).collect();
            let mut cands = Vec::new();
            for x in box_points(&lo_p, &hi_p) {
                for w in rd.weyl_elements() {
                    cands.push(BernKey::new(x.clone(), w));
                }
            }
            let mut cols = Vec::with_capacity(cands.len());
            for k in &cands {
                cols.push(self.to_im(&BernElement::basis(k.clone()))?);
            }
            let target = f.to_fractions();
            let cols_f: Vec<_> = cols.iter().map(|c| c.to_fractions()).collect();
            if let Some(sol) = linalg::solve_sparse(&cols_f, &target) {
                let mut out = BernElement::zero();
                for (k, c) in cands.into_iter().zip(sol) {
                    if c.is_zero() {
                        continue;
                    }
                    let c = c.as_laurent().cloned().ok_or_else(|| {
                        Error::SolveFailed(format!("non-integral coefficient {c} at {k:?}"))
                    })?;
                    out.add_term(k, c);
                }
                if self.to_im(&out)? == *f {
                    return Ok(out);
                }
            }
        }
        Err(Error::SolveFailed(format!("no solution after growing the box {max_growth} times")))
    }
}

/// All integer points of the box `lo..=hi`.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<LatticeElt> {
    let mut out = vec![LatticeElt::zero(0)];
    for (&a, &b) in lo.iter().zip(hi) {
        let mut next = Vec::with_capacity(out.len() * (b - a + 1).max(0) as usize);
        for p in &out {
            for c in a..=b {
                let mut v = p.0.clone();
                v.push(c);
                next.push(LatticeElt(v));
            }
        }
        out = next;
    }
    out
}

/// The points of `[-r, r]^dim`.
pub fn cube(dim: usize, r: i64) -> Vec<LatticeElt> {
    box_points(&vec![-r; dim], &vec![r; dim])
}
