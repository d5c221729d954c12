//! Spherical side: `e_K`, the Poincaré polynomial, the Satake transform into
//! the group algebra of the lattice, and the center map `z -> z e_K / [K:I]`.

use num_rational::BigRational;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::coeffring::{LaurentScalar, ScalarFraction};
use crate::error::Result;
use crate::heckebern::{cube, BernElement, BernKey, Generator};
use crate::heckeim::AffineHecke;
use crate::lincomb::LinComb;
use crate::linalg;
use crate::rootdata::{LatticeElt, RootDatum};

/// An element of the group algebra of the lattice, `sum c_x [x]`.
pub type GroupAlgElement = LinComb<LatticeElt, ScalarFraction>;

/// A Bernstein element with coefficients in the fraction field.
pub type BernFraction = LinComb<BernKey, ScalarFraction>;

/// `[K:I] = sum_{w in W} q^{l(w)}`.
pub fn poincare_polynomial(rd: &RootDatum) -> LaurentScalar {
    let mut out = LaurentScalar::zero();
    for w in rd.weyl_elements() {
        out += &LaurentScalar::q_pow(rd.weyl_length(w) as i32);
    }
    out
}

/// Coefficients constant on every W-orbit meeting the support.
pub fn is_w_invariant(rd: &RootDatum, g: &GroupAlgElement) -> bool {
    let zero = ScalarFraction::zero();
    g.iter().all(|(x, c)| {
        rd.weyl_elements().all(|w| g.coeff(&rd.act(w, x)).unwrap_or(&zero) == c)
    })
}

/// Convolution on the lattice: `[x][y] = [x + y]`.
pub fn group_mul(g: &GroupAlgElement, h: &GroupAlgElement) -> GroupAlgElement {
    let mut out = GroupAlgElement::zero();
    for (x, c) in g.iter() {
        for (y, d) in h.iter() {
            out.add_term(x + y, c * d);
        }
    }
    out
}

/// `sum_{w in W} [w(x)]`, with multiplicity.
pub fn group_orbit_sum(rd: &RootDatum, x: &LatticeElt) -> GroupAlgElement {
    rd.weyl_elements().map(|w| (rd.act(w, x), ScalarFraction::one())).collect()
}

/// Result of comparing the central elements supported in a box with the
/// span of the box-contained orbit sums, at a specialized `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterExhaustion {
    pub candidates: usize,
    pub central_dimension: usize,
    pub orbit_count: usize,
    pub orbit_sums_central: bool,
}

impl CenterExhaustion {
    pub fn holds(&self) -> bool {
        self.orbit_sums_central && self.central_dimension == self.orbit_count
    }
}

impl AffineHecke {
    /// `e_K = sum_{w in W} T_w`.
    pub fn e_k(&self) -> BernElement {
        let rd = self.root_datum();
        rd.weyl_elements().map(|w| (BernKey::new(LatticeElt::zero(rd.dim()), w), LaurentScalar::one())).collect()
    }

    pub fn poincare(&self) -> LaurentScalar {
        poincare_polynomial(self.root_datum())
    }

    /// `sum c_{x,w} q^{l(w)} [x]`.
    pub fn sat_transform(&self, f: &BernElement) -> GroupAlgElement {
        self.sat_transform_fraction(&f.to_fractions())
    }

    pub fn sat_transform_fraction(&self, f: &BernFraction) -> GroupAlgElement {
        let rd = self.root_datum();
        let mut out = GroupAlgElement::zero();
        for (k, c) in f.iter() {
            let ql = ScalarFraction::from(LaurentScalar::q_pow(rd.weyl_length(k.w) as i32));
            out.add_term(k.x.clone(), c * &ql);
        }
        out
    }

    /// Satake transform of the indicator of `K t_lambda K`.
    pub fn satake_spherical(&self, lambda: &LatticeElt) -> Result<GroupAlgElement> {
        let c = self.spherical_indicator(lambda)?;
        Ok(self.sat_transform(&self.from_im(&c)?))
    }

    /// `z e_K / [K:I]`.
    pub fn center_map(&self, z: &BernElement) -> Result<BernFraction> {
        let ze = self.bern_mul(z, &self.e_k())?;
        let inv = ScalarFraction::new(LaurentScalar::one(), self.poincare())?;
        Ok(ze.to_fractions().scale(&inv))
    }

    /// `(1/[K:I]) theta_x e_K`.
    pub fn theta_spherical(&self, x: &LatticeElt) -> Result<BernFraction> {
        let inv = ScalarFraction::new(LaurentScalar::one(), self.poincare())?;
        Ok(self.bern_theta_left(x, &self.e_k()).to_fractions().scale(&inv))
    }

    /// Compares the solution space of `[g, f] = 0` for all generators `g`,
    /// with `f` ranging over `theta_x T_w`, `x` in `[-r, r]^d`, against the
    /// orbit sums whose orbit lies in the box. Commutators are exact; the
    /// linear algebra is done at `q = q0`.
    pub fn center_exhaustion(&self, r: i64, q0: &BigRational) -> Result<CenterExhaustion> {
        let rd = self.root_datum();
        let pts = cube(rd.dim(), r);
        let cands: Vec<BernKey> =
            pts.iter().flat_map(|x| rd.weyl_elements().map(move |w| BernKey::new(x.clone(), w))).collect();
        let gens: Vec<BernElement> = (0..rd.rank())
            .map(|i| self.bern_simple(i))
            .chain(rd.lattice_basis().iter().map(|b| self.bern_theta(b)))
            .collect();

        // One row per candidate: the transpose of the commutator map.
        let mut row_of: FxHashMap<(usize, BernKey), usize> = FxHashMap::default();
        let mut ech = linalg::Echelon::new();
        for k in &cands {
            let b = BernElement::basis(k.clone());
            let mut entries = Vec::new();
            for (gi, g) in gens.iter().enumerate() {
                let c = self.commutator(g, &b)?;
                for (key, val) in c.iter() {
                    let n = row_of.len();
                    let row = *row_of.entry((gi, key.clone())).or_insert(n);
                    entries.push((row, val.specialize_q(q0)?));
                }
            }
            ech.insert(entries);
        }
        let central_dimension = cands.len() - ech.rank();

        let in_box = |x: &LatticeElt| x.coords().iter().all(|c| c.abs() <= r);
        let mut seen = FxHashSet::default();
        let mut orbit_count = 0;
        let mut orbit_sums_central = true;
        for x in &pts {
            let d = rd.dominant_in_orbit(x);
            if !seen.insert(d.clone()) {
                continue;
            }
            if rd.orbit(&d).iter().all(in_box) {
                orbit_count += 1;
                orbit_sums_central &= self.is_central(&self.orbit_sum(&d))?;
            }
        }
        Ok(CenterExhaustion { candidates: cands.len(), central_dimension, orbit_count, orbit_sums_central })
    }

    /// Generators used by the commutator tests, as algebra elements.
    pub fn generator_element(&self, g: &Generator) -> BernElement {
        match g {
            Generator::Simple(i) => self.bern_simple(*i),
            Generator::Theta(y) => self.bern_theta(y),
        }
    }
}
