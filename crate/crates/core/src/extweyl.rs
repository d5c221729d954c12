//! The extended affine Weyl group `X ⋊ W`.
//!
//! Affine simple reflections are numbered `0..=r`: `0` is the affine node
//! `s_0 = (theta^vee, s_theta)` and `i >= 1` is the finite reflection
//! `(0, s_i)`. Lengths come from the closed Iwahori-Matsumoto formula, and
//! descents are found by comparing lengths directly.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{LatticeElt, RootDatum, WeylElt};

/// The element `t_x w` of `X ⋊ W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffElt {
    pub x: LatticeElt,
    pub w: WeylElt,
}

impl ExtAffElt {
    pub fn new(x: LatticeElt, w: WeylElt) -> Self {
        Self { x, w }
    }

    pub fn identity(dim: usize) -> Self {
        Self { x: LatticeElt::zero(dim), w: WeylElt::IDENTITY }
    }

    pub fn translation(x: LatticeElt) -> Self {
        Self { x, w: WeylElt::IDENTITY }
    }

    pub fn finite(dim: usize, w: WeylElt) -> Self {
        Self { x: LatticeElt::zero(dim), w }
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.x.is_zero()
    }
}

impl fmt::Debug for ExtAffElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, w{})", self.x, self.w.index())
    }
}

/// A factorization `s_{i_1} ... s_{i_k} * omega` with `k` equal to the
/// length and `omega` of length zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub indices: Vec<u8>,
    pub omega: ExtAffElt,
}

impl RootDatum {
    /// `(x, w)(y, v) = (x + w(y), wv)`.
    pub fn ext_mul(&self, a: &ExtAffElt, b: &ExtAffElt) -> ExtAffElt {
        ExtAffElt { x: &a.x + &self.act(a.w, &b.x), w: self.weyl_mul(a.w, b.w) }
    }

    pub fn ext_inverse(&self, a: &ExtAffElt) -> ExtAffElt {
        let winv = self.weyl_inverse(a.w);
        ExtAffElt { x: -&self.act(winv, &a.x), w: winv }
    }

    /// `sum |a(x)|` over positive `a` with `w^-1(a) > 0`, plus `sum |a(x) - 1|`
    /// over those with `w^-1(a) < 0`.
    pub fn ext_length(&self, a: &ExtAffElt) -> usize {
        self.positive_roots()
            .iter()
            .enumerate()
            .map(|(k, root)| {
                let n = crate::rootdata::pair(root, &a.x);
                if self.inverts(a.w, k) {
                    (n - 1).unsigned_abs()
                } else {
                    n.unsigned_abs()
                }
            })
            .sum::<u64>() as usize
    }

    /// Affine simple reflection `i` in `0..=rank`.
    pub fn affine_simple(&self, i: usize) -> ExtAffElt {
        if i == 0 {
            let theta = self.highest_root_index();
            ExtAffElt { x: self.positive_coroots()[theta].clone(), w: self.highest_root_reflection() }
        } else {
            ExtAffElt::finite(self.dim(), self.simple_reflection(i - 1))
        }
    }

    /// `s_i * a`.
    pub fn ext_simple_left(&self, i: usize, a: &ExtAffElt) -> ExtAffElt {
        if i == 0 {
            let st = self.highest_root_reflection();
            let theta = &self.positive_coroots()[self.highest_root_index()];
            ExtAffElt { x: theta + &self.act(st, &a.x), w: self.weyl_mul(st, a.w) }
        } else {
            let s = self.simple_reflection(i - 1);
            ExtAffElt { x: self.act(s, &a.x), w: self.mul_simple_left(i - 1, a.w) }
        }
    }

    /// `a * s_i`.
    pub fn ext_simple_right(&self, a: &ExtAffElt, i: usize) -> ExtAffElt {
        if i == 0 {
            let st = self.highest_root_reflection();
            let theta = &self.positive_coroots()[self.highest_root_index()];
            ExtAffElt { x: &a.x + &self.act(a.w, theta), w: self.weyl_mul(a.w, st) }
        } else {
            ExtAffElt { x: a.x.clone(), w: self.mul_simple_right(a.w, i - 1) }
        }
    }

    /// Greedy left peeling with least-index tie-breaking.
    pub fn reduced_word(&self, a: &ExtAffElt) -> Result<ReducedWord> {
        let mut cur = a.clone();
        let mut len = self.ext_length(&cur);
        let mut indices = Vec::with_capacity(len);
        while len > 0 {
            let step = (0..=self.rank()).find_map(|i| {
                let next = self.ext_simple_left(i, &cur);
                let l = self.ext_length(&next);
                (l < len).then_some((i, next, l))
            });
            let Some((i, next, l)) = step else {
                return Err(Error::NoDescent(len));
            };
            indices.push(i as u8);
            cur = next;
            len = l;
        }
        Ok(ReducedWord { indices, omega: cur })
    }

    /// Multiplies out `s_{i_1} ... s_{i_k} * omega`.
    pub fn reconstruct(&self, word: &ReducedWord) -> ExtAffElt {
        word.indices
            .iter()
            .rev()
            .fold(word.omega.clone(), |acc, &i| self.ext_simple_left(i as usize, &acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CartanType, LatticeKind};

    fn rd(ty: &str, lat: &str) -> RootDatum {
        RootDatum::build(ty.parse::<CartanType>().unwrap(), lat.parse::<LatticeKind>().unwrap()).unwrap()
    }

    fn v(c: &[i64]) -> LatticeElt {
        LatticeElt::from_slice(c)
    }

    #[test]
    fn group_law_examples() {
        let a1 = rd("A1", "sc");
        let s = a1.simple_reflection(0);
        let t = |x: i64| ExtAffElt::translation(v(&[x]));
        assert_eq!(a1.ext_mul(&t(1), &t(2)), t(3));
        let a = ExtAffElt::new(v(&[3]), s);
        assert_eq!(a1.ext_mul(&a, &a1.ext_inverse(&a)), ExtAffElt::identity(1));
        assert_eq!(a1.ext_mul(&ExtAffElt::finite(1, s), &t(1)), ExtAffElt::new(v(&[-1]), s));
    }

    #[test]
    fn length_examples() {
        let a1 = rd("A1", "sc");
        let s = a1.simple_reflection(0);
        assert_eq!(a1.ext_length(&ExtAffElt::translation(v(&[1]))), 2);
        assert_eq!(a1.ext_length(&ExtAffElt::identity(1)), 0);
        let a = ExtAffElt::new(v(&[-1]), s);
        assert_eq!(a1.ext_length(&a), 3);
        assert_eq!(a1.reduced_word(&a).unwrap().indices.len(), 3);
    }

    #[test]
    fn affine_simple_reflections_have_length_one() {
        let a1 = rd("A1", "sc");
        assert_eq!(a1.affine_simple(1), ExtAffElt::finite(1, a1.simple_reflection(0)));
        assert_eq!(a1.affine_simple(0), ExtAffElt::new(v(&[1]), a1.simple_reflection(0)));
        let a2 = rd("A2", "sc");
        let s0 = a2.affine_simple(0);
        assert_eq!(s0.x, v(&[1, 1]));
        assert_eq!(s0.w, a2.weyl_from_word(&[0, 1, 0]).unwrap());
        for d in [rd("A1", "sc"), rd("A2", "sc"), rd("B2", "ad"), rd("G2", "sc"), rd("A3", "gl")] {
            for i in 0..=d.rank() {
                let s = d.affine_simple(i);
                assert_eq!(d.ext_length(&s), 1);
                assert!(d.ext_mul(&s, &s).is_identity());
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        let a1 = rd("A1", "sc");
        let id = a1.reduced_word(&ExtAffElt::identity(1)).unwrap();
        assert!(id.indices.is_empty() && id.omega.is_identity());
        let rw = a1.reduced_word(&ExtAffElt::translation(v(&[1]))).unwrap();
        assert_eq!(rw.indices.len(), 2);
        assert!(rw.indices.iter().all(|&i| i <= 1));
        assert!(rw.omega.is_identity());

        let a1ad = rd("A1", "ad");
        let om = ExtAffElt::new(v(&[1]), a1ad.simple_reflection(0));
        let rw = a1ad.reduced_word(&om).unwrap();
        assert!(rw.indices.is_empty());
        assert_eq!(rw.omega, om);
    }

    #[test]
    fn words_reconstruct() {
        let b2 = rd("B2", "sc");
        for w in b2.weyl_elements() {
            for x in [[1, -2], [-3, 0], [2, 2]] {
                let a = ExtAffElt::new(v(&x), w);
                let rw = b2.reduced_word(&a).unwrap();
                assert_eq!(b2.reconstruct(&rw), a);
                assert_eq!(rw.indices.len(), b2.ext_length(&a));
                assert_eq!(b2.ext_length(&rw.omega), 0);
            }
        }
    }
}
