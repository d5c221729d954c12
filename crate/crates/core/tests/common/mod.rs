#![allow(dead_code)]

//! An infinite dihedral Hecke algebra written from scratch, for comparison
//! with the general engine in type A1 with the coroot lattice.
//!
//! Group elements are alternating words in `s0`, `s1`; scalars are maps from
//! exponents of `v` to `i64`.

use std::collections::BTreeMap;

use affine_hecke::{AffineHecke, ExtAffElt, ImElement, LatticeElt, LaurentScalar, RootDatum, WeylElt};

pub type Poly = BTreeMap<i32, i64>;

pub fn poly_add(a: &mut Poly, b: &Poly, k: i64) {
    for (&e, &c) in b {
        let slot = a.entry(e).or_insert(0);
        *slot += k * c;
        if *slot == 0 {
            a.remove(&e);
        }
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e, &c) in a {
        for (&f, &d) in b {
            let slot = out.entry(e + f).or_insert(0);
            *slot += c * d;
            if *slot == 0 {
                out.remove(&(e + f));
            }
        }
    }
    out
}

pub fn mono(e: i32, c: i64) -> Poly {
    [(e, c)].into_iter().collect()
}

/// Alternating word `s_first s_(1-first) ...` of length `len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub first: u8,
    pub len: u32,
}

impl Word {
    pub const ONE: Word = Word { first: 0, len: 0 };

    pub fn last(self) -> Option<u8> {
        if self.len == 0 {
            None
        } else if self.len % 2 == 1 {
            Some(self.first)
        } else {
            Some(1 - self.first)
        }
    }

    /// `self * s_i` as a group element.
    pub fn times(self, i: u8) -> Word {
        match self.last() {
            None => Word { first: i, len: 1 },
            Some(l) if l == i => {
                if self.len == 1 {
                    Word::ONE
                } else {
                    Word { first: self.first, len: self.len - 1 }
                }
            }
            Some(_) => Word { first: self.first, len: self.len + 1 },
        }
    }

    pub fn letters(self) -> Vec<u8> {
        (0..self.len).map(|k| if k % 2 == 0 { self.first } else { 1 - self.first }).collect()
    }

    /// All words of length at most `n`.
    pub fn up_to(n: u32) -> Vec<Word> {
        let mut out = vec![Word::ONE];
        for len in 1..=n {
            out.push(Word { first: 0, len });
            out.push(Word { first: 1, len });
        }
        out
    }

    /// The affine map `u -> shift + sign * u` on the coroot coordinate,
    /// with `s1: u -> -u` and `s0: u -> 1 - u`.
    pub fn affine(self) -> (i64, i64) {
        self.letters().into_iter().fold((0, 1), |(x, e), i| {
            let (y, d) = if i == 0 { (1, -1) } else { (0, -1) };
            (x + e * y, e * d)
        })
    }
}

pub type Elt = BTreeMap<Word, Poly>;

pub fn add_term(f: &mut Elt, w: Word, c: &Poly, k: i64) {
    let slot = f.entry(w).or_default();
    poly_add(slot, c, k);
    if slot.is_empty() {
        f.remove(&w);
    }
}

/// `f * T_{s_i}`.
pub fn mul_gen(f: &Elt, i: u8) -> Elt {
    let mut out = Elt::new();
    for (&w, c) in f {
        if w.last() == Some(i) {
            add_term(&mut out, w.times(i), &poly_mul(c, &mono(2, 1)), 1);
            add_term(&mut out, w, &poly_mul(c, &[(2, 1), (0, -1)].into_iter().collect()), 1);
        } else {
            add_term(&mut out, w.times(i), c, 1);
        }
    }
    out
}

/// `f * T_{s_i}^{-1}` with `T_s^{-1} = v^-2 T_s + (v^-2 - 1)`.
pub fn mul_gen_inv(f: &Elt, i: u8) -> Elt {
    let mut out = Elt::new();
    let a = mul_gen(f, i);
    for (&w, c) in &a {
        add_term(&mut out, w, &poly_mul(c, &mono(-2, 1)), 1);
    }
    for (&w, c) in f {
        add_term(&mut out, w, &poly_mul(c, &[(-2, 1), (0, -1)].into_iter().collect()), 1);
    }
    out
}

pub fn basis(w: Word) -> Elt {
    [(w, mono(0, 1))].into_iter().collect()
}

pub fn mul(f: &Elt, g: &Elt) -> Elt {
    let mut out = Elt::new();
    for (&w, c) in g {
        let mut part = f.clone();
        for i in w.letters() {
            part = mul_gen(&part, i);
        }
        for (&u, d) in &part {
            add_term(&mut out, u, &poly_mul(c, d), 1);
        }
    }
    out
}

/// `t_n` for `n >= 0` is `(s0 s1)^n`.
pub fn translation(n: i64) -> Word {
    assert!(n >= 0);
    Word { first: 0, len: 2 * n as u32 }
}

/// `theta_n = v^(len z - len y) T_y T_z^{-1}` with `y = n + m`, `z = m`, both
/// nonnegative.
pub fn theta(n: i64, m: i64) -> Elt {
    let (y, z) = (translation(n + m), translation(m));
    let mut cur: Elt = [(y, mono(z.len as i32 - y.len as i32, 1))].into_iter().collect();
    for i in z.letters().into_iter().rev() {
        cur = mul_gen_inv(&cur, i);
    }
    cur
}

pub fn a1_engine() -> AffineHecke {
    AffineHecke::new(RootDatum::build("A1".parse().unwrap(), "sc".parse().unwrap()).unwrap()).with_budget(200)
}

pub fn to_ext(rd: &RootDatum, w: Word) -> ExtAffElt {
    let (x, e) = w.affine();
    let fin = if e == 1 { WeylElt::IDENTITY } else { rd.simple_reflection(0) };
    ExtAffElt::new(LatticeElt::from_slice(&[x]), fin)
}

pub fn poly_to_laurent(p: &Poly) -> LaurentScalar {
    LaurentScalar::from_terms(p.iter().map(|(&e, &c)| (e, c)))
}

pub fn to_engine(rd: &RootDatum, f: &Elt) -> ImElement {
    f.iter().map(|(&w, c)| (to_ext(rd, w), poly_to_laurent(c))).collect()
}

/// Engine keys of all words up to a given length.
pub fn words_by_ext(rd: &RootDatum, max_len: u32) -> BTreeMap<ExtAffElt, Word> {
    Word::up_to(max_len).into_iter().map(|w| (to_ext(rd, w), w)).collect()
}
