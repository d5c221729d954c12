//! Root data and their finite Weyl groups.
//!
//! Roots are covectors on the cocharacter lattice `X = Z^d` and coroots are
//! vectors in it. The Weyl group is enumerated once, up front, as a table of
//! integer action matrices; a [`WeylElt`] is an index into that table.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest Weyl group we are willing to tabulate.
const MAX_WEYL_ORDER: usize = 40_320;
/// Bound on the root count while checking for finite type.
const MAX_ROOTS: usize = 4_096;

/// A point of the lattice `X`, in the datum's chosen basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeElt(pub SmallVec<[i64; 4]>);

impl LatticeElt {
    pub fn zero(dim: usize) -> Self {
        Self(SmallVec::from_elem(0, dim))
    }

    pub fn unit(dim: usize, j: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[j] = 1;
        v
    }

    pub fn from_slice(coords: &[i64]) -> Self {
        Self(SmallVec::from_slice(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Self, k: i64) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl fmt::Debug for LatticeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl<'a> Add<&'a LatticeElt> for &'a LatticeElt {
    type Output = LatticeElt;
    fn add(self, rhs: &'a LatticeElt) -> LatticeElt {
        self.add_scaled(rhs, 1)
    }
}

impl<'a> Sub<&'a LatticeElt> for &'a LatticeElt {
    type Output = LatticeElt;
    fn sub(self, rhs: &'a LatticeElt) -> LatticeElt {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &LatticeElt {
    type Output = LatticeElt;
    fn neg(self) -> LatticeElt {
        self.scale(-1)
    }
}

/// `covector(x)`.
pub fn pair(covector: &[i64], x: &LatticeElt) -> i64 {
    covector.iter().zip(x.coords()).map(|(a, b)| a * b).sum()
}

/// An element of the finite Weyl group of a particular [`RootDatum`].
///
/// Elements are deduplicated by action matrix when the group is enumerated,
/// so index equality is matrix equality. Index 0 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct WeylElt(pub(crate) u32);

impl WeylElt {
    pub const IDENTITY: WeylElt = WeylElt(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanType {
    /// `A_n`, of rank `n`.
    A(usize),
    B2,
    C2,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) => n,
            _ => 2,
        }
    }

    /// `C[i][j] = alpha_i(alpha_j^vee)`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        match self {
            CartanType::A(n) => (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match i.abs_diff(j) {
                            0 => 2,
                            1 => -1,
                            _ => 0,
                        })
                        .collect()
                })
                .collect(),
            // alpha_1 long
            CartanType::B2 => vec![vec![2, -2], vec![-1, 2]],
            // alpha_1 short
            CartanType::C2 => vec![vec![2, -1], vec![-2, 2]],
            // alpha_1 short
            CartanType::G2 => vec![vec![2, -1], vec![-3, 2]],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B2 => f.write_str("B2"),
            CartanType::C2 => f.write_str("C2"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace(['_', '{', '}'], "");
        match t.to_ascii_uppercase().as_str() {
            "B2" => return Ok(CartanType::B2),
            "C2" => return Ok(CartanType::C2),
            "G2" => return Ok(CartanType::G2),
            _ => {}
        }
        if let Some(n) = t.strip_prefix(['A', 'a']) {
            if let Ok(n) = n.parse::<usize>() {
                if n >= 1 {
                    return Ok(CartanType::A(n));
                }
            }
        }
        Err(Error::InvalidCartan(format!("unsupported Cartan type {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    /// `X` is the coroot lattice, with the simple coroots as basis.
    SimplyConnected,
    /// `X` is the coweight lattice, with basis dual to the simple roots.
    Adjoint,
    /// `X = Z^n` with roots `e_i - e_j` (type `A_{n-1}` only).
    Gl,
    Custom,
}

impl LatticeKind {
    pub fn label(self) -> &'static str {
        match self {
            LatticeKind::SimplyConnected => "sc",
            LatticeKind::Adjoint => "ad",
            LatticeKind::Gl => "gl",
            LatticeKind::Custom => "custom",
        }
    }
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sc" => Ok(LatticeKind::SimplyConnected),
            "ad" => Ok(LatticeKind::Adjoint),
            "gl" => Ok(LatticeKind::Gl),
            "custom" => Ok(LatticeKind::Custom),
            _ => Err(Error::IncompatibleLattice(format!("unknown lattice {s:?}"))),
        }
    }
}

struct WeylTable {
    mats: Vec<Vec<i64>>,
    index: FxHashMap<Vec<i64>, u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inv: Vec<u32>,
    len: Vec<u32>,
    words: Vec<Vec<u8>>,
    /// For each `w`, which positive roots `a` have `w^-1(a) < 0`.
    inverted: Vec<Vec<bool>>,
    mul: Option<Vec<u32>>,
}

/// A split, irreducible root datum together with its tabulated Weyl group.
pub struct RootDatum {
    label: String,
    lattice: LatticeKind,
    rank: usize,
    dim: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<LatticeElt>,
    pos_roots: Vec<Vec<i64>>,
    pos_coroots: Vec<LatticeElt>,
    pos_root_coords: Vec<Vec<i64>>,
    root_lookup: FxHashMap<Vec<i64>, (usize, bool)>,
    highest: usize,
    rho: Vec<i64>,
    regular: LatticeElt,
    weyl: WeylTable,
    theta_reflection: WeylElt,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("type", &self.label)
            .field("lattice", &self.lattice)
            .field("dim", &self.dim)
            .finish()
    }
}

impl RootDatum {
    /// Builds the datum of a named Cartan type on one of the standard lattices.
    pub fn build(ty: CartanType, lattice: LatticeKind) -> Result<Self> {
        let c = ty.cartan_matrix();
        let r = ty.rank();
        let (roots, coroots) = match lattice {
            LatticeKind::SimplyConnected => {
                let roots = c.clone();
                let coroots = (0..r).map(|j| LatticeElt::unit(r, j)).collect();
                (roots, coroots)
            }
            LatticeKind::Adjoint => {
                let roots = (0..r)
                    .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
                    .collect();
                let coroots = (0..r)
                    .map(|j| LatticeElt((0..r).map(|i| c[i][j]).collect()))
                    .collect();
                (roots, coroots)
            }
            LatticeKind::Gl => {
                let CartanType::A(n1) = ty else {
                    return Err(Error::IncompatibleLattice(format!("gl requires type A, got {ty}")));
                };
                let n = n1 + 1;
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n1 {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e[i + 1] = -1;
                    coroots.push(LatticeElt::from_slice(&e));
                    roots.push(e);
                }
                (roots, coroots)
            }
            LatticeKind::Custom => {
                return Err(Error::IncompatibleLattice(
                    "custom lattices need explicit roots and coroots".into(),
                ))
            }
        };
        Self::from_simple(ty.to_string(), lattice, roots, coroots)
    }

    /// Builds a datum from explicit simple roots (covectors) and simple
    /// coroots (vectors) in a common lattice `Z^d`.
    pub fn custom(simple_roots: Vec<Vec<i64>>, simple_coroots: Vec<Vec<i64>>) -> Result<Self> {
        let coroots = simple_coroots.iter().map(|c| LatticeElt::from_slice(c)).collect();
        Self::from_simple(String::new(), LatticeKind::Custom, simple_roots, coroots)
    }

    fn from_simple(
        label: String,
        lattice: LatticeKind,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<LatticeElt>,
    ) -> Result<Self> {
        let r = simple_roots.len();
        if r == 0 || simple_coroots.len() != r {
            return Err(Error::InvalidCartan("need as many simple coroots as simple roots (at least one)".into()));
        }
        let d = simple_roots[0].len();
        if d < r
            || simple_roots.iter().any(|a| a.len() != d)
            || simple_coroots.iter().any(|a| a.dim() != d)
        {
            return Err(Error::InvalidCartan("roots and coroots must share a lattice of dimension >= rank".into()));
        }
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| pair(&simple_roots[i], &simple_coroots[j])).collect())
            .collect();
        check_cartan(&cartan)?;

        let (pos_root_coords, pos_coroot_coords) = positive_roots(&cartan)?;
        let pos_roots: Vec<Vec<i64>> = pos_root_coords
            .iter()
            .map(|c| combine(c, &simple_roots, d))
            .collect();
        let pos_coroots: Vec<LatticeElt> = pos_coroot_coords
            .iter()
            .map(|c| {
                let vecs: Vec<Vec<i64>> = simple_coroots.iter().map(|v| v.0.to_vec()).collect();
                LatticeElt::from_slice(&combine(c, &vecs, d))
            })
            .collect();

        let mut root_lookup = FxHashMap::default();
        for (k, a) in pos_roots.iter().enumerate() {
            let neg: Vec<i64> = a.iter().map(|c| -c).collect();
            if root_lookup.insert(a.clone(), (k, true)).is_some() || root_lookup.insert(neg, (k, false)).is_some() {
                return Err(Error::InvalidCartan("simple roots are linearly dependent".into()));
            }
        }

        let height = |c: &Vec<i64>| c.iter().sum::<i64>();
        let max_h = pos_root_coords.iter().map(height).max().unwrap();
        let tops: Vec<usize> = (0..pos_root_coords.len())
            .filter(|&k| height(&pos_root_coords[k]) == max_h)
            .collect();
        if tops.len() != 1 {
            return Err(Error::InvalidCartan("root system is not irreducible".into()));
        }
        let highest = tops[0];

        let mut rho = vec![0; d];
        for a in &pos_roots {
            for (x, y) in rho.iter_mut().zip(a) {
                *x += y;
            }
        }
        let mut regular = LatticeElt::zero(d);
        for c in &pos_coroots {
            regular = &regular + c;
        }

        let label = if label.is_empty() { identify_type(&cartan, pos_roots.len()) } else { label };

        let mut rd = RootDatum {
            label,
            lattice,
            rank: r,
            dim: d,
            cartan,
            simple_roots,
            simple_coroots,
            pos_roots,
            pos_coroots,
            pos_root_coords,
            root_lookup,
            highest,
            rho,
            regular,
            weyl: WeylTable {
                mats: vec![],
                index: FxHashMap::default(),
                right: vec![],
                left: vec![],
                inv: vec![],
                len: vec![],
                words: vec![],
                inverted: vec![],
                mul: None,
            },
            theta_reflection: WeylElt::IDENTITY,
        };
        rd.weyl = rd.enumerate()?;
        rd.theta_reflection = rd.root_reflection(rd.highest);
        Ok(rd)
    }

    fn reflection_matrix(&self, root: &[i64], coroot: &LatticeElt) -> Vec<i64> {
        let d = self.dim;
        let mut m = identity(d);
        for a in 0..d {
            for b in 0..d {
                m[a * d + b] -= coroot.0[a] * root[b];
            }
        }
        m
    }

    fn enumerate(&self) -> Result<WeylTable> {
        let d = self.dim;
        let r = self.rank;
        let gens: Vec<Vec<i64>> = (0..r)
            .map(|i| self.reflection_matrix(&self.simple_roots[i], &self.simple_coroots[i]))
            .collect();
        let mut mats = vec![identity(d)];
        let mut index: FxHashMap<Vec<i64>, u32> = FxHashMap::default();
        index.insert(identity(d), 0);
        let mut len = vec![0u32];
        let mut right: Vec<Vec<u32>> = vec![];
        let mut queue = VecDeque::from([0u32]);
        while let Some(w) = queue.pop_front() {
            let mut row = vec![0; r];
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&mats[w as usize], g, d);
                let next = match index.get(&m) {
                    Some(&k) => k,
                    None => {
                        let k = mats.len() as u32;
                        if mats.len() >= MAX_WEYL_ORDER {
                            return Err(Error::InvalidCartan(format!(
                                "Weyl group larger than {MAX_WEYL_ORDER} elements"
                            )));
                        }
                        index.insert(m.clone(), k);
                        mats.push(m);
                        len.push(len[w as usize] + 1);
                        queue.push_back(k);
                        k
                    }
                };
                row[i] = next;
            }
            right.push(row);
        }
        let n = mats.len();
        let left: Vec<Vec<u32>> = (0..n)
            .map(|w| (0..r).map(|i| index[&mat_mul(&gens[i], &mats[w], d)]).collect())
            .collect();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&w| len[w]);
        let mut words: Vec<Vec<u8>> = vec![vec![]; n];
        for &w in &order {
            if w == 0 {
                continue;
            }
            let i = (0..r).find(|&i| len[left[w][i] as usize] < len[w]).unwrap();
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[left[w][i] as usize]);
            words[w] = word;
        }
        let inv: Vec<u32> = (0..n)
            .map(|w| {
                let mut u = 0u32;
                for &i in words[w].iter().rev() {
                    u = right[u as usize][i as usize];
                }
                u
            })
            .collect();

        let inverted: Vec<Vec<bool>> = mats
            .iter()
            .map(|m| {
                self.pos_roots
                    .iter()
                    .map(|a| {
                        let pulled = covec_mat(a, m, d);
                        !self.root_lookup[&pulled].1
                    })
                    .collect()
            })
            .collect();

        let mul = (n <= 1024).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let mut u = a as u32;
                    for &i in &words[b] {
                        u = right[u as usize][i as usize];
                    }
                    t[a * n + b] = u;
                }
            }
            t
        });

        Ok(WeylTable { mats, index, right, left, inv, len, words, inverted, mul })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension `d` of the lattice `X = Z^d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &LatticeElt {
        &self.simple_coroots[i]
    }

    /// Positive roots as covectors; the first `rank` are the simple roots.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    pub fn positive_coroots(&self) -> &[LatticeElt] {
        &self.pos_coroots
    }

    /// Coordinates of a positive root in the basis of simple roots.
    pub fn root_coords(&self, k: usize) -> &[i64] {
        &self.pos_root_coords[k]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    /// Sum of the positive roots, as a covector.
    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// `d0`, the sum of the positive coroots; strictly dominant.
    pub fn regular_dominant(&self) -> &LatticeElt {
        &self.regular
    }

    pub fn pairing(&self, root_index: usize, x: &LatticeElt) -> i64 {
        pair(&self.pos_roots[root_index], x)
    }

    pub fn rho_pairing(&self, x: &LatticeElt) -> i64 {
        pair(&self.rho, x)
    }

    pub fn is_dominant(&self, x: &LatticeElt) -> bool {
        self.simple_roots.iter().all(|a| pair(a, x) >= 0)
    }

    /// Writes `x = y - z` with `y`, `z` dominant and `z = m * d0` for the
    /// least `m >= 0` that works.
    pub fn dominant_decomposition(&self, x: &LatticeElt) -> (LatticeElt, LatticeElt) {
        let m = self.regularizing_multiple(x);
        let z = self.regular.scale(m);
        (x + &z, z)
    }

    /// Least `m >= 0` with `x + m * d0` dominant.
    pub fn regularizing_multiple(&self, x: &LatticeElt) -> i64 {
        self.simple_roots
            .iter()
            .map(|a| {
                let need = -pair(a, x);
                let step = pair(a, &self.regular);
                if need <= 0 {
                    0
                } else {
                    (need + step - 1) / step
                }
            })
            .max()
            .unwrap_or(0)
    }

    // Weyl group

    pub fn weyl_order(&self) -> usize {
        self.weyl.mats.len()
    }

    /// All elements, identity first.
    pub fn weyl_elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.weyl_order() as u32).map(WeylElt)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt(self.weyl.right[0][i])
    }

    /// `w * s_i`.
    pub fn mul_simple_right(&self, w: WeylElt, i: usize) -> WeylElt {
        WeylElt(self.weyl.right[w.index()][i])
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, i: usize, w: WeylElt) -> WeylElt {
        WeylElt(self.weyl.left[w.index()][i])
    }

    pub fn weyl_mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        if let Some(t) = &self.weyl.mul {
            return WeylElt(t[a.index() * self.weyl_order() + b.index()]);
        }
        self.weyl.words[b.index()].iter().fold(a, |u, &i| self.mul_simple_right(u, i as usize))
    }

    pub fn weyl_inverse(&self, w: WeylElt) -> WeylElt {
        WeylElt(self.weyl.inv[w.index()])
    }

    /// Length of `w`; equals the number of positive roots it makes negative.
    pub fn weyl_length(&self, w: WeylElt) -> usize {
        self.weyl.len[w.index()] as usize
    }

    /// Lexicographically least reduced word.
    pub fn weyl_word(&self, w: WeylElt) -> &[u8] {
        &self.weyl.words[w.index()]
    }

    /// Product of simple reflections `s_{i_1} ... s_{i_k}` (any word).
    pub fn weyl_from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut w = WeylElt::IDENTITY;
        for &i in word {
            if i >= self.rank {
                return Err(Error::Parse(format!("simple reflection index {i} out of range")));
            }
            w = self.mul_simple_right(w, i);
        }
        Ok(w)
    }

    pub fn weyl_from_matrix(&self, m: &[i64]) -> Option<WeylElt> {
        self.weyl.index.get(m).map(|&k| WeylElt(k))
    }

    /// Row-major `d x d` action matrix.
    pub fn weyl_matrix(&self, w: WeylElt) -> &[i64] {
        &self.weyl.mats[w.index()]
    }

    pub fn longest_element(&self) -> WeylElt {
        (0..self.weyl_order())
            .max_by_key(|&k| self.weyl.len[k])
            .map(|k| WeylElt(k as u32))
            .unwrap()
    }

    /// True when `w^-1` sends the `k`-th positive root to a negative root.
    pub fn inverts(&self, w: WeylElt, k: usize) -> bool {
        self.weyl.inverted[w.index()][k]
    }

    /// Reflection in the `k`-th positive root.
    pub fn root_reflection(&self, k: usize) -> WeylElt {
        let m = self.reflection_matrix(&self.pos_roots[k], &self.pos_coroots[k]);
        self.weyl_from_matrix(&m).expect("root reflections lie in W")
    }

    /// Reflection in the highest root.
    pub fn highest_root_reflection(&self) -> WeylElt {
        self.theta_reflection
    }

    pub fn act(&self, w: WeylElt, x: &LatticeElt) -> LatticeElt {
        if w.is_identity() {
            return x.clone();
        }
        let m = &self.weyl.mats[w.index()];
        let d = self.dim;
        LatticeElt((0..d).map(|a| (0..d).map(|b| m[a * d + b] * x.0[b]).sum()).collect())
    }

    /// Contragredient action on a covector: `(w.a)(x) = a(w^-1 x)`.
    pub fn act_covector(&self, w: WeylElt, a: &[i64]) -> Vec<i64> {
        covec_mat(a, &self.weyl.mats[self.weyl_inverse(w).index()], self.dim)
    }

    /// Locates a covector among the roots: `(positive index, sign)`.
    pub fn find_root(&self, covector: &[i64]) -> Option<(usize, bool)> {
        self.root_lookup.get(covector).copied()
    }

    /// The distinct elements of the orbit `W x`, sorted.
    pub fn orbit(&self, x: &LatticeElt) -> Vec<LatticeElt> {
        let mut pts: Vec<LatticeElt> = self.weyl_elements().map(|w| self.act(w, x)).collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// The unique dominant element of `W x`.
    pub fn dominant_in_orbit(&self, x: &LatticeElt) -> LatticeElt {
        let mut y = x.clone();
        'outer: loop {
            for i in 0..self.rank {
                let n = pair(&self.simple_roots[i], &y);
                if n < 0 {
                    y = y.add_scaled(&self.simple_coroots[i], -n);
                    continue 'outer;
                }
            }
            return y;
        }
    }

    /// Standard basis `e_1, ..., e_d` of `X`.
    pub fn lattice_basis(&self) -> Vec<LatticeElt> {
        (0..self.dim).map(|j| LatticeElt::unit(self.dim, j)).collect()
    }
}

fn identity(d: usize) -> Vec<i64> {
    let mut m = vec![0; d * d];
    for a in 0..d {
        m[a * d + a] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut m = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                m[i * d + j] += x * b[k * d + j];
            }
        }
    }
    m
}

/// Row vector times matrix.
fn covec_mat(a: &[i64], m: &[i64], d: usize) -> Vec<i64> {
    (0..d).map(|j| (0..d).map(|i| a[i] * m[i * d + j]).sum()).collect()
}

fn combine(coeffs: &[i64], vecs: &[Vec<i64>], d: usize) -> Vec<i64> {
    let mut out = vec![0; d];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

fn check_cartan(c: &[Vec<i64>]) -> Result<()> {
    let r = c.len();
    for i in 0..r {
        if c[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("alpha_{i}(alpha_{i}^vee) = {} != 2", c[i][i])));
        }
        for j in 0..r {
            if i == j {
                continue;
            }
            if c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0) || c[i][j] * c[j][i] > 3 {
                return Err(Error::InvalidCartan(format!("entries ({i},{j}) do not form a finite-type Cartan matrix")));
            }
        }
    }
    // connected Dynkin diagram
    let mut seen = vec![false; r];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if !seen[j] && c[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidCartan("reducible root data are not supported".into()));
    }
    Ok(())
}

/// Positive roots and their coroots, in simple-root and simple-coroot
/// coordinates, sorted by height then lexicographically.
fn positive_roots(c: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let r = c.len();
    let unit = |i: usize| (0..r).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let mut found: FxHashMap<Vec<i64>, Vec<i64>> = FxHashMap::default();
    let mut queue = VecDeque::new();
    for i in 0..r {
        found.insert(unit(i), unit(i));
        queue.push_back(unit(i));
    }
    while let Some(root) = queue.pop_front() {
        let co = found[&root].clone();
        for j in 0..r {
            let n: i64 = (0..r).map(|i| root[i] * c[i][j]).sum();
            let m: i64 = (0..r).map(|i| c[j][i] * co[i]).sum();
            let mut b = root.clone();
            b[j] -= n;
            let mut bc = co.clone();
            bc[j] -= m;
            if !found.contains_key(&b) {
                if found.len() >= MAX_ROOTS {
                    return Err(Error::InvalidCartan("Cartan matrix is not of finite type".into()));
                }
                found.insert(b.clone(), bc);
                queue.push_back(b);
            }
        }
    }
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> =
        found.into_iter().filter(|(b, _)| b.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });
    Ok(pos.into_iter().unzip())
}

fn identify_type(c: &[Vec<i64>], npos: usize) -> String {
    let r = c.len();
    let simply_laced = (0..r).all(|i| (0..r).all(|j| i == j || c[i][j] * c[j][i] <= 1));
    match (r, npos) {
        (2, 4) if c[0][1] == -2 => "B2".into(),
        (2, 4) => "C2".into(),
        (2, 6) => "G2".into(),
        _ if simply_laced && npos == r * (r + 1) / 2 => format!("A{r}"),
        _ => "custom".into(),
    }
}
