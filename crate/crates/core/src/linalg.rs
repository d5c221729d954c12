//! Exact elimination over the fraction field and over the rationals.

use std::collections::BTreeMap;
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::coeffring::{LaurentScalar, ScalarFraction};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

/// Evaluates a vector over `Z[v, v^-1]` at `q = q0`, after multiplying by `v`
/// when every coefficient is odd in `v`. Fails with `OddPower` when the
/// coefficients mix parities.
pub fn specialize_vector<K>(f: &LinComb<K, LaurentScalar>, q0: &BigRational) -> Result<Vec<(K, BigRational)>>
where
    K: Clone + Eq + Hash + Ord,
{
    let odd = f.iter().next().is_some_and(|(_, c)| c.has_parity(1));
    let mut out = Vec::with_capacity(f.len());
    for (k, c) in f.sorted_terms() {
        let c = if odd { c.shift(1) } else { c.clone() };
        if !c.has_parity(0) {
            return Err(Error::OddPower(format!("mixed parity in vector at {c}")));
        }
        out.push((k.clone(), c.specialize_q(q0)?));
    }
    Ok(out)
}

/// Rank over `Q` of vectors over `Z[v, v^-1]` specialized at `q = q0`.
pub fn specialized_rank<K>(vectors: &[LinComb<K, LaurentScalar>], q0: &BigRational) -> Result<usize>
where
    K: Clone + Eq + Hash + Ord,
{
    let mut index: FxHashMap<K, usize> = FxHashMap::default();
    let mut sparse = Vec::with_capacity(vectors.len());
    for f in vectors {
        let row = specialize_vector(f, q0)?;
        for (k, _) in &row {
            let n = index.len();
            index.entry(k.clone()).or_insert(n);
        }
        sparse.push(row);
    }
    let mut e = Echelon::new();
    for row in sparse {
        e.insert(row.into_iter().map(|(k, c)| (index[&k], c)));
    }
    Ok(e.rank())
}

fn pivot_cost(c: &ScalarFraction) -> usize {
    match c.as_laurent() {
        Some(l) if l.as_unit().is_some() => 0,
        Some(l) => l.num_terms(),
        None => c.num().num_terms() + c.den().num_terms() + 8,
    }
}

/// Solves `sum_j x_j cols[j] = target`. Free unknowns are set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve_sparse<K>(cols: &[LinComb<K, ScalarFraction>], target: &LinComb<K, ScalarFraction>) -> Option<Vec<ScalarFraction>>
where
    K: Clone + Eq + Hash + Ord,
{
    let mut row_of: FxHashMap<K, usize> = FxHashMap::default();
    let mut keys: Vec<&K> = cols.iter().flat_map(|c| c.keys()).chain(target.keys()).collect();
    keys.sort();
    keys.dedup();
    for (r, k) in keys.iter().enumerate() {
        row_of.insert((*k).clone(), r);
    }
    let n = cols.len();
    let mut rows: Vec<Vec<ScalarFraction>> = vec![vec![ScalarFraction::zero(); n + 1]; keys.len()];
    for (j, col) in cols.iter().enumerate() {
        for (k, c) in col.iter() {
            rows[row_of[k]][j] = c.clone();
        }
    }
    for (k, c) in target.iter() {
        rows[row_of[k]][n] = c.clone();
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        let best = (r..rows.len()).filter(|&i| !rows[i][j].is_zero()).min_by_key(|&i| pivot_cost(&rows[i][j]));
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let inv = rows[r][j].recip().ok()?;
        for c in rows[r].iter_mut().skip(j) {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (c, pc) in row.iter_mut().zip(&pivot_row).skip(j) {
                if !pc.is_zero() {
                    *c = &*c - &(&f * pc);
                }
            }
        }
        pivots.push(j);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![ScalarFraction::zero(); n];
    for (i, &j) in pivots.iter().enumerate() {
        sol[j] = rows[i][n].clone();
    }
    Some(sol)
}

/// Incremental row echelon basis over `Q` with sparse rows.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (j, c) in entries {
            add_entry(&mut row, j, c);
        }
        while let Some((&lead, c)) = row.iter().next() {
            let Some(basis) = self.pivots.get(&lead) else {
                let inv = c.recip();
                for v in row.values_mut() {
                    *v = &*v * &inv;
                }
                self.pivots.insert(lead, row);
                return true;
            };
            let f = c.clone();
            for (&j, b) in basis {
                add_entry(&mut row, j, -(&f * b));
            }
        }
        false
    }
}

fn add_entry(row: &mut BTreeMap<usize, BigRational>, j: usize, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match row.entry(j) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Rank of a dense matrix over `Q`.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.iter().cloned().enumerate());
    }
    e.rank()
}
