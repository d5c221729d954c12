use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact element of `Z[v, v^-1]`, where `v` plays the role of `q^(1/2)`.
///
/// Stored densely from the lowest nonzero exponent upward. Both ends of
/// `coeffs` are nonzero, and the zero scalar has no coefficients, so two
/// equal scalars always have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `v = q^(1/2)`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(2, 1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(2 * k, 1)
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(0, c)
    }

    /// `c * v^exp`.
    pub fn monomial<T: Into<BigInt>>(exp: i32, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { low: exp, coeffs: vec![c] }
        }
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, T)>,
        T: Into<BigInt>,
    {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc += &Self::monomial(e, c);
        }
        acc
    }

    fn from_raw(low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp as i64 - self.low as i64;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Returns `Some((sign, k))` when `self == sign * v^k`.
    pub fn as_unit(&self) -> Option<(i8, i32)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.is_one() {
            Some((1, self.low))
        } else if (-c).is_one() {
            Some((-1, self.low))
        } else {
            None
        }
    }

    /// Inverse of a unit `±v^k`.
    pub fn unit_inverse(&self) -> Result<Self> {
        match self.as_unit() {
            Some((sign, k)) => Ok(Self::monomial(-k, sign)),
            None => Err(Error::NonUnit(self.to_string())),
        }
    }

    /// Gcd of the integer coefficients (zero for the zero scalar).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Sign of the coefficient of the highest power of `v`.
    pub fn leading_sign(&self) -> Ordering {
        match self.coeffs.last() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub(crate) fn div_int_exact(&self, d: &BigInt) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|c| c / d).collect() }
    }

    /// Exact quotient `self / d` in `Z[v, v^-1]`, if one exists.
    pub fn checked_div(&self, d: &LaurentScalar) -> Option<LaurentScalar> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d.coeffs.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.coeffs.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_raw(self.low - d.low, quot))
    }

    /// Evaluates at `v = v0`. `v0` must be nonzero when negative exponents occur.
    pub fn specialize(&self, v0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * pow_rational(v0, e);
        }
        acc
    }

    /// Evaluates at `q = q0` when only even powers of `v` occur.
    pub fn specialize_q(&self, q0: &BigRational) -> Result<BigRational> {
        if self.terms().any(|(e, _)| e % 2 != 0) {
            return Err(Error::OddPower(self.to_string()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * pow_rational(q0, e / 2);
        }
        Ok(acc)
    }

    /// True when every exponent has the same parity as `parity`.
    pub fn has_parity(&self, parity: i32) -> bool {
        self.terms().all(|(e, _)| (e - parity).rem_euclid(2) == 0)
    }

    fn add_scaled_into(&mut self, other: &Self, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other.clone() } else { other.clone() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().unwrap().max(other.high_exp().unwrap());
        let len = (high - low + 1) as usize;
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = Vec::with_capacity(len);
            v.resize(pad, BigInt::zero());
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (other.low - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        let coeffs = std::mem::take(&mut self.coeffs);
        *self = Self::from_raw(self.low, coeffs);
    }
}

fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl<'a> AddAssign<&'a LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &'a LaurentScalar) {
        self.add_scaled_into(rhs, false);
    }
}

impl AddAssign for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        self.add_scaled_into(&rhs, false);
    }
}

impl<'a> SubAssign<&'a LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &'a LaurentScalar) {
        self.add_scaled_into(rhs, true);
    }
}

impl SubAssign for LaurentScalar {
    fn sub_assign(&mut self, rhs: LaurentScalar) {
        self.add_scaled_into(&rhs, true);
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &'a LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &'a LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &'a LaurentScalar) -> LaurentScalar {
        if self.is_zero() || rhs.is_zero() {
            return LaurentScalar::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentScalar::from_raw(self.low + rhs.low, out)
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(mut self) -> LaurentScalar {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &'a LaurentScalar) -> LaurentScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    match e {
                        1 => f.write_str("v")?,
                        _ => write!(f, "v^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
