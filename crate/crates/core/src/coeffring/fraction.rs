use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentScalar;
use crate::error::{Error, Result};

/// A quotient `num / den` of Laurent scalars.
///
/// Only integer content and powers of `v` are cancelled, plus an exact
/// division when `den` happens to divide `num`. The denominator has lowest
/// exponent zero and a positive leading coefficient. Equality is decided by
/// cross-multiplication, so unreduced representatives compare equal.
#[derive(Clone)]
pub struct ScalarFraction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl ScalarFraction {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentScalar::zero(), den: LaurentScalar::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentScalar::one())
    }

    pub fn num(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn den(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent scalar, when the denominator is `1`.
    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        self.den.is_one().then_some(&self.num)
    }

    fn reduced(num: LaurentScalar, den: LaurentScalar) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(q) = num.checked_div(&den) {
            return Self { num: q, den: LaurentScalar::one() };
        }
        let shift = -den.low_exp().unwrap();
        let (mut num, mut den) = (num.shift(shift), den.shift(shift));
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        if den.leading_sign() == Ordering::Less {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Evaluates at `v = v0`; `None` when the denominator vanishes there.
    pub fn specialize(&self, v0: &BigRational) -> Option<BigRational> {
        let d = self.den.specialize(v0);
        (!d.is_zero()).then(|| self.num.specialize(v0) / d)
    }

    /// Evaluates at `q = q0`, multiplying through by `v` when both parts
    /// are odd in `v`.
    pub fn specialize_q(&self, q0: &BigRational) -> Result<Option<BigRational>> {
        let (n, d) = if self.num.has_parity(1) && self.den.has_parity(1) {
            (self.num.shift(1), self.den.shift(1))
        } else {
            (self.num.clone(), self.den.clone())
        };
        let d = d.specialize_q(q0)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(n.specialize_q(q0)? / d))
    }
}

impl From<LaurentScalar> for ScalarFraction {
    fn from(num: LaurentScalar) -> Self {
        Self { num, den: LaurentScalar::one() }
    }
}

impl From<i64> for ScalarFraction {
    fn from(c: i64) -> Self {
        Self::from(LaurentScalar::from_int(c))
    }
}

impl From<BigInt> for ScalarFraction {
    fn from(c: BigInt) -> Self {
        Self::from(LaurentScalar::from_int(c))
    }
}

impl PartialEq for ScalarFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for ScalarFraction {}

impl<'a> Add<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn add(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        if self.den == rhs.den {
            return ScalarFraction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        ScalarFraction::reduced(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn sub(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn mul(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        ScalarFraction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`ScalarFraction::checked_div`] otherwise.
impl<'a> Div<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn div(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

impl Neg for &ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        ScalarFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        -&self
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
