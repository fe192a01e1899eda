//! Exact rationals and the integer/harmonic scalars built on them.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// Every constructor and operation leaves the value canonical, so derived
/// equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den`, reducing to lowest terms.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// `num / den` for small literals; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

/// Renders as `num/den`, or just `num` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the canonical text form. Non-reduced input such as `2/4` is
/// accepted and reduced.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        Rational::new(num, den).map_err(|_| bad())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Operator division panics on a zero divisor; use `checked_div` where the
// divisor is not known to be nonzero.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Harmonic numbers `H_0 ..= H_k`, built incrementally (`H_0 = 0`).
pub fn harmonic_numbers(k: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k + 1);
    let mut h = Rational::zero();
    out.push(h.clone());
    for j in 1..=k {
        h += Rational::frac(1, j as i64);
        out.push(h.clone());
    }
    out
}

/// `H_k = 1 + 1/2 + ... + 1/k`.
pub fn harmonic(k: usize) -> Rational {
    harmonic_numbers(k).pop().expect("nonempty")
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) before the update
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        let sum = q("1/2") + q("-1/2");
        assert_eq!(sum, Rational::zero());
        assert_eq!(sum.denom(), &BigInt::one());
        assert_eq!(q("2/4") + q("0"), q("1/2"));
        assert_eq!(Rational::frac(2, 4).to_string(), "1/2");
    }

    #[test]
    fn multiplication_and_division() {
        assert_eq!(q("2/3") * q("3/4"), q("1/2"));
        assert_eq!(q("1/2").checked_div(&q("1/2")).unwrap(), Rational::one());
        assert_eq!(q("1/3").checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(-q("1/3"), q("-1/3"));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Rational::frac(-1, 3).to_string(), "-1/3");
        assert_eq!(Rational::frac(1, -3).to_string(), "-1/3");
        assert_eq!(Rational::one().to_string(), "1");
        assert_eq!(Rational::zero().to_string(), "0");
        assert_eq!(Rational::frac(0, -7).to_string(), "0");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(1), Rational::one());
        assert_eq!(harmonic(3), q("11/6"));
        let hs = harmonic_numbers(50);
        for k in 1..=50 {
            assert_eq!(&hs[k] - &hs[k - 1], Rational::frac(1, k as i64));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        for n in 2..=60u64 {
            for k in 1..n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        // iterated product in u128 as the oracle
        let oracle: u128 = (1..=20u128).product();
        assert_eq!(oracle, 2432902008176640000);
        assert_eq!(factorial(20), BigInt::from(oracle));
    }

    fn arb_rational() -> impl proptest::strategy::Strategy<Value = Rational> {
        use proptest::prelude::*;
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rational::frac(n, d))
    }

    fn assert_canonical(r: &Rational) {
        assert!(r.denom() > &BigInt::zero());
        assert!(r.numer().gcd(r.denom()).is_one());
    }

    proptest::proptest! {
        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            proptest::prop_assert_eq!(&a + &b, &b + &a);
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            proptest::prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            proptest::prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            for r in [&a + &b, &a - &b, &a * &b, -&a] {
                assert_canonical(&r);
            }
            if !b.is_zero() {
                let quot = a.checked_div(&b).unwrap();
                assert_canonical(&quot);
                proptest::prop_assert_eq!(quot * &b, a.clone());
            }
        }

        #[test]
        fn text_roundtrip(a in arb_rational()) {
            proptest::prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
