//! Truncated power series, Laurent series and exact polynomials over
//! [`Rational`].
//!
//! Truncation is tracked explicitly. A [`Series`] of order `n` knows the
//! coefficients of `t^0 .. t^(n-1)`; a [`LaurentSeries`] knows every
//! coefficient below its `order` (those below the valuation are zero). Every
//! operation returns exactly the window that is determined by the known
//! windows of its inputs and drops anything past it. In particular, division
//! by a series of valuation `v` costs `v` orders of absolute precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::{factorial, Rational};

/// Laurent series in `t`: `sum_{e >= val} c_e t^e + O(t^order)`.
///
/// Normalized: either `coeffs[0] != 0`, or `coeffs` is empty and the value is
/// the zero series `O(t^order)` with `val == order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    val: i64,
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// The series `sum_i coeffs[i] t^(val + i) + O(t^(val + coeffs.len()))`.
    pub fn new(val: i64, coeffs: Vec<Rational>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => LaurentSeries { val, coeffs },
            Some(k) => LaurentSeries {
                val: val + k as i64,
                coeffs: coeffs[k..].to_vec(),
            },
            None => LaurentSeries::zero(val + coeffs.len() as i64),
        }
    }

    /// `O(t^order)`.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            val: order,
            coeffs: Vec::new(),
        }
    }

    /// The constant 1 known up to `t^order`.
    pub fn one(order: i64) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// `c t^exp + O(t^order)`.
    pub fn monomial(c: Rational, exp: i64, order: i64) -> Self {
        if order <= exp {
            return Self::zero(order);
        }
        let mut coeffs = vec![Rational::zero(); (order - exp) as usize];
        coeffs[0] = c;
        Self::new(exp, coeffs)
    }

    /// Valuation, or `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Exponent of the first stored coefficient (equal to `order` for zero).
    pub fn start(&self) -> i64 {
        self.val
    }

    /// Coefficients of `t^e` are known for all `e < order`.
    pub fn order(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    /// Number of stored coefficients, i.e. precision relative to the valuation.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Result<Rational> {
        if exp >= self.order() {
            return Err(Error::CoefficientUnknown {
                exponent: exp,
                order: self.order(),
            });
        }
        Ok(self.coeff_known(exp))
    }

    // caller guarantees exp < order
    fn coeff_known(&self, exp: i64) -> Rational {
        if exp < self.val {
            Rational::zero()
        } else {
            self.coeffs[(exp - self.val) as usize].clone()
        }
    }

    /// Drops everything from `t^order` on. Never extends the window.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        if order <= self.val {
            return Self::zero(order);
        }
        Self::new(self.val, self.coeffs[..(order - self.val) as usize].to_vec())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let order = self.order().min(other.order());
        let low = self.val.min(other.val).min(order);
        let coeffs = (low..order)
            .map(|e| {
                let b = other.coeff_known(e);
                let a = self.coeff_known(e);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::new(low, coeffs)
    }

    /// Cauchy product. The result is known to relative precision
    /// `min(precision(a), precision(b))` above `val(a) + val(b)`.
    pub fn mul(&self, other: &Self) -> Self {
        let val = self.val + other.val;
        let len = self.coeffs.len().min(other.coeffs.len());
        if len == 0 {
            return Self::zero(val);
        }
        let (a, b) = (&self.coeffs[..len], &other.coeffs[..len]);
        if let Some(c) = single_term(a) {
            return Self::new(val, b.iter().map(|x| x * c).collect());
        }
        if let Some(c) = single_term(b) {
            return Self::new(val, a.iter().map(|x| x * c).collect());
        }
        // integer convolution over a common denominator, reduced once per
        // coefficient
        let (an, ad) = over_common_denominator(a);
        let (bn, bd) = over_common_denominator(b);
        let den = ad * bd;
        let coeffs = (0..len)
            .map(|k| {
                let num: BigInt = (0..=k).map(|i| &an[i] * &bn[k - i]).sum();
                Rational::new(num, den.clone()).expect("nonzero denominator")
            })
            .collect();
        Self::new(val, coeffs)
    }

    /// Multiplicative inverse, with valuation `-val` and the same relative
    /// precision.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.coeffs.len();
        let lead_inv = self.coeffs[0].recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(lead_inv.clone());
        for k in 1..n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-(s * &lead_inv));
        }
        Ok(Self::new(-self.val, out))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// `self^k` by binary powering; `self^0` is 1 at the relative precision
    /// of `self`.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.coeffs.len().max(1) as i64);
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc.expect("k > 0")
    }

    /// Termwise `d/dt`; the window shrinks by one.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero(self.order() - 1);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from(self.val + i as i64))
            .collect();
        Self::new(self.val - 1, coeffs)
    }

    /// `n! [t^n]`.
    pub fn egf_coefficient(&self, n: u64) -> Result<Rational> {
        self.check_power_series()?;
        Ok(self.coeff(n as i64)? * Rational::from(factorial(n)))
    }

    fn check_power_series(&self) -> Result<()> {
        match self.valuation() {
            Some(v) if v < 0 => Err(Error::NotAPowerSeries { exponent: v }),
            _ => Ok(()),
        }
    }

    /// Converts to a power series; fails if a negative power survives.
    pub fn to_series(&self) -> Result<Series> {
        self.check_power_series()?;
        let order = self.order().max(0) as usize;
        Ok(Series::new((0..order as i64).map(|e| self.coeff_known(e)).collect()))
    }

    /// Equality on the common known window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        let low = self.val.min(other.val);
        (low..order).all(|e| self.coeff_known(e) == other.coeff_known(e))
    }
}

/// `Some(c)` when `coeffs` is `[c, 0, 0, ...]`.
fn single_term(coeffs: &[Rational]) -> Option<&Rational> {
    coeffs[1..].iter().all(Rational::is_zero).then(|| &coeffs[0])
}

/// `(nums, den)` with `coeffs[i] = nums[i] / den`.
fn over_common_denominator(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl Iterator<Item = (i64, &'a Rational)>,
    order: Option<i64>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match e {
            0 => write!(f, "{c}")?,
            1 => write!(f, "{c}*{var}")?,
            _ => write!(f, "{c}*{var}^{e}")?,
        }
    }
    match order {
        Some(o) if first => write!(f, "O({var}^{o})"),
        Some(o) => write!(f, " + O({var}^{o})"),
        None if first => write!(f, "0"),
        None => Ok(()),
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (self.val + i as i64, c));
        write_terms(f, "t", terms, Some(self.order()))
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Truncated power series `sum_{i < order} c_i t^i + O(t^order)`.
///
/// Trailing zeros are kept: the length of `coeffs` is the order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// `e^(a t)` to the given order: coefficients `a^n / n!`.
    pub fn exp_ct(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = Rational::one();
        for n in 0..order {
            if n > 0 {
                term = term * a / Rational::from(n as i64);
            }
            coeffs.push(term.clone());
        }
        Series::new(coeffs)
    }

    /// `log(1 - z) = -sum_{k >= 1} z^k / k` to the given order.
    pub fn log1m(order: usize) -> Self {
        Series::new(
            (0..order)
                .map(|k| {
                    if k == 0 {
                        Rational::zero()
                    } else {
                        Rational::frac(-1, k as i64)
                    }
                })
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::CoefficientUnknown {
            exponent: n as i64,
            order: self.order() as i64,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs[..order.min(self.order())].to_vec())
    }

    pub fn to_laurent(&self) -> LaurentSeries {
        LaurentSeries::new(0, self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn from_power_laurent(l: LaurentSeries) -> Self {
        l.to_series().expect("product of power series is a power series")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_power_laurent(self.to_laurent().mul(&other.to_laurent()))
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            // relative precision of self, as for Laurent series
            let l = self.to_laurent();
            return Self::one(l.precision().max(1));
        }
        Self::from_power_laurent(self.to_laurent().pow(k))
    }

    pub fn invert(&self) -> Result<LaurentSeries> {
        self.to_laurent().invert()
    }

    pub fn div(&self, other: &Self) -> Result<LaurentSeries> {
        self.to_laurent().div(&other.to_laurent())
    }

    /// Termwise `d/dt`; the order drops by one.
    pub fn derivative(&self) -> Self {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as i64))
                .collect(),
        )
    }

    /// `n! [t^n]`.
    pub fn egf_coefficient(&self, n: u64) -> Result<Rational> {
        Ok(self.coeff(n as usize)? * Rational::from(factorial(n)))
    }

    /// Equality on the common known window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a == b)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c));
        write_terms(f, "t", terms, Some(self.order() as i64))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add_impl(rhs, true)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Exact polynomial over the rationals; the leading coefficient is nonzero
/// unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        Polynomial::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// The same polynomial as a truncated series of the requested order.
    pub fn embed(&self, order: usize) -> Series {
        Series::new(
            (0..order)
                .map(|i| self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero))
                .collect(),
        )
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! owned_poly_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_poly_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        write_terms(f, "x", terms, None)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ser(cs: &[&str]) -> Series {
        Series::new(cs.iter().map(|c| q(c)).collect())
    }

    fn laur(val: i64, cs: &[&str]) -> LaurentSeries {
        LaurentSeries::new(val, cs.iter().map(|c| q(c)).collect())
    }

    /// e^t - 1 to the given order.
    fn expm1(order: usize) -> Series {
        let mut s = Series::exp_ct(&Rational::one(), order);
        s.coeffs[0] = Rational::zero();
        s
    }

    #[test]
    fn add_intersects_precision() {
        let a = ser(&["1", "2"]);
        let b = ser(&["3", "4", "5"]);
        let sum = a.to_laurent().add_impl(&b.to_laurent(), false).to_series().unwrap();
        assert_eq!(sum, ser(&["4", "6"]));
        assert_eq!(&a + &Series::zero(5), a);
        assert_eq!(&laur(-1, &["1", "0"]) + &laur(0, &["1"]), laur(-1, &["1", "1"]));
        // t^-1 + O(t^0) leaves the constant term unknown
        assert_eq!(&laur(-1, &["1"]) + &laur(0, &["1"]), laur(-1, &["1"]));
    }

    #[test]
    fn multiplication() {
        let p = ser(&["1", "1", "0"]).mul(&ser(&["1", "-1", "0"]));
        assert_eq!(p, ser(&["1", "0", "-1"]));

        let t = LaurentSeries::monomial(Rational::one(), 1, 10);
        assert_eq!(t.mul(&laur(-1, &["1", "-1/2"])), laur(0, &["1", "-1/2"]));

        // (e^t - 1)^2 by hand: t^2 + t^3 + 7/12 t^4 + ...
        let sq = expm1(5).mul(&expm1(5));
        assert_eq!(sq.order(), 6);
        assert_eq!(&sq.coeffs()[..5], ser(&["0", "0", "1", "1", "7/12"]).coeffs());
    }

    #[test]
    fn inversion() {
        assert_eq!(ser(&["1", "1", "0"]).invert().unwrap(), laur(0, &["1", "-1", "1"]));
        let inv = expm1(6).invert().unwrap();
        assert_eq!(inv, laur(-1, &["1", "-1/2", "1/12", "0", "-1/720"]));
        assert_eq!(Series::zero(4).invert(), Err(Error::NotInvertible));
        assert_eq!(LaurentSeries::zero(3).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn division() {
        let t = LaurentSeries::monomial(Rational::one(), 1, 6);
        let b = t.div(&expm1(6).to_laurent()).unwrap();
        assert_eq!(b, laur(0, &["1", "-1/2", "1/12", "0", "-1/720"]));

        let s = ser(&["2", "3", "5", "7"]).to_laurent();
        assert!(s.div(&s).unwrap().agrees_with(&LaurentSeries::one(4)));
        assert_eq!(s.div(&s).unwrap(), LaurentSeries::one(4));

        let one = LaurentSeries::one(3);
        let t2 = LaurentSeries::monomial(Rational::one(), 2, 5);
        let r = one.div(&t2).unwrap();
        assert_eq!(r.valuation(), Some(-2));
        assert_eq!(r.coeffs()[0], Rational::one());
        assert!(r.coeffs()[1..].iter().all(Rational::is_zero));

        assert_eq!(one.div(&LaurentSeries::zero(2)), Err(Error::NotInvertible));
    }

    #[test]
    fn division_consumes_valuation() {
        // 1 / (e^t - 1) with e^t - 1 known below t^8: order -1 + 7
        let inv = expm1(8).invert().unwrap();
        assert_eq!(inv.order(), 6);
        let f = LaurentSeries::one(8).div(&expm1(8).to_laurent().pow(3)).unwrap();
        assert_eq!(f.valuation(), Some(-3));
        assert_eq!(f.order(), -3 + 7);
    }

    #[test]
    fn powers() {
        assert_eq!(ser(&["1", "1", "0", "0"]).pow(3), ser(&["1", "3", "3", "1"]));
        assert_eq!(ser(&["5", "1", "2"]).pow(0), ser(&["1", "0", "0"]));
        let cube = expm1(6).pow(3);
        assert_eq!(&cube.coeffs()[..5], ser(&["0", "0", "0", "1", "3/2"]).coeffs());
        let l = laur(-1, &["1", "2", "3"]);
        assert_eq!(l.pow(3), l.mul(&l).mul(&l));
    }

    #[test]
    fn derivatives() {
        assert_eq!(ser(&["1", "1", "1/2", "1/6"]).derivative(), ser(&["1", "1", "1/2"]));
        assert_eq!(ser(&["4", "0", "0"]).derivative(), Series::zero(2));
        assert_eq!(ser(&["0", "0", "1/2"]).derivative(), ser(&["0", "1"]));
        assert_eq!(laur(-1, &["1", "5"]).derivative(), laur(-2, &["-1", "0"]));
    }

    #[test]
    fn constructors() {
        assert_eq!(Series::exp_ct(&Rational::one(), 4), ser(&["1", "1", "1/2", "1/6"]));
        assert_eq!(Series::exp_ct(&Rational::zero(), 3), ser(&["1", "0", "0"]));
        assert_eq!(Series::exp_ct(&q("2"), 4), ser(&["1", "2", "2", "4/3"]));
        assert_eq!(Series::log1m(4), ser(&["0", "-1", "-1/2", "-1/3"]));
        assert_eq!(Series::log1m(1), ser(&["0"]));

        // d/dz log(1 - z) = -1/(1 - z)
        let n = 12;
        let one_minus_z = ser(&["1", "-1"]);
        let geometric = Polynomial::new(one_minus_z.coeffs().to_vec())
            .embed(n)
            .invert()
            .unwrap()
            .to_series()
            .unwrap();
        let residual = &Series::log1m(n).derivative() + &geometric;
        assert_eq!(residual.order(), n - 1);
        assert!(residual.is_zero());
    }

    #[test]
    fn egf_coefficients() {
        let t = LaurentSeries::monomial(Rational::one(), 1, 6);
        let b = t.div(&expm1(6).to_laurent()).unwrap();
        assert_eq!(b.egf_coefficient(2).unwrap(), q("1/6"));
        assert_eq!(Series::exp_ct(&Rational::one(), 5).egf_coefficient(3).unwrap(), Rational::one());
        assert!(matches!(
            Series::exp_ct(&Rational::one(), 5).egf_coefficient(5),
            Err(Error::CoefficientUnknown { exponent: 5, order: 5 })
        ));
        assert_eq!(
            laur(-1, &["1", "0"]).egf_coefficient(0),
            Err(Error::NotAPowerSeries { exponent: -1 })
        );
    }

    #[test]
    fn polynomials() {
        let x = Polynomial::monomial(Rational::one(), 1);
        let one = Polynomial::one();
        let xm1 = &x - &one;
        let xp1 = &x + &one;
        let prod = &xm1 * &xp1;
        assert_eq!(prod, Polynomial::new(vec![q("-1"), q("0"), q("1")]));
        assert_eq!(prod, &x.pow(2) - &one);

        // sum_{l=0}^{2} C(2,l) (x-1)^(2-l) = x^2
        let collapse = xm1.pow(2) + xm1.scale(&q("2")) + one.clone();
        assert_eq!(collapse, x.pow(2));

        assert_eq!(&xm1 - &xm1, Polynomial::zero());
        assert_eq!(Polynomial::linear_root(&q("1")), xm1);
        assert_eq!(prod.eval(&q("3")), q("8"));
        assert_eq!(prod.embed(4), ser(&["-1", "0", "1", "0"]));
        assert_eq!(prod.to_string(), "-1 + 1*x^2");
    }

    #[test]
    fn rendering() {
        assert_eq!(ser(&["1", "-1/2", "0"]).to_string(), "1 + -1/2*t + 0*t^2 + O(t^3)");
        assert_eq!(laur(-1, &["1", "-1/2"]).to_string(), "1*t^-1 + -1/2 + O(t^1)");
        assert_eq!(LaurentSeries::zero(4).to_string(), "O(t^4)");
    }

    #[test]
    fn normalization_and_window_equality() {
        let l = laur(-2, &["0", "0", "3", "4"]);
        assert_eq!(l.valuation(), Some(0));
        assert_eq!(l.order(), 2);
        let z = laur(-2, &["0", "0"]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentSeries::zero(0));

        let a = ser(&["1", "2", "3"]);
        let b = ser(&["1", "2"]);
        assert!(a.agrees_with(&b));
        assert_ne!(a, b);
        assert!(!a.agrees_with(&ser(&["1", "3"])));
    }
}
