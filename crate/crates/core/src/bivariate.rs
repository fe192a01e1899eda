//! Series in `z` with Laurent-in-`t` coefficients.
//!
//! `(Laurent in t)[[z]]` is the ring where `e^t (1 - z) - 1` is a unit: its
//! `z^0` coefficient `e^t - 1` has `t`-valuation 1 and inverts to a Laurent
//! series. A flat bivariate division at the origin would not be defined.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::series::{LaurentSeries, Series};

/// `sum_{p < zorder} c_p(t) z^p + O(z^zorder)`, every `c_p` known below
/// `t^torder`.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    zcoeffs: Vec<LaurentSeries>,
    torder: i64,
}

impl BivariateSeries {
    /// Truncates every coefficient to the narrowest `t`-window among them
    /// and `torder`.
    pub fn new(zcoeffs: Vec<LaurentSeries>, torder: i64) -> Self {
        let torder = zcoeffs
            .iter()
            .map(LaurentSeries::order)
            .fold(torder, i64::min);
        let zcoeffs = zcoeffs.into_iter().map(|c| c.truncate(torder)).collect();
        BivariateSeries { zcoeffs, torder }
    }

    pub fn zero(zorder: usize, torder: i64) -> Self {
        BivariateSeries::new(vec![LaurentSeries::zero(torder); zorder], torder)
    }

    /// A polynomial in `z` with constant coefficients.
    pub fn from_z_polynomial(coeffs: &[Rational], zorder: usize, torder: i64) -> Self {
        let zcoeffs = (0..zorder)
            .map(|p| match coeffs.get(p) {
                Some(c) => LaurentSeries::monomial(c.clone(), 0, torder),
                None => LaurentSeries::zero(torder),
            })
            .collect();
        BivariateSeries::new(zcoeffs, torder)
    }

    pub fn zorder(&self) -> usize {
        self.zcoeffs.len()
    }

    pub fn torder(&self) -> i64 {
        self.torder
    }

    pub fn zcoeffs(&self) -> &[LaurentSeries] {
        &self.zcoeffs
    }

    /// `[z^p]`, a Laurent series in `t`.
    pub fn z_coefficient(&self, p: usize) -> Result<&LaurentSeries> {
        self.zcoeffs.get(p).ok_or(Error::IndexOutOfWindow {
            index: p,
            zorder: self.zorder(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.zcoeffs.iter().all(LaurentSeries::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let zcoeffs = self
            .zcoeffs
            .iter()
            .zip(&other.zcoeffs)
            .map(|(a, b)| a + b)
            .collect();
        BivariateSeries::new(zcoeffs, self.torder.min(other.torder))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BivariateSeries::new(
            self.zcoeffs.iter().map(|a| a.scale(c)).collect(),
            self.torder,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let zorder = self.zorder().min(other.zorder());
        let zcoeffs = (0..zorder)
            .map(|k| {
                (0..=k)
                    .map(|i| self.zcoeffs[i].mul(&other.zcoeffs[k - i]))
                    .reduce(|acc, x| &acc + &x)
                    .expect("k >= 0")
            })
            .collect();
        BivariateSeries::new(zcoeffs, self.torder.min(other.torder))
    }

    /// Inverse by the `z`-adic recursion
    /// `c_0 = 1/a_0`, `c_k = -(1/a_0) sum_{i=1}^{k} a_i c_{k-i}`.
    pub fn invert(&self) -> Result<Self> {
        let head = self.zcoeffs.first().ok_or(Error::NotInvertible)?;
        let head_inv = head.invert()?;
        let mut out: Vec<LaurentSeries> = Vec::with_capacity(self.zorder());
        out.push(head_inv.clone());
        for k in 1..self.zorder() {
            let s = (1..=k)
                .map(|i| self.zcoeffs[i].mul(&out[k - i]))
                .reduce(|acc, x| &acc + &x)
                .expect("k >= 1");
            out.push(-&s.mul(&head_inv));
        }
        let torder = out.iter().map(LaurentSeries::order).fold(i64::MAX, i64::min);
        Ok(BivariateSeries::new(out, torder))
    }

    /// Partial derivative in `t`; the `t`-window shrinks by one.
    pub fn dt(&self) -> Self {
        BivariateSeries::new(
            self.zcoeffs.iter().map(LaurentSeries::derivative).collect(),
            self.torder - 1,
        )
    }

    /// Partial derivative in `z`; the `z`-window shrinks by one.
    pub fn dz(&self) -> Self {
        let zcoeffs = self
            .zcoeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(p, c)| c.scale(&Rational::from(p as i64)))
            .collect();
        BivariateSeries::new(zcoeffs, self.torder)
    }

    /// Equality on the common `z`- and `t`-windows.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.zcoeffs
            .iter()
            .zip(&other.zcoeffs)
            .all(|(a, b)| a.agrees_with(b))
    }
}

impl fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in self.zcoeffs.iter().enumerate() {
            writeln!(f, "[z^{p}] {c}")?;
        }
        write!(f, "O(z^{})", self.zorder())
    }
}

/// `e^t` and `e^t - 1` known below `t^order`.
pub(crate) fn exp_and_expm1(order: usize) -> (LaurentSeries, LaurentSeries) {
    let exp = Series::exp_ct(&Rational::one(), order).to_laurent();
    let expm1 = &exp - &LaurentSeries::one(order as i64);
    (exp, expm1)
}

/// The denominator `e^t (1 - z) - 1` at the given windows.
pub fn denominator(zorder: usize, torder: usize) -> BivariateSeries {
    let (exp, expm1) = exp_and_expm1(torder);
    let t = torder as i64;
    let zcoeffs = (0..zorder)
        .map(|p| match p {
            0 => expm1.clone(),
            1 => -&exp,
            _ => LaurentSeries::zero(t),
        })
        .collect();
    BivariateSeries::new(zcoeffs, t)
}

/// The numerator `t + log(1 - z)` at the given windows.
pub fn numerator(zorder: usize, torder: usize) -> BivariateSeries {
    let t = torder as i64;
    let log = Series::log1m(zorder);
    let zcoeffs = log
        .coeffs()
        .iter()
        .enumerate()
        .map(|(p, c)| match p {
            0 => LaurentSeries::monomial(Rational::one(), 1, t),
            _ => LaurentSeries::monomial(c.clone(), 0, t),
        })
        .collect();
    BivariateSeries::new(zcoeffs, t)
}

/// `G(z, t) = (t + log(1 - z)) / (e^t (1 - z) - 1)`, truncated to
/// `O(z^zorder)` and `O(t^torder)`.
///
/// Panics if any `z`-coefficient keeps a negative power of `t`.
pub fn build_g(zorder: usize, torder: usize) -> BivariateSeries {
    assert!(zorder >= 1, "build_g needs zorder >= 1");
    assert!(torder >= 2, "build_g needs torder >= 2");
    // [z^k] of the inverted denominator has t-valuation -(k+1)
    let work = torder + zorder + 1;
    let inv = denominator(zorder, work)
        .invert()
        .expect("e^t - 1 is invertible");
    let g = numerator(zorder, work).mul(&inv);
    for (p, c) in g.zcoeffs().iter().enumerate() {
        if let Some(v) = c.valuation() {
            assert!(v >= 0, "[z^{p}]G has t-valuation {v}");
        }
    }
    assert!(
        g.torder() >= torder as i64,
        "lost t-precision: {} < {torder}",
        g.torder()
    );
    BivariateSeries::new(g.zcoeffs, torder as i64)
}
