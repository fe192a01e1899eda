//! Exact p-Bernoulli numbers.
//!
//! The numbers `B(n, p)` are computed four ways: the defining two-term
//! recurrence, two closed forms for the exponential generating functions
//! `f_p(t)`, and coefficient extraction from the bivariate generating
//! function `G(z, t) = (t + log(1 - z)) / (e^t (1 - z) - 1)`. Everything is
//! exact: coefficients are arbitrary-precision rationals and every truncated
//! series carries the window on which its coefficients are known.
//!
//! The [`pbernoulli`] module also contains verifiers for the differential
//! recurrence, the first-order PDE satisfied by `G`, and the binomial and
//! harmonic-number identities used to show the two closed forms agree.

pub mod bivariate;
mod error;
pub mod exact_arith;
pub mod pbernoulli;
pub mod series;

pub use bivariate::{build_g, BivariateSeries};
pub use error::{Error, Result};
pub use exact_arith::{binomial, factorial, harmonic, harmonic_numbers, Rational};
pub use pbernoulli::{PBernoulliTable, Route, VerificationReport};
pub use series::{LaurentSeries, Polynomial, Series};
