//! p-Bernoulli numbers `B(n, p)` by four routes, plus verifiers.
//!
//! `B(0, p) = 1` and `B(n+1, p) = p B(n, p) - (p+1)^2/(p+2) B(n, p+1)`;
//! `B(n, 0)` is the ordinary Bernoulli number. The exponential generating
//! function of column `p` is `f_p(t) = sum_n B(n, p) t^n / n!`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bivariate::{build_g, exp_and_expm1, BivariateSeries};
use crate::exact_arith::{binomial, factorial, harmonic_numbers, Rational};
use crate::series::{LaurentSeries, Polynomial, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// The two-term recurrence in `n`.
    Recurrence,
    /// `f_p` as a sum over `binom(p, k) H_k / (e^t - 1)^(k+1)`.
    Theorem1,
    /// `f_p` as a sum over `(1/k) e^((p-k)t) / (e^t - 1)^(p-k+1)`.
    Corollary1,
    /// `f_p = (p+1) [z^p] G(z, t)`.
    Bivariate,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Recurrence,
        Route::Theorem1,
        Route::Corollary1,
        Route::Bivariate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Theorem1 => "theorem1",
            Route::Corollary1 => "corollary",
            Route::Bivariate => "bivariate",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown route {s:?}"))
    }
}

/// Exact `B(n, p)` for `0 <= n <= nmax`, `0 <= p <= pmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBernoulliTable {
    nmax: usize,
    pmax: usize,
    route: Route,
    // rows[n][p]
    rows: Vec<Vec<Rational>>,
}

impl PBernoulliTable {
    pub fn compute(route: Route, nmax: usize, pmax: usize) -> Self {
        match route {
            Route::Recurrence => table_by_recurrence(nmax, pmax),
            _ => Self::from_egfs(route, nmax, &egf_family(route, pmax, nmax + 1)),
        }
    }

    /// Reads `B(n, p) = n! [t^n] f_p` off the generating functions.
    fn from_egfs(route: Route, nmax: usize, egfs: &[Series]) -> Self {
        let rows = (0..=nmax)
            .map(|n| {
                egfs.iter()
                    .map(|f| f.egf_coefficient(n as u64).expect("window covers nmax"))
                    .collect()
            })
            .collect();
        PBernoulliTable {
            nmax,
            pmax: egfs.len() - 1,
            route,
            rows,
        }
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn pmax(&self) -> usize {
        self.pmax
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn get(&self, n: usize, p: usize) -> &Rational {
        &self.rows[n][p]
    }

    /// Overwrites one entry. Used to inject faults into consistency checks.
    pub fn set(&mut self, n: usize, p: usize, value: Rational) {
        self.rows[n][p] = value;
    }

    /// All entries in `(n, p)` ascending order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(p, v)| (n, p, v)))
    }

    /// The exponential generating function of column `p`, to order `nmax + 1`.
    pub fn column_egf(&self, p: usize) -> Series {
        Series::new(
            (0..=self.nmax)
                .map(|n| &self.rows[n][p] / Rational::from(factorial(n as u64)))
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one verification suite. Passed iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases_run: 0,
            failures: Vec::new(),
        }
    }

    /// Records one case; a mismatch is kept as a failure.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, case: impl fmt::Display, expected: &T, got: &T) {
        self.cases_run += 1;
        if expected != got {
            self.failures.push(Failure {
                case: case.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds `other` into `self`, keeping this report's suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases_run += other.cases_run;
        self.failures.extend(other.failures.into_iter().map(|f| Failure {
            case: format!("{}: {}", other.suite, f.case),
            ..f
        }));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases, {} failures",
            self.suite,
            self.cases_run,
            self.failures.len()
        )?;
        for fail in &self.failures {
            write!(
                f,
                "\n  {}: expected {}, got {}",
                fail.case, fail.expected, fail.got
            )?;
        }
        Ok(())
    }
}

/// Ordinary Bernoulli numbers `B_0 ..= B_nmax` from
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0`, `B_0 = 1`. No series arithmetic.
pub fn bernoulli_oracle(nmax: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(nmax + 1);
    b.push(Rational::one());
    for n in 1..=nmax {
        let s: Rational = (0..n)
            .map(|k| &b[k] * Rational::from(binomial(n as u64 + 1, k as i64)))
            .sum();
        b.push(-s / Rational::from(n as i64 + 1));
    }
    b
}

/// Runs the recurrence from the seed row `B(0, p) = 1`.
///
/// Each step in `n` reads column `p + 1`, so the seed extends `nmax`
/// columns past `pmax` and the active range shrinks by one per step.
pub fn table_by_recurrence(nmax: usize, pmax: usize) -> PBernoulliTable {
    let width = pmax + nmax + 1;
    let weights: Vec<Rational> = (0..width)
        .map(|p| {
            let p = p as i64;
            Rational::frac((p + 1) * (p + 1), p + 2)
        })
        .collect();
    let mut row = vec![Rational::one(); width];
    let mut rows = Vec::with_capacity(nmax + 1);
    rows.push(row[..=pmax].to_vec());
    for _ in 0..nmax {
        row = (0..row.len() - 1)
            .map(|p| &row[p] * Rational::from(p as i64) - &weights[p] * &row[p + 1])
            .collect();
        rows.push(row[..=pmax].to_vec());
    }
    PBernoulliTable {
        nmax,
        pmax,
        route: Route::Recurrence,
        rows,
    }
}

/// `1/(e^t - 1)^j` for `j = 0 ..= count`, from `e^t - 1` known below `t^work`.
fn reciprocal_powers(count: usize, work: usize) -> Vec<LaurentSeries> {
    let (_, expm1) = exp_and_expm1(work);
    let inv = expm1.invert().expect("e^t - 1 is invertible");
    let mut out = vec![LaurentSeries::one(work as i64)];
    for j in 1..=count {
        let next = if j == 1 { inv.clone() } else { out[j - 1].mul(&inv) };
        out.push(next);
    }
    out
}

fn exp_laurent(a: i64, work: usize) -> LaurentSeries {
    Series::exp_ct(&Rational::from(a), work).to_laurent()
}

// 1/(e^t-1)^{p+1} starts at t^{-(p+1)}, and e^t - 1 itself costs one more
// order when inverted
fn closed_form_work(pmax: usize, torder: usize) -> usize {
    torder + pmax + 2
}

/// Truncates a generating function assembled from Laurent pieces; its
/// negative powers must have cancelled.
fn finish(f: LaurentSeries, p: usize, torder: usize) -> Series {
    if let Some(v) = f.valuation() {
        assert!(v >= 0, "f_{p} kept t-valuation {v}");
    }
    assert!(
        f.order() >= torder as i64,
        "f_{p} known only below t^{}, wanted t^{torder}",
        f.order()
    );
    f.truncate(torder as i64).to_series().expect("valuation >= 0")
}

/// `f_0 ..= f_pmax` from
/// `f_p = (p+1) e^{pt} (t - H_p) / (e^t-1)^{p+1}
///      + (p+1) sum_{k=1}^{p} C(p,k) H_k / (e^t-1)^{k+1}`.
pub fn theorem1_family(pmax: usize, torder: usize) -> Vec<Series> {
    let work = closed_form_work(pmax, torder);
    let w = work as i64;
    let h = harmonic_numbers(pmax);
    let recip = reciprocal_powers(pmax + 1, work);
    let t = LaurentSeries::monomial(Rational::one(), 1, w);
    (0..=pmax)
        .map(|p| {
            let t_minus_h = &t - &LaurentSeries::monomial(h[p].clone(), 0, w);
            let head = exp_laurent(p as i64, work).mul(&t_minus_h).mul(&recip[p + 1]);
            let tail = (1..=p).fold(LaurentSeries::zero(w), |acc, k| {
                let c = Rational::from(binomial(p as u64, k as i64)) * &h[k];
                &acc + &recip[k + 1].scale(&c)
            });
            let f = (&head + &tail).scale(&Rational::from(p as i64 + 1));
            finish(f, p, torder)
        })
        .collect()
}

/// `f_0 ..= f_pmax` from
/// `f_p = (p+1) t e^{pt} / (e^t-1)^{p+1}
///      - (p+1) sum_{k=1}^{p} (1/k) e^{(p-k)t} / (e^t-1)^{p-k+1}`.
pub fn corollary_family(pmax: usize, torder: usize) -> Vec<Series> {
    let work = closed_form_work(pmax, torder);
    let w = work as i64;
    let recip = reciprocal_powers(pmax + 1, work);
    // e^{jt} / (e^t-1)^{j+1}, which both the head and the sum are built from
    let ratio: Vec<LaurentSeries> = (0..=pmax)
        .map(|j| exp_laurent(j as i64, work).mul(&recip[j + 1]))
        .collect();
    (0..=pmax)
        .map(|p| {
            let head = ratio[p].shift(1);
            let tail = (1..=p).fold(LaurentSeries::zero(w), |acc, k| {
                &acc + &ratio[p - k].scale(&Rational::frac(1, k as i64))
            });
            let f = (&head - &tail).scale(&Rational::from(p as i64 + 1));
            finish(f, p, torder)
        })
        .collect()
}

pub fn f_p_theorem1(p: usize, torder: usize) -> Series {
    theorem1_family(p, torder).pop().expect("p + 1 entries")
}

pub fn f_p_corollary(p: usize, torder: usize) -> Series {
    corollary_family(p, torder).pop().expect("p + 1 entries")
}

/// `f_p = (p+1) [z^p] G(z, t)` for `0 <= p <= pmax`.
pub fn f_p_bivariate(pmax: usize, torder: usize) -> Vec<Series> {
    let g = build_g(pmax + 1, torder.max(2));
    g.zcoeffs()
        .iter()
        .enumerate()
        .map(|(p, c)| finish(c.scale(&Rational::from(p as i64 + 1)), p, torder))
        .collect()
}

/// `f_0 ..= f_pmax` to order `torder`, by the given route.
pub fn egf_family(route: Route, pmax: usize, torder: usize) -> Vec<Series> {
    match route {
        Route::Recurrence => {
            if torder == 0 {
                return vec![Series::zero(0); pmax + 1];
            }
            let table = table_by_recurrence(torder - 1, pmax);
            (0..=pmax).map(|p| table.column_egf(p)).collect()
        }
        Route::Theorem1 => theorem1_family(pmax, torder),
        Route::Corollary1 => corollary_family(pmax, torder),
        Route::Bivariate => f_p_bivariate(pmax, torder),
    }
}

/// Checks `f_p' = p f_p - (p+1)^2/(p+2) f_{p+1}` for every `p` with both
/// `f_p` and `f_{p+1}` present.
pub fn check_diff_recurrence(suite: &str, egfs: &[Series]) -> VerificationReport {
    let mut report = VerificationReport::new(suite);
    for (p, pair) in egfs.windows(2).enumerate() {
        let pi = p as i64;
        let lhs = pair[0].derivative();
        let rhs = &pair[0].scale(&Rational::from(pi))
            - &pair[1].scale(&Rational::frac((pi + 1) * (pi + 1), pi + 2));
        report.check(format!("p={p}"), &rhs.truncate(lhs.order()), &lhs);
    }
    report
}

pub fn verify_diff_recurrence(pmax: usize, torder: usize, route: Route) -> VerificationReport {
    let egfs = egf_family(route, pmax + 1, torder);
    check_diff_recurrence(&format!("diffrec/{route}"), &egfs)
}

/// `G_t + (1 - z) G_z = 0` and both boundary values of `G`.
pub fn verify_pde(zorder: usize, torder: usize) -> VerificationReport {
    let mut report = VerificationReport::new("pde");
    let g = build_g(zorder, torder);

    let one_minus_z = BivariateSeries::from_z_polynomial(
        &[Rational::one(), Rational::from(-1)],
        zorder,
        torder as i64,
    );
    let residual = g.dt().add(&one_minus_z.mul(&g.dz()));
    for (p, c) in residual.zcoeffs().iter().enumerate() {
        report.check(
            format!("residual [z^{p}]"),
            &LaurentSeries::zero(torder as i64 - 1),
            c,
        );
    }

    // G(z, 0) = (1/z) log(1/(1-z))
    for (p, c) in g.zcoeffs().iter().enumerate() {
        let got = c.coeff(0).expect("torder >= 1");
        report.check(format!("G(z,0) [z^{p}]"), &Rational::frac(1, p as i64 + 1), &got);
    }

    // G(0, t) = t/(e^t - 1): once against the Bernoulli oracle, once
    // against direct series division
    let g0 = g.z_coefficient(0).expect("zorder >= 1");
    let oracle = bernoulli_oracle(torder - 1);
    for (n, b) in oracle.iter().enumerate() {
        let got = g0.egf_coefficient(n as u64).expect("n < torder");
        report.check(format!("G(0,t) n={n}"), b, &got);
    }
    let (_, expm1) = exp_and_expm1(torder + 1);
    let direct = LaurentSeries::monomial(Rational::one(), 1, torder as i64 + 1)
        .div(&expm1)
        .expect("e^t - 1 is invertible")
        .truncate(torder as i64);
    report.check("G(0,t) = t/(e^t-1)", &direct, g0);
    report
}

/// Both sides of `sum_{k=j}^{n-1} C(k,j)/(n-k) = C(n,j)(H_n - H_j)`, as
/// plain rational sums.
pub fn binomial_harmonic_sides(n: usize, j: usize, harmonics: &[Rational]) -> (Rational, Rational) {
    let lhs = (j..n)
        .map(|k| Rational::from(binomial(k as u64, j as i64)) / Rational::from((n - k) as i64))
        .sum();
    let rhs = Rational::from(binomial(n as u64, j as i64)) * (&harmonics[n] - &harmonics[j]);
    (lhs, rhs)
}

/// Rows `0 ..= nmax` of Pascal's triangle.
fn pascal(nmax: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let row = (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    BigInt::one()
                } else {
                    &rows[n - 1][k - 1] + &rows[n - 1][k]
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `lcm(1, ..., m)` and the integers `L/i` and `L H_i` for `i <= m`.
struct HarmonicScale {
    lcm: BigInt,
    inv: Vec<BigInt>,
    h: Vec<BigInt>,
}

impl HarmonicScale {
    fn new(m: usize) -> Self {
        let lcm = (1..=m).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
        let mut inv = vec![BigInt::zero()];
        let mut h = vec![BigInt::zero()];
        for i in 1..=m {
            inv.push(&lcm / i);
            h.push(&h[i - 1] + &inv[i]);
        }
        HarmonicScale { lcm, inv, h }
    }

    fn rational(&self, scaled: BigInt) -> Rational {
        Rational::new(scaled, self.lcm.clone()).expect("lcm > 0")
    }
}

/// Checks every `0 <= j < n <= nmax`. Both sides are summed term by term
/// over the common denominator `lcm(1, ..., nmax)`.
#[allow(clippy::needless_range_loop)]
pub fn verify_identity_binomial_harmonic(nmax: usize) -> VerificationReport {
    let c = pascal(nmax);
    let scale = HarmonicScale::new(nmax);
    let mut report = VerificationReport::new("binomial-harmonic");
    for n in 1..=nmax {
        for j in 0..n {
            let lhs: BigInt = (j..n).map(|k| &c[k][j] * &scale.inv[n - k]).sum();
            let rhs = &c[n][j] * (&scale.h[n] - &scale.h[j]);
            report.check(
                format!("n={n} j={j}"),
                &scale.rational(rhs),
                &scale.rational(lhs),
            );
        }
    }
    report
}

/// Coefficients of `(x - 1)^k` for `k = 0 ..= kmax`, from Pascal's triangle.
fn shifted_powers(c: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    c.iter()
        .enumerate()
        .map(|(k, row)| {
            row.iter()
                .enumerate()
                .map(|(i, b)| if (k - i) % 2 == 1 { -b } else { b.clone() })
                .collect()
        })
        .collect()
}

/// `acc += weight * x^offset * poly` on integer coefficient vectors.
fn accumulate(acc: &mut [BigInt], offset: usize, poly: &[BigInt], weight: &BigInt) {
    for (a, b) in acc[offset..].iter_mut().zip(poly) {
        *a += b * weight;
    }
}

fn to_polynomial(coeffs: Vec<BigInt>) -> Polynomial {
    Polynomial::new(coeffs.into_iter().map(Rational::from).collect())
}

/// The three forms below, multiplied by `lcm(1, ..., m)` so that every
/// coefficient is an integer.
#[allow(clippy::needless_range_loop)]
fn laurent_sides_scaled(p: usize, c: &[Vec<BigInt>], xm1: &[Vec<BigInt>], s: &HarmonicScale) -> [Polynomial; 3] {
    let mut first = vec![BigInt::zero(); p + 1];
    for k in 1..=p {
        accumulate(&mut first, p - k, &xm1[k], &-&s.inv[k]);
    }
    let mut middle = vec![BigInt::zero(); p + 1];
    for l in 0..p {
        accumulate(&mut middle, 0, &xm1[p - l], &(&c[p][l] * (&s.h[l] - &s.h[p])));
    }
    let mut last = vec![BigInt::zero(); p + 1];
    for l in 0..=p {
        accumulate(&mut last, 0, &xm1[p - l], &(&c[p][l] * &s.h[l]));
    }
    last[p] -= &s.h[p];
    [first, middle, last].map(to_polynomial)
}

/// The three forms of `-sum_{k=1}^{p} (1/k) x^{p-k}/(x-1)^{p-k+1}`, each
/// multiplied through by `(x-1)^{p+1}`:
///
/// * `-sum_{k=1}^{p} (1/k) x^{p-k} (x-1)^k`
/// * `sum_{l=0}^{p-1} C(p,l) (H_l - H_p) (x-1)^{p-l}`
/// * `sum_{l=0}^{p} C(p,l) H_l (x-1)^{p-l} - H_p x^p`
pub fn laurent_identity_sides(p: usize) -> [Polynomial; 3] {
    let c = pascal(p);
    let s = HarmonicScale::new(p);
    let unscale = Rational::one() / s.rational(BigInt::one());
    laurent_sides_scaled(p, &c, &shifted_powers(&c), &s).map(|poly| poly.scale(&unscale))
}

/// Checks the three forms agree for every `p <= pmax`. The polynomials are
/// compared after scaling by `lcm(1, ..., pmax)`, which clears every `1/k`
/// and `H_l`.
pub fn verify_identity_laurent(pmax: usize) -> VerificationReport {
    let c = pascal(pmax);
    let xm1 = shifted_powers(&c);
    let s = HarmonicScale::new(pmax);
    let mut report = VerificationReport::new("laurent-expansion");
    for p in 0..=pmax {
        let [first, middle, last] = laurent_sides_scaled(p, &c, &xm1, &s);
        report.check(format!("p={p} expanded"), &first, &middle);
        report.check(format!("p={p} extended"), &first, &last);
    }
    report
}

fn collapse_sides_with(p: usize, c: &[Vec<BigInt>], xm1: &[Vec<BigInt>]) -> (Polynomial, Polynomial) {
    let mut lhs = vec![BigInt::zero(); p + 1];
    for l in 0..=p {
        accumulate(&mut lhs, 0, &xm1[p - l], &c[p][l]);
    }
    (to_polynomial(lhs), Polynomial::monomial(Rational::one(), p))
}

/// `(sum_{l=0}^{p} C(p,l) (x-1)^{p-l}, x^p)`.
pub fn collapse_sides(p: usize) -> (Polynomial, Polynomial) {
    let c = pascal(p);
    collapse_sides_with(p, &c, &shifted_powers(&c))
}

pub fn verify_identity_collapse(pmax: usize) -> VerificationReport {
    let c = pascal(pmax);
    let xm1 = shifted_powers(&c);
    let mut report = VerificationReport::new("collapse");
    for p in 0..=pmax {
        let (lhs, rhs) = collapse_sides_with(p, &c, &xm1);
        report.check(format!("p={p}"), &rhs, &lhs);
    }
    report
}

/// Entrywise agreement of `tables` with the first one, plus `B(n, 0)`
/// against the oracle and `B(0, p) = 1` for each table.
pub fn check_tables(tables: &[PBernoulliTable]) -> VerificationReport {
    let mut report = VerificationReport::new("cross");
    let Some(reference) = tables.first() else {
        return report;
    };
    let oracle = bernoulli_oracle(reference.nmax());
    for table in tables {
        let route = table.route();
        if table.route() != reference.route() {
            for (n, p, v) in table.entries() {
                report.check(
                    format!("{route} vs {} B({n},{p})", reference.route()),
                    reference.get(n, p),
                    v,
                );
            }
        }
        for (n, b) in oracle.iter().enumerate() {
            report.check(format!("{route} B({n},0) vs oracle"), b, table.get(n, 0));
        }
        for p in 0..=table.pmax() {
            report.check(format!("{route} B(0,{p})"), &Rational::one(), table.get(0, p));
        }
    }
    report
}

/// Tables from all four routes, in [`Route::ALL`] order.
pub fn all_tables(nmax: usize, pmax: usize) -> Vec<PBernoulliTable> {
    Route::ALL
        .par_iter()
        .map(|&r| PBernoulliTable::compute(r, nmax, pmax))
        .collect()
}

pub fn cross_validate(nmax: usize, pmax: usize) -> VerificationReport {
    check_tables(&all_tables(nmax, pmax))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_small_values() {
        let b = bernoulli_oracle(6);
        assert_eq!(b[0], q("1"));
        assert_eq!(b[1], q("-1/2"));
        assert_eq!(b[2], q("1/6"));
        assert_eq!(b[3], q("0"));
        assert_eq!(b[4], q("-1/30"));
        assert_eq!(b[5], q("0"));
        assert_eq!(b[6], q("1/42"));
    }

    #[test]
    fn recurrence_hand_steps() {
        let t = table_by_recurrence(2, 1);
        assert_eq!(t.get(1, 0), &q("-1/2"));
        assert_eq!(t.get(1, 1), &q("-1/3"));
        assert_eq!(t.get(2, 0), &q("1/6"));
        assert_eq!(t.entries().count(), 6);
        let seed = table_by_recurrence(0, 3);
        assert!(seed.entries().all(|(_, _, v)| v.is_one()));
    }

    #[test]
    fn closed_forms_low_order() {
        let bern: Vec<Rational> = ["1", "-1/2", "1/12", "0", "-1/720"].iter().map(|s| q(s)).collect();
        assert_eq!(f_p_theorem1(0, 5).coeffs(), &bern[..]);
        assert_eq!(f_p_corollary(0, 5).coeffs(), &bern[..]);
        for f in [f_p_theorem1(1, 4), f_p_corollary(1, 4)] {
            assert_eq!(f.order(), 4);
            assert_eq!(f.coeffs()[0], q("1"));
            assert_eq!(f.coeffs()[1], q("-1/3"));
        }
        let biv = f_p_bivariate(3, 5);
        assert_eq!(biv[0].coeffs(), &bern[..]);
        assert!(biv.iter().all(|f| f.coeffs()[0].is_one()));
        assert_eq!(biv[1].coeffs()[1], q("-1/3"));
    }

    #[test]
    fn routes_agree_small() {
        let report = cross_validate(8, 5);
        assert!(report.passed(), "{report}");
        // 3 cross tables * 54 entries + 4 * (9 oracle + 6 seed)
        assert_eq!(report.cases_run, 3 * 54 + 4 * 15);
    }

    #[test]
    fn route_names_roundtrip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("nope".parse::<Route>().is_err());
    }

    #[test]
    fn diffrec_detects_corruption() {
        let mut egfs = egf_family(Route::Theorem1, 3, 8);
        assert!(check_diff_recurrence("t", &egfs).passed());
        let mut c = egfs[1].coeffs().to_vec();
        c[4] = &c[4] + &q("1/1000");
        egfs[1] = Series::new(c);
        let report = check_diff_recurrence("t", &egfs);
        let failing: Vec<&str> = report.failures.iter().map(|f| f.case.as_str()).collect();
        // f_1 appears in the p = 0 and p = 1 checks
        assert_eq!(failing, ["p=0", "p=1"]);
    }

    #[test]
    fn diffrec_at_p0() {
        let report = verify_diff_recurrence(0, 10, Route::Bivariate);
        assert_eq!(report.cases_run, 1);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn identity_hand_cases() {
        let h = harmonic_numbers(10);
        assert_eq!(binomial_harmonic_sides(3, 1, &h), (q("5/2"), q("5/2")));
        for n in 1..=10 {
            let (lhs, rhs) = binomial_harmonic_sides(n, n - 1, &h);
            assert_eq!(lhs, Rational::one());
            assert_eq!(rhs, Rational::one());
        }
        let [a, b, c] = laurent_identity_sides(1);
        let one_minus_x = Polynomial::new(vec![q("1"), q("-1")]);
        assert_eq!(a, one_minus_x);
        assert_eq!(b, one_minus_x);
        assert_eq!(c, one_minus_x);
        let [a, b, c] = laurent_identity_sides(0);
        assert!(a.is_zero() && b.is_zero() && c.is_zero());
        assert_eq!(collapse_sides(0), (Polynomial::one(), Polynomial::one()));
        let (l, r) = collapse_sides(2);
        assert_eq!(l, r);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn scaled_sums_match_plain_sums() {
        let h = harmonic_numbers(12);
        let c = pascal(12);
        let s = HarmonicScale::new(12);
        for n in 1..=12 {
            for j in 0..n {
                let (lhs, _) = binomial_harmonic_sides(n, j, &h);
                let scaled: BigInt = (j..n).map(|k| &c[k][j] * &s.inv[n - k]).sum();
                assert_eq!(s.rational(scaled), lhs);
            }
        }
        // (x-1)^k from Pascal's triangle agrees with repeated multiplication
        let xm1 = Polynomial::linear_root(&Rational::one());
        for (k, coeffs) in shifted_powers(&c).into_iter().enumerate() {
            assert_eq!(to_polynomial(coeffs), xm1.pow(k as u32));
        }
    }

    #[test]
    fn identity_checks_catch_mutations() {
        let h = harmonic_numbers(6);
        let mut report = VerificationReport::new("mutated");
        let (lhs, rhs) = binomial_harmonic_sides(6, 2, &h);
        report.check("bh", &rhs, &(lhs + Rational::frac(1, 720)));
        let [a, _, c] = laurent_identity_sides(5);
        report.check("laurent", &a, &(&c + &Polynomial::monomial(q("1/7"), 3)));
        let (l, r) = collapse_sides(4);
        report.check("collapse", &r, &l.scale(&q("2")));
        assert_eq!(report.cases_run, 3);
        assert_eq!(report.failures.len(), 3);
        assert!(!report.passed());
    }

    #[test]
    fn cross_check_catches_injected_fault() {
        let mut tables = all_tables(4, 3);
        assert!(check_tables(&tables).passed());
        tables[2].set(3, 2, q("17"));
        let report = check_tables(&tables);
        assert_eq!(report.failures.len(), 1);
        assert!(report.failures[0].case.contains("B(3,2)"));
    }

    #[test]
    fn report_rendering() {
        let mut r = VerificationReport::new("demo");
        r.check("a", &q("1"), &q("1"));
        assert_eq!(r.to_string(), "PASS demo: 1 cases, 0 failures");
        r.check("b", &q("1"), &q("2"));
        assert_eq!(r.to_string(), "FAIL demo: 2 cases, 1 failures\n  b: expected 1, got 2");
        let mut outer = VerificationReport::new("all");
        outer.absorb(r);
        assert_eq!(outer.cases_run, 2);
        assert_eq!(outer.failures[0].case, "demo: b");
    }
}
