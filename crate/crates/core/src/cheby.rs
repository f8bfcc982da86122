//! Chebyshev polynomials, the rectangular family `q_d^{λ,μ}`, and grid
//! checks of the barrier inequalities they satisfy.
//!
//! `q_d^{λ,μ} = (x−λ)^d ⊞⊞_d (x−μ)^d` obeys the three-term recurrence
//! `q_d = (x − (λ+μ)) q_{d−1} − λμ q_{d−2}` and equals
//! `(λμ)^{d/2} U_d((x − λ − μ) / (2√(λμ)))`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, to_f64};
use crate::transforms::{self, BoundReport};

/// Relative slack for the strict inequalities checked on grids; covers the
/// rounding of the two sides, which are each accurate to a few ulps.
pub const GRID_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChebFamily {
    pub kind: ChebKind,
    pub d: usize,
}

impl ChebFamily {
    pub fn polynomial(&self) -> Polynomial {
        match self.kind {
            ChebKind::FirstKind => cheb_t(self.d),
            ChebKind::SecondKind => cheb_u(self.d),
        }
    }
}

fn recurrence(d: usize, first: Polynomial, shift: &Polynomial, lag: &BigRational) -> Polynomial {
    let mut prev = Polynomial::one();
    let mut cur = first;
    if d == 0 {
        return prev;
    }
    for _ in 1..d {
        let next = &(shift * &cur) - &prev.scale(lag);
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_0 = 1`, `U_1 = 2x`, `U_d = 2x U_{d−1} − U_{d−2}`.
pub fn cheb_u(d: usize) -> Polynomial {
    let two_x = Polynomial::from_i64s(&[0, 2]);
    recurrence(d, two_x.clone(), &two_x, &rational::int(1))
}

/// `T_0 = 1`, `T_1 = x`, `T_d = 2x T_{d−1} − T_{d−2}`.
pub fn cheb_t(d: usize) -> Polynomial {
    let two_x = Polynomial::from_i64s(&[0, 2]);
    recurrence(d, Polynomial::monomial(1), &two_x, &rational::int(1))
}

/// `q_0 = 1`, `q_1 = x − (λ+μ)`, `q_d = (x − (λ+μ)) q_{d−1} − λμ q_{d−2}`.
pub fn rect_cheb(d: usize, lambda: &BigRational, mu: &BigRational) -> Result<Polynomial> {
    if lambda.is_negative() || mu.is_negative() {
        return Err(Error::domain("rect_cheb needs λ, μ ≥ 0"));
    }
    let shift = Polynomial::linear_factor(&(lambda + mu));
    Ok(recurrence(d, shift.clone(), &shift, &(lambda * mu)))
}

fn report(context: &str, lhs: f64, rhs: f64) -> BoundReport {
    BoundReport::new(context, lhs, rhs, GRID_TOLERANCE * rhs.abs().max(1.0))
}

/// `(1/d) U_d′(t) / U_d(t) < 1/√(t²−1)` for each `t > 1`.
pub fn check_cheby_barrier(d: usize, t_grid: &[f64]) -> Result<Vec<BoundReport>> {
    if d == 0 {
        return Err(Error::domain("the barrier check needs d ≥ 1"));
    }
    let u = cheb_u(d);
    t_grid
        .iter()
        .map(|&t| {
            if t.is_nan() || t <= 1.0 {
                return Err(Error::domain(format!("barrier check needs t > 1, got {t}")));
            }
            let lhs = transforms::cauchy_transform(&u, t)?;
            let rhs = 1.0 / ((t - 1.0) * (t + 1.0)).sqrt();
            Ok(report("cheby-barrier", lhs, rhs))
        })
        .collect()
}

/// `T_{d+1}(x) / U_d(x) < (d/(d+1)) √(x²−1) + x/(d+1)` for each `x > 1`.
/// At `d = 0` both sides equal `x`, so the margin is zero.
pub fn check_cheby_ratio(d: usize, x_grid: &[f64]) -> Result<Vec<BoundReport>> {
    let (t, u) = (cheb_t(d + 1), cheb_u(d));
    let n = d as f64;
    x_grid
        .iter()
        .map(|&x| {
            if x.is_nan() || x <= 1.0 {
                return Err(Error::domain(format!("ratio check needs x > 1, got {x}")));
            }
            let xr = rational::from_f64(x)?;
            let lhs = to_f64(&(t.evaluate(&xr) / u.evaluate(&xr)));
            let rhs = n / (n + 1.0) * ((x - 1.0) * (x + 1.0)).sqrt() + x / (n + 1.0);
            Ok(report("cheby-ratio", lhs, rhs))
        })
        .collect()
}

/// `F(t) = (1 + e^{−α/t}) / (1 − e^{−α/t})`.
fn coth_term(alpha: f64, t: f64) -> f64 {
    let m = (-alpha / t).exp_m1();
    (2.0 + m) / -m
}

/// `F(t) < (1−t) + t F(1)` for each `t ∈ (0, 1)`.
pub fn check_coth_convexity(alpha: f64, t_grid: &[f64]) -> Result<Vec<BoundReport>> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain(format!(
            "convexity check needs α > 0, got {alpha}"
        )));
    }
    let f1 = coth_term(alpha, 1.0);
    t_grid
        .iter()
        .map(|&t| {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::domain(format!(
                    "convexity check needs t in (0, 1), got {t}"
                )));
            }
            Ok(report(
                "coth-convexity",
                coth_term(alpha, t),
                (1.0 - t) + t * f1,
            ))
        })
        .collect()
}

/// `G_{Sq}(t) < t / √((t² − (λ+μ))² − 4λμ)` with `q = q_d^{λ,μ}` and
/// `Sq(x) = q(x²)`, for each `t > √λ + √μ`.
pub fn check_p1q1_cauchy(
    d: usize,
    lambda: &BigRational,
    mu: &BigRational,
    t_grid: &[f64],
) -> Result<Vec<BoundReport>> {
    if d == 0 {
        return Err(Error::domain("the rectangular Cauchy check needs d ≥ 1"));
    }
    let sq = rect_cheb(d, lambda, mu)?.square_substitute();
    let (l, m) = (to_f64(lambda), to_f64(mu));
    let edge = l.sqrt() + m.sqrt();
    t_grid
        .iter()
        .map(|&t| {
            if t.is_nan() || t <= edge {
                return Err(Error::domain(format!(
                    "t = {t} is not beyond the spectrum edge √λ + √μ = {edge}"
                )));
            }
            let lhs = transforms::cauchy_transform(&sq, t)?;
            let s = t * t - (l + m);
            let rhs = t / (s * s - 4.0 * l * m).sqrt();
            Ok(report("p1q1-cauchy", lhs, rhs))
        })
        .collect()
}

/// `n` points from `lo` to `hi` (inclusive), evenly spaced in `log`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
                .collect()
        }
    }
}

/// `1 + s` for `s` on a log grid over `[1e−3, 1e2]`: points approaching
/// the edge at 1 from above.
pub fn edge_grid(n: usize) -> Vec<f64> {
    log_grid(1e-3, 1e2, n)
        .into_iter()
        .map(|s| 1.0 + s)
        .collect()
}

/// Exact `√x` when `x` is the square of a rational.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}
