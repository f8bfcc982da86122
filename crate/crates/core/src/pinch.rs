//! Pinching two roots of a real-rooted polynomial without moving its
//! barrier root.
//!
//! Given roots `λ_1 ≥ … ≥ λ_d` of `p`, a barrier parameter `α`, and an index
//! `k` with `λ_k < λ_1`, let `t = maxroot(U_α p)` and
//!
//! ```text
//! μ = t − 2 / (1/(t−λ_1) + 1/(t−λ_k))
//! ρ = (μ² − λ_1 λ_k) / (2μ − λ_1 − λ_k)
//! ```
//!
//! Then `p = p̃ + p̂` with `p̃ = (x−μ)² r` and `p̂ = (2μ−λ_1−λ_k)(x−ρ) r`,
//! where `r` collects the other roots, and both `U_α p̃` and `U_α p̂` still
//! have largest root `t`.
//!
//! `t` is algebraic, so `p̃` and `p̂` carry double coefficients. Barrier
//! roots of the pieces are computed on the exact rational value of those
//! doubles.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{FloatPoly, Polynomial};
use crate::rational::{self, from_f64};
use crate::transforms;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PinchResult {
    /// `lc · (x−μ)² · r`, degree `d`.
    pub p_til: FloatPoly,
    /// `lc · (2μ−λ_1−λ_k)(x−ρ) · r`, degree `d−1`.
    pub p_hat: FloatPoly,
    pub mu: f64,
    pub rho: f64,
    /// The preserved barrier root.
    pub t: f64,
    pub lambda_1: f64,
    pub lambda_k: f64,
    /// 1-based index of the root pinched with `λ_1`.
    pub k: usize,
    /// The `d−2` roots shared by `p`, `p̃` and `p̂`, descending.
    pub others: Vec<f64>,
}

impl PinchResult {
    /// Largest root of `p̃`, read off its factors.
    pub fn til_max_root(&self) -> f64 {
        self.others.first().map_or(self.mu, |&r| r.max(self.mu))
    }

    /// Largest coefficient of `p̃ + p̂ − p`, relative to `max(1, ‖p/lc‖∞)`
    /// after dividing through by the leading coefficient `lc` of `p`.
    pub fn decomposition_error(&self, p: &Polynomial) -> f64 {
        let exact = p.to_float();
        let lc = exact.leading_coeff().unwrap_or(1.0);
        let sum = self.p_til.add(&self.p_hat);
        let scale = exact
            .coeffs()
            .iter()
            .fold(1.0f64, |m, c| m.max((c / lc).abs()));
        (0..exact.coeffs().len().max(sum.coeffs().len()))
            .map(|k| ((sum.coeff(k) - exact.coeff(k)) / lc).abs() / scale)
            .fold(0.0, f64::max)
    }
}

fn positive(x: f64, name: &str) -> Result<BigRational> {
    if x.is_finite() && x > 0.0 {
        from_f64(x)
    } else {
        Err(Error::domain(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}

/// Largest root of `U_α f` for double-coefficient `f`.
pub fn u_barrier_root(f: &FloatPoly, alpha: &BigRational) -> Result<f64> {
    transforms::u_max_root(&f.to_exact()?, alpha)
}

/// Largest root of `W_w f` taken at degree `d`.
pub fn w_barrier_root(f: &FloatPoly, w: f64, d: usize) -> Result<f64> {
    transforms::w_operator(&f.to_exact()?, &positive(w, "w")?, d)?.max_root()
}

/// Largest root of `U_α Sf`, where `Sf(x) = f(x²)`.
pub fn s_barrier_root(f: &FloatPoly, alpha: &BigRational) -> Result<f64> {
    transforms::u_max_root(&f.to_exact()?.square_substitute(), alpha)
}

/// Pinches `λ_1` with `λ_k` at barrier parameter `α`. `k` is 1-based into
/// the descending roots and defaults to `d`, the smallest root.
pub fn pinch(p: &Polynomial, alpha: f64, k: Option<usize>) -> Result<PinchResult> {
    pinch_exact(p, &positive(alpha, "alpha")?, k)
}

fn pinch_exact(p: &Polynomial, alpha: &BigRational, k: Option<usize>) -> Result<PinchResult> {
    let d = p.degree().ok_or(Error::ZeroPolynomial("pinch"))?;
    if d < 2 {
        return Err(Error::degree(format!("pinch needs degree ≥ 2, got {d}")));
    }
    let roots = p.all_roots()?.into_vec();
    let k = k.unwrap_or(d);
    if !(2..=d).contains(&k) {
        return Err(Error::domain(format!(
            "pinch index k = {k} outside 2..={d}"
        )));
    }
    let (l1, lk) = (roots[0], roots[k - 1]);
    if lk >= l1 {
        return Err(Error::NoDistinctRoots);
    }
    let t = transforms::u_max_root(p, alpha)?;
    let mu = t - 2.0 / (1.0 / (t - l1) + 1.0 / (t - lk));
    let gap = 2.0 * mu - l1 - lk;
    let rho = (mu * mu - l1 * lk) / gap;

    let rest: Vec<f64> = roots
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != 0 && i != k - 1)
        .map(|(_, &r)| r)
        .collect();
    let lc = rational::to_f64(p.leading_coeff().expect("nonzero"));
    let with = |extra: &[f64]| {
        let mut all = extra.to_vec();
        all.extend_from_slice(&rest);
        FloatPoly::from_roots(&all)
    };
    Ok(PinchResult {
        p_til: with(&[mu, mu]).scale(lc),
        p_hat: with(&[rho]).scale(lc * gap),
        mu,
        rho,
        t,
        lambda_1: l1,
        lambda_k: lk,
        k,
        others: rest,
    })
}

fn require_nonnegative(p: &Polynomial, d: usize) -> Result<()> {
    if p.degree() != Some(d) {
        return Err(Error::degree(format!(
            "expected degree {d}, got {:?}",
            p.degree()
        )));
    }
    if !p.has_only_nonnegative_roots()? {
        return Err(Error::domain(
            "needs a polynomial with only nonnegative real roots",
        ));
    }
    Ok(())
}

/// Pinch that preserves `maxroot(W_w p)`: the scalar parameter is
/// `α = t/(d(w+1))` with `t = maxroot(W_w p)`.
pub fn mult_pinch(p: &Polynomial, w: f64, d: usize) -> Result<PinchResult> {
    require_nonnegative(p, d)?;
    let wr = positive(w, "w")?;
    let t = transforms::w_operator(p, &wr, d)?.max_root()?;
    let alpha = from_f64(t)? / ((wr + rational::int(1)) * rational::int(d as i64));
    pinch_exact(p, &alpha, None)
}

/// Pinch that preserves `maxroot(U_α Sp)`: with `t` that root, the scalar
/// parameter is `2αt`, for which `maxroot(U_{2αt} p) = t²`. The result
/// reports `t`.
pub fn rec_pinch(p: &Polynomial, alpha: f64, d: usize) -> Result<PinchResult> {
    require_nonnegative(p, d)?;
    let a = positive(alpha, "alpha")?;
    let t = transforms::u_max_root(&p.square_substitute(), &a)?;
    let scalar = from_f64(t)? * a * rational::int(2);
    let mut result = pinch_exact(p, &scalar, None)?;
    result.t = t;
    Ok(result)
}
