//! Finite Cauchy, R, M and S transforms, and checkers for the root bounds
//! built on them.
//!
//! For a degree-`d` polynomial `p`:
//!
//! * `G_p(x) = p′(x) / (d p(x))`, the Cauchy transform;
//! * `K_p(w)`, its inverse above the largest root, is the largest root of
//!   `U_α p = p − α p′` with `α = 1/(wd)`;
//! * `R_p(w) = K_p(w) − 1/w`;
//! * `M_p(z) = z G_p(z) − 1`, inverted through the largest root of
//!   `W_w p = (1 − x D / (d(w+1))) p`;
//! * `S_p(w) = (w/(w+1)) M_p⁻¹(w)`.
//!
//! Transform inputs are exact polynomials with double-valued arguments.
//! Arguments are converted to rationals exactly, so each result is
//! rounded once.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::convolve::{self, ConvolutionKind};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, from_f64, to_f64};

/// Absolute tolerance used by the additive checkers.
pub const ADDITIVE_TOLERANCE: f64 = 1e-9;
/// Relative tolerance used by the multiplicative checker.
pub const MULTIPLICATIVE_RELATIVE_TOLERANCE: f64 = 1e-9;

/// The outcome of checking `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub context: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
    pub tolerance: f64,
}

impl BoundReport {
    pub fn new(context: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let margin = rhs - lhs;
        BoundReport {
            context: context.into(),
            lhs,
            rhs,
            margin,
            satisfied: margin >= -tolerance,
            tolerance,
        }
    }
}

fn degree_of(p: &Polynomial, op: &'static str) -> Result<usize> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial(op)),
        Some(0) => Err(Error::domain(format!(
            "{op} needs a non-constant polynomial"
        ))),
        Some(d) => Ok(d),
    }
}

fn positive(w: f64, name: &str) -> Result<BigRational> {
    if w.is_finite() && w > 0.0 {
        from_f64(w)
    } else {
        Err(Error::domain(format!(
            "{name} must be positive and finite, got {w}"
        )))
    }
}

fn cauchy_exact(p: &Polynomial, x: f64) -> Result<BigRational> {
    let d = degree_of(p, "cauchy_transform")?;
    let xr = from_f64(x)?;
    let px = p.evaluate(&xr);
    if px.is_zero() {
        return Err(Error::Pole(x));
    }
    Ok(p.derivative().evaluate(&xr) / (px * rational::int(d as i64)))
}

/// `G_p(x) = p′(x) / (d p(x))`.
pub fn cauchy_transform(p: &Polynomial, x: f64) -> Result<f64> {
    cauchy_exact(p, x).map(|g| to_f64(&g))
}

/// Largest root of `U_α p = p − α p′`.
pub fn u_max_root(p: &Polynomial, alpha: &BigRational) -> Result<f64> {
    p.shift_op(alpha).max_root()
}

/// `K_p(w)`, the `x > maxroot(p)` with `G_p(x) = w`. Assumes `p` is
/// real-rooted.
pub fn inverse_cauchy(p: &Polynomial, w: f64) -> Result<f64> {
    let d = degree_of(p, "inverse_cauchy")?;
    let w = positive(w, "w")?;
    let alpha = (w * rational::int(d as i64)).recip();
    u_max_root(p, &alpha)
}

pub fn r_transform(p: &Polynomial, w: f64) -> Result<f64> {
    Ok(inverse_cauchy(p, w)? - 1.0 / w)
}

pub fn m_transform(p: &Polynomial, z: f64) -> Result<f64> {
    let g = cauchy_exact(p, z)?;
    Ok(to_f64(&(from_f64(z)? * g - BigRational::one())))
}

/// `W_w p = (1 − x D / (d(w+1))) p`, exactly, for `deg p ≤ d`.
///
/// Each monomial `x^k` is an eigenvector with eigenvalue `1 − k/(d(w+1))`.
pub fn w_operator(p: &Polynomial, w: &BigRational, d: usize) -> Result<Polynomial> {
    let shifted = w + BigRational::one();
    if shifted <= BigRational::zero() {
        return Err(Error::domain(format!("W_w needs w > −1, got {w}")));
    }
    if d == 0 {
        return Err(Error::domain("W_w needs d ≥ 1"));
    }
    if p.degree().is_some_and(|k| k > d) {
        return Err(Error::degree(format!(
            "W_w at degree {d} given degree {:?}",
            p.degree()
        )));
    }
    let denom = shifted * rational::int(d as i64);
    Ok(Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (BigRational::one() - rational::int(k as i64) / &denom))
            .collect(),
    ))
}

/// The largest `z` with `M_p(z) = w`, as `maxroot(W_w p)`.
pub fn inverse_m(p: &Polynomial, w: f64) -> Result<f64> {
    let d = degree_of(p, "inverse_m")?;
    if p.is_monomial() {
        return Err(Error::domain(
            "inverse M transform of c·x^d has no finite value",
        ));
    }
    let w = positive(w, "w")?;
    w_operator(p, &w, d)?.max_root()
}

/// `S_p(w) = (w/(w+1)) M_p⁻¹(w)`.
pub fn s_transform_variant(p: &Polynomial, w: f64) -> Result<f64> {
    Ok(w / (w + 1.0) * inverse_m(p, w)?)
}

fn check_inputs(p: &Polynomial, q: &Polynomial, d: usize) -> Result<()> {
    for r in [p, q] {
        if r.degree() != Some(d) {
            return Err(Error::degree(format!(
                "bound check at degree {d} given degree {:?}",
                r.degree()
            )));
        }
    }
    Ok(())
}

/// `maxroot(U_α(p ⊞ q)) + dα ≤ maxroot(U_α p) + maxroot(U_α q)`.
pub fn check_sqsum_bound(
    p: &Polynomial,
    q: &Polynomial,
    alpha: f64,
    d: usize,
) -> Result<BoundReport> {
    check_inputs(p, q, d)?;
    let a = positive(alpha, "alpha")?;
    let conv = convolve::sym_additive(p, q, d)?;
    let lhs = u_max_root(&conv, &a)? + d as f64 * alpha;
    let rhs = u_max_root(p, &a)? + u_max_root(q, &a)?;
    Ok(BoundReport::new("sqsum", lhs, rhs, ADDITIVE_TOLERANCE))
}

/// `maxroot(U_α S(p ⊞⊞ q)) ≤ maxroot(U_α Sp) + maxroot(U_α Sq) − 2αd`,
/// where `S p(x) = p(x²)`.
pub fn check_recsum_bound(
    p: &Polynomial,
    q: &Polynomial,
    alpha: f64,
    d: usize,
) -> Result<BoundReport> {
    check_inputs(p, q, d)?;
    let a = positive(alpha, "alpha")?;
    let conv = convolve::asym_additive(p, q, d)?;
    let lhs = u_max_root(&conv.square_substitute(), &a)?;
    let rhs = u_max_root(&p.square_substitute(), &a)? + u_max_root(&q.square_substitute(), &a)?
        - 2.0 * alpha * d as f64;
    Ok(BoundReport::new("recsum", lhs, rhs, ADDITIVE_TOLERANCE))
}

/// `S_{p⊠q}(w) ≤ S_p(w) · S_q(w)`, with a tolerance relative to the larger
/// side.
pub fn check_mult_bound(p: &Polynomial, q: &Polynomial, w: f64, d: usize) -> Result<BoundReport> {
    check_inputs(p, q, d)?;
    let conv = convolve::sym_multiplicative(p, q, d)?;
    let lhs = s_transform_variant(&conv, w)?;
    let rhs = s_transform_variant(p, w)? * s_transform_variant(q, w)?;
    let tolerance = MULTIPLICATIVE_RELATIVE_TOLERANCE * lhs.abs().max(rhs.abs());
    Ok(BoundReport::new("mult", lhs, rhs, tolerance))
}

/// `maxroot(p ⊞ q) ≤ maxroot p + maxroot q` and
/// `maxroot(p ⊠ q) ≤ maxroot p · maxroot q`.
pub fn check_classical_bounds(
    p: &Polynomial,
    q: &Polynomial,
    kind: ConvolutionKind,
    d: usize,
) -> Result<BoundReport> {
    check_inputs(p, q, d)?;
    let conv = convolve::convolve(kind, p, q, d)?;
    let lhs = conv.max_root()?;
    let (mp, mq) = (p.max_root()?, q.max_root()?);
    match kind {
        ConvolutionKind::SymAdditive => Ok(BoundReport::new(
            "classical-sym-add",
            lhs,
            mp + mq,
            ADDITIVE_TOLERANCE,
        )),
        ConvolutionKind::SymMultiplicative => Ok(BoundReport::new(
            "classical-sym-mult",
            lhs,
            mp * mq,
            ADDITIVE_TOLERANCE,
        )),
        ConvolutionKind::AsymAdditive => Err(Error::domain(
            "no classical max-root bound is checked for asym-add; use the recsum check",
        )),
    }
}
