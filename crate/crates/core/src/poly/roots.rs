//! Real-root machinery: Newton from above for the largest root, and exact
//! Sturm sequences for real-rootedness, isolation, and the fallback path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational;

/// Newton iterations before handing over to exact bisection.
pub(crate) const MAX_NEWTON_ITERATIONS: usize = 200;

/// Real roots with multiplicity, sorted in descending order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootList {
    roots: Vec<f64>,
}

impl RootList {
    pub fn new(mut roots: Vec<f64>) -> Self {
        roots.sort_by(|a, b| b.total_cmp(a));
        RootList { roots }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.roots
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.roots.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.roots.last().copied()
    }
}

pub(crate) enum NewtonOutcome {
    /// Quadratic convergence was observed at the end.
    Converged(f64),
    /// Linear convergence (repeated top root) or the iteration cap.
    Stalled(f64),
}

fn horner_with_derivative(c: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

/// Newton's method started at the Cauchy bound `1 + max |c_k / c_n|`.
///
/// Above the largest root a real-rooted polynomial with positive leading
/// coefficient is increasing and convex, so the iterates decrease
/// monotonically onto that root.
pub(crate) fn newton_from_above(coeffs: &[f64]) -> NewtonOutcome {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let c: Vec<f64> = coeffs.iter().map(|v| v / lc).collect();
    if n == 1 {
        return NewtonOutcome::Converged(-c[0]);
    }
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut x = bound;
    let mut prev_step = f64::INFINITY;
    let mut ratios = [f64::INFINITY; 2];

    let classify = |x: f64, ratios: [f64; 2]| {
        if ratios[0] < 0.25 && ratios[1] < 0.25 {
            NewtonOutcome::Converged(x)
        } else {
            NewtonOutcome::Stalled(x)
        }
    };

    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (p, dp) = horner_with_derivative(&c, x);
        if p <= 0.0 || dp <= 0.0 {
            return classify(x, ratios);
        }
        let step = p / dp;
        let next = x - step;
        ratios = [ratios[1], step / prev_step];
        prev_step = step;
        if next >= x {
            return classify(x, ratios);
        }
        x = next;
        if step <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return classify(x, ratios);
        }
    }
    NewtonOutcome::Stalled(x)
}

pub(crate) fn max_root(p: &Polynomial) -> Result<f64> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial("max_root"))?;
    match deg {
        0 => Err(Error::domain("constant polynomial has no roots")),
        1 => Ok(rational::to_f64(&(-p.coeff(0) / p.coeff(1)))),
        _ => match newton_from_above(p.to_float().coeffs()) {
            NewtonOutcome::Converged(x) => match polish(p, x) {
                Some(r) => Ok(r),
                None => exact_max_root(p),
            },
            NewtonOutcome::Stalled(_) => exact_max_root(p),
        },
    }
}

/// Exact Newton steps from a double-precision root. Horner in doubles loses
/// accuracy when a second root sits close by; two exact steps recover it.
fn polish(p: &Polynomial, x: f64) -> Option<f64> {
    let dp = p.derivative();
    let mut x = x;
    for _ in 0..2 {
        let xr = rational::from_f64(x).ok()?;
        let slope = dp.evaluate(&xr);
        if slope.is_zero() {
            return None;
        }
        let next = rational::to_f64(&(&xr - p.evaluate(&xr) / slope));
        if (next - x).abs() > 1e-6 * x.abs().max(1.0) {
            return None;
        }
        if next == x {
            break;
        }
        x = next;
    }
    Some(x)
}

/// Largest root by Sturm-guided bisection on the square-free part.
pub(crate) fn exact_max_root(p: &Polynomial) -> Result<f64> {
    let f = p.square_free_part();
    if f.degree() == Some(1) {
        return Ok(rational::to_f64(&(-f.coeff(0) / f.coeff(1))));
    }
    let seq = sturm_sequence(&f);
    let b = cauchy_bound(&f);
    let mut lo = -b.clone();
    let mut hi = b;
    let v_hi = sign_changes_at(&seq, &hi);
    if sign_changes_at(&seq, &lo) == v_hi {
        return Err(Error::NotRealRooted);
    }
    // Shrink (lo, hi] while it keeps the largest root, until it isolates it.
    loop {
        let v_lo = sign_changes_at(&seq, &lo);
        if v_lo - v_hi <= 1 {
            break;
        }
        let mid = (&lo + &hi) / rational::int(2);
        if sign_changes_at(&seq, &mid) > v_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(refine_simple_root(&f, lo, hi))
}

pub(crate) fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial("is_real_rooted"))?;
    if deg == 0 {
        return Ok(true);
    }
    let f = p.square_free_part();
    let seq = sturm_sequence(&f);
    let distinct = sign_changes_at_infinity(&seq, true) - sign_changes_at_infinity(&seq, false);
    Ok(distinct == f.degree().unwrap_or(0))
}

/// Distinct roots strictly below zero.
pub(crate) fn count_roots_below_zero(p: &Polynomial) -> usize {
    let f = p.square_free_part();
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(&f);
    let zero = BigRational::zero();
    let at_most_zero = sign_changes_at_infinity(&seq, true) - sign_changes_at(&seq, &zero);
    if f.coeff(0).is_zero() {
        at_most_zero - 1
    } else {
        at_most_zero
    }
}

pub(crate) fn all_roots(p: &Polynomial) -> Result<RootList> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial("all_roots"))?;
    let mut roots = Vec::with_capacity(deg);
    for (i, f) in p.square_free_decomposition().iter().enumerate() {
        let Some(fd) = f.degree().filter(|&d| d > 0) else {
            continue;
        };
        let seq = sturm_sequence(f);
        let b = cauchy_bound(f);
        let lo = -b.clone();
        let v_lo = sign_changes_at(&seq, &lo);
        let v_hi = sign_changes_at(&seq, &b);
        if v_lo - v_hi != fd {
            return Err(Error::NotRealRooted);
        }
        let mut intervals = Vec::with_capacity(fd);
        isolate(&seq, lo, v_lo, b, v_hi, &mut intervals);
        for (a, z) in intervals {
            let r = refine_simple_root(f, a, z);
            roots.extend(std::iter::repeat_n(r, i + 1));
        }
    }
    Ok(RootList::new(roots))
}

/// Canonical Sturm sequence `f, f′, −rem(…)`, each term rescaled by a
/// positive constant.
fn sturm_sequence(f: &Polynomial) -> Vec<Polynomial> {
    let normalize = |p: Polynomial| match p.leading_coeff() {
        Some(lc) => {
            let s = lc.abs().recip();
            p.scale(&s)
        }
        None => p,
    };
    let mut seq = vec![normalize(f.clone())];
    let mut next = normalize(f.derivative());
    while !next.is_zero() {
        let (_, r) = seq.last().unwrap().div_rem(&next).expect("nonzero divisor");
        seq.push(next);
        next = normalize(-&r);
    }
    seq
}

fn count_sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes_at(seq: &[Polynomial], x: &BigRational) -> usize {
    count_sign_changes(seq.iter().map(|p| sign_of(&p.evaluate(x))))
}

fn sign_changes_at_infinity(seq: &[Polynomial], negative: bool) -> usize {
    count_sign_changes(seq.iter().map(|p| {
        let s = sign_of(p.leading_coeff().expect("nonzero Sturm term"));
        if negative && p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

/// An integer `B` with every root in `(−B, B)`.
fn cauchy_bound(f: &Polynomial) -> BigRational {
    let n = f.degree().unwrap_or(0);
    let lc = f.coeff(n);
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    let b = max.ceil() + rational::int(1);
    BigRational::from_integer(b.to_integer())
}

fn isolate(
    seq: &[Polynomial],
    lo: BigRational,
    v_lo: usize,
    hi: BigRational,
    v_hi: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    match v_lo - v_hi {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (&lo + &hi) / rational::int(2);
            let v_mid = sign_changes_at(seq, &mid);
            isolate(seq, lo, v_lo, mid.clone(), v_mid, out);
            isolate(seq, mid, v_mid, hi, v_hi, out);
        }
    }
}

/// Bisects `(lo, hi]`, known to hold exactly one simple root of `f`, down
/// to a width below double resolution.
fn refine_simple_root(f: &Polynomial, mut lo: BigRational, mut hi: BigRational) -> f64 {
    let s_hi = sign_of(&f.evaluate(&hi));
    if s_hi == 0 {
        return rational::to_f64(&hi);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let width = rational::to_f64(&(&hi - &lo));
        let scale = rational::to_f64(&hi).abs().max(1.0);
        if width <= scale * 2f64.powi(-60) {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let s = sign_of(&f.evaluate(&mid));
        if s == 0 {
            return rational::to_f64(&mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    rational::to_f64(&((&lo + &hi) / two))
}
