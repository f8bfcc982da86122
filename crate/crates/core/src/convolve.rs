//! The three finite free convolutions ⊞_d, ⊠_d and ⊞⊞_d.
//!
//! Each additive convolution has two independent implementations: a
//! coefficient-weight formula on signed coefficients and a differential
//! operator form. They must agree exactly.
//!
//! When one input has degree below `d`, the degree-`d` input is reduced one
//! degree at a time until the degrees match:
//!
//! | kind | reduction step |
//! |------|----------------|
//! | ⊞_d  | `(1/d) Dp` |
//! | ⊠_d  | `(1/d)(x Dp − d p)` |
//! | ⊞⊞_d | `(1/d²) D x D p` |
//!
//! The additive steps keep monic inputs monic. For every kind the result
//! coincides with the weight formula applied to the zero-padded
//! lower-degree input.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, SignedCoeffs};
use crate::rational::{self, binomial, factorial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvolutionKind {
    SymAdditive,
    SymMultiplicative,
    AsymAdditive,
}

impl ConvolutionKind {
    pub const ALL: [ConvolutionKind; 3] = [
        ConvolutionKind::SymAdditive,
        ConvolutionKind::SymMultiplicative,
        ConvolutionKind::AsymAdditive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConvolutionKind::SymAdditive => "sym-add",
            ConvolutionKind::SymMultiplicative => "sym-mult",
            ConvolutionKind::AsymAdditive => "asym-add",
        }
    }

    /// The neutral element at degree `d`.
    pub fn identity(self, d: usize) -> Polynomial {
        match self {
            ConvolutionKind::SymMultiplicative => Polynomial::power_of_linear(&rational::int(1), d),
            _ => Polynomial::monomial(d),
        }
    }
}

impl fmt::Display for ConvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConvolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym-add" => Ok(ConvolutionKind::SymAdditive),
            "sym-mult" => Ok(ConvolutionKind::SymMultiplicative),
            "asym-add" => Ok(ConvolutionKind::AsymAdditive),
            _ => Err(Error::Parse(format!(
                "unknown convolution {s:?}; expected sym-add, sym-mult or asym-add"
            ))),
        }
    }
}

/// `w[i][j] = (d−i)!(d−j)! / (d!(d−i−j)!)` for `i + j ≤ d`, and its square.
struct Weights {
    sym: Vec<Vec<BigRational>>,
    asym: Vec<Vec<BigRational>>,
}

fn weights(d: usize) -> Arc<Weights> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Weights>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(w) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&d) {
        return Arc::clone(w);
    }
    let built = Arc::new(build_weights(d));
    let mut guard = cache.write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(guard.entry(d).or_insert(built))
}

fn build_weights(d: usize) -> Weights {
    let fact: Vec<BigInt> = (0..=d).map(factorial).collect();
    let sym: Vec<Vec<BigRational>> = (0..=d)
        .map(|i| {
            (0..=d - i)
                .map(|j| BigRational::new(&fact[d - i] * &fact[d - j], &fact[d] * &fact[d - i - j]))
                .collect()
        })
        .collect();
    let asym = sym
        .iter()
        .map(|row| row.iter().map(|w| w * w).collect())
        .collect();
    Weights { sym, asym }
}

/// `c_k = Σ_{i+j=k} w(i,j) a_i b_j` on signed coefficients of equal degree.
fn weighted_product(a: &SignedCoeffs, b: &SignedCoeffs, w: &[Vec<BigRational>]) -> SignedCoeffs {
    let d = a.d;
    let mut c = vec![BigRational::zero(); d + 1];
    for (i, ai) in a.a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.a.iter().enumerate().take(d + 1 - i) {
            if !bj.is_zero() {
                c[i + j] += &w[i][j] * ai * bj;
            }
        }
    }
    SignedCoeffs { d, a: c }
}

fn multiplicative_product(a: &SignedCoeffs, b: &SignedCoeffs) -> SignedCoeffs {
    let d = a.d;
    let c = (0..=d)
        .map(|i| &a.a[i] * &b.a[i] / BigRational::from_integer(binomial(d, i)))
        .collect();
    SignedCoeffs { d, a: c }
}

/// The weight formula for `kind` on inputs zero-padded to degree `d`,
/// without any degree reduction.
pub fn weight_form(
    kind: ConvolutionKind,
    p: &Polynomial,
    q: &Polynomial,
    d: usize,
) -> Result<Polynomial> {
    let a = p.signed_coeffs(d)?;
    let b = q.signed_coeffs(d)?;
    let c = match kind {
        ConvolutionKind::SymAdditive => weighted_product(&a, &b, &weights(d).sym),
        ConvolutionKind::AsymAdditive => weighted_product(&a, &b, &weights(d).asym),
        ConvolutionKind::SymMultiplicative => multiplicative_product(&a, &b),
    };
    Ok(c.to_polynomial())
}

/// One degree-reduction step for an input of formal degree `d`.
fn reduce(kind: ConvolutionKind, p: &Polynomial, d: usize) -> Polynomial {
    let n = d as i64;
    match kind {
        ConvolutionKind::SymAdditive => p.derivative().scale(&rational::ratio(1, n)),
        ConvolutionKind::SymMultiplicative => {
            p.polar_derivative_formal(d).scale(&rational::ratio(1, n))
        }
        ConvolutionKind::AsymAdditive => p.laguerre_derivative().scale(&rational::ratio(1, n * n)),
    }
}

pub fn convolve(
    kind: ConvolutionKind,
    p: &Polynomial,
    q: &Polynomial,
    d: usize,
) -> Result<Polynomial> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Ok(Polynomial::zero());
    };
    let top = dp.max(dq);
    if top > d {
        return Err(Error::degree(format!(
            "{kind} at degree {d} given an input of degree {top}"
        )));
    }
    if top < d {
        return Err(Error::degree(format!(
            "{kind} at degree {d} needs an input of degree {d}; got degrees {dp} and {dq}"
        )));
    }
    let (mut high, low, target) = if dp >= dq {
        (p.clone(), q, dq)
    } else {
        (q.clone(), p, dp)
    };
    for k in (target + 1..=d).rev() {
        high = reduce(kind, &high, k);
    }
    weight_form(kind, &high, low, target)
}

pub fn sym_additive(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    convolve(ConvolutionKind::SymAdditive, p, q, d)
}

pub fn sym_multiplicative(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    convolve(ConvolutionKind::SymMultiplicative, p, q, d)
}

pub fn asym_additive(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    convolve(ConvolutionKind::AsymAdditive, p, q, d)
}

fn require_degree(p: &Polynomial, q: &Polynomial, d: usize) -> Result<()> {
    if p.degree() == Some(d) && q.degree() == Some(d) {
        Ok(())
    } else {
        Err(Error::degree(format!(
            "operator form needs both degrees equal to {d}; got {:?} and {:?}",
            p.degree(),
            q.degree()
        )))
    }
}

/// `(1/d!) Σ_i (d−i)! (−1)^i b_i p^{(i)}`.
pub fn sym_additive_deriv_form(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    require_degree(p, q, d)?;
    operator_sum(p, q, d, |r| r.derivative(), 1)
}

/// `(1/d!)² Σ_i ((d−i)!)² (−1)^i b_i (DxD)^i p`.
pub fn asym_additive_laguerre_form(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    require_degree(p, q, d)?;
    operator_sum(p, q, d, |r| r.laguerre_derivative(), 2)
}

fn operator_sum(
    p: &Polynomial,
    q: &Polynomial,
    d: usize,
    op: impl Fn(&Polynomial) -> Polynomial,
    power: u32,
) -> Result<Polynomial> {
    let b = q.signed_coeffs(d)?;
    let mut term = p.clone();
    let mut acc = Polynomial::zero();
    for (i, bi) in b.a.iter().enumerate() {
        if !bi.is_zero() {
            let f = rational::pow(&BigRational::from_integer(factorial(d - i)), power);
            let coeff = if i % 2 == 1 { -(f * bi) } else { f * bi };
            acc = &acc + &term.scale(&coeff);
        }
        term = op(&term);
    }
    let norm = rational::pow(&BigRational::from_integer(factorial(d)), power);
    Ok(acc.scale(&norm.recip()))
}

/// Checks the hypotheses under which the convolution preserves
/// real-rootedness: real roots for ⊞_d, nonnegative roots for ⊠_d and ⊞⊞_d.
pub fn validate_inputs(kind: ConvolutionKind, p: &Polynomial, q: &Polynomial) -> Result<()> {
    for r in [p, q] {
        match kind {
            ConvolutionKind::SymAdditive => {
                if !r.is_real_rooted()? {
                    return Err(Error::NotRealRooted);
                }
            }
            _ => {
                if !r.is_real_rooted()? {
                    return Err(Error::NotRealRooted);
                }
                if !r.has_only_nonnegative_roots()? {
                    return Err(Error::domain(format!(
                        "{kind} needs inputs with nonnegative roots"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// [`convolve`] preceded by [`validate_inputs`].
pub fn convolve_validated(
    kind: ConvolutionKind,
    p: &Polynomial,
    q: &Polynomial,
    d: usize,
) -> Result<Polynomial> {
    validate_inputs(kind, p, q)?;
    convolve(kind, p, q, d)
}
