use serde::Serialize;

use super::roots::{newton_from_above, NewtonOutcome};
use crate::error::{Error, Result};

/// A polynomial with double coefficients, ascending in powers of `x`.
///
/// Used where an algebraic number such as a barrier root enters the
/// construction (the pinch). Exact work stays on [`super::Polynomial`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FloatPoly {
    coeffs: Vec<f64>,
}

impl FloatPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        FloatPoly { coeffs }
    }

    pub fn from_roots(roots: &[f64]) -> Self {
        let mut coeffs = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        FloatPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<f64> {
        self.coeffs.last().copied()
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: f64) -> Self {
        FloatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FloatPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return FloatPoly::new(Vec::new());
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FloatPoly::new(out)
    }

    pub fn derivative(&self) -> Self {
        FloatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    /// `p − α·Dp`.
    pub fn shift_op(&self, alpha: f64) -> Self {
        self.add(&self.derivative().scale(-alpha))
    }

    /// `p(x²)`.
    pub fn square_substitute(&self) -> Self {
        let mut out = vec![0.0; 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[2 * k] = *c;
        }
        FloatPoly::new(out)
    }

    /// `(1 − xD/(d(w+1))) p`.
    pub fn w_operator(&self, w: f64, d: usize) -> Result<Self> {
        if w <= -1.0 {
            return Err(Error::domain(format!("W_w needs w > -1, got {w}")));
        }
        let denom = d as f64 * (w + 1.0);
        Ok(FloatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * (1.0 - k as f64 / denom))
                .collect(),
        ))
    }

    /// Largest real root by Newton iteration from the Cauchy bound.
    ///
    /// The input is assumed real-rooted. A repeated largest root only
    /// converges linearly and is limited to roughly `ε^{1/m}` accuracy for
    /// multiplicity `m`; there is no exact square-free fallback here.
    pub fn max_root(&self) -> Result<f64> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial("max_root")),
            Some(0) => Err(Error::domain("constant polynomial has no roots")),
            Some(_) => match newton_from_above(&self.coeffs) {
                NewtonOutcome::Converged(x) | NewtonOutcome::Stalled(x) => Ok(x),
            },
        }
    }

    /// The exact rational polynomial with these double coefficients, for
    /// root finding with the exact fallbacks.
    pub fn to_exact(&self) -> Result<super::Polynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| crate::rational::from_f64(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(super::Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = FloatPoly::from_roots(&[1.0, 2.0]);
        assert_eq!(p.coeffs(), &[2.0, -3.0, 1.0]);
        assert_eq!(p.evaluate(3.0), 2.0);
        assert_eq!(p.derivative().coeffs(), &[-3.0, 2.0]);
        assert_eq!(p.square_substitute().coeffs(), &[2.0, 0.0, -3.0, 0.0, 1.0]);
        assert_eq!(p.shift_op(1.0).coeffs(), &[5.0, -5.0, 1.0]);
        assert_eq!(p.w_operator(1.0, 2).unwrap().coeffs(), &[2.0, -2.25, 0.5]);
        assert!(p.w_operator(-1.0, 2).is_err());
    }

    #[test]
    fn max_root_simple() {
        let p = FloatPoly::from_roots(&[0.5, -3.0, 2.25]);
        assert!((p.max_root().unwrap() - 2.25).abs() < 1e-13);
        let q = FloatPoly::new(vec![-1.0, -2.0, 1.0]);
        assert!((q.max_root().unwrap() - (1.0 + 2f64.sqrt())).abs() < 1e-13);
    }
}
