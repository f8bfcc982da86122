//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order (index `k` holds the
//! coefficient of `x^k`) and the vector is always trimmed, so the zero
//! polynomial is the empty vector. [`SignedCoeffs`] gives the
//! `p(x) = Σ x^{d−i} (−1)^i a_i` view the convolution formulas are written in.

mod float;
mod roots;
mod signed;
pub mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational;

pub use float::FloatPoly;
pub use roots::RootList;
pub use signed::SignedCoeffs;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        Polynomial { coeffs }
    }

    /// `x − r`.
    pub fn linear_factor(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// The monic polynomial `Π (x − r)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_factor(r))
    }

    pub fn from_i64_roots(roots: &[i64]) -> Self {
        let roots: Vec<_> = roots.iter().map(|&r| rational::int(r)).collect();
        Self::from_roots(&roots)
    }

    /// `(x − r)^d`.
    pub fn power_of_linear(r: &BigRational, d: usize) -> Self {
        Self::from_roots(&vec![r.clone(); d])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// True for `c·x^k`, including constants.
    pub fn is_monomial(&self) -> bool {
        match self.degree() {
            None => false,
            Some(d) => self.coeffs[..d].iter().all(Zero::is_zero),
        }
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates exactly at the rational value of `x` and rounds once.
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        match rational::from_f64(x) {
            Ok(xr) => rational::to_f64(&self.evaluate(&xr)),
            Err(_) => f64::NAN,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x · p(x)`.
    pub fn times_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// The barrier operator `p − α·Dp`.
    pub fn shift_op(&self, alpha: &BigRational) -> Self {
        self - &self.derivative().scale(alpha)
    }

    /// `p(x²)`.
    pub fn square_substitute(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `x^d · p(1/x)` for `deg p ≤ d`.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::degree(format!(
                    "cannot reverse a degree-{deg} polynomial at degree {d}"
                )));
            }
        }
        Ok(Self::new((0..=d).map(|k| self.coeff(d - k)).collect()))
    }

    /// The polar derivative with respect to 0, taken with the sign
    /// `x·Dp − d·p`. For `p = (x−λ)^d` this is `λd(x−λ)^{d−1}`.
    pub fn polar_derivative_at_zero(&self, d: usize) -> Result<Self> {
        if self.degree() != Some(d) {
            return Err(Error::degree(format!(
                "polar derivative at degree {d} of a polynomial of degree {:?}",
                self.degree()
            )));
        }
        Ok(self.polar_derivative_formal(d))
    }

    /// `x·Dp − d·p` without checking that `deg p = d`.
    pub(crate) fn polar_derivative_formal(&self, d: usize) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * rational::int(k as i64 - d as i64))
                .collect(),
        )
    }

    /// The Laguerre derivative `D x D p`.
    pub fn laguerre_derivative(&self) -> Self {
        // D x D x^k = k² x^{k−1}
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int((k * k) as i64))
                .collect(),
        )
    }

    /// `p(a·x + b)`.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let inner = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &inner) + &Self::constant(c.clone())
        })
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or(Error::ZeroPolynomial("division by the zero polynomial"))?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let factor = &rem[k + dd] / &lc;
            if !factor.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &factor * dc;
                }
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// `p / gcd(p, p′)`, made monic.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd is nonzero").0.monic()
    }

    /// Yun's square-free decomposition: monic `f_1, f_2, …` with
    /// `p = lc · Π f_i^i`, each `f_i` square-free and pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = self.derivative();
        let a0 = self.gcd(&dp);
        let mut b = self.div_rem(&a0).expect("nonzero").0;
        let c = dp.div_rem(&a0).expect("nonzero").0;
        let mut d = &c - &b.derivative();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_rem(&a).expect("nonzero").0;
            let c = d.div_rem(&a).expect("nonzero").0;
            d = &c - &b.derivative();
            out.push(a.monic());
        }
        out
    }

    pub fn to_float(&self) -> FloatPoly {
        FloatPoly::new(self.coeffs.iter().map(rational::to_f64).collect())
    }

    pub fn signed_coeffs(&self, d: usize) -> Result<SignedCoeffs> {
        SignedCoeffs::from_polynomial(self, d)
    }

    pub fn from_signed_coeffs(sc: &SignedCoeffs) -> Self {
        sc.to_polynomial()
    }

    /// Exact test for membership in the real-rooted family (every complex
    /// root is real), via a Sturm count on the square-free part.
    pub fn is_real_rooted(&self) -> Result<bool> {
        roots::is_real_rooted(self)
    }

    /// True when the polynomial is real-rooted with every root `≥ 0`.
    pub fn has_only_nonnegative_roots(&self) -> Result<bool> {
        if !self.is_real_rooted()? {
            return Ok(false);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        Ok(roots::count_roots_below_zero(self) == 0)
    }

    /// Largest real root. Assumes real-rootedness; see
    /// [`Polynomial::max_root_checked`] for the validating variant.
    pub fn max_root(&self) -> Result<f64> {
        roots::max_root(self)
    }

    pub fn max_root_checked(&self) -> Result<f64> {
        if !self.is_real_rooted()? {
            return Err(Error::NotRealRooted);
        }
        roots::max_root(self)
    }

    /// Every root with multiplicity, descending.
    pub fn all_roots(&self) -> Result<RootList> {
        roots::all_roots(self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            if !unit || k == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(Polynomial::from_roots(&[]), Polynomial::one());
        assert_eq!(Polynomial::from_i64_roots(&[3, 5]), p(&[15, -8, 1]));
        assert_eq!(Polynomial::from_i64_roots(&[1, 2, 3]), p(&[-6, 11, -6, 1]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[-1, 0, 1]).evaluate(&int(2)), int(3));
        assert_eq!(p(&[-1, 0, 1]).evaluate(&int(1)), int(0));
        assert_eq!(p(&[-6, 11, -6, 1]).evaluate(&int(4)), int(6));
        assert_eq!(p(&[-6, 11, -6, 1]).evaluate_f64(4.0), 6.0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
        assert!(p(&[5]).derivative().is_zero());
        assert_eq!(p(&[-6, 11, -6, 1]).derivative(), p(&[11, -12, 3]));
    }

    #[test]
    fn shift_op_examples() {
        assert_eq!(p(&[0, 0, 1]).shift_op(&int(1)), p(&[0, -2, 1]));
        assert_eq!(p(&[1, -2, 1]).shift_op(&int(1)), p(&[3, -4, 1]));
        let q = p(&[2, -3, 1]);
        assert_eq!(q.shift_op(&int(0)), q);
    }

    #[test]
    fn square_substitute_examples() {
        assert_eq!(p(&[-4, 1]).square_substitute(), p(&[-4, 0, 1]));
        assert_eq!(p(&[2, -3, 1]).square_substitute(), p(&[2, 0, -3, 0, 1]));
        assert_eq!(p(&[1]).square_substitute(), p(&[1]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[2, -3, 1]).reverse(2).unwrap(), p(&[1, -3, 2]));
        assert_eq!(p(&[0, 0, 1]).reverse(2).unwrap(), p(&[1]));
        let q = p(&[2, -3, 1]);
        assert_eq!(q.reverse(2).unwrap().reverse(2).unwrap(), q);
        assert!(matches!(q.reverse(1), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn polar_derivative_examples() {
        let cube = Polynomial::power_of_linear(&int(2), 3);
        let expected = Polynomial::power_of_linear(&int(2), 2).scale(&int(6));
        assert_eq!(cube.polar_derivative_at_zero(3).unwrap(), expected);
        assert!(Polynomial::monomial(4)
            .polar_derivative_at_zero(4)
            .unwrap()
            .is_zero());
        assert_eq!(
            p(&[2, -3, 1]).polar_derivative_at_zero(2).unwrap(),
            p(&[-4, 3])
        );
        assert!(p(&[2, -3, 1]).polar_derivative_at_zero(3).is_err());
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(p(&[1, -2, 1]).laguerre_derivative(), p(&[-2, 4]));
        for d in 1..6 {
            let expected = Polynomial::monomial(d - 1).scale(&int((d * d) as i64));
            assert_eq!(Polynomial::monomial(d).laguerre_derivative(), expected);
        }
        assert!(p(&[7]).laguerre_derivative().is_zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = Polynomial::from_i64_roots(&[1, 1, 2, 3]);
        let b = Polynomial::from_i64_roots(&[1, 3, 4]);
        assert_eq!(a.gcd(&b), Polynomial::from_i64_roots(&[1, 3]));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 3);
        assert!(a.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn yun_decomposition() {
        let a = Polynomial::from_i64_roots(&[5, 1, 1, 2, 2, 2]).scale(&int(3));
        let f = a.square_free_decomposition();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], Polynomial::from_i64_roots(&[5]));
        assert_eq!(f[1], Polynomial::from_i64_roots(&[1]));
        assert_eq!(f[2], Polynomial::from_i64_roots(&[2]));
        assert_eq!(a.square_free_part(), Polynomial::from_i64_roots(&[1, 2, 5]));
    }

    #[test]
    fn compose_affine_matches_evaluation() {
        let q = p(&[3, -1, 0, 2]);
        let a = ratio(1, 2);
        let b = int(-1);
        let c = q.compose_affine(&a, &b);
        for x in -3..4 {
            let x = int(x);
            assert_eq!(c.evaluate(&x), q.evaluate(&(&a * &x + &b)));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-6, 11, -6, 1]).to_string(), "x^3 - 6x^2 + 11x - 6");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half = Polynomial::new(vec![int(1), ratio(-3, 2), ratio(1, 2)]);
        assert_eq!(half.to_string(), "(1/2)x^2 - (3/2)x + 1");
    }

    proptest! {
        #[test]
        fn polar_derivative_is_negated_reverse_derivative_reverse(
            roots in proptest::collection::vec(-6i64..7, 1..7)
        ) {
            let q = Polynomial::from_i64_roots(&roots);
            let d = roots.len();
            let lhs = q.polar_derivative_at_zero(d).unwrap();
            let rdr = q.reverse(d).unwrap().derivative().reverse(d - 1).unwrap();
            prop_assert_eq!(lhs, -&rdr);
        }

        #[test]
        fn reverse_is_an_involution(c in proptest::collection::vec(-9i64..10, 1..8), extra in 0usize..3) {
            let q = p(&c);
            let d = q.degree().unwrap_or(0) + extra;
            prop_assert_eq!(q.reverse(d).unwrap().reverse(d).unwrap(), q);
        }

        #[test]
        fn shift_op_keeps_leading_coefficient(c in proptest::collection::vec(-9i64..10, 1..8), a in -5i64..6) {
            let q = p(&c);
            let s = q.shift_op(&int(a));
            prop_assert_eq!(s.degree(), q.degree());
            prop_assert_eq!(s.leading_coeff(), q.leading_coeff());
        }
    }
}
