use num_rational::BigRational;
use num_traits::Zero;

use super::Polynomial;
use crate::error::{Error, Result};

/// The `(a_0, …, a_d)` view with `p(x) = Σ_{i=0}^{d} x^{d−i} (−1)^i a_i`,
/// so `a_i = (−1)^i · coeff(p, d−i)`. For a monic `p` with roots `λ`,
/// `a_i` is the i-th elementary symmetric function of the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCoeffs {
    pub d: usize,
    pub a: Vec<BigRational>,
}

impl SignedCoeffs {
    /// Errors if `deg p > d`. A lower-degree `p` is zero-padded at the front.
    pub fn from_polynomial(p: &Polynomial, d: usize) -> Result<Self> {
        if let Some(deg) = p.degree() {
            if deg > d {
                return Err(Error::degree(format!(
                    "degree-{deg} polynomial has no signed coefficients at degree {d}"
                )));
            }
        }
        let a = (0..=d)
            .map(|i| {
                let c = p.coeff(d - i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Ok(SignedCoeffs { d, a })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut coeffs = vec![BigRational::zero(); self.d + 1];
        for (i, ai) in self.a.iter().enumerate() {
            coeffs[self.d - i] = if i % 2 == 1 { -ai.clone() } else { ai.clone() };
        }
        Polynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    #[test]
    fn elementary_symmetric_for_monic() {
        // (x−1)(x−2)(x−3): e1 = 6, e2 = 11, e3 = 6
        let sc = Polynomial::from_i64_roots(&[1, 2, 3])
            .signed_coeffs(3)
            .unwrap();
        assert_eq!(sc.a, vec![int(1), int(6), int(11), int(6)]);
    }

    #[test]
    fn padding_and_degree_error() {
        let sc = Polynomial::from_i64s(&[-5, 1]).signed_coeffs(3).unwrap();
        assert_eq!(sc.a, vec![int(0), int(0), int(1), int(5)]);
        assert!(Polynomial::monomial(4).signed_coeffs(3).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(c in proptest::collection::vec(-20i64..21, 0..9), extra in 0usize..3) {
            let p = Polynomial::from_i64s(&c);
            let d = p.degree().unwrap_or(0) + extra;
            let sc = p.signed_coeffs(d).unwrap();
            prop_assert_eq!(sc.to_polynomial(), p.clone());
            prop_assert_eq!(SignedCoeffs::from_polynomial(&sc.to_polynomial(), d).unwrap(), sc);
        }
    }
}
