//! Root-location inequalities for derivatives under the barrier operator.

use finfree::rational::{int, ratio};
use finfree::transforms::u_max_root;
use finfree::Polynomial;
use num_rational::BigRational;
use proptest::prelude::*;

fn alphas(values: &[(i64, i64)]) -> Vec<BigRational> {
    values.iter().map(|&(n, d)| ratio(n, d)).collect()
}

fn roots(lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, 2..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn derivative_moves_barrier_root_left(r in roots(-10, 10)) {
        let p = Polynomial::from_i64_roots(&r);
        for alpha in alphas(&[(1, 4), (1, 1), (3, 1)]) {
            let lhs = u_max_root(&p.derivative(), &alpha).unwrap();
            let rhs = u_max_root(&p, &alpha).unwrap() - finfree::rational::to_f64(&alpha);
            prop_assert!(lhs <= rhs + 1e-9, "{lhs} > {rhs} for {r:?}");
        }
    }

    #[test]
    fn polar_derivative_stays_below(r in roots(1, 10)) {
        let d = r.len();
        let p = Polynomial::from_i64_roots(&r);
        let polar = p.polar_derivative_at_zero(d).unwrap();
        prop_assert!(polar.leading_coeff().unwrap() > &int(0));
        prop_assert!(p.max_root().unwrap() >= polar.max_root().unwrap() - 1e-9);
    }

    #[test]
    fn laguerre_derivative_under_square_substitution(r in roots(0, 10)) {
        let p = Polynomial::from_i64_roots(&r);
        let lag = p.laguerre_derivative();
        for alpha in alphas(&[(1, 2), (1, 1), (2, 1)]) {
            let lhs = u_max_root(&lag.square_substitute(), &alpha).unwrap();
            let rhs = u_max_root(&p.square_substitute(), &alpha).unwrap()
                - 2.0 * finfree::rational::to_f64(&alpha);
            prop_assert!(lhs <= rhs + 1e-9, "{lhs} > {rhs} for {r:?}");
        }
    }
}

#[test]
fn derivative_equality_for_powers() {
    for d in 2..=8 {
        for lambda in [-7, 0, 3] {
            let p = Polynomial::power_of_linear(&int(lambda), d);
            for alpha in alphas(&[(1, 4), (1, 1), (3, 1)]) {
                let lhs = u_max_root(&p.derivative(), &alpha).unwrap();
                let rhs = u_max_root(&p, &alpha).unwrap() - finfree::rational::to_f64(&alpha);
                assert!(
                    (lhs - rhs).abs() <= 1e-8,
                    "d={d} λ={lambda}: {lhs} vs {rhs}"
                );
            }
        }
    }
}

#[test]
fn polar_derivative_example() {
    let p = Polynomial::from_i64_roots(&[2, 2, 2]);
    let expected = Polynomial::power_of_linear(&int(2), 2).scale(&int(6));
    assert_eq!(p.polar_derivative_at_zero(3).unwrap(), expected);
    assert!(p.polar_derivative_at_zero(4).is_err());
}

#[test]
fn laguerre_equality_for_monomials() {
    for d in 2..=8 {
        let p = Polynomial::monomial(d);
        for alpha in alphas(&[(1, 2), (1, 1), (2, 1)]) {
            let lhs = u_max_root(&p.laguerre_derivative().square_substitute(), &alpha).unwrap();
            let rhs = u_max_root(&p.square_substitute(), &alpha).unwrap()
                - 2.0 * finfree::rational::to_f64(&alpha);
            assert!((lhs - rhs).abs() <= 1e-9, "d={d}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn laguerre_inequality_is_strict_off_zero() {
    let p = Polynomial::power_of_linear(&int(3), 4);
    let alpha = int(1);
    let lhs = u_max_root(&p.laguerre_derivative().square_substitute(), &alpha).unwrap();
    let rhs = u_max_root(&p.square_substitute(), &alpha).unwrap() - 2.0;
    assert!(lhs < rhs - 1e-6);
}
