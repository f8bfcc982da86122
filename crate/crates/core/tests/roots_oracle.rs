use finfree::rational::{ratio, to_f64};
use finfree::Polynomial;
use proptest::prelude::*;

fn rational_roots() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-60i64..=60, 1i64..=12), 1..=9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn roots_of_products_are_recovered(r in rational_roots()) {
        let roots: Vec<_> = r.iter().map(|&(n, d)| ratio(n, d)).collect();
        let p = Polynomial::from_roots(&roots);
        let mut expected: Vec<f64> = roots.iter().map(to_f64).collect();
        expected.sort_by(|a, b| b.total_cmp(a));

        let max = p.max_root().unwrap();
        prop_assert!((max - expected[0]).abs() <= 1e-9 * expected[0].abs().max(1.0), "{max} vs {}", expected[0]);
        prop_assert!(p.is_real_rooted().unwrap());

        let all = p.all_roots().unwrap();
        prop_assert_eq!(all.len(), expected.len());
        for (x, y) in all.as_slice().iter().zip(&expected) {
            prop_assert!((x - y).abs() <= 1e-9 * y.abs().max(1.0), "{x} vs {y}");
        }
    }

    #[test]
    fn quadratic_factor_without_real_roots_is_detected(r in rational_roots(), c in 1i64..50) {
        let roots: Vec<_> = r.iter().map(|&(n, d)| ratio(n, d)).collect();
        let p = &Polynomial::from_roots(&roots) * &Polynomial::from_i64s(&[c, 0, 1]);
        prop_assert!(!p.is_real_rooted().unwrap());
    }
}
