mod common;

use common::rel;
use lkernel::special::{
    gamma, hurwitz_zeta, lambda_completed, real_pow, riemann_zeta, sigma, upper_incomplete_gamma,
};
use lkernel::Complex64;
use proptest::prelude::*;

fn disk(radius: f64) -> impl Strategy<Value = Complex64> {
    (-radius..radius, -radius..radius)
        .prop_map(|(re, im)| Complex64::new(re, im))
        .prop_filter("inside the disk", move |s| s.norm() <= radius)
}

fn away_from_one(radius: f64) -> impl Strategy<Value = Complex64> {
    disk(radius).prop_filter("away from the pole", |s| (s - 1.0).norm() > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hurwitz_at_one_is_riemann(s in away_from_one(30.0)) {
        prop_assert!(rel(hurwitz_zeta(s, 1.0).unwrap(), riemann_zeta(s).unwrap()) <= 1e-10);
    }

    #[test]
    fn hurwitz_at_half(s in away_from_one(30.0)) {
        let two_s = Complex64::new(2.0, 0.0).powc(s);
        let want = (two_s - 1.0) * riemann_zeta(s).unwrap();
        prop_assert!(rel(hurwitz_zeta(s, 0.5).unwrap(), want) <= 1e-10);
    }

    #[test]
    fn gamma_recurrence(s in disk(30.0).prop_filter("off the poles", |s| {
        s.im.abs() > 0.05 || s.re > 0.5 || (s.re - s.re.round()).abs() > 0.05
    })) {
        prop_assert!(rel(gamma(s + 1.0).unwrap(), s * gamma(s).unwrap()) <= 1e-12);
    }

    #[test]
    fn incomplete_gamma_recurrence(s in disk(20.0), x in 1.0f64..30.0) {
        let rhs = s * upper_incomplete_gamma(s, x).unwrap() + real_pow(x, s) * (-x).exp();
        prop_assert!(rel(upper_incomplete_gamma(s + 1.0, x).unwrap(), rhs) <= 1e-11);
    }

    #[test]
    fn sigma_reflection(n in 1u64..=10_000, w in disk(4.0)) {
        prop_assert!(rel(sigma(n, w), real_pow(n as f64, w) * sigma(n, -w)) <= 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn completed_zeta_reflection(s in away_from_one(30.0).prop_filter("away from 0", |s| s.norm() > 0.05)) {
        prop_assert!(rel(lambda_completed(s).unwrap(), lambda_completed(1.0 - s).unwrap()) <= 1e-10);
    }

    #[test]
    fn incomplete_gamma_vanishes_at_infinity(s in disk(10.0)) {
        let far = upper_incomplete_gamma(s, 200.0).unwrap().norm();
        let near = upper_incomplete_gamma(s, 20.0).unwrap().norm();
        prop_assert!(far < 1e-60 && far < near);
    }
}

#[test]
fn zeta_two() {
    let z = riemann_zeta(Complex64::new(2.0, 0.0)).unwrap();
    assert!(rel(z, Complex64::new(std::f64::consts::PI.powi(2) / 6.0, 0.0)) < 1e-15);
}
