mod common;

use common::{eigenform_oracle, to_rationals};
use lkernel::modular::{eigenform, eisenstein_q, petersson_norm_numeric, rankin_cohen, SUPPORTED_WEIGHTS};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_has_no_constant_term(k1 in (2u32..=6).prop_map(|h| 2 * h), k2 in (2u32..=6).prop_map(|h| 2 * h), n in 1u32..=3) {
        let f = eisenstein_q(k1, 12).unwrap();
        let g = eisenstein_q(k2, 12).unwrap();
        prop_assert!(rankin_cohen(&f, &g, n).coeff(0).is_zero());
    }

    #[test]
    fn eisenstein_coefficients_positive(k in (2u32..=8).prop_map(|h| 2 * h)) {
        let e = eisenstein_q(k, 40).unwrap();
        prop_assert!(e.coeffs()[1..].iter().all(|c| c.is_positive()));
    }

    #[test]
    fn hecke_prime_power_relation(w in 0usize..SUPPORTED_WEIGHTS.len(), pi in 0usize..PRIMES.len(), j in 1u32..=5) {
        let k = SUPPORTED_WEIGHTS[w];
        let n = 100usize;
        let p = PRIMES[pi];
        prop_assume!(p.pow(j + 1) <= n as u64);
        let f = eigenform(k, n).unwrap();
        let a = |m: u64| f.a(m as usize).clone();
        let pk = BigRational::from_integer(BigInt::from(p).pow(k - 1));
        prop_assert_eq!(a(p) * a(p.pow(j)), a(p.pow(j + 1)) + pk * a(p.pow(j - 1)));
    }
}

#[test]
fn eigenforms_match_eta_products() {
    for k in SUPPORTED_WEIGHTS {
        let oracle = eigenform_oracle(k, 60);
        assert_eq!(eigenform(k, 60).unwrap().coefficients(), &to_rationals(&oracle[1..])[..], "weight {k}");
    }
}

#[test]
fn petersson_norm_positive_and_stable() {
    let short = petersson_norm_numeric(&eigenform(12, 60).unwrap(), 1e-6).unwrap();
    let long = petersson_norm_numeric(&eigenform(12, 120).unwrap(), 1e-6).unwrap();
    assert!(short > 0.0);
    assert!((short - long).abs() <= 1e-6 * long);
    assert!((long - 1.035_362_056_804_320_9e-6).abs() < 1e-9 * long);
}
