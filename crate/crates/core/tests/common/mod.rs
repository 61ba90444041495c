#![allow(dead_code)]

use lkernel::Complex64;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// τ(1..=n) from n p(n) = -24 Σ σ(k) p(n-k), p = Π(1-q^m)^24.
pub fn tau(n: usize) -> Vec<i128> {
    let sigma1: Vec<i128> = (0..=n)
        .map(|m| if m == 0 { 0 } else { (1..=m).filter(|d| m % d == 0).map(|d| d as i128).sum() })
        .collect();
    let mut p = vec![0i128; n];
    p[0] = 1;
    for m in 1..n {
        let acc: i128 = (1..=m).map(|k| sigma1[k] * p[m - k]).sum();
        p[m] = -24 * acc / m as i128;
    }
    let mut out = vec![0i128; n + 1];
    out[1..].copy_from_slice(&p);
    out
}

pub fn sigma_int(n: usize, e: u32) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(e)).sum()
}

/// E_4 = 1 + 240 Σ σ_3 q^n, E_6 = 1 - 504 Σ σ_5 q^n, coefficients 0..=n.
pub fn eisenstein_normalized(k: u32, n: usize) -> Vec<BigInt> {
    let c = match k {
        4 => 240,
        6 => -504,
        _ => panic!("only E_4, E_6"),
    };
    (0..=n).map(|m| if m == 0 { BigInt::from(1) } else { BigInt::from(c) * sigma_int(m, k - 1) }).collect()
}

pub fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    (0..n).map(|m| (0..=m).map(|i| &a[i] * &b[m - i]).sum()).collect()
}

/// Normalized cusp eigenform of weight k as Δ E_4^i E_6^j, coefficients 0..=n.
pub fn eigenform_oracle(k: u32, n: usize) -> Vec<BigInt> {
    let (i, j) = match k {
        12 => (0, 0),
        16 => (1, 0),
        18 => (0, 1),
        20 => (2, 0),
        22 => (1, 1),
        26 => (2, 1),
        _ => panic!("weight {k} not one-dimensional"),
    };
    let mut f: Vec<BigInt> = tau(n).into_iter().map(BigInt::from).collect();
    let (e4, e6) = (eisenstein_normalized(4, n), eisenstein_normalized(6, n));
    for _ in 0..i {
        f = series_mul(&f, &e4);
    }
    for _ in 0..j {
        f = series_mul(&f, &e6);
    }
    f
}

pub fn to_rationals(a: &[BigInt]) -> Vec<BigRational> {
    a.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// (2π)^{-s} Γ(s) Σ_{n ≤ N} a(n) n^{-s} for integer s ≥ 1.
pub fn completed_dirichlet(a: &[f64], s: u32) -> f64 {
    let series: f64 = a.iter().enumerate().skip(1).rev().map(|(n, c)| c * (n as f64).powi(-(s as i32))).sum();
    let gamma: f64 = (1..s).map(f64::from).product();
    series * gamma / (2.0 * std::f64::consts::PI).powi(s as i32)
}

/// σ_α(n) for 0 ≤ n ≤ n_max, real α.
pub fn sigma_sieve_real(n_max: usize, alpha: f64) -> Vec<f64> {
    let mut out = vec![0.0; n_max + 1];
    for d in 1..=n_max {
        let p = (d as f64).powf(alpha);
        for m in (d..=n_max).step_by(d) {
            out[m] += p;
        }
    }
    out
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    if b.norm() == 0.0 {
        return a.norm();
    }
    (a - b).norm() / b.norm()
}

pub fn is_zero(x: &BigRational) -> bool {
    x.is_zero()
}
