use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::pow::real_pow;

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// σ_α(n) = Σ_{d|n} d^α.
pub fn sigma(n: u64, alpha: Complex64) -> Complex64 {
    if alpha.im == 0.0 && alpha.re >= 0.0 && alpha.re.fract() == 0.0 && alpha.re <= 64.0 {
        let v = sigma_exact(n, alpha.re as u32);
        return Complex64::new(v.to_f64().unwrap_or(f64::INFINITY), 0.0);
    }
    let mut acc = super::sum::CSum::new();
    for d in divisors(n) {
        acc.add(real_pow(d as f64, alpha));
    }
    acc.value()
}

pub fn sigma_exact(n: u64, k: u32) -> BigInt {
    divisors(n).into_iter().map(|d| BigInt::from(d).pow(k)).sum()
}

/// x(x-1)...(x-n+1)/n!, zero for n < 0.
pub fn binom_general(x: Complex64, n: i64) -> Complex64 {
    if n < 0 {
        return Complex64::zero();
    }
    let mut p = Complex64::one();
    for i in 0..n {
        p *= (x - i as f64) / (i + 1) as f64;
    }
    p
}

/// Exact integer binomial with the same convention, any integer x.
pub fn binom_int(x: i64, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..n {
        num *= BigInt::from(x - i);
    }
    num / factorial(n as u64)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn factorial_f64(n: u64) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Inverse of a modulo m (m ≥ 1, gcd(a,m) = 1); 0 when m = 1.
pub fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn totient(n: u64) -> u64 {
    let mut n0 = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0 % p == 0 {
            while n0 % p == 0 {
                n0 /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n0 > 1 {
        out -= out / n0;
    }
    out
}
