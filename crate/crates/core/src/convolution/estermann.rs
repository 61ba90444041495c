use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::sum::CSum;
use crate::special::{divisors, e2pi, gcd, mobius, real_pow, sigma, HurwitzFamily};

/// Reduced fraction x/m with 1 ≤ x ≤ m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FractionSpec {
    x: u64,
    m: u64,
}

impl FractionSpec {
    pub fn new(x: u64, m: u64) -> Result<Self> {
        if m == 0 || x == 0 || x > m {
            return Err(Error::pre(format!("fraction {x}/{m} must satisfy 1 <= x <= m")));
        }
        if gcd(x as i64, m as i64) != 1 {
            return Err(Error::pre(format!("fraction {x}/{m} is not reduced")));
        }
        Ok(Self { x, m })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

/// Σ_{1≤x≤m, (x,m)=1} e(xq/m), summed as exponentials.
pub fn ramanujan_exp_sum(m: u64, q: i64) -> Complex64 {
    let mut acc = CSum::new();
    for x in 1..=m {
        if gcd(x as i64, m as i64) == 1 {
            let r = (x as i128 * q as i128).rem_euclid(m as i128) as f64;
            acc.add(e2pi(r / m as f64));
        }
    }
    acc.value()
}

/// c_m(q) = Σ_{d | (m,q)} μ(m/d) d, exactly.
pub fn ramanujan_sum(m: u64, q: i64) -> i64 {
    let g = gcd(m as i64, q).unsigned_abs();
    let g = if g == 0 { m } else { g };
    divisors(g).into_iter().map(|d| mobius(m / d) * d as i64).sum()
}

/// Table c_m(r) for r = 0..m-1.
pub(crate) fn ramanujan_table(m: u64) -> Vec<i64> {
    let mut out = vec![0i64; m as usize];
    for d in divisors(m) {
        let mu = mobius(m / d);
        if mu == 0 {
            continue;
        }
        let mut r = 0;
        while r < m {
            out[r as usize] += mu * d as i64;
            r += d;
        }
    }
    out
}

/// ζ(z, u/m) for u = 1..=m.
pub(crate) fn hurwitz_row(fam: &HurwitzFamily, m: u64) -> Result<Vec<Complex64>> {
    (1..=m).map(|u| fam.eval(u as f64 / m as f64)).collect()
}

fn check_poles(s: Complex64, alpha: Complex64) -> Result<()> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::pole("estermann (ζ(s, v/m))", s));
    }
    if s - alpha == Complex64::new(1.0, 0.0) {
        return Err(Error::pole("estermann (ζ(s-α, u/m))", s));
    }
    Ok(())
}

/// E(s, α; x/m) = m^{α-2s} Σ_{u,v=1}^m e(xuv/m) ζ(s-α, u/m) ζ(s, v/m).
pub fn estermann_full(s: Complex64, alpha: Complex64, frac: FractionSpec) -> Result<Complex64> {
    check_poles(s, alpha)?;
    let m = frac.m;
    let za = hurwitz_row(&HurwitzFamily::new(s - alpha)?, m)?;
    let zb = hurwitz_row(&HurwitzFamily::new(s)?, m)?;
    let phase: Vec<Complex64> = (0..m).map(|j| e2pi(j as f64 / m as f64)).collect();
    let mut acc = CSum::new();
    for u in 1..=m {
        let mut inner = CSum::new();
        let xu = (frac.x * u) % m;
        for v in 1..=m {
            inner.add(phase[((xu * v) % m) as usize] * zb[(v - 1) as usize]);
        }
        acc.add(za[(u - 1) as usize] * inner.value());
    }
    Ok(real_pow(m as f64, alpha - 2.0 * s) * acc.value())
}

/// E_l = E minus its first l terms.
pub fn estermann_truncated(l: u64, s: Complex64, alpha: Complex64, frac: FractionSpec) -> Result<Complex64> {
    let full = estermann_full(s, alpha, frac)?;
    let mut head = CSum::new();
    for n in 1..=l {
        let r = (frac.x * n) % frac.m;
        head.add(sigma(n, alpha) * e2pi(r as f64 / frac.m as f64) * real_pow(n as f64, -s));
    }
    Ok(full - head.value())
}
