use num_complex::Complex64;
use rayon::prelude::*;

use super::{ConvolutionQuery, DValue, Method, Strategy};
use crate::error::{Error, Result};
use crate::special::sum::{csum, CSum};
use crate::special::{real_pow, sigma, zeta_real};

const CHUNK: usize = 8192;

pub fn direct_admissible(alpha: Complex64, beta: Complex64, s: Complex64) -> bool {
    s.re > alpha.re.max(0.0) + beta.re.max(0.0) + 1.05
}

/// σ_α(n) for n = 0..=n (entry 0 unused).
pub fn sigma_sieve(n: usize, alpha: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for d in 1..=n {
        let p = real_pow(d as f64, alpha);
        let mut m = d;
        while m <= n {
            out[m] += p;
            m += d;
        }
    }
    out
}

/// |σ_ρ(n)| ≤ c n^p.
fn divisor_bound(rho: f64) -> (f64, f64) {
    if rho > 1.0 {
        (zeta_real(rho).unwrap_or(f64::INFINITY), rho)
    } else if rho < -1.0 {
        (zeta_real(-rho).unwrap_or(f64::INFINITY), 0.0)
    } else {
        // d(n) ≤ √(3n)
        (3f64.sqrt(), rho.max(0.0) + 0.5)
    }
}

/// Σ_{n>N} |term_n| ≤ c N^{e+1}/(-e-1), from term_n ≤ c n^e.
fn tail_after(c: f64, e: f64, n: f64) -> f64 {
    c * n.powf(e + 1.0) / (-e - 1.0)
}

pub fn d_direct(q: &ConvolutionQuery) -> Result<DValue> {
    if !direct_admissible(q.alpha, q.beta, q.s) {
        return Err(Error::pre(format!(
            "direct summation needs Re s > max(Re α,0) + max(Re β,0) + 1.05 (α={}, β={}, s={})",
            q.alpha, q.beta, q.s
        )));
    }
    let (ca, pa) = divisor_bound(q.alpha.re);
    let (cb, pb) = divisor_bound(q.beta.re);
    let c = ca * cb;
    let e = pa + pb - q.s.re;
    if e >= -1.0 {
        return Err(Error::NotConverged(format!(
            "cannot certify a direct tail: term bound exponent {e:.3} is not below -1"
        )));
    }
    // absolute tol, tightened to relative scale when the series is small
    let lead = (sigma(q.l + 1, q.alpha) * real_pow((q.l + 1) as f64, -q.s)).norm();
    let target = q.tol * lead.min(1.0);
    let n_need = (c / (target * (-e - 1.0))).powf(1.0 / (-e - 1.0)).ceil();
    let n = (n_need as usize).max(q.l as usize + 1);
    if !(n_need < q.n_max as f64) {
        return Err(Error::NotConverged(format!(
            "direct sum needs about {n_need:.3e} terms, cap is {}",
            q.n_max
        )));
    }
    let sa = sigma_sieve(n, q.alpha);
    let sb = if q.beta == q.alpha { sa.clone() } else { sigma_sieve(n, q.beta) };
    let l = q.l as usize;
    let first = l + 1;
    let chunks = (n - first) / CHUNK + 1;
    let parts: Vec<Complex64> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let lo = first + i * CHUNK;
            let hi = (lo + CHUNK).min(n + 1);
            let mut acc = CSum::new();
            for m in lo..hi {
                acc.add(sa[m] * sb[m - l] * real_pow(m as f64, -q.s));
            }
            acc.value()
        })
        .collect();
    Ok(DValue {
        value: csum(parts),
        strategy: Strategy::Direct,
        method: Method::DirectSum,
        terms: n,
        error_bound: tail_after(c, e, n as f64),
    })
}
