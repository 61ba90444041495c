use num_complex::Complex64;
use std::f64::consts::PI;

use super::expansion::{alpha_f64, ProductExpansion};
use super::params::{KernelParams, Sign};
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::special::sum::Neumaier;
use crate::special::{gamma_real, zeta_real};

/// Quadrature value of the unfolded integral with its truncation budget.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureEstimate {
    pub value: Complex64,
    pub quadrature_error: f64,
    /// bound on the dropped n < -n_cut terms
    pub n_tail_bound: f64,
    /// estimate of the integral beyond y_cut
    pub y_tail_estimate: f64,
}

const BREAKS: [f64; 8] = [0.0, 0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0];

/// Σ_{n > n_cut} of the termwise integrals, bounded through σ_ρ(n) ≤ ζ(ρ) n^ρ.
fn n_tail_bound(l: u64, p: &KernelParams, n_cut: u64) -> Result<f64> {
    let t = p.t();
    let (k, a) = (p.k(), p.a());
    let big_s = p.eis_s();
    let z1 = zeta_real((2 * big_s - 1) as f64)?;
    let z2 = zeta_real((2 * a - 1) as f64)?;
    let nc = n_cut as f64;
    let mut total = 0.0;
    for j in p.j_range(Sign::Minus) {
        let w = (k / 2 + a - j - 1) as f64 + t;
        let x = (2 * a - 1) as f64 - w;
        let stretch = if x > 0.0 { (1.0 + l as f64 / nc).powf(x) } else { 1.0 };
        let e = (big_s - 1 - j) as f64 + x;
        if e >= -1.0 {
            return Ok(f64::INFINITY);
        }
        let c = alpha_f64(j, Sign::Minus, p).abs()
            * (4.0 * PI).powf((1 - k / 2 - a) as f64 - t)
            * gamma_real(w)?
            * z1
            * z2
            * stretch;
        total += c * nc.powf(e + 1.0) / (-e - 1.0);
    }
    Ok(total)
}

/// ∫_0^{y_cut} e^{-2πly} product_coeff(l, y) y^{t+k+r-2} dy by adaptive quadrature.
pub fn inner_product_quadrature_oracle(
    l: u64,
    p: &KernelParams,
    y_cut: f64,
    n_cut: u64,
) -> Result<QuadratureEstimate> {
    if p.t() < 4.0 {
        return Err(Error::pre(format!("quadrature oracle needs t >= 4, got {}", p.t())));
    }
    if !(y_cut > 1.0) || n_cut == 0 {
        return Err(Error::pre("quadrature oracle needs y_cut > 1 and n_cut >= 1"));
    }
    let expansion = ProductExpansion::new(l, p, n_cut)?;
    let power = p.t() + (p.k() + p.r() - 2) as f64;
    let lf = l as f64;
    let f = |y: f64| -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        (-2.0 * PI * lf * y).exp() * expansion.eval(y).unwrap_or(f64::NAN) * y.powf(power)
    };
    let mut pts: Vec<f64> = BREAKS.iter().copied().filter(|b| *b < y_cut).collect();
    pts.push(y_cut);
    let mut acc = Neumaier::new();
    let mut err = 0.0;
    for w in pts.windows(2) {
        let (v, e) = integrate(f, w[0], w[1], 1e-22, 1e-13)?;
        if !v.is_finite() {
            return Err(Error::NotConverged("quadrature produced a non-finite value".into()));
        }
        acc.add(v);
        err += e;
    }
    let degree = power + (p.a() - p.r() - p.k() / 2) as f64 + p.eis_s() as f64;
    let rate = 4.0 * PI * lf - degree.max(0.0) / y_cut;
    let y_tail = if rate > 0.0 { f(y_cut).abs() / rate } else { f64::INFINITY };
    Ok(QuadratureEstimate {
        value: Complex64::new(acc.value(), 0.0),
        quadrature_error: err,
        n_tail_bound: n_tail_bound(l, p, n_cut)?,
        y_tail_estimate: y_tail,
    })
}

/// The n < 0 tail summed directly over 1 ≤ n ≤ n_max; returns (value, bound on the rest).
pub fn negative_tail_direct(l: u64, p: &KernelParams, n_max: usize) -> Result<(Complex64, f64)> {
    let t = p.t();
    let (k, a) = (p.k(), p.a());
    let big_s = p.eis_s();
    let lu = l as usize;
    let s1 = crate::convolution::sigma_sieve(n_max, Complex64::new((2 * big_s - 1) as f64, 0.0));
    let s2 = crate::convolution::sigma_sieve(n_max + lu, Complex64::new((2 * a - 1) as f64, 0.0));
    let mut total = Neumaier::new();
    for j in p.j_range(Sign::Minus) {
        let w = (k / 2 + a - j - 1) as f64 + t;
        let c = alpha_f64(j, Sign::Minus, p) * (4.0 * PI).powf((1 - k / 2 - a) as f64 - t) * gamma_real(w)?;
        let mut inner = Neumaier::new();
        for n in 1..=n_max {
            let nf = n as f64;
            inner.add(s1[n].re * s2[n + lu].re / (nf.powi((big_s + j) as i32) * (nf + l as f64).powf(w)));
        }
        total.add(c * inner.value());
    }
    Ok((Complex64::new(total.value(), 0.0), n_tail_bound(l, p, n_max as u64)?))
}
