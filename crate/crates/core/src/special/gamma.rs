//! Gamma and upper incomplete Gamma for complex argument.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::bernoulli::bernoulli_f64;
use super::pow::{is_nonpositive_integer, real_pow, sinpi_c};
use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Stirling series for ln Γ(w), valid for |w| ≥ 15 and Re w > 0.
fn stirling(w: Complex64) -> Complex64 {
    let mut acc = (w - 0.5) * w.ln() - w + LN_SQRT_2PI;
    let w2 = w * w;
    let mut wp = w;
    for j in 1..=12 {
        let b = bernoulli_f64(2 * j);
        acc += b / ((2 * j) * (2 * j - 1)) as f64 / wp;
        wp *= w2;
    }
    acc
}

/// Γ(s); poles at the nonpositive integers are reported, not returned as Inf.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(Error::pole("gamma", s));
    }
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re <= 171.0 {
        let n = s.re as u64;
        return Ok(Complex64::new((1..n).map(|i| i as f64).product(), 0.0));
    }
    if s.re < 0.5 {
        let g = gamma(1.0 - s)?;
        return Ok(PI / (sinpi_c(s) * g));
    }
    let mut w = s;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.norm() < 15.0 {
        prod *= w;
        w += 1.0;
    }
    Ok(stirling(w).exp() / prod)
}

/// ln Γ(s) for Re s > 0 (principal branch of the Stirling sum, not the
/// analytic continuation of the real log-gamma along the imaginary axis).
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    if s.re <= 0.0 {
        return Err(Error::pre("ln_gamma needs Re s > 0"));
    }
    let mut w = s;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        acc += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - acc)
}

pub fn gamma_real(x: f64) -> Result<f64> {
    gamma(Complex64::new(x, 0.0)).map(|z| z.re)
}

/// e^{-x} x^s
fn prefactor(s: Complex64, x: f64) -> Complex64 {
    (s * x.ln() - x).exp()
}

/// Γ(s, x) = ∫_x^∞ t^{s-1} e^{-t} dt for x > 0.
pub fn upper_incomplete_gamma(s: Complex64, x: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(Error::pre(format!("incomplete gamma needs x > 0, got {x}")));
    }
    if x >= s.re + 2.0 || (s.re < 1.0 && x >= 0.5) {
        continued_fraction(s, x)
    } else {
        if is_nonpositive_integer(s) {
            return Err(Error::pole("gamma (series complement)", s));
        }
        Ok(gamma(s)? - lower_series(s, x))
    }
}

/// γ(s, x) = x^s e^{-x} Σ x^n / (s)_{n+1}
fn lower_series(s: Complex64, x: f64) -> Complex64 {
    let mut term = 1.0 / s;
    let mut acc = term;
    let mut n = 1.0;
    loop {
        term *= x / (s + n);
        acc += term;
        if term.norm() <= 1e-17 * acc.norm() || n > 5000.0 {
            break;
        }
        n += 1.0;
    }
    acc * prefactor(s, x)
}

/// Legendre continued fraction, modified Lentz.
fn continued_fraction(s: Complex64, x: f64) -> Result<Complex64> {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..20_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            return Ok(h * prefactor(s, x));
        }
    }
    Err(Error::NotConverged(format!("incomplete gamma continued fraction at s={s}, x={x}")))
}

/// Γ(s,x) ≤ x^{σ-1} e^{-x} / (1 - max(σ-1,0)/x), for x > max(σ-1, 0).
pub fn upper_incomplete_gamma_bound(sigma: f64, x: f64) -> f64 {
    let d = (sigma - 1.0).max(0.0) / x;
    if d >= 1.0 {
        return f64::INFINITY;
    }
    real_pow(x, Complex64::new(sigma - 1.0, 0.0)).re * (-x).exp() / (1.0 - d)
}
