use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use std::f64::consts::PI;

use super::expansion::{a0_coefficients, alpha_f64, alpha_generic, sigma_holomorphic};
use super::params::{KernelParams, Sign, TailIndex};
use crate::convolution::{d_continued, ConvolutionQuery, DValue};
use crate::error::Result;
use crate::special::sum::{csum, Neumaier};
use crate::special::{
    binom_int, factorial, factorial_f64, gamma_real, lambda_real, ratio_to_f64, riemann_zeta, sigma,
};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn cr(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn binom_f64(x: i64, n: i64) -> f64 {
    binom_int(x, n).to_f64().unwrap_or(f64::NAN)
}

/// Terms 0 ≤ n ≤ l of the unfolded integral, each a Γ(·)(4πl)^{-·}.
pub fn finite_part(l: u64, p: &KernelParams) -> Result<Complex64> {
    let t = p.t();
    let (k, r, a) = (p.k(), p.r(), p.a());
    let big_s = p.eis_s() as f64;
    let lf = l as f64;
    let c = 4.0 * PI * lf;
    // ∫ y^{e+t} e^{-4πly} dy
    let integral = |e: f64| -> Result<f64> { Ok(gamma_real(e + t + 1.0)? / c.powf(e + t + 1.0)) };
    let base = (a - r - k / 2 + k + r - 2) as f64;
    let (c1, c2) = a0_coefficients(p)?;
    let mut acc = Neumaier::new();
    let sig_l = sigma_holomorphic(l, a);
    acc.add(sig_l * c1 * integral(base + big_s)?);
    acc.add(sig_l * c2 * integral(base + 1.0 - big_s)?);
    let sigma_idx = cr((2 * p.eis_s() - 1) as f64);
    for n in 1..=l {
        let nf = n as f64;
        let pre = sigma(n, sigma_idx).re / nf.powf(big_s) * sigma_holomorphic(l - n, a);
        for j in p.j_range(Sign::Plus) {
            let e = (a + k / 2 - j - 2) as f64;
            acc.add(pre * alpha_f64(j, Sign::Plus, p) * (4.0 * PI * nf).powi(-j as i32) * integral(e)?);
        }
    }
    Ok(cr(acc.value()))
}

/// One D_l evaluation of the tail and the coefficient it enters with.
#[derive(Clone, Debug, PartialEq)]
pub struct TailContribution {
    pub index: TailIndex,
    /// D_l argument ν + t
    pub argument: f64,
    pub weight: Complex64,
    pub d: DValue,
}

impl TailContribution {
    pub fn value(&self) -> Complex64 {
        self.weight * self.d.value
    }
}

/// The n < 0 terms, binomially expanded into shifted convolutions.
pub fn negative_tail_terms(l: u64, p: &KernelParams, tol: f64) -> Result<Vec<TailContribution>> {
    let t = p.t();
    let (k, a) = (p.k(), p.a());
    let (alpha, beta) = p.d_params();
    let lf = l as f64;
    p.tail_indices()
        .par_iter()
        .map(|idx| {
            let w = (k / 2 + a - idx.j - 1) as f64 + t;
            let e = p.eis_s() - 1 - idx.j;
            let weight = alpha_f64(idx.j, Sign::Minus, p)
                * (4.0 * PI).powf((1 - k / 2 - a) as f64 - t)
                * gamma_real(w)?
                * binom_f64(e, idx.mu)
                * (-lf).powi((e - idx.mu) as i32);
            let argument = idx.nu as f64 + t;
            let q = ConvolutionQuery::real(alpha as f64, beta as f64, l, argument)?.with_tol(tol)?;
            let d = d_continued(&q)?;
            Ok(TailContribution { index: *idx, argument, weight: cr(weight), d })
        })
        .collect()
}

pub fn negative_tail(l: u64, p: &KernelParams) -> Result<Complex64> {
    Ok(csum(negative_tail_terms(l, p, 1e-12)?.iter().map(TailContribution::value)))
}

/// finite_part + negative_tail at the parameters' t.
pub fn inner_product(l: u64, p: &KernelParams) -> Result<Complex64> {
    Ok(finite_part(l, p)? + negative_tail(l, p)?)
}

/// y^{S'} leading-term normalization of a weight-k real-analytic Eisenstein series.
fn eisenstein_norm(half: i64, big_s: i64) -> Result<f64> {
    Ok(factorial_f64(half as u64) * binom_f64(big_s - 1 + half, half) * lambda_real((2 * big_s) as f64)?)
}

/// Continued unfolded integral against the weight-k series y^{-k/2} E(z, w + k/2), at t = 0.
fn eisenstein_pairing(k: i64, w: i64, l: u64) -> Result<f64> {
    let half = k / 2;
    let big_s = w + half;
    let lf = l as f64;
    let big_l = 4.0 * PI * lf;
    // Σ_j α_j Γ(e_j) with Γ at nonpositive e_j replaced by its finite part
    // (-1)^n/n! (H_n - γ - log 4πl); kept exact as A - (γ + log 4πl) B
    let mut exact = BigRational::zero();
    let mut log_coeff = BigRational::zero();
    for j in -half..big_s {
        let alpha = BigRational::from_integer(alpha_generic(j, half, big_s));
        let e = half - 1 - j;
        if e > 0 {
            exact += alpha * BigRational::from_integer(factorial((e - 1) as u64));
        } else {
            let n = -e;
            let signed = if n % 2 == 0 { alpha } else { -alpha } / BigRational::from_integer(factorial(n as u64));
            let harmonic: BigRational = (1..=n).map(|i| BigRational::new(1.into(), i.into())).sum();
            exact += &signed * harmonic;
            log_coeff += signed;
        }
    }
    let acc = ratio_to_f64(&exact) - (EULER_GAMMA + big_l.ln()) * ratio_to_f64(&log_coeff);
    let sig = sigma(l, cr((2 * big_s - 1) as f64)).re;
    Ok(sig * lf.powi(-big_s as i32) * big_l.powi((1 - half) as i32) * acc / eisenstein_norm(half, big_s)?)
}

/// Contribution of the non-decaying constant-term growth to the continued pairing at t = 0.
pub fn growth_correction(l: u64, p: &KernelParams) -> Result<Complex64> {
    let (k, r, a, s) = (p.k(), p.r(), p.a(), p.s());
    let sigma0 = sigma_holomorphic(0, a);
    let (c1, c2) = a0_coefficients(p)?;
    let mut total = sigma0 * c1 * eisenstein_pairing(k, s + r, l)?;
    let w2 = 2 * a - k + 1 - s - r;
    if w2 >= 0 {
        total += sigma0 * c2 * eisenstein_pairing(k, w2, l)?;
    }
    Ok(cr(total))
}

/// m! C(S-1+m, m) Λ(2S), the leading constant-term coefficient of the Eisenstein series.
pub fn eisenstein_normalization(p: &KernelParams) -> Result<f64> {
    Ok(a0_coefficients(p)?.0)
}

/// π^{2a-s-k-r} (4πl)^{k-1} / (2^{1-2a} Γ(k-1)) Γ(s+k+r-2a) ζ(2s+k+2r-2a)
pub fn prefactor(l: u64, p: &KernelParams) -> Result<f64> {
    let (k, r, a, s) = (p.k(), p.r(), p.a(), p.s());
    let z = riemann_zeta(cr((2 * s + k + 2 * r - 2 * a) as f64))?.re;
    Ok(PI.powi((2 * a - s - k - r) as i32) * (4.0 * PI * l as f64).powi((k - 1) as i32)
        / (2f64.powi((1 - 2 * a) as i32) * gamma_real((k - 1) as f64)?)
        * gamma_real((s + k + r - 2 * a) as f64)?
        * z)
}
