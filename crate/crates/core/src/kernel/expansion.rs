use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use std::f64::consts::PI;

use super::params::{KernelParams, Sign};
use crate::error::{Error, Result};
use crate::special::{bernoulli, binom_int, factorial, lambda_real, ratio_to_f64, sigma};

/// (-1)^j (j+|h|)! C(S-1+|h|, j+|h|) C(h-S, j+h)
pub(crate) fn alpha_generic(j: i64, h: i64, big_s: i64) -> BigInt {
    let m = h.abs();
    if j + m < 0 {
        return BigInt::from(0);
    }
    let sign = if j.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    sign * factorial((j + m) as u64) * binom_int(big_s - 1 + m, j + m) * binom_int(h - big_s, j + h)
}

/// α_j^± as an exact integer.
pub fn alpha_coeff(j: i64, sign: Sign, p: &KernelParams) -> Result<BigInt> {
    let range = p.j_range(sign);
    if !range.contains(&j) {
        return Err(Error::pre(format!("j = {j} outside {range:?} for sign {sign:?}")));
    }
    let (h, big_s) = p.alpha_shape(sign);
    Ok(alpha_generic(j, h, big_s))
}

pub(crate) fn alpha_f64(j: i64, sign: Sign, p: &KernelParams) -> f64 {
    let (h, big_s) = p.alpha_shape(sign);
    alpha_generic(j, h, big_s).to_f64().unwrap_or(f64::NAN)
}

/// σ_{2a-1}(n), with σ_{2a-1}(0) = -B_{2a}/(4a).
pub fn sigma_holomorphic(n: u64, a: i64) -> f64 {
    if n == 0 {
        let b = bernoulli((2 * a) as usize);
        return -ratio_to_f64(&b) / (4 * a) as f64;
    }
    sigma(n, Complex64::new((2 * a - 1) as f64, 0.0)).re
}

/// The two y-power coefficients of a_0: (m! C(S-1+m, m) Λ(2S), m! C(m-S, m) Λ(2-2S)).
pub(crate) fn a0_coefficients(p: &KernelParams) -> Result<(f64, f64)> {
    let m = p.m();
    let big_s = p.eis_s();
    let mf = factorial(m as u64).to_f64().unwrap_or(f64::NAN);
    let c1 = mf * binom_int(big_s - 1 + m, m).to_f64().unwrap_or(f64::NAN) * lambda_real((2 * big_s) as f64)?;
    let c2 = mf * binom_int(m - big_s, m).to_f64().unwrap_or(f64::NAN) * lambda_real((2 - 2 * big_s) as f64)?;
    Ok((c1, c2))
}

/// Constant Fourier mode a_0(y) of the real-analytic Eisenstein series.
pub fn a0_term(y: f64, p: &KernelParams) -> Result<Complex64> {
    if !(y > 0.0) {
        return Err(Error::pre(format!("height y must be positive, got {y}")));
    }
    let (c1, c2) = a0_coefficients(p)?;
    let big_s = p.eis_s() as f64;
    Ok(Complex64::new(c1 * y.powf(big_s) + c2 * y.powf(1.0 - big_s), 0.0))
}

fn check_height(y: f64) -> Result<()> {
    if y > 0.0 && y.is_finite() {
        Ok(())
    } else {
        Err(Error::pre(format!("height y must be positive, got {y}")))
    }
}

/// Coefficient b_n(y) of e^{2πinx}, n ≠ 0.
pub fn b_coeff(n: i64, y: f64, p: &KernelParams) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::pre("b_n is defined for n != 0; use a0_term"));
    }
    check_height(y)?;
    Ok(Complex64::new(b_real(n, y, p), 0.0))
}

fn b_real(n: i64, y: f64, p: &KernelParams) -> f64 {
    let sign = Sign::of(n);
    let nn = n.unsigned_abs();
    let nf = nn as f64;
    let big_s = p.eis_s();
    let x = 4.0 * PI * nf * y;
    let poly: f64 = p.j_range(sign).map(|j| alpha_f64(j, sign, p) * x.powi(-j as i32)).sum();
    let sig = sigma(nn, Complex64::new((2 * big_s - 1) as f64, 0.0)).re;
    sig / nf.powi(big_s as i32) * poly * (-2.0 * PI * nf * y).exp() * y.powi((p.a() - p.r() - p.k() / 2) as i32)
}

/// l-th Fourier coefficient of E_{2a} times the Eisenstein series, truncated to n ≥ -n_cut,
/// with all divisor sums and α_j^± tabulated once.
#[derive(Clone, Debug)]
pub struct ProductExpansion {
    l: i64,
    n_cut: i64,
    y_power: i32,
    a0: (f64, f64),
    big_s: f64,
    /// (n, σ_{2S-1}(|n|) |n|^{-S} σ_{2a-1}(l-n), [(j, α_j)])
    terms: Vec<(i64, f64, Vec<(i32, f64)>)>,
    sigma_l: f64,
}

impl ProductExpansion {
    pub fn new(l: u64, p: &KernelParams, n_cut: u64) -> Result<Self> {
        let li = l as i64;
        let big_s = p.eis_s();
        let sigma_idx = Complex64::new((2 * big_s - 1) as f64, 0.0);
        let coeffs = |sign: Sign| -> Vec<(i32, f64)> {
            p.j_range(sign).map(|j| (j as i32, alpha_f64(j, sign, p))).collect()
        };
        let (plus, minus) = (coeffs(Sign::Plus), coeffs(Sign::Minus));
        let mut terms = Vec::new();
        for n in -(n_cut as i64)..=li {
            if n == 0 {
                continue;
            }
            let nn = n.unsigned_abs();
            let c = sigma(nn, sigma_idx).re / (nn as f64).powi(big_s as i32)
                * sigma_holomorphic((li - n) as u64, p.a());
            terms.push((n, c, if n > 0 { plus.clone() } else { minus.clone() }));
        }
        Ok(Self {
            l: li,
            n_cut: n_cut as i64,
            y_power: (p.a() - p.r() - p.k() / 2) as i32,
            a0: a0_coefficients(p)?,
            big_s: big_s as f64,
            terms,
            sigma_l: sigma_holomorphic(l, p.a()),
        })
    }

    pub fn n_cut(&self) -> u64 {
        self.n_cut as u64
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        check_height(y)?;
        let mut acc = crate::special::sum::Neumaier::new();
        let yp = y.powi(self.y_power);
        let a0 = self.a0.0 * y.powf(self.big_s) + self.a0.1 * y.powf(1.0 - self.big_s);
        acc.add(yp * a0 * self.sigma_l * (-2.0 * PI * self.l as f64 * y).exp());
        for (n, c, alphas) in &self.terms {
            let nf = n.unsigned_abs() as f64;
            let x = 4.0 * PI * nf * y;
            let poly: f64 = alphas.iter().map(|(j, a)| a * x.powi(-j)).sum();
            let decay = (-2.0 * PI * (nf + (self.l - n) as f64) * y).exp();
            acc.add(c * poly * decay * yp);
        }
        Ok(acc.value())
    }
}

pub fn product_coeff(l: u64, y: f64, p: &KernelParams, n_cut: u64) -> Result<Complex64> {
    Ok(Complex64::new(ProductExpansion::new(l, p, n_cut)?.eval(y)?, 0.0))
}
