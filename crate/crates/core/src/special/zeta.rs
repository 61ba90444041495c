//! Riemann, Hurwitz and completed zeta functions.
//!
//! Hurwitz zeta is split by Re s:
//! * Re s ≥ -1: Euler–Maclaurin after shifting x up to X ≥ max(20, 0.8(|s|+26)),
//!   corrections through B_26;
//! * nonpositive integers: Bernoulli polynomials, exactly;
//! * -10 < Re s < -1: Taylor series about x = 1 in Riemann zeta values;
//! * Re s ≤ -10: Hurwitz's functional equation.
//!
//! The shifted direct sum cancels catastrophically for Re s well below zero,
//! hence the other branches.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::bernoulli::{bernoulli_f64, bernoulli_poly};
use super::gamma::gamma;
use super::pow::{is_nonpositive_integer, real_pow, sinpi, sinpi_c};
use super::sum::CSum;
use crate::error::{Error, Result};

const EM_TERMS: usize = 13;

fn is_one(s: Complex64) -> bool {
    s.re == 1.0 && s.im == 0.0
}

/// ζ(s, x) for 0 < x ≤ 1.
pub fn hurwitz_zeta(s: Complex64, x: f64) -> Result<Complex64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::pre(format!("hurwitz_zeta needs 0 < x <= 1, got {x}")));
    }
    hurwitz_any(s, x)
}

/// ζ(s, x) for any x > 0.
pub(crate) fn hurwitz_any(s: Complex64, x: f64) -> Result<Complex64> {
    if is_one(s) {
        return Err(Error::pole("hurwitz_zeta", s));
    }
    if is_nonpositive_integer(s) && s.re >= -120.0 {
        let n = (-s.re) as usize;
        return Ok(Complex64::new(-bernoulli_poly(n + 1, x) / (n + 1) as f64, 0.0));
    }
    if s.re >= -1.0 {
        return Ok(euler_maclaurin(s, x));
    }
    if x > 1.0 {
        let (x0, correction) = reduce_to_unit(s, x);
        return Ok(hurwitz_any(s, x0)? + correction);
    }
    if s.re > -10.0 {
        taylor_about_one(s, x)
    } else {
        functional_equation(s, x)
    }
}

/// x0 ∈ (0, 1] with x - x0 integral, and ζ(s, x) - ζ(s, x0).
fn reduce_to_unit(s: Complex64, x: f64) -> (f64, Complex64) {
    let k = (x - 1.0).ceil();
    let mut x0 = x - k;
    if x0 <= 0.0 {
        x0 += 1.0;
    }
    let mut acc = CSum::new();
    let mut y = x0;
    while y < x - 0.5 {
        acc.add(-real_pow(y, -s));
        y += 1.0;
    }
    (x0, acc.value())
}

fn euler_maclaurin(s: Complex64, x: f64) -> Complex64 {
    let target = 20f64.max(0.8 * (s.norm() + 26.0));
    let n = (target - x).ceil().max(0.0) as usize;
    let mut acc = CSum::new();
    for i in 0..n {
        acc.add(real_pow(x + i as f64, -s));
    }
    let big_x = x + n as f64;
    let xs = real_pow(big_x, -s);
    acc.add(xs * big_x / (s - 1.0));
    acc.add(xs * 0.5);
    // B_{2j}/(2j)! (s)_{2j-1} X^{-s-2j+1}
    let inv_x = 1.0 / big_x;
    let mut poch = s; // (s)_{2j-1}
    let mut xp = xs * inv_x; // X^{-s-2j+1}
    let mut fact = 2.0; // (2j)!
    for j in 1..=EM_TERMS {
        let term = poch * xp * (bernoulli_f64(2 * j) / fact);
        acc.add(term);
        let jj = 2 * j as u32;
        poch *= (s + (jj - 1) as f64) * (s + jj as f64);
        xp *= inv_x * inv_x;
        fact *= ((jj + 1) * (jj + 2)) as f64;
    }
    acc.value()
}

fn taylor_about_one(s: Complex64, x: f64) -> Result<Complex64> {
    HurwitzFamily::new(s)?.eval(x)
}

fn functional_equation(s: Complex64, x: f64) -> Result<Complex64> {
    // ζ(s,x) = 2Γ(1-s)(2π)^{s-1} Σ_{n≥1} sin(πs/2 + 2πnx) n^{s-1}
    let e = 1.0 - s.re;
    let n_max = (41.5 / e).exp().ceil() as usize + 2;
    let mut acc = CSum::new();
    for n in 1..=n_max {
        let arg = s * 0.5 + 2.0 * ((n as f64 * x).fract());
        acc.add(sinpi_c(arg) * real_pow(n as f64, s - 1.0));
    }
    Ok(2.0 * gamma(1.0 - s)? * real_pow(2.0 * PI, s - 1.0) * acc.value())
}

/// ζ(s) on ℂ \ {1}.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    if is_one(s) {
        return Err(Error::pole("riemann_zeta", s));
    }
    if is_nonpositive_integer(s) && s.re >= -120.0 {
        let n = (-s.re) as usize;
        if n == 0 {
            return Ok(Complex64::new(-0.5, 0.0));
        }
        if n % 2 == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Ok(Complex64::new(-bernoulli_f64(n + 1) / (n + 1) as f64, 0.0));
    }
    if s.re >= 0.5 {
        if s.re >= 40.0 {
            return Ok(large_re(s));
        }
        return Ok(euler_maclaurin(s, 1.0));
    }
    let sin = if s.im == 0.0 {
        Complex64::new(sinpi(s.re / 2.0), 0.0)
    } else {
        sinpi_c(s * 0.5)
    };
    Ok(real_pow(2.0, s) * real_pow(PI, s - 1.0) * sin * gamma(1.0 - s)? * riemann_zeta(1.0 - s)?)
}

fn large_re(s: Complex64) -> Complex64 {
    let mut acc = CSum::new();
    for n in (2..=8).rev() {
        acc.add(real_pow(n as f64, -s));
    }
    acc.add(Complex64::new(1.0, 0.0));
    acc.value()
}

/// ζ(s, ·) at one fixed s, for many x.
///
/// For -10 < Re s < -1 the Riemann values ζ(s+k) of the Taylor branch are
/// computed once, which makes each evaluation a short polynomial sum.
#[derive(Clone, Debug)]
pub struct HurwitzFamily {
    s: Complex64,
    taylor: Option<Vec<Complex64>>,
}

impl HurwitzFamily {
    pub fn new(s: Complex64) -> Result<Self> {
        if is_one(s) {
            return Err(Error::pole("hurwitz_zeta", s));
        }
        let needs_taylor = s.re < -1.0 && s.re > -10.0 && !is_nonpositive_integer(s);
        if !needs_taylor {
            return Ok(Self { s, taylor: None });
        }
        // (s)_k/k! ζ(s+k), kept until negligible at |h| = 1/2
        let mut coefs = Vec::new();
        let mut poch = Complex64::new(1.0, 0.0);
        let mut peak = 0.0f64;
        let mut small = 0;
        for k in 0..600 {
            let kf = k as f64;
            let c = poch * riemann_zeta(s + kf)?;
            let size = c.norm() * 0.5f64.powi(k);
            peak = peak.max(size);
            coefs.push(c);
            if k > 8 && size < 1e-19 * peak {
                small += 1;
                if small >= 3 {
                    break;
                }
            } else {
                small = 0;
            }
            poch *= (s + kf) / (kf + 1.0);
        }
        Ok(Self { s, taylor: Some(coefs) })
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    /// ζ(s, x) for x > 0.
    pub fn eval(&self, x: f64) -> Result<Complex64> {
        let Some(coefs) = &self.taylor else {
            return hurwitz_any(self.s, x);
        };
        if !(x > 0.0) {
            return Err(Error::pre(format!("Hurwitz parameter must be positive, got {x}")));
        }
        if x > 1.0 {
            let (x0, correction) = reduce_to_unit(self.s, x);
            return Ok(self.eval(x0)? + correction);
        }
        let (h, extra) = if x <= 0.5 { (x, real_pow(x, -self.s)) } else { (x - 1.0, Complex64::new(0.0, 0.0)) };
        // Horner in -h
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coefs.iter().rev() {
            acc = acc * (-h) + c;
        }
        Ok(acc + extra)
    }
}

pub fn zeta_real(x: f64) -> Result<f64> {
    riemann_zeta(Complex64::new(x, 0.0)).map(|z| z.re)
}

/// Λ(s) = π^{-s/2} Γ(s/2) ζ(s), using Λ(s) = Λ(1-s) left of 1/2.
pub fn lambda_completed(s: Complex64) -> Result<Complex64> {
    if s.im == 0.0 && (s.re == 0.0 || s.re == 1.0) {
        return Err(Error::pole("lambda_completed", s));
    }
    let s = if s.re < 0.5 { 1.0 - s } else { s };
    Ok(real_pow(PI, -s * 0.5) * gamma(s * 0.5)? * riemann_zeta(s)?)
}

pub fn lambda_real(x: f64) -> Result<f64> {
    lambda_completed(Complex64::new(x, 0.0)).map(|z| z.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn riemann_classical() {
        assert!(rel(riemann_zeta(c(2.0, 0.0)).unwrap(), c(PI * PI / 6.0, 0.0)) < 1e-15);
        assert_eq!(riemann_zeta(c(0.0, 0.0)).unwrap().re, -0.5);
        assert_eq!(riemann_zeta(c(-2.0, 0.0)).unwrap().re, 0.0);
        assert!(riemann_zeta(c(1.0, 0.0)).unwrap_err().is_pole());
        assert!(rel(riemann_zeta(c(-1.0, 0.0)).unwrap(), c(-1.0 / 12.0, 0.0)) < 1e-15);
    }

    #[test]
    fn riemann_complex_reference() {
        // mpmath zeta values
        assert!(rel(riemann_zeta(c(0.5, 30.0)).unwrap(), c(-0.1206422875900437, -0.5836912147637063)) < 1e-12);
        assert!(rel(riemann_zeta(c(-3.7, 20.0)).unwrap(), c(-43.042068340508315, -126.85319640735547)) < 1e-12);
    }

    #[test]
    fn hurwitz_identities() {
        let s = c(3.0, 0.0);
        assert!(rel(hurwitz_zeta(s, 1.0).unwrap(), riemann_zeta(s).unwrap()) < 1e-15);
        let s = c(4.0, 0.0);
        let want = (2f64.powi(4) - 1.0) * riemann_zeta(s).unwrap();
        assert!(rel(hurwitz_zeta(s, 0.5).unwrap(), want) < 1e-15);
        assert!(rel(hurwitz_zeta(c(-1.0, 0.0), 1.0 / 3.0).unwrap(), c(1.0 / 36.0, 0.0)) < 1e-15);
        assert!(hurwitz_zeta(c(1.0, 0.0), 0.3).unwrap_err().is_pole());
    }

    #[test]
    fn hurwitz_branches_against_reference() {
        let cases = [
            (c(-2.5, 0.0), 0.3, c(-0.00949638093151452, 0.0)),
            (c(-7.25, 3.0), 0.71, c(0.008387985906560053, 0.1370577671943271)),
            (c(-14.5, 0.0), 0.2, c(-0.12916496338442235, 0.0)),
            (c(-30.0, 9.0), 0.9, c(-16289590237918.438, -7257594219829.035)),
            (c(35.0, -10.0), 0.45, c(-179433924754.47537, -1360878616353.3022)),
            (c(-0.5, 25.0), 0.05, c(-2.930345027798367, -1.361459556975852)),
        ];
        for (s, x, want) in cases {
            let got = hurwitz_zeta(s, x).unwrap();
            assert!(rel(got, want) < 1e-11, "s={s} x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn lambda_values() {
        assert!(rel(lambda_completed(c(2.0, 0.0)).unwrap(), c(PI / 6.0, 0.0)) < 1e-15);
        assert!(rel(lambda_completed(c(4.0, 0.0)).unwrap(), c(PI * PI / 90.0, 0.0)) < 1e-15);
        let a = lambda_completed(c(3.7, 0.0)).unwrap();
        let b = lambda_completed(c(-2.7, 0.0)).unwrap();
        assert!(rel(a, b) < 1e-14);
        assert!(rel(lambda_completed(c(-2.0, 0.0)).unwrap(), lambda_completed(c(3.0, 0.0)).unwrap()) < 1e-15);
        assert!(lambda_completed(c(0.0, 0.0)).unwrap_err().is_pole());
        assert!(lambda_completed(c(1.0, 0.0)).unwrap_err().is_pole());
    }
}
