//! Petersson norm ⟨f, f⟩ = ∫_𝔉 |f(z)|² y^k dx dy / y² by quadrature.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::eigenform::Eigenform;
use crate::error::{Error, Result};
use crate::quad::gauss_legendre;
use crate::special::sum::{fsum, Neumaier};
use crate::special::upper_incomplete_gamma;

/// Standard fundamental domain |x| ≤ 1/2, x² + y² ≥ 1 with measure dx dy / y².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FundamentalDomain;

impl FundamentalDomain {
    /// Height where the quadrature hands over to the closed-form cap.
    pub const SPLIT_HEIGHT: f64 = 2.0;

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x.abs() <= 0.5 && x * x + y * y >= 1.0 && y > 0.0
    }

    pub fn min_height(&self) -> f64 {
        3f64.sqrt() / 2.0
    }

    /// Lower boundary arc at abscissa x.
    pub fn floor_at(&self, x: f64) -> f64 {
        (1.0 - x * x).sqrt()
    }
}

const NODES: usize = 16;
const MAX_LEVEL: u32 = 8;

/// Numerical ⟨f, f⟩ with relative error ≈ tol (estimated by panel doubling).
pub fn petersson_norm_numeric(f: &Eigenform, tol: f64) -> Result<f64> {
    if f.len() < 50 {
        return Err(Error::pre(format!("need at least 50 coefficients, got {}", f.len())));
    }
    if !(tol >= 1e-6) {
        return Err(Error::pre(format!("tol must be at least 1e-6, got {tol}")));
    }
    petersson_with_coeffs(f.float_coeffs(), f.weight(), tol)
}

/// Same integral for arbitrary real coefficients c[n] (c[0] ignored).
pub fn petersson_with_coeffs(c: &[f64], k: u32, tol: f64) -> Result<f64> {
    let cap = upper_cap(c, k)?;
    let mut prev = lower_region(c, k, 1);
    for level in 1..=MAX_LEVEL {
        let cur = lower_region(c, k, 1 << level);
        let total = cur + cap;
        if (cur - prev).abs() <= 0.1 * tol * total.abs() {
            return Ok(total);
        }
        prev = cur;
    }
    Err(Error::NotConverged("Petersson quadrature refinement".into()))
}

/// y ≥ 2: Parseval in x, then ∫_2^∞ e^{-4πny} y^{k-2} dy = Γ(k-1, 8πn)/(4πn)^{k-1}.
fn upper_cap(c: &[f64], k: u32) -> Result<f64> {
    let s = Complex64::new(k as f64 - 1.0, 0.0);
    let mut acc = Neumaier::new();
    for (n, a) in c.iter().enumerate().skip(1) {
        if *a == 0.0 {
            continue;
        }
        let x = 4.0 * PI * n as f64;
        let g = upper_incomplete_gamma(s, 2.0 * x)?.re;
        acc.add(a * a * g / x.powi(k as i32 - 1));
    }
    Ok(acc.value())
}

fn eval_abs2(c: &[f64], x: f64, y: f64) -> f64 {
    let q = Complex64::from_polar((-2.0 * PI * y).exp(), 2.0 * PI * x);
    let mut acc = Complex64::new(0.0, 0.0);
    for a in c.iter().skip(1).rev() {
        acc = acc * q + a;
    }
    (acc * q).norm_sqr()
}

/// 2 ∫_0^{1/2} ∫_{√(1-x²)}^{2} |f|² y^{k-2} dy dx on a panels × panels grid.
fn lower_region(c: &[f64], k: u32, panels: usize) -> f64 {
    let (gx, gw) = gauss_legendre(NODES);
    let width = 0.5 / panels as f64;
    let parts: Vec<f64> = (0..panels)
        .into_par_iter()
        .map(|p| {
            let mut acc = Neumaier::new();
            let x0 = p as f64 * width;
            for (xi, wi) in gx.iter().zip(&gw) {
                let x = x0 + 0.5 * width * (xi + 1.0);
                let y_lo = FundamentalDomain.floor_at(x);
                let h = (FundamentalDomain::SPLIT_HEIGHT - y_lo) / panels as f64;
                for q in 0..panels {
                    let ya = y_lo + q as f64 * h;
                    for (yj, wj) in gx.iter().zip(&gw) {
                        let y = ya + 0.5 * h * (yj + 1.0);
                        let v = eval_abs2(c, x, y) * y.powi(k as i32 - 2);
                        acc.add(wi * wj * 0.25 * width * h * v);
                    }
                }
            }
            acc.value()
        })
        .collect();
    2.0 * fsum(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::delta_q;

    const DELTA_NORM: f64 = 1.035_362_056_804_320_9e-6;

    #[test]
    fn delta_norm() {
        let d = delta_q(50).unwrap();
        let v = petersson_norm_numeric(&d, 1e-6).unwrap();
        assert!((v - DELTA_NORM).abs() / DELTA_NORM < 1e-9, "{v}");
    }

    #[test]
    fn domain_shape() {
        let d = FundamentalDomain;
        assert!(d.contains(0.0, 1.0));
        assert!(!d.contains(0.0, 0.9));
        assert!(!d.contains(0.6, 2.0));
        assert!((d.min_height() - d.floor_at(0.5)).abs() < 1e-16);
    }
}
