//! Completed L-functions of level-one eigenforms.
//!
//! L*(s) = Σ a(n) [ (2πn)^{-s} Γ(s, 2πn) + i^k (2πn)^{s-k} Γ(k-s, 2πn) ]

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::modular::Eigenform;
use crate::special::sum::CSum;
use crate::special::{gamma, real_pow, upper_incomplete_gamma, upper_incomplete_gamma_bound};

#[derive(Clone, Debug)]
pub struct LQuery<'a> {
    pub form: &'a Eigenform,
    pub s: Complex64,
    pub n_terms: usize,
}

impl<'a> LQuery<'a> {
    pub fn new(form: &'a Eigenform, s: Complex64, n_terms: usize) -> Self {
        Self { form, s, n_terms }
    }
}

const TAIL_REL: f64 = 1e-14;

fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Bound on Σ_{n>N} |a(n)| (|(2πn)^{-s}Γ(s,2πn)| + |(2πn)^{s-k}Γ(k-s,2πn)|),
/// with |a(n)| ≤ d(n) n^{(k-1)/2} ≤ n^{(k+1)/2}.
fn tail_bound(k: u32, sigma: f64, n_last: usize) -> f64 {
    let kf = k as f64;
    let term = |n: f64| {
        let x = 2.0 * PI * n;
        let a = n.powf((kf + 1.0) / 2.0);
        let g1 = x.powf(-sigma) * upper_incomplete_gamma_bound(sigma, x);
        let g2 = x.powf(sigma - kf) * upper_incomplete_gamma_bound(kf - sigma, x);
        a * (g1 + g2)
    };
    let n1 = (n_last + 1) as f64;
    let first = term(n1);
    let ratio = term(n1 + 1.0) / first;
    if !(ratio < 1.0) {
        return f64::INFINITY;
    }
    first / (1.0 - ratio)
}

/// L*_f(s), entire in s.
pub fn completed_l(q: &LQuery) -> Result<Complex64> {
    let f = q.form;
    let k = f.weight();
    if q.n_terms == 0 || q.n_terms > f.len() {
        return Err(Error::pre(format!(
            "n_terms = {} but the form carries {} coefficients",
            q.n_terms,
            f.len()
        )));
    }
    let s = q.s;
    let ks = k as f64 - s;
    let ik = i_pow(k);
    let mut acc = CSum::new();
    let mut scale = 0.0;
    for n in 1..=q.n_terms {
        let a = f.af(n);
        if a == 0.0 {
            continue;
        }
        let x = 2.0 * PI * n as f64;
        let t1 = real_pow(x, -s) * upper_incomplete_gamma(s, x)?;
        let t2 = ik * real_pow(x, s - k as f64) * upper_incomplete_gamma(ks, x)?;
        let term = (t1 + t2) * a;
        scale += term.norm();
        acc.add(term);
    }
    let value = acc.value();
    let bound = tail_bound(k, s.re, q.n_terms);
    if !(bound <= TAIL_REL * scale.max(value.norm())) {
        return Err(Error::NotConverged(format!(
            "L* tail bound {bound:.3e} too large for n_terms = {} at s = {s}",
            q.n_terms
        )));
    }
    Ok(value)
}

/// L_f(s) = (2π)^s L*_f(s) / Γ(s).
pub fn l_value(q: &LQuery) -> Result<Complex64> {
    let g = gamma(q.s)?;
    Ok(real_pow(2.0 * PI, q.s) * completed_l(q)? / g)
}
