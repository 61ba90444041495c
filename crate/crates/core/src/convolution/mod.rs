//! Shifted divisor convolutions D_l(α, β; s) = Σ_{n>l} σ_α(n) σ_β(n-l) n^{-s}.
//!
//! Direct summation covers the half-plane of absolute convergence. Beyond it
//! the series is continued through the Ramanujan expansion of σ_β into
//! Estermann functions, evaluated either modulus by modulus or, where that
//! series converges too slowly, after collapsing the Ramanujan sums into
//! Dirichlet series over arithmetic progressions.

mod continued;
mod direct;
mod estermann;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use continued::d_continued;
pub use direct::{d_direct, direct_admissible, sigma_sieve};
pub use estermann::{
    estermann_full, estermann_truncated, ramanujan_exp_sum, ramanujan_sum, FractionSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Direct,
    Continued,
    Auto,
}

/// How d_continued evaluates the continuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContinuationMethod {
    Auto,
    /// Σ_m over moduli of the Ramanujan/Estermann expansion, calibrated tail.
    ModulusSeries,
    /// Möbius-collapsed form, one Hurwitz-continued progression per residue class.
    Progression,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectSum,
    ModulusSeries,
    Progression,
    /// circle mean around s = α + β + 1
    BoundaryMean,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvolutionQuery {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub l: u64,
    pub s: Complex64,
    pub strategy: Strategy,
    pub method: ContinuationMethod,
    pub tol: f64,
    pub n_max: usize,
    pub m_max: u64,
}

impl ConvolutionQuery {
    pub fn new(alpha: Complex64, beta: Complex64, l: u64, s: Complex64) -> Result<Self> {
        if l == 0 {
            return Err(Error::pre("shift l must be at least 1"));
        }
        Ok(Self {
            alpha,
            beta,
            l,
            s,
            strategy: Strategy::Auto,
            method: ContinuationMethod::Auto,
            tol: 1e-12,
            n_max: 4_000_000,
            m_max: 600,
        })
    }

    pub fn real(alpha: f64, beta: f64, l: u64, s: f64) -> Result<Self> {
        Self::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0), l, Complex64::new(s, 0.0))
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(1e-12..=1e-3).contains(&tol) {
            return Err(Error::pre(format!("tol must lie in [1e-12, 1e-3], got {tol}")));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_method(mut self, method: ContinuationMethod) -> Self {
        self.method = method;
        self
    }

    pub fn with_caps(mut self, n_max: usize, m_max: u64) -> Self {
        self.n_max = n_max;
        self.m_max = m_max;
        self
    }

    pub fn at(&self, s: Complex64) -> Self {
        Self { s, ..self.clone() }
    }
}

/// A value of D_l together with how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct DValue {
    pub value: Complex64,
    pub strategy: Strategy,
    pub method: Method,
    /// summation length: n for direct sums, moduli or progression blocks otherwise
    pub terms: usize,
    pub error_bound: f64,
}

/// Follow the query's strategy.
pub fn evaluate(q: &ConvolutionQuery) -> Result<DValue> {
    match q.strategy {
        Strategy::Direct => d_direct(q),
        Strategy::Continued => d_continued(q),
        Strategy::Auto => d_auto(q),
    }
}

/// Direct summation when it is admissible, the continuation otherwise.
pub fn d_auto(q: &ConvolutionQuery) -> Result<DValue> {
    if direct_admissible(q.alpha, q.beta, q.s) {
        return d_direct(q);
    }
    d_continued(q).map_err(|e| match e {
        Error::Precondition(msg) => Error::pre(format!("neither strategy applies: {msg}")),
        other => other,
    })
}

/// D_l(α, β; s + t) for each offset t.
pub fn d_holomorphy_probe(q: &ConvolutionQuery, offsets: &[f64]) -> Result<Vec<Complex64>> {
    offsets
        .iter()
        .map(|t| d_continued(&q.at(q.s + *t)).map(|v| v.value))
        .collect()
}
