//! Fourier coefficients of the double Eisenstein kernel.
//!
//! The l-th coefficient is a prefactor times the unfolded pairing of
//! E_{2a} times a real-analytic Eisenstein series against the l-th
//! Poincaré series. The pairing splits into a finite part, which is a sum of
//! Gamma values, and a tail over negative Fourier indices that is rewritten
//! as a finite combination of shifted convolutions D_l and continued to t = 0.
//!
//! At t = 0 the continued pairing also picks up the constant-term growth of
//! the integrand, which behaves like a weight-k Eisenstein series and is
//! subtracted explicitly. The result is divided by the leading constant-term
//! coefficient of the Eisenstein series so that it matches the coset-sum
//! normalization.

mod expansion;
mod oracle;
mod params;
mod unfold;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lfunc::{completed_l, LQuery};
use crate::modular::{petersson_norm_numeric, Eigenform};
use crate::special::sum::csum;

pub use expansion::{a0_term, alpha_coeff, b_coeff, product_coeff, sigma_holomorphic, ProductExpansion};
pub use oracle::{inner_product_quadrature_oracle, negative_tail_direct, QuadratureEstimate};
pub use params::{canonical_params, KernelParams, Sign, TailIndex};
pub use unfold::{
    eisenstein_normalization, finite_part, growth_correction, inner_product, negative_tail,
    negative_tail_terms, prefactor, TailContribution,
};

/// Decomposition of one kernel coefficient at t = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelCoefficientReport {
    pub l: u64,
    pub value: Complex64,
    pub prefactor: f64,
    pub finite: Complex64,
    pub tail: Complex64,
    pub growth: Complex64,
    pub normalization: f64,
    pub contributions: Vec<TailContribution>,
}

impl KernelCoefficientReport {
    /// finite + tail, the continued pairing before the growth term is removed.
    pub fn raw_pairing(&self) -> Complex64 {
        self.finite + self.tail
    }

    pub fn reassemble(&self) -> Complex64 {
        self.prefactor * (self.finite + self.tail - self.growth) / self.normalization
    }
}

/// l-th Fourier coefficient at t = 0, with its full decomposition.
pub fn kernel_coefficient(l: u64, p: &KernelParams) -> Result<KernelCoefficientReport> {
    kernel_coefficient_with_tol(l, p, 1e-12)
}

/// As [`kernel_coefficient`], with the tolerance passed to each D_l evaluation.
pub fn kernel_coefficient_with_tol(l: u64, p: &KernelParams, tol: f64) -> Result<KernelCoefficientReport> {
    if l == 0 {
        return Err(Error::pre("coefficient index l must be at least 1"));
    }
    let p0 = p.clone().with_t(0.0)?;
    let contributions = negative_tail_terms(l, &p0, tol)?;
    let tail = csum(contributions.iter().map(TailContribution::value));
    let mut report = KernelCoefficientReport {
        l,
        value: Complex64::new(0.0, 0.0),
        prefactor: prefactor(l, &p0)?,
        finite: finite_part(l, &p0)?,
        tail,
        growth: growth_correction(l, &p0)?,
        normalization: eisenstein_normalization(&p0)?,
        contributions,
    };
    report.value = report.reassemble();
    Ok(report)
}

/// (c_1 ⟨f, f⟩, L*_f(k + r) L*_f(2)) for odd r.
pub fn kernel_symmetry_pair(
    f: &Eigenform,
    r: i64,
    petersson_tol: f64,
) -> Result<(Complex64, Complex64)> {
    if r % 2 == 0 {
        return Err(Error::pre(format!("symmetry pair needs odd r, got {r}")));
    }
    let k = f.weight() as i64;
    let p = canonical_params(k, r)?;
    let c1 = kernel_coefficient(1, &p)?.value;
    let norm = petersson_norm_numeric(f, petersson_tol)?;
    let terms = f.len().saturating_sub(1).min(80);
    let l1 = completed_l(&LQuery::new(f, Complex64::new((k + r) as f64, 0.0), terms))?;
    let l2 = completed_l(&LQuery::new(f, Complex64::new(p.second_argument() as f64, 0.0), terms))?;
    Ok((c1 * norm, l1 * l2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratios(k: i64, r: i64, ls: &[u64]) -> Vec<f64> {
        let p = canonical_params(k, r).unwrap();
        let c1 = kernel_coefficient(1, &p).unwrap().value.re;
        ls.iter().map(|l| kernel_coefficient(*l, &p).unwrap().value.re / c1).collect()
    }

    #[test]
    fn weight_twelve_odd() {
        let v = ratios(12, 1, &[2, 3]);
        assert!((v[0] + 24.0).abs() < 24e-8, "{v:?}");
        assert!((v[1] - 252.0).abs() < 252e-8, "{v:?}");
    }

    #[test]
    fn weight_twelve_even() {
        let v = ratios(12, 2, &[2, 3]);
        assert!((v[0] + 24.0).abs() < 24e-7, "{v:?}");
        assert!((v[1] - 252.0).abs() < 252e-7, "{v:?}");
    }

    #[test]
    fn report_reassembles() {
        let p = canonical_params(12, 1).unwrap();
        let r = kernel_coefficient(2, &p).unwrap();
        assert_eq!(r.value, r.reassemble());
        assert_eq!(r.contributions.len(), p.tail_indices().len());
        assert!((r.value.re / r.normalization.recip() / r.prefactor
            - (r.raw_pairing() - r.growth).re).abs() < 1e-12 * r.raw_pairing().norm());
    }
}
