use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::path::PathBuf;
use std::time::Instant;

use super::cache::cached_eigenform;
use super::report::CheckResult;
use crate::error::{Error, Result};
use crate::kernel::{canonical_params, kernel_coefficient, kernel_symmetry_pair};
use crate::lfunc::{completed_l, LQuery};
use crate::modular::Eigenform;

/// Tolerances and resources shared by the checks.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub special_tol: f64,
    pub convolution_tol: f64,
    pub eigen_tol: f64,
    pub petersson_check_tol: f64,
    /// tolerance handed to the Petersson quadrature itself
    pub petersson_tol: f64,
    pub n_terms: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            special_tol: 1e-10,
            convolution_tol: 1e-6,
            eigen_tol: 1e-4,
            petersson_check_tol: 1e-3,
            petersson_tol: 1e-6,
            n_terms: 100,
            cache_dir: None,
        }
    }
}

impl VerifyConfig {
    pub fn form(&self, weight: u32) -> Result<Eigenform> {
        cached_eigenform(weight, self.n_terms, self.cache_dir.as_deref())
    }
}

fn weight_of(k: i64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::pre(format!("weight {k} out of range")))
}

fn completed(f: &Eigenform, s: i64) -> Result<Complex64> {
    completed_l(&LQuery::new(f, Complex64::new(s as f64, 0.0), f.len().min(80)))
}

fn run(id: String, tol: f64, body: impl FnOnce(Instant) -> Result<CheckResult>) -> CheckResult {
    let started = Instant::now();
    body(started).unwrap_or_else(|e| CheckResult::errored(id, tol, started, &e))
}

/// L*(k+r)/L*(k+r') through kernel coefficients against the completed L-function, r' = 1 or 2 by parity.
pub fn check_theorem_main(k: i64, r: i64, cfg: &VerifyConfig) -> CheckResult {
    let id = format!("theorem_main/k{k}_r{r}");
    let tol = cfg.petersson_check_tol;
    let base = if r % 2 == 1 { 1 } else { 2 };
    if r == base {
        let started = Instant::now();
        return CheckResult::compare(id, 1.0, 1.0, tol, started)
            .with_notes(format!("r = r' = {base}: both routes give 1 by construction"));
    }
    run(id.clone(), tol, |started| {
        let top = kernel_coefficient(1, &canonical_params(k, r)?)?.value;
        let bottom = kernel_coefficient(1, &canonical_params(k, base)?)?.value;
        let f = cfg.form(weight_of(k)?)?;
        let direct = completed(&f, k + r)? / completed(&f, k + base)?;
        Ok(CheckResult::compare(id, top / bottom, direct, tol, started)
            .with_notes(format!("L*({})/L*({})", k + r, k + base)))
    })
}

/// c_l / c_1 against a(l) for l = 2..=l_max.
pub fn check_kernel_eigen(k: i64, r: i64, l_max: u64, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let tol = cfg.eigen_tol;
    let setup = || -> Result<(Vec<Complex64>, Eigenform)> {
        let p = canonical_params(k, r)?;
        let f = cfg.form(weight_of(k)?)?;
        if (f.len() as u64) < l_max {
            return Err(Error::pre(format!("eigenform has only {} coefficients", f.len())));
        }
        let c = (1..=l_max).map(|l| kernel_coefficient(l, &p).map(|rep| rep.value)).collect::<Result<_>>()?;
        Ok((c, f))
    };
    let started = Instant::now();
    match setup() {
        Err(e) => vec![CheckResult::errored(format!("kernel_eigen/k{k}_r{r}"), tol, started, &e)],
        Ok((c, f)) => (2..=l_max)
            .map(|l| {
                let want = f.a(l as usize).to_f64().unwrap_or(f64::NAN);
                CheckResult::compare(format!("kernel_eigen/k{k}_r{r}/l{l}"), c[l as usize - 1] / c[0], want, tol, started)
            })
            .collect(),
    }
}

/// c_1 ⟨f, f⟩ against L*(k+r) L*(s+k+r-2a) for odd r.
pub fn check_lvalue_product(k: i64, r: i64, cfg: &VerifyConfig) -> CheckResult {
    let id = format!("lvalue_product/k{k}_r{r}");
    let tol = cfg.petersson_check_tol;
    run(id.clone(), tol, |started| {
        let f = cfg.form(weight_of(k)?)?;
        let (lhs, rhs) = kernel_symmetry_pair(&f, r, cfg.petersson_tol)?;
        Ok(CheckResult::compare(id, lhs, rhs, tol, started))
    })
}
