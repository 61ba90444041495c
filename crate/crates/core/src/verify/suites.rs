use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::time::Instant;

use super::checks::{check_kernel_eigen, check_lvalue_product, check_theorem_main, VerifyConfig};
use super::report::{relative_error, CheckResult, Report};
use crate::convolution::{
    d_continued, d_direct, estermann_full, ramanujan_sum, sigma_sieve, ConvolutionQuery, FractionSpec,
};
use crate::error::{Error, Result};
use crate::kernel::{
    canonical_params, finite_part, inner_product_quadrature_oracle, negative_tail, negative_tail_direct,
};
use crate::lfunc::{completed_l, LQuery};
use crate::modular::{
    delta_q, eisenstein_q, petersson_norm_numeric, petersson_with_coeffs, rankin_cohen, SUPPORTED_WEIGHTS,
};
use crate::special::{
    e2pi, gamma, gcd, hurwitz_zeta, lambda_completed, real_pow, riemann_zeta, sigma, upper_incomplete_gamma,
};

pub const SUITES: [&str; 6] = ["special", "modular", "lfunctions", "convolutions", "kernel", "all"];

const SEED: u64 = 0x5eed_1e55;

type Sample = Result<(Complex64, Complex64)>;

/// Worst sample of a sampled identity.
fn worst(id: &str, tol: f64, samples: impl Iterator<Item = Sample>) -> CheckResult {
    let started = Instant::now();
    let mut worst: Option<(f64, Complex64, Complex64)> = None;
    let mut count = 0;
    for s in samples {
        match s {
            Ok((m, e)) => {
                count += 1;
                let r = relative_error(m, e);
                if worst.map_or(true, |w| !(r <= w.0)) {
                    worst = Some((r, m, e));
                }
            }
            Err(err) => return CheckResult::errored(id, tol, started, &err),
        }
    }
    match worst {
        Some((_, m, e)) => CheckResult::compare(id, m, e, tol, started).with_notes(format!("worst of {count} samples")),
        None => CheckResult::skipped(id, "no samples"),
    }
}

fn exact(id: &str, ok: bool, started: Instant, notes: impl Into<String>) -> CheckResult {
    CheckResult::compare(id, if ok { 1.0 } else { 0.0 }, 1.0, 0.0, started).with_notes(notes)
}

fn disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let z = Complex64::new(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius));
        if z.norm() <= radius {
            return z;
        }
    }
}

/// Random s with |s| ≤ radius where ζ is well conditioned for relative comparison.
fn zeta_sample(rng: &mut ChaCha8Rng, radius: f64) -> Result<Complex64> {
    loop {
        let s = disk(rng, radius);
        if (s - 1.0).norm() < 0.5 || (s.im.abs() < 0.5 && s.re < -0.5) {
            continue;
        }
        if riemann_zeta(s)?.norm() > 1e-2 {
            return Ok(s);
        }
    }
}

fn special_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let tol = cfg.special_tol;
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut out = Vec::new();
    let started = Instant::now();
    out.push(match riemann_zeta(c(2.0)) {
        Ok(z) => CheckResult::compare("special/zeta_two", z, c(PI * PI / 6.0), tol, started),
        Err(e) => CheckResult::errored("special/zeta_two", tol, started, &e),
    });
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    out.push(worst(
        "special/hurwitz_at_one",
        tol,
        (0..200).map(|_| {
            let s = zeta_sample(&mut rng, 30.0)?;
            Ok((hurwitz_zeta(s, 1.0)?, riemann_zeta(s)?))
        }),
    ));
    out.push(worst(
        "special/hurwitz_at_half",
        tol,
        (0..200).map(|_| {
            let s = zeta_sample(&mut rng, 30.0)?;
            Ok((hurwitz_zeta(s, 0.5)?, (real_pow(2.0, s) - 1.0) * riemann_zeta(s)?))
        }),
    ));
    out.push(worst(
        "special/lambda_reflection",
        tol,
        (0..100).map(|_| {
            let s = zeta_sample(&mut rng, 30.0)?;
            Ok((lambda_completed(s)?, lambda_completed(1.0 - s)?))
        }),
    ));
    out.push(worst(
        "special/gamma_recurrence",
        1e-12,
        (0..200).map(|_| {
            let s = loop {
                let s = disk(&mut rng, 30.0);
                if s.im.abs() > 0.05 || s.re > 0.5 || (s.re - s.re.round()).abs() > 0.05 {
                    break s;
                }
            };
            Ok((gamma(s + 1.0)?, s * gamma(s)?))
        }),
    ));
    out.push(worst(
        "special/incomplete_gamma_recurrence",
        1e-11,
        (0..200).map(|_| {
            let s = disk(&mut rng, 20.0);
            let x = rng.gen_range(1.0..30.0);
            let rhs = s * upper_incomplete_gamma(s, x)? + real_pow(x, s) * (-x).exp();
            Ok((upper_incomplete_gamma(s + 1.0, x)?, rhs))
        }),
    ));
    out.push(worst(
        "special/sigma_reflection",
        1e-13,
        (0..200).map(|_| {
            let n = rng.gen_range(1..=10_000u64);
            let w = disk(&mut rng, 4.0);
            Ok((sigma(n, w), real_pow(n as f64, w) * sigma(n, -w)))
        }),
    ));
    out
}

fn modular_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let started = Instant::now();
    let rc = (|| -> Result<bool> {
        let e4 = eisenstein_q(4, 20)?;
        let e6 = eisenstein_q(6, 20)?;
        let bracket = rankin_cohen(&e4, &e6, 1);
        let delta = delta_q(20)?.to_qexpansion();
        Ok(bracket.coeff(0).is_zero() && bracket.ratio_to(&delta).is_some_and(|q| !q.is_zero()))
    })();
    out.push(match rc {
        Ok(ok) => exact("modular/rankin_cohen_e4_e6", ok, started, "[E4,E6]_1 is an exact multiple of Δ"),
        Err(e) => CheckResult::errored("modular/rankin_cohen_e4_e6", 0.0, started, &e),
    });
    for &k in &SUPPORTED_WEIGHTS {
        let started = Instant::now();
        let id = format!("modular/hecke_relations/k{k}");
        let f = match cfg.form(k) {
            Ok(f) => f,
            Err(e) => {
                out.push(CheckResult::errored(id, 0.0, started, &e));
                continue;
            }
        };
        let n = f.len();
        let mut ok = true;
        for p in (2..=n).filter(|p| (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0)) {
            let pk = BigRational::from_integer(num_bigint::BigInt::from(p).pow(k - 1));
            let (mut prev, mut cur) = (1usize, p);
            while cur * p <= n {
                let lhs = f.a(p) * f.a(cur);
                let rhs = f.a(cur * p) + &pk * f.a(prev);
                ok &= lhs == rhs;
                prev = cur;
                cur *= p;
            }
        }
        out.push(exact(&id, ok, started, format!("exact over a(1..={n})")));
    }
    let started = Instant::now();
    let pos = eisenstein_q(12, 50).map(|e| e.coeffs()[1..].iter().all(|c| *c > BigRational::zero()));
    out.push(match pos {
        Ok(ok) => exact("modular/eisenstein_positive", ok, started, ""),
        Err(e) => CheckResult::errored("modular/eisenstein_positive", 0.0, started, &e),
    });
    let started = Instant::now();
    let norm = (|| -> Result<(f64, f64)> {
        let d = cfg.form(12)?;
        let n = petersson_norm_numeric(&d, cfg.petersson_tol)?;
        let doubled: Vec<f64> = d.float_coeffs().iter().map(|c| 2.0 * c).collect();
        Ok((n, petersson_with_coeffs(&doubled, 12, cfg.petersson_tol)? / 4.0))
    })();
    match norm {
        Ok((n, n2)) => {
            out.push(CheckResult::compare("modular/petersson_delta", n, 1.035_362_056_804_320_9e-6, cfg.petersson_tol, started));
            out.push(CheckResult::compare("modular/petersson_scaling", n2, n, 1e-12, started));
        }
        Err(e) => out.push(CheckResult::errored("modular/petersson_delta", cfg.petersson_tol, started, &e)),
    }
    out
}

fn lfunction_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x1f);
    SUPPORTED_WEIGHTS
        .iter()
        .map(|&k| {
            let id = format!("lfunctions/functional_equation/k{k}");
            let f = match cfg.form(k) {
                Ok(f) => f,
                Err(e) => return CheckResult::errored(id, cfg.special_tol, Instant::now(), &e),
            };
            let half = k as f64 / 2.0;
            let sign = if k % 4 == 0 { 1.0 } else { -1.0 };
            let terms = f.len().min(80);
            worst(
                &id,
                cfg.special_tol,
                (0..50).map(|_| {
                    let s = Complex64::new(half + rng.gen_range(-(half + 4.0)..(half + 4.0)), rng.gen_range(-5.0..5.0));
                    let a = completed_l(&LQuery::new(&f, s, terms))?;
                    let b = completed_l(&LQuery::new(&f, k as f64 - s, terms))?;
                    Ok((a, sign * b))
                }),
            )
        })
        .collect()
}

/// Σ_{n ≤ n_max} σ_α(n) e(xn/m) n^{-s} for real α.
fn exponential_series(s: Complex64, alpha: f64, x: u64, m: u64, n_max: usize) -> Complex64 {
    let sig = sigma_sieve(n_max, Complex64::new(alpha, 0.0));
    crate::special::sum::csum(
        (1..=n_max).map(|n| sig[n] * e2pi(((x * n as u64) % m) as f64 / m as f64) * real_pow(n as f64, -s)),
    )
}

fn convolution_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x2f);
    let mut out = Vec::new();
    out.push(worst(
        "convolutions/estermann_modulus_one",
        1e-9,
        (0..100).map(|_| {
            let s = Complex64::new(rng.gen_range(-6.0..12.0), rng.gen_range(-8.0..8.0));
            let alpha = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-2.0..2.0));
            let want = riemann_zeta(s)? * riemann_zeta(s - alpha)?;
            Ok((estermann_full(s, alpha, FractionSpec::new(1, 1)?)?, want))
        }),
    ));
    out.push(worst(
        "convolutions/estermann_vs_series",
        1e-7,
        (0..30).map(|_| {
            let m = rng.gen_range(1..=7u64);
            let x = loop {
                let x = rng.gen_range(1..=m);
                if gcd(x as i64, m as i64) == 1 {
                    break x;
                }
            };
            let alpha = rng.gen_range(-2.0..4.0);
            let s = Complex64::new(f64::max(alpha, 0.0) + rng.gen_range(3.0..5.0), rng.gen_range(-3.0..3.0));
            let got = estermann_full(s, Complex64::new(alpha, 0.0), FractionSpec::new(x, m)?)?;
            Ok((got, exponential_series(s, alpha, x, m, 100_000)))
        }),
    ));
    let queries: Vec<(f64, f64, u64, f64)> = (0..20)
        .map(|i| {
            if i == 0 {
                (10.0, -3.0, 1, 20.0)
            } else {
                let alpha = rng.gen_range(2.0..12.0);
                (alpha, rng.gen_range(-5.0..-1.5), rng.gen_range(1..=5), alpha + rng.gen_range(3.5..8.0))
            }
        })
        .collect();
    let tol = cfg.convolution_tol;
    out.push(worst(
        "convolutions/direct_vs_continued",
        tol,
        queries.into_iter().map(|(a, b, l, s)| {
            let q = ConvolutionQuery::real(a, b, l, s)?;
            Ok((d_continued(&q)?.value, d_direct(&q)?.value))
        }),
    ));
    let started = Instant::now();
    let z4 = riemann_zeta(Complex64::new(4.0, 0.0)).map(|z| z.re);
    out.push(match z4 {
        Ok(z4) => {
            let series: f64 = (1..=2000u64).map(|m| ramanujan_sum(m, 5) as f64 * (m as f64).powi(-4)).sum();
            CheckResult::compare("convolutions/ramanujan_expansion", z4 * series, 1.0 + 5f64.powi(-3), 1e-8, started)
        }
        Err(e) => CheckResult::errored("convolutions/ramanujan_expansion", 1e-8, started, &e),
    });
    out
}

fn kernel_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in [1u64, 2] {
        let started = Instant::now();
        let id = format!("kernel/unfolded_t6/k12_r1/l{l}");
        let r = (|| -> Result<(Complex64, Complex64, Complex64, Complex64)> {
            let p = canonical_params(12, 1)?.with_t(6.0)?;
            let tail = negative_tail(l, &p)?;
            let total = finite_part(l, &p)? + tail;
            let quad = inner_product_quadrature_oracle(l, &p, 10.0, 400)?;
            let (direct, _) = negative_tail_direct(l, &p, 100_000)?;
            Ok((total, quad.value, tail, direct))
        })();
        match r {
            Ok((total, quad, tail, direct)) => {
                out.push(CheckResult::compare(format!("{id}/quadrature"), total, quad, cfg.convolution_tol, started));
                out.push(CheckResult::compare(format!("{id}/double_sum"), tail, direct, 1e-7, started));
            }
            Err(e) => out.push(CheckResult::errored(id, cfg.convolution_tol, started, &e)),
        }
    }
    for (k, r) in [(12, 1), (12, 2), (16, 1)] {
        out.extend(check_kernel_eigen(k, r, 4, cfg));
    }
    for (k, r) in [(12, 1), (12, 3)] {
        out.push(check_lvalue_product(k, r, cfg));
    }
    for (k, r) in [(12, 1), (12, 2), (12, 3), (12, 4)] {
        out.push(check_theorem_main(k, r, cfg));
    }
    out
}

/// Run a named suite; failures are reported, unknown names are errors.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Report> {
    let started_at = chrono::Utc::now().to_rfc3339();
    let parts: Vec<fn(&VerifyConfig) -> Vec<CheckResult>> = match name {
        "special" => vec![special_suite],
        "modular" => vec![modular_suite],
        "lfunctions" => vec![lfunction_suite],
        "convolutions" => vec![convolution_suite],
        "kernel" => vec![kernel_suite],
        "all" => vec![special_suite, modular_suite, lfunction_suite, convolution_suite, kernel_suite],
        other => {
            return Err(Error::pre(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))))
        }
    };
    let results: Vec<CheckResult> = parts.par_iter().flat_map(|f| f(cfg)).collect();
    Ok(Report::new(name, started_at, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }

    #[test]
    fn special_suite_passes() {
        let r = run_suite("special", &VerifyConfig::default()).unwrap();
        for c in &r.results {
            assert!(c.passed(), "{}", c.summary_line());
        }
    }
}
