mod common;

use common::*;
use lkernel::convolution::{d_continued, d_direct, estermann_full, ConvolutionQuery, FractionSpec};
use lkernel::kernel::{
    alpha_coeff, canonical_params, finite_part, inner_product_quadrature_oracle, kernel_coefficient, negative_tail,
    KernelParams, Sign,
};
use lkernel::lfunc::{completed_l, LQuery};
use lkernel::modular::{eigenform, petersson_norm_numeric, rankin_cohen, Eigenform, QExpansion};
use lkernel::special::{hurwitz_zeta, lambda_completed, riemann_zeta};
use lkernel::{Complex64, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

struct Outcome {
    worst: f64,
    tol: f64,
    detail: String,
}

impl Outcome {
    fn new(worst: f64, tol: f64, detail: impl Into<String>) -> Self {
        Self { worst, tol, detail: detail.into() }
    }

    fn passed(&self) -> bool {
        self.worst <= self.tol
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn worst_of(errs: impl IntoIterator<Item = f64>) -> f64 {
    errs.into_iter().fold(0.0, |w, e| if e.is_nan() { f64::INFINITY } else { w.max(e) })
}

fn random_s(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let s = Complex64::new(rng.gen_range(-15.0..15.0), rng.gen_range(-30.0..30.0));
        if (s - 1.0).norm() > 0.05 {
            return s;
        }
    }
}

fn special_identities() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut errs = vec![rel(riemann_zeta(c(2.0))?, c(PI * PI / 6.0))];
    for _ in 0..50 {
        let s = random_s(&mut rng);
        let z = riemann_zeta(s)?;
        errs.push(rel(hurwitz_zeta(s, 1.0)?, z));
        errs.push(rel(hurwitz_zeta(s, 0.5)?, (Complex64::new(2.0, 0.0).powc(s) - 1.0) * z));
        if s.norm() > 0.05 {
            errs.push(rel(lambda_completed(s)?, lambda_completed(1.0 - s)?));
        }
    }
    let n = errs.len();
    Ok(Outcome::new(worst_of(errs), 1e-10, format!("{n} identity evaluations")))
}

fn exponential_series(s: Complex64, alpha: f64, x: u64, m: u64, n_max: usize) -> Complex64 {
    let sig = sigma_sieve_real(n_max, alpha);
    (1..=n_max)
        .rev()
        .map(|n| {
            let phase = 2.0 * PI * ((x * n as u64) % m) as f64 / m as f64;
            Complex64::from_polar(sig[n], phase) * Complex64::new(n as f64, 0.0).powc(-s)
        })
        .sum()
}

fn estermann() -> Result<(Outcome, Outcome)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut base = Vec::new();
    for _ in 0..100 {
        let s = Complex64::new(rng.gen_range(-6.0..12.0), rng.gen_range(-8.0..8.0));
        let alpha = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-2.0..2.0));
        let want = riemann_zeta(s)? * riemann_zeta(s - alpha)?;
        base.push(rel(estermann_full(s, alpha, FractionSpec::new(1, 1)?)?, want));
    }
    let mut series = Vec::new();
    for m in 1..=7u64 {
        for x in (1..=m).filter(|x| num_integer::gcd(*x, m) == 1) {
            let alpha: f64 = rng.gen_range(-2.0..4.0);
            let s = Complex64::new(alpha.max(0.0) + rng.gen_range(3.0..5.0), rng.gen_range(-3.0..3.0));
            let got = estermann_full(s, c(alpha), FractionSpec::new(x, m)?)?;
            series.push(rel(got, exponential_series(s, alpha, x, m, 100_000)));
        }
    }
    let n = series.len();
    Ok((
        Outcome::new(worst_of(base), 1e-9, "E(s,α;1/1) = ζ(s)ζ(s-α), 100 samples"),
        Outcome::new(worst_of(series), 1e-7, format!("vs exponential series, {n} fractions x/m with m ≤ 7")),
    ))
}

fn overlap() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut queries = vec![(10.0, -3.0, 1u64, 20.0)];
    while queries.len() < 20 {
        let alpha = rng.gen_range(2.0..12.0);
        queries.push((alpha, rng.gen_range(-5.0..-1.5), rng.gen_range(1..=5), alpha + rng.gen_range(3.5..8.0)));
    }
    let mut errs = Vec::new();
    for (a, b, l, s) in queries {
        let q = ConvolutionQuery::real(a, b, l, s)?;
        errs.push(rel(d_continued(&q)?.value, d_direct(&q)?.value));
    }
    Ok(Outcome::new(worst_of(errs), 1e-6, "20 queries, continuation vs direct sum"))
}

/// n < 0 tail as a plain double sum over j and n.
fn brute_negative_tail(l: u64, p: &KernelParams, n_max: usize) -> Result<f64> {
    let (k, a, big_s, t) = (p.k(), p.a(), p.eis_s(), p.t());
    let s1 = sigma_sieve_real(n_max, (2 * big_s - 1) as f64);
    let s2 = sigma_sieve_real(n_max + l as usize, (2 * a - 1) as f64);
    let mut total = 0.0;
    for j in p.j_range(Sign::Minus) {
        let w = (k / 2 + a - j - 1) as f64 + t;
        let alpha = alpha_coeff(j, Sign::Minus, p)?.to_f64().unwrap();
        let pre = alpha * (4.0 * PI).powf((1 - k / 2 - a) as f64 - t) * lkernel::special::gamma_real(w)?;
        let inner: f64 = (1..=n_max)
            .rev()
            .map(|n| {
                let nf = n as f64;
                s1[n] * s2[n + l as usize] / (nf.powi((big_s + j) as i32) * (nf + l as f64).powf(w))
            })
            .sum();
        total += pre * inner;
    }
    Ok(total)
}

fn unfolded() -> Result<Outcome> {
    let p = canonical_params(12, 1)?.with_t(6.0)?;
    let mut errs = Vec::new();
    let mut detail = Vec::new();
    for l in [1u64, 2] {
        let tail = negative_tail(l, &p)?;
        let total = finite_part(l, &p)? + tail;
        let brute = brute_negative_tail(l, &p, 100_000)?;
        let quad = inner_product_quadrature_oracle(l, &p, 10.0, 400)?.value;
        let (e1, e2) = (rel(tail, c(brute)), rel(total, quad));
        detail.push(format!("l={l}: double sum {e1:.1e}, quadrature {e2:.1e}"));
        errs.extend([e1, e2]);
    }
    Ok(Outcome::new(worst_of(errs), 1e-6, detail.join("; ")))
}

fn eigen_ratios() -> Result<Outcome> {
    let mut errs = Vec::new();
    let mut detail = Vec::new();
    for (k, r) in [(12i64, 1i64), (12, 2), (16, 1)] {
        let oracle = eigenform_oracle(k as u32, 4);
        let p = canonical_params(k, r)?;
        let c1 = kernel_coefficient(1, &p)?.value;
        let mut w: f64 = 0.0;
        for l in 2..=4u64 {
            let ratio = kernel_coefficient(l, &p)?.value / c1;
            let e = rel(ratio, c(big_to_f64(&oracle[l as usize])));
            w = w.max(e);
            errs.push(e);
        }
        detail.push(format!("({k},{r}) {w:.1e}"));
    }
    Ok(Outcome::new(worst_of(errs), 1e-4, format!("c_l/c_1 vs eta-product oracle, l ≤ 4: {}", detail.join(", "))))
}

fn delta_with(n: usize) -> Result<(Eigenform, Vec<f64>)> {
    let t = tau(n);
    let big: Vec<BigInt> = t[1..].iter().map(|x| BigInt::from(*x)).collect();
    let form = Eigenform::from_coefficients(12, to_rationals(&big))?;
    Ok((form, t.iter().map(|x| *x as f64).collect()))
}

fn lvalue_product() -> Result<Outcome> {
    let (form, _) = delta_with(100)?;
    let t = tau(3000).iter().map(|x| *x as f64).collect::<Vec<_>>();
    let p = canonical_params(12, 1)?;
    let c1 = kernel_coefficient(1, &p)?.value;
    let norm = petersson_norm_numeric(&form, 1e-6)?;
    // L*(2) = L*(10) by the functional equation (i^12 = 1)
    let want = completed_dirichlet(&t, 13) * completed_dirichlet(&t, 10);
    Ok(Outcome::new(
        rel(c1 * norm, c(want)),
        1e-3,
        format!("<Δ,Δ> = {norm:.10e}, L*(13)L*(2) = {want:.10e}"),
    ))
}

fn theorem_main() -> Result<Outcome> {
    let t = tau(3000).iter().map(|x| *x as f64).collect::<Vec<_>>();
    let c1 = |r| -> Result<Complex64> { Ok(kernel_coefficient(1, &canonical_params(12, r)?)?.value) };
    let odd = rel(c1(3)? / c1(1)?, c(completed_dirichlet(&t, 15) / completed_dirichlet(&t, 13)));
    let even = rel(c1(4)? / c1(2)?, c(completed_dirichlet(&t, 16) / completed_dirichlet(&t, 14)));
    Ok(Outcome::new(
        odd.max(even),
        1e-3,
        format!("L*(15)/L*(13) {odd:.1e}, L*(16)/L*(14) {even:.1e}"),
    ))
}

fn rankin_cohen_check() -> Result<Outcome> {
    let n = 20;
    let e4_constant = BigRational::new(1.into(), 240.into());
    let e6_constant = BigRational::new((-1).into(), 504.into());
    let scaled = |k: u32, c0: &BigRational| -> Result<QExpansion> {
        let e = eisenstein_normalized(k, n);
        QExpansion::new(k, to_rationals(&e).into_iter().map(|x| x * c0).collect())
    };
    let bracket = rankin_cohen(&scaled(4, &e4_constant)?, &scaled(6, &e6_constant)?, 1);
    let t = tau(n);
    let lambda = bracket.coeff(1).clone();
    let mut mismatches = usize::from(!is_zero(bracket.coeff(0)));
    for m in 1..=n {
        if *bracket.coeff(m) != &lambda * BigRational::from_integer(t[m].into()) {
            mismatches += 1;
        }
    }
    let nonzero = !is_zero(&lambda);
    Ok(Outcome::new(
        if nonzero { mismatches as f64 } else { f64::INFINITY },
        0.0,
        format!("[E_4,E_6]_1 = ({lambda}) Δ, {mismatches} mismatching coefficients of {}", n + 1),
    ))
}

fn functional_equation() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut errs = Vec::new();
    let mut same_forms = true;
    for k in [12u32, 16, 18, 20, 22, 26] {
        let oracle = eigenform_oracle(k, 100);
        let f = Eigenform::from_coefficients(k, to_rationals(&oracle[1..]))?;
        same_forms &= eigenform(k, 100)?.coefficients() == f.coefficients();
        let half = k as f64 / 2.0;
        let sign = if k % 4 == 0 { 1.0 } else { -1.0 };
        for _ in 0..50 {
            let s = Complex64::new(half + rng.gen_range(-(half + 4.0)..(half + 4.0)), rng.gen_range(-5.0..5.0));
            let a = completed_l(&LQuery::new(&f, s, 80))?;
            let b = completed_l(&LQuery::new(&f, k as f64 - s, 80))?;
            errs.push(rel(a, sign * b));
        }
    }
    let worst = if same_forms { worst_of(errs) } else { f64::INFINITY };
    Ok(Outcome::new(worst, 1e-10, "6 weights x 50 points; library eigenforms equal Δ·E_4^i·E_6^j"))
}

fn report(id: &str, name: &str, started: Instant, r: Result<Outcome>) -> bool {
    let ms = started.elapsed().as_millis();
    match r {
        Ok(o) => {
            let tag = if o.passed() { "PASS" } else { "FAIL" };
            println!("{tag} {id} {name}: worst rel err {:.3e} (tol {:.0e}) [{ms} ms] {}", o.worst, o.tol, o.detail);
            o.passed()
        }
        Err(e) => {
            println!("FAIL {id} {name}: error {e} [{ms} ms]");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    let t = Instant::now();
    ok &= report("1", "special-function identities", t, special_identities());
    let t = Instant::now();
    match estermann() {
        Ok((base, series)) => {
            let pass = base.passed() && series.passed();
            let tag = if pass { "PASS" } else { "FAIL" };
            let ms = t.elapsed().as_millis();
            println!(
                "{tag} 2 Estermann base case and series: {} {:.3e} (tol {:.0e}); {} {:.3e} (tol {:.0e}) [{ms} ms]",
                base.detail, base.worst, base.tol, series.detail, series.worst, series.tol
            );
            ok &= pass;
        }
        Err(e) => ok &= report("2", "Estermann base case and series", t, Err(e)),
    }
    let t = Instant::now();
    ok &= report("3", "shifted-convolution continuation", t, overlap());
    let t = Instant::now();
    ok &= report("4", "unfolded-integral consistency at t = 6", t, unfolded());
    let t = Instant::now();
    ok &= report("5", "kernel eigenform proportionality", t, eigen_ratios());
    let t = Instant::now();
    ok &= report("6", "L-value product with Petersson norm", t, lvalue_product());
    let t = Instant::now();
    ok &= report("7", "L*-ratios through the kernel", t, theorem_main());
    let t = Instant::now();
    ok &= report("8", "Rankin-Cohen bracket", t, rankin_cohen_check());
    let t = Instant::now();
    ok &= report("9", "L-function functional equation", t, functional_equation());
    if !ok {
        std::process::exit(1);
    }
}
