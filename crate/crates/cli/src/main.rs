mod args;

use clap::Parser;
use lkernel::convolution::{evaluate, ContinuationMethod, ConvolutionQuery, Strategy};
use lkernel::kernel::{canonical_params, kernel_coefficient_with_tol, KernelCoefficientReport};
use lkernel::lfunc::{completed_l, l_value, LQuery};
use lkernel::special::{hurwitz_zeta, riemann_zeta};
use lkernel::verify::{fmt17, resolve_cache_dir, run_suite, Quantity, VerifyConfig};
use lkernel::{Complex64, Error};
use serde_json::{json, Value};
use std::process::ExitCode;

use args::{Cli, Command, MethodArg, Shared, StrategyArg};

const DEFAULT_TOL: f64 = 1e-12;
const DEFAULT_L_TERMS: usize = 100;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.shared.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            if cli.shared.json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}

fn q(z: Complex64) -> Value {
    serde_json::to_value(Quantity::Complex(z)).expect("quantity serializes")
}

fn emit(shared: &Shared, value: Value, human: String) {
    if shared.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json serializes"));
    } else {
        println!("{human}");
    }
}

fn show(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt17(z.re)
    } else {
        format!("{} {} {}i", fmt17(z.re), if z.im < 0.0 { '-' } else { '+' }, fmt17(z.im.abs()))
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let shared = &cli.shared;
    match &cli.command {
        Command::Zeta { s } => {
            let v = riemann_zeta(*s)?;
            emit(shared, json!({ "s": q(*s), "value": q(v) }), show(v));
        }
        Command::Hurwitz { s, x } => {
            let v = hurwitz_zeta(*s, *x)?;
            emit(shared, json!({ "s": q(*s), "x": fmt17(*x), "value": q(v) }), show(v));
        }
        Command::Dshift { alpha, beta, shift, s, strategy, method } => {
            let query = ConvolutionQuery::new(*alpha, *beta, *shift, *s)?
                .with_tol(shared.tol.unwrap_or(DEFAULT_TOL))?
                .with_strategy(match strategy {
                    StrategyArg::Direct => Strategy::Direct,
                    StrategyArg::Continued => Strategy::Continued,
                    StrategyArg::Auto => Strategy::Auto,
                })
                .with_method(match method {
                    MethodArg::Auto => ContinuationMethod::Auto,
                    MethodArg::ModulusSeries => ContinuationMethod::ModulusSeries,
                    MethodArg::Progression => ContinuationMethod::Progression,
                });
            let caps = (shared.max_terms.unwrap_or(query.n_max), shared.max_modulus.unwrap_or(query.m_max));
            let query = query.with_caps(caps.0, caps.1);
            let d = evaluate(&query)?;
            let value = json!({
                "alpha": q(*alpha),
                "beta": q(*beta),
                "l": shift,
                "s": q(*s),
                "value": q(d.value),
                "strategy": d.strategy,
                "method": d.method,
                "terms": d.terms,
                "error_bound": fmt17(d.error_bound),
            });
            let human = format!(
                "{}\n  strategy={:?} method={:?} terms={} error_bound={:.3e}",
                show(d.value),
                d.strategy,
                d.method,
                d.terms,
                d.error_bound
            );
            emit(shared, value, human);
        }
        Command::Lvalue { weight, s, plain } => {
            let cfg = verify_config(shared);
            let form = cfg.form(*weight)?;
            let n = shared.max_terms.unwrap_or(DEFAULT_L_TERMS).min(form.len());
            let lq = LQuery::new(&form, *s, n);
            let v = if *plain { l_value(&lq)? } else { completed_l(&lq)? };
            let kind = if *plain { "plain" } else { "completed" };
            emit(
                shared,
                json!({ "weight": weight, "s": q(*s), "kind": kind, "n_terms": n, "value": q(v) }),
                show(v),
            );
        }
        Command::KernelCoeff { weight, r, l } => {
            let p = canonical_params(*weight, *r)?;
            let tol = shared.tol.unwrap_or(DEFAULT_TOL);
            let reports = l
                .iter()
                .map(|&li| kernel_coefficient_with_tol(li, &p, tol))
                .collect::<Result<Vec<_>, _>>()?;
            let value = json!({
                "k": weight,
                "r": r,
                "params": { "a": p.a(), "b": p.b(), "s": p.s(), "S": p.eis_s(), "m": p.m() },
                "coefficients": reports.iter().map(kernel_json).collect::<Vec<_>>(),
            });
            let human = reports.iter().map(kernel_human).collect::<Vec<_>>().join("\n");
            emit(shared, value, human);
        }
        Command::Verify { suite } => {
            let report = run_suite(suite.name(), &verify_config(shared))?;
            if shared.json {
                println!("{}", report.to_json());
            } else {
                for r in &report.results {
                    println!("{}", r.summary_line());
                }
                println!("{}: {} passed, {} failed", report.suite, report.passed, report.failed);
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_config(shared: &Shared) -> VerifyConfig {
    let mut cfg = VerifyConfig {
        cache_dir: Some(resolve_cache_dir(shared.cache_dir.as_deref())),
        ..VerifyConfig::default()
    };
    if let Some(n) = shared.max_terms {
        cfg.n_terms = cfg.n_terms.max(n);
    }
    cfg
}

fn kernel_json(r: &KernelCoefficientReport) -> Value {
    json!({
        "l": r.l,
        "value": q(r.value),
        "prefactor": fmt17(r.prefactor),
        "finite": q(r.finite),
        "tail": q(r.tail),
        "growth": q(r.growth),
        "normalization": fmt17(r.normalization),
        "raw_pairing": q(r.raw_pairing()),
        "tail_terms": r.contributions.iter().map(|c| json!({
            "j": c.index.j,
            "mu": c.index.mu,
            "nu": c.index.nu,
            "argument": fmt17(c.argument),
            "weight": q(c.weight),
            "d": q(c.d.value),
            "method": c.d.method,
        })).collect::<Vec<_>>(),
    })
}

fn kernel_human(r: &KernelCoefficientReport) -> String {
    let mut out = format!(
        "c_{} = {}\n  finite = {}\n  tail   = {}\n  growth = {}\n  prefactor = {}  normalization = {}",
        r.l,
        show(r.value),
        show(r.finite),
        show(r.tail),
        show(r.growth),
        fmt17(r.prefactor),
        fmt17(r.normalization)
    );
    for c in &r.contributions {
        out.push_str(&format!(
            "\n  D_{}(nu={}) j={} mu={}: {} ({:?})",
            r.l,
            c.index.nu,
            c.index.j,
            c.index.mu,
            show(c.d.value),
            c.d.method
        ));
    }
    out
}
