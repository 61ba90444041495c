use clap::{Args, Parser, Subcommand, ValueEnum};
use lkernel::Complex64;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "lkernel", version, about = "L-value kernel coefficients, shifted convolutions and their checks")]
pub struct Cli {
    #[command(flatten)]
    pub shared: Shared,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Shared {
    /// Target tolerance for series evaluations
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Cap on direct-summation terms (also the coefficient count for L-values)
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Cap on the modulus of the Ramanujan expansion
    #[arg(long, global = true)]
    pub max_modulus: Option<u64>,
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Eigenform coefficient cache (overrides LKERNEL_CACHE_DIR)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Riemann zeta ζ(s)
    Zeta {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
    },
    /// Hurwitz zeta ζ(s, x) for 0 < x ≤ 1
    Hurwitz {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(allow_hyphen_values = true)]
        x: f64,
    },
    /// Shifted convolution D_l(α, β; s)
    Dshift {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        beta: Complex64,
        #[arg(long, short = 'l')]
        shift: u64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Completed L-value L*_f(s) (or L_f(s) with --plain) of the level-one eigenform of weight k
    Lvalue {
        #[arg(long, short = 'k')]
        weight: u32,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long)]
        plain: bool,
    },
    /// Fourier coefficients of the kernel for canonical parameters (k, r)
    KernelCoeff {
        #[arg(long, short = 'k')]
        weight: i64,
        #[arg(long, short = 'r')]
        r: i64,
        /// Coefficient indices, e.g. 1,2,3
        #[arg(long, short = 'l', value_delimiter = ',', default_value = "1")]
        l: Vec<u64>,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum StrategyArg {
    Direct,
    Continued,
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MethodArg {
    Auto,
    ModulusSeries,
    Progression,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SuiteArg {
    Special,
    Modular,
    Lfunctions,
    Convolutions,
    Kernel,
    All,
}

impl SuiteArg {
    pub fn name(self) -> &'static str {
        match self {
            SuiteArg::Special => "special",
            SuiteArg::Modular => "modular",
            SuiteArg::Lfunctions => "lfunctions",
            SuiteArg::Convolutions => "convolutions",
            SuiteArg::Kernel => "kernel",
            SuiteArg::All => "all",
        }
    }
}

/// Accepts "2", "-1.5", "0.5+14.1i", "3-2i", "2i".
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot read {text:?} as a complex number");
    if let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) {
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(i, c)| (*c == '+' || *c == '-') && !matches!(body.as_bytes()[i - 1], b'e' | b'E'))
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re: f64 = re.parse().map_err(|_| bad())?;
        let im: f64 = im.parse().map_err(|_| bad())?;
        return Ok(Complex64::new(re, im));
    }
    t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad())
}
