use num_complex::Complex64;

/// x^s for real x > 0.
#[inline]
pub fn real_pow(x: f64, s: Complex64) -> Complex64 {
    if s.im == 0.0 {
        Complex64::new(x.powf(s.re), 0.0)
    } else {
        let l = x.ln();
        let m = (s.re * l).exp();
        let (sn, cs) = (s.im * l).sin_cos();
        Complex64::new(m * cs, m * sn)
    }
}

/// sin(πx) with exact zeros at the integers.
pub fn sinpi(x: f64) -> f64 {
    let y = x - 2.0 * (x / 2.0).floor();
    let k = (2.0 * y).round();
    let f = y - k / 2.0;
    let (s, c) = (std::f64::consts::PI * f).sin_cos();
    match k as i64 {
        0 | 4 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

pub fn cospi(x: f64) -> f64 {
    let y = x - 2.0 * (x / 2.0).floor();
    let k = (2.0 * y).round();
    let f = y - k / 2.0;
    let (s, c) = (std::f64::consts::PI * f).sin_cos();
    match k as i64 {
        0 | 4 => c,
        1 => -s,
        2 => -c,
        _ => s,
    }
}

/// sin(πz) for complex z.
pub fn sinpi_c(z: Complex64) -> Complex64 {
    let b = std::f64::consts::PI * z.im;
    Complex64::new(sinpi(z.re) * b.cosh(), cospi(z.re) * b.sinh())
}

/// e(x) = exp(2πix).
pub fn e2pi(x: f64) -> Complex64 {
    let y = x - x.floor();
    Complex64::new(cospi(2.0 * y), sinpi(2.0 * y))
}

pub fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}
