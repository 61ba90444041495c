use num_complex::Complex64;
use rayon::prelude::*;

use super::estermann::{hurwitz_row, ramanujan_table};
use super::{ContinuationMethod, ConvolutionQuery, DValue, Method, Strategy};
use crate::error::{Error, Result};
use crate::special::sum::{csum, CSum};
use crate::special::{
    factorial_f64, gcd, hurwitz_any, mod_inverse, real_pow, riemann_zeta, sigma, HurwitzFamily,
};

const CALIBRATION_MODULI: u64 = 20;
const PROGRESSION_MARGIN: f64 = 0.5;
const BATCH: u64 = 8;
const MAX_BLOCKS: u64 = 4000;
const TAYLOR_MAX: usize = 80;
const BOUNDARY_RADIUS: f64 = 0.25;
const BOUNDARY_NODES: usize = 32;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Analytic continuation of D_l to Re s ≥ Re α + Re β + 1 (needs Re β < -1).
pub fn d_continued(q: &ConvolutionQuery) -> Result<DValue> {
    let edge = q.alpha + q.beta + 1.0;
    if q.beta.re >= -1.0 {
        return Err(Error::pre(format!("continuation needs Re β < -1, got β = {}", q.beta)));
    }
    if q.s.re < edge.re - 1e-12 {
        return Err(Error::pre(format!(
            "s = {} lies left of the continuation region Re s >= {}",
            q.s, edge.re
        )));
    }
    if q.s == one() || q.s - q.alpha == one() {
        return Err(Error::pole("shifted convolution", q.s));
    }
    if (q.s - edge).norm() < 1e-9 {
        return boundary(q);
    }
    match q.method {
        ContinuationMethod::ModulusSeries => modulus_series(q),
        ContinuationMethod::Progression => progression(q),
        ContinuationMethod::Auto if q.s.re > 1.0 + PROGRESSION_MARGIN => progression(q),
        ContinuationMethod::Auto => modulus_series(q),
    }
}

fn modulus_term(
    m: u64,
    q: &ConvolutionQuery,
    fa: &HurwitzFamily,
    fb: &HurwitzFamily,
    head: &[Complex64],
) -> Result<Complex64> {
    let za = hurwitz_row(fa, m)?;
    let zb = hurwitz_row(fb, m)?;
    let c = ramanujan_table(m);
    let l = q.l % m;
    let mut acc = CSum::new();
    for u in 1..=m {
        let mut inner = CSum::new();
        for v in 1..=m {
            let r = ((u * v) % m + m - l) % m;
            let cm = c[r as usize];
            if cm != 0 {
                inner.add(zb[(v - 1) as usize] * cm as f64);
            }
        }
        acc.add(za[(u - 1) as usize] * inner.value());
    }
    let mut s = real_pow(m as f64, q.alpha - 2.0 * q.s) * acc.value();
    for (n, h) in head.iter().enumerate().skip(1) {
        let r = ((n as u64 % m) + m - l) % m;
        s -= h * c[r as usize] as f64;
    }
    Ok(real_pow(m as f64, q.beta - 1.0) * s)
}

fn modulus_series(q: &ConvolutionQuery) -> Result<DValue> {
    let kappa = (q.alpha + q.beta - q.s).re;
    if kappa >= -1.0 {
        return Err(Error::pre(format!(
            "modulus series diverges: terms decay like m^{kappa:.3}"
        )));
    }
    let fa = HurwitzFamily::new(q.s - q.alpha)?;
    let fb = HurwitzFamily::new(q.s)?;
    let head: Vec<Complex64> = (0..=q.l)
        .map(|n| if n == 0 { Complex64::new(0.0, 0.0) } else { sigma(n, q.alpha) * real_pow(n as f64, -q.s) })
        .collect();
    let zb = riemann_zeta(1.0 - q.beta)?;
    let terms = |lo: u64, hi: u64| -> Result<Vec<Complex64>> {
        (lo..=hi)
            .into_par_iter()
            .map(|m| modulus_term(m, q, &fa, &fb, &head))
            .collect()
    };
    let mut all = terms(1, CALIBRATION_MODULI)?;
    let c = 4.0
        * all
            .iter()
            .enumerate()
            .map(|(i, t)| t.norm() * ((i + 1) as f64).powf(-kappa))
            .fold(0.0, f64::max);
    let scale = (zb * csum(all.iter().copied())).norm().clamp(f64::MIN_POSITIVE, 1.0);
    let decay = -kappa - 1.0;
    let need = (c * zb.norm() / (decay * q.tol * scale)).powf(1.0 / decay).ceil();
    let m_final = 2.0 * need.max(CALIBRATION_MODULI as f64);
    if m_final > q.m_max as f64 {
        return Err(Error::NotConverged(format!(
            "modulus series needs about {m_final:.0} moduli, cap is {}",
            q.m_max
        )));
    }
    let m_final = m_final as u64;
    all.extend(terms(CALIBRATION_MODULI + 1, m_final)?);
    let value = zb * csum(all);
    let bound = zb.norm() * c * (m_final as f64).powf(kappa + 1.0) / decay;
    Ok(DValue {
        value,
        strategy: Strategy::Continued,
        method: Method::ModulusSeries,
        terms: m_final as usize,
        error_bound: bound,
    })
}

/// Taylor data shared by all residue classes at one s.
struct ProgressionData {
    /// ζ(z + j, ·) for each j (None where z + j = 1)
    families: Vec<Option<HurwitzFamily>>,
    /// (z)_j / j!, and (z)_{j-1} / j! at the removable pole
    poch: Vec<Complex64>,
    d0: u64,
}

impl ProgressionData {
    fn new(q: &ConvolutionQuery) -> Result<Self> {
        let z = q.s - q.alpha;
        let mut families = Vec::with_capacity(TAYLOR_MAX);
        let mut poch = Vec::with_capacity(TAYLOR_MAX);
        let mut rising = one();
        let mut prev = one();
        for j in 0..TAYLOR_MAX {
            let zj = z + j as f64;
            let jf = factorial_f64(j as u64);
            if zj == one() {
                families.push(None);
                poch.push(prev / jf);
            } else {
                families.push(Some(HurwitzFamily::new(zj)?));
                poch.push(rising / jf);
            }
            prev = rising;
            rising *= zj;
        }
        Ok(Self { families, poch, d0: (32 * q.l).max(64) })
    }
}

/// T_b = Σ over residues ρ mod b of the progression Dirichlet series.
fn block(b: u64, q: &ConvolutionQuery, data: &ProgressionData) -> Result<Complex64> {
    let l = q.l;
    let mut total = CSum::new();
    for rho in 0..b {
        let g = gcd(rho as i64, b as i64) as u64;
        if l % g != 0 {
            continue;
        }
        let bp = b / g;
        let lp = l / g;
        let rp = (rho / g) % bp;
        let gb = real_pow(g as f64, q.beta);
        let mut d = if rp == 0 { bp } else { rp };
        while d <= data.d0 {
            let c = if d == 1 {
                1
            } else {
                let c = (lp % d) * mod_inverse((bp % d) as i64, d as i64) as u64 % d;
                if c == 0 { d } else { c }
            };
            let head = real_pow((g * d) as f64, q.beta) * real_pow(d as f64, q.alpha - q.s);
            total.add(head * data.families[0].as_ref().unwrap().eval(c as f64 / d as f64)?);
            d += bp;
        }
        let start = d as f64 / bp as f64;
        let theta = if bp == 1 {
            0.0
        } else {
            let y = (bp as i64 - mod_inverse(rp as i64, bp as i64)) as u64 % bp;
            ((lp % bp) * y % bp) as f64 / bp as f64
        };
        let eps = lp as f64 / bp as f64;
        let bpf = bp as f64;
        let mut taylor = CSum::new();
        let mut pw = 1.0;
        for j in 0..TAYLOR_MAX {
            let w = q.s - q.alpha - q.beta + j as f64;
            let tj = match &data.families[j] {
                Some(f) => data.poch[j] * f.eval(if theta > 0.0 { theta } else { 1.0 })?,
                None => data.poch[j],
            };
            let term = gb * pw * tj * real_pow(bpf, -w) * hurwitz_any(w, start)?;
            taylor.add(term);
            if j >= 2 && term.norm() <= 1e-18 * taylor.value().norm() {
                break;
            }
            pw *= -eps;
        }
        total.add(taylor.value());
        if theta == 0.0 {
            total.add(
                gb * real_pow(eps, q.alpha - q.s)
                    * real_pow(bpf, q.beta)
                    * hurwitz_any(-q.beta, start)?,
            );
        }
    }
    Ok(total.value())
}

/// Progression evaluation; returns (value, blocks, tail estimate).
fn progression_raw(q: &ConvolutionQuery) -> Result<(Complex64, usize, f64)> {
    let sigma_re = q.s.re;
    if sigma_re <= 1.0 {
        return Err(Error::pre(format!("progression expansion needs Re s > 1, got {}", q.s)));
    }
    let data = ProgressionData::new(q)?;
    let mut corr = CSum::new();
    for n in 1..q.l {
        corr.add(sigma(n, q.alpha) * sigma(q.l - n, q.beta) * real_pow(n as f64, -q.s));
    }
    corr.add(sigma(q.l, q.alpha) * real_pow(q.l as f64, -q.s) * riemann_zeta(-q.beta)?);
    let corr = corr.value();
    let mut acc = CSum::new();
    let mut tmax: f64 = 0.0;
    let mut b = 1;
    let tail = loop {
        let hi = b + BATCH - 1;
        let blocks: Vec<Complex64> = (b..=hi)
            .into_par_iter()
            .map(|bb| block(bb, q, &data).map(|t| t * real_pow(bb as f64, -q.s)))
            .collect::<Result<_>>()?;
        for (i, t) in blocks.iter().enumerate() {
            tmax = tmax.max(t.norm() * ((b + i as u64) as f64).powf(sigma_re));
            acc.add(*t);
        }
        b = hi + 1;
        let est = 4.0 * tmax * (hi as f64).powf(1.0 - sigma_re) / (sigma_re - 1.0);
        if est <= q.tol * (acc.value() - corr).norm().min(1.0) || est == 0.0 {
            break est;
        }
        if b > MAX_BLOCKS {
            return Err(Error::NotConverged(format!(
                "progression blocks did not settle by b = {MAX_BLOCKS} (tail {est:.2e})"
            )));
        }
    };
    Ok((acc.value() - corr, (b - 1) as usize, tail))
}

fn progression(q: &ConvolutionQuery) -> Result<DValue> {
    let (value, terms, tail) = progression_raw(q)?;
    Ok(DValue {
        value,
        strategy: Strategy::Continued,
        method: Method::Progression,
        terms,
        error_bound: tail,
    })
}

/// Mean value of D over a circle around s = α + β + 1, where the pole terms cancel.
fn boundary(q: &ConvolutionQuery) -> Result<DValue> {
    let b = q.beta;
    let odd_negative = b.im == 0.0 && b.re < 0.0 && b.re.fract() == 0.0 && (b.re as i64) % 2 != 0;
    if !odd_negative {
        return Err(Error::pole("shifted convolution at s = α+β+1", q.s));
    }
    let radius = BOUNDARY_RADIUS.min((q.s.re - 1.0) / 3.0);
    if radius <= 0.0 {
        return Err(Error::pre(format!("boundary point {} too close to Re s = 1", q.s)));
    }
    let real = q.alpha.im == 0.0 && q.s.im == 0.0;
    // D(conj s) = conj D(s) for real α, β
    let nodes: Vec<usize> = if real { (0..=BOUNDARY_NODES / 2).collect() } else { (0..BOUNDARY_NODES).collect() };
    let evals: Vec<(Complex64, usize, f64)> = nodes
        .par_iter()
        .map(|&k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / BOUNDARY_NODES as f64;
            progression_raw(&q.at(q.s + Complex64::from_polar(radius, theta)))
        })
        .collect::<Result<_>>()?;
    let weight = |k: usize| if real && k != 0 && k != BOUNDARY_NODES / 2 { 2.0 } else { 1.0 };
    let mean = |stride: usize| {
        let mut acc = CSum::new();
        for (&k, e) in nodes.iter().zip(&evals).filter(|(k, _)| *k % stride == 0) {
            acc.add(e.0 * weight(k));
        }
        let v = acc.value() * (stride as f64 / BOUNDARY_NODES as f64);
        if real { Complex64::new(v.re, 0.0) } else { v }
    };
    let value = mean(1);
    let tail = evals.iter().map(|e| e.2).fold(0.0, f64::max);
    Ok(DValue {
        value,
        strategy: Strategy::Continued,
        method: Method::BoundaryMean,
        terms: evals.iter().map(|e| e.1).max().unwrap_or(0),
        error_bound: (value - mean(2)).norm() + tail,
    })
}
