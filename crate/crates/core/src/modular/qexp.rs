use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::special::{bernoulli, binom_int, ratio_to_f64, sigma_exact};

/// Truncated q-expansion Σ_{n≤N} a(n) q^n of a level-one form, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    weight: u32,
    coeffs: Vec<BigRational>,
}

impl QExpansion {
    pub fn new(weight: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if weight < 4 || weight % 2 != 0 {
            return Err(Error::pre(format!("weight must be even and at least 4, got {weight}")));
        }
        if coeffs.len() < 2 {
            return Err(Error::pre("need coefficients a(0) and a(1) at least"));
        }
        Ok(Self { weight, coeffs })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Highest stored index N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn is_cusp(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(ratio_to_f64).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { weight: self.weight, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product, truncated to the shorter expansion.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            weight: self.weight + other.weight,
            coeffs: mul_trunc(&self.coeffs, &other.coeffs, n),
        }
    }

    /// D = q d/dq applied r times, weight left unchanged (the caller owns it).
    fn theta(&self, r: u32) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a * BigRational::from_integer(BigInt::from(n).pow(r)))
            .collect()
    }

    /// If self = c·other coefficientwise (other not identically zero), return c.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        let n = self.order().min(other.order());
        let mut c: Option<BigRational> = None;
        for i in 0..=n {
            let (a, b) = (&self.coeffs[i], &other.coeffs[i]);
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let q = a / b;
            match &c {
                None => c = Some(q),
                Some(c0) if *c0 != q => return None,
                _ => {}
            }
        }
        c
    }
}

pub(crate) fn mul_trunc(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// E_{2m} = -B_{2m}/(4m) + Σ σ_{2m-1}(n) q^n, coefficients 0..=n_terms.
pub fn eisenstein_q(two_m: u32, n_terms: usize) -> Result<QExpansion> {
    if two_m < 4 || two_m % 2 != 0 {
        return Err(Error::pre(format!("Eisenstein weight must be even and >= 4, got {two_m}")));
    }
    if n_terms < 1 {
        return Err(Error::pre("n_terms must be at least 1"));
    }
    let mut coeffs = Vec::with_capacity(n_terms + 1);
    coeffs.push(eisenstein_constant(two_m));
    for n in 1..=n_terms {
        coeffs.push(BigRational::from_integer(sigma_exact(n as u64, two_m - 1)));
    }
    QExpansion::new(two_m, coeffs)
}

/// -B_{2m}/(4m); also the σ_{2m-1}(0) convention.
pub fn eisenstein_constant(two_m: u32) -> BigRational {
    -bernoulli(two_m as usize) / BigRational::from_integer(BigInt::from(2 * two_m))
}

/// [f, g]_n = Σ_r (-1)^r C(k1+n-1, n-r) C(k2+n-1, r) D^r f · D^{n-r} g.
pub fn rankin_cohen(f: &QExpansion, g: &QExpansion, n: u32) -> QExpansion {
    let (k1, k2) = (f.weight as i64, g.weight as i64);
    let len = f.order().min(g.order());
    let mut acc = vec![BigRational::zero(); len + 1];
    for r in 0..=n {
        let c = binom_int(k1 + n as i64 - 1, (n - r) as i64) * binom_int(k2 + n as i64 - 1, r as i64);
        let c = if r % 2 == 1 { -c } else { c };
        if c.is_zero() {
            continue;
        }
        let prod = mul_trunc(&f.theta(r), &g.theta(n - r), len);
        let c = BigRational::from_integer(c);
        for (a, p) in acc.iter_mut().zip(prod) {
            *a += &c * p;
        }
    }
    QExpansion { weight: f.weight + g.weight + 2 * n, coeffs: acc }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn eisenstein_examples() {
        let e4 = eisenstein_q(4, 3).unwrap();
        assert_eq!(e4.coeffs(), &[q(1, 240), q(1, 1), q(9, 1), q(28, 1)]);
        // -B_6/12 with B_6 = 1/42
        assert_eq!(*eisenstein_q(6, 2).unwrap().coeff(0), q(-1, 504));
        assert_eq!(*eisenstein_q(12, 1).unwrap().coeff(0), q(691, 65520));
        assert!(eisenstein_q(5, 3).is_err());
    }

    #[test]
    fn bracket_degree_zero_is_product() {
        let e4 = eisenstein_q(4, 10).unwrap();
        let e6 = eisenstein_q(6, 10).unwrap();
        assert_eq!(rankin_cohen(&e4, &e6, 0), e4.mul(&e6));
    }

    #[test]
    fn bracket_odd_self_vanishes() {
        let e4 = eisenstein_q(4, 12).unwrap();
        let b = rankin_cohen(&e4, &e4, 1);
        assert!(b.coeffs().iter().all(|c| c.is_zero()));
        assert_eq!(b.weight(), 10);
    }
}
