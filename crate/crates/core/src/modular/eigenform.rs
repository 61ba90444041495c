use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qexp::{eisenstein_q, QExpansion};
use crate::error::{Error, Result};
use crate::special::ratio_to_f64;

pub const SUPPORTED_WEIGHTS: [u32; 6] = [12, 16, 18, 20, 22, 26];

/// Normalized level-one Hecke eigenform, a(1) = 1, coefficients a(1..=N).
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenform {
    weight: u32,
    // index 0 holds a(0) = 0 so that coeffs[n] = a(n)
    coeffs: Vec<BigRational>,
    float_coeffs: Vec<f64>,
}

impl Eigenform {
    /// Wrap exact coefficients a(1..=N) after checking weight and a(1) = 1.
    pub fn from_coefficients(weight: u32, a: Vec<BigRational>) -> Result<Self> {
        if !SUPPORTED_WEIGHTS.contains(&weight) {
            return Err(Error::Unsupported(format!("weight {weight} has no one-dimensional cusp space here")));
        }
        if a.is_empty() || !a[0].is_one() {
            return Err(Error::pre("eigenform must be normalized with a(1) = 1"));
        }
        let mut coeffs = Vec::with_capacity(a.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(a);
        let float_coeffs = coeffs.iter().map(ratio_to_f64).collect();
        Ok(Self { weight, coeffs, float_coeffs })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of stored coefficients N (a(1..=N)).
    pub fn len(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn a(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn af(&self, n: usize) -> f64 {
        self.float_coeffs[n]
    }

    /// a(1..=N) exactly.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs[1..]
    }

    /// Floating copies indexed by n, entry 0 is a(0) = 0.
    pub fn float_coeffs(&self) -> &[f64] {
        &self.float_coeffs
    }

    pub fn to_qexpansion(&self) -> QExpansion {
        QExpansion::new(self.weight, self.coeffs.clone()).expect("weight is supported")
    }

    /// Same form with fewer coefficients.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        Self {
            weight: self.weight,
            coeffs: self.coeffs[..=n].to_vec(),
            float_coeffs: self.float_coeffs[..=n].to_vec(),
        }
    }
}

fn int_series_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Δ = q Π (1 - q^n)^24 with a(1..=n_terms).
pub fn delta_q(n_terms: usize) -> Result<Eigenform> {
    if n_terms < 1 {
        return Err(Error::pre("n_terms must be at least 1"));
    }
    let m = n_terms - 1;
    // Jacobi: Π(1-q^n)^3 = Σ_k (-1)^k (2k+1) q^{k(k+1)/2}
    let mut cube = vec![BigInt::zero(); m + 1];
    let mut k = 0usize;
    while k * (k + 1) / 2 <= m {
        let v = BigInt::from(2 * k + 1);
        cube[k * (k + 1) / 2] = if k % 2 == 0 { v } else { -v };
        k += 1;
    }
    let p6 = int_series_mul(&cube, &cube, m);
    let p12 = int_series_mul(&p6, &p6, m);
    let p = int_series_mul(&p12, &p12, m);
    Eigenform::from_coefficients(12, p.into_iter().map(BigRational::from_integer).collect())
}

/// The unique normalized cusp eigenform of the given weight.
pub fn eigenform(weight: u32, n_terms: usize) -> Result<Eigenform> {
    let (e4_pow, e6_pow) = match weight {
        12 => (0, 0),
        16 => (1, 0),
        18 => (0, 1),
        20 => (2, 0),
        22 => (1, 1),
        26 => (2, 1),
        _ => return Err(Error::Unsupported(format!("weight {weight} is not one of {SUPPORTED_WEIGHTS:?}"))),
    };
    let delta = delta_q(n_terms)?;
    if weight == 12 {
        return Ok(delta);
    }
    let e4 = eisenstein_q(4, n_terms)?;
    let e6 = eisenstein_q(6, n_terms)?;
    let mut f = delta.to_qexpansion();
    for _ in 0..e4_pow {
        f = f.mul(&e4);
    }
    for _ in 0..e6_pow {
        f = f.mul(&e6);
    }
    let lead = f.coeff(1).clone();
    let c = BigRational::one() / lead;
    let coeffs: Vec<BigRational> = f.coeffs()[1..].iter().map(|a| a * &c).collect();
    Eigenform::from_coefficients(weight, coeffs)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn tau_values() {
        let d = delta_q(10).unwrap();
        let tau = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920];
        for (n, t) in tau.iter().enumerate() {
            assert_eq!(*d.a(n + 1), z(*t));
        }
        assert_eq!(d.len(), 10);
    }

    #[test]
    fn weight_16_multiplicative() {
        let f = eigenform(16, 12).unwrap();
        assert_eq!(*f.a(2), z(216));
        assert_eq!(f.a(6).clone(), f.a(2) * f.a(3));
    }

    #[test]
    fn weight_12_is_delta() {
        assert_eq!(eigenform(12, 20).unwrap(), delta_q(20).unwrap());
        assert!(eigenform(14, 5).is_err());
    }

    #[test]
    fn rejects_unnormalized() {
        let err = Eigenform::from_coefficients(12, vec![z(2), z(-48)]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
