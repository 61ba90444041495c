use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// B_0..=B_n from Σ_{j<m+1} C(m+1, j) B_j = 0, with B_1 = -1/2.
pub fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // C(m+1, j) built incrementally
        let mut c = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * BigRational::from_integer(c.clone());
            }
            c = c * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(n: usize) -> BigRational {
    if n < FLOAT_TABLE_LEN {
        return exact_table()[n].clone();
    }
    bernoulli_table(n).pop().unwrap()
}

const FLOAT_TABLE_LEN: usize = 128;

fn exact_table() -> &'static [BigRational] {
    static T: OnceLock<Vec<BigRational>> = OnceLock::new();
    T.get_or_init(|| bernoulli_table(FLOAT_TABLE_LEN - 1))
}

/// B_n as f64 for n < 128.
pub fn bernoulli_f64(n: usize) -> f64 {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    T.get_or_init(|| exact_table().iter().map(ratio_to_f64).collect())[n]
}

pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // very large numerators or denominators: shift both into range
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 900).max(0);
    let shift_d = (db - 900).max(0);
    let n = (q.numer() >> shift_n as usize).to_f64().unwrap();
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap();
    n / d * 2f64.powi((shift_n - shift_d) as i32)
}

/// Bernoulli polynomial B_n(x) in double precision.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let mut c = 1.0f64;
    let mut acc = 0.0;
    for k in 0..=n {
        acc += c * bernoulli_f64(k) * x.powi((n - k) as i32);
        c = c * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
        assert_eq!(bernoulli(7), q(0, 1));
    }

    #[test]
    fn beyond_table() {
        let b = bernoulli(130);
        assert_eq!(&b, bernoulli_table(130).last().unwrap());
        assert!(b > BigRational::zero());
    }

    #[test]
    fn polynomial_at_one_third() {
        // B_2(1/3) = 1/9 - 1/3 + 1/6 = -1/18
        assert!((bernoulli_poly(2, 1.0 / 3.0) + 1.0 / 18.0).abs() < 1e-16);
    }
}
