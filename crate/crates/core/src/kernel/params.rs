use std::ops::RangeInclusive;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(n: i64) -> Self {
        if n > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One binomially expanded D_l evaluation of the negative-index tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TailIndex {
    pub j: i64,
    pub mu: i64,
    /// D_l argument at t = 0
    pub nu: i64,
}

/// Parameters (k, r, a, b, s, t) with k = 2a + 2b - 2r - 2.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelParams {
    k: i64,
    r: i64,
    a: i64,
    b: i64,
    s: i64,
    t: f64,
    big_s: i64,
    m: i64,
    tail: Vec<TailIndex>,
}

impl KernelParams {
    pub fn new(k: i64, r: i64, a: i64, b: i64, s: i64) -> Result<Self> {
        let bad = |msg: String| Err(Error::pre(msg));
        if k < 4 || k % 2 != 0 {
            return bad(format!("weight k = {k} must be even and at least 4"));
        }
        if r < 1 || s < 1 {
            return bad(format!("need r >= 1 and s >= 1, got r = {r}, s = {s}"));
        }
        if a < 2 || b < 2 {
            return bad(format!("need a, b >= 2, got a = {a}, b = {b}"));
        }
        if k != 2 * a + 2 * b - 2 * r - 2 {
            return bad(format!("k = {k} but 2a + 2b - 2r - 2 = {}", 2 * a + 2 * b - 2 * r - 2));
        }
        let big_s = s + r - a + k / 2;
        if big_s < 2 {
            return bad(format!("s + r - a + k/2 = {big_s} must be at least 2"));
        }
        if s + k + r - 2 * a < 1 {
            return bad(format!("Γ(s + k + r - 2a) has a pole at {}", s + k + r - 2 * a));
        }
        if 2 * s + k + 2 * r - 2 * a == 1 {
            return bad("ζ(2s + k + 2r - 2a) sits on its pole".into());
        }
        if 2 * a - s - r < 1 {
            return bad(format!("y-integral exponent 2a - s - r = {} is not positive", 2 * a - s - r));
        }
        let m = (k - 2 * a).abs() / 2;
        let mut tail = Vec::new();
        for j in (k / 2 - a)..big_s {
            let w = k / 2 + a - j - 1;
            for mu in 0..=(big_s - 1 - j) {
                tail.push(TailIndex { j, mu, nu: w - mu });
            }
        }
        Ok(Self { k, r, a, b, s, t: 0.0, big_s, m, tail })
    }

    pub fn with_t(mut self, t: f64) -> Result<Self> {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::pre(format!("t must be finite and nonnegative, got {t}")));
        }
        self.t = t;
        Ok(self)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// S = s + r - a + k/2, the Eisenstein parameter.
    pub fn eis_s(&self) -> i64 {
        self.big_s
    }

    /// |k - 2a| / 2
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn j_range(&self, sign: Sign) -> RangeInclusive<i64> {
        let lo = sign.factor() * (self.a - self.k / 2);
        lo..=self.big_s - 1
    }

    /// (h, S) for the weight k + r - 2a Eisenstein coefficients, h = ±(k - 2a)/2.
    pub(crate) fn alpha_shape(&self, sign: Sign) -> (i64, i64) {
        (sign.factor() * (self.k - 2 * self.a) / 2, self.big_s)
    }

    /// (α, β) of the shifted convolutions in the tail.
    pub fn d_params(&self) -> (i64, i64) {
        (2 * self.a - 1, 1 - 2 * self.big_s)
    }

    pub fn tail_indices(&self) -> &[TailIndex] {
        &self.tail
    }

    pub fn nu_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.tail.iter().map(|x| x.nu).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Second L-value argument s + k + r - 2a.
    pub fn second_argument(&self) -> i64 {
        self.s + self.k + self.r - 2 * self.a
    }
}

/// s = 1 and a = (k + r - 1)/2 for odd r, (k + r)/2 for even r.
pub fn canonical_params(k: i64, r: i64) -> Result<KernelParams> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::pre(format!("canonical parameters need even k >= 12, got {k}")));
    }
    if r < 1 {
        return Err(Error::pre(format!("r must be at least 1, got {r}")));
    }
    let a = if r % 2 == 1 { (k + r - 1) / 2 } else { (k + r) / 2 };
    let b = (k - 2 * a + 2 * r + 2) / 2;
    KernelParams::new(k, r, a, b, 1)
}
