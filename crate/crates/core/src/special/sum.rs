//! Neumaier-compensated accumulators.
//!
//! Everything that adds more than a handful of terms goes through these so
//! results do not depend on how work was split across threads: callers sum
//! per-chunk partials in index order, then fold the partials in index order.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CSum {
    re: Neumaier,
    im: Neumaier,
}

impl CSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl std::ops::AddAssign<Complex64> for CSum {
    fn add_assign(&mut self, z: Complex64) {
        self.add(z);
    }
}

impl FromIterator<Complex64> for CSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut s = CSum::new();
        for z in iter {
            s.add(z);
        }
        s
    }
}

/// Sum in the given order with compensation.
pub fn csum<I: IntoIterator<Item = Complex64>>(iter: I) -> Complex64 {
    iter.into_iter().collect::<CSum>().value()
}

pub fn fsum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut s = Neumaier::new();
    for x in iter {
        s.add(x);
    }
    s.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_mass() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(fsum(xs), 2.0);
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn complex_parts_independent() {
        let z = csum([Complex64::new(1.0, 1e100), Complex64::new(1e-16, -1e100), Complex64::new(0.0, 3.0)]);
        assert_eq!(z.re, 1.0 + 1e-16);
        assert_eq!(z.im, 3.0);
    }
}
