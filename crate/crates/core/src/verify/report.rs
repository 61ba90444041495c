use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::time::Instant;

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse17<E: serde::de::Error>(s: &str) -> std::result::Result<f64, E> {
    s.parse::<f64>().map_err(|_| E::custom(format!("not a decimal number: {s:?}")))
}

mod num17 {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt17(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        parse17(&String::deserialize(d)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// A measured or expected quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Quantity {
    Real(f64),
    Complex(Complex64),
}

impl Quantity {
    pub fn as_complex(self) -> Complex64 {
        match self {
            Quantity::Real(x) => Complex64::new(x, 0.0),
            Quantity::Complex(z) => z,
        }
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Real(x)
    }
}

impl From<Complex64> for Quantity {
    fn from(z: Complex64) -> Self {
        Quantity::Complex(z)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum QuantityRepr {
    Real(String),
    Complex { re: String, im: String },
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Real(x) => QuantityRepr::Real(fmt17(*x)),
            Quantity::Complex(z) => QuantityRepr::Complex { re: fmt17(z.re), im: fmt17(z.im) },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match QuantityRepr::deserialize(d)? {
            QuantityRepr::Real(x) => Ok(Quantity::Real(parse17(&x)?)),
            QuantityRepr::Complex { re, im } => {
                Ok(Quantity::Complex(Complex64::new(parse17(&re)?, parse17(&im)?)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub measured: Quantity,
    pub expected: Quantity,
    #[serde(with = "num17")]
    pub rel_err: f64,
    #[serde(with = "num17")]
    pub tolerance: f64,
    pub runtime_ms: u64,
    pub notes: String,
}

/// |m - e| / |e|, falling back to the absolute difference when e = 0.
pub fn relative_error(measured: Complex64, expected: Complex64) -> f64 {
    let d = (measured - expected).norm();
    let e = expected.norm();
    if e == 0.0 {
        d
    } else {
        d / e
    }
}

impl CheckResult {
    /// Pass exactly when rel_err ≤ tolerance (NaN fails).
    pub fn compare(
        check_id: impl Into<String>,
        measured: impl Into<Quantity>,
        expected: impl Into<Quantity>,
        tolerance: f64,
        started: Instant,
    ) -> Self {
        let (measured, expected) = (measured.into(), expected.into());
        let rel_err = relative_error(measured.as_complex(), expected.as_complex());
        Self {
            check_id: check_id.into(),
            status: if rel_err <= tolerance { Status::Pass } else { Status::Fail },
            measured,
            expected,
            rel_err,
            tolerance,
            runtime_ms: started.elapsed().as_millis() as u64,
            notes: String::new(),
        }
    }

    /// A check whose evaluation itself failed.
    pub fn errored(check_id: impl Into<String>, tolerance: f64, started: Instant, err: &crate::Error) -> Self {
        Self {
            check_id: check_id.into(),
            status: Status::Fail,
            measured: Quantity::Real(0.0),
            expected: Quantity::Real(0.0),
            rel_err: f64::INFINITY,
            tolerance,
            runtime_ms: started.elapsed().as_millis() as u64,
            notes: err.to_string(),
        }
    }

    pub fn skipped(check_id: impl Into<String>, notes: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            status: Status::Skip,
            measured: Quantity::Real(0.0),
            expected: Quantity::Real(0.0),
            rel_err: 0.0,
            tolerance: 0.0,
            runtime_ms: 0,
            notes: notes.into(),
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One human-readable line.
    pub fn summary_line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let mut line = format!(
            "{tag} {} rel_err={:.3e} tol={:.1e} ({} ms)",
            self.check_id, self.rel_err, self.tolerance, self.runtime_ms
        );
        if !self.notes.is_empty() {
            line.push_str(" - ");
            line.push_str(&self.notes);
        }
        line
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub started_at: String,
    pub results: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(suite: impl Into<String>, started_at: String, mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let failed = results.iter().filter(|r| !r.passed()).count();
        Self { suite: suite.into(), started_at, passed: results.len() - failed, failed, results }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Precondition(format!("malformed report: {e}")))
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_are_seventeen_digit_strings() {
        let r = CheckResult::compare("x", 0.1 + 0.2, 0.3, 1e-15, Instant::now());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["measured"], "3.0000000000000004e-1");
        assert_eq!(v["status"], "pass");
        let back: CheckResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn complex_round_trip() {
        let r = CheckResult::compare("z", Complex64::new(1.0, -1e-300), Complex64::new(1.0, 0.0), 0.0, Instant::now());
        let rep = Report::new("t", "now".into(), vec![r]);
        assert_eq!(Report::from_json(&rep.to_json()).unwrap(), rep);
    }

    #[test]
    fn nan_fails() {
        let r = CheckResult::compare("n", f64::NAN, 1.0, 1.0, Instant::now());
        assert_eq!(r.status, Status::Fail);
    }
}
