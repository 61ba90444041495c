use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::modular::{eigenform, Eigenform};

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "LKERNEL_CACHE_DIR";

/// On-disk eigenform coefficients a(1..=count) as exact fractions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub format_version: u32,
    pub weight: u32,
    pub count: usize,
    pub coefficients: Vec<(String, String)>,
}

impl CacheFile {
    pub fn from_eigenform(f: &Eigenform) -> Self {
        let coefficients: Vec<(String, String)> = f
            .coefficients()
            .iter()
            .map(|q| (q.numer().to_string(), q.denom().to_string()))
            .collect();
        Self { format_version: FORMAT_VERSION, weight: f.weight(), count: coefficients.len(), coefficients }
    }

    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Cache(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if self.count != self.coefficients.len() {
            return Err(Error::Cache(format!(
                "count {} disagrees with {} stored coefficients",
                self.count,
                self.coefficients.len()
            )));
        }
        Ok(())
    }

    pub fn to_eigenform(&self) -> Result<Eigenform> {
        self.validate()?;
        let mut a = Vec::with_capacity(self.count);
        for (i, (n, d)) in self.coefficients.iter().enumerate() {
            let parse = |s: &str| -> Result<BigInt> {
                s.parse::<BigInt>().map_err(|_| Error::Cache(format!("coefficient {}: {s:?} is not an integer", i + 1)))
            };
            let (n, d) = (parse(n)?, parse(d)?);
            if d.is_zero() || d.is_negative() {
                return Err(Error::Cache(format!("coefficient {}: denominator must be positive", i + 1)));
            }
            a.push(BigRational::new(n, d));
        }
        Eigenform::from_coefficients(self.weight, a).map_err(|e| Error::Cache(e.to_string()))
    }
}

pub fn cache_store(path: &Path, f: &Eigenform) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string_pretty(&CacheFile::from_eigenform(f)).expect("cache serializes");
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<Eigenform> {
    let text = std::fs::read_to_string(path)?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    file.to_eigenform()
}

/// Flag value, then the environment override, then ./.lkernel-cache.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(".lkernel-cache"),
    }
}

pub fn cache_path(dir: &Path, weight: u32) -> PathBuf {
    dir.join(format!("eigenform_w{weight}.json"))
}

/// Eigenform with at least n_terms coefficients, read from or written to the cache when a directory is given.
pub fn cached_eigenform(weight: u32, n_terms: usize, dir: Option<&Path>) -> Result<Eigenform> {
    let Some(dir) = dir else {
        return eigenform(weight, n_terms);
    };
    let path = cache_path(dir, weight);
    if path.exists() {
        match cache_load(&path) {
            Ok(f) if f.len() >= n_terms => return Ok(f.truncated(n_terms)),
            Ok(_) => {}
            Err(e @ Error::Cache(_)) => return Err(e),
            Err(_) => {}
        }
    }
    let f = eigenform(weight, n_terms)?;
    cache_store(&path, &f)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::delta_q;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.json");
        let f = delta_q(100).unwrap();
        cache_store(&path, &f).unwrap();
        assert_eq!(cache_load(&path).unwrap(), f);
    }

    #[test]
    fn rejects_tampering() {
        let f = CacheFile::from_eigenform(&delta_q(10).unwrap());
        let mut zero = f.clone();
        zero.coefficients[3].1 = "0".into();
        assert!(matches!(zero.to_eigenform(), Err(Error::Cache(_))));
        let mut version = f.clone();
        version.format_version = 99;
        let msg = version.to_eigenform().unwrap_err().to_string();
        assert!(msg.contains("format_version 99"), "{msg}");
        let mut count = f;
        count.count = 11;
        assert!(count.to_eigenform().is_err());
    }

    #[test]
    fn cache_is_reused() {
        let dir = tempfile::tempdir().unwrap();
        let a = cached_eigenform(16, 30, Some(dir.path())).unwrap();
        assert!(cache_path(dir.path(), 16).exists());
        let b = cached_eigenform(16, 20, Some(dir.path())).unwrap();
        assert_eq!(b, a.truncated(20));
    }
}
