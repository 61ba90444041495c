//! Cross-module checks, verification suites, reports and the coefficient cache.

mod cache;
mod checks;
mod report;
mod suites;

pub use cache::{
    cache_load, cache_path, cache_store, cached_eigenform, resolve_cache_dir, CacheFile, CACHE_ENV,
    FORMAT_VERSION,
};
pub use checks::{check_kernel_eigen, check_lvalue_product, check_theorem_main, VerifyConfig};
pub use report::{fmt17, relative_error, CheckResult, Quantity, Report, Status};
pub use suites::{run_suite, SUITES};
