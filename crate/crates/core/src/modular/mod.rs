//! Exact q-expansions of level-one forms and the Petersson norm.
//!
//! Eisenstein series use the normalization with leading q-coefficient 1 and
//! constant term -B_{2m}/(4m).

mod eigenform;
mod petersson;
mod qexp;

pub use eigenform::{delta_q, eigenform, Eigenform, SUPPORTED_WEIGHTS};
pub use petersson::{petersson_norm_numeric, petersson_with_coeffs, FundamentalDomain};
pub use qexp::{eisenstein_constant, eisenstein_q, rankin_cohen, QExpansion};
