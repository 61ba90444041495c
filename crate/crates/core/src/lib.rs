//! Fourier coefficients of the double Eisenstein L-value kernel.
//!
//! The crate is layered bottom-up: [`special`] (Gamma, zeta family, divisor
//! sums), [`modular`] (exact q-expansions, eigenforms, Petersson norm),
//! [`lfunc`] (completed L-functions), [`convolution`] (shifted divisor sums
//! and their continuation through Estermann/Hurwitz zeta), [`kernel`] (the
//! unfolded pairing and the kernel coefficients) and [`verify`] (identity
//! checks, reports, coefficient cache).

pub mod convolution;
pub mod error;
pub mod kernel;
pub mod lfunc;
pub mod modular;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
