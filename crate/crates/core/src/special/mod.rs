//! Scalar special functions in double precision.
//!
//! Poles come back as [`Error::Pole`](crate::Error::Pole), never as Inf.

mod arith;
mod bernoulli;
mod gamma;
mod pow;
pub mod sum;
mod zeta;

pub use arith::{
    binom_general, binom_int, divisors, factorial, factorial_f64, gcd, mobius, mod_inverse, sigma,
    sigma_exact, totient,
};
pub use bernoulli::{bernoulli, bernoulli_f64, bernoulli_poly, bernoulli_table, ratio_to_f64};
pub use gamma::{gamma, gamma_real, ln_gamma, upper_incomplete_gamma, upper_incomplete_gamma_bound};
pub use pow::{cospi, e2pi, is_nonpositive_integer, real_pow, sinpi, sinpi_c};
pub use zeta::{hurwitz_zeta, lambda_completed, lambda_real, riemann_zeta, zeta_real, HurwitzFamily};
pub(crate) use zeta::hurwitz_any;
