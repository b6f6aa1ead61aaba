//! Exact and numerical tools for studying small Mahler measure through
//! value sets of `{0,1}` polynomials, over number fields and over 𝔽_p.
//!
//! * [`intpoly`]: integer polynomials with resultants and factorization.
//! * [`mahler`]: root finding and Mahler measures with error bounds.
//! * [`algnum`]: algebraic numbers and their value sets `S_d(α)`.
//! * [`modp`]: value sets mod p and the prime classifiers.
//! * [`exceptional`]: `I_d` and the d-exceptional primes.
//! * [`census`]: resumable classifier scans and claim verification.

pub mod algnum;
pub mod census;
pub mod error;
pub mod exceptional;
pub mod intpoly;
pub mod mahler;
pub mod modp;

pub use algnum::{make_algebraic, AlgebraicNumber};
pub use error::{Error, Result};
pub use intpoly::IntPoly;
pub use modp::PrimeCtx;
