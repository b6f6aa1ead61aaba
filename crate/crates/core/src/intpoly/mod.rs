//! Exact integer polynomial arithmetic and the integer/polynomial
//! factorization routines built on it.

mod cyclotomic;
mod intfactor;
mod poly;
mod polyfactor;
mod resultant;

pub use cyclotomic::{cyclotomic, cyclotomics_up_to};
pub use intfactor::{
    divisors, euler_phi, factor_int, factor_int_with, factor_u64, is_prime_u64,
    is_probable_prime, FactorConfig, IntFactorization,
};
pub(crate) use intfactor::{mul_mod, pow_mod};
pub use poly::IntPoly;
pub use polyfactor::{factor_poly, squarefree_decomposition, Factorization};
pub use resultant::resultant;
