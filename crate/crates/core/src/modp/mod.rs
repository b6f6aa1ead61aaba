//! Arithmetic in 𝔽_p. Value sets of `{0,1}` and `[-K,K]` polynomials at a
//! residue live in word-packed bit arrays, and the prime classifiers are
//! built on top of them.
//!
//! Logarithms are base 2 throughout.

mod classify;
mod fppoly;
mod fpset;
mod inclusions;
mod valueset;

pub use classify::{
    classify_c_wild, classify_delta_bad, classify_very_bad, delta_bad_floor, verify_wild_witness,
    very_bad_floor, wild_floor, wild_outcome, wild_params, BadClassification, BadWitness,
    OrderFloor, WildClassification, WildOutcome, WildParams, WildWitness,
};
pub use fppoly::roots_mod_p;
pub use inclusions::{eq1_chain_modp, sum_product_inclusions};
pub use fpset::{productset, sumset, triple_product_sum, FpSet, MAX_BITSET_MODULUS};
pub use valueset::{sd_card_capped, sd_modp, sdk_card_capped, sdk_modp};

use crate::error::{Error, Result};
use crate::intpoly::{factor_u64, is_prime_u64, pow_mod};

/// A certified prime together with the factorization of `p - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCtx {
    p: u64,
    p_minus_1_factors: Vec<(u64, u32)>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self {
            p,
            p_minus_1_factors: factor_u64(p - 1),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn p_minus_1_factors(&self) -> &[(u64, u32)] {
        &self.p_minus_1_factors
    }

    pub fn log2p(&self) -> f64 {
        (self.p as f64).log2()
    }

    /// Reduces an integer into `[0, p)`.
    pub fn residue(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, x: u64, e: u64) -> u64 {
        pow_mod(x % self.p, e, self.p)
    }

    pub fn inv(&self, x: u64) -> Result<u64> {
        if x.is_multiple_of(self.p) {
            return Err(Error::NotAUnit { x, p: self.p });
        }
        Ok(self.pow(x, self.p - 2))
    }

    pub(crate) fn require_bitset(&self) -> Result<()> {
        if self.p > MAX_BITSET_MODULUS {
            return Err(Error::ResourceCap {
                what: format!("bit array over F_{}", self.p),
                cap: MAX_BITSET_MODULUS,
            });
        }
        Ok(())
    }
}

/// Multiplicative order of `x` in 𝔽_p^×.
pub fn mul_order(x: u64, ctx: &PrimeCtx) -> Result<u64> {
    let p = ctx.p;
    let x = x % p;
    if x == 0 {
        return Err(Error::NotAUnit { x, p });
    }
    let mut order = p - 1;
    for &(q, _) in &ctx.p_minus_1_factors {
        while order.is_multiple_of(q) && pow_mod(x, order / q, p) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        let ctx = PrimeCtx::new(7).unwrap();
        assert_eq!(mul_order(1, &ctx).unwrap(), 1);
        assert_eq!(mul_order(2, &ctx).unwrap(), 3);
        assert_eq!(mul_order(3, &ctx).unwrap(), 6);
        assert!(matches!(mul_order(0, &ctx), Err(Error::NotAUnit { .. })));
        assert!(matches!(PrimeCtx::new(91), Err(Error::NotPrime(91))));
    }

    #[test]
    fn order_matches_brute_force() {
        for p in [2u64, 3, 5, 13, 97, 101, 211] {
            let ctx = PrimeCtx::new(p).unwrap();
            for x in 1..p {
                let mut y = x;
                let mut n = 1;
                while y != 1 {
                    y = y * x % p;
                    n += 1;
                }
                assert_eq!(mul_order(x, &ctx).unwrap(), n, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn large_prime_context() {
        let p = 18_446_744_073_709_551_557u64;
        let ctx = PrimeCtx::new(p).unwrap();
        let prod: u128 = ctx
            .p_minus_1_factors()
            .iter()
            .map(|&(q, e)| (q as u128).pow(e))
            .product();
        assert_eq!(prod, (p - 1) as u128);
        let ord = mul_order(2, &ctx).unwrap();
        assert_eq!(ctx.pow(2, ord), 1);
        assert_eq!(ctx.inv(3).unwrap() as u128 * 3 % p as u128, 1);
        assert!(ctx.require_bitset().is_err());
    }
}
