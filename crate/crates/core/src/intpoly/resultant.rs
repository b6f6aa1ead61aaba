use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Exact resultant `Res(f, g) = lc(f)^deg g · ∏ g(αᵢ)` over the roots αᵢ of `f`.
///
/// Computed with the fraction-free subresultant remainder sequence, so every
/// intermediate division is exact in ℤ.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (fc, gc) = (f.content(), g.content());
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    let t = fc.pow(b.deg() as u32) * gc.pow(a.deg() as u32);
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
    }

    let mut sg = BigInt::one();
    let mut h = BigInt::one();
    while b.deg() > 0 {
        let delta = (a.deg() - b.deg()) as u32;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &sg * h.pow(delta);
        a = b;
        b = IntPoly::new(r.into_coeffs().into_iter().map(|c| c / &divisor).collect());
        sg = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            sg.pow(delta) / h.pow(delta - 1)
        };
    }

    // b is a nonzero constant here
    let da = a.deg() as u32;
    let lb = b.leading().unwrap();
    let h = if da == 0 {
        BigInt::one()
    } else {
        lb.pow(da) / h.pow(da - 1)
    };
    Ok(s * t * h)
}
