use super::{FpSet, PrimeCtx};
use crate::intpoly::mul_mod;

/// `S_d(x)` over 𝔽_p: values at `x` of polynomials of degree `<= d` with
/// coefficients in `{0,1}`.
pub fn sd_modp(x: u64, ctx: &PrimeCtx, d: usize) -> FpSet {
    interval_value_set(x, ctx, d, 0, 1)
}

/// `S_d^K(x)` over 𝔽_p with coefficients in `[-K, K]`; `K = 0` gives `{0}`.
pub fn sdk_modp(x: u64, ctx: &PrimeCtx, d: usize, k: u64) -> FpSet {
    let k = k.min(ctx.p()) as i64;
    interval_value_set(x, ctx, d, -k, k)
}

fn interval_value_set(x: u64, ctx: &PrimeCtx, d: usize, lo: i64, hi: i64) -> FpSet {
    let p = ctx.p();
    let x = x % p;
    let mut s = FpSet::from_residues(p, [0]).plus_interval(lo, hi);
    for _ in 0..d {
        if s.is_full() {
            break;
        }
        s = s.scaled(x).plus_interval(lo, hi);
    }
    s
}

/// `|S_d(x)|`, or `None` as soon as some level exceeds `cap`.
///
/// Levels are nested (`0` is always a coefficient), so the final size is
/// at most `cap` exactly when every level is.
pub fn sd_card_capped(x: u64, ctx: &PrimeCtx, d: usize, cap: usize) -> Option<usize> {
    sparse_card(x, ctx, d, 0, 1, cap)
}

/// `|S_d^K(x)|` with the same early exit as [`sd_card_capped`].
pub fn sdk_card_capped(x: u64, ctx: &PrimeCtx, d: usize, k: u64, cap: usize) -> Option<usize> {
    let k = k.min(ctx.p()) as i64;
    sparse_card(x, ctx, d, -k, k, cap)
}

fn sparse_card(x: u64, ctx: &PrimeCtx, d: usize, lo: i64, hi: i64, cap: usize) -> Option<usize> {
    let p = ctx.p();
    let x = x % p;
    let mut coeffs: Vec<u64> = (lo..=hi).map(|c| ctx.residue(c)).collect();
    coeffs.sort_unstable();
    coeffs.dedup();
    if coeffs.len() > cap {
        return None;
    }
    let mut cur = coeffs.clone();
    let mut next = Vec::with_capacity(cur.len() * coeffs.len());
    for _ in 0..d {
        next.clear();
        for &s in &cur {
            let xs = mul_mod(s, x, p);
            for &c in &coeffs {
                let v = xs + c;
                next.push(if v >= p { v - p } else { v });
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() > cap {
            return None;
        }
        let grew = next.len() != cur.len();
        std::mem::swap(&mut cur, &mut next);
        if !grew {
            // S_{k+1} ⊇ S_k with equal size means the recursion has a fixed point
            break;
        }
    }
    Some(cur.len())
}
