//! Mahler measures with error bounds, and the `M(P) ≤ ‖P‖₁ ≤ 2^deg M(P)`
//! sandwich for a few classic polynomials.
//!
//! ```bash
//! cargo run --example mahler_measure
//! ```

use lehmer_modp::intpoly::cyclotomic;
use lehmer_modp::mahler::{check_l1_bounds, find_roots, mahler_measure};
use lehmer_modp::IntPoly;

/// Prints the measure of each polynomial and returns the values.
pub fn run_example(polys: &[IntPoly]) -> lehmer_modp::Result<Vec<f64>> {
    let mut out = Vec::new();
    for p in polys {
        let m = mahler_measure(p)?;
        let roots = find_roots(p)?;
        let b = check_l1_bounds(p)?;
        println!(
            "M({}) = {:.12} ± {:.1e}   residual {:.1e}   M≤ℓ¹ {:?}, ℓ¹≤2^d·M {:?}",
            p.pretty(),
            m.value,
            m.error_bound,
            roots.residual_bound,
            b.m_le_l1,
            b.l1_le_2deg_m
        );
        out.push(m.value);
    }
    Ok(out)
}

fn main() -> lehmer_modp::Result<()> {
    let polys = [
        IntPoly::from_i64s(&[-2, 1]),
        IntPoly::from_i64s(&[-1, -1, 1]),
        IntPoly::from_i64s(&[-1, -1, 0, 1]),
        IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
        cyclotomic(15),
    ];
    run_example(&polys)?;
    Ok(())
}
