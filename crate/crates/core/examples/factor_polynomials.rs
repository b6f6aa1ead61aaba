//! Factoring polynomials over ℤ, with resultants as a cross-check.
//!
//! ```bash
//! cargo run --example factor_polynomials -- "0,-2,0,2,0,0,2,-2"
//! ```

use lehmer_modp::intpoly::{cyclotomic, factor_poly, factor_u64, resultant};
use lehmer_modp::IntPoly;

/// Factors `poly` and returns the number of distinct irreducible factors.
pub fn run_example(poly: &IntPoly) -> lehmer_modp::Result<usize> {
    let f = factor_poly(poly)?;
    println!("P = {}", poly.pretty());
    println!("  unit {} · content {}", f.unit, f.content);
    for (g, e) in &f.factors {
        println!("  ({})^{e}", g.pretty());
    }
    assert_eq!(&f.expand(), poly);

    for n in [5usize, 12, 30] {
        let phi = cyclotomic(n);
        println!("Φ_{n} = {}", phi.pretty());
    }
    let r = resultant(&cyclotomic(5), &IntPoly::from_i64s(&[-1, -1, 1]))?;
    println!("Res(Φ_5, x²-x-1) = {r}");
    println!("factor 2^32 - 1 = {:?}", factor_u64((1 << 32) - 1));
    Ok(f.factors.len())
}

fn main() -> lehmer_modp::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "0,-2,0,2,0,0,2,-2".into());
    run_example(&text.parse()?)?;
    Ok(())
}
