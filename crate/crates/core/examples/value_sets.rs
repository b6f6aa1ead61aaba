//! Value sets `S_d(α)` of `{0,1}` polynomials at an algebraic number, with
//! the partition of `S_d` that α induces.
//!
//! ```bash
//! cargo run --release --example value_sets -- "-1,-1,0,1" 14
//! ```

use lehmer_modp::algnum::{
    growth_csv, growth_profile, make_algebraic, partition, submultiplicativity_check,
    value_set, CoeffRange,
};
use lehmer_modp::IntPoly;

/// Returns the growth rows' `|S_d(α)|` for `d = 1..=d_max`.
pub fn run_example(minpoly: IntPoly, d_max: usize) -> lehmer_modp::Result<Vec<usize>> {
    let alpha = make_algebraic(minpoly)?;
    let m = alpha.mahler()?;
    println!("α: {} with M(α) = {:.9}", alpha.minpoly().pretty(), m.value);

    let rows = growth_profile(&alpha, d_max)?;
    print!("{}", growth_csv(&rows));

    let d = d_max.min(4);
    let part = partition(&alpha, d)?;
    println!("π_(α,{d}) has {} blocks over {} polynomials", part.block_count(), 1 << (d + 1));
    for block in part.canonical_blocks().iter().filter(|b| b.len() > 1).take(5) {
        println!("  identified: {block:?}");
    }

    let k = value_set(&alpha, 3, CoeffRange::symmetric(1))?;
    println!("|S_3^1(α)| = {}", k.len());

    let sub = submultiplicativity_check(&alpha, d_max)?;
    println!("|S_(d+e+1)| ≤ |S_d||S_e| for d+e+1 ≤ {d_max}: {}", sub.holds());
    Ok(rows.iter().map(|r| r.cardinality).collect())
}

fn main() -> lehmer_modp::Result<()> {
    let mut args = std::env::args().skip(1);
    let poly = args.next().unwrap_or_else(|| "-1,-1,0,1".into()).parse()?;
    let d_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    run_example(poly, d_max)?;
    Ok(())
}
