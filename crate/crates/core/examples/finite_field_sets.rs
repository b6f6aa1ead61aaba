//! Sumsets and product sets of value sets in 𝔽_p, and the inclusion chains
//! between them.
//!
//! ```bash
//! cargo run --release --example finite_field_sets -- 1009 10
//! ```

use lehmer_modp::modp::{
    eq1_chain_modp, mul_order, productset, sd_modp, sdk_modp, sum_product_inclusions, sumset,
};
use lehmer_modp::PrimeCtx;

/// Returns `|S_d(x)|` for `d = 0..=d_max`.
pub fn run_example(p: u64, x: u64, d_max: usize) -> lehmer_modp::Result<Vec<usize>> {
    let ctx = PrimeCtx::new(p)?;
    println!("p = {p}, x = {x}, ord(x) = {}", mul_order(x, &ctx)?);
    let sizes: Vec<usize> = (0..=d_max).map(|d| sd_modp(x, &ctx, d).len()).collect();
    println!("|S_d(x)|, d = 0..={d_max}: {sizes:?}");

    let s = sd_modp(x, &ctx, 3);
    let k2 = sdk_modp(x, &ctx, 3, 2);
    println!(
        "|S_3| = {}, |S_3 + S_3| = {}, |S_3 · S_3| = {}, |S_3^2| = {}",
        s.len(),
        sumset(&s, &s).len(),
        productset(&s, &s).len(),
        k2.len()
    );

    let chain = eq1_chain_modp(x, &ctx, 3, 2)?;
    let sp = sum_product_inclusions(x, &ctx, 3, 2)?;
    for step in chain.steps.iter().chain(&sp.steps) {
        println!(
            "  {} ⊆ {}: {} ({} vs {})",
            step.lhs,
            step.rhs,
            step.missing == 0,
            step.lhs_size,
            step.rhs_size
        );
    }
    assert!(chain.holds() && sp.holds());
    Ok(sizes)
}

fn main() -> lehmer_modp::Result<()> {
    let mut args = std::env::args().skip(1);
    let p = args.next().and_then(|s| s.parse().ok()).unwrap_or(1009);
    let x = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    run_example(p, x, 12)?;
    Ok(())
}
