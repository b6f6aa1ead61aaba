//! Primes where the golden ratio has a root of small multiplicative order
//! are rare, and each one divides `Res(x² − x − 1, xⁿ − 1)` at that order.
//!
//! ```bash
//! cargo run --release --example order_lemma -- 100000
//! ```

use lehmer_modp::algnum::make_algebraic;
use lehmer_modp::exceptional::order_lemma_scan;
use lehmer_modp::IntPoly;

pub fn run_example(x_max: u64) -> lehmer_modp::Result<f64> {
    let phi = make_algebraic(IntPoly::from_i64s(&[-1, -1, 1]))?;
    let r = order_lemma_scan(&phi, x_max)?;
    println!(
        "X={}: {} primes, {} with a root of x²-x-1, {} flagged (density {:.5}), {} in [√X, X]",
        r.x_max,
        r.prime_count,
        r.split_count,
        r.flagged.len(),
        r.density,
        r.upper_range_flagged
    );
    for f in r.flagged.iter().take(12) {
        println!(
            "  p={:<6} root={:<6} order={:<3} p | Res(π, x^{}-1): {}",
            f.p, f.root, f.order, f.order, f.divides
        );
    }
    assert!(r.divisibility_holds());
    Ok(r.density)
}

fn main() -> lehmer_modp::Result<()> {
    let x = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    run_example(x)?;
    Ok(())
}
