//! Each prime classifier on a handful of primes, with its order floor and
//! any witness found.
//!
//! ```bash
//! cargo run --release --example classify_primes
//! ```

use lehmer_modp::modp::{
    classify_c_wild, classify_delta_bad, classify_very_bad, verify_wild_witness,
};
use lehmer_modp::PrimeCtx;

/// Returns `(p, δ-bad, very-bad, wild)` for each prime.
pub fn run_example(primes: &[u64]) -> lehmer_modp::Result<Vec<(u64, bool, bool, bool)>> {
    let mut out = Vec::new();
    for &p in primes {
        let ctx = PrimeCtx::new(p)?;
        let bad = classify_delta_bad(&ctx, 0.3)?;
        let very = classify_very_bad(&ctx, 0.3, 0.25)?;
        let wild = classify_c_wild(&ctx, 2.0)?;
        println!(
            "p={p:<6} δ-bad: floor {:>3}{} {:?}",
            bad.order_floor.value,
            if bad.vacuous { " (vacuous)" } else { "" },
            bad.witness.as_ref().map(|w| (w.x, w.order, w.cardinality))
        );
        println!(
            "         very-bad: D={} K={} {:?}",
            very.d,
            very.k.unwrap_or(0),
            very.witness.as_ref().map(|w| (w.x, w.order, w.cardinality))
        );
        println!(
            "         wild: floor {} h={} budget {} {:?}",
            wild.params.order_floor.value,
            wild.params.h_len,
            wild.params.budget,
            wild.witness.as_ref().map(|w| (w.x, w.order, w.unreached))
        );
        if let Some(w) = &wild.witness {
            assert!(verify_wild_witness(&ctx, 2.0, w)?);
        }
        out.push((p, bad.witness.is_some(), very.witness.is_some(), wild.witness.is_some()));
    }
    Ok(out)
}

fn main() -> lehmer_modp::Result<()> {
    run_example(&[5, 23, 101, 1009, 7919, 65537])?;
    Ok(())
}
