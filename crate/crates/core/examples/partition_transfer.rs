//! For primes that divide no resultant of `I_d`, every residue `α` that is a
//! root of some `D ∈ I_d` splits `S_d` exactly as an algebraic root `β` of
//! `D` does. This walks all of `𝔽_p` for a few such primes.
//!
//! ```bash
//! cargo run --release --example partition_transfer -- 4
//! ```

use std::time::Instant;

use lehmer_modp::census::sieve_primes;
use lehmer_modp::exceptional::{claim1_verify_with, resultant_table};

pub fn run_example(d: usize, primes: usize) -> lehmer_modp::Result<bool> {
    let table = resultant_table(d)?;
    let candidates: Vec<u64> = sieve_primes(100_000)?
        .into_iter()
        .filter(|&p| p >= 100 && table.exceptional_pair(p).is_none())
        .collect();
    // evenly spaced picks across [100, 10^5]
    let step = candidates.len() / primes.max(1);
    let mut ok = true;
    for p in candidates.iter().step_by(step.max(1)).take(primes) {
        let start = Instant::now();
        let r = claim1_verify_with(&table, *p)?;
        println!(
            "p={:>6} d={d}: {} residues hit by I_d, max vanishing {}, mismatches {}/{}/{} [{:.2?}]",
            r.p,
            r.covered_residues,
            r.max_vanishing,
            r.partition_mismatches.len(),
            r.size_mismatches.len(),
            r.order_mismatches.len(),
            start.elapsed(),
        );
        ok &= r.passes();
    }
    // an exceptional prime is refused with the offending pair
    if let Err(e) = claim1_verify_with(&table, 2) {
        println!("p=2: {e}");
    }
    Ok(ok)
}

fn main() -> lehmer_modp::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let ok = run_example(d, 6)?;
    println!("{}", if ok { "all residues consistent" } else { "MISMATCH FOUND" });
    Ok(())
}
