//! Builds `I_d`, factors every pairwise resultant, and prints the
//! d-exceptional primes together with the size bounds they obey.
//!
//! ```bash
//! cargo run --release --example exceptional_primes -- 4
//! ```

use std::time::Instant;

use lehmer_modp::exceptional::claim2_verify;

pub fn run_example(d_max: usize) -> lehmer_modp::Result<()> {
    for d in 1..=d_max {
        let start = Instant::now();
        let c = claim2_verify(d)?;
        let head: Vec<String> = c.report.primes.iter().take(8).map(|p| p.to_string()).collect();
        println!(
            "d={d}: |I_d|={} pairs={} primes={} (first: {}) max|Res|={} max‖D‖₁={} cyclotomic m={:?} [{:.2?}]",
            c.id_size,
            c.pair_count,
            c.prime_count,
            head.join(" "),
            c.max_abs_resultant,
            c.max_l1,
            c.cyclotomic_orders,
            start.elapsed(),
        );
        println!(
            "      bounds: count <= {} ({}), 10^d {}, |Res| <= 2^(4d²) {}, Hadamard {}",
            c.count_bound,
            if c.passes() { "pass" } else { "FAIL" },
            if c.within_ten_pow_d { "holds" } else { "exceeded" },
            c.max_abs_resultant <= c.resultant_bound,
            c.hadamard_ok,
        );
    }
    Ok(())
}

fn main() -> lehmer_modp::Result<()> {
    let d_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    run_example(d_max)
}
