//! A resumable prime census. Every prime up to X is classified into a JSONL
//! file; an interrupted run picks up where it stopped.
//!
//! ```bash
//! cargo run --release --example census_scan -- 20000
//! ```

use lehmer_modp::census::{load_records, scan, ScanConfig, ScanKind};

/// Scans to `x_max` in two passes and returns the summary JSON.
pub fn run_example(x_max: u64, dir: &std::path::Path) -> lehmer_modp::Result<String> {
    let out = dir.join("census-bad.jsonl");
    let _ = std::fs::remove_file(&out);
    let mut cfg = ScanConfig {
        kind: ScanKind::Bad,
        max_x: x_max / 2,
        delta: 0.3,
        epsilon: 0.25,
        c_wild: 2.0,
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        out: out.clone(),
    };
    let half = scan(&cfg)?;
    println!("first pass: {} primes to {}", half.prime_count, half.x);

    // simulate a crash midway through writing the last record
    let text = std::fs::read_to_string(&out)?;
    std::fs::write(&out, &text[..text.len() - 7])?;

    cfg.max_x = x_max;
    let full = scan(&cfg)?;
    let records = load_records(&out)?;
    println!("resumed: {} records on disk", records.len());
    let json = full.to_json();
    println!("{json}");
    Ok(json)
}

fn main() -> lehmer_modp::Result<()> {
    let x = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    run_example(x, &std::env::temp_dir())?;
    Ok(())
}
