use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::record::{CensusSummary, DensityPoint, Flags, Parameters, PrimeRecord, ScanKind};
use super::sieve_primes;
use crate::error::{Error, Result};
use crate::modp::{classify_c_wild, classify_delta_bad, classify_very_bad, PrimeCtx};

/// Primes handed to the worker pool per round; each round is written in
/// ascending order before the next starts.
const CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub kind: ScanKind,
    pub max_x: u64,
    pub delta: f64,
    pub epsilon: f64,
    pub c_wild: f64,
    pub workers: usize,
    pub out: PathBuf,
}

impl ScanConfig {
    pub fn parameters(&self) -> Parameters {
        match self.kind {
            ScanKind::Bad => Parameters {
                delta: Some(self.delta),
                epsilon: None,
                c: None,
            },
            ScanKind::VeryBad => Parameters {
                delta: Some(self.delta),
                epsilon: Some(self.epsilon),
                c: None,
            },
            ScanKind::Wild => Parameters {
                delta: None,
                epsilon: None,
                c: Some(self.c_wild),
            },
        }
    }
}

/// Classifies one prime for the given scan kind.
pub fn classify_prime(p: u64, kind: ScanKind, params: Parameters) -> Result<PrimeRecord> {
    let start = Instant::now();
    let ctx = PrimeCtx::new(p)?;
    let missing = |name: &str| Error::InvalidParam(format!("{kind} scan needs {name}"));
    let mut flags = Flags::default();
    let (order_floor, bad_witness, wild_witness) = match kind {
        ScanKind::Bad | ScanKind::VeryBad => {
            let delta = params.delta.ok_or_else(|| missing("delta"))?;
            let c = if kind == ScanKind::Bad {
                classify_delta_bad(&ctx, delta)?
            } else {
                classify_very_bad(&ctx, delta, params.epsilon.ok_or_else(|| missing("epsilon"))?)?
            };
            let hit = Some(c.witness.is_some());
            if kind == ScanKind::Bad {
                flags.delta_bad = hit;
            } else {
                flags.very_bad = hit;
            }
            flags.vacuous_order = c.vacuous;
            flags.clamped_threshold = c.order_floor.clamped;
            (c.order_floor.value, c.witness, None)
        }
        ScanKind::Wild => {
            let c = classify_c_wild(&ctx, params.c.ok_or_else(|| missing("C"))?)?;
            flags.c_wild = Some(c.witness.is_some());
            flags.vacuous_order = c.vacuous;
            flags.clamped_threshold = c.params.order_floor.clamped;
            (c.params.order_floor.value, None, c.witness)
        }
    };
    Ok(PrimeRecord {
        p,
        kind,
        flags,
        parameters: params,
        order_floor,
        bad_witness,
        wild_witness,
        wall_time_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
    })
}

fn corrupt(path: &Path, line: usize, reason: impl Into<String>) -> Error {
    Error::CorruptRecord {
        path: path.display().to_string(),
        line,
        reason: reason.into(),
    }
}

/// Reads a census file. A final line without a newline that fails to parse
/// is an interrupted write and is dropped. When the tail needs repair, the
/// length to keep is returned alongside the records.
fn read_records(path: &Path) -> Result<(Vec<PrimeRecord>, Option<u64>)> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    let mut records = Vec::new();
    let mut offset = 0u64;
    let mut repair_at = None;
    let lines: Vec<&str> = text.split_inclusive('\n').collect();
    for (i, raw) in lines.iter().enumerate() {
        let line = raw.trim_end_matches('\n');
        let last_unterminated = i + 1 == lines.len() && !raw.ends_with('\n');
        if line.trim().is_empty() {
            offset += raw.len() as u64;
            continue;
        }
        match serde_json::from_str::<PrimeRecord>(line) {
            Ok(r) => records.push(r),
            Err(_) if last_unterminated => {
                repair_at = Some(offset);
                break;
            }
            Err(e) => return Err(corrupt(path, i + 1, e.to_string())),
        }
        offset += raw.len() as u64;
    }
    if repair_at.is_none() && !text.is_empty() && !text.ends_with('\n') {
        // a complete record that only lacks its newline
        repair_at = Some(text.len() as u64);
    }
    Ok((records, repair_at))
}

/// Cuts the file to `len` bytes and makes it end in a newline.
fn repair_tail(path: &Path, len: u64) -> Result<()> {
    OpenOptions::new().write(true).open(path)?.set_len(len)?;
    let mut text = Vec::new();
    File::open(path)?.read_to_end(&mut text)?;
    if !text.is_empty() && text.last() != Some(&b'\n') {
        OpenOptions::new().append(true).open(path)?.write_all(b"\n")?;
    }
    Ok(())
}

/// Loads and validates every record of a census file.
pub fn load_records(path: &Path) -> Result<Vec<PrimeRecord>> {
    let (records, _) = read_records(path)?;
    check_records(path, &records)?;
    Ok(records)
}

fn check_records(path: &Path, records: &[PrimeRecord]) -> Result<()> {
    let mut seen: BTreeMap<u64, &PrimeRecord> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        if !r.is_consistent() {
            return Err(corrupt(path, i + 1, format!("flags and witnesses disagree for p={}", r.p)));
        }
        if let Some(prev) = seen.insert(r.p, r) {
            if prev != r {
                return Err(corrupt(path, i + 1, format!("conflicting duplicate record for p={}", r.p)));
            }
        }
    }
    Ok(())
}

/// Classifies every prime `<= X`, appending records to `cfg.out` and
/// skipping primes already recorded there, then summarizes the file.
pub fn scan(cfg: &ScanConfig) -> Result<CensusSummary> {
    let params = cfg.parameters();
    let primes = sieve_primes(cfg.max_x)?;
    let existing = if cfg.out.exists() {
        let (records, repair_at) = read_records(&cfg.out)?;
        if let Some(len) = repair_at {
            repair_tail(&cfg.out, len)?;
        }
        check_records(&cfg.out, &records)?;
        if let Some(r) = records.iter().find(|r| r.kind != cfg.kind || r.parameters != params) {
            return Err(Error::InvalidParam(format!(
                "{} already holds a {} scan with parameters {:?}",
                cfg.out.display(),
                r.kind,
                r.parameters
            )));
        }
        records.into_iter().map(|r| r.p).collect()
    } else {
        std::collections::BTreeSet::new()
    };
    let todo: Vec<u64> = primes.iter().copied().filter(|p| !existing.contains(p)).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParam(format!("worker pool: {e}")))?;
    let mut out = BufWriter::new(OpenOptions::new().create(true).append(true).open(&cfg.out)?);
    for chunk in todo.chunks(CHUNK) {
        let records: Vec<PrimeRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&p| classify_prime(p, cfg.kind, params))
                .collect::<Result<_>>()
        })?;
        for r in &records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
    }
    drop(out);

    let records = load_records(&cfg.out)?;
    summarize(&records, cfg.kind, params, cfg.max_x)
}

/// Summary over the records with `p <= X`; every prime up to `X` must be
/// present exactly once.
pub fn summarize(records: &[PrimeRecord], kind: ScanKind, params: Parameters, x: u64) -> Result<CensusSummary> {
    let by_p: BTreeMap<u64, &PrimeRecord> = records.iter().filter(|r| r.p <= x).map(|r| (r.p, r)).collect();
    let primes = sieve_primes(x)?;
    if by_p.len() != primes.len() || !primes.iter().all(|p| by_p.contains_key(p)) {
        return Err(Error::Inconsistent(format!(
            "census holds {} of the {} primes up to {x}",
            by_p.len(),
            primes.len()
        )));
    }
    let count = |f: fn(&PrimeRecord) -> bool| by_p.values().filter(|r| f(r)).count();
    let density_at = |cut: u64| {
        let in_range: Vec<&&PrimeRecord> = by_p.range(..=cut).map(|(_, r)| r).collect();
        let n = in_range.len();
        let c = in_range.iter().filter(|r| r.flagged()).count();
        DensityPoint {
            x: cut,
            prime_count: n,
            count: c,
            density: if n == 0 { 0.0 } else { c as f64 / n as f64 },
        }
    };
    Ok(CensusSummary {
        kind,
        x,
        parameters: params,
        prime_count: primes.len(),
        bad_count: count(|r| r.flags.delta_bad == Some(true)),
        very_bad_count: count(|r| r.flags.very_bad == Some(true)),
        wild_count: count(|r| r.flags.c_wild == Some(true)),
        vacuous_count: count(|r| r.flags.vacuous_order),
        clamped_count: count(|r| r.flags.clamped_threshold),
        densities: vec![density_at(x / 4), density_at(x / 2), density_at(x)],
    })
}
