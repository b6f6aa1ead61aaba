//! Prime censuses over the 𝔽_p classifiers, with resumable JSONL output,
//! plus dispatch for the claim verifiers.

mod record;
mod scan;
mod sieve;
mod verify;

pub use record::{CensusSummary, DensityPoint, Flags, Parameters, PrimeRecord, ScanKind};
pub use scan::{classify_prime, load_records, scan, summarize, ScanConfig};
pub use sieve::{sieve_primes, SIEVE_CAP};
pub use verify::{claim1_sample, verify, Claim, VerifyParams, VerifyReport};
