use crate::error::{Error, Result};

pub const SIEVE_CAP: u64 = 1_000_000_000;
const SEGMENT: u64 = 1 << 18;

/// All primes `<= x`, ascending, by a segmented sieve of Eratosthenes.
pub fn sieve_primes(x: u64) -> Result<Vec<u64>> {
    if x > SIEVE_CAP {
        return Err(Error::ResourceCap {
            what: format!("prime sieve up to {x}"),
            cap: SIEVE_CAP,
        });
    }
    if x < 2 {
        return Ok(Vec::new());
    }
    let root = (x as f64).sqrt() as u64 + 1;
    let base = small_sieve(root);
    let mut out = Vec::new();
    let mut seg = vec![true; SEGMENT as usize];
    let mut lo = 2u64;
    while lo <= x {
        let hi = (lo + SEGMENT - 1).min(x);
        let len = (hi - lo + 1) as usize;
        seg[..len].iter_mut().for_each(|b| *b = true);
        for &q in &base {
            if q * q > hi {
                break;
            }
            let start = (q * q).max(lo.div_ceil(q) * q);
            let mut m = start;
            while m <= hi {
                seg[(m - lo) as usize] = false;
                m += q;
            }
        }
        out.extend((0..len).filter(|&i| seg[i]).map(|i| lo + i as u64));
        lo = hi + 1;
    }
    Ok(out)
}

fn small_sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut is = vec![true; n + 1];
    is[0] = false;
    if n >= 1 {
        is[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if is[i] {
            (i * i..=n).step_by(i).for_each(|j| is[j] = false);
        }
        i += 1;
    }
    (0..=n).filter(|&i| is[i]).map(|i| i as u64).collect()
}
