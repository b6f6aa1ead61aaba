//! Integer factorization: trial division, then Brent's variant of Pollard rho
//! with deterministic seeds. Primality is decided by Miller-Rabin, exact for
//! every 64-bit input and with a fixed witness set above that.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Bases making Miller-Rabin deterministic below 2^64 (and well beyond).
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
/// Extra witnesses used above 64 bits.
const MR_EXTRA: [u64; 8] = [41, 43, 47, 53, 59, 61, 67, 71];

#[derive(Clone, Debug)]
pub struct FactorConfig {
    /// Trial division covers every prime below this bound before rho starts.
    pub trial_bound: u64,
    /// Optional wall-clock deadline for the rho stage.
    pub deadline: Option<Instant>,
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self {
            trial_bound: 1 << 12,
            deadline: None,
        }
    }
}

/// Outcome of a possibly time-limited factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    /// Prime factors found so far, ascending, with exponents.
    pub factors: Vec<(BigInt, u32)>,
    /// Composite cofactor left when the deadline hit; `None` when complete.
    pub unfactored: Option<BigInt>,
}

impl IntFactorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_none()
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin; exact when `n < 2^64`, probabilistic with 20 fixed
/// witnesses above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in MR_BASES.iter().chain(MR_EXTRA.iter()) {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn rho_big(n: &BigInt, deadline: Option<Instant>) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return None;
            }
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    unreachable!()
}

/// Complete factorization of a nonzero machine integer.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n != 0, "factor_u64(0)");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    for q in [2u64, 3, 5] {
        push_power(&mut out, &mut m, q);
    }
    let mut q = 7u64;
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while q * q <= m && q < 1 << 12 {
        push_power(&mut out, &mut m, q);
        q += steps[i];
        i = (i + 1) % steps.len();
    }
    let mut stack = vec![m];
    while let Some(k) = stack.pop() {
        if k == 1 {
            continue;
        }
        if is_prime_u64(k) {
            match out.iter_mut().find(|(p, _)| *p == k) {
                Some(entry) => entry.1 += 1,
                None => out.push((k, 1)),
            }
            continue;
        }
        let f = rho_u64(k);
        stack.push(f);
        stack.push(k / f);
    }
    out.sort_unstable();
    out
}

fn push_power(out: &mut Vec<(u64, u32)>, m: &mut u64, q: u64) {
    let mut e = 0;
    while (*m).is_multiple_of(q) {
        *m /= q;
        e += 1;
    }
    if e > 0 {
        out.push((q, e));
    }
}

/// Complete prime factorization of `|n|`, ascending. `n = ±1` yields the
/// empty list.
pub fn factor_int(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let f = factor_int_with(n, &FactorConfig::default())?;
    Ok(f.factors)
}

/// Factorization with explicit trial bound and optional deadline. When the
/// deadline passes, the remaining composite is reported in `unfactored`.
pub fn factor_int_with(n: &BigInt, cfg: &FactorConfig) -> Result<IntFactorization> {
    if n.is_zero() {
        return Err(Error::InvalidParam("cannot factor 0".into()));
    }
    let mut m = n.abs();
    if let Some(small) = m.to_u64() {
        return Ok(IntFactorization {
            factors: factor_u64(small)
                .into_iter()
                .map(|(p, e)| (BigInt::from(p), e))
                .collect(),
            unfactored: None,
        });
    }

    let mut found: Vec<(BigInt, u32)> = Vec::new();
    let mut q = 2u64;
    while q < cfg.trial_bound {
        let bq = BigInt::from(q);
        let mut e = 0;
        loop {
            let (quot, rem) = m.div_rem(&bq);
            if !rem.is_zero() {
                break;
            }
            m = quot;
            e += 1;
        }
        if e > 0 {
            found.push((bq, e));
        }
        if m.is_one() {
            break;
        }
        q += if q == 2 { 1 } else { 2 };
    }

    let mut unfactored = None;
    let mut stack = vec![m];
    while let Some(k) = stack.pop() {
        if k.is_one() {
            continue;
        }
        if let Some(small) = k.to_u64() {
            for (p, e) in factor_u64(small) {
                add_factor(&mut found, BigInt::from(p), e);
            }
            continue;
        }
        if is_probable_prime(&k) {
            add_factor(&mut found, k, 1);
            continue;
        }
        if let Some((root, e)) = perfect_power(&k) {
            for _ in 0..e {
                stack.push(root.clone());
            }
            continue;
        }
        match rho_big(&k, cfg.deadline) {
            Some(f) => {
                let other = &k / &f;
                stack.push(f);
                stack.push(other);
            }
            None => {
                let acc: BigInt = unfactored.take().unwrap_or_else(BigInt::one);
                unfactored = Some(acc * k);
            }
        }
    }
    found.sort();
    Ok(IntFactorization {
        factors: found,
        unfactored,
    })
}

/// `(r, e)` with `r^e = n` and `e >= 2` maximal, if `n` is a perfect power.
fn perfect_power(n: &BigInt) -> Option<(BigInt, u32)> {
    let bits = n.bits() as u32;
    (2..=bits).rev().find_map(|e| {
        let r = n.nth_root(e);
        (r > BigInt::one() && r.pow(e) == *n).then_some((r, e))
    })
}

fn add_factor(out: &mut Vec<(BigInt, u32)>, p: BigInt, e: u32) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += e,
        None => out.push((p, e)),
    }
}

/// Euler's totient via factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi(0)");
    factor_u64(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// All positive divisors of a nonzero integer, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_int(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}
