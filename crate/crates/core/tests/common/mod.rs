//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's algorithms.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use lehmer_modp::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// SplitMix64.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }

    /// Polynomial of exact degree `deg` with coefficients in `[-b, b]`.
    pub fn poly(&mut self, deg: usize, b: i64) -> Vec<i64> {
        let mut c: Vec<i64> = (0..=deg).map(|_| self.range(-b, b)).collect();
        while c[deg] == 0 {
            c[deg] = self.range(-b, b);
        }
        c
    }
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Determinant by Gaussian elimination over ℚ.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let pv = m[col][col].clone();
        acc *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    acc
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    let fc: Vec<&BigInt> = f.coeffs().iter().rev().collect();
    let gc: Vec<&BigInt> = g.coeffs().iter().rev().collect();
    for i in 0..n {
        let mut row = vec![BigRational::zero(); size];
        for (j, c) in fc.iter().enumerate() {
            row[i + j] = rat(c);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for (j, c) in gc.iter().enumerate() {
            row[i + j] = rat(c);
        }
        rows.push(row);
    }
    det(rows).to_integer()
}

/// Remainder of `p` modulo `m` over ℚ, padded to length `deg m`.
pub fn rem_over_q(p: &[i64], m: &IntPoly) -> Vec<BigRational> {
    let mc: Vec<BigRational> = m.coeffs().iter().map(rat).collect();
    let n = mc.len() - 1;
    let mut r: Vec<BigRational> = p.iter().map(|&c| BigRational::from_integer(c.into())).collect();
    while r.len() > n {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let q = &top / &mc[n];
        let shift = r.len() - n;
        for i in 0..n {
            let t = &q * &mc[i];
            r[shift + i] -= t;
        }
    }
    r.resize(n, BigRational::zero());
    r
}

/// Every coefficient vector of length `d + 1` with entries in `[lo, hi]`.
pub fn all_coeff_vectors(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..=d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// `|{P(α) : P ∈ coefficient box}|` by reduction modulo the minimal polynomial.
pub fn brute_value_set_size(m: &IntPoly, d: usize, lo: i64, hi: i64) -> usize {
    all_coeff_vectors(d, lo, hi)
        .iter()
        .map(|v| rem_over_q(v, m))
        .collect::<BTreeSet<_>>()
        .len()
}

/// `{P(x) mod p : P ∈ coefficient box}`.
pub fn brute_value_set_modp(x: u64, p: u64, d: usize, lo: i64, hi: i64) -> BTreeSet<u64> {
    all_coeff_vectors(d, lo, hi)
        .iter()
        .map(|v| {
            let mut acc: i128 = 0;
            for &c in v.iter().rev() {
                acc = (acc * x as i128 + c as i128).rem_euclid(p as i128);
            }
            acc as u64
        })
        .collect()
}

pub fn naive_order(x: u64, p: u64) -> u64 {
    let mut y = x % p;
    let mut n = 1;
    while y != 1 {
        y = y * x % p;
        n += 1;
    }
    n
}

pub fn naive_primes(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

/// Exact division of integer polynomials in `i64`, or `None`.
pub fn divide_i64(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = den.len() - 1;
    if num.len() < den.len() {
        return None;
    }
    let mut r = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let top = r[i + dn];
        if top % den[dn] != 0 {
            return None;
        }
        let c = top / den[dn];
        q[i] = c;
        for j in 0..=dn {
            r[i + j] -= c * den[j];
        }
    }
    r.iter().all(|&c| c == 0).then_some(q)
}

/// Reducibility over ℤ of a primitive polynomial of degree ≤ 4 with small
/// coefficients, by searching for a factor of degree 1 or 2.
pub fn naive_is_irreducible(p: &[i64]) -> bool {
    let deg = p.len() - 1;
    if deg <= 1 {
        return true;
    }
    let l2: f64 = p.iter().map(|&c| (c * c) as f64).sum::<f64>().sqrt();
    // Landau–Mignotte: coefficients of a factor of degree k are at most C(k,i)·‖p‖₂
    let bound = (2.0 * l2).ceil() as i64;
    let lead = p[deg].abs();
    for k in 1..=deg / 2 {
        for a in (1..=lead).filter(|a| lead % a == 0) {
            for c in all_coeff_vectors(k - 1, -bound, bound) {
                let mut f = c.clone();
                f.push(a);
                if divide_i64(p, &f).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}

fn normalize_sign(mut f: Vec<i64>) -> Vec<i64> {
    if f.last().is_some_and(|&c| c < 0) {
        f.iter_mut().for_each(|c| *c = -*c);
    }
    f
}

/// Irreducible factors over ℤ (positive leading coefficient) of a small
/// polynomial, by searching for divisors up to half the degree.
pub fn naive_factor(p: &[i64]) -> Vec<Vec<i64>> {
    let deg = p.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let l2: f64 = p.iter().map(|&c| (c * c) as f64).sum::<f64>().sqrt();
    let bound = (2.0 * l2).ceil() as i64;
    let lead = p[deg].abs();
    for k in 1..=deg / 2 {
        for a in (1..=lead).filter(|a| lead % a == 0) {
            for c in all_coeff_vectors(k - 1, -bound, bound) {
                let mut f = c.clone();
                f.push(a);
                if let Some(q) = divide_i64(p, &f) {
                    let mut out = naive_factor(&f);
                    out.extend(naive_factor(&q));
                    return out;
                }
            }
        }
    }
    vec![normalize_sign(p.to_vec())]
}
