//! Dense polynomials over 𝔽_p (ascending coefficients) and root extraction.

use crate::intpoly::{mul_mod, pow_mod, IntPoly};

/// Below this modulus roots are found by evaluating at every residue.
const BRUTE_FORCE_BELOW: u64 = 64;

type Fp = Vec<u64>;

fn trim(mut f: Fp) -> Fp {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn monic(f: Fp, p: u64) -> Fp {
    let l = inv(*f.last().unwrap(), p);
    f.into_iter().map(|c| mul_mod(c, l, p)).collect()
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder by a nonzero `b`.
fn divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), lb, p);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - mul_mod(c, bj, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(a, p)
    }
}

/// `base^e mod m`.
fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut result = vec![1u64];
    let mut b = divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = divrem(&mul(&result, &b, p), m, p).1;
        }
        b = divrem(&mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Splits a monic product of distinct linear factors into its roots.
fn split_linear(g: Fp, p: u64, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push((p - g[0]) % p),
        _ => {
            // (x + a)^((p-1)/2) - 1 separates roots r with r + a a nonzero square
            for a in 0..p {
                let h = powmod(&[a, 1], (p - 1) / 2, &g, p);
                let d = gcd(&g, &sub(&h, &[1], p), p);
                if d.len() > 1 && d.len() < g.len() {
                    let (q, _) = divrem(&g, &d, p);
                    split_linear(d, p, out);
                    split_linear(monic(q, p), p, out);
                    return;
                }
            }
            unreachable!("no splitting shift found for a product of distinct linears");
        }
    }
}

/// Distinct roots of `f` in 𝔽_p, ascending. A polynomial vanishing
/// identically mod `p` has every residue as a root.
pub fn roots_mod_p(f: &IntPoly, p: u64) -> Vec<u64> {
    let fp = trim(f.reduce_mod(p));
    if fp.is_empty() {
        return (0..p).collect();
    }
    if fp.len() == 1 {
        return Vec::new();
    }
    if p < BRUTE_FORCE_BELOW {
        return (0..p).filter(|&x| f.eval_mod(x, p) == 0).collect();
    }
    let fp = monic(fp, p);
    let xp = powmod(&[0, 1], p, &fp, p);
    let g = gcd(&fp, &sub(&xp, &[0, 1], p), p);
    let mut roots = Vec::new();
    split_linear(g, p, &mut roots);
    roots.sort_unstable();
    roots
}
