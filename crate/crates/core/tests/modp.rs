mod common;

use std::collections::{BTreeSet, VecDeque};

use common::{brute_value_set_modp, naive_order, naive_primes, Rng};
use lehmer_modp::modp::{
    classify_c_wild, classify_delta_bad, classify_very_bad, mul_order, productset, roots_mod_p,
    sd_card_capped, sd_modp, sdk_modp, sum_product_inclusions, sumset, triple_product_sum,
    verify_wild_witness, wild_outcome, FpSet,
};
use lehmer_modp::{IntPoly, PrimeCtx};

fn set(s: &FpSet) -> BTreeSet<u64> {
    s.iter().collect()
}

fn ctx(p: u64) -> PrimeCtx {
    PrimeCtx::new(p).unwrap()
}

#[test]
fn orders_match_naive() {
    for p in naive_primes(400) {
        let c = ctx(p);
        for x in 1..p {
            assert_eq!(mul_order(x, &c).unwrap(), naive_order(x, p));
        }
    }
}

#[test]
fn value_sets_match_enumeration() {
    for p in [2u64, 3, 7, 61, 64 + 3, 127, 131, 257] {
        let Ok(c) = PrimeCtx::new(p) else { continue };
        for x in [0, 1, 2, p - 1, p / 3] {
            for d in 0..=7 {
                assert_eq!(set(&sd_modp(x, &c, d)), brute_value_set_modp(x, p, d, 0, 1), "p={p} x={x} d={d}");
            }
            for k in 1..=2u64 {
                for d in 0..=3 {
                    assert_eq!(
                        set(&sdk_modp(x, &c, d, k)),
                        brute_value_set_modp(x, p, d, -(k as i64), k as i64),
                        "p={p} x={x} d={d} K={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn capped_cardinality_agrees() {
    let c = ctx(1009);
    for x in [2u64, 10, 500] {
        for d in 0..=9 {
            let n = brute_value_set_modp(x, 1009, d, 0, 1).len();
            assert_eq!(sd_card_capped(x, &c, d, n), Some(n));
            if n > 1 {
                assert_eq!(sd_card_capped(x, &c, d, n - 1), None);
            }
        }
    }
}

#[test]
fn set_operations_match_naive() {
    let mut rng = Rng::new(21);
    for p in [5u64, 67, 131, 521] {
        for _ in 0..10 {
            let a: BTreeSet<u64> = (0..rng.range(1, 12)).map(|_| rng.next_u64() % p).collect();
            let b: BTreeSet<u64> = (0..rng.range(1, 12)).map(|_| rng.next_u64() % p).collect();
            let (fa, fb) = (FpSet::from_residues(p, a.clone()), FpSet::from_residues(p, b.clone()));
            let sum: BTreeSet<u64> = a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % p)).collect();
            let prod: BTreeSet<u64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y % p)).collect();
            assert_eq!(set(&sumset(&fa, &fb)), sum);
            assert_eq!(set(&productset(&fa, &fb)), prod);
            let aa: Vec<u64> = a.iter().flat_map(|x| a.iter().map(move |y| x * y % p)).collect::<BTreeSet<_>>().into_iter().collect();
            let mut three = BTreeSet::new();
            for u in &aa {
                for v in &aa {
                    for w in &aa {
                        three.insert((u + v + w) % p);
                    }
                }
            }
            assert_eq!(set(&triple_product_sum(&fa)), three);
            let shift = rng.next_u64() % p;
            assert_eq!(set(&fa.translated(shift)), a.iter().map(|x| (x + shift) % p).collect());
            let (lo, hi) = (rng.range(-9, 3), rng.range(3, 14));
            let interval: BTreeSet<u64> = a
                .iter()
                .flat_map(|&x| (lo..=hi).map(move |c| (x as i64 + c).rem_euclid(p as i64) as u64))
                .collect();
            assert_eq!(set(&fa.plus_interval(lo, hi)), interval);
        }
    }
}

#[test]
fn roots_match_brute_force() {
    let mut rng = Rng::new(17);
    for p in [2u64, 3, 13, 97, 257, 1031] {
        for _ in 0..15 {
            let deg = rng.range(1, 6) as usize;
            let f = rng.poly(deg, 20);
            let brute: Vec<u64> = (0..p)
                .filter(|&x| {
                    let mut acc: i128 = 0;
                    for &c in f.iter().rev() {
                        acc = (acc * x as i128 + c as i128).rem_euclid(p as i128);
                    }
                    acc == 0
                })
                .collect();
            assert_eq!(roots_mod_p(&IntPoly::from_i64s(&f), p), brute, "p={p} f={f:?}");
        }
    }
}

/// Order floors recomputed from their definitions.
fn floor_of(v: f64) -> u64 {
    if v.is_finite() && v >= 1.0 {
        v.ceil() as u64
    } else {
        1
    }
}

#[test]
fn delta_bad_matches_exhaustive_search() {
    let mut hits = 0;
    for p in naive_primes(300) {
        let c = ctx(p);
        let l = (p as f64).log2();
        let floor = floor_of(l * l.log2().log2());
        let delta = 0.9;
        let threshold = (p as f64).powf(delta).floor() as usize;
        let d = l.floor() as usize;
        let expected = if floor > p - 1 {
            None
        } else {
            (1..p).find(|&x| naive_order(x, p) >= floor && brute_value_set_modp(x, p, d, 0, 1).len() <= threshold)
        };
        let got = classify_delta_bad(&c, delta).unwrap();
        assert_eq!(got.witness.as_ref().map(|w| w.x), expected, "p={p}");
        assert_eq!(got.vacuous, floor > p - 1);
        hits += expected.is_some() as usize;
    }
    eprintln!("delta-bad witnesses: {hits}");
    assert!(hits > 0);
}

/// `{Σ cᵢxⁱ : |cᵢ| <= K, i <= D}` grown one coefficient at a time.
fn brute_sdk(x: u64, p: u64, d: usize, k: u64) -> usize {
    let mut acc = BTreeSet::from([0u64]);
    let mut xi = 1u64;
    for _ in 0..=d {
        let mut next = BTreeSet::new();
        for &a in &acc {
            for c in -(k as i64)..=k as i64 {
                next.insert((a as i64 + c * xi as i64).rem_euclid(p as i64) as u64);
            }
        }
        acc = next;
        xi = xi * x % p;
    }
    acc.len()
}

#[test]
fn very_bad_matches_exhaustive_search() {
    let (delta, eps) = (0.9, 0.1);
    let mut hits = 0;
    for p in naive_primes(400) {
        let c = ctx(p);
        let l = (p as f64).log2();
        let floor = floor_of((p as f64 / l).sqrt());
        let d = (l / delta).floor() as usize;
        let k = ((eps * d as f64).exp2().floor() as u64).min(p);
        let threshold = (p as f64).powf(delta).floor() as usize;
        let expected = if floor > p - 1 {
            None
        } else {
            (1..p).find(|&x| naive_order(x, p) >= floor && brute_sdk(x, p, d, k) <= threshold)
        };
        let got = classify_very_bad(&c, delta, eps).unwrap();
        assert_eq!(got.witness.as_ref().map(|w| w.x), expected, "p={p}");
        hits += expected.is_some() as usize;
    }
    eprintln!("very-bad witnesses: {hits}");
    assert!(hits > 0);
}

/// Largest BFS distance from 0 in the Cayley graph of (𝔽_p, +) with
/// generators `{x, x², …, x^h}`, or `None` if some residue is unreachable.
fn cayley_radius(x: u64, p: u64, h: u64) -> Option<u32> {
    let gens: Vec<u64> = (1..=h).map(|i| (0..i).fold(1, |a, _| a * x % p)).collect();
    let mut dist = vec![u32::MAX; p as usize];
    dist[0] = 0;
    let mut q = VecDeque::from([0u64]);
    while let Some(v) = q.pop_front() {
        for &g in &gens {
            let u = ((v + g) % p) as usize;
            if dist[u] == u32::MAX {
                dist[u] = dist[v as usize] + 1;
                q.push_back(u as u64);
            }
        }
    }
    dist.iter().all(|&d| d != u32::MAX).then(|| *dist.iter().max().unwrap())
}

#[test]
fn wild_outcomes_match_cayley_bfs() {
    let mut hits = 0;
    for c_wild in [1.0, 1.5, 2.0] {
        for p in naive_primes(400).into_iter().filter(|&p| p > 2) {
            let c = ctx(p);
            let l = (p as f64).log2();
            let h = (c_wild * l).floor() as u64;
            let budget = l.powf(c_wild).floor() as u32;
            let floor = floor_of(l * l);
            let mut expected = None;
            for x in 1..p {
                let covered = cayley_radius(x, p, h).is_some_and(|r| r <= budget);
                assert_eq!(wild_outcome(x, &c, c_wild).unwrap().covered, covered, "p={p} x={x} C={c_wild}");
                if expected.is_none() && floor < p && naive_order(x, p) >= floor && !covered {
                    expected = Some(x);
                }
            }
            let got = classify_c_wild(&c, c_wild).unwrap();
            assert_eq!(got.witness.as_ref().map(|w| w.x), expected, "p={p} C={c_wild}");
            if let Some(w) = &got.witness {
                assert!(verify_wild_witness(&c, c_wild, w).unwrap());
                hits += 1;
            }
        }
    }
    eprintln!("wild witnesses: {hits}");
    assert!(hits > 0);
}

#[test]
fn sum_product_inclusions_hold_exhaustively() {
    for p in [3u64, 11, 29] {
        let c = ctx(p);
        for x in 0..p {
            for d in 0..=3 {
                for k in 1..=2 {
                    assert!(sum_product_inclusions(x, &c, d, k).unwrap().holds(), "p={p} x={x} d={d} K={k}");
                }
            }
        }
    }
}
