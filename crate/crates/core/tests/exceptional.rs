mod common;

use std::collections::BTreeSet;

use common::{all_coeff_vectors, naive_factor, naive_order, naive_primes, rem_over_q, sylvester_resultant};
use lehmer_modp::algnum::{make_algebraic, mask_coeffs};
use lehmer_modp::exceptional::{
    build_id, claim1_verify, claim2_verify, enumerate_pd, exceptional_primes, order_lemma_scan,
    partition_modp, resultant_table,
};
use lehmer_modp::{Error, IntPoly};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// `I_d` from trial-division factorization of every `{-1,0,1}` polynomial.
fn naive_id(d: usize) -> BTreeSet<Vec<i64>> {
    all_coeff_vectors(d, -1, 1)
        .into_iter()
        .filter_map(|mut v| {
            while v.last() == Some(&0) {
                v.pop();
            }
            (v.len() > 1).then_some(v)
        })
        .flat_map(|v| naive_factor(&v))
        .collect()
}

fn as_i64s(p: &IntPoly) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
}

#[test]
fn pd_enumeration_counts() {
    for d in 0..=6 {
        let pd = enumerate_pd(d).unwrap();
        assert_eq!(pd.len(), (3usize.pow(d as u32 + 1) - 1) / 2);
        assert!(pd.iter().all(|p| p.coeffs().iter().all(|c| c.abs() <= BigInt::from(1))));
    }
}

#[test]
fn id_matches_naive_factorization() {
    for d in 1..=4 {
        let ours: BTreeSet<Vec<i64>> = build_id(d).unwrap().members.iter().map(as_i64s).collect();
        assert_eq!(ours, naive_id(d), "d={d}");
    }
}

/// Distinct primes dividing some nonzero pairwise resultant, by trial division.
fn naive_exceptional(d: usize) -> BTreeSet<u64> {
    let id: Vec<IntPoly> = naive_id(d).iter().map(|v| IntPoly::from_i64s(v)).collect();
    let mut primes = BTreeSet::new();
    for i in 0..id.len() {
        for j in i + 1..id.len() {
            let mut r = sylvester_resultant(&id[i], &id[j]).abs().to_u64().unwrap();
            assert!(r != 0);
            let mut q = 2;
            while r > 1 {
                if q * q > r {
                    primes.insert(r);
                    break;
                }
                while r.is_multiple_of(q) {
                    primes.insert(q);
                    r /= q;
                }
                q += 1;
            }
        }
    }
    primes
}

#[test]
fn exceptional_primes_match_sylvester_oracle() {
    for d in 1..=4 {
        let ours: BTreeSet<u64> = exceptional_primes(d)
            .unwrap()
            .primes
            .iter()
            .map(|p| p.to_u64().unwrap())
            .collect();
        assert_eq!(ours, naive_exceptional(d), "d={d}");
    }
    assert_eq!(
        exceptional_primes(2).unwrap().primes,
        [2, 3, 5].map(BigInt::from).to_vec()
    );
}

#[test]
fn table_resultants_match_sylvester() {
    let t = resultant_table(3).unwrap();
    for pr in &t.pairs {
        let (a, b) = (&t.id.members[pr.i], &t.id.members[pr.j]);
        assert_eq!(pr.resultant, sylvester_resultant(a, b));
        assert!(!pr.resultant.is_zero());
    }
}

#[test]
fn exceptional_bounds_hold() {
    for d in 1..=5 {
        let r = claim2_verify(d).unwrap();
        assert!(r.passes(), "d={d}: {r:?}");
        assert!(r.within_ten_pow_d, "d={d}");
    }
}

/// The partition transfer checked directly: at a non-exceptional prime, each residue is a
/// root of at most one member of `I_d`, and a root of `β` induces the same
/// partition of `S_d` as `β` itself.
#[test]
fn partition_transfer_against_direct_comparison() {
    let d = 3;
    let id = naive_id(d);
    let bad = naive_exceptional(d);
    let primes: Vec<u64> = naive_primes(600).into_iter().filter(|p| !bad.contains(p)).collect();
    for &p in primes.iter().step_by(7) {
        for a in 0..p {
            let vanishing: Vec<&Vec<i64>> = id
                .iter()
                .filter(|f| {
                    f.iter().rev().fold(0i64, |acc, &c| (acc * a as i64 + c).rem_euclid(p as i64)) == 0
                })
                .collect();
            assert!(vanishing.len() <= 1, "p={p} a={a}: {vanishing:?}");
            if let Some(beta) = vanishing.first() {
                let m = IntPoly::from_i64s(beta);
                let mut over_q: std::collections::BTreeMap<_, Vec<u32>> = Default::default();
                for mask in 0..(1u32 << (d + 1)) {
                    over_q.entry(rem_over_q(&mask_coeffs(mask, d), &m)).or_default().push(mask);
                }
                let mut blocks: Vec<Vec<u32>> = over_q.into_values().collect();
                blocks.sort();
                assert_eq!(partition_modp(a, p, d), blocks, "p={p} a={a} beta={beta:?}");
            }
        }
        assert!(claim1_verify(p, d).unwrap().passes(), "p={p}");
    }
}

#[test]
fn transfer_refuses_exceptional_primes() {
    assert!(matches!(claim1_verify(5, 2), Err(Error::ExceptionalPrime { .. })));
}

#[test]
fn order_lemma_for_two_matches_naive_orders() {
    let two = make_algebraic(IntPoly::from_i64s(&[-2, 1])).unwrap();
    let r = order_lemma_scan(&two, 20_000).unwrap();
    let expected: Vec<u64> = naive_primes(20_000)
        .into_iter()
        .filter(|&p| p > 2 && naive_order(2, p) as f64 <= (p as f64 / (p as f64).log2()).sqrt())
        .collect();
    assert_eq!(r.flagged.iter().map(|f| f.p).collect::<Vec<_>>(), expected);
    assert!(r.divisibility_holds());
}

#[test]
fn order_lemma_for_golden_ratio_matches_brute_roots() {
    let phi = make_algebraic(IntPoly::from_i64s(&[-1, -1, 1])).unwrap();
    let x = 20_000;
    let r = order_lemma_scan(&phi, x).unwrap();
    let mut expected = Vec::new();
    let mut split = 0;
    for p in naive_primes(x) {
        let roots: Vec<u64> = (1..p).filter(|&a| (a * a + 2 * p - a - 1) % p == 0).collect();
        split += !roots.is_empty() as usize;
        let bound = (p as f64 / (p as f64).log2()).sqrt();
        if roots.iter().any(|&a| naive_order(a, p) as f64 <= bound) {
            expected.push(p);
        }
    }
    assert_eq!(r.split_count, split);
    assert_eq!(r.flagged.iter().map(|f| f.p).collect::<Vec<_>>(), expected);
    assert!(r.divisibility_holds());
}

#[test]
fn order_lemma_rejects_non_integers() {
    let half = make_algebraic(IntPoly::from_i64s(&[-1, 2])).unwrap();
    assert!(matches!(order_lemma_scan(&half, 100), Err(Error::Unsupported(_))));
}
