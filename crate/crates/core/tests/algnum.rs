mod common;

use std::collections::BTreeSet;

use common::{all_coeff_vectors, brute_value_set_size, rem_over_q};
use lehmer_modp::algnum::{
    balanced_sumset, eq1_chain, growth_profile, make_algebraic, partition,
    submultiplicativity_check, value_set, value_set_sizes, CoeffRange, DEFAULT_CAP,
};
use lehmer_modp::{Error, IntPoly};
use num_rational::BigRational;

const ALPHAS: [&str; 6] = [
    "-1,1",
    "-2,1",
    "-1,-1,1",
    "-1,-1,0,1",
    "1,1,0,-1,-1,-1,-1,-1,0,1,1",
    "-2,-1,2",
];

fn poly(s: &str) -> IntPoly {
    s.parse().unwrap()
}

#[test]
fn value_sets_equal_brute_force_sets() {
    for s in ALPHAS {
        let m = poly(s);
        let alpha = make_algebraic(m.clone()).unwrap();
        for d in 0..=8 {
            let ours: BTreeSet<Vec<BigRational>> = value_set(&alpha, d, CoeffRange::BINARY)
                .unwrap()
                .residues()
                .iter()
                .map(|r| r.coeffs().to_vec())
                .collect();
            let brute: BTreeSet<Vec<BigRational>> =
                all_coeff_vectors(d, 0, 1).iter().map(|v| rem_over_q(v, &m)).collect();
            assert_eq!(ours, brute, "alpha={s} d={d}");
        }
    }
}

#[test]
fn k_value_sets_match_brute_force() {
    for s in ALPHAS {
        let m = poly(s);
        let alpha = make_algebraic(m.clone()).unwrap();
        for k in 1..=2i64 {
            for d in 0..=4 {
                let ours = value_set(&alpha, d, CoeffRange::symmetric(k)).unwrap().len();
                assert_eq!(ours, brute_value_set_size(&m, d, -k, k), "alpha={s} d={d} K={k}");
            }
        }
    }
}

#[test]
fn partition_blocks_are_fibres() {
    for s in ALPHAS {
        let m = poly(s);
        let alpha = make_algebraic(m.clone()).unwrap();
        let d = 6;
        let part = partition(&alpha, d).unwrap();
        let blocks = part.canonical_blocks();
        assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 1 << (d + 1));
        for block in &blocks {
            let val = |mask: u32| rem_over_q(&lehmer_modp::algnum::mask_coeffs(mask, d), &m);
            assert!(block.iter().all(|&b| val(b) == val(block[0])));
        }
        let firsts: BTreeSet<_> = blocks
            .iter()
            .map(|b| rem_over_q(&lehmer_modp::algnum::mask_coeffs(b[0], d), &m))
            .collect();
        assert_eq!(firsts.len(), blocks.len(), "blocks must be distinct values");
    }
}

#[test]
fn integer_and_rational_examples() {
    // α = 2: every {0,1} polynomial gives a distinct integer
    let two = make_algebraic(poly("-2,1")).unwrap();
    assert_eq!(value_set_sizes(&two, 10, CoeffRange::BINARY, DEFAULT_CAP).unwrap()[10], 2048);
    // α = 1: values are 0..=d+1
    let one = make_algebraic(poly("-1,1")).unwrap();
    let sizes = value_set_sizes(&one, 10, CoeffRange::BINARY, DEFAULT_CAP).unwrap();
    assert_eq!(sizes, (2..=12).collect::<Vec<usize>>());
    // α = 1/2 behaves like α = 2 on reversed polynomials
    let half = make_algebraic(poly("-1,2")).unwrap();
    assert_eq!(value_set_sizes(&half, 9, CoeffRange::BINARY, DEFAULT_CAP).unwrap()[9], 1024);
}

#[test]
fn growth_profile_lower_bound() {
    for s in ALPHAS {
        let alpha = make_algebraic(poly(s)).unwrap();
        for row in growth_profile(&alpha, 10).unwrap() {
            assert!(row.lower_bound_ok, "alpha={s} d={}", row.d);
            assert!(row.cardinality <= 1 << (row.d + 1));
        }
    }
}

#[test]
fn submultiplicativity_holds() {
    for s in ALPHAS {
        let alpha = make_algebraic(poly(s)).unwrap();
        assert!(submultiplicativity_check(&alpha, 11).unwrap().holds(), "{s}");
    }
}

#[test]
fn balanced_sumset_is_difference_of_k_sums() {
    let alpha = make_algebraic(poly("-1,-1,1")).unwrap();
    let m = poly("-1,-1,1");
    let d = 2;
    let s: Vec<Vec<BigRational>> = all_coeff_vectors(d, 0, 1).iter().map(|v| rem_over_q(v, &m)).collect();
    let mut brute = BTreeSet::new();
    for a in &s {
        for b in &s {
            for c in &s {
                for e in &s {
                    let v: Vec<BigRational> = (0..2).map(|i| &a[i] + &b[i] - &c[i] - &e[i]).collect();
                    brute.insert(v);
                }
            }
        }
    }
    let ours: BTreeSet<Vec<BigRational>> = balanced_sumset(&alpha, d, 2, DEFAULT_CAP)
        .unwrap()
        .residues()
        .iter()
        .map(|r| r.coeffs().to_vec())
        .collect();
    assert_eq!(ours, brute);
}

#[test]
fn inclusion_chain_holds_for_small_parameters() {
    for s in ALPHAS {
        let alpha = make_algebraic(poly(s)).unwrap();
        for d in 0..=3 {
            for k in 1..=2 {
                let r = eq1_chain(&alpha, d, k).unwrap();
                assert!(r.holds(), "alpha={s} d={d} K={k}: {r:?}");
            }
        }
    }
}

#[test]
fn construction_rejects_bad_minpolys() {
    assert!(matches!(make_algebraic(poly("-1,0,1")), Err(Error::Reducible { .. })));
    assert!(matches!(make_algebraic(poly("2,0,2")), Err(Error::Imprimitive { .. })));
    assert!(make_algebraic(poly("3")).is_err());
}

#[test]
fn cap_refuses_large_sets() {
    let two = make_algebraic(poly("-2,1")).unwrap();
    assert!(matches!(
        lehmer_modp::algnum::value_set_capped(&two, 12, CoeffRange::BINARY, 4096),
        Err(Error::ResourceCap { .. })
    ));
}
