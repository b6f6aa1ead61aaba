mod common;

use std::collections::BTreeSet;

use lehmer_modp::intpoly::{factor_poly, resultant};
use lehmer_modp::mahler::mahler_measure;
use lehmer_modp::modp::{productset, sd_modp, sumset, FpSet};
use lehmer_modp::{IntPoly, PrimeCtx};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg)
        .prop_flat_map(move |d| {
            (
                prop::collection::vec(-bound..=bound, d),
                (1..=bound).prop_flat_map(|b| prop_oneof![Just(b), Just(-b)]),
            )
        })
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            IntPoly::from_i64s(&c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_agrees_with_sylvester(f in poly_strategy(5, 7), g in poly_strategy(5, 7)) {
        prop_assert_eq!(resultant(&f, &g).unwrap(), common::sylvester_resultant(&f, &g));
    }

    #[test]
    fn resultant_swap_sign(f in poly_strategy(5, 7), g in poly_strategy(5, 7)) {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if m * n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant(&g, &f).unwrap() * BigInt::from(sign));
    }

    #[test]
    fn resultant_is_multiplicative(f in poly_strategy(3, 4), g in poly_strategy(3, 4), h in poly_strategy(3, 4)) {
        let lhs = resultant(&(&f * &g), &h).unwrap();
        prop_assert_eq!(lhs, resultant(&f, &h).unwrap() * resultant(&g, &h).unwrap());
    }

    #[test]
    fn factorization_expands(f in poly_strategy(4, 3), g in poly_strategy(3, 3)) {
        let p = &f * &g;
        let fac = factor_poly(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        for (q, _) in &fac.factors {
            prop_assert!(q.leading().unwrap() > &BigInt::from(0));
            prop_assert!(factor_poly(q).unwrap().is_irreducible());
        }
    }

    #[test]
    fn text_round_trip(f in poly_strategy(12, 1000)) {
        prop_assert_eq!(f.to_string().parse::<IntPoly>().unwrap(), f);
    }

    #[test]
    fn mahler_at_least_one_and_multiplicative(f in poly_strategy(5, 5), g in poly_strategy(5, 5)) {
        let (mf, mg, mfg) = (
            mahler_measure(&f).unwrap(),
            mahler_measure(&g).unwrap(),
            mahler_measure(&(&f * &g)).unwrap(),
        );
        prop_assert!(mf.upper() >= 1.0);
        prop_assert!((mfg.value - mf.value * mg.value).abs() <= 1e-7 * mfg.value);
    }

    #[test]
    fn fpset_ops_match_btreeset(
        a in prop::collection::btree_set(0u64..211, 1..30),
        b in prop::collection::btree_set(0u64..211, 1..30),
    ) {
        let p = 211;
        let (fa, fb) = (FpSet::from_residues(p, a.clone()), FpSet::from_residues(p, b.clone()));
        let sum: BTreeSet<u64> = a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % p)).collect();
        let prod: BTreeSet<u64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y % p)).collect();
        prop_assert_eq!(sumset(&fa, &fb).iter().collect::<BTreeSet<_>>(), sum);
        prop_assert_eq!(productset(&fa, &fb).iter().collect::<BTreeSet<_>>(), prod);
        prop_assert_eq!(fa.is_subset(&fb), a.is_subset(&b));
        prop_assert_eq!(fa.len(), a.len());
    }

    #[test]
    fn modp_value_sets_grow_and_match(x in 0u64..1009, d in 0usize..9) {
        let ctx = PrimeCtx::new(1009).unwrap();
        let s = sd_modp(x, &ctx, d);
        let t = sd_modp(x, &ctx, d + 1);
        prop_assert!(s.is_subset(&t));
        prop_assert_eq!(s.iter().collect::<BTreeSet<_>>(), common::brute_value_set_modp(x, 1009, d, 0, 1));
    }
}
