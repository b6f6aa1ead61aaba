use super::IntPoly;

/// The `n`-th cyclotomic polynomial, obtained from `x^n - 1` by exact
/// division by `Φ_m` for every proper divisor `m` of `n`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic(0)");
    let mut table: Vec<Option<IntPoly>> = vec![None; n + 1];
    cyclotomic_cached(n, &mut table)
}

fn cyclotomic_cached(n: usize, table: &mut Vec<Option<IntPoly>>) -> IntPoly {
    if let Some(p) = &table[n] {
        return p.clone();
    }
    let mut acc = IntPoly::x_pow_minus_one(n);
    for m in (1..n).filter(|m| n.is_multiple_of(*m)) {
        let phi_m = cyclotomic_cached(m, table);
        acc = acc
            .checked_div(&phi_m)
            .expect("cyclotomic factor divides x^n - 1");
    }
    table[n] = Some(acc.clone());
    acc
}

/// `Φ_1, …, Φ_n` in order, sharing the recursive work.
pub fn cyclotomics_up_to(n: usize) -> Vec<IntPoly> {
    let mut table: Vec<Option<IntPoly>> = vec![None; n + 1];
    (1..=n).map(|k| cyclotomic_cached(k, &mut table)).collect()
}
