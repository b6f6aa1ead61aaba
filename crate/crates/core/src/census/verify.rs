use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::sieve_primes;
use crate::algnum::{eq1_chain, growth_profile, make_algebraic, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::exceptional::{claim1_verify_with, claim2_verify, order_lemma_scan, resultant_table};
use crate::intpoly::IntPoly;
use crate::modp::{eq1_chain_modp, sum_product_inclusions, PrimeCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Thm1,
    Eq1,
    Claim1,
    Claim2,
    OrderLemma,
    Inclusions,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::Thm1,
        Claim::Eq1,
        Claim::Claim1,
        Claim::Claim2,
        Claim::OrderLemma,
        Claim::Inclusions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Thm1 => "thm1",
            Claim::Eq1 => "eq1",
            Claim::Claim1 => "claim1",
            Claim::Claim2 => "claim2",
            Claim::OrderLemma => "order-lemma",
            Claim::Inclusions => "inclusions",
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown claim {s:?}")))
    }
}

/// Optional knobs; each claim falls back to its own default.
#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub alpha: Option<IntPoly>,
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub x_max: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub claim: &'static str,
    pub passed: bool,
    pub details: Value,
    pub counterexample: Option<Value>,
}

fn golden_ratio() -> IntPoly {
    IntPoly::from_i64s(&[-1, -1, 1])
}

fn alpha_of(params: &VerifyParams) -> Result<AlgebraicNumber> {
    make_algebraic(params.alpha.clone().unwrap_or_else(golden_ratio))
}

/// `count` non-exceptional primes spread evenly over `[100, 10^5]`.
pub fn claim1_sample(table: &crate::exceptional::ResultantTable, count: usize) -> Result<Vec<u64>> {
    let pool: Vec<u64> = sieve_primes(100_000)?
        .into_iter()
        .filter(|&p| p >= 100 && table.exceptional_pair(p).is_none())
        .collect();
    if pool.is_empty() || count == 0 {
        return Ok(Vec::new());
    }
    let count = count.min(pool.len());
    Ok((0..count).map(|i| pool[i * (pool.len() - 1) / (count.max(2) - 1)]).collect())
}

pub fn verify(claim: Claim, params: &VerifyParams) -> Result<VerifyReport> {
    let report = |passed: bool, details: Value, counterexample: Option<Value>| VerifyReport {
        claim: claim.name(),
        passed,
        details,
        counterexample,
    };
    match claim {
        Claim::Thm1 => {
            let alpha = alpha_of(params)?;
            let d = params.d.unwrap_or(14);
            let rows = growth_profile(&alpha, d)?;
            let bad = rows.iter().find(|r| !r.lower_bound_ok);
            Ok(report(
                bad.is_none(),
                json!({ "alpha": alpha.minpoly().to_string(), "d_max": d, "rows": rows }),
                bad.map(|r| json!(r)),
            ))
        }
        Claim::Eq1 => {
            let alpha = alpha_of(params)?;
            let d_max = params.d.unwrap_or(4);
            let k_max = params.k.unwrap_or(3);
            let mut violations = 0;
            let mut first = None;
            let mut checks = 0usize;
            let mut note = |label: Value, r: crate::algnum::InclusionReport| {
                checks += 1;
                violations += r.violations();
                if !r.holds() && first.is_none() {
                    first = Some(json!({ "at": label, "report": r }));
                }
            };
            for d in 0..=d_max {
                for k in 1..=k_max {
                    note(json!({ "field": "Q(alpha)", "d": d, "k": k }), eq1_chain(&alpha, d, k)?);
                    for p in [7u64, 101] {
                        let ctx = PrimeCtx::new(p)?;
                        for x in 0..p {
                            let r = eq1_chain_modp(x, &ctx, d, k as u64)?;
                            note(json!({ "p": p, "x": x, "d": d, "k": k }), r);
                        }
                    }
                }
            }
            Ok(report(
                violations == 0,
                json!({ "alpha": alpha.minpoly().to_string(), "d_max": d_max, "k_max": k_max, "chains": checks, "violations": violations }),
                first,
            ))
        }
        Claim::Claim1 => {
            let d = params.d.unwrap_or(3);
            let count = params.k.unwrap_or(20);
            let table = resultant_table(d)?;
            let mut checked = Vec::new();
            let mut failure = None;
            for p in claim1_sample(&table, count)? {
                let r = claim1_verify_with(&table, p)?;
                if !r.passes() && failure.is_none() {
                    failure = Some(json!(r));
                }
                checked.push(json!({ "p": p, "covered_residues": r.covered_residues, "passes": r.passes() }));
            }
            Ok(report(failure.is_none(), json!({ "d": d, "primes": checked }), failure))
        }
        Claim::Claim2 => {
            let d = params.d.unwrap_or(4);
            let c = claim2_verify(d)?;
            let passed = c.passes();
            Ok(report(passed, json!(c), (!passed).then(|| json!({ "d": d }))))
        }
        Claim::OrderLemma => {
            let alpha = alpha_of(params)?;
            let x = params.x_max.unwrap_or(100_000);
            let r = order_lemma_scan(&alpha, x)?;
            let bad = r.flagged.iter().find(|f| !f.divides).map(|f| json!(f));
            Ok(report(bad.is_none(), json!(r), bad))
        }
        Claim::Inclusions => {
            let d_max = params.d.unwrap_or(4);
            let k_max = params.k.unwrap_or(3) as u64;
            let x_max = params.x_max.unwrap_or(101);
            let mut violations = 0;
            let mut checks = 0usize;
            let mut first = None;
            for p in sieve_primes(x_max)? {
                let ctx = PrimeCtx::new(p)?;
                for x in 0..p {
                    for d in 0..=d_max {
                        for k in 1..=k_max {
                            let r = sum_product_inclusions(x, &ctx, d, k)?;
                            checks += 1;
                            violations += r.violations();
                            if !r.holds() && first.is_none() {
                                first = Some(json!({ "p": p, "x": x, "d": d, "k": k, "report": r }));
                            }
                        }
                    }
                }
            }
            Ok(report(
                violations == 0,
                json!({ "p_max": x_max, "d_max": d_max, "k_max": k_max, "checks": checks, "violations": violations }),
                first,
            ))
        }
    }
}
