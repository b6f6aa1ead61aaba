use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{mul_order, sd_card_capped, sdk_card_capped, FpSet, PrimeCtx};
use crate::error::{Error, Result};
use crate::intpoly::mul_mod;

/// Minimum multiplicative order a residue needs to be considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFloor {
    pub value: u64,
    /// The defining expression was undefined or below 1 and was raised to 1.
    pub clamped: bool,
}

impl OrderFloor {
    fn from_real(v: f64) -> Self {
        if v.is_finite() && v >= 1.0 {
            OrderFloor {
                value: v.ceil() as u64,
                clamped: false,
            }
        } else {
            OrderFloor {
                value: 1,
                clamped: true,
            }
        }
    }

    /// No element of 𝔽_p^× can reach the floor.
    pub fn is_vacuous(&self, p: u64) -> bool {
        self.value > p - 1
    }
}

/// `log p · log log log p`.
pub fn delta_bad_floor(p: u64) -> OrderFloor {
    let l = (p as f64).log2();
    OrderFloor::from_real(l * l.log2().log2())
}

/// `√(p / log p)`.
pub fn very_bad_floor(p: u64) -> OrderFloor {
    let l = (p as f64).log2();
    OrderFloor::from_real((p as f64 / l).sqrt())
}

/// `(log p)²`.
pub fn wild_floor(p: u64) -> OrderFloor {
    let l = (p as f64).log2();
    OrderFloor::from_real(l * l)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadWitness {
    pub x: u64,
    pub order: u64,
    pub d_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub cardinality: u64,
    pub threshold: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadClassification {
    pub witness: Option<BadWitness>,
    pub order_floor: OrderFloor,
    pub vacuous: bool,
    pub threshold: u64,
    pub d: u64,
    pub k: Option<u64>,
    /// Qualifying residues examined before stopping.
    pub scanned: u64,
}

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::InvalidParam(format!("{name} must lie in (0,1), got {v}")));
    }
    Ok(())
}

fn scan_bad(
    ctx: &PrimeCtx,
    floor: OrderFloor,
    threshold: u64,
    d: u64,
    k: Option<u64>,
) -> Result<BadClassification> {
    let p = ctx.p();
    let mut out = BadClassification {
        witness: None,
        order_floor: floor,
        vacuous: floor.is_vacuous(p),
        threshold,
        d,
        k,
        scanned: 0,
    };
    if out.vacuous {
        return Ok(out);
    }
    let cap = threshold.min(usize::MAX as u64) as usize;
    for x in 1..p {
        let order = mul_order(x, ctx)?;
        if order < floor.value {
            continue;
        }
        out.scanned += 1;
        let card = match k {
            None => sd_card_capped(x, ctx, d as usize, cap),
            Some(k) => sdk_card_capped(x, ctx, d as usize, k, cap),
        };
        if let Some(c) = card {
            out.witness = Some(BadWitness {
                x,
                order,
                d_checked: d,
                k,
                cardinality: c as u64,
                threshold,
            });
            break;
        }
    }
    Ok(out)
}

fn floor_pow(p: u64, e: f64) -> u64 {
    (p as f64).powf(e).floor() as u64
}

/// Looks for `x` of order at least `log p · log log log p` with
/// `|S_d(x)| <= p^δ` at `d = ⌊log p⌋`. Sizes grow with `d`, so the largest
/// `d` decides.
pub fn classify_delta_bad(ctx: &PrimeCtx, delta: f64) -> Result<BadClassification> {
    check_unit_interval("delta", delta)?;
    let p = ctx.p();
    let d = ctx.log2p().floor() as u64;
    scan_bad(ctx, delta_bad_floor(p), floor_pow(p, delta), d, None)
}

/// Looks for `x` of order at least `√(p / log p)` with `|S_D^K(x)| <= p^δ`
/// at `D = ⌊log p / δ⌋` and `K = ⌊2^(εD)⌋`.
pub fn classify_very_bad(ctx: &PrimeCtx, delta: f64, epsilon: f64) -> Result<BadClassification> {
    check_unit_interval("delta", delta)?;
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParam(format!("epsilon must be positive, got {epsilon}")));
    }
    let p = ctx.p();
    let d = (ctx.log2p() / delta).floor() as u64;
    // values past p give the same (full) coefficient set
    let k = 2f64.powf(epsilon * d as f64).floor().min(p as f64) as u64;
    scan_bad(ctx, very_bad_floor(p), floor_pow(p, delta), d, Some(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WildParams {
    pub order_floor: OrderFloor,
    /// `|H| = ⌊C log p⌋`.
    pub h_len: u64,
    /// Number of summands allowed, `⌊(log p)^C⌋`.
    pub budget: u64,
}

pub fn wild_params(p: u64, c: f64) -> WildParams {
    let l = (p as f64).log2();
    WildParams {
        order_floor: wild_floor(p),
        h_len: (c * l).floor() as u64,
        budget: l.powf(c).floor() as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WildWitness {
    pub x: u64,
    pub order: u64,
    pub unreached: u64,
    pub steps_used: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WildClassification {
    pub witness: Option<WildWitness>,
    pub params: WildParams,
    pub vacuous: bool,
    pub scanned: u64,
}

/// Result of the layered sumset walk for one `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WildOutcome {
    pub x: u64,
    pub order: u64,
    pub steps_used: u64,
    pub reached: u64,
    pub covered: bool,
    /// The walk stopped because a step added nothing.
    pub stabilized: bool,
    pub unreached: Option<u64>,
}

fn geometric_progression(x: u64, len: u64, p: u64) -> Vec<u64> {
    let mut h = Vec::with_capacity(len as usize);
    let mut y = x % p;
    for _ in 0..len {
        h.push(y);
        y = mul_mod(y, x, p);
    }
    h.sort_unstable();
    h.dedup();
    h
}

/// Runs `R₀ = {0}`, `R_{k+1} = R_k ∪ (R_k + H)` for `x` until the budget is
/// spent or a step adds nothing new.
pub fn wild_outcome(x: u64, ctx: &PrimeCtx, c: f64) -> Result<WildOutcome> {
    ctx.require_bitset()?;
    let p = ctx.p();
    let order = mul_order(x, ctx)?;
    let params = wild_params(p, c);
    let h = geometric_progression(x, params.h_len, p);

    let mut reached = FpSet::from_residues(p, [0]);
    let mut frontier = vec![0u64];
    let mut steps = 0u64;
    let mut stabilized = false;
    while steps < params.budget && !reached.is_full() {
        steps += 1;
        let mut fresh = Vec::new();
        if (frontier.len() as u64) * 64 < p {
            for &f in &frontier {
                for &g in &h {
                    let v = if f + g >= p { f + g - p } else { f + g };
                    if reached.insert(v) {
                        fresh.push(v);
                    }
                }
            }
        } else {
            let mut words = reached.words().to_vec();
            for &g in &h {
                reached.or_translated_into(g, &mut words);
            }
            for (i, (&new, &old)) in words.iter().zip(reached.words()).enumerate() {
                let mut diff = new & !old;
                while diff != 0 {
                    fresh.push(i as u64 * 64 + diff.trailing_zeros() as u64);
                    diff &= diff - 1;
                }
            }
            *reached.words_mut() = words;
            reached.recount();
        }
        if fresh.is_empty() {
            stabilized = true;
            break;
        }
        frontier = fresh;
    }
    Ok(WildOutcome {
        x,
        order,
        steps_used: steps,
        reached: reached.len() as u64,
        covered: reached.is_full(),
        stabilized,
        unreached: reached.first_missing(),
    })
}

/// Looks for `x` of order at least `(log p)²` whose power set
/// `H = {x, …, x^⌊C log p⌋}` fails to cover 𝔽_p with at most `⌊(log p)^C⌋`
/// summands. The empty sum is allowed, so `0` is always reached.
pub fn classify_c_wild(ctx: &PrimeCtx, c: f64) -> Result<WildClassification> {
    if !(c >= 1.0 && c.is_finite()) {
        return Err(Error::InvalidParam(format!("C must be at least 1, got {c}")));
    }
    ctx.require_bitset()?;
    let p = ctx.p();
    let params = wild_params(p, c);
    let mut out = WildClassification {
        witness: None,
        params,
        vacuous: params.order_floor.is_vacuous(p),
        scanned: 0,
    };
    if out.vacuous {
        return Ok(out);
    }
    for x in 1..p {
        if mul_order(x, ctx)? < params.order_floor.value {
            continue;
        }
        out.scanned += 1;
        let o = wild_outcome(x, ctx, c)?;
        if !o.covered {
            out.witness = Some(WildWitness {
                x,
                order: o.order,
                unreached: o.unreached.expect("uncovered walk has a missing residue"),
                steps_used: o.steps_used,
            });
            break;
        }
    }
    Ok(out)
}

/// Re-checks a wild witness by breadth-first search over the Cayley graph of
/// `(𝔽_p, +)` with generators `H`, comparing the distance of the unreached
/// residue with the summand budget.
pub fn verify_wild_witness(ctx: &PrimeCtx, c: f64, w: &WildWitness) -> Result<bool> {
    let p = ctx.p();
    let params = wild_params(p, c);
    let order = mul_order(w.x, ctx)?;
    if order != w.order || order < params.order_floor.value || w.unreached >= p {
        return Ok(false);
    }
    let h = geometric_progression(w.x, params.h_len, p);
    let mut dist = vec![u32::MAX; p as usize];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u64]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v as usize];
        if dv as u64 >= params.budget {
            continue;
        }
        for &g in &h {
            let u = ((v + g) % p) as usize;
            if dist[u] == u32::MAX {
                dist[u] = dv + 1;
                queue.push_back(u as u64);
            }
        }
    }
    Ok(dist[w.unreached as usize] == u32::MAX)
}
