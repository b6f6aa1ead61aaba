//! Irreducible divisors of `{-1,0,1}` polynomials, their pairwise
//! resultants, and the primes dividing them.
//!
//! A prime is d-exceptional when it divides `Res(D₁, D₂)` for two distinct
//! members of `I_d`. Away from those primes the reductions of `I_d` stay
//! pairwise coprime, which is what lets a residue `α ∈ 𝔽_p` inherit the
//! value-set partition of an algebraic `β` sharing its minimal polynomial.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algnum::{canonical, make_algebraic, mask_coeffs, partition, value_set_sizes, AlgebraicNumber, CoeffRange, DEFAULT_CAP};
use crate::census::sieve_primes;
use crate::error::{Error, Result};
use crate::intpoly::{cyclotomic, euler_phi, factor_int, factor_poly, is_prime_u64, resultant, IntPoly};
use crate::mahler::mahler_measure;
use crate::modp::{mul_order, roots_mod_p, sd_modp, PrimeCtx};

/// Largest `d` for which `P_d` is enumerated.
pub const PD_MAX_D: usize = 8;
/// Largest `d` for the pairwise-resultant stage.
pub const RESULTANT_MAX_D: usize = 6;

fn decimal<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

fn decimals<S: Serializer>(ns: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_string()))
}

/// Nonzero polynomials of degree `<= d` with coefficients in `{-1,0,1}`, one
/// of each `±P` pair (the one with positive leading coefficient).
pub fn enumerate_pd(d: usize) -> Result<Vec<IntPoly>> {
    if d > PD_MAX_D {
        return Err(Error::ResourceCap {
            what: format!("enumeration of P_{d}"),
            cap: PD_MAX_D as u64,
        });
    }
    let total = 3usize.pow(d as u32 + 1);
    let mut out = Vec::with_capacity(total / 2);
    for mut idx in 0..total {
        let coeffs: Vec<i64> = (0..=d)
            .map(|_| {
                let c = (idx % 3) as i64 - 1;
                idx /= 3;
                c
            })
            .collect();
        let p = IntPoly::from_i64s(&coeffs);
        if p.leading().is_some_and(|l| l.is_positive()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// `I_d`: distinct irreducible factors (positive leading coefficient) of the
/// members of `P_d`, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleSet {
    pub d: usize,
    pub members: Vec<IntPoly>,
}

pub fn build_id(d: usize) -> Result<IrreducibleSet> {
    let pd = enumerate_pd(d)?;
    let factored: Vec<Vec<IntPoly>> = pd
        .par_iter()
        .map(|p| factor_poly(p).map(|f| f.factors.into_iter().map(|(g, _)| g).collect()))
        .collect::<Result<_>>()?;
    let set: BTreeSet<(usize, IntPoly)> = factored
        .into_iter()
        .flatten()
        .map(|g| (g.deg(), g.normalized()))
        .collect();
    Ok(IrreducibleSet {
        d,
        members: set.into_iter().map(|(_, g)| g).collect(),
    })
}

impl IrreducibleSet {
    /// Orders `m` with `Φ_m ∈ I_d`, ascending.
    pub fn cyclotomic_orders(&self) -> Vec<u64> {
        let members: BTreeSet<&IntPoly> = self.members.iter().collect();
        // φ(m) >= √(m/2), so deg Φ_m <= d forces m <= 2d²
        let m_max = 2 * (self.d as u64).pow(2) + 2;
        (1..=m_max)
            .filter(|&m| euler_phi(m) as usize <= self.d)
            .filter(|&m| members.contains(&cyclotomic(m as usize)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairResultant {
    pub i: usize,
    pub j: usize,
    pub resultant: BigInt,
}

/// `I_d` with all pairwise resultants.
#[derive(Clone, Debug)]
pub struct ResultantTable {
    pub id: IrreducibleSet,
    pub pairs: Vec<PairResultant>,
}

fn check_resultant_d(d: usize) -> Result<()> {
    if d > RESULTANT_MAX_D {
        return Err(Error::ResourceCap {
            what: format!("pairwise resultants of I_{d}"),
            cap: RESULTANT_MAX_D as u64,
        });
    }
    Ok(())
}

pub fn resultant_table(d: usize) -> Result<ResultantTable> {
    check_resultant_d(d)?;
    let id = build_id(d)?;
    let n = id.members.len();
    let index: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pairs = index
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&id.members[i], &id.members[j]);
            let r = resultant(a, b)?;
            if r.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "distinct members {} and {} of I_{d} share a root",
                    a.pretty(),
                    b.pretty()
                )));
            }
            Ok(PairResultant { i, j, resultant: r })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResultantTable { id, pairs })
}

/// `|Res|² <= (‖a‖₂²)^deg b · (‖b‖₂²)^deg a`, in exact integers.
pub fn hadamard_holds(a: &IntPoly, b: &IntPoly, res: &BigInt) -> bool {
    let (_, a2) = a.norms();
    let (_, b2) = b.norms();
    let bound = a2.pow(b.deg() as u32) * b2.pow(a.deg() as u32);
    res * res <= bound
}

impl ResultantTable {
    /// First pair whose resultant `p` divides.
    pub fn exceptional_pair(&self, p: u64) -> Option<&PairResultant> {
        let p = BigInt::from(p);
        self.pairs.iter().find(|r| r.resultant.is_multiple_of(&p))
    }

    pub fn report(&self) -> Result<ExceptionalReport> {
        let mut cache: HashMap<BigInt, Vec<BigInt>> = HashMap::new();
        let mut distinct: Vec<BigInt> = self.pairs.iter().map(|r| r.resultant.abs()).collect();
        distinct.sort();
        distinct.dedup();
        let factored: Vec<(BigInt, Vec<BigInt>)> = distinct
            .into_par_iter()
            .map(|r| {
                let primes = factor_int(&r)?.into_iter().map(|(q, _)| q).collect();
                Ok((r, primes))
            })
            .collect::<Result<_>>()?;
        cache.extend(factored);
        let primes: BTreeSet<BigInt> = cache.values().flatten().cloned().collect();
        for r in &self.pairs {
            let (a, b) = (&self.id.members[r.i], &self.id.members[r.j]);
            if !hadamard_holds(a, b, &r.resultant) {
                return Err(Error::Inconsistent(format!(
                    "Hadamard bound fails for Res({}, {}) = {}",
                    a.pretty(),
                    b.pretty(),
                    r.resultant
                )));
            }
        }
        Ok(ExceptionalReport {
            d: self.id.d,
            primes: primes.into_iter().collect(),
            pair_count: self.pairs.len(),
            max_abs_resultant: self
                .pairs
                .iter()
                .map(|r| r.resultant.abs())
                .max()
                .unwrap_or_else(BigInt::zero),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalReport {
    pub d: usize,
    #[serde(serialize_with = "decimals")]
    pub primes: Vec<BigInt>,
    pub pair_count: usize,
    #[serde(serialize_with = "decimal")]
    pub max_abs_resultant: BigInt,
}

/// The d-exceptional primes, ascending.
pub fn exceptional_primes(d: usize) -> Result<ExceptionalReport> {
    resultant_table(d)?.report()
}

/// The size bounds around the exceptional-prime count, each evaluated exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim2Report {
    pub d: usize,
    pub id_size: usize,
    #[serde(serialize_with = "decimal")]
    pub id_bound: BigInt,
    #[serde(serialize_with = "decimal")]
    pub max_l1: BigInt,
    #[serde(serialize_with = "decimal")]
    pub l1_bound: BigInt,
    pub prime_count: usize,
    #[serde(serialize_with = "decimal")]
    pub count_bound: BigInt,
    pub within_ten_pow_d: bool,
    #[serde(serialize_with = "decimal")]
    pub max_abs_resultant: BigInt,
    #[serde(serialize_with = "decimal")]
    pub resultant_bound: BigInt,
    pub pair_count: usize,
    /// Every pair satisfied the squared Hadamard inequality.
    pub hadamard_ok: bool,
    pub max_member_mahler: f64,
    pub cyclotomic_orders: Vec<u64>,
    /// `max m / (d log log d)` over `Φ_m ∈ I_d`, for `d >= 4`.
    pub c0_fit: Option<f64>,
    pub report: ExceptionalReport,
}

impl Claim2Report {
    pub fn passes(&self) -> bool {
        self.id_size <= self.id_bound.to_usize().unwrap_or(usize::MAX)
            && self.max_l1 <= self.l1_bound
            && BigInt::from(self.prime_count) <= self.count_bound
            && self.max_abs_resultant <= self.resultant_bound
            && self.hadamard_ok
            && self.max_member_mahler <= self.d as f64 + 1.0 + 1e-9
    }
}

pub fn claim2_verify(d: usize) -> Result<Claim2Report> {
    if d == 0 {
        return Err(Error::InvalidParam("exceptional-prime bounds need d >= 1".into()));
    }
    let table = resultant_table(d)?;
    let report = table.report()?;
    let big = |n: u64| BigInt::from(n);
    let d64 = d as u64;
    let members = &table.id.members;
    let max_member_mahler = members
        .par_iter()
        .map(|m| mahler_measure(m).map(|v| v.lower()))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let orders = table.id.cyclotomic_orders();
    let c0_fit = (d >= 4).then(|| {
        let scale = d as f64 * (d as f64).log2().log2();
        orders.iter().copied().max().unwrap_or(0) as f64 / scale
    });
    Ok(Claim2Report {
        d,
        id_size: members.len(),
        id_bound: big(d64) * big(3).pow(d as u32 + 1),
        max_l1: members.iter().map(|m| m.l1_norm()).max().unwrap_or_else(BigInt::zero),
        l1_bound: big(2).pow(d as u32) * big(d64 + 1),
        prime_count: report.primes.len(),
        count_bound: big(4) * big(d64).pow(4) * big(9).pow(d as u32 + 1),
        within_ten_pow_d: BigInt::from(report.primes.len()) <= big(10).pow(d as u32),
        max_abs_resultant: report.max_abs_resultant.clone(),
        resultant_bound: big(2).pow(4 * (d * d) as u32),
        pair_count: report.pair_count,
        // report() rejects any pair that breaks the inequality
        hadamard_ok: true,
        max_member_mahler,
        cyclotomic_orders: orders,
        c0_fit,
        report,
    })
}

/// Outcome of checking the residue/algebraic correspondence at one prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    pub p: u64,
    pub d: usize,
    /// Residues with at least one vanishing member.
    pub covered_residues: u64,
    pub max_vanishing: usize,
    /// Residues where two members vanish together.
    pub multiple_roots: Vec<u64>,
    pub partition_mismatches: Vec<u64>,
    pub order_mismatches: Vec<(u64, usize)>,
    pub size_mismatches: Vec<(u64, usize)>,
}

impl Claim1Report {
    pub fn passes(&self) -> bool {
        self.multiple_roots.is_empty()
            && self.partition_mismatches.is_empty()
            && self.order_mismatches.is_empty()
            && self.size_mismatches.is_empty()
    }
}

/// Fibres of `P ↦ P(α) mod p` on `S_d`, as sorted bitmask blocks.
pub fn partition_modp(alpha: u64, p: u64, d: usize) -> Vec<Vec<u32>> {
    let mut blocks: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for mask in 0..(1u32 << (d + 1)) {
        let mut v = 0u128;
        for &c in mask_coeffs(mask, d).iter().rev() {
            v = (v * alpha as u128 + c as u128) % p as u128;
        }
        blocks.entry(v as u64).or_default().push(mask);
    }
    canonical(blocks.into_values())
}

struct Transfer {
    beta: AlgebraicNumber,
    blocks: Vec<Vec<u32>>,
    sizes: Vec<usize>,
    /// `n` in `1..=d` with `β^n = 1`.
    unit_orders: Vec<bool>,
}

fn transfer_data(member: &IntPoly, d: usize) -> Result<Transfer> {
    let beta = make_algebraic(member.clone())?;
    let blocks = partition(&beta, d)?.canonical_blocks();
    let sizes = value_set_sizes(&beta, d, CoeffRange::BINARY, DEFAULT_CAP)?;
    let unit_orders = (0..=d)
        .map(|n| n > 0 && member.divides(&IntPoly::x_pow_minus_one(n)))
        .collect();
    Ok(Transfer {
        beta,
        blocks,
        sizes,
        unit_orders,
    })
}

pub fn claim1_verify(p: u64, d: usize) -> Result<Claim1Report> {
    claim1_verify_with(&resultant_table(d)?, p)
}

/// Checks, for every `α ∈ 𝔽_p`, that at most one member of `I_d` vanishes
/// at `α`, and that when `D` does, `α` and a root `β` of `D` induce the same
/// partition of `S_d`, the same value-set sizes, and the same orders `n <= d`.
pub fn claim1_verify_with(table: &ResultantTable, p: u64) -> Result<Claim1Report> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let d = table.id.d;
    if let Some(r) = table.exceptional_pair(p) {
        return Err(Error::ExceptionalPrime {
            p,
            d,
            first: table.id.members[r.i].pretty(),
            second: table.id.members[r.j].pretty(),
        });
    }
    let ctx = PrimeCtx::new(p)?;
    let mut vanishing: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (idx, m) in table.id.members.iter().enumerate() {
        for r in roots_mod_p(m, p) {
            vanishing.entry(r).or_default().push(idx);
        }
    }
    let mut cache: HashMap<usize, Transfer> = HashMap::new();
    let mut report = Claim1Report {
        p,
        d,
        covered_residues: vanishing.len() as u64,
        ..Default::default()
    };
    for (&alpha, ds) in &vanishing {
        report.max_vanishing = report.max_vanishing.max(ds.len());
        if ds.len() > 1 {
            report.multiple_roots.push(alpha);
            continue;
        }
        let idx = ds[0];
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(idx) {
            e.insert(transfer_data(&table.id.members[idx], d)?);
        }
        let t = &cache[&idx];
        debug_assert_eq!(t.beta.degree(), table.id.members[idx].deg());
        if partition_modp(alpha, p, d) != t.blocks {
            report.partition_mismatches.push(alpha);
        }
        for n in 0..=d {
            if sd_modp(alpha, &ctx, n).len() != t.sizes[n] {
                report.size_mismatches.push((alpha, n));
            }
            if n > 0 {
                let alpha_unit = alpha != 0 && ctx.pow(alpha, n as u64) == 1;
                if alpha_unit != t.unit_orders[n] {
                    report.order_mismatches.push((alpha, n));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlaggedPrime {
    pub p: u64,
    pub root: u64,
    pub order: u64,
    /// `p` divides `Res(π_α, x^order − 1)`.
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderLemmaReport {
    pub x_max: u64,
    pub prime_count: usize,
    /// Primes with a root of `π_α`.
    pub split_count: usize,
    pub flagged: Vec<FlaggedPrime>,
    pub density: f64,
    /// Flagged primes in `[√X, X]`.
    pub upper_range_flagged: usize,
}

impl OrderLemmaReport {
    pub fn divisibility_holds(&self) -> bool {
        self.flagged.iter().all(|f| f.divides)
    }
}

/// Scans primes `p <= X` for roots `r` of `π_α` mod `p` whose multiplicative
/// order is at most `√(p / log p)`, and checks each such `p` against the
/// resultant `Res(π_α, x^n − 1)` at `n = ord(r)`.
pub fn order_lemma_scan(alpha: &AlgebraicNumber, x_max: u64) -> Result<OrderLemmaReport> {
    if !alpha.is_integral() {
        return Err(Error::Unsupported(format!(
            "order lemma scan needs an algebraic integer; {} is not monic",
            alpha.minpoly().pretty()
        )));
    }
    let pi = alpha.minpoly();
    let primes = sieve_primes(x_max)?;
    let mut res_cache: HashMap<u64, BigInt> = HashMap::new();
    let mut flagged = Vec::new();
    let mut split_count = 0;
    for &p in &primes {
        let roots = roots_mod_p(pi, p);
        if roots.is_empty() {
            continue;
        }
        split_count += 1;
        let ctx = PrimeCtx::new(p)?;
        let bound = (p as f64 / (p as f64).log2()).sqrt();
        let mut best: Option<(u64, u64)> = None;
        for r in roots.into_iter().filter(|&r| r != 0) {
            let o = mul_order(r, &ctx)?;
            if o as f64 <= bound && best.is_none_or(|(_, bo)| o < bo) {
                best = Some((r, o));
            }
        }
        if let Some((root, order)) = best {
            if let std::collections::hash_map::Entry::Vacant(e) = res_cache.entry(order) {
                let r = resultant(pi, &IntPoly::x_pow_minus_one(order as usize))?;
                e.insert(r);
            }
            let divides = res_cache[&order].is_multiple_of(&BigInt::from(p));
            flagged.push(FlaggedPrime {
                p,
                root,
                order,
                divides,
            });
        }
    }
    let lo = (x_max as f64).sqrt();
    Ok(OrderLemmaReport {
        x_max,
        prime_count: primes.len(),
        split_count,
        upper_range_flagged: flagged.iter().filter(|f| f.p as f64 >= lo).count(),
        density: if primes.is_empty() {
            0.0
        } else {
            flagged.len() as f64 / primes.len() as f64
        },
        flagged,
    })
}

/// `Res(π, x^n − 1)` for `n` in `1..=n_max`; the product of these is the
/// norm-type quantity whose prime factors the order lemma constrains.
pub fn cyclotomic_resultants(pi: &IntPoly, n_max: usize) -> Result<Vec<BigInt>> {
    (1..=n_max)
        .map(|n| resultant(pi, &IntPoly::x_pow_minus_one(n)))
        .collect()
}
