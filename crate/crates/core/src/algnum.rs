//! Exact arithmetic in ℚ[x]/(π) and enumeration of value sets
//! `S_d(α) = {P(α) : deg P <= d, coefficients in a fixed integer range}`.
//!
//! Enumeration is breadth-first in `d` using `S_{d+1} = R + α·S_d`. Elements
//! of level `d` are stored scaled by `a₀^d` (with `a₀` the leading
//! coefficient of π), which keeps every coordinate integral even for
//! non-monic minimal polynomials. Two elements at the same level are equal
//! exactly when their scaled coordinate vectors are.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{factor_poly, IntPoly};
use crate::mahler::{mahler_measure, MahlerValue};

/// Default ceiling on the size of any enumerated value set.
pub const DEFAULT_CAP: usize = 1 << 24;

/// Exponent `c` in the lower bound `|S_d(α)| >= min{2, M(α)}^(c·d)`.
pub const GROWTH_EXPONENT: f64 = 0.44;

/// An algebraic number, given by its minimal polynomial over ℤ (primitive,
/// irreducible, positive leading coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
}

/// Validates `minpoly` and wraps it. A negative leading coefficient is
/// flipped; reducible or imprimitive input is rejected.
pub fn make_algebraic(minpoly: IntPoly) -> Result<AlgebraicNumber> {
    AlgebraicNumber::new(minpoly)
}

impl AlgebraicNumber {
    pub fn new(minpoly: IntPoly) -> Result<Self> {
        let deg = minpoly.degree().ok_or(Error::ZeroPolynomial)?;
        if deg == 0 {
            return Err(Error::ConstantMinpoly(minpoly.to_string()));
        }
        let content = minpoly.content();
        if !content.is_one() {
            return Err(Error::Imprimitive {
                poly: minpoly.to_string(),
                content: content.to_string(),
            });
        }
        let minpoly = minpoly.normalized();
        let fact = factor_poly(&minpoly)?;
        if !fact.is_irreducible() {
            let witness = fact.factors[0].0.to_string();
            return Err(Error::Reducible {
                poly: minpoly.to_string(),
                factor: witness,
            });
        }
        Ok(Self { minpoly })
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    /// Leading coefficient `a₀` of the minimal polynomial.
    pub fn leading(&self) -> &BigInt {
        self.minpoly.leading().unwrap()
    }

    /// Whether α is an algebraic integer (monic minimal polynomial).
    pub fn is_integral(&self) -> bool {
        self.minpoly.is_monic()
    }

    pub fn mahler(&self) -> Result<MahlerValue> {
        mahler_measure(&self.minpoly)
    }

    /// Multiplies a scaled element by `a₀·α`, staying in ℤⁿ.
    fn mul_alpha_scaled(&self, w: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree();
        let coeffs = self.minpoly.coeffs();
        let a0 = &coeffs[n];
        let top = &w[n - 1];
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = if i == 0 {
                BigInt::zero()
            } else {
                a0 * &w[i - 1]
            };
            if !top.is_zero() {
                c -= top * &coeffs[i];
            }
            out.push(c);
        }
        out
    }

    /// `a₀^(len-1) · P(α)` for a coefficient list in ascending order.
    fn eval_scaled(&self, coeffs: &[i64]) -> Vec<BigInt> {
        let n = self.degree();
        let a0 = self.leading();
        let mut acc = vec![BigInt::zero(); n];
        let mut scale = BigInt::one();
        for (step, &c) in coeffs.iter().rev().enumerate() {
            if step > 0 {
                acc = self.mul_alpha_scaled(&acc);
                scale *= a0;
            }
            acc[0] += &scale * BigInt::from(c);
        }
        acc
    }

    fn unscale(&self, key: &[BigInt], level: usize) -> Residue {
        let denom = self.leading().pow(level as u32);
        Residue {
            coeffs: key
                .iter()
                .map(|c| BigRational::new(c.clone(), denom.clone()))
                .collect(),
        }
    }

    /// `P(α)` as a reduced residue, via polynomial remainder over ℚ.
    pub fn residue_of(&self, p: &IntPoly) -> Residue {
        let n = self.degree();
        let m: Vec<BigRational> = self
            .minpoly
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r: Vec<BigRational> = p
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        while r.len() > n {
            let top = r.pop().unwrap() / &m[n];
            let shift = r.len() - n;
            for i in 0..n {
                r[shift + i] -= &top * &m[i];
            }
        }
        r.resize(n, BigRational::zero());
        Residue { coeffs: r }
    }

    pub fn add(&self, a: &Residue, b: &Residue) -> Residue {
        Residue {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        let n = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce_rational(prod)
    }

    fn reduce_rational(&self, mut r: Vec<BigRational>) -> Residue {
        let n = self.degree();
        let a0 = BigRational::from_integer(self.leading().clone());
        let m = self.minpoly.coeffs();
        while r.len() > n {
            let top = r.pop().unwrap() / &a0;
            let shift = r.len() - n;
            for i in 0..n {
                r[shift + i] -= &top * BigRational::from_integer(m[i].clone());
            }
        }
        r.resize(n, BigRational::zero());
        Residue { coeffs: r }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {}", self.minpoly.pretty())
    }
}

/// An element of ℚ(α) in the power basis `1, α, …, α^(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    coeffs: Vec<BigRational>,
}

impl Residue {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Canonical text key: lowest-terms `num/den` coordinates joined by `,`.
    pub fn key(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Inclusive integer coefficient range `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoeffRange {
    pub lo: i64,
    pub hi: i64,
}

impl CoeffRange {
    /// Coefficients in `{0, 1}`.
    pub const BINARY: CoeffRange = CoeffRange { lo: 0, hi: 1 };

    /// Coefficients in `[-k, k]`.
    pub fn symmetric(k: i64) -> Self {
        Self { lo: -k, hi: k }
    }

    pub fn width(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + Clone {
        self.lo..=self.hi
    }
}

/// The exact set `{P(α)}` over polynomials of degree `<= d` with
/// coefficients in `range`.
#[derive(Clone, Debug)]
pub struct ValueSet {
    alpha: AlgebraicNumber,
    d: usize,
    range: CoeffRange,
    elements: HashSet<Vec<BigInt>>,
}

impl ValueSet {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn range(&self) -> CoeffRange {
        self.range
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: &Residue) -> bool {
        let scale = BigRational::from_integer(self.alpha.leading().pow(self.d as u32));
        let key: Option<Vec<BigInt>> = r
            .coeffs
            .iter()
            .map(|c| {
                let s = c * &scale;
                s.is_integer().then(|| s.to_integer())
            })
            .collect();
        key.is_some_and(|k| self.elements.contains(&k))
    }

    /// Members as reduced residues, sorted.
    pub fn residues(&self) -> Vec<Residue> {
        let mut out: Vec<Residue> = self
            .elements
            .iter()
            .map(|k| self.alpha.unscale(k, self.d))
            .collect();
        out.sort();
        out
    }

    /// Element-wise inclusion; both sets must share α and `d`.
    pub fn is_subset(&self, other: &ValueSet) -> bool {
        assert_eq!(self.alpha, other.alpha);
        assert_eq!(self.d, other.d);
        self.elements.is_subset(&other.elements)
    }

    /// Members of `self` absent from `other`.
    pub fn difference(&self, other: &ValueSet) -> Vec<Residue> {
        let mut out: Vec<Residue> = self
            .elements
            .difference(&other.elements)
            .map(|k| self.alpha.unscale(k, self.d))
            .collect();
        out.sort();
        out
    }

    /// `{a + b}`; both operands must share α and `d`.
    pub fn sumset(&self, other: &ValueSet, cap: usize) -> Result<ValueSet> {
        assert_eq!(self.alpha, other.alpha);
        assert_eq!(self.d, other.d);
        let mut elements = HashSet::new();
        for a in &self.elements {
            for b in &other.elements {
                elements.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>());
                if elements.len() > cap {
                    return Err(cap_error("sumset", cap));
                }
            }
        }
        Ok(ValueSet {
            alpha: self.alpha.clone(),
            d: self.d,
            range: CoeffRange {
                lo: self.range.lo + other.range.lo,
                hi: self.range.hi + other.range.hi,
            },
            elements,
        })
    }

    /// `{-a}`.
    pub fn negated(&self) -> ValueSet {
        ValueSet {
            alpha: self.alpha.clone(),
            d: self.d,
            range: CoeffRange {
                lo: -self.range.hi,
                hi: -self.range.lo,
            },
            elements: self
                .elements
                .iter()
                .map(|k| k.iter().map(|c| -c).collect())
                .collect(),
        }
    }
}

fn cap_error(what: &str, cap: usize) -> Error {
    Error::ResourceCap {
        what: what.into(),
        cap: cap as u64,
    }
}

/// Runs the level recursion up to `d`, calling `visit(level, set)` after each
/// level.
fn walk_levels(
    alpha: &AlgebraicNumber,
    d: usize,
    range: CoeffRange,
    cap: usize,
    mut visit: impl FnMut(usize, &HashSet<Vec<BigInt>>),
) -> Result<HashSet<Vec<BigInt>>> {
    if range.lo > range.hi {
        return Err(Error::InvalidParam(format!("empty coefficient range {range:?}")));
    }
    let n = alpha.degree();
    let a0 = alpha.leading();
    let constant = |c: i64, scale: &BigInt| {
        let mut v = vec![BigInt::zero(); n];
        v[0] = scale * BigInt::from(c);
        v
    };
    let mut scale = BigInt::one();
    let mut level: HashSet<Vec<BigInt>> = range.values().map(|c| constant(c, &scale)).collect();
    if level.len() > cap {
        return Err(cap_error("value set", cap));
    }
    visit(0, &level);
    for k in 1..=d {
        scale *= a0;
        let mut next = HashSet::with_capacity(level.len() * 2);
        for w in &level {
            let shifted = alpha.mul_alpha_scaled(w);
            for c in range.values() {
                let mut v = shifted.clone();
                v[0] += &scale * BigInt::from(c);
                next.insert(v);
            }
            if next.len() > cap {
                return Err(cap_error(&format!("value set at d={k}"), cap));
            }
        }
        level = next;
        visit(k, &level);
    }
    Ok(level)
}

/// `S_d(α)` over the coefficient range, refusing to grow past `cap`.
pub fn value_set_capped(
    alpha: &AlgebraicNumber,
    d: usize,
    range: CoeffRange,
    cap: usize,
) -> Result<ValueSet> {
    let elements = walk_levels(alpha, d, range, cap, |_, _| {})?;
    Ok(ValueSet {
        alpha: alpha.clone(),
        d,
        range,
        elements,
    })
}

pub fn value_set(alpha: &AlgebraicNumber, d: usize, range: CoeffRange) -> Result<ValueSet> {
    value_set_capped(alpha, d, range, DEFAULT_CAP)
}

/// `|S_k(α)|` for every `k = 0..=d_max`.
pub fn value_set_sizes(
    alpha: &AlgebraicNumber,
    d_max: usize,
    range: CoeffRange,
    cap: usize,
) -> Result<Vec<usize>> {
    let mut sizes = Vec::with_capacity(d_max + 1);
    walk_levels(alpha, d_max, range, cap, |_, s| sizes.push(s.len()))?;
    Ok(sizes)
}

/// `v₁ + … + v_K − w₁ − … − w_K` with all `vᵢ, wᵢ ∈ S_d(α)`.
pub fn balanced_sumset(alpha: &AlgebraicNumber, d: usize, k: usize, cap: usize) -> Result<ValueSet> {
    let base = value_set_capped(alpha, d, CoeffRange::BINARY, cap)?;
    let neg = base.negated();
    let mut acc = value_set_capped(alpha, d, CoeffRange { lo: 0, hi: 0 }, cap)?;
    for _ in 0..k {
        acc = acc.sumset(&base, cap)?.sumset(&neg, cap)?;
    }
    Ok(acc)
}

/// One link `lhs ⊆ rhs` of an inclusion chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionStep {
    pub lhs: String,
    pub rhs: String,
    pub lhs_size: usize,
    pub rhs_size: usize,
    pub missing: usize,
    /// Some element of `lhs` not in `rhs`.
    pub example: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    pub steps: Vec<InclusionStep>,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| s.missing == 0)
    }

    pub fn violations(&self) -> usize {
        self.steps.iter().map(|s| s.missing).sum()
    }

    pub(crate) fn push(&mut self, lhs: String, rhs: String, sizes: (usize, usize), missing: Vec<String>) {
        self.steps.push(InclusionStep {
            lhs,
            rhs,
            lhs_size: sizes.0,
            rhs_size: sizes.1,
            missing: missing.len(),
            example: missing.into_iter().next(),
        });
    }
}

/// `S_d ⊆ S_d^K ⊆ K·S_d − K·S_d ⊆ S_d^{2K}`, element by element over ℚ(α).
pub fn eq1_chain(alpha: &AlgebraicNumber, d: usize, k: usize) -> Result<InclusionReport> {
    let ki = k as i64;
    let s = value_set(alpha, d, CoeffRange::BINARY)?;
    let sk = value_set(alpha, d, CoeffRange::symmetric(ki))?;
    let mid = balanced_sumset(alpha, d, k, DEFAULT_CAP)?;
    let s2k = value_set(alpha, d, CoeffRange::symmetric(2 * ki))?;
    let names = [
        format!("S_{d}"),
        format!("S_{d}^{k}"),
        format!("{k}·S_{d} − {k}·S_{d}"),
        format!("S_{d}^{}", 2 * k),
    ];
    let sets = [&s, &sk, &mid, &s2k];
    let mut report = InclusionReport::default();
    for i in 0..3 {
        let missing = sets[i].difference(sets[i + 1]).iter().map(|r| r.key()).collect();
        report.push(
            names[i].clone(),
            names[i + 1].clone(),
            (sets[i].len(), sets[i + 1].len()),
            missing,
        );
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub d: usize,
    pub cardinality: usize,
    pub dth_root: f64,
    pub lower_bound_ok: bool,
}

/// Conservative `min{2, M(α)}` using the lower end of the measure's error band.
pub fn growth_base(m: &MahlerValue) -> f64 {
    m.lower().clamp(1.0, 2.0)
}

/// `(d, |S_d(α)|, |S_d(α)|^(1/d))` for `d = 1..=d_max`, with the per-`d`
/// check `|S_d(α)| >= min{2, M(α)}^(0.44 d)`.
pub fn growth_profile(alpha: &AlgebraicNumber, d_max: usize) -> Result<Vec<GrowthRow>> {
    let base = growth_base(&alpha.mahler()?);
    let sizes = value_set_sizes(alpha, d_max, CoeffRange::BINARY, DEFAULT_CAP)?;
    Ok(sizes
        .iter()
        .enumerate()
        .skip(1)
        .map(|(d, &card)| GrowthRow {
            d,
            cardinality: card,
            dth_root: (card as f64).powf(1.0 / d as f64),
            lower_bound_ok: card as f64 >= base.powf(GROWTH_EXPONENT * d as f64),
        })
        .collect())
}

/// CSV with header `d,cardinality,dth_root,lower_bound_ok`.
pub fn growth_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("d,cardinality,dth_root,lower_bound_ok\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.12},{}\n",
            r.d, r.cardinality, r.dth_root, r.lower_bound_ok
        ));
    }
    out
}

/// The fibres of `P ↦ P(α)` on `S_d`, each `P` encoded as a bitmask whose
/// bit `i` is the coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    d: usize,
    blocks: BTreeMap<Vec<BigInt>, Vec<u32>>,
}

impl Partition {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as sorted bitmask lists, sorted by first member; two partitions
    /// of `S_d` are equal iff these agree.
    pub fn canonical_blocks(&self) -> Vec<Vec<u32>> {
        canonical(self.blocks.values().cloned())
    }
}

pub(crate) fn canonical(blocks: impl Iterator<Item = Vec<u32>>) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = blocks
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

/// Bitmask → ascending coefficient list of length `d + 1`.
pub fn mask_coeffs(mask: u32, d: usize) -> Vec<i64> {
    (0..=d).map(|i| ((mask >> i) & 1) as i64).collect()
}

pub fn partition(alpha: &AlgebraicNumber, d: usize) -> Result<Partition> {
    partition_capped(alpha, d, DEFAULT_CAP)
}

pub fn partition_capped(alpha: &AlgebraicNumber, d: usize, cap: usize) -> Result<Partition> {
    if d >= 31 || (1usize << (d + 1)) > cap {
        return Err(cap_error(&format!("partition of S_{d}"), cap));
    }
    let mut blocks: BTreeMap<Vec<BigInt>, Vec<u32>> = BTreeMap::new();
    for mask in 0..(1u32 << (d + 1)) {
        let key = alpha.eval_scaled(&mask_coeffs(mask, d));
        blocks.entry(key).or_default().push(mask);
    }
    Ok(Partition { d, blocks })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubmultReport {
    pub sizes: Vec<usize>,
    /// Pairs `(d, e)` with `|S_{d+e+1}| > |S_d|·|S_e|`.
    pub violations: Vec<(usize, usize)>,
}

impl SubmultReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `|S_{d+e+1}(α)| <= |S_d(α)|·|S_e(α)|` for all `d + e + 1 <= d_max`.
pub fn submultiplicativity_check(alpha: &AlgebraicNumber, d_max: usize) -> Result<SubmultReport> {
    let sizes = value_set_sizes(alpha, d_max, CoeffRange::BINARY, DEFAULT_CAP)?;
    let mut violations = Vec::new();
    for d in 0..d_max {
        for e in 0..(d_max - d) {
            let lhs = sizes[d + e + 1] as u128;
            if lhs > sizes[d] as u128 * sizes[e] as u128 {
                violations.push((d, e));
            }
        }
    }
    Ok(SubmultReport { sizes, violations })
}
