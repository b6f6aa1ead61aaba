//! Mahler measures from numerically located roots.
//!
//! Roots come from Aberth–Ehrlich simultaneous iteration followed by Newton
//! polishing. Each root carries an inclusion radius derived from its
//! Weierstrass correction, and those radii are pushed through the
//! `∏ max(1, |z|)` product to give a two-sided enclosure of the measure.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{squarefree_decomposition, IntPoly};

/// Sweep cap for the simultaneous iteration.
pub const MAX_SWEEPS: usize = 1000;
const NEWTON_STEPS: usize = 8;

#[derive(Clone, Debug)]
pub struct RootSet {
    pub poly: IntPoly,
    pub roots: Vec<Complex64>,
    /// Radius around each root guaranteed (to first order) to hold a true root.
    pub radii: Vec<f64>,
    /// Largest `|P(z)| / (‖P‖₁ · max(1,|z|)^deg)` over the returned roots.
    pub residual_bound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MahlerValue {
    pub value: f64,
    pub error_bound: f64,
}

impl MahlerValue {
    pub fn lower(&self) -> f64 {
        self.value - self.error_bound
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error_bound
    }
}

/// Outcome of comparing two quantities when one side carries an error band.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Holds,
    WithinErrorBand,
    Fails,
}

impl Check {
    /// Holds, or cannot be refuted inside the error band.
    pub fn is_consistent(self) -> bool {
        self != Check::Fails
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct L1Bounds {
    pub m_le_l1: Check,
    pub l1_le_2deg_m: Check,
}

fn to_f64_coeffs(p: &IntPoly) -> Vec<f64> {
    p.coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect()
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::zero();
    let mut der = Complex64::zero();
    for &c in coeffs.iter().rev() {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

fn scaled_residual(coeffs: &[f64], l1: f64, z: Complex64) -> f64 {
    let deg = coeffs.len() as i32 - 1;
    horner(coeffs, z).0.norm() / (l1 * z.norm().max(1.0).powi(deg))
}

/// All complex roots of `p` (with multiplicity).
pub fn find_roots(p: &IntPoly) -> Result<RootSet> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::InvalidParam("find_roots needs degree >= 1".into())),
        Some(d) => d,
    };
    let coeffs = to_f64_coeffs(p);
    let lead = coeffs[deg];
    let l1: f64 = coeffs.iter().map(|c| c.abs()).sum();

    // start on a circle whose radius is the geometric mean of |roots|, or 1
    // if the constant term vanishes
    let c0 = coeffs[0].abs();
    let radius = if c0 > 0.0 {
        (c0 / lead.abs()).powf(1.0 / deg as f64)
    } else {
        1.0
    };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (val, der) = horner(&coeffs, z[i]);
            if val.is_zero() {
                continue;
            }
            let ratio = val / der;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    for zi in z.iter_mut() {
        let mut best = scaled_residual(&coeffs, l1, *zi);
        for _ in 0..NEWTON_STEPS {
            let (val, der) = horner(&coeffs, *zi);
            if der.is_zero() {
                break;
            }
            let cand = *zi - val / der;
            let r = scaled_residual(&coeffs, l1, cand);
            if r.is_nan() || r >= best {
                break;
            }
            *zi = cand;
            best = r;
        }
    }

    let residual_bound = z
        .iter()
        .map(|&zi| scaled_residual(&coeffs, l1, zi))
        .fold(0.0f64, f64::max);
    // a stalled iteration is still accepted if polishing met the residual bound
    if residual_bound.is_nan() || residual_bound >= 1e-12 {
        return Err(Error::NoConvergence {
            iterations: MAX_SWEEPS,
            residual: residual_bound,
        });
    }

    let radii = (0..deg)
        .map(|i| {
            let (val, _) = horner(&coeffs, z[i]);
            let denom: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| z[i] - z[j])
                .product::<Complex64>()
                * lead;
            let weierstrass = if denom.is_zero() {
                f64::INFINITY
            } else {
                (val / denom).norm()
            };
            let floor = 4.0 * f64::EPSILON * deg as f64 * z[i].norm().max(1.0);
            (deg as f64 * weierstrass).max(floor)
        })
        .collect();

    Ok(RootSet {
        poly: p.clone(),
        roots: z,
        radii,
        residual_bound,
    })
}

/// `(value, lower, upper)` of `|lc| ∏ max(1,|z|)` for a square-free factor.
fn measure_enclosure(p: &IntPoly) -> Result<(f64, f64, f64)> {
    let lc = p.leading().unwrap().abs().to_f64().unwrap_or(f64::INFINITY);
    if p.degree() == Some(0) {
        return Ok((lc, lc, lc));
    }
    let roots = find_roots(p)?;
    let (mut value, mut lower, mut upper) = (lc, lc, lc);
    for (z, r) in roots.roots.iter().zip(&roots.radii) {
        let m = z.norm();
        value *= m.max(1.0);
        lower *= (m - r).max(1.0);
        upper *= (m + r).max(1.0);
    }
    Ok((value, lower, upper))
}

/// `M(P) = |a₀| ∏ max(1, |zᵢ|)` with a propagated error bound.
///
/// The measure is assembled from the square-free parts of `P`, so repeated
/// roots never reach the root finder.
pub fn mahler_measure(p: &IntPoly) -> Result<MahlerValue> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = p.content().to_f64().unwrap_or(f64::INFINITY);
    let (mut value, mut lower, mut upper) = (content, content, content);
    let mut deg = 0usize;
    for (part, mult) in squarefree_decomposition(&p.normalized()) {
        let (v, lo, hi) = measure_enclosure(&part)?;
        value *= v.powi(mult as i32);
        lower *= lo.powi(mult as i32);
        upper *= hi.powi(mult as i32);
        deg += part.deg() * mult as usize;
    }
    let rounding = 8.0 * f64::EPSILON * (deg as f64 + 1.0) * value;
    let error_bound = (value - lower).max(upper - value) + rounding;
    Ok(MahlerValue { value, error_bound })
}

/// `M(P) <= ‖P‖₁` and `‖P‖₁ <= 2^deg · M(P)`, each judged against the error
/// band of the computed measure.
pub fn check_l1_bounds(p: &IntPoly) -> Result<L1Bounds> {
    let m = mahler_measure(p)?;
    let l1 = p.l1_norm().to_f64().unwrap_or(f64::INFINITY);
    let scale = 2f64.powi(p.deg() as i32);
    let m_le_l1 = if m.upper() <= l1 {
        Check::Holds
    } else if m.lower() > l1 {
        Check::Fails
    } else {
        Check::WithinErrorBand
    };
    let l1_le_2deg_m = if l1 <= scale * m.lower() {
        Check::Holds
    } else if l1 > scale * m.upper() {
        Check::Fails
    } else {
        Check::WithinErrorBand
    };
    Ok(L1Bounds {
        m_le_l1,
        l1_le_2deg_m,
    })
}
