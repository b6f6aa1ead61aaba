//! Factorization over ℤ for small degrees: square-free decomposition,
//! cyclotomic peeling, then Kronecker's interpolation search with
//! divided-difference pruning.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intfactor::{divisors, euler_phi};
use super::IntPoly;
use crate::error::{Error, Result};

/// `P = unit · content · ∏ fᵢ^eᵢ` with every `fᵢ` primitive, irreducible
/// over ℚ, and with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let prod = self
            .factors
            .iter()
            .fold(IntPoly::one(), |acc, (f, e)| &acc * &f.pow(*e));
        prod.scale(&(&self.content * BigInt::from(self.unit)))
    }

    /// True when the input was a primitive irreducible polynomial up to sign.
    pub fn is_irreducible(&self) -> bool {
        self.content.is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Distinct irreducible factors, ignoring multiplicity.
    pub fn irreducibles(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

pub fn factor_poly(p: &IntPoly) -> Result<Factorization> {
    let lc = p.leading().ok_or(Error::ZeroPolynomial)?;
    let unit = if lc.is_negative() { -1 } else { 1 };
    let content = p.content();
    let mut work = p.normalized();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();

    let low = work.coeffs().iter().take_while(|c| c.is_zero()).count();
    if low > 0 {
        factors.push((IntPoly::x(), low as u32));
        work = IntPoly::new(work.coeffs()[low..].to_vec());
    }

    for (part, mult) in squarefree_decomposition(&work) {
        let (cyclo, rest) = peel_cyclotomic(&part);
        factors.extend(cyclo.into_iter().map(|f| (f, mult)));
        for f in kronecker_split(&rest, 1)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.cmp(b)));
    Ok(Factorization {
        unit,
        content,
        factors,
    })
}

/// Yun-style decomposition of a primitive polynomial with positive leading
/// coefficient into pairwise coprime square-free parts `(A_i, i)`.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let exact = |a: &IntPoly, b: &IntPoly| {
        a.checked_div(b)
            .expect("square-free decomposition divides exactly")
            .normalized()
    };
    let mut c = f.gcd(&f.derivative()).normalized();
    let mut w = exact(f, &c);
    let mut i = 1;
    while c.deg() > 0 {
        let y = w.gcd(&c).normalized();
        let z = exact(&w, &y);
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = exact(&c, &y);
    }
    if w.deg() > 0 {
        out.push((w, i));
    }
    out
}

fn global_cyclotomic(n: usize) -> IntPoly {
    static TABLE: OnceLock<Mutex<Vec<IntPoly>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = table.lock().unwrap();
    if guard.len() < n {
        *guard = super::cyclotomic::cyclotomics_up_to(n.max(2 * guard.len()));
    }
    guard[n - 1].clone()
}

/// Splits off every cyclotomic factor `Φ_n` with `φ(n) <= deg f` from a
/// square-free `f`.
fn peel_cyclotomic(f: &IntPoly) -> (Vec<IntPoly>, IntPoly) {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let deg = f.deg();
    // φ(n) >= sqrt(n/2), so φ(n) <= deg forces n <= 2 deg^2
    let bound = 2 * deg * deg + 2;
    for n in 1..=bound {
        if rest.deg() == 0 {
            break;
        }
        if euler_phi(n as u64) as usize > rest.deg() {
            continue;
        }
        let phi = global_cyclotomic(n);
        if let Some(q) = rest.checked_div(&phi) {
            found.push(phi);
            rest = q;
        }
    }
    (found, rest)
}

/// Irreducible factors of a square-free primitive `f` with positive leading
/// coefficient, assuming `f` has no factor of degree below `min_deg`.
fn kronecker_split(f: &IntPoly, min_deg: usize) -> Result<Vec<IntPoly>> {
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut k = min_deg.max(1);
    while 2 * k <= rest.deg() {
        let found = if k == 1 {
            rational_root_factor(&rest)?
        } else {
            kronecker_factor(&rest, k)?
        };
        match found {
            Some(g) => {
                rest = rest.checked_div(&g).expect("found factor divides").normalized();
                out.push(g);
            }
            None => k += 1,
        }
    }
    out.push(rest);
    Ok(out)
}

fn rational_root_factor(f: &IntPoly) -> Result<Option<IntPoly>> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Ok(Some(IntPoly::x()));
    }
    let lc = f.leading().unwrap();
    let nums = divisors(&c0)?;
    let dens = divisors(lc)?;
    for b in &dens {
        for a in &nums {
            if !a.gcd(b).is_one() {
                continue;
            }
            for a in [a.clone(), -a] {
                // root a/b ⇔ factor b·x - a
                let g = IntPoly::new(vec![-a, b.clone()]);
                if g.divides(f) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

/// Search for a factor of degree exactly `k` (none of lower degree exist).
fn kronecker_factor(f: &IntPoly, k: usize) -> Result<Option<IntPoly>> {
    let points = choose_points(f, k + 1)?;
    let xs: Vec<BigInt> = points.iter().map(|(x, _)| x.clone()).collect();
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| {
            if i == 0 {
                divs.clone()
            } else {
                divs.iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();
    let lc = f.leading().unwrap().clone();
    let mut search = Search {
        f,
        lc: &lc,
        xs: &xs,
        choices: &choices,
        columns: Vec::with_capacity(k + 1),
        newton: Vec::with_capacity(k + 1),
    };
    Ok(search.dfs(0))
}

struct Search<'a> {
    f: &'a IntPoly,
    lc: &'a BigInt,
    xs: &'a [BigInt],
    choices: &'a [Vec<BigInt>],
    // columns[j][i] = g[x_i, …, x_j]
    columns: Vec<Vec<BigInt>>,
    newton: Vec<BigInt>,
}

impl Search<'_> {
    fn dfs(&mut self, j: usize) -> Option<IntPoly> {
        if j == self.xs.len() {
            return self.candidate();
        }
        for v in &self.choices[j] {
            let mut col = vec![BigInt::zero(); j + 1];
            col[j] = v.clone();
            let mut ok = true;
            for i in (0..j).rev() {
                let num = &col[i + 1] - &self.columns[j - 1][i];
                let den = &self.xs[j] - &self.xs[i];
                let (q, r) = num.div_rem(&den);
                if !r.is_zero() {
                    ok = false;
                    break;
                }
                col[i] = q;
            }
            if !ok {
                continue;
            }
            // the degree-k Newton coefficient is the leading coefficient
            if j + 1 == self.xs.len() && (col[0].is_zero() || !(self.lc % &col[0]).is_zero()) {
                continue;
            }
            self.newton.push(col[0].clone());
            self.columns.push(col);
            let hit = self.dfs(j + 1);
            self.columns.pop();
            self.newton.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    fn candidate(&self) -> Option<IntPoly> {
        let mut g = IntPoly::zero();
        let mut basis = IntPoly::one();
        for (c, x) in self.newton.iter().zip(self.xs) {
            g = &g + &basis.scale(c);
            basis = &basis * &IntPoly::new(vec![-x, BigInt::one()]);
        }
        if g.deg() == 0 {
            return None;
        }
        let g = g.normalized();
        g.divides(self.f).then_some(g)
    }
}

/// Picks `count` integer evaluation points whose values have the fewest
/// divisors. Values are nonzero because linear factors are gone by now.
fn choose_points(f: &IntPoly, count: usize) -> Result<Vec<(BigInt, Vec<BigInt>)>> {
    let radius = (f.deg() + count + 4) as i64;
    let mut scored = Vec::new();
    for x in -radius..=radius {
        let x = BigInt::from(x);
        let v = f.eval(&x);
        if v.is_zero() {
            continue;
        }
        let divs = divisors(&v)?;
        scored.push((divs.len(), x.abs(), x, divs));
    }
    scored.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.cmp(&b.2)));
    if scored.len() < count {
        return Err(Error::Inconsistent(format!(
            "not enough evaluation points for {}",
            f.pretty()
        )));
    }
    Ok(scored
        .into_iter()
        .take(count)
        .map(|(_, _, x, divs)| (x, divs))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn factors(s: &str) -> Vec<(String, u32)> {
        factor_poly(&p(s))
            .unwrap()
            .factors
            .into_iter()
            .map(|(f, e)| (f.to_string(), e))
            .collect()
    }

    #[test]
    fn spec_examples() {
        let f = factor_poly(&p("-1,0,1")).unwrap();
        assert_eq!(f.unit, 1);
        assert_eq!(factors("-1,0,1"), vec![("-1,1".into(), 1), ("1,1".into(), 1)]);
        assert!(factor_poly(&p("-1,-1,1")).unwrap().is_irreducible());
        // x^3 + x^2 - x - 1 = (x+1)^2 (x-1); expansion check below
        let f = factor_poly(&p("-1,-1,1,1")).unwrap();
        assert_eq!(f.factors, vec![(p("-1,1"), 1), (p("1,1"), 2)]);
        assert_eq!(f.expand(), p("-1,-1,1,1"));
        assert!(factor_poly(&IntPoly::zero()).is_err());
    }

    #[test]
    fn lehmer_polynomial_is_irreducible() {
        assert!(factor_poly(&p("1,1,0,-1,-1,-1,-1,-1,0,1,1")).unwrap().is_irreducible());
    }

    #[test]
    fn sign_content_and_x_powers() {
        let f = factor_poly(&p("0,0,6,-6")).unwrap();
        assert_eq!(f.unit, -1);
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.factors, vec![(p("-1,1"), 1), (p("0,1"), 2)]);
        assert_eq!(f.expand(), p("0,0,6,-6"));
    }

    #[test]
    fn non_cyclotomic_quadratic_pair() {
        // (x^2 - x - 1)(x^2 + x - 1)(x^2 - 2) and a non-monic factor
        let a = &(&p("-1,-1,1") * &p("-1,1,1")) * &p("-2,0,1");
        let mut got: Vec<_> = factor_poly(&a).unwrap().irreducibles().cloned().collect();
        got.sort();
        let mut want = vec![p("-1,-1,1"), p("-1,1,1"), p("-2,0,1")];
        want.sort();
        assert_eq!(got, want);

        let b = &p("1,0,3") * &p("-1,2");
        let f = factor_poly(&b).unwrap();
        assert_eq!(f.factors, vec![(p("-1,2"), 1), (p("1,0,3"), 1)]);
    }

    #[test]
    fn cyclotomic_peeling() {
        let f = IntPoly::x_pow_minus_one(12);
        let f = factor_poly(&f).unwrap();
        assert_eq!(f.factors.len(), 6);
        assert!(f.factors.iter().all(|(_, e)| *e == 1));
        assert_eq!(f.expand(), IntPoly::x_pow_minus_one(12));
    }

    #[test]
    fn squarefree_parts() {
        let f = &(&p("1,1").pow(3) * &p("-1,1").pow(2)) * &p("-1,-1,1");
        let parts = squarefree_decomposition(&f);
        assert_eq!(
            parts,
            vec![(p("-1,-1,1"), 1), (p("-1,1"), 2), (p("1,1"), 3)]
        );
    }

    #[test]
    fn degree_eight_product_of_quartics() {
        let a = p("1,1,0,0,1"); // x^4 + x + 1
        let b = p("3,2,0,1,1"); // x^4 + x^3 + 2x + 3
        let f = factor_poly(&(&a * &b)).unwrap();
        let mut got: Vec<_> = f.irreducibles().cloned().collect();
        got.sort();
        let mut want = vec![a, b];
        want.sort();
        assert_eq!(got, want);
    }
}
