use super::{sd_modp, sdk_modp, sumset, productset, FpSet, PrimeCtx};
use crate::algnum::InclusionReport;
use crate::error::Result;

fn negated(a: &FpSet) -> FpSet {
    let p = a.modulus();
    FpSet::from_residues(p, a.iter().map(|v| (p - v) % p))
}

fn link(report: &mut InclusionReport, lhs: (&str, &FpSet), rhs: (&str, &FpSet)) {
    let missing = lhs.1.difference(rhs.1).into_iter().map(|v| v.to_string()).collect();
    report.push(lhs.0.into(), rhs.0.into(), (lhs.1.len(), rhs.1.len()), missing);
}

/// `S_d ⊆ S_d^K ⊆ K·S_d − K·S_d ⊆ S_d^{2K}` at `x` over 𝔽_p.
pub fn eq1_chain_modp(x: u64, ctx: &PrimeCtx, d: usize, k: u64) -> Result<InclusionReport> {
    ctx.require_bitset()?;
    let s = sd_modp(x, ctx, d);
    let sk = sdk_modp(x, ctx, d, k);
    let neg = negated(&s);
    let mut mid = FpSet::from_residues(ctx.p(), [0]);
    for _ in 0..k {
        mid = sumset(&sumset(&mid, &s), &neg);
    }
    let s2k = sdk_modp(x, ctx, d, 2 * k);
    let names = [
        format!("S_{d}"),
        format!("S_{d}^{k}"),
        format!("{k}·S_{d} − {k}·S_{d}"),
        format!("S_{d}^{}", 2 * k),
    ];
    let sets = [&s, &sk, &mid, &s2k];
    let mut report = InclusionReport::default();
    for i in 0..3 {
        link(&mut report, (&names[i], sets[i]), (&names[i + 1], sets[i + 1]));
    }
    Ok(report)
}

/// `S_d^K + S_d^K ⊆ S_d^{2K}` and `S_d^K · S_d^K ⊆ S_{2d}^{(d+1)K²}` at `x`.
pub fn sum_product_inclusions(x: u64, ctx: &PrimeCtx, d: usize, k: u64) -> Result<InclusionReport> {
    ctx.require_bitset()?;
    let sk = sdk_modp(x, ctx, d, k);
    let mut report = InclusionReport::default();
    let sum = sumset(&sk, &sk);
    let s2k = sdk_modp(x, ctx, d, 2 * k);
    link(
        &mut report,
        (&format!("S_{d}^{k} + S_{d}^{k}"), &sum),
        (&format!("S_{d}^{}", 2 * k), &s2k),
    );
    let prod = productset(&sk, &sk);
    let kk = (d as u64 + 1) * k * k;
    let big = sdk_modp(x, ctx, 2 * d, kk);
    link(
        &mut report,
        (&format!("S_{d}^{k} · S_{d}^{k}"), &prod),
        (&format!("S_{}^{kk}", 2 * d), &big),
    );
    Ok(report)
}
