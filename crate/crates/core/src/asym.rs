//! Asymptotic upper bounds on the normalized expected recovery time in the
//! complete-graph collection model: the two-case bound for general (k, p, P),
//! its p = P specialization, the exact and upper-bound k = 3 formulas in the
//! ratio alpha = y/x, and numerical minimizers over alpha and (p, P).

use crate::error::{Error, Result};

/// Evaluation of the two-case upper bound at one parameter point, with the
/// intermediate geometric-series arguments kept for inspection.
#[derive(Debug, Clone)]
pub struct AsymptoticBound {
    pub k: usize,
    pub p: f64,
    pub big_p: f64,
    pub case_i: f64,
    pub case_ii: f64,
    /// 1 + (1 - P) + case_i + case_ii.
    pub total: f64,
    pub v: f64,
    /// u(l) for l = 2..k-1 (empty for k <= 2).
    pub u_by_ell: Vec<f64>,
}

fn binom2(m: f64) -> f64 {
    if m < 2.0 {
        0.0
    } else {
        m * (m - 1.0) / 2.0
    }
}

/// Expected extra draws when the first useful item is a specific vertex or
/// incident edge: (1 - (k-1)p - P)^2 / ((k-1)p + P).
pub fn case_i(k: usize, p: f64, big_p: f64) -> Result<f64> {
    let kf = k as f64;
    let denom = (kf - 1.0) * p + big_p;
    if denom <= 0.0 {
        return Err(Error::DivergentSeries(
            "case-i denominator (k-1)p + P is not positive".into(),
        ));
    }
    let num = 1.0 - (kf - 1.0) * p - big_p;
    Ok(num * num / denom)
}

fn u_of_ell(k: usize, ell: usize, p: f64, big_p: f64) -> f64 {
    if ell >= k - 1 {
        // no vertices remain outside the tree; the series argument vanishes
        0.0
    } else {
        binom2((k - ell - 1) as f64) * p + (k - ell - 1) as f64 * big_p
    }
}

/// Expected extra draws to close a cycle through a tree hanging off vertex 1:
/// (k-1)p v(2-v)/(1-v)^2 plus one term per tree size l = 2..k-1, evaluated in
/// log space with recursive term ratios so large k neither overflows the
/// (l+1)^(l-1) l! factor nor underflows p^l.
pub fn case_ii(k: usize, p: f64, big_p: f64) -> Result<f64> {
    let kf = k as f64;
    let v = binom2(kf - 2.0) * p + (kf - 2.0) * big_p;
    if v >= 1.0 {
        return Err(Error::DivergentSeries(format!("v = {v} >= 1")));
    }
    let mut total = (kf - 1.0) * p * v * (2.0 - v) / ((1.0 - v) * (1.0 - v));
    if p == 0.0 {
        return Ok(total);
    }
    // core(l) = C(k-1,l) (l+1)^(l-1) l! p^l; core(2) = C(k-1,2) * 3 * 2 * p^2,
    // core(l)/core(l-1) = (k-l) l p ((l+1)/l)^(l-1)
    let mut ln_core = 0.0;
    for ell in 2..k {
        if ell == 2 {
            ln_core = binom2(kf - 1.0).ln() + 3.0f64.ln() + 2.0f64.ln() + 2.0 * p.ln();
        } else {
            let lm = (ell - 1) as f64;
            ln_core +=
                (kf - 1.0 - lm).ln() + (lm + 1.0).ln() + p.ln() + lm * (1.0 / (lm + 1.0)).ln_1p();
        }
        let u = u_of_ell(k, ell, p, big_p);
        if u >= 1.0 {
            return Err(Error::DivergentSeries(format!("u({ell}) = {u} >= 1")));
        }
        total += (ln_core - (ell + 1) as f64 * (-u).ln_1p()).exp();
    }
    Ok(total)
}

/// The full upper bound 1 + (1 - P) + case_i + case_ii on the feasible line
/// kP + C(k,2)p = 1.
pub fn tk_bound(k: usize, p: f64, big_p: f64) -> Result<AsymptoticBound> {
    let kf = k as f64;
    let slack = kf * big_p + binom2(kf) * p - 1.0;
    if slack.abs() > 1e-9 {
        return Err(Error::ConstraintViolated(slack));
    }
    let ci = case_i(k, p, big_p)?;
    let cii = case_ii(k, p, big_p)?;
    let total = 1.0 + (1.0 - big_p) + ci + cii;
    Ok(AsymptoticBound {
        k,
        p,
        big_p,
        case_i: ci,
        case_ii: cii,
        total,
        v: binom2(kf - 2.0) * p + (kf - 2.0) * big_p,
        u_by_ell: (2..k).map(|l| u_of_ell(k, l, p, big_p)).collect(),
    })
}

/// The p = P = 2/(k^2+k) specialization in fully simplified closed form; an
/// independent code path that must agree with tk_bound at that point. Tends
/// to k pi^2 / 12 as k grows.
pub fn ubfin_bound(k: usize) -> f64 {
    assert!(k >= 2);
    let kf = k as f64;
    let p = 2.0 / (kf * kf + kf);
    let mut total = 1.0 + 1.0 - p + (kf - 1.0) * (kf - 1.0) / (2.0 * (kf + 1.0));
    total += (kf - 1.0) * p * ((kf * kf - 3.0 * kf + 2.0) / (4.0 * kf - 2.0))
        * ((kf * kf + 5.0 * kf - 2.0) / (4.0 * kf - 2.0));
    // f(l) = core(l)/(1-u(l))^(l+1) at p = P; f(2) in closed form, then
    // f(l)/f(l-1) from the same telescoping ratios as case_ii
    let mut ln_f = 0.0;
    for ell in 2..k {
        if ell == 2 {
            ln_f = binom2(kf - 1.0).ln() + 3.0 * 2.0f64.ln() + kf.ln() + (kf + 1.0).ln()
                - 2.0 * 3.0f64.ln()
                - 3.0 * (2.0 * kf - 2.0).ln();
        } else {
            let lm = (ell - 1) as f64;
            ln_f += (kf - 1.0 - lm).ln() + 2.0f64.ln()
                + 2.0 * ((lm + 1.0).ln() - (lm + 2.0).ln())
                + (lm + 1.0) * (2.0 * kf - lm).ln()
                - (lm + 2.0) * (2.0 * kf - lm - 1.0).ln();
        }
        total += ln_f.exp();
    }
    total
}

/// Exact normalized-by-nothing expectation for k = 3 in the x -> infinity
/// limit, as a rational function of alpha = y/x.
pub fn k3_exact(alpha: f64) -> f64 {
    let a = alpha;
    let num = 153.0 + 543.0 * a + 805.0 * a * a + 611.0 * a.powi(3) + 234.0 * a.powi(4)
        + 36.0 * a.powi(5);
    let den = 3.0 * (1.0 + a).powi(2) * (2.0 + a) * (3.0 + 2.0 * a).powi(2);
    num / den
}

/// The k = 3 upper bound derived by bounding each recovery case separately;
/// dominates k3_exact everywhere.
pub fn k3_upper_appendix(alpha: f64) -> f64 {
    let a = alpha;
    3.0 - a / (3.0 + 3.0 * a) - (2.0 + 10.0 * a + 5.0 * a * a) / (9.0 * (1.0 + a).powi(2))
        + (1.0 + 2.0 * a).powi(3) / (9.0 * (1.0 + a).powi(2) * (2.0 + a))
        + 2.0 * a * a * (9.0 + 7.0 * a) / (9.0 * (1.0 + a).powi(2) * (3.0 + 2.0 * a).powi(2))
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Minimizes a unimodal objective over alpha in [1e-3, 10]: a 101-point
/// log-spaced scan locates the basin, golden-section search narrows it to
/// width 1e-6.
pub fn optimize_alpha<F: Fn(f64) -> f64>(evaluator: F) -> Result<(f64, f64)> {
    let (lo, hi) = (1e-3f64, 10.0f64);
    let grid: Vec<f64> = (0..=100)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / 100.0).exp())
        .collect();
    let mut best = 0usize;
    let mut best_val = f64::INFINITY;
    for (i, &a) in grid.iter().enumerate() {
        let v = evaluator(a);
        if !v.is_finite() {
            return Err(Error::NonFiniteObjective(a));
        }
        if v < best_val {
            best = i;
            best_val = v;
        }
    }
    let bl = grid[best.saturating_sub(1)];
    let bh = grid[(best + 1).min(grid.len() - 1)];
    let (a, v) = golden_section(&evaluator, bl, bh, 1e-6);
    if !v.is_finite() {
        return Err(Error::NonFiniteObjective(a));
    }
    Ok((a, v))
}

/// Minimizes the two-case bound along the constraint line kP + C(k,2)p = 1,
/// parameterized by P in [0, 1/k]; returns (p*, P*, total).
pub fn optimize_pp(k: usize) -> Result<(f64, f64, f64)> {
    let kf = k as f64;
    let p_of = |bp: f64| {
        if k == 2 {
            1.0 - 2.0 * bp
        } else {
            (1.0 - kf * bp) / binom2(kf)
        }
    };
    let eval = |bp: f64| match tk_bound(k, p_of(bp), bp) {
        Ok(b) => b.total,
        Err(_) => f64::INFINITY,
    };
    let hi = 1.0 / kf;
    let grid = 400usize;
    let mut best = 0usize;
    let mut best_val = f64::INFINITY;
    for i in 0..=grid {
        let bp = hi * i as f64 / grid as f64;
        let v = eval(bp);
        if v < best_val {
            best = i;
            best_val = v;
        }
    }
    let bl = hi * best.saturating_sub(1) as f64 / grid as f64;
    let bh = hi * (best + 1).min(grid) as f64 / grid as f64;
    let (bp, v) = golden_section(&eval, bl, bh, 1e-8);
    if !v.is_finite() {
        return Err(Error::NonFiniteObjective(bp));
    }
    Ok((p_of(bp), bp, v))
}
