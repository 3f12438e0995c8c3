//! Exact expectation engines: the subset-counting formula
//! E[tau_i] = n H_n - sum_s alpha_i^s / C(n-1, s), the k = 4 closed-form
//! alpha's of the edge/vertex construction, and the complete k = 2 theory.
//!
//! The alpha sums cancel badly in floating point, so everything desk-scale
//! runs in exact big rationals; only the large-n closed-form path uses
//! stable incremental binomial-ratio products in doubles.

use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::codes::{GeneratorMatrix, SpanState, TwoDimProfile};
use crate::error::{Error, Result};

/// Enumeration guard for the brute-force engine (2^n subsets).
pub const BRUTEFORCE_GUARD: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    ClosedFormK2,
    ClosedFormK4,
    MonteCarlo,
    AsymptoticBound,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::BruteForce => "bruteforce",
            Method::ClosedFormK2 => "closed_form_k2",
            Method::ClosedFormK4 => "closed_form_k4",
            Method::MonteCarlo => "monte_carlo",
            Method::AsymptoticBound => "asymptotic_bound",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct StrandEstimate {
    /// 1-based strand index.
    pub strand: usize,
    pub expectation: f64,
    /// Standard error; zero for exact methods.
    pub stderr: f64,
}

#[derive(Debug, Clone)]
pub struct ExpectationReport {
    pub per_strand: Vec<StrandEstimate>,
    pub t_max: f64,
    pub method: Method,
}

impl ExpectationReport {
    pub fn from_estimates(per_strand: Vec<StrandEstimate>, method: Method) -> Self {
        let t_max = per_strand
            .iter()
            .map(|e| e.expectation)
            .fold(f64::NEG_INFINITY, f64::max);
        ExpectationReport {
            per_strand,
            t_max,
            method,
        }
    }

    /// CSV rows `i,expectation,stderr,method`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "i,expectation,stderr,method")?;
        for e in &self.per_strand {
            writeln!(
                w,
                "{},{},{},{}",
                e.strand,
                crate::fmt_sig(e.expectation),
                crate::fmt_sig(e.stderr),
                self.method
            )?;
        }
        Ok(())
    }
}

/// The table alpha_i^s for one target strand: alpha[s-1] counts the size-s
/// column subsets whose span contains e_i, for s = 1..n-1.
#[derive(Debug, Clone)]
pub struct AlphaProfile {
    pub i: usize,
    pub n: usize,
    pub alpha: Vec<BigInt>,
    pub harmonic_n: BigRational,
}

impl AlphaProfile {
    pub fn harmonic_f64(&self) -> f64 {
        rational_to_f64(&self.harmonic_n)
    }

    /// CSV rows `s,alpha,binom_n_minus_1_s`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "s,alpha,binom_n_minus_1_s")?;
        for (idx, a) in self.alpha.iter().enumerate() {
            let s = idx + 1;
            writeln!(w, "{s},{a},{}", binom_big(self.n as i64 - 1, s as i64))?;
        }
        Ok(())
    }
}

pub fn harmonic_rational(n: usize) -> BigRational {
    (1..=n)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i)))
        .sum()
}

pub fn harmonic_f64(n: usize) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}

/// C(a, b) over big integers; zero outside 0 <= b <= a.
pub fn binom_big(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

fn binom_u64(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc = 1u128;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // exact up to the final double rounding for desk-scale magnitudes
    let scale = BigInt::from(10u64).pow(25);
    let scaled = (r.numer() * &scale) / r.denom();
    let (sign, digits) = scaled.to_radix_le(10);
    let mut v = 0.0f64;
    for &d in digits.iter().rev() {
        v = v * 10.0 + d as f64;
    }
    let v = v / 1e25;
    if sign == num_bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

/// Exact alpha_i^s for s = 1..n-1 by depth-first enumeration of column
/// subsets. The elimination state rides along the recursion, and once e_i
/// enters the span every superset is counted in closed form.
pub fn alpha_bruteforce(g: &GeneratorMatrix, i: usize) -> Result<AlphaProfile> {
    assert!(i >= 1 && i <= g.k, "strand index is 1-based");
    let n = g.n;
    if n > BRUTEFORCE_GUARD {
        return Err(Error::EnumerationGuard {
            n,
            guard: BRUTEFORCE_GUARD,
        });
    }
    let cols = g.expanded();
    let mut alpha = vec![0u64; n + 1];
    let state = SpanState::new(g.field.clone(), g.k);
    dfs(&cols, 0, &state, 0, i - 1, &mut alpha);

    Ok(AlphaProfile {
        i,
        n,
        alpha: alpha[1..n].iter().map(|&a| BigInt::from(a)).collect(),
        harmonic_n: harmonic_rational(n),
    })
}

fn dfs(
    cols: &[&[u32]],
    idx: usize,
    state: &SpanState,
    chosen: usize,
    target: usize,
    alpha: &mut [u64],
) {
    if state.contains_unit(target) {
        let rem = cols.len() - idx;
        for t in 0..=rem {
            alpha[chosen + t] += binom_u64(rem, t);
        }
        return;
    }
    if idx == cols.len() {
        return;
    }
    dfs(cols, idx + 1, state, chosen, target, alpha);
    let mut st = state.clone();
    st.add(cols[idx]);
    dfs(cols, idx + 1, &st, chosen + 1, target, alpha);
}

/// E[tau_i] = n H_n - sum_{s=1}^{n-1} alpha_i^s / C(n-1, s), exact.
pub fn expectation_from_alpha(ap: &AlphaProfile) -> BigRational {
    let n = ap.n as i64;
    let mut e = BigRational::from(BigInt::from(n)) * &ap.harmonic_n;
    for (idx, a) in ap.alpha.iter().enumerate() {
        let s = (idx + 1) as i64;
        e -= BigRational::new(a.clone(), binom_big(n - 1, s));
    }
    e
}

/// Exact per-strand expectations of a full-rank matrix by brute force.
pub fn exact_expectations(g: &GeneratorMatrix) -> Result<Vec<BigRational>> {
    (1..=g.k)
        .map(|i| Ok(expectation_from_alpha(&alpha_bruteforce(g, i)?)))
        .collect()
}

pub fn exact_report(g: &GeneratorMatrix) -> Result<ExpectationReport> {
    let per_strand = exact_expectations(g)?
        .iter()
        .enumerate()
        .map(|(i, e)| StrandEstimate {
            strand: i + 1,
            expectation: rational_to_f64(e),
            stderr: 0.0,
        })
        .collect();
    Ok(ExpectationReport::from_estimates(per_strand, Method::BruteForce))
}

/// alpha_i^s of the k = 4 edge/vertex construction with x columns per edge
/// and y copies of each weight-1 column; identical for every i. The s >= 4
/// case subtracts the three non-recovering families
/// C(3x+3y,s) + 3x C(x+2y,s-1) + 9x^2 C(y,s-2) from C(6x+4y,s).
pub fn alpha_closed_form_k4(x: u64, y: u64, s: u64) -> Result<BigInt> {
    assert!(x >= 1 && y >= 1);
    let n = 6 * x + 4 * y;
    if s < 1 || s > n - 1 {
        return Err(Error::SubsetSizeOutOfRange {
            s: s as usize,
            max: (n - 1) as usize,
        });
    }
    let (x, y, s) = (x as i64, y as i64, s as i64);
    let b = binom_big;
    let v = match s {
        1 => BigInt::from(y),
        2 => {
            3 * (b(x, 2) + x * y) + b(y, 2) + y * (6 * x + 3 * y)
        }
        3 => {
            3 * (b(3 * x + 2 * y, 3) - b(x + 2 * y, 3) - 2 * x * b(y, 2))
                - 3 * (b(x, 3) + b(x, 2) * y + x * b(y, 2))
                + 3 * x * (x * y + b(x, 2))
                + y * b(6 * x + 3 * y, 2)
                + b(y, 2) * (6 * x + 3 * y)
                + b(y, 3)
        }
        s if s <= 3 * x + 3 * y => {
            b(6 * x + 4 * y, s)
                - b(3 * x + 3 * y, s)
                - 3 * x * b(x + 2 * y, s - 1)
                - 9 * x * x * b(y, s - 2)
        }
        _ => b(6 * x + 4 * y, s),
    };
    Ok(v)
}

/// T_max(G_4(x,y)) from the closed-form alpha's, evaluated through
/// E = 1 + sum_s bad_s / C(n-1, s) where bad_s = C(n,s) - alpha_s. The
/// binomial ratios are incremental products of factors < 1, so the result
/// is stable to ~1e-14 even at n ~ 10^4.
pub fn t4_expectation(x: u64, y: u64) -> f64 {
    let n = (6 * x + 4 * y) as i64;
    let a_lim = (3 * x + 3 * y) as i64; // columns avoiding the target coordinate
    let b_lim = (x + 2 * y) as i64;
    let (xi, yi) = (x as i64, y as i64);

    let mut total = 1.0f64;
    // exact complements for s = 1..3
    for s in 1..=3i64.min(n - 1) {
        let alpha = alpha_closed_form_k4(x, y, s as u64).expect("s in range");
        let bad = binom_big(n, s) - alpha;
        let r = BigRational::new(bad, binom_big(n - 1, s));
        total += rational_to_f64(&r);
    }
    // s >= 4: ratio recurrences against C(n-1, s)
    let ratio = |a: i64, s: i64| -> f64 {
        let mut r = 1.0;
        for i in 0..s {
            r *= (a - i) as f64 / (n - 1 - i) as f64;
        }
        r
    };
    let mut r1 = ratio(a_lim, 4); // C(3x+3y, s)   / C(n-1, s)
    let mut r2 = ratio(b_lim, 3); // C(x+2y, s-1)  / C(n-1, s-1)
    let mut r3 = ratio(yi, 2); //    C(y, s-2)     / C(n-1, s-2)
    for s in 4..=a_lim {
        let shift1 = s as f64 / (n - s) as f64;
        let shift2 = (s * (s - 1)) as f64 / ((n - s) * (n - s + 1)) as f64;
        total += r1 + (3 * xi) as f64 * r2 * shift1 + (9 * xi * xi) as f64 * r3 * shift2;
        r1 *= (a_lim - s) as f64 / (n - 1 - s) as f64;
        r2 *= (b_lim - (s - 1)) as f64 / (n - 1 - (s - 1)) as f64;
        r3 *= (yi - (s - 2)) as f64 / (n - 1 - (s - 2)) as f64;
    }
    total
}

/// The k = 2 closed form: E[tau_1] = 1 + x2/(x-x2) + sum_i a_i/(x-a_i) and
/// symmetrically for tau_2.
pub fn k2_expectation(profile: &TwoDimProfile) -> Result<(BigRational, BigRational)> {
    let x = profile.x;
    let nonzero_classes = (profile.x1 > 0) as usize
        + (profile.x2 > 0) as usize
        + profile.a.iter().filter(|&&a| a > 0).count();
    if x < 2 || nonzero_classes < 2 {
        return Err(Error::DegenerateProfile);
    }
    let frac = |num: usize, den: usize| BigRational::new(BigInt::from(num), BigInt::from(den));
    let slope_sum: BigRational = profile
        .a
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| frac(a, x - a))
        .sum();
    let e1 = BigRational::one() + frac(profile.x2, x - profile.x2) + slope_sum.clone();
    let e2 = BigRational::one() + frac(profile.x1, x - profile.x1) + slope_sum;
    Ok((e1, e2))
}

/// The optimal k = 2 expectation over all matrices for a given field order:
/// T_q(2) = 1 + (2q^2 - q(sqrt2+1) - 2 + sqrt2) / (q^2(1+sqrt2) - q(2+sqrt2)).
pub fn tq2_value(q: u64) -> f64 {
    let q = q as f64;
    let s2 = 2f64.sqrt();
    1.0 + (2.0 * q * q - q * (s2 + 1.0) - 2.0 + s2) / (q * q * (1.0 + s2) - q * (2.0 + s2))
}

/// Limit of tq2_value as q grows: 1 + 2/(sqrt2 + 1).
pub fn tq2_limit() -> f64 {
    1.0 + 2.0 / (2f64.sqrt() + 1.0)
}

/// Real-valued minimizer a* = (sqrt2 q - 2)/(q^2 - 2) * x1 of the balanced
/// k = 2 expectation; callers round to integers when building matrices.
pub fn tq2_optimal_a(q: u64, x1: f64) -> f64 {
    let q = q as f64;
    (2f64.sqrt() * q - 2.0) / (q * q - 2.0) * x1
}

/// Balanced-profile expectation (x1 = x2, all a_i = a) as a function of
/// real (x1, a): 1 + x1/(x1 + (q-1)a) + (q-1)a/(2 x1 + (q-2)a).
pub fn k2_balanced_expectation(q: u64, x1: f64, a: f64) -> f64 {
    let qm = (q - 1) as f64;
    1.0 + x1 / (x1 + qm * a) + qm * a / (2.0 * x1 + (qm - 1.0) * a)
}

/// The two general lower bounds on the worst-strand expectation:
/// (k+1)/2 and n - (n(n-k)/k)(H_n - H_{n-k}). The harmonic bound is tight
/// for the identity matrix (n = k gives exactly k).
pub fn lower_bounds(k: usize, n: usize) -> (f64, f64) {
    let h_gap = harmonic_f64(n) - harmonic_f64(n - k);
    let coeff = (n * (n - k)) as f64 / k as f64;
    ((k as f64 + 1.0) / 2.0, n as f64 - coeff * h_gap)
}

/// True iff t_max respects both lower bounds (with a small float slack).
pub fn meets_lower_bounds(t_max: f64, k: usize, n: usize) -> bool {
    let (b1, b2) = lower_bounds(k, n);
    t_max >= b1 - 1e-9 && t_max >= b2 - 1e-9
}

pub fn rational_from_parts(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// alpha/C(n,s) monotonicity check used by the AlphaProfile invariants.
pub fn alpha_ratios_nondecreasing(ap: &AlphaProfile) -> bool {
    let mut prev = BigRational::zero();
    for (idx, a) in ap.alpha.iter().enumerate() {
        let s = (idx + 1) as i64;
        let r = BigRational::new(a.clone(), binom_big(ap.n as i64, s));
        if r < prev {
            return false;
        }
        if (BigRational::one() - &r).is_negative() {
            return false;
        }
        prev = r;
    }
    true
}
