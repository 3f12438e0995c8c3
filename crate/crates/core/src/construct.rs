//! Recovery-complete matrix constructions: sum-free exponent sets over
//! Z_{q-1}, greedily searched B_{k-1} sets, the weight-<=2 edge/vertex
//! matrices G_3(x) and G_k(x,y), and an exhaustive recovery-completeness
//! verifier.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::codes::{GeneratorMatrix, SpanState};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// Exponents over Z_{q-1} used as beta-powers in weight-2 columns. For
/// `strength` k, no mixed-sign signed sum of up to k distinct elements may
/// vanish mod the modulus; for strength 3 this is the sum-free condition
/// s != r + l.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentSet {
    pub modulus: u64,
    /// Strictly increasing, in [0, modulus).
    pub elements: Vec<u64>,
    pub strength: usize,
}

/// Exhaustive checker for the mixed-sign condition: for every 2 <= k' <= k,
/// every k' distinct elements and every sign pattern with both signs,
/// the signed sum is nonzero mod the modulus. Written independently of the
/// greedy search's incremental test. Returns the first violation found.
pub fn mixed_sign_violation(
    elements: &[u64],
    modulus: u64,
    k: usize,
) -> Option<(Vec<u64>, Vec<i8>)> {
    let m = elements.len();
    for kp in 2..=k.min(m) {
        let mut subset = vec![0usize; kp];
        if let Some(v) = subsets_rec(elements, modulus, kp, 0, 0, &mut subset) {
            return Some(v);
        }
    }
    None
}

fn subsets_rec(
    elements: &[u64],
    modulus: u64,
    kp: usize,
    depth: usize,
    start: usize,
    subset: &mut [usize],
) -> Option<(Vec<u64>, Vec<i8>)> {
    if depth == kp {
        let chosen: Vec<u64> = subset.iter().map(|&i| elements[i]).collect();
        // sign patterns with at least one of each sign
        for pattern in 1..(1u32 << kp) - 1 {
            let mut sum: i128 = 0;
            for (j, &e) in chosen.iter().enumerate() {
                if pattern >> j & 1 == 1 {
                    sum += e as i128;
                } else {
                    sum -= e as i128;
                }
            }
            if sum.rem_euclid(modulus as i128) == 0 {
                let signs = (0..kp)
                    .map(|j| if pattern >> j & 1 == 1 { 1i8 } else { -1 })
                    .collect();
                return Some((chosen, signs));
            }
        }
        return None;
    }
    for i in start..elements.len() {
        subset[depth] = i;
        if let Some(v) = subsets_rec(elements, modulus, kp, depth + 1, i + 1, subset) {
            return Some(v);
        }
    }
    None
}

/// The middle-third sum-free set {t : n/3 < t <= 2n/3} truncated to `size`,
/// verified exhaustively mod n.
pub fn sum_free_set(n: u64, size: usize) -> Result<ExponentSet> {
    assert!(n % 2 == 1, "modulus must be odd");
    if size as u64 * 3 > n.saturating_sub(1) {
        return Err(Error::SumFreeUnattainable { size, modulus: n });
    }
    let lo = n / 3 + 1; // first t with 3t > n
    let elements: Vec<u64> = (lo..).take(size).collect();
    debug_assert!(elements.last().map_or(true, |&t| 3 * t <= 2 * n));
    // exhaustive triple check r + l = s (r = l allowed)
    for &r in &elements {
        for &l in &elements {
            for &s in &elements {
                if (r + l) % n == s % n {
                    return Err(Error::SumFreeUnattainable { size, modulus: n });
                }
            }
        }
    }
    Ok(ExponentSet {
        modulus: n,
        elements,
        strength: 3,
    })
}

/// Greedy scan 0, 1, 2, ... appending any candidate that keeps the
/// mixed-sign condition satisfiable; 0 is always the first element. Fails
/// with a search-exhausted error if [0, q-1) runs out, in which case the
/// caller should raise q.
///
/// A candidate c is violating iff c == -(signed sum) mod q-1 for some signed
/// subset of the chosen elements with at least one minus sign (normalize the
/// vanishing combination so c carries a plus). Those values are kept in a
/// hash set, updated on every acceptance with the combinations the new
/// element takes part in, so the scan itself is O(1) per candidate.
pub fn bk_set_search(k: usize, q: u64, size: usize) -> Result<ExponentSet> {
    let modulus = q - 1;
    let mut elements: Vec<u64> = Vec::with_capacity(size);
    let mut forbidden: HashSet<u64> = HashSet::new();
    for cand in 0..modulus {
        if elements.len() == size {
            break;
        }
        if forbidden.contains(&cand) {
            continue;
        }
        extend_forbidden(&elements, cand, modulus, k, &mut forbidden);
        elements.push(cand);
    }
    if elements.len() < size {
        return Err(Error::SearchExhausted {
            size,
            found: elements.len(),
            limit: modulus,
        });
    }
    Ok(ExponentSet {
        modulus,
        elements,
        strength: k,
    })
}

/// Adds every signed combination involving `cand` — subsets of `chosen` of
/// size <= k-2, all signs on them and on cand, at least one minus overall —
/// as a newly forbidden residue -(sum) mod modulus.
fn extend_forbidden(
    chosen: &[u64],
    cand: u64,
    modulus: u64,
    k: usize,
    forbidden: &mut HashSet<u64>,
) {
    let m = modulus as i128;
    // (signed partial sum over a subset of chosen, had a minus sign)
    let mut partials: Vec<(i128, bool)> = vec![(0, false)];
    fn rec(
        chosen: &[u64],
        start: usize,
        left: usize,
        sum: i128,
        minus: bool,
        out: &mut Vec<(i128, bool)>,
    ) {
        if left == 0 {
            return;
        }
        for i in start..chosen.len() {
            let e = chosen[i] as i128;
            out.push((sum + e, minus));
            out.push((sum - e, true));
            rec(chosen, i + 1, left - 1, sum + e, minus, out);
            rec(chosen, i + 1, left - 1, sum - e, true, out);
        }
    }
    rec(chosen, 0, k.saturating_sub(2), 0, false, &mut partials);
    let c = cand as i128;
    for (sum, minus) in partials {
        if minus {
            forbidden.insert((-(sum + c)).rem_euclid(m) as u64);
        }
        // cand with a minus sign always yields a mixed combination
        forbidden.insert((-(sum - c)).rem_euclid(m) as u64);
    }
}

/// Parameters of the general construction G_k(x, y).
#[derive(Debug, Clone)]
pub struct ConstructionParams {
    pub k: usize,
    /// Columns per edge block.
    pub x: usize,
    /// Copies of each weight-1 column.
    pub y: usize,
    pub field: Arc<FieldSpec>,
    pub exponents: ExponentSet,
}

impl ConstructionParams {
    pub fn validate(&self) -> Result<()> {
        let needed = self.x * self.k * (self.k - 1) / 2;
        if self.exponents.elements.len() < needed {
            return Err(Error::InsufficientExponents {
                needed,
                got: self.exponents.elements.len(),
            });
        }
        if self.k >= 3 && self.field.p() != 2 {
            return Err(Error::CharacteristicNotTwo(self.field.p()));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.k * self.y + self.k * (self.k - 1) / 2 * self.x
    }
}

/// [I_3 | E_{1,2} | E_{1,3} | E_{2,3}] with x columns per edge block and the
/// exponent list consumed in that order; n = 3 + 3x.
pub fn build_g3(x: usize, field: Arc<FieldSpec>, exps: &ExponentSet) -> Result<GeneratorMatrix> {
    let params = ConstructionParams {
        k: 3,
        x,
        y: 1,
        field,
        exponents: exps.clone(),
    };
    build_gk(&params)
}

/// Construction G_k(x, y): y copies of the identity followed by the C(k,2)
/// edge blocks in lexicographic (i, j) order, x columns each. Each edge
/// column is e_i + beta^exponent * e_j with i < j (leading coefficient 1).
pub fn build_gk(params: &ConstructionParams) -> Result<GeneratorMatrix> {
    params.validate()?;
    let k = params.k;
    let f = &params.field;
    let mut columns: Vec<(Vec<u32>, usize)> = Vec::new();
    for i in 0..k {
        let mut v = vec![0u32; k];
        v[i] = 1;
        columns.push((v, params.y));
    }
    if params.x > 0 {
        let mut exp_iter = params.exponents.elements.iter();
        for i in 0..k {
            for j in i + 1..k {
                for _ in 0..params.x {
                    let e = *exp_iter.next().expect("validated length");
                    let mut v = vec![0u32; k];
                    v[i] = 1;
                    v[j] = f.beta_pow(e as i64);
                    columns.push((v, 1));
                }
            }
        }
    }
    GeneratorMatrix::new(params.field.clone(), k, columns)
}

/// Outcome of the recovery-completeness check. A violation certificate
/// carries the offending columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecoveryVerdict {
    Complete,
    Violation { columns: Vec<Vec<u32>> },
}

impl RecoveryVerdict {
    pub fn is_complete(&self) -> bool {
        matches!(self, RecoveryVerdict::Complete)
    }
}

const VERIFIER_MAX_K: usize = 8;
const VERIFIER_MAX_CHECKS: u64 = 10_000_000;

/// Exhaustive recovery-completeness check for weight-<=2 matrices:
/// (1) any two column instances within one edge block are linearly
/// independent, and (2) for every simple cycle of the support graph and
/// every choice of one column per cycle edge, the chosen columns are
/// linearly independent.
pub fn verify_recovery_complete(g: &GeneratorMatrix) -> Result<RecoveryVerdict> {
    let k = g.k;
    if k > VERIFIER_MAX_K {
        return Err(Error::VerifierGuard(format!("k = {k} > {VERIFIER_MAX_K}")));
    }
    // bucket weight-2 columns by support pair
    let mut edge_cols: Vec<Vec<Vec<u32>>> = vec![Vec::new(); k * k];
    for (v, mult) in &g.columns {
        let support: Vec<usize> = (0..k).filter(|&r| v[r] != 0).collect();
        match support.len() {
            1 => {}
            2 => {
                let (i, j) = (support[0], support[1]);
                // duplicate instances of one edge column are a dependent pair
                if *mult > 1 {
                    return Ok(RecoveryVerdict::Violation {
                        columns: vec![v.clone(), v.clone()],
                    });
                }
                edge_cols[i * k + j].push(v.clone());
            }
            w => return Err(Error::ColumnWeightTooLarge(w)),
        }
    }

    let f = &g.field;
    // condition 1: pairwise independence inside each block (2x2 determinant)
    for i in 0..k {
        for j in i + 1..k {
            let block = &edge_cols[i * k + j];
            for (a, ca) in block.iter().enumerate() {
                for cb in &block[a + 1..] {
                    let det = f.sub(f.mul(ca[i], cb[j]), f.mul(ca[j], cb[i]));
                    if det == 0 {
                        return Ok(RecoveryVerdict::Violation {
                            columns: vec![ca.clone(), cb.clone()],
                        });
                    }
                }
            }
        }
    }

    // condition 2: every simple cycle, every per-edge column choice
    let mut checks: u64 = 0;
    for cycle in simple_cycles(k) {
        let m = cycle.len();
        let blocks: Vec<&Vec<Vec<u32>>> = (0..m)
            .map(|t| {
                let (a, b) = (cycle[t], cycle[(t + 1) % m]);
                let (i, j) = (a.min(b), a.max(b));
                &edge_cols[i * k + j]
            })
            .collect();
        if blocks.iter().any(|b| b.is_empty()) {
            continue;
        }
        let combos: u64 = blocks.iter().map(|b| b.len() as u64).product();
        checks = checks.saturating_add(combos);
        if checks > VERIFIER_MAX_CHECKS {
            return Err(Error::VerifierGuard(format!(
                "cycle/column combinations exceed {VERIFIER_MAX_CHECKS}"
            )));
        }
        let mut pick = vec![0usize; m];
        loop {
            let chosen: Vec<&Vec<u32>> = (0..m).map(|t| &blocks[t][pick[t]]).collect();
            let mut st = SpanState::new(g.field.clone(), k);
            let mut rank = 0;
            for c in &chosen {
                if st.add(c) {
                    rank += 1;
                }
            }
            if rank < m {
                return Ok(RecoveryVerdict::Violation {
                    columns: chosen.into_iter().cloned().collect(),
                });
            }
            // advance mixed-radix counter
            let mut t = 0;
            loop {
                if t == m {
                    break;
                }
                pick[t] += 1;
                if pick[t] < blocks[t].len() {
                    break;
                }
                pick[t] = 0;
                t += 1;
            }
            if t == m {
                break;
            }
        }
    }
    Ok(RecoveryVerdict::Complete)
}

/// All simple cycles of K_k of length 3..=k, deduplicated by fixing the
/// smallest vertex first and orienting so the second vertex is smaller than
/// the last.
fn simple_cycles(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut used = vec![false; k];
    for start in 0..k {
        path.push(start);
        used[start] = true;
        cycles_rec(k, start, &mut path, &mut used, &mut out);
        used[start] = false;
        path.pop();
    }
    out
}

fn cycles_rec(
    k: usize,
    start: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if path.len() >= 3 && path[1] < *path.last().unwrap() {
        out.push(path.clone());
    }
    if path.len() == k {
        return;
    }
    for v in start + 1..k {
        if !used[v] {
            used[v] = true;
            path.push(v);
            cycles_rec(k, start, path, used, out);
            path.pop();
            used[v] = false;
        }
    }
}
