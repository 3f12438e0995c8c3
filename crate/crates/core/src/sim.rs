//! Monte Carlo estimation of the recovery stopping time, both by sampling
//! columns of an explicit generator matrix and in the asymptotic
//! complete-graph collection model where recovery of a strand is decided by
//! whether its connected component of collected items contains a cycle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::{GeneratorMatrix, SpanState};
use crate::error::{Error, Result};
use crate::exact::{ExpectationReport, Method, StrandEstimate};

/// Rounds per trial before giving up; full-rank inputs stop with
/// probability 1, so hitting the cap signals a bad input.
pub const ROUND_CAP_PER_K: u64 = 10_000;

/// The K_k collection model: each round draws one item, a specific edge
/// with probability p or a specific vertex with probability P.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphModelParams {
    pub k: usize,
    pub p: f64,
    pub big_p: f64,
}

impl GraphModelParams {
    pub fn new(k: usize, p: f64, big_p: f64) -> Result<Self> {
        let params = GraphModelParams { k, p, big_p };
        params.validate()?;
        Ok(params)
    }

    /// The probabilities induced by G_k(x, y): p = x/(ky + C(k,2)x) per
    /// edge, P = y/(ky + C(k,2)x) per vertex.
    pub fn from_xy(k: usize, x: usize, y: usize) -> Result<Self> {
        let n = (k * y + k * (k - 1) / 2 * x) as f64;
        Self::new(k, x as f64 / n, y as f64 / n)
    }

    /// Same map expressed through the ratio alpha = y/x.
    pub fn from_alpha(k: usize, alpha: f64) -> Result<Self> {
        let denom = k as f64 * alpha + (k * (k - 1) / 2) as f64;
        Self::new(k, 1.0 / denom, alpha / denom)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k as f64;
        let total = k * self.big_p + k * (k - 1.0) / 2.0 * self.p;
        if self.p < 0.0 || self.big_p < 0.0 || (total - 1.0).abs() > 1e-12 {
            return Err(Error::ConstraintViolated(total - 1.0));
        }
        Ok(())
    }
}

/// Union–find over the k vertices with per-component draw counters. Edge
/// draws merge components; a component "has a cycle" once its edge-draw
/// count reaches its vertex count (repeated edges count as 2-cycles) or it
/// holds a collected vertex (a 1-cycle).
#[derive(Debug, Clone)]
pub struct GraphState {
    parent: Vec<usize>,
    vertex_count: Vec<u32>,
    edge_draws: Vec<u64>,
    has_vertex: Vec<bool>,
    pub rounds: u64,
}

impl GraphState {
    pub fn new(k: usize) -> Self {
        GraphState {
            parent: (0..k).collect(),
            vertex_count: vec![1; k],
            edge_draws: vec![0; k],
            has_vertex: vec![false; k],
            rounds: 0,
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Vertex v_j was collected.
    pub fn record_vertex(&mut self, j: usize) {
        self.rounds += 1;
        let r = self.find(j);
        self.has_vertex[r] = true;
    }

    /// A copy of edge {i, j} was collected.
    pub fn record_edge(&mut self, i: usize, j: usize) {
        self.rounds += 1;
        let ri = self.find(i);
        let rj = self.find(j);
        if ri == rj {
            self.edge_draws[ri] += 1;
            return;
        }
        // union by component size
        let (big, small) = if self.vertex_count[ri] >= self.vertex_count[rj] {
            (ri, rj)
        } else {
            (rj, ri)
        };
        self.parent[small] = big;
        self.vertex_count[big] += self.vertex_count[small];
        self.edge_draws[big] += self.edge_draws[small] + 1;
        self.has_vertex[big] |= self.has_vertex[small];
    }
}

/// Cycle criterion: strand v is recoverable iff its component contains a
/// cycle, i.e. holds a collected vertex or has at least as many edge draws
/// as vertices.
pub fn graph_recoverable(state: &mut GraphState, v: usize) -> bool {
    let r = state.find(v);
    state.has_vertex[r] || state.edge_draws[r] >= state.vertex_count[r] as u64
}

fn per_trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs `trials` independent trials in parallel, each producing an integer
/// stopping round, and folds them into a mean and standard error. Integer
/// accumulation makes the merge exact, so the result is independent of the
/// work partition.
fn run_trials<F>(trials: u64, trial_fn: F) -> Result<(f64, f64)>
where
    F: Fn(u64) -> Result<u64> + Sync,
{
    assert!(trials >= 1);
    let rounds: Result<Vec<u64>> = (0..trials).into_par_iter().map(&trial_fn).collect();
    let rounds = rounds?;
    let sum: u128 = rounds.iter().map(|&r| r as u128).sum();
    let sumsq: u128 = rounds.iter().map(|&r| (r as u128) * (r as u128)).sum();
    let n = trials as f64;
    let mean = sum as f64 / n;
    let stderr = if trials > 1 {
        let var = (sumsq as f64 - (sum as f64) * (sum as f64) / n) / (n - 1.0);
        (var.max(0.0) / n).sqrt()
    } else {
        f64::INFINITY
    };
    Ok((mean, stderr))
}

/// Draws columns of G uniformly (with multiplicity) until e_i enters the
/// span; returns the sample mean and standard error of the stopping time.
/// Strand indices are 1-based.
pub fn mc_tau_matrix(
    g: &GeneratorMatrix,
    i: usize,
    trials: u64,
    seed: u64,
) -> Result<ExpectationReport> {
    assert!(i >= 1 && i <= g.k, "strand index out of range");
    let columns = g.expanded();
    let n = columns.len();
    let cap = ROUND_CAP_PER_K * g.k as u64;
    let (mean, stderr) = run_trials(trials, |t| {
        let mut rng = per_trial_rng(seed, t);
        let mut span = SpanState::new(g.field.clone(), g.k);
        let mut rounds: u64 = 0;
        loop {
            if rounds >= cap {
                return Err(Error::StoppingCap(cap));
            }
            rounds += 1;
            let c = rng.gen_range(0..n);
            span.add(&columns[c]);
            if span.contains_unit(i - 1) {
                return Ok(rounds);
            }
        }
    })?;
    Ok(ExpectationReport::from_estimates(
        vec![StrandEstimate {
            strand: i,
            expectation: mean,
            stderr,
        }],
        Method::MonteCarlo,
    ))
}

/// Simulates the collection model until strand 1 is recoverable; every edge
/// draw is a fresh copy. Returns the mean and standard error of the
/// stopping round.
pub fn mc_tau_graph(params: &GraphModelParams, trials: u64, seed: u64) -> Result<ExpectationReport> {
    params.validate()?;
    let k = params.k;
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let vertex_mass = k as f64 * params.big_p;
    let cap = ROUND_CAP_PER_K * k as u64;
    let (mean, stderr) = run_trials(trials, |t| {
        let mut rng = per_trial_rng(seed, t);
        let mut state = GraphState::new(k);
        loop {
            if state.rounds >= cap {
                return Err(Error::StoppingCap(cap));
            }
            let u: f64 = rng.gen::<f64>();
            if u < vertex_mass {
                let j = ((u / params.big_p) as usize).min(k - 1);
                state.record_vertex(j);
            } else {
                let e = (((u - vertex_mass) / params.p) as usize).min(pairs.len() - 1);
                let (a, b) = pairs[e];
                state.record_edge(a, b);
            }
            if graph_recoverable(&mut state, 0) {
                return Ok(state.rounds);
            }
        }
    })?;
    Ok(ExpectationReport::from_estimates(
        vec![StrandEstimate {
            strand: 1,
            expectation: mean,
            stderr,
        }],
        Method::MonteCarlo,
    ))
}
