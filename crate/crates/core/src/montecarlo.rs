//! Stochastic estimates of total variation and probability of error.
//!
//! Draws are split into fixed shards of [`SHARD_SIZE`]; shard `i` uses the
//! stream derived from `(seed, i)`. Shards may run on any number of threads
//! and are merged in index order, so an estimate depends only on its inputs,
//! `n` and `seed`. The first `m` draws of an `n`-draw run are the draws of
//! an `m`-draw run.

use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::{Distribution, RandomStream};
use crate::error::{domain, Error, Result};

pub const SHARD_SIZE: usize = 4096;

/// z-value of a two-sided 95% normal interval.
pub const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub n: usize,
    pub seed: u64,
    pub std_error: f64,
    pub ci95: (f64, f64),
}

impl Estimate {
    pub fn new(value: f64, n: usize, seed: u64, std_error: f64) -> Self {
        let half = Z95 * std_error;
        Self {
            value,
            n,
            seed,
            std_error,
            ci95: (value - half, value + half),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.ci95.0 <= x && x <= self.ci95.1
    }
}

/// Welford accumulator, mergeable with Chan's update.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: usize,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let mean = self.mean + delta * other.n as f64 / n as f64;
        let m2 = self.m2 + other.m2 + delta * delta * (self.n as f64 * other.n as f64) / n as f64;
        Moments { n, mean, m2 }
    }
}

/// Per-shard scratch buffers for one sampled point.
pub(crate) struct Workspace {
    pub x: Vec<f64>,
    pub z: Vec<f64>,
    pub scratch: Vec<f64>,
}

impl Workspace {
    pub fn new(dim: usize) -> Self {
        Self {
            x: vec![0.0; dim],
            z: vec![0.0; dim],
            scratch: vec![0.0; dim],
        }
    }
}

/// Mean of `n` draws of `statistic`, with standard error `sd / √n`.
pub(crate) fn sharded_estimate<F>(n: usize, seed: u64, dim: usize, statistic: F) -> Estimate
where
    F: Fn(&mut RandomStream, &mut Workspace) -> f64 + Sync,
{
    let root = RandomStream::new(seed);
    let shards = n.div_ceil(SHARD_SIZE);
    let parts: Vec<Moments> = (0..shards)
        .into_par_iter()
        .map(|i| {
            let mut rng = root.derive(i as u64);
            let mut ws = Workspace::new(dim);
            let count = SHARD_SIZE.min(n - i * SHARD_SIZE);
            let mut m = Moments::default();
            for _ in 0..count {
                m.push(statistic(&mut rng, &mut ws));
            }
            m
        })
        .collect();
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);
    let var = if total.n > 1 {
        (total.m2 / (total.n - 1) as f64).max(0.0)
    } else {
        0.0
    };
    Estimate::new(total.mean, total.n, seed, (var / total.n as f64).sqrt())
}

fn check_pair(p1: &Distribution, p2: &Distribution, n: usize) -> Result<()> {
    if p1.dim() != p2.dim() {
        return Err(Error::DimensionMismatch {
            expected: p1.dim(),
            got: p2.dim(),
        });
    }
    if n < 2 {
        return domain(format!("need at least two draws (got {n})"));
    }
    Ok(())
}

/// `|1 - exp(log_ratio)|` with the exponent capped below overflow.
#[inline]
fn abs_one_minus_ratio(log_ratio: f64) -> f64 {
    if log_ratio == 0.0 {
        return 0.0;
    }
    (1.0 - log_ratio.min(700.0).exp()).abs()
}

/// `TV(p1, p2) ≈ (1/2n) Σ |1 - p2(xᵢ)/p1(xᵢ)|` with `xᵢ ~ p1`.
///
/// Draws come from the first argument, so swapping arguments changes the
/// variance but not the limit.
pub fn estimate_tv(p1: &Distribution, p2: &Distribution, n: usize, seed: u64) -> Result<Estimate> {
    check_pair(p1, p2, n)?;
    Ok(sharded_estimate(n, seed, p1.dim(), |rng, ws| {
        p1.sample_into(rng, &mut ws.x, &mut ws.z);
        let l1 = p1.log_pdf_with(&ws.x, &mut ws.scratch);
        let l2 = p2.log_pdf_with(&ws.x, &mut ws.scratch);
        0.5 * abs_one_minus_ratio(l2 - l1)
    }))
}

/// Probability of error `∫ min(w1 p1, w2 p2)`, estimated by importance
/// sampling from the prior mixture `w1 p1 + w2 p2`. The per-draw statistic
/// `min(w1 p1, w2 p2) / (w1 p1 + w2 p2)` lies in `[0, 1/2]`.
pub fn estimate_pe(
    p1: &Distribution,
    p2: &Distribution,
    w1: f64,
    w2: f64,
    n: usize,
    seed: u64,
) -> Result<Estimate> {
    check_pair(p1, p2, n)?;
    check_priors(w1, w2)?;
    let (lw1, lw2) = (w1.ln(), w2.ln());
    Ok(sharded_estimate(n, seed, p1.dim(), |rng, ws| {
        let from_first = rng.uniform() < w1;
        let src = if from_first { p1 } else { p2 };
        src.sample_into(rng, &mut ws.x, &mut ws.z);
        let a = lw1 + p1.log_pdf_with(&ws.x, &mut ws.scratch);
        let b = lw2 + p2.log_pdf_with(&ws.x, &mut ws.scratch);
        1.0 / (1.0 + (a - b).abs().exp())
    }))
}

/// Equal-prior probability of error through the total variation estimator,
/// `P̂e = (1 - T̂V) / 2` with draws from `p1`.
pub fn estimate_pe_via_tv(
    p1: &Distribution,
    p2: &Distribution,
    n: usize,
    seed: u64,
) -> Result<Estimate> {
    check_pair(p1, p2, n)?;
    Ok(sharded_estimate(n, seed, p1.dim(), |rng, ws| {
        p1.sample_into(rng, &mut ws.x, &mut ws.z);
        let l1 = p1.log_pdf_with(&ws.x, &mut ws.scratch);
        let l2 = p2.log_pdf_with(&ws.x, &mut ws.scratch);
        0.5 - 0.25 * abs_one_minus_ratio(l2 - l1)
    }))
}

pub(crate) fn check_priors(w1: f64, w2: f64) -> Result<()> {
    if !(w1 > 0.0 && w2 > 0.0) || (w1 + w2 - 1.0).abs() > 1e-12 {
        return domain(format!(
            "priors must be positive and sum to 1 (got {w1}, {w2})"
        ));
    }
    Ok(())
}

/// `estimate_tv` at each sample size in `n_list` (strictly increasing).
/// Smaller runs are prefixes of larger ones.
pub fn convergence_table(
    p1: &Distribution,
    p2: &Distribution,
    n_list: &[usize],
    seed: u64,
) -> Result<Vec<(usize, Estimate)>> {
    if n_list.is_empty() {
        return domain("sample-size list is empty");
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return domain("sample sizes must be strictly increasing");
    }
    n_list
        .iter()
        .map(|&n| estimate_tv(p1, p2, n, seed).map(|e| (n, e)))
        .collect()
}
