//! Wall-clock timings for the quadratic DP and the fast edit algorithm.

use std::time::{Duration, Instant};

use seqhard_core::edit_fast::edit_distance_fast;
use seqhard_core::measures::{edit_dp, CostScheme};

use crate::gen::{random_string, rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Dp,
    Fast,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dp => "dp",
            Algorithm::Fast => "fast",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Timing {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub cells: u128,
    /// Median over the repetitions.
    pub elapsed: Duration,
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    v[v.len() / 2]
}

/// Times `algorithm` on a random `n x m` pair over `0..sigma` under Levenshtein costs.
pub fn time_edit(algorithm: Algorithm, n: usize, m: usize, sigma: u32, reps: usize, seed: u64) -> Timing {
    let mut r = rng(seed);
    let x = random_string(&mut r, n, sigma);
    let y = random_string(&mut r, m, sigma);
    let costs = CostScheme::levenshtein();
    let samples = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            let d = match algorithm {
                Algorithm::Dp => edit_dp(&x, &y, &costs),
                Algorithm::Fast => edit_distance_fast(&x, &y, &costs),
            };
            std::hint::black_box(d);
            start.elapsed()
        })
        .collect();
    Timing { algorithm, n, m, cells: n as u128 * m as u128, elapsed: median(samples) }
}

/// Fast-algorithm time ratio when `n` grows from `n1` to `n2` at fixed `m`.
pub fn fast_scaling(m: usize, n1: usize, n2: usize, sigma: u32, reps: usize, seed: u64) -> (Timing, Timing, f64) {
    let a = time_edit(Algorithm::Fast, n1, m, sigma, reps, seed);
    let b = time_edit(Algorithm::Fast, n2, m, sigma, reps, seed);
    let ratio = b.elapsed.as_secs_f64() / a.elapsed.as_secs_f64().max(1e-9);
    (a, b, ratio)
}
