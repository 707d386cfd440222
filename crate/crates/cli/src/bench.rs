//! Wall-clock timing of `realize` on generated sequences.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;
use trimulti_core::{realize, ConstructError};

use crate::generate::{generate_valid_sequence, GenerateError};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("benchmark needs at least one trial")]
    EmptyBenchmark,
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("realize failed: {0}")]
    Realize(ConstructError),
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub trials: usize,
    pub median_ns: u128,
    pub min_ns: u128,
    pub max_ns: u128,
    /// Largest number of positive-multiplicity pairs over all trials.
    pub max_edges: usize,
    pub edges_per_second: f64,
}

impl BenchReport {
    pub fn median(&self) -> Duration {
        Duration::from_nanos(self.median_ns as u64)
    }
}

/// Times `realize` (verification included) on `trials` sequences of length
/// `n` with degrees in `[4, 50]`, seeded `seed, seed + 1, ...`. Sequence
/// generation is not timed.
pub fn bench_realize(n: usize, trials: usize, seed: u64) -> Result<BenchReport, BenchError> {
    if trials == 0 {
        return Err(BenchError::EmptyBenchmark);
    }
    let mut times = Vec::with_capacity(trials);
    let mut edges = Vec::with_capacity(trials);
    for t in 0..trials {
        let seq = generate_valid_sequence(seed + t as u64, n..=n, 4..=50)?;
        let start = Instant::now();
        let r = realize(&seq).map_err(BenchError::Realize)?;
        times.push(start.elapsed());
        edges.push(r.graph.edge_count());
    }
    let mut sorted = times.clone();
    sorted.sort_unstable();
    let median = sorted[sorted.len() / 2];
    let mut by_time: Vec<usize> = (0..trials).collect();
    by_time.sort_by_key(|&i| times[i]);
    let median_edges = edges[by_time[trials / 2]];
    Ok(BenchReport {
        n,
        trials,
        median_ns: median.as_nanos().max(1),
        min_ns: sorted[0].as_nanos(),
        max_ns: sorted[sorted.len() - 1].as_nanos(),
        max_edges: edges.iter().copied().max().unwrap_or(0),
        edges_per_second: median_edges as f64 / median.as_secs_f64().max(1e-9),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bench_runs() {
        let r = bench_realize(10, 5, 1).unwrap();
        assert!(r.median_ns > 0);
        assert!(r.max_edges <= 21);
        assert!(r.min_ns <= r.median_ns && r.median_ns <= r.max_ns);
    }

    #[test]
    fn zero_trials() {
        assert!(matches!(
            bench_realize(10, 0, 1),
            Err(BenchError::EmptyBenchmark)
        ));
    }
}
