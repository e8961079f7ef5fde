//! Throughput measurement.
//!
//! The `bench` command evaluates a fixed batch of 2^18 random points over and
//! over, warms up for a tenth of the requested duration, measures for the
//! rest, and reports samples/second as JSON.
//!
//! Every round evaluates the *same* points (the batch is addressed by sample
//! index from a seeded counter RNG), so the reported `checksum` — the
//! wrapping sum of the bit patterns of one round's values — depends only on
//! the variant, the seed and the batch size. It is byte-identical across
//! runs, durations and thread counts, which makes it a cheap way to assert
//! that an optimization or a thread-count change did not alter a single
//! output bit.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::rng;
use crate::variant::Sampler;

/// Points per round: 2^18. Large enough that a round amortizes timer and
/// thread-join overhead, small enough that even the slowest variant finishes
/// a round in well under a tenth of the default duration.
pub const ROUND: u64 = 1 << 18;

/// Sampling domain for benchmark points, matching the `stats` default.
const DOMAIN: (f32, f32) = (-64.0, 64.0);

/// The JSON report printed by the `bench` command.
#[derive(Serialize)]
pub struct BenchReport {
    pub variant: String,
    pub threads: usize,
    pub samples: u64,
    pub seconds: f64,
    pub msamples_per_sec: f64,
    pub checksum: u64,
}

/// Evaluates one contiguous index range of the batch, returning the wrapping
/// sum of the result bit patterns.
fn run_range(sampler: &Sampler, seed: u64, begin: u64, end: u64) -> u64 {
    let dims = sampler.dims() as u64;
    let mut sum = 0u64;
    let mut p = [0.0f32; 4];
    for i in begin..end {
        for (axis, coord) in p.iter_mut().take(dims as usize).enumerate() {
            *coord = rng::coord(seed, i, axis as u64, dims, DOMAIN.0, DOMAIN.1);
        }
        sum = sum.wrapping_add(sampler.eval(p).to_bits() as u64);
    }
    sum
}

/// Evaluates the whole batch once, split across `threads` contiguous index
/// ranges, and returns the checksum.
fn run_round(sampler: &Sampler, seed: u64, threads: u64) -> u64 {
    let chunk = ROUND.div_ceil(threads);
    let mut checksum = 0u64;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let begin = (t * chunk).min(ROUND);
                let end = (begin + chunk).min(ROUND);
                scope.spawn(move || run_range(sampler, seed, begin, end))
            })
            .collect();
        for handle in handles {
            checksum = checksum.wrapping_add(handle.join().unwrap());
        }
    });
    checksum
}

/// Runs the benchmark: warm up for `0.1 * duration`, measure for the
/// remaining `0.9 * duration`, at least one round each.
pub fn run_bench(sampler: &Sampler, seed: u64, duration_secs: f64, threads: usize) -> BenchReport {
    let threads = threads.max(1);
    let warmup_budget = Duration::from_secs_f64((duration_secs * 0.1).max(0.0));
    let measure_budget = Duration::from_secs_f64((duration_secs * 0.9).max(0.0));

    // Warmup: at least one round, then until the warmup budget is spent.
    let warm_start = Instant::now();
    let mut checksum = run_round(sampler, seed, threads as u64);
    while warm_start.elapsed() < warmup_budget {
        checksum = run_round(sampler, seed, threads as u64);
    }

    // Measurement: at least one round, then until the budget is spent.
    let mut rounds = 0u64;
    let start = Instant::now();
    loop {
        let round_sum = run_round(sampler, seed, threads as u64);
        assert_eq!(
            round_sum, checksum,
            "a repeated round produced different bits"
        );
        rounds += 1;
        if start.elapsed() >= measure_budget {
            break;
        }
    }
    let seconds = start.elapsed().as_secs_f64();

    let samples = rounds * ROUND;
    BenchReport {
        variant: sampler.kind().name().to_owned(),
        threads,
        samples,
        seconds,
        msamples_per_sec: samples as f64 / seconds / 1e6,
        checksum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polynoise::{FbmParams, ShaderKind};

    fn sampler(kind: ShaderKind) -> Sampler {
        Sampler::new(kind, None, FbmParams::new(1, 2.0, 0.5).unwrap()).unwrap()
    }

    #[test]
    fn checksum_is_thread_count_invariant() {
        let s = sampler(ShaderKind::Simplex2);
        let one = run_round(&s, 0, 1);
        let three = run_round(&s, 0, 3);
        let eight = run_round(&s, 0, 8);
        assert_eq!(one, three);
        assert_eq!(one, eight);
    }

    #[test]
    fn checksum_depends_on_seed_and_variant() {
        let a = run_round(&sampler(ShaderKind::Simplex2), 0, 2);
        let b = run_round(&sampler(ShaderKind::Simplex2), 1, 2);
        let c = run_round(&sampler(ShaderKind::Classic2), 0, 2);
        assert_ne!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn a_short_bench_reports_consistent_numbers() {
        let report = run_bench(&sampler(ShaderKind::Simplex2), 0, 0.05, 2);
        assert_eq!(report.samples % ROUND, 0);
        assert!(report.samples >= ROUND);
        assert!(report.seconds > 0.0);
        let derived = report.samples as f64 / report.seconds / 1e6;
        assert!((report.msamples_per_sec - derived).abs() < 1e-9);
    }
}
