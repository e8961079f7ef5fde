//! Distribution statistics over random sample points.
//!
//! The `stats` command draws points uniformly from a cube, evaluates the
//! selected variant at each, and reports moments, extrema and a histogram as
//! JSON. Points are addressed by index (see [`crate::rng`]), so the sampled
//! set depends only on the seed, never on the thread count.

use std::time::Instant;

use serde::Serialize;

use crate::rng;
use crate::variant::Sampler;

/// Number of histogram bins.
pub const BINS: usize = 64;

/// Histogram coverage. Values land in 64 equal bins across
/// `[-1.1, 1.1]`; anything outside (which a correctly scaled variant should
/// never produce) clamps into the first or last bin so no sample is dropped.
pub const HIST_LO: f32 = -1.1;
pub const HIST_HI: f32 = 1.1;

/// The JSON report printed by the `stats` command.
#[derive(Serialize)]
pub struct StatsReport {
    pub variant: String,
    pub samples: u64,
    pub mean: f64,
    pub stddev: f64,
    pub min: f32,
    pub max: f32,
    pub histogram: Vec<u64>,
    pub seconds: f64,
    pub msamples_per_sec: f64,
}

/// Per-thread accumulator, merged in thread order so the result is
/// deterministic for a fixed thread count.
struct Accum {
    sum: f64,
    sum_sq: f64,
    min: f32,
    max: f32,
    histogram: Vec<u64>,
}

impl Accum {
    fn new() -> Accum {
        Accum {
            sum: 0.0,
            sum_sq: 0.0,
            min: f32::INFINITY,
            max: f32::NEG_INFINITY,
            histogram: vec![0; BINS],
        }
    }

    fn push(&mut self, v: f32) {
        self.sum += v as f64;
        self.sum_sq += v as f64 * v as f64;
        self.min = self.min.min(v);
        self.max = self.max.max(v);
        self.histogram[bin_of(v)] += 1;
    }

    fn merge(&mut self, other: &Accum) {
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
        self.min = self.min.min(other.min);
        self.max = self.max.max(other.max);
        for (a, b) in self.histogram.iter_mut().zip(&other.histogram) {
            *a += b;
        }
    }
}

/// Bin index for a value, clamping outliers into the end bins.
pub fn bin_of(v: f32) -> usize {
    let t = (v - HIST_LO) / (HIST_HI - HIST_LO) * BINS as f32;
    (t.floor() as i64).clamp(0, BINS as i64 - 1) as usize
}

/// Evaluates `samples` random points in `[lo, hi)^dims` and reports the
/// distribution.
pub fn run_stats(
    sampler: &Sampler,
    samples: u64,
    seed: u64,
    domain: (f32, f32),
    threads: usize,
) -> StatsReport {
    let threads = threads.max(1) as u64;
    let dims = sampler.dims() as u64;
    let (lo, hi) = domain;
    let start = Instant::now();

    let chunk = samples.div_ceil(threads);
    let mut partials: Vec<Accum> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let begin = t * chunk;
                    let end = (begin + chunk).min(samples);
                    let mut acc = Accum::new();
                    let mut p = [0.0f32; 4];
                    for i in begin..end {
                        for (axis, coord) in p.iter_mut().take(dims as usize).enumerate() {
                            *coord = rng::coord(seed, i, axis as u64, dims, lo, hi);
                        }
                        acc.push(sampler.eval(p));
                    }
                    acc
                })
            })
            .collect();
        partials = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });

    let mut total = Accum::new();
    for acc in &partials {
        total.merge(acc);
    }
    let seconds = start.elapsed().as_secs_f64();

    let n = samples as f64;
    let mean = total.sum / n;
    let variance = (total.sum_sq / n - mean * mean).max(0.0);
    StatsReport {
        variant: sampler.kind().name().to_owned(),
        samples,
        mean,
        stddev: variance.sqrt(),
        min: total.min,
        max: total.max,
        histogram: total.histogram,
        seconds,
        msamples_per_sec: n / seconds / 1e6,
    }
}
