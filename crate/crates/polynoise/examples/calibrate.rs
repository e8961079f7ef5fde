//! Recomputes the output-scale constants in `noise/mod.rs`.
//!
//! For each variant whose scale is calibrated rather than published, this
//! runs the documented procedure: evaluate the *raw* field (output scale
//! 1.0) at 10⁸ uniform points in [-64, 64]^N, keep the point of largest
//! |value|, refine it by coordinate-wise hill climbing with shrinking
//! steps, and report 1/max as the scale. The search is deterministic
//! (fixed seeds), so the printed constants are reproducible.
//!
//! Run with: cargo run -p polynoise --release --example calibrate

use polynoise::noise::NoiseParams;
use polynoise::{cnoise2_with, cnoise3_with, cnoise4_with, snoise3_with, snoise4_with};
use polynoise::{vec2, vec3, vec4};

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn coord(&mut self) -> f32 {
        let u = (self.next() >> 40) as f32 / (1u32 << 24) as f32;
        u * 128.0 - 64.0
    }
}

const SAMPLES: u64 = 100_000_000;

fn calibrate(name: &str, dims: usize, f: impl Fn(&[f32]) -> f32) {
    let mut rng = SplitMix64(0);
    let mut best = [0.0f32; 4];
    let mut best_abs = 0.0f32;
    let mut p = [0.0f32; 4];
    for _ in 0..SAMPLES {
        for c in p.iter_mut().take(dims) {
            *c = rng.coord();
        }
        let v = f(&p).abs();
        if v > best_abs {
            best_abs = v;
            best = p;
        }
    }

    // Coordinate-wise hill climbing with shrinking steps.
    let mut step = 0.25f32;
    while step > 1e-7 {
        let mut improved = true;
        while improved {
            improved = false;
            for axis in 0..dims {
                for dir in [-1.0f32, 1.0] {
                    let mut cand = best;
                    cand[axis] += dir * step;
                    let v = f(&cand).abs();
                    if v > best_abs {
                        best_abs = v;
                        best = cand;
                        improved = true;
                    }
                }
            }
        }
        step *= 0.5;
    }

    let scale = 1.0f32 / best_abs;
    println!(
        "{name}: max |raw| = {best_abs:?} at {:?} -> output scale {scale:?}",
        &best[..dims]
    );
}

fn main() {
    let raw = NoiseParams {
        kernel_radius: 0.5,
        output_scale: 1.0,
        normalize_gradients: true,
    };
    calibrate("snoise3", 3, |p| snoise3_with(vec3(p[0], p[1], p[2]), &raw));
    calibrate("snoise4", 4, |p| {
        snoise4_with(vec4(p[0], p[1], p[2], p[3]), &raw)
    });
    calibrate("cnoise2", 2, |p| cnoise2_with(vec2(p[0], p[1]), &raw));
    calibrate("cnoise3", 3, |p| cnoise3_with(vec3(p[0], p[1], p[2]), &raw));
    calibrate("cnoise4", 4, |p| {
        cnoise4_with(vec4(p[0], p[1], p[2], p[3]), &raw)
    });
}
