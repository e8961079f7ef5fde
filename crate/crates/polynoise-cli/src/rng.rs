//! Counter-based pseudo-random sampling.
//!
//! Every command that draws random points (`stats`, `bench`) addresses the
//! stream by sample index instead of iterating a shared generator. That makes
//! the i-th point a pure function of `(seed, i)`, so work can be split across
//! threads in contiguous index ranges and still produce output that is
//! byte-identical for every thread count.
//!
//! The generator is SplitMix64. Its state update is a simple counter
//! (`state += GAMMA`), which means the n-th output has the closed form
//! `mix(seed + (n + 1) * GAMMA)` and random access is one multiply away.

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// Returns the `index`-th output of the SplitMix64 stream for `seed`.
pub fn at(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Maps a raw draw onto `[0, 1)` using the top 24 bits, the full precision of
/// an f32 mantissa. The result is always exactly representable.
pub fn unit_f32(bits: u64) -> f32 {
    (bits >> 40) as f32 * (1.0 / (1u64 << 24) as f32)
}

/// Maps a raw draw onto `[lo, hi)`.
pub fn in_range(bits: u64, lo: f32, hi: f32) -> f32 {
    lo + unit_f32(bits) * (hi - lo)
}

/// The `axis`-th coordinate of the `index`-th sample point, for a point
/// stream of dimension `dims`. Coordinates consume consecutive stream
/// positions so points of different dimension never alias.
pub fn coord(seed: u64, index: u64, axis: u64, dims: u64, lo: f32, hi: f32) -> f32 {
    debug_assert!(axis < dims);
    in_range(at(seed, index * dims + axis), lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_access_matches_sequential_iteration() {
        // Reference implementation: the classic stateful SplitMix64.
        let mut state = 123u64;
        for i in 0..100 {
            state = state.wrapping_add(GAMMA);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^= z >> 31;
            assert_eq!(at(123, i), z, "index {i}");
        }
    }

    #[test]
    fn unit_draws_stay_in_the_half_open_interval() {
        for i in 0..10_000 {
            let u = unit_f32(at(0, i));
            assert!((0.0..1.0).contains(&u), "draw {i} escaped: {u}");
        }
        // The all-ones pattern is the worst case for the upper bound.
        assert!(unit_f32(u64::MAX) < 1.0);
        assert_eq!(unit_f32(0), 0.0);
    }

    #[test]
    fn range_draws_cover_both_halves() {
        let (mut below, mut above) = (0u32, 0u32);
        for i in 0..1_000 {
            let x = in_range(at(7, i), -64.0, 64.0);
            assert!((-64.0..64.0).contains(&x));
            if x < 0.0 {
                below += 1;
            } else {
                above += 1;
            }
        }
        assert!(below > 400 && above > 400, "badly skewed: {below}/{above}");
    }
}
