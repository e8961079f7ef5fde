//! Fractional Brownian motion: a normalized sum of octaves of any of the
//! base noise functions, each octave sampled at `lacunarity^k` times the
//! base frequency and weighted by `gain^k`. The weights are normalized by
//! their sum so the result stays in the base function's output range.

use crate::f32core::{Vec2, Vec3, Vec4};

/// A sample point that can be scaled by an octave's frequency multiplier.
pub trait Point: Copy {
    fn scale(self, s: f32) -> Self;
}

impl Point for Vec2 {
    fn scale(self, s: f32) -> Self {
        Vec2::scale(self, s)
    }
}

impl Point for Vec3 {
    fn scale(self, s: f32) -> Self {
        Vec3::scale(self, s)
    }
}

impl Point for Vec4 {
    fn scale(self, s: f32) -> Self {
        Vec4::scale(self, s)
    }
}

/// Error from [`FbmParams::new`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FbmError {
    /// `octaves` must be at least 1.
    ZeroOctaves,
    /// `lacunarity` must be finite and positive.
    BadLacunarity(f32),
    /// `gain` must be finite and positive.
    BadGain(f32),
}

impl core::fmt::Display for FbmError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FbmError::ZeroOctaves => write!(f, "octaves must be at least 1"),
            FbmError::BadLacunarity(v) => {
                write!(f, "lacunarity must be finite and positive, got {v}")
            }
            FbmError::BadGain(v) => write!(f, "gain must be finite and positive, got {v}"),
        }
    }
}

impl std::error::Error for FbmError {}

/// Validated fBm parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FbmParams {
    octaves: u32,
    lacunarity: f32,
    gain: f32,
}

impl FbmParams {
    /// Common defaults: 4 octaves, frequency doubling, amplitude halving.
    pub const DEFAULT: FbmParams = FbmParams {
        octaves: 4,
        lacunarity: 2.0,
        gain: 0.5,
    };

    pub fn new(octaves: u32, lacunarity: f32, gain: f32) -> Result<Self, FbmError> {
        if octaves == 0 {
            return Err(FbmError::ZeroOctaves);
        }
        if !(lacunarity.is_finite() && lacunarity > 0.0) {
            return Err(FbmError::BadLacunarity(lacunarity));
        }
        if !(gain.is_finite() && gain > 0.0) {
            return Err(FbmError::BadGain(gain));
        }
        Ok(FbmParams {
            octaves,
            lacunarity,
            gain,
        })
    }

    pub fn octaves(&self) -> u32 {
        self.octaves
    }

    pub fn lacunarity(&self) -> f32 {
        self.lacunarity
    }

    pub fn gain(&self) -> f32 {
        self.gain
    }
}

impl Default for FbmParams {
    fn default() -> Self {
        FbmParams::DEFAULT
    }
}

/// Sum `octaves` copies of `noise`, the k-th sampled at `p` scaled by
/// `lacunarity^k` and weighted `gain^k`, divided by the sum of weights.
///
/// One octave is the base function unchanged: the loop accumulates
/// `1.0 * noise(p)` and divides by `1.0`, both of which are exact.
pub fn fbm<P: Point>(noise: impl Fn(P) -> f32, p: P, params: &FbmParams) -> f32 {
    let mut sum = 0.0f32;
    let mut norm = 0.0f32;
    let mut amplitude = 1.0f32;
    let mut frequency = 1.0f32;
    for _ in 0..params.octaves {
        sum += amplitude * noise(p.scale(frequency));
        norm += amplitude;
        amplitude *= params.gain;
        frequency *= params.lacunarity;
    }
    sum / norm
}
