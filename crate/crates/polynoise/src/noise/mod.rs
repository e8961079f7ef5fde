//! Gradient lattice noise built on the permutation-polynomial hash and the
//! computed cross-polytope gradients: simplex (`snoise*`), classic Perlin
//! (`cnoise*`), periodic classic (`pnoise*`) and fractal Brownian motion.
//!
//! All evaluators are pure functions of their binary32 inputs and are
//! bit-reproducible across runs, platforms and thread counts. The supported
//! evaluation domain is |coordinate| <= [`MAX_COORD`] per axis; inside it the
//! skewed/floored lattice coordinates and the hash pre-reduction stay exactly
//! representable with margin.

mod classic;
mod fbm;
mod simplex;

pub use classic::{
    cnoise2, cnoise2_with, cnoise3, cnoise3_with, cnoise4, cnoise4_with, fade, pnoise2,
    pnoise2_with, pnoise3, pnoise3_with, pnoise4, pnoise4_with, Period2, Period3, Period4,
    PeriodError,
};
pub use fbm::{fbm, FbmError, FbmParams, Point};
pub use simplex::{
    rank3, rank4, snoise2, snoise2_with, snoise3, snoise3_with, snoise4, snoise4_with,
};

/// Largest supported |coordinate| per axis.
pub const MAX_COORD: f32 = 2048.0;

/// Skew/unskew factors for the simplex lattice in N dimensions:
/// F = (sqrt(N+1) − 1)/N and G = (1 − 1/sqrt(N+1))/N, each written as a
/// decimal literal and rounded once to binary32.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SkewConstants {
    pub f: f32,
    pub g: f32,
}

/// 2-D constants, digit-for-digit the published listing's pair.
#[allow(clippy::excessive_precision)]
pub const SKEW_2D: SkewConstants = SkewConstants {
    f: 0.366025403784438597,
    g: 0.211324865405187134,
};

/// 3-D constants: F = 1/3, G = 1/6 (exact binary32 divisions).
pub const SKEW_3D: SkewConstants = SkewConstants {
    f: 1.0 / 3.0,
    g: 1.0 / 6.0,
};

/// 4-D constants: F = (sqrt(5) − 1)/4, G = (5 − sqrt(5))/20.
#[allow(clippy::excessive_precision)]
pub const SKEW_4D: SkewConstants = SkewConstants {
    f: 0.309016994374947451,
    g: 0.138196601125010524,
};

/// Skew constants for dimension `n` (2, 3 or 4).
pub fn skew_constants(n: u32) -> Option<SkewConstants> {
    match n {
        2 => Some(SKEW_2D),
        3 => Some(SKEW_3D),
        4 => Some(SKEW_4D),
        _ => None,
    }
}

/// Verbatim output scale of the published 2-D simplex listing.
pub const SIMPLEX2_OUTPUT_SCALE: f32 = 130.0;

// The remaining scales are calibrated so the field's observed supremum maps
// to 1.0: a stochastic max-|raw-value| search over 1e8 quasi-random points in
// [-64,64]^N followed by hill-climbing refinement around the best seeds, with
// outputScale = 1/max (see examples/calibrate.rs). Periodic classic noise
// reuses the classic scale of its dimension: wrapping only remaps corner
// hashes, so the attainable per-cell configurations are a subset of the
// unwrapped ones.

/// Calibrated output scale for 3-D simplex noise (kernel radius 0.5).
pub const SIMPLEX3_OUTPUT_SCALE: f32 = 108.04322;
/// Calibrated output scale for 4-D simplex noise (kernel radius 0.5).
pub const SIMPLEX4_OUTPUT_SCALE: f32 = 108.74138;
/// Calibrated output scale for 2-D classic noise.
pub const CLASSIC2_OUTPUT_SCALE: f32 = 2.3754516;
/// Calibrated output scale for 3-D classic noise.
pub const CLASSIC3_OUTPUT_SCALE: f32 = 1.4932542;
/// Calibrated output scale for 4-D classic noise.
pub const CLASSIC4_OUTPUT_SCALE: f32 = 1.496241;

/// Evaluation knobs shared by the noise functions.
///
/// The defaults reproduce the published constants: kernel radius 0.5,
/// gradient normalization on (kernel weights are multiplied by
/// [`crate::gradient::taylor_inv_sqrt`] of the squared gradient length rather
/// than renormalizing the vectors), and the per-variant output scale.
/// Classic noise has no radial kernel and ignores `kernel_radius`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseParams {
    /// Squared-distance kernel radius R in m = max(R − r², 0)⁴.
    pub kernel_radius: f32,
    /// Final multiplier mapping raw values into roughly [-1, 1].
    pub output_scale: f32,
    /// Multiply each corner's weight by the fast inverse-sqrt of its
    /// gradient's squared length.
    pub normalize_gradients: bool,
}

impl NoiseParams {
    pub const fn simplex2() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: SIMPLEX2_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }

    pub const fn simplex3() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: SIMPLEX3_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }

    pub const fn simplex4() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: SIMPLEX4_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }

    pub const fn classic2() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: CLASSIC2_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }

    pub const fn classic3() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: CLASSIC3_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }

    pub const fn classic4() -> Self {
        Self {
            kernel_radius: 0.5,
            output_scale: CLASSIC4_OUTPUT_SCALE,
            normalize_gradients: true,
        }
    }
}
