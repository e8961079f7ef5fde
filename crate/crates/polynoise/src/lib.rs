//! Procedural gradient noise computed from arithmetic alone — no
//! permutation tables, no texture lookups, no precomputed state of any
//! kind. Lattice corners are hashed with the permutation polynomial
//! (34x² + x) mod 289 and mapped to gradients on a cross-polytope, so
//! every sample is a pure function of its coordinates.
//!
//! All arithmetic is strict IEEE-754 binary32 with round-to-nearest-even.
//! The same inputs produce the same bit patterns on every platform and at
//! every optimization level; the test suite asserts bit-exact values, not
//! approximate ones, wherever the result is pinned.
//!
//! The crate provides:
//!
//! - simplex noise in 2, 3 and 4 dimensions ([`snoise2`], [`snoise3`],
//!   [`snoise4`]),
//! - classic Perlin noise in 2, 3 and 4 dimensions ([`cnoise2`],
//!   [`cnoise3`], [`cnoise4`]),
//! - tiling variants with validated integer periods ([`pnoise2`],
//!   [`pnoise3`], [`pnoise4`]),
//! - fractional Brownian motion over any of the above ([`fbm`]),
//! - GLSL source for all nine variants, generated from embedded assets
//!   that are kept in lock-step with the Rust implementations.

pub mod emitter;
pub mod f32core;
pub mod gradient;
pub mod hash;
pub mod noise;

pub use emitter::{emit_shader_source, emit_shader_source_bare, list_shader_kinds, ShaderKind};
pub use f32core::{vec2, vec3, vec4, Vec2, Vec3, Vec4};
pub use noise::{
    cnoise2, cnoise2_with, cnoise3, cnoise3_with, cnoise4, cnoise4_with, fade, fbm, pnoise2,
    pnoise2_with, pnoise3, pnoise3_with, pnoise4, pnoise4_with, snoise2, snoise2_with, snoise3,
    snoise3_with, snoise4, snoise4_with, FbmError, FbmParams, NoiseParams, Period2, Period3,
    Period4, PeriodError, Point,
};
