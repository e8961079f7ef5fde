//! Classic Perlin noise and its periodic variant on the integer lattice:
//! 2^N cell corners, quintic fade, gradients shared with the simplex
//! variants. Values are exactly 0.0 on the integer lattice because the
//! selected corner's displacement is the zero vector and `mix32` is exact at
//! its endpoints.
//!
//! The periodic variant (`pnoise*`) is identical except that every lattice
//! corner coordinate — base cell plus corner offset — is reduced modulo its
//! axis period *before* hashing, which tiles the field exactly: corner
//! `period` hashes like corner 0, so value and derivative both match across
//! seams.

use crate::f32core::{mix32, mod32, vec2, vec3, vec4, Vec2, Vec3, Vec4};
use crate::gradient::{grad2, grad3, grad4, taylor_inv_sqrt};
use crate::hash::{hash_corner2, hash_corner3, hash_corner4, mod289};
use crate::noise::{NoiseParams, MAX_COORD};

/// Quintic fade t³(t(6t − 15) + 10); zero value and zero first/second
/// derivative at t = 0 and matching at t = 1, which is what makes the
/// interpolated field C² inside cells and C¹ across cell boundaries.
#[inline]
pub fn fade(t: f32) -> f32 {
    t * t * t * (t * (t * 6.0 - 15.0) + 10.0)
}

/// Largest usable axis period; the hash modulus 289 bounds the lattice.
pub const MAX_PERIOD: u32 = 288;

/// Error from the `Period*` constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodError {
    pub value: u32,
}

impl core::fmt::Display for PeriodError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "period {} out of range 1..={MAX_PERIOD}", self.value)
    }
}

impl std::error::Error for PeriodError {}

fn checked_axis(v: u32) -> Result<f32, PeriodError> {
    if (1..=MAX_PERIOD).contains(&v) {
        Ok(v as f32)
    } else {
        Err(PeriodError { value: v })
    }
}

macro_rules! period_type {
    ($name:ident, $($axis:ident),+) => {
        /// Validated per-axis integer periods in 1..=288, stored as f32 for
        /// the wrap arithmetic.
        #[derive(Clone, Copy, Debug, PartialEq)]
        pub struct $name {
            $(pub(crate) $axis: f32),+
        }

        impl $name {
            pub fn new($($axis: u32),+) -> Result<Self, PeriodError> {
                Ok(Self { $($axis: checked_axis($axis)?),+ })
            }

            $(pub fn $axis(&self) -> f32 { self.$axis })+
        }
    };
}

period_type!(Period2, x, y);
period_type!(Period3, x, y, z);
period_type!(Period4, x, y, z, w);

/// One corner's contribution: gradient of the hashed corner dotted with the
/// in-cell displacement, optionally weighted by the fast inverse sqrt of the
/// gradient's squared length.
#[inline]
fn corner_value2(corner: Vec2, d: Vec2, params: &NoiseParams) -> f32 {
    let g = grad2(hash_corner2(corner));
    let n = g.dot(d);
    if params.normalize_gradients {
        taylor_inv_sqrt(g.dot(g)) * n
    } else {
        n
    }
}

#[inline]
fn corner_value3(corner: Vec3, d: Vec3, params: &NoiseParams) -> f32 {
    let g = grad3(hash_corner3(corner));
    let n = g.dot(d);
    if params.normalize_gradients {
        taylor_inv_sqrt(g.dot(g)) * n
    } else {
        n
    }
}

#[inline]
fn corner_value4(corner: Vec4, d: Vec4, params: &NoiseParams) -> f32 {
    let g = grad4(hash_corner4(corner));
    let n = g.dot(d);
    if params.normalize_gradients {
        taylor_inv_sqrt(g.dot(g)) * n
    } else {
        n
    }
}

/// 2-D classic Perlin noise with default parameters.
#[inline]
pub fn cnoise2(p: Vec2) -> f32 {
    cnoise2_with(p, &NoiseParams::classic2())
}

/// 2-D classic Perlin noise with explicit [`NoiseParams`].
pub fn cnoise2_with(p: Vec2, params: &NoiseParams) -> f32 {
    cnoise2_impl(p, None, params)
}

/// 2-D periodic classic noise with default parameters.
#[inline]
pub fn pnoise2(p: Vec2, period: Period2) -> f32 {
    pnoise2_with(p, period, &NoiseParams::classic2())
}

/// 2-D periodic classic noise with explicit [`NoiseParams`].
pub fn pnoise2_with(p: Vec2, period: Period2, params: &NoiseParams) -> f32 {
    cnoise2_impl(p, Some(period), params)
}

fn cnoise2_impl(p: Vec2, period: Option<Period2>, params: &NoiseParams) -> f32 {
    debug_assert!(p.x.abs() <= MAX_COORD && p.y.abs() <= MAX_COORD);
    let pi = p.floor();
    let pf = p - pi;

    // Lattice coordinate of corner (cx, cy), wrapped by the period when
    // periodic and reduced into the hash domain.
    let corner = |cx: f32, cy: f32| -> Vec2 {
        match period {
            Some(per) => vec2(mod32(pi.x + cx, per.x), mod32(pi.y + cy, per.y)),
            None => vec2(mod289(pi.x) + cx, mod289(pi.y) + cy),
        }
    };

    let n00 = corner_value2(corner(0.0, 0.0), pf, params);
    let n10 = corner_value2(corner(1.0, 0.0), vec2(pf.x - 1.0, pf.y), params);
    let n01 = corner_value2(corner(0.0, 1.0), vec2(pf.x, pf.y - 1.0), params);
    let n11 = corner_value2(corner(1.0, 1.0), vec2(pf.x - 1.0, pf.y - 1.0), params);

    let u = fade(pf.x);
    let v = fade(pf.y);
    let nx0 = mix32(n00, n10, u);
    let nx1 = mix32(n01, n11, u);
    params.output_scale * mix32(nx0, nx1, v)
}

/// 3-D classic Perlin noise with default parameters.
#[inline]
pub fn cnoise3(p: Vec3) -> f32 {
    cnoise3_with(p, &NoiseParams::classic3())
}

/// 3-D classic Perlin noise with explicit [`NoiseParams`].
pub fn cnoise3_with(p: Vec3, params: &NoiseParams) -> f32 {
    cnoise3_impl(p, None, params)
}

/// 3-D periodic classic noise with default parameters.
#[inline]
pub fn pnoise3(p: Vec3, period: Period3) -> f32 {
    pnoise3_with(p, period, &NoiseParams::classic3())
}

/// 3-D periodic classic noise with explicit [`NoiseParams`].
pub fn pnoise3_with(p: Vec3, period: Period3, params: &NoiseParams) -> f32 {
    cnoise3_impl(p, Some(period), params)
}

fn cnoise3_impl(p: Vec3, period: Option<Period3>, params: &NoiseParams) -> f32 {
    debug_assert!(p.x.abs() <= MAX_COORD && p.y.abs() <= MAX_COORD && p.z.abs() <= MAX_COORD);
    let pi = p.floor();
    let pf = p - pi;

    let corner = |cx: f32, cy: f32, cz: f32| -> Vec3 {
        match period {
            Some(per) => vec3(
                mod32(pi.x + cx, per.x),
                mod32(pi.y + cy, per.y),
                mod32(pi.z + cz, per.z),
            ),
            None => vec3(mod289(pi.x) + cx, mod289(pi.y) + cy, mod289(pi.z) + cz),
        }
    };
    let value = |cx: f32, cy: f32, cz: f32| -> f32 {
        corner_value3(
            corner(cx, cy, cz),
            vec3(pf.x - cx, pf.y - cy, pf.z - cz),
            params,
        )
    };

    let u = fade(pf.x);
    let v = fade(pf.y);
    let w = fade(pf.z);
    // x innermost, then y, then z
    let nx00 = mix32(value(0.0, 0.0, 0.0), value(1.0, 0.0, 0.0), u);
    let nx10 = mix32(value(0.0, 1.0, 0.0), value(1.0, 1.0, 0.0), u);
    let nx01 = mix32(value(0.0, 0.0, 1.0), value(1.0, 0.0, 1.0), u);
    let nx11 = mix32(value(0.0, 1.0, 1.0), value(1.0, 1.0, 1.0), u);
    let nxy0 = mix32(nx00, nx10, v);
    let nxy1 = mix32(nx01, nx11, v);
    params.output_scale * mix32(nxy0, nxy1, w)
}

/// 4-D classic Perlin noise with default parameters.
#[inline]
pub fn cnoise4(p: Vec4) -> f32 {
    cnoise4_with(p, &NoiseParams::classic4())
}

/// 4-D classic Perlin noise with explicit [`NoiseParams`].
pub fn cnoise4_with(p: Vec4, params: &NoiseParams) -> f32 {
    cnoise4_impl(p, None, params)
}

/// 4-D periodic classic noise with default parameters.
#[inline]
pub fn pnoise4(p: Vec4, period: Period4) -> f32 {
    pnoise4_with(p, period, &NoiseParams::classic4())
}

/// 4-D periodic classic noise with explicit [`NoiseParams`].
pub fn pnoise4_with(p: Vec4, period: Period4, params: &NoiseParams) -> f32 {
    cnoise4_impl(p, Some(period), params)
}

fn cnoise4_impl(p: Vec4, period: Option<Period4>, params: &NoiseParams) -> f32 {
    debug_assert!(
        p.x.abs() <= MAX_COORD
            && p.y.abs() <= MAX_COORD
            && p.z.abs() <= MAX_COORD
            && p.w.abs() <= MAX_COORD
    );
    let pi = p.floor();
    let pf = p - pi;

    let corner = |cx: f32, cy: f32, cz: f32, cw: f32| -> Vec4 {
        match period {
            Some(per) => vec4(
                mod32(pi.x + cx, per.x),
                mod32(pi.y + cy, per.y),
                mod32(pi.z + cz, per.z),
                mod32(pi.w + cw, per.w),
            ),
            None => vec4(
                mod289(pi.x) + cx,
                mod289(pi.y) + cy,
                mod289(pi.z) + cz,
                mod289(pi.w) + cw,
            ),
        }
    };
    let value = |cx: f32, cy: f32, cz: f32, cw: f32| -> f32 {
        corner_value4(
            corner(cx, cy, cz, cw),
            vec4(pf.x - cx, pf.y - cy, pf.z - cz, pf.w - cw),
            params,
        )
    };

    let u = fade(pf.x);
    let v = fade(pf.y);
    let w = fade(pf.z);
    let q = fade(pf.w);
    // x innermost, then y, then z, then w
    let nx000 = mix32(value(0.0, 0.0, 0.0, 0.0), value(1.0, 0.0, 0.0, 0.0), u);
    let nx100 = mix32(value(0.0, 1.0, 0.0, 0.0), value(1.0, 1.0, 0.0, 0.0), u);
    let nx010 = mix32(value(0.0, 0.0, 1.0, 0.0), value(1.0, 0.0, 1.0, 0.0), u);
    let nx110 = mix32(value(0.0, 1.0, 1.0, 0.0), value(1.0, 1.0, 1.0, 0.0), u);
    let nx001 = mix32(value(0.0, 0.0, 0.0, 1.0), value(1.0, 0.0, 0.0, 1.0), u);
    let nx101 = mix32(value(0.0, 1.0, 0.0, 1.0), value(1.0, 1.0, 0.0, 1.0), u);
    let nx011 = mix32(value(0.0, 0.0, 1.0, 1.0), value(1.0, 0.0, 1.0, 1.0), u);
    let nx111 = mix32(value(0.0, 1.0, 1.0, 1.0), value(1.0, 1.0, 1.0, 1.0), u);
    let nxy00 = mix32(nx000, nx100, v);
    let nxy10 = mix32(nx010, nx110, v);
    let nxy01 = mix32(nx001, nx101, v);
    let nxy11 = mix32(nx011, nx111, v);
    let nxyz0 = mix32(nxy00, nxy10, w);
    let nxyz1 = mix32(nxy01, nxy11, w);
    params.output_scale * mix32(nxyz0, nxyz1, q)
}
