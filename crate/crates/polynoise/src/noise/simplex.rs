//! Simplex noise over the skewed lattice: 3/4/5 corners in 2/3/4 dimensions,
//! corner selection by rank ordering, radial kernel m = max(R − r², 0)⁴.
//!
//! `snoise2` follows the published 2-D listing operation for operation in
//! binary32 and is bit-identical to a literal transcription of it (enforced
//! by the acceptance suite). The 3-D and 4-D variants extend the same
//! conventions: last coordinate hashed first, kernel radius 0.5, kernel
//! weights scaled by the Taylor inverse sqrt, corner terms accumulated left
//! to right.

use crate::f32core::{floor32, max32, step32, vec2, vec3, vec4, Vec2, Vec3, Vec4};
use crate::gradient::{grad2, grad3, grad4, taylor_inv_sqrt};
use crate::hash::{hash_corner2, hash_corner3, hash_corner4, mod289};
use crate::noise::{NoiseParams, MAX_COORD, SKEW_2D, SKEW_3D, SKEW_4D};

/// Corner-offset selectors for the 3-D simplex traversal.
///
/// Ranks every component of `x0` by the total order "value descending, axis
/// index ascending" (step32's equality-is-1 rule is what breaks ties toward
/// the lower axis). `i1` marks the largest component, `i2` the two largest;
/// component sums are exactly 1 and 2 and i1 <= i2 componentwise, for every
/// input including full ties.
#[inline]
pub fn rank3(x0: Vec3) -> (Vec3, Vec3) {
    let xy = step32(x0.y, x0.x);
    let xz = step32(x0.z, x0.x);
    let yz = step32(x0.z, x0.y);
    // Wins against the other axes; always a permutation of {0, 1, 2}.
    let wx = xy + xz;
    let wy = (1.0 - xy) + yz;
    let wz = (1.0 - xz) + (1.0 - yz);
    let i1 = vec3(step32(2.0, wx), step32(2.0, wy), step32(2.0, wz));
    let i2 = vec3(step32(1.0, wx), step32(1.0, wy), step32(1.0, wz));
    (i1, i2)
}

/// Corner-offset selectors for the 4-D simplex traversal; six comparisons,
/// same tie rule as [`rank3`]. Component sums are exactly 1, 2 and 3.
#[inline]
pub fn rank4(x0: Vec4) -> (Vec4, Vec4, Vec4) {
    let xy = step32(x0.y, x0.x);
    let xz = step32(x0.z, x0.x);
    let xw = step32(x0.w, x0.x);
    let yz = step32(x0.z, x0.y);
    let yw = step32(x0.w, x0.y);
    let zw = step32(x0.w, x0.z);
    let wx = xy + xz + xw;
    let wy = (1.0 - xy) + yz + yw;
    let wz = (1.0 - xz) + (1.0 - yz) + zw;
    let ww = (1.0 - xw) + (1.0 - yw) + (1.0 - zw);
    let i1 = vec4(
        step32(3.0, wx),
        step32(3.0, wy),
        step32(3.0, wz),
        step32(3.0, ww),
    );
    let i2 = vec4(
        step32(2.0, wx),
        step32(2.0, wy),
        step32(2.0, wz),
        step32(2.0, ww),
    );
    let i3 = vec4(
        step32(1.0, wx),
        step32(1.0, wy),
        step32(1.0, wz),
        step32(1.0, ww),
    );
    (i1, i2, i3)
}

/// 2-D simplex noise with the default parameters (radius 0.5, scale 130,
/// normalized gradients) — the published listing's semantics.
#[inline]
pub fn snoise2(p: Vec2) -> f32 {
    snoise2_with(p, &NoiseParams::simplex2())
}

/// 2-D simplex noise with explicit [`NoiseParams`].
pub fn snoise2_with(p: Vec2, params: &NoiseParams) -> f32 {
    debug_assert!(p.x.abs() <= MAX_COORD && p.y.abs() <= MAX_COORD);
    let c_g = SKEW_2D.g; // C.x in the listing
    let c_f = SKEW_2D.f; // C.y

    // First corner
    let s = p.dot(Vec2::splat(c_f));
    let i = vec2(floor32(p.x + s), floor32(p.y + s));
    let t = i.dot(Vec2::splat(c_g));
    let x0 = vec2((p.x - i.x) + t, (p.y - i.y) + t);

    // Other corners
    let i1x = step32(x0.y, x0.x); // 1.0 where x0.x >= x0.y, lower axis wins ties
    let i1y = 1.0 - i1x;
    let c_zw = c_g * 2.0 - 1.0;
    let x12 = vec4(
        (x0.x + c_g) - i1x,
        (x0.y + c_g) - i1y,
        x0.x + c_zw,
        x0.y + c_zw,
    );

    // Permutations
    let ir = vec2(mod289(i.x), mod289(i.y));
    let h = [
        hash_corner2(ir),
        hash_corner2(vec2(ir.x + i1x, ir.y + i1y)),
        hash_corner2(vec2(ir.x + 1.0, ir.y + 1.0)),
    ];

    let r = params.kernel_radius;
    let mut m = [
        max32(r - x0.dot(x0), 0.0),
        max32(r - vec2(x12.x, x12.y).dot(vec2(x12.x, x12.y)), 0.0),
        max32(r - vec2(x12.z, x12.w).dot(vec2(x12.z, x12.w)), 0.0),
    ];
    for w in &mut m {
        *w = *w * *w;
        *w = *w * *w;
    }

    // Gradients: 41 points on a diamond, one per corner hash
    let g = [grad2(h[0]), grad2(h[1]), grad2(h[2])];
    if params.normalize_gradients {
        for j in 0..3 {
            m[j] *= taylor_inv_sqrt(g[j].x * g[j].x + g[j].y * g[j].y);
        }
    }

    // Compute final noise value
    let gd = vec3(
        g[0].x * x0.x + g[0].y * x0.y,
        g[1].x * x12.x + g[1].y * x12.y,
        g[2].x * x12.z + g[2].y * x12.w,
    );
    params.output_scale * vec3(m[0], m[1], m[2]).dot(gd)
}

/// 3-D simplex noise with the default parameters.
#[inline]
pub fn snoise3(p: Vec3) -> f32 {
    snoise3_with(p, &NoiseParams::simplex3())
}

/// 3-D simplex noise with explicit [`NoiseParams`].
pub fn snoise3_with(p: Vec3, params: &NoiseParams) -> f32 {
    debug_assert!(p.x.abs() <= MAX_COORD && p.y.abs() <= MAX_COORD && p.z.abs() <= MAX_COORD);
    let g3 = SKEW_3D.g;
    let g3_2 = g3 * 2.0;
    let g3_3 = g3 * 3.0;

    // First corner
    let s = p.dot(Vec3::splat(SKEW_3D.f));
    let i = vec3(floor32(p.x + s), floor32(p.y + s), floor32(p.z + s));
    let t = i.dot(Vec3::splat(g3));
    let x0 = vec3((p.x - i.x) + t, (p.y - i.y) + t, (p.z - i.z) + t);

    // Other corners by rank ordering
    let (i1, i2) = rank3(x0);
    let x1 = vec3((x0.x - i1.x) + g3, (x0.y - i1.y) + g3, (x0.z - i1.z) + g3);
    let x2 = vec3(
        (x0.x - i2.x) + g3_2,
        (x0.y - i2.y) + g3_2,
        (x0.z - i2.z) + g3_2,
    );
    let x3 = vec3(
        (x0.x - 1.0) + g3_3,
        (x0.y - 1.0) + g3_3,
        (x0.z - 1.0) + g3_3,
    );

    // Permutations
    let ir = vec3(mod289(i.x), mod289(i.y), mod289(i.z));
    let h = [
        hash_corner3(ir),
        hash_corner3(ir + i1),
        hash_corner3(ir + i2),
        hash_corner3(vec3(ir.x + 1.0, ir.y + 1.0, ir.z + 1.0)),
    ];

    let d = [x0, x1, x2, x3];
    let mut n = 0.0;
    for j in 0..4 {
        n += corner_term3(d[j], h[j], params);
    }
    params.output_scale * n
}

#[inline]
fn corner_term3(d: Vec3, h: f32, params: &NoiseParams) -> f32 {
    let mut m = max32(params.kernel_radius - d.dot(d), 0.0);
    m = m * m;
    m = m * m;
    let g = grad3(h);
    if params.normalize_gradients {
        m *= taylor_inv_sqrt(g.dot(g));
    }
    m * g.dot(d)
}

/// 4-D simplex noise with the default parameters.
#[inline]
pub fn snoise4(p: Vec4) -> f32 {
    snoise4_with(p, &NoiseParams::simplex4())
}

/// 4-D simplex noise with explicit [`NoiseParams`].
pub fn snoise4_with(p: Vec4, params: &NoiseParams) -> f32 {
    debug_assert!(
        p.x.abs() <= MAX_COORD
            && p.y.abs() <= MAX_COORD
            && p.z.abs() <= MAX_COORD
            && p.w.abs() <= MAX_COORD
    );
    let g4 = SKEW_4D.g;
    let g4_2 = g4 * 2.0;
    let g4_3 = g4 * 3.0;
    let g4_4 = g4 * 4.0;

    // First corner
    let s = p.dot(Vec4::splat(SKEW_4D.f));
    let i = vec4(
        floor32(p.x + s),
        floor32(p.y + s),
        floor32(p.z + s),
        floor32(p.w + s),
    );
    let t = i.dot(Vec4::splat(g4));
    let x0 = vec4(
        (p.x - i.x) + t,
        (p.y - i.y) + t,
        (p.z - i.z) + t,
        (p.w - i.w) + t,
    );

    // Other corners by rank ordering
    let (i1, i2, i3) = rank4(x0);
    let x1 = vec4(
        (x0.x - i1.x) + g4,
        (x0.y - i1.y) + g4,
        (x0.z - i1.z) + g4,
        (x0.w - i1.w) + g4,
    );
    let x2 = vec4(
        (x0.x - i2.x) + g4_2,
        (x0.y - i2.y) + g4_2,
        (x0.z - i2.z) + g4_2,
        (x0.w - i2.w) + g4_2,
    );
    let x3 = vec4(
        (x0.x - i3.x) + g4_3,
        (x0.y - i3.y) + g4_3,
        (x0.z - i3.z) + g4_3,
        (x0.w - i3.w) + g4_3,
    );
    let x4 = vec4(
        (x0.x - 1.0) + g4_4,
        (x0.y - 1.0) + g4_4,
        (x0.z - 1.0) + g4_4,
        (x0.w - 1.0) + g4_4,
    );

    // Permutations
    let ir = vec4(mod289(i.x), mod289(i.y), mod289(i.z), mod289(i.w));
    let h = [
        hash_corner4(ir),
        hash_corner4(ir + i1),
        hash_corner4(ir + i2),
        hash_corner4(ir + i3),
        hash_corner4(vec4(ir.x + 1.0, ir.y + 1.0, ir.z + 1.0, ir.w + 1.0)),
    ];

    let d = [x0, x1, x2, x3, x4];
    let mut n = 0.0;
    for j in 0..5 {
        n += corner_term4(d[j], h[j], params);
    }
    params.output_scale * n
}

#[inline]
fn corner_term4(d: Vec4, h: f32, params: &NoiseParams) -> f32 {
    let mut m = max32(params.kernel_radius - d.dot(d), 0.0);
    m = m * m;
    m = m * m;
    let g = grad4(h);
    if params.normalize_gradients {
        m *= taylor_inv_sqrt(g.dot(g));
    }
    m * g.dot(d)
}
