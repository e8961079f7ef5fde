//! Computed gradients on cross-polytope shells — no tables, a handful of
//! arithmetic ops per gradient.
//!
//! Each dimension maps a hash value onto a small grid and folds it onto the
//! surface |x| + |y| (+ |z| (+ |w|)) = L1, i.e. a diamond (L1 = 0.5), an
//! octahedron (L1 = 1) and a 16-cell (L1 = 1.5). The half-texel offsets
//! (`+0.5` in the grid decodes) keep every grid point off the fold seams, so
//! no component is ever exactly zero when a sign is taken. The sets are
//! centrally symmetric up to that half-texel offset (documented, not
//! asserted).

use crate::f32core::{abs32, floor32, fract32, mod32, round32, vec2, vec3, vec4, Vec2, Vec3, Vec4};

/// Number of distinct 2-D gradients.
pub const GRADIENT_COUNT_2D: usize = 41;
/// Number of distinct 3-D gradients.
pub const GRADIENT_COUNT_3D: usize = 49;
/// Number of distinct 4-D gradients.
pub const GRADIENT_COUNT_4D: usize = 294;

/// 2-D gradient on the diamond |gx| + |gy| = 0.5.
///
/// `x = fract(h/41)·2 − 1` walks the circumference; `gy = |x| − 0.5` and
/// `gx = x − round(x)` unfold it into the two coordinates. For integer
/// h ∈ [0, 41) this yields exactly 41 distinct gradients; for larger hash
/// values the binary32 quotient drifts by about one ulp per period of 41, so
/// values cluster within ~4e-7 of those 41 (the L1 norm still holds to 2^-20
/// everywhere on the hash domain).
#[inline]
pub fn grad2(h: f32) -> Vec2 {
    let x = fract32(h * (1.0 / 41.0)) * 2.0 - 1.0;
    let gy = abs32(x) - 0.5;
    let ox = round32(x);
    let gx = x - ox;
    vec2(gx, gy)
}

/// 3-D gradient on the octahedron |gx| + |gy| + |gz| = 1.
///
/// k = h mod 49 indexes a 7×7 grid: u and v sweep a square cap in steps of
/// 2/7 with a half-texel inset, z = 1 − |u| − |v| is the induced height, and
/// points below the equator (z < 0) fold onto the opposite face by shedding
/// one unit of sign from u and v. Keep-branch on z >= 0.
#[inline]
pub fn grad3(h: f32) -> Vec3 {
    let k = mod32(h, 49.0);
    let a = floor32(k / 7.0);
    let b = k - 7.0 * a;
    let u = (2.0 * a + 0.5) / 7.0 - 1.0;
    let v = (2.0 * b + 0.5) / 7.0 - 1.0;
    let z = 1.0 - abs32(u) - abs32(v);
    if z >= 0.0 {
        vec3(u, v, z)
    } else {
        vec3(u - u.signum(), v - v.signum(), z)
    }
}

/// 4-D gradient on the 16-cell |gx| + |gy| + |gz| + |gw| = 1.5.
///
/// k = h mod 294 decomposes as 49c + 7a + b with c ∈ {0..5}, a,b ∈ {0..6};
/// u,v come from the 7-grid and t from a 6-grid, w = 1.5 − |u| − |v| − |t|
/// closes the norm, and w < 0 folds u, v, t exactly like the 3-D case.
#[inline]
pub fn grad4(h: f32) -> Vec4 {
    let k = mod32(h, 294.0);
    let c = floor32(k / 49.0);
    let rem = k - 49.0 * c;
    let a = floor32(rem / 7.0);
    let b = rem - 7.0 * a;
    let u = (2.0 * a + 0.5) / 7.0 - 1.0;
    let v = (2.0 * b + 0.5) / 7.0 - 1.0;
    let t = (2.0 * c + 0.5) / 6.0 - 1.0;
    let w = 1.5 - abs32(u) - abs32(v) - abs32(t);
    if w >= 0.0 {
        vec4(u, v, t, w)
    } else {
        vec4(u - u.signum(), v - v.signum(), t - t.signum(), w)
    }
}

/// First-order Taylor expansion of 1/sqrt(r) around r = 0.7:
/// `1.79284291400159 − 0.85373472095314·r`.
///
/// Exact to binary32 at the expansion point; the relative error grows to
/// about 6.1% at r = 1.0. Kernel weights are multiplied by this instead of a
/// true inverse square root, and the residual bias is absorbed by the
/// empirical output scales.
#[inline]
#[allow(clippy::excessive_precision)] // coefficients kept digit-for-digit as published
pub fn taylor_inv_sqrt(r: f32) -> f32 {
    1.79284291400159 - 0.85373472095314 * r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l1_2(g: Vec2) -> f64 {
        g.x.abs() as f64 + g.y.abs() as f64
    }

    fn l1_3(g: Vec3) -> f64 {
        g.x.abs() as f64 + g.y.abs() as f64 + g.z.abs() as f64
    }

    fn l1_4(g: Vec4) -> f64 {
        g.x.abs() as f64 + g.y.abs() as f64 + g.z.abs() as f64 + g.w.abs() as f64
    }

    #[test]
    fn grad2_known_values() {
        assert_eq!(grad2(0.0), vec2(0.0, 0.5));
        let g = grad2(10.0);
        assert!((g.x - 0.487_804_9).abs() < 1e-6, "gx = {}", g.x);
        assert!((g.y - 0.012_195_1).abs() < 1e-6, "gy = {}", g.y);
    }

    #[test]
    fn grad2_wraps_every_41_indices_up_to_quotient_drift() {
        // fl(1/41)·41 = 1 − 2^-24, so the wrap is exact only in real
        // arithmetic; in binary32 grad2(41) sits one ulp-scale step away
        // from grad2(0).
        let (a, b) = (grad2(0.0), grad2(41.0));
        assert!((a.x - b.x).abs() <= 2e-7 && (a.y - b.y).abs() <= 2e-7);
    }

    #[test]
    fn grad2_canonical_set_is_41_distinct_diamond_points() {
        let mut seen = std::collections::BTreeSet::new();
        for h in 0..GRADIENT_COUNT_2D {
            let g = grad2(h as f32);
            seen.insert((g.x.to_bits(), g.y.to_bits()));
            assert!((l1_2(g) - 0.5).abs() <= 2f64.powi(-20), "h = {h}");
        }
        assert_eq!(seen.len(), GRADIENT_COUNT_2D);
    }

    #[test]
    fn grad2_l1_holds_over_full_hash_domain() {
        for h in 0..289 {
            let g = grad2(h as f32);
            assert!((l1_2(g) - 0.5).abs() <= 2f64.powi(-20), "h = {h}");
        }
    }

    #[test]
    fn grad3_known_values() {
        let g = grad3(24.0);
        let (u, v, z) = (-1.0 / 14.0, -1.0 / 14.0, 6.0 / 7.0);
        assert!((g.x - u).abs() < 1e-6 && (g.y - v).abs() < 1e-6 && (g.z - z).abs() < 1e-6);
        let g = grad3(48.0); // folds: k = 48 lies below the equator
        let (u, v, z) = (-3.0 / 14.0, -3.0 / 14.0, -4.0 / 7.0);
        assert!((g.x - u).abs() < 1e-6 && (g.y - v).abs() < 1e-6 && (g.z - z).abs() < 1e-6);
    }

    #[test]
    fn grad3_set_is_49_distinct_octahedron_points() {
        let mut seen = std::collections::BTreeSet::new();
        for k in 0..GRADIENT_COUNT_3D {
            let g = grad3(k as f32);
            seen.insert((g.x.to_bits(), g.y.to_bits(), g.z.to_bits()));
            assert!((l1_3(g) - 1.0).abs() <= 1e-6, "k = {k}: {:?}", g);
        }
        assert_eq!(seen.len(), GRADIENT_COUNT_3D);
        // hash domain reduces into the same set
        for h in 0..289 {
            let g = grad3(h as f32);
            assert!(seen.contains(&(g.x.to_bits(), g.y.to_bits(), g.z.to_bits())));
        }
    }

    #[test]
    fn grad4_set_is_294_distinct_16cell_points() {
        let mut seen = std::collections::BTreeSet::new();
        for k in 0..GRADIENT_COUNT_4D {
            let g = grad4(k as f32);
            seen.insert((g.x.to_bits(), g.y.to_bits(), g.z.to_bits(), g.w.to_bits()));
            assert!((l1_4(g) - 1.5).abs() <= 1e-6, "k = {k}: {:?}", g);
        }
        assert_eq!(seen.len(), GRADIENT_COUNT_4D);
    }

    #[test]
    fn taylor_inv_sqrt_exact_at_expansion_point() {
        let r: f32 = 0.7;
        assert!((taylor_inv_sqrt(r) - 1.0 / (r as f64).sqrt() as f32).abs() <= 1e-6);
        // ~6.1% relative error at r = 1
        let rel = (taylor_inv_sqrt(1.0) as f64 - 1.0).abs();
        assert!(rel > 0.055 && rel < 0.07, "rel = {rel}");
    }
}
