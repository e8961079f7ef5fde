//! Strict binary32 building blocks shared by every noise path.
//!
//! Everything in this crate is defined in terms of IEEE-754 binary32 with
//! round-to-nearest-even, one rounding per arithmetic op, no FMA contraction
//! and no extended-precision intermediates. Rust's `f32` semantics guarantee
//! exactly that on every supported target, so these helpers are thin wrappers
//! whose job is to pin down *which* expression is evaluated — in particular
//! the GLSL-style definitions of `mod`/`step`/`fract`/`mix` and the
//! left-to-right accumulation order of the dot products.

/// GLSL `floor`: largest integer-valued float `<= x`.
#[inline]
pub fn floor32(x: f32) -> f32 {
    x.floor()
}

/// GLSL `fract`: `x - floor(x)`.
///
/// For x in a one-ulp sliver below 0 (e.g. -2^-26) the subtraction rounds up
/// to exactly 1.0; that case is clamped to the next value below 1.0 so the
/// result is always in [0, 1). No hash or noise path can reach the clamp:
/// every `fract` argument in those paths is nonnegative, where the plain
/// subtraction already stays below 1.0.
#[inline]
pub fn fract32(x: f32) -> f32 {
    let f = x - x.floor();
    if f >= 1.0 {
        f32::from_bits(0x3f7f_ffff) // largest binary32 below 1.0
    } else {
        f
    }
}

/// GLSL `mod`: `x - y * floor(x / y)`. The sign of the result follows `y`:
/// for finite `x` the result lies in [0, y) for positive `y` and (y, 0] for
/// negative `y`.
///
/// Exact whenever `x` is integer-valued with |x| < 2^24 and `y` is a positive
/// integer (the hash and period-wrap paths), which is what makes the
/// permutation-polynomial pipeline bit-reproducible. Outside that domain the
/// raw formula can escape the range — by one ulp when `x` sits within an ulp
/// of a multiple of `y`, and arbitrarily far when the quotient is too large
/// to round exactly — so any escape is clamped to the in-range value next to
/// `y`, the end the one-ulp cases actually wrap past. No hash or noise path
/// can reach the clamp: their arguments are exact integers. `y == 0` is a
/// contract violation; the debug assertion fires, release builds return NaN
/// like the shader built-in.
#[inline]
pub fn mod32(x: f32, y: f32) -> f32 {
    debug_assert!(y != 0.0, "mod32: modulus must be nonzero");
    let m = x - y * (x / y).floor();
    if y > 0.0 {
        if m < 0.0 || m >= y {
            return y.next_down();
        }
    } else if m > 0.0 || m <= y {
        return y.next_up();
    }
    m
}

/// GLSL `step`: 0.0 if `x < edge`, else 1.0. Equality yields 1.0, which is
/// what gives tie-breaking in the rank ordering its "lower axis wins" rule.
#[inline]
pub fn step32(edge: f32, x: f32) -> f32 {
    if x < edge {
        0.0
    } else {
        1.0
    }
}

/// GLSL `abs`.
#[inline]
pub fn abs32(x: f32) -> f32 {
    x.abs()
}

/// GLSL `max`.
#[inline]
pub fn max32(a: f32, b: f32) -> f32 {
    a.max(b)
}

/// Sign-free rounding used by the gradient fold: `floor(x + 0.5)`.
/// Half-way cases round up (toward +inf), unlike `f32::round`.
#[inline]
pub fn round32(x: f32) -> f32 {
    (x + 0.5).floor()
}

/// GLSL `mix`: `x * (1 - a) + y * a`, evaluated exactly in that shape so both
/// endpoints are exact (`a = 0` returns `x` bitwise, `a = 1` returns `y`).
/// That is what makes classic noise exactly 0.0 on the integer lattice.
#[inline]
pub fn mix32(x: f32, y: f32, a: f32) -> f32 {
    x * (1.0 - a) + y * a
}

/// 2-component binary32 vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2 {
    pub x: f32,
    pub y: f32,
}

/// 3-component binary32 vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3 {
    pub x: f32,
    pub y: f32,
    pub z: f32,
}

/// 4-component binary32 vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec4 {
    pub x: f32,
    pub y: f32,
    pub z: f32,
    pub w: f32,
}

pub const fn vec2(x: f32, y: f32) -> Vec2 {
    Vec2 { x, y }
}

pub const fn vec3(x: f32, y: f32, z: f32) -> Vec3 {
    Vec3 { x, y, z }
}

pub const fn vec4(x: f32, y: f32, z: f32, w: f32) -> Vec4 {
    Vec4 { x, y, z, w }
}

impl Vec2 {
    pub const fn splat(v: f32) -> Self {
        vec2(v, v)
    }

    /// Dot product accumulated left to right: `(x*x') + (y*y')`.
    #[inline]
    pub fn dot(self, o: Vec2) -> f32 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn floor(self) -> Self {
        vec2(floor32(self.x), floor32(self.y))
    }

    #[inline]
    pub fn scale(self, s: f32) -> Self {
        vec2(self.x * s, self.y * s)
    }
}

impl Vec3 {
    pub const fn splat(v: f32) -> Self {
        vec3(v, v, v)
    }

    /// Dot product accumulated left to right: `((x*x') + (y*y')) + (z*z')`.
    #[inline]
    pub fn dot(self, o: Vec3) -> f32 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn floor(self) -> Self {
        vec3(floor32(self.x), floor32(self.y), floor32(self.z))
    }

    #[inline]
    pub fn scale(self, s: f32) -> Self {
        vec3(self.x * s, self.y * s, self.z * s)
    }
}

impl Vec4 {
    pub const fn splat(v: f32) -> Self {
        vec4(v, v, v, v)
    }

    /// Dot product accumulated left to right:
    /// `(((x*x') + (y*y')) + (z*z')) + (w*w')`.
    #[inline]
    pub fn dot(self, o: Vec4) -> f32 {
        self.x * o.x + self.y * o.y + self.z * o.z + self.w * o.w
    }

    #[inline]
    pub fn floor(self) -> Self {
        vec4(
            floor32(self.x),
            floor32(self.y),
            floor32(self.z),
            floor32(self.w),
        )
    }

    #[inline]
    pub fn scale(self, s: f32) -> Self {
        vec4(self.x * s, self.y * s, self.z * s, self.w * s)
    }
}

macro_rules! componentwise_ops {
    ($ty:ident { $($f:ident),+ }) => {
        impl core::ops::Add for $ty {
            type Output = $ty;
            #[inline]
            fn add(self, o: $ty) -> $ty {
                $ty { $($f: self.$f + o.$f),+ }
            }
        }
        impl core::ops::Sub for $ty {
            type Output = $ty;
            #[inline]
            fn sub(self, o: $ty) -> $ty {
                $ty { $($f: self.$f - o.$f),+ }
            }
        }
    };
}

componentwise_ops!(Vec2 { x, y });
componentwise_ops!(Vec3 { x, y, z });
componentwise_ops!(Vec4 { x, y, z, w });

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_fract_basics() {
        assert_eq!(floor32(-0.25), -1.0);
        assert_eq!(fract32(-0.25), 0.75);
        assert_eq!(fract32(3.0), 0.0);
        assert_eq!(fract32(1.5), 0.5);
    }

    #[test]
    fn fract_stays_below_one_even_in_the_rounding_sliver() {
        // x - floor(x) for these rounds to exactly 1.0 without the clamp.
        for x in [-(2f32.powi(-26)), -1e-9f32, -f32::MIN_POSITIVE] {
            let f = fract32(x);
            assert!((0.0..1.0).contains(&f), "fract32({x:e}) = {f}");
        }
    }

    #[test]
    fn mod_matches_shader_semantics() {
        assert_eq!(mod32(-1.0, 289.0), 288.0);
        assert_eq!(mod32(289.0, 289.0), 0.0);
        assert_eq!(mod32(5.5, 2.0), 1.5);
        // sign follows y
        assert_eq!(mod32(1.0, -3.0), -2.0);
        // sliver clamp
        let m = mod32(-1e-9, 289.0);
        assert!((0.0..289.0).contains(&m), "mod32 sliver = {m}");
    }

    #[test]
    fn step_ties_resolve_to_one() {
        assert_eq!(step32(0.5, 0.5), 1.0);
        assert_eq!(step32(0.5, 0.4999), 0.0);
        assert_eq!(step32(-1.0, 0.0), 1.0);
    }

    #[test]
    fn round_via_floor_rounds_half_up() {
        assert_eq!(round32(0.5), 1.0);
        assert_eq!(round32(-0.5), 0.0);
        assert_eq!(round32(-0.51), -1.0);
        assert_eq!(round32(2.49), 2.0);
    }

    #[test]
    fn mix_endpoints_are_exact() {
        let (a, b) = (0.123456f32, -7.654321f32);
        assert_eq!(mix32(a, b, 0.0), a);
        assert_eq!(mix32(a, b, 1.0), b);
        assert_eq!(mix32(-1.0, 1.0, 0.5), 0.0);
    }

    #[test]
    fn dot_accumulates_left_to_right() {
        // Chosen so that a different association changes the rounding.
        let a = vec3(1.0e8, 1.0, -1.0e8);
        let b = vec3(1.0, 1.0, 1.0);
        let ltr = (a.x * b.x + a.y * b.y) + a.z * b.z;
        assert_eq!(a.dot(b), ltr);
    }

    use proptest::prelude::*;

    proptest! {
        // The slivers that motivate the clamps live at extreme magnitude
        // ratios, so sample a microscopic band alongside the broad one.
        #[test]
        fn fract_stays_in_the_unit_interval(
            x in prop_oneof![-1e12f32..1e12f32, -1e-6f32..1e-6f32],
        ) {
            let f = fract32(x);
            prop_assert!((0.0..1.0).contains(&f), "fract32({x:?}) = {f:?}");
        }

        #[test]
        fn mod_sign_follows_positive_modulus(
            x in prop_oneof![-1e12f32..1e12f32, -1e-6f32..1e-6f32],
            y in prop_oneof![1e-6f32..1e6f32, 288.9f32..289.1f32],
        ) {
            let m = mod32(x, y);
            prop_assert!(m >= 0.0 && m < y, "mod32({x:?}, {y:?}) = {m:?}");
        }
    }
}
