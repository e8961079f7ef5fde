//! Lattice hashing by permutation polynomial, entirely in binary32.
//!
//! The polynomial is h(x) = (34x² + x) mod 289. 289 = 17², the quadratic
//! coefficient 34 = 2·17 is divisible by 17 and the linear coefficient is a
//! unit, which makes h a bijection on Z/289 — verified exhaustively by
//! [`PermutationPolynomial::check`] rather than assumed. Everything else is
//! computed in f32: for pre-reduced inputs the largest intermediate is
//! (34·702 + 1)·702 = 16 757 238 < 2^24, so no product ever truncates and the
//! f32 pipeline reproduces exact integer arithmetic bit-for-bit.

use crate::f32core::{floor32, mod32, Vec2, Vec3, Vec4};

/// Reduce an integer-valued float into [0, 289). Exact for integer |x| <= 2^24.
///
/// A single `mod32(x, 289.0)` is not exact over that whole domain: for x just
/// above -2^24 the subtracted multiple 289·⌊x/289⌋ can reach magnitude
/// |x| + 288 > 2^24, where binary32 integers step by 2, so the product loses
/// its low bit and the residue lands off by one — inside [0, 289), where no
/// range check can catch it (e.g. x = -16 777 102 came out 214 instead of
/// 215). Splitting x on a power of two first keeps every rounding-prone
/// intermediate below 2^24; the one 2^24-sized product, 4096·hi, is a
/// multiple of 4096 and therefore exact:
///
///   x = 4096·hi + lo,   0 <= lo < 4096,   |hi| <= 4096
///   x ≡ 50·hi + lo (mod 289)              (4096 = 14·289 + 50)
///   |50·hi + lo| <= 204 800 + 4095 < 2^24
#[inline]
pub fn mod289(x: f32) -> f32 {
    debug_assert!(x == floor32(x), "mod289: input must be integer-valued");
    let hi = floor32(x * (1.0 / 4096.0));
    let lo = x - hi * 4096.0;
    mod32(hi * 50.0 + lo, 289.0)
}

/// h(x) = ((34x + 1)x) mod 289, evaluated in binary32.
///
/// Callers must keep |x| <= 702 (pre-reduced lattice coordinates plus corner
/// offsets stay below 580); beyond that 34x² + x exceeds 2^24 and the f32
/// products silently truncate. See [`naive_permute_truncation_probe`].
#[inline]
pub fn permute(x: f32) -> f32 {
    mod32(((x * 34.0) + 1.0) * x, 289.0)
}

/// Hash one 2-D lattice corner; the last coordinate is hashed first:
/// `permute(permute(y) + x)`.
#[inline]
pub fn hash_corner2(i: Vec2) -> f32 {
    permute(permute(i.y) + i.x)
}

/// Hash one 3-D lattice corner: `permute(permute(permute(z) + y) + x)`.
#[inline]
pub fn hash_corner3(i: Vec3) -> f32 {
    permute(permute(permute(i.z) + i.y) + i.x)
}

/// Hash one 4-D lattice corner, nesting from w inward to x.
#[inline]
pub fn hash_corner4(i: Vec4) -> f32 {
    permute(permute(permute(permute(i.w) + i.z) + i.y) + i.x)
}

/// A candidate permutation polynomial h(x) = (a·x² + b·x) mod m over Z/m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermutationPolynomial {
    pub a: u64,
    pub b: u64,
    pub m: u64,
}

/// Result of brute-forcing a [`PermutationPolynomial`] over its full domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationCheck {
    /// Whether x ↦ (a·x² + b·x) mod m hits every residue exactly once.
    pub is_bijection: bool,
    /// The image h(0), h(1), …, h(m-1), in exact integer arithmetic.
    pub image: Vec<u64>,
}

/// Errors from [`PermutationPolynomial::check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermutationCheckError {
    /// m = 0 defines no residue ring.
    ZeroModulus,
    /// m is too large for the exhaustive check (limit 10^6).
    ModulusTooLarge(u64),
}

impl core::fmt::Display for PermutationCheckError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::ZeroModulus => write!(f, "modulus must be nonzero"),
            Self::ModulusTooLarge(m) => {
                write!(f, "modulus {m} exceeds the brute-force limit of 1000000")
            }
        }
    }
}

impl std::error::Error for PermutationCheckError {}

impl PermutationPolynomial {
    pub const fn new(a: u64, b: u64, m: u64) -> Self {
        Self { a, b, m }
    }

    /// The permutation polynomial the noise functions use: (34x² + x) mod 289.
    pub const fn noise_default() -> Self {
        Self::new(34, 1, 289)
    }

    /// Evaluate h at one point in exact integer arithmetic.
    pub fn eval(&self, x: u64) -> u64 {
        let x = u128::from(x % self.m);
        let m = u128::from(self.m);
        ((u128::from(self.a) * x * x + u128::from(self.b) * x) % m) as u64
    }

    /// Brute-force bijectivity over the whole domain 0..m and return the
    /// image. Exact integer arithmetic; this is the oracle the f32 pipeline
    /// is tested against.
    pub fn check(&self) -> Result<PermutationCheck, PermutationCheckError> {
        if self.m == 0 {
            return Err(PermutationCheckError::ZeroModulus);
        }
        if self.m > 1_000_000 {
            return Err(PermutationCheckError::ModulusTooLarge(self.m));
        }
        let m = self.m as usize;
        let mut image = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        let mut is_bijection = true;
        for x in 0..self.m {
            let h = self.eval(x);
            if core::mem::replace(&mut seen[h as usize], true) {
                is_bijection = false;
            }
            image.push(h);
        }
        Ok(PermutationCheck {
            is_bijection,
            image,
        })
    }
}

/// Outcome of one [`naive_permute_truncation_probe`] evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationProbe {
    /// ((x·34 + 1)·x) mod 289 computed in f32 with no pre-reduction.
    pub naive_f32: f32,
    /// The exact integer value of (34x² + x) mod 289.
    pub exact: u64,
    /// Whether the two agree.
    pub matches: bool,
}

/// Evaluate the permutation polynomial in f32 *without* pre-reducing x, next
/// to the exact integer result. For |x| <= 702 every intermediate stays below
/// 2^24 and the two always agree; past that the f32 products truncate and the
/// naive evaluation goes wrong. This is the repeatable demonstration of why
/// [`mod289`] must be applied to lattice coordinates before hashing.
pub fn naive_permute_truncation_probe(x: i32) -> TruncationProbe {
    let xf = x as f32;
    let naive = mod32(((xf * 34.0) + 1.0) * xf, 289.0);
    let xi = i64::from(x);
    let exact = (34 * xi * xi + xi).rem_euclid(289) as u64;
    TruncationProbe {
        naive_f32: naive,
        exact,
        matches: naive == exact as f32,
    }
}
