//! Intra-only image codec built around lapped transforms, Haar DC,
//! perceptual vector quantization, chroma-from-luma prediction, a
//! directional deringing filter and a multi-symbol range coder.

pub mod cfl;
pub mod codec;
pub mod corpus;
pub mod dering;
pub mod entropy;

pub(crate) fn round_half_away(x: f64) -> i64 {
    if x >= 0.0 {
        (x + 0.5).floor() as i64
    } else {
        (x - 0.5).ceil() as i64
    }
}

/// Integer division rounding half away from zero.
pub(crate) fn round_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    if num >= 0 {
        (num + den / 2) / den
    } else {
        -((-num + den / 2) / den)
    }
}

/// Round `x / 2^shift` half away from zero.
pub(crate) fn round_shift(x: i64, shift: u32) -> i64 {
    round_div(x, 1 << shift)
}

pub mod frame;
pub mod geom;
pub mod haar;
pub mod pvq;
pub mod transform;
