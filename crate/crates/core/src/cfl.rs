//! Chroma-from-luma prediction: the PVQ prediction vector for a
//! chroma block comes from the co-located reconstructed luma
//! coefficients, times a coded sign. Only the shape is borrowed; the
//! chroma gain is always coded standalone.

use crate::transform::CoeffBlock;

/// Per-chroma-block prediction source.
pub struct CflPredictor {
    /// n x n coefficient grid (raster order, DC slot zeroed).
    pub r: Vec<i32>,
    pub available: bool,
}

impl CflPredictor {
    pub fn unavailable(n: usize) -> Self {
        CflPredictor {
            r: vec![0; n * n],
            available: false,
        }
    }
}

/// Build the chroma prediction for an n x n chroma block whose
/// co-located luma area is covered by a single reconstructed luma
/// block. For 4:2:0 the luma block is 2n x 2n and the prediction is
/// its n x n low-frequency sub-block; same-size luma is taken as is.
/// Luma split finer than the chroma block leaves CfL unavailable.
pub fn make_chroma_predictor(luma: Option<&CoeffBlock>, n: usize, sign: i32) -> CflPredictor {
    debug_assert!(sign == 1 || sign == -1);
    let Some(luma) = luma else {
        return CflPredictor::unavailable(n);
    };
    if luma.size != n && luma.size != 2 * n {
        return CflPredictor::unavailable(n);
    }
    let mut r = vec![0i32; n * n];
    for u in 0..n {
        for v in 0..n {
            r[u * n + v] = sign * luma.get(u, v);
        }
    }
    r[0] = 0; // DC is never part of a PVQ band
    CflPredictor { r, available: true }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{RangeDecoder, RangeEncoder};
    use crate::pvq::{band_layout, pvq_decode_band, pvq_encode_band, PvqModels};

    fn take(slice: &[i32], idx: &[usize]) -> Vec<i32> {
        idx.iter().map(|&i| slice[i]).collect()
    }

    #[test]
    fn low_frequency_sub_block() {
        let mut luma = CoeffBlock::new(8);
        for u in 0..8 {
            for v in 0..8 {
                luma.set(u, v, (u * 8 + v) as i32);
            }
        }
        let p = make_chroma_predictor(Some(&luma), 4, -1);
        assert!(p.available);
        assert_eq!(p.r[0], 0);
        for u in 0..4 {
            for v in 0..4 {
                if (u, v) != (0, 0) {
                    assert_eq!(p.r[u * 4 + v], -luma.get(u, v));
                }
            }
        }
    }

    #[test]
    fn unavailable_cases() {
        assert!(!make_chroma_predictor(None, 4, 1).available);
        let luma = CoeffBlock::new(16);
        assert!(!make_chroma_predictor(Some(&luma), 4, 1).available);
    }

    /// Chroma exactly +-0.5 luma: with the right sign the prediction
    /// is collinear with the input, so theta quantizes to 0.
    #[test]
    fn scaled_chroma_gives_zero_theta() {
        let mut state = 7u64;
        let n = 4;
        let mut luma = CoeffBlock::new(n);
        for u in 0..n {
            for v in 0..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                luma.set(u, v, (state % 1000) as i32 - 500);
            }
        }
        let bands = band_layout(n);
        for sign in [1i32, -1] {
            let chroma: Vec<i32> = luma.coeffs.iter().map(|&c| sign * c / 2).collect();
            let p = make_chroma_predictor(Some(&luma), n, sign);
            let x = take(&chroma, &bands[0]);
            let r = take(&p.r, &bands[0]);
            let mut enc = RangeEncoder::new();
            let mut m = PvqModels::new();
            let (recon, code) = pvq_encode_band(&mut enc, &mut m, &x, &r, 2, false, false);
            assert!(!code.noref);
            assert_eq!(code.theta_index, Some(0), "sign {sign}");
            let buf = enc.finish();
            let mut m = PvqModels::new();
            let mut dec = RangeDecoder::new(&buf);
            assert_eq!(pvq_decode_band(&mut dec, &mut m, &r, 2, false), recon);
        }
    }
}
