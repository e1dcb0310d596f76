//! Bit-exact fixed-point 2-D DCT-II.
//!
//! Both passes multiply by Q14 basis tables and shed 12 bits, so a
//! full forward transform gains 4 fractional bits; the inverse sheds
//! them again. All rounding is half away from zero.

use super::tables::*;
use crate::frame::Plane;
use crate::geom::BLOCK_SIZES;
use crate::round_shift;

/// Fractional bits carried by transform coefficients.
pub const COEFF_FRAC_BITS: u32 = 4;

/// N x N transform coefficients in raster order, DC at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffBlock {
    pub size: usize,
    pub coeffs: Vec<i32>,
}

impl CoeffBlock {
    pub fn new(size: usize) -> Self {
        assert!(BLOCK_SIZES.contains(&size), "unsupported size {size}");
        CoeffBlock {
            size,
            coeffs: vec![0; size * size],
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.coeffs[row * self.size + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: i32) {
        self.coeffs[row * self.size + col] = v;
    }

    pub fn dc(&self) -> i32 {
        self.coeffs[0]
    }
}

fn basis_row(n: usize, k: usize) -> &'static [i16] {
    match n {
        4 => &DCT4[k],
        8 => &DCT8[k],
        16 => &DCT16[k],
        32 => &DCT32[k],
        64 => &DCT64[k],
        _ => panic!("unsupported size {n}"),
    }
}

/// One forward pass over `src` (length n), Q14 basis, shedding
/// `DCT_SHIFT - 2` bits so each pass adds 2 fractional bits.
fn forward_1d(src: &[i32], dst: &mut [i32]) {
    let n = src.len();
    for k in 0..n {
        let row = basis_row(n, k);
        let acc: i64 = src.iter().zip(row).map(|(&x, &t)| x as i64 * t as i64).sum();
        dst[k] = round_shift(acc, DCT_SHIFT - 2) as i32;
    }
}

/// One inverse pass; `shed` fractional bits are removed.
fn inverse_1d(src: &[i32], dst: &mut [i32], shed: u32) {
    let n = src.len();
    for i in 0..n {
        let mut acc: i64 = 0;
        for k in 0..n {
            acc += src[k] as i64 * basis_row(n, k)[i] as i64;
        }
        dst[i] = round_shift(acc, DCT_SHIFT + shed) as i32;
    }
}

/// Forward 2-D DCT of the n x n region of `src` at (x0, y0).
pub fn dct_forward(src: &Plane, x0: usize, y0: usize, n: usize) -> CoeffBlock {
    assert!(BLOCK_SIZES.contains(&n), "unsupported size {n}");
    let mut tmp = vec![0i32; n * n];
    let mut line = vec![0i32; n];
    let mut out = CoeffBlock::new(n);
    // Rows first.
    for r in 0..n {
        let row: Vec<i32> = (0..n).map(|c| src.get(x0 + c, y0 + r)).collect();
        forward_1d(&row, &mut line);
        tmp[r * n..(r + 1) * n].copy_from_slice(&line);
    }
    // Then columns; coefficient (u, v) = row frequency u, col frequency v.
    let mut col = vec![0i32; n];
    for c in 0..n {
        for r in 0..n {
            col[r] = tmp[r * n + c];
        }
        forward_1d(&col, &mut line);
        for u in 0..n {
            out.set(u, c, line[u]);
        }
    }
    out
}

/// Inverse 2-D DCT into the n x n region of `dst` at (x0, y0).
pub fn dct_inverse(block: &CoeffBlock, dst: &mut Plane, x0: usize, y0: usize) {
    let n = block.size;
    let mut tmp = vec![0i32; n * n];
    let mut line = vec![0i32; n];
    let mut col = vec![0i32; n];
    for c in 0..n {
        for u in 0..n {
            col[u] = block.get(u, c);
        }
        inverse_1d(&col, &mut line, 0);
        for r in 0..n {
            tmp[r * n + c] = line[r];
        }
    }
    for r in 0..n {
        inverse_1d(&tmp[r * n..(r + 1) * n], &mut line, COEFF_FRAC_BITS);
        for c in 0..n {
            dst.set(x0 + c, y0 + r, line[c]);
        }
    }
}
