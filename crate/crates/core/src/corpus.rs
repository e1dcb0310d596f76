//! Deterministic synthetic test images: smooth photographic-like
//! content, hard edges, flat fields, stripes and texture. Used by the
//! test suites; handy for quick experiments too.

use crate::frame::{Frame, Plane};

fn xorshift(state: &mut u64) -> u64 {
    *state ^= *state << 13;
    *state ^= *state >> 7;
    *state ^= *state << 17;
    *state
}

/// Smooth gradients plus band-limited texture: low-frequency cosines
/// with a little mid-frequency ripple, like an out-of-focus photo.
pub fn photo(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    let mut state = 0x9e3779b97f4a7c15u64;
    let phases: Vec<f64> = (0..8)
        .map(|_| xorshift(&mut state) as f64 / u64::MAX as f64 * std::f64::consts::TAU)
        .collect();
    for y in 0..h {
        for x in 0..w {
            let (fx, fy) = (x as f64 / w as f64, y as f64 / h as f64);
            let mut v = 128.0;
            v += 60.0 * (std::f64::consts::TAU * (0.7 * fx + 0.4 * fy) + phases[0]).cos();
            v += 35.0 * (std::f64::consts::TAU * (1.3 * fx - 0.9 * fy) + phases[1]).cos();
            v += 18.0 * (std::f64::consts::TAU * (2.9 * fx + 2.1 * fy) + phases[2]).cos();
            v += 9.0 * (std::f64::consts::TAU * (5.2 * fx - 4.4 * fy) + phases[3]).cos();
            v += 4.0 * (std::f64::consts::TAU * (9.8 * fx + 7.3 * fy) + phases[4]).cos();
            p.set(x, y, (v.round() as i32).clamp(0, 255));
        }
    }
    p
}

/// Hard geometry: rectangles, a diagonal split and a disc. Strong
/// step edges everywhere, the worst case for ringing.
pub fn edges(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    for y in 0..h {
        for x in 0..w {
            // Diagonal split as the backdrop.
            let mut v = if x * h + y * w < w * h { 64 } else { 192 };
            // A bright rectangle and a dark disc on top.
            if x >= w / 8 && x < w * 3 / 8 && y >= h / 8 && y < h * 3 / 8 {
                v = 255;
            }
            let (dx, dy) = (x as i64 - 3 * w as i64 / 4, y as i64 - 3 * h as i64 / 4);
            if dx * dx + dy * dy < (w as i64 / 6) * (w as i64 / 6) {
                v = 0;
            }
            p.set(x, y, v);
        }
    }
    p
}

/// Constant mid-gray.
pub fn flat(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    p.data.fill(128);
    p
}

/// Featureless diagonal ramp: no texture, no edges, but enough
/// signal that rate still responds to the quantizer.
pub fn ramp(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    for y in 0..h {
        for x in 0..w {
            p.set(x, y, (40 + (x * 120) / w + (y * 80) / h) as i32);
        }
    }
    p
}

/// Vertical stripes with period 4: constant along columns, so the
/// vertical predictor should win everywhere.
pub fn stripes(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    for y in 0..h {
        for x in 0..w {
            p.set(x, y, if (x / 2) % 2 == 0 { 80 } else { 176 });
        }
    }
    p
}

/// Dense pseudo-random texture, hostile to every predictor.
pub fn texture(w: usize, h: usize) -> Plane {
    let mut p = Plane::new(w, h);
    let mut state = 0x243f6a8885a308d3u64;
    for y in 0..h {
        for x in 0..w {
            p.set(x, y, (xorshift(&mut state) % 256) as i32);
        }
    }
    p
}

/// Box-downsample a luma plane by 2 in each direction.
pub fn downsample2(p: &Plane) -> Plane {
    let (cw, ch) = (p.width.div_ceil(2), p.height.div_ceil(2));
    let mut out = Plane::new(cw, ch);
    for y in 0..ch {
        for x in 0..cw {
            let (x1, y1) = ((2 * x + 1).min(p.width - 1), (2 * y + 1).min(p.height - 1));
            let s = p.get(2 * x, 2 * y) + p.get(x1, 2 * y) + p.get(2 * x, y1) + p.get(x1, y1);
            out.set(x, y, (s + 2) >> 2);
        }
    }
    out
}

/// 4:2:0 frame whose chroma is half-amplitude luma: Cb/Cr AC detail
/// follows the luma shape exactly, the ideal chroma-from-luma input.
pub fn cfl_frame(w: usize, h: usize) -> Frame {
    let y = photo(w, h);
    let ds = downsample2(&y);
    let scale = |s: i32| -> Plane {
        let mut c = ds.clone();
        for v in &mut c.data {
            *v = (128 + s * (*v - 128) / 2).clamp(0, 255);
        }
        c
    };
    Frame::yuv420(y, scale(1), scale(-1))
}

/// The standard mono corpus: name plus frame, smallest useful sizes.
pub fn mono_corpus() -> Vec<(&'static str, Frame)> {
    vec![
        ("photo", Frame::mono(photo(128, 128))),
        ("edges", Frame::mono(edges(128, 128))),
        ("flat", Frame::mono(flat(128, 128))),
        ("ramp", Frame::mono(ramp(128, 128))),
        ("stripes", Frame::mono(stripes(128, 128))),
        ("texture", Frame::mono(texture(64, 64))),
    ]
}
