//! Pixel plane and frame containers.

/// One image plane. Samples are i32 so filtered intermediates can
/// exceed the 8-bit pixel range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    pub width: usize,
    pub height: usize,
    pub data: Vec<i32>,
}

impl Plane {
    pub fn new(width: usize, height: usize) -> Self {
        Plane {
            width,
            height,
            data: vec![0; width * height],
        }
    }

    pub fn from_u8(width: usize, height: usize, bytes: &[u8]) -> Self {
        assert_eq!(bytes.len(), width * height);
        Plane {
            width,
            height,
            data: bytes.iter().map(|&b| b as i32).collect(),
        }
    }

    pub fn to_u8(&self) -> Vec<u8> {
        self.data.iter().map(|&v| v.clamp(0, 255) as u8).collect()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i32 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: i32) {
        self.data[y * self.width + x] = v;
    }

    pub fn row(&self, y: usize) -> &[i32] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    /// Copy with reflect padding out to (pw, ph).
    pub fn padded(&self, pw: usize, ph: usize) -> Plane {
        assert!(pw >= self.width && ph >= self.height);
        let mut out = Plane::new(pw, ph);
        for y in 0..ph {
            let sy = reflect_index(y, self.height);
            for x in 0..pw {
                let sx = reflect_index(x, self.width);
                out.set(x, y, self.get(sx, sy));
            }
        }
        out
    }

    pub fn cropped(&self, w: usize, h: usize) -> Plane {
        assert!(w <= self.width && h <= self.height);
        let mut out = Plane::new(w, h);
        for y in 0..h {
            out.data[y * w..(y + 1) * w].copy_from_slice(&self.row(y)[..w]);
        }
        out
    }
}

fn reflect_index(i: usize, n: usize) -> usize {
    if i < n {
        i
    } else if 2 * n > i + 1 {
        // Mirror about the last sample: n-1, n-2, ...
        2 * n - 1 - i
    } else {
        // Padding deeper than the plane; clamp to the first sample.
        0
    }
}

/// Chroma layout of a frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromaMode {
    Monochrome,
    Yuv420,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub chroma: ChromaMode,
    /// Luma, then Cb and Cr when present.
    pub planes: Vec<Plane>,
}

impl Frame {
    pub fn mono(y: Plane) -> Self {
        Frame {
            chroma: ChromaMode::Monochrome,
            planes: vec![y],
        }
    }

    pub fn yuv420(y: Plane, cb: Plane, cr: Plane) -> Self {
        assert_eq!(cb.width, (y.width + 1) / 2);
        assert_eq!(cb.height, (y.height + 1) / 2);
        assert_eq!(cr.width, cb.width);
        assert_eq!(cr.height, cb.height);
        Frame {
            chroma: ChromaMode::Yuv420,
            planes: vec![y, cb, cr],
        }
    }

    pub fn width(&self) -> usize {
        self.planes[0].width
    }

    pub fn height(&self) -> usize {
        self.planes[0].height
    }
}

/// Mean squared error between two equally sized planes.
pub fn plane_mse(a: &Plane, b: &Plane) -> f64 {
    assert_eq!((a.width, a.height), (b.width, b.height));
    let n = a.data.len() as f64;
    let sse: i64 = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(&x, &y)| {
            let d = (x - y) as i64;
            d * d
        })
        .sum();
    sse as f64 / n
}

/// PSNR in dB for 8-bit content; infinite for identical planes.
pub fn plane_psnr(a: &Plane, b: &Plane) -> f64 {
    let mse = plane_mse(a, b);
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (255.0f64 * 255.0 / mse).log10()
    }
}

/// Weighted PSNR across planes (4:1:1 for Y:Cb:Cr), computed on the
/// pooled weighted MSE.
pub fn frame_psnr(a: &Frame, b: &Frame) -> f64 {
    assert_eq!(a.planes.len(), b.planes.len());
    let weights = [4.0, 1.0, 1.0];
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, (pa, pb)) in a.planes.iter().zip(&b.planes).enumerate() {
        num += weights[i] * plane_mse(pa, pb);
        den += weights[i];
    }
    let mse = num / den;
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (255.0f64 * 255.0 / mse).log10()
    }
}
