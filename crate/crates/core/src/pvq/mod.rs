//! Gain-shape quantization of AC coefficient bands.
//!
//! A band is coded as a companded gain, an angle from the prediction
//! (after a Householder reflection aligns the prediction with an
//! axis), and a point on the integer pyramid ||y||_L1 = K coded by
//! exact combinatorial rank. Gain resolution follows g^(1-alpha) with
//! alpha = 1/3, which yields activity masking without signaling.

mod cwrs;

pub use cwrs::{codebook_size, rank, unrank};

use crate::entropy::{
    decode_magnitude, decode_signed, encode_magnitude, encode_signed, FrequencyModel,
    MagnitudeModel, RangeDecoder, RangeEncoder,
};
use crate::round_half_away;

pub const ALPHA: f64 = 1.0 / 3.0;
pub const BETA: f64 = 1.0 / (1.0 - ALPHA);

/// Hard ceiling on pulses per band; keeps rank codebooks small even
/// on corrupt streams.
pub const K_MAX: usize = 512;

/// Reflection that maps the prediction direction onto -s * e_m.
pub struct HouseholderReflector {
    pub v: Vec<f64>,
    pub m: usize,
    pub s: f64,
}

impl HouseholderReflector {
    /// None when r is the zero vector.
    pub fn from_prediction(r: &[f64]) -> Option<Self> {
        let norm = norm2(r);
        if norm <= 0.0 {
            return None;
        }
        let mut m = 0;
        for (i, &ri) in r.iter().enumerate() {
            if ri.abs() > r[m].abs() {
                m = i;
            }
        }
        let s = if r[m] < 0.0 { -1.0 } else { 1.0 };
        let mut v: Vec<f64> = r.iter().map(|&ri| ri / norm).collect();
        v[m] += s;
        Some(HouseholderReflector { v, m, s })
    }

    pub fn reflect(&self, x: &[f64]) -> Vec<f64> {
        let xv: f64 = x.iter().zip(&self.v).map(|(a, b)| a * b).sum();
        let vv: f64 = self.v.iter().map(|a| a * a).sum();
        let c = 2.0 * xv / vv;
        x.iter().zip(&self.v).map(|(a, b)| a - c * b).collect()
    }
}

fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Split z into gain, angle from -s*e_m, and the unit shape with no
/// e_m component. Zero gain returns theta 0 and a zero shape.
pub fn decompose(z: &[f64], m: usize, s: f64) -> (f64, f64, Vec<f64>) {
    let g = norm2(z);
    let mut u = vec![0.0; z.len()];
    if g <= 0.0 {
        return (0.0, 0.0, u);
    }
    let cos = (-s * z[m] / g).clamp(-1.0, 1.0);
    let theta = cos.acos();
    let mut rest = 0.0;
    for (i, &zi) in z.iter().enumerate() {
        if i != m {
            rest += zi * zi;
        }
    }
    let rest = rest.sqrt();
    if rest > 0.0 {
        for (i, &zi) in z.iter().enumerate() {
            if i != m {
                u[i] = zi / rest;
            }
        }
    }
    (g, theta, u)
}

/// z = g * (-s * e_m * cos(theta) + u * sin(theta)).
pub fn recompose(g: f64, theta: f64, u: &[f64], m: usize, s: f64) -> Vec<f64> {
    let (sin, cos) = theta.sin_cos();
    let mut z: Vec<f64> = u.iter().map(|&ui| g * sin * ui).collect();
    z[m] = -s * g * cos;
    z
}

/// Companded-gain quantizer step for block quantizer `q` (pixel
/// units; coefficients carry 4 fractional bits, hence the 16).
pub fn gain_quantizer(q: i64) -> f64 {
    ((16 * q) as f64).powf(1.0 - ALPHA)
}

/// Quantized companded gain index: round(g^(1-alpha) / q_gamma).
pub fn compand_gain(g: f64, q: i64) -> i64 {
    round_half_away(g.powf(1.0 - ALPHA) / gain_quantizer(q)).max(0)
}

pub fn decompand_gain(gain_index: i64, q: i64) -> f64 {
    if gain_index <= 0 {
        return 0.0;
    }
    (gain_index as f64 * gain_quantizer(q)).powf(BETA)
}

/// Angle step for a decoded gain index (gain in quantizer units).
pub fn theta_quantizer(gain_index: i64) -> f64 {
    BETA / gain_index as f64
}

/// Pulse count for a predicted band: depends only on the angle index
/// and dimension, so a corrupt gain cannot change the symbol count.
pub fn compute_k(theta_index: u64, n: usize) -> usize {
    let k = round_half_away(theta_index as f64 * ((n + 2) as f64 / 2.0).sqrt());
    (k.max(0) as usize).min(K_MAX)
}

/// Pulse count without a prediction (sin(theta) = 1).
pub fn compute_k_noref(gain_index: i64, n: usize) -> usize {
    let k = round_half_away(gain_index as f64 / BETA * ((n + 2) as f64 / 2.0).sqrt());
    (k.max(0) as usize).min(K_MAX)
}

/// Nearest codebook point: ||y||_L1 = K, signs matching t, maximizing
/// t.y / ||y||. Greedy pre-projection plus one-pulse refinement.
pub fn pvq_search(t: &[f64], k: usize) -> Vec<i32> {
    let n = t.len();
    let mut mags = vec![0i64; n];
    if k == 0 || n == 0 {
        return vec![0; n];
    }
    let ta: Vec<f64> = t.iter().map(|v| v.abs()).collect();
    let l1: f64 = ta.iter().sum();
    if l1 > 0.0 {
        for i in 0..n {
            mags[i] = round_half_away(k as f64 * ta[i] / l1).max(0);
        }
    }
    let mut total: i64 = mags.iter().sum();
    if total == 0 {
        mags[0] = 1;
        total = 1;
    }
    let mut ty: f64 = mags.iter().zip(&ta).map(|(&m, &a)| m as f64 * a).sum();
    let mut yy: f64 = mags.iter().map(|&m| (m * m) as f64).sum();
    while total > k as i64 {
        let mut best = usize::MAX;
        let mut best_score = f64::NEG_INFINITY;
        for i in 0..n {
            if mags[i] == 0 {
                continue;
            }
            let d = yy - 2.0 * mags[i] as f64 + 1.0;
            let score = if d <= 0.0 {
                f64::NEG_INFINITY
            } else {
                (ty - ta[i]) / d.sqrt()
            };
            if score > best_score {
                best_score = score;
                best = i;
            }
        }
        ty -= ta[best];
        yy -= 2.0 * mags[best] as f64 - 1.0;
        mags[best] -= 1;
        total -= 1;
    }
    while total < k as i64 {
        let mut best = 0;
        let mut best_score = f64::NEG_INFINITY;
        for i in 0..n {
            let score = (ty + ta[i]) / (yy + 2.0 * mags[i] as f64 + 1.0).sqrt();
            if score > best_score {
                best_score = score;
                best = i;
            }
        }
        ty += ta[best];
        yy += 2.0 * mags[best] as f64 + 1.0;
        mags[best] += 1;
        total += 1;
    }
    // Single-pulse moves until a local optimum; cheap and closes the
    // gap between greedy and exhaustive on small codebooks.
    for _ in 0..64 {
        let mut improved = false;
        for from in 0..n {
            if mags[from] == 0 {
                continue;
            }
            for to in 0..n {
                if to == from || mags[from] == 0 {
                    continue;
                }
                let nty = ty - ta[from] + ta[to];
                let nyy = yy - 2.0 * mags[from] as f64 + 2.0 * mags[to] as f64 + 2.0;
                if nty / nyy.sqrt() > ty / yy.sqrt() + 1e-12 {
                    mags[from] -= 1;
                    mags[to] += 1;
                    ty = nty;
                    yy = nyy;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    (0..n)
        .map(|i| {
            let m = mags[i] as i32;
            if t[i] < 0.0 {
                -m
            } else {
                m
            }
        })
        .collect()
}

/// Adaptive models shared by the PVQ bands of one plane class.
#[derive(Clone)]
pub struct PvqModels {
    pub gain: MagnitudeModel,
    pub theta: MagnitudeModel,
    pub noref: FrequencyModel,
}

impl PvqModels {
    pub fn new() -> Self {
        PvqModels {
            gain: MagnitudeModel::new(),
            theta: MagnitudeModel::new(),
            noref: FrequencyModel::new(2),
        }
    }
}

impl Default for PvqModels {
    fn default() -> Self {
        Self::new()
    }
}

/// What was coded for one band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvqBandCode {
    pub noref: bool,
    pub gain_index: i64,
    pub theta_index: Option<u64>,
    pub k: usize,
}

fn gain_prediction(r: &[f64], q: i64, gain_from_r: bool) -> i64 {
    if gain_from_r {
        compand_gain(norm2(r), q)
    } else {
        0
    }
}

fn round_vec(x: &[f64]) -> Vec<i32> {
    x.iter()
        .map(|&v| round_half_away(v).clamp(i32::MIN as i64, i32::MAX as i64) as i32)
        .collect()
}

fn unit_shape(y: &[i32]) -> Vec<f64> {
    let norm = (y.iter().map(|&v| v as f64 * v as f64).sum::<f64>()).sqrt();
    if norm <= 0.0 {
        return vec![0.0; y.len()];
    }
    y.iter().map(|&v| v as f64 / norm).collect()
}

fn reconstruct_noref(gain_index: i64, q: i64, y: &[i32]) -> Vec<i32> {
    let g = decompand_gain(gain_index, q);
    let u = unit_shape(y);
    round_vec(&u.iter().map(|&ui| g * ui).collect::<Vec<f64>>())
}

fn reconstruct_predicted(
    gain_index: i64,
    theta_index: u64,
    q: i64,
    y_free: &[i32],
    refl: &HouseholderReflector,
) -> Vec<i32> {
    let g = decompand_gain(gain_index, q);
    let theta = theta_index as f64 * theta_quantizer(gain_index);
    let mut u = unit_shape(y_free);
    u.insert(refl.m, 0.0);
    let z = recompose(g, theta, &u, refl.m, refl.s);
    round_vec(&refl.reflect(&z))
}

/// Largest angle index that stays within [0, pi/2].
fn theta_index_max(gain_index: i64) -> u64 {
    (std::f64::consts::FRAC_PI_2 / theta_quantizer(gain_index)).floor() as u64
}

/// Quantize and code one band against prediction `r`; returns the
/// decoder-identical reconstruction and what was coded. `gain_from_r`
/// predicts the gain index from ||r|| (luma intra); chroma-from-luma
/// codes its gain standalone. `force_noref` makes the encoder take
/// the unpredicted path while still signaling it.
pub fn pvq_encode_band(
    enc: &mut RangeEncoder,
    models: &mut PvqModels,
    x: &[i32],
    r: &[i32],
    q: i64,
    gain_from_r: bool,
    force_noref: bool,
) -> (Vec<i32>, PvqBandCode) {
    let n = x.len();
    assert_eq!(r.len(), n);
    let xf: Vec<f64> = x.iter().map(|&v| v as f64).collect();
    let rf: Vec<f64> = r.iter().map(|&v| v as f64).collect();
    let refl = HouseholderReflector::from_prediction(&rf);

    let gain_pred = gain_prediction(&rf, q, gain_from_r && refl.is_some());
    let gain_index = compand_gain(norm2(&xf), q);

    // Pick the path first: anti-correlated predictions go unpredicted
    // so theta stays in [0, pi/2].
    let (noref, theta) = match (&refl, force_noref || n < 2) {
        (None, _) | (_, true) => (true, 0.0),
        (Some(refl), false) => {
            let z = refl.reflect(&xf);
            let (_, theta, _) = decompose(&z, refl.m, refl.s);
            (theta > std::f64::consts::FRAC_PI_2, theta)
        }
    };
    if refl.is_some() {
        enc.encode_symbol(&mut models.noref, noref as usize);
    }
    encode_signed(enc, &mut models.gain, gain_index - gain_pred);
    if gain_index <= 0 {
        return (
            vec![0; n],
            PvqBandCode {
                noref,
                gain_index: 0,
                theta_index: None,
                k: 0,
            },
        );
    }

    if noref {
        let k = compute_k_noref(gain_index, n);
        let y = pvq_search(&xf, k);
        code_rank(enc, &y, k);
        let recon = reconstruct_noref(gain_index, q, &y);
        return (
            recon,
            PvqBandCode {
                noref: true,
                gain_index,
                theta_index: None,
                k,
            },
        );
    }

    let refl = refl.unwrap();
    let theta_index = round_half_away(theta / theta_quantizer(gain_index))
        .max(0)
        .min(theta_index_max(gain_index) as i64) as u64;
    encode_magnitude(enc, &mut models.theta, theta_index);
    let k = compute_k(theta_index, n - 1);
    let z = refl.reflect(&xf);
    let target: Vec<f64> = z
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != refl.m)
        .map(|(_, &v)| v)
        .collect();
    let y = pvq_search(&target, k);
    code_rank(enc, &y, k);
    let recon = reconstruct_predicted(gain_index, theta_index, q, &y, &refl);
    (
        recon,
        PvqBandCode {
            noref: false,
            gain_index,
            theta_index: Some(theta_index),
            k,
        },
    )
}

fn code_rank(enc: &mut RangeEncoder, y: &[i32], k: usize) {
    debug_assert_eq!(
        y.iter().map(|v| v.unsigned_abs() as usize).sum::<usize>(),
        k
    );
    if k == 0 {
        return;
    }
    enc.encode_uniform(&rank(y), &codebook_size(y.len(), k));
}

pub fn pvq_decode_band(
    dec: &mut RangeDecoder,
    models: &mut PvqModels,
    r: &[i32],
    q: i64,
    gain_from_r: bool,
) -> Vec<i32> {
    let n = r.len();
    let rf: Vec<f64> = r.iter().map(|&v| v as f64).collect();
    let refl = HouseholderReflector::from_prediction(&rf);

    let noref = match &refl {
        None => true,
        Some(_) => dec.decode_symbol(&mut models.noref) == 1,
    };
    let gain_pred = gain_prediction(&rf, q, gain_from_r && refl.is_some());
    // The upper clamp only matters for corrupt streams.
    let gain_index = (gain_pred + decode_signed(dec, &mut models.gain)).clamp(0, 1 << 24);
    if gain_index == 0 {
        return vec![0; n];
    }

    if noref {
        let k = compute_k_noref(gain_index, n);
        let y = decode_rank(dec, n, k);
        return reconstruct_noref(gain_index, q, &y);
    }

    let refl = refl.unwrap();
    let theta_index =
        decode_magnitude(dec, &mut models.theta).min(theta_index_max(gain_index));
    let k = compute_k(theta_index, n - 1);
    let y = decode_rank(dec, n - 1, k);
    reconstruct_predicted(gain_index, theta_index, q, &y, &refl)
}

fn decode_rank(dec: &mut RangeDecoder, n: usize, k: usize) -> Vec<i32> {
    if k == 0 {
        return vec![0; n];
    }
    let idx = dec.decode_uniform(&codebook_size(n, k));
    unrank(n, k, &idx)
}

/// AC band partition for an n x n block: raster coefficient indices
/// per band. Band 0 is the upper-left 4x4 minus DC; each octave adds
/// a horizontal strip, a vertical strip, and the diagonal remainder,
/// halved until no band exceeds 64 coefficients.
pub fn band_layout(n: usize) -> Vec<Vec<usize>> {
    let region = |r0: usize, r1: usize, c0: usize, c1: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for r in r0..r1 {
            for c in c0..c1 {
                v.push(r * n + c);
            }
        }
        v
    };
    fn push_split(out: &mut Vec<Vec<usize>>, band: Vec<usize>) {
        if band.len() > 64 {
            let half = band.len() / 2;
            let (a, b) = band.split_at(half);
            push_split(out, a.to_vec());
            push_split(out, b.to_vec());
        } else if !band.is_empty() {
            out.push(band);
        }
    }
    let low = n.min(4);
    let mut band0 = region(0, low, 0, low);
    band0.remove(0); // DC is not PVQ-coded
    let mut out = Vec::new();
    push_split(&mut out, band0);
    let mut s = 8;
    while s <= n {
        push_split(&mut out, region(0, s / 2, s / 2, s));
        push_split(&mut out, region(s / 2, s, 0, s / 2));
        push_split(&mut out, region(s / 2, s, s / 2, s));
        s *= 2;
    }
    out
}
