//! Haar combination of transform-block DCs up to superblock level.
//!
//! Leaf DCs enter pre-scaled by `1 << shift` (shift = maximum split
//! depth of the plane), which keeps every 2x2 Haar butterfly division
//! exact and puts all tree levels on one common fixed-point scale.
//! The superblock DC is coded as a residual against a weighted
//! prediction from neighboring superblocks; h/v coefficients predict
//! from the co-located parent coefficient; diagonals are unpredicted.

use crate::entropy::{
    decode_signed, encode_signed, MagnitudeModel, RangeDecoder, RangeEncoder,
};
use crate::geom::SplitTree;
use crate::{round_div, round_shift};

/// One 2x2 orthonormal Haar butterfly. Exact when the inputs share a
/// factor of 2 (they do along the coded path); otherwise rounds half
/// away from zero.
pub fn haar4_forward(a: i64, b: i64, c: i64, d: i64) -> (i64, i64, i64, i64) {
    (
        round_shift(a + b + c + d, 1),
        round_shift(a - b + c - d, 1),
        round_shift(a + b - c - d, 1),
        round_shift(a - b - c + d, 1),
    )
}

pub fn haar4_inverse(dc: i64, h: i64, v: i64, diag: i64) -> (i64, i64, i64, i64) {
    (
        round_shift(dc + h + v + diag, 1),
        round_shift(dc - h + v - diag, 1),
        round_shift(dc + h - v - diag, 1),
        round_shift(dc - h - v + diag, 1),
    )
}

/// Prediction weights for (left, top-left, top, top-right) superblock
/// DCs. Numerators over a common denominator; they must sum to the
/// denominator so the prediction is affine-consistent.
#[derive(Clone, Copy, Debug)]
pub struct DcPredictorWeights {
    pub num: [i64; 4],
    pub den: i64,
}

impl Default for DcPredictorWeights {
    fn default() -> Self {
        DcPredictorWeights {
            num: [5, -2, 8, 5],
            den: 16,
        }
    }
}

/// Decoded DCs of the causal neighbor superblocks, on the same stored
/// scale as the tree root.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeighborDcs {
    pub left: Option<i64>,
    pub top_left: Option<i64>,
    pub top: Option<i64>,
    pub top_right: Option<i64>,
}

/// Weighted neighbor prediction, renormalized over whichever
/// neighbors exist. No neighbors predicts 0.
pub fn predict_dc(neighbors: &NeighborDcs, weights: &DcPredictorWeights) -> i64 {
    debug_assert_eq!(weights.num.iter().sum::<i64>(), weights.den);
    let picks = [
        neighbors.left,
        neighbors.top_left,
        neighbors.top,
        neighbors.top_right,
    ];
    let mut acc = 0i64;
    let mut den = 0i64;
    for (w, v) in weights.num.iter().zip(picks) {
        if let Some(v) = v {
            acc += w * v;
            den += w;
        }
    }
    if den <= 0 {
        // In raster order top-left never appears alone, so a
        // non-positive denominator means no neighbors at all.
        debug_assert!(picks.iter().all(|p| p.is_none()));
        return 0;
    }
    round_div(acc, den)
}

/// Haar coefficient tree over one superblock. Values are on the
/// stored scale (`1 << shift` times the orthonormal value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcTree {
    pub dc: i64,
    pub kind: DcTreeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DcTreeKind {
    Leaf,
    Node {
        h: i64,
        v: i64,
        diag: i64,
        children: Box<[DcTree; 4]>,
    },
}

impl DcTree {
    /// Bottom-up combine of leaf DCs (z-order, orthonormal DCT scale)
    /// over the given split shape.
    pub fn build(shape: &SplitTree, leaf_dcs: &[i64], shift: u32) -> DcTree {
        let mut it = leaf_dcs.iter();
        let tree = Self::build_rec(shape, &mut it, shift);
        assert!(it.next().is_none(), "leaf count mismatch");
        tree
    }

    fn build_rec<'a>(
        shape: &SplitTree,
        leaf_dcs: &mut impl Iterator<Item = &'a i64>,
        shift: u32,
    ) -> DcTree {
        match shape {
            SplitTree::Leaf => DcTree {
                dc: leaf_dcs.next().expect("leaf count mismatch") << shift,
                kind: DcTreeKind::Leaf,
            },
            SplitTree::Split(sub) => {
                let children: Vec<DcTree> = sub
                    .iter()
                    .map(|s| Self::build_rec(s, leaf_dcs, shift))
                    .collect();
                let children: Box<[DcTree; 4]> =
                    Box::new(children.try_into().expect("quad"));
                let (dc, h, v, diag) = haar4_forward(
                    children[0].dc,
                    children[1].dc,
                    children[2].dc,
                    children[3].dc,
                );
                DcTree {
                    dc,
                    kind: DcTreeKind::Node {
                        h,
                        v,
                        diag,
                        children,
                    },
                }
            }
        }
    }

    /// Leaf DCs in z-order, back on the orthonormal DCT scale.
    pub fn leaf_dcs(&self, shift: u32) -> Vec<i64> {
        let mut out = Vec::new();
        self.collect_leaves(shift, &mut out);
        out
    }

    fn collect_leaves(&self, shift: u32, out: &mut Vec<i64>) {
        match &self.kind {
            DcTreeKind::Leaf => out.push(round_shift(self.dc, shift)),
            DcTreeKind::Node { children, .. } => {
                for c in children.iter() {
                    c.collect_leaves(shift, out);
                }
            }
        }
    }
}

/// Adaptive models for the three Haar residual classes.
#[derive(Clone)]
pub struct HaarModels {
    pub dc: MagnitudeModel,
    pub hv: MagnitudeModel,
    pub diag: MagnitudeModel,
}

impl HaarModels {
    pub fn new() -> Self {
        HaarModels {
            dc: MagnitudeModel::new(),
            hv: MagnitudeModel::new(),
            diag: MagnitudeModel::new(),
        }
    }
}

impl Default for HaarModels {
    fn default() -> Self {
        Self::new()
    }
}

/// round(2^16 / 2^(L/2)) for L = 0..8.
const INV_SQRT2_POW: [i64; 9] = [
    65536, 46341, 32768, 23170, 16384, 11585, 8192, 5793, 4096,
];

/// Quantizer step on the stored scale for a coefficient at tree level
/// `level` (root coefficients sit at `level == shift`). The step gets
/// finer toward the root: q * 2^(-level/2) on the orthonormal scale.
pub fn haar_step(q: i64, shift: u32, level: u32) -> i64 {
    debug_assert!(q >= 1);
    let base = (16 * q) << shift;
    let step = round_shift(base * INV_SQRT2_POW[level as usize], 16);
    step.max(1)
}

fn quantize(value: i64, pred: i64, step: i64) -> (i64, i64) {
    let idx = round_div(value - pred, step);
    (idx, pred + idx * step)
}

/// Quantize and code the tree; returns the reconstructed tree the
/// decoder will produce.
pub fn superblock_dc_encode(
    enc: &mut RangeEncoder,
    models: &mut HaarModels,
    tree: &DcTree,
    neighbors: &NeighborDcs,
    weights: &DcPredictorWeights,
    q: i64,
    shift: u32,
) -> DcTree {
    let pred = predict_dc(neighbors, weights);
    let (idx, rec_dc) = quantize(tree.dc, pred, haar_step(q, shift, shift));
    encode_signed(enc, &mut models.dc, idx);
    encode_node(enc, models, tree, rec_dc, 0, 0, q, shift, shift)
}

#[allow(clippy::too_many_arguments)]
fn encode_node(
    enc: &mut RangeEncoder,
    models: &mut HaarModels,
    tree: &DcTree,
    rec_dc: i64,
    pred_h: i64,
    pred_v: i64,
    q: i64,
    shift: u32,
    level: u32,
) -> DcTree {
    match &tree.kind {
        DcTreeKind::Leaf => DcTree {
            dc: rec_dc,
            kind: DcTreeKind::Leaf,
        },
        DcTreeKind::Node {
            h, v, diag, children,
        } => {
            let step = haar_step(q, shift, level);
            let (ih, rec_h) = quantize(*h, pred_h, step);
            let (iv, rec_v) = quantize(*v, pred_v, step);
            let (id, rec_d) = quantize(*diag, 0, step);
            encode_signed(enc, &mut models.hv, ih);
            encode_signed(enc, &mut models.hv, iv);
            encode_signed(enc, &mut models.diag, id);
            let dcs = haar4_inverse(rec_dc, rec_h, rec_v, rec_d);
            let dcs = [dcs.0, dcs.1, dcs.2, dcs.3];
            let rec_children: Vec<DcTree> = children
                .iter()
                .zip(dcs)
                .map(|(c, cdc)| {
                    encode_node(enc, models, c, cdc, rec_h, rec_v, q, shift, level - 1)
                })
                .collect();
            DcTree {
                dc: rec_dc,
                kind: DcTreeKind::Node {
                    h: rec_h,
                    v: rec_v,
                    diag: rec_d,
                    children: Box::new(rec_children.try_into().expect("quad")),
                },
            }
        }
    }
}

/// Residual indices from a corrupt stream can be astronomically
/// large; clamping keeps the arithmetic in range. Honest encoders
/// never get near this bound.
fn clamp_idx(idx: i64) -> i64 {
    idx.clamp(-(1 << 24), 1 << 24)
}

pub fn superblock_dc_decode(
    dec: &mut RangeDecoder,
    models: &mut HaarModels,
    shape: &SplitTree,
    neighbors: &NeighborDcs,
    weights: &DcPredictorWeights,
    q: i64,
    shift: u32,
) -> DcTree {
    let pred = predict_dc(neighbors, weights);
    let idx = clamp_idx(decode_signed(dec, &mut models.dc));
    let rec_dc = pred + idx * haar_step(q, shift, shift);
    decode_node(dec, models, shape, rec_dc, 0, 0, q, shift, shift)
}

#[allow(clippy::too_many_arguments)]
fn decode_node(
    dec: &mut RangeDecoder,
    models: &mut HaarModels,
    shape: &SplitTree,
    rec_dc: i64,
    pred_h: i64,
    pred_v: i64,
    q: i64,
    shift: u32,
    level: u32,
) -> DcTree {
    match shape {
        SplitTree::Leaf => DcTree {
            dc: rec_dc,
            kind: DcTreeKind::Leaf,
        },
        SplitTree::Split(sub) => {
            let step = haar_step(q, shift, level);
            let rec_h = pred_h + clamp_idx(decode_signed(dec, &mut models.hv)) * step;
            let rec_v = pred_v + clamp_idx(decode_signed(dec, &mut models.hv)) * step;
            let rec_d = clamp_idx(decode_signed(dec, &mut models.diag)) * step;
            let dcs = haar4_inverse(rec_dc, rec_h, rec_v, rec_d);
            let dcs = [dcs.0, dcs.1, dcs.2, dcs.3];
            let children: Vec<DcTree> = sub
                .iter()
                .zip(dcs)
                .map(|(s, cdc)| {
                    decode_node(dec, models, s, cdc, rec_h, rec_v, q, shift, level - 1)
                })
                .collect();
            DcTree {
                dc: rec_dc,
                kind: DcTreeKind::Node {
                    h: rec_h,
                    v: rec_v,
                    diag: rec_d,
                    children: Box::new(children.try_into().expect("quad")),
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Plane;
    use crate::transform::dct_forward;

    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    fn random_shape(state: &mut u64, depth: u32, max_depth: u32) -> SplitTree {
        if depth < max_depth && xorshift(state) % 2 == 0 {
            let c: Vec<SplitTree> = (0..4)
                .map(|_| random_shape(state, depth + 1, max_depth))
                .collect();
            SplitTree::Split(Box::new(c.try_into().unwrap()))
        } else {
            SplitTree::Leaf
        }
    }

    #[test]
    fn haar4_examples() {
        assert_eq!(haar4_forward(10, 10, 10, 10), (20, 0, 0, 0));
        assert_eq!(haar4_forward(4, 0, 0, 0), (2, 2, 2, 2));
        // Parseval: 4^2 == 4 * 2^2.
        assert_eq!(4i64 * 4, 4 * (2 * 2));
    }

    #[test]
    fn haar4_exact_inverse() {
        let mut state = 99u64;
        for _ in 0..10_000 {
            // Pre-scaled by 2, per the butterfly's exactness contract.
            let q: Vec<i64> = (0..4)
                .map(|_| 2 * ((xorshift(&mut state) % 2001) as i64 - 1000))
                .collect();
            let (dc, h, v, d) = haar4_forward(q[0], q[1], q[2], q[3]);
            assert_eq!(haar4_inverse(dc, h, v, d), (q[0], q[1], q[2], q[3]));
        }
    }

    #[test]
    fn tree_forward_inverse_exact() {
        let mut state = 31u64;
        for _ in 0..10_000 {
            let shape = random_shape(&mut state, 0, 4);
            let n = shape.leaf_count();
            let dcs: Vec<i64> = (0..n)
                .map(|_| (xorshift(&mut state) % 60001) as i64 - 30000)
                .collect();
            let tree = DcTree::build(&shape, &dcs, 4);
            assert_eq!(tree.leaf_dcs(4), dcs);
        }
    }

    #[test]
    fn superblock_dc_tracks_pixel_sum() {
        // Four 32x32 DCTs combined once: the root DC must match the
        // superblock pixel sum under the orthonormal scaling
        // 16 * sum / 64 (DC gain sqrt(N*N) at N=64, 4 frac bits).
        let mut state = 5u64;
        let mut p = Plane::new(64, 64);
        for v in p.data.iter_mut() {
            *v = (xorshift(&mut state) % 256) as i32;
        }
        let shape = SplitTree::Split(Box::new([
            SplitTree::Leaf,
            SplitTree::Leaf,
            SplitTree::Leaf,
            SplitTree::Leaf,
        ]));
        let dcs: Vec<i64> = [(0, 0), (32, 0), (0, 32), (32, 32)]
            .iter()
            .map(|&(x, y)| dct_forward(&p, x, y, 32).dc() as i64)
            .collect();
        let tree = DcTree::build(&shape, &dcs, 1);
        let sum: i64 = p.data.iter().map(|&v| v as i64).sum();
        let want = 16.0 * sum as f64 / 64.0;
        let got = tree.dc as f64 / 2.0;
        // Each 32-point DCT DC carries up to ~1 pixel unit (16 coeff
        // units) of fixed-point error; four of them pool here.
        assert!((got - want).abs() < 32.0, "{got} vs {want}");
        assert!((got - want).abs() / want < 5e-4, "{got} vs {want}");
    }

    #[test]
    fn prediction_affine_consistency() {
        let w = DcPredictorWeights::default();
        let n = NeighborDcs {
            left: Some(130),
            top_left: Some(700),
            top: Some(-40),
            top_right: Some(255),
        };
        let base = predict_dc(&n, &w);
        for c in [-1000i64, -1, 17, 4096] {
            let shifted = NeighborDcs {
                left: n.left.map(|v| v + c),
                top_left: n.top_left.map(|v| v + c),
                top: n.top.map(|v| v + c),
                top_right: n.top_right.map(|v| v + c),
            };
            assert_eq!(predict_dc(&shifted, &w), base + c);
        }
    }

    #[test]
    fn prediction_renormalizes_at_edges() {
        let w = DcPredictorWeights::default();
        // A constant field predicts exactly itself whatever subset of
        // neighbors exists, because the effective weights re-sum to 1.
        for mask in 1u32..16 {
            if mask == 0b0010 {
                continue; // top-left alone cannot occur in raster order
            }
            let pick = |bit: u32| (mask >> bit) & 1 == 1;
            let n = NeighborDcs {
                left: pick(0).then_some(777),
                top_left: pick(1).then_some(777),
                top: pick(2).then_some(777),
                top_right: pick(3).then_some(777),
            };
            assert_eq!(predict_dc(&n, &w), 777, "mask {mask:04b}");
        }
        assert_eq!(predict_dc(&NeighborDcs::default(), &w), 0);
    }

    fn roundtrip(shape: &SplitTree, dcs: &[i64], q: i64, shift: u32) -> (DcTree, DcTree) {
        let tree = DcTree::build(shape, dcs, shift);
        let neighbors = NeighborDcs {
            left: Some(1234),
            ..Default::default()
        };
        let w = DcPredictorWeights::default();
        let mut enc = RangeEncoder::new();
        let mut m = HaarModels::new();
        let rec = superblock_dc_encode(&mut enc, &mut m, &tree, &neighbors, &w, q, shift);
        let buf = enc.finish();
        let mut dec = RangeDecoder::new(&buf);
        let mut m = HaarModels::new();
        let dec_tree =
            superblock_dc_decode(&mut dec, &mut m, shape, &neighbors, &w, q, shift);
        (rec, dec_tree)
    }

    #[test]
    fn encode_decode_bit_exact() {
        let mut state = 2024u64;
        for _ in 0..200 {
            let shape = random_shape(&mut state, 0, 4);
            let n = shape.leaf_count();
            let dcs: Vec<i64> = (0..n)
                .map(|_| (xorshift(&mut state) % 40001) as i64 - 20000)
                .collect();
            let q = 1 + (xorshift(&mut state) % 40) as i64;
            let (rec, dec_tree) = roundtrip(&shape, &dcs, q, 4);
            assert_eq!(rec, dec_tree);
        }
    }

    #[test]
    fn near_lossless_error_bound() {
        // Worst-case leaf error from half-step quantization noise
        // propagated down the tree, plus the final de-scaling round.
        fn bound(q: i64, shift: u32, level: u32, e_dc: f64) -> f64 {
            if level == 0 {
                return e_dc;
            }
            let half = haar_step(q, shift, level) as f64 / 2.0;
            bound(q, shift, level - 1, (e_dc + 3.0 * half) / 2.0 + 0.5)
        }
        let mut state = 808u64;
        let q = 1i64;
        let shift = 4u32;
        let limit =
            (bound(q, shift, shift, haar_step(q, shift, shift) as f64 / 2.0) + 0.5)
                / (1u64 << shift) as f64;
        for _ in 0..500 {
            let shape = random_shape(&mut state, 0, 4);
            let n = shape.leaf_count();
            let dcs: Vec<i64> = (0..n)
                .map(|_| (xorshift(&mut state) % 40001) as i64 - 20000)
                .collect();
            let (rec, _) = roundtrip(&shape, &dcs, q, shift);
            for (orig, got) in dcs.iter().zip(rec.leaf_dcs(shift)) {
                let err = (orig - got).abs() as f64;
                assert!(err <= limit, "err {err} > bound {limit}");
            }
        }
    }

    #[test]
    fn constant_field_costs_a_few_bits() {
        // Fully split trees over a constant field: prediction kills
        // every residual, so each superblock is a handful of symbols.
        fn split(d: u32) -> SplitTree {
            if d == 0 {
                SplitTree::Leaf
            } else {
                SplitTree::Split(Box::new([
                    split(d - 1),
                    split(d - 1),
                    split(d - 1),
                    split(d - 1),
                ]))
            }
        }
        let full = split(2); // sixteen 16x16 leaves per superblock
        let mut enc = RangeEncoder::new();
        let mut m = HaarModels::new();
        let w = DcPredictorWeights::default();
        let leaf_dc = 16 * 16 * 128i64; // 16x16 block of constant 128
        let mut prev: Option<i64> = None;
        let sbs = 64;
        for _ in 0..sbs {
            let dcs = vec![leaf_dc; full.leaf_count()];
            let tree = DcTree::build(&full, &dcs, 4);
            let neighbors = NeighborDcs {
                left: prev,
                ..Default::default()
            };
            let rec = superblock_dc_encode(&mut enc, &mut m, &tree, &neighbors, &w, 8, 4);
            prev = Some(rec.dc);
        }
        let bits = enc.tell_bits();
        assert!(
            bits / sbs as f64 <= 8.0,
            "constant field costs {} bits/superblock",
            bits / sbs as f64
        );
    }
}
