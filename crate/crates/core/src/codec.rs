//! Frame-level orchestration: block-size RDO, H/V AC prediction,
//! quantizer mapping, bitstream framing, and the bit-exact
//! encode/decode pipelines.
//!
//! Pipeline: pad to superblock multiples (reflect), prefilter on a
//! fixed 8-pixel lapping grid, then per superblock in raster order
//! code the split tree, Haar DC, and PVQ bands (luma with H/V
//! prediction, chroma with chroma-from-luma), reconstructing as we
//! go. After all superblocks: postfilter, then dering with
//! per-superblock factors coded at the end of the stream. The
//! encoder's reconstruction equals the decoder's output bit-exactly.

use std::collections::HashMap;

use crate::cfl::make_chroma_predictor;
use crate::dering::{dering_plane, dering_threshold};
use crate::entropy::{FrequencyModel, RangeDecoder, RangeEncoder};
use crate::frame::{ChromaMode, Frame, Plane};
use crate::geom::{BlockGrid, SplitTree};
use crate::haar::{
    superblock_dc_decode, superblock_dc_encode, DcPredictorWeights, DcTree, HaarModels,
    NeighborDcs,
};
use crate::pvq::{band_layout, pvq_decode_band, pvq_encode_band, PvqModels};
use crate::round_half_away;
use crate::transform::{
    dct_forward, dct_inverse, postfilter_plane, prefilter_plane, CoeffBlock,
    LappedFilterParams,
};

pub const SB_LUMA: usize = 64;
pub const SB_CHROMA: usize = 32;
const LUMA_SHIFT: u32 = 4;
const CHROMA_SHIFT: u32 = 3;
/// Lapping runs on this fixed grid so filtering can precede the
/// block-size decision.
const LAP_BLOCK: usize = 8;

#[derive(thiserror::Error, Debug, PartialEq, Eq)]
pub enum CodecError {
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported version {0}")]
    BadVersion(u8),
    #[error("truncated stream: need {need} bytes, have {have}")]
    Truncated { need: usize, have: usize },
    #[error("invalid header field: {0}")]
    BadHeader(&'static str),
}

pub const HEADER_LEN: usize = 15;
const MAGIC: &[u8; 3] = b"DLK";
const VERSION: u8 = b'1';
const CHROMA_420_BIT: u8 = 1;
const NO_CFL_BIT: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameHeader {
    pub width: u16,
    pub height: u16,
    /// Bit 0: 4:2:0 chroma present; bit 1: chroma-from-luma disabled.
    pub chroma: u8,
    pub qi: u8,
    pub t0: u8,
    pub payload_len: u32,
}

impl FrameHeader {
    pub fn serialize(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..3].copy_from_slice(MAGIC);
        out[3] = VERSION;
        out[4..6].copy_from_slice(&self.width.to_be_bytes());
        out[6..8].copy_from_slice(&self.height.to_be_bytes());
        out[8] = self.chroma;
        out[9] = self.qi;
        out[10] = self.t0;
        out[11..15].copy_from_slice(&self.payload_len.to_be_bytes());
        out
    }

    pub fn parse(bytes: &[u8]) -> Result<FrameHeader, CodecError> {
        if bytes.len() < HEADER_LEN {
            return Err(CodecError::Truncated {
                need: HEADER_LEN,
                have: bytes.len(),
            });
        }
        if &bytes[..3] != MAGIC {
            return Err(CodecError::BadMagic);
        }
        if bytes[3] != VERSION {
            return Err(CodecError::BadVersion(bytes[3]));
        }
        let h = FrameHeader {
            width: u16::from_be_bytes([bytes[4], bytes[5]]),
            height: u16::from_be_bytes([bytes[6], bytes[7]]),
            chroma: bytes[8],
            qi: bytes[9],
            t0: bytes[10],
            payload_len: u32::from_be_bytes([bytes[11], bytes[12], bytes[13], bytes[14]]),
        };
        if h.width == 0 || h.height == 0 {
            return Err(CodecError::BadHeader("zero dimension"));
        }
        if h.chroma > 3 {
            return Err(CodecError::BadHeader("chroma mode"));
        }
        if h.qi > 63 {
            return Err(CodecError::BadHeader("quantizer index"));
        }
        Ok(h)
    }
}

/// dB-linear quantizer ladder: doubles every 6 steps.
pub fn quantizer_for_index(qi: u8) -> i64 {
    debug_assert!(qi <= 63);
    round_half_away((qi as f64 / 6.0 + 1.0).exp2())
}

#[derive(Clone, Copy, Debug)]
pub struct EncoderConfig {
    pub qi: u8,
    /// None = automatic threshold from the quantizer; Some(0) = off.
    pub dering: Option<u8>,
    pub cfl: bool,
}

impl Default for EncoderConfig {
    fn default() -> Self {
        EncoderConfig {
            qi: 32,
            dering: None,
            cfl: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EncodeStats {
    pub luma_bits: f64,
    pub chroma_bits: f64,
    pub dering_bits: f64,
    pub bytes: usize,
}

#[derive(Clone)]
struct Models {
    split: Vec<FrequencyModel>,
    mode_both: FrequencyModel,
    mode_left: FrequencyModel,
    mode_above: FrequencyModel,
    haar: [HaarModels; 2],
    pvq: [PvqModels; 2],
    cfl_sign: FrequencyModel,
    dering: FrequencyModel,
}

impl Models {
    fn new() -> Self {
        Models {
            split: (0..4).map(|_| FrequencyModel::new(2)).collect(),
            mode_both: FrequencyModel::new(3),
            mode_left: FrequencyModel::new(2),
            mode_above: FrequencyModel::new(2),
            haar: [HaarModels::new(), HaarModels::new()],
            pvq: [PvqModels::new(), PvqModels::new()],
            cfl_sign: FrequencyModel::new(2),
            dering: FrequencyModel::new(6),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PredMode {
    None,
    Horiz,
    Vert,
}

fn ceil_to(v: usize, m: usize) -> usize {
    v.div_ceil(m) * m
}

fn lap_grid(w: usize, h: usize) -> BlockGrid {
    let mut g = BlockGrid::new(w, h);
    for y in (0..h).step_by(LAP_BLOCK) {
        for x in (0..w).step_by(LAP_BLOCK) {
            g.add_leaf(x, y, LAP_BLOCK);
        }
    }
    g
}

fn take(slice: &[i32], idx: &[usize]) -> Vec<i32> {
    idx.iter().map(|&i| slice[i]).collect()
}

fn put(slice: &mut [i32], idx: &[usize], vals: &[i32]) {
    for (&i, &v) in idx.iter().zip(vals) {
        slice[i] = v;
    }
}

/// Chroma split tree: the luma tree truncated so chroma leaves stay
/// within [4, 32] (half the luma leaf size).
fn chroma_tree(luma: &SplitTree, depth_left: u32) -> SplitTree {
    match luma {
        SplitTree::Leaf => SplitTree::Leaf,
        SplitTree::Split(c) => {
            if depth_left == 0 {
                SplitTree::Leaf
            } else {
                SplitTree::Split(Box::new([
                    chroma_tree(&c[0], depth_left - 1),
                    chroma_tree(&c[1], depth_left - 1),
                    chroma_tree(&c[2], depth_left - 1),
                    chroma_tree(&c[3], depth_left - 1),
                ]))
            }
        }
    }
}

fn encode_tree(enc: &mut RangeEncoder, models: &mut Models, tree: &SplitTree, depth: usize) {
    match tree {
        SplitTree::Leaf => {
            if depth < 4 {
                enc.encode_symbol(&mut models.split[depth], 0);
            }
        }
        SplitTree::Split(c) => {
            assert!(depth < 4, "tree deeper than the 4x4 floor");
            enc.encode_symbol(&mut models.split[depth], 1);
            for child in c.iter() {
                encode_tree(enc, models, child, depth + 1);
            }
        }
    }
}

fn decode_tree(dec: &mut RangeDecoder, models: &mut Models, depth: usize) -> SplitTree {
    if depth >= 4 || dec.decode_symbol(&mut models.split[depth]) == 0 {
        SplitTree::Leaf
    } else {
        SplitTree::Split(Box::new([
            decode_tree(dec, models, depth + 1),
            decode_tree(dec, models, depth + 1),
            decode_tree(dec, models, depth + 1),
            decode_tree(dec, models, depth + 1),
        ]))
    }
}

/// Reconstructed coefficient blocks, for H/V and CfL prediction.
#[derive(Default)]
struct BlockStore {
    map: HashMap<(usize, usize), CoeffBlock>,
}

impl BlockStore {
    fn insert(&mut self, x: usize, y: usize, b: CoeffBlock) {
        self.map.insert((x, y), b);
    }

    fn get(&self, x: usize, y: usize, size: usize) -> Option<&CoeffBlock> {
        self.map.get(&(x, y)).filter(|b| b.size == size)
    }
}

fn mode_availability(grid: &BlockGrid, x: usize, y: usize, size: usize) -> (bool, bool) {
    let left = x > 0 && {
        let l = grid.leaf_at(x - 1, y);
        l.size == size && l.y == y
    };
    let above = y > 0 && {
        let a = grid.leaf_at(x, y - 1);
        a.size == size && a.x == x
    };
    (left, above)
}

/// H/V AC prediction: copy the first column of coefficients from the
/// left block, or the first row from the block above.
fn hv_predict_ac(store: &BlockStore, mode: PredMode, x: usize, y: usize, n: usize) -> Vec<i32> {
    let mut r = vec![0i32; n * n];
    match mode {
        PredMode::None => {}
        PredMode::Horiz => {
            if let Some(left) = store.get(x - n, y, n) {
                for u in 1..n {
                    r[u * n] = left.get(u, 0);
                }
            }
        }
        PredMode::Vert => {
            if let Some(above) = store.get(x, y - n, n) {
                for v in 1..n {
                    r[v] = above.get(0, v);
                }
            }
        }
    }
    r
}

fn sse(a: &[i32], b: &[i32]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ((x - y) as f64).powi(2))
        .sum()
}

/// Bottom-up block-size search for one superblock. Rates come from
/// trial encodes against a fork of the live coder; prediction modes
/// are ignored here (they are chosen exactly during the real pass)
/// and DC cost is approximated by a flat scalar quantizer.
fn plan_blocksizes(
    pre: &Plane,
    x: usize,
    y: usize,
    size: usize,
    q: i64,
    lambda: f64,
    enc: &RangeEncoder,
    models: &Models,
) -> (SplitTree, f64) {
    let block = dct_forward(pre, x, y, size);
    let mut fork = enc.fork();
    let mut pm = models.pvq[0].clone();
    let start = fork.tell_bits();
    let mut d_coeff = 0.0;
    for band in band_layout(size) {
        let xb = take(&block.coeffs, &band);
        let rb = vec![0i32; band.len()];
        let (recon, _) = pvq_encode_band(&mut fork, &mut pm, &xb, &rb, q, true, false);
        d_coeff += sse(&xb, &recon);
    }
    {
        let step = 16 * q;
        let dc = block.dc() as i64;
        let dcq = crate::round_div(dc, step) * step;
        d_coeff += ((dc - dcq) as f64).powi(2);
    }
    let bits = fork.tell_bits() - start + 2.0; // DC + mode overhead guess
    let j_leaf = d_coeff / 256.0 + lambda * bits;
    if size == 4 {
        return (SplitTree::Leaf, j_leaf);
    }
    let half = size / 2;
    let mut j_split = 0.0;
    let mut children = Vec::with_capacity(4);
    for (cx, cy) in [(x, y), (x + half, y), (x, y + half), (x + half, y + half)] {
        let (t, j) = plan_blocksizes(pre, cx, cy, half, q, lambda, enc, models);
        children.push(t);
        j_split += j;
    }
    if j_leaf <= j_split {
        (SplitTree::Leaf, j_leaf)
    } else {
        (
            SplitTree::Split(Box::new(children.try_into().expect("quad"))),
            j_split,
        )
    }
}

/// Per-plane coding state shared by encoder and decoder.
struct PlaneState {
    /// Reconstruction in the prefiltered domain.
    recon: Plane,
    /// Decoded superblock DCs (stored scale) for Haar prediction.
    sb_dcs: Vec<Option<i64>>,
    sb_cols: usize,
}

impl PlaneState {
    fn new(w: usize, h: usize, sb: usize) -> Self {
        let sb_cols = w / sb;
        let sb_rows = h / sb;
        PlaneState {
            recon: Plane::new(w, h),
            sb_dcs: vec![None; sb_cols * sb_rows],
            sb_cols,
        }
    }

    fn neighbors(&self, sbx: usize, sby: usize) -> NeighborDcs {
        let at = |x: isize, y: isize| -> Option<i64> {
            if x < 0 || y < 0 || x as usize >= self.sb_cols {
                return None;
            }
            self.sb_dcs
                .get(y as usize * self.sb_cols + x as usize)
                .copied()
                .flatten()
        };
        let (x, y) = (sbx as isize, sby as isize);
        NeighborDcs {
            left: at(x - 1, y),
            top_left: at(x - 1, y - 1),
            top: at(x, y - 1),
            top_right: at(x + 1, y - 1),
        }
    }
}

fn mark_coded(mask: &mut [bool], cols: usize, x: usize, y: usize, size: usize) {
    for by in (y / 8)..((y + size).div_ceil(8)) {
        for bx in (x / 8)..((x + size).div_ceil(8)) {
            mask[by * cols + bx] = true;
        }
    }
}

fn has_nonzero_ac(b: &CoeffBlock) -> bool {
    b.coeffs[1..].iter().any(|&c| c != 0)
}

pub fn encode_frame(frame: &Frame, cfg: &EncoderConfig) -> (Vec<u8>, Frame, EncodeStats) {
    assert!(cfg.qi <= 63, "quantizer index out of range");
    let (w, h) = (frame.width(), frame.height());
    assert!(w > 0 && h > 0 && w <= u16::MAX as usize && h <= u16::MAX as usize);
    let q = quantizer_for_index(cfg.qi);
    let lambda = 0.12 * (q * q) as f64;
    let t0 = cfg
        .dering
        .unwrap_or_else(|| (q as f64).powf(0.7).round().min(255.0) as u8);
    let has_chroma = frame.chroma == ChromaMode::Yuv420;
    let weights = DcPredictorWeights::default();

    let lw = ceil_to(w, SB_LUMA);
    let lh = ceil_to(h, SB_LUMA);
    let src_y = frame.planes[0].padded(lw, lh);
    let params = LappedFilterParams::default();
    let grid_y = lap_grid(lw, lh);
    let mut pre_y = src_y.clone();
    prefilter_plane(&mut pre_y, &grid_y, &params);

    let (cw, ch) = (lw / 2, lh / 2);
    let mut pre_c: Vec<Plane> = Vec::new();
    let mut src_c: Vec<Plane> = Vec::new();
    if has_chroma {
        for p in &frame.planes[1..] {
            let padded = p.padded(cw, ch);
            let mut pre = padded.clone();
            prefilter_plane(&mut pre, &lap_grid(cw, ch), &params);
            src_c.push(padded);
            pre_c.push(pre);
        }
    }

    let mut enc = RangeEncoder::new();
    let mut models = Models::new();
    let mut luma = PlaneState::new(lw, lh, SB_LUMA);
    let mut chroma: Vec<PlaneState> = (0..pre_c.len())
        .map(|_| PlaneState::new(cw, ch, SB_CHROMA))
        .collect();
    let mut store = BlockStore::default();
    let mut plan_grid = BlockGrid::new(lw, lh);
    let mask_cols = lw / 8;
    let mut coded_mask = vec![false; mask_cols * (lh / 8)];
    let mut stats = EncodeStats::default();

    let sb_cols = lw / SB_LUMA;
    let sb_rows = lh / SB_LUMA;
    for sby in 0..sb_rows {
        for sbx in 0..sb_cols {
            let (sx, sy) = (sbx * SB_LUMA, sby * SB_LUMA);
            let mark = enc.tell_bits();

            // Luma: plan, tree symbols, Haar DC, then leaves.
            let (plan, _) =
                plan_blocksizes(&pre_y, sx, sy, SB_LUMA, q, lambda, &enc, &models);
            encode_tree(&mut enc, &mut models, &plan, 0);
            let leaves = plan.leaves(SB_LUMA);
            for l in &leaves {
                plan_grid.add_leaf(sx + l.x, sy + l.y, l.size);
            }
            let blocks: Vec<CoeffBlock> = leaves
                .iter()
                .map(|l| dct_forward(&pre_y, sx + l.x, sy + l.y, l.size))
                .collect();
            let dcs: Vec<i64> = blocks.iter().map(|b| b.dc() as i64).collect();
            let tree = DcTree::build(&plan, &dcs, LUMA_SHIFT);
            let rec_tree = superblock_dc_encode(
                &mut enc,
                &mut models.haar[0],
                &tree,
                &luma.neighbors(sbx, sby),
                &weights,
                q,
                LUMA_SHIFT,
            );
            luma.sb_dcs[sby * sb_cols + sbx] = Some(rec_tree.dc);
            let rec_dcs = rec_tree.leaf_dcs(LUMA_SHIFT);

            for (l, (block, rec_dc)) in leaves.iter().zip(blocks.iter().zip(&rec_dcs)) {
                let (ax, ay) = (sx + l.x, sy + l.y);
                let n = l.size;
                let (left_ok, above_ok) = mode_availability(&plan_grid, ax, ay, n);
                // Choose the mode by trial encode, then code for real.
                let mut candidates = vec![PredMode::None];
                if left_ok {
                    candidates.push(PredMode::Horiz);
                }
                if above_ok {
                    candidates.push(PredMode::Vert);
                }
                let bands = band_layout(n);
                let mut best = (PredMode::None, f64::INFINITY);
                if candidates.len() == 1 {
                    best = (PredMode::None, 0.0);
                } else {
                    for &mode in &candidates {
                        let mut fork = enc.fork();
                        let mut fm = models.clone();
                        let start = fork.tell_bits();
                        encode_mode(&mut fork, &mut fm, mode, left_ok, above_ok);
                        let r = hv_predict_ac(&store, mode, ax, ay, n);
                        let mut d = 0.0;
                        for band in &bands {
                            let xb = take(&block.coeffs, band);
                            let rb = take(&r, band);
                            let (rec, _) = pvq_encode_band(
                                &mut fork,
                                &mut fm.pvq[0],
                                &xb,
                                &rb,
                                q,
                                true,
                                false,
                            );
                            d += sse(&xb, &rec);
                        }
                        let j = d / 256.0 + lambda * (fork.tell_bits() - start);
                        if j < best.1 {
                            best = (mode, j);
                        }
                    }
                }
                let mode = best.0;
                encode_mode(&mut enc, &mut models, mode, left_ok, above_ok);
                let r = hv_predict_ac(&store, mode, ax, ay, n);
                let mut rec_block = CoeffBlock::new(n);
                rec_block.coeffs[0] = (*rec_dc).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
                for band in &bands {
                    let xb = take(&block.coeffs, band);
                    let rb = take(&r, band);
                    let (rec, _) =
                        pvq_encode_band(&mut enc, &mut models.pvq[0], &xb, &rb, q, true, false);
                    put(&mut rec_block.coeffs, band, &rec);
                }
                if has_nonzero_ac(&rec_block) {
                    mark_coded(&mut coded_mask, mask_cols, ax, ay, n);
                }
                dct_inverse(&rec_block, &mut luma.recon, ax, ay);
                store.insert(ax, ay, rec_block);
            }
            stats.luma_bits += enc.tell_bits() - mark;

            // Chroma: derived tree, Haar DC, CfL bands.
            if has_chroma {
                let mark = enc.tell_bits();
                let ctree = chroma_tree(&plan, 3);
                let (csx, csy) = (sx / 2, sy / 2);
                for (pre, state) in pre_c.iter().zip(chroma.iter_mut()) {
                    let cleaves = ctree.leaves(SB_CHROMA);
                    let cblocks: Vec<CoeffBlock> = cleaves
                        .iter()
                        .map(|l| dct_forward(pre, csx + l.x, csy + l.y, l.size))
                        .collect();
                    let cdcs: Vec<i64> = cblocks.iter().map(|b| b.dc() as i64).collect();
                    let dtree = DcTree::build(&ctree, &cdcs, CHROMA_SHIFT);
                    let rec_tree = superblock_dc_encode(
                        &mut enc,
                        &mut models.haar[1],
                        &dtree,
                        &state.neighbors(sbx, sby),
                        &weights,
                        q,
                        CHROMA_SHIFT,
                    );
                    state.sb_dcs[sby * sb_cols + sbx] = Some(rec_tree.dc);
                    let rec_cdcs = rec_tree.leaf_dcs(CHROMA_SHIFT);

                    for (l, (block, rec_dc)) in
                        cleaves.iter().zip(cblocks.iter().zip(&rec_cdcs))
                    {
                        let (ax, ay) = (csx + l.x, csy + l.y);
                        let n = l.size;
                        let luma_block = if cfg.cfl {
                            store.get(2 * ax, 2 * ay, 2 * n)
                        } else {
                            None
                        };
                        let bands = band_layout(n);
                        let mut rec_block = CoeffBlock::new(n);
                        rec_block.coeffs[0] =
                            (*rec_dc).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
                        for band in &bands {
                            let xb = take(&block.coeffs, band);
                            let rec = encode_chroma_band(
                                &mut enc,
                                &mut models,
                                &xb,
                                luma_block,
                                band,
                                n,
                                q,
                                lambda,
                            );
                            put(&mut rec_block.coeffs, band, &rec);
                        }
                        dct_inverse(&rec_block, &mut state.recon, ax, ay);
                    }
                }
                stats.chroma_bits += enc.tell_bits() - mark;
            }
        }
    }

    // Out of the lapped domain.
    postfilter_plane(&mut luma.recon, &grid_y, &params);
    for state in chroma.iter_mut() {
        postfilter_plane(&mut state.recon, &lap_grid(cw, ch), &params);
    }

    // Dering (luma only): per-superblock 6-way distortion test, then
    // a global off-switch if the whole-frame result got worse.
    let mut factor_indices = vec![0usize; sb_cols * sb_rows];
    if t0 > 0 {
        let mark = enc.tell_bits();
        let mut thresholds = vec![0i32; coded_mask.len()];
        for sb in 0..sb_cols * sb_rows {
            let (sbx, sby) = (sb % sb_cols, sb / sb_cols);
            if !sb_has_coded_block(&coded_mask, mask_cols, sbx, sby) {
                continue;
            }
            let mut best = (0usize, f64::INFINITY);
            for fi in 0..6 {
                let t = dering_threshold(t0 as i32, fi);
                let mut trial = vec![0i32; coded_mask.len()];
                set_sb_thresholds(&mut trial, &coded_mask, mask_cols, sbx, sby, t);
                let out = dering_plane(&luma.recon, &trial);
                let d = region_sse(&out, &src_y, sbx * SB_LUMA, sby * SB_LUMA, SB_LUMA);
                if d < best.1 {
                    best = (fi, d);
                }
            }
            factor_indices[sb] = best.0;
            set_sb_thresholds(
                &mut thresholds,
                &coded_mask,
                mask_cols,
                sbx,
                sby,
                dering_threshold(t0 as i32, best.0),
            );
        }
        let filtered = dering_plane(&luma.recon, &thresholds);
        let none = vec![0i32; coded_mask.len()];
        let plain = dering_plane(&luma.recon, &none);
        if frame_sse(&filtered, &src_y) > frame_sse(&plain, &src_y) {
            factor_indices.iter_mut().for_each(|f| *f = 0);
        }
        for sb in 0..sb_cols * sb_rows {
            let (sbx, sby) = (sb % sb_cols, sb / sb_cols);
            if sb_has_coded_block(&coded_mask, mask_cols, sbx, sby) {
                enc.encode_symbol(&mut models.dering, factor_indices[sb]);
            }
        }
        stats.dering_bits = enc.tell_bits() - mark;
    }
    let final_y = apply_dering(&luma.recon, &coded_mask, mask_cols, &factor_indices, sb_cols, t0);

    let payload = enc.finish();
    let header = FrameHeader {
        width: w as u16,
        height: h as u16,
        chroma: if has_chroma {
            CHROMA_420_BIT | if cfg.cfl { 0 } else { NO_CFL_BIT }
        } else {
            0
        },
        qi: cfg.qi,
        t0,
        payload_len: payload.len() as u32,
    };
    let mut bytes = header.serialize().to_vec();
    bytes.extend_from_slice(&payload);
    stats.bytes = bytes.len();

    let recon = assemble_frame(final_y, &chroma, frame.chroma, w, h);

    #[cfg(debug_assertions)]
    {
        let (decoded, used) = decode_frame(&bytes).expect("own stream must parse");
        debug_assert_eq!(used, bytes.len());
        debug_assert_eq!(decoded, recon, "encoder/decoder drift");
    }

    (bytes, recon, stats)
}

#[allow(clippy::too_many_arguments)]
fn encode_chroma_band(
    enc: &mut RangeEncoder,
    models: &mut Models,
    xb: &[i32],
    luma_block: Option<&CoeffBlock>,
    band: &[usize],
    n: usize,
    q: i64,
    lambda: f64,
) -> Vec<i32> {
    let pred = make_chroma_predictor(luma_block, n, 1);
    let rb = take(&pred.r, band);
    if !pred.available || rb.iter().all(|&v| v == 0) {
        let zeros = vec![0i32; band.len()];
        let (rec, _) = pvq_encode_band(enc, &mut models.pvq[1], xb, &zeros, q, false, false);
        return rec;
    }
    // Sign from correlation, then an RD choice between following the
    // luma shape and coding the band unpredicted.
    let corr: i64 = xb.iter().zip(&rb).map(|(&a, &b)| a as i64 * b as i64).sum();
    let sign = if corr < 0 { 1usize } else { 0 };
    let rs: Vec<i32> = if sign == 1 {
        rb.iter().map(|&v| -v).collect()
    } else {
        rb.clone()
    };
    let mut best = (false, f64::INFINITY);
    for force_noref in [false, true] {
        let mut fork = enc.fork();
        let mut fm = models.clone();
        let start = fork.tell_bits();
        fork.encode_symbol(&mut fm.cfl_sign, sign);
        let (rec, _) =
            pvq_encode_band(&mut fork, &mut fm.pvq[1], xb, &rs, q, false, force_noref);
        let j = sse(xb, &rec) / 256.0 + lambda * (fork.tell_bits() - start);
        if j < best.1 {
            best = (force_noref, j);
        }
    }
    enc.encode_symbol(&mut models.cfl_sign, sign);
    let (rec, _) = pvq_encode_band(enc, &mut models.pvq[1], xb, &rs, q, false, best.0);
    rec
}

fn decode_chroma_band(
    dec: &mut RangeDecoder,
    models: &mut Models,
    luma_block: Option<&CoeffBlock>,
    band: &[usize],
    n: usize,
    q: i64,
) -> Vec<i32> {
    let pred = make_chroma_predictor(luma_block, n, 1);
    let rb = take(&pred.r, band);
    if !pred.available || rb.iter().all(|&v| v == 0) {
        let zeros = vec![0i32; band.len()];
        return pvq_decode_band(dec, &mut models.pvq[1], &zeros, q, false);
    }
    let sign = dec.decode_symbol(&mut models.cfl_sign);
    let rs: Vec<i32> = if sign == 1 {
        rb.iter().map(|&v| -v).collect()
    } else {
        rb
    };
    pvq_decode_band(dec, &mut models.pvq[1], &rs, q, false)
}

fn encode_mode(
    enc: &mut RangeEncoder,
    models: &mut Models,
    mode: PredMode,
    left: bool,
    above: bool,
) {
    match (left, above) {
        (false, false) => debug_assert_eq!(mode, PredMode::None),
        (true, true) => {
            let s = match mode {
                PredMode::None => 0,
                PredMode::Horiz => 1,
                PredMode::Vert => 2,
            };
            enc.encode_symbol(&mut models.mode_both, s);
        }
        (true, false) => {
            enc.encode_symbol(&mut models.mode_left, (mode == PredMode::Horiz) as usize);
        }
        (false, true) => {
            enc.encode_symbol(&mut models.mode_above, (mode == PredMode::Vert) as usize);
        }
    }
}

fn decode_mode(dec: &mut RangeDecoder, models: &mut Models, left: bool, above: bool) -> PredMode {
    match (left, above) {
        (false, false) => PredMode::None,
        (true, true) => match dec.decode_symbol(&mut models.mode_both) {
            0 => PredMode::None,
            1 => PredMode::Horiz,
            _ => PredMode::Vert,
        },
        (true, false) => {
            if dec.decode_symbol(&mut models.mode_left) == 1 {
                PredMode::Horiz
            } else {
                PredMode::None
            }
        }
        (false, true) => {
            if dec.decode_symbol(&mut models.mode_above) == 1 {
                PredMode::Vert
            } else {
                PredMode::None
            }
        }
    }
}

fn sb_has_coded_block(mask: &[bool], cols: usize, sbx: usize, sby: usize) -> bool {
    let per_sb = SB_LUMA / 8;
    (0..per_sb).any(|by| {
        (0..per_sb).any(|bx| mask[(sby * per_sb + by) * cols + sbx * per_sb + bx])
    })
}

fn set_sb_thresholds(
    thresholds: &mut [i32],
    mask: &[bool],
    cols: usize,
    sbx: usize,
    sby: usize,
    t: i32,
) {
    let per_sb = SB_LUMA / 8;
    for by in 0..per_sb {
        for bx in 0..per_sb {
            let i = (sby * per_sb + by) * cols + sbx * per_sb + bx;
            if mask[i] {
                thresholds[i] = t;
            }
        }
    }
}

fn region_sse(a: &Plane, b: &Plane, x: usize, y: usize, size: usize) -> f64 {
    let mut d = 0.0;
    for yy in y..y + size {
        for xx in x..x + size {
            d += ((a.get(xx, yy) - b.get(xx, yy)) as f64).powi(2);
        }
    }
    d
}

fn frame_sse(a: &Plane, b: &Plane) -> f64 {
    a.data
        .iter()
        .zip(&b.data)
        .map(|(&x, &y)| ((x - y) as f64).powi(2))
        .sum()
}

fn apply_dering(
    recon: &Plane,
    mask: &[bool],
    mask_cols: usize,
    factors: &[usize],
    sb_cols: usize,
    t0: u8,
) -> Plane {
    if t0 == 0 || factors.iter().all(|&f| f == 0) {
        return recon.clone();
    }
    let mut thresholds = vec![0i32; mask.len()];
    for (sb, &fi) in factors.iter().enumerate() {
        if fi > 0 {
            set_sb_thresholds(
                &mut thresholds,
                mask,
                mask_cols,
                sb % sb_cols,
                sb / sb_cols,
                dering_threshold(t0 as i32, fi),
            );
        }
    }
    dering_plane(recon, &thresholds)
}

fn assemble_frame(
    final_y: Plane,
    chroma: &[PlaneState],
    mode: ChromaMode,
    w: usize,
    h: usize,
) -> Frame {
    let y = final_y.cropped(w, h);
    match mode {
        ChromaMode::Monochrome => Frame::mono(y),
        ChromaMode::Yuv420 => {
            let (cw, ch) = (w.div_ceil(2), h.div_ceil(2));
            Frame::yuv420(
                y,
                chroma[0].recon.cropped(cw, ch),
                chroma[1].recon.cropped(cw, ch),
            )
        }
    }
}

/// Decode one frame; returns the frame and bytes consumed, so
/// concatenated frames can be pulled off a single buffer.
pub fn decode_frame(bytes: &[u8]) -> Result<(Frame, usize), CodecError> {
    let header = FrameHeader::parse(bytes)?;
    let total = HEADER_LEN + header.payload_len as usize;
    if bytes.len() < total {
        return Err(CodecError::Truncated {
            need: total,
            have: bytes.len(),
        });
    }
    let payload = &bytes[HEADER_LEN..total];
    let (w, h) = (header.width as usize, header.height as usize);
    let q = quantizer_for_index(header.qi.min(63));
    let has_chroma = header.chroma & CHROMA_420_BIT != 0;
    let cfl = header.chroma & NO_CFL_BIT == 0;
    let weights = DcPredictorWeights::default();
    let params = LappedFilterParams::default();

    let lw = ceil_to(w, SB_LUMA);
    let lh = ceil_to(h, SB_LUMA);
    let (cw, ch) = (lw / 2, lh / 2);

    let mut dec = RangeDecoder::new(payload);
    let mut models = Models::new();
    let mut luma = PlaneState::new(lw, lh, SB_LUMA);
    let mut chroma: Vec<PlaneState> = if has_chroma {
        (0..2).map(|_| PlaneState::new(cw, ch, SB_CHROMA)).collect()
    } else {
        Vec::new()
    };
    let mut store = BlockStore::default();
    let mut plan_grid = BlockGrid::new(lw, lh);
    let mask_cols = lw / 8;
    let mut coded_mask = vec![false; mask_cols * (lh / 8)];

    let sb_cols = lw / SB_LUMA;
    let sb_rows = lh / SB_LUMA;
    for sby in 0..sb_rows {
        for sbx in 0..sb_cols {
            let (sx, sy) = (sbx * SB_LUMA, sby * SB_LUMA);
            let plan = decode_tree(&mut dec, &mut models, 0);
            let leaves = plan.leaves(SB_LUMA);
            for l in &leaves {
                plan_grid.add_leaf(sx + l.x, sy + l.y, l.size);
            }
            let rec_tree = superblock_dc_decode(
                &mut dec,
                &mut models.haar[0],
                &plan,
                &luma.neighbors(sbx, sby),
                &weights,
                q,
                LUMA_SHIFT,
            );
            luma.sb_dcs[sby * sb_cols + sbx] = Some(rec_tree.dc);
            let rec_dcs = rec_tree.leaf_dcs(LUMA_SHIFT);

            for (l, rec_dc) in leaves.iter().zip(&rec_dcs) {
                let (ax, ay) = (sx + l.x, sy + l.y);
                let n = l.size;
                let (left_ok, above_ok) = mode_availability(&plan_grid, ax, ay, n);
                let mode = decode_mode(&mut dec, &mut models, left_ok, above_ok);
                let r = hv_predict_ac(&store, mode, ax, ay, n);
                let mut rec_block = CoeffBlock::new(n);
                rec_block.coeffs[0] = (*rec_dc).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
                for band in &band_layout(n) {
                    let rb = take(&r, band);
                    let rec = pvq_decode_band(&mut dec, &mut models.pvq[0], &rb, q, true);
                    put(&mut rec_block.coeffs, band, &rec);
                }
                if has_nonzero_ac(&rec_block) {
                    mark_coded(&mut coded_mask, mask_cols, ax, ay, n);
                }
                dct_inverse(&rec_block, &mut luma.recon, ax, ay);
                store.insert(ax, ay, rec_block);
            }

            if has_chroma {
                let ctree = chroma_tree(&plan, 3);
                let (csx, csy) = (sx / 2, sy / 2);
                for state in chroma.iter_mut() {
                    let rec_tree = superblock_dc_decode(
                        &mut dec,
                        &mut models.haar[1],
                        &ctree,
                        &state.neighbors(sbx, sby),
                        &weights,
                        q,
                        CHROMA_SHIFT,
                    );
                    state.sb_dcs[sby * sb_cols + sbx] = Some(rec_tree.dc);
                    let rec_cdcs = rec_tree.leaf_dcs(CHROMA_SHIFT);
                    for (l, rec_dc) in ctree.leaves(SB_CHROMA).iter().zip(&rec_cdcs) {
                        let (ax, ay) = (csx + l.x, csy + l.y);
                        let n = l.size;
                        let luma_block = if cfl {
                            store.get(2 * ax, 2 * ay, 2 * n)
                        } else {
                            None
                        };
                        let mut rec_block = CoeffBlock::new(n);
                        rec_block.coeffs[0] =
                            (*rec_dc).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
                        for band in &band_layout(n) {
                            let rec = decode_chroma_band(
                                &mut dec,
                                &mut models,
                                luma_block,
                                band,
                                n,
                                q,
                            );
                            put(&mut rec_block.coeffs, band, &rec);
                        }
                        dct_inverse(&rec_block, &mut state.recon, ax, ay);
                    }
                }
            }
        }
    }

    postfilter_plane(&mut luma.recon, &lap_grid(lw, lh), &params);
    for state in chroma.iter_mut() {
        postfilter_plane(&mut state.recon, &lap_grid(cw, ch), &params);
    }

    let mut factor_indices = vec![0usize; sb_cols * sb_rows];
    if header.t0 > 0 {
        for sb in 0..sb_cols * sb_rows {
            if sb_has_coded_block(&coded_mask, mask_cols, sb % sb_cols, sb / sb_cols) {
                factor_indices[sb] = dec.decode_symbol(&mut models.dering);
            }
        }
    }
    let final_y = apply_dering(
        &luma.recon,
        &coded_mask,
        mask_cols,
        &factor_indices,
        sb_cols,
        header.t0,
    );

    let mode = if has_chroma {
        ChromaMode::Yuv420
    } else {
        ChromaMode::Monochrome
    };
    Ok((assemble_frame(final_y, &chroma, mode, w, h), total))
}
