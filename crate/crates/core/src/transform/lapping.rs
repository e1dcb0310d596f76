//! Reversible 4-point lapped pre/post filter.
//!
//! Each transform block edge gets a 4-pixel span (two pixels per
//! side). The span is split by integer butterflies into symmetric and
//! antisymmetric lanes, the antisymmetric pair is run through lifting
//! steps, and the butterflies are undone. Every step is exactly
//! invertible, so postfilter(prefilter(x)) == x on integers.

use crate::frame::Plane;
use crate::geom::BlockGrid;
use crate::round_shift;

/// Lifting step on the antisymmetric lane pair.
/// Lane 0 is the inner difference (across the edge), lane 1 the outer.
#[derive(Clone, Copy, Debug)]
pub enum LiftKind {
    /// lane\[target\] += round(lane\[source\] * num / 2^shift)
    Shear { target: usize, source: usize },
    /// lane += round(lane * num / 2^shift); inverted by monotone search
    Scale { lane: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct LiftStep {
    pub kind: LiftKind,
    pub num: i32,
    pub shift: u32,
}

/// Ordered lifting steps; the inverse runs them reversed with negated
/// coefficients (scales are inverted exactly by monotone search).
#[derive(Clone, Debug)]
pub struct LappedFilterParams {
    pub steps: Vec<LiftStep>,
}

impl Default for LappedFilterParams {
    /// Coefficients picked by maximizing AR(1) rho=0.95 coding gain of
    /// the lapped 8-point DCT over a dyadic grid; see
    /// examples/lapped_search.rs.
    fn default() -> Self {
        LappedFilterParams {
            steps: vec![
                LiftStep {
                    kind: LiftKind::Shear {
                        target: 0,
                        source: 1,
                    },
                    num: 14,
                    shift: 4,
                },
                LiftStep {
                    kind: LiftKind::Scale { lane: 1 },
                    num: 2,
                    shift: 4,
                },
            ],
        }
    }
}

/// x -> x + round(x * num / 2^shift); strictly increasing for
/// 0 <= num < 2^shift.
#[inline]
fn scale_fwd(x: i32, num: i32, shift: u32) -> i32 {
    debug_assert!(num >= 0 && (num as i64) < (1i64 << shift));
    x + round_shift(x as i64 * num as i64, shift) as i32
}

/// Largest x with scale_fwd(x) <= y; total inverse of `scale_fwd`.
fn scale_inv(y: i32, num: i32, shift: u32) -> i32 {
    let mut lo = -(1i32 << 28);
    let mut hi = 1i32 << 28;
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if scale_fwd(mid, num, shift) <= y {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

#[inline]
fn fwd_butterfly(p: i32, q: i32) -> (i32, i32) {
    let d = p - q;
    (q + (d >> 1), d)
}

#[inline]
fn inv_butterfly(m: i32, d: i32) -> (i32, i32) {
    let q = m - (d >> 1);
    (d + q, q)
}

fn apply_steps(lanes: &mut [i32; 2], params: &LappedFilterParams, inverse: bool) {
    let run = |lanes: &mut [i32; 2], step: &LiftStep, inverse: bool| match step.kind {
        LiftKind::Shear { target, source } => {
            let delta = round_shift(lanes[source] as i64 * step.num as i64, step.shift) as i32;
            if inverse {
                lanes[target] -= delta;
            } else {
                lanes[target] += delta;
            }
        }
        LiftKind::Scale { lane } => {
            lanes[lane] = if inverse {
                scale_inv(lanes[lane], step.num, step.shift)
            } else {
                scale_fwd(lanes[lane], step.num, step.shift)
            };
        }
    };
    if inverse {
        for step in params.steps.iter().rev() {
            run(lanes, step, true);
        }
    } else {
        for step in &params.steps {
            run(lanes, step, false);
        }
    }
}

fn filter_span(span: &mut [i32; 4], params: &LappedFilterParams, inverse: bool) {
    let (m_o, d_o) = fwd_butterfly(span[0], span[3]);
    let (m_i, d_i) = fwd_butterfly(span[1], span[2]);
    let mut lanes = [d_i, d_o];
    apply_steps(&mut lanes, params, inverse);
    let (a, d) = inv_butterfly(m_o, lanes[1]);
    let (b, c) = inv_butterfly(m_i, lanes[0]);
    *span = [a, b, c, d];
}

/// Forward (decorrelating) filter on one edge span.
pub fn prefilter_span(span: &mut [i32; 4], params: &LappedFilterParams) {
    filter_span(span, params, false);
}

/// Inverse (deblocking) filter on one edge span.
pub fn postfilter_span(span: &mut [i32; 4], params: &LappedFilterParams) {
    filter_span(span, params, true);
}

fn vertical_pass(plane: &mut Plane, grid: &BlockGrid, params: &LappedFilterParams, inv: bool) {
    for y in 0..plane.height {
        let mut x = 4;
        while x < plane.width {
            if grid.vertical_edge(x, y) {
                let mut span = [
                    plane.get(x - 2, y),
                    plane.get(x - 1, y),
                    plane.get(x, y),
                    plane.get(x + 1, y),
                ];
                filter_span(&mut span, params, inv);
                plane.set(x - 2, y, span[0]);
                plane.set(x - 1, y, span[1]);
                plane.set(x, y, span[2]);
                plane.set(x + 1, y, span[3]);
            }
            x += 4;
        }
    }
}

fn horizontal_pass(plane: &mut Plane, grid: &BlockGrid, params: &LappedFilterParams, inv: bool) {
    for x in 0..plane.width {
        let mut y = 4;
        while y < plane.height {
            if grid.horizontal_edge(x, y) {
                let mut span = [
                    plane.get(x, y - 2),
                    plane.get(x, y - 1),
                    plane.get(x, y),
                    plane.get(x, y + 1),
                ];
                filter_span(&mut span, params, inv);
                plane.set(x, y - 2, span[0]);
                plane.set(x, y - 1, span[1]);
                plane.set(x, y, span[2]);
                plane.set(x, y + 1, span[3]);
            }
            y += 4;
        }
    }
}

/// Filter all interior transform-block edges of a plane: vertical
/// edges first, then horizontal. Frame edges are never filtered.
pub fn prefilter_plane(plane: &mut Plane, grid: &BlockGrid, params: &LappedFilterParams) {
    vertical_pass(plane, grid, params, false);
    horizontal_pass(plane, grid, params, false);
}

/// Exact inverse of `prefilter_plane`: horizontal edges first, then
/// vertical, each span inverted.
pub fn postfilter_plane(plane: &mut Plane, grid: &BlockGrid, params: &LappedFilterParams) {
    horizontal_pass(plane, grid, params, true);
    vertical_pass(plane, grid, params, true);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::BLOCK_SIZES;

    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    fn random_grid(w: usize, h: usize, seed: &mut u64) -> BlockGrid {
        // Random quadtree of 64x64 superblocks.
        let mut grid = BlockGrid::new(w, h);
        fn split(grid: &mut BlockGrid, x: usize, y: usize, size: usize, seed: &mut u64) {
            if size > 4 && xorshift(seed) % 2 == 0 {
                let half = size / 2;
                for (dx, dy) in [(0, 0), (half, 0), (0, half), (half, half)] {
                    split(grid, x + dx, y + dy, half, seed);
                }
            } else {
                grid.add_leaf(x, y, size);
            }
        }
        for sy in (0..h).step_by(64) {
            for sx in (0..w).step_by(64) {
                split(&mut grid, sx, sy, 64, seed);
            }
        }
        grid
    }

    #[test]
    fn span_roundtrip_exact() {
        let params = LappedFilterParams::default();
        let mut seed = 5u64;
        for _ in 0..100_000 {
            let orig = [
                (xorshift(&mut seed) % 4096) as i32 - 2048,
                (xorshift(&mut seed) % 4096) as i32 - 2048,
                (xorshift(&mut seed) % 4096) as i32 - 2048,
                (xorshift(&mut seed) % 4096) as i32 - 2048,
            ];
            let mut span = orig;
            prefilter_span(&mut span, &params);
            postfilter_span(&mut span, &params);
            assert_eq!(span, orig);
        }
    }

    #[test]
    fn constant_span_invariant() {
        let params = LappedFilterParams::default();
        for v in [-500, 0, 128, 255, 9000] {
            let mut span = [v; 4];
            prefilter_span(&mut span, &params);
            assert_eq!(span, [v; 4]);
        }
    }

    #[test]
    fn plane_roundtrip_random_plans() {
        let params = LappedFilterParams::default();
        let mut seed = 99u64;
        for _ in 0..100 {
            let grid = random_grid(128, 64, &mut seed);
            let mut p = Plane::new(128, 64);
            for v in p.data.iter_mut() {
                *v = (xorshift(&mut seed) % 256) as i32;
            }
            let orig = p.clone();
            prefilter_plane(&mut p, &grid, &params);
            postfilter_plane(&mut p, &grid, &params);
            assert_eq!(p, orig);
        }
    }

    #[test]
    fn constant_plane_invariant_under_prefilter() {
        let params = LappedFilterParams::default();
        let mut seed = 3u64;
        let grid = random_grid(64, 64, &mut seed);
        let mut p = Plane::new(64, 64);
        p.data.fill(77);
        let orig = p.clone();
        prefilter_plane(&mut p, &grid, &params);
        assert_eq!(p, orig);
    }

    #[test]
    fn lapping_improves_ar1_coding_gain() {
        // Small-scale version of the acceptance measurement.
        use crate::transform::dct_forward;
        let n = 8usize;
        let mut state = 0xC0FFEEu64;
        let mut unit = move || (xorshift(&mut state) >> 11) as f64 / (1u64 << 52) as f64 - 1.0;
        let rho = 0.95f64;
        let rows: Vec<Vec<i32>> = (0..500)
            .map(|_| {
                let mut x = 0.0;
                (0..128)
                    .map(|_| {
                        x = rho * x + (1.0 - rho * rho).sqrt() * unit();
                        (x * 512.0).round() as i32
                    })
                    .collect()
            })
            .collect();
        let gain = |lapped: bool| {
            let params = LappedFilterParams::default();
            let mut var = vec![0.0f64; n];
            let mut count = 0;
            for row in &rows {
                let mut row = row.clone();
                if lapped {
                    let mut x = n;
                    while x + 2 <= row.len() {
                        let mut span = [row[x - 2], row[x - 1], row[x], row[x + 1]];
                        prefilter_span(&mut span, &params);
                        row[x - 2..x + 2].copy_from_slice(&span);
                        x += n;
                    }
                }
                let mut x = n;
                while x + 2 * n <= row.len() {
                    let mut p = Plane::new(n, n);
                    for r in 0..n {
                        for c in 0..n {
                            p.set(c, r, row[x + c]);
                        }
                    }
                    let b = dct_forward(&p, 0, 0, n);
                    for k in 0..n {
                        let v = b.get(0, k) as f64;
                        var[k] += v * v;
                    }
                    count += 1;
                    x += n;
                }
            }
            for v in var.iter_mut() {
                *v /= count as f64;
            }
            let am: f64 = var.iter().sum::<f64>() / n as f64;
            let gm: f64 = var.iter().map(|v| v.ln()).sum::<f64>() / n as f64;
            10.0 * (am / gm.exp()).log10()
        };
        let lapped = gain(true);
        let plain = gain(false);
        assert!(lapped > plain, "lapped {lapped} dB vs plain {plain} dB");
    }

    #[test]
    fn basis_support_is_bounded() {
        // Synthesizing one coefficient and postfiltering spreads it at
        // most 2 pixels past the block on each side (N + 4 support).
        use crate::transform::{dct_inverse, CoeffBlock};
        let params = LappedFilterParams::default();
        for &n in BLOCK_SIZES.iter().filter(|&&n| n <= 16) {
            let w = 4 * n.max(8);
            let mut grid = BlockGrid::new(w, w);
            for y in (0..w).step_by(n) {
                for x in (0..w).step_by(n) {
                    grid.add_leaf(x, y, n);
                }
            }
            let mut block = CoeffBlock::new(n);
            block.set(1, 1, 1000 * 16);
            let mut p = Plane::new(w, w);
            let (bx, by) = (n, n); // interior block
            dct_inverse(&block, &mut p, bx, by);
            postfilter_plane(&mut p, &grid, &params);
            for y in 0..w {
                for x in 0..w {
                    let inside_x = (bx as i32 - 2..(bx + n + 2) as i32).contains(&(x as i32));
                    let inside_y = (by as i32 - 2..(by + n + 2) as i32).contains(&(y as i32));
                    if !(inside_x && inside_y) {
                        assert_eq!(p.get(x, y), 0, "leak at {x},{y} n={n}");
                    }
                }
            }
        }
    }
}
