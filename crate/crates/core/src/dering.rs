//! Directional deringing filter.
//!
//! Each 8x8 block gets a direction out of eight (22.5-degree steps),
//! detected from decoded pixels only. Stage 1 runs a 7-tap
//! conditional replacement filter along that direction; stage 2 runs
//! a 5-tap one along the most orthogonal axis (horizontal for the
//! diagonals), reading stage-1 output. Taps that differ from the
//! center by at least the threshold, or fall outside the frame, are
//! rejected, which keeps edges sharp and DC response exactly 1.

use crate::frame::Plane;
use crate::round_div;

/// Per-line "y term" of the line id for direction d at column/row t;
/// lines of direction d hold `primary - term(secondary)` constant.
///
/// Directions: 0 horizontal, then counterclockwise by 22.5 degrees
/// (1 shallow rise, 2 diagonal 45, 3 steep, 4 vertical, 5 steep fall,
/// 6 diagonal 135, 7 shallow fall).
#[inline]
fn line_id(d: usize, i: i32, j: i32) -> i32 {
    match d {
        0 => i,
        1 => i - (j >> 1) + 3,
        2 => i - j + 7,
        3 => j - (i >> 1) + 3,
        4 => j,
        5 => j + (i >> 1),
        6 => i + j,
        7 => i + (j >> 1),
        _ => unreachable!(),
    }
}

const NUM_LINES: usize = 15;
/// 6720 = lcm(1..=8) * 8; makes every sum^2/len term integral.
const SCORE_SCALE: i64 = 6720;

/// Integer homogeneity score per direction: sum over lines of
/// (line sum)^2 * SCORE_SCALE / line length, minus the same statistic
/// for the single global mean. Higher = more homogeneous lines;
/// constant blocks score 0 everywhere.
pub fn direction_scores(p: &Plane, x0: usize, y0: usize) -> [i64; 8] {
    let mut out = [0i64; 8];
    let mut total = 0i64;
    for i in 0..8 {
        for j in 0..8 {
            total += p.get(x0 + j, y0 + i) as i64;
        }
    }
    let global = total * total * (SCORE_SCALE / 64);
    for (d, slot) in out.iter_mut().enumerate() {
        let mut sums = [0i64; NUM_LINES];
        let mut lens = [0i64; NUM_LINES];
        for i in 0..8i32 {
            for j in 0..8i32 {
                let l = line_id(d, i, j) as usize;
                sums[l] += p.get(x0 + j as usize, y0 + i as usize) as i64;
                lens[l] += 1;
            }
        }
        let mut s = 0i64;
        for l in 0..NUM_LINES {
            if lens[l] > 0 {
                s += sums[l] * sums[l] * (SCORE_SCALE / lens[l]);
            }
        }
        *slot = s - global;
    }
    out
}

/// Direction with the most homogeneous lines; ties go to the lowest
/// index. Returns (direction, contrast score).
pub fn detect_direction(p: &Plane, x0: usize, y0: usize) -> (usize, i64) {
    let scores = direction_scores(p, x0, y0);
    let mut best = 0;
    for d in 1..8 {
        if scores[d] > scores[best] {
            best = d;
        }
    }
    (best, scores[best])
}

/// Tap offsets (dy, dx) at distance k = 1..3 along direction d from
/// (y, x); follows the same half-slope lines as `line_id`.
#[inline]
fn tap_offset(d: usize, y: i32, x: i32, k: i32) -> (i32, i32) {
    match d {
        0 => (0, k),
        1 => (((x + k) >> 1) - (x >> 1), k),
        2 => (k, k),
        3 => (k, ((y + k) >> 1) - (y >> 1)),
        4 => (k, 0),
        5 => (k, -(((y + k) >> 1) - (y >> 1))),
        6 => (k, -k),
        7 => (-(((x + k) >> 1) - (x >> 1)), k),
        _ => unreachable!(),
    }
}

/// One conditional-replacement output sample. `taps` holds
/// (weight, value); `None` values (outside the frame) contribute
/// nothing. W may exceed the weight sum; the filter just gets weaker.
pub fn conditional_replace(center: i32, taps: &[(i32, Option<i32>)], w: i32, t: i32) -> i32 {
    let mut acc = 0i64;
    for &(wk, v) in taps {
        if let Some(v) = v {
            let d = v - center;
            if d.abs() < t {
                acc += (wk as i64) * d as i64;
            }
        }
    }
    (center as i64 + round_div(acc, w as i64)).clamp(0, 255) as i32
}

const STAGE1_WEIGHTS: [i32; 3] = [3, 2, 1]; // |k| = 1, 2, 3
const STAGE1_W: i32 = 16;
const STAGE2_WEIGHTS: [i32; 2] = [2, 1]; // |k| = 1, 2
const STAGE2_W: i32 = 8;

fn sample(p: &Plane, y: i32, x: i32) -> Option<i32> {
    if y < 0 || x < 0 || y >= p.height as i32 || x >= p.width as i32 {
        None
    } else {
        Some(p.get(x as usize, y as usize))
    }
}

fn stage1_pixel(src: &Plane, y: i32, x: i32, d: usize, t: i32) -> i32 {
    let center = src.get(x as usize, y as usize);
    let mut taps = [(0i32, None); 6];
    let mut n = 0;
    for k in 1..=3i32 {
        for s in [k, -k] {
            let (dy, dx) = tap_offset(d, y, x, s);
            taps[n] = (STAGE1_WEIGHTS[(k - 1) as usize], sample(src, y + dy, x + dx));
            n += 1;
        }
    }
    conditional_replace(center, &taps, STAGE1_W, t)
}

/// Stage-2 axis: vertical for near-horizontal directions, horizontal
/// for everything else including both 45-degree diagonals.
#[inline]
fn stage2_vertical(d: usize) -> bool {
    matches!(d, 0 | 1 | 7)
}

fn stage2_pixel(mid: &Plane, y: i32, x: i32, d: usize, t: i32) -> i32 {
    let center = mid.get(x as usize, y as usize);
    let (dy, dx) = if stage2_vertical(d) { (1, 0) } else { (0, 1) };
    let mut taps = [(0i32, None); 4];
    let mut n = 0;
    for k in 1..=2i32 {
        for s in [k, -k] {
            taps[n] = (
                STAGE2_WEIGHTS[(k - 1) as usize],
                sample(mid, y + s * dy, x + s * dx),
            );
            n += 1;
        }
    }
    conditional_replace(center, &taps, STAGE2_W, t)
}

/// Filter a plane. `thresholds` holds one T per 8x8 block in raster
/// order; 0 skips the block. Both stages run frame-wide: stage 2
/// reads stage-1 output, including from neighboring blocks, so the
/// result does not depend on block visit order.
pub fn dering_plane(src: &Plane, thresholds: &[i32]) -> Plane {
    let bw = src.width / 8;
    let bh = src.height / 8;
    assert_eq!(thresholds.len(), bw * bh);
    if thresholds.iter().all(|&t| t == 0) {
        return src.clone();
    }
    let dirs: Vec<usize> = (0..bw * bh)
        .map(|b| {
            if thresholds[b] > 0 {
                detect_direction(src, (b % bw) * 8, (b / bw) * 8).0
            } else {
                0
            }
        })
        .collect();
    let mut mid = src.clone();
    for b in 0..bw * bh {
        let t = thresholds[b];
        if t == 0 {
            continue;
        }
        let (x0, y0) = ((b % bw) * 8, (b / bw) * 8);
        for i in 0..8 {
            for j in 0..8 {
                let (y, x) = ((y0 + i) as i32, (x0 + j) as i32);
                mid.set(x as usize, y as usize, stage1_pixel(src, y, x, dirs[b], t));
            }
        }
    }
    let mut out = mid.clone();
    for b in 0..bw * bh {
        let t = thresholds[b];
        if t == 0 {
            continue;
        }
        let (x0, y0) = ((b % bw) * 8, (b / bw) * 8);
        for i in 0..8 {
            for j in 0..8 {
                let (y, x) = ((y0 + i) as i32, (x0 + j) as i32);
                out.set(x as usize, y as usize, stage2_pixel(&mid, y, x, dirs[b], t));
            }
        }
    }
    out
}

/// Superblock threshold ladder: {0, 1/2, 3/4, 1, 3/2, 2} * T0.
pub const DERING_FACTORS: [i32; 6] = [0, 2, 3, 4, 6, 8];

pub fn dering_threshold(t0: i32, factor_index: usize) -> i32 {
    (t0 * DERING_FACTORS[factor_index]) >> 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    fn block_from(f: impl Fn(i32, i32) -> i32) -> Plane {
        let mut p = Plane::new(8, 8);
        for i in 0..8 {
            for j in 0..8 {
                p.set(j as usize, i as usize, f(i, j));
            }
        }
        p
    }

    #[test]
    fn conditional_replace_examples() {
        let taps: Vec<(i32, Option<i32>)> = vec![(3, Some(100)); 6];
        assert_eq!(conditional_replace(100, &taps, 16, 50), 100);
        // T = 0 rejects everything.
        let taps: Vec<(i32, Option<i32>)> = vec![(3, Some(90)), (3, Some(130))];
        assert_eq!(conditional_replace(100, &taps, 16, 0), 100);
        // A single outlier beyond T is excluded.
        let mut taps: Vec<(i32, Option<i32>)> = vec![(3, Some(100)); 5];
        taps.push((1, Some(200)));
        assert_eq!(conditional_replace(100, &taps, 16, 20), 100);
    }

    #[test]
    fn detects_axis_and_diagonal_edges() {
        let vertical = block_from(|_, j| if j < 4 { 0 } else { 255 });
        assert_eq!(detect_direction(&vertical, 0, 0).0, 4);
        let horizontal = block_from(|i, _| if i < 4 { 0 } else { 255 });
        assert_eq!(detect_direction(&horizontal, 0, 0).0, 0);
        let diag = block_from(|i, j| if i >= j { 255 } else { 0 });
        assert_eq!(detect_direction(&diag, 0, 0).0, 2);
        let anti = block_from(|i, j| if i + j >= 7 { 255 } else { 0 });
        assert_eq!(detect_direction(&anti, 0, 0).0, 6);
        let constant = block_from(|_, _| 77);
        assert_eq!(detect_direction(&constant, 0, 0), (0, 0));
    }

    /// Independent float recomputation: per-line variance cost.
    fn brute_force_direction(p: &Plane) -> usize {
        let mut best = 0;
        let mut best_cost = f64::INFINITY;
        for d in 0..8 {
            let mut lines: Vec<Vec<f64>> = vec![Vec::new(); NUM_LINES];
            for i in 0..8i32 {
                for j in 0..8i32 {
                    lines[line_id(d, i, j) as usize]
                        .push(p.get(j as usize, i as usize) as f64);
                }
            }
            let mut cost = 0.0;
            for l in &lines {
                if l.is_empty() {
                    continue;
                }
                let mean = l.iter().sum::<f64>() / l.len() as f64;
                cost += l.iter().map(|v| (v - mean).powi(2)).sum::<f64>();
            }
            if cost < best_cost - 1e-9 {
                best_cost = cost;
                best = d;
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_cost() {
        let mut state = 404u64;
        for _ in 0..1000 {
            let mut p = Plane::new(8, 8);
            for v in p.data.iter_mut() {
                *v = (xorshift(&mut state) % 256) as i32;
            }
            assert_eq!(detect_direction(&p, 0, 0).0, brute_force_direction(&p));
        }
        // Synthetic edges at each of 8 orientations, two phases each.
        for d in 0..8usize {
            for phase in 0..2 {
                let p = block_from(|i, j| {
                    let side = line_id(d, i, j) < (5 + phase);
                    if side {
                        230
                    } else {
                        25
                    }
                });
                assert_eq!(detect_direction(&p, 0, 0).0, brute_force_direction(&p));
            }
        }
    }

    #[test]
    fn rotation_permutes_directions() {
        let mut state = 808u64;
        for _ in 0..200 {
            let mut p = Plane::new(8, 8);
            for v in p.data.iter_mut() {
                *v = (xorshift(&mut state) % 256) as i32;
            }
            // Rotate 90 degrees counterclockwise: (i, j) -> (7 - j, i).
            let mut r = Plane::new(8, 8);
            for i in 0..8 {
                for j in 0..8 {
                    r.set(i, 7 - j, p.get(j, i));
                }
            }
            let s = direction_scores(&p, 0, 0);
            let sr = direction_scores(&r, 0, 0);
            for d in 0..8 {
                assert_eq!(s[d], sr[(d + 4) % 8], "direction {d}");
            }
        }
    }

    #[test]
    fn shift_invariance() {
        let mut state = 5150u64;
        let mut p = Plane::new(8, 8);
        for v in p.data.iter_mut() {
            *v = 40 + (xorshift(&mut state) % 100) as i32;
        }
        let mut q = p.clone();
        for v in q.data.iter_mut() {
            *v += 55;
        }
        assert_eq!(direction_scores(&p, 0, 0), direction_scores(&q, 0, 0));
    }

    #[test]
    fn constant_region_is_invariant() {
        let mut p = Plane::new(32, 32);
        p.data.fill(140);
        let out = dering_plane(&p, &[300; 16]);
        assert_eq!(out, p);
        // Zero thresholds are bit-identity on anything.
        let mut state = 3u64;
        for v in p.data.iter_mut() {
            *v = (xorshift(&mut state) % 256) as i32;
        }
        assert_eq!(dering_plane(&p, &[0; 16]), p);
    }

    #[test]
    fn huge_threshold_is_plain_fir() {
        let mut state = 21u64;
        let mut p = Plane::new(16, 16);
        for v in p.data.iter_mut() {
            *v = (xorshift(&mut state) % 256) as i32;
        }
        let out = dering_plane(&p, &[256; 4]);
        // Reference: same two stages with no rejection (except
        // out-of-frame taps, which still contribute nothing).
        let bw = 2;
        let dirs: Vec<usize> = (0..4)
            .map(|b| detect_direction(&p, (b % bw) * 8, (b / bw) * 8).0)
            .collect();
        let fir = |src: &Plane, y: i32, x: i32, d: usize, stage2: bool| -> i32 {
            let center = src.get(x as usize, y as usize);
            let mut acc = 0i64;
            let (w, kmax) = if stage2 { (STAGE2_W, 2) } else { (STAGE1_W, 3) };
            for k in 1..=kmax {
                for s in [k, -k] {
                    let (dy, dx) = if stage2 {
                        if stage2_vertical(d) { (s, 0) } else { (0, s) }
                    } else {
                        tap_offset(d, y, x, s)
                    };
                    if let Some(v) = sample(src, y + dy, x + dx) {
                        let wk = if stage2 {
                            STAGE2_WEIGHTS[(k - 1) as usize]
                        } else {
                            STAGE1_WEIGHTS[(k - 1) as usize]
                        };
                        acc += wk as i64 * (v - center) as i64;
                    }
                }
            }
            (center as i64 + round_div(acc, w as i64)).clamp(0, 255) as i32
        };
        let mut mid = p.clone();
        for y in 0..16i32 {
            for x in 0..16i32 {
                let b = (y as usize / 8) * bw + x as usize / 8;
                mid.set(x as usize, y as usize, fir(&p, y, x, dirs[b], false));
            }
        }
        let mut want = mid.clone();
        for y in 0..16i32 {
            for x in 0..16i32 {
                let b = (y as usize / 8) * bw + x as usize / 8;
                want.set(x as usize, y as usize, fir(&mid, y, x, dirs[b], true));
            }
        }
        assert_eq!(out, want);
    }

    #[test]
    fn cleans_ringing_around_edge() {
        // A sharp vertical edge with alternating +-18 "mosquito"
        // noise in a 3-pixel halo, like coarse quantization leaves.
        let w = 64;
        let clean = {
            let mut p = Plane::new(w, w);
            for y in 0..w {
                for x in 0..w {
                    p.set(x, y, if x < w / 2 { 60 } else { 200 });
                }
            }
            p
        };
        let mut noisy = clean.clone();
        for y in 0..w {
            for x in 0..w {
                let dist = (x as i32 - w as i32 / 2).abs();
                if (1..=3).contains(&dist) {
                    let s = if (x + y) % 2 == 0 { 18 } else { -18 };
                    noisy.set(x, y, (noisy.get(x, y) + s).clamp(0, 255));
                }
            }
        }
        let blocks = (w / 8) * (w / 8);
        let out = dering_plane(&noisy, &vec![40; blocks]);
        let mse_before = crate::frame::plane_mse(&clean, &noisy);
        let mse_after = crate::frame::plane_mse(&clean, &out);
        assert!(
            mse_after < mse_before / 2.0,
            "dering did not help: {mse_before} -> {mse_after}"
        );
    }
}
