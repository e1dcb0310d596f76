//! File formats for the CLI: Y4M (C420/Cmono), PGM and PPM.
//! PPM is converted to and from full-range BT.601 YCbCr 4:2:0.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use dlk_codec::frame::{ChromaMode, Frame, Plane};

/// Errors that should exit with the format/usage code rather than
/// the IO code.
#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn format_err(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(FormatError(msg.into()))
}

pub fn read_frames(path: &Path) -> Result<Vec<Frame>> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if bytes.starts_with(b"YUV4MPEG2") {
        read_y4m(&bytes)
    } else if bytes.starts_with(b"P5") {
        Ok(vec![Frame::mono(read_pgm(&bytes)?)])
    } else if bytes.starts_with(b"P6") {
        Ok(vec![read_ppm(&bytes)?])
    } else {
        Err(format_err(format!(
            "{}: unrecognized input format (want Y4M, PGM or PPM)",
            path.display()
        )))
    }
}

pub fn write_frames(path: &Path, frames: &[Frame]) -> Result<()> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or("")
        .to_ascii_lowercase();
    let bytes = match ext.as_str() {
        "y4m" => write_y4m(frames)?,
        "pgm" => {
            let f = single_frame(frames)?;
            if f.chroma != ChromaMode::Monochrome {
                return Err(format_err("PGM output requires monochrome content"));
            }
            write_pgm(&f.planes[0])
        }
        "ppm" => {
            let f = single_frame(frames)?;
            if f.chroma != ChromaMode::Yuv420 {
                return Err(format_err("PPM output requires 4:2:0 content"));
            }
            write_ppm(f)
        }
        other => {
            return Err(format_err(format!(
                "unsupported output extension '{other}' (want y4m, pgm or ppm)"
            )))
        }
    };
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn single_frame(frames: &[Frame]) -> Result<&Frame> {
    match frames {
        [f] => Ok(f),
        _ => Err(format_err(
            "still-image output can hold exactly one frame; use .y4m",
        )),
    }
}

// ---- PNM ----

/// Parse a P5/P6 header; returns (width, height, data offset).
fn pnm_header(bytes: &[u8]) -> Result<(usize, usize, usize)> {
    let mut pos = 2;
    let mut fields = [0usize; 3];
    for field in &mut fields {
        // Skip whitespace and comment lines.
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while pos < bytes.len() && bytes[pos] != b'\n' {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == start {
            return Err(format_err("malformed PNM header"));
        }
        *field = std::str::from_utf8(&bytes[start..pos])?.parse()?;
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(format_err("malformed PNM header")),
    }
    let (w, h, maxval) = (fields[0], fields[1], fields[2]);
    if w == 0 || h == 0 {
        return Err(format_err("PNM with zero dimension"));
    }
    if maxval != 255 {
        return Err(format_err("only 8-bit PNM is supported"));
    }
    Ok((w, h, pos))
}

fn read_pgm(bytes: &[u8]) -> Result<Plane> {
    let (w, h, off) = pnm_header(bytes)?;
    let data = bytes
        .get(off..off + w * h)
        .ok_or_else(|| format_err("PGM truncated"))?;
    Ok(Plane::from_u8(w, h, data))
}

fn read_ppm(bytes: &[u8]) -> Result<Frame> {
    let (w, h, off) = pnm_header(bytes)?;
    let rgb = bytes
        .get(off..off + 3 * w * h)
        .ok_or_else(|| format_err("PPM truncated"))?;
    Ok(rgb_to_yuv420(w, h, rgb))
}

fn write_pgm(p: &Plane) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", p.width, p.height).into_bytes();
    out.extend(p.to_u8());
    out
}

fn write_ppm(f: &Frame) -> Vec<u8> {
    let (w, h) = (f.width(), f.height());
    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    out.extend(yuv420_to_rgb(f));
    out
}

// ---- BT.601 full-range color ----

fn rgb_to_yuv420(w: usize, h: usize, rgb: &[u8]) -> Frame {
    let mut y = Plane::new(w, h);
    let (cw, ch) = (w.div_ceil(2), h.div_ceil(2));
    let mut cb_acc = vec![(0f64, 0u32); cw * ch];
    let mut cr_acc = vec![(0f64, 0u32); cw * ch];
    for j in 0..h {
        for i in 0..w {
            let p = 3 * (j * w + i);
            let (r, g, b) = (rgb[p] as f64, rgb[p + 1] as f64, rgb[p + 2] as f64);
            let yy = 0.299 * r + 0.587 * g + 0.114 * b;
            let cb = 128.0 + (b - yy) / 1.772;
            let cr = 128.0 + (r - yy) / 1.402;
            y.set(i, j, (yy.round() as i32).clamp(0, 255));
            let ci = (j / 2) * cw + i / 2;
            cb_acc[ci].0 += cb;
            cb_acc[ci].1 += 1;
            cr_acc[ci].0 += cr;
            cr_acc[ci].1 += 1;
        }
    }
    let collect = |acc: &[(f64, u32)]| -> Plane {
        let mut p = Plane::new(cw, ch);
        for (i, &(s, n)) in acc.iter().enumerate() {
            p.data[i] = ((s / n as f64).round() as i32).clamp(0, 255);
        }
        p
    };
    Frame::yuv420(y, collect(&cb_acc), collect(&cr_acc))
}

fn yuv420_to_rgb(f: &Frame) -> Vec<u8> {
    let (w, h) = (f.width(), f.height());
    let (y, cb, cr) = (&f.planes[0], &f.planes[1], &f.planes[2]);
    let mut out = Vec::with_capacity(3 * w * h);
    for j in 0..h {
        for i in 0..w {
            let yy = y.get(i, j).clamp(0, 255) as f64;
            let u = cb.get(i / 2, j / 2).clamp(0, 255) as f64 - 128.0;
            let v = cr.get(i / 2, j / 2).clamp(0, 255) as f64 - 128.0;
            let r = yy + 1.402 * v;
            let g = yy - (0.114 * 1.772 * u + 0.299 * 1.402 * v) / 0.587;
            let b = yy + 1.772 * u;
            for c in [r, g, b] {
                out.push(c.round().clamp(0.0, 255.0) as u8);
            }
        }
    }
    out
}

// ---- Y4M ----

fn read_y4m(bytes: &[u8]) -> Result<Vec<Frame>> {
    let nl = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| format_err("Y4M missing header newline"))?;
    let header = std::str::from_utf8(&bytes[..nl])?;
    let mut w = 0usize;
    let mut h = 0usize;
    let mut chroma = ChromaMode::Yuv420;
    for token in header.split_ascii_whitespace().skip(1) {
        let (tag, val) = token.split_at(1);
        match tag {
            "W" => w = val.parse()?,
            "H" => h = val.parse()?,
            "C" => {
                chroma = match val {
                    "420" | "420jpeg" | "420mpeg2" => ChromaMode::Yuv420,
                    "mono" => ChromaMode::Monochrome,
                    other => {
                        return Err(format_err(format!(
                            "unsupported Y4M chroma mode C{other} (want C420 or Cmono)"
                        )))
                    }
                }
            }
            _ => {}
        }
    }
    if w == 0 || h == 0 {
        return Err(format_err("Y4M header missing W or H"));
    }
    let (cw, ch) = (w.div_ceil(2), h.div_ceil(2));
    let frame_len = match chroma {
        ChromaMode::Monochrome => w * h,
        ChromaMode::Yuv420 => w * h + 2 * cw * ch,
    };
    let mut frames = Vec::new();
    let mut pos = nl + 1;
    while pos < bytes.len() {
        let fnl = bytes[pos..]
            .iter()
            .position(|&b| b == b'\n')
            .ok_or_else(|| format_err("Y4M truncated frame header"))?;
        if !bytes[pos..].starts_with(b"FRAME") {
            return Err(format_err("Y4M frame marker missing"));
        }
        pos += fnl + 1;
        let data = bytes
            .get(pos..pos + frame_len)
            .ok_or_else(|| format_err("Y4M truncated frame data"))?;
        pos += frame_len;
        let y = Plane::from_u8(w, h, &data[..w * h]);
        frames.push(match chroma {
            ChromaMode::Monochrome => Frame::mono(y),
            ChromaMode::Yuv420 => Frame::yuv420(
                y,
                Plane::from_u8(cw, ch, &data[w * h..w * h + cw * ch]),
                Plane::from_u8(cw, ch, &data[w * h + cw * ch..]),
            ),
        });
    }
    if frames.is_empty() {
        return Err(format_err("Y4M contains no frames"));
    }
    Ok(frames)
}

fn write_y4m(frames: &[Frame]) -> Result<Vec<u8>> {
    let first = frames.first().ok_or_else(|| format_err("no frames"))?;
    let (w, h) = (first.width(), first.height());
    let ctag = match first.chroma {
        ChromaMode::Monochrome => "mono",
        ChromaMode::Yuv420 => "420jpeg",
    };
    let mut out = format!("YUV4MPEG2 W{w} H{h} F25:1 Ip A1:1 C{ctag}\n").into_bytes();
    for f in frames {
        if f.width() != w || f.height() != h || f.chroma != first.chroma {
            return Err(format_err("all frames in a Y4M must share one geometry"));
        }
        out.extend_from_slice(b"FRAME\n");
        for p in &f.planes {
            out.extend(p.to_u8());
        }
    }
    Ok(out)
}
