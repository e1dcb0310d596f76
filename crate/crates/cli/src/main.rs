//! `dlk`: encode, decode and compare images with the DLK codec.
//!
//! Machine-readable results go to stdout as TSV; diagnostics go to
//! stderr. Exit codes: 0 ok, 1 IO error, 2 format or usage error.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use dlk_codec::codec::{decode_frame, encode_frame, EncoderConfig};
use dlk_codec::frame::{frame_psnr, plane_psnr, Frame};

use crate::io::FormatError;

#[derive(Parser)]
#[command(name = "dlk", version, about = "DLK image codec")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Encode Y4M/PGM/PPM input to a DLK stream.
    Enc {
        /// Quantizer index, 0 (near-lossless) to 63 (coarsest).
        #[arg(short, long, value_parser = clap::value_parser!(u8).range(0..=63))]
        quantizer: u8,
        /// Deringing strength: an integer T0, or "off".
        #[arg(long)]
        dering: Option<String>,
        /// Disable chroma-from-luma prediction.
        #[arg(long)]
        no_cfl: bool,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decode a DLK stream to Y4M/PGM/PPM.
    Dec {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Per-plane and weighted PSNR between two images.
    Metrics { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("dlk: {err:#}");
            if err.chain().any(|c| c.is::<FormatError>()) {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Enc {
            quantizer,
            dering,
            no_cfl,
            input,
            output,
        } => {
            let dering = match dering.as_deref() {
                None => None,
                Some("off") => Some(0),
                Some(v) => Some(v.parse::<u8>().map_err(|_| {
                    anyhow!(FormatError(format!(
                        "--dering wants an integer 0..=255 or 'off', got '{v}'"
                    )))
                })?),
            };
            let cfg = EncoderConfig {
                qi: quantizer,
                dering,
                cfl: !no_cfl,
            };
            let frames = io::read_frames(&input)?;
            let mut stream = Vec::new();
            let mut total_bytes = 0usize;
            for (i, frame) in frames.iter().enumerate() {
                let (bytes, recon, _) = encode_frame(frame, &cfg);
                let psnr = frame_psnr(frame, &recon);
                println!("frame\t{i}\t{}\t{}", bytes.len(), fmt_db(psnr));
                total_bytes += bytes.len();
                stream.extend_from_slice(&bytes);
            }
            println!("total\t{}\t{total_bytes}", frames.len());
            std::fs::write(&output, stream)?;
        }
        Cmd::Dec { input, output } => {
            let bytes = std::fs::read(&input)?;
            let mut frames = Vec::new();
            let mut pos = 0;
            while pos < bytes.len() {
                let (frame, used) = decode_frame(&bytes[pos..])
                    .map_err(|e| anyhow!(FormatError(e.to_string())))?;
                frames.push(frame);
                pos += used;
            }
            if frames.is_empty() {
                return Err(anyhow!(FormatError("empty stream".into())));
            }
            io::write_frames(&output, &frames)?;
        }
        Cmd::Metrics { a, b } => {
            let fa = io::read_frames(&a)?;
            let fb = io::read_frames(&b)?;
            if fa.len() != fb.len() {
                return Err(anyhow!(FormatError("frame count mismatch".into())));
            }
            for (fa, fb) in fa.iter().zip(&fb) {
                print_metrics(fa, fb)?;
            }
        }
    }
    Ok(())
}

fn print_metrics(a: &Frame, b: &Frame) -> Result<()> {
    if a.chroma != b.chroma || a.width() != b.width() || a.height() != b.height() {
        return Err(anyhow!(FormatError("image geometry mismatch".into())));
    }
    let names = ["Y", "Cb", "Cr"];
    for (i, (pa, pb)) in a.planes.iter().zip(&b.planes).enumerate() {
        println!("{}\t{}", names[i], fmt_db(plane_psnr(pa, pb)));
    }
    println!("weighted\t{}", fmt_db(frame_psnr(a, b)));
    Ok(())
}

fn fmt_db(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v:.4}")
    }
}
