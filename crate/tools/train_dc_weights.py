#!/usr/bin/env python3
"""Fit the superblock DC predictor weights by least squares.

Reads 8-bit PGM images from a folder, computes the DC (pixel sum) of
every 64x64 superblock, and solves for the weights w that minimize
|DC - w . (left, top_left, top, top_right)|^2 over all superblocks
whose four neighbors exist. Prints the raw solution and the nearest
/16 integer weights in the form the codec uses.

Usage: tools/train_dc_weights.py <folder> [--sb 64]
"""

import argparse
import pathlib
import sys

import numpy as np


def read_pgm(path):
    data = path.read_bytes()
    if not data.startswith(b"P5"):
        raise ValueError(f"{path}: not a binary PGM")
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and data[pos : pos + 1].isdigit():
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace after maxval
    w, h, maxval = fields
    if maxval != 255:
        raise ValueError(f"{path}: only 8-bit PGM supported")
    pix = np.frombuffer(data[pos : pos + w * h], dtype=np.uint8)
    return pix.reshape(h, w).astype(np.float64)


def superblock_dcs(img, sb):
    h, w = img.shape
    rows, cols = h // sb, w // sb
    out = np.empty((rows, cols))
    for r in range(rows):
        for c in range(cols):
            out[r, c] = img[r * sb : (r + 1) * sb, c * sb : (c + 1) * sb].sum()
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("folder", type=pathlib.Path)
    ap.add_argument("--sb", type=int, default=64, help="superblock size")
    args = ap.parse_args()

    rows_a, rows_b = [], []
    for path in sorted(args.folder.glob("*.pgm")):
        dcs = superblock_dcs(read_pgm(path), args.sb)
        r, c = dcs.shape
        for i in range(1, r):
            for j in range(1, c - 1):
                rows_a.append(
                    [dcs[i, j - 1], dcs[i - 1, j - 1], dcs[i - 1, j], dcs[i - 1, j + 1]]
                )
                rows_b.append(dcs[i, j])
    if not rows_a:
        sys.exit("no usable superblocks (need images larger than 2x3 superblocks)")

    a = np.asarray(rows_a)
    b = np.asarray(rows_b)
    w, *_ = np.linalg.lstsq(a, b, rcond=None)
    scaled = np.round(w * 16).astype(int)
    print(f"samples\t{len(b)}")
    print("weights\t" + "\t".join(f"{v:.6f}" for v in w))
    print("num/16\t" + "\t".join(str(v) for v in scaled))
    resid = b - a @ w
    print(f"rms\t{np.sqrt(np.mean(resid ** 2)):.2f}")


if __name__ == "__main__":
    main()
