//! Multi-symbol range coder with adaptive frequency models.
//!
//! The coder keeps its range in `[2^15, 2^16)` and replaces the usual
//! multiply/divide interval split with a piecewise integer mapping:
//! with `d = range - ft`, a cumulative frequency `f` maps to
//! `f + min(f, d)`. Symbols at the start of the alphabet receive at
//! least their proportional share of the range, so index 0 should be
//! the most probable symbol.

use num_bigint::BigUint;

/// Range window lower bound. The range is renormalized back into
/// `[RANGE_MIN, 2 * RANGE_MIN)` after every symbol.
pub const RANGE_MIN: u32 = 1 << 15;

const WINDOW_BITS: u32 = 16;

/// Adaptive per-context symbol counts (alphabet size 2..=16).
#[derive(Clone, Debug)]
pub struct FrequencyModel {
    counts: Vec<u32>,
    total: u32,
    increment: u32,
    cap: u32,
}

impl FrequencyModel {
    /// Model with all counts 1, increment 16, cap 2^15.
    pub fn new(alphabet: usize) -> Self {
        Self::with_params(alphabet, 16, 1 << 15)
    }

    pub fn with_params(alphabet: usize, increment: u32, cap: u32) -> Self {
        assert!((2..=16).contains(&alphabet));
        assert!(cap >= 2 * alphabet as u32 && cap <= 1 << 15);
        FrequencyModel {
            counts: vec![1; alphabet],
            total: alphabet as u32,
            increment,
            cap,
        }
    }

    /// Non-adaptive model over the given fixed counts.
    pub fn frozen(counts: &[u32]) -> Self {
        assert!((2..=16).contains(&counts.len()));
        assert!(counts.iter().all(|&c| c >= 1));
        let total = counts.iter().sum();
        assert!(total <= 1 << 15);
        FrequencyModel {
            counts: counts.to_vec(),
            total,
            increment: 0,
            cap: 1 << 15,
        }
    }

    pub fn alphabet(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn count(&self, s: usize) -> u32 {
        self.counts[s]
    }

    fn cum(&self, s: usize) -> (u32, u32) {
        let fl: u32 = self.counts[..s].iter().sum();
        (fl, fl + self.counts[s])
    }

    /// Bump `s`; halve all counts (flooring, clamped to >= 1) when the
    /// total passes the cap.
    pub fn update(&mut self, s: usize) {
        self.counts[s] += self.increment;
        self.total += self.increment;
        if self.total > self.cap {
            self.total = 0;
            for c in self.counts.iter_mut() {
                *c = (*c >> 1).max(1);
                self.total += *c;
            }
        }
    }
}

/// `u = fl + min(fl, d)`, `v = fh + min(fh, d)` with `d = range - ft`.
///
/// Requires `0 <= fl < fh <= ft` and `range/2 < ft <= range`.
#[inline]
pub fn map_interval(range: u32, fl: u32, fh: u32, ft: u32) -> (u32, u32) {
    debug_assert!(fl < fh && fh <= ft);
    debug_assert!(ft > range / 2 && ft <= range);
    let d = range - ft;
    (fl + fl.min(d), fh + fh.min(d))
}

/// Shift that scales `ft` into `(range/2, range]`.
#[inline]
fn ft_shift(range: u32, ft: u32) -> u32 {
    debug_assert!(ft >= 2 && ft <= range);
    let mut shift = 0;
    while (ft << (shift + 1)) <= range {
        shift += 1;
    }
    shift
}

#[inline]
fn log2_floor(x: u32) -> u32 {
    31 - x.leading_zeros()
}

/// Number of radix-16 digits for values below `bound`, and the
/// sub-range of the most significant digit. `bound > 1`.
fn uniform_digit_plan(bound: &BigUint) -> (usize, u32) {
    let max = bound - 1u32;
    let ndigits = ((max.bits() as usize).max(1) + 3) / 4;
    let top: BigUint = &max >> (4 * (ndigits - 1));
    let top = top.iter_u32_digits().next().unwrap_or(0);
    (ndigits, top + 1)
}

/// Range encoder. Byte output with deferred carry propagation; the
/// window is 16 bits wide and up to 7 bits wait above it for byte
/// alignment.
#[derive(Clone, Debug)]
pub struct RangeEncoder {
    out: Vec<u8>,
    /// Window offset in bits [0, 16) plus `nbits` buffered bits above.
    low: u64,
    rng: u32,
    nbits: u32,
    /// Carries that ran off the front of a forked encoder. Harmless:
    /// forks are used for rate estimation only.
    lost_carries: u64,
}

impl Default for RangeEncoder {
    fn default() -> Self {
        Self::new()
    }
}

impl RangeEncoder {
    pub fn new() -> Self {
        RangeEncoder {
            out: Vec::new(),
            low: 0,
            rng: RANGE_MIN,
            nbits: 0,
            lost_carries: 0,
        }
    }

    /// Encoder sharing this one's range state but with an empty output
    /// buffer. Used for trial encodes; the bytes it produces are not a
    /// valid stream on their own.
    pub fn fork(&self) -> Self {
        RangeEncoder {
            out: Vec::new(),
            low: self.low & 0xFFFF,
            rng: self.rng,
            nbits: 0,
            lost_carries: 0,
        }
    }

    /// Bits committed so far, including the fractional part of the
    /// current range. Differences of this measure trial-encode rate.
    pub fn tell_bits(&self) -> f64 {
        (8 * self.out.len()) as f64 + self.nbits as f64 + (16.0 - (self.rng as f64).log2())
    }

    pub fn len_bytes(&self) -> usize {
        self.out.len()
    }

    fn propagate_carry(&mut self) {
        for b in self.out.iter_mut().rev() {
            *b = b.wrapping_add(1);
            if *b != 0 {
                return;
            }
        }
        // Only reachable on a fork, where the prefix is gone.
        self.lost_carries += 1;
    }

    /// Narrow the interval to [u, v) of the current range.
    fn encode_interval(&mut self, u: u32, v: u32) {
        debug_assert!(u < v && v <= self.rng);
        self.low += u as u64;
        if self.low >> (WINDOW_BITS + self.nbits) != 0 {
            self.low &= (1u64 << (WINDOW_BITS + self.nbits)) - 1;
            self.propagate_carry();
        }
        self.rng = v - u;
        let s = 15 - log2_floor(self.rng);
        self.rng <<= s;
        self.low <<= s;
        self.nbits += s;
        while self.nbits >= 8 {
            let sh = WINDOW_BITS + self.nbits - 8;
            self.out.push(((self.low >> sh) & 0xFF) as u8);
            self.low &= (1u64 << sh) - 1;
            self.nbits -= 8;
        }
    }

    fn encode_with_counts(&mut self, fl: u32, fh: u32, ft: u32) {
        let shift = ft_shift(self.rng, ft);
        let (u, v) = map_interval(self.rng, fl << shift, fh << shift, ft << shift);
        self.encode_interval(u, v);
    }

    /// Code one symbol and adapt the model.
    pub fn encode_symbol(&mut self, model: &mut FrequencyModel, s: usize) {
        assert!(s < model.alphabet());
        let (fl, fh) = model.cum(s);
        self.encode_with_counts(fl, fh, model.total());
        model.update(s);
    }

    /// Code `digit < n` with a flat non-adaptive distribution, n <= 16.
    pub fn encode_flat(&mut self, digit: u32, n: u32) {
        debug_assert!(digit < n && n <= 16);
        if n < 2 {
            return;
        }
        self.encode_with_counts(digit, digit + 1, n);
    }

    /// Raw bits, most significant first, as flat 4-bit digits.
    pub fn encode_bits(&mut self, value: u64, nbits: u32) {
        debug_assert!(nbits <= 60 && (nbits == 64 || value >> nbits == 0));
        let mut rem = nbits;
        while rem > 0 {
            let chunk = rem.min(4);
            rem -= chunk;
            self.encode_flat(((value >> rem) as u32) & ((1 << chunk) - 1), 1 << chunk);
        }
    }

    /// Code `value < bound` as the minimal radix-16 digit string for
    /// `bound`, with the top digit over its restricted sub-range.
    pub fn encode_uniform(&mut self, value: &BigUint, bound: &BigUint) {
        assert!(value < bound, "encode_uniform: value out of range");
        if *bound == BigUint::from(1u32) {
            return;
        }
        let (ndigits, top) = uniform_digit_plan(bound);
        let nibbles = to_nibbles(value, ndigits);
        self.encode_flat(nibbles[ndigits - 1] as u32, top);
        for i in (0..ndigits - 1).rev() {
            self.encode_flat(nibbles[i] as u32, 16);
        }
    }

    pub fn encode_uniform_u64(&mut self, value: u64, bound: u64) {
        self.encode_uniform(&BigUint::from(value), &BigUint::from(bound));
    }

    /// Final bytes: the minimal prefix that pins the stream inside the
    /// current interval once the decoder zero-extends past the end.
    pub fn finish(mut self) -> Vec<u8> {
        let t = WINDOW_BITS + self.nbits;
        let top = self.low + self.rng as u64;
        let mut k = 1;
        let mut c = loop {
            let step = 1u64 << (t - k);
            let c = (self.low + step - 1) & !(step - 1);
            if c < top {
                break c;
            }
            k += 1;
        };
        if c >> t != 0 {
            self.propagate_carry();
            c &= (1u64 << t) - 1;
        }
        let kbytes = (k as usize + 7) / 8;
        let cc = c << (8 * kbytes);
        for i in 0..kbytes {
            self.out
                .push(((cc >> (t as usize + 8 * (kbytes - 1 - i))) & 0xFF) as u8);
        }
        self.out
    }
}

/// Low nibble first.
fn to_nibbles(value: &BigUint, ndigits: usize) -> Vec<u8> {
    let bytes = value.to_bytes_le();
    let mut nibbles = Vec::with_capacity(ndigits);
    for i in 0..ndigits {
        let b = bytes.get(i / 2).copied().unwrap_or(0);
        nibbles.push(if i % 2 == 0 { b & 0xF } else { b >> 4 });
    }
    nibbles
}

/// Range decoder. Mirrors the encoder's renormalization exactly and
/// zero-extends past the end of the input, so decoding is total; the
/// container layer is responsible for detecting truncation.
#[derive(Clone, Debug)]
pub struct RangeDecoder<'a> {
    buf: &'a [u8],
    pos: usize,
    rng: u32,
    /// Code value minus interval low; always in [0, rng).
    val: u32,
}

impl<'a> RangeDecoder<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        let mut dec = RangeDecoder {
            buf,
            pos: 0,
            rng: RANGE_MIN,
            val: 0,
        };
        // A valid stream always starts with a 0 bit; mask it off so a
        // corrupt one still leaves val < rng.
        dec.val = dec.read_bits(16) & (RANGE_MIN - 1);
        dec
    }

    fn read_bits(&mut self, n: u32) -> u32 {
        let mut v = 0;
        for _ in 0..n {
            let byte_bit = if self.pos / 8 < self.buf.len() {
                (self.buf[self.pos / 8] >> (7 - self.pos % 8)) & 1
            } else {
                0
            };
            v = (v << 1) | byte_bit as u32;
            self.pos += 1;
        }
        v
    }

    fn renorm(&mut self) {
        let s = 15 - log2_floor(self.rng);
        self.rng <<= s;
        self.val = (self.val << s) | self.read_bits(s);
    }

    /// Inverse of the encoder's interval narrowing for one symbol over
    /// cumulative counts given by `cum_fn(s)`, alphabet size `n`.
    fn decode_with_counts(&mut self, ft: u32, cum: impl Fn(usize) -> u32, n: usize) -> usize {
        let shift = ft_shift(self.rng, ft);
        let ft_s = ft << shift;
        let d = self.rng - ft_s;
        let w = self.val;
        let c = if w < 2 * d { w >> 1 } else { w - d };
        // Largest s with cum(s) << shift <= c.
        let mut s = 0;
        while s + 1 < n && (cum(s + 1) << shift) <= c {
            s += 1;
        }
        let map = |f: u32| f + f.min(d);
        let u = map(cum(s) << shift);
        let v = map(cum(s + 1) << shift);
        debug_assert!(u <= w && w < v);
        self.val -= u;
        self.rng = v - u;
        self.renorm();
        s
    }

    /// Decode one symbol and adapt the model (must mirror the encoder's
    /// model state exactly).
    pub fn decode_symbol(&mut self, model: &mut FrequencyModel) -> usize {
        let mut cums = [0u32; 17];
        for s in 0..model.alphabet() {
            cums[s + 1] = cums[s] + model.count(s);
        }
        let s = self.decode_with_counts(model.total(), |i| cums[i], model.alphabet());
        model.update(s);
        s
    }

    pub fn decode_flat(&mut self, n: u32) -> u32 {
        debug_assert!(n <= 16);
        if n < 2 {
            return 0;
        }
        self.decode_with_counts(n, |i| i as u32, n as usize) as u32
    }

    pub fn decode_bits(&mut self, nbits: u32) -> u64 {
        let mut v = 0u64;
        let mut rem = nbits;
        while rem > 0 {
            let chunk = rem.min(4);
            rem -= chunk;
            v = (v << chunk) | self.decode_flat(1 << chunk) as u64;
        }
        v
    }

    /// Inverse of `encode_uniform`. The result is clamped to
    /// `bound - 1`, which only matters on a corrupt stream.
    pub fn decode_uniform(&mut self, bound: &BigUint) -> BigUint {
        if *bound == BigUint::from(1u32) {
            return BigUint::from(0u32);
        }
        let (ndigits, top) = uniform_digit_plan(bound);
        let mut v = BigUint::from(self.decode_flat(top));
        for _ in 0..ndigits - 1 {
            v = (v << 4) | BigUint::from(self.decode_flat(16));
        }
        let max = bound - 1u32;
        if v > max {
            v = max;
        }
        v
    }

    pub fn decode_uniform_u64(&mut self, bound: u64) -> u64 {
        let v = self.decode_uniform(&BigUint::from(bound));
        v.iter_u64_digits().next().unwrap_or(0)
    }
}

/// Adaptive models for a small signed integer: 16-ary magnitude with a
/// bit-length escape beyond 14, plus a sign bit.
#[derive(Clone, Debug)]
pub struct MagnitudeModel {
    low: FrequencyModel,
    len: FrequencyModel,
    sign: FrequencyModel,
}

impl Default for MagnitudeModel {
    fn default() -> Self {
        Self::new()
    }
}

impl MagnitudeModel {
    pub fn new() -> Self {
        MagnitudeModel {
            low: FrequencyModel::new(16),
            len: FrequencyModel::new(16),
            sign: FrequencyModel::new(2),
        }
    }
}

const MAG_ESCAPE: u64 = 15;

pub fn encode_magnitude(enc: &mut RangeEncoder, m: &mut MagnitudeModel, value: u64) {
    if value < MAG_ESCAPE {
        enc.encode_symbol(&mut m.low, value as usize);
        return;
    }
    enc.encode_symbol(&mut m.low, MAG_ESCAPE as usize);
    let e = value - MAG_ESCAPE;
    let k = 63 - (e + 1).leading_zeros(); // floor(log2(e + 1))
    if k < 15 {
        enc.encode_symbol(&mut m.len, k as usize);
        enc.encode_bits(e + 1 - (1 << k), k);
    } else {
        enc.encode_symbol(&mut m.len, 15);
        enc.encode_bits(e, 48);
    }
}

pub fn decode_magnitude(dec: &mut RangeDecoder, m: &mut MagnitudeModel) -> u64 {
    let s = dec.decode_symbol(&mut m.low) as u64;
    if s < MAG_ESCAPE {
        return s;
    }
    let k = dec.decode_symbol(&mut m.len) as u32;
    let e = if k < 15 {
        (1u64 << k) + dec.decode_bits(k) - 1
    } else {
        dec.decode_bits(48)
    };
    MAG_ESCAPE + e
}

pub fn encode_signed(enc: &mut RangeEncoder, m: &mut MagnitudeModel, value: i64) {
    encode_magnitude(enc, m, value.unsigned_abs());
    if value != 0 {
        enc.encode_symbol(&mut m.sign, (value < 0) as usize);
    }
}

pub fn decode_signed(dec: &mut RangeDecoder, m: &mut MagnitudeModel) -> i64 {
    let mag = decode_magnitude(dec, m) as i64;
    if mag != 0 && dec.decode_symbol(&mut m.sign) == 1 {
        -mag
    } else {
        mag
    }
}
