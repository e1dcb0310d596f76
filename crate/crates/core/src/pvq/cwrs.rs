//! Enumeration of the pyramid codebook: all y in Z^n with L1 norm k,
//! ranked lexicographically with per-component value order
//! 0, +1, -1, +2, -2, ...

use num_bigint::BigUint;
use std::cell::RefCell;

thread_local! {
    /// Memoized V(n, k) table, grown on demand.
    static VTAB: RefCell<Vec<Vec<BigUint>>> = const { RefCell::new(Vec::new()) };
}

/// Number of integer vectors of length `n` with L1 norm exactly `k`.
pub fn codebook_size(n: usize, k: usize) -> BigUint {
    VTAB.with(|tab| {
        let mut tab = tab.borrow_mut();
        if tab.len() <= n || tab.first().map_or(0, |r| r.len()) <= k {
            let rows = tab.len().max(n + 1);
            let cols = tab.first().map_or(0, |r| r.len()).max(k + 1);
            let mut t = vec![vec![BigUint::ZERO; cols]; rows];
            for row in t.iter_mut() {
                row[0] = BigUint::from(1u32);
            }
            for i in 1..rows {
                for j in 1..cols {
                    t[i][j] = &t[i - 1][j] + &t[i][j - 1] + &t[i - 1][j - 1];
                }
            }
            *tab = t;
        }
        tab[n][k].clone()
    })
}

/// Rank of `y` within the codebook V(len(y), sum|y|).
pub fn rank(y: &[i32]) -> BigUint {
    let mut k: usize = y.iter().map(|v| v.unsigned_abs() as usize).sum();
    let mut i = BigUint::ZERO;
    for (j, &yj) in y.iter().enumerate() {
        if k == 0 {
            break;
        }
        let rest = y.len() - j - 1;
        let mag = yj.unsigned_abs() as usize;
        if mag != 0 {
            // Everything with y_j = 0 precedes.
            i += codebook_size(rest, k);
            // Then +-1, +-2, ... up to mag-1.
            for t in 1..mag {
                i += codebook_size(rest, k - t) << 1;
            }
            // +mag precedes -mag.
            if yj < 0 {
                i += codebook_size(rest, k - mag);
            }
            k -= mag;
        }
    }
    i
}

/// Inverse of `rank` for the codebook with dimensions (n, k).
pub fn unrank(n: usize, k: usize, index: &BigUint) -> Vec<i32> {
    debug_assert!(*index < codebook_size(n, k));
    let mut idx = index.clone();
    let mut k = k;
    let mut y = vec![0i32; n];
    for j in 0..n {
        if k == 0 {
            break;
        }
        let rest = n - j - 1;
        let zero = codebook_size(rest, k);
        if idx < zero {
            continue;
        }
        idx -= zero;
        let mut mag = 1usize;
        loop {
            let block = codebook_size(rest, k - mag);
            if idx < block {
                y[j] = mag as i32;
                break;
            }
            idx -= &block;
            if idx < block {
                y[j] = -(mag as i32);
                break;
            }
            idx -= block;
            mag += 1;
        }
        k -= mag;
    }
    y
}
