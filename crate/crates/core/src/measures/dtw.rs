use alloc::vec;
use alloc::vec::Vec;

use super::{Symbol, Traversal};
use crate::{Error, Result};

#[inline]
fn dist(a: Symbol, b: Symbol) -> u64 {
    (a as i64 - b as i64).unsigned_abs()
}

/// DTW on one-dimensional curves with `|a - b|` as the point distance.
pub fn dtw_dp(x: &[Symbol], y: &[Symbol]) -> Result<u64> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyCurve);
    }
    let (x, y) = if y.len() > x.len() { (y, x) } else { (x, y) };
    let peak = x.iter().chain(y).copied().max().unwrap_or(0) as u64;
    if peak.saturating_mul((x.len() + y.len()) as u64) < (u32::MAX / 4) as u64 {
        Ok(dtw_rows::<u32>(x, y))
    } else {
        Ok(dtw_rows::<u64>(x, y))
    }
}

trait Cell: Copy + Ord + core::ops::Add<Output = Self> {
    const MAX: Self;
    fn from_dist(d: u64) -> Self;
    fn widen(self) -> u64;
}

impl Cell for u32 {
    const MAX: Self = u32::MAX / 2;
    fn from_dist(d: u64) -> Self {
        d as u32
    }
    fn widen(self) -> u64 {
        self as u64
    }
}

impl Cell for u64 {
    const MAX: Self = u64::MAX / 2;
    fn from_dist(d: u64) -> Self {
        d
    }
    fn widen(self) -> u64 {
        self
    }
}

fn dtw_rows<T: Cell>(x: &[Symbol], y: &[Symbol]) -> u64 {
    let m = y.len();
    // Index 0 is a sentinel column so the inner loop needs no special case.
    let mut prev = vec![T::MAX; m + 1];
    let mut cur = vec![T::MAX; m + 1];
    let mut acc = T::from_dist(0);
    for (j, &b) in y.iter().enumerate() {
        acc = acc + T::from_dist(dist(x[0], b));
        prev[j + 1] = acc;
    }
    for &a in &x[1..] {
        let mut left = T::MAX;
        for ((out, (&diag, &up)), &b) in
            cur[1..].iter_mut().zip(prev.iter().zip(&prev[1..])).zip(y)
        {
            let v = T::from_dist(dist(a, b)) + diag.min(up).min(left);
            *out = v;
            left = v;
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[m].widen()
}

/// Full-table DTW with traceback; returns the distance and one optimal traversal.
pub fn dtw_traversal(x: &[Symbol], y: &[Symbol]) -> Result<(u64, Traversal)> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyCurve);
    }
    let (n, m) = (x.len(), y.len());
    let mut t = vec![0u64; n * m];
    for i in 0..n {
        for j in 0..m {
            let best = match (i, j) {
                (0, 0) => 0,
                (0, _) => t[j - 1],
                (_, 0) => t[(i - 1) * m],
                _ => t[(i - 1) * m + j - 1].min(t[(i - 1) * m + j]).min(t[i * m + j - 1]),
            };
            t[i * m + j] = best + dist(x[i], y[j]);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n + m);
    let (mut i, mut j) = (n - 1, m - 1);
    pairs.push((i + 1, j + 1));
    while i > 0 || j > 0 {
        let rest = t[i * m + j] - dist(x[i], y[j]);
        if i > 0 && j > 0 && t[(i - 1) * m + j - 1] == rest {
            i -= 1;
            j -= 1;
        } else if i > 0 && t[(i - 1) * m + j] == rest {
            i -= 1;
        } else {
            j -= 1;
        }
        pairs.push((i + 1, j + 1));
    }
    pairs.reverse();
    Ok((t[n * m - 1], Traversal { pairs }))
}
