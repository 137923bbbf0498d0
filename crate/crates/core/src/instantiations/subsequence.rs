use alloc::vec::Vec;

use crate::measures::Symbol;

use super::guarded::block;

/// `z = x 0^k 1^k 0^k rev(y)` with `k = 2(|x| + |y| + 1)`, so that
/// `LPS(z) = 3k + 2 LCS(x, y)`.
pub fn lps_from_lcs(x: &[Symbol], y: &[Symbol]) -> (Vec<Symbol>, usize) {
    let k = 2 * (x.len() + y.len() + 1);
    let mut z = Vec::with_capacity(x.len() + y.len() + 3 * k);
    z.extend_from_slice(x);
    block(0, k, &mut z);
    block(1, k, &mut z);
    block(0, k, &mut z);
    z.extend(y.iter().rev());
    (z, k)
}

/// `z = 0^k x 1^k 0^k y 1^k` with `k = |x| + |y|`, so that
/// `LTS(z) = 4k + 2 LCS(x, y)`.
pub fn lts_from_lcs(x: &[Symbol], y: &[Symbol]) -> (Vec<Symbol>, usize) {
    let k = x.len() + y.len();
    let mut z = Vec::with_capacity(2 * k + 4 * k);
    block(0, k, &mut z);
    z.extend_from_slice(x);
    block(1, k, &mut z);
    block(0, k, &mut z);
    z.extend_from_slice(y);
    block(1, k, &mut z);
    (z, k)
}
