#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqhard_core::measures::Symbol;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bits(s: &str) -> Vec<Symbol> {
    s.bytes().map(|b| (b - b'0') as Symbol).collect()
}

pub fn random_string(r: &mut ChaCha8Rng, len: usize, sigma: u32) -> Vec<Symbol> {
    (0..len).map(|_| r.gen_range(0..sigma)).collect()
}

/// `count` random permutations of one random sequence, so all share a type.
pub fn same_type(r: &mut ChaCha8Rng, count: usize, len: usize, max_value: u32) -> Vec<Vec<Symbol>> {
    let base = random_string(r, len, max_value + 1);
    (0..count)
        .map(|_| {
            let mut s = base.clone();
            s.shuffle(r);
            s
        })
        .collect()
}

/// All binary strings of length `len`.
pub fn all_binary(len: usize) -> Vec<Vec<Symbol>> {
    (0u32..1 << len).map(|mask| (0..len).map(|i| mask >> i & 1).collect()).collect()
}
