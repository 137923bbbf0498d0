//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqhard_core::measures::{CostScheme, Symbol};
use seqhard_core::num::ratio;
use seqhard_core::ov::{BitVector, CnfFormula, OvInstance};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform symbols from `0..sigma`.
pub fn random_string(r: &mut Rng8, len: usize, sigma: u32) -> Vec<Symbol> {
    (0..len).map(|_| r.gen_range(0..sigma)).collect()
}

/// Length uniform in `0..=max_len`.
pub fn random_upto(r: &mut Rng8, max_len: usize, sigma: u32) -> Vec<Symbol> {
    let len = r.gen_range(0..=max_len);
    random_string(r, len, sigma)
}

/// `count` shuffles of one random sequence over `0..=max_value`, so all share a type.
pub fn same_type(r: &mut Rng8, count: usize, len: usize, max_value: u32) -> Vec<Vec<Symbol>> {
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
    all_strings(len, 2)
}

/// All strings over `0..sigma` of length `len`, in lexicographic order.
pub fn all_strings(len: usize, sigma: u32) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..sigma).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// All bit vectors of dimension `d`.
pub fn all_vectors(d: usize) -> Vec<BitVector> {
    all_binary(d)
        .iter()
        .map(|s| BitVector::from_bits(&s.iter().map(|&b| b == 1).collect::<Vec<_>>()))
        .collect()
}

/// Entries `p/q` with `q <= max_denominator` and `|p/q| <= bound`.
pub fn random_scheme(r: &mut Rng8, bound: i128, max_denominator: i128) -> CostScheme {
    let mut v = || {
        let q = r.gen_range(1..=max_denominator);
        ratio(r.gen_range(-bound * q..=bound * q), q)
    };
    CostScheme::new(v(), v(), v(), v())
}

pub fn random_3cnf(r: &mut Rng8, vars: usize, clauses: usize) -> CnfFormula {
    let cls = (0..clauses)
        .map(|_| {
            (0..3)
                .map(|_| {
                    let v = r.gen_range(1..=vars as i32);
                    if r.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(vars, cls).expect("literals are in range")
}

/// Every vector all ones, so no pair is orthogonal.
pub fn all_ones(n: usize, m: usize, d: usize) -> OvInstance {
    let one = BitVector::from_bits(&vec![true; d]);
    OvInstance::new(vec![one.clone(); n], vec![one; m]).expect("equal dimensions")
}
