//! Sequences, cost schemes, traversals and the quadratic DPs for every measure.

mod cost;
mod dtw;
mod edit;
mod lcs;
mod traversal;

pub use cost::{CostScheme, IntCosts};
pub use dtw::{dtw_dp, dtw_traversal};
pub use edit::{edit_dp, edit_int, edit_traversal};
pub use lcs::{delta_lcs, lcs_length, lps_length, lts_length};
pub use traversal::{
    brute_force_min, traversal_cost, validate_traversal, Traversal, DEFAULT_ENUMERATION_BOUND,
};

use crate::num::{int, Rational};
use crate::Result;

/// A string over small non-negative integer symbols.
pub type Symbol = u32;

/// Selects the measure a traversal is scored under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Edit(CostScheme),
    /// Unmatched-symbol count, i.e. edit distance with costs `(1,1,0,2)`.
    Lcs,
    Dtw,
}

impl Measure {
    /// Lattice corner a traversal must end at.
    ///
    /// Edit traversals run over prefix lengths, so `(1,1)` stands for the two
    /// empty prefixes and the end is `(|x|+1, |y|+1)`. DTW traversals pair
    /// entries directly and end at `(|x|, |y|)`.
    pub fn lattice(&self, n: usize, m: usize) -> (usize, usize) {
        match self {
            Measure::Dtw => (n, m),
            _ => (n + 1, m + 1),
        }
    }

    /// Exact distance of `x` and `y` by the quadratic DP.
    pub fn distance(&self, x: &[Symbol], y: &[Symbol]) -> Result<Rational> {
        match self {
            Measure::Edit(c) => Ok(edit_dp(x, y, c)),
            Measure::Lcs => Ok(int(delta_lcs(x, y) as i128)),
            Measure::Dtw => dtw_dp(x, y).map(|v| int(v as i128)),
        }
    }

    pub(crate) fn edit_costs(&self) -> Option<CostScheme> {
        match self {
            Measure::Edit(c) => Some(*c),
            Measure::Lcs => Some(CostScheme::lcs()),
            Measure::Dtw => None,
        }
    }
}

/// Number of ones, or the entry sum for curves.
pub fn entry_sum(s: &[Symbol]) -> u64 {
    s.iter().map(|&v| v as u64).sum()
}

pub fn is_binary(s: &[Symbol]) -> bool {
    s.iter().all(|&v| v <= 1)
}
