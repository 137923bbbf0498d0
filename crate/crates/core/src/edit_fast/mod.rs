//! The `O((n + m²) log |Σ|)` edit-distance algorithm for positive integer
//! costs, and the affine transform that brings rational costs there.

mod next;
mod persistent;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub use next::{NextStrategy, NextStructure, DENSE_ALPHABET_LIMIT, INF};
pub use persistent::{PersistentArray, Version};

use crate::measures::{CostScheme, IntCosts, Symbol};
use crate::num::{ceil, common_denominator, int, scale, Rational};

/// Positive integer costs plus the affine map back to the source scheme.
///
/// Every traversal of strings of lengths `n, m` satisfies
/// `integer_cost = scale * original_cost + shift * (n + m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegerCostScheme {
    pub costs: IntCosts,
    pub scale: i128,
    pub shift: i128,
}

impl IntegerCostScheme {
    pub fn to_original(&self, value: i128, n: usize, m: usize) -> Rational {
        Rational::new(value - self.shift * (n + m) as i128, self.scale)
    }

    pub fn from_original(&self, value: Rational, n: usize, m: usize) -> Rational {
        value * int(self.scale) + int(self.shift * (n + m) as i128)
    }
}

/// Scales by the common denominator `D` and adds the smallest shift `M`
/// that makes all four costs at least one.
pub fn to_positive_integer_costs(costs: &CostScheme) -> IntegerCostScheme {
    let d = common_denominator(&costs.as_array());
    let [dx, dy, cm, cs] = costs.as_array().map(|v| scale(v, d));
    let shift = [1 - dx, 1 - dy, ceil(Rational::new(1 - cm, 2)), ceil(Rational::new(1 - cs, 2)), 0]
        .into_iter()
        .max()
        .unwrap();
    let to_i64 = |v: i128| i64::try_from(v).expect("integer cost fits in i64");
    IntegerCostScheme {
        costs: IntCosts::new(
            to_i64(dx + shift),
            to_i64(dy + shift),
            to_i64(cm + 2 * shift),
            to_i64(cs + 2 * shift),
        ),
        scale: d,
        shift,
    }
}

/// Renames symbols of both strings to `0..sigma` preserving their order.
pub fn compress_alphabet(x: &[Symbol], y: &[Symbol]) -> (Vec<u32>, Vec<u32>, usize) {
    let mut ranks: BTreeMap<Symbol, u32> = x.iter().chain(y).map(|&s| (s, 0)).collect();
    for (r, v) in ranks.values_mut().enumerate() {
        *v = r as u32;
    }
    let map = |s: &[Symbol]| s.iter().map(|c| ranks[c]).collect::<Vec<_>>();
    (map(x), map(y), ranks.len())
}

/// The table `I[j, k]`: smallest prefix length `i` of `x` whose normalized
/// cost against `y[1..j]` is `k`, or [`INF`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTable {
    pub bound: usize,
    rows: Vec<Vec<usize>>,
}

impl NormalizedTable {
    /// `I[j, k]`, with every `k` outside `0..=bound` reading as [`INF`].
    pub fn get(&self, j: usize, k: i64) -> usize {
        if k < 0 || k as usize > self.bound {
            INF
        } else {
            self.rows[j][k as usize]
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }
}

fn check_preconditions(x: &[u32], y: &[u32], c: &IntCosts) {
    assert!(x.len() >= y.len(), "edit_fast needs |x| >= |y|");
    assert!(
        c.del_x >= 1 && c.del_y >= 1 && c.matching >= 1 && c.subst >= 1,
        "edit_fast needs positive integer costs"
    );
}

fn step_row(prev: &[usize], cur: &mut [usize], sym: u32, nx: &NextStructure, c: &IntCosts) {
    let del = (c.del_x + c.del_y) as usize;
    let (cm, cs) = (c.matching as usize, c.subst as usize);
    for (k, out) in cur.iter_mut().enumerate() {
        let mut best = if k >= del { prev[k - del] } else { INF };
        if k >= cm && prev[k - cm] != INF {
            best = best.min(nx.next_eq(prev[k - cm], sym));
        }
        if k >= cs && prev[k - cs] != INF {
            best = best.min(nx.next_neq(prev[k - cs], sym));
        }
        *out = best;
    }
}

fn table_bound(m: usize, c: &IntCosts) -> usize {
    (c.del_x + c.del_y) as usize * m
}

/// The full table, for inspection. Symbols must already lie in `0..sigma`.
pub fn normalized_table(
    x: &[u32],
    y: &[u32],
    sigma: usize,
    c: &IntCosts,
    strategy: NextStrategy,
) -> NormalizedTable {
    check_preconditions(x, y, c);
    let nx = NextStructure::build(x, sigma, strategy);
    let bound = table_bound(y.len(), c);
    let mut first = vec![INF; bound + 1];
    first[0] = 0;
    let mut rows = vec![first];
    for &sym in y {
        let mut cur = vec![INF; bound + 1];
        step_row(rows.last().unwrap(), &mut cur, sym, &nx, c);
        rows.push(cur);
    }
    NormalizedTable { bound, rows }
}

/// Edit distance of `x` and `y` under positive integer costs, `|x| >= |y|`.
pub fn edit_fast(x: &[Symbol], y: &[Symbol], c: &IntCosts) -> u64 {
    edit_fast_with(x, y, c, NextStrategy::Auto)
}

pub fn edit_fast_with(x: &[Symbol], y: &[Symbol], c: &IntCosts, strategy: NextStrategy) -> u64 {
    check_preconditions(x, y, c);
    let (x, y, sigma) = compress_alphabet(x, y);
    let nx = NextStructure::build(&x, sigma, strategy);
    let bound = table_bound(y.len(), c);
    let mut prev = vec![INF; bound + 1];
    prev[0] = 0;
    let mut cur = vec![INF; bound + 1];
    for &sym in &y {
        step_row(&prev, &mut cur, sym, &nx, c);
        core::mem::swap(&mut prev, &mut cur);
    }
    let k = prev.iter().position(|&i| i != INF).expect("I[m, k] is finite for some k");
    c.del_x as u64 * (x.len() - y.len()) as u64 + k as u64
}

/// Exact edit distance under any rational scheme via the fast algorithm.
///
/// Orders the strings, applies [`to_positive_integer_costs`], runs
/// [`edit_fast`], and maps the result back.
pub fn edit_distance_fast(x: &[Symbol], y: &[Symbol], costs: &CostScheme) -> Rational {
    let (x, y, costs) = if x.len() >= y.len() { (x, y, *costs) } else { (y, x, costs.swapped()) };
    let ic = to_positive_integer_costs(&costs);
    let v = edit_fast(x, y, &ic.costs);
    ic.to_original(v as i128, x.len(), y.len())
}
