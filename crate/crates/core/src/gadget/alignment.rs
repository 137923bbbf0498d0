use alloc::vec;
use alloc::vec::Vec;

use crate::num::{int, Rational};
use crate::{Error, Result};

/// Pairwise distances `dist(x_i, y_j)` and their maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    m: usize,
    values: Vec<Rational>,
    max: Rational,
}

impl DistanceMatrix {
    pub fn compute<T, F>(xs: &[T], ys: &[T], mut dist: F) -> Result<Self>
    where
        F: FnMut(&T, &T) -> Result<Rational>,
    {
        let mut values = Vec::with_capacity(xs.len() * ys.len());
        for x in xs {
            for y in ys {
                values.push(dist(x, y)?);
            }
        }
        Ok(Self::from_values(xs.len(), ys.len(), values))
    }

    /// Row-major `n x m` values.
    pub fn from_values(n: usize, m: usize, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), n * m, "expected {n} x {m} distances");
        let max = values.iter().copied().max().unwrap_or(int(0));
        Self { n, m, values, max }
    }

    /// `dist(x_i, y_j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.values[(i - 1) * self.m + (j - 1)]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max(&self) -> Rational {
        self.max
    }
}

/// Pairs `(i, j)`, 1-based, strictly increasing in both coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialAlignment {
    pub pairs: Vec<(usize, usize)>,
}

impl PartialAlignment {
    /// `{(delta+1, 1), ..., (delta+m, m)}`.
    pub fn structured(delta: usize, m: usize) -> Self {
        Self { pairs: (1..=m).map(|j| (delta + j, j)).collect() }
    }

    pub fn is_valid(&self, n: usize, m: usize) -> bool {
        let in_range = self.pairs.iter().all(|&(i, j)| (1..=n).contains(&i) && (1..=m).contains(&j));
        let increasing = self.pairs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        in_range && increasing
    }
}

/// Aligned distances plus the maximum distance for every unaligned `j`.
pub fn alignment_cost(a: &PartialAlignment, d: &DistanceMatrix) -> Result<Rational> {
    if !a.is_valid(d.n, d.m) {
        return Err(Error::InvalidAlignment);
    }
    let aligned: Rational = a.pairs.iter().map(|&(i, j)| d.get(i, j)).sum();
    Ok(aligned + d.max * int((d.m - a.pairs.len()) as i128))
}

/// Minimum cost over all partial alignments.
pub fn min_over_partial(d: &DistanceMatrix) -> Rational {
    // f[i][j]: best cost of y_1..y_j using x_1..x_i
    let penalty = d.max;
    let mut prev: Vec<Rational> = (0..=d.m).map(|j| penalty * int(j as i128)).collect();
    let mut cur = vec![int(0); d.m + 1];
    for i in 1..=d.n {
        cur[0] = int(0);
        for j in 1..=d.m {
            cur[j] = prev[j].min(cur[j - 1] + penalty).min(prev[j - 1] + d.get(i, j));
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[d.m]
}

/// Largest `n` and `m` accepted by [`min_over_partial_enumerate`].
pub const ALIGNMENT_ENUMERATION_LIMIT: usize = 6;

/// [`min_over_partial`] by listing every partial alignment.
pub fn min_over_partial_enumerate(d: &DistanceMatrix) -> Result<Rational> {
    let limit = ALIGNMENT_ENUMERATION_LIMIT;
    if d.n > limit || d.m > limit {
        return Err(Error::BudgetExceeded { needed: d.n.max(d.m) as u128, budget: limit as u128 });
    }
    let mut best = None;
    let mut current = PartialAlignment::default();
    enumerate(d, 1, 1, &mut current, &mut best)?;
    Ok(best.expect("the empty alignment is always listed"))
}

fn enumerate(
    d: &DistanceMatrix,
    from_i: usize,
    from_j: usize,
    current: &mut PartialAlignment,
    best: &mut Option<Rational>,
) -> Result<()> {
    let cost = alignment_cost(current, d)?;
    if best.is_none_or(|b| cost < b) {
        *best = Some(cost);
    }
    for i in from_i..=d.n {
        for j in from_j..=d.m {
            current.pairs.push((i, j));
            enumerate(d, i + 1, j + 1, current, best)?;
            current.pairs.pop();
        }
    }
    Ok(())
}

/// Minimum over structured alignments and the smallest optimal shift.
pub fn min_over_structured(d: &DistanceMatrix) -> (Rational, usize) {
    assert!(d.m <= d.n, "structured alignments need m <= n");
    let mut best = (int(0), 0);
    for delta in 0..=d.n - d.m {
        let cost: Rational = (1..=d.m).map(|j| d.get(delta + j, j)).sum();
        if delta == 0 || cost < best.0 {
            best = (cost, delta);
        }
    }
    best
}
