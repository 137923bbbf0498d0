use alloc::vec::Vec;

use super::{Measure, Symbol};
use crate::num::{int, Rational};
use crate::{Error, Result};

/// Default bound on `|x| + |y|` for exhaustive traversal enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 14;

/// A monotone sequence of 1-based index pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Traversal {
    pub pairs: Vec<(usize, usize)>,
}

impl Traversal {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Checks the start, end and unit-step conditions against an `n x m` lattice.
pub fn validate_traversal(t: &Traversal, n: usize, m: usize) -> bool {
    check(t, n, m).is_ok()
}

fn check(t: &Traversal, n: usize, m: usize) -> Result<()> {
    match (t.pairs.first(), t.pairs.last()) {
        (Some(&(1, 1)), Some(&end)) if end == (n, m) => {}
        (Some(&(1, 1)), _) => return Err(Error::InvalidTraversal("does not end at the corner")),
        _ => return Err(Error::InvalidTraversal("does not start at (1,1)")),
    }
    for w in t.pairs.windows(2) {
        let (a, b) = (w[0], w[1]);
        let step = (b.0.wrapping_sub(a.0), b.1.wrapping_sub(a.1));
        if !matches!(step, (1, 0) | (0, 1) | (1, 1)) {
            return Err(Error::InvalidTraversal("non-unit or non-monotone step"));
        }
    }
    Ok(())
}

/// Cost of a traversal under the selected measure.
///
/// Edit measures expect the traversal on the padded `(|x|+1) x (|y|+1)`
/// lattice (see [`Measure::lattice`]).
pub fn traversal_cost(t: &Traversal, x: &[Symbol], y: &[Symbol], measure: &Measure) -> Result<Rational> {
    let (n, m) = measure.lattice(x.len(), y.len());
    if *measure == Measure::Dtw && (n == 0 || m == 0) {
        return Err(Error::EmptyCurve);
    }
    check(t, n, m)?;
    match measure.edit_costs() {
        None => Ok(t
            .pairs
            .iter()
            .map(|&(a, b)| int((x[a - 1] as i128 - y[b - 1] as i128).abs()))
            .sum()),
        Some(c) => Ok(t
            .pairs
            .windows(2)
            .map(|w| {
                let ((a, b), (a2, b2)) = (w[0], w[1]);
                match (a2 - a, b2 - b) {
                    (1, 0) => c.del_x,
                    (0, 1) => c.del_y,
                    _ if x[a - 1] == y[b - 1] => c.matching,
                    _ => c.subst,
                }
            })
            .sum()),
    }
}

/// Minimum over every traversal, found by explicit enumeration.
pub fn brute_force_min(x: &[Symbol], y: &[Symbol], measure: &Measure, bound: usize) -> Result<Rational> {
    let size = x.len() + y.len();
    if size > bound {
        return Err(Error::BudgetExceeded { needed: size as u128, budget: bound as u128 });
    }
    let (n, m) = measure.lattice(x.len(), y.len());
    if *measure == Measure::Dtw && (n == 0 || m == 0) {
        return Err(Error::EmptyCurve);
    }
    let mut e = Enumerator { x, y, measure, n, m, best: None };
    let start = match measure {
        Measure::Dtw => e.point(1, 1),
        _ => int(0),
    };
    e.walk(1, 1, start);
    Ok(e.best.expect("at least one traversal exists"))
}

struct Enumerator<'a> {
    x: &'a [Symbol],
    y: &'a [Symbol],
    measure: &'a Measure,
    n: usize,
    m: usize,
    best: Option<Rational>,
}

impl Enumerator<'_> {
    fn point(&self, a: usize, b: usize) -> Rational {
        int((self.x[a - 1] as i128 - self.y[b - 1] as i128).abs())
    }

    /// Cost of stepping from `(a, b)` to `(a2, b2)`.
    fn step(&self, a: usize, b: usize, a2: usize, b2: usize) -> Rational {
        match self.measure.edit_costs() {
            None => self.point(a2, b2),
            Some(c) => match (a2 - a, b2 - b) {
                (1, 0) => c.del_x,
                (0, 1) => c.del_y,
                _ if self.x[a - 1] == self.y[b - 1] => c.matching,
                _ => c.subst,
            },
        }
    }

    fn walk(&mut self, a: usize, b: usize, acc: Rational) {
        if (a, b) == (self.n, self.m) {
            if self.best.is_none_or(|v| acc < v) {
                self.best = Some(acc);
            }
            return;
        }
        for (da, db) in [(1, 0), (0, 1), (1, 1)] {
            let (a2, b2) = (a + da, b + db);
            if a2 <= self.n && b2 <= self.m {
                let c = self.step(a, b, a2, b2);
                self.walk(a2, b2, acc + c);
            }
        }
    }
}
