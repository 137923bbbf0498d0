use alloc::vec;
use alloc::vec::Vec;

use super::{CostScheme, IntCosts, Symbol, Traversal};
use crate::num::Rational;

/// Edit distance under integer costs, two rows of `O(min(|x|,|y|))` memory.
pub fn edit_int(x: &[Symbol], y: &[Symbol], c: &IntCosts) -> i64 {
    if y.len() > x.len() {
        return edit_int(y, x, &c.swapped());
    }
    let (dx, dy, cm, cs) = (c.del_x, c.del_y, c.matching, c.subst);
    let mut prev: Vec<i64> = (0..=y.len() as i64).map(|j| j * dy).collect();
    let mut cur = vec![0i64; y.len() + 1];
    for &a in x {
        cur[0] = prev[0] + dx;
        let mut left = cur[0];
        for ((out, (&diag, &up)), &b) in
            cur[1..].iter_mut().zip(prev.iter().zip(&prev[1..])).zip(y)
        {
            let sub = if a == b { cm } else { cs };
            let v = (diag + sub).min(up + dx).min(left + dy);
            *out = v;
            left = v;
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// Exact edit distance: integer DP over the common-denominator scaling.
pub fn edit_dp(x: &[Symbol], y: &[Symbol], costs: &CostScheme) -> Rational {
    let (ic, d) = costs.scaled();
    Rational::new(edit_int(x, y, &ic) as i128, d)
}

/// Full-table DP with traceback; returns the distance and one optimal traversal.
pub fn edit_traversal(x: &[Symbol], y: &[Symbol], costs: &CostScheme) -> (Rational, Traversal) {
    let (c, d) = costs.scaled();
    let (n, m) = (x.len(), y.len());
    let w = m + 1;
    let mut t = vec![0i64; (n + 1) * w];
    for j in 1..=m {
        t[j] = t[j - 1] + c.del_y;
    }
    for i in 1..=n {
        t[i * w] = t[(i - 1) * w] + c.del_x;
        for j in 1..=m {
            let sub = if x[i - 1] == y[j - 1] { c.matching } else { c.subst };
            t[i * w + j] = (t[(i - 1) * w + j - 1] + sub)
                .min(t[(i - 1) * w + j] + c.del_x)
                .min(t[i * w + j - 1] + c.del_y);
        }
    }
    let mut pairs = Vec::with_capacity(n + m + 1);
    let (mut i, mut j) = (n, m);
    pairs.push((i + 1, j + 1));
    while i > 0 || j > 0 {
        let here = t[i * w + j];
        if i > 0 && j > 0 {
            let sub = if x[i - 1] == y[j - 1] { c.matching } else { c.subst };
            if t[(i - 1) * w + j - 1] + sub == here {
                i -= 1;
                j -= 1;
                pairs.push((i + 1, j + 1));
                continue;
            }
        }
        if i > 0 && t[(i - 1) * w + j] + c.del_x == here {
            i -= 1;
        } else {
            j -= 1;
        }
        pairs.push((i + 1, j + 1));
    }
    pairs.reverse();
    (Rational::new(t[n * w + m] as i128, d), Traversal { pairs })
}
