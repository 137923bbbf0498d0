//! Classification of edit cost schemes into constant-time cases and the
//! one-parameter family `Edit(1,1,0,c)` with `0 < c <= 2`.

use alloc::vec::Vec;

use crate::measures::{is_binary, CostScheme, Symbol};
use crate::num::{int, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariantKind {
    TrivialMatchEqualsSubst,
    TrivialDeletionsDominate,
    Hard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariantClassification {
    pub kind: VariantKind,
    /// `min{2, alpha * (subst - match)}` after the flip. Hard only.
    pub canonical_c_subst: Option<Rational>,
    /// `2 / (del_x + del_y - match)` after the flip. Hard only.
    pub alpha: Option<Rational>,
    /// Matching and substitution swap roles when `y` is complemented.
    pub flip_y: bool,
    /// The unclamped value exceeded 2. Optima still map exactly, single
    /// traversals do not.
    pub clamped: bool,
}

impl VariantClassification {
    pub fn is_trivial(&self) -> bool {
        self.kind != VariantKind::Hard
    }
}

fn deletions_dominate(c: &CostScheme) -> bool {
    c.del_x + c.del_y <= c.matching.min(c.subst)
}

pub fn classify(costs: &CostScheme) -> VariantClassification {
    let trivial = |kind| VariantClassification {
        kind,
        canonical_c_subst: None,
        alpha: None,
        flip_y: false,
        clamped: false,
    };
    if costs.matching == costs.subst {
        return trivial(VariantKind::TrivialMatchEqualsSubst);
    }
    if deletions_dominate(costs) {
        return trivial(VariantKind::TrivialDeletionsDominate);
    }
    let flip_y = costs.subst < costs.matching;
    let (cm, cs) = if flip_y { (costs.subst, costs.matching) } else { (costs.matching, costs.subst) };
    let alpha = int(2) / (costs.del_x + costs.del_y - cm);
    let raw = alpha * (cs - cm);
    VariantClassification {
        kind: VariantKind::Hard,
        canonical_c_subst: Some(raw.min(int(2))),
        alpha: Some(alpha),
        flip_y,
        clamped: raw > int(2),
    }
}

fn deletions_value(c: &CostScheme, n: usize, m: usize) -> Rational {
    c.del_x * int(n as i128) + c.del_y * int(m as i128)
}

fn match_equals_subst_value(c: &CostScheme, n: usize, m: usize) -> Rational {
    let (long, short, del_long) =
        if n >= m { (n, m, c.del_x) } else { (m, n, c.del_y) };
    let pair = c.matching.min(c.del_x + c.del_y);
    pair * int(short as i128) + del_long * int((long - short) as i128)
}

/// Closed-form optimum of a trivial scheme for lengths `n` and `m`.
pub fn trivial_value(costs: &CostScheme, n: usize, m: usize) -> Result<Rational> {
    let equal = costs.matching == costs.subst;
    let dominate = deletions_dominate(costs);
    match (equal, dominate) {
        (true, true) => {
            let a = match_equals_subst_value(costs, n, m);
            assert_eq!(a, deletions_value(costs, n, m), "trivial closed forms disagree");
            Ok(a)
        }
        (true, false) => Ok(match_equals_subst_value(costs, n, m)),
        (false, true) => Ok(deletions_value(costs, n, m)),
        (false, false) => Err(Error::NotTrivial),
    }
}

/// `target = alpha * source + offset`, for one fixed pair of lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub alpha: Rational,
    pub offset: Rational,
}

impl AffineMap {
    pub fn apply(&self, source: Rational) -> Rational {
        self.alpha * source + self.offset
    }

    pub fn invert(&self, target: Rational) -> Rational {
        (target - self.offset) / self.alpha
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub c_subst: Rational,
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
    /// Maps the original distance of `(x, y)` to `Edit(c_subst)` of the
    /// rewritten pair.
    pub map: AffineMap,
}

/// Rewrites a binary instance of a hard scheme as an `Edit(c)` instance.
pub fn canonicalize(costs: &CostScheme, x: &[Symbol], y: &[Symbol]) -> Result<Canonical> {
    let cls = classify(costs);
    if cls.kind != VariantKind::Hard {
        return Err(Error::NotHard);
    }
    if !is_binary(x) || !is_binary(y) {
        return Err(Error::NonBinaryAlphabet);
    }
    let alpha = cls.alpha.unwrap();
    let cm = if cls.flip_y { costs.subst } else { costs.matching };
    let (long, short, del_long) =
        if x.len() >= y.len() { (x.len(), y.len(), costs.del_x) } else { (y.len(), x.len(), costs.del_y) };
    let gap = int((long - short) as i128);
    let offset = -alpha * int(short as i128) * cm + gap * (int(1) - alpha * del_long);
    let y = if cls.flip_y { y.iter().map(|&b| 1 - b).collect() } else { y.to_vec() };
    Ok(Canonical {
        c_subst: cls.canonical_c_subst.unwrap(),
        x: x.to_vec(),
        y,
        map: AffineMap { alpha, offset },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::edit_dp;
    use crate::num::ratio;

    #[test]
    fn classify_examples() {
        let lev = classify(&CostScheme::levenshtein());
        assert_eq!(lev.kind, VariantKind::Hard);
        assert_eq!((lev.alpha, lev.canonical_c_subst, lev.flip_y), (Some(int(1)), Some(int(1)), false));
        assert_eq!(classify(&CostScheme::lcs()).canonical_c_subst, Some(int(2)));
        assert_eq!(classify(&CostScheme::from_ints(1, 1, 3, 3)).kind, VariantKind::TrivialMatchEqualsSubst);
        assert_eq!(classify(&CostScheme::from_ints(1, 1, 3, 4)).kind, VariantKind::TrivialDeletionsDominate);
        let f = classify(&CostScheme::from_ints(1, 1, 1, 0));
        assert!(f.flip_y);
        assert_eq!(f.canonical_c_subst, Some(int(1)));
        let c = classify(&CostScheme::from_ints(1, 1, 0, 5));
        assert!(c.clamped);
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_value(&CostScheme::from_ints(1, 1, 3, 3), 4, 2), Ok(int(6)));
        assert_eq!(trivial_value(&CostScheme::from_ints(1, 1, 2, 2), 3, 3), Ok(int(6)));
        assert_eq!(trivial_value(&CostScheme::from_ints(1, 1, 2, 2), 0, 0), Ok(int(0)));
        assert_eq!(trivial_value(&CostScheme::levenshtein(), 3, 3), Err(Error::NotTrivial));
    }

    #[test]
    fn canonical_scheme_is_identity() {
        let s = CostScheme::canonical(ratio(3, 4));
        let k = canonicalize(&s, &[0, 1, 1], &[1, 0]).unwrap();
        assert_eq!(k.c_subst, ratio(3, 4));
        assert_eq!(k.map, AffineMap { alpha: int(1), offset: int(0) });
        assert_eq!(k.y, [1, 0]);
    }

    #[test]
    fn flipped_identity() {
        let s = CostScheme::new(int(2), ratio(1, 2), int(1), ratio(-1, 3));
        let x = [0, 1, 1, 0, 1, 0];
        let y = [1, 1, 0];
        for (a, b) in [(&x[..], &y[..]), (&y[..], &x[..])] {
            let k = canonicalize(&s, a, b).unwrap();
            assert!(k.y.iter().zip(b).all(|(p, q)| p + q == 1));
            let got = edit_dp(&k.x, &k.y, &CostScheme::canonical(k.c_subst));
            assert_eq!(got, k.map.apply(edit_dp(a, b, &s)));
            assert_eq!(k.map.invert(got), edit_dp(a, b, &s));
        }
    }

    #[test]
    fn rejects() {
        assert_eq!(canonicalize(&CostScheme::from_ints(1, 1, 2, 2), &[0], &[1]), Err(Error::NotHard));
        assert_eq!(canonicalize(&CostScheme::levenshtein(), &[2], &[1]), Err(Error::NonBinaryAlphabet));
    }
}
