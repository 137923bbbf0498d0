mod common;

use common::rng;
use proptest::prelude::*;
use rand::Rng;
use seqhard_core::edit_fast::{
    compress_alphabet, edit_distance_fast, edit_fast, edit_fast_with, normalized_table, to_positive_integer_costs,
    NextStrategy, NextStructure, INF,
};
use seqhard_core::measures::{edit_dp, edit_int, traversal_cost, CostScheme, IntCosts, Measure, Symbol, Traversal};
use seqhard_core::num::{int, ratio};

/// `D[i][j] = edit(x[..i], y[..j])`.
fn full_table(x: &[u32], y: &[u32], c: &IntCosts) -> Vec<Vec<i64>> {
    let mut d = vec![vec![0i64; y.len() + 1]; x.len() + 1];
    for i in 0..=x.len() {
        for j in 0..=y.len() {
            d[i][j] = match (i, j) {
                (0, 0) => 0,
                (0, _) => d[0][j - 1] + c.del_y,
                (_, 0) => d[i - 1][0] + c.del_x,
                _ => {
                    let diag = if x[i - 1] == y[j - 1] { c.matching } else { c.subst };
                    (d[i - 1][j] + c.del_x).min(d[i][j - 1] + c.del_y).min(d[i - 1][j - 1] + diag)
                }
            };
        }
    }
    d
}

/// Smallest `i` with normalized cost exactly `k`, straight from the definition.
fn defined_entry(d: &[Vec<i64>], j: usize, k: i64, c: &IntCosts) -> usize {
    (0..d.len())
        .find(|&i| d[i][j] - c.del_x * (i as i64 - j as i64) == k)
        .unwrap_or(INF)
}

fn random_pair(r: &mut impl Rng, max_n: usize, max_m: usize, sigma: u32) -> (Vec<Symbol>, Vec<Symbol>) {
    let m = r.gen_range(0..=max_m);
    let n = r.gen_range(m..=max_n.max(m));
    let x = (0..n).map(|_| r.gen_range(0..sigma)).collect();
    let y = (0..m).map(|_| r.gen_range(0..sigma)).collect();
    (x, y)
}

#[test]
fn table_equals_definition_for_lcs_costs() {
    let c = IntCosts::new(2, 2, 2, 4);
    let mut r = rng(50);
    for _ in 0..50 {
        let (x, y) = random_pair(&mut r, 9, 6, 2);
        let d = full_table(&x, &y, &c);
        let t = normalized_table(&x, &y, 2, &c, NextStrategy::Auto);
        for j in 0..=y.len() {
            for k in 0..=t.bound as i64 {
                assert_eq!(t.get(j, k), defined_entry(&d, j, k, &c), "x={x:?} y={y:?} j={j} k={k}");
            }
        }
    }
}

#[test]
fn table_never_undercuts_reachable_prefixes() {
    let mut r = rng(51);
    let mut strict = 0;
    for _ in 0..300 {
        let c = IntCosts::new(r.gen_range(1..6), r.gen_range(1..6), r.gen_range(1..6), r.gen_range(1..6));
        let (x, y) = random_pair(&mut r, 9, 6, 3);
        let d = full_table(&x, &y, &c);
        let t = normalized_table(&x, &y, 3, &c, NextStrategy::Auto);
        for j in 0..=y.len() {
            for k in 0..=t.bound as i64 {
                let i = t.get(j, k);
                let defined = defined_entry(&d, j, k, &c);
                assert!(i <= defined);
                if i != INF {
                    assert!(d[i][j] - c.del_x * (i as i64 - j as i64) <= k);
                }
                strict += usize::from(i < defined);
            }
        }
        assert_eq!(edit_fast(&x, &y, &c) as i64, edit_int(&x, &y, &c));
    }
    // general schemes do reach smaller indices than the definition
    assert!(strict > 0);
}

#[test]
fn known_table_gap() {
    let c = IntCosts::new(4, 5, 1, 4);
    let (x, y) = ([0, 1, 0, 0], [0]);
    let t = normalized_table(&x, &y, 2, &c, NextStrategy::Auto);
    let d = full_table(&x, &y, &c);
    assert_eq!(t.get(1, 4), 2);
    assert_eq!(defined_entry(&d, 1, 4, &c), INF);
    assert_eq!(edit_fast(&x, &y, &c) as i64, edit_int(&x, &y, &c));
}

#[test]
fn random_agreement_with_dp() {
    let mut r = rng(52);
    for &sigma in &[2u32, 4, 26] {
        for _ in 0..40 {
            let (x, y) = random_pair(&mut r, 400, 60, sigma);
            let s = CostScheme::new(
                ratio(r.gen_range(-4..=4), r.gen_range(1..=3)),
                ratio(r.gen_range(-4..=4), r.gen_range(1..=3)),
                ratio(r.gen_range(-4..=4), r.gen_range(1..=3)),
                ratio(r.gen_range(-4..=4), r.gen_range(1..=3)),
            );
            assert_eq!(edit_distance_fast(&x, &y, &s), edit_dp(&x, &y, &s), "{s}");
        }
    }
}

#[test]
fn strategies_agree_on_wide_alphabets() {
    let mut r = rng(53);
    for _ in 0..20 {
        let (x, y) = random_pair(&mut r, 300, 40, 200);
        let c = IntCosts::new(3, 1, 2, 5);
        assert_eq!(edit_fast_with(&x, &y, &c, NextStrategy::Dense), edit_fast_with(&x, &y, &c, NextStrategy::Versioned));
    }
    let (x, _, sigma) = compress_alphabet(&(0..500).collect::<Vec<_>>(), &[]);
    assert!(NextStructure::build(&x, sigma, NextStrategy::Auto).is_versioned());
}

#[test]
fn examples() {
    let c = IntCosts::new(1, 1, 1, 1);
    assert_eq!(edit_fast(&[0, 1, 1, 0], &[], &c), 4);
    let lcs = to_positive_integer_costs(&CostScheme::lcs()).costs;
    let x: Vec<Symbol> = (0..30).map(|i| i % 2).collect();
    assert_eq!(edit_fast(&x, &x, &lcs), 60);
    assert_eq!(edit_distance_fast(&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 1], &CostScheme::lcs()), int(4));
}

fn random_traversal(n: usize, m: usize, choices: &[u8]) -> Traversal {
    let (mut a, mut b) = (1, 1);
    let mut pairs = vec![(1, 1)];
    let mut k = 0;
    while (a, b) != (n, m) {
        let pick = choices.get(k).copied().unwrap_or(2) % 3;
        k += 1;
        let (da, db) = match pick {
            0 if a < n => (1, 0),
            1 if b < m => (0, 1),
            _ if a < n && b < m => (1, 1),
            _ if a < n => (1, 0),
            _ => (0, 1),
        };
        a += da;
        b += db;
        pairs.push((a, b));
    }
    Traversal { pairs }
}

fn scheme() -> impl Strategy<Value = CostScheme> {
    let r = (-8i128..=8, 1i128..=4).prop_map(|(p, q)| ratio(p, q));
    (r.clone(), r.clone(), r.clone(), r).prop_map(|(a, b, c, d)| CostScheme::new(a, b, c, d))
}

proptest! {
    #[test]
    fn transform_is_affine_per_traversal(
        s in scheme(),
        x in prop::collection::vec(0u32..2, 0..12),
        y in prop::collection::vec(0u32..2, 0..12),
        choices in prop::collection::vec(any::<u8>(), 30),
    ) {
        let ic = to_positive_integer_costs(&s);
        let c = ic.costs;
        prop_assert!(c.del_x >= 1 && c.del_y >= 1 && c.matching >= 1 && c.subst >= 1);
        let t = random_traversal(x.len() + 1, y.len() + 1, &choices);
        let orig = traversal_cost(&t, &x, &y, &Measure::Edit(s)).unwrap();
        let scaled = traversal_cost(&t, &x, &y, &Measure::Edit(c.to_scheme())).unwrap();
        prop_assert_eq!(scaled, ic.from_original(orig, x.len(), y.len()));
    }

    #[test]
    fn fast_equals_dp(
        s in scheme(),
        x in prop::collection::vec(0u32..4, 0..80),
        y in prop::collection::vec(0u32..4, 0..80),
    ) {
        prop_assert_eq!(edit_distance_fast(&x, &y, &s), edit_dp(&x, &y, &s));
    }
}
