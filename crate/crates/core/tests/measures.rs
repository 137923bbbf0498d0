mod common;

use common::{all_binary, bits};
use proptest::prelude::*;
use seqhard_core::measures::{
    brute_force_min, delta_lcs, dtw_dp, dtw_traversal, edit_dp, edit_int, edit_traversal, lcs_length,
    lps_length, lts_length, traversal_cost, validate_traversal, CostScheme, Measure, Symbol,
    DEFAULT_ENUMERATION_BOUND,
};
use seqhard_core::num::{int, ratio};

fn schemes() -> [CostScheme; 4] {
    [
        CostScheme::lcs(),
        CostScheme::levenshtein(),
        CostScheme::from_ints(2, 2, -1, 1),
        CostScheme::new(int(1), int(2), int(0), ratio(3, 2)),
    ]
}

#[test]
fn edit_matches_enumeration_up_to_length_three() {
    let strings: Vec<_> = (0..=3).flat_map(all_binary).collect();
    for s in schemes() {
        for x in &strings {
            for y in &strings {
                let want = brute_force_min(x, y, &Measure::Edit(s), DEFAULT_ENUMERATION_BOUND).unwrap();
                assert_eq!(edit_dp(x, y, &s), want, "{x:?} {y:?} {s}");
            }
        }
    }
}

#[test]
fn lcs_measure_agrees_with_edit_scheme() {
    let x = bits("11100");
    let y = bits("00111");
    assert_eq!(lcs_length(&x, &y), 3);
    assert_eq!(delta_lcs(&x, &y), 4);
    assert_eq!(Measure::Lcs.distance(&x, &y).unwrap(), edit_dp(&x, &y, &CostScheme::lcs()));
}

#[test]
fn dtw_examples() {
    assert_eq!(dtw_dp(&[0, 2], &[2]), Ok(2));
    assert_eq!(dtw_dp(&[3, 1, 4], &[3, 1, 4]), Ok(0));
    assert!(dtw_dp(&[], &[1]).is_err());
    assert_eq!(brute_force_min(&[0, 2], &[2], &Measure::Dtw, DEFAULT_ENUMERATION_BOUND), Ok(int(2)));
}

#[test]
fn enumeration_bound_is_enforced() {
    let x = vec![0; 10];
    assert!(brute_force_min(&x, &x, &Measure::Lcs, DEFAULT_ENUMERATION_BOUND).is_err());
}

#[test]
fn folklore_palindrome_identity_examples() {
    for s in ["", "0", "01", "110100", "0110", "10101"] {
        let x = bits(s);
        let rev: Vec<_> = x.iter().rev().copied().collect();
        assert_eq!(lps_length(&x), lcs_length(&x, &rev), "{s}");
    }
    assert_eq!(lts_length(&bits("110010")), 4);
}

fn small_binary(max: usize) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(0u32..2, 0..=max)
}

fn small_curve(max_len: usize, max_value: u32) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(0..=max_value, 1..=max_len)
}

fn scheme() -> impl Strategy<Value = CostScheme> {
    let r = (-6i128..=6, 1i128..=2).prop_map(|(p, q)| ratio(p, q));
    (r.clone(), r.clone(), r.clone(), r).prop_map(|(a, b, c, d)| CostScheme::new(a, b, c, d))
}

proptest! {
    #[test]
    fn edit_dp_is_the_traversal_minimum(x in small_binary(5), y in small_binary(5), s in scheme()) {
        let want = brute_force_min(&x, &y, &Measure::Edit(s), DEFAULT_ENUMERATION_BOUND).unwrap();
        prop_assert_eq!(edit_dp(&x, &y, &s), want);
    }

    #[test]
    fn dtw_dp_is_the_traversal_minimum(x in small_curve(5, 8), y in small_curve(5, 8)) {
        let want = brute_force_min(&x, &y, &Measure::Dtw, DEFAULT_ENUMERATION_BOUND).unwrap();
        prop_assert_eq!(int(dtw_dp(&x, &y).unwrap() as i128), want);
    }

    #[test]
    fn edit_traceback_is_optimal(x in prop::collection::vec(0u32..3, 0..30), y in prop::collection::vec(0u32..3, 0..30), s in scheme()) {
        let (cost, t) = edit_traversal(&x, &y, &s);
        prop_assert!(validate_traversal(&t, x.len() + 1, y.len() + 1));
        prop_assert_eq!(traversal_cost(&t, &x, &y, &Measure::Edit(s)).unwrap(), cost);
        prop_assert_eq!(cost, edit_dp(&x, &y, &s));
    }

    #[test]
    fn dtw_traceback_is_optimal(x in small_curve(25, 20), y in small_curve(25, 20)) {
        let (cost, t) = dtw_traversal(&x, &y).unwrap();
        prop_assert!(validate_traversal(&t, x.len(), y.len()));
        prop_assert_eq!(traversal_cost(&t, &x, &y, &Measure::Dtw).unwrap(), int(cost as i128));
        prop_assert_eq!(cost, dtw_dp(&x, &y).unwrap());
        prop_assert_eq!(cost, dtw_dp(&y, &x).unwrap());
    }

    #[test]
    fn edit_swap_symmetry(x in small_binary(20), y in small_binary(20), s in scheme()) {
        prop_assert_eq!(edit_dp(&x, &y, &s), edit_dp(&y, &x, &s.swapped()));
    }

    #[test]
    fn integer_kernel_matches_scaled_rationals(x in small_binary(20), y in small_binary(20), s in scheme()) {
        let (ic, d) = s.scaled();
        prop_assert_eq!(int(edit_int(&x, &y, &ic) as i128), edit_dp(&x, &y, &s) * int(d));
    }

    #[test]
    fn lcs_bounds(x in small_binary(40), y in small_binary(40)) {
        let l = lcs_length(&x, &y);
        prop_assert!(l <= x.len().min(y.len()));
        prop_assert_eq!(l, lcs_length(&y, &x));
        prop_assert_eq!(delta_lcs(&x, &y), x.len() + y.len() - 2 * l);
    }

    #[test]
    fn folklore_palindrome_identity(x in prop::collection::vec(0u32..3, 0..30)) {
        let rev: Vec<_> = x.iter().rev().copied().collect();
        prop_assert_eq!(lps_length(&x), lcs_length(&x, &rev));
    }
}
