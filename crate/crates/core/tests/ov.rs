mod common;

use common::rng;
use proptest::prelude::*;
use rand::Rng;
use seqhard_core::num::ratio;
use seqhard_core::ov::{
    cnf_to_ov, gen_planted, gen_random, ov_brute_force, ov_brute_force_scalar, ov_find_pair, sat_brute_force,
    BitVector, CnfFormula, OvInstance, DEFAULT_OV_BUDGET,
};

fn random_3cnf(r: &mut impl Rng, vars: usize, clauses: usize) -> CnfFormula {
    let cls = (0..clauses)
        .map(|_| {
            (0..3)
                .map(|_| {
                    let v = r.gen_range(1..=vars as i32);
                    if r.gen_bool(0.5) { v } else { -v }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(vars, cls).unwrap()
}

#[test]
fn cnf_agrees_with_exhaustive_sat() {
    let mut r = rng(60);
    let mut sat = 0;
    for _ in 0..100 {
        let vars = r.gen_range(1..=12);
        let clauses = r.gen_range(1..=5 * vars);
        let f = random_3cnf(&mut r, vars, clauses);
        let inst = cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap();
        let want = sat_brute_force(&f);
        sat += usize::from(want);
        assert_eq!(ov_brute_force(&inst), want, "{f:?}");
    }
    assert!(sat > 0 && sat < 100);
}

#[test]
fn contradiction_has_no_orthogonal_pair() {
    let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
    let inst = cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap();
    assert_eq!((inst.n(), inst.m(), inst.d()), (2, 1, 2));
    assert!(!ov_brute_force(&inst));
}

#[test]
fn empty_formula_is_satisfiable() {
    let f = CnfFormula::new(3, vec![]).unwrap();
    let inst = cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET).unwrap();
    assert_eq!(inst.d(), 1);
    assert!(ov_brute_force(&inst));
}

#[test]
fn budget_is_enforced() {
    let f = CnfFormula::new(60, vec![vec![1, 2, 3]]).unwrap();
    assert!(cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET).is_err());
}

#[test]
fn planted_instances_are_yes() {
    for seed in 0..30 {
        let inst = gen_planted(5, 4, 12, seed);
        assert!(ov_brute_force(&inst));
    }
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(gen_random(4, 3, 70, ratio(1, 3), 9), gen_random(4, 3, 70, ratio(1, 3), 9));
    assert_ne!(gen_random(4, 3, 70, ratio(1, 3), 9), gen_random(4, 3, 70, ratio(1, 3), 10));
}

#[test]
fn all_ones_is_no() {
    let ones = vec![BitVector::from_bits(&[true; 5]); 3];
    assert!(!ov_brute_force(&OvInstance::new(ones.clone(), ones).unwrap()));
}

proptest! {
    #[test]
    fn packed_and_scalar_agree(n in 1usize..6, m in 1usize..6, d in 1usize..150, seed in any::<u64>()) {
        let inst = gen_random(n, m, d, ratio(1, 4), seed);
        let found = ov_find_pair(&inst);
        prop_assert_eq!(found.is_some(), ov_brute_force_scalar(&inst));
        if let Some((i, j)) = found {
            prop_assert!(inst.a()[i].is_orthogonal_scalar(&inst.b()[j]));
        }
        prop_assert_eq!(ov_brute_force(&inst), ov_brute_force(&inst.swapped()));
    }
}
