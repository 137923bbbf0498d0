//! Property suites shared by the `verify` subcommand and the acceptance run.
//!
//! Every suite is deterministic given its arguments and returns an
//! [`Outcome`] rather than panicking, so callers decide how to report.

use rand::Rng;
use seqhard_core::edit_fast::{edit_distance_fast, normalized_table, NextStrategy, INF};
use seqhard_core::gadget::{verify_sandwich, verify_type_uniformity, MeasureAdapter, TypeDescriptor};
use seqhard_core::instantiations::{
    decide_ov_via_measure, lps_from_lcs, lts_from_lcs,
    selector_gadget, vector_gadget_x, vector_gadget_y, vector_offset, DtwAdapter, EditAdapter, LcsAdapter,
};
use seqhard_core::measures::{
    brute_force_min, edit_dp, lcs_length, lps_length, lts_length, CostScheme, IntCosts, Measure,
    Symbol,
};
use seqhard_core::num::{int, ratio, Rational};
use seqhard_core::ov::{
    cnf_to_ov, gen_planted, gen_random, ov_brute_force, sat_brute_force, OvInstance, DEFAULT_OV_BUDGET,
};
use seqhard_core::variants::{canonicalize, classify, trivial_value};
use seqhard_core::Result;

use crate::formats::KeyValues;
use crate::gen::{all_ones, all_strings, all_vectors, random_3cnf, random_scheme, random_string, random_upto, rng, same_type};

const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub suite: String,
    pub checked: u64,
    pub failed: u64,
    /// The first few failures.
    pub examples: Vec<String>,
    pub stats: KeyValues,
}

impl Outcome {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checked: 0, failed: 0, examples: Vec::new(), stats: KeyValues::new() }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    /// Folds another suite's counts into this one, keeping its stats under a prefix.
    pub fn absorb(&mut self, other: Outcome) {
        self.checked += other.checked;
        self.failed += other.failed;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(format!("{}: {e}", other.suite));
            }
        }
        for (k, v) in other.stats.iter() {
            self.stats.insert(&format!("{}.{k}", other.suite), v);
        }
    }

    pub fn report(&self) -> KeyValues {
        let mut kv = self.stats.clone();
        kv.insert("suite", &self.suite);
        kv.insert("checked", self.checked);
        kv.insert("failed", self.failed);
        kv.insert("status", if self.passed() { "pass" } else { "fail" });
        for (i, e) in self.examples.iter().enumerate() {
            kv.insert(&format!("failure.{i}"), e);
        }
        kv
    }
}

/// Schemes the edit oracle runs under by default.
pub fn oracle_schemes() -> [CostScheme; 4] {
    [
        CostScheme::lcs(),
        CostScheme::levenshtein(),
        CostScheme::from_ints(2, 2, -1, 1),
        CostScheme::new(int(1), int(2), int(0), ratio(3, 2)),
    ]
}

fn label(measure: &Measure) -> String {
    match measure {
        Measure::Edit(c) => format!("edit({c})"),
        Measure::Lcs => "lcs".into(),
        Measure::Dtw => "dtw".into(),
    }
}

/// DP against traversal enumeration on every pair over `0..sigma` up to `max_len`.
pub fn oracle_exhaustive(measure: &Measure, sigma: u32, max_len: usize, bound: usize) -> Result<Outcome> {
    let mut out = Outcome::new(format!("oracle-{}", label(measure)));
    let shortest = usize::from(*measure == Measure::Dtw);
    let strings: Vec<Vec<Symbol>> = (shortest..=max_len).flat_map(|l| all_strings(l, sigma)).collect();
    for x in &strings {
        for y in &strings {
            let want = brute_force_min(x, y, measure, bound)?;
            let got = measure.distance(x, y)?;
            out.check(got == want, || format!("x={x:?} y={y:?} dp={got} brute={want}"));
        }
    }
    out.stats.insert("pairs", strings.len() * strings.len());
    Ok(out)
}

/// DP against traversal enumeration on random pairs with lengths `1..=max_len`.
pub fn oracle_random(
    measure: &Measure,
    sigma: u32,
    max_len: usize,
    trials: usize,
    seed: u64,
    bound: usize,
) -> Result<Outcome> {
    let mut out = Outcome::new(format!("oracle-random-{}", label(measure)));
    let mut r = rng(seed);
    for _ in 0..trials {
        let (lx, ly) = (r.gen_range(1..=max_len), r.gen_range(1..=max_len));
        let x = random_string(&mut r, lx, sigma);
        let y = random_string(&mut r, ly, sigma);
        let want = brute_force_min(&x, &y, measure, bound)?;
        let got = measure.distance(&x, &y)?;
        out.check(got == want, || format!("x={x:?} y={y:?} dp={got} brute={want}"));
    }
    Ok(out)
}

/// `edit_distance_fast` against `edit_dp` under random rational schemes.
pub fn edit_fast_random(trials: usize, max_n: usize, max_m: usize, sigmas: &[u32], seed: u64) -> Outcome {
    let mut out = Outcome::new("edit-fast");
    let mut r = rng(seed);
    let mut cells = 0u64;
    for t in 0..trials {
        let sigma = sigmas[t % sigmas.len()];
        let m = r.gen_range(0..=max_m);
        let n = r.gen_range(m..=max_n.max(m));
        let x = random_string(&mut r, n, sigma);
        let y = random_string(&mut r, m, sigma);
        let s = random_scheme(&mut r, 4, 3);
        let (fast, dp) = (edit_distance_fast(&x, &y, &s), edit_dp(&x, &y, &s));
        cells += (n as u64 + 1) * (m as u64 + 1);
        out.check(fast == dp, || format!("n={n} m={m} sigma={sigma} costs={s} fast={fast} dp={dp}"));
    }
    out.stats.insert("dp_cells", cells);
    out
}

fn prefix_table(x: &[Symbol], y: &[Symbol], c: &IntCosts) -> Vec<Vec<i64>> {
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

/// The normalized table equals its definition under the integer LCS costs.
#[allow(clippy::needless_range_loop)]
pub fn normalized_table_definition(instances: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("normalized-table");
    let c = IntCosts::new(2, 2, 2, 4);
    let mut r = rng(seed);
    for _ in 0..instances {
        let m = r.gen_range(0..=6);
        let n = r.gen_range(m..=9);
        let x = random_string(&mut r, n, 2);
        let y = random_string(&mut r, m, 2);
        let d = prefix_table(&x, &y, &c);
        let t = normalized_table(&x, &y, 2, &c, NextStrategy::Auto);
        for j in 0..=m {
            for k in 0..=t.bound as i64 {
                let defined =
                    (0..=n).find(|&i| d[i][j] - c.del_x * (i as i64 - j as i64) == k).unwrap_or(INF);
                let got = t.get(j, k);
                out.check(got == defined, || format!("x={x:?} y={y:?} j={j} k={k} table={got} defined={defined}"));
            }
        }
    }
    out
}

/// Coordinate-value distances for LCS, `Edit(c)` at several `c`, and DTW.
pub fn coordinate_tables() -> Result<Outcome> {
    let mut out = Outcome::new("coordinates");
    let mut table = |name: &str, a: &dyn MeasureAdapter, rho0: Rational, rho1: Rational| -> Result<()> {
        let cv = a.coordinate_values();
        let got = [
            a.distance(&cv.zero_x, &cv.zero_y)?,
            a.distance(&cv.zero_x, &cv.one_y)?,
            a.distance(&cv.one_x, &cv.zero_y)?,
            a.distance(&cv.one_x, &cv.one_y)?,
        ];
        let want = [rho0, rho0, rho0, rho1];
        out.check(got == want, || format!("{name}: got {got:?}, want {want:?}"));
        let types = TypeDescriptor::of(&cv.zero_x) == TypeDescriptor::of(&cv.one_x)
            && TypeDescriptor::of(&cv.zero_y) == TypeDescriptor::of(&cv.one_y);
        out.check(types, || format!("{name}: coordinate values differ in type"));
        Ok(())
    };
    table("lcs", &LcsAdapter, int(2), int(4))?;
    for c in [ratio(1, 3), ratio(1, 2), int(1), ratio(3, 2), int(2)] {
        let a = EditAdapter::new(c)?;
        table(&format!("edit({c})"), &a, int(2).min(int(2) * c), int(4).min(int(4) * c))?;
    }
    table("dtw", &DtwAdapter, int(1), int(4))?;
    Ok(out)
}

/// Input shapes for randomized sandwich trials.
#[derive(Clone, Copy, Debug)]
pub struct SandwichShape {
    pub max_n: usize,
    pub max_len: usize,
    pub max_value: u32,
}

/// `lower <= delta(x, y) - C <= upper` on random type-uniform inputs with `m <= n`.
pub fn sandwich(
    adapter: &dyn MeasureAdapter,
    shape: SandwichShape,
    trials: usize,
    seed: u64,
    budget: u128,
) -> Result<Outcome> {
    let mut out = Outcome::new(format!("sandwich-{}", label(&adapter.measure())));
    let mut r = rng(seed);
    let (mut lower_tight, mut upper_tight, mut max_cells) = (0u64, 0u64, 0u128);
    for _ in 0..trials {
        let n = r.gen_range(1..=shape.max_n);
        let m = r.gen_range(1..=n);
        let (lx, ly) = (r.gen_range(1..=shape.max_len), r.gen_range(1..=shape.max_len));
        let xs = same_type(&mut r, n, lx, shape.max_value);
        let ys = same_type(&mut r, m, ly, shape.max_value);
        let rep = verify_sandwich(adapter, &xs, &ys, budget)?;
        lower_tight += u64::from(rep.centered == rep.lower);
        upper_tight += u64::from(rep.centered == rep.upper);
        max_cells = max_cells.max(rep.x_len as u128 * rep.y_len as u128);
        out.check(rep.holds && rep.types_match, || {
            format!("xs={xs:?} ys={ys:?} lower={} centered={} upper={}", rep.lower, rep.centered, rep.upper)
        });
    }
    out.stats.insert("lower_tight", lower_tight);
    out.stats.insert("upper_tight", upper_tight);
    out.stats.insert("max_cells", max_cells);
    Ok(out)
}

/// Vector-gadget values over all pairs of `d`-dimensional bit vectors.
pub fn vector_level(adapter: &dyn MeasureAdapter, d: usize) -> Result<Outcome> {
    let mut out = Outcome::new(format!("vector-level-{}-d{d}", label(&adapter.measure())));
    let (rho0, rho1) = adapter.rho()?;
    let c = vector_offset(adapter, d)?;
    let dd = int(d as i128);
    let s = selector_gadget(adapter, d)?;
    let vectors = all_vectors(d);
    let xs = vectors.iter().map(|a| vector_gadget_x(adapter, a)).collect::<Result<Vec<_>>>()?;
    for bv in &vectors {
        let vb = vector_gadget_y(adapter, bv)?;
        let sel = adapter.distance(&s, &vb)? - c;
        out.check(sel == dd * rho0 + rho1, || format!("selector vs {bv:?}: {sel}"));
        for (av, va) in vectors.iter().zip(&xs) {
            let got = adapter.distance(va, &vb)? - c;
            let ok = if av.is_orthogonal(bv) { got == (dd + int(1)) * rho0 } else { got >= dd * rho0 + rho1 };
            out.check(ok, || format!("a={av:?} b={bv:?}: {got}"));
        }
    }
    Ok(out)
}

/// A planted instance, an all-ones instance, then random ones at density 1/2.
pub fn endtoend_instances(n: usize, m: usize, d: usize, count: usize, seed: u64) -> Vec<OvInstance> {
    let mut v = vec![gen_planted(n, m, d, seed), all_ones(n, m, d)];
    v.extend((0..count.saturating_sub(2) as u64).map(|i| gen_random(n, m, d, ratio(1, 2), seed.wrapping_add(i + 1))));
    v.truncate(count.max(1));
    v
}

/// Threshold decisions through the measure against OV brute force.
pub fn end_to_end(adapter: &dyn MeasureAdapter, instances: &[OvInstance], budget: u128) -> Result<Outcome> {
    let mut out = Outcome::new(format!("endtoend-{}", label(&adapter.measure())));
    let mut yes = 0u64;
    for (i, inst) in instances.iter().enumerate() {
        let want = ov_brute_force(inst);
        let got = decide_ov_via_measure(inst, adapter, budget)?;
        yes += u64::from(want);
        out.check(got == want, || format!("instance {i}: measure says {got}, brute force says {want}"));
    }
    out.stats.insert("yes_instances", yes);
    Ok(out)
}

/// Palindrome and tandem-repeat identities from LCS instances.
pub fn subsequence(pairs: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("subsequence");
    let mut r = rng(seed);
    for _ in 0..pairs {
        let x = random_upto(&mut r, 10, 2);
        let y = random_upto(&mut r, 10, 2);
        let (z, k) = lps_from_lcs(&x, &y);
        let (got, want) = (lps_length(&z), 3 * k + 2 * lcs_length(&x, &y));
        out.check(got == want, || format!("lps x={x:?} y={y:?}: {got} != {want}"));
    }
    for _ in 0..pairs {
        let x = random_upto(&mut r, 8, 2);
        let y = random_upto(&mut r, 8, 2);
        let (z, k) = lts_from_lcs(&x, &y);
        let (got, want) = (lts_length(&z), 4 * k + 2 * lcs_length(&x, &y));
        out.check(got == want, || format!("lts x={x:?} y={y:?}: {got} != {want}"));
    }
    out
}

/// `lps_length(x) = lcs_length(x, reverse(x))`.
pub fn palindrome_folklore(strings: usize, max_len: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("palindrome-folklore");
    let mut r = rng(seed);
    for _ in 0..strings {
        let x = random_upto(&mut r, max_len, 3);
        let rev: Vec<Symbol> = x.iter().rev().copied().collect();
        let (got, want) = (lps_length(&x), lcs_length(&x, &rev));
        out.check(got == want, || format!("x={x:?}: {got} != {want}"));
    }
    out
}

/// Trivial closed forms and the canonicalizing affine map against `edit_dp`.
pub fn variants(schemes: usize, pairs_per_scheme: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("variants");
    let mut r = rng(seed);
    let mut hard = 0u64;
    for _ in 0..schemes {
        let s = random_scheme(&mut r, 3, 4);
        let kind = classify(&s);
        hard += u64::from(!kind.is_trivial());
        for _ in 0..pairs_per_scheme {
            let x = random_upto(&mut r, 8, 2);
            let y = random_upto(&mut r, 8, 2);
            let want = edit_dp(&x, &y, &s);
            if kind.is_trivial() {
                let got = trivial_value(&s, x.len(), y.len());
                out.check(got == Ok(want), || format!("{s} x={x:?} y={y:?}: {got:?} != {want}"));
            } else {
                let ok = canonicalize(&s, &x, &y).is_ok_and(|k| {
                    let got = edit_dp(&k.x, &k.y, &CostScheme::canonical(k.c_subst));
                    got == k.map.apply(want) && k.map.invert(got) == want
                });
                out.check(ok, || format!("{s} x={x:?} y={y:?}: affine identity fails"));
            }
        }
    }
    out.stats.insert("hard_schemes", hard);
    out
}

/// CNF to OV against exhaustive SAT.
pub fn cnf(formulas: usize, max_vars: usize, seed: u64) -> Result<Outcome> {
    let mut out = Outcome::new("cnf-to-ov");
    let mut r = rng(seed);
    let mut sat = 0u64;
    for _ in 0..formulas {
        let vars = r.gen_range(1..=max_vars);
        let clauses = r.gen_range(1..=5 * vars);
        let f = random_3cnf(&mut r, vars, clauses);
        let inst = cnf_to_ov(&f, ratio(1, 2), DEFAULT_OV_BUDGET)?;
        let want = sat_brute_force(&f);
        sat += u64::from(want);
        let got = ov_brute_force(&inst);
        out.check(got == want, || format!("{vars} vars, {clauses} clauses: ov={got} sat={want}"));
    }
    out.stats.insert("satisfiable", sat);
    Ok(out)
}

/// Constant bounding `|y|` of the DTW gadget by `m * (l_x + l_y)`.
pub const DTW_SIZE_CONSTANT: usize = 7;

/// DTW output size against `DTW_SIZE_CONSTANT`, and type uniformity for every gadget.
pub fn sizes_and_types(trials: usize, seed: u64) -> Result<Outcome> {
    let mut out = Outcome::new("sizes-and-types");
    let mut r = rng(seed);
    let mut worst = Rational::from_integer(0);
    for _ in 0..trials {
        let n = r.gen_range(1..=16);
        let m = r.gen_range(1..=n);
        let (lx, ly) = (r.gen_range(1..=8), r.gen_range(1..=8));
        let xs = same_type(&mut r, n, lx, 4);
        let ys = same_type(&mut r, m, ly, 4);
        let g = DtwAdapter.gadget(&xs, &ys)?;
        let scale = m * (lx + ly);
        worst = worst.max(ratio(g.y.len() as i128, scale as i128));
        out.check(g.y.len() <= DTW_SIZE_CONSTANT * scale, || format!("|y|={} for m={m} l={}", g.y.len(), lx + ly));
    }
    out.stats.insert("dtw_measured_constant", worst);
    let adapters: [(Box<dyn MeasureAdapter>, u32); 3] =
        [(Box::new(LcsAdapter), 1), (Box::new(EditAdapter::new(int(1))?), 1), (Box::new(DtwAdapter), 4)];
    for (a, max_value) in &adapters {
        for _ in 0..trials.div_ceil(10) {
            let n = r.gen_range(1..=4);
            let m = r.gen_range(1..=n);
            let len = r.gen_range(1..=5);
            let xs = same_type(&mut r, n, len, *max_value);
            let ys = same_type(&mut r, m, len, *max_value);
            let mut xs2 = xs.clone();
            xs2.reverse();
            let ys2: Vec<_> = ys.iter().map(|s| s.iter().rev().copied().collect()).collect();
            let ok = verify_type_uniformity(a.as_ref(), (&xs, &ys), (&xs2, &ys2))?;
            out.check(ok, || format!("{}: output types depend on input order", label(&a.measure())));
        }
    }
    Ok(out)
}
