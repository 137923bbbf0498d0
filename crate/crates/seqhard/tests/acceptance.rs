//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 1 to 11 gate the exit status. Criterion 12 is a timing smoke
//! check and only reports.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use seqhard::bench::fast_scaling;
use seqhard::verify::{self, Outcome, SandwichShape, DTW_SIZE_CONSTANT};
use seqhard_core::gadget::{MeasureAdapter, DEFAULT_CELL_BUDGET};
use seqhard_core::instantiations::{DtwAdapter, EditAdapter, LcsAdapter};
use seqhard_core::measures::{Measure, DEFAULT_ENUMERATION_BOUND};
use seqhard_core::num::{int, ratio, Rational};
use seqhard_core::Result;

const BOUND: usize = DEFAULT_ENUMERATION_BOUND;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    gating: bool,
    run: fn() -> Result<Outcome>,
}

fn merged(name: &str, parts: Vec<Outcome>) -> Outcome {
    let mut all = Outcome::new(name);
    for p in parts {
        all.absorb(p);
    }
    all
}

fn edit(c: Rational) -> EditAdapter {
    EditAdapter::new(c).expect("c lies in (0, 2]")
}

fn c1() -> Result<Outcome> {
    let parts = verify::oracle_schemes()
        .iter()
        .map(|s| verify::oracle_exhaustive(&Measure::Edit(*s), 2, 5, BOUND))
        .collect::<Result<_>>()?;
    Ok(merged("edit-oracle", parts))
}

fn c2() -> Result<Outcome> {
    Ok(merged(
        "dtw-oracle",
        vec![
            verify::oracle_exhaustive(&Measure::Dtw, 3, 4, BOUND)?,
            verify::oracle_random(&Measure::Dtw, 9, 6, 500, 2, BOUND)?,
        ],
    ))
}

fn c3() -> Result<Outcome> {
    Ok(merged(
        "edit-fast",
        vec![verify::edit_fast_random(1000, 2000, 200, &[2, 4, 26], 3), verify::normalized_table_definition(50, 3)],
    ))
}

fn c4() -> Result<Outcome> {
    verify::coordinate_tables()
}

/// Edit gadgets at the largest shapes reach about 5e9 DP cells.
const SANDWICH_BUDGET: u128 = 16_000_000_000;

fn c5() -> Result<Outcome> {
    let shape = |max_len, max_value| SandwichShape { max_n: 3, max_len, max_value };
    let mut parts = vec![
        verify::sandwich(&LcsAdapter, shape(6, 1), 200, 51, SANDWICH_BUDGET)?,
        verify::sandwich(&DtwAdapter, shape(6, 4), 200, 52, SANDWICH_BUDGET)?,
    ];
    // 200 edit trials split over c; smaller c means longer padding, so shorter elements
    for (c, trials, max_len, seed) in [
        (int(2), 80, 6, 53),
        (ratio(3, 2), 40, 6, 54),
        (int(1), 40, 6, 55),
        (ratio(1, 2), 25, 3, 56),
        (ratio(1, 3), 15, 2, 57),
    ] {
        parts.push(verify::sandwich(&edit(c), shape(max_len, 1), trials, seed, SANDWICH_BUDGET)?);
    }
    Ok(merged("sandwich", parts))
}

fn c6() -> Result<Outcome> {
    let adapters: [Box<dyn MeasureAdapter>; 3] = [Box::new(LcsAdapter), Box::new(DtwAdapter), Box::new(edit(int(2)))];
    let mut parts = Vec::new();
    for a in &adapters {
        for d in 1..=3 {
            parts.push(verify::vector_level(a.as_ref(), d)?);
        }
    }
    parts.push(verify::vector_level(&edit(ratio(1, 2)), 1)?);
    Ok(merged("vector-level", parts))
}

fn c7() -> Result<Outcome> {
    let instances = verify::endtoend_instances(2, 2, 2, 16, 7);
    let out = verify::end_to_end(&DtwAdapter, &instances, DEFAULT_CELL_BUDGET)?;
    Ok(merged("endtoend", vec![out]))
}

fn c8() -> Result<Outcome> {
    Ok(merged("subsequence", vec![verify::subsequence(500, 8), verify::palindrome_folklore(1000, 30, 8)]))
}

fn c9() -> Result<Outcome> {
    Ok(verify::variants(200, 5, 9))
}

fn c10() -> Result<Outcome> {
    verify::cnf(100, 12, 10)
}

fn c11() -> Result<Outcome> {
    verify::sizes_and_types(200, 11)
}

/// Soft bound on the fast-algorithm time ratio when `n` doubles.
const SCALING_LIMIT: f64 = 2.5;

fn c12() -> Result<Outcome> {
    let (a, b, r) = fast_scaling(100, 10_000, 20_000, 4, 5, 12);
    let mut out = Outcome::new("scaling");
    out.check(r <= SCALING_LIMIT, || format!("ratio {r:.3} exceeds {SCALING_LIMIT}"));
    out.stats.insert("n10000_seconds", format!("{:.6}", a.elapsed.as_secs_f64()));
    out.stats.insert("n20000_seconds", format!("{:.6}", b.elapsed.as_secs_f64()));
    out.stats.insert("ratio", format!("{r:.3}"));
    Ok(out)
}

fn criteria() -> Vec<Criterion> {
    let min = |m: u64| Duration::from_secs(60 * m);
    vec![
        Criterion { id: 1, title: "edit_dp matches traversal enumeration", limit: min(2), gating: true, run: c1 },
        Criterion { id: 2, title: "dtw_dp matches traversal enumeration", limit: min(2), gating: true, run: c2 },
        Criterion { id: 3, title: "edit_fast matches edit_dp", limit: min(1), gating: true, run: c3 },
        Criterion { id: 4, title: "coordinate value tables", limit: Duration::from_secs(1), gating: true, run: c4 },
        Criterion { id: 5, title: "sandwich inequality", limit: min(5), gating: true, run: c5 },
        Criterion { id: 6, title: "vector gadget values", limit: min(10), gating: true, run: c6 },
        Criterion { id: 7, title: "OV decided through DTW", limit: min(15), gating: true, run: c7 },
        Criterion { id: 8, title: "LPS and LTS identities", limit: min(2), gating: true, run: c8 },
        Criterion { id: 9, title: "variant classification", limit: min(2), gating: true, run: c9 },
        Criterion { id: 10, title: "CNF to OV", limit: min(1), gating: true, run: c10 },
        Criterion { id: 11, title: "gadget sizes and types", limit: min(1), gating: true, run: c11 },
        Criterion { id: 12, title: "edit_fast scaling in n", limit: min(1), gating: false, run: c12 },
    ]
}

fn main() -> ExitCode {
    let filter: Vec<u32> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect())
        .unwrap_or_default();
    let mut failed = 0;
    println!("DTW size constant: |y| <= {DTW_SIZE_CONSTANT} * m * (lx + ly)");
    for c in criteria() {
        if !filter.is_empty() && !filter.contains(&c.id) {
            continue;
        }
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &result {
            Ok(o) => {
                let stats: Vec<String> = o.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let mut d = format!("checked={} failed={}", o.checked, o.failed);
                if !stats.is_empty() {
                    d += &format!(" {}", stats.join(" "));
                }
                if let Some(e) = o.examples.first() {
                    d += &format!(" first_failure=[{e}]");
                }
                (o.passed(), d)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= c.limit;
        let verdict = match (ok && in_time, c.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "SOFT-FAIL",
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        let late = if in_time { String::new() } else { format!(" over limit {}s", c.limit.as_secs()) };
        println!("criterion {:>2} {verdict}: {} ({:.1}s{late}) {detail}", c.id, c.title, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} gating criteria failed");
        ExitCode::FAILURE
    }
}
