//! Argument parsing and subcommand dispatch for the `seqhard` binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use seqhard_core::edit_fast::edit_distance_fast;
use seqhard_core::gadget::{check_budget, MeasureAdapter, DEFAULT_CELL_BUDGET};
use seqhard_core::instantiations::{
    lps_from_lcs, lts_from_lcs, ov_to_instance, DtwAdapter, EditAdapter, LcsAdapter, ReductionTranscript,
};
use seqhard_core::measures::{
    brute_force_min, lcs_length, lps_length, lts_length, CostScheme, Measure, Symbol, DEFAULT_ENUMERATION_BOUND,
};
use seqhard_core::num::int;
use seqhard_core::ov::{cnf_to_ov, gen_planted, gen_random, ov_find_pair, DEFAULT_OV_BUDGET};
use seqhard_core::Rational;

use crate::bench::{fast_scaling, time_edit, Algorithm};
use crate::error::CliError;
use crate::formats::{
    parse_curve, parse_dimacs, parse_ov, parse_rational, parse_sequence, write_curve, write_dimacs, write_ov,
    write_sequence, KeyValues,
};
use crate::gen::{random_3cnf, random_string, rng};
use crate::verify::{self, Outcome, SandwichShape};

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "seqhard", version, about = "Sequence distances, OV reductions and their verification")]
pub struct Cli {
    /// Print reports as JSON instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest |x|*|y| a quadratic DP may touch.
    #[arg(long, global = true, env = "SEQHARD_CELL_BUDGET", default_value_t = DEFAULT_CELL_BUDGET)]
    pub cell_budget: u128,

    /// Largest |x|+|y| for traversal enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub enum_bound: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two sequence or curve files.
    Dist(DistArgs),
    /// Compile one problem into another.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Run a property suite.
    Verify(VerifyArgs),
    /// Generate a random instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time the quadratic DP against the fast edit algorithm.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Lcs,
    Edit,
    Dtw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Dp,
    Fast,
    Brute,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_enum)]
    pub measure: MeasureArg,
    /// Four rationals `del_x,del_y,match,subst` for the edit measure.
    #[arg(long, default_value = "1,1,0,1")]
    pub costs: String,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Dp)]
    pub algorithm: AlgorithmArg,
    /// Treat X and Y as literal contents instead of file paths.
    #[arg(long)]
    pub inline: bool,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// OV instance to a string or curve pair with a decision threshold.
    Ov {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Substitution cost for the edit gadget.
        #[arg(long, default_value = "2")]
        csubst: String,
        input: PathBuf,
        /// Directory receiving x.txt, y.txt and transcript.txt.
        #[arg(long)]
        out: PathBuf,
    },
    /// DIMACS CNF to an OV instance.
    Sat {
        /// Fraction of the variables on the left side.
        #[arg(long, default_value = "1/2")]
        left_fraction: String,
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// LCS pair to one string whose longest palindromic subsequence encodes it.
    Lps(PairArgs),
    /// LCS pair to one string whose longest tandem subsequence encodes it.
    Lts(PairArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub inline: bool,
    pub x: String,
    pub y: String,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Sandwich,
    Oracle,
    Endtoend,
    Vector,
    EditFast,
    Bundle,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = MeasureArg::Edit)]
    pub measure: MeasureArg,
    #[arg(long, default_value = "2")]
    pub csubst: String,
    /// Edit scheme for the oracle suite; all default schemes when absent.
    #[arg(long)]
    pub costs: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Defaults to `n`.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    /// Element length bound for sandwich trials; picked per measure when absent.
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub exhaustive_len: usize,
    /// Reduction output directory for the bundle suite.
    #[arg(long)]
    pub dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    Ov {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "1/2")]
        density: String,
        /// Rewrite one pair to be orthogonal.
        #[arg(long)]
        planted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    String {
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Curve {
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 8)]
        max_value: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Cnf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    pub m: usize,
    #[arg(long, value_delimiter = ',', default_value = "10000,20000")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub sigma: u32,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Side length of the square DP run; 0 skips it.
    #[arg(long, default_value_t = 2000)]
    pub dp_side: usize,
}

/// What a subcommand hands back to `main`.
pub enum Output {
    Report(KeyValues),
    /// Raw file content for `gen` without `--out`.
    Text(String),
    /// A suite report whose failure maps to exit code 1.
    Verdict(Outcome),
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Dist(a) => dist(cli, a).map(Output::Report),
        Command::Reduce(r) => reduce(cli, r).map(Output::Report),
        Command::Verify(v) => verify_cmd(cli, v),
        Command::Gen(g) => gen(g),
        Command::Bench(b) => Ok(Output::Report(bench(b))),
    }
}

fn read(path: impl AsRef<Path>) -> CliResult<String> {
    let path = path.as_ref();
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, content: &str) -> CliResult<()> {
    fs::write(path, content).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn operand(value: &str, inline: bool) -> CliResult<String> {
    if inline {
        Ok(value.to_string())
    } else {
        read(value)
    }
}

fn costs(s: &str) -> CliResult<CostScheme> {
    s.parse().map_err(|e: seqhard_core::Error| CliError::Input(e.to_string()))
}

fn rational(s: &str) -> CliResult<Rational> {
    parse_rational(s).ok_or_else(|| CliError::Input(format!("bad rational {s:?}")))
}

fn adapter(measure: MeasureArg, csubst: &str) -> CliResult<Box<dyn MeasureAdapter>> {
    Ok(match measure {
        MeasureArg::Lcs => Box::new(LcsAdapter),
        MeasureArg::Edit => Box::new(EditAdapter::new(rational(csubst)?)?),
        MeasureArg::Dtw => Box::new(DtwAdapter),
    })
}

fn dist(cli: &Cli, a: &DistArgs) -> CliResult<KeyValues> {
    let parse = |s: &str| -> CliResult<Vec<Symbol>> {
        let text = operand(s, a.inline)?;
        Ok(if a.measure == MeasureArg::Dtw { parse_curve(&text)? } else { parse_sequence(&text)? })
    };
    let (x, y) = (parse(&a.x)?, parse(&a.y)?);
    let measure = match a.measure {
        MeasureArg::Lcs => Measure::Lcs,
        MeasureArg::Edit => Measure::Edit(costs(&a.costs)?),
        MeasureArg::Dtw => Measure::Dtw,
    };
    let distance = match a.algorithm {
        AlgorithmArg::Dp => {
            check_budget(x.len(), y.len(), cli.cell_budget)?;
            measure.distance(&x, &y)?
        }
        AlgorithmArg::Fast => match measure {
            Measure::Edit(c) => edit_distance_fast(&x, &y, &c),
            Measure::Lcs => edit_distance_fast(&x, &y, &CostScheme::lcs()),
            Measure::Dtw => return Err(CliError::Input("the fast algorithm only computes edit measures".into())),
        },
        AlgorithmArg::Brute => {
            if x.len() + y.len() > cli.enum_bound {
                return Err(CliError::Input(format!(
                    "brute force needs |x|+|y| <= {}, got {}",
                    cli.enum_bound,
                    x.len() + y.len()
                )));
            }
            brute_force_min(&x, &y, &measure, cli.enum_bound)?
        }
    };
    let mut kv = KeyValues::new();
    kv.insert("measure", format!("{:?}", a.measure).to_lowercase());
    kv.insert("algorithm", format!("{:?}", a.algorithm).to_lowercase());
    kv.insert("distance", distance);
    kv.insert("len_x", x.len());
    kv.insert("len_y", y.len());
    kv.insert("cells", x.len() as u128 * y.len() as u128);
    if let Measure::Edit(c) = measure {
        kv.insert("costs", c);
    }
    if a.measure == MeasureArg::Lcs {
        kv.insert("lcs", (int((x.len() + y.len()) as i128) - distance) / int(2));
    }
    Ok(kv)
}

fn insert_transcript(kv: &mut KeyValues, t: &ReductionTranscript) {
    kv.insert("n", t.n);
    kv.insert("m", t.m);
    kv.insert("d", t.d);
    kv.insert("rho0", t.rho0);
    kv.insert("rho1", t.rho1);
    kv.insert("c", t.c);
    kv.insert("c_prime", t.c_prime);
    kv.insert("c_prime_prime", t.c_prime_prime);
    kv.insert("rho_prime0", t.rho_prime0);
    kv.insert("rho_prime1", t.rho_prime1);
    kv.insert("threshold", t.threshold);
    for (name, (a, b)) in [
        ("vector", t.vector_sizes),
        ("normalized", t.normalized_sizes),
        ("final", t.final_sizes),
    ] {
        kv.insert(&format!("{name}_len_x"), a);
        kv.insert(&format!("{name}_len_y"), b);
    }
}

fn reduce(cli: &Cli, r: &ReduceCommand) -> CliResult<KeyValues> {
    let mut kv = KeyValues::new();
    match r {
        ReduceCommand::Ov { measure, csubst, input, out } => {
            let inst = parse_ov(&read(input)?)?;
            let a = adapter(*measure, csubst)?;
            let red = ov_to_instance(&inst, a.as_ref(), cli.cell_budget)?;
            kv.insert("measure", format!("{measure:?}").to_lowercase());
            if *measure == MeasureArg::Edit {
                kv.insert("csubst", rational(csubst)?);
            }
            insert_transcript(&mut kv, &red.transcript);
            fs::create_dir_all(out)?;
            let encode = if *measure == MeasureArg::Dtw { write_curve } else { write_sequence };
            write(&out.join("x.txt"), &encode(&red.x))?;
            write(&out.join("y.txt"), &encode(&red.y))?;
            write(&out.join("transcript.txt"), &kv.render())?;
            kv.insert("out", out.display());
        }
        ReduceCommand::Sat { left_fraction, input, out } => {
            let f = parse_dimacs(&read(input)?)?;
            let inst = cnf_to_ov(&f, rational(left_fraction)?, DEFAULT_OV_BUDGET)?;
            write(out, &write_ov(&inst))?;
            kv.insert("variables", f.variable_count());
            kv.insert("clauses", f.clauses().len());
            kv.insert("n", inst.n());
            kv.insert("m", inst.m());
            kv.insert("d", inst.d());
            kv.insert("out", out.display());
        }
        ReduceCommand::Lps(p) | ReduceCommand::Lts(p) => {
            let x = parse_sequence(&operand(&p.x, p.inline)?)?;
            let y = parse_sequence(&operand(&p.y, p.inline)?)?;
            let lps = matches!(r, ReduceCommand::Lps(_));
            let (z, k) = if lps { lps_from_lcs(&x, &y) } else { lts_from_lcs(&x, &y) };
            write(&p.out, &write_sequence(&z))?;
            let lcs = lcs_length(&x, &y);
            kv.insert("target", if lps { "lps" } else { "lts" });
            kv.insert("k", k);
            kv.insert("len_z", z.len());
            kv.insert("lcs", lcs);
            kv.insert("expected", if lps { 3 * k + 2 * lcs } else { 4 * k + 2 * lcs });
            let work = (z.len() as u128).pow(if lps { 2 } else { 3 });
            if work <= cli.cell_budget {
                kv.insert("measured", if lps { lps_length(&z) } else { lts_length(&z) });
            }
            kv.insert("out", p.out.display());
        }
    }
    Ok(kv)
}

fn sandwich_len(measure: MeasureArg, c: Rational) -> usize {
    match measure {
        MeasureArg::Lcs | MeasureArg::Dtw => 6,
        MeasureArg::Edit if c >= int(1) => 3,
        MeasureArg::Edit => 2,
    }
}

fn verify_cmd(cli: &Cli, v: &VerifyArgs) -> CliResult<Output> {
    let outcome = match v.suite {
        Suite::Sandwich => {
            let a = adapter(v.measure, &v.csubst)?;
            let shape = SandwichShape {
                max_n: v.max_n.max(1),
                max_len: v.max_len.unwrap_or_else(|| sandwich_len(v.measure, parse_rational(&v.csubst).unwrap())),
                max_value: if v.measure == MeasureArg::Dtw { 4 } else { 1 },
            };
            verify::sandwich(a.as_ref(), shape, v.trials, v.seed, cli.cell_budget)?
        }
        Suite::Oracle => match v.measure {
            MeasureArg::Edit => {
                let schemes = match &v.costs {
                    Some(s) => vec![costs(s)?],
                    None => verify::oracle_schemes().to_vec(),
                };
                let mut all = Outcome::new("oracle-edit");
                for s in schemes {
                    all.absorb(verify::oracle_exhaustive(&Measure::Edit(s), 2, v.exhaustive_len, cli.enum_bound)?);
                }
                all
            }
            MeasureArg::Lcs => verify::oracle_exhaustive(&Measure::Lcs, 2, v.exhaustive_len, cli.enum_bound)?,
            MeasureArg::Dtw => verify::oracle_exhaustive(&Measure::Dtw, 3, v.exhaustive_len, cli.enum_bound)?,
        },
        Suite::Endtoend => {
            let a = adapter(v.measure, &v.csubst)?;
            let instances = verify::endtoend_instances(v.n, v.m.unwrap_or(v.n), v.d, v.trials, v.seed);
            verify::end_to_end(a.as_ref(), &instances, cli.cell_budget)?
        }
        Suite::Vector => verify::vector_level(adapter(v.measure, &v.csubst)?.as_ref(), v.d)?,
        Suite::EditFast => verify::edit_fast_random(v.trials, 2000, 200, &[2, 4, 26], v.seed),
        Suite::Bundle => {
            let dir = v.dir.as_ref().ok_or_else(|| CliError::Input("bundle needs --dir".into()))?;
            return bundle(cli, dir).map(Output::Report);
        }
    };
    Ok(Output::Verdict(outcome))
}

/// Decides a reduction bundle: `delta(x, y) <= threshold`.
fn bundle(cli: &Cli, dir: &Path) -> CliResult<KeyValues> {
    let t = KeyValues::parse(&read(dir.join("transcript.txt"))?)?;
    let measure = match t.get("measure") {
        Some("lcs") => MeasureArg::Lcs,
        Some("edit") => MeasureArg::Edit,
        Some("dtw") => MeasureArg::Dtw,
        other => return Err(CliError::Input(format!("unknown measure {other:?} in transcript"))),
    };
    let a = adapter(measure, t.get("csubst").unwrap_or("2"))?;
    let threshold = t.rational("threshold").ok_or_else(|| CliError::Input("transcript lacks threshold".into()))?;
    let parse = |name: &str| -> CliResult<Vec<Symbol>> {
        let text = read(dir.join(name))?;
        Ok(if measure == MeasureArg::Dtw { parse_curve(&text)? } else { parse_sequence(&text)? })
    };
    let (x, y) = (parse("x.txt")?, parse("y.txt")?);
    check_budget(x.len(), y.len(), cli.cell_budget)?;
    let distance = a.distance(&x, &y)?;
    let mut kv = KeyValues::new();
    kv.insert("distance", distance);
    kv.insert("threshold", threshold);
    kv.insert("answer", if distance <= threshold { "YES" } else { "NO" });
    Ok(kv)
}

fn emit(out: &Option<PathBuf>, content: String) -> CliResult<Output> {
    match out {
        Some(p) => {
            write(p, &content)?;
            let mut kv = KeyValues::new();
            kv.insert("out", p.display());
            Ok(Output::Report(kv))
        }
        None => Ok(Output::Text(content)),
    }
}

fn gen(g: &GenCommand) -> CliResult<Output> {
    match g {
        GenCommand::Ov { n, m, d, density, planted, seed, out } => {
            if *n == 0 || *m == 0 || *d == 0 {
                return Err(CliError::Input("n, m and d must be positive".into()));
            }
            let density = rational(density)?;
            if density < int(0) || density > int(1) {
                return Err(CliError::Input("density must lie in [0,1]".into()));
            }
            let inst = if *planted { gen_planted(*n, *m, *d, *seed) } else { gen_random(*n, *m, *d, density, *seed) };
            debug_assert!(!*planted || ov_find_pair(&inst).is_some());
            emit(out, write_ov(&inst))
        }
        GenCommand::String { len, sigma, seed, out } => {
            if *sigma == 0 {
                return Err(CliError::Input("sigma must be positive".into()));
            }
            emit(out, write_sequence(&random_string(&mut rng(*seed), *len, *sigma)))
        }
        GenCommand::Curve { len, max_value, seed, out } => {
            emit(out, write_curve(&random_string(&mut rng(*seed), *len, max_value + 1)))
        }
        GenCommand::Cnf { vars, clauses, seed, out } => {
            if *vars == 0 {
                return Err(CliError::Input("vars must be positive".into()));
            }
            emit(out, write_dimacs(&random_3cnf(&mut rng(*seed), *vars, *clauses)))
        }
    }
}

/// Soft bound on the fast-algorithm time ratio when `n` doubles.
pub const SCALING_LIMIT: f64 = 2.5;

fn bench(b: &BenchArgs) -> KeyValues {
    let mut kv = KeyValues::new();
    let mut put = |t: &crate::bench::Timing| {
        let key = format!("{}.n{}.m{}", t.algorithm.name(), t.n, t.m);
        kv.insert(&format!("{key}.seconds"), format!("{:.6}", t.elapsed.as_secs_f64()));
        kv.insert(&format!("{key}.cells"), t.cells);
    };
    for &n in &b.n {
        put(&time_edit(Algorithm::Fast, n, b.m, b.sigma, b.reps, b.seed));
    }
    if b.dp_side > 0 {
        put(&time_edit(Algorithm::Dp, b.dp_side, b.dp_side, b.sigma, 1, b.seed));
    }
    if let [n1, n2, ..] = b.n[..] {
        let (_, _, ratio) = fast_scaling(b.m, n1, n2, b.sigma, b.reps, b.seed);
        kv.insert("fast.ratio", format!("{ratio:.3}"));
        if n2 == 2 * n1 {
            kv.insert("fast.scaling", if ratio <= SCALING_LIMIT { "ok" } else { "slow" });
        }
    }
    kv
}
