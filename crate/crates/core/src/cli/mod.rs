//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the exit
//! code: 0 on success, 1 when a verification fails, 2 on usage errors.
//! Output goes to `--out` when given (with a `.manifest.json` beside it),
//! otherwise to standard output.

pub mod checks;
pub mod format;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cycle_decomp::{format_cycles, product_decompose, Cycle, CycleGraph};
use crate::exactpoly::modular::{DEFAULT_PRIME, SECOND_PRIME};
use crate::exactpoly::IntPoly;
use crate::hyperdet::{node_check_batch, schlafli_expand, schlafli_in_cycle_sums, table_var, NodeStatus};
use crate::lie_action::module_report;
use crate::minor_maps::{
    cyclesums_to_minors, is_realizable_4, minor_in_cyclesums, minors_to_cyclesums, principal_minors, realize_3, MinorVector,
};
use crate::nanson::{homogenize, nanson_minor, nanson_minors, to_minor_coordinates, GeneratorRecord};
use crate::relation_miner::{census, census_box, format_comparison, CensusMode, Census, Coords, MinerConfig};
use crate::subset::SubsetIndex;

/// Environment variable naming a directory for cached generator sets.
pub const CACHE_ENV: &str = "PMINORS_CACHE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl From<format::FormatError> for CliError {
    fn from(e: format::FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

macro_rules! other {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Other(e.to_string())
            }
        }
    )*};
}
other!(
    crate::exactpoly::PolyError,
    crate::minor_maps::MinorError,
    crate::nanson::NansonError,
    crate::relation_miner::MinerError,
    crate::lie_action::LieError,
    crate::hyperdet::HyperdetError,
    crate::cycle_decomp::CycleError,
    Box<dyn std::error::Error + Send + Sync>
);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Heavy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Target {
    /// Cycle-sum coordinates.
    CycleSums,
    /// Principal-minor coordinates.
    Minors,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Random seed.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Primary prime for modular computations.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Tier::Fast)]
    pub tier: Tier,
    /// Worker threads (outputs do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(name = "pminors", version, about = "Relations among principal minors of 4x4 matrices")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Principal minors of a matrix (random or read from a file).
    Minors {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        random: bool,
        /// Matrix file: one row per line, whitespace-separated rationals.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Converts a minor vector or polynomial file, or canonicalizes any file.
    Convert {
        #[arg(long, value_enum)]
        to: Option<Target>,
        /// Reprint the file in canonical form instead of converting.
        #[arg(long)]
        canonical: bool,
        input: PathBuf,
    },
    /// Realizes a vector of 3x3 principal minors by a matrix.
    Realize3 {
        #[arg(long)]
        random: bool,
        input: Option<PathBuf>,
    },
    /// Tests whether a 16-vector is a principal-minor vector.
    Member4 {
        /// Generator records (JSON lines), for example from `census --out`.
        #[arg(long)]
        generators: Option<PathBuf>,
        input: PathBuf,
    },
    /// Writes a product of equal-support cycles via shorter cycles.
    Decompose {
        /// Cycles such as `(1234)`.
        #[arg(required = true, num_args = 2..=3)]
        cycles: Vec<String>,
    },
    /// The five Nanson minors and their vanishing check.
    Nanson {
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Mines all minimal generators and compares with the reference table.
    Census {
        /// Largest exponent per index (default: 5 fast, 7 heavy).
        #[arg(long)]
        max: Option<u32>,
    },
    /// Minimal generators of one multidegree.
    Mine {
        /// Multidegree such as `4,5,5,5`.
        #[arg(long, value_delimiter = ',', num_args = 4)]
        degree: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Target::CycleSums)]
        coords: Target,
    },
    /// The module generated by a relation under the group action.
    Orbit {
        /// Multidegree of a relation to mine and use as seed.
        #[arg(long, value_delimiter = ',', num_args = 4, conflicts_with = "input")]
        degree: Option<Vec<u32>>,
        /// Polynomial file with the seed.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Exact node check on random integer matrices.
    NodeCheck {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Expands the hyperdeterminant (full expansion in the heavy tier).
    Hyperdet,
    /// Runs the acceptance checks of the selected tier.
    VerifyAll,
}

/// Everything that determines a run's output.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub tier: Tier,
    pub input: Vec<String>,
    pub output: Option<String>,
    pub version: String,
}

impl RunManifest {
    fn new(cli: &Cli) -> Self {
        let name = format!("{:?}", cli.command);
        let subcommand = name.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string();
        let input = match &cli.command {
            Command::Minors { input: Some(p), .. }
            | Command::Convert { input: p, .. }
            | Command::Realize3 { input: Some(p), .. }
            | Command::Orbit { input: Some(p), .. } => vec![p.display().to_string()],
            Command::Member4 { generators, input } => {
                let mut v = vec![input.display().to_string()];
                v.extend(generators.iter().map(|g| g.display().to_string()));
                v
            }
            _ => Vec::new(),
        };
        RunManifest {
            subcommand,
            seed: cli.global.seed,
            primes: primes_of(&cli.global),
            tier: cli.global.tier,
            input,
            output: cli.global.out.as_ref().map(|p| p.display().to_string()),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

fn primes_of(g: &Global) -> Vec<u64> {
    match g.prime {
        Some(p) if p != SECOND_PRIME => vec![p, SECOND_PRIME],
        Some(p) => vec![p, DEFAULT_PRIME],
        None => vec![DEFAULT_PRIME, SECOND_PRIME],
    }
}

fn miner_config(g: &Global) -> MinerConfig {
    let mut cfg = MinerConfig { seed: g.seed, ..MinerConfig::default() };
    let chosen = primes_of(g);
    let mut primes = chosen.clone();
    primes.extend(cfg.primes.iter().filter(|p| !chosen.contains(p)));
    cfg.primes = primes;
    cfg
}

/// Output of one subcommand.
struct Outcome {
    text: String,
    failure: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<(), CliError> {
    if let Some(t) = cli.global.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // a pool may already exist when called repeatedly in-process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let outcome = dispatch(cli)?;
    match &cli.global.out {
        Some(path) => {
            fs::write(path, &outcome.text)?;
            let manifest = serde_json::to_string_pretty(&RunManifest::new(cli)).expect("manifest serializes");
            let mut mpath = path.clone().into_os_string();
            mpath.push(".manifest.json");
            fs::write(PathBuf::from(mpath), manifest + "\n")?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.text.as_bytes())?;
        }
    }
    match outcome.failure {
        Some(f) => Err(CliError::Verification(f)),
        None => Ok(()),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn random_matrix(n: usize, seed: u64) -> Vec<Vec<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (0..n).map(|_| BigRational::from_integer(rng.gen_range(-9i64..=9).into())).collect()).collect()
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let heavy = g.tier == Tier::Heavy;
    match &cli.command {
        Command::Minors { n, random, input } => {
            let m = match (random, input) {
                (true, None) => random_matrix(*n, g.seed),
                (false, Some(p)) => format::parse_matrix(&read(p)?)?,
                _ => return Err(CliError::Usage("give exactly one of --random or --input".into())),
            };
            if m.len() > 8 {
                return Err(CliError::Usage("n must be at most 8".into()));
            }
            Ok(Outcome::ok(principal_minors(&m)?.to_text()))
        }
        Command::Convert { to, canonical, input } => {
            let text = read(input)?;
            if *canonical {
                return Ok(Outcome::ok(format::parse_and_print(&text)?));
            }
            let to = to.ok_or_else(|| CliError::Usage("--to or --canonical is required".into()))?;
            Ok(Outcome::ok(convert(&text, to)?))
        }
        Command::Realize3 { random, input } => {
            let u = match (random, input) {
                (true, None) => principal_minors(&random_matrix(3, g.seed))?,
                (false, Some(p)) => MinorVector::<BigRational>::parse_text(&read(p)?)?,
                _ => return Err(CliError::Usage("give exactly one of --random or an input file".into())),
            };
            if u.n() != 3 {
                return Err(CliError::Usage(format!("expected a vector for n = 3, got n = {}", u.n())));
            }
            let mats = realize_3(&u)?;
            let mut text = String::new();
            let mut failure = None;
            for (k, m) in mats.iter().enumerate() {
                let back = principal_minors(m)?;
                let ok = u.iter().all(|(s, v)| *back.get(s) == crate::exactpoly::QuadExt::rational(v.clone()));
                if !ok {
                    failure = Some(format!("realization {} does not reproduce the input", k + 1));
                }
                text.push_str(&format!("# realization {} (round trip {})\n", k + 1, if ok { "exact" } else { "FAILED" }));
                for row in m {
                    text.push_str(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\t"));
                    text.push('\n');
                }
            }
            Ok(Outcome { text, failure })
        }
        Command::Member4 { generators, input } => {
            let u = MinorVector::<BigRational>::parse_text(&read(input)?)?;
            let gens = load_generators(generators.as_ref(), g)?;
            let polys: Vec<IntPoly> = gens.iter().map(|r| r.poly_c.clone()).collect();
            let r = is_realizable_4(&u, &polys)?;
            let ids: Vec<Option<u32>> = r.nonvanishing.iter().map(|&k| gens[k].id).collect();
            let json = serde_json::json!({ "realizable": r.realizable, "generators": polys.len(), "nonvanishing": ids });
            Ok(Outcome::ok(format!("{json}\n")))
        }
        Command::Decompose { cycles } => {
            let cs: Vec<Cycle> = cycles.iter().map(|c| Cycle::parse(c)).collect::<Result<_, _>>().map_err(|e| CliError::Usage(e.to_string()))?;
            let out = product_decompose(&cs)?;
            let ok = CycleGraph::from_cycles(&out) == CycleGraph::from_cycles(&cs) && out.iter().all(|c| c.len() < cs[0].len());
            let text = format!("{} = {}\n", format_cycles(&cs), format_cycles(&out));
            Ok(Outcome { text, failure: (!ok).then(|| "decomposition does not preserve the product".into()) })
        }
        Command::Nanson { samples } => {
            let check = checks::nanson_vanishing(*samples, heavy, g.seed);
            let mut text: String = nanson_minors()?.iter().map(|r| r.to_json() + "\n").collect();
            text.push_str(&format!("# {}\n", check.line()));
            Ok(Outcome { text, failure: (!check.passed).then(|| check.detail) })
        }
        Command::Census { max } => {
            let max = max.unwrap_or(if heavy { 7 } else { 5 });
            if max > 7 {
                return Err(CliError::Usage("--max must be at most 7".into()));
            }
            let c = census(Coords::CycleSums, max, CensusMode::Orbit, &miner_config(g))?;
            let recs = c.records()?;
            store_cache(&recs)?;
            let rows: Vec<_> = Census::compare(&recs)
                .into_iter()
                .filter(|r| r.multidegree.iter().all(|&x| x <= max))
                .collect();
            let mism: Vec<u32> = rows.iter().filter(|r| !r.matches() && r.multidegree != [5, 5, 5, 5]).map(|r| r.id).collect();
            let mut text = format!("# {} minimal generators in [0,{}]^4\n", c.total_minimal(), max);
            if g.out.is_some() {
                text.extend(recs.iter().map(|r| r.to_json() + "\n"));
            } else {
                text.push_str(&format_comparison(&rows));
            }
            Ok(Outcome { text, failure: (!mism.is_empty()).then(|| format!("rows {mism:?} differ from the table")) })
        }
        Command::Mine { degree, coords } => {
            let d: [u32; 4] = degree.clone().try_into().map_err(|_| CliError::Usage("--degree needs four values".into()))?;
            let coords = match coords {
                Target::CycleSums => Coords::CycleSums,
                Target::Minors => Coords::Minors,
            };
            let c = census_box(coords, &d, &miner_config(g))?;
            let summary = c.components.iter().find(|s| s.multidegree == d).expect("component mined");
            let mut text = serde_json::to_string(summary).expect("summary serializes") + "\n";
            for (id, r) in c.generators.iter().filter(|(_, r)| r.multidegree == d) {
                let rec = match coords {
                    Coords::CycleSums => {
                        GeneratorRecord { id: *id, multidegree: d.to_vec(), poly_c: r.poly.clone(), poly_a: r.minor_form().clone() }
                    }
                    Coords::Minors => GeneratorRecord { id: None, multidegree: d.to_vec(), poly_c: IntPoly::zero(), poly_a: r.poly.clone() },
                };
                text.push_str(&rec.to_json());
                text.push('\n');
            }
            Ok(Outcome::ok(text))
        }
        Command::Orbit { degree, input } => {
            let seed = match (degree, input) {
                (Some(d), None) => {
                    let d: [u32; 4] = d.clone().try_into().map_err(|_| CliError::Usage("--degree needs four values".into()))?;
                    let c = census_box(Coords::CycleSums, &d, &miner_config(g))?;
                    let r = c
                        .generators
                        .iter()
                        .find(|(_, r)| r.multidegree == d)
                        .ok_or_else(|| CliError::Usage(format!("no minimal generator at {d:?}")))?;
                    homogenize(&to_minor_coordinates(&r.1.poly)?, 12)?
                }
                (None, Some(p)) => {
                    let f = format::parse_single_poly(&read(p)?)?;
                    homogenize(&to_minor_coordinates(&f)?, 12)?
                }
                (None, None) => homogenize(&to_minor_coordinates(&nanson_minor(1)?)?, 12)?,
                _ => unreachable!("clap rejects both"),
            };
            let (report, _) = module_report(0, &seed)?;
            Ok(Outcome::ok(report.to_json() + "\n"))
        }
        Command::NodeCheck { samples } => {
            let b = node_check_batch(*samples, g.seed)?;
            let mut text: String = b.reports.iter().map(|r| r.to_json() + "\n").collect();
            for r in &b.redraws {
                text.push_str(&format!("# re-drawn: {}\n", r.to_json()));
            }
            let fails = b.reports.iter().filter(|r| r.status != NodeStatus::Pass).count();
            Ok(Outcome { text, failure: (fails > 0).then(|| format!("{fails} of {samples} samples did not pass")) })
        }
        Command::Hyperdet => {
            let f = if heavy { schlafli_expand()? } else { schlafli_in_cycle_sums()? };
            let names = |s: u32| {
                if heavy {
                    table_var(s)
                } else {
                    crate::exactpoly::Var::c(SubsetIndex(s as u8))
                }
            };
            let poly = f.to_int_poly(names);
            let mut text = format!("# {} terms, degree {:?}\n", poly.len(), poly.total_degree());
            if g.out.is_some() {
                text.push_str(&format::compressed(&poly));
            }
            Ok(Outcome::ok(text))
        }
        Command::VerifyAll => {
            let results = verify_all(g);
            let mut text = String::new();
            for c in &results {
                text.push_str(&c.line());
                text.push('\n');
            }
            let failed: Vec<u8> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
            Ok(Outcome { text, failure: (!failed.is_empty()).then(|| format!("criteria {failed:?} failed")) })
        }
    }
}

/// Runs the checks of a tier.
pub fn verify_all(g: &Global) -> Vec<checks::Check> {
    let heavy = g.tier == Tier::Heavy;
    let cfg = miner_config(g);
    let mut out = vec![
        checks::transforms(1000, g.seed),
        checks::nanson_vanishing(200, heavy, g.seed),
        checks::census_fast(),
    ];
    let keys = checks::mine_key_components(&cfg);
    out.push(checks::mining(&keys));
    if heavy {
        match census(Coords::CycleSums, 7, CensusMode::Orbit, &cfg) {
            Ok(c) => {
                out.push(checks::full_census(&c));
                let gens: Vec<IntPoly> = c.generators.iter().map(|(_, r)| r.poly.clone()).collect();
                let data = keys
                    .as_ref()
                    .map_err(|e| e.to_string().into())
                    .and_then(|k| checks::module_data([&k.d.poly, &k.e.poly, &k.f.poly], &gens));
                out.push(checks::modules(&data));
            }
            Err(e) => {
                out.push(checks::Check { id: 5, name: "full census", passed: false, detail: e.to_string() });
                out.push(checks::Check { id: 6, name: "representation theory", passed: false, detail: e.to_string() });
            }
        }
    }
    out.push(checks::cycle_decomposition());
    out.push(checks::node_check(20, g.seed));
    if heavy {
        out.push(checks::schlafli(true, g.seed));
    }
    out
}

fn convert(text: &str, to: Target) -> Result<String, CliError> {
    if text.lines().any(|l| l.contains('\t')) {
        let u = MinorVector::<BigRational>::parse_text(text)?;
        let v = match to {
            Target::CycleSums => minors_to_cyclesums(&u)?,
            Target::Minors => cyclesums_to_minors(&u)?,
        };
        return Ok(v.to_text());
    }
    let mut out = String::new();
    for f in format::parse_poly_lines(text)? {
        let g = match to {
            Target::Minors => to_minor_coordinates(&f)?,
            Target::CycleSums => {
                let assignment = SubsetIndex::all(4)
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .map(|s| (crate::exactpoly::Var::a(s), minor_in_cyclesums(s)))
                    .collect();
                f.substitute_partial(&assignment)?
            }
        };
        out.push_str(&g.to_string());
        out.push('\n');
    }
    Ok(out)
}

fn cache_file() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join("generators.jsonl"))
}

fn store_cache(recs: &[GeneratorRecord]) -> Result<(), CliError> {
    if let Some(path) = cache_file() {
        if recs.len() == 65 {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir)?;
            }
            fs::write(path, recs.iter().map(|r| r.to_json() + "\n").collect::<String>())?;
        }
    }
    Ok(())
}

fn load_generators(path: Option<&PathBuf>, g: &Global) -> Result<Vec<GeneratorRecord>, CliError> {
    let from_file = |p: &PathBuf| -> Result<Vec<GeneratorRecord>, CliError> {
        read(p)?
            .lines()
            .filter(|l| l.trim_start().starts_with('{'))
            .map(|l| GeneratorRecord::from_json(l).map_err(CliError::from))
            .collect()
    };
    if let Some(p) = path {
        return from_file(p);
    }
    if let Some(p) = cache_file().filter(|p| p.exists()) {
        return from_file(&p);
    }
    if g.tier == Tier::Heavy {
        let c = census(Coords::CycleSums, 7, CensusMode::Orbit, &miner_config(g))?;
        let recs = c.records()?;
        store_cache(&recs)?;
        return Ok(recs);
    }
    Err(CliError::Usage(format!(
        "generator set not loaded: pass --generators, set {CACHE_ENV} to a cache from `census --tier heavy`, or use --tier heavy"
    )))
}

/// Principal minors of an integer matrix as a vector file.
pub fn minors_text(m: &[Vec<i64>]) -> String {
    let m: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    principal_minors(&m).expect("square matrix").to_text()
}
