use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fanokit::dataio::{self, Dataset, KeyEquations, DATA_ENV};
use fanokit::hilbert::{self, ci_numerator, parse_int_poly, HilbertSeries};
use fanokit::ideals::Budget;
use fanokit::pipeline::{self, ClaimCMode, Depth, Verdict, VerificationReport, VerifyOptions, DEFAULT_PRIME};
use fanokit::poly::{parse_poly, Coeff, Field};
use fanokit::singularity::{self, Basket, ChartSystem};
use fanokit::wps::WeightedSpace;
use serde::Deserialize;

/// Exit status for usage and I/O errors.
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "fanokit", version, about = "Verify weighted complete intersections in key varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ambient, T-embedding and profile checks for the selected classes.
    TableCheck(TableArgs),
    /// Table checks and, at full depth, Claims A, B and C.
    Verify(VerifyArgs),
    /// Hilbert series, genus and degree of a class or a complete intersection.
    Hilbert(HilbertArgs),
    /// Classify the points of a chart system given in a TOML file.
    Lpc(LpcArgs),
    /// Compare a computed basket with the expected one of a class.
    Basket(BasketArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct DataArgs {
    /// Dataset directory (defaults to the built-in dataset).
    #[arg(long, env = DATA_ENV)]
    data: Option<PathBuf>,
    /// Key-equation files to merge into the dataset.
    #[arg(long = "equations")]
    equations: Vec<PathBuf>,
}

impl DataArgs {
    fn load(&self) -> Result<Dataset> {
        let mut data = match &self.data {
            Some(dir) => Dataset::load(dir)?,
            None => Dataset::builtin(),
        };
        for path in &self.equations {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let e: KeyEquations = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            if e.format != dataio::FORMAT {
                bail!("{}: unsupported format tag '{}'", path.display(), e.format);
            }
            data.merge_equations(e)?;
        }
        Ok(data)
    }
}

#[derive(Args)]
struct Selection {
    /// Class number; repeat for several.
    #[arg(long = "class")]
    classes: Vec<u32>,
    /// Every class in the dataset.
    #[arg(long, conflicts_with = "classes")]
    all: bool,
}

impl Selection {
    fn numbers(&self, data: &Dataset) -> Result<Vec<u32>> {
        if self.all {
            return Ok(data.classes.iter().map(|c| c.number).collect());
        }
        if self.classes.is_empty() {
            bail!("select classes with --class N or --all");
        }
        Ok(self.classes.clone())
    }
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    select: Selection,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum DepthArg {
    TablesOnly,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimCArg {
    Full,
    BaseLocus,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    select: Selection,
    /// Parameter seeds; all must agree for a verdict.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    seeds: Vec<u64>,
    #[arg(long, value_enum, default_value = "tables-only")]
    depth: DepthArg,
    /// Characteristic of the base field.
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Claim C on the whole singular locus or only along the base loci of the T profile.
    #[arg(long = "claim-c", value_enum, default_value = "full")]
    claim_c: ClaimCArg,
    /// Groebner budget: maximum number of S-pairs.
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Groebner budget: maximum basis size.
    #[arg(long)]
    max_basis: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Class whose key numerator to use.
    #[arg(long = "class", conflicts_with_all = ["ci", "numerator"])]
    class: Option<u32>,
    /// Degrees of a complete intersection.
    #[arg(long, value_delimiter = ',', conflicts_with = "numerator")]
    ci: Vec<u32>,
    /// Explicit numerator, e.g. `1 - t^6`.
    #[arg(long)]
    numerator: Option<String>,
    /// Ambient weights (with --ci or --numerator).
    #[arg(long, value_delimiter = ',')]
    weights: Vec<u32>,
    /// Number of series coefficients to print.
    #[arg(long, default_value_t = 12)]
    terms: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct LpcArgs {
    /// System file (TOML).
    system: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BasketArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Class whose expected basket to compare against.
    #[arg(long = "class")]
    class: u32,
    /// Computed basket, e.g. `{2x1/2(1,1,1), 1/5(1,2,3)}`.
    #[arg(long, conflicts_with = "report")]
    computed: Option<String>,
    /// JSON report from `verify --format json` holding a computed basket.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Input of `lpc`: an ambient space, equations, and the chart to analyse.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LpcSystem {
    #[serde(default = "default_prime")]
    prime: u64,
    coordinates: Vec<String>,
    weights: Vec<u32>,
    equations: Vec<String>,
    chart: String,
    #[serde(default)]
    zero: Vec<String>,
    local_dimension: usize,
    /// A point of the chart slice (chart coordinates in order); all fixed points when absent.
    #[serde(default)]
    point: Option<Vec<i64>>,
}

fn default_prime() -> u64 {
    DEFAULT_PRIME
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::TableCheck(a) => {
            let data = a.data.load()?;
            let report = dataio::validate(&data);
            for e in &report.errors {
                eprintln!("dataset: {e}");
            }
            let opts = VerifyOptions::default();
            let reports = pipeline::verify_all(&data, &a.select.numbers(&data)?, &opts)?;
            emit(&reports, a.format);
            Ok(Verdict::all(reports.iter().map(|r| r.verdict)).and(Verdict::from_bool(report.ok())))
        }
        Command::Verify(a) => verify(a),
        Command::Hilbert(a) => hilbert_cmd(a),
        Command::Lpc(a) => lpc(a),
        Command::Basket(a) => basket(a),
    }
}

fn emit(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Text => print!("{}", pipeline::render_text(reports)),
        Format::Json => println!("{}", pipeline::render_json(reports)),
    }
}

fn verify(a: VerifyArgs) -> Result<Verdict> {
    if a.seeds.is_empty() {
        bail!("--seeds needs at least one seed");
    }
    if !fanokit::poly::is_prime(a.prime) {
        bail!("--prime {} is not prime", a.prime);
    }
    let data = a.data.load()?;
    let numbers = a.select.numbers(&data)?;
    let mut budget = Budget::default();
    if let Some(n) = a.max_pairs {
        budget.max_pairs = n;
    }
    if let Some(n) = a.max_basis {
        budget.max_basis = n;
    }
    let depth = match a.depth {
        DepthArg::TablesOnly => Depth::TablesOnly,
        DepthArg::Full => Depth::Full,
    };
    let claim_c = match a.claim_c {
        ClaimCArg::Full => ClaimCMode::Full,
        ClaimCArg::BaseLocus => ClaimCMode::ProfileBaseLoci,
    };
    let opts = VerifyOptions { seeds: a.seeds.clone(), depth, prime: a.prime, budget, claim_c };
    let results = pipeline::verify_all(&data, &numbers, &opts)?;
    emit(&results, a.format);
    Ok(Verdict::all(results.iter().map(|r| r.verdict)))
}

fn print_series(series: &HilbertSeries, terms: usize, format: Format) -> Result<Verdict> {
    let coeffs: Vec<String> = series.expand(terms).iter().map(ToString::to_string).collect();
    let degree = hilbert::anticanonical_degree(series);
    let g = hilbert::genus(series);
    match format {
        Format::Text => {
            println!("weights  {:?}", series.weights);
            println!("series   {}", coeffs.join(" "));
            match &degree {
                Ok(d) => println!("degree   {d}"),
                Err(e) => println!("degree   unavailable ({e})"),
            }
            println!("genus    {}", g.genus);
        }
        Format::Json => {
            let v = serde_json::json!({
                "weights": series.weights,
                "series": coeffs,
                "degree": degree.as_ref().ok().map(ToString::to_string),
                "genus": g.genus,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(if degree.is_ok() { Verdict::Pass } else { Verdict::Fail })
}

fn hilbert_cmd(a: HilbertArgs) -> Result<Verdict> {
    if let Some(n) = a.class {
        let data = a.data.load()?;
        let class = data.class(n).with_context(|| format!("unknown class No.{n}"))?;
        return match pipeline::class_series(&data, class)? {
            Some(s) => print_series(&s, a.terms, a.format),
            None => {
                eprintln!("key {} has no Hilbert numerator; supply one with --equations", class.key);
                Ok(Verdict::Inconclusive)
            }
        };
    }
    if a.weights.is_empty() {
        bail!("--weights is required with --ci or --numerator");
    }
    let numerator = match (&a.numerator, a.ci.is_empty()) {
        (Some(text), _) => parse_int_poly(text)?,
        (None, false) => ci_numerator(&a.ci),
        (None, true) => bail!("give --class, --ci or --numerator"),
    };
    print_series(&HilbertSeries::new(numerator, &a.weights), a.terms, a.format)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn lpc(a: LpcArgs) -> Result<Verdict> {
    let sys: LpcSystem = toml::from_str(&read(&a.system)?).with_context(|| format!("parsing {}", a.system.display()))?;
    let space = WeightedSpace::new(sys.coordinates.clone(), sys.weights.clone())?;
    let field = Field::prime(sys.prime)?;
    let ring = space.ring(field.clone());
    let eqs = sys.equations.iter().map(|e| parse_poly(&ring, e)).collect::<Result<Vec<_>, _>>()?;
    let chart_sys = ChartSystem::new(&space, &eqs, &sys.chart, &sys.zero, sys.local_dimension)?;
    let budget = Budget::default();
    if let Some(pt) = &sys.point {
        if pt.len() != chart_sys.chart.names.len() {
            bail!("point has {} coordinates; the chart has {:?}", pt.len(), chart_sys.chart.names);
        }
        let point: Vec<Coeff> = pt.iter().map(|&c| Coeff::from_i64(&field, c)).collect();
        let local = singularity::localize(&chart_sys, &point)?;
        let res = singularity::lpc_classify(&local)?;
        let verdict = Verdict::from_bool(!matches!(res.outcome, singularity::LpcOutcome::NotQuasiSmooth { .. }));
        match a.format {
            Format::Text => println!("rank {} complement {:?} stabilizer {}: {}", res.rank, res.complement, local.order, res.outcome),
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "rank": res.rank, "complement": res.complement, "order": local.order, "outcome": res.outcome,
                }))?
            ),
        }
        return Ok(verdict);
    }
    let census = singularity::fixed_point_census(&chart_sys, &budget)?;
    match a.format {
        Format::Text => {
            for c in &census.classes {
                println!("stabilizer {}: {} x {} (slice points {}, sample {})", c.order, c.points, c.outcome, c.affine_points, c.sample);
            }
            if census.classes.is_empty() {
                println!("no points with nontrivial stabilizer");
            }
            for d in &census.non_isolated {
                println!("stabilizer {d}: fixed locus is not isolated");
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&census)?),
    }
    let bad = census.classes.iter().any(|c| !matches!(c.outcome, singularity::LpcOutcome::Quotient { .. } | singularity::LpcOutcome::Smooth));
    Ok(if bad || !census.non_isolated.is_empty() {
        Verdict::Fail
    } else if census.incomplete {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    })
}

fn basket(a: BasketArgs) -> Result<Verdict> {
    let data = a.data.load()?;
    let class = data.class(a.class).with_context(|| format!("unknown class No.{}", a.class))?;
    let expected = Basket::parse(&class.basket)?;
    let computed_text = match (&a.computed, &a.report) {
        (Some(c), _) => c.clone(),
        (None, Some(path)) => {
            let reports: Vec<VerificationReport> = serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            let r = reports.iter().find(|r| r.class == a.class).with_context(|| format!("no report for No.{} in {}", a.class, path.display()))?;
            match &r.basket {
                Some(b) => b.clone(),
                None => {
                    eprintln!("report for No.{} has no computed basket", a.class);
                    return Ok(Verdict::Inconclusive);
                }
            }
        }
        (None, None) => bail!("give --computed or --report"),
    };
    let computed = Basket::parse(&computed_text)?;
    let (only_c, only_e) = computed.difference(&expected);
    let ok = computed == expected || computed.isomorphic(&expected);
    match a.format {
        Format::Text => {
            println!("computed {computed}");
            println!("expected {expected}");
            if !ok {
                println!("only computed {only_c}");
                println!("only expected {only_e}");
            }
            println!("{}", Verdict::from_bool(ok));
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "class": a.class, "computed": computed.to_string(), "expected": expected.to_string(),
                "only_computed": only_c.to_string(), "only_expected": only_e.to_string(), "verdict": Verdict::from_bool(ok),
            }))?
        ),
    }
    Ok(Verdict::from_bool(ok))
}
