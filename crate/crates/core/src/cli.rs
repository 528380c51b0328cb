//! Command-line front end: `classify`, `enumerate`, `map`, `verify` and
//! `experiment`.
//!
//! [`run`] parses arguments, writes to the given streams and returns the
//! process exit code: 0 on success, 1 when a verification fails, 2 on usage
//! or validation errors.  The environment variable `NAKAYAMA_MAX_N`
//! overrides the default size bounds of `verify`, `enumerate` and
//! `experiment`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bijections::{bjs, cycle_diagram, lk, lk_periodic, phi, zeta, zeta_labelling};
use crate::dyck::{parse_word, word_to_string, DyckPath, PathError, PeriodicDyckPath};
use crate::enumerate::{generate_cyclic, generate_linear};
use crate::experiment::joint_distribution;
use crate::homology::{is_quasi_hereditary, restricted_gorenstein_gd2, Dim, HomProfile, SimpleRecord};
use crate::kupisch::{Kind, KupischError, KupischSeries};
use crate::tables::{display_rotation, TableRow};
use crate::verify::{parse_suites, run_suite, Suite};

/// Environment variable overriding size bounds.
pub const MAX_N_ENV: &str = "NAKAYAMA_MAX_N";
/// Largest rank accepted by `enumerate` unless overridden.
pub const DEFAULT_ENUMERATE_BOUND: usize = 12;

/// Errors reported with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    /// The input is not a Kupisch series.
    #[error("invalid Kupisch series: {0}")]
    Kupisch(#[from] KupischError),
    /// The input is not a path.
    #[error("invalid path: {0}")]
    Path(#[from] PathError),
    /// A token could not be parsed.
    #[error("cannot parse {0:?}")]
    Parse(String),
    /// Unknown filter predicate.
    #[error("unknown predicate {0:?} (expected gdim, n_reg1, n_reg2, n_pdim1, n_pdim2, quasi_hereditary, restricted_gorenstein or bounce)")]
    UnknownPredicate(String),
    /// A size exceeds the configured bound.
    #[error("n = {n} exceeds the bound {bound} (set {MAX_N_ENV} to raise it)")]
    TooLarge {
        /// Requested size.
        n: usize,
        /// Bound in force.
        bound: usize,
    },
    /// The bijection is not defined on the input.
    #[error("{0}")]
    Bijection(#[from] crate::bijections::BijectionError),
    /// A required argument is missing.
    #[error("missing argument: {0}")]
    Missing(&'static str),
    /// Output failed.
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    /// Serialisation failed.
    #[error("serialisation: {0}")]
    Json(#[from] serde_json::Error),
    /// CSV output failed.
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Parser, Debug)]
#[command(name = "nakayama", version, about = "Homological invariants of Nakayama algebras via Dyck paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full homological report for one algebra.
    Classify(ClassifyArgs),
    /// List all algebras of a rank passing the given filters.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to a path.
    Map(MapArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Tabulate the joint distribution of 1-regular simples and 1-rises.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RowFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Kupisch series `c0,c1,...` (a trailing `*` marks a cyclic series).
    #[arg(long)]
    kupisch: Option<String>,
    /// Kupisch series given positionally.
    series: Option<String>,
    /// Treat the series as cyclic.
    #[arg(long)]
    cyclic: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Rank.
    n: usize,
    /// Enumerate cyclic algebras.
    #[arg(long)]
    cyclic: bool,
    /// Only this global shift (cyclic).
    #[arg(long)]
    shift: Option<usize>,
    /// Scan shifts `0..=max_shift` (cyclic).
    #[arg(long, default_value_t = 4)]
    max_shift: usize,
    /// Filter `pred=value`; repeatable.
    #[arg(long = "filter")]
    filters: Vec<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: RowFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BijectionName {
    Lk,
    Bjs,
    Zeta,
    Phi,
    Lkp,
}

#[derive(Args, Debug)]
struct MapArgs {
    /// Bijection to apply.
    #[arg(long = "bijection", value_enum)]
    bijection_flag: Option<BijectionName>,
    /// Input path: area sequence `c0,c1,...` (trailing `*` for periodic) or a
    /// step word over h/v or 1/0.
    #[arg(long = "input")]
    input_flag: Option<String>,
    /// Bijection given positionally.
    #[arg(value_enum)]
    bijection: Option<BijectionName>,
    /// Input given positionally.
    input: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite: oracle, bijections, counts, gf, fig5 or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Size bound (defaults per suite; `NAKAYAMA_MAX_N` overrides).
    #[arg(long)]
    max_n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Largest semilength.
    #[arg(long)]
    max_n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

/// Path data in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckSummary {
    /// Step word over `h` (horizontal) and `v` (vertical); one period for
    /// periodic paths.
    pub word: String,
    /// Area sequence.
    pub area: Vec<usize>,
    /// Global shift (minimal area entry minus two; zero for linear paths).
    pub shift: usize,
}

/// Report produced by `classify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    /// Kupisch series as given.
    pub kupisch: Vec<usize>,
    /// coKupisch series.
    pub cokupisch: Vec<usize>,
    /// Linear or cyclic.
    pub kind: Kind,
    /// Per-simple data.
    pub simples: Vec<SimpleRecord>,
    /// Global dimension.
    pub global_dimension: Dim,
    /// Quasi-heredity.
    pub quasi_hereditary: bool,
    /// Restricted Gorenstein condition (`null` when the global dimension
    /// exceeds two).
    pub restricted_gorenstein_gd2: Option<bool>,
    /// Number of exact structures, as a decimal string.
    pub exact_structures: String,
    /// The corresponding (periodic) Dyck path.
    pub dyck: DyckSummary,
}

impl ClassifyReport {
    /// Builds the report.
    pub fn of(k: &KupischSeries) -> Self {
        let profile = HomProfile::of(k);
        let dyck = match k.kind() {
            Kind::Linear => {
                let d = DyckPath::from_kupisch(k);
                DyckSummary { word: d.to_string(), area: d.area().to_vec(), shift: 0 }
            }
            Kind::Cyclic => {
                let p = PeriodicDyckPath::from_kupisch(k);
                DyckSummary { word: word_to_string(&p.word()), area: p.area().to_vec(), shift: p.shift() }
            }
        };
        Self {
            kupisch: k.entries().to_vec(),
            cokupisch: k.cokupisch().entries().to_vec(),
            kind: k.kind(),
            simples: profile.simples,
            global_dimension: profile.global_dimension,
            quasi_hereditary: profile.quasi_hereditary,
            restricted_gorenstein_gd2: profile.restricted_gorenstein_gd2,
            exact_structures: profile.exact_structures.to_string(),
            dyck,
        }
    }
}

/// One row of `enumerate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateRow {
    /// Kupisch series (display rotation for cyclic algebras).
    pub kupisch: Vec<usize>,
    /// 1-regular simples.
    pub reg1: Vec<usize>,
    /// 2-regular simples.
    pub reg2: Vec<usize>,
    /// Simples of projective dimension 1.
    pub pdim1: Vec<usize>,
    /// Simples of projective dimension 2.
    pub pdim2: Vec<usize>,
    /// Global dimension.
    pub gdim: Dim,
    /// Quasi-heredity.
    pub quasi_hereditary: bool,
    /// Restricted Gorenstein condition (`null` when the global dimension
    /// exceeds two).
    pub restricted_gorenstein: Option<bool>,
    /// Whether the path is a bounce path.
    pub bounce: bool,
}

impl EnumerateRow {
    fn of(k: &KupischSeries) -> Self {
        let t = TableRow::of(k);
        let bounce = match k.kind() {
            Kind::Linear => DyckPath::from_kupisch(k).stats().is_bounce,
            Kind::Cyclic => PeriodicDyckPath::from_kupisch(k).stats().is_bounce,
        };
        Self {
            kupisch: t.kupisch,
            reg1: t.reg1,
            reg2: t.reg2,
            pdim1: t.pdim1,
            pdim2: t.pdim2,
            gdim: t.gdim,
            quasi_hereditary: is_quasi_hereditary(k),
            restricted_gorenstein: restricted_gorenstein_gd2(k).ok(),
            bounce,
        }
    }

    fn csv_record(&self) -> Vec<String> {
        let set = |v: &[usize]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }
        };
        vec![
            format!("[{}]", self.kupisch.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")),
            set(&self.reg1),
            set(&self.reg2),
            set(&self.pdim1),
            set(&self.pdim2),
            self.gdim.to_string(),
            self.quasi_hereditary.to_string(),
            self.restricted_gorenstein.map_or("-".to_string(), |b| b.to_string()),
            self.bounce.to_string(),
        ]
    }
}

/// Column order of `enumerate --format csv`.
pub const ENUMERATE_COLUMNS: [&str; 9] = [
    "kupisch",
    "reg1",
    "reg2",
    "pdim1",
    "pdim2",
    "gdim",
    "quasi_hereditary",
    "restricted_gorenstein",
    "bounce",
];

/// Image of a path under a bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    /// Bijection applied.
    pub bijection: String,
    /// Input path.
    pub input: DyckSummary,
    /// Image path (absent for the permutation map).
    pub image: Option<DyckSummary>,
    /// Image of a periodic path in display rotation, e.g. `5,4,3*`.
    pub image_display: Option<String>,
    /// One-line permutation.
    pub permutation: Option<Vec<usize>>,
    /// Zeta labelling `k(1), …, k(n)`.
    pub labelling: Option<Vec<usize>>,
    /// Composition read from the cycle diagram.
    pub alpha: Option<Vec<usize>>,
    /// Number of 1-cuts of the involution image.
    pub one_cuts: Option<usize>,
}

/// A filter `pred=value` of `enumerate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    /// Global dimension.
    Gdim(Dim),
    /// Number of 1-regular simples.
    NReg1(usize),
    /// Number of 2-regular simples.
    NReg2(usize),
    /// Number of simples of projective dimension 1.
    NPdim1(usize),
    /// Number of simples of projective dimension 2.
    NPdim2(usize),
    /// Quasi-heredity.
    QuasiHereditary(bool),
    /// Restricted Gorenstein of global dimension at most two.
    RestrictedGorenstein(bool),
    /// Bounce path.
    Bounce(bool),
}

impl Filter {
    /// Parses `pred=value`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let (pred, value) = text.split_once('=').ok_or_else(|| CliError::Parse(text.to_string()))?;
        let num = || value.trim().parse::<usize>().map_err(|_| CliError::Parse(text.to_string()));
        let flag = || match value.trim() {
            "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            _ => Err(CliError::Parse(text.to_string())),
        };
        Ok(match pred.trim() {
            "gdim" => Filter::Gdim(match value.trim() {
                "inf" | "infinity" => Dim::Infinite,
                _ => Dim::Finite(num()?),
            }),
            "n_reg1" => Filter::NReg1(num()?),
            "n_reg2" => Filter::NReg2(num()?),
            "n_pdim1" => Filter::NPdim1(num()?),
            "n_pdim2" => Filter::NPdim2(num()?),
            "quasi_hereditary" => Filter::QuasiHereditary(flag()?),
            "restricted_gorenstein" => Filter::RestrictedGorenstein(flag()?),
            "bounce" => Filter::Bounce(flag()?),
            other => return Err(CliError::UnknownPredicate(other.to_string())),
        })
    }

    /// Whether a row passes.
    pub fn accepts(&self, row: &EnumerateRow) -> bool {
        match *self {
            Filter::Gdim(d) => row.gdim == d,
            Filter::NReg1(v) => row.reg1.len() == v,
            Filter::NReg2(v) => row.reg2.len() == v,
            Filter::NPdim1(v) => row.pdim1.len() == v,
            Filter::NPdim2(v) => row.pdim2.len() == v,
            Filter::QuasiHereditary(b) => row.quasi_hereditary == b,
            Filter::RestrictedGorenstein(b) => row.restricted_gorenstein.unwrap_or(false) == b,
            Filter::Bounce(b) => row.bounce == b,
        }
    }
}

/// Size bound from `NAKAYAMA_MAX_N`, if set and numeric.
pub fn env_max_n() -> Option<usize> {
    std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok())
}

/// Parses a Kupisch series `c0,c1,...`, optionally bracketed; a trailing
/// `*` (or `cyclic`) makes it cyclic.
pub fn parse_kupisch(text: &str, cyclic: bool) -> Result<KupischSeries, CliError> {
    let trimmed = text.trim();
    let (body, star) = match trimmed.strip_suffix('*') {
        Some(b) => (b, true),
        None => (trimmed, false),
    };
    let entries = parse_numbers(body)?;
    let kind = if cyclic || star { Kind::Cyclic } else { Kind::Linear };
    Ok(KupischSeries::new(entries, kind)?)
}

fn parse_numbers(text: &str) -> Result<Vec<usize>, CliError> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| CliError::Parse(t.to_string())))
        .collect()
}

/// A parsed path argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathInput {
    /// A Dyck path.
    Linear(DyckPath),
    /// A periodic Dyck path.
    Periodic(PeriodicDyckPath),
}

/// Parses a path: a word over `h/v`, a comma-separated word over `1/0`
/// (recognised by the presence of a `0`), or an area sequence (trailing `*`
/// for periodic paths).
pub fn parse_path(text: &str, periodic: bool) -> Result<PathInput, CliError> {
    let trimmed = text.trim();
    let (body, star) = match trimmed.strip_suffix('*') {
        Some(b) => (b, true),
        None => (trimmed, false),
    };
    let is_word = body.chars().any(|c| matches!(c, 'h' | 'v' | 'H' | 'V'))
        || parse_numbers(body).is_ok_and(|v| v.contains(&0));
    if periodic || star {
        if is_word {
            return Err(CliError::Parse(format!("{text}: periodic paths are given by area sequences")));
        }
        return Ok(PathInput::Periodic(PeriodicDyckPath::from_area(parse_numbers(body)?)?));
    }
    if is_word {
        Ok(PathInput::Linear(DyckPath::from_word(&parse_word(body)?)?))
    } else {
        Ok(PathInput::Linear(DyckPath::from_area(parse_numbers(body)?)?))
    }
}

fn summary(d: &DyckPath) -> DyckSummary {
    DyckSummary { word: d.to_string(), area: d.area().to_vec(), shift: 0 }
}

fn periodic_summary(p: &PeriodicDyckPath) -> DyckSummary {
    DyckSummary { word: word_to_string(&p.word()), area: p.area().to_vec(), shift: p.shift() }
}

/// Runs the command line, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify(a) => classify(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Map(a) => map(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Experiment(a) => experiment(a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn set_text(v: &[usize]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

fn classify(a: ClassifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = a.kupisch.or(a.series).ok_or(CliError::Missing("--kupisch"))?;
    let k = parse_kupisch(&text, a.cyclic)?;
    let report = ClassifyReport::of(&k);
    match a.format {
        ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        ReportFormat::Table => {
            let pick = |f: &dyn Fn(&SimpleRecord) -> bool| -> Vec<usize> {
                report.simples.iter().filter(|s| f(s)).map(|s| s.index).collect()
            };
            writeln!(out, "kupisch            {k}")?;
            writeln!(out, "kind               {}", report.kind)?;
            writeln!(out, "cokupisch          {}", set_text(&report.cokupisch))?;
            writeln!(out, "1-regular          {}", set_text(&pick(&|s| s.regular1)))?;
            writeln!(out, "2-regular          {}", set_text(&pick(&|s| s.regular2)))?;
            writeln!(out, "pdim 1             {}", set_text(&pick(&|s| s.pdim == Dim::Finite(1))))?;
            writeln!(out, "pdim 2             {}", set_text(&pick(&|s| s.pdim == Dim::Finite(2))))?;
            writeln!(out, "global dimension   {}", report.global_dimension)?;
            writeln!(out, "quasi-hereditary   {}", report.quasi_hereditary)?;
            writeln!(
                out,
                "restricted Gorenstein (gd ≤ 2) {}",
                report.restricted_gorenstein_gd2.map_or("-".to_string(), |b| b.to_string())
            )?;
            writeln!(out, "exact structures   {}", report.exact_structures)?;
            writeln!(out, "dyck word          {}", report.dyck.word)?;
            writeln!(out, "dyck shift         {}", report.dyck.shift)?;
            writeln!(out, "index  pdim  1-reg  2-reg")?;
            for s in &report.simples {
                writeln!(out, "{:>5}  {:>4}  {:>5}  {:>5}", s.index, s.pdim, s.regular1, s.regular2)?;
            }
        }
    }
    Ok(0)
}

/// Algebras listed by `enumerate`, in output order.
pub fn enumerate_algebras(n: usize, cyclic: bool, shifts: &[usize]) -> Vec<KupischSeries> {
    if !cyclic {
        return generate_linear(n);
    }
    let mut out = Vec::new();
    for &s in shifts {
        let mut block: Vec<KupischSeries> = generate_cyclic(n, s).iter().map(display_rotation).collect();
        block.sort_by_key(|k| (k.entries().iter().copied().min(), k.entries().to_vec()));
        out.extend(block);
    }
    out
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let bound = env_max_n().unwrap_or(DEFAULT_ENUMERATE_BOUND);
    if a.n > bound {
        return Err(CliError::TooLarge { n: a.n, bound });
    }
    let filters = a.filters.iter().map(|f| Filter::parse(f)).collect::<Result<Vec<_>, _>>()?;
    let shifts: Vec<usize> = match a.shift {
        Some(s) => vec![s],
        None => (0..=a.max_shift).collect(),
    };
    let rows: Vec<EnumerateRow> = enumerate_algebras(a.n, a.cyclic, &shifts)
        .iter()
        .map(EnumerateRow::of)
        .filter(|r| filters.iter().all(|f| f.accepts(r)))
        .collect();
    match a.format {
        RowFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        RowFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(ENUMERATE_COLUMNS)?;
            for r in &rows {
                w.write_record(r.csv_record())?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            out.write_all(&bytes)?;
        }
    }
    Ok(0)
}

/// Applies a bijection to a parsed path.
pub fn map_report(name: &str, input: &PathInput) -> Result<MapReport, CliError> {
    let mut report = MapReport {
        bijection: name.to_string(),
        input: match input {
            PathInput::Linear(d) => summary(d),
            PathInput::Periodic(p) => periodic_summary(p),
        },
        image: None,
        image_display: None,
        permutation: None,
        labelling: None,
        alpha: None,
        one_cuts: None,
    };
    let linear = || match input {
        PathInput::Linear(d) => Ok(d),
        PathInput::Periodic(p) => Err(CliError::Bijection(crate::bijections::BijectionError::OutOfDomain(format!(
            "{p}: {name} acts on Dyck paths"
        )))),
    };
    match name {
        "lk" => report.image = Some(summary(&lk(linear()?))),
        "bjs" => report.permutation = Some(bjs(linear()?).values().to_vec()),
        "zeta" => {
            let d = linear()?;
            report.image = Some(summary(&zeta(d)));
            report.labelling = Some(zeta_labelling(d));
        }
        "phi" => {
            let d = linear()?;
            let diagram = cycle_diagram(d);
            report.image = Some(summary(&phi(d)));
            report.alpha = Some(diagram.alpha.clone());
            report.one_cuts = Some(diagram.one_cuts);
        }
        "lkp" => {
            let p = match input {
                PathInput::Periodic(p) => p.clone(),
                PathInput::Linear(d) => PeriodicDyckPath::from_area(d.area().to_vec())?,
            };
            let img = lk_periodic(&p)?;
            let display = display_rotation(&img.to_kupisch());
            report.image_display = Some(display.to_string());
            report.image = Some(periodic_summary(&img));
        }
        other => return Err(CliError::Parse(other.to_string())),
    }
    Ok(report)
}

fn bijection_name(b: BijectionName) -> &'static str {
    match b {
        BijectionName::Lk => "lk",
        BijectionName::Bjs => "bjs",
        BijectionName::Zeta => "zeta",
        BijectionName::Phi => "phi",
        BijectionName::Lkp => "lkp",
    }
}

fn map(a: MapArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let b = a.bijection_flag.or(a.bijection).ok_or(CliError::Missing("--bijection"))?;
    let text = a.input_flag.or(a.input).ok_or(CliError::Missing("--input"))?;
    let input = parse_path(&text, b == BijectionName::Lkp)?;
    let report = map_report(bijection_name(b), &input)?;
    match a.format {
        TextFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        TextFormat::Text => {
            writeln!(out, "bijection: {}", report.bijection)?;
            writeln!(out, "input: {}", set_text(&report.input.area))?;
            if let Some(d) = &report.image_display {
                writeln!(out, "image: {d}")?;
            }
            if let Some(img) = &report.image {
                writeln!(out, "image area: {}", set_text(&img.area))?;
                writeln!(out, "image word: {}", img.word)?;
            }
            if let Some(p) = &report.permutation {
                writeln!(out, "permutation: {}", p.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))?;
            }
            if let Some(k) = &report.labelling {
                writeln!(out, "labelling: {}", set_text(k))?;
            }
            if let Some(alpha) = &report.alpha {
                writeln!(out, "alpha: {}", set_text(alpha))?;
            }
            if let Some(c) = report.one_cuts {
                writeln!(out, "one-cuts: {c}")?;
            }
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let suites: Vec<Suite> = parse_suites(&a.suite).map_err(|e| CliError::Parse(e.to_string()))?;
    let max_n = a.max_n.or_else(env_max_n);
    let mut reports = Vec::new();
    let mut passed = true;
    for suite in suites {
        let report = run_suite(suite, max_n);
        passed &= report.passed();
        if let TextFormat::Text = a.format {
            writeln!(out, "== {} (n ≤ {})", report.suite, report.max_n)?;
            for check in &report.checks {
                writeln!(out, "{check}")?;
            }
        }
        reports.push(report);
    }
    match a.format {
        TextFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
        TextFormat::Text => writeln!(out, "{}", if passed { "ALL PASSED" } else { "FAILURES" })?,
    }
    Ok(if passed { 0 } else { 1 })
}

fn experiment(a: ExperimentArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let max_n = a.max_n.or_else(env_max_n).unwrap_or(8);
    let tables: Vec<_> = (1..=max_n).map(joint_distribution).collect();
    match a.format {
        TextFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&tables)?)?,
        TextFormat::Text => {
            writeln!(out, "joint distribution of (#1-regular simples, #1-rises); not asserted")?;
            for t in &tables {
                let cells: Vec<String> = t.counts.iter().map(|(k, v)| format!("({k}):{v}")).collect();
                writeln!(out, "n={} symmetric={} {}", t.semilength, t.symmetric, cells.join(" "))?;
            }
        }
    }
    Ok(0)
}
