//! The `tatebv` command line: argument parsing, command dispatch and
//! rendering. [`run`] returns the exit code and the text that would be
//! printed, so the whole surface can be exercised in-process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use tatebv_core::Preset;

use crate::bundle::{Job, ResultBundle, TableEntry, Tables};
use crate::config::{exit, parse_window, CliError, Format, GroupSpec, JobConfig};
use crate::connes;
use crate::s3;
use crate::suites::{SuiteOptions, SuiteReport, Suites};

#[derive(Debug, Parser)]
#[command(name = "tatebv", version, about = "Exact Tate-Hochschild cohomology of finite group algebras with its BV structure")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Group: `preset:param` (cyclic, dihedral, symmetric, klein_four,
    /// quaternion8), `perms:"(0 1 2),(0 1)"` or `file:PATH` (JSON table).
    #[arg(long, global = true, default_value = "symmetric:3")]
    pub group: String,
    /// Characteristic of the prime field.
    #[arg(long = "char", global = true, default_value_t = 3)]
    pub p: u32,
    /// Degree window `LO..HI` (inclusive).
    #[arg(long, global = true, default_value = "-4..3", allow_hyphen_values = true)]
    pub window: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "json")]
    pub format: String,
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Cap on basis elements per degree of `D*(kG,kG)` (direct path).
    #[arg(long, global = true)]
    pub direct_cap: Option<u128>,
    /// Cap on basis elements per degree of the centralizer complexes.
    #[arg(long, global = true)]
    pub decomposition_cap: Option<u128>,
    /// Directory for CSV output (one file per table); stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group, classes, centralizers and cost estimates.
    Info,
    /// Dimensions of the cohomology per degree, total and per class.
    Dims,
    /// Structure constants of the cup product, the BV operator and the bracket.
    Tables,
    /// The presentation, BV table and bracket list of kS3 over F3.
    VerifyS3,
    /// Connes' operator on group homology sends cycles to boundaries.
    VerifyAppendixB {
        /// Highest homological degree s checked.
        #[arg(long, default_value_t = 2)]
        max_s: usize,
    },
    /// Randomized identity suites.
    Selftest {
        /// Minimum samples per suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Fault injection: perturb the differential seen by the d² = 0 suite.
        #[arg(long, hide = true)]
        mutate_differential: bool,
    },
    /// Sparse dump of the differentials of D*(kG,kG) in the window.
    ExportDiff,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info => "info",
            Command::Dims => "dims",
            Command::Tables => "tables",
            Command::VerifyS3 => "verify-s3",
            Command::VerifyAppendixB { .. } => "verify-appendix-b",
            Command::Selftest { .. } => "selftest",
            Command::ExportDiff => "export-diff",
        }
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &CliError) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INVALID_CONFIG } else { exit::SUCCESS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn config(cli: &Cli) -> Result<JobConfig, CliError> {
    let group: GroupSpec = cli.group.parse()?;
    let window = parse_window(&cli.window)?;
    let format: Format = cli.format.parse()?;
    let mut config = JobConfig::new(group, cli.p, window, cli.seed, format, cli.threads)?;
    let (direct, decomposition) = (config.direct_cap, config.decomposition_cap);
    config = config.with_caps(cli.direct_cap.unwrap_or(direct), cli.decomposition_cap.unwrap_or(decomposition));
    Ok(config)
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let config = config(cli)?;
    let command = cli.command.name();
    if let Command::VerifyS3 = cli.command {
        if config.p != 3 || config.group != (GroupSpec::Preset { preset: Preset::Symmetric, param: 3 }) {
            return Err(CliError::Config("verify-s3 runs on --group symmetric:3 --char 3".into()));
        }
    }
    let job = Job::new(config)?;
    let mut code = exit::SUCCESS;
    let (bundle, text) = match &cli.command {
        Command::Info => {
            let info = info(&job);
            let text = render_info(&job, &info);
            (job.bundle(command, Vec::new(), single("info", &info)), text)
        }
        Command::Dims => {
            let dims = job.dims()?;
            let bundle = job.bundle(command, dims, BTreeMap::new());
            let text = render_dims(&bundle);
            (bundle, text)
        }
        Command::Tables => {
            let dims = job.dims()?;
            let tables = job.tables()?;
            if tables.spot_checks.failed > 0 {
                code = exit::VERIFICATION_FAILURE;
            }
            let text = render_tables(&tables);
            (job.bundle(command, dims, tables.to_json()), text)
        }
        Command::VerifyS3 => {
            let report = s3::verify()?;
            if !report.bv_ok() {
                code = exit::VERIFICATION_FAILURE;
            }
            let text = render_s3(&report);
            let dims = job.dims()?;
            (job.bundle(command, dims, s3_tables(&report)), text)
        }
        Command::VerifyAppendixB { max_s } => {
            let p = job.config.p as usize;
            if job.hh.group().order() % p != 0 {
                return Err(CliError::Config(format!("verify-appendix-b needs p | |G| (p = {p}, |G| = {})", job.hh.group().order())));
            }
            let report = connes::verify(job.hh.clone(), *max_s)?;
            if !report.passed() {
                code = exit::VERIFICATION_FAILURE;
            }
            let mut text = String::new();
            for d in &report.degrees {
                let status = if d.failures == 0 { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    text,
                    "{status} s = {}: {} cycles, {} map to 0, {} map to nonzero boundaries, {} map to non-boundaries",
                    d.s, d.cycles, d.vanishing, d.boundaries, d.failures
                );
            }
            (job.bundle(command, Vec::new(), single("connes", &report)), text)
        }
        Command::Selftest { samples, mutate_differential } => {
            let (lo, hi) = job.config.window;
            let opts = SuiteOptions { seed: job.config.seed, samples: *samples, lo, hi, mutate_differential: *mutate_differential, ..SuiteOptions::default() };
            let suites = Suites::new(Arc::new(tatebv_core::Hochschild::new(job.hh.group().clone(), job.config.field())), opts);
            let reports = suites.run_all()?;
            if reports.iter().any(|r| !r.passed()) {
                code = exit::VERIFICATION_FAILURE;
            }
            let text = render_suites(&reports);
            (job.bundle(command, Vec::new(), single("selftest", &reports)), text)
        }
        Command::ExportDiff => {
            let diffs = export_diff(&job)?;
            let text = diffs.iter().map(|d| format!("d: D^{} -> D^{}  {}x{}, {} nonzero\n", d.from, d.to, d.rows, d.cols, d.entries.len())).collect();
            (job.bundle(command, Vec::new(), single("differentials", &diffs)), text)
        }
    };
    let stdout = match job.config.format {
        Format::Json => serde_json::to_string_pretty(&bundle).expect("bundle serializes") + "\n",
        Format::Text => text,
        Format::Csv => write_csv(&bundle, cli.out.as_deref())?,
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn single<T: Serialize>(key: &str, value: &T) -> BTreeMap<String, serde_json::Value> {
    BTreeMap::from([(key.to_string(), serde_json::to_value(value).expect("serializable"))])
}

#[derive(Debug, Serialize)]
struct Info {
    order: usize,
    abelian: bool,
    p_divides_order: bool,
    classes: usize,
    /// Largest basis per degree of `D*(kG,kG)` over the window (and its neighbours).
    direct_cost: u128,
    direct_affordable: bool,
    decomposition_cost: u128,
    /// `(degree, dim D^n, largest centralizer complex in degree n)`.
    basis_sizes: Vec<(i32, u128, u128)>,
}

fn info(job: &Job) -> Info {
    let g = job.hh.group();
    let (lo, hi) = job.config.window;
    Info {
        order: g.order(),
        abelian: g.is_abelian(),
        p_divides_order: g.order() % job.config.p as usize == 0,
        classes: job.dec.len(),
        direct_cost: job.direct_cost(),
        direct_affordable: job.direct_affordable(),
        decomposition_cost: (lo - 1..=hi + 1).map(|m| job.dec.cost_estimate(m)).max().unwrap_or(0),
        basis_sizes: (lo..=hi).map(|n| (n, job.hh.dim_u128(n), job.dec.cost_estimate(n))).collect(),
    }
}

fn render_info(job: &Job, info: &Info) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {} of order {} over F{}", job.config.group, info.order, job.config.p);
    let _ = writeln!(s, "abelian: {}, p divides |G|: {}", info.abelian, info.p_divides_order);
    for c in job.classes() {
        let _ = writeln!(s, "class {}: representative {}, size {}, |C_G(x)| = {}", c.index, c.representative, c.size, c.centralizer_order);
    }
    let _ = writeln!(
        s,
        "largest basis per degree: direct {} ({}), centralizers {}",
        info.direct_cost,
        if info.direct_affordable { "affordable" } else { "over the cap" },
        info.decomposition_cost
    );
    s
}

fn render_dims(bundle: &ResultBundle) -> String {
    let mut s = String::from("degree  total  per-class  direct\n");
    for r in &bundle.dims {
        let per: Vec<String> = r.per_class.iter().map(|d| d.to_string()).collect();
        let direct = r.direct.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(s, "{:>6}  {:>5}  {:>9}  {:>6}", r.degree, r.total, per.join("+"), direct);
    }
    s
}

fn render_entries(s: &mut String, name: &str, entries: &[TableEntry], basis: &Tables) {
    let _ = writeln!(s, "{name}:");
    for e in entries {
        let terms: Vec<String> = e
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| {
                let label = basis.basis.iter().filter(|b| b.degree == e.degree).nth(i).map_or("?", |b| b.label.as_str());
                format!("{c}*{label}")
            })
            .collect();
        let value = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(s, "  {name}({}) = {value}", e.inputs.join(", "));
    }
}

fn render_tables(t: &Tables) -> String {
    let mut s = String::from("basis:\n");
    for b in &t.basis {
        let _ = writeln!(s, "  {} (degree {}, class {})", b.label, b.degree, b.class);
    }
    render_entries(&mut s, "cup", &t.cup, t);
    render_entries(&mut s, "delta", &t.delta, t);
    render_entries(&mut s, "bracket", &t.bracket, t);
    let _ = writeln!(s, "spot checks ({}): {} checked, {} failed", t.spot_checks.path, t.spot_checks.checked, t.spot_checks.failed);
    s
}

fn s3_tables(report: &s3::S3Report) -> BTreeMap<String, serde_json::Value> {
    BTreeMap::from([
        ("verify_s3".to_string(), serde_json::to_value(report).expect("serializable")),
        (
            "verdict".to_string(),
            json!({
                "presentation": report.presentation_ok(),
                "bv_table": report.bv_ok(),
                "failing_brackets": report.failing_brackets(),
            }),
        ),
    ])
}

fn render_s3(report: &s3::S3Report) -> String {
    let mut s = String::new();
    let dims: Vec<String> = report.dims.iter().map(|(_, d)| d.to_string()).collect();
    let _ = writeln!(s, "dims: [{}] ({})", dims.join(", "), if report.dims_ok { "ok" } else { "MISMATCH" });
    let _ = writeln!(s, "normalizations satisfying the presentation: {}", report.presentation_solutions.len());
    let _ = writeln!(s, "... and the Δ table: {}", report.delta_solutions.len());
    let _ = writeln!(s, "... and all 49 brackets as listed: {}", report.full_solutions.len());
    let _ = writeln!(s, "... and the corrected brackets: {}", report.corrected_solutions.len());
    if let Some(n) = report.normalization {
        let parts: Vec<String> = s3::GENERATORS.iter().zip(n).map(|(g, c)| format!("{g} -> {c}{g}")).collect();
        let _ = writeln!(s, "normalization: {}", parts.join(", "));
    }
    let _ = writeln!(s, "presentation: {}", if report.presentation_ok() { "PASS" } else { "FAIL" });
    let _ = writeln!(s, "BV table and brackets: {}", if report.bv_ok() { "PASS" } else { "FAIL" });
    for c in report.failures() {
        let _ = writeln!(s, "  fails: [{}] {}", c.group, c.label);
    }
    s
}

fn render_suites(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{} {}", if r.passed() { "PASS" } else { "FAIL" }, r.summary());
        for m in &r.messages {
            let _ = writeln!(s, "    {m}");
        }
    }
    s
}

#[derive(Debug, Serialize)]
pub struct Differential {
    pub from: i32,
    pub to: i32,
    pub rows: usize,
    pub cols: usize,
    /// `(row, col, value)` triples sorted by column then row.
    pub entries: Vec<(usize, usize, u32)>,
}

fn export_diff(job: &Job) -> Result<Vec<Differential>, CliError> {
    let (lo, hi) = job.config.window;
    let mut out = Vec::new();
    for m in lo..hi {
        let size = job.hh.dim_u128(m).max(job.hh.dim_u128(m + 1));
        if size > job.config.direct_cap {
            return Err(CliError::CostCap(format!("D^{m} -> D^{} needs {size} basis elements (cap {})", m + 1, job.config.direct_cap)));
        }
        let d = job.hh.differential_matrix(m);
        out.push(Differential { from: m, to: m + 1, rows: d.rows(), cols: d.cols(), entries: d.triples().collect() });
    }
    Ok(out)
}

/// CSV: one table per file, written to `dir` or concatenated on stdout
/// behind `# file.csv` headers.
fn write_csv(bundle: &ResultBundle, dir: Option<&std::path::Path>) -> Result<String, CliError> {
    let mut files: Vec<(String, String)> = Vec::new();
    if !bundle.dims.is_empty() {
        let mut t = String::from("degree,total,per_class,direct\n");
        for r in &bundle.dims {
            let per: Vec<String> = r.per_class.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(t, "{},{},{},{}", r.degree, r.total, per.join(" "), r.direct.map_or(String::new(), |d| d.to_string()));
        }
        files.push(("dims.csv".into(), t));
    }
    let mut t = String::from("index,representative,size,centralizer_order\n");
    for c in &bundle.classes {
        let _ = writeln!(t, "{},{},{},{}", c.index, c.representative, c.size, c.centralizer_order);
    }
    files.push(("classes.csv".into(), t));
    for (key, value) in &bundle.tables {
        files.push((format!("{key}.csv"), json_rows_to_csv(value)));
    }
    match dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
            let mut listing = String::new();
            for (name, body) in files {
                let path = dir.join(&name);
                std::fs::write(&path, body).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
                let _ = writeln!(listing, "{}", path.display());
            }
            Ok(listing)
        }
        None => Ok(files.into_iter().map(|(name, body)| format!("# {name}\n{body}")).collect()),
    }
}

/// Flattens a JSON table (an array of flat objects, or an object) to CSV.
/// Nested values are written as compact JSON in a quoted cell.
fn json_rows_to_csv(value: &serde_json::Value) -> String {
    let rows: Vec<&serde_json::Value> = match value {
        serde_json::Value::Array(a) => a.iter().collect(),
        other => vec![other],
    };
    let mut columns: Vec<String> = Vec::new();
    for r in &rows {
        if let serde_json::Value::Object(o) = r {
            for k in o.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    if columns.is_empty() {
        columns.push("value".into());
    }
    let cell = |v: Option<&serde_json::Value>| -> String {
        match v {
            None | Some(serde_json::Value::Null) => String::new(),
            Some(serde_json::Value::String(s)) => quote(s),
            Some(serde_json::Value::Number(n)) => n.to_string(),
            Some(serde_json::Value::Bool(b)) => b.to_string(),
            Some(other) => quote(&other.to_string()),
        }
    };
    let mut out = columns.join(",") + "\n";
    for r in rows {
        let cells: Vec<String> = match r {
            serde_json::Value::Object(o) => columns.iter().map(|c| cell(o.get(c))).collect(),
            other => vec![cell(Some(other))],
        };
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
