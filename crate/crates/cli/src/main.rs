//! `btile` — command-line front end for the tiling library.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes:
//! 0 on success, 1 when a checking subcommand finds a violation
//! (`verify`, or `local-theorem` with `--expect`), 2 on usage, parse, or
//! validation problems. Output is byte-identical for identical inputs.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use btile_core::pools::{classify_symmetry, pool_analysis};
use btile_core::render::{render_svg, RenderModel, RenderStyle};
use btile_core::seq::{SequenceSpec, SpecDoc};
use btile_core::tiling::{build_window, E0Box};
use btile_core::verify::{run_checks, Outcome};
use btile_core::{census, local_theorem_check, CensusReport, CensusWindow, LocalTheoremVerdict};

// ---------------------------------------------------------------------------
// Errors

enum CliError {
    Lib(btile_core::Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "i/o error on {}: {e}", path.display()),
        }
    }
}

impl From<btile_core::Error> for CliError {
    fn from(e: btile_core::Error) -> CliError {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

// ---------------------------------------------------------------------------
// Arguments

#[derive(Parser)]
#[command(
    name = "btile",
    version,
    about = "Exact invariants and figures for a family of hyperbolic tilings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Path to a spec document (JSON).
    #[arg(long, value_name = "PATH", required_unless_present = "inline", conflicts_with = "inline")]
    spec: Option<PathBuf>,
    /// Inline spec document (JSON text).
    #[arg(long, value_name = "JSON")]
    inline: Option<String>,
}

impl SpecArgs {
    fn load(&self) -> CliResult<SequenceSpec> {
        let text = match (&self.spec, &self.inline) {
            (Some(path), None) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(path.clone(), e))?,
            (None, Some(text)) => text.clone(),
            _ => unreachable!("clap enforces exactly one spec source"),
        };
        parse_spec(&text).map_err(CliError::Lib)
    }
}

/// Parses and validates a spec document. Malformed JSON is a parse error;
/// well-formed JSON with illegal values is a validation error.
fn parse_spec(text: &str) -> Result<SequenceSpec, btile_core::Error> {
    let doc: SpecDoc = serde_json::from_str(text)
        .map_err(|e| btile_core::Error::ParseError(format!("bad spec document: {e}")))?;
    SequenceSpec::from_doc(&doc)
}

fn parse_index_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let parse = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range {s:?}: expected A..B with whole numbers"))
    };
    let (lo, hi) = (parse(a)?, parse(b)?);
    if hi < lo {
        return Err(format!("bad range {s:?}: upper end below lower end"));
    }
    Ok((lo, hi))
}

fn parse_layer_range(s: &str) -> Result<(i64, i64), String> {
    // Accept "A..B" and a bare "A"; layers may be negative.
    let (a, b) = match s.rfind("..") {
        Some(pos) if pos > 0 || !s.starts_with('-') => (&s[..pos], &s[pos + 2..]),
        _ => (s, s),
    };
    let parse = |p: &str| {
        p.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad layer range {s:?}: expected A..B with integers"))
    };
    let (lo, hi) = (parse(a)?, parse(b)?);
    if hi < lo {
        return Err(format!("bad layer range {s:?}: upper end below lower end"));
    }
    Ok((lo, hi))
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    HalfPlane,
    Disc,
    Footprint,
}

impl ModelArg {
    fn to_model(self) -> RenderModel {
        match self {
            ModelArg::HalfPlane => RenderModel::HalfPlane,
            ModelArg::Disc => RenderModel::Disc,
            ModelArg::Footprint => RenderModel::Footprint,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Expectation {
    Crystallographic,
    NonCrystallographic,
}

#[derive(Args)]
struct StoreArgs {
    /// Directory holding persisted census reports.
    #[arg(long, value_name = "DIR", default_value = "btile-census")]
    store: PathBuf,
    /// Compute without reading or writing the census store.
    #[arg(long)]
    no_store: bool,
}

impl StoreArgs {
    fn dir(&self) -> Option<&Path> {
        if self.no_store {
            None
        } else {
            Some(self.store.as_path())
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Wall and pool structure of the tiling.
    Pools {
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Symmetry group classification.
    Symmetry {
        #[command(flatten)]
        spec: SpecArgs,
        /// Treat a finite word as a window of an aperiodic sequence.
        #[arg(long)]
        assume_aperiodic: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Corona census over a cell window, one report per radius.
    Census {
        #[command(flatten)]
        spec: SpecArgs,
        /// Radius or radius range, e.g. `3` or `1..8`.
        #[arg(long, value_name = "A..B", value_parser = parse_index_range)]
        k: (usize, usize),
        /// Layer of the census window.
        #[arg(long, value_name = "J", default_value_t = 0)]
        layer: i64,
        /// Window half-width in cells (cells -N..N-1 per coordinate).
        #[arg(long, value_name = "N")]
        half_width: i64,
        #[command(flatten)]
        store: StoreArgs,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Crystallographicity verdict from consecutive censuses.
    LocalTheorem {
        #[command(flatten)]
        spec: SpecArgs,
        /// Radius range starting at 0, e.g. `0..3`.
        #[arg(long, value_name = "A..B", value_parser = parse_index_range)]
        k: (usize, usize),
        #[arg(long, value_name = "J", default_value_t = 0)]
        layer: i64,
        #[arg(long, value_name = "N")]
        half_width: i64,
        #[command(flatten)]
        store: StoreArgs,
        /// Fail (exit 1) unless the verdict matches.
        #[arg(long, value_enum, value_name = "VERDICT")]
        expect: Option<Expectation>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Build a tile window and dump it as a complex.
    Window {
        #[command(flatten)]
        spec: SpecArgs,
        /// Layer range, e.g. `0..3`.
        #[arg(long, value_name = "A..B", value_parser = parse_layer_range)]
        layers: (i64, i64),
        /// Window half-width (box [-N, N] per coordinate).
        #[arg(long, value_name = "N")]
        half_width: i64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Render a window as an SVG figure.
    Render {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_name = "A..B", value_parser = parse_layer_range)]
        layers: (i64, i64),
        #[arg(long, value_name = "N")]
        half_width: i64,
        /// Drawing model.
        #[arg(long, value_enum, default_value_t = ModelArg::HalfPlane)]
        model: ModelArg,
        /// Style entry KEY=VALUE (repeatable).
        #[arg(long = "style", value_name = "KEY=VALUE")]
        style: Vec<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the library's invariant suite against the spec.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
    },
}

// ---------------------------------------------------------------------------
// Output plumbing

fn emit(out: &Option<PathBuf>, data: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            std::fs::write(path, data).map_err(|e| CliError::Io(path.clone(), e))
        }
        None => {
            print!("{data}");
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn validate_census_params(
    spec: &SequenceSpec,
    max_k: usize,
    half_width: i64,
) -> Result<(), btile_core::Error> {
    if half_width <= 0 {
        return Err(btile_core::Error::ValidationError(
            "half-width must be positive".into(),
        ));
    }
    if spec.dim() * max_k >= 63 {
        return Err(btile_core::Error::ValidationError(format!(
            "census radius {max_k} is out of range for dimension {}",
            spec.dim()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Census persistence

fn spec_hash(spec: &SequenceSpec) -> String {
    let canonical = serde_json::to_string(spec).expect("spec serializes");
    let digest = Sha256::digest(canonical.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn census_path(dir: &Path, hash: &str, k: usize, layer: i64, half_width: i64) -> PathBuf {
    dir.join(format!("census-{hash}-k{k}-L{layer}-w{half_width}.json"))
}

/// Loads a persisted census when it matches, computes and persists it
/// otherwise. Stale or foreign files are overwritten.
fn load_or_compute_census(
    spec: &SequenceSpec,
    k: usize,
    layer: i64,
    half_width: i64,
    store: Option<&Path>,
) -> CliResult<CensusReport> {
    let window = CensusWindow { layer, half_width };
    let hash = spec_hash(spec);
    let path = store.map(|dir| census_path(dir, &hash, k, layer, half_width));
    if let Some(path) = &path {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(report) = serde_json::from_str::<CensusReport>(&text) {
                if report.spec == *spec && report.k == k && report.window == window {
                    return Ok(report);
                }
            }
            eprintln!("note: recomputing stale census file {}", path.display());
        }
    }
    let report = census(spec, k, window)?;
    if let (Some(dir), Some(path)) = (store, &path) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
        std::fs::write(path, pretty(&report)).map_err(|e| CliError::Io(path.clone(), e))?;
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Subcommands

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Pools { spec, out } => {
            let spec = spec.load()?;
            let report = pool_analysis(&spec)?;
            emit(&out, &pretty(&report))?;
            Ok(0)
        }
        Command::Symmetry { spec, assume_aperiodic, out } => {
            let spec = spec.load()?;
            let report = classify_symmetry(&spec, assume_aperiodic)?;
            emit(&out, &pretty(&report))?;
            Ok(0)
        }
        Command::Census { spec, k, layer, half_width, store, out } => {
            let spec = spec.load()?;
            validate_census_params(&spec, k.1, half_width)?;
            let mut reports = Vec::new();
            for radius in k.0..=k.1 {
                reports.push(load_or_compute_census(
                    &spec,
                    radius,
                    layer,
                    half_width,
                    store.dir(),
                )?);
            }
            emit(&out, &pretty(&reports))?;
            Ok(0)
        }
        Command::LocalTheorem { spec, k, layer, half_width, store, expect, out } => {
            let spec = spec.load()?;
            validate_census_params(&spec, k.1, half_width)?;
            let mut reports = Vec::new();
            for radius in k.0..=k.1 {
                reports.push(load_or_compute_census(
                    &spec,
                    radius,
                    layer,
                    half_width,
                    store.dir(),
                )?);
            }
            let verdict = local_theorem_check(&reports)?;
            emit(&out, &pretty(&verdict))?;
            if let Some(expect) = expect {
                let is_crystallographic =
                    matches!(verdict, LocalTheoremVerdict::Crystallographic { .. });
                let matches_expectation = match expect {
                    Expectation::Crystallographic => is_crystallographic,
                    Expectation::NonCrystallographic => !is_crystallographic,
                };
                if !matches_expectation {
                    eprintln!("expectation failed: the verdict is {verdict}");
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Window { spec, layers, half_width, out } => {
            let spec = spec.load()?;
            let window =
                build_window(&spec, layers, &E0Box::centred(spec.dim(), half_width))?;
            emit(&out, &pretty(&window.to_doc()))?;
            Ok(0)
        }
        Command::Render { spec, layers, half_width, model, style, out } => {
            let spec = spec.load()?;
            let mut table = RenderStyle::new();
            for entry in &style {
                let (key, value) = entry.split_once('=').ok_or_else(|| {
                    btile_core::Error::ValidationError(format!(
                        "style entry {entry:?} is not KEY=VALUE"
                    ))
                })?;
                table.insert(key.trim().to_string(), value.trim().to_string());
            }
            let window =
                build_window(&spec, layers, &E0Box::centred(spec.dim(), half_width))?;
            let svg = render_svg(&spec, &window, model.to_model(), &table)?;
            emit(&out, &svg)?;
            Ok(0)
        }
        Command::Verify { spec } => {
            let spec = spec.load()?;
            let reports = run_checks(&spec)?;
            let mut failed = false;
            for report in &reports {
                match &report.outcome {
                    Outcome::Passed => println!("check {}: pass", report.name),
                    Outcome::Skipped(reason) => {
                        println!("check {}: skip ({reason})", report.name)
                    }
                    Outcome::Failed(witness) => {
                        println!("check {}: FAIL - {witness}", report.name);
                        failed = true;
                    }
                }
            }
            Ok(u8::from(failed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
