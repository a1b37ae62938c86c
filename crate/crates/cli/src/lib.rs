//! Command-line interface for the Bloch-vector POVM calculus.
//!
//! Subcommands: `validate`, `prob`, `decompose`, `usd`, `sample`,
//! `render`. Documents are JSON (see [`document`]); figures are SVG (see
//! [`figure`]). Exit codes: 0 for success or a valid input, 1 for
//! domain-invalid input (a POVM that fails validation, a vector outside
//! the unit ball), 2 for usage or parse errors.
//!
//! Output on stdout is a pure function of the argument vector and input
//! files: tables by default, machine-readable JSON with `--json`. The
//! `sample` subcommand therefore requires an explicit `--seed`. Verdict
//! coloring applies only when stdout is a terminal and `NO_COLOR` is
//! unset.

pub mod document;
pub mod figure;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::num::NonZeroU64;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use bloch_povm::{
    sample_outcomes, usd, BlochState, ElementRank, PovmElement, PovmSet, SetReport, Vec3,
};
use document::{parse_document, Document, DocumentError};
use figure::{render_svg, ArrowStyle, FigureSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Run the CLI against an argument vector, writing to the given streams,
/// and return the process exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                // --help and --version print to stdout and succeed.
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };

    let outcome = match cli.command {
        Command::Validate(args) => cmd_validate(&args, stdout),
        Command::Prob(args) => cmd_prob(&args, stdout),
        Command::Decompose(args) => cmd_decompose(&args, stdout),
        Command::Usd(args) => cmd_usd(&args, stdout),
        Command::Sample(args) => cmd_sample(&args, stdout),
        Command::Render(args) => cmd_render(&args, stdout),
    };

    match outcome {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "povm",
    version,
    about = "Bloch-vector calculus for generalized qubit measurements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a POVM against positivity and the closure conditions
    Validate(ValidateArgs),
    /// Outcome probabilities of a POVM on a state
    Prob(ProbArgs),
    /// Split an element into its rank-1 pair
    Decompose(DecomposeArgs),
    /// Design the optimal error-free two-state discrimination POVM
    Usd(UsdArgs),
    /// Seeded Monte Carlo simulation of measurement outcomes
    Sample(SampleArgs),
    /// Render a Bloch-disk figure as SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct ValidateArgs {
    /// POVM document (JSON file path, or - for stdin)
    #[arg(long, value_name = "FILE")]
    povm: String,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProbArgs {
    /// POVM document (JSON file path, or - for stdin)
    #[arg(long, value_name = "FILE")]
    povm: String,
    /// State: "(x,y,z)" literal or the name of a state in the document
    #[arg(long)]
    state: String,
    /// Emit probabilities as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// POVM document to take the element from
    #[arg(long, value_name = "FILE", requires = "index")]
    povm: Option<String>,
    /// Element index within the document's POVM
    #[arg(long)]
    index: Option<usize>,
    /// Element weight (with --v, instead of --povm/--index)
    #[arg(long, conflicts_with = "povm")]
    a: Option<f64>,
    /// Element vector "(x,y,z)"
    #[arg(long, conflicts_with = "povm", requires = "a")]
    v: Option<String>,
    /// Emit the decomposition as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct UsdArgs {
    /// Angle between the two pure states, in radians (see --degrees)
    #[arg(long, conflicts_with_all = ["psi", "phi"])]
    alpha: Option<f64>,
    /// Interpret --alpha in degrees
    #[arg(long, requires = "alpha")]
    degrees: bool,
    /// First pure state "(x,y,z)" (with --phi, instead of --alpha)
    #[arg(long, requires = "phi")]
    psi: Option<String>,
    /// Second pure state "(x,y,z)"
    #[arg(long, requires = "psi")]
    phi: Option<String>,
    /// Write the design (states + POVM) as a document to this path
    #[arg(long, value_name = "FILE")]
    design_out: Option<PathBuf>,
    /// Emit the design and verification as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SampleArgs {
    /// POVM document (JSON file path, or - for stdin)
    #[arg(long, value_name = "FILE")]
    povm: String,
    /// State: "(x,y,z)" literal or the name of a state in the document
    #[arg(long)]
    state: String,
    /// Number of trials
    #[arg(long)]
    n: NonZeroU64,
    /// PRNG seed; required so output is reproducible
    #[arg(long)]
    seed: u64,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Document with states and/or a POVM (JSON file path, or - for stdin)
    input: String,
    /// Output SVG path; stdout when omitted
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Projection plane as two orthonormal axes "(x,y,z);(x,y,z)"
    #[arg(long)]
    plane: Option<String>,
    /// Square canvas edge in pixels
    #[arg(long, default_value_t = FigureSpec::DEFAULT_CANVAS_PX)]
    size: f64,
    /// Mark this POVM element index as the inconclusive outcome
    #[arg(long)]
    inconclusive: Option<usize>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Validation { .. } => Failure::invalid(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<bloch_povm::Error> for Failure {
    fn from(e: bloch_povm::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

impl From<figure::FigureError> for Failure {
    fn from(e: figure::FigureError) -> Self {
        Failure::invalid(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))
    }
}

fn load_document(path: &str) -> Result<Document, Failure> {
    Ok(parse_document(&read_input(path)?)?)
}

fn require_povm(doc: &Document, path: &str) -> Result<PovmSet, Failure> {
    doc.povm
        .clone()
        .ok_or_else(|| Failure::usage(format!("{path} contains no \"povm\" section")))
}

/// Parse "(x,y,z)" (parentheses and whitespace optional).
fn parse_vec3(text: &str) -> Result<Vec3, Failure> {
    let cleaned = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = cleaned.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::usage(format!(
            "expected three comma-separated components, got {text:?}"
        )));
    }
    let mut c = [0.0f64; 3];
    for (i, part) in parts.iter().enumerate() {
        c[i] = part
            .trim()
            .parse()
            .map_err(|e| Failure::usage(format!("component {i} of {text:?}: {e}")))?;
    }
    Vec3::new(c[0], c[1], c[2]).map_err(|e| Failure::usage(e.to_string()))
}

/// A `--state` argument: a name from the document, or a vector literal.
fn resolve_state(doc: &Document, spec: &str) -> Result<BlochState, Failure> {
    if let Some(state) = doc.states.get(spec) {
        return Ok(*state);
    }
    Ok(BlochState::new(parse_vec3(spec)?)?)
}

fn use_color() -> bool {
    io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none()
}

fn verdict_word(valid: bool) -> String {
    let word = if valid { "valid" } else { "invalid" };
    if use_color() {
        let color = if valid { "32" } else { "31" };
        format!("\x1b[{color}m{word}\x1b[0m")
    } else {
        word.to_string()
    }
}

fn fmt_vec(v: Vec3) -> String {
    format!("({:>9.6}, {:>9.6}, {:>9.6})", v.x(), v.y(), v.z())
}

fn rank_label(rank: ElementRank) -> &'static str {
    match rank {
        ElementRank::Zero => "zero",
        ElementRank::One => "rank-1",
        ElementRank::Two => "rank-2",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_set_table(out: &mut dyn Write, set: &PovmSet, report: &SetReport) -> Result<(), Failure> {
    writeln!(out, "elements: {}", set.len())?;
    writeln!(
        out,
        "  #  weight     vector                               rank    positive  eigenvalues"
    )?;
    for (i, (e, r)) in set.elements().iter().zip(&report.elements).enumerate() {
        writeln!(
            out,
            "{:>3}  {:<9.6}  {}  {:<6}  {:<8}  ({:.6}, {:.6})",
            i,
            e.weight(),
            fmt_vec(e.vector()),
            rank_label(r.rank),
            yes_no(r.positive),
            r.eigenvalues.0,
            r.eigenvalues.1,
        )?;
    }
    writeln!(
        out,
        "sum of vectors: {}   |sum| = {:.6}",
        fmt_vec(report.vector_sum),
        report.vector_sum.norm()
    )?;
    writeln!(out, "sum of weights: {:.6}", report.weight_sum)?;
    writeln!(out, "sum of lengths: {:.6}", report.length_sum)?;
    writeln!(out, "all rank-1: {}", yes_no(report.all_rank1))?;
    Ok(())
}

fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(&args.povm)?;
    let set = require_povm(&doc, &args.povm)?;
    let report = set.validate();

    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        )?;
    } else {
        write_set_table(out, &set, &report)?;
        writeln!(out, "verdict: {}", verdict_word(report.valid))?;
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_prob(args: &ProbArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(&args.povm)?;
    let set = require_povm(&doc, &args.povm)?;
    let state = resolve_state(&doc, &args.state)?;
    let probs = set.distribution(&state)?;

    if args.json {
        let payload = json!({
            "state": state,
            "probabilities": probs,
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&payload).expect("serializes")
        )?;
    } else {
        writeln!(out, "state: {}", fmt_vec(state.vector()))?;
        writeln!(out, "outcome  weight     probability")?;
        for (i, (e, p)) in set.elements().iter().zip(&probs).enumerate() {
            writeln!(out, "{:>7}  {:<9.6}  {:.6}", i, e.weight(), p)?;
        }
        writeln!(out, "total: {:.6}", probs.iter().sum::<f64>())?;
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let element = match (&args.povm, args.index, args.a, &args.v) {
        (Some(path), Some(index), None, None) => {
            let doc = load_document(path)?;
            let set = require_povm(&doc, path)?;
            *set.elements().get(index).ok_or_else(|| {
                Failure::usage(format!(
                    "index {index} out of range for a {}-element POVM",
                    set.len()
                ))
            })?
        }
        (None, None, Some(a), Some(v)) => {
            PovmElement::new(a, parse_vec3(v)?).map_err(|e| Failure::usage(e.to_string()))?
        }
        _ => {
            return Err(Failure::usage(
                "provide either --povm FILE --index N or --a WEIGHT --v \"(x,y,z)\"",
            ))
        }
    };

    let d = element.decompose()?;
    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&d).expect("serializes")
        )?;
    } else {
        writeln!(
            out,
            "input:  weight {:<9.6} vector {}",
            element.weight(),
            fmt_vec(element.vector())
        )?;
        writeln!(out, "axis:   {}", fmt_vec(d.axis))?;
        writeln!(
            out,
            "eigen weights: ({:.6}, {:.6})",
            d.eigen_weights.0, d.eigen_weights.1
        )?;
        writeln!(
            out,
            "major:  weight {:<9.6} vector {}",
            d.major.weight(),
            fmt_vec(d.major.vector())
        )?;
        writeln!(
            out,
            "minor:  weight {:<9.6} vector {}",
            d.minor.weight(),
            fmt_vec(d.minor.vector())
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_usd(args: &UsdArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (psi, phi) = match (args.alpha, &args.psi, &args.phi) {
        (Some(alpha), None, None) => {
            let alpha = if args.degrees {
                alpha.to_radians()
            } else {
                alpha
            };
            if !(0.0..=std::f64::consts::PI).contains(&alpha) {
                return Err(Failure::usage(format!(
                    "--alpha must lie in [0, pi] radians, got {alpha}"
                )));
            }
            // Canonical pair in the X-Z plane: psi at +z, phi at angle alpha.
            (
                Vec3::Z,
                Vec3::new(alpha.sin(), 0.0, alpha.cos()).expect("finite"),
            )
        }
        (None, Some(psi), Some(phi)) => {
            let psi = parse_vec3(psi)?;
            let phi = parse_vec3(phi)?;
            (psi, phi)
        }
        _ => {
            return Err(Failure::usage(
                "provide either --alpha or both --psi and --phi",
            ))
        }
    };

    let design = usd::design(psi, phi)?;
    let verification = design.verify();

    if let Some(path) = &args.design_out {
        let mut states = BTreeMap::new();
        states.insert("psi".to_string(), BlochState::new(design.psi())?);
        states.insert("phi".to_string(), BlochState::new(design.phi())?);
        let doc = Document::new(states, Some(design.povm().clone()));
        fs::write(path, doc.to_json())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }

    if args.json {
        let payload = json!({
            "design": design,
            "verification": verification,
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&payload).expect("serializes")
        )?;
    } else {
        writeln!(out, "bloch angle:          {:.6} rad", design.angle())?;
        writeln!(out, "detection weight:     {:.6}", design.weight())?;
        writeln!(
            out,
            "inconclusive weight:  {:.6}",
            design.inconclusive_weight()
        )?;
        writeln!(
            out,
            "success probability:  {:.6}",
            design.success_probability()
        )?;
        writeln!(out, "degenerate: {}", yes_no(design.is_degenerate()))?;
        writeln!(out, "povm:")?;
        let labels = ["detect-phi", "detect-psi", "inconclusive"];
        for (i, (e, label)) in design.povm().elements().iter().zip(labels).enumerate() {
            writeln!(
                out,
                "{:>3}  {:<13} weight {:<9.6} vector {}",
                i,
                label,
                e.weight(),
                fmt_vec(e.vector())
            )?;
        }
        writeln!(out, "error-free: {}", yes_no(verification.error_free))?;
        writeln!(
            out,
            "success symmetric: {}",
            yes_no(verification.success_symmetric)
        )?;
        writeln!(
            out,
            "inconclusive balanced: {}",
            yes_no(verification.inconclusive_balanced)
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_sample(args: &SampleArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(&args.povm)?;
    let set = require_povm(&doc, &args.povm)?;
    let state = resolve_state(&doc, &args.state)?;
    let report = sample_outcomes(&set, &state, args.n, args.seed)?;

    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        )?;
    } else {
        writeln!(out, "n = {}  seed = {}", report.n, report.seed)?;
        writeln!(out, "outcome  count       frequency  expected")?;
        for (i, ((c, f), p)) in report
            .counts
            .iter()
            .zip(&report.frequencies)
            .zip(&report.expected)
            .enumerate()
        {
            writeln!(out, "{:>7}  {:<10}  {:<9.6}  {:.6}", i, c, f, p)?;
        }
        writeln!(
            out,
            "max |frequency - expected| = {:.6}",
            report.max_abs_deviation
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = load_document(&args.input)?;
    let plane = match &args.plane {
        None => FigureSpec::default_plane(),
        Some(text) => {
            let parts: Vec<&str> = text.split(';').collect();
            if parts.len() != 2 {
                return Err(Failure::usage(
                    "--plane expects two axes separated by ';', e.g. \"(1,0,0);(0,0,1)\"",
                ));
            }
            (parse_vec3(parts[0])?, parse_vec3(parts[1])?)
        }
    };

    let mut arrows: Vec<(Vec3, ArrowStyle)> = doc
        .states
        .values()
        .map(|s| (s.vector(), ArrowStyle::State))
        .collect();
    if let Some(set) = &doc.povm {
        for (i, e) in set.elements().iter().enumerate() {
            let style = if args.inconclusive == Some(i) {
                ArrowStyle::Inconclusive
            } else {
                ArrowStyle::Povm
            };
            arrows.push((e.vector(), style));
        }
    }

    let fig = FigureSpec::fit(arrows, plane, args.size)?;
    let svg = render_svg(&fig);
    match &args.out {
        Some(path) => fs::write(path, svg)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => write!(out, "{svg}")?,
    }
    Ok(EXIT_OK)
}
