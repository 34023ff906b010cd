//! Command-line front end: `trace`, `audit`, `finite`, and `ord`.
//!
//! Exit codes are fixed: 0 for success, 2 for any configuration or parse
//! problem, 3 when an audit deviates from the expected verdict profile.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::audit::run_audit;
use crate::engine::{
    simulate_each, simulate_steps, stage_closed_form, EndKind, StepOutcome, Strategy,
};
use crate::hfset::has_greatest;
use crate::natset::NatSet;
use crate::ordinal::{Ordinal, OrdinalClass};
use crate::render;

/// Expected verdict statuses for the default audit, shipped with the crate
/// so `audit` can detect drift in its own conclusions.
const GOLDEN_PROFILE: &str = include_str!("../golden/audit_profile.json");

/// Largest universe maximum for which `finite` still runs the set-encoding
/// greatest-element cross-check; the encodings grow quadratically.
const GREATEST_CHECK_MAX: u64 = 2048;

#[derive(Debug, Parser)]
#[command(
    name = "omegasieve",
    version,
    about = "Stage-indexed elimination over the naturals: traces, audits, finite runs, ordinal arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the stage-by-stage trace of the elimination process.
    Trace(TraceArgs),
    /// Audit every registered claim and compare against the expected profile.
    Audit(AuditArgs),
    /// Run a finite universe to its end and cross-check the survivor.
    Finite(FiniteArgs),
    /// Normalize and classify an ordinal expression.
    Ord(OrdArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct TraceArgs {
    /// Stage horizon, an ordinal expression like "w*2+100".
    #[arg(long, default_value = "w*2+100")]
    horizon: String,
    /// How many finite stages to print.
    #[arg(long, default_value_t = 100)]
    steps: u64,
    /// Choice strategy: min | kth:K | scripted:STEP=CHOICE,...
    #[arg(long, default_value = "min")]
    strategy: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Stage horizon, an ordinal expression; must be at least w+1.
    #[arg(long, default_value = "w*2+100")]
    horizon: String,
    /// Seed for the sparse stage sample and the numeral families.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Finite search window for unbounded existence claims.
    #[arg(long, default_value_t = 1000)]
    window: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FiniteArgs {
    /// Universe {0, 1, ..., N-1}.
    #[arg(long, conflicts_with = "universe")]
    size: Option<u64>,
    /// Explicit comma-separated universe, e.g. "3,1,4".
    #[arg(long)]
    universe: Option<String>,
    /// Choice strategy: min | kth:K | scripted:STEP=CHOICE,...
    #[arg(long, default_value = "min")]
    strategy: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OrdArgs {
    /// Ordinal expression, e.g. "w^2*3+w+1".
    expression: String,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failure, tagged with which exit code it maps to.
enum Failure {
    /// Exit 2: bad flags, unreadable expressions, impossible configs.
    Config(String),
    /// Exit 3: the audit ran but its verdicts deviate from the profile.
    Deviation(String),
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code instead of exiting.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; they exit 0.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Trace(args) => cmd_trace(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Finite(args) => cmd_finite(args),
        Command::Ord(args) => cmd_ord(args),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Config(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(Failure::Deviation(message)) => {
            eprintln!("audit deviated from the expected profile:\n{message}");
            3
        }
    }
}

fn parse_horizon(text: &str) -> Result<Ordinal, Failure> {
    Ordinal::parse(text).map_err(|e| Failure::Config(format!("invalid ordinal {text:?}: {e}")))
}

fn parse_strategy(text: &str) -> Result<Strategy, String> {
    if text == "min" {
        return Ok(Strategy::MinChoice);
    }
    if let Some(k) = text.strip_prefix("kth:") {
        let k: u64 = k
            .parse()
            .map_err(|_| format!("invalid count in strategy {text:?}"))?;
        if k == 0 {
            return Err("k-th smallest strategy is 1-indexed; use kth:1 or higher".to_string());
        }
        return Ok(Strategy::KthSmallest(k));
    }
    if let Some(body) = text.strip_prefix("scripted:") {
        let mut table = BTreeMap::new();
        for piece in body.split(',') {
            let (step, choice) = piece.split_once('=').ok_or_else(|| {
                format!("expected STEP=CHOICE in strategy {text:?}, found {piece:?}")
            })?;
            let step: u64 = step
                .trim()
                .parse()
                .map_err(|_| format!("invalid step number {step:?} in strategy {text:?}"))?;
            let choice: u64 = choice
                .trim()
                .parse()
                .map_err(|_| format!("invalid choice {choice:?} in strategy {text:?}"))?;
            if table.insert(step, choice).is_some() {
                return Err(format!("step {step} is scripted twice in {text:?}"));
            }
        }
        return Ok(Strategy::Scripted(table));
    }
    Err(format!(
        "unknown strategy {text:?}; expected min, kth:K, or scripted:STEP=CHOICE,..."
    ))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let outcome = match path {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    outcome.map_err(|e| Failure::Config(format!("cannot write output: {e}")))
}

fn cmd_trace(args: TraceArgs) -> Result<(), Failure> {
    let horizon = parse_horizon(&args.horizon)?;
    let strategy = parse_strategy(&args.strategy).map_err(Failure::Config)?;
    let finite_rows = horizon.to_u64().map_or(args.steps, |h| args.steps.min(h));
    let mut rows = Vec::new();
    simulate_each(&strategy, &NatSet::full(), finite_rows, |snap| {
        rows.push(render::TraceRow::from_snapshot(snap));
    })
    .map_err(|e| Failure::Config(e.to_string()))?;
    if horizon >= Ordinal::omega() {
        if matches!(strategy, Strategy::MinChoice) {
            rows.push(render::TraceRow::from_snapshot(&stage_closed_form(
                &Ordinal::omega(),
            )));
            if horizon >= Ordinal::omega().succ() {
                rows.push(render::TraceRow::from_snapshot(&stage_closed_form(
                    &Ordinal::omega().succ(),
                )));
            }
        } else {
            eprintln!(
                "note: limit stages are only tabulated for the min strategy; showing finite stages"
            );
        }
    }
    let text = match args.format {
        Format::Text => render::trace_text(&rows),
        Format::Json => render::trace_json_lines(&rows),
        Format::Csv => render::trace_csv(&rows),
    };
    write_output(args.output.as_deref(), &text)
}

#[derive(Debug, Deserialize)]
struct GoldenProfile {
    expected: BTreeMap<String, String>,
}

fn cmd_audit(args: AuditArgs) -> Result<(), Failure> {
    let horizon = parse_horizon(&args.horizon)?;
    let report =
        run_audit(&horizon, args.seed, args.window).map_err(|e| Failure::Config(e.to_string()))?;
    let text = match args.format {
        Format::Text => render::audit_text(&report),
        Format::Json => render::audit_json(&report),
        Format::Csv => render::audit_csv(&report),
    };
    write_output(args.output.as_deref(), &text)?;

    let golden: GoldenProfile = serde_json::from_str(GOLDEN_PROFILE)
        .map_err(|e| Failure::Config(format!("embedded profile is unreadable: {e}")))?;
    let mut deviations = Vec::new();
    for verdict in &report.verdicts {
        let got = verdict.status.to_string();
        match golden.expected.get(verdict.claim.as_str()) {
            Some(want) if *want == got => {}
            Some(want) => deviations.push(format!(
                "{}: expected {want}, got {got}",
                verdict.claim.as_str()
            )),
            None => deviations.push(format!("{}: not in the profile", verdict.claim.as_str())),
        }
    }
    for claim in golden.expected.keys() {
        if !report.verdicts.iter().any(|v| v.claim.as_str() == claim) {
            deviations.push(format!("{claim}: missing from the report"));
        }
    }
    if deviations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Deviation(deviations.join("\n")))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct FiniteReport {
    universe: String,
    size: u64,
    end_stage: u64,
    end: EndKind,
    survivor: u64,
    /// `None` when the cross-check was skipped for size.
    greatest: Option<u64>,
    agree: Option<bool>,
}

fn cmd_finite(args: FiniteArgs) -> Result<(), Failure> {
    let strategy = parse_strategy(&args.strategy).map_err(Failure::Config)?;
    let members: Vec<u64> = match (args.size, &args.universe) {
        (Some(n), None) => (0..n).collect(),
        (None, Some(spec)) => spec
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Config(format!("invalid universe element {piece:?}")))
            })
            .collect::<Result<_, _>>()?,
        _ => {
            return Err(Failure::Config(
                "pass exactly one of --size or --universe".to_string(),
            ))
        }
    };
    if members.is_empty() {
        return Err(Failure::Config(
            "the universe must be non-empty".to_string(),
        ));
    }
    let universe = NatSet::finite(members).map_err(|e| Failure::Config(e.to_string()))?;
    let members = match &universe {
        NatSet::Finite(sorted) => sorted.clone(),
        NatSet::CoFinite(_) => unreachable!("constructed finite"),
    };
    let size = members.len() as u64;
    let snapshots = simulate_steps(&strategy, &universe, size + 1)
        .map_err(|e| Failure::Config(e.to_string()))?;
    let last = snapshots.last().expect("at least one stage");
    let (end_stage, end, survivor) = match last.outcome {
        StepOutcome::SentinelB => (
            last.alpha.to_u64().expect("simulated stages are finite"),
            EndKind::Singleton,
            last.b_set.min().expect("singleton has a least element"),
        ),
        other => {
            return Err(Failure::Config(format!(
                "run did not reach a singleton end; last outcome was {other}"
            )))
        }
    };
    let max = *members.last().expect("non-empty");
    let greatest = (max <= GREATEST_CHECK_MAX)
        .then(|| has_greatest(&members).expect("a finite set of naturals has a maximum"));
    let report = FiniteReport {
        universe: render::summarize_natset(&universe),
        size,
        end_stage,
        end,
        survivor,
        greatest,
        agree: greatest.map(|g| g == survivor),
    };
    let text = match args.format {
        Format::Text => {
            let mut out = format!(
                "universe {} ({} element{})\nend stage {} ({})\nsurvivor {}\n",
                report.universe,
                report.size,
                if report.size == 1 { "" } else { "s" },
                report.end_stage,
                report.end,
                report.survivor,
            );
            out.push_str(&match (report.greatest, report.agree) {
                (Some(g), Some(true)) => format!("greatest {g} (agrees with the survivor)\n"),
                (Some(g), _) => format!("greatest {g} (DISAGREES with the survivor)\n"),
                _ => format!(
                    "greatest: check skipped (universe maximum exceeds {GREATEST_CHECK_MAX})\n"
                ),
            });
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string(&report).expect("reports serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record([
                    "universe",
                    "size",
                    "end_stage",
                    "end",
                    "survivor",
                    "greatest",
                    "agree",
                ])
                .expect("writing to memory cannot fail");
            writer
                .write_record([
                    report.universe.clone(),
                    report.size.to_string(),
                    report.end_stage.to_string(),
                    report.end.to_string(),
                    report.survivor.to_string(),
                    report.greatest.map(|g| g.to_string()).unwrap_or_default(),
                    report.agree.map(|a| a.to_string()).unwrap_or_default(),
                ])
                .expect("writing to memory cannot fail");
            String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("csv is utf-8")
        }
    };
    write_output(args.output.as_deref(), &text)?;
    if report.agree == Some(false) {
        // Both ends are implementations of ours; disagreement is a bug.
        return Err(Failure::Config(
            "survivor and set-encoding greatest element disagree".to_string(),
        ));
    }
    Ok(())
}

fn cmd_ord(args: OrdArgs) -> Result<(), Failure> {
    let ordinal = parse_horizon(&args.expression)?;
    let classification = match ordinal.classify() {
        OrdinalClass::Zero => "zero".to_string(),
        OrdinalClass::Successor(pred) => format!("successor of {pred}"),
        OrdinalClass::Limit => "limit".to_string(),
    };
    write_output(
        args.output.as_deref(),
        &format!("{ordinal} ({classification})\n"),
    )
}
