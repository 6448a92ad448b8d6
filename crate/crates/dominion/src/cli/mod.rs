//! Command implementations behind the `dominion` binary: construct designs,
//! compute γ, and run the verification suite with machine-readable reports.
//!
//! Exit codes (scriptable CI gating): 0 success, 2 usage, 3 validation,
//! 4 budget exhausted, 5 theorem-check failure, 1 I/O.

pub mod report;
pub mod verify;

use crate::design::{self, Design, DesignError};
use crate::incidence::IncidenceGraph;
use crate::solver::{self, SolverConfig, SolverError};
use report::CheckStatus;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Budget(String),
    #[error("{failed} theorem-backed check(s) failed")]
    ChecksFailed { failed: usize },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Budget(_) => 4,
            CliError::ChecksFailed { .. } => 5,
            CliError::Io(_) => 1,
        }
    }
}

impl From<DesignError> for CliError {
    fn from(e: DesignError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn load_design(path: &Path) -> Result<Design, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(Design::decode(&text)?)
}

/// `construct`: build a design and write it in the design file format.
///
/// `arg` is the order (pg/ag), the modulus (cyclic), or the input design
/// file (complement/residual/dual). With an output path the design goes to
/// the file and the validated parameters to stdout; otherwise the design
/// text itself goes to stdout.
pub fn cmd_construct(
    out: &mut impl Write,
    kind: &str,
    arg: &str,
    bases: &[String],
    block: usize,
    out_path: Option<&Path>,
) -> Result<(), CliError> {
    let parse_q = || -> Result<u64, CliError> {
        arg.parse()
            .map_err(|_| CliError::Usage(format!("expected a numeric order, got '{arg}'")))
    };
    let design = match kind {
        "pg" => design::projective_plane(parse_q()?)?,
        "ag" => design::affine_plane(parse_q()?)?,
        "cyclic" => {
            let v: usize = arg
                .parse()
                .map_err(|_| CliError::Usage(format!("expected a modulus, got '{arg}'")))?;
            if bases.is_empty() {
                return Err(CliError::Usage(
                    "cyclic construction needs at least one --base".into(),
                ));
            }
            let bases: Vec<Vec<usize>> = bases
                .iter()
                .map(|s| {
                    s.split(',')
                        .map(|t| {
                            t.trim().parse().map_err(|_| {
                                CliError::Usage(format!("bad base point '{t}' in --base {s}"))
                            })
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            design::cyclic_design(v, &bases)?
        }
        "complement" => load_design(Path::new(arg))?.complement()?,
        "residual" => load_design(Path::new(arg))?.residual(block)?.0,
        "dual" => load_design(Path::new(arg))?.dual()?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown construction '{other}' (expected pg, ag, cyclic, complement, residual, dual)"
            )))
        }
    };

    match out_path {
        Some(path) => {
            std::fs::write(path, design.encode())?;
            writeln!(out, "{}", design.params())?;
            writeln!(out, "written to {}", path.display())?;
        }
        None => {
            write!(out, "{}", design.encode())?;
        }
    }
    Ok(())
}

/// `gamma`: exact domination number of a design file, with optional full
/// enumeration and neatness classification.
pub fn cmd_gamma(
    out: &mut impl Write,
    path: &Path,
    enumerate: bool,
    neat: bool,
    threads: usize,
) -> Result<(), CliError> {
    let design = load_design(path)?;
    let cfg = SolverConfig::default().with_threads(threads);
    let g = IncidenceGraph::new(&design);
    writeln!(out, "design: {}", design.params())?;

    let result = solver::minimum_domination(&g, &cfg).map_err(budget_error)?;
    writeln!(out, "gamma = {}", result.gamma)?;
    let labels: Vec<String> = result
        .witness
        .iter_ones()
        .map(|u| g.vertex_label(u))
        .collect();
    writeln!(out, "witness = {}", labels.join(" "))?;
    writeln!(out, "root lower bound = {}", result.root_lower_bound)?;
    writeln!(out, "nodes explored = {}", result.nodes_explored)?;

    if enumerate || neat {
        let report = solver::classify_neatness(&design, &cfg).map_err(budget_error)?;
        writeln!(out, "minimum dominating sets = {}", report.count_mds)?;
        if neat {
            writeln!(
                out,
                "neat minimum dominating sets = {} of {}",
                report.count_neat, report.count_mds
            )?;
            writeln!(out, "neat design: {}", report.is_neat_design)?;
            writeln!(out, "super-neat: {}", report.is_super_neat)?;
        }
    }
    Ok(())
}

fn budget_error(e: SolverError) -> CliError {
    match e {
        SolverError::BudgetExceeded { .. } | SolverError::EnumerationBudgetExceeded { .. } => {
            CliError::Budget(e.to_string())
        }
        other => CliError::Validation(other.to_string()),
    }
}

/// `verify-paper`: run the whole verification suite, print one line per
/// check, optionally write the JSON report. Exit 0 iff no theorem-backed
/// check fails; findings and skips never fail the run.
pub fn cmd_verify_paper(
    out: &mut impl Write,
    max_q: u64,
    json_path: Option<&Path>,
    threads: usize,
) -> Result<(), CliError> {
    let opts = verify::VerifyOptions {
        max_q,
        threads,
        ..verify::VerifyOptions::default()
    };
    let report = verify::run_verify(&opts);

    for d in &report.designs {
        for c in &d.checks {
            writeln!(out, "[{}] {} :: {}", c.status, d.id, c.name)?;
        }
    }
    let (pass, fail, finding, skipped) = (
        report.count(CheckStatus::Pass),
        report.count(CheckStatus::Fail),
        report.count(CheckStatus::Finding),
        report.count(CheckStatus::Skipped),
    );
    writeln!(
        out,
        "verify-paper: {} checks — {pass} pass, {fail} fail, {finding} findings, {skipped} skipped",
        report.total_checks()
    )?;

    if let Some(path) = json_path {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(path, json + "\n")?;
        writeln!(out, "report written to {}", path.display())?;
    }

    if fail > 0 {
        return Err(CliError::ChecksFailed { failed: fail });
    }
    Ok(())
}
