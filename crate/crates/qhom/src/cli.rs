//! Command-line front end: parse space and cone configs plus class
//! expressions, run computations and pipelines, emit canonical text reports.
//!
//! Exit codes: 0 success, 2 parse or config error, 3 truncation, 4 an
//! unknown-fact verdict under `--strict`.

use clap::{Parser, Subcommand, ValueEnum};

use crate::loopspace::{self, BasisFilter, SpaceSpec};
use crate::spherical_search;
use crate::stems_audit::{self, FactBase, RowVerdict, Status};
use crate::{Error, Result};

#[derive(Parser)]
#[command(name = "qhom", version, about = "mod-2 homology of free iterated loop spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the monomial basis of one degree slice.
    Basis {
        #[arg(long)]
        space: String,
        #[arg(long)]
        degree: u32,
        /// Keep only single-word classes (excess-zero words appear as the
        /// squares they normalise to).
        #[arg(long)]
        indecomposable: bool,
    },
    /// Apply the dual Steenrod operation Sq[t].
    Sq {
        #[arg(long)]
        space: String,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        expr: String,
    },
    /// Apply the homology suspension.
    Suspend {
        #[arg(long)]
        space: String,
        #[arg(long)]
        expr: String,
    },
    /// Project onto the terms of one height (the James-Hopf shadow).
    JamesHopf {
        #[arg(long)]
        height: u64,
        #[arg(long)]
        expr: String,
        /// Canonicalise against a space model first; without it the
        /// expression is filtered textually by word length.
        #[arg(long)]
        space: Option<String>,
    },
    /// Basis of the primitive subspace of one degree slice.
    Primitives {
        #[arg(long)]
        space: String,
        #[arg(long)]
        degree: u32,
    },
    /// Spherical-class candidates on one degree slice, as a certificate.
    Spherical {
        #[arg(long)]
        space: String,
        #[arg(long)]
        degree: u32,
    },
    /// Run one of the shipped elimination pipelines.
    Pipeline {
        #[arg(value_enum)]
        which: PipelineName,
    },
    /// Stable-stem audits.
    Audit {
        #[command(subcommand)]
        what: AuditCommand,
    },
    /// Degree bound for a given Adams filtration.
    Bound {
        #[arg(long)]
        filtration: u32,
        #[arg(long = "square-power")]
        square_power: Option<u32>,
        /// Also verify the supporting fact chain on the zero-component model.
        #[arg(long)]
        chain: bool,
    },
    /// Least loop bound on which every word of the expression lives.
    MinLoops {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        space: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineName {
    Kappa,
    SigmaBar,
    NuBar,
}

#[derive(Subcommand)]
enum AuditCommand {
    /// The bracket-classification table for eta, nu or sigma.
    Brackets {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        strict: bool,
        /// Override the embedded fact base with a data file.
        #[arg(long)]
        facts: Option<String>,
    },
    /// Hurewicz status of a named class.
    Status {
        #[arg(long)]
        element: String,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        facts: Option<String>,
    },
}

/// Parses and runs one command line; returns the process exit code.
pub fn main_with_args<I>(args: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(Outcome { report, exit }) => {
            print!("{report}");
            exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Truncation { .. } => 3,
                Error::UnknownFact(_) => 4,
                _ => 2,
            }
        }
    }
}

struct Outcome {
    report: String,
    exit: i32,
}

fn ok(report: String) -> Result<Outcome> {
    Ok(Outcome { report, exit: 0 })
}

fn load_facts(path: &Option<String>) -> Result<FactBase> {
    match path {
        None => FactBase::from_toml_str(include_str!("../data/stems.toml")),
        Some(p) => FactBase::load(p),
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Basis { space, degree, indecomposable } => {
            let space = SpaceSpec::load(&space)?;
            let filter = if indecomposable { BasisFilter::WordsOnly } else { BasisFilter::All };
            let slice = space.basis(degree, filter)?;
            let mut out = String::new();
            for m in &slice {
                out.push_str(&format!("{m}\n"));
            }
            ok(out)
        }
        Command::Sq { space, t, expr } => {
            let space = SpaceSpec::load(&space)?;
            let parsed = space.parse(&expr)?;
            ok(format!("{}\n", space.steenrod(t, &parsed)))
        }
        Command::Suspend { space, expr } => {
            let space = SpaceSpec::load(&space)?;
            let parsed = space.parse(&expr)?;
            ok(format!("{}\n", space.suspend(&parsed)))
        }
        Command::JamesHopf { height, expr, space } => match space {
            Some(space) => {
                let space = SpaceSpec::load(&space)?;
                let parsed = space.parse(&expr)?;
                ok(format!("{}\n", loopspace::james_hopf_project(&parsed, height)))
            }
            None => ok(format!("{}\n", james_hopf_textual(&expr, height)?)),
        },
        Command::Primitives { space, degree } => {
            let space = SpaceSpec::load(&space)?;
            let mut out = String::new();
            for p in space.primitives(degree)? {
                out.push_str(&format!("{p}\n"));
            }
            ok(out)
        }
        Command::Spherical { space, degree } => {
            let space = SpaceSpec::load(&space)?;
            ok(spherical_search::spherical_candidates(&space, degree)?.render())
        }
        Command::Pipeline { which } => {
            let cert = match which {
                PipelineName::Kappa => spherical_search::kappa_pipeline()?,
                PipelineName::SigmaBar => spherical_search::sigma_bar_pipeline()?,
                PipelineName::NuBar => spherical_search::nu_bar_pipeline(),
            };
            ok(cert.render())
        }
        Command::Audit { what } => run_audit(what),
        Command::Bound { filtration, square_power, chain } => {
            if filtration == 0 {
                return Err(Error::Parse("the filtration must be positive".into()));
            }
            let facts = FactBase::embedded();
            let bound = facts.adams_degree_bound(filtration, square_power);
            let mut out = format!("{bound}\n");
            if chain {
                let q0 = SpaceSpec::load("q0s0plus")?;
                let report =
                    stems_audit::degree_bound_chain(&q0, filtration, square_power, q0.cap())?;
                out.push_str(&format!(
                    "chain on {} up to degree {}: {} classes checked, {}\n",
                    "q0s0plus",
                    q0.cap(),
                    report.links.len(),
                    if report.all_satisfy { "all satisfy the bound" } else { "FAILURES FOUND" }
                ));
                for link in report.links.iter().take(8) {
                    out.push_str(&format!(
                        "  {} (degree {}, length {}): e_* -> {}, height {}, bottom cell {}\n",
                        link.class,
                        link.degree,
                        link.length,
                        link.suspension,
                        link.height,
                        link.bottom_cell
                    ));
                }
                if let Some(min) = report.min_degree {
                    out.push_str(&format!("  least degree attained: {min}\n"));
                }
            }
            ok(out)
        }
        Command::MinLoops { expr, space } => {
            let space = SpaceSpec::load(&space)?;
            let parsed = space.parse(&expr)?;
            let mut loops = 1u32;
            for m in parsed.terms() {
                for (w, _) in m.factors() {
                    loops = loops.max(w.min_loops());
                }
            }
            ok(format!("{loops}\n"))
        }
    }
}

fn run_audit(what: AuditCommand) -> Result<Outcome> {
    match what {
        AuditCommand::Brackets { alpha, format, strict, facts } => {
            let facts = load_facts(&facts)?;
            let table = stems_audit::bracket_audit(&facts, &alpha)?;
            let mut out = String::new();
            match format.as_str() {
                "text" => {
                    out.push_str(&format!("bracket audit: alpha = {}\n", table.alpha));
                    for n in &table.notes {
                        out.push_str(&format!("note: {n}\n"));
                    }
                    for r in &table.rows {
                        out.push_str(&format!(
                            "  s={} j={} k={}  {}\n",
                            r.s,
                            r.j,
                            r.k,
                            stems_audit::render_row_inline(r)
                        ));
                        if let RowVerdict::Defined { detail, .. } = &r.verdict {
                            if !detail.is_empty() {
                                out.push_str(&format!("      {detail}\n"));
                            }
                        }
                    }
                }
                "tsv" => {
                    out.push_str("s\tj\tk\tbeta\tgamma\tbracket\tstatus\trule\tdetail\n");
                    for r in &table.rows {
                        let (status, rule, detail) = match &r.verdict {
                            RowVerdict::NotDefined { witness } => {
                                ("not-defined", "-".to_string(), witness.clone())
                            }
                            RowVerdict::Excluded { reason } => {
                                ("excluded", "-".to_string(), reason.clone())
                            }
                            RowVerdict::Defined { rule, detail, status, value } => {
                                let s = match status {
                                    Status::Zero => "h-zero",
                                    Status::Nonzero => "h-nonzero",
                                    Status::Unknown => "h-unknown",
                                };
                                let mut d = detail.clone();
                                if let Some(v) = value {
                                    d = format!("value {v}; {d}");
                                }
                                (s, rule.clone(), d)
                            }
                        };
                        out.push_str(&format!(
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                            r.s, r.j, r.k, r.beta, r.gamma, r.bracket, status, rule, detail
                        ));
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown format `{other}` (expected text or tsv)"
                    )))
                }
            }
            let exit = if strict && table.has_unknown { 4 } else { 0 };
            Ok(Outcome { report: out, exit })
        }
        AuditCommand::Status { element, strict, facts } => {
            let facts = load_facts(&facts)?;
            let report = facts.hurewicz_status(&element)?;
            let status = match report.status {
                Status::Nonzero => "nonzero",
                Status::Zero => "zero",
                Status::Unknown => "unknown",
            };
            let out = format!(
                "element: {}\nstatus: {}\nrule: {}\ndetail: {}\n",
                report.element, status, report.rule, report.detail
            );
            let exit = if strict && report.status == Status::Unknown { 4 } else { 0 };
            Ok(Outcome { report: out, exit })
        }
    }
}

// Height filter on the raw text of an expression: each word factor
// contributes 2^(number of Q applications), translation factors contribute
// nothing. No canonicalisation happens; terms are kept verbatim.
fn james_hopf_textual(expr: &str, height: u64) -> Result<String> {
    let trimmed = expr.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    if trimmed == "0" {
        return Ok("0".into());
    }
    let mut kept = Vec::new();
    for term in trimmed.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        let mut h = 0u64;
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.starts_with("T[") {
                continue;
            }
            let q_count = factor.matches("Q[").count() as u32;
            h += 1u64 << q_count;
        }
        if h == height {
            kept.push(term.to_string());
        }
    }
    Ok(if kept.is_empty() { "0".into() } else { kept.join(" + ") })
}
