//! Command-line front end.
//!
//! Reports go to standard output as JSON (validated against the published
//! schema before they are written); a short human-readable summary goes to
//! standard error. Exit codes: 0 when everything checked holds, 1 when a
//! violation or difference was found, 2 on usage or input errors.

pub mod report;
pub mod table;
pub mod text;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::axioms::{check, AxiomId, Status};
use crate::enumeration::{fubini, sample_rng, Mode, RankingStream, Sampler};
use crate::error::Error;
use crate::model::{coalition_count, Universe};
use crate::solutions::RuleId;
use crate::verify::{self, SweepOptions};

pub const JOBS_ENV: &str = "MILLRANK_JOBS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "millrank",
    version,
    about = "Coalitional rankings, causal-responsibility rules and their axioms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a rule to a ranking.
    Solve {
        #[arg(long)]
        rule: RuleId,
        #[command(flatten)]
        io: InputOutput,
    },
    /// Check one axiom for one rule on one ranking.
    Check {
        #[arg(long)]
        rule: RuleId,
        #[arg(long)]
        axiom: AxiomId,
        #[command(flatten)]
        io: InputOutput,
    },
    /// Check one axiom for one rule on every (or a sample of) ranking.
    Sweep {
        #[arg(long)]
        rule: RuleId,
        #[arg(long)]
        axiom: AxiomId,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Run a verification campaign.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// List or count all rankings over n individuals.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Report the count only.
        #[arg(long)]
        count_only: bool,
        /// Stop after this many rankings.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw uniformly random rankings.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Target {
    /// Compare a rule with plurality and look for a STAG, SI or DMON violation.
    Theorem1 {
        #[arg(long)]
        rule: RuleId,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// RDF/CV incompatibility, the RAG premise lemma, and WRAG with CV.
    Prop1 {
        #[command(flatten)]
        campaign: Campaign,
    },
    /// The rule × canon matrix for plurality, les and obi.
    Prop3 {
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Independence of STAG, SI and DMON.
    Independence {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        witness_cap: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InputOutput {
    /// Ranking document (text or JSON); `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Campaign {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Check this many sampled rankings instead of all of them.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    witness_cap: usize,
    #[arg(long)]
    jobs: Option<usize>,
    /// `csv` writes one row per sweep; supported by `sweep` and `verify prop3`.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl Campaign {
    fn mode(&self) -> Mode {
        match self.sample {
            Some(count) => Mode::Sample {
                count,
                seed: self.seed,
            },
            None => Mode::Exhaustive,
        }
    }

    fn parameters(&self) -> Value {
        json!({ "n": self.n, "mode": report::mode(self.mode()), "witness_cap": self.witness_cap })
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => f.write_str(m),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

struct Outcome {
    report: Value,
    /// Replaces the JSON body when CSV was requested.
    table: Option<String>,
    output: Option<PathBuf>,
    summary: Vec<String>,
    code: i32,
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    run_with(
        args,
        &mut stdin.lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}

/// Runs the command line against the given streams and returns the exit code.
pub fn run_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let jobs_env = match std::env::var(JOBS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(j) if j > 0 => Some(j),
            _ => {
                let _ = writeln!(
                    err,
                    "error: {JOBS_ENV} must be a positive integer, got `{v}`"
                );
                return EXIT_ERROR;
            }
        },
        Err(_) => None,
    };
    let outcome = match execute(cli.command, jobs_env, stdin) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    if let Err(problems) = report::validate(&outcome.report) {
        let _ = writeln!(err, "error: report does not match the published schema");
        for p in problems {
            let _ = writeln!(err, "  {p}");
        }
        return EXIT_ERROR;
    }
    let body = match outcome.table {
        Some(table) => table,
        None => report::to_string(&outcome.report),
    };
    let written = match &outcome.output {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_ERROR;
    }
    for line in &outcome.summary {
        let _ = writeln!(err, "{line}");
    }
    outcome.code
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<text::RankingDocument, Failure> {
    let mut body = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut body)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
    } else {
        body = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    }
    text::parse_ranking(&body).map_err(|e| match e {
        Error::Syntax { .. } => Failure::Input(format!("{}: {e}", path.display())),
        other => Failure::Lib(other),
    })
}

fn json_only(campaign: &Campaign) -> Result<(), Failure> {
    match campaign.format {
        Format::Json => Ok(()),
        Format::Csv => Err(Failure::Input(
            "--format csv is supported by `sweep` and `verify prop3`".into(),
        )),
    }
}

fn options(witness_cap: usize, jobs: Option<usize>, jobs_env: Option<usize>) -> SweepOptions {
    SweepOptions {
        witness_cap,
        jobs: jobs_env.or(jobs),
    }
}

fn seconds(d: std::time::Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn execute(
    command: Command,
    jobs_env: Option<usize>,
    stdin: &mut dyn Read,
) -> Result<Outcome, Failure> {
    match command {
        Command::Solve { rule, io } => {
            let doc = read_input(&io.input, stdin)?;
            let selected = rule.apply(&doc.ranking);
            Ok(Outcome {
                table: None,
                report: report::envelope(
                    "solve",
                    json!({ "rule": rule.as_str(), "input": io.input.display().to_string() }),
                    "selection",
                    report::selection(&doc.universe, selected),
                ),
                output: io.output,
                summary: vec![format!(
                    "{rule}: {{{}}}",
                    doc.universe.format_selection(selected).join(",")
                )],
                code: EXIT_OK,
            })
        }
        Command::Check { rule, axiom, io } => {
            let doc = read_input(&io.input, stdin)?;
            let v = check(axiom, &doc.ranking, rule);
            let mut summary = vec![format!(
                "{axiom} for {rule}: {} ({} premise instances)",
                report::status(v.status),
                v.premises_checked
            )];
            if let Some(w) = &v.witness {
                summary.push(format!("  required {}", w.required.describe()));
            }
            Ok(Outcome {
                table: None,
                report: report::envelope(
                    "check",
                    json!({ "rule": rule.as_str(), "axiom": axiom.as_str(), "input": io.input.display().to_string() }),
                    "verdict",
                    report::verdict_in(&doc.universe, &v),
                ),
                output: io.output,
                summary,
                code: if v.status == Status::Violated {
                    EXIT_FOUND
                } else {
                    EXIT_OK
                },
            })
        }
        Command::Sweep {
            rule,
            axiom,
            campaign,
        } => {
            let opts = options(campaign.witness_cap, campaign.jobs, jobs_env);
            let r = verify::sweep(rule, axiom, campaign.n, campaign.mode(), opts)?;
            let table = (campaign.format == Format::Csv).then(|| table::sweeps([&r]));
            let mut parameters = campaign.parameters();
            parameters["rule"] = json!(rule.as_str());
            parameters["axiom"] = json!(axiom.as_str());
            Ok(Outcome {
                table,
                summary: vec![format!(
                    "{axiom} for {rule}, n = {}: {} rankings, {} premise instances, {} violations in {}",
                    r.n,
                    r.rankings_checked,
                    r.premises_found,
                    r.violations,
                    seconds(r.wall_time)
                )],
                code: if r.passed() { EXIT_OK } else { EXIT_FOUND },
                report: report::envelope("sweep", parameters, "sweep_report", report::sweep(&r)),
                output: campaign.output,
            })
        }
        Command::Verify { target } => verify_target(target, jobs_env),
        Command::Enumerate {
            n,
            count_only,
            limit,
            output,
        } => {
            let mut stream = RankingStream::new(n, Mode::Exhaustive)?;
            let total = fubini(coalition_count(n));
            let (count, rankings, truncated) = if count_only {
                let count = u64::try_from(&total)
                    .map_err(|_| Failure::Input("count exceeds 64 bits".into()))?;
                (count, Vec::new(), false)
            } else {
                let Some(limit) = limit.or((n <= 3).then_some(u64::MAX)) else {
                    return Err(Failure::Input(format!(
                        "{total} rankings over {n} individuals; pass --count-only or --limit"
                    )));
                };
                let universe = Universe::new(n)?;
                let mut rankings = Vec::new();
                let mut truncated = false;
                for r in stream.by_ref() {
                    if rankings.len() as u64 == limit {
                        truncated = true;
                        break;
                    }
                    rankings.push(json!(text::render_ranking(&universe, &r)));
                }
                (rankings.len() as u64, rankings, truncated)
            };
            let mut payload = json!({ "n": n, "count": count, "rankings": rankings });
            if truncated {
                payload["truncated"] = json!(true);
            }
            Ok(Outcome {
                table: None,
                report: report::envelope(
                    "enumerate",
                    json!({ "n": n, "count_only": count_only, "limit": limit }),
                    "enumeration",
                    payload,
                ),
                output,
                summary: vec![format!("{total} rankings over {n} individuals")],
                code: EXIT_OK,
            })
        }
        Command::Sample {
            n,
            seed,
            count,
            output,
        } => {
            if count == 0 {
                return Err(Failure::Input("--count must be at least 1".into()));
            }
            RankingStream::new(n, Mode::Sample { count, seed })?;
            let universe = Universe::new(n)?;
            let sampler = Sampler::new(coalition_count(n));
            let rankings: Vec<Value> = (0..count)
                .map(|i| {
                    json!(text::render_ranking(
                        &universe,
                        &sampler.sample(n, &mut sample_rng(seed, i))
                    ))
                })
                .collect();
            Ok(Outcome {
                table: None,
                report: report::envelope(
                    "sample",
                    json!({ "n": n, "seed": seed, "count": count }),
                    "sample",
                    json!({ "n": n, "seed": seed, "rankings": rankings }),
                ),
                output,
                summary: vec![format!(
                    "{count} ranking(s) over {n} individuals from seed {seed}"
                )],
                code: EXIT_OK,
            })
        }
    }
}

fn verify_target(target: Target, jobs_env: Option<usize>) -> Result<Outcome, Failure> {
    match target {
        Target::Theorem1 { rule, campaign } => {
            json_only(&campaign)?;
            let opts = options(campaign.witness_cap, campaign.jobs, jobs_env);
            let p = verify::theorem1_probe(rule, campaign.n, campaign.mode(), opts)?;
            let mut parameters = campaign.parameters();
            parameters["rule"] = json!(rule.as_str());
            let mut summary = vec![format!(
                "{rule} vs plurality, n = {}: {} of {} rankings differ",
                p.n, p.differences, p.rankings_checked
            )];
            if let Some(w) = &p.witness {
                summary.push(format!(
                    "  {} violated: required {}",
                    w.axiom,
                    w.required.describe()
                ));
            }
            for s in &p.sweeps {
                summary.push(format!("  {}: {} violations", s.axiom, s.violations));
            }
            Ok(Outcome {
                table: None,
                code: if p.equivalent() && p.consistent() {
                    EXIT_OK
                } else {
                    EXIT_FOUND
                },
                report: report::envelope(
                    "verify theorem1",
                    parameters,
                    "probe_report",
                    report::probe(&p),
                ),
                output: campaign.output,
                summary,
            })
        }
        Target::Prop1 { campaign } => {
            json_only(&campaign)?;
            let opts = options(campaign.witness_cap, campaign.jobs, jobs_env);
            let p = verify::prop1_report(campaign.n, campaign.mode(), opts)?;
            let certified = p.constructions.iter().filter(|c| c.certified).count();
            Ok(Outcome {
                table: None,
                summary: vec![
                    format!(
                        "RDF/CV construction certified for {certified} of {} pairs",
                        p.constructions.len()
                    ),
                    format!(
                        "RAG premise lemma: {} RDF and {} RJAD premises, {} counterexamples",
                        p.rdf_premises, p.rjad_premises, p.lemma_violations
                    ),
                    format!(
                        "const_x: WRAG {} violations, CV {} violations",
                        p.const_x_wrag.violations, p.const_x_cv.violations
                    ),
                ],
                code: if p.holds() { EXIT_OK } else { EXIT_FOUND },
                report: report::envelope(
                    "verify prop1",
                    campaign.parameters(),
                    "prop1_report",
                    report::prop1(&p),
                ),
                output: campaign.output,
            })
        }
        Target::Prop3 { campaign } => {
            let opts = options(campaign.witness_cap, campaign.jobs, jobs_env);
            let m = verify::prop3_matrix(campaign.n, campaign.mode(), opts)?;
            let table = (campaign.format == Format::Csv).then(|| table::matrix(&m));
            let mut summary = Vec::new();
            for c in &m.cells {
                let flag = if c.discrepancy {
                    "  (disagrees with the stated matrix)"
                } else {
                    ""
                };
                summary.push(format!(
                    "{:<10} {:<5} {}{flag}",
                    c.sweep.rule.as_str(),
                    c.sweep.axiom.as_str(),
                    c.observed.as_str()
                ));
            }
            let unexplained = m.cells.iter().any(|c| c.unexplained());
            Ok(Outcome {
                table,
                summary,
                code: if unexplained { EXIT_FOUND } else { EXIT_OK },
                report: report::envelope(
                    "verify prop3",
                    campaign.parameters(),
                    "matrix_report",
                    report::matrix(&m),
                ),
                output: campaign.output,
            })
        }
        Target::Independence {
            n,
            witness_cap,
            jobs,
            output,
        } => {
            let r = verify::independence_report(n, options(witness_cap, jobs, jobs_env))?;
            let summary = r
                .claims
                .iter()
                .map(|c| {
                    format!(
                        "{:<15} {:<5} expected {:<9} {}",
                        c.rule.as_str(),
                        c.axiom.as_str(),
                        c.expected.as_str(),
                        if c.holds {
                            "confirmed"
                        } else {
                            "NOT confirmed"
                        }
                    )
                })
                .collect();
            Ok(Outcome {
                table: None,
                summary,
                code: if r.holds() { EXIT_OK } else { EXIT_FOUND },
                report: report::envelope(
                    "verify independence",
                    json!({ "n": n, "witness_cap": witness_cap }),
                    "independence_report",
                    report::independence(&r),
                ),
                output,
            })
        }
    }
}
