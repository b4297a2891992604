use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use alon_tarsi::cert::{
    check_certificate, check_list_certificate, list_certificate, orientation_certificate, parse_certificate,
    Certificate,
};
use alon_tarsi::classify::{classify_connected, classify_degree_at, classify_two_connected, find_at_witness_subgraph};
use alon_tarsi::color::{bad_lists_for_pair, bad_lists_gallai, is_f_choosable};
use alon_tarsi::enumerate::read_graph6_lines;
use alon_tarsi::exec::{with_jobs, Exec};
use alon_tarsi::graph6::{emit_graph6, parse_graph6};
use alon_tarsi::search::is_pair_at;
use alon_tarsi::sweep::{run_sweep, search_two_marked, Constraints, Mode, Scope, SweepConfig};
use alon_tarsi::{Error, Graph, LabeledPair};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "alon-tarsi", version, about = "Alon-Tarsi classification, sweeps and certificates for small graphs")]
struct Cli {
    /// Worker threads (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0, env = "AT_JOBS")]
    jobs: usize,
    /// Write the JSON result here as well as to stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph, optionally with one or two marked vertices.
    Classify(ClassifyArgs),
    /// Exhaustive verification sweep over all graphs up to a given order.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_scope)]
        scope: Scope,
        /// Resume from and record progress in this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Catalog of marked pairs {x, y} lacking the chosen property.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_mode, default_value = "at")]
        mode: Mode,
        #[arg(long)]
        two_connected: bool,
        #[arg(long)]
        unstretched: bool,
        /// Print counts only.
        #[arg(long)]
        summary: bool,
    },
    /// Re-check an orientation or list certificate from scratch.
    VerifyCertificate { file: PathBuf },
    /// Re-check that a list certificate admits no proper colouring.
    VerifyLists { file: PathBuf },
}

#[derive(Args)]
struct ClassifyArgs {
    /// graph6 string (omit with --input).
    graph6: Option<String>,
    /// File of graph6 lines.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long, requires = "x")]
    y: Option<usize>,
    /// Attach an orientation or bad-list certificate.
    #[arg(long)]
    certify: bool,
    /// Confirm the verdict with the exhaustive orientation search.
    #[arg(long)]
    oracle: bool,
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A JSON result and, when the run refutes something, the reason.
type Outcome = (Value, Option<String>);

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Guard { .. } => EXIT_GUARD,
        Error::Certificate(_) | Error::Postcondition(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.jobs == 1 { Exec::Sequential } else { Exec::Parallel };
    let (value, refuted) = match with_jobs(cli.jobs, || run(&cli.command, exec)) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("JSON values serialise");
    // A closed pipe downstream is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match refuted {
        None => ExitCode::SUCCESS,
        Some(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn run(cmd: &Command, exec: Exec) -> Result<Outcome, Error> {
    match cmd {
        Command::Classify(args) => classify_cmd(args),
        Command::Verify { n, scope, checkpoint } => {
            let report = run_sweep(&SweepConfig {
                n_max: *n,
                scope: *scope,
                exec,
                checkpoint: checkpoint.clone(),
            })?;
            let refuted = (!report.passed()).then(|| format!("{} mismatches", report.mismatches.len()));
            Ok((serde_json::to_value(&report)?, refuted))
        }
        Command::Search {
            n,
            mode,
            two_connected,
            unstretched,
            summary,
        } => {
            let constraints = Constraints {
                two_connected: *two_connected,
                unstretched: *unstretched,
            };
            let mut catalog = search_two_marked(*n, *mode, constraints, exec)?;
            if *summary {
                catalog.entries.clear();
            }
            Ok((serde_json::to_value(&catalog)?, None))
        }
        Command::VerifyCertificate { file } => {
            let cert = parse_certificate(&std::fs::read_to_string(file)?)?;
            let msg = check_certificate(&cert)?;
            Ok((json!({ "accepted": true, "detail": msg }), None))
        }
        Command::VerifyLists { file } => match parse_certificate(&std::fs::read_to_string(file)?)? {
            Certificate::Lists(c) => {
                check_list_certificate(&c)?;
                Ok((json!({ "accepted": true, "detail": "list assignment confirmed uncolourable" }), None))
            }
            Certificate::Orientation(_) => Err(Error::Certificate("expected a list certificate".into())),
        },
    }
}

fn classify_cmd(args: &ClassifyArgs) -> Result<Outcome, Error> {
    let graphs = match (&args.graph6, &args.input) {
        (Some(s), None) => vec![parse_graph6(s)?],
        (None, Some(path)) => read_graph6_lines(&std::fs::read_to_string(path)?)?,
        _ => return Err(Error::Precondition("give exactly one of a graph6 string or --input".into())),
    };
    let mut out = Vec::new();
    let mut refuted = Vec::new();
    for g in graphs {
        let v = classify_one(g, args)?;
        if v.get("oracle_agrees") == Some(&Value::Bool(false)) {
            refuted.push(v["graph6"].as_str().unwrap_or_default().to_string());
        }
        out.push(v);
    }
    let value = if args.input.is_none() { out.pop().expect("one graph") } else { Value::Array(out) };
    let refuted = (!refuted.is_empty()).then(|| format!("oracle disagrees on {}", refuted.join(", ")));
    Ok((value, refuted))
}

fn classify_one(g: Graph, args: &ClassifyArgs) -> Result<Value, Error> {
    let g6 = emit_graph6(&g);
    let p = match (args.x, args.y) {
        (None, _) => LabeledPair::zero(g.clone()),
        (Some(x), None) => LabeledPair::marked(g.clone(), x)?,
        (Some(x), Some(y)) => LabeledPair::two_marked(g.clone(), x, y)?,
    };
    let mut v = json!({ "graph6": g6, "labels": p.labels });
    let at = match (args.x, args.y) {
        (None, _) => {
            let c = classify_degree_at(&g)?;
            v["classification"] = serde_json::to_value(&c)?;
            c.at
        }
        (Some(_), None) => {
            let c = if g.is_two_connected() {
                classify_two_connected(&p)?
            } else {
                classify_connected(&p)?
            };
            if let Some(k) = c.case.obstruction() {
                v["obstruction"] = json!(k);
            }
            v["classification"] = serde_json::to_value(&c)?;
            c.at
        }
        // No structural classifier for two marked vertices; decide by search.
        (Some(_), Some(_)) => {
            let at = is_pair_at(&p)?.is_some();
            v["classification"] = json!({ "at": at, "case": "search" });
            at
        }
    };
    if args.oracle {
        let oracle = is_pair_at(&p)?.is_some();
        v["oracle"] = json!(oracle);
        v["oracle_agrees"] = json!(oracle == at);
    }
    if args.certify {
        v["certificate"] = certify(&p, at, args)?;
    }
    Ok(v)
}

fn certify(p: &LabeledPair, at: bool, args: &ClassifyArgs) -> Result<Value, Error> {
    let g = &p.graph;
    if at {
        let d = match (args.x, args.y) {
            (Some(_), None) if g.is_connected() => find_at_witness_subgraph(p)?.orientation,
            _ => is_pair_at(p)?.ok_or_else(|| Error::Postcondition("search found no AT orientation".into()))?,
        };
        return Ok(serde_json::to_value(orientation_certificate(p, &d)?)?);
    }
    let lists = match (args.x, args.y) {
        (None, _) if g.is_connected() => Some(bad_lists_gallai(g)?.lists),
        (Some(_), None) if g.is_connected() => Some(bad_lists_for_pair(p)?.lists),
        _ => is_f_choosable(g, &p.degree_bound())?.map(|l| l.lists),
    };
    Ok(match lists {
        Some(l) => serde_json::to_value(list_certificate(p, &l))?,
        // Not AT yet choosable: no bad lists exist.
        None => json!({ "choosable": true }),
    })
}
