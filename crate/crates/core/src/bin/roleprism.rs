use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use roleprism::census::{self, MAX_CENSUS_ORDER};
use roleprism::format;
use roleprism::role;
use roleprism::solver::DEFAULT_BUDGET;
use roleprism::{complementary_prism, construct_with_budget, decide, Format, Graph, WitnessError, WitnessTrace};

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

/// Decide and construct 3-role assignments of complementary prisms.
#[derive(Parser, Debug)]
#[command(name = "roleprism", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print `YES` or `NO side=<G|Gc> cond=<k>`. Exit 0 on YES, 1 on NO.
    Decide(InputArgs),
    /// Build a verified assignment of the prism. Exit 1 on NO-instances.
    Witness {
        #[command(flatten)]
        input: InputArgs,
        /// Oracle node budget if no construction applies.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check a trace or bare assignment against the prism of a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Trace produced by `witness`, or a `roles`/`assignment` block.
        #[arg(long)]
        witness: PathBuf,
    },
    /// Print the complementary prism.
    Prism {
        #[command(flatten)]
        input: InputArgs,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        emit: Format,
    },
    /// Compare decide, the oracle and the constructor on every graph up to
    /// `--nmax` vertices. Exit 1 on any disagreement, fallback or witness
    /// failure, 3 if the oracle ran out of budget.
    Crosscheck {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Graph file; stdin when omitted.
    path: Option<PathBuf>,
    /// Input encoding; guessed from the first line when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Print a JSON record instead of plain text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_source(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn load(input: &InputArgs) -> Result<Graph, String> {
    let text = read_source(input.path.as_deref())?;
    let g = format::parse(&text, input.format).map_err(|e| format!("parse error: {e}"))?;
    if g.n() == 0 {
        return Err("the graph has no vertices".into());
    }
    Ok(g)
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Decide(input) => run_decide(&input),
        Command::Witness { input, budget } => run_witness(&input, budget),
        Command::Verify { input, witness } => run_verify(&input, &witness),
        Command::Prism { input, emit } => {
            let g = load(&input)?;
            let p = complementary_prism(&g).map_err(|e| e.to_string())?;
            print!("{}", p.emit(emit));
            Ok(0)
        }
        Command::Crosscheck { nmax, budget, json } => run_crosscheck(nmax, budget, json),
    }
}

fn run_decide(input: &InputArgs) -> Result<u8, String> {
    let g = load(input)?;
    let report = decide(&g).map_err(|e| e.to_string())?;
    if input.json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!("{}", report.line());
    }
    Ok(if report.has_assignment() { 0 } else { EXIT_NO })
}

fn trace_json(t: &WitnessTrace) -> serde_json::Value {
    let params: serde_json::Map<String, serde_json::Value> = t
        .params
        .iter()
        .map(|p| (p.name.clone(), json!(p.vertices)))
        .collect();
    json!({
        "construction": t.construction,
        "side": t.side,
        "route": t.route,
        "fallback": t.fallback,
        "params": params,
        "role_graph": t.role_graph.edges(),
        "assignment": t.assignment.roles(),
    })
}

fn run_witness(input: &InputArgs, budget: u64) -> Result<u8, String> {
    let g = load(input)?;
    match construct_with_budget(&g, budget) {
        Ok(t) => {
            if input.json {
                println!("{}", trace_json(&t));
            } else {
                print!("{}", t.serialize());
            }
            Ok(0)
        }
        Err(WitnessError::NoAssignment(report)) => {
            println!("{}", report.line());
            Ok(EXIT_NO)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_verify(input: &InputArgs, witness: &Path) -> Result<u8, String> {
    let g = load(input)?;
    let text = read_source(Some(witness))?;
    let (assignment, role_graph) = match WitnessTrace::parse(&text) {
        Ok(t) => (t.assignment, t.role_graph),
        Err(_) => role::deserialize(&text).map_err(|e| format!("witness parse error: {e}"))?,
    };
    let p = complementary_prism(&g).map_err(|e| e.to_string())?;
    match role::verify(p.graph(), &assignment, &role_graph) {
        Ok(()) => {
            println!("ok");
            Ok(0)
        }
        Err(failure) => {
            println!("invalid: {failure}");
            Ok(EXIT_NO)
        }
    }
}

fn run_crosscheck(nmax: usize, budget: u64, json: bool) -> Result<u8, String> {
    if nmax > MAX_CENSUS_ORDER {
        return Err(format!("--nmax must be at most {MAX_CENSUS_ORDER}"));
    }
    let (rows, summary) = census::crosscheck(nmax, budget).map_err(|e| e.to_string())?;
    if json {
        let out = json!({ "rows": rows, "summary": summary });
        println!("{out}");
    } else {
        for r in &rows {
            let agree = match r.agree {
                Some(true) => "agree",
                Some(false) => "DISAGREE",
                None => "unknown",
            };
            let oracle = serde_json::to_value(r.oracle).expect("verdict serializes");
            println!(
                "{}\t{}\t{}\t{}\t{}{}",
                r.n,
                r.graph6,
                r.decide,
                oracle.as_str().unwrap_or("?"),
                agree,
                match (&r.construction, r.witness_ok) {
                    (Some(c), Some(true)) if r.fallback => format!("\t{c} (fallback)"),
                    (Some(c), Some(true)) => format!("\t{c}"),
                    (_, Some(false)) => "\tWITNESS FAILED".to_string(),
                    _ => String::new(),
                }
            );
        }
        println!(
            "graphs={} yes={} no={} disagreements={} unknowns={} fallbacks={} witness_failures={}",
            summary.graphs,
            summary.yes,
            summary.no,
            summary.disagreements,
            summary.unknowns,
            summary.fallbacks,
            summary.witness_failures
        );
    }
    Ok(
        if summary.disagreements + summary.fallbacks + summary.witness_failures > 0 {
            EXIT_NO
        } else if summary.unknowns > 0 {
            EXIT_UNKNOWN
        } else {
            0
        },
    )
}
