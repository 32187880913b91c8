//! Command line surface over the loopgraphs library.
//!
//! Exit codes are a stable contract: 0 for success or a passing check, 1 for
//! a failing check, an infeasible sequence or an oracle disagreement, 2 for
//! input errors, 3 for an exceeded oracle budget.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use loopgraphs::graphs::DegreeConvention;
use loopgraphs::io::{
    bipartite_to_dot, graph_from_json, graph_to_dot, multigraph_to_dot, parse_sequence_text,
    read_sequence_document,
};
use loopgraphs::oracle::{oracle_bipartite_symmetric, oracle_realizable, OracleBudget, OracleError};
use loopgraphs::realize::{realize_loops_double, realize_loops_reduced, realize_simple, RealizeError};
use loopgraphs::sequences::{
    check_erdos_gallai, check_gale_ryser_symmetric, check_loops_double, check_loops_reduced,
    CheckReport, DegreeSequence,
};
use loopgraphs::transforms::{complement_graph, tensor_double_cover, topological_double_cover};

const ORACLE_BUDGET_ENV: &str = "LOOPGRAPHS_ORACLE_MAX_N";

#[derive(Parser)]
#[command(
    name = "loopgraphs",
    version,
    about = "Degree sequence checks, constructive realizers, double covers and brute-force oracles for graphs with loops"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a realizability check and print the per-k report.
    Check {
        #[arg(long, value_enum)]
        mode: CheckMode,
        /// Sort the input instead of requiring nonincreasing order.
        #[arg(long)]
        sort: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Inline sequence, e.g. "4 4 2 2".
        seq: Option<String>,
        /// Read the sequence from a file (JSON {"degrees": [..]} or plain text).
        #[arg(long, conflicts_with = "seq")]
        file: Option<PathBuf>,
    },
    /// Construct a graph realizing the sequence.
    Realize {
        #[arg(long, value_enum)]
        mode: RealizeMode,
        #[arg(long)]
        sort: bool,
        /// Emit DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Include the reduction/rebuild trace in the JSON output.
        #[arg(long, conflicts_with = "dot")]
        trace: bool,
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        file: Option<PathBuf>,
    },
    /// Build a double cover of a graph-with-loops read from a JSON file.
    Cover {
        #[arg(long, value_enum)]
        kind: CoverKind,
        #[arg(long)]
        dot: bool,
        /// Graph file path, or "-" for stdin.
        input: String,
    },
    /// Complement a graph-with-loops within the complete graph-with-loops.
    Complement {
        #[arg(long)]
        dot: bool,
        /// Graph file path, or "-" for stdin.
        input: String,
    },
    /// Decide realizability by exhaustive search and print witnesses.
    Oracle {
        #[arg(long, value_enum, default_value = "double")]
        convention: Convention,
        /// Query the symmetric bipartite oracle instead.
        #[arg(long, conflicts_with = "scan")]
        bipartite: bool,
        /// Also run the inequality check and flag disagreements.
        #[arg(long)]
        compare: bool,
        /// Vertex-count cap (default from LOOPGRAPHS_ORACLE_MAX_N, else 5;
        /// 4 for --bipartite).
        #[arg(long)]
        max_n: Option<usize>,
        /// Scan every nonincreasing sequence of length --n with entries up
        /// to --dmax, one JSON line each.
        #[arg(long, requires = "n", requires = "dmax")]
        scan: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        dmax: Option<u64>,
        #[arg(long)]
        sort: bool,
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Eg,
    LoopsDouble,
    LoopsReduced,
    GaleRyser,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizeMode {
    Simple,
    LoopsDouble,
    LoopsReduced,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverKind {
    Tensor,
    Topological,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Double,
    Reduced,
}

impl From<Convention> for DegreeConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Double => DegreeConvention::Double,
            Convention::Reduced => DegreeConvention::Reduced,
        }
    }
}

/// Failure modes that map onto the nonzero exit codes.
enum Failure {
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn read_sequence(
    seq: Option<String>,
    file: Option<PathBuf>,
    sort: bool,
) -> Result<DegreeSequence, Failure> {
    let raw = match (seq, file) {
        (Some(text), None) => parse_sequence_text(&text).map_err(input_err)?,
        (None, Some(path)) => {
            let content = fs::read_to_string(&path)
                .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
            read_sequence_document(&content).map_err(input_err)?
        }
        (None, None) => return Err(Failure::Input("no sequence given".into())),
        (Some(_), Some(_)) => unreachable!("clap forbids both"),
    };
    DegreeSequence::new(&raw, sort).map_err(input_err)
}

fn read_graph(input: &str) -> Result<loopgraphs::GraphWithLoops, Failure> {
    let content = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(input_err)?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| input_err(format!("{input}: {e}")))?
    };
    graph_from_json(&content).map_err(input_err)
}

fn print_report(report: &CheckReport) {
    println!("   k |        lhs |        rhs");
    for row in &report.rows {
        let mark = if row.lhs > row.rhs { "  violated" } else { "" };
        println!("{:>4} | {:>10} | {:>10}{mark}", row.k, row.lhs, row.rhs);
    }
    println!("parity: {}", if report.parity_ok { "ok" } else { "odd degree sum" });
    match report.first_violation {
        Some(k) => println!("first violation: k = {k}"),
        None => println!("first violation: none"),
    }
    println!("verdict: {}", if report.passed { "PASS" } else { "FAIL" });
}

fn oracle_budget(max_n: Option<usize>, bipartite: bool) -> Result<OracleBudget, Failure> {
    let from_env = match std::env::var(ORACLE_BUDGET_ENV) {
        Ok(value) => Some(value.parse::<usize>().map_err(|_| {
            input_err(format!("{ORACLE_BUDGET_ENV}={value} is not a vertex count"))
        })?),
        Err(_) => None,
    };
    let default = if bipartite { 4 } else { 5 };
    Ok(OracleBudget::with_max_n(max_n.or(from_env).unwrap_or(default)))
}

fn budget_err(e: OracleError) -> Failure {
    Failure::Budget(e.to_string())
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check { mode, sort, json, seq, file } => {
            let d = read_sequence(seq, file, sort)?;
            let report = match mode {
                CheckMode::Eg => check_erdos_gallai(&d),
                CheckMode::LoopsDouble => check_loops_double(&d),
                CheckMode::LoopsReduced => check_loops_reduced(&d),
                CheckMode::GaleRyser => check_gale_ryser_symmetric(&d),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print_report(&report);
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Realize { mode, sort, dot, trace, seq, file } => {
            let d = read_sequence(seq, file, sort)?;
            let result = match mode {
                RealizeMode::Simple => realize_simple(&d).map(|g| (g, None)),
                RealizeMode::LoopsDouble => realize_loops_double(&d).map(|(g, t)| (g, Some(t))),
                RealizeMode::LoopsReduced => realize_loops_reduced(&d).map(|(g, t)| (g, Some(t))),
            };
            match result {
                Ok((graph, trace_data)) => {
                    if dot {
                        print!("{}", graph_to_dot(&graph));
                    } else if trace {
                        let body = json!({ "graph": graph, "trace": trace_data });
                        println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                    } else {
                        println!("{}", serde_json::to_string_pretty(&graph).expect("serializes"));
                    }
                    Ok(0)
                }
                Err(RealizeError::Infeasible { report }) => {
                    eprintln!("sequence is not realizable in this mode");
                    print_report(&report);
                    Ok(1)
                }
                Err(e) => Err(Failure::Input(e.to_string())),
            }
        }
        Command::Cover { kind, dot, input } => {
            let g = read_graph(&input)?;
            match kind {
                CoverKind::Tensor => {
                    let cover = tensor_double_cover(&g);
                    if dot {
                        print!("{}", bipartite_to_dot(&cover));
                    } else {
                        println!("{}", serde_json::to_string_pretty(&cover).expect("serializes"));
                    }
                }
                CoverKind::Topological => {
                    let cover = topological_double_cover(&g);
                    if dot {
                        print!("{}", multigraph_to_dot(&cover));
                    } else {
                        println!("{}", serde_json::to_string_pretty(&cover).expect("serializes"));
                    }
                }
            }
            Ok(0)
        }
        Command::Complement { dot, input } => {
            let g = read_graph(&input)?;
            let c = complement_graph(&g);
            if dot {
                print!("{}", graph_to_dot(&c));
            } else {
                println!("{}", serde_json::to_string_pretty(&c).expect("serializes"));
            }
            Ok(0)
        }
        Command::Oracle { convention, bipartite, compare, max_n, scan, n, dmax, sort, seq, file } => {
            let budget = oracle_budget(max_n, bipartite)?;
            if scan {
                let (n, dmax) = (n.expect("clap requires"), dmax.expect("clap requires"));
                return oracle_scan(n, dmax, convention.into(), &budget, compare);
            }
            let d = read_sequence(seq, file, sort)?;
            if bipartite {
                let witness = oracle_bipartite_symmetric(&d, &budget).map_err(budget_err)?;
                let mut body = json!({
                    "degrees": d,
                    "realizable": witness.is_some(),
                    "witness": witness,
                });
                if compare {
                    let predicted = check_gale_ryser_symmetric(&d).passed;
                    let agree = predicted == body["realizable"].as_bool().unwrap();
                    body["check_passed"] = json!(predicted);
                    body["agree"] = json!(agree);
                    println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                    return Ok(if agree { 0 } else { 1 });
                }
                println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                Ok(0)
            } else {
                let witness = oracle_realizable(&d, convention.into(), &budget).map_err(budget_err)?;
                let mut body = json!({
                    "degrees": d,
                    "convention": DegreeConvention::from(convention),
                    "realizable": witness.is_some(),
                    "witness": witness,
                });
                if compare {
                    let predicted = match convention {
                        Convention::Double => check_loops_double(&d).passed,
                        Convention::Reduced => check_loops_reduced(&d).passed,
                    };
                    let agree = predicted == body["realizable"].as_bool().unwrap();
                    body["check_passed"] = json!(predicted);
                    body["agree"] = json!(agree);
                    println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                    return Ok(if agree { 0 } else { 1 });
                }
                println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                Ok(0)
            }
        }
    }
}

fn oracle_scan(
    n: usize,
    dmax: u64,
    convention: DegreeConvention,
    budget: &OracleBudget,
    compare: bool,
) -> Result<u8, Failure> {
    if n > budget.max_n {
        return Err(Failure::Budget(
            OracleError::BudgetExceeded { n, max_n: budget.max_n }.to_string(),
        ));
    }
    let mut disagreements = 0usize;
    for d in loopgraphs::oracle::sequence_space(n, dmax) {
        let witness = oracle_realizable(&d, convention, budget).map_err(budget_err)?;
        let realizable = witness.is_some();
        let mut line = json!({
            "degrees": d,
            "realizable": realizable,
            "witness": witness,
        });
        if compare {
            let predicted = match convention {
                DegreeConvention::Double => check_loops_double(&d).passed,
                DegreeConvention::Reduced => check_loops_reduced(&d).passed,
            };
            if predicted != realizable {
                disagreements += 1;
            }
            line["check_passed"] = json!(predicted);
            line["agree"] = json!(predicted == realizable);
        }
        println!("{}", serde_json::to_string(&line).expect("serializes"));
    }
    if compare {
        println!("{disagreements} disagreements");
        Ok(if disagreements == 0 { 0 } else { 1 })
    } else {
        Ok(0)
    }
}
