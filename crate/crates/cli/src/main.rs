use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sepvar::io::{
    check_pair, merge_report, oracle_basis, parse_problem, parse_strategy, route_and_solve,
    ProblemSpec, SolveError, Status,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARTIAL: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INVALID: u8 = 4;

#[derive(Parser)]
#[command(name = "sepvar", version, about = "Separated polynomials in polynomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Naive,
    Merged,
}

#[derive(Args)]
struct Common {
    /// Problem file, or `-` for standard input.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Subcommand)]
enum Command {
    /// Compute generators of the algebra of separated pairs.
    Separate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        exponent_cap: Option<u32>,
        #[arg(long)]
        timeout_seconds: Option<f64>,
    },
    /// List a basis of all pairs up to a degree by linear algebra.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: u32,
    },
    /// Show the merged ideal and how its algebra is obtained.
    Merge {
        #[command(flatten)]
        common: Common,
    },
    /// Check whether (f, g) is a separated pair of the ideal.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
}

fn read_problem(path: &PathBuf) -> Result<ProblemSpec, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_problem(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(e: SolveError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        SolveError::Invalid(_) => ExitCode::from(EXIT_INVALID),
        SolveError::Unsupported(_) => ExitCode::from(EXIT_UNSUPPORTED),
    }
}

fn emit(output: Output, json: serde_json::Value, text: impl FnOnce() -> String) {
    match output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&json).expect("json")),
        Output::Text => print!("{}", text()),
    }
}

fn run(cli: Cli) -> ExitCode {
    let common = match &cli.command {
        Command::Separate { common, .. }
        | Command::Oracle { common, .. }
        | Command::Merge { common }
        | Command::Check { common, .. } => common,
    };
    let mut spec = match read_problem(&common.file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let output = common.output;
    match cli.command {
        Command::Separate {
            strategy,
            max_degree,
            exponent_cap,
            timeout_seconds,
            ..
        } => {
            if let Some(s) = strategy {
                let name = match s {
                    StrategyArg::Naive => "naive",
                    StrategyArg::Merged => "merged",
                };
                spec.strategy = parse_strategy(name).expect("known strategy");
            }
            spec.max_degree = max_degree.unwrap_or(spec.max_degree);
            spec.exponent_cap = exponent_cap.unwrap_or(spec.exponent_cap);
            spec.timeout_seconds = timeout_seconds.or(spec.timeout_seconds);
            let doc = match route_and_solve(&spec) {
                Ok(d) => d,
                Err(e) => return fail(e),
            };
            emit(output, serde_json::to_value(&doc).expect("json"), || {
                let mut s = format!(
                    "status: {}\nroute: {}\n",
                    serde_json::to_value(doc.status).expect("json").as_str().unwrap_or(""),
                    serde_json::to_value(doc.route).expect("json").as_str().unwrap_or(""),
                );
                for g in &doc.generators {
                    s.push_str(&format!("({}, {})\n", g.f, g.g));
                }
                s
            });
            match doc.status {
                Status::Partial | Status::UnsupportedFallback => ExitCode::from(EXIT_PARTIAL),
                _ => ExitCode::SUCCESS,
            }
        }
        Command::Oracle { max_degree, .. } => match oracle_basis(&spec, max_degree) {
            Ok(basis) => {
                emit(
                    output,
                    serde_json::json!({ "max-degree": max_degree, "basis": basis }),
                    || basis.iter().map(|g| format!("({}, {})\n", g.f, g.g)).collect(),
                );
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Merge { .. } => match merge_report(&spec) {
            Ok(r) => {
                emit(output, serde_json::to_value(&r).expect("json"), || {
                    let mut s = String::new();
                    for p in &r.merged {
                        s.push_str(&format!("merged: {p}\n"));
                    }
                    for p in &r.merged_basis {
                        s.push_str(&format!("basis: {p}\n"));
                    }
                    s.push_str(&format!("route: {}\n", r.route));
                    if let Some(g) = &r.gcd {
                        s.push_str(&format!("gcd: {g}\n"));
                    }
                    for g in &r.generators {
                        s.push_str(&format!("generator: ({}, {})\n", g.f, g.g));
                    }
                    s
                });
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Check { f, g, .. } => match check_pair(&spec, &f, &g) {
            Ok(ok) => {
                emit(output, serde_json::json!({ "member": ok }), || {
                    format!("{}\n", if ok { "member" } else { "not a member" })
                });
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_CHECK_FAILED)
                }
            }
            Err(e) => fail(e),
        },
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
