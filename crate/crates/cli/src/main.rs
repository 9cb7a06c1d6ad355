use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kovacic::{analyze, solve, SolverConfig};
use kovacic_cli::batch::{all_solved, read_corpus, results_jsonl, run_batch, stats};
use kovacic_cli::parse_ode;
use kovacic_cli::report::{analyze_json, analyze_text, exit_code, solve_text, SolveJson};

#[derive(Parser)]
#[command(name = "kovacic", version, about = "Liouvillian solutions of second-order linear ODEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct SearchArgs {
    /// Only try this case.
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=3))]
    case: Option<u8>,
    /// Only try this n in case 3.
    #[arg(long, value_parser = ["4", "6", "12"])]
    n: Option<String>,
    /// Largest degree of the auxiliary polynomial.
    #[arg(long = "max-d", default_value_t = 64)]
    max_d: u64,
    /// Largest number of candidates to try.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Skip the symbolic verification of candidates.
    #[arg(long = "no-verify")]
    no_verify: bool,
}

impl SearchArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            forced_case: self.case,
            forced_n: self.n.as_deref().map(|n| n.parse().expect("validated")),
            max_d: self.max_d,
            verify: !self.no_verify,
            trial_budget: self.budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve one equation such as "(2*x+1)*y'' - 2*y' - (2*x+3)*y = 0".
    Solve {
        /// The equation; `= 0` may be left out.
        ode: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Print a single JSON line.
        #[arg(long)]
        json: bool,
    },
    /// Print r, its poles, the order at infinity and the admissible cases.
    Analyze {
        ode: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve every record of a JSON Lines corpus.
    Batch {
        /// One `{"id": ..., "ode": ...}` object per line.
        corpus: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Results file, one JSON line per record.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Statistics file.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Leave out per-record timings so that results are reproducible.
        #[arg(long = "no-timing")]
        no_timing: bool,
    },
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Solve { ode, search, json } => {
            let ode = parse_ode(&ode).map_err(|e| e.to_string())?;
            let cfg = search.config();
            cfg.validate().map_err(|e| e.to_string())?;
            let rep = solve(&ode, &cfg);
            if json {
                let line = serde_json::to_string(&SolveJson::from_report(&rep, None, None)).map_err(|e| e.to_string())?;
                println!("{line}");
            } else {
                print!("{}", solve_text(&rep));
            }
            Ok(exit_code(rep.status))
        }
        Command::Analyze { ode, json } => {
            let ode = parse_ode(&ode).map_err(|e| e.to_string())?;
            match analyze(&ode) {
                Ok((nf, pa, cases)) => {
                    if json {
                        let doc = analyze_json(&nf, &pa, &cases);
                        println!("{}", serde_json::to_string(&doc).map_err(|e| e.to_string())?);
                    } else {
                        print!("{}", analyze_text(&nf, &pa, &cases));
                    }
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(3)
                }
            }
        }
        Command::Batch { corpus, search, out, stats: stats_path, jobs, no_timing } => {
            let text = fs::read_to_string(&corpus).map_err(|e| format!("{}: {e}", corpus.display()))?;
            let records = read_corpus(&text)?;
            let cfg = search.config();
            cfg.validate().map_err(|e| e.to_string())?;
            let outcomes = run_batch(&records, &cfg, jobs, !no_timing);
            let lines = results_jsonl(&outcomes);
            match &out {
                Some(path) => fs::write(path, &lines).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{lines}"),
            }
            let report = stats(&outcomes);
            let doc = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            match &stats_path {
                Some(path) => fs::write(path, doc + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
                None => eprintln!("{doc}"),
            }
            Ok(if all_solved(&outcomes) { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
