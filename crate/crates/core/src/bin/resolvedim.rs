use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use resolvedim::edgelist::{read_edge_list_file, write_edge_list, write_edge_list_file};
use resolvedim::harness::{
    self, claim_listing, legend, parse_invariants, parse_range, run_sweep, solve_graph,
    sweep_markdown, verify_claims, write_sweep_csv, DimensionReport, MatchStatus, SweepConfig,
};
use resolvedim::{predicted_value, Error, FamilySpec, Invariant, MethodChoice, Solver, SolverOptions, TheoremClaim};

/// Exact resolvability invariants of small graphs
#[derive(Parser, Debug)]
#[command(name = "resolvedim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family instance (e.g. jfg:3,2) as an edge list
    Gen {
        spec: String,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute one invariant of a family instance or an edge-list file
    Dim {
        input: String,
        /// beta, psi, sdim or adjdim
        #[arg(short, long, default_value = "beta")]
        invariant: String,
        /// auto, brute, pruned or mmd
        #[arg(short, long, default_value = "auto")]
        method: String,
        /// Print a CSV record instead of the text report
        #[arg(long)]
        csv: bool,
    },
    /// Solve a parameter grid and compare against the closed forms
    Sweep {
        /// jfg, cp (order of Z_n), cocktail, cayley-d2n, cycle or complete
        #[arg(long)]
        family: String,
        /// First parameter: N, A..B or A..B:STEP
        #[arg(long)]
        n: String,
        /// Second parameter (jfg only)
        #[arg(long, default_value = "2")]
        m: String,
        #[arg(long, default_value = "beta,psi,sdim,adjdim")]
        invariants: String,
        #[arg(long, default_value = "auto")]
        method: String,
        /// CSV output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print a markdown table to stdout
        #[arg(long)]
        markdown: bool,
    },
    /// Check the closed forms, witnesses, diameters and isomorphisms
    Verify {
        /// Only this claim id (see --list)
        #[arg(long)]
        claim: Option<String>,
        /// Print the claim registry and exit
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(harness::exit_code(&e) as u8)
        }
    }
}

fn solver() -> Result<Solver, Error> {
    Ok(Solver::new(SolverOptions::from_env()?))
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen { spec, out } => {
            let g = spec.parse::<FamilySpec>()?.build()?;
            match out {
                Some(path) => write_edge_list_file(&g, path)?,
                None => write_edge_list(&g, io::stdout().lock())?,
            }
            Ok(0)
        }
        Command::Dim { input, invariant, method, csv } => {
            let invariant: Invariant = invariant.parse()?;
            let method: MethodChoice = method.parse()?;
            let (g, closed_form) = match input.parse::<FamilySpec>() {
                Ok(spec) => (spec.build()?, predicted_value(&spec, invariant)),
                Err(e) if !Path::new(&input).exists() => return Err(e),
                Err(_) => (read_edge_list_file(&input)?, None),
            };
            let result = solve_graph(&g, invariant, method, &solver()?)?;
            let report = DimensionReport::new(input, &g, result, closed_form);
            if csv {
                report.write_csv(io::stdout().lock())?;
            } else {
                println!("{report}");
                println!("legend\n{}", legend());
            }
            Ok(0)
        }
        Command::Sweep { family, n, m, invariants, method, out, markdown } => {
            let config = SweepConfig {
                family: family.parse()?,
                n: parse_range(&n)?,
                m: parse_range(&m)?,
                invariants: parse_invariants(&invariants)?,
                method: method.parse()?,
            };
            let rows = run_sweep(&config, &solver()?);
            write_sweep_csv(&rows, open_out(out.as_deref())?)?;
            if markdown {
                print!("{}", sweep_markdown(&rows));
            }
            let failed = rows.iter().filter(|r| r.status == MatchStatus::Fail).count();
            if failed > 0 {
                eprintln!("{failed} of {} rows FAIL", rows.len());
                return Ok(harness::EXIT_VERIFY_FAILED as u8);
            }
            Ok(0)
        }
        Command::Verify { claim, list } => {
            if list {
                println!("{}", claim_listing());
                return Ok(0);
            }
            let claims = match claim {
                Some(id) => vec![id.parse::<TheoremClaim>()?],
                None => TheoremClaim::ALL.to_vec(),
            };
            let outcomes = verify_claims(&claims, &solver()?);
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            println!("{} checks, {} passed, {} failed", outcomes.len(), outcomes.len() - failed, failed);
            Ok(if failed > 0 { harness::EXIT_VERIFY_FAILED as u8 } else { 0 })
        }
    }
}
