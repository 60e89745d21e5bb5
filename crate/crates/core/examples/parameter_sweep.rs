//! Sweeps a jellyfish grid and writes the CSV to stdout.

use resolvedim::harness::{run_sweep, sweep_markdown, write_sweep_csv, SweepConfig, SweepFamily};
use resolvedim::{Invariant, MethodChoice, Solver};

fn main() -> resolvedim::Result<()> {
    let config = SweepConfig {
        family: SweepFamily::Jellyfish,
        n: vec![3, 4, 5],
        m: vec![1, 2, 3],
        invariants: Invariant::ALL.to_vec(),
        method: MethodChoice::Auto,
    };
    let rows = run_sweep(&config, &Solver::default());
    write_sweep_csv(&rows, std::io::stdout().lock())?;
    println!();
    print!("{}", sweep_markdown(&rows[..4]));
    Ok(())
}
