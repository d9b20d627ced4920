//! Sweeps one rule against one axiom over every ranking of three
//! individuals, or over a sample for larger universes.
//!
//! ```text
//! cargo run --release --example sweep
//! cargo run --release --example sweep -- obi cv
//! cargo run --release --example sweep -- les dmon 5 10000
//! ```

use millrank::{sweep, AxiomId, Mode, RuleId, SweepOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rule: RuleId = args.first().map_or("les", String::as_str).parse()?;
    let axiom: AxiomId = args.get(1).map_or("stag", String::as_str).parse()?;
    let n: usize = args.get(2).map_or(Ok(3), |s| s.parse())?;
    let mode = match args.get(3) {
        Some(count) => Mode::Sample {
            count: count.parse()?,
            seed: 0,
        },
        None => Mode::Exhaustive,
    };

    let report = sweep(rule, axiom, n, mode, SweepOptions::default())?;
    println!(
        "{rule} / {axiom} at n = {n}: {} rankings, {} applicable, {} premises, {} violations ({:.2?})",
        report.rankings_checked,
        report.rankings_applicable,
        report.premises_found,
        report.violations,
        report.wall_time
    );
    for w in report.witnesses.iter().take(3) {
        println!("  {}  requires {}", w.ranking, w.required.describe());
    }
    Ok(())
}
