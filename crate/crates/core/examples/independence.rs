//! Each of STAG, SI and DMON fails for some rule that keeps the other two.
//! Prints every clause with its sweep counts or named instance.
//!
//! ```text
//! cargo run --release --example independence
//! ```

use millrank::verify::independence_report;
use millrank::SweepOptions;

fn main() -> millrank::Result<()> {
    let report = independence_report(4, SweepOptions::default())?;
    for c in &report.claims {
        let mark = if c.holds { "ok" } else { "FAILS" };
        print!(
            "{:>16} {:<5} expected {:<9} {mark:<5}",
            c.rule,
            c.axiom.as_str(),
            c.expected.as_str()
        );
        if let Some(s) = &c.sweep {
            print!(
                "  {} violations over {} premises",
                s.violations, s.premises_found
            );
        }
        if let Some(w) = &c.instance {
            print!("  instance {} replays: {}", w.ranking, w.replay());
        }
        println!();
    }
    println!("all clauses hold: {}", report.holds());
    Ok(())
}
