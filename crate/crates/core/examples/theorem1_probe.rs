//! Plurality is the only rule here satisfying STAG, SI and DMON together.
//! Plurality passes all three sweeps; every other rule differs from it
//! somewhere and the probe finds the axiom it breaks.
//!
//! ```text
//! cargo run --release --example theorem1_probe
//! ```

use millrank::verify::theorem1_probe;
use millrank::{Mode, RuleId, SweepOptions};

fn main() -> millrank::Result<()> {
    for rule in RuleId::ALL {
        let probe = theorem1_probe(rule, 3, Mode::Exhaustive, SweepOptions::default())?;
        if probe.equivalent() {
            let violations: u64 = probe.sweeps.iter().map(|s| s.violations).sum();
            println!(
                "{rule:>16}: equals plurality on all {} rankings, {violations} violations",
                probe.rankings_checked
            );
            continue;
        }
        let diff = probe.difference.as_ref().expect("a difference");
        print!(
            "{rule:>16}: differs on {} rankings, first {} ({} vs {})",
            probe.differences, diff.ranking, diff.rule_output, diff.plurality_output
        );
        match &probe.witness {
            Some(w) => println!("; violates {} on {}", w.axiom, w.ranking),
            None => println!("; no witness found"),
        }
    }
    Ok(())
}
