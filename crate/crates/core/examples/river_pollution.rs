//! Three firms discharge into a river. Any coalition containing firm 1 and
//! at least one other firm pushes pollution over the threshold. Every rule
//! is asked which firm is most responsible.
//!
//! ```text
//! cargo run --example river_pollution
//! ```

use millrank::{CoalitionalRanking, RuleId, Universe};

fn main() -> millrank::Result<()> {
    let firms = Universe::with_names(["upstream", "mill", "tannery"])?;
    let r = CoalitionalRanking::from_notation(3, "123 12 13 ≻ rest")?;
    println!("ranking: {r}");

    for x in 0..3 {
        let theta = r.theta(x)?;
        let banzhaf = r.banzhaf(x)?;
        println!(
            "  {:<9} top-class count {}  θ {:?}  ordinal Banzhaf {}",
            firms.name(x),
            r.top_count(x),
            theta.counts(),
            banzhaf.score
        );
    }
    println!(
        "concomitant set: {:?}",
        firms.format_selection(r.concomitant_set())
    );

    for rule in RuleId::ALL {
        println!("{rule:>16}: {:?}", firms.format_selection(rule.apply(&r)));
    }
    Ok(())
}
