//! Checks every axiom for every rule on one ranking and replays each
//! violation witness.
//!
//! ```text
//! cargo run --example axiom_check
//! cargo run --example axiom_check -- "12 ≻ 2 ≻ 1 13 123 ≻ rest"
//! ```

use millrank::{check, AxiomId, CoalitionalRanking, RuleId, Status};

fn main() -> millrank::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "12 ≻ 1 ≻ rest".to_string());
    let r = CoalitionalRanking::from_notation(3, &text)?;
    println!("ranking: {r}\n");

    print!("{:>16}", "");
    for axiom in AxiomId::ALL {
        print!(" {:>5}", axiom.as_str());
    }
    println!();
    let mut witnesses = Vec::new();
    for rule in RuleId::ALL {
        print!("{rule:>16}");
        for axiom in AxiomId::ALL {
            let v = check(axiom, &r, rule);
            let mark = match v.status {
                Status::Inapplicable => "·",
                Status::Satisfied => "ok",
                Status::Violated => "FAIL",
            };
            print!(" {mark:>5}");
            witnesses.extend(v.witness);
        }
        println!();
    }

    println!();
    for w in &witnesses {
        println!(
            "{} {}: required {}, got {:?}, replays: {}",
            w.rule,
            w.axiom,
            w.required.describe(),
            w.actual.iter().map(ToString::to_string).collect::<Vec<_>>(),
            w.replay()
        );
    }
    Ok(())
}
