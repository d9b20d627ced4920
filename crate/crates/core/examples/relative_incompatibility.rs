//! RDF and CV cannot hold together: on the ranking below, RDF forces the
//! selection {1} while 2 belongs to the concomitant set. Also checks that
//! every RDF and RJAD premise is an RAG premise with the same conclusion.
//!
//! ```text
//! cargo run --release --example relative_incompatibility
//! ```

use millrank::axioms::relative_difference_premise;
use millrank::verify::{incompatibility_ranking, prop1_report};
use millrank::{Coalition, Mode, SweepOptions};

fn main() -> millrank::Result<()> {
    let r = incompatibility_ranking(3, 0, 1);
    println!("ranking: {r}");
    println!(
        "RDF premise with reference {{2}} for 1: {}",
        relative_difference_premise(&r, Coalition::singleton(1), 0)
    );
    println!("concomitant set: {}", r.concomitant_set());

    let report = prop1_report(3, Mode::Exhaustive, SweepOptions::default())?;
    for c in &report.constructions {
        println!("  ({}, {}) certified: {}", c.x + 1, c.y + 1, c.certified);
    }
    println!(
        "lemma: {} counterexamples over {} RDF and {} RJAD premises",
        report.lemma_violations, report.rdf_premises, report.rjad_premises
    );
    println!(
        "const_x: WRAG {} violations, CV {} violations",
        report.const_x_wrag.violations, report.const_x_cv.violations
    );
    Ok(())
}
