//! Plurality, les and obi against the top-class versions of Mill's canons
//! and concomitant variation, exhaustively at three individuals.
//!
//! ```text
//! cargo run --release --example canon_matrix
//! ```

use millrank::verify::{prop3_matrix, MATRIX_AXIOMS};
use millrank::{Mode, SweepOptions};

fn main() -> millrank::Result<()> {
    let m = prop3_matrix(3, Mode::Exhaustive, SweepOptions::default())?;
    print!("{:>10}", "");
    for axiom in MATRIX_AXIOMS {
        print!(" {:>10}", axiom.as_str());
    }
    println!();
    for &rule in &m.rules {
        print!("{rule:>10}");
        for axiom in MATRIX_AXIOMS {
            let cell = m.cell(rule, axiom).expect("cell");
            let flag = if cell.discrepancy { "*" } else { "" };
            print!(" {:>10}", format!("{}{flag}", cell.observed.as_str()));
        }
        println!();
    }
    for cell in m.cells.iter().filter(|c| c.discrepancy) {
        println!(
            "* {} / {}: observed {}, stated {}",
            cell.sweep.rule,
            cell.sweep.axiom,
            cell.observed.as_str(),
            cell.expected_statement.as_str()
        );
    }
    Ok(())
}
