//! Counts coalitional rankings with the ordered Bell numbers, streams the
//! thirteen rankings over two individuals, and draws uniform samples over
//! five.
//!
//! ```text
//! cargo run --example enumerate_rankings
//! ```

use millrank::enumeration::top_class_choices;
use millrank::{enumerate_rankings, fubini, Mode, RankingStream};

fn main() -> millrank::Result<()> {
    for n in 1..=6 {
        println!("n = {n}: {} rankings", fubini((1 << n) - 1));
    }

    println!("\nall rankings over two individuals:");
    for (i, r) in enumerate_rankings(2)?.enumerate() {
        println!("  {:>2}  {r}", i + 1);
    }

    let blocks = top_class_choices(3)?.len();
    let total = enumerate_rankings(3)?.count();
    println!("\nn = 3: {total} rankings in {blocks} top-class blocks");

    println!("\nuniform samples over five individuals (seed 1):");
    for r in RankingStream::new(5, Mode::Sample { count: 3, seed: 1 })? {
        println!(
            "  {} classes, top class of {}",
            r.num_classes(),
            r.top_class().len()
        );
    }
    Ok(())
}
