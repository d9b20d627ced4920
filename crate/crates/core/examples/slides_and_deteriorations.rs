//! The two ranking transformations behind slide independence and downward
//! monotonicity, shown on a small ranking.
//!
//! ```text
//! cargo run --example slides_and_deteriorations
//! ```

use millrank::{
    enumerate_deteriorations, enumerate_slides, is_deterioration, Coalition, CoalitionalRanking,
    RuleId,
};

fn main() -> millrank::Result<()> {
    let r = CoalitionalRanking::from_notation(3, "1 ≻ 2 ≻ 12 ≻ 3 ≻ 13 23 123")?;
    println!("ranking: {r}\n");

    println!("balanced slides for the pair (1, 2):");
    for (m, moved) in enumerate_slides(&r, 0, 1) {
        let gamma: Vec<String> = m.gamma.iter().map(ToString::to_string).collect();
        println!(
            "  move {{{}}} from class {} to class {}: {moved}   f_star {} -> {}",
            gamma.join(", "),
            m.from + 1,
            m.to + 1,
            RuleId::FStar.apply(&r),
            RuleId::FStar.apply(&moved)
        );
    }

    let subject = Coalition::from_mask(0b010);
    println!("\ndeteriorations of {subject}:");
    for moved in enumerate_deteriorations(&r, subject)? {
        assert!(is_deterioration(&r, &moved, subject)?);
        println!("  {moved}   plurality {}", RuleId::Plurality.apply(&moved));
    }
    Ok(())
}
