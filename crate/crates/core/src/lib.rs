//! Coalitional rankings, the rules that pick the individuals most
//! responsible for an outcome, and executable checks of the axioms those
//! rules are meant to satisfy.
//!
//! ```
//! use millrank::{CoalitionalRanking, RuleId};
//!
//! let r = CoalitionalRanking::from_notation(3, "123 12 13 ≻ rest").unwrap();
//! assert_eq!(RuleId::Plurality.apply(&r).to_string(), "{1}");
//! ```

pub mod axioms;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod model;
pub mod solutions;
pub mod transforms;
pub mod verify;

pub use axioms::{check, AxiomId, Status, Verdict, Witness};
pub use enumeration::{enumerate_rankings, fubini, sample_ranking, Mode, RankingStream};
pub use error::{Error, Result};
pub use model::{Coalition, CoalitionalRanking, Individual, Selection, Universe};
pub use solutions::RuleId;
pub use transforms::{
    apply_slide, enumerate_deteriorations, enumerate_slides, is_deterioration, SlideMove,
};
pub use verify::{sweep, SweepOptions, SweepReport};
