//! Coalitional social choice functions.
//!
//! Every rule maps a ranking to a nonempty set of individuals. Argmax sets are
//! returned whole; no tie-breaking is applied anywhere.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::model::{CoalitionalRanking, Individual, Selection};

/// Exact split-plurality score.
pub type SplitScore = Ratio<u64>;

/// Signature shared by all rules.
pub type RuleFn = fn(&CoalitionalRanking) -> Selection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    Plurality,
    Les,
    Obi,
    SplitPlurality,
    FStar,
    ConstX,
}

impl RuleId {
    pub const ALL: [RuleId; 6] = [
        RuleId::Plurality,
        RuleId::Les,
        RuleId::Obi,
        RuleId::SplitPlurality,
        RuleId::FStar,
        RuleId::ConstX,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Plurality => "plurality",
            RuleId::Les => "les",
            RuleId::Obi => "obi",
            RuleId::SplitPlurality => "split_plurality",
            RuleId::FStar => "f_star",
            RuleId::ConstX => "const_x",
        }
    }

    pub fn function(self) -> RuleFn {
        lookup_rule(self)
    }

    pub fn apply(self, ranking: &CoalitionalRanking) -> Selection {
        lookup_rule(self)(ranking)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == key)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

pub fn lookup_rule(id: RuleId) -> RuleFn {
    match id {
        RuleId::Plurality => plurality,
        RuleId::Les => les,
        RuleId::Obi => obi,
        RuleId::SplitPlurality => split_plurality,
        RuleId::FStar => f_star,
        RuleId::ConstX => const_x,
    }
}

/// Individuals attaining the maximum key.
fn argmax_by_key<K: Ord>(n: usize, mut key: impl FnMut(Individual) -> K) -> Selection {
    let keys: Vec<K> = (0..n).map(&mut key).collect();
    let best = keys.iter().max().expect("universe is nonempty");
    Selection::from_members((0..n).filter(|&x| keys[x] == *best))
}

/// Maximizers of the top-class appearance count.
pub fn plurality(r: &CoalitionalRanking) -> Selection {
    argmax_by_key(r.n(), |x| r.top_count(x))
}

/// Lexicographic maximizers of the θ-vector.
pub fn les(r: &CoalitionalRanking) -> Selection {
    argmax_by_key(r.n(), |x| r.theta_unchecked(x))
}

/// Maximizers of the ordinal Banzhaf score.
pub fn obi(r: &CoalitionalRanking) -> Selection {
    argmax_by_key(r.n(), |x| r.banzhaf_unchecked(x).score)
}

/// `Σ 1/|S|` over top-class coalitions `S` containing each individual.
pub fn split_scores(r: &CoalitionalRanking) -> Vec<SplitScore> {
    (0..r.n())
        .map(|x| {
            r.top_class()
                .iter()
                .filter(|c| c.contains(x))
                .map(|c| Ratio::new(1, c.len() as u64))
                .sum()
        })
        .collect()
}

pub fn split_plurality(r: &CoalitionalRanking) -> Selection {
    let scores = split_scores(r);
    argmax_by_key(r.n(), |x| scores[x])
}

/// `⋂Σ1` when nonempty; otherwise plurality when `l·|Σ1|` is even, else everyone.
pub fn f_star(r: &CoalitionalRanking) -> Selection {
    let common = r.top_intersection();
    if !common.is_empty() {
        common
    } else if (r.num_classes() * r.top_class().len()) % 2 == 0 {
        plurality(r)
    } else {
        Selection::full(r.n())
    }
}

pub fn const_x(r: &CoalitionalRanking) -> Selection {
    Selection::full(r.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rk(n: usize, s: &str) -> CoalitionalRanking {
        CoalitionalRanking::from_notation(n, s).unwrap()
    }

    fn sel(members: &[usize]) -> Selection {
        Selection::from_members(members.iter().map(|m| m - 1))
    }

    #[test]
    fn plurality_examples() {
        assert_eq!(plurality(&rk(3, "123 12 13 ≻ rest")), sel(&[1]));
        assert_eq!(plurality(&rk(3, "rest")), sel(&[1, 2, 3]));
        assert_eq!(plurality(&rk(3, "12 ≻ 1 ≻ rest")), sel(&[1, 2]));
    }

    #[test]
    fn les_examples() {
        assert_eq!(les(&rk(3, "12 ≻ 1 ≻ rest")), sel(&[1]));
        assert_eq!(les(&rk(3, "rest")), sel(&[1, 2, 3]));
        let r = rk(3, "12 ≻ 2 ≻ 1 13 123 ≻ rest");
        assert_eq!(r.theta(0).unwrap().0, vec![1, 0, 3, 0]);
        assert_eq!(r.theta(1).unwrap().0, vec![1, 1, 1, 1]);
        assert_eq!(les(&r), sel(&[2]));
    }

    #[test]
    fn obi_examples() {
        assert_eq!(obi(&rk(3, "1 ≻ 2 23 ≻ 12 123 ≻ 3 13")), sel(&[2]));
        assert_eq!(obi(&rk(3, "rest")), sel(&[1, 2, 3]));
        let r = rk(3, "123 12 13 ≻ rest");
        let scores: Vec<i64> = (0..3).map(|x| r.banzhaf(x).unwrap().score).collect();
        assert_eq!(scores, vec![3, 1, 1]);
        assert_eq!(obi(&r), sel(&[1]));
    }

    #[test]
    fn split_plurality_examples() {
        let before = rk(4, "1 2 23 14 ≻ rest");
        assert_eq!(split_scores(&before)[0], Ratio::new(3, 2));
        assert_eq!(split_scores(&before)[1], Ratio::new(3, 2));
        assert_eq!(split_plurality(&before), sel(&[1, 2]));

        let after = rk(4, "1 23 ≻ rest");
        assert_eq!(split_scores(&after)[0], Ratio::new(1, 1));
        assert_eq!(split_scores(&after)[1], Ratio::new(1, 2));
        assert_eq!(split_plurality(&after), sel(&[1]));

        let r = rk(3, "123 12 13 ≻ rest");
        assert_eq!(split_scores(&r)[0], Ratio::new(4, 3));
        assert_eq!(split_scores(&r)[1], Ratio::new(5, 6));
        assert_eq!(split_plurality(&r), sel(&[1]));
        assert_eq!(split_plurality(&rk(3, "rest")), sel(&[1, 2, 3]));
    }

    #[test]
    fn f_star_examples() {
        assert_eq!(f_star(&rk(3, "123 12 13 ≻ rest")), sel(&[1]));
        assert_eq!(f_star(&rk(3, "1 2 12 ≻ 3 ≻ rest")), sel(&[1, 2, 3]));
        assert_eq!(f_star(&rk(3, "1 2 12 ≻ rest")), sel(&[1, 2]));
    }

    #[test]
    fn const_x_examples() {
        for text in ["123 12 13 ≻ rest", "rest", "12 ≻ 1 ≻ rest"] {
            assert_eq!(const_x(&rk(3, text)), sel(&[1, 2, 3]));
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!("plurality".parse::<RuleId>().unwrap(), RuleId::Plurality);
        assert_eq!("f_star".parse::<RuleId>().unwrap(), RuleId::FStar);
        assert_eq!(
            "banzhaf".parse::<RuleId>(),
            Err(Error::UnknownRule("banzhaf".into()))
        );
        let r = rk(3, "12 ≻ 1 ≻ rest");
        for id in RuleId::ALL {
            assert_eq!(lookup_rule(id)(&r), id.apply(&r));
            assert_eq!(id.as_str().parse::<RuleId>().unwrap(), id);
        }
    }
}
