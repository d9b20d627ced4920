//! Ranking transformations quantified by the slide-independence and downward
//! monotonicity axioms.
//!
//! Class indices are zero-based throughout.

use crate::error::{Error, Result};
use crate::model::{all_coalitions, Coalition, CoalitionalRanking, Individual};

/// Moves `gamma`, a nonempty proper subset of class `from`, into class `to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlideMove {
    pub from: usize,
    pub to: usize,
    pub gamma: Vec<Coalition>,
}

impl SlideMove {
    /// `|Γ[x]| = |Γ[y]|`.
    pub fn is_balanced(&self, x: Individual, y: Individual) -> bool {
        balanced(&self.gamma, x, y)
    }

    /// The move that undoes this one.
    pub fn reversed(&self) -> SlideMove {
        SlideMove {
            from: self.to,
            to: self.from,
            gamma: self.gamma.clone(),
        }
    }
}

fn balanced(gamma: &[Coalition], x: Individual, y: Individual) -> bool {
    gamma.iter().filter(|c| c.contains(x)).count() == gamma.iter().filter(|c| c.contains(y)).count()
}

pub fn apply_slide(r: &CoalitionalRanking, m: &SlideMove) -> Result<CoalitionalRanking> {
    let l = r.num_classes();
    if m.from >= l || m.to >= l {
        return Err(Error::InvalidMove(format!(
            "class index out of range (ranking has {l} classes)"
        )));
    }
    if m.from == m.to {
        return Err(Error::InvalidMove(
            "source and target class coincide".into(),
        ));
    }
    if m.gamma.is_empty() {
        return Err(Error::InvalidMove("moved set is empty".into()));
    }
    let mut moved = m.gamma.clone();
    moved.sort_unstable();
    moved.dedup();
    if moved.len() != m.gamma.len() {
        return Err(Error::InvalidMove(
            "moved set lists a coalition twice".into(),
        ));
    }
    for &c in &moved {
        if !r.contains_coalition(c) || r.class_index(c) != m.from {
            return Err(Error::InvalidMove(format!(
                "{c} is not in class {}",
                m.from
            )));
        }
    }
    if moved.len() == r.class(m.from).len() {
        return Err(Error::InvalidMove(
            "moved set must be a proper subset of its class".into(),
        ));
    }
    Ok(slide_unchecked(r, m.from, m.to, &moved))
}

fn slide_unchecked(
    r: &CoalitionalRanking,
    from: usize,
    to: usize,
    gamma: &[Coalition],
) -> CoalitionalRanking {
    let mut classes = r.classes().to_vec();
    classes[from].retain(|c| !gamma.contains(c));
    classes[to].extend_from_slice(gamma);
    CoalitionalRanking::assemble(r.n(), classes)
}

/// Every nonempty proper-subset slide between two distinct classes, ordered
/// by source class, then target class, then subset index within the source
/// class. No balance filter is applied.
pub fn all_slides(r: &CoalitionalRanking) -> impl Iterator<Item = SlideMove> + '_ {
    let l = r.num_classes();
    (0..l).flat_map(move |from| {
        let class = r.class(from);
        assert!(
            class.len() < 64,
            "class too large for exhaustive slide enumeration"
        );
        let full = (1u64 << class.len()) - 1;
        (0..l).filter(move |&to| to != from).flat_map(move |to| {
            (1..full).map(move |bits| SlideMove {
                from,
                to,
                gamma: (0..class.len())
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| class[i])
                    .collect(),
            })
        })
    })
}

/// Balanced slides for the pair `(x, y)`, each paired with its result.
pub fn enumerate_slides(
    r: &CoalitionalRanking,
    x: Individual,
    y: Individual,
) -> impl Iterator<Item = (SlideMove, CoalitionalRanking)> + '_ {
    all_slides(r)
        .filter(move |m| m.is_balanced(x, y))
        .map(move |m| {
            let result = slide_unchecked(r, m.from, m.to, &m.gamma);
            (m, result)
        })
}

/// Where the deteriorated coalition ends up, in terms of the original class
/// indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    Stay,
    /// Join original class `k`, strictly below the subject's class.
    JoinClass(usize),
    /// Form a singleton class directly after original class `k`.
    NewClassAfter(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeteriorationSpec {
    pub subject: Coalition,
    pub placement: Placement,
}

/// All placements that move `subject` weakly downward, without duplicates.
pub fn deterioration_specs(
    r: &CoalitionalRanking,
    subject: Coalition,
) -> Result<Vec<DeteriorationSpec>> {
    r.check_coalition(subject)?;
    let l = r.num_classes();
    let p = r.class_index(subject);
    let alone = r.class(p).len() == 1;
    let mut specs = vec![DeteriorationSpec {
        subject,
        placement: Placement::Stay,
    }];
    for k in p..l {
        if k > p {
            specs.push(DeteriorationSpec {
                subject,
                placement: Placement::JoinClass(k),
            });
        }
        // A lone subject re-inserted right after its own class is the identity.
        if !(k == p && alone) {
            specs.push(DeteriorationSpec {
                subject,
                placement: Placement::NewClassAfter(k),
            });
        }
    }
    Ok(specs)
}

pub fn apply_deterioration(
    r: &CoalitionalRanking,
    spec: &DeteriorationSpec,
) -> Result<CoalitionalRanking> {
    let s = spec.subject;
    r.check_coalition(s)?;
    let l = r.num_classes();
    let p = r.class_index(s);
    let alone = r.class(p).len() == 1;
    let mut classes = r.classes().to_vec();
    match spec.placement {
        Placement::Stay => return Ok(r.clone()),
        Placement::JoinClass(k) => {
            if k <= p || k >= l {
                return Err(Error::InvalidMove(format!(
                    "cannot join class {k} from class {p}"
                )));
            }
            classes[k].push(s);
        }
        Placement::NewClassAfter(k) => {
            if k < p || k >= l || (k == p && alone) {
                return Err(Error::InvalidMove(format!(
                    "cannot open a class after {k} from class {p}"
                )));
            }
            classes.insert(k + 1, vec![s]);
        }
    }
    classes[p].retain(|&c| c != s);
    if classes[p].is_empty() {
        classes.remove(p);
    }
    Ok(CoalitionalRanking::assemble(r.n(), classes))
}

/// Every `subject`-deterioration of `r`, the identity first.
pub fn enumerate_deteriorations(
    r: &CoalitionalRanking,
    subject: Coalition,
) -> Result<impl Iterator<Item = CoalitionalRanking> + '_> {
    let specs = deterioration_specs(r, subject)?;
    Ok(specs
        .into_iter()
        .map(move |spec| apply_deterioration(r, &spec).expect("generated placements are valid")))
}

/// Recognizes `r2` as a `subject`-deterioration of `r`: both rankings agree
/// on every pair not involving `subject`, and nothing that was weakly above
/// `subject` falls below it.
pub fn is_deterioration(
    r: &CoalitionalRanking,
    r2: &CoalitionalRanking,
    subject: Coalition,
) -> Result<bool> {
    if r.n() != r2.n() {
        return Err(Error::UniverseMismatch {
            left: r.n(),
            right: r2.n(),
        });
    }
    r.check_coalition(subject)?;
    let others: Vec<Coalition> = all_coalitions(r.n()).filter(|&c| c != subject).collect();
    for (i, &t) in others.iter().enumerate() {
        for &u in &others[i + 1..] {
            let before = r.class_index(t).cmp(&r.class_index(u));
            let after = r2.class_index(t).cmp(&r2.class_index(u));
            if before != after {
                return Ok(false);
            }
        }
    }
    let (s1, s2) = (r.class_index(subject), r2.class_index(subject));
    for &t in &others {
        let (t1, t2) = (r.class_index(t), r2.class_index(t));
        if t1 == s1 && t2 > s2 {
            return Ok(false);
        }
        if t1 < s1 && t2 >= s2 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rk(n: usize, s: &str) -> CoalitionalRanking {
        CoalitionalRanking::from_notation(n, s).unwrap()
    }

    fn c(digits: &str) -> Coalition {
        Coalition::from_mask(
            digits
                .chars()
                .fold(0, |m, d| m | 1 << (d.to_digit(10).unwrap() - 1)),
        )
    }

    #[test]
    fn slide_example_from_independence_argument() {
        let r = rk(4, "1 2 23 14 ≻ rest");
        let m = SlideMove {
            from: 0,
            to: 1,
            gamma: vec![c("14"), c("2")],
        };
        assert!(m.is_balanced(0, 1));
        assert_eq!(apply_slide(&r, &m).unwrap(), rk(4, "1 23 ≻ rest"));
    }

    #[test]
    fn slide_of_grand_coalition() {
        let r = rk(3, "123 12 13 ≻ rest");
        let m = SlideMove {
            from: 0,
            to: 1,
            gamma: vec![c("123")],
        };
        assert_eq!(apply_slide(&r, &m).unwrap(), rk(3, "12 13 ≻ 123 23 1 2 3"));
    }

    #[test]
    fn invalid_slides() {
        let r = rk(3, "123 12 13 ≻ rest");
        let whole = SlideMove {
            from: 0,
            to: 1,
            gamma: r.class(0).to_vec(),
        };
        assert!(matches!(
            apply_slide(&r, &whole),
            Err(Error::InvalidMove(_))
        ));
        let same = SlideMove {
            from: 0,
            to: 0,
            gamma: vec![c("12")],
        };
        assert!(matches!(apply_slide(&r, &same), Err(Error::InvalidMove(_))));
        let foreign = SlideMove {
            from: 0,
            to: 1,
            gamma: vec![c("23")],
        };
        assert!(matches!(
            apply_slide(&r, &foreign),
            Err(Error::InvalidMove(_))
        ));
        let empty = SlideMove {
            from: 0,
            to: 1,
            gamma: vec![],
        };
        assert!(matches!(
            apply_slide(&r, &empty),
            Err(Error::InvalidMove(_))
        ));
    }

    #[test]
    fn slide_enumeration_filters_by_balance() {
        assert_eq!(enumerate_slides(&rk(3, "rest"), 0, 1).count(), 0);

        let r = rk(3, "123 12 13 ≻ rest");
        let moves: Vec<SlideMove> = enumerate_slides(&r, 1, 2).map(|(m, _)| m).collect();
        assert!(moves.contains(&SlideMove {
            from: 0,
            to: 1,
            gamma: vec![c("123")]
        }));
        assert!(!moves.contains(&SlideMove {
            from: 0,
            to: 1,
            gamma: vec![c("12")]
        }));

        let r = rk(4, "1 2 23 14 ≻ rest");
        assert!(enumerate_slides(&r, 0, 1)
            .any(|(m, _)| { m.from == 0 && m.to == 1 && m.gamma == vec![c("2"), c("14")] }));
    }

    #[test]
    fn slide_order_is_deterministic() {
        let r = rk(3, "12 ≻ 1 2 ≻ rest");
        let moves: Vec<SlideMove> = all_slides(&r).collect();
        let mut sorted = moves.clone();
        sorted.sort_by_key(|m| (m.from, m.to));
        assert_eq!(
            moves.iter().map(|m| (m.from, m.to)).collect::<Vec<_>>(),
            sorted.iter().map(|m| (m.from, m.to)).collect::<Vec<_>>()
        );
        // A singleton class has no proper subsets to move.
        assert_eq!(moves.len(), 2 * 2 + 14 * 2);
    }

    #[test]
    fn deteriorations_of_bottom_member() {
        let r = rk(3, "123 12 13 ≻ rest");
        let all: Vec<_> = enumerate_deteriorations(&r, c("2")).unwrap().collect();
        assert_eq!(all, vec![r.clone(), rk(3, "123 12 13 ≻ 23 1 3 ≻ 2")]);
    }

    #[test]
    fn deteriorations_of_top_member() {
        let r = rk(3, "1 2 12 ≻ 3 ≻ rest");
        let all: Vec<_> = enumerate_deteriorations(&r, c("2")).unwrap().collect();
        let expected = [
            "1 2 12 ≻ 3 ≻ rest",
            "1 12 ≻ 2 3 ≻ rest",
            "1 12 ≻ 2 ≻ 3 ≻ rest",
            "1 12 ≻ 3 ≻ 2 13 23 123",
            "1 12 ≻ 3 ≻ 2 ≻ 13 23 123",
            "1 12 ≻ 3 ≻ 13 23 123 ≻ 2",
        ];
        assert_eq!(all.len(), 6);
        for text in expected {
            assert!(all.contains(&rk(3, text)), "missing {text}");
        }
        for r2 in &all {
            assert!(is_deterioration(&r, r2, c("2")).unwrap());
        }
    }

    #[test]
    fn lone_bottom_subject_only_stays() {
        let r = rk(3, "123 12 13 ≻ 1 3 23 ≻ 2");
        let all: Vec<_> = enumerate_deteriorations(&r, c("2")).unwrap().collect();
        assert_eq!(all, vec![r]);
    }

    #[test]
    fn recognizer_examples() {
        let r = rk(3, "123 12 13 ≻ rest");
        assert!(is_deterioration(&r, &rk(3, "123 12 13 ≻ 23 1 3 ≻ 2"), c("2")).unwrap());
        assert!(is_deterioration(&r, &r, c("13")).unwrap());
        assert!(!is_deterioration(&r, &rk(3, "2 ≻ 123 12 13 ≻ 23 1 3"), c("2")).unwrap());
        assert!(matches!(
            is_deterioration(&r, &rk(2, "rest"), c("2")),
            Err(Error::UniverseMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn invalid_placements_are_rejected() {
        let r = rk(3, "1 2 12 ≻ 3 ≻ rest");
        let up = DeteriorationSpec {
            subject: c("3"),
            placement: Placement::JoinClass(0),
        };
        assert!(apply_deterioration(&r, &up).is_err());
        let lone = DeteriorationSpec {
            subject: c("3"),
            placement: Placement::NewClassAfter(1),
        };
        assert!(apply_deterioration(&r, &lone).is_err());
    }
}
