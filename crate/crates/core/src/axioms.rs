//! Executable axiom checkers.
//!
//! A checker scans every premise instance of one axiom in one ranking (for
//! SI and DMON, in every transformed ranking reachable from it), counts the
//! instances, and records the first one whose conclusion fails as a
//! [`Witness`]. Instances are visited in a fixed order, so verdicts are
//! deterministic.
//!
//! Quantifications over `S ⊆ X∖{x}` skip `S = ∅` except in the first half of
//! the relative-difference premise, where `S ∪ {x} = {x}` is a coalition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::model::{
    all_coalitions, intersection, union, Coalition, CoalitionalRanking, Individual, Selection,
};
use crate::solutions::RuleId;
use crate::transforms::{
    all_slides, apply_slide, enumerate_deteriorations, is_deterioration, SlideMove,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AxiomId {
    Rag,
    Wrag,
    Rdf,
    Rjad,
    Tag,
    Stag,
    Tdf,
    Tjad,
    Cv,
    Si,
    Dmon,
}

impl AxiomId {
    pub const ALL: [AxiomId; 11] = [
        AxiomId::Rag,
        AxiomId::Wrag,
        AxiomId::Rdf,
        AxiomId::Rjad,
        AxiomId::Tag,
        AxiomId::Stag,
        AxiomId::Tdf,
        AxiomId::Tjad,
        AxiomId::Cv,
        AxiomId::Si,
        AxiomId::Dmon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Rag => "RAG",
            AxiomId::Wrag => "WRAG",
            AxiomId::Rdf => "RDF",
            AxiomId::Rjad => "RJAD",
            AxiomId::Tag => "TAG",
            AxiomId::Stag => "STAG",
            AxiomId::Tdf => "TDF",
            AxiomId::Tjad => "TJAD",
            AxiomId::Cv => "CV",
            AxiomId::Si => "SI",
            AxiomId::Dmon => "DMON",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_uppercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.as_str() == key)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Inapplicable,
    Satisfied,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub premises_checked: u64,
    pub witness: Option<Box<Witness>>,
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }
}

/// The premise instance a witness was found at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Premise {
    /// TAG / STAG: the top class has this nonempty intersection.
    TopAgreement { common: Selection },
    /// TDF: the top class is exactly the coalitions containing `individual`.
    TopDifference { individual: Individual },
    /// TJAD premise for `individual`.
    TopJoint { individual: Individual },
    /// CV: the concomitant set.
    Concomitant { concomitant: Selection },
    /// RAG / WRAG: coalitions above `reference` intersect to `{individual}`.
    RelativeAgreement {
        reference: Coalition,
        individual: Individual,
    },
    RelativeDifference {
        reference: Coalition,
        individual: Individual,
    },
    RelativeJoint {
        reference: Coalition,
        individual: Individual,
    },
    /// SI: a slide balanced for `pair`.
    Slide {
        pair: (Individual, Individual),
        slide: SlideMove,
        transformed: CoalitionalRanking,
    },
    /// DMON: `transformed` is a `subject`-deterioration and `individual ∉ subject`.
    Deterioration {
        individual: Individual,
        subject: Coalition,
        transformed: CoalitionalRanking,
    },
}

/// The conclusion an axiom forces once its premise holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Requirement {
    /// `F(≿) = set`.
    Equals(Selection),
    /// `set ⊆ F(≿)`.
    Includes(Selection),
    /// `F(≿) ∩ pair = F(≿') ∩ pair`.
    SameOnPair(Selection),
    /// `x ∈ F(≿')`.
    Retains(Individual),
}

impl Requirement {
    pub fn describe(&self) -> String {
        match self {
            Requirement::Equals(s) => format!("F = {s}"),
            Requirement::Includes(s) => format!("F ⊇ {s}"),
            Requirement::SameOnPair(p) => format!("F ∩ {p} unchanged"),
            Requirement::Retains(x) => format!("{} stays selected", x + 1),
        }
    }
}

/// A replayable record of one axiom violation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub ranking: CoalitionalRanking,
    pub axiom: AxiomId,
    pub rule: RuleId,
    pub premise: Premise,
    pub required: Requirement,
    /// Rule output on the ranking, then on the transformed ranking if any.
    pub actual: Vec<Selection>,
}

impl Witness {
    /// Re-derives the premise and the rule outputs from the stored data and
    /// reports whether the violation still stands.
    pub fn replay(&self) -> bool {
        let r = &self.ranking;
        let f = self.rule.apply(r);
        if self.actual.first() != Some(&f) {
            return false;
        }
        match (&self.axiom, &self.premise) {
            (AxiomId::Tag | AxiomId::Stag, Premise::TopAgreement { common }) => {
                let top = r.top_intersection();
                let applies = if self.axiom == AxiomId::Stag {
                    !top.is_empty()
                } else {
                    top.len() == 1
                };
                applies && top == *common && f != top
            }
            (AxiomId::Tdf, Premise::TopDifference { individual }) => {
                top_difference_premise(r) == Some(*individual)
                    && f != Selection::singleton(*individual)
            }
            (AxiomId::Tjad, Premise::TopJoint { individual }) => {
                top_joint_premise(r) == Some(*individual) && f != Selection::singleton(*individual)
            }
            (AxiomId::Cv, Premise::Concomitant { concomitant }) => {
                let c = r.concomitant_set();
                !c.is_empty() && c == *concomitant && !c.is_subset(f)
            }
            (
                AxiomId::Rag | AxiomId::Wrag,
                Premise::RelativeAgreement {
                    reference,
                    individual,
                },
            ) => {
                r.contains_coalition(*reference)
                    && relative_agreement_premise(r, *reference) == Some(*individual)
                    && if self.axiom == AxiomId::Rag {
                        f != Selection::singleton(*individual)
                    } else {
                        !f.contains(*individual)
                    }
            }
            (
                AxiomId::Rdf,
                Premise::RelativeDifference {
                    reference,
                    individual,
                },
            ) => {
                r.contains_coalition(*reference)
                    && *individual < r.n()
                    && relative_difference_premise(r, *reference, *individual)
                    && f != Selection::singleton(*individual)
            }
            (
                AxiomId::Rjad,
                Premise::RelativeJoint {
                    reference,
                    individual,
                },
            ) => {
                r.contains_coalition(*reference)
                    && relative_joint_premise(r, *reference) == Some(*individual)
                    && f != Selection::singleton(*individual)
            }
            (
                AxiomId::Si,
                Premise::Slide {
                    pair: (x, y),
                    slide,
                    transformed,
                },
            ) => {
                if x == y
                    || !slide.is_balanced(*x, *y)
                    || apply_slide(r, slide).ok().as_ref() != Some(transformed)
                {
                    return false;
                }
                let f2 = self.rule.apply(transformed);
                let pair = Selection::from_members([*x, *y]);
                let (a, b) = (f.intersect(pair), f2.intersect(pair));
                self.actual.get(1) == Some(&f2) && !a.is_empty() && !b.is_empty() && a != b
            }
            (
                AxiomId::Dmon,
                Premise::Deterioration {
                    individual,
                    subject,
                    transformed,
                },
            ) => {
                if subject.contains(*individual)
                    || !matches!(is_deterioration(r, transformed, *subject), Ok(true))
                {
                    return false;
                }
                let f2 = self.rule.apply(transformed);
                self.actual.get(1) == Some(&f2)
                    && f.contains(*individual)
                    && !f2.contains(*individual)
            }
            _ => false,
        }
    }
}

struct Scan<'a> {
    axiom: AxiomId,
    rule: RuleId,
    ranking: &'a CoalitionalRanking,
    premises: u64,
    witness: Option<Box<Witness>>,
}

impl<'a> Scan<'a> {
    fn new(axiom: AxiomId, rule: RuleId, ranking: &'a CoalitionalRanking) -> Self {
        Self {
            axiom,
            rule,
            ranking,
            premises: 0,
            witness: None,
        }
    }

    /// Records one premise instance whose conclusion is `holds`.
    fn instance(
        &mut self,
        holds: bool,
        evidence: impl FnOnce() -> (Premise, Requirement, Vec<Selection>),
    ) {
        self.premises += 1;
        if !holds && self.witness.is_none() {
            let (premise, required, actual) = evidence();
            self.witness = Some(Box::new(Witness {
                ranking: self.ranking.clone(),
                axiom: self.axiom,
                rule: self.rule,
                premise,
                required,
                actual,
            }));
        }
    }

    fn finish(self) -> Verdict {
        let status = if self.witness.is_some() {
            Status::Violated
        } else if self.premises == 0 {
            Status::Inapplicable
        } else {
            Status::Satisfied
        };
        Verdict {
            status,
            premises_checked: self.premises,
            witness: self.witness,
        }
    }
}

/// Runs the checker for `axiom`.
pub fn check(axiom: AxiomId, r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    match axiom {
        AxiomId::Rag => check_relative_agreement(r, rule, false),
        AxiomId::Wrag => check_relative_agreement(r, rule, true),
        AxiomId::Rdf => check_relative_difference(r, rule),
        AxiomId::Rjad => check_relative_joint(r, rule),
        AxiomId::Tag => check_top_agreement(r, rule, false),
        AxiomId::Stag => check_top_agreement(r, rule, true),
        AxiomId::Tdf => check_top_difference(r, rule),
        AxiomId::Tjad => check_top_joint(r, rule),
        AxiomId::Cv => check_concomitant(r, rule),
        AxiomId::Si => check_slide_independence(r, rule),
        AxiomId::Dmon => check_downward_monotonicity(r, rule),
    }
}

/// TAG (`strong = false`: `⋂Σ1` a singleton) or STAG (`strong = true`:
/// `⋂Σ1` nonempty); either requires `F = ⋂Σ1`.
pub fn check_top_agreement(r: &CoalitionalRanking, rule: RuleId, strong: bool) -> Verdict {
    let axiom = if strong { AxiomId::Stag } else { AxiomId::Tag };
    let mut scan = Scan::new(axiom, rule, r);
    let common = r.top_intersection();
    let applies = if strong {
        !common.is_empty()
    } else {
        common.len() == 1
    };
    if applies {
        let f = rule.apply(r);
        scan.instance(f == common, || {
            (
                Premise::TopAgreement { common },
                Requirement::Equals(common),
                vec![f],
            )
        });
    }
    scan.finish()
}

/// The individual `x` with `Σ1 = 𝔛[x]`, if any.
pub fn top_difference_premise(r: &CoalitionalRanking) -> Option<Individual> {
    let top = r.top_class();
    let size = 1usize << (r.n() - 1);
    if top.len() != size {
        return None;
    }
    let x = r.top_intersection().single()?;
    // |Σ1| = |𝔛[x]| and every member contains x, so Σ1 = 𝔛[x].
    Some(x)
}

pub fn check_top_difference(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Tdf, rule, r);
    if let Some(x) = top_difference_premise(r) {
        let f = rule.apply(r);
        let want = Selection::singleton(x);
        scan.instance(f == want, || {
            (
                Premise::TopDifference { individual: x },
                Requirement::Equals(want),
                vec![f],
            )
        });
    }
    scan.finish()
}

/// `⋂Σ1 = {x}`, the coalitions below the top class have empty intersection,
/// and none of them contains `x`.
pub fn top_joint_premise(r: &CoalitionalRanking) -> Option<Individual> {
    let x = r.top_intersection().single()?;
    let below = r.classes()[1..].iter().flatten().copied();
    if !intersection(r.n(), below.clone()).is_empty() {
        return None;
    }
    if union(below).contains(x) {
        return None;
    }
    Some(x)
}

pub fn check_top_joint(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Tjad, rule, r);
    if let Some(x) = top_joint_premise(r) {
        let f = rule.apply(r);
        let want = Selection::singleton(x);
        scan.instance(f == want, || {
            (
                Premise::TopJoint { individual: x },
                Requirement::Equals(want),
                vec![f],
            )
        });
    }
    scan.finish()
}

/// CV: each member of a nonempty concomitant set is one premise instance.
pub fn check_concomitant(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Cv, rule, r);
    let concomitant = r.concomitant_set();
    if !concomitant.is_empty() {
        let f = rule.apply(r);
        for x in concomitant.members() {
            scan.instance(f.contains(x), || {
                (
                    Premise::Concomitant { concomitant },
                    Requirement::Includes(concomitant),
                    vec![f],
                )
            });
        }
    }
    scan.finish()
}

/// The singleton `{x}` that the coalitions strictly above `reference`
/// intersect to. An empty family never qualifies.
pub fn relative_agreement_premise(
    r: &CoalitionalRanking,
    reference: Coalition,
) -> Option<Individual> {
    let k0 = r.class_index(reference);
    if k0 == 0 {
        return None;
    }
    intersection(r.n(), r.classes()[..k0].iter().flatten().copied()).single()
}

/// RAG (`weak = false`, requires `F = {x}`) or WRAG (`weak = true`, requires
/// `x ∈ F`), one instance per qualifying reference coalition.
pub fn check_relative_agreement(r: &CoalitionalRanking, rule: RuleId, weak: bool) -> Verdict {
    let axiom = if weak { AxiomId::Wrag } else { AxiomId::Rag };
    let mut scan = Scan::new(axiom, rule, r);
    let f = rule.apply(r);
    for reference in all_coalitions(r.n()) {
        if let Some(x) = relative_agreement_premise(r, reference) {
            let want = Selection::singleton(x);
            let (holds, required) = if weak {
                (f.contains(x), Requirement::Includes(want))
            } else {
                (f == want, Requirement::Equals(want))
            };
            scan.instance(holds, || {
                (
                    Premise::RelativeAgreement {
                        reference,
                        individual: x,
                    },
                    required,
                    vec![f],
                )
            });
        }
    }
    scan.finish()
}

/// `S ∪ {x} ≻ S0` for every `S ⊆ X∖{x}` including `∅`, and `S0 ≿ S` for
/// every nonempty `S ⊆ X∖{x}`.
pub fn relative_difference_premise(
    r: &CoalitionalRanking,
    reference: Coalition,
    x: Individual,
) -> bool {
    let bit = 1u32 << x;
    let k0 = r.class_index(reference);
    for s in 0..(1u32 << r.n()) {
        if s & bit != 0 {
            continue;
        }
        if r.class_of_mask(s | bit) >= k0 {
            return false;
        }
        if s != 0 && k0 > r.class_of_mask(s) {
            return false;
        }
    }
    true
}

pub fn check_relative_difference(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Rdf, rule, r);
    let f = rule.apply(r);
    for reference in all_coalitions(r.n()) {
        for x in 0..r.n() {
            if relative_difference_premise(r, reference, x) {
                let want = Selection::singleton(x);
                scan.instance(f == want, || {
                    (
                        Premise::RelativeDifference {
                            reference,
                            individual: x,
                        },
                        Requirement::Equals(want),
                        vec![f],
                    )
                });
            }
        }
    }
    scan.finish()
}

/// Positives (`S ≻ S0`) intersect to `{x}`, negatives (`S0 ≿ S`) have empty
/// intersection, and no negative contains `x`.
pub fn relative_joint_premise(r: &CoalitionalRanking, reference: Coalition) -> Option<Individual> {
    let k0 = r.class_index(reference);
    if k0 == 0 {
        return None;
    }
    let positives = r.classes()[..k0].iter().flatten().copied();
    let negatives = r.classes()[k0..].iter().flatten().copied();
    let x = intersection(r.n(), positives).single()?;
    if !intersection(r.n(), negatives.clone()).is_empty() || union(negatives).contains(x) {
        return None;
    }
    Some(x)
}

pub fn check_relative_joint(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Rjad, rule, r);
    let f = rule.apply(r);
    for reference in all_coalitions(r.n()) {
        if let Some(x) = relative_joint_premise(r, reference) {
            let want = Selection::singleton(x);
            scan.instance(f == want, || {
                (
                    Premise::RelativeJoint {
                        reference,
                        individual: x,
                    },
                    Requirement::Equals(want),
                    vec![f],
                )
            });
        }
    }
    scan.finish()
}

/// SI over every unordered pair and every slide balanced for it. An instance
/// counts only when both rule outputs meet the pair.
pub fn check_slide_independence(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Si, rule, r);
    let n = r.n();
    let f = rule.apply(r);
    let pairs: Vec<(Individual, Individual)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !f.intersect(Selection::from_members([x, y])).is_empty())
        .collect();
    if pairs.is_empty() {
        return scan.finish();
    }
    for slide in all_slides(r) {
        let mut transformed: Option<(CoalitionalRanking, Selection)> = None;
        for &(x, y) in &pairs {
            if !slide.is_balanced(x, y) {
                continue;
            }
            let (r2, f2) = transformed.get_or_insert_with(|| {
                let r2 = apply_slide(r, &slide).expect("enumerated slides are valid");
                let f2 = rule.apply(&r2);
                (r2, f2)
            });
            let pair = Selection::from_members([x, y]);
            let (before, after) = (f.intersect(pair), f2.intersect(pair));
            if after.is_empty() {
                continue;
            }
            let f2 = *f2;
            scan.instance(before == after, || {
                (
                    Premise::Slide {
                        pair: (x, y),
                        slide: slide.clone(),
                        transformed: r2.clone(),
                    },
                    Requirement::SameOnPair(pair),
                    vec![f, f2],
                )
            });
        }
    }
    scan.finish()
}

/// DMON over every selected `x`, every coalition `S ∌ x`, and every
/// `S`-deterioration (the identity included).
pub fn check_downward_monotonicity(r: &CoalitionalRanking, rule: RuleId) -> Verdict {
    let mut scan = Scan::new(AxiomId::Dmon, rule, r);
    let f = rule.apply(r);
    for subject in all_coalitions(r.n()) {
        let kept = Selection::from_mask(f.mask() & !subject.mask());
        if kept.is_empty() {
            continue;
        }
        for r2 in enumerate_deteriorations(r, subject).expect("subject is in the universe") {
            let f2 = rule.apply(&r2);
            for x in kept.members() {
                scan.instance(f2.contains(x), || {
                    (
                        Premise::Deterioration {
                            individual: x,
                            subject,
                            transformed: r2.clone(),
                        },
                        Requirement::Retains(x),
                        vec![f, f2],
                    )
                });
            }
        }
    }
    scan.finish()
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

    fn sel(digits: &str) -> Selection {
        c(digits).as_selection()
    }

    fn assert_replays(v: &Verdict) {
        let w = v
            .witness
            .as_ref()
            .expect("violated verdicts carry a witness");
        assert!(w.replay(), "witness does not replay: {w:?}");
    }

    #[test]
    fn top_agreement_examples() {
        let r = rk(3, "12 ≻ 1 ≻ rest");
        let v = check_top_agreement(&r, RuleId::Les, true);
        assert_eq!(v.status, Status::Violated);
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.required, Requirement::Equals(sel("12")));
        assert_eq!(w.actual, vec![sel("1")]);
        assert_replays(&v);

        assert_eq!(
            check_top_agreement(&r, RuleId::Les, false).status,
            Status::Inapplicable
        );

        let tie = rk(3, "rest");
        for rule in RuleId::ALL {
            for strong in [false, true] {
                let v = check_top_agreement(&tie, rule, strong);
                assert_eq!(v.status, Status::Inapplicable);
                assert_eq!(v.premises_checked, 0);
            }
        }
    }

    #[test]
    fn top_difference_examples() {
        let r = rk(3, "1 12 13 123 ≻ rest");
        assert_eq!(
            check_top_difference(&r, RuleId::Plurality).status,
            Status::Satisfied
        );
        for rule in RuleId::ALL {
            assert_eq!(
                check_top_difference(&rk(3, "123 12 13 ≻ rest"), rule).status,
                Status::Inapplicable
            );
            assert_eq!(
                check_top_difference(&rk(3, "rest"), rule).status,
                Status::Inapplicable
            );
        }
    }

    #[test]
    fn top_joint_examples() {
        let r = rk(3, "1 12 13 123 ≻ rest");
        assert_eq!(check_top_joint(&r, RuleId::Obi).status, Status::Satisfied);
        assert_eq!(
            check_top_joint(&rk(3, "123 12 13 ≻ rest"), RuleId::Obi).status,
            Status::Inapplicable
        );
        assert_eq!(
            check_top_joint(&rk(3, "rest"), RuleId::Obi).status,
            Status::Inapplicable
        );
    }

    #[test]
    fn concomitant_examples() {
        let r = rk(3, "12 ≻ 2 ≻ 1 13 123 ≻ rest");
        let v = check_concomitant(&r, RuleId::Les);
        assert_eq!(v.status, Status::Violated);
        assert_eq!(v.witness.as_ref().unwrap().actual, vec![sel("2")]);
        assert_replays(&v);
        assert_eq!(
            check_concomitant(&r, RuleId::Plurality).status,
            Status::Satisfied
        );
        assert_eq!(
            check_concomitant(&rk(3, "rest"), RuleId::Plurality).status,
            Status::Inapplicable
        );
    }

    #[test]
    fn relative_agreement_examples() {
        let r = rk(3, "123 12 13 ≻ rest");
        assert_eq!(relative_agreement_premise(&r, c("23")), Some(0));
        assert_eq!(
            check_relative_agreement(&r, RuleId::Plurality, false).status,
            Status::Satisfied
        );
        assert_eq!(
            check_relative_agreement(&rk(3, "rest"), RuleId::Plurality, false).status,
            Status::Inapplicable
        );

        let r = rk(3, "12 123 ≻ 1 ≻ rest");
        assert_eq!(relative_agreement_premise(&r, c("1")), None);
        assert_eq!(relative_agreement_premise(&r, c("2")), Some(0));
        let v = check_relative_agreement(&r, RuleId::ConstX, true);
        assert_eq!(v.status, Status::Satisfied);
        // S0 ranges over the four coalitions in the bottom class.
        assert_eq!(v.premises_checked, 4);
        assert_eq!(
            check_relative_agreement(&r, RuleId::ConstX, false).status,
            Status::Violated
        );
    }

    #[test]
    fn relative_difference_examples() {
        let r = rk(3, "12 123 ≻ 1 13 ≻ 2 23 ≻ 3");
        assert!(relative_difference_premise(&r, c("2"), 0));
        // Plurality selects {1,2} here, so RDF is violated with {1} expected.
        let v = check_relative_difference(&r, RuleId::Plurality);
        assert_eq!(v.status, Status::Violated);
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.required, Requirement::Equals(sel("1")));
        assert_eq!(w.actual, vec![sel("12")]);
        assert_replays(&v);

        for reference in all_coalitions(3) {
            for x in 0..3 {
                if reference.contains(x) {
                    assert!(!relative_difference_premise(&r, reference, x));
                }
            }
        }
        assert_eq!(
            check_relative_difference(&rk(3, "rest"), RuleId::Plurality).status,
            Status::Inapplicable
        );
    }

    #[test]
    fn relative_joint_examples() {
        let r = rk(3, "1 12 13 123 ≻ rest");
        assert_eq!(relative_joint_premise(&r, c("23")), Some(0));
        assert_eq!(
            check_relative_joint(&r, RuleId::Plurality).status,
            Status::Satisfied
        );
        assert_eq!(
            relative_joint_premise(&rk(3, "123 12 13 ≻ rest"), c("23")),
            None
        );
        assert_eq!(
            check_relative_joint(&rk(3, "rest"), RuleId::Plurality).status,
            Status::Inapplicable
        );
    }

    #[test]
    fn slide_independence_examples() {
        let r = rk(4, "1 2 23 14 ≻ rest");
        let v = check_slide_independence(&r, RuleId::SplitPlurality);
        assert_eq!(v.status, Status::Violated);
        assert_replays(&v);
        assert_eq!(
            check_slide_independence(&r, RuleId::Plurality).status,
            Status::Satisfied
        );
        for rule in RuleId::ALL {
            assert_eq!(
                check_slide_independence(&rk(3, "rest"), rule).status,
                Status::Inapplicable
            );
        }
    }

    #[test]
    fn downward_monotonicity_examples() {
        let r = rk(3, "1 2 12 ≻ 3 ≻ rest");
        let v = check_downward_monotonicity(&r, RuleId::FStar);
        assert_eq!(v.status, Status::Violated);
        assert_replays(&v);
        // The specific instance: x = 3, S = {2}, 2 joins the class of 3.
        let r2 = rk(3, "1 12 ≻ 2 3 ≻ rest");
        assert!(is_deterioration(&r, &r2, c("2")).unwrap());
        assert_eq!(RuleId::FStar.apply(&r), sel("123"));
        assert_eq!(RuleId::FStar.apply(&r2), sel("1"));

        let ex2 = rk(3, "123 12 13 ≻ rest");
        let ex5 = rk(3, "123 12 13 ≻ 23 1 3 ≻ 2");
        assert!(RuleId::Plurality.apply(&ex2).contains(0));
        assert!(RuleId::Plurality.apply(&ex5).contains(0));
        assert_eq!(
            check_downward_monotonicity(&ex2, RuleId::Plurality).status,
            Status::Satisfied
        );

        assert_eq!(
            check_downward_monotonicity(&r, RuleId::ConstX).status,
            Status::Satisfied
        );
    }

    #[test]
    fn tampered_witness_does_not_replay() {
        let r = rk(3, "12 ≻ 1 ≻ rest");
        let mut w = *check_top_agreement(&r, RuleId::Les, true).witness.unwrap();
        w.rule = RuleId::Plurality;
        w.actual = vec![RuleId::Plurality.apply(&r)];
        assert!(!w.replay());
    }

    #[test]
    fn axiom_names_parse() {
        assert_eq!("stag".parse::<AxiomId>().unwrap(), AxiomId::Stag);
        assert_eq!("DMON".parse::<AxiomId>().unwrap(), AxiomId::Dmon);
        assert!(matches!(
            "mill".parse::<AxiomId>(),
            Err(Error::UnknownAxiom(_))
        ));
        for a in AxiomId::ALL {
            assert_eq!(a.as_str().parse::<AxiomId>().unwrap(), a);
        }
    }
}
