//! Verification campaigns: axiom sweeps over all (or sampled) rankings and
//! the reports built from them.
//!
//! Work is split by top class (exhaustive mode) or by index block (sampled
//! mode) and folded on a rayon pool. Partial tallies merge by summing counts
//! and keeping the canonically smallest witnesses, so reports do not depend
//! on the number of workers.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::axioms::{
    check, check_top_agreement, relative_agreement_premise, relative_difference_premise,
    relative_joint_premise, AxiomId, Premise, Requirement, Status, Verdict, Witness,
};
use crate::enumeration::{
    sample_rng, top_class_choices, Mode, RankingStream, Sampler, MAX_EXHAUSTIVE,
};
use crate::error::{Error, Result};
use crate::model::{
    all_coalitions, coalition_count, Coalition, CoalitionalRanking, Individual, Selection,
};
use crate::solutions::RuleId;
use crate::transforms::{apply_slide, is_deterioration, SlideMove};

const SAMPLE_BLOCK: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Witnesses kept per report; counts are always exact.
    pub witness_cap: usize,
    /// Worker cap; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            witness_cap: 10,
            jobs: None,
        }
    }
}

fn in_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Folds every ranking of the stream described by `n` and `mode`. `merge`
/// always receives the earlier part of the stream on the left.
pub fn fold_rankings<T, I, F, M>(
    n: usize,
    mode: Mode,
    jobs: Option<usize>,
    identity: I,
    fold: F,
    merge: M,
) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, CoalitionalRanking) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    match mode {
        Mode::Exhaustive => {
            let tops = top_class_choices(n)?;
            Ok(in_pool(jobs, || {
                tops.into_par_iter()
                    .map(|top| {
                        RankingStream::with_top_class(n, &top)
                            .expect("top class choices are valid")
                            .fold(identity(), &fold)
                    })
                    .reduce(&identity, &merge)
            }))
        }
        Mode::Sample { count, seed } => {
            RankingStream::new(n, mode)?;
            let blocks = count.div_ceil(SAMPLE_BLOCK);
            Ok(in_pool(jobs, || {
                (0..blocks)
                    .into_par_iter()
                    .map(|b| {
                        let sampler = Sampler::new(coalition_count(n));
                        let end = ((b + 1) * SAMPLE_BLOCK).min(count);
                        (b * SAMPLE_BLOCK..end)
                            .map(|i| sampler.sample(n, &mut sample_rng(seed, i)))
                            .fold(identity(), &fold)
                    })
                    .reduce(&identity, &merge)
            }))
        }
    }
}

/// Aggregated outcome of one rule × axiom campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub rule: RuleId,
    pub axiom: AxiomId,
    pub n: usize,
    pub mode: Mode,
    pub rankings_checked: u64,
    /// Rankings with at least one premise instance.
    pub rankings_applicable: u64,
    pub premises_found: u64,
    /// Rankings with a violated instance.
    pub violations: u64,
    /// The canonically smallest witnesses, at most `witness_cap`.
    pub witnesses: Vec<Witness>,
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn status(&self) -> Status {
        if self.violations > 0 {
            Status::Violated
        } else if self.premises_found == 0 {
            Status::Inapplicable
        } else {
            Status::Satisfied
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Default)]
struct Tally {
    rankings: u64,
    applicable: u64,
    premises: u64,
    violations: u64,
    witnesses: Vec<Witness>,
}

impl Tally {
    fn add(mut self, v: Verdict, cap: usize) -> Self {
        self.rankings += 1;
        self.premises += v.premises_checked;
        if v.premises_checked > 0 {
            self.applicable += 1;
        }
        if let Some(w) = v.witness {
            self.violations += 1;
            if cap > 0 {
                self.witnesses.push(*w);
                if self.witnesses.len() >= cap.saturating_mul(2).max(64) {
                    self.trim(cap);
                }
            }
        }
        self
    }

    fn merge(mut self, other: Tally, cap: usize) -> Self {
        self.rankings += other.rankings;
        self.applicable += other.applicable;
        self.premises += other.premises;
        self.violations += other.violations;
        self.witnesses.extend(other.witnesses);
        self.trim(cap);
        self
    }

    fn trim(&mut self, cap: usize) {
        self.witnesses.sort_unstable();
        self.witnesses.truncate(cap);
    }
}

/// Checks `axiom` for `rule` on every ranking of the stream.
pub fn sweep(
    rule: RuleId,
    axiom: AxiomId,
    n: usize,
    mode: Mode,
    opts: SweepOptions,
) -> Result<SweepReport> {
    let start = Instant::now();
    let cap = opts.witness_cap;
    let mut tally = fold_rankings(
        n,
        mode,
        opts.jobs,
        Tally::default,
        |t, r| t.add(check(axiom, &r, rule), cap),
        |a, b| a.merge(b, cap),
    )?;
    tally.trim(cap);
    Ok(SweepReport {
        rule,
        axiom,
        n,
        mode,
        rankings_checked: tally.rankings,
        rankings_applicable: tally.applicable,
        premises_found: tally.premises,
        violations: tally.violations,
        witnesses: tally.witnesses,
        wall_time: start.elapsed(),
    })
}

/// The ranking used to show that RDF and CV cannot hold together:
/// coalitions with both `x` and `y`, then with `x` only, then with `y`
/// only, then the rest.
pub fn incompatibility_ranking(n: usize, x: Individual, y: Individual) -> CoalitionalRanking {
    assert!(x != y && x < n && y < n);
    let mut classes = vec![Vec::new(); 4];
    for c in all_coalitions(n) {
        let k = match (c.contains(x), c.contains(y)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        classes[k].push(c);
    }
    classes.retain(|c| !c.is_empty());
    CoalitionalRanking::assemble(n, classes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incompatibility {
    pub x: Individual,
    pub y: Individual,
    pub ranking: CoalitionalRanking,
    /// The RDF premise holds at `S0 = {y}` for `x`.
    pub rdf_premise: bool,
    pub concomitant: Selection,
    /// RDF forces `{x}` while CV forces `y` into the selection.
    pub certified: bool,
}

/// An RDF or RJAD premise not matched by a RAG premise with the same
/// conclusion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LemmaCounterexample {
    pub ranking: CoalitionalRanking,
    pub axiom: AxiomId,
    pub reference: Coalition,
    pub individual: Individual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Report {
    pub n: usize,
    pub mode: Mode,
    pub constructions: Vec<Incompatibility>,
    pub rankings_checked: u64,
    pub rdf_premises: u64,
    pub rjad_premises: u64,
    pub lemma_violations: u64,
    pub lemma_counterexamples: Vec<LemmaCounterexample>,
    pub const_x_wrag: SweepReport,
    pub const_x_cv: SweepReport,
}

impl Prop1Report {
    pub fn holds(&self) -> bool {
        self.constructions.iter().all(|c| c.certified)
            && self.lemma_violations == 0
            && self.const_x_wrag.passed()
            && self.const_x_cv.passed()
    }
}

#[derive(Default)]
struct LemmaTally {
    rankings: u64,
    rdf: u64,
    rjad: u64,
    violations: u64,
    examples: Vec<LemmaCounterexample>,
}

fn lemma_scan(r: &CoalitionalRanking, cap: usize, mut t: LemmaTally) -> LemmaTally {
    t.rankings += 1;
    for reference in all_coalitions(r.n()) {
        let rag = relative_agreement_premise(r, reference);
        let mut found = Vec::new();
        for x in 0..r.n() {
            if relative_difference_premise(r, reference, x) {
                t.rdf += 1;
                if rag != Some(x) {
                    found.push((AxiomId::Rdf, x));
                }
            }
        }
        if let Some(x) = relative_joint_premise(r, reference) {
            t.rjad += 1;
            if rag != Some(x) {
                found.push((AxiomId::Rjad, x));
            }
        }
        for (axiom, individual) in found {
            t.violations += 1;
            if t.examples.len() < cap {
                t.examples.push(LemmaCounterexample {
                    ranking: r.clone(),
                    axiom,
                    reference,
                    individual,
                });
            }
        }
    }
    t
}

/// Certifies the RDF/CV incompatibility construction for every ordered pair,
/// the premise-level inclusion of RDF and RJAD in RAG, and the joint
/// satisfiability of WRAG and CV by `const_x`.
pub fn prop1_report(n: usize, mode: Mode, opts: SweepOptions) -> Result<Prop1Report> {
    if n < 3 {
        return Err(Error::UniverseTooSmall {
            n,
            min: 3,
            what: "the incompatibility construction",
        });
    }
    RankingStream::new(n, mode)?;
    let mut constructions = Vec::new();
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            let ranking = incompatibility_ranking(n, x, y);
            let rdf_premise = relative_difference_premise(&ranking, Coalition::singleton(y), x);
            let concomitant = ranking.concomitant_set();
            constructions.push(Incompatibility {
                x,
                y,
                certified: rdf_premise && concomitant.contains(y),
                ranking,
                rdf_premise,
                concomitant,
            });
        }
    }
    let cap = opts.witness_cap;
    let lemma = fold_rankings(
        n,
        mode,
        opts.jobs,
        LemmaTally::default,
        |t, r| lemma_scan(&r, cap, t),
        |mut a, b| {
            a.rankings += b.rankings;
            a.rdf += b.rdf;
            a.rjad += b.rjad;
            a.violations += b.violations;
            a.examples.extend(b.examples);
            a.examples.sort_unstable();
            a.examples.truncate(cap);
            a
        },
    )?;
    Ok(Prop1Report {
        n,
        mode,
        constructions,
        rankings_checked: lemma.rankings,
        rdf_premises: lemma.rdf,
        rjad_premises: lemma.rjad,
        lemma_violations: lemma.violations,
        lemma_counterexamples: lemma.examples,
        const_x_wrag: sweep(RuleId::ConstX, AxiomId::Wrag, n, mode, opts)?,
        const_x_cv: sweep(RuleId::ConstX, AxiomId::Cv, n, mode, opts)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    Satisfied,
    Violated,
}

impl Expectation {
    fn of(report: &SweepReport) -> Self {
        if report.passed() {
            Expectation::Satisfied
        } else {
            Expectation::Violated
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Satisfied => "satisfied",
            Expectation::Violated => "violated",
        }
    }
}

/// A named ranking checked directly, independent of the witness cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceCheck {
    pub ranking: CoalitionalRanking,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCell {
    pub sweep: SweepReport,
    pub observed: Expectation,
    /// The verdict claimed for this cell.
    pub expected_statement: Expectation,
    /// The verdict implied by the supporting argument, where it differs from the claim.
    pub expected_proof: Option<Expectation>,
    /// The observation disagrees with at least one textual expectation.
    pub discrepancy: bool,
    pub reference: Option<ReferenceCheck>,
}

impl MatrixCell {
    /// The observation matches neither the statement nor the proof.
    pub fn unexplained(&self) -> bool {
        self.observed != self.expected_statement && self.expected_proof != Some(self.observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixReport {
    pub n: usize,
    pub mode: Mode,
    pub rules: Vec<RuleId>,
    pub axioms: Vec<AxiomId>,
    /// Row-major over `rules × axioms`.
    pub cells: Vec<MatrixCell>,
}

impl MatrixReport {
    pub fn cell(&self, rule: RuleId, axiom: AxiomId) -> Option<&MatrixCell> {
        let i = self.rules.iter().position(|&r| r == rule)?;
        let j = self.axioms.iter().position(|&a| a == axiom)?;
        self.cells.get(i * self.axioms.len() + j)
    }

    pub fn discrepancies(&self) -> usize {
        self.cells.iter().filter(|c| c.discrepancy).count()
    }
}

pub const MATRIX_RULES: [RuleId; 3] = [RuleId::Plurality, RuleId::Les, RuleId::Obi];
pub const MATRIX_AXIOMS: [AxiomId; 5] = [
    AxiomId::Stag,
    AxiomId::Tag,
    AxiomId::Tdf,
    AxiomId::Tjad,
    AxiomId::Cv,
];

fn matrix_expectations(rule: RuleId, axiom: AxiomId) -> (Expectation, Option<Expectation>) {
    use Expectation::*;
    match (rule, axiom) {
        (RuleId::Plurality, _) => (Satisfied, None),
        (RuleId::Les, AxiomId::Tag | AxiomId::Tdf | AxiomId::Tjad) => (Satisfied, None),
        (RuleId::Les, _) => (Violated, None),
        (RuleId::Obi, AxiomId::Tdf | AxiomId::Tjad) => (Satisfied, None),
        (RuleId::Obi, AxiomId::Cv) => (Violated, Some(Satisfied)),
        (RuleId::Obi, _) => (Violated, None),
        _ => unreachable!("matrix covers plurality, les and obi"),
    }
}

fn matrix_reference(rule: RuleId, axiom: AxiomId) -> Option<&'static str> {
    match (rule, axiom) {
        (RuleId::Les, AxiomId::Stag) => Some("12 ≻ 1 ≻ rest"),
        (RuleId::Les, AxiomId::Cv) => Some("12 ≻ 2 ≻ 1 13 123 ≻ rest"),
        (RuleId::Obi, AxiomId::Tag) => Some("1 ≻ 2 23 ≻ 12 123 ≻ 3 13"),
        _ => None,
    }
}

/// Fills the {plurality, les, obi} × {STAG, TAG, TDF, TJAD, CV} grid.
pub fn prop3_matrix(n: usize, mode: Mode, opts: SweepOptions) -> Result<MatrixReport> {
    let mut cells = Vec::new();
    for rule in MATRIX_RULES {
        for axiom in MATRIX_AXIOMS {
            let sweep = sweep(rule, axiom, n, mode, opts)?;
            let observed = Expectation::of(&sweep);
            let (expected_statement, expected_proof) = matrix_expectations(rule, axiom);
            let discrepancy =
                observed != expected_statement || expected_proof.is_some_and(|p| p != observed);
            let reference = match matrix_reference(rule, axiom) {
                Some(text) if n == 3 => {
                    let ranking = CoalitionalRanking::from_notation(3, text)?;
                    let verdict = check(axiom, &ranking, rule);
                    Some(ReferenceCheck { ranking, verdict })
                }
                _ => None,
            };
            cells.push(MatrixCell {
                sweep,
                observed,
                expected_statement,
                expected_proof,
                discrepancy,
                reference,
            });
        }
    }
    Ok(MatrixReport {
        n,
        mode,
        rules: MATRIX_RULES.to_vec(),
        axioms: MATRIX_AXIOMS.to_vec(),
        cells,
    })
}

/// One clause of the independence argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceClaim {
    pub rule: RuleId,
    pub axiom: AxiomId,
    pub expected: Expectation,
    pub sweep: Option<SweepReport>,
    /// A specific violating instance, confirmed by replay.
    pub instance: Option<Witness>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub n: usize,
    pub claims: Vec<IndependenceClaim>,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

/// The split-plurality slide instance: `Γ = {14, 2}` leaves the top class
/// of `1 2 23 14 ≻ rest` for the class below.
pub fn split_plurality_instance(n: usize) -> Result<Witness> {
    let ranking = CoalitionalRanking::from_notation(n, "1 2 23 14 ≻ rest")?;
    let slide = SlideMove {
        from: 0,
        to: 1,
        gamma: vec![Coalition::from_mask(0b1001), Coalition::from_mask(0b0010)],
    };
    let transformed = apply_slide(&ranking, &slide)?;
    let rule = RuleId::SplitPlurality;
    Ok(Witness {
        actual: vec![rule.apply(&ranking), rule.apply(&transformed)],
        ranking,
        axiom: AxiomId::Si,
        rule,
        premise: Premise::Slide {
            pair: (0, 1),
            slide,
            transformed,
        },
        required: Requirement::SameOnPair(Selection::from_members([0, 1])),
    })
}

/// The `f_star` deterioration instance: in `1 2 12 ≻ 3 ≻ rest`, coalition
/// `{2}` drops into the class of `{3}`, and 3 is no longer selected.
pub fn f_star_instance() -> Witness {
    let ranking = CoalitionalRanking::from_notation(3, "1 2 12 ≻ 3 ≻ rest").expect("fixture");
    let transformed = CoalitionalRanking::from_notation(3, "1 12 ≻ 2 3 ≻ rest").expect("fixture");
    let rule = RuleId::FStar;
    debug_assert!(matches!(
        is_deterioration(&ranking, &transformed, Coalition::singleton(1)),
        Ok(true)
    ));
    Witness {
        actual: vec![rule.apply(&ranking), rule.apply(&transformed)],
        ranking,
        axiom: AxiomId::Dmon,
        rule,
        premise: Premise::Deterioration {
            individual: 2,
            subject: Coalition::singleton(1),
            transformed,
        },
        required: Requirement::Retains(2),
    }
}

fn les_instance() -> Witness {
    let ranking = CoalitionalRanking::from_notation(3, "12 ≻ 1 ≻ rest").expect("fixture");
    *check_top_agreement(&ranking, RuleId::Les, true)
        .witness
        .expect("les violates STAG on this ranking")
}

/// Shows that each of STAG, SI and DMON is independent of the other two:
/// exhaustive sweeps at three individuals plus one named instance per
/// failing clause. The split-plurality instance is built over `n ≥ 4`
/// individuals.
pub fn independence_report(n: usize, opts: SweepOptions) -> Result<IndependenceReport> {
    use Expectation::*;
    if n < 4 {
        return Err(Error::UniverseTooSmall {
            n,
            min: 4,
            what: "the split-plurality slide instance",
        });
    }
    let plan: [(RuleId, AxiomId, Expectation); 9] = [
        (RuleId::FStar, AxiomId::Stag, Satisfied),
        (RuleId::FStar, AxiomId::Si, Satisfied),
        (RuleId::FStar, AxiomId::Dmon, Violated),
        (RuleId::SplitPlurality, AxiomId::Stag, Satisfied),
        (RuleId::SplitPlurality, AxiomId::Dmon, Satisfied),
        (RuleId::SplitPlurality, AxiomId::Si, Violated),
        (RuleId::Les, AxiomId::Si, Satisfied),
        (RuleId::Les, AxiomId::Dmon, Satisfied),
        (RuleId::Les, AxiomId::Stag, Violated),
    ];
    let mut claims = Vec::new();
    for (rule, axiom, expected) in plan {
        let (sweep, instance) = match (rule, axiom) {
            (RuleId::FStar, AxiomId::Dmon) => (
                Some(sweep(rule, axiom, 3, Mode::Exhaustive, opts)?),
                Some(f_star_instance()),
            ),
            (RuleId::SplitPlurality, AxiomId::Si) => (None, Some(split_plurality_instance(n)?)),
            (RuleId::Les, AxiomId::Stag) => (None, Some(les_instance())),
            _ => (Some(sweep(rule, axiom, 3, Mode::Exhaustive, opts)?), None),
        };
        let holds = match expected {
            Satisfied => sweep.as_ref().is_some_and(SweepReport::passed),
            Violated => {
                instance.as_ref().is_some_and(Witness::replay)
                    && sweep.as_ref().is_none_or(|s| !s.passed())
            }
        };
        claims.push(IndependenceClaim {
            rule,
            axiom,
            expected,
            sweep,
            instance,
            holds,
        });
    }
    Ok(IndependenceReport { n, claims })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub ranking: CoalitionalRanking,
    pub rule_output: Selection,
    pub plurality_output: Selection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub rule: RuleId,
    pub n: usize,
    pub mode: Mode,
    pub rankings_checked: u64,
    pub differences: u64,
    /// The first ranking, in stream order, where the rule and plurality differ.
    pub difference: Option<Difference>,
    /// A STAG, SI or DMON violation by the rule.
    pub witness: Option<Witness>,
    /// Sweeps of STAG, SI and DMON, run when no difference was found.
    pub sweeps: Vec<SweepReport>,
}

impl ProbeReport {
    pub fn equivalent(&self) -> bool {
        self.differences == 0
    }

    /// Either equivalent with all three sweeps passing, or different with a
    /// witness in hand.
    pub fn consistent(&self) -> bool {
        if self.equivalent() {
            self.sweeps.iter().all(SweepReport::passed)
        } else {
            self.witness.is_some()
        }
    }
}

pub const THEOREM_AXIOMS: [AxiomId; 3] = [AxiomId::Stag, AxiomId::Si, AxiomId::Dmon];

/// Compares `rule` with plurality on every ranking of the stream. If they
/// differ, searches for a STAG, SI or DMON violation: first on the
/// difference ranking, then across the stream, then on a sample one size up.
pub fn theorem1_probe(
    rule: RuleId,
    n: usize,
    mode: Mode,
    opts: SweepOptions,
) -> Result<ProbeReport> {
    type Acc = (u64, u64, Option<Difference>);
    let (rankings_checked, differences, difference) = fold_rankings(
        n,
        mode,
        opts.jobs,
        || (0, 0, None),
        |(seen, diffs, first): Acc, r| {
            let rule_output = rule.apply(&r);
            let plurality_output = RuleId::Plurality.apply(&r);
            if rule_output == plurality_output {
                return (seen + 1, diffs, first);
            }
            let first = first.or(Some(Difference {
                ranking: r,
                rule_output,
                plurality_output,
            }));
            (seen + 1, diffs + 1, first)
        },
        |a: Acc, b: Acc| (a.0 + b.0, a.1 + b.1, a.2.or(b.2)),
    )?;
    let mut report = ProbeReport {
        rule,
        n,
        mode,
        rankings_checked,
        differences,
        difference,
        witness: None,
        sweeps: Vec::new(),
    };
    let Some(diff) = &report.difference else {
        for axiom in THEOREM_AXIOMS {
            report.sweeps.push(sweep(rule, axiom, n, mode, opts)?);
        }
        return Ok(report);
    };
    report.witness = THEOREM_AXIOMS
        .into_iter()
        .find_map(|axiom| check(axiom, &diff.ranking, rule).witness.map(|w| *w));
    if report.witness.is_some() {
        return Ok(report);
    }
    let first_witness = SweepOptions {
        witness_cap: 1,
        ..opts
    };
    let mut stages = vec![(n, mode)];
    if n < MAX_EXHAUSTIVE {
        let seed = match mode {
            Mode::Sample { seed, .. } => seed,
            Mode::Exhaustive => 0,
        };
        stages.push((
            n + 1,
            Mode::Sample {
                count: 20_000,
                seed,
            },
        ));
    }
    for (size, stage) in stages {
        for axiom in THEOREM_AXIOMS {
            let s = sweep(rule, axiom, size, stage, first_witness)?;
            if let Some(w) = s.witnesses.into_iter().next() {
                report.witness = Some(w);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_counts_small_universe() {
        let r = sweep(
            RuleId::Plurality,
            AxiomId::Stag,
            2,
            Mode::Exhaustive,
            SweepOptions::default(),
        )
        .unwrap();
        assert_eq!(r.rankings_checked, 13);
        assert_eq!(r.violations, 0);
        assert!(r.premises_found > 0);
        assert_eq!(r.status(), Status::Satisfied);
    }

    #[test]
    fn witnesses_are_capped_and_sorted() {
        let opts = SweepOptions {
            witness_cap: 3,
            jobs: Some(2),
        };
        let r = sweep(RuleId::ConstX, AxiomId::Stag, 2, Mode::Exhaustive, opts).unwrap();
        assert!(r.violations > 3);
        assert_eq!(r.witnesses.len(), 3);
        assert!(r.witnesses.windows(2).all(|w| w[0] <= w[1]));
        assert!(r.witnesses.iter().all(Witness::replay));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let run = |jobs| {
            let mut r = sweep(
                RuleId::Les,
                AxiomId::Cv,
                3,
                Mode::Sample {
                    count: 700,
                    seed: 3,
                },
                SweepOptions {
                    witness_cap: 5,
                    jobs,
                },
            )
            .unwrap();
            r.wall_time = Duration::ZERO;
            r
        };
        assert_eq!(run(Some(1)), run(Some(4)));
    }

    #[test]
    fn incompatibility_construction_matches_fixture() {
        let r = incompatibility_ranking(3, 0, 1);
        assert_eq!(r.to_string(), "12 123 ≻ 1 13 ≻ 2 23 ≻ 3");
    }

    #[test]
    fn fixture_instances_replay() {
        assert!(split_plurality_instance(4).unwrap().replay());
        assert!(split_plurality_instance(5).unwrap().replay());
        assert!(f_star_instance().replay());
        assert!(les_instance().replay());
    }

    #[test]
    fn independence_needs_four_individuals() {
        assert!(matches!(
            independence_report(3, SweepOptions::default()),
            Err(Error::UniverseTooSmall { .. })
        ));
    }

    #[test]
    fn probe_on_two_individuals() {
        let p = theorem1_probe(
            RuleId::Plurality,
            2,
            Mode::Exhaustive,
            SweepOptions::default(),
        )
        .unwrap();
        assert!(p.equivalent() && p.consistent());
        assert_eq!(p.sweeps.len(), 3);
        let p =
            theorem1_probe(RuleId::ConstX, 2, Mode::Exhaustive, SweepOptions::default()).unwrap();
        assert!(!p.equivalent());
        assert!(p.witness.as_ref().is_some_and(Witness::replay));
    }
}
