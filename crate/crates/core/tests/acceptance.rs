//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::collections::{HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use millrank::axioms::{check, relative_difference_premise, AxiomId, Status};
use millrank::enumeration::{enumerate_rankings, fubini, sample_ranking, Mode};
use millrank::model::{Coalition, CoalitionalRanking, Selection};
use millrank::solutions::{les, plurality, split_scores, RuleId};
use millrank::transforms::{enumerate_deteriorations, is_deterioration};
use millrank::verify::{
    incompatibility_ranking, independence_report, prop1_report, prop3_matrix,
    split_plurality_instance, sweep, theorem1_probe, Expectation, SweepOptions, THEOREM_AXIOMS,
};
use num_bigint::BigUint;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn exhaustive() -> Mode {
    Mode::Exhaustive
}

fn criterion_1() -> Outcome {
    for (n, expected) in [(1usize, 1u64), (2, 13), (3, 47_293)] {
        let count = enumerate_rankings(n).map_err(|e| e.to_string())?.count() as u64;
        ensure!(
            count == expected,
            "n = {n}: {count} rankings, expected {expected}"
        );
        ensure!(
            fubini((1 << n) - 1) == BigUint::from(count),
            "n = {n}: count disagrees with fubini"
        );
    }
    let start = Instant::now();
    let count = enumerate_rankings(3).map_err(|e| e.to_string())?.count();
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(5),
        "n = 3 enumeration took {elapsed:?}"
    );
    Ok(format!(
        "1 / 13 / {count} rankings; n = 3 in {:.2?}",
        elapsed
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for axiom in THEOREM_AXIOMS {
        let report = sweep(
            RuleId::Plurality,
            axiom,
            3,
            exhaustive(),
            SweepOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        ensure!(
            report.rankings_checked == 47_293,
            "{axiom}: {} rankings",
            report.rankings_checked
        );
        ensure!(
            report.violations == 0,
            "{axiom}: {} violations, first on {}",
            report.violations,
            report.witnesses[0].ranking
        );
        parts.push(format!("{axiom} 0/{}", report.premises_found));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "sweep took {elapsed:?}");
    Ok(format!("plurality {} in {:.2?}", parts.join(", "), elapsed))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for rule in [
        RuleId::Les,
        RuleId::Obi,
        RuleId::SplitPlurality,
        RuleId::FStar,
        RuleId::ConstX,
    ] {
        let probe = theorem1_probe(rule, 3, exhaustive(), SweepOptions::default())
            .map_err(|e| e.to_string())?;
        ensure!(
            probe.difference.is_some(),
            "{rule}: no ranking differs from plurality"
        );
        let Some(w) = &probe.witness else {
            return Err(format!("{rule}: no STAG/SI/DMON witness"));
        };
        ensure!(
            THEOREM_AXIOMS.contains(&w.axiom),
            "{rule}: witness for {}",
            w.axiom
        );
        ensure!(w.replay(), "{rule}: witness does not replay");
        ensure!(
            check(w.axiom, &w.ranking, rule).status == Status::Violated,
            "{rule}: recheck not violated"
        );
        parts.push(format!("{rule} {}", w.axiom));
    }
    Ok(parts.join(", "))
}

fn criterion_4() -> Outcome {
    let opts = SweepOptions {
        witness_cap: usize::MAX,
        jobs: None,
    };
    let m = prop3_matrix(3, exhaustive(), opts).map_err(|e| e.to_string())?;
    let observed = |rule, axiom| m.cell(rule, axiom).expect("cell").observed;
    use AxiomId::*;
    use Expectation::*;
    for axiom in [Stag, Tag, Tdf, Tjad, Cv] {
        ensure!(
            observed(RuleId::Plurality, axiom) == Satisfied,
            "plurality fails {axiom}"
        );
    }
    for axiom in [Tag, Tdf, Tjad] {
        ensure!(
            observed(RuleId::Les, axiom) == Satisfied,
            "les fails {axiom}"
        );
    }
    for axiom in [Tdf, Tjad] {
        ensure!(
            observed(RuleId::Obi, axiom) == Satisfied,
            "obi fails {axiom}"
        );
    }
    let named = [
        (RuleId::Les, Stag, Some("12 ≻ 1 ≻ rest")),
        (RuleId::Les, Cv, Some("12 ≻ 2 ≻ 1 13 123 ≻ rest")),
        (RuleId::Obi, Tag, Some("1 ≻ 2 23 ≻ 12 123 ≻ 3 13")),
        (RuleId::Obi, Stag, None),
    ];
    for (rule, axiom, text) in named {
        let cell = m.cell(rule, axiom).expect("cell");
        ensure!(cell.observed == Violated, "{rule} passes {axiom}");
        ensure!(
            cell.sweep.witnesses.iter().all(|w| w.replay()),
            "{rule}/{axiom}: witness fails replay"
        );
        if let Some(text) = text {
            let r = CoalitionalRanking::from_notation(3, text).map_err(|e| e.to_string())?;
            ensure!(
                cell.sweep.witnesses.iter().any(|w| w.ranking == r),
                "{rule}/{axiom}: \"{text}\" not among the witnesses"
            );
            ensure!(
                check(axiom, &r, rule).is_violated(),
                "{rule}/{axiom}: \"{text}\" not violated"
            );
        }
    }
    let cv = m.cell(RuleId::Obi, Cv).expect("cell");
    ensure!(cv.discrepancy, "obi/CV carries no discrepancy flag");
    ensure!(
        cv.expected_statement == Violated,
        "obi/CV statement expectation"
    );
    Ok(format!(
        "grid as expected; obi/CV observed {} against stated violated (flagged)",
        cv.observed.as_str()
    ))
}

fn criterion_5() -> Outcome {
    let report = independence_report(4, SweepOptions::default()).map_err(|e| e.to_string())?;
    let instance = split_plurality_instance(4).map_err(|e| e.to_string())?;
    ensure!(
        instance.replay(),
        "split_plurality instance does not replay"
    );
    let failed: Vec<String> = report
        .claims
        .iter()
        .filter(|c| !c.holds)
        .map(|c| {
            let detail = c
                .sweep
                .as_ref()
                .and_then(|s| {
                    s.witnesses
                        .first()
                        .map(|w| format!(" ({} violations, e.g. {})", s.violations, w.ranking))
                })
                .unwrap_or_default();
            format!(
                "{} {} expected {}{detail}",
                c.rule,
                c.axiom,
                c.expected.as_str()
            )
        })
        .collect();
    ensure!(failed.is_empty(), "{}", failed.join("; "));
    Ok(format!("{} clauses confirmed", report.claims.len()))
}

fn criterion_6() -> Outcome {
    let r = CoalitionalRanking::from_notation(3, "12 123 ≻ 1 13 ≻ 2 23 ≻ 3")
        .map_err(|e| e.to_string())?;
    ensure!(
        r == incompatibility_ranking(3, 0, 1),
        "construction differs from the library's"
    );
    ensure!(
        relative_difference_premise(&r, Coalition::singleton(1), 0),
        "RDF premise at S0 = {{2}} fails"
    );
    ensure!(r.concomitant_set().contains(1), "2 is not concomitant");
    let report =
        prop1_report(3, exhaustive(), SweepOptions::default()).map_err(|e| e.to_string())?;
    let construction = report
        .constructions
        .iter()
        .find(|c| c.x == 0 && c.y == 1)
        .ok_or("construction for (1, 2) missing")?;
    ensure!(construction.certified, "construction not certified");
    ensure!(
        report.constructions.iter().all(|c| c.certified),
        "some construction not certified"
    );
    ensure!(
        report.rankings_checked == 47_293,
        "{} rankings",
        report.rankings_checked
    );
    ensure!(
        report.lemma_violations == 0,
        "{} lemma counterexamples",
        report.lemma_violations
    );
    ensure!(report.const_x_wrag.passed(), "const_x fails WRAG");
    ensure!(report.const_x_cv.passed(), "const_x fails CV");
    Ok(format!(
        "{} constructions certified; 0 lemma counterexamples over {} RDF and {} RJAD premises",
        report.constructions.len(),
        report.rdf_premises,
        report.rjad_premises
    ))
}

fn rank_restriction(r: &CoalitionalRanking, subject: Coalition) -> Vec<usize> {
    let n = r.n();
    let rest: Vec<usize> = (1u32..1 << n)
        .filter(|&m| m != subject.mask())
        .map(|m| r.class_index(Coalition::from_mask(m)))
        .collect();
    let mut levels = rest.clone();
    levels.sort_unstable();
    levels.dedup();
    rest.iter()
        .map(|v| levels.binary_search(v).unwrap())
        .collect()
}

fn criterion_7() -> Outcome {
    let all: Vec<CoalitionalRanking> = enumerate_rankings(3).map_err(|e| e.to_string())?.collect();
    for r in &all {
        ensure!(les(r).is_subset(plurality(r)), "les ⊄ plurality on {r}");
        for x in 0..3 {
            let total = r.theta(x).map_err(|e| e.to_string())?.total();
            ensure!(total == 4, "Σθ = {total} for {} on {r}", x + 1);
        }
        let split: Ratio<u64> = split_scores(r).into_iter().sum();
        ensure!(
            split == Ratio::from_integer(r.top_class().len() as u64),
            "split sum {split} on {r}"
        );
        for x in r.concomitant_set().members() {
            let s = r.banzhaf(x).map_err(|e| e.to_string())?.score;
            ensure!(s == 3, "s_{} = {s} on {r}", x + 1);
        }
    }

    let mut checked = 0u64;
    for subject in (1u32..8).map(Coalition::from_mask) {
        let mut groups: HashMap<Vec<usize>, Vec<&CoalitionalRanking>> = HashMap::new();
        for r in &all {
            groups
                .entry(rank_restriction(r, subject))
                .or_default()
                .push(r);
        }
        for members in groups.values() {
            for &r in members {
                let produced: HashSet<CoalitionalRanking> = enumerate_deteriorations(r, subject)
                    .map_err(|e| e.to_string())?
                    .collect();
                let mut recognized = HashSet::new();
                for &r2 in members {
                    if is_deterioration(r, r2, subject).map_err(|e| e.to_string())? {
                        recognized.insert(r2.clone());
                    }
                }
                ensure!(
                    produced == recognized,
                    "{subject}-deteriorations of {r} disagree"
                );
                checked += 1;
            }
        }
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for seed in 0..200 {
        let r = sample_ranking(4, seed).map_err(|e| e.to_string())?;
        let mut perm: Vec<usize> = (0..4).collect();
        perm.shuffle(&mut rng);
        let moved = r.relabel(&perm);
        for rule in RuleId::ALL {
            let expected = Selection::from_members(rule.apply(&r).members().map(|x| perm[x]));
            ensure!(
                rule.apply(&moved) == expected,
                "{rule} not anonymous on {r} under {perm:?}"
            );
        }
    }
    Ok(format!(
        "{} rankings, {checked} deterioration sets, 200 relabelings at n = 4",
        all.len()
    ))
}

fn criterion_8() -> Outcome {
    let run = |args: &[&str], jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_millrank"))
            .args(args)
            .args(["--jobs", jobs])
            .env_remove("MILLRANK_JOBS")
            .output()
            .expect("binary runs")
    };
    let campaigns: [&[&str]; 4] = [
        &["sweep", "--rule", "obi", "--axiom", "tag", "--n", "3"],
        &["sweep", "--rule", "f_star", "--axiom", "si", "--n", "3"],
        &[
            "sweep", "--rule", "les", "--axiom", "dmon", "--n", "5", "--sample", "2000", "--seed",
            "3",
        ],
        &["verify", "theorem1", "--rule", "les", "--n", "3"],
    ];
    for args in campaigns {
        let a = run(args, "1");
        let b = run(args, "4");
        let c = run(args, "1");
        ensure!(!a.stdout.is_empty(), "{args:?} printed nothing");
        ensure!(
            a.stdout == b.stdout,
            "{args:?}: --jobs 1 and --jobs 4 differ"
        );
        ensure!(a.stdout == c.stdout, "{args:?}: repeated runs differ");
    }
    Ok(format!(
        "{} campaigns byte-identical across runs and --jobs",
        campaigns.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("enumeration counts", criterion_1),
        ("plurality satisfies STAG, SI, DMON", criterion_2),
        ("other rules differ and violate", criterion_3),
        ("canon matrix", criterion_4),
        ("independence", criterion_5),
        ("RDF and CV incompatibility", criterion_6),
        ("structural properties", criterion_7),
        ("reproducibility", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
