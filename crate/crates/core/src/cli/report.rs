//! JSON reports.
//!
//! Every report is an envelope `{schema_version, command, parameters,
//! result}` whose `result` holds exactly one key naming its kind. Rankings
//! inside witnesses are embedded as text-format documents. Object keys are
//! emitted in sorted order, so equal reports serialize to equal bytes.

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::axioms::{Premise, Requirement, Status, Verdict, Witness};
use crate::cli::text::render_ranking;
use crate::enumeration::Mode;
use crate::model::{Coalition, CoalitionalRanking, Individual, Selection, Universe};
use crate::verify::{
    Expectation, IndependenceReport, MatrixReport, ProbeReport, Prop1Report, SweepReport,
};

pub const SCHEMA_VERSION: u32 = 1;

/// The published report schema.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

pub fn envelope(command: &str, parameters: Value, kind: &str, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "result": { kind: payload },
    })
}

fn validator() -> &'static jsonschema::Validator {
    static VALIDATOR: OnceLock<jsonschema::Validator> = OnceLock::new();
    VALIDATOR.get_or_init(|| {
        let schema: Value = serde_json::from_str(SCHEMA).expect("schema is valid JSON");
        jsonschema::validator_for(&schema).expect("schema compiles")
    })
}

/// Checks a report against the published schema.
pub fn validate(report: &Value) -> Result<(), Vec<String>> {
    let errors: Vec<String> = validator()
        .iter_errors(report)
        .map(|e| format!("{}: {e}", e.instance_path()))
        .collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

fn default_universe(n: usize) -> Universe {
    Universe::new(n).expect("rankings have a valid universe")
}

pub fn selection(u: &Universe, s: Selection) -> Value {
    json!(u.format_selection(s))
}

fn coalition(u: &Universe, c: Coalition) -> Value {
    json!(u.format_coalition(c))
}

fn individual(u: &Universe, x: Individual) -> Value {
    json!(u.name(x))
}

fn ranking(u: &Universe, r: &CoalitionalRanking) -> Value {
    json!(render_ranking(u, r))
}

pub fn status(s: Status) -> &'static str {
    match s {
        Status::Inapplicable => "inapplicable",
        Status::Satisfied => "satisfied",
        Status::Violated => "violated",
    }
}

pub fn mode(m: Mode) -> Value {
    match m {
        Mode::Exhaustive => json!({ "kind": "exhaustive" }),
        Mode::Sample { count, seed } => json!({ "kind": "sample", "count": count, "seed": seed }),
    }
}

fn premise(u: &Universe, p: &Premise) -> Value {
    match p {
        Premise::TopAgreement { common } => {
            json!({ "kind": "top_agreement", "common": selection(u, *common) })
        }
        Premise::TopDifference { individual: x } => {
            json!({ "kind": "top_difference", "individual": individual(u, *x) })
        }
        Premise::TopJoint { individual: x } => {
            json!({ "kind": "top_joint", "individual": individual(u, *x) })
        }
        Premise::Concomitant { concomitant } => {
            json!({ "kind": "concomitant", "concomitant": selection(u, *concomitant) })
        }
        Premise::RelativeAgreement {
            reference,
            individual: x,
        } => json!({
            "kind": "relative_agreement",
            "reference": coalition(u, *reference),
            "individual": individual(u, *x),
        }),
        Premise::RelativeDifference {
            reference,
            individual: x,
        } => json!({
            "kind": "relative_difference",
            "reference": coalition(u, *reference),
            "individual": individual(u, *x),
        }),
        Premise::RelativeJoint {
            reference,
            individual: x,
        } => json!({
            "kind": "relative_joint",
            "reference": coalition(u, *reference),
            "individual": individual(u, *x),
        }),
        Premise::Slide {
            pair: (x, y),
            slide,
            transformed,
        } => json!({
            "kind": "slide",
            "pair": [individual(u, *x), individual(u, *y)],
            "from_class": slide.from + 1,
            "to_class": slide.to + 1,
            "gamma": slide.gamma.iter().map(|&c| coalition(u, c)).collect::<Vec<_>>(),
            "transformed": ranking(u, transformed),
        }),
        Premise::Deterioration {
            individual: x,
            subject,
            transformed,
        } => json!({
            "kind": "deterioration",
            "individual": individual(u, *x),
            "subject": coalition(u, *subject),
            "transformed": ranking(u, transformed),
        }),
    }
}

fn requirement(u: &Universe, r: &Requirement) -> Value {
    let (kind, set) = match r {
        Requirement::Equals(s) => ("equals", selection(u, *s)),
        Requirement::Includes(s) => ("includes", selection(u, *s)),
        Requirement::SameOnPair(s) => ("same_on_pair", selection(u, *s)),
        Requirement::Retains(x) => ("retains", json!([u.name(*x)])),
    };
    json!({ "kind": kind, "set": set })
}

/// A witness, with names taken from `u`.
pub fn witness_in(u: &Universe, w: &Witness) -> Value {
    json!({
        "axiom": w.axiom.as_str(),
        "rule": w.rule.as_str(),
        "ranking": ranking(u, &w.ranking),
        "premise": premise(u, &w.premise),
        "required": requirement(u, &w.required),
        "actual": w.actual.iter().map(|&s| selection(u, s)).collect::<Vec<_>>(),
    })
}

pub fn witness(w: &Witness) -> Value {
    witness_in(&default_universe(w.ranking.n()), w)
}

pub fn verdict_in(u: &Universe, v: &Verdict) -> Value {
    json!({
        "status": status(v.status),
        "premises_checked": v.premises_checked,
        "witness": v.witness.as_deref().map(|w| witness_in(u, w)),
    })
}

pub fn sweep(r: &SweepReport) -> Value {
    json!({
        "rule": r.rule.as_str(),
        "axiom": r.axiom.as_str(),
        "n": r.n,
        "mode": mode(r.mode),
        "status": status(r.status()),
        "rankings_checked": r.rankings_checked,
        "rankings_applicable": r.rankings_applicable,
        "premises_found": r.premises_found,
        "violations": r.violations,
        "witnesses": r.witnesses.iter().map(witness).collect::<Vec<_>>(),
    })
}

fn expectation(e: Expectation) -> &'static str {
    e.as_str()
}

pub fn matrix(m: &MatrixReport) -> Value {
    let cells: Vec<Value> = m
        .cells
        .iter()
        .map(|c| {
            json!({
                "rule": c.sweep.rule.as_str(),
                "axiom": c.sweep.axiom.as_str(),
                "observed": expectation(c.observed),
                "expected_statement": expectation(c.expected_statement),
                "expected_proof": c.expected_proof.map(expectation),
                "discrepancy": c.discrepancy,
                "sweep": sweep(&c.sweep),
                "reference": c.reference.as_ref().map(|r| {
                    let u = default_universe(r.ranking.n());
                    json!({ "ranking": ranking(&u, &r.ranking), "verdict": verdict_in(&u, &r.verdict) })
                }),
            })
        })
        .collect();
    json!({
        "n": m.n,
        "mode": mode(m.mode),
        "rules": m.rules.iter().map(|r| r.as_str()).collect::<Vec<_>>(),
        "axioms": m.axioms.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        "discrepancies": m.discrepancies(),
        "cells": cells,
    })
}

pub fn prop1(p: &Prop1Report) -> Value {
    let u = default_universe(p.n);
    json!({
        "n": p.n,
        "mode": mode(p.mode),
        "holds": p.holds(),
        "constructions": p.constructions.iter().map(|c| json!({
            "x": individual(&u, c.x),
            "y": individual(&u, c.y),
            "ranking": ranking(&u, &c.ranking),
            "rdf_premise": c.rdf_premise,
            "forced": [u.name(c.x)],
            "concomitant": selection(&u, c.concomitant),
            "certified": c.certified,
        })).collect::<Vec<_>>(),
        "lemma": {
            "rankings_checked": p.rankings_checked,
            "rdf_premises": p.rdf_premises,
            "rjad_premises": p.rjad_premises,
            "violations": p.lemma_violations,
            "counterexamples": p.lemma_counterexamples.iter().map(|c| json!({
                "ranking": ranking(&u, &c.ranking),
                "axiom": c.axiom.as_str(),
                "reference": coalition(&u, c.reference),
                "individual": individual(&u, c.individual),
            })).collect::<Vec<_>>(),
        },
        "const_x_wrag": sweep(&p.const_x_wrag),
        "const_x_cv": sweep(&p.const_x_cv),
    })
}

pub fn independence(r: &IndependenceReport) -> Value {
    json!({
        "n": r.n,
        "holds": r.holds(),
        "claims": r.claims.iter().map(|c| json!({
            "rule": c.rule.as_str(),
            "axiom": c.axiom.as_str(),
            "expected": expectation(c.expected),
            "holds": c.holds,
            "sweep": c.sweep.as_ref().map(sweep),
            "instance": c.instance.as_ref().map(|w| json!({ "witness": witness(w), "replays": w.replay() })),
        })).collect::<Vec<_>>(),
    })
}

pub fn probe(p: &ProbeReport) -> Value {
    json!({
        "rule": p.rule.as_str(),
        "n": p.n,
        "mode": mode(p.mode),
        "rankings_checked": p.rankings_checked,
        "differences": p.differences,
        "equivalent": p.equivalent(),
        "consistent": p.consistent(),
        "difference": p.difference.as_ref().map(|d| {
            let u = default_universe(d.ranking.n());
            json!({
                "ranking": ranking(&u, &d.ranking),
                "rule_output": selection(&u, d.rule_output),
                "plurality_output": selection(&u, d.plurality_output),
            })
        }),
        "witness": p.witness.as_ref().map(witness),
        "sweeps": p.sweeps.iter().map(sweep).collect::<Vec<_>>(),
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check, AxiomId};
    use crate::solutions::RuleId;

    #[test]
    fn schema_accepts_envelopes() {
        let u = Universe::new(3).unwrap();
        let r = CoalitionalRanking::from_notation(3, "12 ≻ 1 ≻ rest").unwrap();
        let report = envelope(
            "solve",
            json!({ "rule": "les" }),
            "selection",
            selection(&u, RuleId::Les.apply(&r)),
        );
        validate(&report).unwrap();
        assert_eq!(report["result"]["selection"], json!(["1"]));

        let v = check(AxiomId::Stag, &r, RuleId::Les);
        let report = envelope("check", json!({}), "verdict", verdict_in(&u, &v));
        validate(&report).unwrap();
        assert_eq!(
            report["result"]["verdict"]["witness"]["ranking"]
                .as_str()
                .unwrap()
                .lines()
                .count(),
            4
        );
    }

    #[test]
    fn schema_rejects_malformed_reports() {
        assert!(validate(&json!({ "command": "solve" })).is_err());
        let bad = envelope("solve", json!({}), "selection", json!([1, 2]));
        assert!(validate(&bad).is_err());
        let unknown = envelope("solve", json!({}), "tally", json!({}));
        assert!(validate(&unknown).is_err());
    }
}
