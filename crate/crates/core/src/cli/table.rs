//! CSV tables: one row per sweep, with the witnesses left out.

use csv::Writer;

use crate::enumeration::Mode;
use crate::verify::{MatrixReport, SweepReport};

const SWEEP_COLUMNS: [&str; 10] = [
    "rule",
    "axiom",
    "n",
    "mode",
    "seed",
    "rankings_checked",
    "rankings_applicable",
    "premises_found",
    "violations",
    "status",
];

fn sweep_fields(r: &SweepReport) -> Vec<String> {
    let (mode, seed) = match r.mode {
        Mode::Exhaustive => ("exhaustive".to_string(), String::new()),
        Mode::Sample { count, seed } => (format!("sample:{count}"), seed.to_string()),
    };
    vec![
        r.rule.as_str().to_string(),
        r.axiom.as_str().to_string(),
        r.n.to_string(),
        mode,
        seed,
        r.rankings_checked.to_string(),
        r.rankings_applicable.to_string(),
        r.premises_found.to_string(),
        r.violations.to_string(),
        crate::cli::report::status(r.status()).to_string(),
    ]
}

fn finish(w: Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("fields are UTF-8")
}

pub fn sweeps<'a>(reports: impl IntoIterator<Item = &'a SweepReport>) -> String {
    let mut w = Writer::from_writer(Vec::new());
    w.write_record(SWEEP_COLUMNS).expect("in-memory writer");
    for r in reports {
        w.write_record(sweep_fields(r)).expect("in-memory writer");
    }
    finish(w)
}

pub fn matrix(m: &MatrixReport) -> String {
    let mut w = Writer::from_writer(Vec::new());
    let header = SWEEP_COLUMNS.iter().copied().chain([
        "observed",
        "expected_statement",
        "expected_proof",
        "discrepancy",
    ]);
    w.write_record(header).expect("in-memory writer");
    for c in &m.cells {
        let mut row = sweep_fields(&c.sweep);
        row.push(c.observed.as_str().to_string());
        row.push(c.expected_statement.as_str().to_string());
        row.push(c.expected_proof.map_or("", |e| e.as_str()).to_string());
        row.push(c.discrepancy.to_string());
        w.write_record(row).expect("in-memory writer");
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::AxiomId;
    use crate::solutions::RuleId;
    use crate::verify::{sweep, SweepOptions};

    #[test]
    fn sweep_row() {
        let r = sweep(
            RuleId::Les,
            AxiomId::Stag,
            2,
            Mode::Exhaustive,
            SweepOptions::default(),
        )
        .unwrap();
        let text = sweeps([&r]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("rule,axiom,n,mode,seed,"));
        assert!(
            lines[1].starts_with("les,STAG,2,exhaustive,,13,"),
            "{}",
            lines[1]
        );
    }
}
