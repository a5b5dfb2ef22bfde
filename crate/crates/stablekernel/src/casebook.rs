//! Worked examples as data: `.lpt` sources plus a JSON manifest of the
//! expected stable models, compiled into the binary.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use stablekernel_core::auction::{auction_encode, auction_oracle, decode};
use stablekernel_core::semantics::stable_models;
use stablekernel_core::syntax::parse_theory;
use stablekernel_core::{Interpretation, Semantics};

use crate::io::{model_names, parse_auction};

const MANIFEST: &str = include_str!("../casebook/manifest.json");

const SOURCES: &[(&str, &str)] = &[
    ("even-loop.lpt", include_str!("../casebook/even-loop.lpt")),
    ("implication-choice.lpt", include_str!("../casebook/implication-choice.lpt")),
    ("double-negation.lpt", include_str!("../casebook/double-negation.lpt")),
    ("fact.lpt", include_str!("../casebook/fact.lpt")),
    ("mixed-sign-sum.lpt", include_str!("../casebook/mixed-sign-sum.lpt")),
    ("repeated-atom-sum.lpt", include_str!("../casebook/repeated-atom-sum.lpt")),
    ("trivial-lower-bound.lpt", include_str!("../casebook/trivial-lower-bound.lpt")),
    ("negated-upper-bound.lpt", include_str!("../casebook/negated-upper-bound.lpt")),
    ("self-support.lpt", include_str!("../casebook/self-support.lpt")),
    ("literal-in-set.lpt", include_str!("../casebook/literal-in-set.lpt")),
    ("negated-in-set.lpt", include_str!("../casebook/negated-in-set.lpt")),
    ("negated-in-set-alone.lpt", include_str!("../casebook/negated-in-set-alone.lpt")),
    ("defined-by-aggregate.lpt", include_str!("../casebook/defined-by-aggregate.lpt")),
    ("negated-aggregate.lpt", include_str!("../casebook/negated-aggregate.lpt")),
    ("negated-aggregate-alone.lpt", include_str!("../casebook/negated-aggregate-alone.lpt")),
    ("auction-two-bids.json", include_str!("../casebook/auction-two-bids.json")),
    ("auction-overlap.json", include_str!("../casebook/auction-overlap.json")),
];

pub fn source(file: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(name, _)| *name == file).map(|(_, text)| *text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The expected value is a published claim that the definitions confirm.
    Quoted,
    /// The expected value comes from an independent computation.
    Derived,
    /// A published claim the definitions contradict. `expected` holds the
    /// computed value and `claimed` the published one.
    Disputed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseRecord {
    pub id: String,
    pub file: String,
    pub semantics: String,
    pub expected: Vec<Vec<String>>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed: Option<Vec<Vec<String>>>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuctionRecord {
    pub id: String,
    pub file: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub cases: Vec<CaseRecord>,
    pub auctions: Vec<AuctionRecord>,
}

pub fn manifest() -> Manifest {
    serde_json::from_str(MANIFEST).expect("bundled manifest is valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Computed value matches `expected`; the published claim differs.
    Disputed,
    /// Computed value matches neither.
    DisputedFail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub id: String,
    pub semantics: String,
    pub status: Status,
    pub computed: Result<Vec<Vec<String>>, String>,
    pub expected: Vec<Vec<String>>,
    pub claimed: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, Status::Fail | Status::DisputedFail))
            .count()
    }

    pub fn disputed(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == Status::Disputed)
    }
}

fn fmt_models(ms: &[Vec<String>]) -> String {
    if ms.is_empty() {
        return "none".into();
    }
    ms.iter()
        .map(|m| format!("{{{}}}", m.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let computed = match &r.computed {
                Ok(ms) => fmt_models(ms),
                Err(e) => format!("error: {e}"),
            };
            match r.status {
                Status::Pass => writeln!(f, "PASS      {} [{}] {}", r.id, r.semantics, computed)?,
                Status::Fail => writeln!(
                    f,
                    "FAIL      {} [{}] computed {} expected {}",
                    r.id,
                    r.semantics,
                    computed,
                    fmt_models(&r.expected)
                )?,
                Status::Disputed | Status::DisputedFail => {
                    let tag = if r.status == Status::Disputed {
                        "DISPUTED"
                    } else {
                        "FAIL"
                    };
                    writeln!(
                        f,
                        "{tag:<9} {} [{}] computed {} claimed {}",
                        r.id,
                        r.semantics,
                        computed,
                        fmt_models(r.claimed.as_deref().unwrap_or_default())
                    )?
                }
            }
        }
        let disputed = self.disputed().count();
        writeln!(
            f,
            "{} cases, {} failed, {} disputed",
            self.rows.len(),
            self.failures(),
            disputed
        )
    }
}

fn canonical(ms: &[Vec<String>]) -> BTreeSet<BTreeSet<String>> {
    ms.iter().map(|m| m.iter().cloned().collect()).collect()
}

fn solve(record: &CaseRecord) -> Result<Vec<Vec<String>>, String> {
    let text = source(&record.file).ok_or_else(|| format!("missing source {}", record.file))?;
    let theory = parse_theory(text).map_err(|e| e.to_string())?;
    let semantics: Semantics = record
        .semantics
        .parse()
        .map_err(|_| format!("unknown semantics `{}`", record.semantics))?;
    let models: Vec<Interpretation> = stable_models(&theory, semantics).map_err(|e| e.to_string())?;
    Ok(models.iter().map(model_names).collect())
}

pub fn run_case(record: &CaseRecord) -> Row {
    let computed = solve(record);
    let matches = |want: &[Vec<String>]| {
        computed
            .as_ref()
            .is_ok_and(|got| canonical(got) == canonical(want))
    };
    let status = match record.provenance {
        Provenance::Quoted | Provenance::Derived if matches(&record.expected) => Status::Pass,
        Provenance::Quoted | Provenance::Derived => Status::Fail,
        Provenance::Disputed if matches(&record.expected) => Status::Disputed,
        Provenance::Disputed => Status::DisputedFail,
    };
    Row {
        id: record.id.clone(),
        semantics: record.semantics.clone(),
        status,
        computed,
        expected: record.expected.clone(),
        claimed: record.claimed.clone(),
    }
}

/// Solves the auction encoding and compares the accepted-bid sets with the
/// brute-force oracle.
pub fn run_auction(record: &AuctionRecord) -> Row {
    let outcome = (|| {
        let text = source(&record.file).ok_or_else(|| format!("missing source {}", record.file))?;
        let inst = parse_auction(text).map_err(|e| format!("{e:#}"))?;
        let models = stable_models(&auction_encode(&inst), Semantics::Ferraris).map_err(|e| e.to_string())?;
        let solved: BTreeSet<BTreeSet<usize>> = models.iter().map(|x| decode(&inst, x)).collect();
        let as_names = |sets: &BTreeSet<BTreeSet<usize>>| -> Vec<Vec<String>> {
            sets.iter()
                .map(|s| s.iter().map(|j| format!("b{}", j + 1)).collect())
                .collect()
        };
        Ok::<_, String>((as_names(&solved), as_names(&auction_oracle(&inst))))
    })();
    let (computed, expected, status) = match outcome {
        Ok((got, want)) => {
            let status = if got == want { Status::Pass } else { Status::Fail };
            (Ok(got), want, status)
        }
        Err(e) => (Err(e), Vec::new(), Status::Fail),
    };
    Row {
        id: record.id.clone(),
        semantics: "ferraris".into(),
        status,
        computed,
        expected,
        claimed: None,
    }
}

pub fn run_casebook() -> Report {
    let m = manifest();
    let mut rows: Vec<Row> = m.cases.iter().map(run_case).collect();
    rows.extend(m.auctions.iter().map(run_auction));
    Report { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_is_bundled() {
        let m = manifest();
        for file in m.cases.iter().map(|c| &c.file).chain(m.auctions.iter().map(|a| &a.file)) {
            assert!(source(file).is_some(), "{file}");
        }
    }

    #[test]
    fn disputed_records_carry_both_values() {
        for c in manifest().cases {
            assert_eq!(c.provenance == Provenance::Disputed, c.claimed.is_some(), "{}", c.id);
            if let Some(claimed) = &c.claimed {
                assert_ne!(canonical(claimed), canonical(&c.expected), "{}", c.id);
            }
        }
    }

    #[test]
    fn ids_are_unique() {
        let m = manifest();
        let ids: BTreeSet<&str> = m.cases.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), m.cases.len());
    }
}
