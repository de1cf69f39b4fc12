use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::corpus::CorpusSummary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedBudget,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedBudget => "skipped-budget",
        }
    }
}

/// Outcome of one check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    /// Dotted check name, e.g. `decomposition.enhanced`.
    pub check: String,
    /// The statement being checked.
    pub claim: String,
    /// Instance parameters, e.g. `G=Z3 x Z3 x Z3, H=Heis3`.
    pub params: String,
    pub verdict: Verdict,
    /// Certificate, counterexample or computed values. Always present on a fail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Set when the instance deserves attention without being a failure.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub flagged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        claim: impl Into<String>,
        params: impl Into<String>,
        verdict: Verdict,
    ) -> Self {
        Self {
            check: check.into(),
            claim: claim.into(),
            params: params.into(),
            verdict,
            witness: None,
            flagged: false,
            note: None,
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn flag(mut self, note: impl Into<String>) -> Self {
        self.flagged = true;
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped_budget: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::SkippedBudget => self.skipped_budget += 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusSummary>,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Report with records sorted by check name, then parameters.
    pub fn from_records(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
        Self {
            corpus: None,
            records,
        }
    }

    pub fn with_corpus(mut self, summary: CorpusSummary) -> Self {
        self.corpus = Some(summary);
        self
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        let corpus = self.corpus.take().or(other.corpus);
        let mut records = self.records;
        records.extend(other.records);
        let mut merged = Self::from_records(records);
        merged.corpus = corpus;
        merged
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            t.add(r.verdict);
        }
        t
    }

    pub fn tally_by_check(&self) -> BTreeMap<&str, Tally> {
        let mut by: BTreeMap<&str, Tally> = BTreeMap::new();
        for r in &self.records {
            by.entry(r.check.as_str()).or_default().add(r.verdict);
        }
        by
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.flagged)
    }

    pub fn is_clean(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(c) = &self.corpus {
            let _ = writeln!(
                out,
                "corpus: {} groups of order <= {}",
                c.groups, c.max_order
            );
            let per: Vec<String> = c
                .counts_per_order
                .iter()
                .map(|(n, k)| format!("{n}:{k}"))
                .collect();
            for line in per.chunks(12) {
                let _ = writeln!(out, "  {}", line.join(" "));
            }
            for note in &c.notes {
                let _ = writeln!(out, "  note: {note}");
            }
            out.push('\n');
        }
        let by = self.tally_by_check();
        let width = by.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(
            out,
            "{:<width$}  {:>6}  {:>6}  {:>14}",
            "check", "pass", "fail", "skipped-budget"
        );
        for (check, t) in &by {
            let _ = writeln!(
                out,
                "{check:<width$}  {:>6}  {:>6}  {:>14}",
                t.pass, t.fail, t.skipped_budget
            );
        }
        let t = self.tally();
        let _ = writeln!(
            out,
            "{:<width$}  {:>6}  {:>6}  {:>14}",
            "total", t.pass, t.fail, t.skipped_budget
        );
        let mut section = |title: &str, rows: Vec<&CheckRecord>| {
            if rows.is_empty() {
                return;
            }
            let _ = writeln!(out, "\n{title}:");
            for r in rows {
                let _ = writeln!(out, "  {} [{}] {}", r.check, r.params, r.verdict.as_str());
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "    witness: {w}");
                }
                if let Some(n) = &r.note {
                    let _ = writeln!(out, "    note: {n}");
                }
            }
        };
        section("failures", self.failures().collect());
        section(
            "skipped (budget exhausted)",
            self.records
                .iter()
                .filter(|r| r.verdict == Verdict::SkippedBudget)
                .collect(),
        );
        section("flagged", self.flagged().collect());
        out
    }
}
