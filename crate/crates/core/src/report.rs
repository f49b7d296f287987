//! Machine-readable verification records.

use std::fmt::{self, Display};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Informational: a degenerate case or unmet precondition. Never fails a
    /// report.
    Note,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Note => "note",
        })
    }
}

/// One check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    /// The named result the check instantiates.
    #[serde(rename = "ref")]
    pub reference: String,
    pub digest: String,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
}

impl Record {
    /// Passes iff `expected == actual`.
    pub fn compare<T: PartialEq + Display>(
        check: &str,
        reference: &str,
        digest: &str,
        expected: T,
        actual: T,
    ) -> Self {
        let verdict = if expected == actual {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Record {
            check: check.into(),
            reference: reference.into(),
            digest: digest.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            verdict,
        }
    }

    /// Passes iff `holds`; `expected` describes the condition.
    pub fn condition(
        check: &str,
        reference: &str,
        digest: &str,
        expected: impl Display,
        actual: impl Display,
        holds: bool,
    ) -> Self {
        Record {
            check: check.into(),
            reference: reference.into(),
            digest: digest.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn note(check: &str, reference: &str, digest: &str, message: impl Display) -> Self {
        Record {
            check: check.into(),
            reference: reference.into(),
            digest: digest.into(),
            expected: "-".into(),
            actual: message.to_string(),
            verdict: Verdict::Note,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    /// True iff no record failed.
    pub fn passed(&self) -> bool {
        self.records.iter().all(Record::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    /// One JSON object per line.
    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!(
                "[{}] {} ({}) {}: expected {}, got {}\n",
                r.verdict, r.check, r.reference, r.digest, r.expected, r.actual
            ));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} notes: {}\n",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Note),
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Short content digest of a canonical instance document.
pub fn digest(document: &str) -> String {
    let hash = Sha256::digest(document.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Renders a sequence as `(a,b,c)`.
pub fn seq<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}
