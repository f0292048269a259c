//! Uniform result record for every check.

use serde::{Deserialize, Serialize};

use crate::universe::{Bounds, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exhaustive over a finite object.
    Pass,
    /// No counterexample within the scanned universe.
    BoundedPass,
    Fail,
    /// Not applicable to this instance, with the reason in `notes`.
    Skipped,
    /// The scan could neither confirm nor refute at these bounds.
    Inconclusive,
    PreconditionViolated,
}

impl Verdict {
    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::BoundedPass => "bounded_pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::Inconclusive => "inconclusive",
            Verdict::PreconditionViolated => "precondition_violated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub scans: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<CheckResult>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> CheckResult {
        CheckResult {
            name: name.into(),
            verdict,
            witness: None,
            bounds: None,
            universe: None,
            seed: None,
            scans: 0,
            notes: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> CheckResult {
        CheckResult::new(name, Verdict::Skipped).note(reason)
    }

    pub fn with_universe(mut self, bounds: &Bounds, universe: &Universe) -> CheckResult {
        self.bounds = Some(bounds.clone());
        self.seed = Some(bounds.seed);
        self.universe = Some(universe.description.clone());
        self
    }

    pub fn with_bounds(mut self, bounds: &Bounds) -> CheckResult {
        self.bounds = Some(bounds.clone());
        self.seed = Some(bounds.seed);
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> CheckResult {
        self.notes.push(text.into());
        self
    }

    pub fn scans(mut self, n: u64) -> CheckResult {
        self.scans = n;
        self
    }

    pub fn witness(mut self, entries: &[(&str, String)]) -> CheckResult {
        self.witness = Some(
            entries
                .iter()
                .map(|(n, v)| WitnessEntry {
                    name: n.to_string(),
                    value: v.clone(),
                })
                .collect(),
        );
        self
    }

    pub fn detail(mut self, d: CheckResult) -> CheckResult {
        self.details.push(d);
        self
    }

    pub fn witness_value(&self, name: &str) -> Option<&str> {
        self.witness
            .as_ref()?
            .iter()
            .find(|w| w.name == name)
            .map(|w| w.value.as_str())
    }
}

/// Pass over a finite object or bounded pass over a universe.
pub fn verdict_for(exhaustive: bool, failed: bool) -> Verdict {
    match (failed, exhaustive) {
        (true, _) => Verdict::Fail,
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::BoundedPass,
    }
}

/// Scans unordered pairs: first `(i, j)` with `i < j` in lexicographic
/// order, then the squares `(i, i)`. Returns the number of pairs visited and
/// the first pair for which `fails` holds.
pub fn scan_pairs(n: usize, mut fails: impl FnMut(usize, usize) -> bool) -> (u64, Option<(usize, usize)>) {
    let mut scans = 0;
    for i in 0..n {
        for j in i + 1..n {
            scans += 1;
            if fails(i, j) {
                return (scans, Some((i, j)));
            }
        }
    }
    for i in 0..n {
        scans += 1;
        if fails(i, i) {
            return (scans, Some((i, i)));
        }
    }
    (scans, None)
}
