//! Suite execution and the JSON report.

use std::time::Instant;

use contentalg_core::{CheckResult, Error, Instance, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::{SuiteConfig, Validated};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const THREADS_ENV: &str = "CONTENTALG_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<String>,
    pub instance: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub bounded_pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub inconclusive: usize,
    pub precondition_violated: usize,
    pub errors: usize,
}

/// A check that stopped with an internal error instead of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckError {
    pub check: String,
    pub message: String,
    pub cross_validation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub config: SuiteConfig,
    pub labels: Labels,
    pub results: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<CheckError>,
    pub summary: Summary,
    pub exit_code: i32,
    /// SHA-256 of the report serialized with this field empty and
    /// `wall_time_ms` zero.
    pub determinism_hash: String,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn compute_hash(&self) -> String {
        let mut canonical = self.clone();
        canonical.determinism_hash = String::new();
        canonical.wall_time_ms = 0;
        let bytes = serde_json::to_vec(&canonical).expect("report serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn hash_is_valid(&self) -> bool {
        self.compute_hash() == self.determinism_hash
    }
}

/// Threads from `CONTENTALG_THREADS`: `None` when unset, an error when set
/// to anything but a positive integer.
pub fn threads_from_env() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got '{v}'")),
        },
    }
}

pub fn exit_code_for(results: &[CheckResult], errors: &[CheckError]) -> i32 {
    if errors.iter().any(|e| e.cross_validation) {
        EXIT_MISMATCH
    } else if !errors.is_empty() || results.iter().any(|r| r.verdict.is_failure()) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn summarize(results: &[CheckResult], errors: &[CheckError]) -> Summary {
    let mut s = Summary {
        errors: errors.len(),
        ..Summary::default()
    };
    for r in results {
        match r.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::BoundedPass => s.bounded_pass += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::Skipped => s.skipped += 1,
            Verdict::Inconclusive => s.inconclusive += 1,
            Verdict::PreconditionViolated => s.precondition_violated += 1,
        }
    }
    s
}

/// Runs the configured checks, in parallel when more than one thread is
/// available; results are ordered by check name.
pub fn run_suite(v: &Validated, threads: Option<usize>) -> Result<Report, String> {
    let start = Instant::now();
    let mut instance = Instance::new(v.ring.clone(), v.monoid.clone(), &v.config.bounds).map_err(|e| e.to_string())?;
    instance.module_ranks = v.config.module_ranks.clone();
    instance.valuation_samples = v.config.valuation_samples;

    let mut names = v.checks.clone();
    names.sort_unstable();
    let run = || -> Vec<(&'static str, Result<CheckResult, Error>)> {
        names.par_iter().map(|&n| (n, instance.run(n))).collect()
    };
    let outcomes = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(run),
        None => run(),
    };

    let mut results = Vec::new();
    let mut errors = Vec::new();
    for (name, outcome) in outcomes {
        match outcome {
            Ok(r) => results.push(r),
            Err(e) => errors.push(CheckError {
                check: name.to_string(),
                cross_validation: matches!(e, Error::CrossValidationMismatch(_)),
                message: e.to_string(),
            }),
        }
    }
    let summary = summarize(&results, &errors);
    let exit_code = exit_code_for(&results, &errors);
    let mut report = Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: v.config.clone(),
        labels: Labels {
            ring: v.ring.label().to_string(),
            monoid: v.monoid.as_ref().map(|m| m.label().to_string()),
            instance: instance.label(),
        },
        results,
        errors,
        summary,
        exit_code,
        determinism_hash: String::new(),
        wall_time_ms: 0,
    };
    report.determinism_hash = report.compute_hash();
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    fn run(text: &str) -> Report {
        run_suite(&parse_config(text).unwrap(), Some(2)).unwrap()
    }

    #[test]
    fn mccoy_failure_over_torsion() {
        let r = run(r#"{"ring":{"kind":"zmod","n":2},"monoid":{"kind":"group","torsion":[2]},"checks":["mccoy","unit_content"]}"#);
        assert_eq!(r.exit_code, EXIT_FAIL);
        let names: Vec<&str> = r.results.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["mccoy", "unit_content"]);
        assert_eq!(r.results[0].witness_value("g"), Some("1 + X^1"));
    }

    #[test]
    fn round_trip_and_hash() {
        let r = run(r#"{"ring":{"kind":"zmod","n":4},"monoid":{"kind":"free","rank":1},"checks":["gaussian","spectrum"]}"#);
        assert_eq!(r.exit_code, EXIT_OK);
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(back.hash_is_valid());
        let again = run(r#"{"ring":{"kind":"zmod","n":4},"monoid":{"kind":"free","rank":1},"checks":["spectrum","gaussian"]}"#);
        assert_eq!(again.results, r.results);
    }

    #[test]
    fn exit_codes() {
        let fail = CheckResult::new("x", Verdict::Fail);
        let ok = CheckResult::new("y", Verdict::Skipped);
        let mismatch = CheckError {
            check: "z".into(),
            message: String::new(),
            cross_validation: true,
        };
        assert_eq!(exit_code_for(&[ok.clone()], &[]), EXIT_OK);
        assert_eq!(exit_code_for(&[ok, fail.clone()], &[]), EXIT_FAIL);
        assert_eq!(exit_code_for(&[fail], &[mismatch]), EXIT_MISMATCH);
    }
}
