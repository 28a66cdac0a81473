use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One named verification step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

/// The outcome of one case: its checks and the overall verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<String>,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl Certificate {
    pub fn new(case: Option<&str>, checks: Vec<Check>) -> Certificate {
        let overall = if checks.iter().any(|c| c.status == Status::Fail) { Status::Fail } else { Status::Pass };
        Certificate { case: case.map(str::to_string), checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {} — {}", c.status.tag(), c.id, c.paper_ref)?;
        }
        Ok(())
    }
}

/// Collects checks, timing each one. A check that returns an error fails
/// with the error text as its detail.
#[derive(Debug, Default)]
pub struct CheckRunner {
    checks: Vec<Check>,
}

impl CheckRunner {
    pub fn new() -> CheckRunner {
        CheckRunner::default()
    }

    pub fn run(&mut self, id: &str, paper_ref: &str, f: impl FnOnce() -> Result<(bool, String)>) -> bool {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.checks.push(Check {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status,
            detail,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
        status == Status::Pass
    }

    pub fn skip(&mut self, id: &str, paper_ref: &str, detail: &str) {
        self.checks.push(Check {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: Status::Skipped,
            detail: detail.to_string(),
            elapsed_ms: 0,
        });
    }

    pub fn finish(self, case: &str) -> Certificate {
        Certificate::new(Some(case), self.checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn empty_certificate_passes() {
        let c = Certificate::new(None, vec![]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"checks":[],"overall":"pass"}"#);
    }

    #[test]
    fn any_failure_fails_overall() {
        let mut r = CheckRunner::new();
        r.run("a", "x", || Ok((true, String::new())));
        r.skip("b", "y", "fast mode");
        assert!(r.checks.iter().all(|c| c.status != Status::Fail));
        r.run("c", "z", || Err(Error::UnknownCase("q".into())));
        let cert = r.finish("demo");
        assert_eq!(cert.overall, Status::Fail);
        assert!(cert.check("c").unwrap().detail.contains("q"));
        assert_eq!(cert.to_string().lines().next().unwrap(), "[PASS] a — x");
    }

    #[test]
    fn json_key_order_is_stable() {
        let mut r = CheckRunner::new();
        r.run("a", "x", || Ok((true, "d".into())));
        let json = serde_json::to_string(&r.finish("k")).unwrap();
        let keys = [
            "\"case\"",
            "\"checks\"",
            "\"id\"",
            "\"paper_ref\"",
            "\"status\"",
            "\"detail\"",
            "\"elapsed_ms\"",
            "\"overall\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
    }
}
