//! Verification reports: exact case totals plus a bounded list of witnesses.

use serde::{Deserialize, Serialize};
use std::fmt;

pub const DEFAULT_WITNESS_LIMIT: usize = 10;

/// Parameters of the algebra a report was produced for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "algebra")]
pub enum AlgebraParams {
    #[serde(rename = "gl")]
    Gl { m1: usize, m2: usize, n1: usize, n2: usize },
    #[serde(rename = "osp")]
    Osp { m1: usize, m2: usize, n: usize },
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraParams::Gl { m1, m2, n1, n2 } => write!(f, "gl({m1},{m2}|{n1},{n2})"),
            AlgebraParams::Osp { m1, m2, n } => {
                write!(f, "osp({},{}|{},0)", 2 * m1 + 1, 2 * m2, 2 * n)
            }
        }
    }
}

/// One failing case: which indices/signs, and both sides rendered exactly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification suite.
///
/// `total_cases` always counts every enumerated case; `witnesses` is capped at
/// the witness limit but `failures` is the exact failure count. A suite with
/// zero cases is `vacuous` and is never evidence of anything.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: AlgebraParams,
    pub total_cases: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    pub witness_limit: usize,
    pub vacuous: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, params: AlgebraParams, witness_limit: usize) -> Self {
        VerificationReport {
            suite: suite.into(),
            params,
            total_cases: 0,
            failures: 0,
            witnesses: Vec::new(),
            witness_limit,
            vacuous: false,
        }
    }

    pub fn record_pass(&mut self) {
        self.total_cases += 1;
    }

    pub fn record_failure(&mut self, case: String, lhs: String, rhs: String) {
        self.total_cases += 1;
        self.failures += 1;
        if self.witnesses.len() < self.witness_limit {
            self.witnesses.push(Witness { case, lhs, rhs });
        }
    }

    /// Mark vacuous if no cases were enumerated. Call once after the sweep.
    pub fn finish(mut self) -> Self {
        self.vacuous = self.total_cases == 0;
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn summary_line(&self) -> String {
        let status = if self.vacuous {
            "VACUOUS"
        } else if self.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        format!(
            "{status:8} {suite:24} {params}  cases={total} failures={fail}",
            suite = self.suite,
            params = self.params,
            total = self.total_cases,
            fail = self.failures,
        )
    }
}
