//! Machine-readable verification records.

use serde::Serialize;

pub const SCHEMA: &str = "leibniz-forge/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A recorded discrepancy or unmet precondition that is not a
    /// mathematical failure; never fails the suite.
    Flagged,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub claim: String,
    pub statement: String,
    pub instance: String,
    pub verdict: Verdict,
    pub evidence: serde_json::Value,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub k_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// claim-id substrings to run; empty runs everything
    pub checks: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_max: 10,
            k_max: 3,
            samples: 5,
            seed: 0,
            checks: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub config: SuiteConfig,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig, records: Vec<VerificationRecord>) -> Self {
        let summary = Summary {
            pass: records.iter().filter(|r| r.verdict == Verdict::Pass).count(),
            fail: records.iter().filter(|r| r.verdict == Verdict::Fail).count(),
            flagged: records
                .iter()
                .filter(|r| r.verdict == Verdict::Flagged)
                .count(),
        };
        Self {
            schema: SCHEMA,
            config,
            records,
            summary,
        }
    }

    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite: n_max={} k_max={} samples={} seed={}\n",
            self.config.n_max, self.config.k_max, self.config.samples, self.config.seed
        ));
        for r in &self.records {
            out.push_str(&format!(
                "[{}] {} :: {} ({} ms)\n",
                match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                    Verdict::Flagged => "flag",
                },
                r.claim,
                r.instance,
                r.wall_ms
            ));
            if r.verdict != Verdict::Pass {
                out.push_str(&format!("       {}\n", r.evidence));
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} flagged\n",
            self.summary.pass, self.summary.fail, self.summary.flagged
        ));
        out
    }
}
