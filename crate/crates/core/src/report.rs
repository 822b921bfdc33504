//! Machine-readable outcome of one identity check.

use std::time::Duration;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};

/// Result of running one named check over an inclusive range of `n`.
///
/// A witness is attached exactly when the check failed; it is an arbitrary
/// JSON payload naming the failing `n` and whatever object broke the
/// identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    /// Inclusive `[lo, hi]`.
    pub n_range: (u32, u32),
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn pass(check_name: &str, n_range: (u32, u32), elapsed: Duration) -> Self {
        VerificationReport {
            check_name: check_name.to_owned(),
            n_range,
            passed: true,
            witness: None,
            timing_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn fail(
        check_name: &str,
        n_range: (u32, u32),
        witness: serde_json::Value,
        elapsed: Duration,
    ) -> Self {
        VerificationReport {
            check_name: check_name.to_owned(),
            n_range,
            passed: false,
            witness: Some(witness),
            timing_ms: elapsed.as_millis() as u64,
        }
    }

    /// One human line: `PASS name n=lo..hi (12 ms)`.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let (lo, hi) = self.n_range;
        let range = if lo == hi { format!("n={lo}") } else { format!("n={lo}..{hi}") };
        format!("{status} {} {range} ({} ms)", self.check_name, self.timing_ms)
    }
}

/// Serializes big integers as decimal strings (the convention used by every
/// JSON surface of this crate).
pub fn bigints_as_strings<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(v.iter().map(|c| c.to_string()))
}
