//! Run reports: named pass/fail verdicts plus CSV-ready rows, with a stable
//! digest of the inputs so identical runs are byte-identical.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// One named check with its measured and expected values.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
}

impl Verdict {
    /// Pass iff |measured − expected| ≤ tolerance·max(1, |expected|).
    pub fn relative(name: impl Into<String>, measured: f64, expected: f64, tolerance: f64) -> Self {
        let pass = measured.is_finite()
            && (measured - expected).abs() <= tolerance * expected.abs().max(1.0);
        Verdict {
            name: name.into(),
            pass,
            measured,
            expected,
            tolerance,
        }
    }

    /// Pass iff measured ≤ expected + tolerance (one-sided bound check).
    pub fn upper_bound(
        name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
    ) -> Self {
        Verdict {
            name: name.into(),
            pass: measured.is_finite() && measured <= expected + tolerance,
            measured,
            expected,
            tolerance,
        }
    }

    /// Pass iff the given condition held; values recorded for the report.
    pub fn condition(name: impl Into<String>, pass: bool, measured: f64, expected: f64) -> Self {
        Verdict {
            name: name.into(),
            pass,
            measured,
            expected,
            tolerance: 0.0,
        }
    }
}

/// Result of one CLI command: verdicts plus tabular rows for CSV output.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub verdicts: Vec<Verdict>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, input_description: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(input_description.as_bytes());
        RunReport {
            command: command.into(),
            inputs_digest: hex::encode(hasher.finalize()),
            header: Vec::new(),
            rows: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// RFC-4180-style CSV: header row, comma separator, '.' decimal point.
    /// Numeric fields are written by `format_float` with 17 significant
    /// digits, so output is byte-stable for identical inputs.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Verdicts as display lines, one per check.
    pub fn verdict_lines(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .map(|v| {
                format!(
                    "{}: {} (measured {}, expected {}, tolerance {})",
                    v.name,
                    if v.pass { "PASS" } else { "FAIL" },
                    format_float(v.measured),
                    format_float(v.expected),
                    format_float(v.tolerance),
                )
            })
            .collect()
    }
}

/// 17 significant digits, enough to round-trip any f64 unambiguously.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_relative_passes_within_tolerance() {
        assert!(Verdict::relative("x", 10.0 + 1e-10, 10.0, 1e-9).pass);
        assert!(!Verdict::relative("x", 10.1, 10.0, 1e-9).pass);
        assert!(!Verdict::relative("x", f64::NAN, 10.0, 1e-9).pass);
    }

    #[test]
    fn digest_is_stable_and_input_sensitive() {
        let a = RunReport::new("cmd", "seed=0 n=2..4");
        let b = RunReport::new("cmd", "seed=0 n=2..4");
        let c = RunReport::new("cmd", "seed=1 n=2..4");
        assert_eq!(a.inputs_digest, b.inputs_digest);
        assert_ne!(a.inputs_digest, c.inputs_digest);
    }

    #[test]
    fn csv_is_deterministic() {
        let mut r = RunReport::new("cmd", "x");
        r.header = vec!["a".into(), "b".into()];
        r.rows
            .push(vec![format_float(1.0 / 3.0), format_float(2.0)]);
        let once = r.to_csv();
        let twice = r.to_csv();
        assert_eq!(once, twice);
        assert!(once.starts_with("a,b\n"));
    }

    #[test]
    fn float_format_has_17_significant_digits() {
        let s = format_float(std::f64::consts::PI);
        assert!(s.starts_with("3.141592653589793"));
        let back: f64 = s.parse().unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }
}
