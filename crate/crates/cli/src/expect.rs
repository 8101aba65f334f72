//! Expected-exceptions files: the golden lists that turn a residual sweep
//! into a pass/fail gate. One `m n REL` triple per line (`REL` is `LT` or
//! `EQ`), `#` comments and blank lines ignored; pairs are normalized to
//! canonical `m <= n` order and sorted.

use std::cmp::Ordering;
use std::fs;
use std::path::Path;

use bocheck::verify::BoReport;

use crate::CliError;

pub type Exception = (usize, usize, Ordering);

pub fn load_expected(path: &Path) -> Result<Vec<Exception>, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::from_io)?;
    let mut out: Vec<Exception> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |reason: &str| {
            CliError::Io(format!(
                "{} line {}: {reason}",
                path.display(),
                lineno + 1
            ))
        };
        if fields.len() != 3 {
            return Err(bad("expected \"m n LT|EQ\""));
        }
        let m: usize = fields[0].parse().map_err(|_| bad("invalid m"))?;
        let n: usize = fields[1].parse().map_err(|_| bad("invalid n"))?;
        let rel = match fields[2] {
            "LT" => Ordering::Less,
            "EQ" => Ordering::Equal,
            _ => return Err(bad("relation must be LT or EQ")),
        };
        out.push((m.min(n), m.max(n), rel));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn sweep_exceptions(report: &BoReport) -> Vec<Exception> {
    report
        .exceptions()
        .iter()
        .map(|p| (p.m, p.n, p.relation))
        .collect()
}

/// Differences between the computed exception list and the expected one.
pub struct ExpectDiff {
    pub missing: Vec<Exception>,    // expected but not found
    pub unexpected: Vec<Exception>, // found but not expected
}

impl ExpectDiff {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn compare(found: &[Exception], expected: &[Exception]) -> ExpectDiff {
    ExpectDiff {
        missing: expected
            .iter()
            .filter(|e| !found.contains(e))
            .copied()
            .collect(),
        unexpected: found
            .iter()
            .filter(|e| !expected.contains(e))
            .copied()
            .collect(),
    }
}
