//! Term-table generation.
//!
//! One Euler-product engine covers every builtin sequence. For
//! `F(q) = prod_{d>=1} (1 - q^d)^{-c_d}` the logarithmic derivative gives
//! the convolution recurrence
//!
//! ```text
//! n * a(n) = sum_{k=1}^{n} b(k) * a(n-k),    b(k) = sum_{d|k} d * c_d,
//! ```
//!
//! with `a(0) = 1`. For integer exponent rules every `a(n)` is an integer,
//! so the division by `n` must be exact; a remainder is reported as an
//! internal failure rather than silently truncated.
//!
//! Builtin exponent rules:
//!
//! * partitions: `c_d = 1`
//! * plane partitions: `c_d = d`
//! * overpartitions: `c_d = 2` for odd `d`, `1` for even `d`, from the
//!   identity `(1+q^n)/(1-q^n) = (1-q^{2n})/(1-q^n)^2`
//! * k-regular partitions: `c_d = 1` when `k` does not divide `d`, else `0`
//!
//! The pentagonal-number recurrence is kept as a faster path for plain
//! partition numbers, and explicit term tables can be loaded from disk
//! (lines of `index value`, the value in the `ExactRational` text encoding).

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num::bigint::BigInt;
use num::traits::{One, Zero};
use num::Integer;

use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// A builtin Euler-product exponent rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    Partition,
    PlanePartition,
    Overpartition,
    /// Partitions with no part divisible by `k` (requires `k >= 2`).
    Regular(u32),
}

impl SequenceKind {
    /// Exponent `c_d` of `(1 - q^d)^{-c_d}` in the generating product.
    pub fn exponent(&self, d: u64) -> u64 {
        match self {
            SequenceKind::Partition => 1,
            SequenceKind::PlanePartition => d,
            SequenceKind::Overpartition => {
                if d % 2 == 1 {
                    2
                } else {
                    1
                }
            }
            SequenceKind::Regular(k) => {
                if d.is_multiple_of(u64::from(*k)) {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            SequenceKind::Partition => "partition".into(),
            SequenceKind::PlanePartition => "plane".into(),
            SequenceKind::Overpartition => "overpartition".into(),
            SequenceKind::Regular(k) => format!("regular:{k}"),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SequenceKind::Regular(k) if *k < 2 => Err(Error::InvalidRegularK(*k)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// How a table was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSource {
    EulerProduct(SequenceKind),
    PentagonalPartition,
    ExplicitTerms(PathBuf),
    /// Tables built from other tables (beta extensions, ad-hoc test data).
    Derived(String),
}

/// Declarative description of a table: name, provenance, and length.
/// A spec with `n_max = N` describes the `N + 1` terms `alpha(0..=N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    pub name: String,
    pub source: SequenceSource,
    pub n_max: usize,
}

/// Immutable dense table of positive terms `alpha(0..=n_max)`.
///
/// Positivity of every term is checked once at construction; all downstream
/// operations rely on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTable {
    spec: SequenceSpec,
    terms: Vec<ExactRational>,
}

impl SeqTable {
    pub fn new(spec: SequenceSpec, terms: Vec<ExactRational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::NoTerms);
        }
        for (index, t) in terms.iter().enumerate() {
            if !t.is_positive() {
                return Err(Error::NonPositiveTerm { index });
            }
        }
        debug_assert!(terms.iter().all(ExactRational::is_canonical));
        debug_assert_eq!(spec.n_max, terms.len() - 1);
        Ok(Self { spec, terms })
    }

    /// Ad-hoc table from raw terms (derived data, test sequences).
    pub fn from_terms(name: &str, terms: Vec<ExactRational>) -> Result<Self> {
        let spec = SequenceSpec {
            name: name.to_string(),
            source: SequenceSource::Derived(name.to_string()),
            n_max: terms.len().saturating_sub(1),
        };
        Self::new(spec, terms)
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    /// Largest index present; the table holds `alpha(0..=max_index())`.
    pub fn max_index(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty tables
    }

    pub fn term(&self, index: usize) -> Result<&ExactRational> {
        self.terms.get(index).ok_or(Error::IndexOutOfRange {
            index,
            max: self.max_index(),
        })
    }

    pub fn get(&self, index: usize) -> Option<&ExactRational> {
        self.terms.get(index)
    }

    pub fn terms(&self) -> &[ExactRational] {
        &self.terms
    }

    /// Shortens the table to `alpha(0..=n_max)`.
    pub fn truncated(&self, n_max: usize) -> Result<Self> {
        if n_max > self.max_index() {
            return Err(Error::IndexOutOfRange {
                index: n_max,
                max: self.max_index(),
            });
        }
        let mut spec = self.spec.clone();
        spec.n_max = n_max;
        Ok(Self {
            spec,
            terms: self.terms[..=n_max].to_vec(),
        })
    }
}

/// Sum of the e-th powers of the divisors of `k`.
pub fn divisor_power_sum(k: u64, e: u32) -> BigInt {
    let mut sum = BigInt::zero();
    let mut d = 1u64;
    while d * d <= k {
        if k.is_multiple_of(d) {
            sum += BigInt::from(d).pow(e);
            let other = k / d;
            if other != d {
                sum += BigInt::from(other).pow(e);
            }
        }
        d += 1;
    }
    sum
}

/// `b(k) = sum_{d|k} d * c_d` for `k = 1..=n_max`, by sieving over `d`.
fn weight_table(kind: &SequenceKind, n_max: usize) -> Vec<BigInt> {
    let mut b = vec![BigInt::zero(); n_max + 1];
    for d in 1..=n_max {
        let c = kind.exponent(d as u64);
        if c == 0 {
            continue;
        }
        let w = BigInt::from(d as u64 * c);
        for k in (d..=n_max).step_by(d) {
            b[k] += &w;
        }
    }
    b
}

/// Expands `prod_{d>=1} (1 - q^d)^{-c_d}` to exact coefficients of
/// `q^0 .. q^n_max` using the logarithmic-derivative recurrence.
pub fn expand_euler_product(kind: SequenceKind, n_max: usize) -> Result<SeqTable> {
    kind.validate()?;
    let b = weight_table(&kind, n_max);
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    a.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if !b[k].is_zero() {
                acc += &b[k] * &a[n - k];
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::InexactRecurrence { n });
        }
        a.push(q);
    }
    let spec = SequenceSpec {
        name: kind.label(),
        source: SequenceSource::EulerProduct(kind),
        n_max,
    };
    SeqTable::new(spec, a.into_iter().map(ExactRational::from).collect())
}

/// Partition numbers `p(0..=n_max)` via Euler's pentagonal recurrence,
/// `O(n^{3/2})` term additions instead of the generic engine's `O(n^2)`.
pub fn partition_pentagonal(n_max: usize) -> SeqTable {
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    a.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut j = 1usize;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            if j % 2 == 1 {
                acc += &a[n - g1];
                if g2 <= n {
                    acc += &a[n - g2];
                }
            } else {
                acc -= &a[n - g1];
                if g2 <= n {
                    acc -= &a[n - g2];
                }
            }
            j += 1;
        }
        a.push(acc);
    }
    let spec = SequenceSpec {
        name: "partition".into(),
        source: SequenceSource::PentagonalPartition,
        n_max,
    };
    SeqTable::new(spec, a.into_iter().map(ExactRational::from).collect())
        .expect("partition numbers are positive")
}

/// Parses terms-file content: one `index value` pair per line, indices
/// contiguous from 0, values positive. Blank lines and `#` comments are
/// skipped.
pub fn parse_terms<R: BufRead>(reader: R) -> Result<Vec<ExactRational>> {
    let mut terms: Vec<ExactRational> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let s = line.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let lineno = lineno + 1;
        let mut fields = s.split_whitespace();
        let index_tok = fields.next().expect("non-empty line has a field");
        let value_tok = fields.next().ok_or_else(|| Error::TermsParse {
            line: lineno,
            reason: "expected \"index value\"".into(),
        })?;
        if fields.next().is_some() {
            return Err(Error::TermsParse {
                line: lineno,
                reason: "trailing fields after value".into(),
            });
        }
        let index: usize = index_tok.parse().map_err(|_| Error::TermsParse {
            line: lineno,
            reason: format!("invalid index {index_tok:?}"),
        })?;
        if index != terms.len() {
            return Err(Error::IndexGap {
                line: lineno,
                expected: terms.len(),
                found: index,
            });
        }
        let value: ExactRational = value_tok.parse().map_err(|e: Error| Error::TermsParse {
            line: lineno,
            reason: e.to_string(),
        })?;
        if !value.is_positive() {
            return Err(Error::NonPositiveTerm { index });
        }
        terms.push(value);
    }
    if terms.is_empty() {
        return Err(Error::NoTerms);
    }
    Ok(terms)
}

/// Loads a table from a terms file.
pub fn load_terms(path: &Path) -> Result<SeqTable> {
    let file = File::open(path)?;
    let terms = parse_terms(BufReader::new(file))?;
    let spec = SequenceSpec {
        name: path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "terms".into()),
        source: SequenceSource::ExplicitTerms(path.to_path_buf()),
        n_max: terms.len() - 1,
    };
    SeqTable::new(spec, terms)
}

/// Serializes a table in the terms-file format (also the cache format).
pub fn render_terms(table: &SeqTable) -> String {
    let mut out = String::new();
    for (i, t) in table.terms().iter().enumerate() {
        out.push_str(&format!("{i} {t}\n"));
    }
    out
}

pub fn write_terms<W: Write>(table: &SeqTable, mut writer: W) -> std::io::Result<()> {
    writer.write_all(render_terms(table).as_bytes())
}
