//! Sequence selectors, default horizons, and table construction with the
//! on-disk cache.

use std::fs;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use bocheck::seqgen::{
    expand_euler_product, load_terms, parse_terms, partition_pentagonal, render_terms,
};
use bocheck::{SeqTable, SequenceKind, SequenceSource, SequenceSpec};

use crate::CliError;

/// What `--seq` accepts: a builtin name or `file:PATH`.
#[derive(Clone, Debug)]
pub enum Selector {
    Builtin(SequenceKind),
    File(PathBuf),
}

impl Selector {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(CliError::Usage("file: selector needs a path".into()));
            }
            return Ok(Selector::File(PathBuf::from(path)));
        }
        if let Some(k) = s.strip_prefix("regular:") {
            let k: u32 = k
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid regular:k selector {s:?}")))?;
            if k < 2 {
                return Err(CliError::Usage(format!(
                    "regular:k requires k >= 2 (got {k})"
                )));
            }
            return Ok(Selector::Builtin(SequenceKind::Regular(k)));
        }
        match s {
            "partition" => Ok(Selector::Builtin(SequenceKind::Partition)),
            "plane" => Ok(Selector::Builtin(SequenceKind::PlanePartition)),
            "overpartition" => Ok(Selector::Builtin(SequenceKind::Overpartition)),
            other => Err(CliError::Usage(format!(
                "unknown sequence {other:?} (expected partition|plane|overpartition|regular:k|file:PATH)"
            ))),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Selector::Builtin(kind) => kind.label(),
            Selector::File(path) => format!("file:{}", path.display()),
        }
    }

    /// Horizon used when `--n`/`--horizon` is not given: large enough to
    /// contain every rectangle and boundary band worth looking at, small
    /// enough for seconds-scale runs. File tables use their own length.
    pub fn default_horizon(&self) -> Option<usize> {
        match self {
            Selector::Builtin(SequenceKind::Partition)
            | Selector::Builtin(SequenceKind::Overpartition) => Some(200),
            Selector::Builtin(SequenceKind::PlanePartition)
            | Selector::Builtin(SequenceKind::Regular(_)) => Some(150),
            Selector::File(_) => None,
        }
    }
}

fn cache_file(dir: &Path, kind: &SequenceKind, n: usize) -> PathBuf {
    let stem = kind.label().replace(':', "");
    dir.join(format!("{stem}.n{n}.terms"))
}

fn generate(kind: &SequenceKind, n: usize) -> Result<SeqTable, CliError> {
    match kind {
        SequenceKind::Partition => Ok(partition_pentagonal(n)),
        other => Ok(expand_euler_product(other.clone(), n)?),
    }
}

/// Reads a cached table, keeping the builtin spec (name and provenance must
/// not depend on whether the cache was hit).
fn read_cache(path: &Path, kind: &SequenceKind, n: usize) -> Option<SeqTable> {
    let file = File::open(path).ok()?;
    let terms = parse_terms(BufReader::new(file)).ok()?;
    if terms.len() != n + 1 {
        return None;
    }
    let source = match kind {
        SequenceKind::Partition => SequenceSource::PentagonalPartition,
        other => SequenceSource::EulerProduct(other.clone()),
    };
    SeqTable::new(
        SequenceSpec {
            name: kind.label(),
            source,
            n_max: n,
        },
        terms,
    )
    .ok()
}

/// Builds the requested table, consulting and refreshing the cache for
/// builtin sequences. `n` is the top index (the table holds `0..=n`).
pub fn build_table(
    selector: &Selector,
    n: Option<usize>,
    cache_dir: Option<&Path>,
) -> Result<SeqTable, CliError> {
    match selector {
        Selector::File(path) => {
            let table = load_terms(path).map_err(CliError::from_data)?;
            match n {
                Some(n) if n != table.max_index() => table.truncated(n).map_err(|_| {
                    CliError::Usage(format!(
                        "terms file {} has max index {}, requested {n}",
                        path.display(),
                        table.max_index()
                    ))
                }),
                _ => Ok(table),
            }
        }
        Selector::Builtin(kind) => {
            let n = n
                .or_else(|| selector.default_horizon())
                .expect("builtins have a default");
            if let Some(dir) = cache_dir {
                let path = cache_file(dir, kind, n);
                if let Some(table) = read_cache(&path, kind, n) {
                    return Ok(table);
                }
                let table = generate(kind, n)?;
                fs::create_dir_all(dir).map_err(CliError::from_io)?;
                fs::write(&path, render_terms(&table)).map_err(CliError::from_io)?;
                Ok(table)
            } else {
                generate(kind, n)
            }
        }
    }
}
