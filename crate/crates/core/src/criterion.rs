//! Log-concavity scans and the root-vs-ratio sufficiency criterion.
//!
//! The central question: given a table that is log-concave from some `n0`
//! on, for which pairs `(m, n)` does the super-multiplicative inequality
//! `alpha(m) * alpha(n) > alpha(m+n)` follow? The criterion evaluated here
//! answers with a covered region built from `n0`, the pivot ratio
//! `alpha(n0)/alpha(n0-1)`, and the admissible set of small indices whose
//! `a`-th root `alpha(a)^{1/a}` exceeds that ratio. Pairs outside the
//! covered region fall into a finite residual rectangle (swept exhaustively
//! by the `verify` module) or into uncovered columns, which no claim
//! reaches and which are only ever sampled up to a stated horizon.
//!
//! Everything is evaluated by the exact kernels; strict and weak variants
//! differ only in whether equality counts as passing.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exact::{cmp_root_vs_ratio, cmp_roots, ExactRational};
use crate::par;
use crate::seqgen::{SeqTable, SequenceSpec, SequenceSource};

/// Three-way outcome of a log-concavity test at one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConcavityVerdict {
    /// `alpha(n)^2 > alpha(n-1) * alpha(n+1)`
    Holds,
    /// exact equality
    Equality,
    /// `alpha(n)^2 < alpha(n-1) * alpha(n+1)`
    Fails,
}

impl ConcavityVerdict {
    /// Equality passes in weak mode only; strict demands `Holds`.
    pub fn passes(self, strict: bool) -> bool {
        match self {
            ConcavityVerdict::Holds => true,
            ConcavityVerdict::Equality => !strict,
            ConcavityVerdict::Fails => false,
        }
    }
}

/// Exact comparison of `alpha(n)^2` with `alpha(n-1) * alpha(n+1)`.
/// Equality is reported separately so strict and weak callers share one op.
pub fn log_concave_at(table: &SeqTable, n: usize) -> Result<ConcavityVerdict> {
    if n < 1 || n + 1 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: table.max_index(),
        });
    }
    let lhs = table.term(n)?.square();
    let rhs = table.term(n - 1)? * table.term(n + 1)?;
    Ok(match lhs.cmp(&rhs) {
        Ordering::Greater => ConcavityVerdict::Holds,
        Ordering::Equal => ConcavityVerdict::Equality,
        Ordering::Less => ConcavityVerdict::Fails,
    })
}

/// Per-range log-concavity scan result.
///
/// The frontier is the least `f` such that every `n` in `[f, hi]` passes in
/// the requested mode; it is only certified within the scanned range
/// (`hi + 1` when even the last index fails).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavityReport {
    pub lo: usize,
    pub hi: usize,
    pub strict: bool,
    /// Indices with `alpha(n)^2 < alpha(n-1) * alpha(n+1)`.
    pub failures: Vec<usize>,
    /// Indices with exact equality.
    pub equalities: Vec<usize>,
    pub frontier: usize,
}

impl LogConcavityReport {
    pub fn verdict_at(&self, n: usize) -> ConcavityVerdict {
        if self.failures.binary_search(&n).is_ok() {
            ConcavityVerdict::Fails
        } else if self.equalities.binary_search(&n).is_ok() {
            ConcavityVerdict::Equality
        } else {
            ConcavityVerdict::Holds
        }
    }

    /// True when every scanned index passes in the scan's mode.
    pub fn clean(&self) -> bool {
        self.frontier == self.lo
    }
}

/// Scans `[lo, hi]` and locates the in-range frontier for the given mode.
pub fn scan_log_concavity(
    table: &SeqTable,
    lo: usize,
    hi: usize,
    strict: bool,
) -> Result<LogConcavityReport> {
    if lo < 1 || lo > hi || hi + 1 > table.max_index() {
        return Err(Error::InvalidRange {
            lo,
            hi,
            max: table.max_index(),
        });
    }
    let verdicts = par::map_collect((lo..=hi).collect(), |n| {
        log_concave_at(table, n).expect("index validated")
    });
    let mut failures = Vec::new();
    let mut equalities = Vec::new();
    for (offset, v) in verdicts.iter().enumerate() {
        match v {
            ConcavityVerdict::Fails => failures.push(lo + offset),
            ConcavityVerdict::Equality => equalities.push(lo + offset),
            ConcavityVerdict::Holds => {}
        }
    }
    let mut frontier = hi + 1;
    for (offset, v) in verdicts.iter().enumerate().rev() {
        if v.passes(strict) {
            frontier = lo + offset;
        } else {
            break;
        }
    }
    Ok(LogConcavityReport {
        lo,
        hi,
        strict,
        failures,
        equalities,
        frontier,
    })
}

/// The pivot ratio `alpha(n0) / alpha(n0-1)`.
pub fn pivot_ratio(table: &SeqTable, n0: usize) -> Result<ExactRational> {
    if n0 < 1 || n0 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: n0,
            max: table.max_index(),
        });
    }
    Ok(table.term(n0)? / table.term(n0 - 1)?)
}

/// The root-vs-ratio condition `alpha(n0)^{1/n0} > alpha(n0)/alpha(n0-1)`
/// (`>=` in weak mode), decided exactly.
pub fn root_ratio_condition(table: &SeqTable, n0: usize, strict: bool) -> Result<bool> {
    let ratio = pivot_ratio(table, n0)?;
    let ord = cmp_root_vs_ratio(table.term(n0)?, n0 as u32, &ratio)?;
    Ok(ord == Ordering::Greater || (!strict && ord == Ordering::Equal))
}

/// The admissible set: indices `a` in `[1, n0-2]` with
/// `alpha(a)^{1/a} > alpha(n0)/alpha(n0-1)` (`>=` in weak mode).
/// Empty for `n0 < 3`. Returned ascending.
pub fn admissible_set(table: &SeqTable, n0: usize, strict: bool) -> Result<Vec<usize>> {
    if n0 < 1 || n0 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: n0,
            max: table.max_index(),
        });
    }
    if n0 < 3 {
        return Ok(Vec::new());
    }
    let ratio = pivot_ratio(table, n0)?;
    let members = par::map_collect((1..=n0 - 2).collect(), |a| {
        let ord = cmp_root_vs_ratio(table.term(a).expect("a < n0 <= max"), a as u32, &ratio)
            .expect("terms are positive");
        (a, ord == Ordering::Greater || (!strict && ord == Ordering::Equal))
    });
    Ok(members
        .into_iter()
        .filter_map(|(a, is_in)| is_in.then_some(a))
        .collect())
}

/// Where a pair `(m, n)` sits relative to the criterion's covered region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// Reached by the disjunction: both coordinates `>= n0-1`, or one is in
    /// the admissible set and the other is `>= n0-1`.
    Covered,
    /// Both coordinates `<= n0-2`: inside the finite residual rectangle.
    Residual,
    /// Exactly one coordinate is `<= n0-2` and not admissible: an infinite
    /// strip no claim reaches.
    UncoveredColumn,
}

/// Evaluated criterion for one table and `n0`.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub n0: usize,
    pub strict: bool,
    /// Root-vs-ratio condition verdict; the covered region only carries a
    /// claim when this is true.
    pub condition_holds: bool,
    pub pivot_ratio: ExactRational,
    /// Admissible indices, ascending.
    pub a_set: Vec<usize>,
    /// Indices in `[1, n0-2]` that are not admissible.
    pub uncovered_columns: Vec<usize>,
}

impl CriterionResult {
    /// The finite rectangle `[1, n0-2]^2` left to exhaustive checking,
    /// `None` for the degenerate `n0 < 3`.
    pub fn residual_rectangle(&self) -> Option<(usize, usize)> {
        (self.n0 >= 3).then(|| (1, self.n0 - 2))
    }

    /// When the admissible set is one contiguous run, its bounds.
    pub fn contiguous_a(&self) -> Option<(usize, usize)> {
        let (first, last) = (*self.a_set.first()?, *self.a_set.last()?);
        (last - first + 1 == self.a_set.len()).then_some((first, last))
    }

    /// Classifies a pair (`m, n >= 1`) against the covered region.
    pub fn classify(&self, m: usize, n: usize) -> Coverage {
        let bound = self.n0 - 1; // n0 >= 1 checked at construction
        let m_low = m < bound;
        let n_low = n < bound;
        match (m_low, n_low) {
            (false, false) => Coverage::Covered,
            (true, true) => Coverage::Residual,
            (true, false) => {
                if self.a_set.binary_search(&m).is_ok() {
                    Coverage::Covered
                } else {
                    Coverage::UncoveredColumn
                }
            }
            (false, true) => {
                if self.a_set.binary_search(&n).is_ok() {
                    Coverage::Covered
                } else {
                    Coverage::UncoveredColumn
                }
            }
        }
    }
}

/// Evaluates condition, admissible set, and uncovered columns in one pass.
pub fn evaluate_criterion(table: &SeqTable, n0: usize, strict: bool) -> Result<CriterionResult> {
    let condition_holds = root_ratio_condition(table, n0, strict)?;
    let a_set = admissible_set(table, n0, strict)?;
    let uncovered_columns = if n0 >= 3 {
        (1..=n0 - 2)
            .filter(|a| a_set.binary_search(a).is_err())
            .collect()
    } else {
        Vec::new()
    };
    Ok(CriterionResult {
        n0,
        strict,
        condition_holds,
        pivot_ratio: pivot_ratio(table, n0)?,
        a_set,
        uncovered_columns,
    })
}

/// Geometric backfill below `n0`:
/// `beta(n) = (alpha(n0-1)/alpha(n0))^{n0-n} * alpha(n0)` for `n < n0`,
/// `beta(n) = alpha(n)` from `n0` on. When the root-vs-ratio condition
/// holds, `beta(0) > 1` and the whole table is weakly log-concave wherever
/// the input was from `n0` on, which is what makes the covered region work.
pub fn beta_extension(table: &SeqTable, n0: usize) -> Result<SeqTable> {
    if n0 < 1 || n0 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: n0,
            max: table.max_index(),
        });
    }
    let rho = table.term(n0 - 1)? / table.term(n0)?;
    let mut terms = Vec::with_capacity(table.len());
    for n in 0..table.len() {
        if n < n0 {
            terms.push(&rho.pow((n0 - n) as u32) * table.term(n0)?);
        } else {
            terms.push(table.term(n)?.clone());
        }
    }
    let spec = SequenceSpec {
        name: format!("{}[beta n0={}]", table.name(), n0),
        source: SequenceSource::Derived(format!("beta extension of {} at n0={}", table.name(), n0)),
        n_max: table.max_index(),
    };
    SeqTable::new(spec, terms)
}

/// The single-condition test `alpha(N+k)^{1/(N+k)} >= alpha(N+k+1)^{1/(N+k+1)}`.
pub fn br_condition(table: &SeqTable, big_n: usize, k: usize) -> Result<bool> {
    let i = big_n + k;
    if i < 1 {
        return Err(Error::ZeroRootDegree("br_condition"));
    }
    if i + 1 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: i + 1,
            max: table.max_index(),
        });
    }
    let ord = cmp_roots(
        table.term(i)?,
        i as u32,
        table.term(i + 1)?,
        (i + 1) as u32,
    )?;
    Ok(ord != Ordering::Less)
}

/// The necessary direction: any sequence that is log-concave from `n = 1`
/// and satisfies the weak super-multiplicative inequality must have
/// `alpha(n)^{1/n} >= alpha(n)/alpha(n-1)`. This evaluates that inequality
/// at one index.
pub fn necessary_condition(table: &SeqTable, n: usize) -> Result<bool> {
    let ratio = pivot_ratio(table, n)?;
    let ord = cmp_root_vs_ratio(table.term(n)?, n as u32, &ratio)?;
    Ok(ord != Ordering::Less)
}
