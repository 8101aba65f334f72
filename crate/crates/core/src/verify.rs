//! Exhaustive pair checking and report assembly.
//!
//! Sweeps compare `alpha(m) * alpha(n)` with `alpha(m+n)` exactly, pair by
//! pair. A rectangle sweep is partitioned by row and fanned out over the
//! worker pool; rows are merged back in order and the final lists sorted,
//! so the output is identical at every parallelism level. Relations `<`,
//! `=`, `>` are recorded as-is; whether equality counts as a violation is
//! decided only when a report is summarized.

use std::cmp::Ordering;

use crate::criterion::{
    beta_extension, br_condition, evaluate_criterion, necessary_condition, scan_log_concavity,
    CriterionResult, LogConcavityReport,
};
use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::par;
use crate::seqgen::SeqTable;

/// Exact relation of `alpha(m) * alpha(n)` to `alpha(m+n)` for one pair,
/// stored canonically with `m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub m: usize,
    pub n: usize,
    /// `Greater` means the product exceeds `alpha(m+n)`.
    pub relation: Ordering,
}

/// Compares `alpha(m) * alpha(n)` with `alpha(m+n)`, exactly.
pub fn bo_pair(table: &SeqTable, m: usize, n: usize) -> Result<PairVerdict> {
    if m + n > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: m + n,
            max: table.max_index(),
        });
    }
    let product = table.term(m)? * table.term(n)?;
    let relation = product.cmp(table.term(m + n)?);
    Ok(PairVerdict {
        m: m.min(n),
        n: m.max(n),
        relation,
    })
}

/// Result of sweeping a rectangle of pairs.
///
/// Pairs are deduplicated up to symmetry (a pair and its transpose count
/// once) and listed in ascending `(m, n)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoReport {
    pub m_range: (usize, usize),
    pub n_range: (usize, usize),
    pub strict: bool,
    /// Pairs with `alpha(m) * alpha(n) < alpha(m+n)`.
    pub violations: Vec<PairVerdict>,
    /// Pairs with exact equality.
    pub equalities: Vec<PairVerdict>,
    /// Number of canonical pairs evaluated.
    pub pairs_checked: usize,
}

impl BoReport {
    /// No `<` pairs, and in strict mode no `=` pairs either.
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && (!self.strict || self.equalities.is_empty())
    }

    /// All non-`>` pairs in ascending order: the report's exception list.
    pub fn exceptions(&self) -> Vec<PairVerdict> {
        let mut all: Vec<PairVerdict> = self
            .violations
            .iter()
            .chain(self.equalities.iter())
            .copied()
            .collect();
        all.sort_by_key(|p| (p.m, p.n));
        all
    }
}

fn in_rect(m: usize, n: usize, mr: (usize, usize), nr: (usize, usize)) -> bool {
    m >= mr.0 && m <= mr.1 && n >= nr.0 && n <= nr.1
}

struct RowOutcome {
    violations: Vec<PairVerdict>,
    equalities: Vec<PairVerdict>,
    pairs: usize,
}

fn sweep_row(
    table: &SeqTable,
    m: usize,
    mr: (usize, usize),
    nr: (usize, usize),
) -> RowOutcome {
    let mut out = RowOutcome {
        violations: Vec::new(),
        equalities: Vec::new(),
        pairs: 0,
    };
    let alpha_m = table.term(m).expect("row validated");
    for n in nr.0..=nr.1 {
        // Count each unordered pair once: when the transposed orientation
        // also lies in the rectangle, the row holding the smaller index owns
        // the pair.
        if n < m && in_rect(n, m, mr, nr) {
            continue;
        }
        let product = alpha_m * table.term(n).expect("column validated");
        let relation = product.cmp(table.term(m + n).expect("sum validated"));
        out.pairs += 1;
        let verdict = PairVerdict {
            m: m.min(n),
            n: m.max(n),
            relation,
        };
        match relation {
            Ordering::Less => out.violations.push(verdict),
            Ordering::Equal => out.equalities.push(verdict),
            Ordering::Greater => {}
        }
    }
    out
}

fn merge_rows(
    rows: Vec<RowOutcome>,
    m_range: (usize, usize),
    n_range: (usize, usize),
    strict: bool,
) -> BoReport {
    let mut report = BoReport {
        m_range,
        n_range,
        strict,
        violations: Vec::new(),
        equalities: Vec::new(),
        pairs_checked: 0,
    };
    for row in rows {
        report.violations.extend(row.violations);
        report.equalities.extend(row.equalities);
        report.pairs_checked += row.pairs;
    }
    report.violations.sort_by_key(|p| (p.m, p.n));
    report.equalities.sort_by_key(|p| (p.m, p.n));
    report
}

fn validate_rect(table: &SeqTable, mr: (usize, usize), nr: (usize, usize)) -> Result<()> {
    if mr.0 > mr.1 || nr.0 > nr.1 {
        return Err(Error::InvalidRange {
            lo: mr.0.min(nr.0),
            hi: mr.1.max(nr.1),
            max: table.max_index(),
        });
    }
    if mr.1 + nr.1 > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: mr.1 + nr.1,
            max: table.max_index(),
        });
    }
    Ok(())
}

/// Sweeps every pair in `[m_lo, m_hi] x [n_lo, n_hi]`, in parallel when the
/// `parallel` feature is enabled.
pub fn bo_rectangle(
    table: &SeqTable,
    m_lo: usize,
    m_hi: usize,
    n_lo: usize,
    n_hi: usize,
    strict: bool,
) -> Result<BoReport> {
    validate_rect(table, (m_lo, m_hi), (n_lo, n_hi))?;
    let rows = par::map_collect((m_lo..=m_hi).collect(), |m| {
        sweep_row(table, m, (m_lo, m_hi), (n_lo, n_hi))
    });
    Ok(merge_rows(rows, (m_lo, m_hi), (n_lo, n_hi), strict))
}

/// Sequential twin of [`bo_rectangle`], kept unconditionally for
/// determinism tests and benchmarks.
pub fn bo_rectangle_seq(
    table: &SeqTable,
    m_lo: usize,
    m_hi: usize,
    n_lo: usize,
    n_hi: usize,
    strict: bool,
) -> Result<BoReport> {
    validate_rect(table, (m_lo, m_hi), (n_lo, n_hi))?;
    let rows = (m_lo..=m_hi)
        .map(|m| sweep_row(table, m, (m_lo, m_hi), (n_lo, n_hi)))
        .collect();
    Ok(merge_rows(rows, (m_lo, m_hi), (n_lo, n_hi), strict))
}

/// Which implication of the product inequality to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AkkMode {
    /// Log-convex with `alpha(0) <= 1` implies
    /// `alpha(m) * alpha(n) <= alpha(m+n)` (strict `<` when `alpha(0) < 1`).
    LogConvexNormalized,
    /// Log-concave with `alpha(0) > 1` implies strict
    /// `alpha(m) * alpha(n) > alpha(m+n)`.
    LogConcaveGt1,
}

/// Outcome of checking one implication on all pairs `m + n <= n_max`.
///
/// Hypothesis (shape + normalization) and conclusion are reported
/// separately: a failed hypothesis does not excuse skipping the conclusion
/// sweep, it just means the implication claims nothing.
#[derive(Clone, Debug)]
pub struct AkkReport {
    pub mode: AkkMode,
    pub n_max: usize,
    pub alpha0_vs_one: Ordering,
    /// Indices where the required shape (convexity/concavity) fails.
    pub hypothesis_failures: Vec<usize>,
    pub hypothesis_ok: bool,
    /// Pairs where the implied relation fails.
    pub conclusion_failures: Vec<PairVerdict>,
    pub conclusion_ok: bool,
    /// Log-convex mode only: pairs violating the sharper bound
    /// `alpha(m) * alpha(n) <= alpha(0) * alpha(m+n)`.
    pub proof_bound_failures: Option<Vec<PairVerdict>>,
}

/// Verifies hypothesis and conclusion of the chosen implication on all
/// indices and pairs within `n_max`.
pub fn akk_check(table: &SeqTable, n_max: usize, mode: AkkMode) -> Result<AkkReport> {
    if n_max > table.max_index() || n_max < 2 {
        return Err(Error::InvalidRange {
            lo: 2,
            hi: n_max,
            max: table.max_index(),
        });
    }
    let alpha0 = table.term(0)?;
    let alpha0_vs_one = alpha0.cmp_one();

    let mut hypothesis_failures = Vec::new();
    for n in 1..=n_max - 1 {
        let lhs = table.term(n)?.square();
        let rhs = table.term(n - 1)? * table.term(n + 1)?;
        let bad = match mode {
            AkkMode::LogConvexNormalized => lhs > rhs,
            AkkMode::LogConcaveGt1 => lhs < rhs,
        };
        if bad {
            hypothesis_failures.push(n);
        }
    }
    let normalization_ok = match mode {
        AkkMode::LogConvexNormalized => alpha0_vs_one != Ordering::Greater,
        AkkMode::LogConcaveGt1 => alpha0_vs_one == Ordering::Greater,
    };
    let hypothesis_ok = normalization_ok && hypothesis_failures.is_empty();

    // Expected relation of product vs alpha(m+n) per mode.
    let expect = |rel: Ordering| -> bool {
        match mode {
            AkkMode::LogConvexNormalized => {
                if alpha0_vs_one == Ordering::Less {
                    rel == Ordering::Less
                } else {
                    rel != Ordering::Greater
                }
            }
            AkkMode::LogConcaveGt1 => rel == Ordering::Greater,
        }
    };

    struct AkkRow {
        conclusion: Vec<PairVerdict>,
        bound: Vec<PairVerdict>,
    }
    let check_bound = mode == AkkMode::LogConvexNormalized;
    let rows = par::map_collect((0..=n_max / 2).collect(), |m| {
        let mut row = AkkRow {
            conclusion: Vec::new(),
            bound: Vec::new(),
        };
        let alpha_m = table.term(m).expect("m <= n_max/2");
        for n in m..=n_max - m {
            let product = alpha_m * table.term(n).expect("n <= n_max");
            let sum_term = table.term(m + n).expect("m + n <= n_max");
            let relation = product.cmp(sum_term);
            if !expect(relation) {
                row.conclusion.push(PairVerdict { m, n, relation });
            }
            if check_bound {
                let bound = alpha0 * sum_term;
                if product > bound {
                    row.bound.push(PairVerdict {
                        m,
                        n,
                        relation: Ordering::Greater,
                    });
                }
            }
        }
        row
    });

    let mut conclusion_failures = Vec::new();
    let mut bound_failures = Vec::new();
    for row in rows {
        conclusion_failures.extend(row.conclusion);
        bound_failures.extend(row.bound);
    }
    conclusion_failures.sort_by_key(|p| (p.m, p.n));
    bound_failures.sort_by_key(|p| (p.m, p.n));

    Ok(AkkReport {
        mode,
        n_max,
        alpha0_vs_one,
        hypothesis_ok,
        hypothesis_failures,
        conclusion_ok: conclusion_failures.is_empty(),
        conclusion_failures,
        proof_bound_failures: check_bound.then_some(bound_failures),
    })
}

/// Verdict tallies for one uncovered column, sampled up to the horizon.
#[derive(Clone, Debug)]
pub struct ColumnReport {
    pub a: usize,
    /// The sampled range of second coordinates `[n0-1, horizon - a]`.
    pub n_range: (usize, usize),
    pub lt: usize,
    pub eq: usize,
    pub gt: usize,
    /// First few non-`>` pairs, for the report.
    pub sample: Vec<PairVerdict>,
}

/// Diagnostics for the geometric backfill used to justify the covered
/// region.
#[derive(Clone, Debug)]
pub struct BetaDiagnostics {
    pub beta0: ExactRational,
    pub beta0_vs_one: Ordering,
    pub scan: LogConcavityReport,
    /// Strict product inequality on all pairs within the horizon; only
    /// attempted when `beta0 > 1`.
    pub akk: Option<AkkReport>,
}

/// Result of the necessary-direction sweep.
#[derive(Clone, Debug)]
pub struct NecessaryReport {
    pub range: (usize, usize),
    pub failures: Vec<usize>,
}

/// Everything the tool can say about one sequence at one `n0`: frontier
/// scan, criterion evaluation, residual sweep, uncovered-column samples,
/// backfill diagnostics, and the necessary-direction sweep.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub sequence: String,
    pub horizon: usize,
    pub n0: usize,
    pub strict: bool,
    pub frontier: LogConcavityReport,
    pub criterion: CriterionResult,
    pub br_at_n0: bool,
    pub residual: Option<BoReport>,
    pub uncovered: Vec<ColumnReport>,
    pub beta: BetaDiagnostics,
    pub necessary: NecessaryReport,
}

/// Assembles the full verification report for a table. The table's top
/// index is the horizon; it must reach at least `2 * (n0 - 1)` so the
/// residual rectangle and the near-boundary covered pairs are checkable.
/// Component errors abort the whole report.
pub fn full_report(table: &SeqTable, n0: usize, strict: bool) -> Result<VerificationReport> {
    let horizon = table.max_index();
    // 2*(n0-1) covers the residual rectangle; n0+1 is what the single-index
    // checks at n0 need; 2 is the least scannable table.
    let needed = (2 * n0.saturating_sub(1)).max(n0 + 1).max(2);
    if horizon < needed {
        return Err(Error::HorizonTooSmall {
            horizon,
            n0,
            needed,
        });
    }

    let frontier = scan_log_concavity(table, 1, horizon - 1, strict)?;
    let criterion = evaluate_criterion(table, n0, strict)?;
    let br_at_n0 = br_condition(table, n0, 0)?;

    let residual = match criterion.residual_rectangle() {
        Some((lo, hi)) => Some(bo_rectangle(table, lo, hi, lo, hi, strict)?),
        None => None,
    };

    let bound = n0 - 1;
    let uncovered = criterion
        .uncovered_columns
        .iter()
        .map(|&a| {
            let n_hi = horizon - a;
            let mut col = ColumnReport {
                a,
                n_range: (bound.max(1), n_hi),
                lt: 0,
                eq: 0,
                gt: 0,
                sample: Vec::new(),
            };
            for n in col.n_range.0..=n_hi {
                let verdict = bo_pair(table, a, n).expect("within horizon");
                match verdict.relation {
                    Ordering::Less => col.lt += 1,
                    Ordering::Equal => col.eq += 1,
                    Ordering::Greater => col.gt += 1,
                }
                if verdict.relation != Ordering::Greater && col.sample.len() < 4 {
                    col.sample.push(verdict);
                }
            }
            col
        })
        .collect();

    let beta_table = beta_extension(table, n0)?;
    let beta0 = beta_table.term(0)?.clone();
    let beta0_vs_one = beta0.cmp_one();
    let beta_scan = scan_log_concavity(&beta_table, 1, horizon - 1, false)?;
    let beta_akk = if beta0_vs_one == Ordering::Greater {
        Some(akk_check(&beta_table, horizon, AkkMode::LogConcaveGt1)?)
    } else {
        None
    };

    let mut failures = Vec::new();
    for n in 1..=horizon {
        if !necessary_condition(table, n)? {
            failures.push(n);
        }
    }

    Ok(VerificationReport {
        sequence: table.name().to_string(),
        horizon,
        n0,
        strict,
        frontier,
        criterion,
        br_at_n0,
        residual,
        uncovered,
        beta: BetaDiagnostics {
            beta0,
            beta0_vs_one,
            scan: beta_scan,
            akk: beta_akk,
        },
        necessary: NecessaryReport {
            range: (1, horizon),
            failures,
        },
    })
}
