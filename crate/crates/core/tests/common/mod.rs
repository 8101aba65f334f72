//! Independent oracles for the generator tests.
//!
//! Everything in this module counts combinatorial objects directly —
//! recursive enumeration of partitions, overline choices, and row-stacked
//! plane partitions — or multiplies the generating product out factor by
//! factor. None of it shares code (or the logarithmic-derivative
//! recurrence) with the engine under test.
#![allow(dead_code)] // each test target uses its own subset

use std::collections::HashMap;

use num::bigint::BigInt;
use num::traits::{One, Zero};

/// Counts partitions of `n` with parts at most `max_part` that satisfy
/// `allowed`, by plain recursive enumeration.
fn count_filtered(n: usize, max_part: usize, allowed: &dyn Fn(usize) -> bool) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for part in 1..=max_part.min(n) {
        if allowed(part) {
            total += count_filtered(n - part, part, allowed);
        }
    }
    total
}

/// p(n) by enumeration.
pub fn enumerate_partitions(n: usize) -> u64 {
    count_filtered(n, n.max(1), &|_| true)
}

/// Partitions of `n` with no part divisible by `k`, by enumeration.
pub fn enumerate_regular(n: usize, k: usize) -> u64 {
    count_filtered(n, n.max(1), &|part| part % k != 0)
}

/// Overpartitions of `n`: enumerate ordinary partitions and give each one
/// weight `2^(number of distinct part sizes)` — the choices of overlining
/// the first occurrence of each part.
pub fn enumerate_overpartitions(n: usize) -> u64 {
    fn rec(n: usize, max_part: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for part in 1..=max_part.min(n) {
            // part occurs with some multiplicity j >= 1; the size counts as
            // one distinct part either way, doubling the overline choices
            let mut used = part;
            while used <= n {
                total += 2 * rec(n - used, part - 1);
                used += part;
            }
        }
        total
    }
    rec(n, n.max(1))
}

/// Memo for the plane-partition enumeration, keyed by (packed normalized
/// bounding row, remaining weight).
pub type PlaneMemo = HashMap<([u64; 4], u8), u64>;

/// Plane partitions of `n`: rows are partitions, each row fitting
/// componentwise under the row above (that is exactly column
/// non-increase). Enumerates rows top-down with memoization on
/// (bounding row, remaining weight).
pub fn enumerate_plane_partitions(n: usize, memo: &mut PlaneMemo) -> u64 {
    assert!(n <= 63, "packed keys hold 6-bit entries");
    if n == 0 {
        return 1;
    }
    let top = vec![n as u8; n];
    stack_rows(&top, n, memo)
}

/// Packs the bound into a fixed-size key, normalized for the remaining
/// weight: entries above `rem` act exactly like `rem` (one cell can never
/// hold more) and positions past `rem` are unreachable (every cell weighs
/// at least 1), so capping both collapses equivalent states.
fn pack_bound(bound: &[u8], rem: usize) -> [u64; 4] {
    let mut key = [0u64; 4];
    for (i, &b) in bound.iter().take(rem).enumerate() {
        let v = u64::from(b.min(rem as u8));
        key[i / 10] |= v << (6 * (i % 10));
    }
    key
}

/// Ways to write `rem` as a stack of nonempty rows, each componentwise
/// `<= bound` and each `<=` its predecessor.
fn stack_rows(bound: &[u8], rem: usize, memo: &mut PlaneMemo) -> u64 {
    if rem == 0 {
        return 1;
    }
    if bound.is_empty() {
        return 0;
    }
    let key = (pack_bound(bound, rem), rem as u8);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut row: Vec<u8> = Vec::with_capacity(rem.min(bound.len()));
    let total = extend_row(bound, rem, 0, &mut row, memo);
    memo.insert(key, total);
    total
}

/// Builds the next row left to right; every completed nonempty prefix is a
/// candidate row, after which the remaining weight recurses with that row
/// as the new bound.
fn extend_row(
    bound: &[u8],
    rem: usize,
    used: usize,
    row: &mut Vec<u8>,
    memo: &mut PlaneMemo,
) -> u64 {
    let mut total = 0;
    if !row.is_empty() {
        total += stack_rows(&row[..], rem - used, memo);
    }
    let pos = row.len();
    if pos < bound.len() {
        let cap = if pos == 0 {
            bound[0]
        } else {
            bound[pos].min(row[pos - 1])
        };
        for v in 1..=cap {
            let next_used = used + v as usize;
            if next_used > rem {
                break;
            }
            row.push(v);
            total += extend_row(bound, rem, next_used, row, memo);
            row.pop();
        }
    }
    total
}

/// pp(0..=n_max) through the colored-parts model: expanding
/// `(1-q^j)^{-j}` combinatorially, a part of size `j` carries one of `j`
/// colors, and a multiset of `m` same-size parts can be colored
/// `C(j+m-1, m)` ways. No divisor sums, no series arithmetic.
pub fn plane_colored_parts(n_max: usize) -> Vec<u64> {
    let binom = pascal(2 * n_max + 2);
    let mut f = vec![0u128; n_max + 1];
    f[0] = 1;
    for j in (1..=n_max).rev() {
        let mut g = vec![0u128; n_max + 1];
        for rem in 0..=n_max {
            let mut m = 0;
            while j * m <= rem {
                let ways = if m == 0 { 1 } else { binom[j + m - 1][m] };
                g[rem] += ways * f[rem - j * m];
                m += 1;
            }
        }
        f = g;
    }
    f.into_iter()
        .map(|v| u64::try_from(v).expect("fits u64"))
        .collect()
}

fn pascal(rows: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![1u128]];
    for r in 1..rows {
        let prev = &t[r - 1];
        let mut row = vec![1u128; r + 1];
        for c in 1..r {
            row[c] = prev[c - 1] + prev[c];
        }
        t.push(row);
    }
    t
}

/// Third route: multiply `prod (1 - q^d)^{-c_d}` out directly, one
/// geometric factor at a time (each factor is a prefix-sum pass; no
/// divisor sums, no division).
pub fn series_product(exponent: impl Fn(u64) -> u64, n_max: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); n_max + 1];
    a[0] = BigInt::one();
    for d in 1..=n_max {
        for _ in 0..exponent(d as u64) {
            for i in d..=n_max {
                let add = a[i - d].clone();
                a[i] += add;
            }
        }
    }
    a
}

pub fn table_as_u64(table: &bocheck::SeqTable) -> Vec<u64> {
    table
        .terms()
        .iter()
        .map(|t| {
            assert!(t.is_integer(), "expected integer term, got {t}");
            t.numer().to_string().parse().expect("term fits u64")
        })
        .collect()
}
