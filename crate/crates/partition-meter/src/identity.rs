//! The large-parts identities: `2p(n) - 1` equals the sum of
//! `floor((a_{k-1} + a_k) / (a_{k-1} + 1))` over all partitions of `n`, and
//! its general-`m` form with the `floor(n(1-m)/m)` correction term.
//!
//! In the general form the correction term pairs with a sum over
//! `sac(n, m)`; summing over all of `sac(n)` instead fails numerically for
//! `m >= 2`. This module implements the valid reading and keeps the literal
//! `sac(n)` variant around to demonstrate the discrepancy.

use crate::composition::{large_parts_term_of, visit, SacParams};
use crate::counting::{CountError, CountValue, MemoTable};
use crate::report::{ReportRow, VerificationReport};

/// Sum of the large-parts term over all of `sac(n, m)`, by iteration.
pub fn large_parts_sum(params: SacParams) -> Result<CountValue, CountError> {
    let mut total: u128 = 0;
    let mut overflow = false;
    visit(params, |parts| {
        if overflow {
            return;
        }
        match total.checked_add(large_parts_term_of(parts) as u128) {
            Some(t) => total = t,
            None => overflow = true,
        }
    });
    if overflow {
        return Err(CountError::Overflow);
    }
    Ok(CountValue::new(total))
}

/// Floor division rounding toward negative infinity; `b` must be positive.
/// Needed because `n(1 - m)` is negative for `m > 1` and truncation would
/// round the wrong way.
pub fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// One row of the main-identity sweep: `large_parts_sum(n, 1) = 2p(n) - 1`.
pub fn eq1_row(table: &mut MemoTable, n: u64) -> Result<ReportRow, CountError> {
    let params = SacParams::new(n, 1).expect("n >= 1");
    let lhs = large_parts_sum(params)?;
    let rhs = table.partition_count(n)?.double_minus_one()?;
    Ok(ReportRow {
        n,
        m: 1,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

pub fn verify_eq1(max_n: u64) -> Result<VerificationReport, CountError> {
    let mut table = MemoTable::new();
    let mut report = VerificationReport::new();
    for n in 1..=max_n {
        report.push(eq1_row(&mut table, n)?);
    }
    Ok(report)
}

fn general_row(
    table: &mut MemoTable,
    n: u64,
    m: u64,
    sum: CountValue,
) -> Result<ReportRow, CountError> {
    let params = SacParams::new(n, m).expect("1 <= m <= n");
    let lhs = table.nac(params)?.double_minus_one()?;
    let correction = floor_div(n as i128 * (1 - m as i128), m as i128);
    let sum_i = i128::try_from(sum.get()).map_err(|_| CountError::Overflow)?;
    let rhs_i = correction.checked_add(sum_i).ok_or(CountError::Overflow)?;
    let rhs = u128::try_from(rhs_i)
        .map(CountValue::new)
        .map_err(|_| CountError::Overflow)?;
    Ok(ReportRow {
        n,
        m,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

/// General-identity rows for one `n`, all `m`, with the sum over `sac(n, m)`.
pub fn eq6_rows(table: &mut MemoTable, n: u64) -> Result<Vec<ReportRow>, CountError> {
    let mut rows = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let params = SacParams::new(n, m).expect("1 <= m <= n");
        let sum = large_parts_sum(params)?;
        rows.push(general_row(table, n, m, sum)?);
    }
    Ok(rows)
}

/// General identity, `sac(n, m)` summation domain: expected to pass for every
/// `1 <= m <= n <= max_n`.
pub fn verify_eq6(max_n: u64) -> Result<VerificationReport, CountError> {
    let mut table = MemoTable::new();
    let mut report = VerificationReport::new();
    for n in 1..=max_n {
        for row in eq6_rows(&mut table, n)? {
            report.push(row);
        }
    }
    Ok(report)
}

/// General-identity rows with the sum taken literally over all of `sac(n)`
/// regardless of `m`. Coincides with [`eq6_rows`] at `m = 1` and fails for
/// some `m >= 2`; kept as the demonstration of the ambiguity.
pub fn eq6_literal_rows(table: &mut MemoTable, n: u64) -> Result<Vec<ReportRow>, CountError> {
    let full_sum = large_parts_sum(SacParams::new(n, 1).expect("n >= 1"))?;
    let mut rows = Vec::with_capacity(n as usize);
    for m in 1..=n {
        rows.push(general_row(table, n, m, full_sum)?);
    }
    Ok(rows)
}

pub fn verify_eq6_literal(max_n: u64) -> Result<VerificationReport, CountError> {
    let mut table = MemoTable::new();
    let mut report = VerificationReport::new();
    for n in 1..=max_n {
        for row in eq6_literal_rows(&mut table, n)? {
            report.push(row);
        }
    }
    Ok(report)
}
