//! Exact counting of ascending compositions.
//!
//! `nac(n, m) = 1 + sum_{x=m}^{floor(n/2)} nac(n - x, x)` counts the set
//! `sac(n, m)`; `p(n) = nac(n, 1)`. The pentagonal-number recurrence serves
//! as an independent oracle sharing no code with the composition recurrence.

use std::fmt;

use thiserror::Error;

use crate::composition::SacParams;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("count overflowed the supported integer range")]
    Overflow,
    #[error("memo table entry limit ({0}) exceeded")]
    MemoLimit(usize),
}

/// An exact nonnegative count with 128-bit range and overflow-checked
/// arithmetic. Wrapping is never silent: every operation that could exceed
/// the range reports [`CountError::Overflow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountValue(u128);

impl CountValue {
    pub const ZERO: CountValue = CountValue(0);
    pub const ONE: CountValue = CountValue(1);

    pub fn new(value: u128) -> Self {
        CountValue(value)
    }

    pub fn get(&self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: CountValue) -> Result<CountValue, CountError> {
        self.0
            .checked_add(rhs.0)
            .map(CountValue)
            .ok_or(CountError::Overflow)
    }

    /// `2v - 1`, the right-hand side of the suffix-length theorem.
    pub fn double_minus_one(self) -> Result<CountValue, CountError> {
        self.0
            .checked_mul(2)
            .and_then(|v| v.checked_sub(1))
            .map(CountValue)
            .ok_or(CountError::Overflow)
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(v as u128)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Joint memo for the composition-count and suffix-length recurrences.
///
/// Keys are clamped with `m -> min(m, floor(n/2) + 1)`: both recurrences are
/// constant past that point, so one column stands in for the whole tail.
/// Rows are filled bottom-up, never by deep recursion, and every stored value
/// is final once written.
pub struct MemoTable {
    nac_rows: Vec<Vec<u128>>,
    sfl_rows: Vec<Vec<u128>>,
    entry_limit: Option<usize>,
    value_cap: u128,
    entries: usize,
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable {
            nac_rows: Vec::new(),
            sfl_rows: Vec::new(),
            entry_limit: None,
            value_cap: u128::MAX,
            entries: 0,
        }
    }

    /// Cap the total number of memoized entries (both recurrences combined);
    /// a fill that would exceed the cap fails with [`CountError::MemoLimit`].
    pub fn with_entry_limit(mut self, limit: Option<usize>) -> Self {
        self.entry_limit = limit;
        self
    }

    /// Treat any computed value above `cap` as an overflow. Emulates a
    /// narrower integer width for overflow-detection testing.
    pub fn with_value_cap(mut self, cap: u128) -> Self {
        self.value_cap = cap;
        self
    }

    pub fn entries(&self) -> usize {
        self.entries
    }

    /// `nac(n, m) = |sac(n, m)|`.
    pub fn nac(&mut self, params: SacParams) -> Result<CountValue, CountError> {
        let n = params.n() as usize;
        fill_rows(
            &mut self.nac_rows,
            n,
            0,
            self.value_cap,
            &mut self.entries,
            self.entry_limit,
        )?;
        Ok(CountValue(lookup(&self.nac_rows, n, params.m())))
    }

    /// `p(n) = nac(n, 1)`, the partition function.
    pub fn partition_count(&mut self, n: u64) -> Result<CountValue, CountError> {
        let params = SacParams::new(n, 1).expect("n >= 1");
        self.nac(params)
    }

    /// Suffix length `sfl(n, m) = 1 + sum_{x=m}^{floor(n/2)} (sfl(n-x, x) + 1)`.
    pub fn sfl(&mut self, params: SacParams) -> Result<CountValue, CountError> {
        let n = params.n() as usize;
        fill_rows(
            &mut self.sfl_rows,
            n,
            1,
            self.value_cap,
            &mut self.entries,
            self.entry_limit,
        )?;
        Ok(CountValue(lookup(&self.sfl_rows, n, params.m())))
    }
}

// Shared bottom-up fill. Both recurrences have the shape
// f(n, m) = 1 + sum_{x=m}^{floor(n/2)} (f(n - x, x) + bonus),
// with bonus = 0 for nac and 1 for sfl.
fn fill_rows(
    rows: &mut Vec<Vec<u128>>,
    n: usize,
    bonus: u128,
    value_cap: u128,
    entries: &mut usize,
    entry_limit: Option<usize>,
) -> Result<(), CountError> {
    if rows.is_empty() {
        rows.push(Vec::new()); // n = 0 placeholder, never read
    }
    while rows.len() <= n {
        let nn = rows.len();
        let half = nn / 2;
        let width = half + 1;
        if let Some(limit) = entry_limit {
            if *entries + width > limit {
                return Err(CountError::MemoLimit(limit));
            }
        }
        let mut row = Vec::with_capacity(width);
        for mm in 1..=width {
            let mut acc: u128 = 1;
            for x in mm..=half {
                let sub = lookup(rows, nn - x, x as u64);
                acc = acc
                    .checked_add(sub)
                    .and_then(|a| a.checked_add(bonus))
                    .ok_or(CountError::Overflow)?;
            }
            if acc > value_cap {
                return Err(CountError::Overflow);
            }
            row.push(acc);
        }
        *entries += width;
        rows.push(row);
    }
    Ok(())
}

fn lookup(rows: &[Vec<u128>], n: usize, m: u64) -> u128 {
    let clamped = (m as usize).min(n / 2 + 1);
    rows[n][clamped - 1]
}

/// Euler's pentagonal-number recurrence for `p(n)`, computed with its own
/// table and arithmetic. Used only to cross-validate the composition
/// recurrence; the two share no code path.
pub fn pentagonal_oracle(n: u64) -> Result<CountValue, CountError> {
    let n = n as usize;
    let mut table: Vec<i128> = vec![0; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut acc: i128 = 0;
        let mut j: i128 = 1;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i as i128 {
                break;
            }
            let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
            let t1 = table[i - g1 as usize]
                .checked_mul(sign)
                .ok_or(CountError::Overflow)?;
            acc = acc.checked_add(t1).ok_or(CountError::Overflow)?;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= i as i128 {
                let t2 = table[i - g2 as usize]
                    .checked_mul(sign)
                    .ok_or(CountError::Overflow)?;
                acc = acc.checked_add(t2).ok_or(CountError::Overflow)?;
            }
            j += 1;
        }
        table[i] = acc;
    }
    u128::try_from(table[n])
        .map(CountValue::new)
        .map_err(|_| CountError::Overflow)
}
