//! Row-per-case verification reports shared by the identity and
//! suffix-metric sweeps.

use crate::counting::CountValue;

/// One checked case: both sides are recorded even on failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportRow {
    pub n: u64,
    pub m: u64,
    pub lhs: CountValue,
    pub rhs: CountValue,
    pub pass: bool,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn find(&self, n: u64, m: u64) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.n == n && r.m == m)
    }
}
