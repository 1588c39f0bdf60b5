//! Suffix length three ways: the recurrence, direct measurement over the
//! generated listing, and the write decomposition through the large-parts
//! term. All three must agree with `2 nac(n, m) - 1`.

use crate::composition::{large_parts_term_of, lexmin, visit, Part, SacParams};
use crate::counting::{CountError, CountValue, MemoTable};
use crate::report::{ReportRow, VerificationReport};

/// Per-transition write values are retained only up to this many steps; the
/// running total is always exact.
pub const TRANSITION_TRACE_CAP: usize = 1_000_000;

/// The writes performed while generating a set in lexicographic order, as
/// observed by diffing adjacent compositions.
#[derive(Debug, Clone)]
pub struct WriteTrace {
    /// Parts written for the first (lexicographically least) composition.
    pub initial_writes: u64,
    /// Writes per successor step, truncated at the trace cap.
    pub transition_writes: Vec<u64>,
    pub compositions_visited: CountValue,
    total: u128,
    truncated: bool,
}

impl WriteTrace {
    pub fn total(&self) -> CountValue {
        CountValue::new(self.total)
    }

    /// True when `transition_writes` was truncated at the cap.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

/// `sfl(n, m)` by the recurrence, memoized in `table`.
pub fn sfl_recurrence(table: &mut MemoTable, params: SacParams) -> Result<CountValue, CountError> {
    table.sfl(params)
}

/// Measure the suffix length directly: generate the listing and count, for
/// each adjacent pair, the parts past the longest common prefix. Independent
/// of the successor plan arithmetic.
pub fn sfl_measured(params: SacParams) -> Result<WriteTrace, CountError> {
    sfl_measured_with_cap(params, TRANSITION_TRACE_CAP)
}

pub fn sfl_measured_with_cap(params: SacParams, cap: usize) -> Result<WriteTrace, CountError> {
    let mut prev: Vec<Part> = Vec::new();
    let mut trace = WriteTrace {
        initial_writes: 0,
        transition_writes: Vec::new(),
        compositions_visited: CountValue::ZERO,
        total: 0,
        truncated: false,
    };
    let mut error = None;
    visit(params, |cur| {
        if error.is_some() {
            return;
        }
        let writes = if prev.is_empty() {
            trace.initial_writes = cur.len() as u64;
            cur.len() as u64
        } else {
            let lcp = prev
                .iter()
                .zip(cur.iter())
                .take_while(|(a, b)| a == b)
                .count();
            let w = (cur.len() - lcp) as u64;
            if trace.transition_writes.len() < cap {
                trace.transition_writes.push(w);
            } else {
                trace.truncated = true;
            }
            w
        };
        match trace.total.checked_add(writes as u128) {
            Some(t) => trace.total = t,
            None => error = Some(CountError::Overflow),
        }
        trace.compositions_visited = CountValue::new(trace.compositions_visited.get() + 1);
        prev.clear();
        prev.extend_from_slice(cur);
    });
    match error {
        Some(e) => Err(e),
        None => Ok(trace),
    }
}

/// `sfl(n, m)` by the write decomposition: `floor(n/m)` writes for the least
/// element plus the large-parts term of every non-singleton composition.
pub fn sfl_via_writes(params: SacParams) -> Result<CountValue, CountError> {
    let mut total: u128 = lexmin(params).len() as u128;
    let mut overflow = false;
    visit(params, |parts| {
        if overflow || parts.len() == 1 {
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

/// Agreement rows for one `n`, all `1 <= m <= n`. A row passes only when the
/// recurrence, the measurement, and the write decomposition all equal
/// `2 nac(n, m) - 1`.
pub fn theorem1_rows(table: &mut MemoTable, n: u64) -> Result<Vec<ReportRow>, CountError> {
    let mut rows = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let params = SacParams::new(n, m).expect("1 <= m <= n");
        let by_recurrence = sfl_recurrence(table, params)?;
        let measured = sfl_measured(params)?;
        let by_writes = sfl_via_writes(params)?;
        let expected = table.nac(params)?.double_minus_one()?;
        let pass = by_recurrence == expected
            && measured.total() == expected
            && by_writes == expected;
        rows.push(ReportRow {
            n,
            m,
            lhs: by_recurrence,
            rhs: expected,
            pass,
        });
    }
    Ok(rows)
}

/// Sweep every `1 <= m <= n <= max_n` checking the suffix-length theorem.
pub fn check_theorem1(max_n: u64) -> Result<VerificationReport, CountError> {
    let mut table = MemoTable::new();
    let mut report = VerificationReport::new();
    for n in 1..=max_n {
        for row in theorem1_rows(&mut table, n)? {
            report.push(row);
        }
    }
    Ok(report)
}
