//! Ascending compositions and the lexicographic successor rule.
//!
//! An ascending composition of `n` is a non-decreasing sequence of positive
//! integers summing to `n`; listing them in lexicographic order and replacing
//! the last two parts with the least admissible tail generates the whole set
//! with a constant amortized number of part writes.

use std::fmt;

use thiserror::Error;

/// A single part of a composition.
pub type Part = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition must contain at least one part")]
    Empty,
    #[error("part at index {0} must be positive")]
    NonPositivePart(usize),
    #[error("descent at index {0}: parts must be non-decreasing")]
    Descent(usize),
    #[error("m must satisfy 1 \u{2264} m \u{2264} n (got n={n}, m={m})")]
    InvalidParams { n: u64, m: u64 },
    #[error("the singleton composition is the lexicographic maximum and has no successor")]
    NoSuccessor,
}

/// Names the set `sac(n, m)`: ascending compositions of `n` whose first
/// (smallest) part is at least `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SacParams {
    n: u64,
    m: u64,
}

impl SacParams {
    pub fn new(n: u64, m: u64) -> Result<Self, CompositionError> {
        if n == 0 || m == 0 || m > n {
            return Err(CompositionError::InvalidParams { n, m });
        }
        Ok(SacParams { n, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

/// A validated ascending composition: non-decreasing positive parts with a
/// cached sum. Ordering is lexicographic on the parts, with a shorter prefix
/// comparing smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AscendingComposition {
    parts: Vec<Part>,
    n: u64,
}

impl AscendingComposition {
    pub fn new(parts: Vec<Part>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        let mut sum: u64 = 0;
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(CompositionError::NonPositivePart(i));
            }
            if i > 0 && parts[i - 1] > p {
                return Err(CompositionError::Descent(i));
            }
            sum += p;
        }
        Ok(AscendingComposition { parts, n: sum })
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    /// The integer being composed (the cached part sum).
    pub fn n(&self) -> u64 {
        self.n
    }

    // Never zero: the empty composition is rejected at construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.parts.len() == 1
    }

    /// The largest part `a_k`.
    pub fn last_part(&self) -> Part {
        *self.parts.last().expect("composition is nonempty")
    }

    /// The second-largest part `a_{k-1}`, taking the conventional `a_0 = 0`
    /// when the composition is a singleton.
    pub fn penultimate_part(&self) -> Part {
        if self.parts.len() >= 2 {
            self.parts[self.parts.len() - 2]
        } else {
            0
        }
    }

    /// The large-parts term `floor((a_{k-1} + a_k) / (a_{k-1} + 1))`.
    ///
    /// This is also the number of part writes needed to move from this
    /// composition to its lexicographic successor.
    pub fn large_parts_term(&self) -> u64 {
        large_parts_term_of(&self.parts)
    }
}

impl fmt::Display for AscendingComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Large-parts term of a raw part slice; see
/// [`AscendingComposition::large_parts_term`].
pub fn large_parts_term_of(parts: &[Part]) -> u64 {
    let k = parts.len();
    let last = parts[k - 1];
    let penult = if k >= 2 { parts[k - 2] } else { 0 };
    (penult + last) / (penult + 1)
}

/// The decomposition of one successor transition: keep `prefix_len` leading
/// parts, write `fill_count` copies of `fill_part`, then the remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuccessorPlan {
    pub prefix_len: usize,
    pub fill_part: Part,
    pub fill_count: u64,
    pub remainder: Part,
    pub transition_sum: u64,
}

impl SuccessorPlan {
    /// Part writes performed by this transition (`fill_count` fills plus the
    /// remainder).
    pub fn writes(&self) -> u64 {
        self.fill_count + 1
    }
}

/// The lexicographically least element of `sac(n, m)`: `floor(n/m) - 1`
/// copies of `m` followed by the remainder.
pub fn lexmin(params: SacParams) -> AscendingComposition {
    let (n, m) = (params.n(), params.m());
    let mu = n / m - 1;
    let mut parts = Vec::with_capacity(mu as usize + 1);
    parts.resize(mu as usize, m);
    parts.push(n - mu * m);
    AscendingComposition { parts, n }
}

/// Plan the transition from `c` to its lexicographic successor: drop the last
/// two parts `a_{k-1}, a_k` and append the least element of
/// `sac(a_{k-1} + a_k, a_{k-1} + 1)`.
pub fn successor_plan(c: &AscendingComposition) -> Result<SuccessorPlan, CompositionError> {
    let k = c.len();
    if k == 1 {
        return Err(CompositionError::NoSuccessor);
    }
    let last = c.parts[k - 1];
    let penult = c.parts[k - 2];
    let fill_part = penult + 1;
    let transition_sum = penult + last;
    let fill_count = transition_sum / fill_part - 1;
    Ok(SuccessorPlan {
        prefix_len: k - 2,
        fill_part,
        fill_count,
        remainder: transition_sum - fill_count * fill_part,
        transition_sum,
    })
}

/// Apply [`successor_plan`] and materialize the successor composition.
pub fn apply_successor(c: &AscendingComposition) -> Result<AscendingComposition, CompositionError> {
    let plan = successor_plan(c)?;
    let mut parts = Vec::with_capacity(plan.prefix_len + plan.fill_count as usize + 1);
    parts.extend_from_slice(&c.parts[..plan.prefix_len]);
    parts.resize(plan.prefix_len + plan.fill_count as usize, plan.fill_part);
    parts.push(plan.remainder);
    Ok(AscendingComposition { parts, n: c.n })
}

// Advance `parts` to its lexicographic successor in place. Returns false at
// the singleton (lexicographic maximum).
fn advance(parts: &mut Vec<Part>) -> bool {
    if parts.len() == 1 {
        return false;
    }
    let last = parts.pop().expect("len >= 2");
    let penult = parts.pop().expect("len >= 2");
    let fill = penult + 1;
    let sum = penult + last;
    let mu = sum / fill - 1;
    parts.resize(parts.len() + mu as usize, fill);
    parts.push(sum - mu * fill);
    true
}

/// Iterator over all of `sac(n, m)` in increasing lexicographic order, from
/// [`lexmin`] up to the singleton `[n]`. Each item is an independent snapshot.
pub struct CompositionIter {
    n: u64,
    current: Option<Vec<Part>>,
}

impl Iterator for CompositionIter {
    type Item = AscendingComposition;

    fn next(&mut self) -> Option<Self::Item> {
        let mut buf = self.current.take()?;
        let item = AscendingComposition {
            parts: buf.clone(),
            n: self.n,
        };
        if advance(&mut buf) {
            self.current = Some(buf);
        }
        Some(item)
    }
}

pub fn iterate(params: SacParams) -> CompositionIter {
    CompositionIter {
        n: params.n(),
        current: Some(lexmin(params).into_parts()),
    }
}

/// In-place traversal of `sac(n, m)` in lexicographic order over a single
/// reused buffer. This is the metering hot path: no allocation per step.
pub fn visit<F>(params: SacParams, mut f: F)
where
    F: FnMut(&[Part]),
{
    let mut buf = lexmin(params).into_parts();
    loop {
        f(&buf);
        if !advance(&mut buf) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[Part]) -> AscendingComposition {
        AscendingComposition::new(parts.to_vec()).unwrap()
    }

    fn params(n: u64, m: u64) -> SacParams {
        SacParams::new(n, m).unwrap()
    }

    #[test]
    fn new_validates() {
        assert_eq!(comp(&[1, 1, 3]).parts(), &[1, 1, 3]);
        assert_eq!(comp(&[1, 1, 3]).n(), 5);
        assert_eq!(comp(&[5]).n(), 5);
        assert_eq!(
            AscendingComposition::new(vec![2, 1]),
            Err(CompositionError::Descent(1))
        );
        assert_eq!(AscendingComposition::new(vec![]), Err(CompositionError::Empty));
        assert_eq!(
            AscendingComposition::new(vec![1, 0, 2]),
            Err(CompositionError::NonPositivePart(1))
        );
    }

    #[test]
    fn params_validate() {
        assert!(SacParams::new(5, 2).is_ok());
        assert_eq!(
            SacParams::new(5, 6),
            Err(CompositionError::InvalidParams { n: 5, m: 6 })
        );
        assert!(SacParams::new(0, 0).is_err());
        assert!(SacParams::new(3, 0).is_err());
    }

    #[test]
    fn lexmin_examples() {
        assert_eq!(lexmin(params(5, 1)).parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(lexmin(params(5, 2)).parts(), &[2, 3]);
        assert_eq!(lexmin(params(7, 2)).parts(), &[2, 2, 3]);
        assert_eq!(lexmin(params(5, 5)).parts(), &[5]);
    }

    #[test]
    fn lexmin_part_count() {
        for n in 1..=30 {
            for m in 1..=n {
                assert_eq!(lexmin(params(n, m)).len() as u64, n / m, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn successor_plan_examples() {
        assert_eq!(
            successor_plan(&comp(&[1, 1, 1, 1, 1])).unwrap(),
            SuccessorPlan {
                prefix_len: 3,
                fill_part: 2,
                fill_count: 0,
                remainder: 2,
                transition_sum: 2,
            }
        );
        assert_eq!(
            successor_plan(&comp(&[1, 1, 1, 2])).unwrap(),
            SuccessorPlan {
                prefix_len: 2,
                fill_part: 2,
                fill_count: 0,
                remainder: 3,
                transition_sum: 3,
            }
        );
        assert_eq!(
            successor_plan(&comp(&[2, 3])).unwrap(),
            SuccessorPlan {
                prefix_len: 0,
                fill_part: 3,
                fill_count: 0,
                remainder: 5,
                transition_sum: 5,
            }
        );
        assert_eq!(
            successor_plan(&comp(&[5])),
            Err(CompositionError::NoSuccessor)
        );
    }

    #[test]
    fn apply_successor_examples() {
        assert_eq!(apply_successor(&comp(&[1, 1, 1, 2])).unwrap().parts(), &[1, 1, 3]);
        assert_eq!(apply_successor(&comp(&[1, 1, 3])).unwrap().parts(), &[1, 2, 2]);
        assert_eq!(apply_successor(&comp(&[2, 3])).unwrap().parts(), &[5]);
    }

    #[test]
    fn iterate_examples() {
        let all: Vec<Vec<Part>> = iterate(params(5, 1)).map(|c| c.into_parts()).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 1, 1, 1, 1],
                vec![1, 1, 1, 2],
                vec![1, 1, 3],
                vec![1, 2, 2],
                vec![1, 4],
                vec![2, 3],
                vec![5],
            ]
        );
        let all: Vec<Vec<Part>> = iterate(params(5, 2)).map(|c| c.into_parts()).collect();
        assert_eq!(all, vec![vec![2, 3], vec![5]]);
        let all: Vec<Vec<Part>> = iterate(params(1, 1)).map(|c| c.into_parts()).collect();
        assert_eq!(all, vec![vec![1]]);
    }

    #[test]
    fn visit_matches_iterate() {
        let mut seen = Vec::new();
        visit(params(7, 1), |parts| seen.push(parts.to_vec()));
        let expected: Vec<Vec<Part>> = iterate(params(7, 1)).map(|c| c.into_parts()).collect();
        assert_eq!(seen, expected);
    }

    #[test]
    fn large_parts_term_examples() {
        assert_eq!(comp(&[5]).large_parts_term(), 5);
        assert_eq!(comp(&[1, 4]).large_parts_term(), 2);
        assert_eq!(comp(&[1, 2, 2]).large_parts_term(), 1);
    }

    #[test]
    fn plan_invariants() {
        for c in iterate(params(12, 1)) {
            if c.is_singleton() {
                continue;
            }
            let plan = successor_plan(&c).unwrap();
            assert!(plan.remainder >= plan.fill_part);
            assert_eq!(
                plan.fill_count * plan.fill_part + plan.remainder,
                plan.transition_sum
            );
            assert_eq!(plan.writes(), c.large_parts_term());
        }
    }

    #[test]
    fn successor_suffix_is_lexmin() {
        // Everything past the retained prefix is the least element of
        // sac(transition_sum, fill_part).
        for c in iterate(params(14, 1)) {
            if c.is_singleton() {
                continue;
            }
            let plan = successor_plan(&c).unwrap();
            let next = apply_successor(&c).unwrap();
            let tail = &next.parts()[plan.prefix_len..];
            let least = lexmin(params(plan.transition_sum, plan.fill_part));
            assert_eq!(tail, least.parts());
        }
    }

    #[test]
    fn display_joins_with_plus() {
        assert_eq!(comp(&[1, 1, 3]).to_string(), "1+1+3");
        assert_eq!(comp(&[5]).to_string(), "5");
    }
}
