//! Search over non-increasing tuples `s₁ ≥ … ≥ sₙ` drawn from a sorted
//! list of candidates, evaluating a pattern on each.
//!
//! Tuples are visited in ascending lexicographic order of `(s₁, …, sₙ)`.
//! A pattern is linear, so the outcome of the remaining positions depends
//! only on `(position, largest allowed candidate, partial sum)`; states that
//! are already known to be harmless are memoised and skipped.

use std::collections::{BTreeSet, HashSet};

pub(crate) struct TupleSearch<'a> {
    coeffs: &'a [i64],
    candidates: &'a [u32],
}

impl<'a> TupleSearch<'a> {
    pub(crate) fn new(coeffs: &'a [i64], candidates: &'a [u32]) -> Self {
        debug_assert!(candidates.windows(2).all(|w| w[0] < w[1]));
        Self { coeffs, candidates }
    }

    /// The lexicographically first tuple whose value is rejected by
    /// `accept`, together with that value.
    pub(crate) fn first_failure(&self, accept: impl Fn(i128) -> bool) -> Option<(Vec<u32>, i128)> {
        let mut known_good = HashSet::new();
        let mut stack = Vec::with_capacity(self.coeffs.len());
        let top = self.candidates.len();
        self.fail_from(0, top, 0, &accept, &mut known_good, &mut stack)
            .map(|value| (stack, value))
    }

    // `bound` is one past the largest candidate index allowed at `pos`.
    fn fail_from(
        &self,
        pos: usize,
        bound: usize,
        partial: i128,
        accept: &impl Fn(i128) -> bool,
        known_good: &mut HashSet<(usize, usize, i128)>,
        stack: &mut Vec<u32>,
    ) -> Option<i128> {
        if pos == self.coeffs.len() {
            return (!accept(partial)).then_some(partial);
        }
        if known_good.contains(&(pos, bound, partial)) {
            return None;
        }
        let a = self.coeffs[pos] as i128;
        for idx in 0..bound {
            let s = self.candidates[idx];
            stack.push(s);
            let next = partial + a * s as i128;
            if let Some(v) = self.fail_from(pos + 1, idx + 1, next, accept, known_good, stack) {
                return Some(v);
            }
            stack.pop();
        }
        known_good.insert((pos, bound, partial));
        None
    }

    /// Every value `p(s)` over all tuples that lands in `[0, limit)`.
    pub(crate) fn values_below(&self, limit: i128) -> BTreeSet<i128> {
        let mut seen = HashSet::new();
        let mut out = BTreeSet::new();
        self.collect(0, self.candidates.len(), 0, limit, &mut seen, &mut out);
        out
    }

    fn collect(
        &self,
        pos: usize,
        bound: usize,
        partial: i128,
        limit: i128,
        seen: &mut HashSet<(usize, usize, i128)>,
        out: &mut BTreeSet<i128>,
    ) {
        if pos == self.coeffs.len() {
            if (0..limit).contains(&partial) {
                out.insert(partial);
            }
            return;
        }
        if !seen.insert((pos, bound, partial)) {
            return;
        }
        let a = self.coeffs[pos] as i128;
        for idx in 0..bound {
            let next = partial + a * self.candidates[idx] as i128;
            self.collect(pos + 1, idx + 1, next, limit, seen, out);
        }
    }
}
