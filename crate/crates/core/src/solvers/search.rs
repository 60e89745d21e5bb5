//! Lexicographic enumeration of constrained `c`-subsets with batched,
//! order-preserving parallel evaluation.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::pruning::SearchConstraints;
use super::SolverOptions;

const BATCH: usize = 4096;

/// Outcome of scanning one cardinality.
pub(crate) struct Scan {
    pub found: Option<Vec<usize>>,
    /// Candidates up to and including the first success, in lex order.
    pub tested: u64,
}

struct Enumerator<'a> {
    n: usize,
    constraints: &'a SearchConstraints,
    chosen: Vec<usize>,
    skipped_in_class: Vec<u32>,
}

impl Enumerator<'_> {
    fn can_skip(&self, v: usize) -> bool {
        !self.constraints.forced[v]
            && self.constraints.class_of[v].is_none_or(|c| self.skipped_in_class[c] == 0)
    }

    fn skip(&mut self, v: usize) {
        if let Some(c) = self.constraints.class_of[v] {
            self.skipped_in_class[c] += 1;
        }
    }

    fn unskip(&mut self, v: usize) {
        if let Some(c) = self.constraints.class_of[v] {
            self.skipped_in_class[c] -= 1;
        }
    }

    /// Emits every admissible completion of `chosen` that uses `remaining`
    /// more vertices from `pos..n`, in lexicographic order.
    fn walk<F>(&mut self, pos: usize, remaining: usize, emit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut skipped = Vec::new();
        let mut flow = ControlFlow::Continue(());
        if remaining == 0 {
            let mut ok = true;
            for v in pos..self.n {
                if !self.can_skip(v) {
                    ok = false;
                    break;
                }
                self.skip(v);
                skipped.push(v);
            }
            if ok {
                flow = emit(&self.chosen);
            }
        } else {
            for v in pos..=self.n - remaining {
                self.chosen.push(v);
                flow = self.walk(v + 1, remaining - 1, emit);
                self.chosen.pop();
                if flow.is_break() || !self.can_skip(v) {
                    break;
                }
                self.skip(v);
                skipped.push(v);
            }
        }
        for v in skipped {
            self.unskip(v);
        }
        flow
    }
}

/// Calls `emit` on each admissible `size`-subset of `0..n`, in order.
pub(crate) fn for_each_candidate<F>(
    n: usize,
    size: usize,
    constraints: &SearchConstraints,
    mut emit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if size > n {
        return ControlFlow::Continue(());
    }
    let mut e = Enumerator {
        n,
        constraints,
        chosen: Vec::with_capacity(size),
        skipped_in_class: vec![0; constraints.classes.len()],
    };
    e.walk(0, size, &mut emit)
}

/// Returns the lexicographically first admissible `size`-subset
/// satisfying `pred`. The answer does not depend on the worker count.
pub(crate) fn first_success<P>(
    n: usize,
    size: usize,
    constraints: &SearchConstraints,
    options: &SolverOptions,
    pred: P,
) -> Scan
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let mut batch: Vec<usize> = Vec::with_capacity(BATCH * size.max(1));
    let mut tested = 0u64;
    let mut found = None;

    let flush = |batch: &mut Vec<usize>, tested: &mut u64| -> Option<Vec<usize>> {
        let hit = if options.is_sequential() {
            batch.chunks(size).position(&pred)
        } else {
            options.install(|| batch.par_chunks(size).position_first(&pred))
        };
        let count = batch.len() / size;
        let result = match hit {
            Some(i) => {
                *tested += i as u64 + 1;
                Some(batch[i * size..(i + 1) * size].to_vec())
            }
            None => {
                *tested += count as u64;
                None
            }
        };
        batch.clear();
        result
    };

    if size == 0 {
        // The empty set is the only candidate.
        let ok = for_each_candidate(n, 0, constraints, |_| ControlFlow::Break(())).is_break();
        if ok {
            tested = 1;
            if pred(&[]) {
                found = Some(Vec::new());
            }
        }
        return Scan { found, tested };
    }

    let flow = for_each_candidate(n, size, constraints, |set| {
        batch.extend_from_slice(set);
        if batch.len() >= BATCH * size {
            if let Some(hit) = flush(&mut batch, &mut tested) {
                found = Some(hit);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if flow.is_continue() && !batch.is_empty() {
        found = flush(&mut batch, &mut tested);
    }
    Scan { found, tested }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn collect(n: usize, size: usize, c: &SearchConstraints) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = for_each_candidate(n, size, c, |s| {
            out.push(s.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn unconstrained_matches_combinations() {
        let none = SearchConstraints::none(7);
        for size in 0..=7 {
            let expected: Vec<Vec<usize>> = (0..7).combinations(size).collect();
            assert_eq!(collect(7, size, &none), expected, "size {size}");
        }
    }

    #[test]
    fn constrained_is_filtered_combinations() {
        let mut c = SearchConstraints::none(7);
        c.classes = vec![vec![1, 2, 5], vec![3, 6]];
        c.class_of = vec![None, Some(0), Some(0), Some(1), None, Some(0), Some(1)];
        c.forced[4] = true;
        for size in 0..=7 {
            let expected: Vec<Vec<usize>> = (0..7)
                .combinations(size)
                .filter(|s| {
                    s.contains(&4)
                        && c.classes
                            .iter()
                            .all(|cl| cl.iter().filter(|v| !s.contains(v)).count() <= 1)
                })
                .collect();
            assert_eq!(collect(7, size, &c), expected, "size {size}");
        }
    }

    #[test]
    fn first_success_is_order_stable() {
        let none = SearchConstraints::none(12);
        let pred = |s: &[usize]| s.iter().sum::<usize>() == 30 && s[0] % 2 == 1;
        let seq = first_success(12, 5, &none, &SolverOptions::sequential(), pred);
        let par = first_success(12, 5, &none, &SolverOptions::with_threads(4).unwrap(), pred);
        assert_eq!(seq.found, par.found);
        assert_eq!(seq.tested, par.tested);
        let brute = (0..12).combinations(5).position(|s| pred(&s)).unwrap();
        assert_eq!(seq.tested, brute as u64 + 1);
    }
}
