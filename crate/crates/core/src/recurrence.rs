//! Count sequences from the root-split convolution.
//!
//! Splitting every bracketing on `n` variables at its root into a left part
//! on `k` variables and a right part on `n - k` variables, the rows of the
//! two sub-tables pair up freely, and the root's value is read off the
//! implication table. So the tally for outcome `o` at size `n` is
//!
//! ```text
//! sum over 1 <= k < n, over kernel entries (a, b, o): count_k[a] * count_(n-k)[b]
//! ```
//!
//! The kernel comes from [`implication_kernel`], so nothing here restates
//! the table.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::logic::{implication_kernel, CountVector, Semantics, Tally};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub semantics: Semantics,
    /// `rows[n - 1]` holds the counts for `n` variables.
    pub rows: Vec<CountVector>,
}

impl SequenceTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Counts for `n` variables, `1 <= n <= n_max`.
    pub fn row(&self, n: usize) -> Result<&CountVector> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .ok_or_else(|| Error::Range {
                index: n,
                valid: format!("1..={}", self.n_max()),
            })
    }
}

/// Fills the count table for `1..=n_max` bottom-up.
pub fn by_recurrence(sem: Semantics, n_max: usize) -> Result<SequenceTable> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let kernel = implication_kernel(sem);
    let mut tallies: Vec<Tally> = Vec::with_capacity(n_max + 1);
    tallies.push(Tally::default());
    let mut base = Tally::default();
    for &v in sem.values() {
        base.0[v as usize] = BigUint::one();
    }
    tallies.push(base);
    for n in 2..=n_max {
        let mut next = Tally::default();
        for k in 1..n {
            let (left, right) = (&tallies[k], &tallies[n - k]);
            for e in &kernel {
                next.0[e.outcome as usize] += left.get(e.antecedent) * right.get(e.consequent);
            }
        }
        tallies.push(next);
    }
    let rows = tallies
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, t)| CountVector::from_tally(n, sem, t))
        .collect();
    Ok(SequenceTable {
        semantics: sem,
        rows,
    })
}

pub fn kleene_by_recurrence(n_max: usize) -> Result<SequenceTable> {
    by_recurrence(Semantics::Kleene3, n_max)
}

pub fn classical_by_recurrence(n_max: usize) -> Result<SequenceTable> {
    by_recurrence(Semantics::Classical2, n_max)
}
