//! Truth tables of bracketed implications `p1 => p2 => ... => pn` in
//! classical and Kleene three-valued logic.
//!
//! The per-value entry counts of those tables are computed three ways:
//!
//! * [`logic`]: by enumerating every bracketing and valuation,
//! * [`recurrence`]: by convolution over the root split of each bracketing,
//! * [`series`]: by expanding closed-form generating functions with nested
//!   square roots over exact rationals.
//!
//! [`monoid`] treats the count series as generators of a commutative monoid
//! under multiplication and checks its claimed properties on finite
//! prefixes.

pub mod error;
pub mod logic;
pub mod monoid;
pub mod recurrence;
pub mod series;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use error::{Error, Result};
pub use logic::{
    brute_counts, color_class_counts, enumerate_bracketings, evaluate, implies, tree_counts,
    Bracketing, BruteBudget, CountVector, Semantics, TruthValue, Valuation,
};
pub use monoid::{MonoidElement, SeriesContext, VerificationReport};
pub use recurrence::{classical_by_recurrence, kleene_by_recurrence, SequenceTable};
pub use series::{closed_form, PowerSeries, SeriesName};

/// Number of bracketings of `n` variables, `C_n = binom(2n-2, n-1) / n`;
/// zero for `n = 0`.
pub fn catalan(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let m = n - 1;
    // binom(2m, m) built up as a running product, exact at every step
    let mut binom = BigUint::one();
    for i in 0..m {
        binom = binom * BigUint::from(2 * m - i) / BigUint::from(i + 1);
    }
    binom / BigUint::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_prefix() {
        let got: Vec<u64> = (0..=10).map(|n| u64::try_from(catalan(n)).unwrap()).collect();
        assert_eq!(got, [0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }
}
