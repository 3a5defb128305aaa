//! Bracketed implication formulae and their truth tables.
//!
//! A bracketing of `p1 => p2 => ... => pn` is a full binary tree whose leaves
//! carry the variable indices `1..=n` left to right. Evaluation follows the
//! Kleene implication table; classical logic is the same table restricted to
//! `{0, 1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::catalan;
use crate::error::{Error, Result};

/// Ternary truth value. The discriminants are the numeric codes used in
/// tables: 0 false, 1 true, 2 unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum TruthValue {
    False = 0,
    True = 1,
    Unknown = 2,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::False, TruthValue::True, TruthValue::Unknown];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            0 => Ok(TruthValue::False),
            1 => Ok(TruthValue::True),
            2 => Ok(TruthValue::Unknown),
            _ => Err(Error::Domain(format!("{code} is not a truth value code"))),
        }
    }

    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Classical2,
    Kleene3,
}

impl Semantics {
    pub fn radix(self) -> usize {
        match self {
            Semantics::Classical2 => 2,
            Semantics::Kleene3 => 3,
        }
    }

    pub fn from_radix(radix: usize) -> Result<Self> {
        match radix {
            2 => Ok(Semantics::Classical2),
            3 => Ok(Semantics::Kleene3),
            _ => Err(Error::Domain(format!("no semantics with radix {radix}"))),
        }
    }

    /// Legal values in digit order (0, 1, 2).
    pub fn values(self) -> &'static [TruthValue] {
        &TruthValue::ALL[..self.radix()]
    }

    pub fn admits(self, v: TruthValue) -> bool {
        v.index() < self.radix()
    }

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Classical2 => "classical",
            Semantics::Kleene3 => "kleene",
        }
    }

    fn check(self, v: TruthValue) -> Result<()> {
        if self.admits(v) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "value {v} is not legal in {} logic",
                self.name()
            )))
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Rows are the antecedent, columns the consequent, both indexed by code.
const KLEENE_IMPLIES: [[TruthValue; 3]; 3] = {
    use TruthValue::*;
    [
        // 0 => _
        [True, True, True],
        // 1 => _
        [False, True, Unknown],
        // 2 => _
        [Unknown, True, Unknown],
    ]
};

#[inline]
fn implies_unchecked(a: TruthValue, b: TruthValue) -> TruthValue {
    KLEENE_IMPLIES[a.index()][b.index()]
}

/// Kleene implication `a => b`; under classical semantics only 0 and 1 are
/// accepted.
pub fn implies(a: TruthValue, b: TruthValue, sem: Semantics) -> Result<TruthValue> {
    sem.check(a)?;
    sem.check(b)?;
    Ok(implies_unchecked(a, b))
}

/// One entry of the outcome-combination kernel: an antecedent value, a
/// consequent value, and the value of the implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelEntry {
    pub antecedent: TruthValue,
    pub consequent: TruthValue,
    pub outcome: TruthValue,
}

/// The implication table flattened into `(a, b, a => b)` triples over the
/// legal values of `sem`. Both the per-tree counter and the recurrences are
/// driven by this list, so they always agree with [`implies`].
pub fn implication_kernel(sem: Semantics) -> Vec<KernelEntry> {
    let mut out = Vec::with_capacity(sem.radix() * sem.radix());
    for &a in sem.values() {
        for &b in sem.values() {
            out.push(KernelEntry {
                antecedent: a,
                consequent: b,
                outcome: implies_unchecked(a, b),
            });
        }
    }
    out
}

/// A full parenthesization of `p1 => ... => pn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracketing {
    /// 1-based variable index.
    Leaf(usize),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn node(left: Bracketing, right: Bracketing) -> Self {
        Bracketing::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Bracketing::Leaf(_) => 1,
            Bracketing::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Left and right subformulae of the root, if it is an implication.
    pub fn split(&self) -> Option<(&Bracketing, &Bracketing)> {
        match self {
            Bracketing::Leaf(_) => None,
            Bracketing::Node(l, r) => Some((l, r)),
        }
    }

    /// Checks that leaves read `1..=n` left to right.
    pub fn is_well_formed(&self) -> bool {
        fn walk(t: &Bracketing, next: &mut usize) -> bool {
            match t {
                Bracketing::Leaf(i) => {
                    let ok = *i == *next;
                    *next += 1;
                    ok
                }
                Bracketing::Node(l, r) => walk(l, next) && walk(r, next),
            }
        }
        let mut next = 1;
        walk(self, &mut next)
    }

    fn offset(&self, by: usize) -> Bracketing {
        match self {
            Bracketing::Leaf(i) => Bracketing::Leaf(i + by),
            Bracketing::Node(l, r) => Bracketing::node(l.offset(by), r.offset(by)),
        }
    }
}

/// Fully parenthesized infix with `=>`; a bare leaf prints as `p1`.
impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Leaf(i) => write!(f, "p{i}"),
            Bracketing::Node(l, r) => write!(f, "({l} => {r})"),
        }
    }
}

/// All bracketings of `n` variables, ordered by the size of the root's left
/// subtree (ascending), then recursively left-then-right.
pub fn enumerate_bracketings(n: usize) -> Result<Vec<Bracketing>> {
    if n == 0 {
        return Err(Error::Domain("bracketings need at least one variable".into()));
    }
    // shapes[m] holds the trees on leaves 1..=m
    let mut shapes: Vec<Vec<Bracketing>> = vec![Vec::new(), vec![Bracketing::Leaf(1)]];
    for m in 2..=n {
        let mut level = Vec::new();
        for k in 1..m {
            for left in &shapes[k] {
                for right in &shapes[m - k] {
                    level.push(Bracketing::node(left.clone(), right.offset(k)));
                }
            }
        }
        shapes.push(level);
    }
    Ok(shapes.swap_remove(n))
}

/// Values of `p1..pn`, position `i` holding `p(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Valuation(pub Vec<TruthValue>);

impl Valuation {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `index` of a truth table: `index` written in base `radix` with
    /// `p1` as the most significant digit.
    pub fn from_row_index(index: usize, n: usize, sem: Semantics) -> Result<Self> {
        let radix = sem.radix();
        let rows = radix.checked_pow(n as u32).ok_or_else(|| {
            Error::Unsupported(format!("{radix}^{n} rows do not fit in a machine word"))
        })?;
        if index >= rows {
            return Err(Error::Range {
                index,
                valid: format!("0..{rows}"),
            });
        }
        let mut digits = vec![TruthValue::False; n];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = TruthValue::ALL[rest % radix];
            rest /= radix;
        }
        Ok(Valuation(digits))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Every valuation of `n` variables in row order.
pub fn valuations(n: usize, sem: Semantics) -> Vec<Valuation> {
    let mut out = Vec::with_capacity(sem.radix().pow(n as u32));
    for_each_row(n, sem, |v| out.push(Valuation(v.to_vec())));
    out
}

fn eval_unchecked(tree: &Bracketing, v: &[TruthValue]) -> TruthValue {
    match tree {
        Bracketing::Leaf(i) => v[i - 1],
        Bracketing::Node(l, r) => implies_unchecked(eval_unchecked(l, v), eval_unchecked(r, v)),
    }
}

/// Value of the formula `tree` under `v`.
pub fn evaluate(tree: &Bracketing, v: &Valuation, sem: Semantics) -> Result<TruthValue> {
    let n = tree.leaf_count();
    if v.len() != n {
        return Err(Error::Domain(format!(
            "valuation has {} entries but the formula has {n} variables",
            v.len()
        )));
    }
    if !tree.is_well_formed() {
        return Err(Error::Domain(format!("{tree} does not number its leaves 1..{n}")));
    }
    for &x in &v.0 {
        sem.check(x)?;
    }
    Ok(eval_unchecked(tree, &v.0))
}

/// Per-value tallies over all `radix^n` rows of the tables of every
/// bracketing with `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    pub n: usize,
    pub semantics: Semantics,
    pub t: BigUint,
    pub f: BigUint,
    /// Always zero in classical logic.
    pub u: BigUint,
    pub g: BigUint,
}

impl CountVector {
    pub fn from_tally(n: usize, semantics: Semantics, tally: &Tally) -> Self {
        let [f, t, u] = tally.0.clone();
        let g = &t + &f + &u;
        CountVector {
            n,
            semantics,
            t,
            f,
            u,
            g,
        }
    }

    pub fn get(&self, v: TruthValue) -> &BigUint {
        match v {
            TruthValue::True => &self.t,
            TruthValue::False => &self.f,
            TruthValue::Unknown => &self.u,
        }
    }

    /// `radix^n * C_n`, the number of entries in the full table array.
    pub fn expected_total(n: usize, semantics: Semantics) -> BigUint {
        BigUint::from(semantics.radix()).pow(n as u32) * catalan(n)
    }

    pub fn is_consistent(&self) -> bool {
        let sum = &self.t + &self.f + &self.u;
        sum == self.g
            && self.g == Self::expected_total(self.n, self.semantics)
            && (self.semantics == Semantics::Kleene3 || self.u.is_zero())
    }
}

/// Exact counts indexed by truth-value code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tally(pub [BigUint; 3]);

impl Tally {
    pub fn get(&self, v: TruthValue) -> &BigUint {
        &self.0[v.index()]
    }

    pub fn add_assign(&mut self, other: &Tally) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// `(t, f, u)` in that order.
    pub fn tfu(&self) -> (BigUint, BigUint, BigUint) {
        (
            self.get(TruthValue::True).clone(),
            self.get(TruthValue::False).clone(),
            self.get(TruthValue::Unknown).clone(),
        )
    }
}

/// Largest `n` for which brute-force enumeration is attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteBudget {
    pub kleene_max_n: usize,
    pub classical_max_n: usize,
}

impl Default for BruteBudget {
    fn default() -> Self {
        BruteBudget {
            kleene_max_n: 8,
            classical_max_n: 10,
        }
    }
}

impl BruteBudget {
    /// Same limit for both logics.
    pub fn uniform(max_n: usize) -> Self {
        BruteBudget {
            kleene_max_n: max_n,
            classical_max_n: max_n,
        }
    }

    pub fn max_n(&self, sem: Semantics) -> usize {
        match sem {
            Semantics::Classical2 => self.classical_max_n,
            Semantics::Kleene3 => self.kleene_max_n,
        }
    }

    fn check(&self, n: usize, sem: Semantics) -> Result<()> {
        let max = self.max_n(sem);
        if n > max {
            Err(Error::Budget {
                n,
                max,
                semantics: sem.name(),
            })
        } else {
            Ok(())
        }
    }
}

/// Calls `f` on every valuation in row order, reusing one buffer.
fn for_each_row(n: usize, sem: Semantics, mut f: impl FnMut(&[TruthValue])) {
    let radix = sem.radix();
    let mut digits = vec![TruthValue::False; n];
    loop {
        f(&digits);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let d = digits[i].index() + 1;
            if d < radix {
                digits[i] = TruthValue::ALL[d];
                break;
            }
            digits[i] = TruthValue::False;
        }
    }
}

/// Tallies every (bracketing, valuation) entry by direct evaluation.
pub fn brute_counts(n: usize, sem: Semantics, budget: &BruteBudget) -> Result<CountVector> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    budget.check(n, sem)?;
    let trees = enumerate_bracketings(n)?;
    let counts = trees
        .par_iter()
        .map(|tree| {
            let mut local = [0u64; 3];
            for_each_row(n, sem, |v| local[eval_unchecked(tree, v).index()] += 1);
            local
        })
        .reduce(|| [0u64; 3], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
    let tally = Tally(counts.map(BigUint::from));
    Ok(CountVector::from_tally(n, sem, &tally))
}

/// Row-value tallies of one formula over all of its valuations, obtained by
/// combining child tallies through the implication kernel instead of
/// enumerating rows.
pub fn tree_counts(tree: &Bracketing, sem: Semantics) -> Tally {
    let kernel = implication_kernel(sem);
    fn walk(t: &Bracketing, sem: Semantics, kernel: &[KernelEntry]) -> Tally {
        match t {
            Bracketing::Leaf(_) => {
                let mut tally = Tally::default();
                for &v in sem.values() {
                    tally.0[v.index()] = BigUint::one();
                }
                tally
            }
            Bracketing::Node(l, r) => {
                let left = walk(l, sem, kernel);
                let right = walk(r, sem, kernel);
                let mut out = Tally::default();
                for e in kernel {
                    out.0[e.outcome.index()] += left.get(e.antecedent) * right.get(e.consequent);
                }
                out
            }
        }
    }
    walk(tree, sem, &kernel)
}

/// Entries of the `n`-variable table array classified by the pair (value of
/// the root's left subformula, value of the root's right subformula).
pub fn color_class_counts(
    n: usize,
    sem: Semantics,
    budget: &BruteBudget,
) -> Result<BTreeMap<(TruthValue, TruthValue), BigUint>> {
    if n < 2 {
        return Err(Error::Domain(
            "color classes need n >= 2 so the root is an implication".into(),
        ));
    }
    budget.check(n, sem)?;
    let trees = enumerate_bracketings(n)?;
    let radix = sem.radix();
    let grid = trees
        .par_iter()
        .map(|tree| {
            let (l, r) = tree.split().expect("n >= 2 gives an internal root");
            let mut local = [[0u64; 3]; 3];
            for_each_row(n, sem, |v| {
                local[eval_unchecked(l, v).index()][eval_unchecked(r, v).index()] += 1;
            });
            local
        })
        .reduce(
            || [[0u64; 3]; 3],
            |mut a, b| {
                for i in 0..3 {
                    for j in 0..3 {
                        a[i][j] += b[i][j];
                    }
                }
                a
            },
        );
    let mut out = BTreeMap::new();
    for &a in sem.values() {
        for &b in sem.values() {
            out.insert((a, b), BigUint::from(grid[a.index()][b.index()]));
        }
    }
    debug_assert_eq!(out.len(), radix * radix);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue::*;

    fn p(i: usize) -> Bracketing {
        Bracketing::Leaf(i)
    }

    #[test]
    fn implication_table_entries() {
        let k = Semantics::Kleene3;
        assert_eq!(implies(True, False, k).unwrap(), False);
        assert_eq!(implies(False, Unknown, k).unwrap(), True);
        assert_eq!(implies(Unknown, False, k).unwrap(), Unknown);
        assert_eq!(implies(Unknown, Unknown, k).unwrap(), Unknown);
        assert_eq!(implies(Unknown, True, k).unwrap(), True);
        assert_eq!(implies(True, Unknown, k).unwrap(), Unknown);
        assert_eq!(implies(False, False, Semantics::Classical2).unwrap(), True);
    }

    #[test]
    fn classical_rejects_unknown() {
        let c = Semantics::Classical2;
        assert!(matches!(implies(Unknown, True, c), Err(Error::Domain(_))));
        assert!(matches!(implies(True, Unknown, c), Err(Error::Domain(_))));
    }

    #[test]
    fn classical_is_material_implication() {
        for &a in Semantics::Classical2.values() {
            for &b in Semantics::Classical2.values() {
                let expected = if a == True && b == False { False } else { True };
                assert_eq!(implies(a, b, Semantics::Classical2).unwrap(), expected);
            }
        }
    }

    #[test]
    fn kernel_sizes() {
        assert_eq!(implication_kernel(Semantics::Kleene3).len(), 9);
        assert_eq!(implication_kernel(Semantics::Classical2).len(), 4);
    }

    #[test]
    fn small_bracketings() {
        assert!(matches!(enumerate_bracketings(0), Err(Error::Domain(_))));
        assert_eq!(enumerate_bracketings(1).unwrap(), vec![p(1)]);
        let three: Vec<String> = enumerate_bracketings(3)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(three, ["(p1 => (p2 => p3))", "((p1 => p2) => p3)"]);
        assert_eq!(enumerate_bracketings(4).unwrap().len(), 5);
    }

    #[test]
    fn bracketings_distinct_and_catalan() {
        for n in 1..=12 {
            let trees = enumerate_bracketings(n).unwrap();
            assert_eq!(BigUint::from(trees.len()), catalan(n), "n = {n}");
            let unique: std::collections::HashSet<_> = trees.iter().collect();
            assert_eq!(unique.len(), trees.len());
            assert!(trees.iter().all(|t| t.is_well_formed() && t.leaf_count() == n));
        }
    }

    #[test]
    fn valuation_order_is_msd_first() {
        let rows: Vec<String> = valuations(2, Semantics::Kleene3).into_iter().map(|v| v.to_string()).collect();
        assert_eq!(rows, ["0 0", "0 1", "0 2", "1 0", "1 1", "1 2", "2 0", "2 1", "2 2"]);
        assert_eq!(valuations(0, Semantics::Classical2).len(), 1);
        for (i, v) in valuations(4, Semantics::Kleene3).into_iter().enumerate() {
            assert_eq!(Valuation::from_row_index(i, 4, Semantics::Kleene3).unwrap(), v);
        }
        assert!(matches!(
            Valuation::from_row_index(4, 2, Semantics::Classical2),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let k = Semantics::Kleene3;
        let imp = Bracketing::node(p(1), p(2));
        assert_eq!(evaluate(&imp, &Valuation(vec![True, False]), k).unwrap(), False);
        assert_eq!(evaluate(&imp, &Valuation(vec![Unknown, True]), k).unwrap(), True);
        assert!(matches!(
            evaluate(&imp, &Valuation(vec![True]), k),
            Err(Error::Domain(_))
        ));
        assert!(evaluate(&imp, &Valuation(vec![Unknown, True]), Semantics::Classical2).is_err());
        assert!(evaluate(&Bracketing::node(p(2), p(1)), &Valuation(vec![True, True]), k).is_err());
    }

    #[test]
    fn two_leaf_trees_match_implies() {
        let imp = Bracketing::node(p(1), p(2));
        for sem in [Semantics::Classical2, Semantics::Kleene3] {
            for &a in sem.values() {
                for &b in sem.values() {
                    assert_eq!(
                        evaluate(&imp, &Valuation(vec![a, b]), sem).unwrap(),
                        implies(a, b, sem).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn all_false_valuation() {
        // 0 => x is 1 and 1 => 0 is 0, so under all-false the right comb
        // p1 => (p2 => ... => pn) is true while ((p1 => p2) => p3) is false
        let k = Semantics::Kleene3;
        let expected_true = [(2, 1), (3, 1), (4, 4)];
        for (n, count) in expected_true {
            let v = Valuation(vec![False; n]);
            let trees = enumerate_bracketings(n).unwrap();
            assert_eq!(evaluate(&trees[0], &v, k).unwrap(), True);
            let trues = trees.iter().filter(|t| evaluate(t, &v, k).unwrap() == True).count();
            assert_eq!(trues, count, "n = {n}");
        }
        let left_comb = Bracketing::node(Bracketing::node(p(1), p(2)), p(3));
        assert_eq!(evaluate(&left_comb, &Valuation(vec![False; 3]), k).unwrap(), False);
    }

    #[test]
    fn brute_counts_small() {
        let b = BruteBudget::default();
        let c1 = brute_counts(1, Semantics::Kleene3, &b).unwrap();
        assert_eq!((c1.t, c1.f, c1.u, c1.g), (1u32.into(), 1u32.into(), 1u32.into(), 3u32.into()));
        let c2 = brute_counts(2, Semantics::Kleene3, &b).unwrap();
        assert_eq!((c2.t, c2.f, c2.u, c2.g), (5u32.into(), 1u32.into(), 3u32.into(), 9u32.into()));
        let c3 = brute_counts(3, Semantics::Kleene3, &b).unwrap();
        assert_eq!((c3.t, c3.f, c3.u, c3.g), (30u32.into(), 6u32.into(), 18u32.into(), 54u32.into()));
        let d2 = brute_counts(2, Semantics::Classical2, &b).unwrap();
        assert_eq!((d2.t, d2.f, d2.u), (3u32.into(), 1u32.into(), 0u32.into()));
        assert_eq!(brute_counts(4, Semantics::Classical2, &b).unwrap().g, 80u32.into());
    }

    #[test]
    fn brute_budget_enforced() {
        let b = BruteBudget::uniform(3);
        assert!(matches!(
            brute_counts(4, Semantics::Kleene3, &b),
            Err(Error::Budget { n: 4, max: 3, .. })
        ));
        assert!(brute_counts(0, Semantics::Kleene3, &b).is_err());
    }

    #[test]
    fn tree_counts_examples() {
        let k = Semantics::Kleene3;
        assert_eq!(tree_counts(&p(1), k).tfu(), (1u32.into(), 1u32.into(), 1u32.into()));
        assert_eq!(
            tree_counts(&Bracketing::node(p(1), p(2)), k).tfu(),
            (5u32.into(), 1u32.into(), 3u32.into())
        );
    }

    #[test]
    fn tree_counts_sum_to_brute_counts() {
        let b = BruteBudget::default();
        for sem in [Semantics::Classical2, Semantics::Kleene3] {
            for n in 1..=6 {
                let mut sum = Tally::default();
                for tree in enumerate_bracketings(n).unwrap() {
                    sum.add_assign(&tree_counts(&tree, sem));
                }
                let brute = brute_counts(n, sem, &b).unwrap();
                assert_eq!(CountVector::from_tally(n, sem, &sum), brute);
                assert!(brute.is_consistent());
            }
        }
    }

    #[test]
    fn classical_is_kleene_subtable() {
        // restrict the Kleene tables to rows free of the unknown value
        for n in 1..=5 {
            let mut tally = [0u64; 3];
            for tree in enumerate_bracketings(n).unwrap() {
                for v in valuations(n, Semantics::Kleene3) {
                    if v.0.contains(&Unknown) {
                        continue;
                    }
                    tally[evaluate(&tree, &v, Semantics::Kleene3).unwrap().index()] += 1;
                }
            }
            let classical = brute_counts(n, Semantics::Classical2, &BruteBudget::default()).unwrap();
            assert_eq!(classical.f, tally[0].into());
            assert_eq!(classical.t, tally[1].into());
            assert_eq!(tally[2], 0);
        }
    }

    #[test]
    fn color_classes() {
        let b = BruteBudget::default();
        let c4 = color_class_counts(4, Semantics::Classical2, &b).unwrap();
        assert_eq!(c4[&(True, True)], 33u32.into());
        assert_eq!(c4[&(True, False)], 19u32.into());
        assert_eq!(c4[&(False, True)], 19u32.into());
        assert_eq!(c4[&(False, False)], 9u32.into());
        let c2 = color_class_counts(2, Semantics::Classical2, &b).unwrap();
        assert!(c2.values().all(|c| *c == BigUint::one()));
        let k2 = color_class_counts(2, Semantics::Kleene3, &b).unwrap();
        assert_eq!(k2.len(), 9);
        assert!(k2.values().all(|c| *c == BigUint::one()));
        assert!(matches!(
            color_class_counts(1, Semantics::Kleene3, &b),
            Err(Error::Domain(_))
        ));
        for sem in [Semantics::Classical2, Semantics::Kleene3] {
            for n in 2..=6 {
                let total: BigUint = color_class_counts(n, sem, &b).unwrap().values().sum();
                assert_eq!(total, CountVector::expected_total(n, sem));
            }
        }
    }
}
