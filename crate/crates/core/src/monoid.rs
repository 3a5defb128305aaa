//! The multiplicative monoid generated by the count series.
//!
//! Elements are kept symbolically as exponent vectors over the generators
//! `{T, F, U}` (Kleene) or `{R, S}` (classical); the empty product is the
//! identity `I(x) = 1`. A [`SeriesContext`] turns elements into truncated
//! series so that claims about the monoid can be checked coefficient by
//! coefficient on a finite prefix.
//!
//! In a commutative monoid every principal left ideal is a right ideal, so
//! Green's relations L, R and H coincide without computation; nothing here
//! checks them.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logic::{color_class_counts, BruteBudget, Semantics, TruthValue};
use crate::series::{closed_form, PowerSeries, SeriesName};
use crate::catalan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    T,
    F,
    U,
    R,
    S,
}

impl Generator {
    pub fn logic(self) -> Semantics {
        match self {
            Generator::T | Generator::F | Generator::U => Semantics::Kleene3,
            Generator::R | Generator::S => Semantics::Classical2,
        }
    }

    pub fn series_name(self) -> SeriesName {
        match self {
            Generator::T => SeriesName::T,
            Generator::F => SeriesName::F,
            Generator::U => SeriesName::U,
            Generator::R => SeriesName::R,
            Generator::S => SeriesName::S,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T" => Ok(Generator::T),
            "F" => Ok(Generator::F),
            "U" => Ok(Generator::U),
            "R" => Ok(Generator::R),
            "S" => Ok(Generator::S),
            _ => Err(Error::Domain(format!("unknown generator {s:?}"))),
        }
    }

    fn slot(self) -> usize {
        match self {
            Generator::T | Generator::R => 0,
            Generator::F | Generator::S => 1,
            Generator::U => 2,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::T => "T",
            Generator::F => "F",
            Generator::U => "U",
            Generator::R => "R",
            Generator::S => "S",
        };
        f.write_str(s)
    }
}

/// Generators of the monoid for one logic, in exponent-vector order.
pub fn generators(logic: Semantics) -> &'static [Generator] {
    match logic {
        Semantics::Kleene3 => &[Generator::T, Generator::F, Generator::U],
        Semantics::Classical2 => &[Generator::R, Generator::S],
    }
}

/// The "total entries" series the bounds compare against: `G` or `G2`.
pub fn total_series_name(logic: Semantics) -> SeriesName {
    match logic {
        Semantics::Kleene3 => SeriesName::G,
        Semantics::Classical2 => SeriesName::G2,
    }
}

/// A product of generator powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidElement {
    logic: Semantics,
    exponents: Vec<u32>,
}

impl MonoidElement {
    pub fn identity(logic: Semantics) -> Self {
        MonoidElement {
            logic,
            exponents: vec![0; generators(logic).len()],
        }
    }

    pub fn power(g: Generator, k: u32) -> Self {
        let mut e = Self::identity(g.logic());
        e.exponents[g.slot()] = k;
        e
    }

    pub fn generator(g: Generator) -> Self {
        Self::power(g, 1)
    }

    /// Exponents in the order of [`generators`].
    pub fn from_exponents(logic: Semantics, exponents: &[u32]) -> Result<Self> {
        if exponents.len() != generators(logic).len() {
            return Err(Error::Domain(format!(
                "{} logic has {} generators, got {} exponents",
                logic,
                generators(logic).len(),
                exponents.len()
            )));
        }
        Ok(MonoidElement {
            logic,
            exponents: exponents.to_vec(),
        })
    }

    pub fn logic(&self) -> Semantics {
        self.logic
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        if g.logic() == self.logic {
            self.exponents[g.slot()]
        } else {
            0
        }
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &MonoidElement) -> Result<MonoidElement> {
        if self.logic != other.logic {
            return Err(Error::Domain(format!(
                "cannot multiply a {} element by a {} element",
                self.logic, other.logic
            )));
        }
        Ok(MonoidElement {
            logic: self.logic,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> MonoidElement {
        MonoidElement {
            logic: self.logic,
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }

    /// Parses `I`, `T`, `T^2*F`, `U^3 F^2` and the like.
    pub fn parse(logic: Semantics, s: &str) -> Result<Self> {
        let mut e = Self::identity(logic);
        for factor in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            if factor.eq_ignore_ascii_case("I") {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, k)) => (
                    n,
                    k.parse::<u32>()
                        .map_err(|_| Error::Domain(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let g = Generator::parse(name)?;
            if g.logic() != logic {
                return Err(Error::Domain(format!("{g} is not a {logic} generator")));
            }
            e.exponents[g.slot()] += exp;
        }
        Ok(e)
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("I");
        }
        let mut first = true;
        for (g, &k) in generators(self.logic).iter().zip(&self.exponents) {
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Deliberate corruption of one generator coefficient, for negative
/// controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tamper {
    pub generator: Generator,
    pub n: usize,
    pub delta: i64,
}

impl Tamper {
    /// `GEN:N:DELTA`, e.g. `T:3:1`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Domain(format!("tamper spec {s:?} is not GEN:N:DELTA"));
        if parts.len() != 3 {
            return Err(bad());
        }
        Ok(Tamper {
            generator: Generator::parse(parts[0])?,
            n: parts[1].parse().map_err(|_| bad())?,
            delta: parts[2].parse().map_err(|_| bad())?,
        })
    }
}

/// Generator series for one logic at a fixed order, with memoized powers.
#[derive(Debug)]
pub struct SeriesContext {
    logic: Semantics,
    order: usize,
    base: Vec<PowerSeries>,
    total: PowerSeries,
    powers: RwLock<HashMap<(usize, u32), PowerSeries>>,
}

impl SeriesContext {
    pub fn new(logic: Semantics, order: usize) -> Result<Self> {
        let base = generators(logic)
            .iter()
            .map(|g| closed_form(g.series_name(), order))
            .collect::<Result<Vec<_>>>()?;
        let total = closed_form(total_series_name(logic), order)?;
        Ok(SeriesContext {
            logic,
            order,
            base,
            total,
            powers: RwLock::new(HashMap::new()),
        })
    }

    /// Applies `tamper` if it names a generator of this logic.
    pub fn tampered(mut self, tamper: &Tamper) -> Result<Self> {
        if tamper.generator.logic() != self.logic {
            return Ok(self);
        }
        let slot = tamper.generator.slot();
        let mut coeffs = self.base[slot].coeffs().to_vec();
        let c = coeffs.get_mut(tamper.n).ok_or_else(|| Error::Range {
            index: tamper.n,
            valid: format!("0..={}", self.order),
        })?;
        *c += BigRational::from_integer(tamper.delta.into());
        self.base[slot] = PowerSeries::from_coeffs(coeffs);
        self.powers.get_mut().expect("memo lock poisoned").clear();
        Ok(self)
    }

    pub fn logic(&self) -> Semantics {
        self.logic
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator_series(&self, g: Generator) -> Result<&PowerSeries> {
        if g.logic() != self.logic {
            return Err(Error::Domain(format!("{g} is not a {} generator", self.logic)));
        }
        Ok(&self.base[g.slot()])
    }

    /// `G` for Kleene, `G2` for classical.
    pub fn total(&self) -> &PowerSeries {
        &self.total
    }

    fn power_of_slot(&self, slot: usize, k: u32) -> PowerSeries {
        if k == 0 {
            return PowerSeries::one(self.order);
        }
        if k == 1 {
            return self.base[slot].clone();
        }
        if let Some(p) = self.powers.read().expect("memo lock poisoned").get(&(slot, k)) {
            return p.clone();
        }
        let p = self.power_of_slot(slot, k - 1).mul(&self.base[slot]);
        self.powers
            .write()
            .expect("memo lock poisoned")
            .insert((slot, k), p.clone());
        p
    }

    pub fn power(&self, g: Generator, k: u32) -> Result<PowerSeries> {
        self.generator_series(g)?;
        Ok(self.power_of_slot(g.slot(), k))
    }

    /// Multiplies out the generator powers of `e`.
    pub fn realize(&self, e: &MonoidElement) -> Result<PowerSeries> {
        if e.logic != self.logic {
            return Err(Error::Domain(format!(
                "{} element realized in a {} context",
                e.logic, self.logic
            )));
        }
        let mut acc = PowerSeries::one(self.order);
        for (slot, &k) in e.exponents.iter().enumerate() {
            if k > 0 {
                acc = acc.mul(&self.power_of_slot(slot, k));
            }
        }
        Ok(acc)
    }
}

/// Expands `e` at order `order` from fresh closed forms.
pub fn realize(e: &MonoidElement, order: usize) -> Result<PowerSeries> {
    SeriesContext::new(e.logic(), order)?.realize(e)
}

/// Exact values at the first place a claim fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which instance of the claim failed, e.g. `T^2*F vs G`.
    pub case: String,
    pub n: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
    /// The relation that should have held between `lhs` and `rhs`.
    pub relation: &'static str,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: at n = {}, expected lhs {} rhs but lhs = {}, rhs = {}",
            self.case, self.n, self.relation, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Verified,
    Counterexample(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    /// Highest coefficient index examined.
    pub order: usize,
    /// Number of instances checked.
    pub cases: usize,
    pub status: Status,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            Status::Verified => None,
            Status::Counterexample(w) => Some(w),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Verified => write!(
                f,
                "[verified] {} ({} cases, n <= {})",
                self.claim, self.cases, self.order
            ),
            Status::Counterexample(w) => write!(
                f,
                "[COUNTEREXAMPLE] {} ({} cases, n <= {}): {w}",
                self.claim, self.cases, self.order
            ),
        }
    }
}

/// Accumulates instance checks for one claim, keeping the first failure.
struct Checker {
    claim: String,
    order: usize,
    cases: usize,
    failure: Option<Witness>,
}

impl Checker {
    fn new(claim: impl Into<String>, order: usize) -> Self {
        Checker {
            claim: claim.into(),
            order,
            cases: 0,
            failure: None,
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    /// Coefficientwise equality for `n` in `from..=order`.
    fn equal(&mut self, case: impl Fn() -> String, lhs: &PowerSeries, rhs: &PowerSeries, from: usize) {
        if self.done() {
            return;
        }
        self.cases += 1;
        let top = self.order.min(lhs.order()).min(rhs.order());
        for n in from..=top {
            let (a, b) = (&lhs.coeffs()[n], &rhs.coeffs()[n]);
            if a != b {
                self.failure = Some(Witness {
                    case: case(),
                    n,
                    lhs: a.clone(),
                    rhs: b.clone(),
                    relation: "==",
                });
                return;
            }
        }
    }

    fn value_equal(&mut self, case: impl Fn() -> String, n: usize, lhs: &BigRational, rhs: &BigRational) {
        if self.done() {
            return;
        }
        self.cases += 1;
        if lhs != rhs {
            self.failure = Some(Witness {
                case: case(),
                n,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                relation: "==",
            });
        }
    }

    /// `lhs[n] < rhs[n]` for `n` in `from..=order`, plus `lhs[n]` a
    /// nonnegative integer.
    fn strictly_below(&mut self, case: impl Fn() -> String, lhs: &PowerSeries, rhs: &PowerSeries, from: usize) {
        if self.done() {
            return;
        }
        self.cases += 1;
        let top = self.order.min(lhs.order()).min(rhs.order());
        for n in from..=top {
            let (a, b) = (&lhs.coeffs()[n], &rhs.coeffs()[n]);
            if !a.is_integer() || a.is_negative() {
                self.failure = Some(Witness {
                    case: case(),
                    n,
                    lhs: a.clone(),
                    rhs: BigRational::zero(),
                    relation: "is a nonnegative integer, compared with",
                });
                return;
            }
            if a >= b {
                self.failure = Some(Witness {
                    case: case(),
                    n,
                    lhs: a.clone(),
                    rhs: b.clone(),
                    relation: "<",
                });
                return;
            }
        }
    }

    /// `lhs[n] <= rhs[n]`, strict wherever `rhs[n] != 0`.
    fn dominated(&mut self, case: impl Fn() -> String, lhs: &PowerSeries, rhs: &PowerSeries, from: usize) {
        if self.done() {
            return;
        }
        self.cases += 1;
        let top = self.order.min(lhs.order()).min(rhs.order());
        for n in from..=top {
            let (a, b) = (&lhs.coeffs()[n], &rhs.coeffs()[n]);
            let ok = if b.is_zero() { a <= b } else { a < b };
            if !ok {
                self.failure = Some(Witness {
                    case: case(),
                    n,
                    lhs: a.clone(),
                    rhs: b.clone(),
                    relation: if b.is_zero() { "<=" } else { "<" },
                });
                return;
            }
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            claim: self.claim,
            order: self.order,
            cases: self.cases,
            status: match self.failure {
                None => Status::Verified,
                Some(w) => Status::Counterexample(w),
            },
        }
    }
}

/// `[x^n](AB) = [x^n](BA)` for every sampled pair.
pub fn verify_commutativity(
    ctx: &SeriesContext,
    pairs: &[(MonoidElement, MonoidElement)],
) -> Result<VerificationReport> {
    let mut check = Checker::new(format!("{} commutativity", ctx.logic), ctx.order);
    for (a, b) in pairs {
        let (sa, sb) = (ctx.realize(a)?, ctx.realize(b)?);
        check.equal(|| format!("({a})({b}) vs ({b})({a})"), &sa.mul(&sb), &sb.mul(&sa), 0);
        // the symbolic product must realize to the series product
        check.equal(|| format!("realize({a} * {b})"), &ctx.realize(&a.mul(b)?)?, &sa.mul(&sb), 0);
    }
    Ok(check.finish())
}

/// `[x^n]((AB)C) = [x^n](A(BC))` for every sampled triple.
pub fn verify_associativity(
    ctx: &SeriesContext,
    triples: &[(MonoidElement, MonoidElement, MonoidElement)],
) -> Result<VerificationReport> {
    let mut check = Checker::new(format!("{} associativity", ctx.logic), ctx.order);
    for (a, b, c) in triples {
        let (sa, sb, sc) = (ctx.realize(a)?, ctx.realize(b)?, ctx.realize(c)?);
        check.equal(
            || format!("(({a})({b}))({c}) vs ({a})(({b})({c}))"),
            &sa.mul(&sb).mul(&sc),
            &sa.mul(&sb.mul(&sc)),
            0,
        );
    }
    Ok(check.finish())
}

/// `[x^n] e < [x^n] G` (or `G2`) for `2 <= n <= order`.
pub fn verify_bound(ctx: &SeriesContext, e: &MonoidElement) -> Result<VerificationReport> {
    verify_bounds(ctx, std::slice::from_ref(e))
}

/// [`verify_bound`] over many elements, reported as one claim.
pub fn verify_bounds(ctx: &SeriesContext, elements: &[MonoidElement]) -> Result<VerificationReport> {
    let total = total_series_name(ctx.logic);
    let mut check = Checker::new(format!("{} strict bound against {}", ctx.logic, total), ctx.order);
    for e in elements {
        if e.is_identity() {
            return Err(Error::Domain(
                "the bound is claimed for count elements only, not for I".into(),
            ));
        }
        let s = ctx.realize(e)?;
        check.strictly_below(|| format!("{e} vs {total}"), &s, ctx.total(), 2);
    }
    Ok(check.finish())
}

/// The power identities used for the bound argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerIdentity {
    /// `3 U^k = U^(k-1) - x U^(k-2)`
    U,
    /// `F^k = 2 F^(k-1) U - F^(k-1) + x F^(k-2)`
    F,
    /// `T^k = 2/3 T^(k-1) G^2 - 2/3 T^(k-1) G F + T^(k-1) F^2`
    T,
    /// The `T` identity with the extra `x T^(k-1)` term it needs to hold.
    TWithLinearTerm,
}

impl PowerIdentity {
    pub fn statement(self) -> &'static str {
        match self {
            PowerIdentity::U => "3U^k = U^(k-1) - x U^(k-2)",
            PowerIdentity::F => "F^k = 2F^(k-1)U - F^(k-1) + x F^(k-2)",
            PowerIdentity::T => "T^k = 2/3 T^(k-1)G^2 - 2/3 T^(k-1)GF + T^(k-1)F^2",
            PowerIdentity::TWithLinearTerm => {
                "T^k = 2/3 T^(k-1)G^2 - 2/3 T^(k-1)GF + T^(k-1)F^2 + x T^(k-1)"
            }
        }
    }

    /// Both sides at exponent `k >= 2`.
    fn sides(self, ctx: &SeriesContext, k: u32) -> Result<(PowerSeries, PowerSeries)> {
        let order = ctx.order;
        let third2 = BigRational::new(BigInt::from(2), BigInt::from(3));
        let x = PowerSeries::x(order);
        let g = ctx.total();
        Ok(match self {
            PowerIdentity::U => {
                let lhs = ctx.power(Generator::U, k)?.scale_int(3);
                let rhs = ctx
                    .power(Generator::U, k - 1)?
                    .sub(&x.mul(&ctx.power(Generator::U, k - 2)?));
                (lhs, rhs)
            }
            PowerIdentity::F => {
                let u = ctx.generator_series(Generator::U)?;
                let prev = ctx.power(Generator::F, k - 1)?;
                let rhs = prev
                    .mul(u)
                    .scale_int(2)
                    .sub(&prev)
                    .add(&x.mul(&ctx.power(Generator::F, k - 2)?));
                (ctx.power(Generator::F, k)?, rhs)
            }
            PowerIdentity::T | PowerIdentity::TWithLinearTerm => {
                let f = ctx.generator_series(Generator::F)?;
                let prev = ctx.power(Generator::T, k - 1)?;
                let mut rhs = prev
                    .mul(&g.mul(g))
                    .scale(&third2)
                    .sub(&prev.mul(&g.mul(f)).scale(&third2))
                    .add(&prev.mul(&f.mul(f)));
                if self == PowerIdentity::TWithLinearTerm {
                    rhs = rhs.add(&x.mul(&prev));
                }
                (ctx.power(Generator::T, k)?, rhs)
            }
        })
    }
}

/// Checks one identity for `2 <= k <= k_max` at every coefficient up to the
/// context's order.
pub fn verify_power_identity(
    ctx: &SeriesContext,
    identity: PowerIdentity,
    k_max: u32,
) -> Result<VerificationReport> {
    if ctx.logic != Semantics::Kleene3 {
        return Err(Error::Domain("the power identities concern the Kleene generators".into()));
    }
    if k_max < 2 {
        return Err(Error::Domain("k_max must be at least 2".into()));
    }
    let mut check = Checker::new(format!("power identity {}", identity.statement()), ctx.order);
    for k in 2..=k_max {
        let (lhs, rhs) = identity.sides(ctx, k)?;
        check.equal(|| format!("k = {k}"), &lhs, &rhs, 0);
    }
    Ok(check.finish())
}

/// The three identities as stated (`U`, `F`, `T`).
pub fn verify_power_identities(ctx: &SeriesContext, k_max: u32) -> Result<Vec<VerificationReport>> {
    [PowerIdentity::U, PowerIdentity::F, PowerIdentity::T]
        .into_iter()
        .map(|id| verify_power_identity(ctx, id, k_max))
        .collect()
}

/// Sums and products that partition the table entries:
/// `T + F + U = G`, `G = 3U`, `R + S = G2`, `[x^n] G2 = 2^n C_n`,
/// `RR + RS + SR + SS = G2^2` with `[x^n] G2^2 = [x^n] G2` for `n >= 2`, and
/// the four classical products against brute-force color classes for
/// `2 <= n <= color_n_max` (clamped to the brute-force budget).
pub fn verify_partitions(
    kleene: &SeriesContext,
    classical: &SeriesContext,
    budget: &BruteBudget,
    color_n_max: usize,
) -> Result<Vec<VerificationReport>> {
    if kleene.logic != Semantics::Kleene3 || classical.logic != Semantics::Classical2 {
        return Err(Error::Domain("expected a Kleene and a classical context".into()));
    }
    let mut out = Vec::new();
    let (t, f, u) = (
        kleene.generator_series(Generator::T)?,
        kleene.generator_series(Generator::F)?,
        kleene.generator_series(Generator::U)?,
    );
    let g = kleene.total();

    let mut c = Checker::new("T + F + U = G", kleene.order);
    c.equal(|| "T + F + U vs G".into(), &t.add(f).add(u), g, 0);
    out.push(c.finish());

    let mut c = Checker::new("G = 3U", kleene.order);
    c.equal(|| "G vs 3U".into(), g, &u.scale_int(3), 0);
    out.push(c.finish());

    let (r, s) = (
        classical.generator_series(Generator::R)?,
        classical.generator_series(Generator::S)?,
    );
    let g2 = classical.total();
    let mut c = Checker::new("R + S = G2", classical.order);
    c.equal(|| "R + S vs G2".into(), &r.add(s), g2, 0);
    out.push(c.finish());

    let mut c = Checker::new("[x^n] G2 = 2^n C_n", classical.order);
    let catalan_totals = PowerSeries::from_integers(
        classical.order,
        std::iter::once(BigInt::zero()).chain((1..=classical.order).map(|n| {
            BigInt::from(BigInt::from(2).pow(n as u32)) * BigInt::from(catalan(n))
        })),
    );
    c.equal(|| "G2 vs 2^n C_n".into(), g2, &catalan_totals, 0);
    out.push(c.finish());

    let (rr, rs, sr, ss) = (r.mul(r), r.mul(s), s.mul(r), s.mul(s));
    let mut c = Checker::new("RR + RS + SR + SS = G2^2 = G2 for n >= 2", classical.order);
    let four = rr.add(&rs).add(&sr).add(&ss);
    c.equal(|| "RR + RS + SR + SS vs G2^2".into(), &four, &g2.mul(g2), 0);
    c.equal(|| "RR + RS + SR + SS vs G2".into(), &four, g2, 2);
    out.push(c.finish());

    let top = color_n_max
        .min(classical.order)
        .min(budget.max_n(Semantics::Classical2));
    let mut c = Checker::new("color classes = products of R and S", top);
    for n in 2..=top {
        let classes = color_class_counts(n, Semantics::Classical2, budget)?;
        use TruthValue::{False, True};
        for ((a, b), prod) in [((True, True), &rr), ((True, False), &rs), ((False, True), &sr), ((False, False), &ss)] {
            let brute = BigRational::from_integer(BigInt::from(classes[&(a, b)].clone()));
            let label = |v: TruthValue| if v == True { "R" } else { "S" };
            c.value_equal(
                || format!("class ({a},{b}) vs {}{}", label(a), label(b)),
                n,
                &brute,
                &prod.coeffs()[n],
            );
        }
    }
    out.push(c.finish());
    Ok(out)
}

/// For each `(P, A)`: the product `P * A` stays strictly below the total
/// series for `2 <= n <= order`, i.e. it is again a member of the bounded set.
pub fn verify_ideal_samples(
    ctx: &SeriesContext,
    samples: &[(MonoidElement, MonoidElement)],
) -> Result<VerificationReport> {
    let total = total_series_name(ctx.logic);
    let mut check = Checker::new(format!("{} ideal closure P*A < {}", ctx.logic, total), ctx.order);
    for (p, a) in samples {
        let product = p.mul(a)?;
        if product.is_identity() {
            continue;
        }
        let s = ctx.realize(p)?.mul(&ctx.realize(a)?);
        check.strictly_below(|| format!("({p})*({a}) vs {total}"), &s, ctx.total(), 2);
    }
    Ok(check.finish())
}

/// The substitution chains `U^a (UF)^k <= U^k`, `U^b (UT)^k <= T^k` and
/// `F^b (FT)^k <= T^k`, strict wherever the right side is nonzero, over every
/// `(a, k)` in `params` and `2 <= n <= order`.
pub fn verify_substitution_chains(
    ctx: &SeriesContext,
    params: &[(u32, u32)],
) -> Result<VerificationReport> {
    if ctx.logic != Semantics::Kleene3 {
        return Err(Error::Domain("the substitution chains concern the Kleene generators".into()));
    }
    use Generator::{F, T, U};
    let mut check = Checker::new("substitution chains U^a(UF)^k <= U^k, U^b(UT)^k <= T^k, F^b(FT)^k <= T^k", ctx.order);
    for &(a, k) in params {
        let uf = MonoidElement::power(U, a).mul(&MonoidElement::power(U, k).mul(&MonoidElement::power(F, k))?)?;
        let ut = MonoidElement::power(U, a).mul(&MonoidElement::power(U, k).mul(&MonoidElement::power(T, k))?)?;
        let ft = MonoidElement::power(F, a).mul(&MonoidElement::power(F, k).mul(&MonoidElement::power(T, k))?)?;
        let (uk, tk) = (ctx.power(U, k)?, ctx.power(T, k)?);
        check.dominated(|| format!("U^{a}(UF)^{k} vs U^{k}"), &ctx.realize(&uf)?, &uk, 2);
        check.dominated(|| format!("U^{a}(UT)^{k} vs T^{k}"), &ctx.realize(&ut)?, &tk, 2);
        check.dominated(|| format!("F^{a}(FT)^{k} vs T^{k}"), &ctx.realize(&ft)?, &tk, 2);
    }
    Ok(check.finish())
}

/// Which finite slice of the monoid to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    /// Every exponent vector with total degree at most this is included.
    pub max_total_degree: u32,
    pub random_count: usize,
    pub random_max_exponent: u32,
    pub pair_count: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            max_total_degree: 5,
            random_count: 100,
            random_max_exponent: 8,
            pair_count: 200,
            seed: 0x5eed,
        }
    }
}

fn vectors_up_to(width: usize, max_degree: u32) -> Vec<Vec<u32>> {
    if width == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for head in 0..=max_degree {
        for mut tail in vectors_up_to(width - 1, max_degree - head) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

impl SampleSpec {
    fn rng(&self, logic: Semantics, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream * 2 + (logic == Semantics::Kleene3) as u64);
        rng
    }

    /// The identity, all vectors of bounded total degree, then the seeded
    /// random vectors. Deterministic in the seed.
    pub fn elements(&self, logic: Semantics) -> Vec<MonoidElement> {
        let width = generators(logic).len();
        let mut out: Vec<MonoidElement> = vectors_up_to(width, self.max_total_degree)
            .into_iter()
            .map(|v| MonoidElement { logic, exponents: v })
            .collect();
        out.sort_by_key(|e| (e.total_degree(), std::cmp::Reverse(e.exponents.clone())));
        let mut rng = self.rng(logic, 0);
        for _ in 0..self.random_count {
            let exponents = (0..width)
                .map(|_| rng.gen_range(0..=self.random_max_exponent))
                .collect();
            out.push(MonoidElement { logic, exponents });
        }
        out
    }

    /// Non-identity elements.
    pub fn count_elements(&self, logic: Semantics) -> Vec<MonoidElement> {
        self.elements(logic).into_iter().filter(|e| !e.is_identity()).collect()
    }

    pub fn pairs(&self, logic: Semantics) -> Vec<(MonoidElement, MonoidElement)> {
        let elems = self.elements(logic);
        let mut rng = self.rng(logic, 1);
        let mut out: Vec<_> = elems
            .iter()
            .map(|e| (MonoidElement::identity(logic), e.clone()))
            .collect();
        for _ in 0..self.pair_count {
            let a = &elems[rng.gen_range(0..elems.len())];
            let b = &elems[rng.gen_range(0..elems.len())];
            out.push((a.clone(), b.clone()));
        }
        out
    }

    pub fn triples(&self, logic: Semantics) -> Vec<(MonoidElement, MonoidElement, MonoidElement)> {
        let elems = self.elements(logic);
        let id = MonoidElement::identity(logic);
        let mut rng = self.rng(logic, 2);
        let mut out: Vec<_> = elems.iter().map(|e| (id.clone(), id.clone(), e.clone())).collect();
        for _ in 0..self.pair_count {
            let mut pick = || elems[rng.gen_range(0..elems.len())].clone();
            out.push((pick(), pick(), pick()));
        }
        out
    }

    /// `(P, A)` with `P` a power `g^m` (`1 <= m <= 3`) of one generator, or
    /// `I`, and `A` any sampled element.
    pub fn ideal_samples(&self, logic: Semantics) -> Vec<(MonoidElement, MonoidElement)> {
        let elems = self.elements(logic);
        let mut left = vec![MonoidElement::identity(logic)];
        for &g in generators(logic) {
            for m in 1..=3 {
                left.push(MonoidElement::power(g, m));
            }
        }
        let mut out = Vec::new();
        for p in &left {
            for a in &elems {
                out.push((p.clone(), a.clone()));
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Order for commutativity, associativity, bounds and ideal samples.
    pub order: usize,
    /// Order for the power and partition identities.
    pub identity_order: usize,
    pub k_max: u32,
    pub sample: SampleSpec,
    pub budget: BruteBudget,
    /// Largest `n` for the brute-force color-class cross-check.
    pub color_n_max: usize,
    pub tamper: Option<Tamper>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            order: 40,
            identity_order: 50,
            k_max: 6,
            sample: SampleSpec::default(),
            budget: BruteBudget::default(),
            color_n_max: 9,
            tamper: None,
        }
    }
}

/// Claims from the same circle of results that have no finite check here.
pub const UNVERIFIED_CLAIMS: &[&str] = &[
    "G2 is a submonoid but not an ideal of G3 (no witness available; not certified)",
    "C_R and C_S are not ideals of G3 (no witness available; not certified)",
    "Green's relations L = R = H on G3 (holds in every commutative monoid; no runtime check)",
];

fn context(logic: Semantics, order: usize, tamper: Option<&Tamper>) -> Result<SeriesContext> {
    let ctx = SeriesContext::new(logic, order)?;
    match tamper {
        Some(t) => ctx.tampered(t),
        None => Ok(ctx),
    }
}

/// Runs every claim checker and returns the reports in a fixed order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    if cfg.order < 2 || cfg.identity_order < 2 {
        return Err(Error::Domain("suite orders must be at least 2".into()));
    }
    let tamper = cfg.tamper.as_ref();
    let mut out = Vec::new();
    for logic in [Semantics::Kleene3, Semantics::Classical2] {
        let ctx = context(logic, cfg.order, tamper)?;
        out.push(verify_commutativity(&ctx, &cfg.sample.pairs(logic))?);
        out.push(verify_associativity(&ctx, &cfg.sample.triples(logic))?);
        out.push(verify_bounds(&ctx, &cfg.sample.count_elements(logic))?);
        out.push(verify_ideal_samples(&ctx, &cfg.sample.ideal_samples(logic))?);
    }
    let kleene = context(Semantics::Kleene3, cfg.order, tamper)?;
    let params: Vec<(u32, u32)> = (0..=4).flat_map(|a| (1..=4).map(move |k| (a, k))).collect();
    out.push(verify_substitution_chains(&kleene, &params)?);

    let kleene_id = context(Semantics::Kleene3, cfg.identity_order, tamper)?;
    let classical_id = context(Semantics::Classical2, cfg.identity_order, tamper)?;
    out.extend(verify_power_identities(&kleene_id, cfg.k_max)?);
    out.extend(verify_partitions(&kleene_id, &classical_id, &cfg.budget, cfg.color_n_max)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn k(s: &str) -> MonoidElement {
        MonoidElement::parse(Semantics::Kleene3, s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(k("T^2*F").to_string(), "T^2*F");
        assert_eq!(k("F T T").to_string(), "T^2*F");
        assert_eq!(k("I").to_string(), "I");
        assert!(k("I").is_identity());
        assert!(MonoidElement::parse(Semantics::Kleene3, "R").is_err());
        assert!(MonoidElement::parse(Semantics::Kleene3, "T^x").is_err());
        assert_eq!(MonoidElement::parse(Semantics::Classical2, "R^3 S").unwrap().exponents(), [3, 1]);
    }

    #[test]
    fn element_products() {
        assert_eq!(k("U^2").mul(&k("T^3*F")).unwrap(), k("T^3*F*U^2"));
        assert_eq!(k("T*F").pow(3), k("T^3*F^3"));
        let r = MonoidElement::generator(Generator::R);
        assert!(k("T").mul(&r).is_err());
        assert_eq!(k("I").total_degree(), 0);
    }

    #[test]
    fn realize_examples() {
        assert_eq!(ints(&realize(&k("I"), 3).unwrap()), [1, 0, 0, 0]);
        assert_eq!(ints(&realize(&k("U*F"), 3).unwrap()), [0, 0, 1, 4]);
        assert_eq!(ints(&realize(&k("T^2"), 3).unwrap()), [0, 0, 1, 10]);
    }

    #[test]
    fn realize_is_a_morphism() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 20).unwrap();
        for (a, b) in [("T", "F"), ("U^2", "T^3*F"), ("I", "F^4"), ("T*U", "T*U")] {
            let (a, b) = (k(a), k(b));
            assert_eq!(
                ctx.realize(&a.mul(&b).unwrap()).unwrap(),
                ctx.realize(&a).unwrap().mul(&ctx.realize(&b).unwrap())
            );
        }
        assert!(ctx.realize(&MonoidElement::generator(Generator::S)).is_err());
    }

    #[test]
    fn commutativity_and_associativity_examples() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 20).unwrap();
        let pairs = [(k("T"), k("F")), (k("U^2"), k("T^3*F")), (k("I"), k("T*U"))];
        assert!(verify_commutativity(&ctx, &pairs).unwrap().is_verified());
        let triples = [(k("T"), k("F"), k("U")), (k("U^2"), k("F"), k("T^3")), (k("I"), k("I"), k("F"))];
        assert!(verify_associativity(&ctx, &triples).unwrap().is_verified());
    }

    #[test]
    fn bound_examples() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 40).unwrap();
        for e in ["T", "U^3*F^2", "T^2"] {
            let rep = verify_bound(&ctx, &k(e)).unwrap();
            assert!(rep.is_verified(), "{rep}");
        }
        assert!(matches!(verify_bound(&ctx, &k("I")), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_detects_violation() {
        // pushing t_3 up to g_3 = 54 breaks strictness exactly there
        let ctx = SeriesContext::new(Semantics::Kleene3, 10)
            .unwrap()
            .tampered(&Tamper { generator: Generator::T, n: 3, delta: 24 })
            .unwrap();
        let rep = verify_bound(&ctx, &k("T")).unwrap();
        let w = rep.witness().unwrap();
        assert_eq!(w.n, 3);
        assert_eq!(w.lhs, BigRational::from_integer(54.into()));
        assert_eq!(w.rhs, BigRational::from_integer(54.into()));
    }

    #[test]
    fn u_and_f_identities_hold() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 40).unwrap();
        assert!(verify_power_identity(&ctx, PowerIdentity::U, 6).unwrap().is_verified());
        assert!(verify_power_identity(&ctx, PowerIdentity::F, 6).unwrap().is_verified());
        assert!(verify_power_identity(&ctx, PowerIdentity::TWithLinearTerm, 6).unwrap().is_verified());
    }

    #[test]
    fn f_identity_at_n3() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 3).unwrap();
        let (lhs, rhs) = PowerIdentity::F.sides(&ctx, 2).unwrap();
        assert_eq!(lhs.coeffs()[3], BigRational::from_integer(2.into()));
        assert_eq!(rhs.coeffs()[3], BigRational::from_integer(2.into()));
    }

    #[test]
    fn t_identity_as_stated_fails_at_k2_n2() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 20).unwrap();
        let rep = verify_power_identity(&ctx, PowerIdentity::T, 6).unwrap();
        let w = rep.witness().expect("missing x T^(k-1) term");
        assert_eq!((w.case.as_str(), w.n), ("k = 2", 2));
        assert_eq!(w.lhs, BigRational::from_integer(1.into()));
        assert!(w.rhs.is_zero());
    }

    #[test]
    fn identity_preconditions() {
        let ctx = SeriesContext::new(Semantics::Classical2, 5).unwrap();
        assert!(verify_power_identity(&ctx, PowerIdentity::U, 3).is_err());
        let ctx = SeriesContext::new(Semantics::Kleene3, 5).unwrap();
        assert!(verify_power_identity(&ctx, PowerIdentity::U, 1).is_err());
    }

    #[test]
    fn partitions_hold() {
        let kl = SeriesContext::new(Semantics::Kleene3, 30).unwrap();
        let cl = SeriesContext::new(Semantics::Classical2, 30).unwrap();
        for rep in verify_partitions(&kl, &cl, &BruteBudget::default(), 6).unwrap() {
            assert!(rep.is_verified(), "{rep}");
        }
    }

    #[test]
    fn partitions_catch_tampering() {
        let t = Tamper { generator: Generator::S, n: 4, delta: 1 };
        let kl = SeriesContext::new(Semantics::Kleene3, 10).unwrap();
        let cl = SeriesContext::new(Semantics::Classical2, 10).unwrap().tampered(&t).unwrap();
        let reps = verify_partitions(&kl, &cl, &BruteBudget::default(), 5).unwrap();
        let failed: Vec<_> = reps.iter().filter(|r| !r.is_verified()).collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().any(|r| r.witness().unwrap().n == 4));
    }

    #[test]
    fn ideal_examples() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 40).unwrap();
        let samples = [(k("T^2"), k("U*F")), (k("U"), k("I")), (k("F^3"), k("T^2*U^2"))];
        assert!(verify_ideal_samples(&ctx, &samples).unwrap().is_verified());
    }

    #[test]
    fn substitution_chains_hold() {
        let ctx = SeriesContext::new(Semantics::Kleene3, 30).unwrap();
        let rep = verify_substitution_chains(&ctx, &[(0, 1), (1, 2), (3, 2), (2, 4)]).unwrap();
        assert!(rep.is_verified(), "{rep}");
    }

    #[test]
    fn samples_are_deterministic() {
        let spec = SampleSpec::default();
        let a = spec.elements(Semantics::Kleene3);
        assert_eq!(a, spec.elements(Semantics::Kleene3));
        // C(5 + 3, 3) bounded-degree vectors plus the random ones
        assert_eq!(a.len(), 56 + 100);
        assert_eq!(spec.elements(Semantics::Classical2).len(), 21 + 100);
        assert!(a[0].is_identity());
        let other = SampleSpec { seed: 7, ..spec };
        assert_ne!(a, other.elements(Semantics::Kleene3));
        assert_eq!(spec.pairs(Semantics::Kleene3), spec.pairs(Semantics::Kleene3));
    }

    #[test]
    fn tamper_parse() {
        assert_eq!(
            Tamper::parse("t:3:-2").unwrap(),
            Tamper { generator: Generator::T, n: 3, delta: -2 }
        );
        assert!(Tamper::parse("T:3").is_err());
        assert!(Tamper::parse("Q:3:1").is_err());
    }
}
