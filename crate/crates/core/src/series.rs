//! Truncated formal power series with exact rational coefficients.
//!
//! A [`PowerSeries`] of order `N` tracks the coefficients of `x^0..=x^N`.
//! Binary operations truncate to the smaller order of their operands. There
//! is no floating point anywhere in this module.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Coefficient>,
}

impl PowerSeries {
    /// Series from coefficients `c0, c1, ...`; the order is `len - 1`.
    ///
    /// Panics on an empty vector, which would have no order.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        assert!(!coeffs.is_empty(), "a series tracks at least x^0");
        PowerSeries { coeffs }
    }

    pub fn from_integers<I, T>(order: usize, values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<Coefficient> = values
            .into_iter()
            .take(order + 1)
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: Coefficient, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The multiplicative identity `1 + 0x + 0x^2 + ...`.
    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::one(order).shift()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// `[x^n]` of the series. Asking past the truncation order is an error,
    /// never a silent zero.
    pub fn coefficient(&self, n: usize) -> Result<&Coefficient> {
        self.coeffs.get(n).ok_or_else(|| Error::Range {
            index: n,
            valid: format!("0..={}", self.order()),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Coefficient) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> PowerSeries {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Multiplication by `x`; the top coefficient falls off so the order is
    /// unchanged.
    pub fn shift(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BigRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        PowerSeries { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    ///
    /// Both operands are brought to a common denominator first, so the inner
    /// loop runs on integers and each output coefficient is reduced once.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let (Some(va), Some(vb)) = (self.valuation(), other.valuation()) else {
            return PowerSeries::zero(order);
        };
        let (a, da) = self.scaled_numerators(order);
        let (b, db) = other.scaled_numerators(order);
        let mut acc = vec![BigInt::zero(); order + 1];
        for i in va..=order {
            if a[i].is_zero() {
                continue;
            }
            for j in vb..=(order - i) {
                if !b[j].is_zero() {
                    acc[i + j] += &a[i] * &b[j];
                }
            }
        }
        let denom = da * db;
        PowerSeries {
            coeffs: acc
                .into_iter()
                .map(|c| BigRational::new(c, denom.clone()))
                .collect(),
        }
    }

    /// Integers `m * c_i` for `i <= order`, with `m` the lcm of the
    /// denominators.
    fn scaled_numerators(&self, order: usize) -> (Vec<BigInt>, BigInt) {
        let m = self.coeffs[..=order]
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.coeffs[..=order]
            .iter()
            .map(|c| c.numer() * (&m / c.denom()))
            .collect();
        (nums, m)
    }

    pub fn pow(&self, k: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The series `y` with `y * y = self` and nonnegative constant term.
    ///
    /// From `y^2 = a`: `y0 = sqrt(a0)` and, for `n >= 1`,
    /// `2 y0 yn = an - sum_{k=1}^{n-1} yk y(n-k)`.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Unsupported(
                "square root of a series with zero constant term".into(),
            ));
        }
        let y0 = rational_sqrt(a0).ok_or_else(|| {
            Error::Domain(format!("constant term {a0} is not the square of a rational"))
        })?;
        let two_y0 = &y0 * BigRational::from_integer(2.into());
        let mut y = Vec::with_capacity(self.coeffs.len());
        y.push(y0);
        for n in 1..=self.order() {
            let mut rhs = self.coeffs[n].clone();
            for k in 1..n {
                rhs -= &y[k] * &y[n - k];
            }
            y.push(rhs / &two_y0);
        }
        Ok(PowerSeries { coeffs: y })
    }

    /// Coefficients as integers, if every coefficient is one.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as nonnegative integers, if they all are.
    pub fn to_naturals(&self) -> Option<Vec<BigUint>> {
        self.to_integers()?
            .into_iter()
            .map(|c| c.to_biguint())
            .collect()
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let root = |m: &BigInt| {
        let r = m.sqrt();
        (&r * &r == *m).then_some(r)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = match c.numer().sign() {
                Sign::Minus => ("-", -c),
                _ => ("+", c.clone()),
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::neg(self)
    }
}

/// The generating functions with known closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesName {
    /// Unknown entries, Kleene logic.
    U,
    /// False entries, Kleene logic.
    F,
    /// True entries, Kleene logic.
    T,
    /// All entries, Kleene logic.
    G,
    /// False entries, classical logic.
    S,
    /// True entries, classical logic.
    R,
    /// All entries, classical logic.
    G2,
    /// The identity `1`.
    I,
}

impl SeriesName {
    pub const ALL: [SeriesName; 8] = [
        SeriesName::U,
        SeriesName::F,
        SeriesName::T,
        SeriesName::G,
        SeriesName::S,
        SeriesName::R,
        SeriesName::G2,
        SeriesName::I,
    ];

    pub fn is_count_series(self) -> bool {
        self != SeriesName::I
    }

    pub fn label(self) -> &'static str {
        match self {
            SeriesName::U => "u",
            SeriesName::F => "f",
            SeriesName::T => "t",
            SeriesName::G => "g",
            SeriesName::S => "s",
            SeriesName::R => "r",
            SeriesName::G2 => "g2",
            SeriesName::I => "i",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown series name {s:?}")))
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// `c0 + c1 x` at the given order.
fn linear(c0: i64, c1: i64, order: usize) -> PowerSeries {
    let mut s = PowerSeries::constant(int(c0), order);
    if order >= 1 {
        s.coeffs[1] = int(c1);
    }
    s
}

/// Radicals shared by the Kleene closed forms: `sqrt(1 - 12x)` and
/// `sqrt(5 + 24x + 4 sqrt(1 - 12x))`.
fn kleene_radicals(order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let inner = linear(1, -12, order).sqrt()?;
    let outer = linear(5, 24, order).add(&inner.scale_int(4)).sqrt()?;
    Ok((inner, outer))
}

/// Radicals shared by the classical closed forms: `sqrt(1 - 8x)` and
/// `sqrt(2 + 2 sqrt(1 - 8x) + 8x)`.
fn classical_radicals(order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let inner = linear(1, -8, order).sqrt()?;
    let outer = linear(2, 8, order).add(&inner.scale_int(2)).sqrt()?;
    Ok((inner, outer))
}

/// Expands a closed-form generating function exactly up to `x^order`.
///
/// Count series are checked eagerly: a zero constant term and nonnegative
/// integer coefficients everywhere, otherwise [`Error::Consistency`].
pub fn closed_form(name: SeriesName, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::Domain("truncation order must be at least 1".into()));
    }
    let sixth = BigRational::new(1.into(), 6.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let series = match name {
        SeriesName::I => return Ok(PowerSeries::one(order)),
        SeriesName::U | SeriesName::G => {
            let (inner, _) = kleene_radicals(order)?;
            let numer = PowerSeries::one(order).sub(&inner);
            let denom = if name == SeriesName::U { 6 } else { 2 };
            numer.scale(&BigRational::new(1.into(), denom.into()))
        }
        SeriesName::F => {
            let (inner, outer) = kleene_radicals(order)?;
            PowerSeries::constant(int(-2), order)
                .sub(&inner)
                .add(&outer)
                .scale(&sixth)
        }
        SeriesName::T => {
            let (inner, outer) = kleene_radicals(order)?;
            PowerSeries::constant(int(4), order)
                .sub(&inner)
                .sub(&outer)
                .scale(&sixth)
        }
        SeriesName::S => {
            let (inner, outer) = classical_radicals(order)?;
            PowerSeries::constant(int(-1), order)
                .sub(&inner)
                .add(&outer)
                .scale(&quarter)
        }
        SeriesName::R => {
            let (inner, outer) = classical_radicals(order)?;
            PowerSeries::constant(int(3), order)
                .sub(&inner)
                .sub(&outer)
                .scale(&quarter)
        }
        SeriesName::G2 => closed_form(SeriesName::R, order)?.add(&closed_form(SeriesName::S, order)?),
    };
    check_count_series(name, &series)?;
    Ok(series)
}

fn check_count_series(name: SeriesName, s: &PowerSeries) -> Result<()> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::Consistency(format!(
            "{name}: constant term {} should be 0",
            s.coeffs[0]
        )));
    }
    for (n, c) in s.coeffs.iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Consistency(format!(
                "{name}: [x^{n}] = {c} is not a nonnegative integer"
            )));
        }
    }
    Ok(())
}
