//! Sparse exact polynomials over the rationals in `x`, `y`, `A`, `B`.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// The formal variables available to scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::A, Var::B];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::A => 'A',
            Var::B => 'B',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector over `(x, y, A, B)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial([u16; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(x: u16, y: u16, a: u16, b: u16) -> Self {
        Monomial([x, y, a, b])
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, n: u16) -> Self {
        let mut e = [0; 4];
        e[v.slot()] = n;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.slot()]
    }

    pub fn exponents(&self) -> [u16; 4] {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// The key form `x{a}y{b}A{c}B{d}` used in JSON output.
    pub fn key(&self) -> String {
        let [x, y, a, b] = self.0;
        alloc::format!("x{x}y{y}A{a}B{b}")
    }

    /// Inverse of [`Monomial::key`].
    pub fn parse_key(s: &str) -> Option<Monomial> {
        let mut e = [0u16; 4];
        let mut rest = s;
        for v in Var::ALL {
            rest = rest.strip_prefix(v.symbol())?;
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            e[v.slot()] = rest[..end].parse().ok()?;
            rest = &rest[end..];
        }
        rest.is_empty().then_some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in `x, y, A, B` with exact rational coefficients.
///
/// Zero coefficients are never stored, so equality is map equality.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct PolyScalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::monomial(Monomial::ONE, q)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        PolyScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).map_or(false, One::is_one)
    }

    /// The rational value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = PolyScalar::zero();
        for (m, q) in pairs {
            p.add_monomial(m, &q);
        }
        p
    }

    pub fn add_monomial(&mut self, m: Monomial, q: &Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(q.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += other * factor`.
    pub fn add_scaled(&mut self, other: &PolyScalar, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (m, q) in &other.terms {
            let term = q * factor;
            self.add_monomial(*m, &term);
        }
    }

    /// `self += other * n`.
    pub fn add_scaled_int(&mut self, other: &PolyScalar, n: i64) {
        match n {
            0 => {}
            1 => *self += other,
            -1 => *self -= other,
            _ => self.add_scaled(other, &Rational::from_integer(BigInt::from(n))),
        }
    }

    pub fn scale(&self, q: &Rational) -> PolyScalar {
        if q.is_zero() {
            return PolyScalar::zero();
        }
        PolyScalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> PolyScalar {
        match n {
            1 => self.clone(),
            -1 => -self,
            _ => self.scale(&Rational::from_integer(BigInt::from(n))),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> PolyScalar {
        PolyScalar {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> PolyScalar {
        let mut acc = PolyScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `[1, c, c^2, ..., c^n]`.
    pub fn powers(&self, n: usize) -> Vec<PolyScalar> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(PolyScalar::one());
        for i in 1..=n {
            let next = &out[i - 1] * self;
            out.push(next);
        }
        out
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Replaces every variable by a polynomial image.
    pub fn substitute(&self, images: &Substitution) -> PolyScalar {
        let mut powers: [Vec<PolyScalar>; 4] = Default::default();
        for v in Var::ALL {
            powers[v.slot()] = images.image(v).powers(self.degree_in(v) as usize);
        }
        let mut out = PolyScalar::zero();
        for (m, q) in &self.terms {
            let mut term = PolyScalar::constant(q.clone());
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    term = &term * &powers[v.slot()][e];
                }
            }
            out += &term;
        }
        out
    }

    /// Substitutes the assigned variables by their values, leaving the rest
    /// symbolic.
    pub fn specialize(&self, point: &Assignment) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m, q) in &self.terms {
            let mut e = m.exponents();
            let mut c = q.clone();
            for v in Var::ALL {
                if let Some(value) = point.get(v) {
                    let n = e[v.slot()];
                    if n > 0 {
                        c *= num_traits::pow(value.clone(), n as usize);
                        e[v.slot()] = 0;
                    }
                }
            }
            out.add_monomial(Monomial(e), &c);
        }
        out
    }

    /// Full evaluation; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &Assignment) -> Result<Rational> {
        let special = self.specialize(point);
        if let Some((m, _)) = special.terms.iter().find(|(m, _)| !m.is_one()) {
            let v = Var::ALL.into_iter().find(|&v| m.exponent(v) > 0).unwrap();
            return Err(Error::MissingSample(v));
        }
        Ok(special.coefficient(&Monomial::ONE))
    }
}

impl From<Rational> for PolyScalar {
    fn from(q: Rational) -> Self {
        PolyScalar::constant(q)
    }
}

impl From<i64> for PolyScalar {
    fn from(n: i64) -> Self {
        PolyScalar::integer(n)
    }
}

impl AddAssign<&PolyScalar> for PolyScalar {
    fn add_assign(&mut self, rhs: &PolyScalar) {
        for (m, q) in &rhs.terms {
            self.add_monomial(*m, q);
        }
    }
}

impl SubAssign<&PolyScalar> for PolyScalar {
    fn sub_assign(&mut self, rhs: &PolyScalar) {
        for (m, q) in &rhs.terms {
            self.add_monomial(*m, &-q);
        }
    }
}

impl Add for &PolyScalar {
    type Output = PolyScalar;
    fn add(self, rhs: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &PolyScalar {
    type Output = PolyScalar;
    fn sub(self, rhs: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        PolyScalar {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }
}

impl Neg for PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        -&self
    }
}

impl Mul for &PolyScalar {
    type Output = PolyScalar;
    fn mul(self, rhs: &PolyScalar) -> PolyScalar {
        if self.is_zero() || rhs.is_zero() {
            return PolyScalar::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = PolyScalar::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                out.add_monomial(m1.mul(m2), &(q1 * q2));
            }
        }
        out
    }
}

impl fmt::Display for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, q)) in self.terms.iter().rev().enumerate() {
            let negative = q.is_negative();
            if negative {
                f.write_str("\u{2212}")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let magnitude = q.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Images of the four variables under a ring substitution.
#[derive(Clone, Debug)]
pub struct Substitution {
    images: [PolyScalar; 4],
}

impl Default for Substitution {
    fn default() -> Self {
        Self::identity()
    }
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution { images: Var::ALL.map(PolyScalar::var) }
    }

    pub fn with(mut self, v: Var, image: PolyScalar) -> Self {
        self.images[v.slot()] = image;
        self
    }

    pub fn image(&self, v: Var) -> &PolyScalar {
        &self.images[v.slot()]
    }
}

/// Optional rational values for the four variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: [Option<Rational>; 4],
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: Rational) -> Self {
        self.values[v.slot()] = Some(value);
        self
    }

    pub fn set(&mut self, v: Var, value: Option<Rational>) {
        self.values[v.slot()] = value;
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.values[v.slot()].as_ref()
    }
}

/// Parses `p/q`, `p`, or a finite decimal such as `-0.25` into an exact
/// rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(String::from(s));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits = alloc::format!("{int_digits}{frac}");
        let mut p: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            p = -p;
        }
        let q = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(p, q));
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    alloc::format!("{}/{}", q.numer(), q.denom())
}
