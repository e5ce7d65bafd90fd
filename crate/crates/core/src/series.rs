//! Truncated power series in `W` over a pluggable coefficient ring.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Combination, IndexAlgebra};
use crate::error::{Error, Result};
use crate::poly::PolyScalar;
use crate::Rational;

/// A commutative coefficient ring. Multiplication takes `&mut self` so a
/// ring can carry memo tables.
pub trait CoefficientRing {
    type Elem: Clone + PartialEq;
    /// Scalars used by [`TruncatedSeries::scale_variable`].
    type Scalar: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&mut self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale_rational(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Self::Scalar) -> Self::Elem;
    fn scalar_one(&self) -> Self::Scalar;
    fn scalar_mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    /// Multiplicative inverse, or [`Error::NotInvertible`].
    fn inverse(&mut self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// [`PolyScalar`] as a coefficient ring.
#[derive(Clone, Copy, Default, Debug)]
pub struct PolyRing;

impl CoefficientRing for PolyRing {
    type Elem = PolyScalar;
    type Scalar = PolyScalar;

    fn zero(&self) -> PolyScalar {
        PolyScalar::zero()
    }
    fn one(&self) -> PolyScalar {
        PolyScalar::one()
    }
    fn is_zero(&self, a: &PolyScalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &PolyScalar, b: &PolyScalar) -> PolyScalar {
        a + b
    }
    fn neg(&self, a: &PolyScalar) -> PolyScalar {
        -a
    }
    fn mul(&mut self, a: &PolyScalar, b: &PolyScalar) -> PolyScalar {
        a * b
    }
    fn scale_rational(&self, a: &PolyScalar, q: &Rational) -> PolyScalar {
        a.scale(q)
    }
    fn scale(&self, a: &PolyScalar, c: &PolyScalar) -> PolyScalar {
        a * c
    }
    fn scalar_one(&self) -> PolyScalar {
        PolyScalar::one()
    }
    fn scalar_mul(&self, a: &PolyScalar, b: &PolyScalar) -> PolyScalar {
        a * b
    }
    fn inverse(&mut self, a: &PolyScalar) -> Result<PolyScalar> {
        match a.as_constant() {
            Some(q) if !q.is_zero() => Ok(PolyScalar::constant(q.recip())),
            _ => Err(Error::NotInvertible),
        }
    }
}

impl CoefficientRing for IndexAlgebra {
    type Elem = Combination;
    type Scalar = PolyScalar;

    fn zero(&self) -> Combination {
        Combination::zero()
    }
    fn one(&self) -> Combination {
        Combination::unit()
    }
    fn is_zero(&self, a: &Combination) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Combination, b: &Combination) -> Combination {
        a + b
    }
    fn neg(&self, a: &Combination) -> Combination {
        -a
    }
    fn mul(&mut self, a: &Combination, b: &Combination) -> Combination {
        IndexAlgebra::mul(self, a, b)
    }
    fn scale_rational(&self, a: &Combination, q: &Rational) -> Combination {
        a.scale_rational(q)
    }
    fn scale(&self, a: &Combination, c: &PolyScalar) -> Combination {
        a.scale(c)
    }
    fn scalar_one(&self) -> PolyScalar {
        PolyScalar::one()
    }
    fn scalar_mul(&self, a: &PolyScalar, b: &PolyScalar) -> PolyScalar {
        a * b
    }
    /// Only rational multiples of `[∅]` are treated as units.
    fn inverse(&mut self, a: &Combination) -> Result<Combination> {
        match a.as_scalar().and_then(|c| c.as_constant()) {
            Some(q) if !q.is_zero() => Ok(Combination::term(crate::Index::empty(), PolyScalar::constant(q.recip()))),
            _ => Err(Error::NotInvertible),
        }
    }
}

/// `c_0 + c_1 W + ... + c_N W^N`, computed modulo `W^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<E> {
    coeffs: Vec<E>,
}

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl<E: Clone + PartialEq> TruncatedSeries<E> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new<R: CoefficientRing<Elem = E>>(ring: &R, mut coeffs: Vec<E>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(ring.zero());
        }
        TruncatedSeries { coeffs }
    }

    /// Builds the series whose `W^n` coefficient is `f(n)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> E) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero<R: CoefficientRing<Elem = E>>(ring: &R, order: usize) -> Self {
        Self::from_fn(order, |_| ring.zero())
    }

    pub fn one<R: CoefficientRing<Elem = E>>(ring: &R, order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { ring.one() } else { ring.zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &E {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn map<F: Clone + PartialEq>(&self, f: impl FnMut(&E) -> F) -> TruncatedSeries<F> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    pub fn add<R: CoefficientRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        self.check_order(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| ring.add(a, b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub<R: CoefficientRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        self.check_order(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| ring.sub(a, b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> Self {
        self.map(|a| ring.neg(a))
    }

    /// Cauchy product truncated at the common order.
    pub fn mul<R: CoefficientRing<Elem = E>>(&self, other: &Self, ring: &mut R) -> Self {
        self.check_order(other);
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = ring.zero();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                let p = ring.mul(a, b);
                acc = ring.add(&acc, &p);
            }
            coeffs.push(acc);
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplies every coefficient by a ring scalar.
    pub fn scale<R: CoefficientRing<Elem = E>>(&self, c: &R::Scalar, ring: &R) -> Self {
        self.map(|a| ring.scale(a, c))
    }

    /// `f(W) ↦ f(cW)`: the `W^n` coefficient is multiplied by `c^n`.
    pub fn scale_variable<R: CoefficientRing<Elem = E>>(&self, c: &R::Scalar, ring: &R) -> Self {
        let mut power = ring.scalar_one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, a) in self.coeffs.iter().enumerate() {
            if n > 0 {
                power = ring.scalar_mul(&power, c);
            }
            coeffs.push(ring.scale(a, &power));
        }
        TruncatedSeries { coeffs }
    }

    /// `g` with `f g = 1`: `g_0 = f_0^{-1}`, `g_n = −g_0 ∑_{i≥1} f_i g_{n−i}`.
    pub fn inverse<R: CoefficientRing<Elem = E>>(&self, ring: &mut R) -> Result<Self> {
        let g0 = ring.inverse(&self.coeffs[0])?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(g0.clone());
        for n in 1..=self.order() {
            let mut acc = ring.zero();
            for i in 1..=n {
                let (a, b) = (&self.coeffs[i], &coeffs[n - i]);
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                let p = ring.mul(a, b);
                acc = ring.add(&acc, &p);
            }
            let term = ring.mul(&g0, &acc);
            coeffs.push(ring.neg(&term));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `exp(f)` for `f_0 = 0`, via `n g_n = ∑_{k=1}^n k f_k g_{n−k}`.
    pub fn exp<R: CoefficientRing<Elem = E>>(&self, ring: &mut R) -> Result<Self> {
        if !ring.is_zero(&self.coeffs[0]) {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(ring.one());
        for n in 1..=self.order() {
            let mut acc = ring.zero();
            for k in 1..=n {
                let (a, b) = (&self.coeffs[k], &coeffs[n - k]);
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                let p = ring.mul(a, b);
                acc = ring.add(&acc, &ring.scale_rational(&p, &rational(k)));
            }
            coeffs.push(ring.scale_rational(&acc, &rational(n).recip()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `log(f)` for `f_0 = 1`, via `n g_n = n f_n − ∑_{k=1}^{n−1} k g_k f_{n−k}`.
    pub fn log<R: CoefficientRing<Elem = E>>(&self, ring: &mut R) -> Result<Self> {
        if !ring.is_one(&self.coeffs[0]) {
            return Err(Error::ConstantTermNotOne);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(ring.zero());
        for n in 1..=self.order() {
            let mut acc = ring.scale_rational(&self.coeffs[n], &rational(n));
            for k in 1..n {
                let (a, b) = (&coeffs[k], &self.coeffs[n - k]);
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                let p = ring.mul(a, b);
                acc = ring.sub(&acc, &ring.scale_rational(&p, &rational(k)));
            }
            coeffs.push(ring.scale_rational(&acc, &rational(n).recip()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.check_order(other);
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

impl TruncatedSeries<PolyScalar> {
    /// The rational series `∑ q_n W^n`.
    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>, order: usize) -> Self {
        let coeffs: Vec<PolyScalar> = coeffs.into_iter().map(PolyScalar::constant).collect();
        TruncatedSeries::new(&PolyRing, coeffs, order)
    }
}

/// `1 / n` as a rational.
pub fn reciprocal(n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n))
}
