//! Numeric evaluation: regularization onto admissible indices, multiple zeta
//! values in double-double precision, and the numeric identity checks.
//!
//! The formal variable `T` (the regularized value of `ζ(1)`) is never
//! sampled. Every numeric quantity is a [`NumericPoly`] in `T`.

mod evaluator;
mod identities;
mod mzv;
mod regularize;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive, Zero};
pub use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::poly::{format_rational, Assignment, Var};
use crate::series::CoefficientRing;
use crate::Rational;

pub use evaluator::{Evaluation, Evaluator};
pub use identities::{
    check_numeric_identity, check_schur_sum_formula, check_sum_formula, corollary_consistency, default_samples,
    identity_series, remark_b0_column_numeric, NumericFailure, NumericIdentity, NumericReport, NumericSeries,
    Sample, SumReport, DEFAULT_TOL,
};
pub use mzv::{brute_force_mzv, eval_admissible, MzvCache, MzvValue, MAX_TERMS, WORKING_ERROR};
pub use regularize::{RegularizedCombination, RegularizedZeta, Regularizer};

fn big_to_real(n: &BigInt) -> TwoFloat {
    let hi = n.to_f64().unwrap_or(f64::NAN);
    match BigInt::from_f64(hi) {
        Some(h) => {
            let lo = (n - h).to_f64().unwrap_or(0.0);
            TwoFloat::new_add(hi, lo)
        }
        None => TwoFloat::from(hi),
    }
}

/// The nearest double-double to an exact rational.
pub fn to_real(q: &Rational) -> TwoFloat {
    if q.is_zero() {
        return TwoFloat::from(0.0);
    }
    div(big_to_real(q.numer()), big_to_real(q.denom()))
}

/// Double-double quotient by long division on the high words.
pub fn div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

/// `|a|` as an `f64`.
pub fn abs_f64(a: TwoFloat) -> f64 {
    libm::fabs(a.hi() + a.lo())
}

/// A polynomial in `T` with double-double coefficients, lowest degree first.
/// Trailing zero coefficients are dropped, so the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NumericPoly {
    coeffs: Vec<TwoFloat>,
}

impl NumericPoly {
    pub fn zero() -> Self {
        NumericPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(TwoFloat::from(1.0))
    }

    pub fn constant(c: TwoFloat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `T`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![TwoFloat::from(0.0), TwoFloat::from(1.0)])
    }

    pub fn from_coeffs(mut coeffs: Vec<TwoFloat>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0.0) {
            coeffs.pop();
        }
        NumericPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[TwoFloat] {
        &self.coeffs
    }

    /// The coefficient of `T^d`.
    pub fn coeff(&self, d: usize) -> TwoFloat {
        self.coeffs.get(d).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The constant term as an `f64`.
    pub fn value(&self) -> f64 {
        let c = self.coeff(0);
        c.hi() + c.lo()
    }

    pub fn add(&self, other: &NumericPoly) -> NumericPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &NumericPoly) -> NumericPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|d| self.coeff(d) - other.coeff(d)).collect())
    }

    pub fn neg(&self) -> NumericPoly {
        NumericPoly { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    pub fn mul(&self, other: &NumericPoly) -> NumericPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![TwoFloat::from(0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: TwoFloat) -> NumericPoly {
        Self::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `T^d`.
    pub fn shift(&self, d: usize) -> NumericPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![TwoFloat::from(0.0); d];
        coeffs.extend_from_slice(&self.coeffs);
        NumericPoly { coeffs }
    }

    /// Largest coefficientwise absolute difference.
    pub fn max_abs_diff(&self, other: &NumericPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).map(|d| abs_f64(self.coeff(d) - other.coeff(d))).fold(0.0, f64::max)
    }

    /// Coefficientwise equality within an absolute tolerance.
    pub fn approx_eq(&self, other: &NumericPoly, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Largest absolute coefficient of a positive power of `T`.
    pub fn t_part_magnitude(&self) -> f64 {
        self.coeffs.iter().skip(1).map(|&c| abs_f64(c)).fold(0.0, f64::max)
    }
}

impl fmt::Display for NumericPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            let v = c.hi() + c.lo();
            if v == 0.0 {
                continue;
            }
            let (negative, mag) = (v < 0.0, libm::fabs(v));
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if d == 0 || mag != 1.0 {
                write!(f, "{mag}")?;
                if d > 0 {
                    f.write_str("*")?;
                }
            }
            match d {
                0 => {}
                1 => f.write_str("T")?,
                _ => write!(f, "T^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// [`NumericPoly`] as a coefficient ring, with exact rational scalars so
/// that `f(cW)` uses exact powers of `c`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NumericRing;

impl CoefficientRing for NumericRing {
    type Elem = NumericPoly;
    type Scalar = Rational;

    fn zero(&self) -> NumericPoly {
        NumericPoly::zero()
    }
    fn one(&self) -> NumericPoly {
        NumericPoly::one()
    }
    fn is_zero(&self, a: &NumericPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &NumericPoly, b: &NumericPoly) -> NumericPoly {
        a.add(b)
    }
    fn neg(&self, a: &NumericPoly) -> NumericPoly {
        a.neg()
    }
    fn mul(&mut self, a: &NumericPoly, b: &NumericPoly) -> NumericPoly {
        a.mul(b)
    }
    fn scale_rational(&self, a: &NumericPoly, q: &Rational) -> NumericPoly {
        a.scale(to_real(q))
    }
    fn scale(&self, a: &NumericPoly, c: &Rational) -> NumericPoly {
        a.scale(to_real(c))
    }
    fn scalar_one(&self) -> Rational {
        Rational::from_integer(BigInt::from(1))
    }
    fn scalar_mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inverse(&mut self, a: &NumericPoly) -> Result<NumericPoly> {
        match a.degree() {
            Some(0) => Ok(NumericPoly::constant(div(TwoFloat::from(1.0), a.coeff(0)))),
            _ => Err(Error::NotInvertible),
        }
    }
}

pub(crate) fn format_assignment(point: &Assignment, vars: &[Var]) -> String {
    let mut out = String::from("(");
    for (i, &v) in vars.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push(v.symbol());
        out.push('=');
        match point.get(v) {
            Some(q) => out.push_str(&format_rational(q)),
            None => out.push('?'),
        }
    }
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_conversion_is_double_double() {
        let third = to_real(&q(1, 3));
        let back = third * TwoFloat::from(3.0) - TwoFloat::from(1.0);
        assert!(abs_f64(back) < 1e-30);
        let seventh = div(TwoFloat::from(1.0), TwoFloat::new_add(7.0, 1e-20));
        assert!(abs_f64(seventh * TwoFloat::new_add(7.0, 1e-20) - TwoFloat::from(1.0)) < 1e-30);
        let big = Rational::from_integer(BigInt::from(10).pow(20) + 1);
        assert_eq!(to_real(&big) - TwoFloat::from(1e20), TwoFloat::from(1.0));
    }

    #[test]
    fn poly_arithmetic() {
        let p = NumericPoly::t().add(&NumericPoly::one());
        let sq = p.mul(&p);
        assert_eq!(sq.coeffs().len(), 3);
        assert_eq!(sq.coeff(1), TwoFloat::from(2.0));
        assert!(p.sub(&p).is_zero());
        assert_eq!(NumericPoly::t().to_string(), "T");
        assert_eq!(NumericPoly::zero().to_string(), "0");
        assert_eq!(sq.neg().to_string(), "-T^2 - 2*T - 1");
    }

    #[test]
    fn ring_inverse_only_for_constants() {
        let mut ring = NumericRing;
        assert!(ring.inverse(&NumericPoly::t()).is_err());
        let half = ring.inverse(&NumericPoly::constant(TwoFloat::from(2.0))).unwrap();
        assert_eq!(half.coeff(0), TwoFloat::from(0.5));
    }
}
