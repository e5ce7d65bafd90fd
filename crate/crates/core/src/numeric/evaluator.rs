//! The evaluation maps `Z`, `Z_{x,y}` and `Z_S` into `ℝ[T]`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use twofloat::TwoFloat;

use super::mzv::{MzvCache, MzvValue};
use super::regularize::{RegularizedCombination, RegularizedZeta, Regularizer};
use super::{abs_f64, to_real, NumericPoly};
use crate::algebra::{Combination, IndexAlgebra};
use crate::error::Result;
use crate::index::Index;
use crate::poly::{Assignment, Var};
use crate::Rational;

/// A numeric value with an estimate of its accumulated error.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: NumericPoly,
    pub error_bound: f64,
}

/// Owns the algebra, the regularization memo and the MZV cache used to
/// evaluate index combinations.
pub struct Evaluator {
    pub alg: IndexAlgebra,
    regularizer: Regularizer,
    cache: MzvCache,
    tol: f64,
}

impl Evaluator {
    /// `tol` is the tolerance requested for every individual MZV.
    pub fn new(tol: f64) -> Self {
        Evaluator { alg: IndexAlgebra::new(), regularizer: Regularizer::new(), cache: MzvCache::new(), tol }
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn cache(&self) -> &MzvCache {
        &self.cache
    }

    pub fn cache_mut(&mut self) -> &mut MzvCache {
        &mut self.cache
    }

    pub fn regularize(&mut self, k: &Index) -> RegularizedZeta {
        self.regularizer.regularize(&mut self.alg, k)
    }

    pub fn regularize_combination(&mut self, u: &Combination) -> RegularizedCombination {
        self.regularizer.regularize_combination(&mut self.alg, u)
    }

    /// `ζ(k)` for admissible `k`.
    pub fn zeta(&mut self, k: &Index) -> Result<MzvValue> {
        self.cache.eval(k, self.tol)
    }

    pub fn eval_regularized(&mut self, r: &RegularizedZeta) -> Result<Evaluation> {
        let mut coeffs: Vec<TwoFloat> = Vec::new();
        let mut error_bound = 0.0;
        for ((d, k), q) in r.terms() {
            let z = self.zeta(k)?;
            let c = to_real(q);
            let d = *d as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, TwoFloat::from(0.0));
            }
            coeffs[d] += c * z.value;
            error_bound += abs_f64(c) * z.error;
        }
        Ok(Evaluation { value: NumericPoly::from_coeffs(coeffs), error_bound })
    }

    pub fn eval_regularized_combination(
        &mut self,
        r: &RegularizedCombination,
        point: &Assignment,
    ) -> Result<Evaluation> {
        let specialized = r.evaluate(point)?;
        self.eval_regularized(&specialized)
    }

    /// `Z(u)` with the variables of `u` set from `point`.
    pub fn eval_z_bounded(&mut self, u: &Combination, point: &Assignment) -> Result<Evaluation> {
        let r = self.regularize_combination(u);
        self.eval_regularized_combination(&r, point)
    }

    pub fn eval_z(&mut self, u: &Combination, point: &Assignment) -> Result<NumericPoly> {
        Ok(self.eval_z_bounded(u, point)?.value)
    }

    /// `Z_{x,y}(u) = Z(u_{x,y})`; `x` and `y` come from `point`.
    pub fn eval_z_xy(&mut self, u: &Combination, point: &Assignment) -> Result<NumericPoly> {
        let lifted = self.alg.lift_xy_linear(u);
        self.eval_z(&lifted, point)
    }

    /// `Z_S(u) = Z_{1,−1}(u)`.
    pub fn eval_z_s(&mut self, u: &Combination, point: &Assignment) -> Result<NumericPoly> {
        let mut at = point.clone();
        at.set(Var::X, Some(Rational::from_integer(BigInt::from(1))));
        at.set(Var::Y, Some(Rational::from_integer(BigInt::from(-1))));
        self.eval_z_xy(u, &at)
    }

    /// `ζ(k)` for any index, as a polynomial in `T`.
    pub fn eval_index(&mut self, k: &Index) -> Result<NumericPoly> {
        let r = self.regularize(k);
        Ok(self.eval_regularized(&r)?.value)
    }
}
