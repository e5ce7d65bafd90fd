//! Numeric checks of identities between multiple zeta values.
//!
//! Left-hand sides are built by enumerating indices, mapping them into the
//! index algebra, regularizing and evaluating. Right-hand sides come from
//! numeric power series in `W` whose coefficients are polynomials in `T`.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use twofloat::TwoFloat;

use super::evaluator::Evaluator;
use super::regularize::RegularizedCombination;
use super::{abs_f64, format_assignment, to_real, NumericPoly, NumericRing};
use crate::algebra::{star, Combination, IndexAlgebra};
use crate::antihook::AntiHook;
use crate::error::{Error, Result};
use crate::genfunc::{b_zero_column, build_f_i, monomial_part, psi_side};
use crate::index::{enumerate_indices, enumerate_indices_of_depth, enumerate_triples, Index, Triple};
use crate::poly::{Assignment, Monomial, Var};
use crate::series::{PolyRing, TruncatedSeries};
use crate::Rational;

pub const DEFAULT_TOL: f64 = 1e-8;

pub type NumericSeries = TruncatedSeries<NumericPoly>;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut out = 1u64;
    for i in 0..k as u64 {
        out = out * (n as u64 - i) / (i + 1);
    }
    out
}

/// A sample point `(x, y, A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub x: Rational,
    pub y: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl Sample {
    pub fn new(x: Rational, y: Rational, a: Rational, b: Rational) -> Self {
        Sample { x, y, a, b }
    }

    pub fn value(&self, v: Var) -> &Rational {
        match v {
            Var::X => &self.x,
            Var::Y => &self.y,
            Var::A => &self.a,
            Var::B => &self.b,
        }
    }

    /// The assignment of the listed variables only.
    pub fn project(&self, vars: &[Var]) -> Assignment {
        let mut out = Assignment::new();
        for &v in vars {
            out.set(v, Some(self.value(v).clone()));
        }
        out
    }

    pub fn assignment(&self) -> Assignment {
        self.project(&Var::ALL)
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x, self.y, self.a, self.b)
    }
}

/// Every `(x, y)` in `{(1,0), (1,−1), (2,3), (1/2,−1/3)}` paired with every
/// `(A, B)` in `{(0,0), (1,2), (−1,1/2)}`.
pub fn default_samples() -> Vec<Sample> {
    let q = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let xy = [(q(1, 1), q(0, 1)), (q(1, 1), q(-1, 1)), (q(2, 1), q(3, 1)), (q(1, 2), q(-1, 3))];
    let ab = [(q(0, 1), q(0, 1)), (q(1, 1), q(2, 1)), (q(-1, 1), q(1, 2))];
    let mut out = Vec::new();
    for (x, y) in &xy {
        for (a, b) in &ab {
            out.push(Sample::new(x.clone(), y.clone(), a.clone(), b.clone()));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumReport {
    pub weight: u32,
    pub r: usize,
    pub s: Option<usize>,
    pub star: bool,
    pub cases: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// Largest `T`-coefficient over all summands.
    pub max_t_part: f64,
    pub tol: f64,
    pub holds: bool,
}

fn sum_report(
    weight: u32,
    r: usize,
    s: Option<usize>,
    star: bool,
    cases: usize,
    lhs: &NumericPoly,
    rhs: &NumericPoly,
    max_t_part: f64,
    tol: f64,
) -> SumReport {
    let residual = lhs.max_abs_diff(rhs);
    SumReport {
        weight,
        r,
        s,
        star,
        cases,
        lhs: lhs.value(),
        rhs: rhs.value(),
        residual,
        max_t_part,
        tol,
        holds: residual <= tol && max_t_part <= tol,
    }
}

/// `∑ ζ(k, a)` (or `ζ^★`) over `dep k = r`, `|k| + a = w`, `a ≥ 2`, against
/// `ζ(w)` (or `C(w−1, r) ζ(w)`).
pub fn check_sum_formula(ev: &mut Evaluator, w: u32, r: usize, starred: bool, tol: f64) -> Result<SumReport> {
    if w < 2 || (w as usize) < r + 2 {
        return Err(Error::InvalidParameter(format!("sum formula needs w >= r + 2, got w={w}, r={r}")));
    }
    let none = Assignment::new();
    let mut lhs = NumericPoly::zero();
    let mut cases = 0;
    let mut max_t_part: f64 = 0.0;
    for a in 2..=w - r as u32 {
        for k in enumerate_indices_of_depth(w - a, r) {
            let joined = k.pushed(a);
            let u = if starred { star(&joined) } else { Combination::index(joined) };
            let v = ev.eval_z(&u, &none)?;
            max_t_part = max_t_part.max(v.t_part_magnitude());
            lhs = lhs.add(&v);
            cases += 1;
        }
    }
    let factor = if starred { binomial(w - 1, r as u32) } else { 1 };
    let rhs = ev.eval_index(&Index::single(w))?.scale(TwoFloat::from(factor as f64));
    Ok(sum_report(w, r, None, starred, cases, &lhs, &rhs, max_t_part, tol))
}

/// `∑ ζ(k; l; a)` over anti-hooks with `dep k = r`, `dep l = s`, total
/// weight `w` and `a ≥ 2`, against `C(w−1, s) ζ(w)`. Every summand must be
/// free of `T`.
pub fn check_schur_sum_formula(ev: &mut Evaluator, w: u32, r: usize, s: usize, tol: f64) -> Result<SumReport> {
    if w < 2 || (w as usize) < r + s + 2 {
        return Err(Error::InvalidParameter(format!("Schur sum formula needs w >= r + s + 2, got w={w}, r={r}, s={s}")));
    }
    let none = Assignment::new();
    let mut lhs = NumericPoly::zero();
    let mut cases = 0;
    let mut max_t_part: f64 = 0.0;
    for a in 2..=w - (r + s) as u32 {
        let rest = w - a;
        for wk in 0..=rest {
            for k in enumerate_indices_of_depth(wk, r) {
                for l in enumerate_indices_of_depth(rest - wk, s) {
                    let u = ev.alg.expand_antihook(&AntiHook::new(k.clone(), l, a));
                    let v = ev.eval_z(&u, &none)?;
                    max_t_part = max_t_part.max(v.t_part_magnitude());
                    lhs = lhs.add(&v);
                    cases += 1;
                }
            }
        }
    }
    let rhs = ev.eval_index(&Index::single(w))?.scale(TwoFloat::from(binomial(w - 1, s as u32) as f64));
    Ok(sum_report(w, r, Some(s), false, cases, &lhs, &rhs, max_t_part, tol))
}

/// The numeric identities [`check_numeric_identity`] knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NumericIdentity {
    PsiSumKa,
    ZetaKal,
    ZetaSKal,
    GenFuncZeta,
    GenFuncZetaXy,
    GenFuncZetaS,
    GammaReflection,
    MainTheorem,
    MainTheoremStar,
    SumSchurGen,
    RelationSumFormulas,
}

impl NumericIdentity {
    pub const ALL: [NumericIdentity; 11] = [
        NumericIdentity::PsiSumKa,
        NumericIdentity::ZetaKal,
        NumericIdentity::ZetaSKal,
        NumericIdentity::GenFuncZeta,
        NumericIdentity::GenFuncZetaXy,
        NumericIdentity::GenFuncZetaS,
        NumericIdentity::GammaReflection,
        NumericIdentity::MainTheorem,
        NumericIdentity::MainTheoremStar,
        NumericIdentity::SumSchurGen,
        NumericIdentity::RelationSumFormulas,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NumericIdentity::PsiSumKa => "psi_sum_ka",
            NumericIdentity::ZetaKal => "zeta_kal",
            NumericIdentity::ZetaSKal => "zeta_S_kal",
            NumericIdentity::GenFuncZeta => "gen_func_zeta",
            NumericIdentity::GenFuncZetaXy => "gen_func_zeta_xy",
            NumericIdentity::GenFuncZetaS => "gen_func_zeta_S",
            NumericIdentity::GammaReflection => "gamma_reflection",
            NumericIdentity::MainTheorem => "main_theorem",
            NumericIdentity::MainTheoremStar => "main_theorem_star",
            NumericIdentity::SumSchurGen => "sum_schur_gen",
            NumericIdentity::RelationSumFormulas => "relation_sum_formulas",
        }
    }

    /// The variables that must be sampled.
    pub fn free_vars(self) -> &'static [Var] {
        match self {
            NumericIdentity::PsiSumKa | NumericIdentity::GenFuncZeta | NumericIdentity::GenFuncZetaS => &[Var::A],
            NumericIdentity::ZetaKal | NumericIdentity::ZetaSKal | NumericIdentity::SumSchurGen => &[Var::A, Var::B],
            NumericIdentity::GenFuncZetaXy => &[Var::X, Var::Y, Var::A],
            NumericIdentity::MainTheorem | NumericIdentity::MainTheoremStar => &Var::ALL,
            NumericIdentity::GammaReflection | NumericIdentity::RelationSumFormulas => &[],
        }
    }

    pub fn default_order(self) -> usize {
        match self {
            NumericIdentity::GammaReflection => 10,
            _ => 6,
        }
    }
}

impl fmt::Display for NumericIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NumericIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumericIdentity::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericFailure {
    pub part: String,
    pub sample: String,
    /// Power of `W`, or the case number for identities without a series.
    pub power: usize,
    pub t_degree: usize,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericReport {
    pub identity: String,
    pub order: usize,
    pub samples: Vec<String>,
    pub tol: f64,
    pub max_abs_residual: f64,
    pub holds: bool,
    pub first_failure: Option<NumericFailure>,
}

struct Tracker {
    tol: f64,
    max: f64,
    failure: Option<NumericFailure>,
}

impl Tracker {
    fn new(tol: f64) -> Self {
        Tracker { tol, max: 0.0, failure: None }
    }

    fn compare(&mut self, part: &str, sample: &str, power: usize, lhs: &NumericPoly, rhs: &NumericPoly) {
        let n = lhs.coeffs().len().max(rhs.coeffs().len());
        for d in 0..n {
            let (a, b) = (lhs.coeff(d), rhs.coeff(d));
            let residual = abs_f64(a - b);
            if residual.is_nan() || residual > self.max {
                self.max = if residual.is_nan() { f64::INFINITY } else { residual };
            }
            if !(residual <= self.tol) && self.failure.is_none() {
                self.failure = Some(NumericFailure {
                    part: part.to_owned(),
                    sample: sample.to_owned(),
                    power,
                    t_degree: d,
                    lhs: a.hi() + a.lo(),
                    rhs: b.hi() + b.lo(),
                });
            }
        }
    }

    fn compare_series(&mut self, part: &str, sample: &str, lhs: &NumericSeries, rhs: &NumericSeries) {
        for n in 0..=lhs.order() {
            self.compare(part, sample, n, lhs.coeff(n), rhs.coeff(n));
        }
    }

    fn finish(self, identity: &str, order: usize, samples: Vec<String>) -> NumericReport {
        NumericReport {
            identity: identity.to_owned(),
            order,
            samples,
            tol: self.tol,
            max_abs_residual: self.max,
            holds: self.failure.is_none(),
            first_failure: self.failure,
        }
    }
}

/// Numeric building blocks for right-hand sides.
struct SeriesKit {
    order: usize,
    zetas: Vec<NumericPoly>,
    gamma: NumericSeries,
    gamma_inverse: NumericSeries,
    z_over_sin: Vec<Rational>,
    sinc: Vec<Rational>,
}

impl SeriesKit {
    fn new(ev: &mut Evaluator, order: usize) -> Result<Self> {
        let mut zetas = Vec::with_capacity(order + 1);
        zetas.push(NumericPoly::zero());
        for k in 1..=order {
            zetas.push(ev.eval_index(&Index::single(k as u32))?);
        }
        let mut ring = NumericRing;
        let log = TruncatedSeries::from_fn(order, |k| {
            if k == 0 {
                NumericPoly::zero()
            } else {
                zetas[k].scale(TwoFloat::from(1.0) / (k as f64))
            }
        });
        let gamma = log.exp(&mut ring)?;
        let gamma_inverse = gamma.inverse(&mut ring)?;
        let sinc = sinc_coefficients(order);
        let exact = TruncatedSeries::from_rationals(sinc.clone(), order);
        let inverse = exact.inverse(&mut PolyRing)?;
        let z_over_sin = inverse.coeffs().iter().map(|p| p.as_constant().expect("rational")).collect();
        Ok(SeriesKit { order, zetas, gamma, gamma_inverse, z_over_sin, sinc })
    }

    /// `Γ₁(cW)`.
    fn gamma(&self, c: &Rational) -> NumericSeries {
        self.gamma.scale_variable(c, &NumericRing)
    }

    /// `1/Γ₁(cW)`.
    fn gamma_inv(&self, c: &Rational) -> NumericSeries {
        self.gamma_inverse.scale_variable(c, &NumericRing)
    }

    /// `factor · W (ψ₁(c₁W) − ψ₁(c₂W)) / (c₁ − c₂)` with `ψ₁(W) = ∑_{k≥2} ζ(k) W^{k−1}`,
    /// expanded via `(c₁^n − c₂^n)/(c₁ − c₂) = ∑_{j<n} c₁^j c₂^{n−1−j}`.
    fn psi_dq(&self, factor: &Rational, c1: &Rational, c2: &Rational) -> NumericSeries {
        TruncatedSeries::from_fn(self.order, |k| {
            if k < 2 {
                return NumericPoly::zero();
            }
            let n = k - 1;
            let mut dq = Rational::zero();
            for j in 0..n {
                dq += num_traits::pow(c1.clone(), j) * num_traits::pow(c2.clone(), n - 1 - j);
            }
            self.zetas[k].scale(to_real(&(factor * dq)))
        })
    }

    fn pi_scaled(&self, exact: &[Rational], c: &Rational) -> NumericSeries {
        let pi = twofloat::consts::PI;
        TruncatedSeries::from_fn(self.order, |m| {
            let q = &exact[m] * num_traits::pow(c.clone(), m);
            NumericPoly::constant(to_real(&q) * pi.powi(m as i32))
        })
    }

    /// `πcW / sin(πcW)`.
    fn pi_over_sin(&self, c: &Rational) -> NumericSeries {
        self.pi_scaled(&self.z_over_sin, c)
    }

    /// `sin(πcW) / (πcW)`.
    fn sin_over_pi(&self, c: &Rational) -> NumericSeries {
        self.pi_scaled(&self.sinc, c)
    }
}

/// Taylor coefficients of `sin z / z`.
fn sinc_coefficients(order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut factorial = Rational::one();
    for m in 0..=order {
        factorial *= int(m as i64 + 1);
        out.push(match m % 4 {
            0 => factorial.recip(),
            2 => -factorial.recip(),
            _ => Rational::zero(),
        });
    }
    out
}

fn product(ring: &mut NumericRing, factors: &[NumericSeries]) -> NumericSeries {
    let mut out = factors[0].clone();
    for f in &factors[1..] {
        out = out.mul(f, ring);
    }
    out
}

fn ab_monomial(r: usize, s: usize) -> Monomial {
    Monomial::new(0, 0, r as u16, s as u16)
}

fn at_one_minus_one() -> Assignment {
    Assignment::new().with(Var::X, int(1)).with(Var::Y, int(-1))
}

/// `∑_{|k| = n} A^{dep k} f(k)`.
fn index_sum(alg: &mut IndexAlgebra, n: usize, mut f: impl FnMut(&mut IndexAlgebra, &Index) -> Combination) -> Combination {
    let mut out = Combination::zero();
    for k in enumerate_indices(n as u32) {
        let part = f(alg, &k).mul_monomial(&ab_monomial(k.depth(), 0));
        out += &part;
    }
    out
}

/// `∑ A^{dep k} B^{dep l} f(k, a, l)` over triples of weight `w` with `a ≥ 2`.
fn triple_sum(alg: &mut IndexAlgebra, w: usize, mut f: impl FnMut(&mut IndexAlgebra, &Triple) -> Combination) -> Combination {
    let mut out = Combination::zero();
    for t in enumerate_triples(w as u32, 2) {
        let part = f(alg, &t).mul_monomial(&ab_monomial(t.k.depth(), t.l.depth()));
        out += &part;
    }
    out
}

type Symbolic = Vec<(&'static str, Vec<RegularizedCombination>)>;

fn symbolic_lhs(ev: &mut Evaluator, name: NumericIdentity, order: usize) -> Symbolic {
    type Coefficient = fn(&mut IndexAlgebra, usize) -> Combination;
    let parts: Vec<(&'static str, Coefficient)> = match name {
        NumericIdentity::PsiSumKa => vec![
            ("plain", |alg, w| triple_sum(alg, w, |_, t| if t.l.is_empty() { Combination::index(t.joined()) } else { Combination::zero() })),
            ("star", |alg, w| triple_sum(alg, w, |_, t| if t.l.is_empty() { star(&t.joined()) } else { Combination::zero() })),
        ],
        NumericIdentity::ZetaKal => vec![
            ("plain", |alg, w| triple_sum(alg, w, |_, t| Combination::index(t.joined()))),
            ("star", |alg, w| triple_sum(alg, w, |_, t| star(&t.joined()))),
        ],
        NumericIdentity::ZetaSKal => vec![
            ("plain", |alg, w| triple_sum(alg, w, |a, t| a.lift_xy(&t.joined())).specialize(&at_one_minus_one())),
            ("star", |alg, w| triple_sum(alg, w, |a, t| a.lift_xy_star(&t.joined())).specialize(&at_one_minus_one())),
        ],
        NumericIdentity::GenFuncZeta => vec![
            ("plain", |alg, n| index_sum(alg, n, |_, k| Combination::index(k.clone()))),
            ("star", |alg, n| index_sum(alg, n, |_, k| star(k))),
        ],
        NumericIdentity::GenFuncZetaXy => vec![
            ("plain", |alg, n| index_sum(alg, n, |a, k| a.lift_xy(k))),
            ("star", |alg, n| index_sum(alg, n, |a, k| a.lift_xy_star(k))),
        ],
        NumericIdentity::GenFuncZetaS => vec![
            ("plain", |alg, n| index_sum(alg, n, |a, k| a.lift_xy(k)).specialize(&at_one_minus_one())),
            ("star", |alg, n| index_sum(alg, n, |a, k| a.lift_xy_star(k)).specialize(&at_one_minus_one())),
        ],
        NumericIdentity::GammaReflection => vec![("reflection", |alg, n| {
            let mut out = Combination::zero();
            for i in 0..=n {
                let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
                let p = alg.mul(&star(&Index::ones(i)), &star(&Index::ones(n - i)));
                out += &p.scale_int(sign);
            }
            out
        })],
        NumericIdentity::MainTheorem => {
            vec![("main", |alg, w| triple_sum(alg, w, |a, t| a.lift_xy(&t.joined())))]
        }
        NumericIdentity::MainTheoremStar => {
            vec![("main_star", |alg, w| triple_sum(alg, w, |a, t| a.lift_xy_star(&t.joined())))]
        }
        NumericIdentity::SumSchurGen => vec![(
            "schur",
            |alg, w| triple_sum(alg, w, |a, t| a.expand_antihook(&AntiHook::new(t.k.clone(), t.l.clone(), t.a))),
        )],
        NumericIdentity::RelationSumFormulas => Vec::new(),
    };
    parts
        .into_iter()
        .map(|(part, f)| {
            let coeffs = (0..=order)
                .map(|n| {
                    let u = f(&mut ev.alg, n);
                    ev.regularize_combination(&u)
                })
                .collect();
            (part, coeffs)
        })
        .collect()
}

fn sample_value(point: &Assignment, v: Var) -> Result<Rational> {
    point.get(v).cloned().ok_or(Error::MissingSample(v))
}

fn rhs_series(kit: &SeriesKit, name: NumericIdentity, part: &str, point: &Assignment) -> Result<NumericSeries> {
    let mut ring = NumericRing;
    let one = int(1);
    let get = |v: Var| sample_value(point, v);
    let out = match (name, part) {
        (NumericIdentity::PsiSumKa, "plain") => kit.psi_dq(&one, &one, &get(Var::A)?),
        (NumericIdentity::PsiSumKa, _) => {
            let a = get(Var::A)?;
            kit.psi_dq(&one, &(&one + &a), &a)
        }
        (NumericIdentity::ZetaKal, "plain") => {
            let (a, b) = (get(Var::A)?, get(Var::B)?);
            let psi = kit.psi_dq(&one, &(&one - &b), &(&a - &b));
            product(&mut ring, &[psi, kit.gamma(&one), kit.gamma_inv(&(&one - &b))])
        }
        (NumericIdentity::ZetaKal, _) => {
            let (a, b) = (get(Var::A)?, get(Var::B)?);
            let psi = kit.psi_dq(&one, &(&one + &a), &(&a - &b));
            product(&mut ring, &[psi, kit.gamma(&(&one + &b)), kit.gamma_inv(&one)])
        }
        (NumericIdentity::ZetaSKal, "plain") => {
            let (a, b) = (get(Var::A)?, get(Var::B)?);
            let first = kit.psi_dq(&one, &(&a - &one), &(&a - &b));
            let first = product(&mut ring, &[first, kit.pi_over_sin(&one), kit.sin_over_pi(&(&one - &a))]);
            let second = kit.psi_dq(&one, &(&one - &b), &(&a - &b));
            let second = product(&mut ring, &[second, kit.pi_over_sin(&one), kit.sin_over_pi(&(&one - &b))]);
            first.add(&second, &ring)
        }
        (NumericIdentity::ZetaSKal, _) => {
            let (a, b) = (get(Var::A)?, get(Var::B)?);
            let first = kit.psi_dq(&one, &(-(&one + &b)), &(&a - &b));
            let first = product(&mut ring, &[first, kit.sin_over_pi(&one), kit.pi_over_sin(&(&one + &a))]);
            let second = kit.psi_dq(&one, &(&one + &a), &(&a - &b));
            let second = product(&mut ring, &[second, kit.sin_over_pi(&one), kit.pi_over_sin(&(&one + &b))]);
            first.add(&second, &ring)
        }
        (NumericIdentity::GenFuncZeta, "plain") => {
            let a = get(Var::A)?;
            product(&mut ring, &[kit.gamma(&one), kit.gamma_inv(&(&one - &a))])
        }
        (NumericIdentity::GenFuncZeta, _) => {
            let a = get(Var::A)?;
            product(&mut ring, &[kit.gamma(&(&one + &a)), kit.gamma_inv(&one)])
        }
        (NumericIdentity::GenFuncZetaXy, "plain") => {
            let (x, y, a) = (get(Var::X)?, get(Var::Y)?, get(Var::A)?);
            let c = &one - &a;
            product(&mut ring, &[kit.gamma(&x), kit.gamma(&y), kit.gamma_inv(&(&x * &c)), kit.gamma_inv(&(&y * &c))])
        }
        (NumericIdentity::GenFuncZetaXy, _) => {
            let (x, y, a) = (get(Var::X)?, get(Var::Y)?, get(Var::A)?);
            let c = &one + &a;
            product(&mut ring, &[kit.gamma(&(&x * &c)), kit.gamma(&(&y * &c)), kit.gamma_inv(&x), kit.gamma_inv(&y)])
        }
        (NumericIdentity::GenFuncZetaS, "plain") => {
            let a = get(Var::A)?;
            product(&mut ring, &[kit.pi_over_sin(&one), kit.sin_over_pi(&(&one - &a))])
        }
        (NumericIdentity::GenFuncZetaS, _) => {
            let a = get(Var::A)?;
            product(&mut ring, &[kit.sin_over_pi(&one), kit.pi_over_sin(&(&one + &a))])
        }
        (NumericIdentity::GammaReflection, _) => kit.pi_over_sin(&one),
        (NumericIdentity::MainTheorem, _) => {
            let (x, y, a, b) = (get(Var::X)?, get(Var::Y)?, get(Var::A)?, get(Var::B)?);
            let (ca, cb) = (&one - &a, &one - &b);
            let base = product(&mut ring, &[kit.gamma(&x), kit.gamma(&y)]);
            let first = kit.psi_dq(&(&y * &y), &(&y * &ca), &(&y * &(&b - &a)));
            let first = product(&mut ring, &[first, base.clone(), kit.gamma_inv(&(&x * &ca)), kit.gamma_inv(&(&y * &ca))]);
            let second = kit.psi_dq(&(&x * &x), &(&x * &cb), &(&x * &(&a - &b)));
            let second = product(&mut ring, &[second, base, kit.gamma_inv(&(&x * &cb)), kit.gamma_inv(&(&y * &cb))]);
            first.add(&second, &ring)
        }
        (NumericIdentity::MainTheoremStar, _) => {
            let (x, y, a, b) = (get(Var::X)?, get(Var::Y)?, get(Var::A)?, get(Var::B)?);
            let (ca, cb) = (&one + &a, &one + &b);
            let base = product(&mut ring, &[kit.gamma_inv(&x), kit.gamma_inv(&y)]);
            let first = kit.psi_dq(&(&y * &y), &(&y * &cb), &(&y * &(&b - &a)));
            let first = product(&mut ring, &[first, base.clone(), kit.gamma(&(&x * &ca)), kit.gamma(&(&y * &ca))]);
            let second = kit.psi_dq(&(&x * &x), &(&x * &ca), &(&x * &(&a - &b)));
            let second = product(&mut ring, &[second, base, kit.gamma(&(&x * &cb)), kit.gamma(&(&y * &cb))]);
            first.add(&second, &ring)
        }
        (NumericIdentity::SumSchurGen, _) => {
            let (a, b) = (get(Var::A)?, get(Var::B)?);
            kit.psi_dq(&one, &(&one + &b), &(&a + &b))
        }
        (NumericIdentity::RelationSumFormulas, _) => {
            return Err(Error::InvalidParameter("relation_sum_formulas has no series form".into()))
        }
    };
    Ok(out)
}

fn distinct_points(name: NumericIdentity, samples: &[Sample]) -> Result<Vec<Assignment>> {
    let vars = name.free_vars();
    if vars.is_empty() {
        return Ok(vec![Assignment::new()]);
    }
    if samples.is_empty() {
        return Err(Error::InvalidParameter(format!("{name} needs at least one sample")));
    }
    let mut out: Vec<Assignment> = Vec::new();
    for s in samples {
        let p = s.project(vars);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn eval_symbolic(ev: &mut Evaluator, coeffs: &[RegularizedCombination], point: &Assignment) -> Result<NumericSeries> {
    let values =
        coeffs.iter().map(|r| Ok(ev.eval_regularized_combination(r, point)?.value)).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(&NumericRing, values, coeffs.len() - 1))
}

/// Both sides of every part of a series identity at one point.
pub fn identity_series(
    ev: &mut Evaluator,
    name: NumericIdentity,
    order: usize,
    point: &Assignment,
) -> Result<Vec<(&'static str, NumericSeries, NumericSeries)>> {
    let kit = SeriesKit::new(ev, order)?;
    let symbolic = symbolic_lhs(ev, name, order);
    if symbolic.is_empty() {
        return Err(Error::InvalidParameter(format!("{name} has no series form")));
    }
    let mut out = Vec::new();
    for (part, coeffs) in &symbolic {
        let lhs = eval_symbolic(ev, coeffs, point)?;
        out.push((*part, lhs, rhs_series(&kit, name, part, point)?));
    }
    Ok(out)
}

/// Compares both sides coefficientwise, in `W` and in `T`, at every
/// distinct projection of `samples` onto the identity's free variables.
pub fn check_numeric_identity(
    ev: &mut Evaluator,
    name: NumericIdentity,
    order: usize,
    samples: &[Sample],
    tol: f64,
) -> Result<NumericReport> {
    if name == NumericIdentity::RelationSumFormulas {
        return relation_sum_formulas(ev, order, tol);
    }
    let points = distinct_points(name, samples)?;
    let kit = SeriesKit::new(ev, order)?;
    let symbolic = symbolic_lhs(ev, name, order);
    let mut tracker = Tracker::new(tol);
    let mut labels = Vec::new();
    for point in &points {
        let label = format_assignment(point, name.free_vars());
        for (part, coeffs) in &symbolic {
            let lhs = eval_symbolic(ev, coeffs, point)?;
            let rhs = rhs_series(&kit, name, part, point)?;
            tracker.compare_series(part, &label, &lhs, &rhs);
        }
        labels.push(label);
    }
    Ok(tracker.finish(name.as_str(), order, labels))
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

struct SchurSide {
    cache: BTreeMap<(bool, Index), NumericPoly>,
    at: Assignment,
}

impl SchurSide {
    /// `ζ_S(k)` or `ζ_S^★(k)`.
    fn value(&mut self, ev: &mut Evaluator, starred: bool, k: &Index) -> Result<NumericPoly> {
        if let Some(v) = self.cache.get(&(starred, k.clone())) {
            return Ok(v.clone());
        }
        let lift = if starred { ev.alg.lift_xy_star(k) } else { ev.alg.lift_xy(k) };
        let v = ev.eval_z(&lift.specialize(&self.at), &Assignment::new())?;
        self.cache.insert((starred, k.clone()), v.clone());
        Ok(v)
    }
}

fn antihook_value(ev: &mut Evaluator, h: AntiHook) -> Result<NumericPoly> {
    let u = ev.alg.expand_antihook(&h);
    ev.eval_z(&u, &Assignment::new())
}

/// For each `(k, a, l)` of weight at most `order`:
/// `ζ_S(k,a,l) = ∑_i (−1)^{r−i+|k^i|+a+|l|} ζ(←l; k^i; a) ζ_S(k_i) + ∑_j (−1)^j ζ(k; ←l_j; a) ζ_S(l^j)`
/// and the starred counterpart with `ζ(k^i; ←l; a)`, `ζ(←l_j; k; a)`.
fn relation_sum_formulas(ev: &mut Evaluator, order: usize, tol: f64) -> Result<NumericReport> {
    let mut side = SchurSide { cache: BTreeMap::new(), at: at_one_minus_one() };
    let mut tracker = Tracker::new(tol);
    let mut case = 0;
    for w in 1..=order {
        for t in enumerate_triples(w as u32, 1) {
            let (k, a, l) = (&t.k, t.a, &t.l);
            let rl = l.reversed();
            let r = k.depth();
            let label = format!("({k};{a};{l})");
            for starred in [false, true] {
                let lhs = side.value(ev, starred, &t.joined())?;
                let mut rhs = NumericPoly::zero();
                for i in 0..=r {
                    let tail = k.suffix(i);
                    let h = if starred {
                        AntiHook::new(tail.clone(), rl.clone(), a)
                    } else {
                        AntiHook::new(rl.clone(), tail.clone(), a)
                    };
                    let e = sign(r - i) * sign((tail.weight() + a + l.weight()) as usize);
                    let term = antihook_value(ev, h)?.mul(&side.value(ev, starred, &k.prefix(i))?);
                    rhs = rhs.add(&term.scale(TwoFloat::from(e as f64)));
                }
                for j in 0..=l.depth() {
                    let lj = l.prefix(j).reversed();
                    let h = if starred { AntiHook::new(lj, k.clone(), a) } else { AntiHook::new(k.clone(), lj, a) };
                    let term = antihook_value(ev, h)?.mul(&side.value(ev, starred, &l.suffix(j))?);
                    rhs = rhs.add(&term.scale(TwoFloat::from(sign(j) as f64)));
                }
                tracker.compare(if starred { "star" } else { "plain" }, &label, case, &lhs, &rhs);
            }
            case += 1;
        }
    }
    Ok(tracker.finish(NumericIdentity::RelationSumFormulas.as_str(), order, Vec::new()))
}

/// The main theorem specialized at `(x, y) = (1, 0)` and `(1, −1)`,
/// compared with the corresponding corollaries: both sides of the theorem
/// must agree with the corollary's closed form.
pub fn corollary_consistency(
    ev: &mut Evaluator,
    order: usize,
    samples: &[Sample],
    tol: f64,
) -> Result<Vec<NumericReport>> {
    let kit = SeriesKit::new(ev, order)?;
    let cases = [
        ("corollary_x1_y0", int(0), NumericIdentity::ZetaKal),
        ("corollary_x1_ym1", int(-1), NumericIdentity::ZetaSKal),
    ];
    let theorems = [(NumericIdentity::MainTheorem, "plain"), (NumericIdentity::MainTheoremStar, "star")];
    let symbolic: Vec<_> = theorems.iter().map(|(name, _)| symbolic_lhs(ev, *name, order)).collect();
    let ab = distinct_points(NumericIdentity::ZetaKal, samples)?;
    let mut out = Vec::new();
    for (label, y, corollary) in cases {
        let mut tracker = Tracker::new(tol);
        let mut labels = Vec::new();
        for p in &ab {
            let mut point = p.clone();
            point.set(Var::X, Some(int(1)));
            point.set(Var::Y, Some(y.clone()));
            let sample = format_assignment(&point, &Var::ALL);
            for ((theorem, part), sym) in theorems.iter().zip(&symbolic) {
                let lhs = eval_symbolic(ev, &sym[0].1, &point)?;
                let rhs = rhs_series(&kit, *theorem, part, &point)?;
                let closed = rhs_series(&kit, corollary, part, &point)?;
                tracker.compare_series(&format!("{}_lhs_{part}", theorem.as_str()), &sample, &lhs, &closed);
                tracker.compare_series(&format!("{}_rhs_{part}", theorem.as_str()), &sample, &rhs, &closed);
            }
            labels.push(sample);
        }
        out.push(tracker.finish(label, order, labels));
    }
    Ok(out)
}

/// The `B⁰` column of the index-level generating function against the
/// `ψ`-side, compared after evaluation, exactly in `A`.
pub fn remark_b0_column_numeric(ev: &mut Evaluator, order: usize, tol: f64) -> Result<NumericReport> {
    let f = b_zero_column(&build_f_i(&mut ev.alg, order));
    let psi = b_zero_column(&psi_side(order));
    let none = Assignment::new();
    let mut tracker = Tracker::new(tol);
    for w in 0..=order {
        for r in 0..=w {
            let m = ab_monomial(r, 0);
            let lhs = ev.eval_z(&monomial_part(f.coeff(w), &m), &none)?;
            let rhs = ev.eval_z(&monomial_part(psi.coeff(w), &m), &none)?;
            tracker.compare(&format!("A^{r}"), "", w, &lhs, &rhs);
        }
    }
    Ok(tracker.finish("remark_b0_column", order, Vec::new()))
}
