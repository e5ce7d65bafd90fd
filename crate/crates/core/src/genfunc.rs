//! Index-valued generating functions and their exact identities.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::algebra::{antipode_tilde, star, Combination, IndexAlgebra};
use crate::antihook::AntiHook;
use crate::error::{Error, Result};
use crate::index::{enumerate_indices, enumerate_triples, Index};
use crate::poly::{Assignment, Monomial, PolyScalar, Substitution, Var};
use crate::series::{reciprocal, TruncatedSeries};
use crate::Rational;

pub type ISeries = TruncatedSeries<Combination>;

fn var(v: Var) -> PolyScalar {
    PolyScalar::var(v)
}

fn one_plus(v: Var) -> PolyScalar {
    &PolyScalar::one() + &var(v)
}

fn one_minus(v: Var) -> PolyScalar {
    &PolyScalar::one() - &var(v)
}

/// `Γ_{1,𝓘}(W) = exp(∑_{k≥1} [k]/k W^k)`.
pub fn gamma1_i(alg: &mut IndexAlgebra, order: usize) -> ISeries {
    let generator = TruncatedSeries::from_fn(order, |k| {
        if k == 0 {
            Combination::zero()
        } else {
            Combination::index(Index::single(k as u32)).scale_rational(&reciprocal(k))
        }
    });
    generator.exp(alg).expect("generator has zero constant term")
}

/// `Γ_{1,𝓘}(W)^{-1}` by series inversion.
pub fn gamma1_i_inverse(alg: &mut IndexAlgebra, order: usize) -> ISeries {
    gamma1_i(alg, order).inverse(alg).expect("constant term is [∅]")
}

/// `F_𝓘(A, B, W) = ∑ [k; l; a] A^{dep k} B^{dep l} W^{|k|+a+|l|}`, `a ≥ 2`.
pub fn build_f_i(alg: &mut IndexAlgebra, order: usize) -> ISeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for w in 0..=order as u32 {
        let mut c = Combination::zero();
        for t in enumerate_triples(w, 2) {
            let m = Monomial::new(0, 0, t.k.depth() as u16, t.l.depth() as u16);
            let h = alg.expand_antihook(&AntiHook::new(t.k, t.l, t.a));
            c += &h.mul_monomial(&m);
        }
        coeffs.push(c);
    }
    TruncatedSeries::from_fn(order, |n| coeffs[n].clone())
}

/// Applies a variable substitution to every coefficient.
pub fn substitute_series(f: &ISeries, images: &Substitution) -> ISeries {
    f.map(|c| c.substitute(images))
}

/// Applies `S̃` to every coefficient.
pub fn antipode_series(f: &ISeries) -> ISeries {
    f.map(antipode_tilde)
}

/// The exact identities checked by [`exact_identity_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    GenFuncK,
    GenFuncKStar,
    GenFuncKxy,
    GenFuncKxyStar,
    GenFuncKalXy,
    GenFuncKalXyStar,
    Gamma1Expansions,
    FAntipode,
}

impl IdentityName {
    pub const ALL: [IdentityName; 8] = [
        IdentityName::GenFuncK,
        IdentityName::GenFuncKStar,
        IdentityName::GenFuncKxy,
        IdentityName::GenFuncKxyStar,
        IdentityName::GenFuncKalXy,
        IdentityName::GenFuncKalXyStar,
        IdentityName::Gamma1Expansions,
        IdentityName::FAntipode,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::GenFuncK => "gen_func_k",
            IdentityName::GenFuncKStar => "gen_func_k_star",
            IdentityName::GenFuncKxy => "gen_func_kxy",
            IdentityName::GenFuncKxyStar => "gen_func_kxy_star",
            IdentityName::GenFuncKalXy => "gen_func_kal_xy",
            IdentityName::GenFuncKalXyStar => "gen_func_kal_xy_star",
            IdentityName::Gamma1Expansions => "gamma1_expansions",
            IdentityName::FAntipode => "f_antipode",
        }
    }

    /// Truncation order used when none is given.
    pub fn default_order(self) -> usize {
        match self {
            IdentityName::GenFuncK | IdentityName::GenFuncKStar | IdentityName::Gamma1Expansions => 10,
            _ => 8,
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(String::from(s)))
    }
}

/// The first coefficient where two sides disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    /// Which part of a multi-part identity failed.
    pub part: &'static str,
    pub power: usize,
    pub index: Index,
    pub monomial: Monomial,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactReport {
    pub identity: IdentityName,
    pub order: usize,
    pub holds: bool,
    pub first_failure: Option<Failure>,
}

/// Locates the first differing `(power, index, monomial)` of two series.
pub fn compare_series(part: &'static str, lhs: &ISeries, rhs: &ISeries) -> Option<Failure> {
    let n = lhs.order().min(rhs.order());
    for power in 0..=n {
        if let Some((index, monomial, l, r)) = first_difference(lhs.coeff(power), rhs.coeff(power)) {
            return Some(Failure { part, power, index, monomial, lhs: l, rhs: r });
        }
    }
    None
}

/// First `(index, monomial)` where two combinations differ, with both
/// coefficients.
pub fn first_difference(u: &Combination, v: &Combination) -> Option<(Index, Monomial, Rational, Rational)> {
    if u == v {
        return None;
    }
    let keys: BTreeSet<&Index> = u.terms().chain(v.terms()).map(|(k, _)| k).collect();
    for k in keys {
        let (p, q) = (u.coefficient(k), v.coefficient(k));
        if p == q {
            continue;
        }
        let monomials: BTreeSet<Monomial> = p.terms().chain(q.terms()).map(|(m, _)| *m).collect();
        for m in monomials {
            let (a, b) = (p.coefficient(&m), q.coefficient(&m));
            if a != b {
                return Some((k.clone(), m, a, b));
            }
        }
    }
    None
}

/// Runs a named exact identity at truncation order `order`.
pub fn exact_identity_check(alg: &mut IndexAlgebra, name: IdentityName, order: usize) -> ExactReport {
    let parts = identity_parts(alg, name, order);
    let first_failure = parts.iter().find_map(|(part, l, r)| compare_series(part, l, r));
    ExactReport { identity: name, order, holds: first_failure.is_none(), first_failure }
}

/// The `(label, lhs, rhs)` pairs making up a named identity.
pub fn identity_parts(alg: &mut IndexAlgebra, name: IdentityName, order: usize) -> Vec<(&'static str, ISeries, ISeries)> {
    match name {
        IdentityName::GenFuncK => {
            let lhs = sum_indices(order, |k| Combination::index(k.clone()), true);
            let rhs = rhs_gen_func_k(alg, order, &one_minus(Var::A), false);
            vec2(("identity", lhs, rhs))
        }
        IdentityName::GenFuncKStar => {
            let lhs = sum_indices(order, star, true);
            let rhs = rhs_gen_func_k(alg, order, &one_plus(Var::A), true);
            let derived = antipode_series(&substitute_series(
                &rhs_gen_func_k(alg, order, &one_minus(Var::A), false),
                &negate(&[Var::A]),
            ));
            let mut parts = vec2(("identity", lhs, rhs.clone()));
            parts.push(("from_non_star", derived, rhs));
            parts
        }
        IdentityName::GenFuncKxy => {
            let lhs = sum_indices_with(order, |k| alg.lift_xy(k));
            let rhs = rhs_gen_func_kxy(alg, order, false);
            let at = crate::algebra::at_one_zero();
            let specialized = lhs.map(|c| c.specialize(&at));
            let plain = sum_indices(order, |k| Combination::index(k.clone()), true);
            let mut parts = vec2(("identity", lhs, rhs));
            parts.push(("at_one_zero", specialized, plain));
            parts
        }
        IdentityName::GenFuncKxyStar => {
            let lhs = sum_indices_with(order, |k| alg.lift_xy_star(k));
            let rhs = rhs_gen_func_kxy(alg, order, true);
            let derived = antipode_series(&substitute_series(&rhs_gen_func_kxy(alg, order, false), &negate(&[Var::A])));
            let mut parts = vec2(("identity", lhs, rhs.clone()));
            parts.push(("from_non_star", derived, rhs));
            parts
        }
        IdentityName::GenFuncKalXy => {
            let lhs = sum_triples_lifted(alg, order, false);
            let rhs = rhs_gen_func_kal_xy(alg, order, false);
            vec2(("identity", lhs, rhs))
        }
        IdentityName::GenFuncKalXyStar => {
            let lhs = sum_triples_lifted(alg, order, true);
            let rhs = rhs_gen_func_kal_xy(alg, order, true);
            let plain = rhs_gen_func_kal_xy(alg, order, false);
            let derived = antipode_series(&substitute_series(&plain, &negate(&[Var::A, Var::B]))).neg(alg);
            let mut parts = vec2(("identity", lhs, rhs.clone()));
            parts.push(("from_non_star", derived, rhs));
            parts
        }
        IdentityName::Gamma1Expansions => gamma1_expansion_parts(alg, order),
        IdentityName::FAntipode => {
            let f = build_f_i(alg, order);
            let lhs = antipode_series(&f);
            let swap = Substitution::identity().with(Var::A, -&var(Var::B)).with(Var::B, -&var(Var::A));
            let rhs = substitute_series(&f, &swap).neg(alg);
            vec2(("identity", lhs, rhs))
        }
    }
}

fn vec2(part: (&'static str, ISeries, ISeries)) -> Vec<(&'static str, ISeries, ISeries)> {
    let mut v = Vec::new();
    v.push(part);
    v
}

fn negate(vars: &[Var]) -> Substitution {
    vars.iter().fold(Substitution::identity(), |s, &v| s.with(v, -&var(v)))
}

/// `∑_{|k| ≤ N} f(k) A^{dep k} W^{|k|}` (or without the `A` weight).
fn sum_indices(order: usize, mut f: impl FnMut(&Index) -> Combination, weight_a: bool) -> ISeries {
    TruncatedSeries::from_fn(order, |n| {
        let mut c = Combination::zero();
        for k in enumerate_indices(n as u32) {
            let term = f(&k);
            if weight_a {
                c += &term.mul_monomial(&Monomial::power(Var::A, k.depth() as u16));
            } else {
                c += &term;
            }
        }
        c
    })
}

fn sum_indices_with(order: usize, f: impl FnMut(&Index) -> Combination) -> ISeries {
    sum_indices(order, f, true)
}

/// `∑ [k, a, l]^{(★)}_{x,y} A^{dep k} B^{dep l} W^{|k|+a+|l|}`, `a ≥ 2`.
fn sum_triples_lifted(alg: &mut IndexAlgebra, order: usize, starred: bool) -> ISeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for w in 0..=order as u32 {
        let mut c = Combination::zero();
        for t in enumerate_triples(w, 2) {
            let joined = t.joined();
            let lift = if starred { alg.lift_xy_star(&joined) } else { alg.lift_xy(&joined) };
            c += &lift.mul_monomial(&Monomial::new(0, 0, t.k.depth() as u16, t.l.depth() as u16));
        }
        coeffs.push(c);
    }
    TruncatedSeries::from_fn(order, |n| coeffs[n].clone())
}

/// `Γ(W)/Γ(cW)`, or `Γ(cW)/Γ(W)` when `invert`.
fn rhs_gen_func_k(alg: &mut IndexAlgebra, order: usize, c: &PolyScalar, invert: bool) -> ISeries {
    let gamma = gamma1_i(alg, order);
    let inverse = gamma.inverse(alg).expect("unit constant term");
    if invert {
        gamma.scale_variable(c, alg).mul(&inverse, alg)
    } else {
        gamma.mul(&inverse.scale_variable(c, alg), alg)
    }
}

/// Series forms of `Γ_{1,𝓘}` shared by the `x, y` identities.
struct GammaKit {
    gamma: ISeries,
    inverse: ISeries,
}

impl GammaKit {
    fn new(alg: &mut IndexAlgebra, order: usize) -> Self {
        let gamma = gamma1_i(alg, order);
        let inverse = gamma.inverse(alg).expect("unit constant term");
        GammaKit { gamma, inverse }
    }

    /// `Γ(x c W) Γ(y c W)`, or its inverse.
    fn pair(&self, alg: &mut IndexAlgebra, c: &PolyScalar, inverse: bool) -> ISeries {
        let base = if inverse { &self.inverse } else { &self.gamma };
        let xs = base.scale_variable(&(&var(Var::X) * c), alg);
        let ys = base.scale_variable(&(&var(Var::Y) * c), alg);
        xs.mul(&ys, alg)
    }

    /// `Γ(xW)Γ(yW) / (Γ(x c W)Γ(y c W))`, or the reciprocal when `flip`.
    fn ratio(&self, alg: &mut IndexAlgebra, c: &PolyScalar, flip: bool) -> ISeries {
        let one = PolyScalar::one();
        if flip {
            let num = self.pair(alg, c, false);
            let den = self.pair(alg, &one, true);
            num.mul(&den, alg)
        } else {
            let num = self.pair(alg, &one, false);
            let den = self.pair(alg, c, true);
            num.mul(&den, alg)
        }
    }
}

fn rhs_gen_func_kxy(alg: &mut IndexAlgebra, order: usize, starred: bool) -> ISeries {
    let kit = GammaKit::new(alg, order);
    if starred {
        kit.ratio(alg, &one_plus(Var::A), true)
    } else {
        kit.ratio(alg, &one_minus(Var::A), false)
    }
}

fn rhs_gen_func_kal_xy(alg: &mut IndexAlgebra, order: usize, starred: bool) -> ISeries {
    let kit = GammaKit::new(alg, order);
    let f = build_f_i(alg, order);
    let (a, b) = (var(Var::A), var(Var::B));
    let (x, y) = (var(Var::X), var(Var::Y));
    let f_at = |alg: &mut IndexAlgebra, first: PolyScalar, second: PolyScalar, scale: &PolyScalar| {
        let s = Substitution::identity().with(Var::A, first).with(Var::B, second);
        substitute_series(&f, &s).scale_variable(scale, alg)
    };
    let (first, second) = if starred {
        let f1 = f_at(alg, -&a, b.clone(), &y);
        let g1 = kit.ratio(alg, &one_plus(Var::A), true);
        let f2 = f_at(alg, -&b, a.clone(), &x);
        let g2 = kit.ratio(alg, &one_plus(Var::B), true);
        (f1.mul(&g1, alg), f2.mul(&g2, alg))
    } else {
        let f1 = f_at(alg, b.clone(), -&a, &y);
        let g1 = kit.ratio(alg, &one_minus(Var::A), false);
        let f2 = f_at(alg, a.clone(), -&b, &x);
        let g2 = kit.ratio(alg, &one_minus(Var::B), false);
        (f1.mul(&g1, alg), f2.mul(&g2, alg))
    };
    first.add(&second, alg)
}

fn gamma1_expansion_parts(alg: &mut IndexAlgebra, order: usize) -> Vec<(&'static str, ISeries, ISeries)> {
    let gamma = gamma1_i(alg, order);
    let inverse = gamma.inverse(alg).expect("unit constant term");
    let all = sum_indices(order, |k| Combination::index(k.clone()), false);
    let ones_star = TruncatedSeries::from_fn(order, |n| star(&Index::ones(n)));
    let ones_alt = TruncatedSeries::from_fn(order, |n| Combination::index(Index::ones(n)).scale_int(alt(n)));
    let star_alt = sum_indices(order, |k| star(k).scale_int(alt(k.depth())), false);
    let product = gamma.mul(&inverse, alg);
    let unit = TruncatedSeries::one(alg, order);
    let mut parts = Vec::new();
    parts.push(("gamma_sum", gamma.clone(), all));
    parts.push(("gamma_ones_star", gamma.clone(), ones_star));
    parts.push(("inverse_ones", inverse.clone(), ones_alt));
    parts.push(("inverse_sum_star", inverse.clone(), star_alt));
    parts.push(("inverse_via_antipode", antipode_series(&gamma), inverse));
    parts.push(("gamma_times_inverse", product, unit));
    parts
}

fn alt(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(c1^n − c2^n)/(c1 − c2) = ∑_{j<n} c1^j c2^{n−1−j}`.
pub fn difference_quotient(c1: &PolyScalar, c2: &PolyScalar, n: usize) -> PolyScalar {
    let p1 = c1.powers(n);
    let p2 = c2.powers(n);
    let mut out = PolyScalar::zero();
    for j in 0..n {
        out += &(&p1[j] * &p2[n - 1 - j]);
    }
    out
}

/// The coefficient of a monomial in the `A, B` grading.
pub fn monomial_part(u: &Combination, m: &Monomial) -> Combination {
    let mut out = Combination::zero();
    for (k, p) in u.terms() {
        let q = p.coefficient(m);
        if !q.is_zero() {
            out.add_term(k.clone(), &PolyScalar::constant(q));
        }
    }
    out
}

/// The would-be closed form `W/(1−A)(ψ_{1,𝓘}((1+B)W) − ψ_{1,𝓘}((A+B)W))`
/// with `ψ_{1,𝓘}(W) = ∑_{k≥2} [k] W^{k−1}`.
pub fn psi_side(order: usize) -> ISeries {
    let c1 = one_plus(Var::B);
    let c2 = &var(Var::A) + &var(Var::B);
    TruncatedSeries::from_fn(order, |w| {
        if w < 2 {
            Combination::zero()
        } else {
            Combination::term(Index::single(w as u32), difference_quotient(&c1, &c2, w - 1))
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemarkWitness {
    pub weight: usize,
    pub r: usize,
    pub s: usize,
    pub lhs: Combination,
    pub rhs: Combination,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemarkOutcome {
    pub order: usize,
    /// First `(w, r, s)` in increasing `w`, then lexicographic `(r, s)`.
    pub witness: Option<RemarkWitness>,
    /// First mismatch restricted to `s = 0`, if any.
    pub b0_mismatch: Option<RemarkWitness>,
}

impl RemarkOutcome {
    pub fn inconclusive(&self) -> bool {
        self.witness.is_none()
    }
}

/// Searches for a coefficient where `F_𝓘` and the ψ-side differ.
pub fn find_remark_counterexample(alg: &mut IndexAlgebra, order: usize) -> RemarkOutcome {
    let f = build_f_i(alg, order);
    let psi = psi_side(order);
    let mut witness = None;
    let mut b0_mismatch = None;
    for w in 2..=order {
        for r in 0..=w {
            for s in 0..=w - r {
                let m = Monomial::new(0, 0, r as u16, s as u16);
                let lhs = monomial_part(f.coeff(w), &m);
                let rhs = monomial_part(psi.coeff(w), &m);
                if lhs == rhs {
                    continue;
                }
                let found = RemarkWitness { weight: w, r, s, lhs, rhs };
                if s == 0 && b0_mismatch.is_none() {
                    b0_mismatch = Some(found.clone());
                }
                if witness.is_none() {
                    witness = Some(found);
                }
            }
        }
    }
    RemarkOutcome { order, witness, b0_mismatch }
}

/// Sets `B = 0` in every coefficient.
pub fn b_zero_column(f: &ISeries) -> ISeries {
    let at = Assignment::new().with(Var::B, Rational::zero());
    f.map(|c| c.specialize(&at))
}
