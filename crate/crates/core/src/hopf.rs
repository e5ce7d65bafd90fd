//! Exhaustive checks of the Hopf-algebra axioms on small weights.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    antipode, antipode_tilde, at_one_zero, coassociativity_sides, coproduct, star, Combination, IndexAlgebra,
    Tensor,
};
use crate::index::{enumerate_indices, enumerate_up_to, Index};
use crate::poly::PolyScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub check: &'static str,
    pub max_weight: u32,
    pub cases: usize,
    pub holds: bool,
    pub first_failure: Option<String>,
}

/// The names of every check in [`run_hopf_suite`], in run order.
pub const HOPF_CHECKS: [&str; 16] = [
    "commutativity",
    "associativity",
    "unit",
    "counit",
    "coassociativity",
    "coproduct_multiplicative",
    "antipode_law",
    "antipode_involution",
    "antipode_homomorphism",
    "antipode_tilde_involution",
    "antipode_tilde_homomorphism",
    "telescoping",
    "lift_multiplicative",
    "lift_antipode",
    "lift_specialization",
    "lift_star_specialization",
];

pub(crate) struct Tally {
    check: &'static str,
    max_weight: u32,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    pub(crate) fn new(check: &'static str, max_weight: u32) -> Self {
        Tally { check, max_weight, cases: 0, failure: None }
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub(crate) fn finish(self) -> SuiteReport {
        SuiteReport {
            check: self.check,
            max_weight: self.max_weight,
            cases: self.cases,
            holds: self.failure.is_none(),
            first_failure: self.failure,
        }
    }
}

/// Pairs `(k, l)` with `|k| + |l| ≤ max_weight`.
pub fn pairs_up_to(max_weight: u32) -> Vec<(Index, Index)> {
    let mut out = Vec::new();
    for a in 0..=max_weight {
        for b in 0..=max_weight - a {
            for k in enumerate_indices(a) {
                for l in enumerate_indices(b) {
                    out.push((k.clone(), l));
                }
            }
        }
    }
    out
}

fn triples_up_to(max_weight: u32) -> Vec<(Index, Index, Index)> {
    let mut out = Vec::new();
    for (k, l) in pairs_up_to(max_weight) {
        let used = k.weight() + l.weight();
        for m in enumerate_up_to(max_weight - used) {
            out.push((k.clone(), l.clone(), m));
        }
    }
    out
}

fn basis(k: &Index) -> Combination {
    Combination::index(k.clone())
}

fn apply_counit_left(t: &Tensor) -> Combination {
    let mut out = Combination::zero();
    for ((a, b), p) in t.terms() {
        if a.is_empty() {
            out.add_term(b.clone(), p);
        }
    }
    out
}

fn apply_counit_right(t: &Tensor) -> Combination {
    let mut out = Combination::zero();
    for ((a, b), p) in t.terms() {
        if b.is_empty() {
            out.add_term(a.clone(), p);
        }
    }
    out
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Runs a single named check. Unknown names return `None`.
pub fn run_hopf_check(alg: &mut IndexAlgebra, check: &str, max_weight: u32) -> Option<SuiteReport> {
    let name = *HOPF_CHECKS.iter().find(|&&c| c == check)?;
    let mut t = Tally::new(name, max_weight);
    match name {
        "commutativity" => {
            for (k, l) in pairs_up_to(max_weight) {
                let ok = alg.harmonic(&k, &l) == alg.harmonic(&l, &k);
                t.record(ok, || format!("[{k}]*[{l}]"));
            }
        }
        "associativity" => {
            for (k, l, m) in triples_up_to(max_weight) {
                let kl = alg.harmonic(&k, &l);
                let left = alg.mul(&kl, &basis(&m));
                let lm = alg.harmonic(&l, &m);
                let right = alg.mul(&basis(&k), &lm);
                t.record(left == right, || format!("([{k}]*[{l}])*[{m}]"));
            }
        }
        "unit" => {
            for k in enumerate_up_to(max_weight) {
                let ok = alg.mul(&basis(&k), &Combination::unit()) == basis(&k)
                    && alg.mul(&Combination::unit(), &basis(&k)) == basis(&k);
                t.record(ok, || format!("[{k}]"));
            }
        }
        "counit" => {
            for k in enumerate_up_to(max_weight) {
                let d = coproduct(&basis(&k));
                let ok = apply_counit_left(&d) == basis(&k) && apply_counit_right(&d) == basis(&k);
                t.record(ok, || format!("[{k}]"));
            }
        }
        "coassociativity" => {
            for k in enumerate_up_to(max_weight) {
                let (left, right) = coassociativity_sides(&basis(&k));
                t.record(left == right, || format!("[{k}]"));
            }
        }
        "coproduct_multiplicative" => {
            for (k, l) in pairs_up_to(max_weight) {
                let lhs = coproduct(&alg.harmonic(&k, &l));
                let rhs = alg.mul_tensor(&coproduct(&basis(&k)), &coproduct(&basis(&l)));
                t.record(lhs == rhs, || format!("[{k}]*[{l}]"));
            }
        }
        "antipode_law" => {
            for k in enumerate_up_to(max_weight) {
                let d = coproduct(&basis(&k));
                let left = d.map_sides(|a| antipode(&basis(a)), basis).multiply(alg);
                let right = d.map_sides(basis, |b| antipode(&basis(b))).multiply(alg);
                let expected = if k.is_empty() { Combination::unit() } else { Combination::zero() };
                t.record(left == expected && right == expected, || format!("[{k}]"));
            }
        }
        "antipode_involution" => {
            for k in enumerate_up_to(max_weight) {
                t.record(antipode(&antipode(&basis(&k))) == basis(&k), || format!("[{k}]"));
            }
        }
        "antipode_homomorphism" => {
            for (k, l) in pairs_up_to(max_weight) {
                let lhs = antipode(&alg.harmonic(&k, &l));
                let rhs = alg.mul(&antipode(&basis(&k)), &antipode(&basis(&l)));
                t.record(lhs == rhs, || format!("[{k}]*[{l}]"));
            }
        }
        "antipode_tilde_involution" => {
            for k in enumerate_up_to(max_weight) {
                t.record(antipode_tilde(&antipode_tilde(&basis(&k))) == basis(&k), || format!("[{k}]"));
            }
        }
        "antipode_tilde_homomorphism" => {
            for (k, l) in pairs_up_to(max_weight) {
                let lhs = antipode_tilde(&alg.harmonic(&k, &l));
                let rhs = alg.mul(&antipode_tilde(&basis(&k)), &antipode_tilde(&basis(&l)));
                t.record(lhs == rhs, || format!("[{k}]*[{l}]"));
            }
        }
        "telescoping" => {
            for k in enumerate_up_to(max_weight) {
                let expected = if k.is_empty() { Combination::unit() } else { Combination::zero() };
                t.record(alg.telescoping_sum(&k) == expected, || format!("({k})"));
            }
        }
        "lift_multiplicative" => {
            for (k, l) in pairs_up_to(max_weight) {
                let product = alg.harmonic(&k, &l);
                let lhs = alg.lift_xy_linear(&product);
                let (lk, ll) = (alg.lift_xy(&k), alg.lift_xy(&l));
                let rhs = alg.mul(&lk, &ll);
                t.record(lhs == rhs, || format!("[{k}]*[{l}]"));
            }
        }
        "lift_antipode" => {
            for k in enumerate_up_to(max_weight) {
                let lhs = antipode_tilde(&alg.lift_xy(&k));
                let rhs = alg.lift_xy_star(&k).scale_int(sign(k.depth()));
                t.record(lhs == rhs, || format!("({k})"));
            }
        }
        "lift_specialization" => {
            let at = at_one_zero();
            for k in enumerate_up_to(max_weight) {
                t.record(alg.lift_xy(&k).specialize(&at) == basis(&k), || format!("({k})"));
            }
        }
        "lift_star_specialization" => {
            let at = at_one_zero();
            for k in enumerate_up_to(max_weight) {
                t.record(alg.lift_xy_star(&k).specialize(&at) == star(&k), || format!("({k})"));
            }
        }
        _ => unreachable!(),
    }
    Some(t.finish())
}

/// Every check in [`HOPF_CHECKS`] at the same weight bound.
pub fn run_hopf_suite(alg: &mut IndexAlgebra, max_weight: u32) -> Vec<SuiteReport> {
    HOPF_CHECKS
        .iter()
        .map(|c| run_hopf_check(alg, c, max_weight).expect("known check"))
        .collect()
}

/// `c[∅]` for a scalar `c`.
pub fn scalar(c: PolyScalar) -> Combination {
    Combination::term(Index::empty(), c)
}
