use std::f64::consts::PI;

use mzv_hopf::algebra::{at_one_zero, star};
use mzv_hopf::antihook::antihooks_up_to;
use mzv_hopf::index::enumerate_up_to;
use mzv_hopf::numeric::{
    brute_force_mzv, check_numeric_identity, check_schur_sum_formula, check_sum_formula, default_samples,
    eval_admissible, identity_series, Evaluator, MzvCache, NumericIdentity, NumericPoly, Regularizer, TwoFloat,
};
use mzv_hopf::poly::Assignment;
use mzv_hopf::{Combination, Error, Index, IndexAlgebra};
use proptest::prelude::*;

const ZETA3: f64 = 1.202_056_903_159_594_2;

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

#[test]
fn regularization_examples() {
    let mut alg = IndexAlgebra::new();
    let mut reg = Regularizer::new();
    assert_eq!(reg.regularize(&mut alg, &idx(&[1])).to_string(), "T");
    let r = reg.regularize(&mut alg, &idx(&[2, 1]));
    assert_eq!(r.to_string(), "ζ(2)T−ζ(1,2)−ζ(3)");
    assert_eq!(r.t_degree(), Some(1));
    for k in [idx(&[2]), idx(&[1, 3]), idx(&[2, 1, 2])] {
        let r = reg.regularize(&mut alg, &k);
        assert_eq!((r.len(), r.t_degree()), (1, Some(0)));
        assert_eq!(r.coefficient(0, &k), mzv_hopf::Rational::from_integer(1.into()));
    }
}

#[test]
fn admissible_values() {
    assert_eq!(eval_admissible(&Index::empty(), 1e-10).unwrap().to_f64(), 1.0);
    let z2 = eval_admissible(&idx(&[2]), 1e-10).unwrap();
    assert!((z2.to_f64() - PI * PI / 6.0).abs() < 1e-15);
    assert!(z2.error <= 1e-10);
    let z12 = eval_admissible(&idx(&[1, 2]), 1e-10).unwrap();
    assert!((z12.to_f64() - ZETA3).abs() < 1e-15);
    let z4 = eval_admissible(&idx(&[4]), 1e-10).unwrap().to_f64();
    let z22 = eval_admissible(&idx(&[2, 2]), 1e-10).unwrap().to_f64();
    assert!((z22 - 0.75 * z4).abs() < 1e-15);
}

#[test]
fn admissible_errors() {
    assert!(matches!(eval_admissible(&idx(&[2, 1]), 1e-10), Err(Error::NotAdmissible(_))));
    assert!(matches!(eval_admissible(&idx(&[3]), 1e-40), Err(Error::ToleranceUnreachable { .. })));
    assert!(eval_admissible(&idx(&[3]), 0.0).is_err());
}

#[test]
fn brute_force_examples() {
    let (v, tail) = brute_force_mzv(&idx(&[2]), 10_000).unwrap();
    let gap = PI * PI / 6.0 - v;
    assert!(gap > 0.0 && gap <= tail && tail <= 1.1e-4);
    assert_eq!(format!("{v:.4}"), "1.6448");
    let (v, tail) = brute_force_mzv(&idx(&[1, 2]), 10_000).unwrap();
    assert!((v - ZETA3).abs() < 1e-2);
    assert!(ZETA3 - v <= tail);
    let (v, tail) = brute_force_mzv(&idx(&[3, 2]), 1000).unwrap();
    let exact = eval_admissible(&idx(&[3, 2]), 1e-12).unwrap().to_f64();
    assert!(exact >= v && exact - v <= tail);
    assert!(brute_force_mzv(&idx(&[1, 1]), 100).is_err());
}

#[test]
fn oracle_agreement_to_weight_five() {
    for k in enumerate_up_to(5).into_iter().filter(|k| k.is_admissible() && !k.is_empty()) {
        let exact = eval_admissible(&k, 1e-20).unwrap().to_f64();
        let (brute, tail) = brute_force_mzv(&k, 3000).unwrap();
        assert!(exact - brute >= -1e-13 && exact - brute <= tail + 1e-13, "({k})");
    }
}

#[test]
fn evaluation_examples() {
    let mut ev = Evaluator::new(1e-12);
    let none = Assignment::new();
    assert_eq!(ev.eval_z(&Combination::unit(), &none).unwrap(), NumericPoly::one());
    let product = ev.alg.harmonic(&idx(&[2]), &idx(&[3]));
    let lhs = ev.eval_z(&product, &none).unwrap().value();
    let z2 = ev.eval_index(&idx(&[2])).unwrap().value();
    assert!((lhs - z2 * ZETA3).abs() < 1e-14);
    let s = ev.eval_z(&star(&idx(&[1, 2])), &none).unwrap();
    assert!((s.value() - 2.0 * ZETA3).abs() < 1e-14);
    assert_eq!(s.degree(), Some(0));
    assert_eq!(ev.eval_index(&idx(&[1])).unwrap(), NumericPoly::t());
    assert!(ev.cache().len() >= 3);
}

#[test]
fn cache_reuse() {
    let mut cache = MzvCache::new();
    let v = cache.eval(&idx(&[2, 3]), 1e-12).unwrap();
    assert_eq!(cache.get(&idx(&[2, 3]), 1e-12), Some(v));
    assert_eq!(cache.len(), 1);
    let mut other = MzvCache::new();
    other.eval(&idx(&[4]), 1e-12).unwrap();
    cache.merge(&other);
    assert_eq!(cache.len(), 2);
}

#[test]
fn sum_formula_examples() {
    let mut ev = Evaluator::new(1e-12);
    let plain = check_sum_formula(&mut ev, 3, 1, false, 1e-8).unwrap();
    assert!(plain.holds && (plain.lhs - ZETA3).abs() < 1e-12);
    assert_eq!(plain.cases, 1);
    let starred = check_sum_formula(&mut ev, 3, 1, true, 1e-8).unwrap();
    assert!(starred.holds && (starred.rhs - 2.0 * ZETA3).abs() < 1e-12);
    let four = check_sum_formula(&mut ev, 4, 1, false, 1e-8).unwrap();
    assert!(four.holds);
    assert_eq!(four.cases, 2);
    assert!(check_sum_formula(&mut ev, 3, 2, false, 1e-8).is_err());
}

#[test]
fn schur_sum_formula_examples() {
    let mut ev = Evaluator::new(1e-12);
    let column = check_schur_sum_formula(&mut ev, 5, 2, 0, 1e-8).unwrap();
    let plain = check_sum_formula(&mut ev, 5, 2, false, 1e-8).unwrap();
    assert!(column.holds && (column.lhs - plain.lhs).abs() < 1e-14);
    let row = check_schur_sum_formula(&mut ev, 3, 0, 1, 1e-8).unwrap();
    assert!(row.holds && (row.lhs - 2.0 * ZETA3).abs() < 1e-12);
    let single = check_schur_sum_formula(&mut ev, 4, 1, 1, 1e-8).unwrap();
    assert_eq!(single.cases, 1);
    let z4 = ev.eval_index(&idx(&[4])).unwrap().value();
    assert!(single.holds && (single.lhs - 3.0 * z4).abs() < 1e-12);
    assert!(check_schur_sum_formula(&mut ev, 4, 1, 2, 1e-8).is_err());
}

#[test]
fn gamma_reflection_low_coefficients() {
    let mut ev = Evaluator::new(1e-12);
    let parts = identity_series(&mut ev, NumericIdentity::GammaReflection, 6, &Assignment::new()).unwrap();
    let (_, lhs, rhs) = &parts[0];
    assert!((lhs.coeff(2).value() - PI * PI / 6.0).abs() < 1e-14);
    assert!((rhs.coeff(2).value() - PI * PI / 6.0).abs() < 1e-14);
    for n in [1, 3, 5] {
        assert!(lhs.coeff(n).coeffs().iter().all(|c| c.hi().abs() < 1e-25), "W^{n}");
    }
}

#[test]
fn psi_sum_at_a_zero() {
    // Both sides reduce to ∑_{a≥2} ζ(a) W^a.
    let mut ev = Evaluator::new(1e-12);
    let at = Assignment::new().with(mzv_hopf::Var::A, mzv_hopf::Rational::from_integer(0.into()));
    let parts = identity_series(&mut ev, NumericIdentity::PsiSumKa, 5, &at).unwrap();
    let (_, lhs, rhs) = &parts[0];
    for a in 2..=5u32 {
        let z = ev.eval_index(&Index::single(a)).unwrap();
        assert!(lhs.coeff(a as usize).approx_eq(&z, 1e-20));
        assert!(rhs.coeff(a as usize).approx_eq(&z, 1e-20));
    }
}

#[test]
fn every_identity_at_low_order() {
    let mut ev = Evaluator::new(1e-12);
    let samples = default_samples();
    assert_eq!(samples.len(), 12);
    for name in NumericIdentity::ALL {
        let report = check_numeric_identity(&mut ev, name, 4, &samples, 1e-8).unwrap();
        assert!(report.holds, "{report:?}");
    }
}

#[test]
fn missing_sample_value() {
    let mut ev = Evaluator::new(1e-12);
    let err = identity_series(&mut ev, NumericIdentity::MainTheorem, 3, &Assignment::new());
    assert!(matches!(err, Err(Error::MissingSample(_))));
}

#[test]
fn star_against_plain_to_weight_six() {
    let mut ev = Evaluator::new(1e-12);
    let none = Assignment::new();
    for w in 2..=6u32 {
        for k1 in 1..w {
            let k2 = w - k1;
            let s = ev.eval_z(&star(&idx(&[k1, k2])), &none).unwrap();
            let p = ev.eval_index(&idx(&[k1, k2])).unwrap().add(&ev.eval_index(&Index::single(w)).unwrap());
            assert!(s.approx_eq(&p, 1e-20), "({k1},{k2})");
        }
    }
}

#[test]
fn antihooks_are_t_free() {
    let mut ev = Evaluator::new(1e-12);
    let none = Assignment::new();
    for h in antihooks_up_to(7).into_iter().filter(|h| h.corner >= 2) {
        let u = ev.alg.expand_antihook(&h);
        let v = ev.eval_z(&u, &none).unwrap();
        assert!(v.t_part_magnitude() < 1e-20, "{h}: {v}");
    }
}

#[test]
fn lift_at_one_zero_matches() {
    let mut ev = Evaluator::new(1e-12);
    let at = at_one_zero();
    for k in enumerate_up_to(6).into_iter().filter(|k| k.weight() >= 2) {
        let direct = ev.eval_index(&k).unwrap();
        let lifted = ev.eval_z_xy(&Combination::index(k.clone()), &at).unwrap();
        assert!(direct.approx_eq(&lifted, 1e-20), "({k})");
        let starred = ev.eval_z(&star(&k), &Assignment::new()).unwrap();
        let lift = ev.alg.lift_xy_star(&k).specialize(&at);
        let lifted_star = ev.eval_z(&lift, &Assignment::new()).unwrap();
        assert!(starred.approx_eq(&lifted_star, 1e-20), "({k})");
    }
}

fn any_index() -> impl Strategy<Value = Index> {
    prop::collection::vec(1u32..4, 0..4)
        .prop_map(|p| Index::new(p).unwrap())
        .prop_filter("weight at most five", |k| k.weight() <= 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluation_is_multiplicative(k in any_index(), l in any_index()) {
        let mut ev = Evaluator::new(1e-12);
        let none = Assignment::new();
        let product = ev.alg.harmonic(&k, &l);
        let lhs = ev.eval_z(&product, &none).unwrap();
        let rhs = ev.eval_index(&k).unwrap().mul(&ev.eval_index(&l).unwrap());
        prop_assert!(lhs.approx_eq(&rhs, 1e-18), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn t_degree_is_trailing_ones(k in any_index()) {
        let mut ev = Evaluator::new(1e-12);
        let v = ev.eval_index(&k).unwrap();
        prop_assert_eq!(v.degree(), Some(k.trailing_ones()));
        let lead = v.coeff(k.trailing_ones()) * TwoFloat::from(factorial(k.trailing_ones()));
        let rest = ev.eval_index(&k.prefix(k.depth() - k.trailing_ones())).unwrap();
        prop_assert!((lead - rest.coeff(0)).hi().abs() < 1e-20);
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}
