use mzv_hopf::algebra::{antipode, antipode_tilde, at_one_zero, coproduct, star, Tensor};
use mzv_hopf::hopf::{run_hopf_check, HOPF_CHECKS};
use mzv_hopf::{Combination, Index, IndexAlgebra, PolyScalar, Var};
use proptest::prelude::*;

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

fn ints(pairs: &[(&[u32], i64)]) -> Combination {
    Combination::from_integer_terms(pairs.iter().map(|(p, n)| (idx(p), *n)))
}

fn xy(x: u16, y: u16) -> PolyScalar {
    &PolyScalar::var(Var::X).pow(x as u32) * &PolyScalar::var(Var::Y).pow(y as u32)
}

#[test]
fn harmonic_examples() {
    let mut alg = IndexAlgebra::new();
    assert_eq!(alg.harmonic(&idx(&[2]), &idx(&[3])), ints(&[(&[2, 3], 1), (&[3, 2], 1), (&[5], 1)]));
    assert_eq!(alg.harmonic(&idx(&[1]), &idx(&[1])), ints(&[(&[1, 1], 2), (&[2], 1)]));
    let k = idx(&[2, 1, 3]);
    assert_eq!(alg.harmonic(&k, &Index::empty()), Combination::index(k.clone()));
    assert_eq!(alg.harmonic(&Index::empty(), &k), Combination::index(k));
    assert_eq!(alg.harmonic(&idx(&[2]), &idx(&[3])).to_string(), "[2,3]+[3,2]+[5]");
}

#[test]
fn star_examples() {
    assert_eq!(star(&idx(&[4, 5])), ints(&[(&[4, 5], 1), (&[9], 1)]));
    assert_eq!(star(&Index::empty()), Combination::unit());
    assert_eq!(star(&idx(&[1, 1, 1])), ints(&[(&[1, 1, 1], 1), (&[2, 1], 1), (&[1, 2], 1), (&[3], 1)]));
}

#[test]
fn coproduct_examples() {
    let mut expected = Tensor::zero();
    let one = PolyScalar::one();
    expected.add_scaled((Index::empty(), idx(&[2, 3])), &one, 1);
    expected.add_scaled((idx(&[2]), idx(&[3])), &one, 1);
    expected.add_scaled((idx(&[2, 3]), Index::empty()), &one, 1);
    assert_eq!(coproduct(&Combination::index(idx(&[2, 3]))), expected);
    let mut unit = Tensor::zero();
    unit.add_scaled((Index::empty(), Index::empty()), &one, 1);
    assert_eq!(coproduct(&Combination::unit()), unit);

    let mut alg = IndexAlgebra::new();
    let one_one = alg.harmonic(&idx(&[1]), &idx(&[1]));
    let d1 = coproduct(&Combination::index(idx(&[1])));
    assert_eq!(coproduct(&one_one), alg.mul_tensor(&d1, &d1));
}

#[test]
fn antipode_examples() {
    assert_eq!(antipode(&Combination::unit()), Combination::unit());
    assert_eq!(antipode_tilde(&Combination::unit()), Combination::unit());
    for k in [idx(&[1]), idx(&[4])] {
        assert_eq!(antipode(&Combination::index(k.clone())), -Combination::index(k));
    }
    let u = Combination::index(idx(&[2, 3]));
    assert_eq!(antipode(&u), ints(&[(&[3, 2], 1), (&[5], 1)]));
    assert_eq!(antipode_tilde(&u), ints(&[(&[2, 3], 1), (&[5], 1)]));
}

#[test]
fn telescoping_examples() {
    let mut alg = IndexAlgebra::new();
    assert_eq!(alg.telescoping_sum(&Index::empty()), Combination::unit());
    assert!(alg.telescoping_sum(&idx(&[2])).is_zero());
    assert!(alg.telescoping_sum(&idx(&[1, 2])).is_zero());
}

#[test]
fn lift_examples() {
    let mut alg = IndexAlgebra::new();
    assert_eq!(alg.lift_xy(&Index::empty()), Combination::unit());
    for k in 1..5u16 {
        let expected = Combination::term(idx(&[k as u32]), &xy(k, 0) + &xy(0, k));
        assert_eq!(alg.lift_xy(&idx(&[k as u32])), expected);
    }
    let (k1, k2) = (2u16, 3u16);
    let mut expected = Combination::term(idx(&[3, 2]), xy(0, k1 + k2));
    let middle = ints(&[(&[2, 3], 1), (&[3, 2], 1), (&[5], 1)]);
    expected += &middle.scale(&xy(k1, k2));
    expected += &Combination::term(idx(&[2, 3]), xy(k1 + k2, 0));
    assert_eq!(alg.lift_xy(&idx(&[2, 3])), expected);
}

#[test]
fn hopf_suite_at_weight_six() {
    let mut alg = IndexAlgebra::new();
    for check in HOPF_CHECKS {
        let report = run_hopf_check(&mut alg, check, 6).unwrap();
        assert!(report.holds, "{report:?}");
    }
}

#[test]
fn involutions_at_weight_eight() {
    let mut alg = IndexAlgebra::new();
    for check in ["antipode_involution", "antipode_tilde_involution", "telescoping"] {
        let report = run_hopf_check(&mut alg, check, 8).unwrap();
        assert!(report.holds, "{report:?}");
    }
}

#[test]
fn commutativity_at_weight_eight() {
    let mut alg = IndexAlgebra::new();
    assert!(run_hopf_check(&mut alg, "commutativity", 8).unwrap().holds);
}

fn any_index(max_depth: usize) -> impl Strategy<Value = Index> {
    prop::collection::vec(1u32..4, 0..=max_depth).prop_map(|p| Index::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(k in any_index(3), l in any_index(3), m in any_index(2)) {
        let mut alg = IndexAlgebra::new();
        let (u, v, w) = (Combination::index(k), Combination::index(l), Combination::index(m));
        let left = { let uv = alg.mul(&u, &v); alg.mul(&uv, &w) };
        let right = { let vw = alg.mul(&v, &w); alg.mul(&u, &vw) };
        prop_assert_eq!(left, right);
    }

    #[test]
    fn weight_is_graded(k in any_index(4), l in any_index(4)) {
        let mut alg = IndexAlgebra::new();
        let w = k.weight() + l.weight();
        prop_assert!(alg.harmonic(&k, &l).terms().all(|(m, _)| m.weight() == w));
    }

    #[test]
    fn antipode_tilde_is_multiplicative(k in any_index(3), l in any_index(3)) {
        let mut alg = IndexAlgebra::new();
        let product = alg.harmonic(&k, &l);
        let (sk, sl) = (antipode_tilde(&Combination::index(k)), antipode_tilde(&Combination::index(l)));
        prop_assert_eq!(antipode_tilde(&product), alg.mul(&sk, &sl));
    }

    #[test]
    fn lift_is_multiplicative(k in any_index(3), l in any_index(3)) {
        let mut alg = IndexAlgebra::new();
        let product = alg.harmonic(&k, &l);
        let (a, b) = (alg.lift_xy(&k), alg.lift_xy(&l));
        prop_assert_eq!(alg.lift_xy_linear(&product), alg.mul(&a, &b));
    }

    #[test]
    fn lift_antipode(k in any_index(4)) {
        let mut alg = IndexAlgebra::new();
        let sign = if k.depth() % 2 == 0 { 1 } else { -1 };
        let lhs = antipode_tilde(&alg.lift_xy(&k));
        prop_assert_eq!(lhs, alg.lift_xy_star(&k).scale_int(sign));
    }

    #[test]
    fn lift_specializes(k in any_index(5)) {
        let mut alg = IndexAlgebra::new();
        let at = at_one_zero();
        prop_assert_eq!(alg.lift_xy(&k).specialize(&at), Combination::index(k.clone()));
        prop_assert_eq!(alg.lift_xy_star(&k).specialize(&at), star(&k));
    }
}
