use mzv_hopf::algebra::{antipode_tilde, star};
use mzv_hopf::genfunc::{
    build_f_i, exact_identity_check, find_remark_counterexample, gamma1_i, gamma1_i_inverse, identity_parts,
    monomial_part, psi_side, IdentityName,
};
use mzv_hopf::index::{enumerate_indices, parse_index};
use mzv_hopf::poly::{parse_rational, Assignment, Substitution};
use mzv_hopf::series::PolyRing;
use mzv_hopf::{Combination, Error, Index, IndexAlgebra, Monomial, PolyScalar, Rational, TruncatedSeries, Var};
use proptest::prelude::*;

fn q(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

fn ints(pairs: &[(&[u32], i64)]) -> Combination {
    Combination::from_integer_terms(pairs.iter().map(|(p, n)| (idx(p), *n)))
}

fn rational_series(coeffs: &[&str], order: usize) -> TruncatedSeries<PolyScalar> {
    TruncatedSeries::from_rationals(coeffs.iter().map(|c| q(c)), order)
}

#[test]
fn exp_log_of_one_plus_w() {
    let mut ring = PolyRing;
    for order in [1, 4, 9] {
        let f = rational_series(&["1", "1"], order);
        assert_eq!(f.log(&mut ring).unwrap().exp(&mut ring).unwrap(), f);
    }
    let g = rational_series(&["1", "1"], 3);
    assert_eq!(g.exp(&mut ring), Err(Error::NonZeroConstantTerm));
    assert_eq!(rational_series(&["2", "1"], 3).log(&mut ring), Err(Error::ConstantTermNotOne));
    assert_eq!(rational_series(&["0", "1"], 3).inverse(&mut ring), Err(Error::NotInvertible));
}

#[test]
fn truncated_product_keeps_order() {
    let mut ring = PolyRing;
    let f = rational_series(&["1", "1", "1"], 4);
    let g = rational_series(&["1", "-1"], 4);
    let h = f.mul(&g, &mut ring);
    assert_eq!(h.order(), 4);
    assert_eq!(h, rational_series(&["1", "0", "0", "-1"], 4));
}

#[test]
fn scale_variable_by_a() {
    // ψ-style coefficients c_{k−1} = k pick up A^{k−1}.
    let ring = PolyRing;
    let f = rational_series(&["2", "3", "4", "5"], 3);
    let scaled = f.scale_variable(&PolyScalar::var(Var::A), &ring);
    for n in 0..=3u32 {
        let expected = PolyScalar::var(Var::A).pow(n).scale(&q(&(n + 2).to_string()));
        assert_eq!(scaled.coeff(n as usize), &expected);
    }
}

#[test]
fn gamma_low_coefficients() {
    let mut alg = IndexAlgebra::new();
    let g = gamma1_i(&mut alg, 6);
    assert_eq!(g.coeff(0), &Combination::unit());
    assert_eq!(g.coeff(1), &Combination::index(idx(&[1])));
    assert_eq!(g.coeff(2), &ints(&[(&[1, 1], 1), (&[2], 1)]));
    for n in 0..=6u32 {
        let all = enumerate_indices(n).into_iter().map(|k| (k, 1));
        assert_eq!(g.coeff(n as usize), &Combination::from_integer_terms(all));
        assert_eq!(g.coeff(n as usize), &star(&Index::ones(n as usize)));
    }
}

#[test]
fn gamma_inverse_coefficients() {
    let mut alg = IndexAlgebra::new();
    let order = 7;
    let g = gamma1_i(&mut alg, order);
    let inv = gamma1_i_inverse(&mut alg, order);
    assert_eq!(g.mul(&inv, &mut alg), TruncatedSeries::one(&alg, order));
    for n in 0..=order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(inv.coeff(n), &Combination::index(Index::ones(n)).scale_int(sign));
        let mut alternating = Combination::zero();
        for k in enumerate_indices(n as u32) {
            let s = if k.depth() % 2 == 0 { 1 } else { -1 };
            alternating += &star(&k).scale_int(s);
        }
        assert_eq!(inv.coeff(n), &alternating);
    }
}

#[test]
fn f_low_coefficients() {
    let mut alg = IndexAlgebra::new();
    let f = build_f_i(&mut alg, 4);
    assert!(f.coeff(0).is_zero() && f.coeff(1).is_zero());
    assert_eq!(f.coeff(2), &Combination::index(idx(&[2])));
    let a = Monomial::var(Var::A);
    let b = Monomial::var(Var::B);
    let mut expected = Combination::index(idx(&[3]));
    expected += &Combination::index(idx(&[1, 2])).mul_monomial(&a);
    expected += &ints(&[(&[1, 2], 1), (&[3], 1)]).mul_monomial(&b);
    assert_eq!(f.coeff(3), &expected);
}

#[test]
fn f_antipode_swaps_and_negates() {
    let mut alg = IndexAlgebra::new();
    let f = build_f_i(&mut alg, 6);
    let swap = Substitution::identity()
        .with(Var::A, -&PolyScalar::var(Var::B))
        .with(Var::B, -&PolyScalar::var(Var::A));
    for n in 0..=6 {
        let lhs = antipode_tilde(f.coeff(n));
        assert_eq!(lhs, -f.coeff(n).substitute(&swap), "W^{n}");
    }
}

#[test]
fn gen_func_k_examples() {
    let mut alg = IndexAlgebra::new();
    assert!(exact_identity_check(&mut alg, IdentityName::GenFuncK, 3).holds);
    let parts = identity_parts(&mut alg, IdentityName::GenFuncK, 3);
    let (_, lhs, rhs) = &parts[0];
    let a = Monomial::var(Var::A);
    assert_eq!(monomial_part(lhs.coeff(2), &a), Combination::index(idx(&[2])));
    assert_eq!(monomial_part(rhs.coeff(2), &a), Combination::index(idx(&[2])));
    let at = Assignment::new().with(Var::A, q("0"));
    for n in 0..=3 {
        let expected = if n == 0 { Combination::unit() } else { Combination::zero() };
        assert_eq!(lhs.coeff(n).specialize(&at), expected);
        assert_eq!(rhs.coeff(n).specialize(&at), expected);
    }
}

#[test]
fn gen_func_kal_xy_low_order() {
    let mut alg = IndexAlgebra::new();
    assert!(exact_identity_check(&mut alg, IdentityName::GenFuncKalXy, 2).holds);
    let parts = identity_parts(&mut alg, IdentityName::GenFuncKalXy, 2);
    let (_, lhs, rhs) = &parts[0];
    let expected = alg.lift_xy(&idx(&[2]));
    let c = &PolyScalar::var(Var::X).pow(2) + &PolyScalar::var(Var::Y).pow(2);
    assert_eq!(expected, Combination::term(idx(&[2]), c));
    assert_eq!(lhs.coeff(2), &expected);
    assert_eq!(rhs.coeff(2), &expected);
}

#[test]
fn every_identity_at_moderate_order() {
    let mut alg = IndexAlgebra::new();
    for name in IdentityName::ALL {
        let report = exact_identity_check(&mut alg, name, 6);
        assert!(report.holds, "{report:?}");
    }
}

#[test]
fn identity_names_parse() {
    for name in IdentityName::ALL {
        assert_eq!(name.as_str().parse::<IdentityName>().unwrap(), name);
    }
    assert!("prop_gen_func_k".parse::<IdentityName>().is_err());
}

#[test]
fn remark_finder() {
    let mut alg = IndexAlgebra::new();
    let outcome = find_remark_counterexample(&mut alg, 6);
    assert!(!outcome.inconclusive());
    let w = outcome.witness.unwrap();
    assert!(w.weight <= 6);
    assert_ne!(w.lhs, w.rhs);
    // Below weight three both sides are [2] or zero.
    let low = find_remark_counterexample(&mut alg, 2);
    assert!(low.inconclusive());
    let psi = psi_side(4);
    assert_eq!(psi.coeff(2), &Combination::index(idx(&[2])));
    assert!(psi.coeff(1).is_zero());
}

#[test]
fn index_level_b0_column_differs() {
    // With B = 0 only ψ-side indices of depth one survive, while F keeps
    // ζ(k, a) summands; they agree only after evaluation.
    let mut alg = IndexAlgebra::new();
    let outcome = find_remark_counterexample(&mut alg, 3);
    let w = outcome.b0_mismatch.unwrap();
    assert_eq!((w.weight, w.r, w.s), (3, 1, 0));
    assert_eq!(w.lhs, Combination::index(parse_index("1,2").unwrap()));
    assert_eq!(w.rhs, Combination::index(idx(&[3])));
}

fn small_poly_series() -> impl Strategy<Value = TruncatedSeries<PolyScalar>> {
    prop::collection::vec(-4i64..5, 1..6).prop_map(|cs| {
        let n = cs.len();
        TruncatedSeries::from_rationals(cs.into_iter().map(|c| Rational::from_integer(c.into())), n + 1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_log_roundtrip(f in small_poly_series()) {
        let mut ring = PolyRing;
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = PolyScalar::zero();
        let g = TruncatedSeries::new(&ring, coeffs, f.order());
        let e = g.exp(&mut ring).unwrap();
        prop_assert_eq!(e.log(&mut ring).unwrap(), g);
    }

    #[test]
    fn inverse_roundtrip(f in small_poly_series()) {
        let mut ring = PolyRing;
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = PolyScalar::one();
        let g = TruncatedSeries::new(&ring, coeffs, f.order());
        let inv = g.inverse(&mut ring).unwrap();
        prop_assert_eq!(g.mul(&inv, &mut ring), TruncatedSeries::one(&ring, f.order()));
    }
}
