use mzv_hopf::algebra::star;
use mzv_hopf::antihook::{antihooks_up_to, run_schur_check, LemmaName, SCHUR_CHECKS};
use mzv_hopf::{AntiHook, Combination, Error, Index, IndexAlgebra, PolyScalar, Var};
use proptest::prelude::*;

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

fn ints(pairs: &[(&[u32], i64)]) -> Combination {
    Combination::from_integer_terms(pairs.iter().map(|(p, n)| (idx(p), *n)))
}

#[test]
fn expansion_examples() {
    let mut alg = IndexAlgebra::new();
    let h = AntiHook::new(idx(&[1, 2]), Index::empty(), 5);
    assert_eq!(alg.expand_antihook(&h), Combination::index(idx(&[1, 2, 5])));
    let h = AntiHook::new(Index::empty(), idx(&[1, 2]), 5);
    assert_eq!(alg.expand_antihook(&h), star(&idx(&[1, 2, 5])));
    for (k, l, a) in [(2, 3, 2), (1, 4, 3), (3, 3, 1)] {
        let expected = ints(&[(&[k, l, a], 1), (&[l, k, a], 1), (&[k + l, a], 1), (&[k, l + a], 1)]);
        let h = AntiHook::new(Index::single(k), Index::single(l), a);
        assert_eq!(alg.expand_antihook(&h), expected, "{h}");
        assert_eq!(alg.expand_antihook_closed(&h), expected, "{h}");
    }
}

#[test]
fn closed_form_examples() {
    let mut alg = IndexAlgebra::new();
    let h = AntiHook::new(idx(&[3, 1]), Index::empty(), 2);
    assert_eq!(alg.expand_antihook_closed(&h), Combination::index(idx(&[3, 1, 2])));
    for l in 1..5 {
        for a in 1..4 {
            let h = AntiHook::new(Index::empty(), Index::single(l), a);
            assert_eq!(alg.expand_antihook_closed(&h), star(&idx(&[l, a])), "{h}");
        }
    }
}

#[test]
fn compatibility_examples() {
    let mut alg = IndexAlgebra::new();
    assert!(alg.compatibility_check(&idx(&[2]), &idx(&[3])));
    assert!(alg.compatibility_check(&idx(&[1, 2]), &idx(&[1])));
    assert!(!alg.compatibility_check(&Index::empty(), &idx(&[1])));
    let chain = alg.definition_chain(&idx(&[1, 1, 1, 2]));
    assert_eq!(chain, vec![true; 5]);
}

#[test]
fn antipode_examples() {
    let mut alg = IndexAlgebra::new();
    // S̃([k, a]) = [k, a]^★ = [∅; k; a]
    let (lhs, rhs) = alg.antihook_antipode(&AntiHook::new(Index::single(3), Index::empty(), 2));
    assert_eq!(lhs, star(&idx(&[3, 2])));
    assert_eq!(lhs, rhs);
    let (lhs, rhs) = alg.antihook_antipode(&AntiHook::new(Index::empty(), Index::single(3), 2));
    assert_eq!(lhs, Combination::index(idx(&[3, 2])));
    assert_eq!(lhs, rhs);
    let (lhs, rhs) = alg.antihook_antipode(&AntiHook::new(Index::single(2), Index::single(3), 2));
    assert_eq!(lhs, rhs);
}

#[test]
fn lemma_examples() {
    let mut alg = IndexAlgebra::new();
    let k = idx(&[2, 1]);
    let (lhs, rhs) = alg.lemma_sides(LemmaName::Alternating3, &k, 2, &Index::empty());
    assert_eq!(lhs, Combination::index(idx(&[2, 1, 2])));
    assert_eq!(lhs, rhs);
    for a in 1..5u32 {
        let (lhs, rhs) = alg.lemma_sides(LemmaName::Key, &Index::empty(), a, &Index::empty());
        let c = &PolyScalar::var(Var::X).pow(a) + &PolyScalar::var(Var::Y).pow(a);
        assert_eq!(lhs, Combination::term(Index::single(a), c));
        assert_eq!(lhs, rhs);
    }
    let (lhs, rhs) = alg.lemma_sides(LemmaName::Key, &Index::single(1), 2, &Index::empty());
    assert_eq!(lhs, alg.lift_xy(&idx(&[1, 2])));
    assert_eq!(lhs, rhs);
    assert!(matches!("alternating4".parse::<LemmaName>(), Err(Error::UnknownName(_))));
}

#[test]
fn suite_at_weight_seven() {
    let mut alg = IndexAlgebra::new();
    for check in SCHUR_CHECKS {
        let report = run_schur_check(&mut alg, check, 7).unwrap();
        assert!(report.holds, "{report:?}");
        assert!(report.cases > 0);
    }
}

#[test]
fn antihook_count() {
    // Splits (k, a, l) of indices of weight w number (w + 1) 2^(w - 2).
    let count = |w: u32| antihooks_up_to(w).len();
    for w in 2..7u32 {
        assert_eq!(count(w) - count(w - 1), ((w + 1) << (w - 2)) as usize);
    }
}

fn any_index(max_depth: usize) -> impl Strategy<Value = Index> {
    prop::collection::vec(1u32..4, 0..=max_depth).prop_map(|p| Index::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn recursion_matches_closed_form(k in any_index(3), l in any_index(3), a in 1u32..4) {
        let mut alg = IndexAlgebra::new();
        let h = AntiHook::new(k, l, a);
        prop_assert_eq!(alg.expand_antihook(&h), alg.expand_antihook_closed(&h));
    }

    #[test]
    fn expansion_is_homogeneous(k in any_index(3), l in any_index(3), a in 1u32..4) {
        let mut alg = IndexAlgebra::new();
        let h = AntiHook::new(k, l, a);
        let w = h.weight();
        prop_assert!(alg.expand_antihook(&h).terms().all(|(m, c)| m.weight() == w && c.as_constant().is_some()));
    }

    #[test]
    fn antipode_swaps_rows(k in any_index(3), l in any_index(3), a in 1u32..4) {
        let mut alg = IndexAlgebra::new();
        let (lhs, rhs) = alg.antihook_antipode(&AntiHook::new(k, l, a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transposing_twice(k in any_index(3), l in any_index(3), a in 1u32..4) {
        let h = AntiHook::new(k, l, a);
        prop_assert_eq!(h.transposed().transposed(), h);
    }

    #[test]
    fn admissible_ending(k in any_index(4), a in 1u32..4) {
        let mut alg = IndexAlgebra::new();
        let e = alg.expand_antihook(&AntiHook::new(k, Index::empty(), a));
        prop_assert_eq!(e.terms().all(|(m, _)| m.is_admissible()), a >= 2);
    }
}
