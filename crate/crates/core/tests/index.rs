use mzv_hopf::index::{enumerate_indices, enumerate_triples, parse_index};
use mzv_hopf::{Error, Index};
use proptest::prelude::*;

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

#[test]
fn parsing() {
    let k = parse_index("2,3").unwrap();
    assert_eq!(k.parts(), &[2, 3]);
    assert_eq!((k.weight(), k.depth()), (5, 2));
    assert_eq!(parse_index("").unwrap(), Index::empty());
    assert_eq!(parse_index("0,2"), Err(Error::NonPositiveComponent(0)));
    assert!(matches!(parse_index("2,x"), Err(Error::InvalidComponent(_))));
    assert!(matches!(parse_index("1000001"), Err(Error::ComponentTooLarge(_))));
    assert!(Index::new(vec![1, 0]).is_err());
}

#[test]
fn admissibility() {
    assert!(Index::empty().is_admissible());
    assert!(idx(&[1, 2]).is_admissible());
    assert!(!idx(&[2, 1]).is_admissible());
    assert_eq!((Index::empty().weight(), Index::empty().depth()), (0, 0));
}

#[test]
fn slicing() {
    let k = idx(&[1, 2, 3]);
    assert_eq!(k.slice(0, 2).unwrap(), idx(&[1, 2]));
    for i in 0..=3 {
        assert_eq!(k.slice(i, i).unwrap(), Index::empty());
    }
    assert!(matches!(k.slice(2, 4), Err(Error::SliceOutOfRange { .. })));
    assert_eq!(k.reversed(), idx(&[3, 2, 1]));
}

#[test]
fn enumeration() {
    let three = enumerate_indices(3);
    assert_eq!(three, vec![idx(&[1, 1, 1]), idx(&[1, 2]), idx(&[2, 1]), idx(&[3])]);
    assert_eq!(enumerate_indices(0), vec![Index::empty()]);
    assert_eq!(enumerate_indices(5).len(), 16);
}

#[test]
fn triples_cover_every_split() {
    // An index of weight w and depth d splits around each of its d parts.
    for w in 1..=6u32 {
        let expected: usize = enumerate_indices(w).iter().map(Index::depth).sum();
        let triples = enumerate_triples(w, 1);
        assert_eq!(triples.len(), expected);
        assert!(triples.iter().all(|t| t.weight() == w));
    }
    assert!(enumerate_triples(4, 2).iter().all(|t| t.a >= 2));
}

fn any_index() -> impl Strategy<Value = Index> {
    prop::collection::vec(1u32..6, 0..6).prop_map(|p| Index::new(p).unwrap())
}

proptest! {
    #[test]
    fn enumeration_counts(w in 1u32..12) {
        let all = enumerate_indices(w);
        prop_assert_eq!(all.len(), 1usize << (w - 1));
        prop_assert!(all.iter().all(|k| k.weight() == w));
        prop_assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn slicing_laws(k in any_index()) {
        prop_assert_eq!(k.slice(0, k.depth()).unwrap(), k.clone());
        prop_assert_eq!(k.reversed().reversed(), k.clone());
        for i in 0..=k.depth() {
            prop_assert_eq!(k.prefix(i).concat(&k.suffix(i)), k.clone());
        }
    }

    #[test]
    fn ones(n in 0usize..20) {
        let k = Index::ones(n);
        prop_assert_eq!((k.weight() as usize, k.depth()), (n, n));
    }

    #[test]
    fn display_parses_back(k in any_index()) {
        prop_assert_eq!(parse_index(&k.to_string()).unwrap(), k);
    }
}
