use contagrid::combinatorics::{contains_pattern, perm_decode, perm_encode, Perm};
use proptest::prelude::*;

fn perm_strategy(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Perm> {
    len.prop_flat_map(|k| Just((1..=k).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn containment_survives_reverse_complement(sigma in perm_strategy(1..=9), pi in perm_strategy(1..=4)) {
        let rc = |p: &Perm| p.reverse().complement();
        prop_assert_eq!(contains_pattern(&sigma, &pi), contains_pattern(&rc(&sigma), &rc(&pi)));
        prop_assert_eq!(contains_pattern(&sigma, &pi), contains_pattern(&sigma.reverse(), &pi.reverse()));
    }

    #[test]
    fn every_permutation_contains_itself_and_its_letters(sigma in perm_strategy(1..=8)) {
        prop_assert!(contains_pattern(&sigma, &sigma));
        prop_assert!(contains_pattern(&sigma, &Perm::new(vec![1]).unwrap()));
    }

    #[test]
    fn odd_square_encoding_round_trips(p in perm_strategy(1..=6)) {
        let k = p.len() - 1;
        let rows: Vec<usize> = p.values().iter().map(|v| 2 * v - 1).collect();
        let set = perm_decode(k, &rows).unwrap();
        let e = perm_encode(&set).unwrap();
        prop_assert_eq!(&e.rows, &rows);
        prop_assert_eq!(e.image, p);
    }
}
