use clusterpos::rootsys::{Family, RootSystem, Weight, WeylWord};
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    vec![
        RootSystem::new(Family::A, 3).unwrap(),
        RootSystem::new(Family::D, 4).unwrap(),
        RootSystem::new(Family::D, 5).unwrap(),
        RootSystem::new(Family::E, 6).unwrap(),
    ]
}

fn weight_and_word() -> impl Strategy<Value = (usize, Vec<i64>, Vec<usize>)> {
    (0usize..4).prop_flat_map(|s| {
        let n = [3, 4, 5, 6][s];
        (
            Just(s),
            prop::collection::vec(-5i64..=5, n),
            prop::collection::vec(1..=n, 0..12),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reflections_are_involutions((s, coords, word) in weight_and_word()) {
        let rs = &systems()[s];
        let w = Weight(coords);
        for &i in &word {
            let once = rs.reflect(i, &w).unwrap();
            prop_assert_eq!(rs.reflect(i, &once).unwrap(), w.clone());
        }
    }

    #[test]
    fn inverse_word_undoes_action((s, coords, word) in weight_and_word()) {
        let rs = &systems()[s];
        let w = Weight(coords);
        let word = WeylWord(word);
        let there = rs.apply_word(&word, &w).unwrap();
        prop_assert_eq!(rs.apply_word(&word.reversed(), &there).unwrap(), w);
    }
}

#[test]
fn adapted_words_pass_indexing() {
    for rs in systems() {
        let n = rs.rank();
        for k in [vec![], vec![1], vec![1, 3], (1..n).collect::<Vec<_>>()] {
            let w = rs.adapted_longest_word(&k).unwrap();
            assert!(rs.is_reduced_longest(&w).unwrap(), "{} {k:?}", rs.name());
            assert!(rs.is_adapted(&w, &k).unwrap());
            let ix = rs.word_indexing(&w, &k).unwrap();
            assert_eq!(ix.e().len() + n, w.len());
            assert_eq!(ix.i_k().len(), n);
            assert_eq!(ix.r_k(), rs.parabolic_length(&k).unwrap());
        }
    }
}

#[test]
fn longest_element_maps_fundamentals_to_negated_flips() {
    for rs in systems() {
        let w0 = rs.longest_word();
        for i in 1..=rs.rank() {
            let image = rs.apply_word(&w0, &rs.fundamental_weight(i)).unwrap();
            let flipped = rs.fundamental_weight(rs.diagram_flip(i).unwrap()).neg();
            assert_eq!(image, flipped, "{} ϖ{i}", rs.name());
        }
    }
}
