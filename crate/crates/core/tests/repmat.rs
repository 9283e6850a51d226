use std::sync::Arc;

use clusterpos::exactalg::{ExactMatrix, Rational};
use clusterpos::repmat::{generalized_minor, one_param, weyl_reps, Generator, Group, GroupElement, MinorLabel};
use clusterpos::rootsys::{Family, RootSystem, WeylWord};
use proptest::prelude::*;

fn groups() -> Vec<Arc<Group>> {
    [(Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 4), (Family::D, 5)]
        .into_iter()
        .map(|(f, n)| Group::new(RootSystem::new(f, n).unwrap()))
        .collect()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// A product of random one-parameter factors of both signs.
fn element(group: &Arc<Group>, factors: &[(usize, bool, Rational)]) -> GroupElement<Rational> {
    let n = group.root_system().rank();
    factors.iter().fold(GroupElement::identity(group, &()), |g, (j, upper, t)| {
        let gen = if *upper { Generator::E } else { Generator::F };
        g.left_mul(1 + j % n, gen, t.clone()).unwrap()
    })
}

fn factors() -> impl Strategy<Value = Vec<(usize, bool, Rational)>> {
    prop::collection::vec((0usize..8, any::<bool>(), rational()), 0..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn one_parameter_subgroups_are_additive(g in 0usize..5, j in 0usize..8, s in rational(), t in rational()) {
        let group = &groups()[g];
        let n = group.root_system().rank();
        let j = 1 + j % n;
        for i in 1..=n {
            let rep = group.rep(i).unwrap();
            for gen in [Generator::E, Generator::F] {
                let xs = one_param(&rep, j, &s, gen).unwrap();
                let xt = one_param(&rep, j, &t, gen).unwrap();
                let sum = one_param(&rep, j, &(&s + &t), gen).unwrap();
                prop_assert_eq!(xs.mul(&xt).unwrap(), sum);
            }
        }
    }

    #[test]
    fn minors_do_not_depend_on_the_reduced_words(g in 0usize..5, fs in factors(), pick in 0usize..1000) {
        let group = &groups()[g];
        let rs = group.root_system();
        let el = element(group, &fs);
        let w0 = rs.longest_word();
        let i = 1 + pick % rs.rank();
        // A prefix of w0 and the minimal word reaching the same weight.
        let u = w0.prefix(pick % (w0.len() + 1));
        let weight = rs.apply_word(&u, &rs.fundamental_weight(i)).unwrap();
        let u2 = rs.word_for_weight(i, &weight).unwrap().unwrap();
        let a = MinorLabel::new(rs, i, u.clone(), w0.clone()).unwrap();
        let b = MinorLabel::new(rs, i, u2.clone(), rs.adapted_longest_word(&[1]).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(generalized_minor(&el, &a).unwrap(), generalized_minor(&el, &b).unwrap());
        let c = MinorLabel::new(rs, i, w0.clone(), u.clone()).unwrap();
        let d = MinorLabel::new(rs, i, rs.adapted_longest_word(&[1]).unwrap(), u2).unwrap();
        prop_assert_eq!(generalized_minor(&el, &c).unwrap(), generalized_minor(&el, &d).unwrap());
    }

    #[test]
    fn principal_minors_are_one_on_n(g in 0usize..5, ts in prop::collection::vec(rational(), 20)) {
        let group = &groups()[g];
        let rs = group.root_system();
        let w0 = rs.longest_word();
        let n = GroupElement::from_params(group, &(), &w0, &ts[..w0.len().min(20)].iter().cloned().chain(std::iter::repeat(Rational::from_integer(1.into()))).take(w0.len()).collect::<Vec<_>>()).unwrap();
        for i in 1..=rs.rank() {
            let label = MinorLabel::new(rs, i, WeylWord::empty(), WeylWord::empty()).unwrap();
            prop_assert_eq!(generalized_minor(&n, &label).unwrap(), Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn exterior_powers_of_matrices_match_factor_action(ts in prop::collection::vec(rational(), 6)) {
        let group = Group::new(RootSystem::new(Family::A, 3).unwrap());
        let word = WeylWord(vec![2, 1, 3, 2, 1, 3]);
        let el = GroupElement::from_params(&group, &(), &word, &ts).unwrap();
        let from_matrix = GroupElement::from_matrix(&group, el.matrix(1).unwrap()).unwrap();
        for i in 1..=3 {
            prop_assert_eq!(from_matrix.matrix(i).unwrap(), el.matrix(i).unwrap());
        }
    }
}

#[test]
fn weyl_representatives_are_mutually_inverse() {
    for group in groups() {
        let n = group.root_system().rank();
        for i in 1..=n {
            let rep = group.rep(i).unwrap();
            for j in 1..=n {
                let (s, ss) = weyl_reps(&rep, j).unwrap();
                assert_eq!(s.mul(&ss).unwrap(), ExactMatrix::identity(&(), rep.dim()));
            }
        }
    }
}

#[test]
fn elements_of_n_are_unitriangular() {
    let group = Group::new(RootSystem::new(Family::D, 4).unwrap());
    let w0 = group.root_system().longest_word();
    let ts: Vec<Rational> = (1..=w0.len() as i64).map(|k| Rational::new(k.into(), 3.into())).collect();
    let el = GroupElement::from_params(&group, &(), &w0, &ts).unwrap();
    for i in 1..=4 {
        assert!(el.matrix(i).unwrap().is_upper_unitriangular());
    }
}

#[test]
fn type_e_evaluation_is_refused() {
    let group = Group::new(RootSystem::new(Family::E, 7).unwrap());
    let err = group.rep(2).unwrap_err().to_string();
    assert!(err.contains("root-system combinatorics only"), "{err}");
}
