use clusterpos::exactalg::Rational;
use clusterpos::flagpos::{
    full_flag_test, invariance_check, partial_flag_test, random_positive_params, random_rational, seed_test,
    symbolic_invariance_check, tp_element, CriterionReport, Provenance, Record, Verdict,
};
use clusterpos::repmat::{Generator, Group, GroupElement};
use clusterpos::rootsys::{Family, RootSystem, WeylWord};
use clusterpos::seeds::Seed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

#[test]
fn full_flag_test_agrees_with_the_empty_k_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in [rs(Family::A, 3), rs(Family::D, 4)] {
        let group = Group::new(r.clone());
        let w0 = r.longest_word();
        let seed = Seed::initial(&r, &w0, &[]).unwrap();
        for trial in 0..50 {
            let mut params = random_positive_params(&mut rng, w0.len());
            let mut point = tp_element(&group, &w0, &params).unwrap().element;
            if trial % 2 == 1 {
                // Perturb with a factor of unknown sign.
                let j = rng.gen_range(1..=r.rank());
                point = point.left_mul(j, Generator::E, random_rational(&mut rng, -9, 9)).unwrap();
                params.clear();
            }
            let full = full_flag_test(&group, &w0, &point).unwrap();
            let via_seed = seed_test(&seed, &point).unwrap();
            assert_eq!(full.verdict, via_seed.verdict, "{}: {params:?}", r.name());
        }
    }
}

#[test]
fn certified_points_are_accepted() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = rs(Family::A, 4);
    let group = Group::new(r.clone());
    let w0 = r.longest_word();
    for k in [vec![], vec![1], vec![2, 3], vec![1, 2, 3, 4]] {
        let word = r.adapted_longest_word(&k).unwrap();
        for _ in 0..10 {
            let point = tp_element(&group, &w0, &random_positive_params(&mut rng, w0.len())).unwrap();
            assert!(point.certified_tp);
            let report = partial_flag_test(&r, &word, &k, &[], &point.element).unwrap();
            assert_eq!(report.verdict, Verdict::Accepted);
        }
    }
}

#[test]
fn identity_is_rejected() {
    for r in [rs(Family::A, 3), rs(Family::D, 4)] {
        let group = Group::new(r.clone());
        let id = GroupElement::identity(&group, &());
        let report = full_flag_test(&group, &r.longest_word(), &id).unwrap();
        assert_eq!(report.verdict, Verdict::Rejected);
        let witness = report.witness.unwrap();
        assert_eq!(witness.value, Some(Rational::from_integer(0.into())));
    }
}

#[test]
fn non_reduced_or_short_words_are_not_certified() {
    let r = rs(Family::A, 2);
    let group = Group::new(r.clone());
    let one = Rational::from_integer(1.into());
    let p = tp_element(&group, &WeylWord(vec![1, 2]), &[one.clone(), one.clone()]).unwrap();
    assert!(!p.certified_tp);
    let p = tp_element(&group, &WeylWord(vec![1, 2, 1]), &[one.clone(), -one.clone(), one]).unwrap();
    assert!(!p.certified_tp);
}

#[test]
fn d4_seed_variables_are_invariant_under_the_levi_part() {
    let r = rs(Family::D, 4);
    let seed = Seed::initial(&r, &WeylWord(vec![1, 2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 4]), &[1, 2, 3]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in [seed.clone(), seed.mutate(7).unwrap(), seed.mutate(8).unwrap()] {
        for v in s.quiver().vertices().clone() {
            assert_eq!(invariance_check(&s, v, 15, &mut rng).unwrap(), None, "vertex {v}");
        }
    }
}

#[test]
fn a3_invariance_holds_symbolically() {
    let r = rs(Family::A, 3);
    let seed = Seed::initial(&r, &WeylWord(vec![2, 1, 3, 2, 1, 3]), &[2]).unwrap();
    for s in [seed.clone(), seed.mutate(3).unwrap()] {
        for v in s.quiver().vertices().clone() {
            assert!(symbolic_invariance_check(&s, v).unwrap(), "vertex {v}");
        }
    }
}

#[test]
fn reports_keep_witness_and_verdict_consistent() {
    let prov = Provenance {
        root_system: "A2".into(),
        word: WeylWord(vec![1, 2, 1]),
        k: vec![],
        mutations: vec![],
    };
    let rec = |v: Option<i64>| Record {
        vertex: None,
        label: "x".into(),
        value: v.map(|v| Rational::from_integer(v.into())),
    };
    let cases = [
        (vec![rec(Some(1)), rec(Some(2))], Verdict::Accepted),
        (vec![rec(Some(1)), rec(None)], Verdict::Singular),
        (vec![rec(None), rec(Some(-1))], Verdict::Rejected),
        (vec![rec(Some(0))], Verdict::Rejected),
    ];
    for (records, verdict) in cases {
        let report = CriterionReport::from_records(records, prov.clone());
        assert_eq!(report.verdict, verdict);
        assert_eq!(report.witness.is_some(), verdict == Verdict::Rejected);
        if let Some(w) = report.witness {
            assert!(!w.positive());
        }
    }
}
