//! Total positivity tests: totally positive elements, the chamber-function
//! test for the full flag variety, and the cluster-seed criteria for partial
//! flag varieties.

use std::sync::Arc;

use num_traits::Signed;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, PolyRing, Rational};
use crate::repmat::{generalized_minor, Generator, Group, GroupElement, MinorLabel};
use crate::rootsys::{RootSystem, WeylWord};
use crate::seeds::{generic_nk_element, ClusterVar, Evaluator, QuiverRule, Seed};

/// How a test point was produced.
#[derive(Debug, Clone, PartialEq)]
pub enum PointSource {
    Params { word: WeylWord, params: Vec<Rational> },
    Matrix(Vec<Vec<Rational>>),
}

/// A group element to test, with its origin.
#[derive(Debug, Clone)]
pub struct TestPoint {
    pub element: GroupElement<Rational>,
    pub source: PointSource,
    /// Set when the point is totally positive by construction: a reduced
    /// word for `w0` with strictly positive parameters.
    pub certified_tp: bool,
}

/// `x_{i_1}(t_1) ⋯ x_{i_k}(t_k)`.
pub fn tp_element(group: &Arc<Group>, word: &WeylWord, params: &[Rational]) -> Result<TestPoint> {
    let element = GroupElement::from_params(group, &(), word, params)?;
    let certified_tp = group.root_system().is_reduced_longest(word)? && params.iter().all(Signed::is_positive);
    Ok(TestPoint {
        element,
        source: PointSource::Params {
            word: word.clone(),
            params: params.to_vec(),
        },
        certified_tp,
    })
}

/// The `r` chamber minors of a reduced word for `w0`: `Δ_{ϖ_j, w0 ϖ_j}` for
/// every `j`, then for each non-final position `k` the minor
/// `Δ_{ϖ_{i_k}, s_{i_r} ⋯ s_{i_{k+1}} ϖ_{i_k}}`.
pub fn chamber_functions(rs: &RootSystem, word: &WeylWord) -> Result<Vec<MinorLabel>> {
    let ix = rs.word_indexing(word, &[])?;
    let mut out = Vec::with_capacity(word.len());
    for j in 1..=rs.rank() {
        out.push(MinorLabel::new(rs, j, WeylWord::empty(), word.clone())?);
    }
    let letters = word.letters();
    for &k in ix.e() {
        let k = k as usize;
        let v = WeylWord(letters[k..].iter().rev().copied().collect());
        out.push(MinorLabel::new(rs, letters[k - 1], WeylWord::empty(), v)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected,
    /// No value was non-positive, but some quotient could not be evaluated.
    Singular,
}

/// One evaluated criterion function.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub vertex: Option<i32>,
    pub label: String,
    /// `None` when the function hit a vanishing denominator at this point.
    pub value: Option<Rational>,
}

impl Record {
    pub fn positive(&self) -> bool {
        self.value.as_ref().is_some_and(Signed::is_positive)
    }
}

/// Where a criterion came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub root_system: String,
    pub word: WeylWord,
    pub k: Vec<usize>,
    pub mutations: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub records: Vec<Record>,
    /// First non-positive record; present exactly when rejected.
    pub witness: Option<Record>,
    pub provenance: Provenance,
}

impl CriterionReport {
    pub fn from_records(records: Vec<Record>, provenance: Provenance) -> Self {
        let witness = records
            .iter()
            .find(|r| r.value.as_ref().is_some_and(|v| !v.is_positive()))
            .cloned();
        let verdict = if witness.is_some() {
            Verdict::Rejected
        } else if records.iter().any(|r| r.value.is_none()) {
            Verdict::Singular
        } else {
            Verdict::Accepted
        };
        CriterionReport {
            verdict,
            records,
            witness,
            provenance,
        }
    }
}

/// Chamber-minor test for `N_{>0}`.
pub fn full_flag_test(group: &Arc<Group>, word: &WeylWord, point: &GroupElement<Rational>) -> Result<CriterionReport> {
    let rs = group.root_system();
    let labels = chamber_functions(rs, word)?;
    let records = labels
        .iter()
        .map(|l| {
            Ok(Record {
                vertex: None,
                label: l.to_string(),
                value: Some(generalized_minor(point, l)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CriterionReport::from_records(
        records,
        Provenance {
            root_system: rs.name(),
            word: word.clone(),
            k: Vec::new(),
            mutations: Vec::new(),
        },
    ))
}

/// The seed whose cluster variables form the criterion for `(X_K)_{>0}`.
pub fn partial_flag_criterion(rs: &RootSystem, word: &WeylWord, k: &[usize], mutations: &[i32]) -> Result<Seed> {
    partial_flag_criterion_with_rule(rs, word, k, mutations, QuiverRule::ExtendedWord)
}

pub fn partial_flag_criterion_with_rule(
    rs: &RootSystem,
    word: &WeylWord,
    k: &[usize],
    mutations: &[i32],
    rule: QuiverRule,
) -> Result<Seed> {
    Seed::initial_with_rule(rs, word, k, rule)?.mutate_sequence(mutations)
}

/// Evaluates the seed's variables at `point`; any lift to `N` of the flag
/// gives the same values.
pub fn seed_test(seed: &Seed, point: &GroupElement<Rational>) -> Result<CriterionReport> {
    let mut ev = Evaluator::new(point);
    let mut records = Vec::new();
    for (v, var) in seed.variables() {
        let value = match ev.value(var, v) {
            Ok(x) => Some(x),
            Err(Error::SingularEvaluation { .. }) => None,
            Err(e) => return Err(e),
        };
        records.push(Record {
            vertex: Some(v),
            label: var.to_string(),
            value,
        });
    }
    Ok(CriterionReport::from_records(
        records,
        Provenance {
            root_system: seed.root_system().name(),
            word: seed.word().clone(),
            k: seed.k().to_vec(),
            mutations: seed.history().to_vec(),
        },
    ))
}

pub fn partial_flag_test(
    rs: &RootSystem,
    word: &WeylWord,
    k: &[usize],
    mutations: &[i32],
    point: &GroupElement<Rational>,
) -> Result<CriterionReport> {
    seed_test(&partial_flag_criterion(rs, word, k, mutations)?, point)
}

/// A small random rational `p/q` with `1 <= q <= 9` and `p` in `lo..=hi`.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi).into(), rng.gen_range(1i64..=9).into())
}

pub fn random_positive_params(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng, 1, 9)).collect()
}

/// A failed invariance trial.
#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceFailure {
    pub vertex: i32,
    pub k: usize,
    pub t: Rational,
    pub params: Vec<Rational>,
    pub before: Rational,
    pub after: Rational,
}

/// Checks `φ(x_k(t)·n) = φ(n)` for the variable at `vertex`, over random
/// `k ∈ K`, rational `t` and random-parameter `n`.
pub fn invariance_check(
    seed: &Seed,
    vertex: i32,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<Option<InvarianceFailure>> {
    let var = seed.var(vertex)?.clone();
    if seed.k().is_empty() {
        return Ok(None);
    }
    let group = Group::new(seed.root_system().clone());
    for _ in 0..trials {
        let k = seed.k()[rng.gen_range(0..seed.k().len())];
        let t = random_rational(rng, -9, 9);
        let params: Vec<Rational> = (0..seed.word().len()).map(|_| random_rational(rng, -9, 9)).collect();
        let n = GroupElement::from_params(&group, &(), seed.word(), &params)?;
        let moved = n.left_mul(k, Generator::E, t.clone())?;
        let before = value_or_skip(&var, vertex, &n)?;
        let after = value_or_skip(&var, vertex, &moved)?;
        if let (Some(before), Some(after)) = (before, after) {
            if before != after {
                return Ok(Some(InvarianceFailure {
                    vertex,
                    k,
                    t,
                    params,
                    before,
                    after,
                }));
            }
        }
    }
    Ok(None)
}

fn value_or_skip(var: &ClusterVar, vertex: i32, g: &GroupElement<Rational>) -> Result<Option<Rational>> {
    match Evaluator::new(g).value(var, vertex) {
        Ok(v) => Ok(Some(v)),
        Err(Error::SingularEvaluation { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Type A: checks invariance as a polynomial identity, comparing the
/// variable at a generic element of `N_K` with its value at
/// `x_k(t)` times that element, `t` a fresh variable.
pub fn symbolic_invariance_check(seed: &Seed, vertex: i32) -> Result<bool> {
    let var = seed.var(vertex)?.clone();
    let group = Group::new(seed.root_system().clone());
    let n = generic_nk_element(&group, seed.k())?;
    let base_ring = n.ctx().clone();
    let mut names: Vec<String> = base_ring.names().to_vec();
    names.push("t".into());
    let ring = PolyRing::new(names);
    let lift = |p: &MultiPoly| -> Result<MultiPoly> {
        let vars: Vec<MultiPoly> = (0..base_ring.nvars()).map(|j| ring.var_at(j)).collect();
        substitute(p, &ring, &vars)
    };
    let base_value = Evaluator::new(&n).value(&var, vertex)?;
    let n_lifted = {
        let m = n.matrix(1)?;
        let rows = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(&lift).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GroupElement::from_matrix(&group, crate::exactalg::ExactMatrix::from_rows(&ring, rows)?)?
    };
    let t = ring.var("t")?;
    for &k in seed.k() {
        let moved = n_lifted.left_mul(k, Generator::E, t.clone())?;
        let after = Evaluator::new(&moved).value(&var, vertex)?;
        if after != lift(&base_value)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn substitute(p: &MultiPoly, ring: &PolyRing, vars: &[MultiPoly]) -> Result<MultiPoly> {
    let mut out = ring.zero();
    for (m, c) in p.terms() {
        let mut term = ring.constant(c.clone());
        for (x, &e) in vars.iter().zip(m.exponents()) {
            term = term.checked_mul(&x.pow(e))?;
        }
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ExactMatrix;
    use crate::rootsys::Family;
    use rand::SeedableRng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn a2_chamber_functions() {
        let group = Group::new(RootSystem::new(Family::A, 2).unwrap());
        let word = WeylWord(vec![1, 2, 1]);
        let labels = chamber_functions(group.root_system(), &word).unwrap();
        let shown: Vec<String> = labels.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["D_{1,3}", "D_{12,23}", "D_{1,2}"]);

        let p = tp_element(&group, &word, &[q(1), q(1), q(1)]).unwrap();
        assert!(p.certified_tp);
        let report = full_flag_test(&group, &word, &p.element).unwrap();
        assert_eq!(report.verdict, Verdict::Accepted);
        let values: Vec<Rational> = report.records.iter().map(|r| r.value.clone().unwrap()).collect();
        assert_eq!(values, vec![q(1), q(1), q(2)]);

        let id = GroupElement::identity(&group, &());
        let report = full_flag_test(&group, &word, &id).unwrap();
        assert_eq!(report.verdict, Verdict::Rejected);
        assert_eq!(report.witness.unwrap().label, "D_{1,3}");

        let p = tp_element(&group, &word, &[q(1), q(-1), q(1)]).unwrap();
        assert!(!p.certified_tp);
    }

    #[test]
    fn a3_counterexample_rejected() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let group = Group::new(rs.clone());
        let m = ExactMatrix::from_i64_rows(&[
            vec![1, 1, 1, 2],
            vec![0, 1, 0, -1],
            vec![0, 0, 1, 1],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        let point = GroupElement::from_matrix(&group, m).unwrap();
        let word = WeylWord(vec![2, 1, 3, 2, 1, 3]);
        let report = partial_flag_test(&rs, &word, &[2], &[], &point).unwrap();
        assert_eq!(report.verdict, Verdict::Rejected);
        let w = report.witness.unwrap();
        assert_eq!(w.vertex, Some(1));
        assert_eq!(w.value, Some(q(-1)));
        let report = partial_flag_test(&rs, &word, &[2], &[2], &point).unwrap();
        assert_eq!(report.verdict, Verdict::Rejected);
    }

    #[test]
    fn invariance_a3() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let seed = Seed::initial(&rs, &WeylWord(vec![2, 1, 3, 2, 1, 3]), &[2]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for v in seed.ordered_vertices() {
            assert_eq!(invariance_check(&seed, v, 10, &mut rng).unwrap(), None);
            assert!(symbolic_invariance_check(&seed, v).unwrap());
        }
    }
}
