//! The end-to-end acceptance suite, shared by the `acceptance` test target
//! and the `selfcheck` command.
//!
//! Every check compares library output against an independent computation
//! (classical determinants, hand-derived index sets, polynomial identities)
//! and is held to a wall-clock budget.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{ExactMatrix, MultiPoly, PolyRing, Rational, Ring};
use crate::flagpos::{
    full_flag_test, invariance_check, partial_flag_test, random_positive_params, random_rational,
    seed_test, symbolic_invariance_check, tp_element, Verdict,
};
use crate::repmat::{expected_dimension, generalized_minor, Generator, Group, GroupElement, MinorLabel};
use crate::rootsys::{Family, RootSystem, WeylWord};
use crate::seeds::{
    generic_nk_element, generic_param_element, symbolic_seed, Coordinates, Evaluator, QuiverRule, Seed,
    SizeCap,
};

pub const A3_WORD: [usize; 6] = [2, 1, 3, 2, 1, 3];
pub const A3_K: [usize; 1] = [2];
pub const D4_WORD: [usize; 12] = [1, 2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 4];
pub const D4_K: [usize; 3] = [1, 2, 3];

/// Knobs for the suite.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Quiver rule used to build seeds; anything but the default should make
    /// the exchange-relation check fail.
    pub rule: QuiverRule,
    pub rng_seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            rule: QuiverRule::ExtendedWord,
            rng_seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: usize,
    pub title: &'static str,
    /// Correct output and within budget.
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.3}s of {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

struct Check {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn(&Options, &mut ChaCha8Rng) -> Outcome,
}

const CHECKS: [Check; 10] = [
    Check { id: 1, title: "A3 partial-flag criterion polynomials", budget: Duration::from_secs(1), run: golden_criterion },
    Check { id: 2, title: "A3 counterexample rejected", budget: Duration::from_secs(1), run: counterexample },
    Check { id: 3, title: "D4 exchange relations", budget: Duration::from_secs(60), run: d4_exchange },
    Check { id: 4, title: "index sets of both words", budget: Duration::from_secs(1), run: index_sets },
    Check { id: 5, title: "soundness at positive points", budget: Duration::from_secs(300), run: soundness },
    Check { id: 6, title: "representation invariants", budget: Duration::from_secs(30), run: representations },
    Check { id: 7, title: "minors equal classical determinants", budget: Duration::from_secs(30), run: classical_minors },
    Check { id: 8, title: "criterion functions are invariant", budget: Duration::from_secs(60), run: invariance },
    Check { id: 9, title: "exchange quotients divide exactly", budget: Duration::from_secs(300), run: regularity },
    Check { id: 10, title: "A3 mutated variables", budget: Duration::from_secs(5), run: a3_mutations },
];

pub fn check_ids() -> Vec<usize> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Runs one check by number.
pub fn run(id: usize, opts: &Options) -> Option<CheckResult> {
    let check = CHECKS.iter().find(|c| c.id == id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed.wrapping_add(id as u64));
    let start = Instant::now();
    let outcome = (check.run)(opts, &mut rng);
    let elapsed = start.elapsed();
    let within = elapsed <= check.budget;
    let (ok, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if !within {
        detail = format!("over budget; {detail}");
    }
    Some(CheckResult {
        id,
        title: check.title,
        passed: ok && within,
        detail,
        elapsed,
        budget: check.budget,
    })
}

pub fn run_all(opts: &Options) -> Vec<CheckResult> {
    CHECKS.iter().filter_map(|c| run(c.id, opts)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn a3_seed(opts: &Options) -> std::result::Result<Seed, String> {
    let rs = RootSystem::new(Family::A, 3).map_err(err)?;
    Seed::initial_with_rule(&rs, &WeylWord(A3_WORD.to_vec()), &A3_K, opts.rule).map_err(err)
}

fn d4_seed(opts: &Options) -> std::result::Result<Seed, String> {
    let rs = RootSystem::new(Family::D, 4).map_err(err)?;
    Seed::initial_with_rule(&rs, &WeylWord(D4_WORD.to_vec()), &D4_K, opts.rule).map_err(err)
}

/// Generic `N_K` matrix for the A3 case, built entry by entry.
fn a3_nk_matrix() -> (PolyRing, ExactMatrix<MultiPoly>) {
    let ring = PolyRing::new(["n12", "n13", "n14", "n24", "n34"]);
    let v = |s: &str| ring.parse(s).expect("valid polynomial");
    let m = ExactMatrix::from_rows(
        &ring,
        vec![
            vec![v("1"), v("n12"), v("n13"), v("n14")],
            vec![v("0"), v("1"), v("0"), v("n24")],
            vec![v("0"), v("0"), v("1"), v("n34")],
            vec![v("0"), v("0"), v("0"), v("1")],
        ],
    )
    .expect("square");
    (ring, m)
}

fn classical_minor<R: Ring>(m: &ExactMatrix<R>, rows: &[usize], cols: &[usize]) -> R {
    let r: Vec<usize> = rows.iter().map(|a| a - 1).collect();
    let c: Vec<usize> = cols.iter().map(|a| a - 1).collect();
    m.submatrix(&r, &c).det().expect("square submatrix")
}

fn golden_criterion(opts: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let seed = a3_seed(opts)?;
    let polys = symbolic_seed(&seed, Coordinates::MatrixNK, SizeCap::default()).map_err(err)?;
    let ring = polys[0].1.ring().clone();
    let expected: Vec<MultiPoly> = ["n34", "n12", "n14", "n13*n34 - n14", "n14 - n13*n34 - n12*n24"]
        .iter()
        .map(|s| ring.parse(s))
        .collect::<crate::Result<_>>()
        .map_err(err)?;
    let got: BTreeSet<String> = polys.iter().map(|(_, p)| p.to_string()).collect();
    let want: BTreeSet<String> = expected.iter().map(ToString::to_string).collect();
    ensure(polys.len() == 5 && got == want, || format!("got {got:?}, want {want:?}"))?;
    Ok(format!("{} inequalities match", got.len()))
}

fn counterexample(_: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let rs = RootSystem::new(Family::A, 3).map_err(err)?;
    let group = Group::new(rs.clone());
    let m = ExactMatrix::from_i64_rows(&[
        vec![1, 1, 1, 2],
        vec![0, 1, 0, -1],
        vec![0, 0, 1, 1],
        vec![0, 0, 0, 1],
    ])
    .map_err(err)?;
    let point = GroupElement::from_matrix(&group, m.clone()).map_err(err)?;
    let plucker: [(&[usize], &[usize]); 6] = [
        (&[1], &[2]),
        (&[1], &[3]),
        (&[1], &[4]),
        (&[1, 2, 3], &[1, 2, 4]),
        (&[1, 2, 3], &[1, 3, 4]),
        (&[1, 2, 3], &[2, 3, 4]),
    ];
    for (rows, cols) in plucker {
        let classical = classical_minor(&m, rows, cols);
        let label = MinorLabel::from_sets(&rs, rows, cols).map_err(err)?;
        let minor = generalized_minor(&point, &label).map_err(err)?;
        ensure(minor == classical && classical > q(0), || {
            format!("Plücker minor {label}: {minor} (classical {classical})")
        })?;
    }
    let report = partial_flag_test(&rs, &WeylWord(A3_WORD.to_vec()), &A3_K, &[], &point).map_err(err)?;
    let witness = report.witness.clone().ok_or("no witness")?;
    // n13*n34 - n14 directly from the entries
    let direct = m.get(0, 2) * m.get(2, 3) - m.get(0, 3);
    ensure(
        report.verdict == Verdict::Rejected && witness.value == Some(q(-1)) && direct == q(-1),
        || format!("verdict {:?}, witness {:?}", report.verdict, witness),
    )?;
    let (ring, generic) = a3_nk_matrix();
    let expected = ring.parse("n13*n34 - n14").map_err(err)?;
    let wv = witness.vertex.ok_or("witness without vertex")?;
    let seed = Seed::initial(&rs, &WeylWord(A3_WORD.to_vec()), &A3_K).map_err(err)?;
    let label = seed.var(wv).map_err(err)?.as_minor().ok_or("witness is not a minor")?.clone();
    let g = GroupElement::from_matrix(&group, generic).map_err(err)?;
    let poly = generalized_minor(&g, &label).map_err(err)?;
    ensure(poly == expected, || format!("witness function is {poly}"))?;
    Ok(format!("Plücker minors positive; witness {} = -1", witness.label))
}

/// Plücker coordinates `D_{ϖ_j, γ}` of `L(ϖ_j)`, `γ` in the Weyl orbit.
fn plucker_labels(rs: &RootSystem, j: usize) -> std::result::Result<Vec<MinorLabel>, String> {
    rs.orbit(j)
        .map_err(err)?
        .iter()
        .map(|gamma| {
            let v = rs.word_for_weight(j, gamma).map_err(err)?.ok_or("orbit weight without word")?;
            MinorLabel::new(rs, j, WeylWord::empty(), v).map_err(err)
        })
        .collect()
}

fn d4_exchange(opts: &Options, rng: &mut ChaCha8Rng) -> Outcome {
    let seed = d4_seed(opts)?;
    let rs = seed.root_system().clone();
    let group = Group::new(rs.clone());
    let w0 = seed.word().clone();
    // N_m sits at vertex m and Q_4 at vertex -4.
    let relations: [(i32, &[i32], &[i32]); 2] = [(7, &[6], &[-4]), (8, &[6], &[4, 5])];
    let generic = generic_param_element(&group, &w0).map_err(err)?;
    let mut ev = Evaluator::new(&generic);
    let plucker = plucker_labels(&rs, 4)?;
    let mut found = Vec::new();
    for (k, first, second) in relations {
        let mutated = seed.mutate(k).map_err(err)?;
        let new_poly = ev
            .value(mutated.var(k).map_err(err)?, k)
            .map_err(|e| format!("mutation at {k}: {e}"))?;
        let mut partner = None;
        for label in &plucker {
            if generalized_minor(&generic, label).map_err(err)? == new_poly {
                partner = Some(label.clone());
            }
        }
        let partner = partner.ok_or_else(|| format!("mutation at {k} is not a Plücker coordinate of L(ϖ4)"))?;
        let old = seed.var(k).map_err(err)?.as_minor().ok_or("initial variable not a minor")?.clone();
        let minor_of = |v: i32| -> std::result::Result<MinorLabel, String> {
            Ok(seed.var(v).map_err(err)?.as_minor().ok_or("initial variable not a minor")?.clone())
        };
        let lhs_a: Vec<MinorLabel> = first.iter().map(|&v| minor_of(v)).collect::<std::result::Result<_, _>>()?;
        let lhs_b: Vec<MinorLabel> = second.iter().map(|&v| minor_of(v)).collect::<std::result::Result<_, _>>()?;
        let product = |g: &GroupElement<MultiPoly>, ls: &[MinorLabel]| -> std::result::Result<MultiPoly, String> {
            ls.iter().try_fold(g.ctx().one(), |acc, l| Ok(acc * generalized_minor(g, l).map_err(err)?))
        };
        let symbolic_lhs = generalized_minor(&generic, &old).map_err(err)? * generalized_minor(&generic, &partner).map_err(err)?;
        let symbolic_rhs = product(&generic, &lhs_a)? + product(&generic, &lhs_b)?;
        ensure(symbolic_lhs == symbolic_rhs, || format!("symbolic relation at {k} fails"))?;
        for _ in 0..50 {
            let params: Vec<Rational> = (0..w0.len()).map(|_| random_rational(rng, -9, 9)).collect();
            let g = GroupElement::from_params(&group, &(), &w0, &params).map_err(err)?;
            let val = |l: &MinorLabel| generalized_minor(&g, l).map_err(err);
            let prod = |ls: &[MinorLabel]| -> std::result::Result<Rational, String> {
                ls.iter().try_fold(q(1), |acc, l| Ok(acc * val(l)?))
            };
            let lhs = val(&old)? * val(&partner)?;
            let rhs = prod(&lhs_a)? + prod(&lhs_b)?;
            ensure(lhs == rhs, || format!("relation at {k} fails at {params:?}"))?;
        }
        found.push(format!("μ{k} gives {partner}"));
    }
    Ok(found.join("; "))
}

fn index_sets(_: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let set = |xs: &[i32]| xs.iter().copied().collect::<BTreeSet<i32>>();
    // (family, rank, word, K, e, I_K, e_K)
    type Case<'a> = (Family, usize, &'a [usize], &'a [usize], &'a [i32], &'a [i32], &'a [i32]);
    let cases: [Case; 2] = [
        (Family::A, 3, &A3_WORD, &A3_K, &[1, 2, 3], &[-1, 1, -3], &[2, 3]),
        (Family::D, 4, &D4_WORD, &D4_K, &[1, 2, 3, 4, 5, 6, 7, 8], &[-4, 4, 5, 6], &[7, 8]),
    ];
    for (family, rank, word, k, e, ik, ek) in cases {
        let rs = RootSystem::new(family, rank).map_err(err)?;
        let ix = rs.word_indexing(&WeylWord(word.to_vec()), k).map_err(err)?;
        ensure(ix.e() == &set(e) && ix.i_k() == &set(ik) && ix.e_k() == &set(ek), || {
            format!("{}: e {:?}, I_K {:?}, e_K {:?}", rs.name(), ix.e(), ix.i_k(), ix.e_k())
        })?;
    }
    Ok("A3 and D4 sets match".into())
}

fn random_sequence(rng: &mut impl Rng, mutable: &[i32], max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| mutable[rng.gen_range(0..mutable.len())]).collect()
}

fn soundness(opts: &Options, rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases: Vec<(RootSystem, WeylWord, Vec<usize>)> = Vec::new();
    for n in 2..=4 {
        let rs = RootSystem::new(Family::A, n).map_err(err)?;
        let w = rs.longest_word();
        cases.push((rs, w, Vec::new()));
    }
    cases.push((RootSystem::new(Family::A, 3).map_err(err)?, WeylWord(A3_WORD.to_vec()), A3_K.to_vec()));
    cases.push((RootSystem::new(Family::D, 4).map_err(err)?, WeylWord(D4_WORD.to_vec()), D4_K.to_vec()));
    let mut evaluations = 0usize;
    for (rs, word, k) in cases {
        let group = Group::new(rs.clone());
        let seed = Seed::initial_with_rule(&rs, &word, &k, opts.rule).map_err(err)?;
        let mutable = seed.quiver().mutable();
        for _ in 0..50 {
            let params = random_positive_params(rng, word.len());
            let point = tp_element(&group, &word, &params).map_err(err)?;
            ensure(point.certified_tp, || "positive point not certified".into())?;
            let mut reports = vec![full_flag_test(&group, &word, &point.element).map_err(err)?];
            reports.push(seed_test(&seed, &point.element).map_err(err)?);
            if !mutable.is_empty() {
                let seq = random_sequence(rng, &mutable, 8);
                let mutated = seed.mutate_sequence(&seq).map_err(err)?;
                reports.push(seed_test(&mutated, &point.element).map_err(err)?);
            }
            for r in &reports {
                evaluations += r.records.len();
                ensure(r.verdict == Verdict::Accepted, || {
                    format!(
                        "{} K={:?} mutations {:?} rejected {:?} at {:?}",
                        rs.name(),
                        k,
                        r.provenance.mutations,
                        r.witness,
                        params
                    )
                })?;
            }
        }
    }
    Ok(format!("{evaluations} positive values over 250 points"))
}

fn representations(_: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    let mut systems: Vec<RootSystem> = (1..=4).map(|n| RootSystem::new(Family::A, n)).collect::<crate::Result<_>>().map_err(err)?;
    systems.push(RootSystem::new(Family::D, 4).map_err(err)?);
    for rs in systems {
        let group = Group::new(rs.clone());
        for i in 1..=rs.rank() {
            let rep = group.rep(i).map_err(err)?;
            let bad = rep.check_invariants(&rs);
            ensure(bad.is_empty(), || format!("{} ϖ{i}: {bad:?}", rs.name()))?;
            ensure(Some(rep.dim()) == expected_dimension(&rs, i), || format!("{} ϖ{i}: dim {}", rs.name(), rep.dim()))?;
            count += 1;
        }
    }
    Ok(format!("{count} representations valid"))
}

/// A random reduced word, grown letter by letter.
fn random_reduced_word(rs: &RootSystem, rng: &mut impl Rng, max_len: usize) -> WeylWord {
    let target = rng.gen_range(0..=max_len);
    let mut w = WeylWord::empty();
    for _ in 0..4 * max_len {
        if w.len() >= target {
            break;
        }
        let mut cand = w.0.clone();
        cand.push(rng.gen_range(1..=rs.rank()));
        let cand = WeylWord(cand);
        if rs.word_status(&cand).is_ok_and(|s| s.is_reduced) {
            w = cand;
        }
    }
    w
}

/// Image of `{1..i}` under the permutation `s_{j1} ⋯ s_{jm}`.
fn permutation_image(word: &WeylWord, i: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..=word.letters().iter().max().copied().unwrap_or(0) + 1).collect();
    for &j in word.letters() {
        // compose on the right with the transposition (j, j+1)
        perm.swap(j, j + 1);
    }
    let mut out: Vec<usize> = (1..=i).map(|x| if x < perm.len() { perm[x] } else { x }).collect();
    out.sort_unstable();
    out
}

fn elementary(size: usize, j: usize, t: &Rational, upper: bool) -> ExactMatrix<Rational> {
    let mut m = ExactMatrix::identity(&(), size);
    if upper {
        m.set(j - 1, j, t.clone());
    } else {
        m.set(j, j - 1, t.clone());
    }
    m
}

fn classical_minors(_: &Options, rng: &mut ChaCha8Rng) -> Outcome {
    for trial in 0..100 {
        let n = rng.gen_range(2..=4);
        let rs = RootSystem::new(Family::A, n).map_err(err)?;
        let group = Group::new(rs.clone());
        let mut g = GroupElement::identity(&group, &());
        let mut matrix = ExactMatrix::identity(&(), n + 1);
        for _ in 0..rng.gen_range(1..=12) {
            let j = rng.gen_range(1..=n);
            let t = random_rational(rng, -9, 9);
            let upper = rng.gen_bool(0.5);
            let gen = if upper { Generator::E } else { Generator::F };
            let factor = GroupElement::identity(&group, &()).left_mul(j, gen, t.clone()).map_err(err)?;
            g = g.mul(&factor);
            matrix = matrix.mul(&elementary(n + 1, j, &t, upper)).map_err(err)?;
        }
        let i = rng.gen_range(1..=n);
        let u = random_reduced_word(&rs, rng, 6);
        let v = random_reduced_word(&rs, rng, 6);
        let label = MinorLabel::new(&rs, i, u.clone(), v.clone()).map_err(err)?;
        let minor = generalized_minor(&g, &label).map_err(err)?;
        let classical = classical_minor(&matrix, &permutation_image(&u, i), &permutation_image(&v, i));
        ensure(minor == classical, || {
            format!("trial {trial}: A{n} i={i} u={u} v={v}: {minor} vs classical {classical}")
        })?;
    }
    Ok("100 instances agree".into())
}

fn invariance(opts: &Options, rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    for (seed, muts) in [(a3_seed(opts)?, [2, 3]), (d4_seed(opts)?, [7, 8])] {
        let mut seeds = vec![seed.clone()];
        for k in muts {
            seeds.push(seed.mutate(k).map_err(err)?);
        }
        for s in &seeds {
            for v in s.ordered_vertices() {
                if let Some(f) = invariance_check(s, v, 30, rng).map_err(err)? {
                    return Err(format!("{} vertex {v} not invariant: {f:?}", s.root_system().name()));
                }
                if s.root_system().family() == Family::A {
                    ensure(symbolic_invariance_check(s, v).map_err(err)?, || {
                        format!("A3 vertex {v}: symbolic invariance fails")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} functions invariant"))
}

fn explore<R: Ring + crate::seeds::Measured>(
    seed: &Seed,
    depth: usize,
    ev: &mut Evaluator<'_, R>,
    count: &mut usize,
) -> std::result::Result<(), String> {
    ev.seed_values(seed)
        .map_err(|e| format!("sequence {:?}: {e}", seed.history()))?;
    *count += 1;
    if depth == 0 {
        return Ok(());
    }
    for k in seed.quiver().mutable() {
        explore(&seed.mutate(k).map_err(err)?, depth - 1, ev, count)?;
    }
    Ok(())
}

fn regularity(opts: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let a3 = a3_seed(opts)?;
    let a3_group = Group::new(a3.root_system().clone());
    let a3_point = generic_nk_element(&a3_group, a3.k()).map_err(err)?;
    let mut count = 0;
    explore(&a3, 6, &mut Evaluator::new(&a3_point), &mut count)?;

    let d4 = d4_seed(opts)?;
    let d4_group = Group::new(d4.root_system().clone());
    let d4_point = generic_param_element(&d4_group, d4.word()).map_err(err)?;
    explore(&d4, 6, &mut Evaluator::new(&d4_point), &mut count)?;
    Ok(format!("{count} seeds, every quotient exact"))
}

fn a3_mutations(opts: &Options, _: &mut ChaCha8Rng) -> Outcome {
    let (ring, m) = a3_nk_matrix();
    let p = |s: &str| ring.parse(s).expect("valid polynomial");
    let d13_34 = classical_minor(&m, &[1, 3], &[3, 4]);
    let d1_4 = classical_minor(&m, &[1], &[4]);
    let d123_234 = classical_minor(&m, &[1, 2, 3], &[2, 3, 4]);
    let n34 = classical_minor(&m, &[3], &[4]);
    let n12 = classical_minor(&m, &[1], &[2]);
    // n34 · n13 = D_{13,34} + D_{1,4} and n12 · (-n24) = D_{13,34} + D_{123,234}
    ensure(&n34 * &p("n13") == &d13_34 + &d1_4, || "oracle relation at 2 fails".into())?;
    ensure(&n12 * &p("-n24") == &d13_34 + &d123_234, || "oracle relation at 3 fails".into())?;

    let seed = a3_seed(opts)?;
    let group = Group::new(seed.root_system().clone());
    let g = GroupElement::from_matrix(&group, m).map_err(err)?;
    let mut ev = Evaluator::new(&g);
    let mut shown = Vec::new();
    for (k, expected) in [(2, "n13"), (3, "-n24")] {
        let mutated = seed.mutate(k).map_err(err)?;
        let value = ev.value(mutated.var(k).map_err(err)?, k).map_err(err)?;
        ensure(value == p(expected), || format!("mutation at {k} gives {value}"))?;
        shown.push(format!("μ{k} → {value}"));
    }
    Ok(shown.join(", "))
}
