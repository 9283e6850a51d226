//! Initial seeds attached to an adapted reduced word, seed mutation, and
//! exact evaluation of cluster variables.
//!
//! Cluster variables are expression DAGs over generalized minors. Numeric
//! evaluation walks the DAG once per point; symbolic evaluation checks that
//! every exchange quotient is an exact polynomial division.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, MultiPoly, PolyRing, Rational, Ring};
use crate::repmat::{generalized_minor, Group, GroupElement, MinorLabel};
use crate::rootsys::{Family, RootSystem, WeylWord, WordIndexing};

/// Exchange matrix of a quiver without loops or 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeSet<i32>,
    frozen: BTreeSet<i32>,
    /// `b[(i, j)]` = arrows `i → j` minus arrows `j → i`; only nonzero
    /// entries, stored in both orientations.
    b: BTreeMap<(i32, i32), i64>,
}

impl Quiver {
    pub fn new(vertices: BTreeSet<i32>, frozen: BTreeSet<i32>) -> Self {
        Quiver {
            vertices,
            frozen,
            b: BTreeMap::new(),
        }
    }

    /// Adds one arrow `from → to`, cancelling against an opposite arrow.
    pub fn add_arrow(&mut self, from: i32, to: i32) {
        assert!(from != to, "loops are not allowed");
        let v = self.b.get(&(from, to)).copied().unwrap_or(0) + 1;
        self.set(from, to, v);
    }

    fn set(&mut self, i: i32, j: i32, v: i64) {
        if v == 0 {
            self.b.remove(&(i, j));
            self.b.remove(&(j, i));
        } else {
            self.b.insert((i, j), v);
            self.b.insert((j, i), -v);
        }
    }

    pub fn b(&self, i: i32, j: i32) -> i64 {
        self.b.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> &BTreeSet<i32> {
        &self.vertices
    }

    pub fn frozen(&self) -> &BTreeSet<i32> {
        &self.frozen
    }

    pub fn mutable(&self) -> Vec<i32> {
        self.vertices.difference(&self.frozen).copied().collect()
    }

    /// Arrows `(from, to, multiplicity)` in lexicographic order.
    pub fn arrows(&self) -> Vec<(i32, i32, u32)> {
        self.b
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&(i, j), &v)| (i, j, v as u32))
            .collect()
    }

    /// Vertices with arrows into `k`, with multiplicity.
    pub fn arrows_in(&self, k: i32) -> Vec<(i32, u32)> {
        self.vertices
            .iter()
            .filter(|&&i| self.b(i, k) > 0).map(|&i| (i, self.b(i, k) as u32))
            .collect()
    }

    /// Vertices receiving arrows from `k`, with multiplicity.
    pub fn arrows_out(&self, k: i32) -> Vec<(i32, u32)> {
        self.vertices
            .iter()
            .filter(|&&j| self.b(k, j) > 0).map(|&j| (j, self.b(k, j) as u32))
            .collect()
    }

    fn check_mutable(&self, k: i32) -> Result<()> {
        if !self.vertices.contains(&k) {
            Err(Error::UnknownVertex(k))
        } else if self.frozen.contains(&k) {
            Err(Error::FrozenVertex(k))
        } else {
            Ok(())
        }
    }

    pub fn mutate(&self, k: i32) -> Result<Quiver> {
        self.check_mutable(k)?;
        let mut out = self.clone();
        let verts: Vec<i32> = self.vertices.iter().copied().collect();
        for (a, &i) in verts.iter().enumerate() {
            for &j in &verts[a + 1..] {
                if i == k || j == k {
                    out.set(i, j, -self.b(i, j));
                } else {
                    let (bik, bkj) = (self.b(i, k), self.b(k, j));
                    let delta = (bik.abs() * bkj + bik * bkj.abs()) / 2;
                    out.set(i, j, self.b(i, j) + delta);
                }
            }
        }
        Ok(out)
    }

    /// Full subquiver on `keep`.
    pub fn induced(&self, keep: &BTreeSet<i32>, frozen: BTreeSet<i32>) -> Quiver {
        let mut out = Quiver::new(keep.clone(), frozen);
        for (&(i, j), &v) in &self.b {
            if keep.contains(&i) && keep.contains(&j) {
                out.b.insert((i, j), v);
            }
        }
        out
    }
}

/// Node of a cluster-variable expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Leaf(MinorLabel),
    Product(Vec<Arc<Expr>>),
    Sum(Vec<Arc<Expr>>),
    /// Exact quotient `numerator / denominator`.
    Quotient(Arc<Expr>, Arc<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Leaf(l) => write!(f, "{l}"),
            Expr::Product(xs) if xs.is_empty() => write!(f, "1"),
            Expr::Product(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("·"))
            }
            Expr::Sum(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
            Expr::Quotient(n, d) => match **d {
                Expr::Leaf(_) => write!(f, "{n}/{d}"),
                _ => write!(f, "{n}/({d})"),
            },
        }
    }
}

/// A cluster variable: a shared expression DAG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterVar(pub Arc<Expr>);

impl ClusterVar {
    pub fn leaf(label: MinorLabel) -> Self {
        ClusterVar(Arc::new(Expr::Leaf(label)))
    }

    pub fn expr(&self) -> &Expr {
        &self.0
    }

    /// The minor label when the variable is a single minor.
    pub fn as_minor(&self) -> Option<&MinorLabel> {
        match &*self.0 {
            Expr::Leaf(l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for ClusterVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How the initial quiver is derived from the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuiverRule {
    /// Same-letter arrows `m⁺ → m` and inclined arrows `m → m'` for
    /// neighbouring letters with `m < m' < m⁺ < m'⁺` on the extended word.
    #[default]
    ExtendedWord,
    /// Negative control: the same rule with the same-letter arrows dropped.
    DropSameLetterArrows,
}

/// A seed: quiver, one cluster variable per vertex, and provenance.
#[derive(Debug, Clone)]
pub struct Seed {
    rs: RootSystem,
    word: WeylWord,
    k: Vec<usize>,
    quiver: Quiver,
    vars: BTreeMap<i32, ClusterVar>,
    history: Vec<i32>,
    replaced: Vec<ClusterVar>,
}

impl PartialEq for Seed {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.vars == other.vars
    }
}

fn rule_r_quiver(ix: &WordIndexing, rs: &RootSystem, rule: QuiverRule) -> Quiver {
    let full = ix.full_vertices();
    let mut q = Quiver::new(full.clone(), BTreeSet::new());
    let next = |m: i32| ix.next_occurrence(m).expect("vertices reoccur");
    for &m in &full {
        let mp = next(m);
        if rule == QuiverRule::ExtendedWord && full.contains(&mp) {
            q.add_arrow(mp, m);
        }
        for &m2 in full.range(m + 1..mp) {
            if rs.a(ix.letter(m), ix.letter(m2)) == -1 && mp < next(m2) {
                q.add_arrow(m, m2);
            }
        }
    }
    q
}

impl Seed {
    /// Seed for `(word, K)` on the vertices `I_K ∪ e_K`; `K = ∅` gives the
    /// full-flag seed on `-I ∪ e`.
    pub fn initial(rs: &RootSystem, word: &WeylWord, k: &[usize]) -> Result<Seed> {
        Seed::initial_with_rule(rs, word, k, QuiverRule::ExtendedWord)
    }

    pub fn initial_with_rule(rs: &RootSystem, word: &WeylWord, k: &[usize], rule: QuiverRule) -> Result<Seed> {
        if rs.family() == Family::E {
            return Err(Error::UnsupportedType(format!(
                "{}: seeds need representation matrices, available for types A and D only",
                rs.name()
            )));
        }
        let ix = rs.word_indexing(word, k)?;
        let full = rule_r_quiver(&ix, rs, rule);
        let quiver = full.induced(&ix.kept_vertices(), ix.i_k().clone());
        let mut vars = BTreeMap::new();
        for &m in quiver.vertices() {
            let label = MinorLabel::new(rs, ix.letter(m), ix.prefix_word(m), word.clone())?;
            vars.insert(m, ClusterVar::leaf(label));
        }
        let mut k_sorted = k.to_vec();
        k_sorted.sort_unstable();
        k_sorted.dedup();
        Ok(Seed {
            rs: rs.clone(),
            word: word.clone(),
            k: k_sorted,
            quiver,
            vars,
            history: Vec::new(),
            replaced: Vec::new(),
        })
    }

    /// Applies the mutations in order.
    pub fn mutate_sequence(&self, seq: &[i32]) -> Result<Seed> {
        seq.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Fomin–Zelevinsky mutation at the mutable vertex `k`.
    pub fn mutate(&self, k: i32) -> Result<Seed> {
        let quiver = self.quiver.mutate(k)?;
        let old = self.vars[&k].clone();
        let new = if self.history.last() == Some(&k) {
            self.replaced.last().expect("replaced tracks history").clone()
        } else {
            let product = |arrows: Vec<(i32, u32)>| {
                let factors = arrows
                    .into_iter()
                    .flat_map(|(v, mult)| std::iter::repeat_n(self.vars[&v].0.clone(), mult as usize))
                    .collect();
                Arc::new(Expr::Product(factors))
            };
            let sum = Arc::new(Expr::Sum(vec![
                product(self.quiver.arrows_in(k)),
                product(self.quiver.arrows_out(k)),
            ]));
            ClusterVar(Arc::new(Expr::Quotient(sum, old.0.clone())))
        };
        let mut seed = self.clone();
        seed.quiver = quiver;
        seed.vars.insert(k, new);
        seed.history.push(k);
        seed.replaced.push(old);
        Ok(seed)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn history(&self) -> &[i32] {
        &self.history
    }

    pub fn var(&self, vertex: i32) -> Result<&ClusterVar> {
        self.vars.get(&vertex).ok_or(Error::UnknownVertex(vertex))
    }

    /// Vertices in report order: frozen ascending, then mutable ascending.
    pub fn ordered_vertices(&self) -> Vec<i32> {
        let frozen = self.quiver.frozen().iter().copied();
        frozen.chain(self.quiver.mutable()).collect()
    }

    /// `(vertex, variable)` in report order.
    pub fn variables(&self) -> Vec<(i32, &ClusterVar)> {
        self.ordered_vertices()
            .into_iter()
            .map(|v| (v, &self.vars[&v]))
            .collect()
    }
}

/// Limits on intermediate polynomial size in symbolic evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCap {
    pub max_terms: usize,
    pub max_degree: u32,
}

impl Default for SizeCap {
    fn default() -> Self {
        SizeCap {
            max_terms: 50_000,
            max_degree: 64,
        }
    }
}

/// Size hook so the evaluator can police symbolic growth.
pub trait Measured {
    fn measure(&self) -> Option<(usize, u32)>;
}

impl Measured for Rational {
    fn measure(&self) -> Option<(usize, u32)> {
        None
    }
}

impl Measured for MultiPoly {
    fn measure(&self) -> Option<(usize, u32)> {
        Some((self.num_terms(), self.total_degree()))
    }
}

/// Memoizing evaluator of cluster variables at one group element. Reusing
/// one evaluator across seeds that share expression nodes evaluates each
/// node once.
pub struct Evaluator<'a, R: Ring + Measured> {
    element: &'a GroupElement<R>,
    cap: SizeCap,
    leaves: HashMap<MinorLabel, R>,
    nodes: HashMap<usize, (Arc<Expr>, R)>,
}

impl<'a, R: Ring + Measured> Evaluator<'a, R> {
    pub fn new(element: &'a GroupElement<R>) -> Self {
        Evaluator {
            element,
            cap: SizeCap::default(),
            leaves: HashMap::new(),
            nodes: HashMap::new(),
        }
    }

    pub fn with_cap(mut self, cap: SizeCap) -> Self {
        self.cap = cap;
        self
    }

    pub fn minor(&mut self, label: &MinorLabel) -> Result<R> {
        if let Some(v) = self.leaves.get(label) {
            return Ok(v.clone());
        }
        let v = generalized_minor(self.element, label)?;
        self.leaves.insert(label.clone(), v.clone());
        Ok(v)
    }

    fn check_size(&self, v: &R) -> Result<()> {
        if let Some((terms, degree)) = v.measure() {
            if terms > self.cap.max_terms || degree > self.cap.max_degree {
                return Err(Error::TooLarge(format!(
                    "{terms} terms of degree {degree} (cap {} terms, degree {})",
                    self.cap.max_terms, self.cap.max_degree
                )));
            }
        }
        Ok(())
    }

    fn node(&mut self, e: &Arc<Expr>, vertex: i32) -> Result<R> {
        let key = Arc::as_ptr(e) as usize;
        if let Some((_, v)) = self.nodes.get(&key) {
            return Ok(v.clone());
        }
        let ctx = self.element.ctx().clone();
        let v = match &**e {
            Expr::Leaf(l) => self.minor(l)?,
            Expr::Product(xs) => {
                let mut acc = R::one(&ctx);
                for x in xs {
                    acc = acc.mul(&self.node(x, vertex)?);
                    self.check_size(&acc)?;
                }
                acc
            }
            Expr::Sum(xs) => {
                let mut acc = R::zero(&ctx);
                for x in xs {
                    acc = acc.add(&self.node(x, vertex)?);
                }
                acc
            }
            Expr::Quotient(n, d) => {
                let num = self.node(n, vertex)?;
                let den = self.node(d, vertex)?;
                num.exact_div(&den).map_err(|err| match err {
                    Error::SingularEvaluation { .. } | Error::DivisionByZeroPoly => {
                        Error::SingularEvaluation { vertex: Some(vertex) }
                    }
                    other => other,
                })?
            }
        };
        self.check_size(&v)?;
        self.nodes.insert(key, (Arc::clone(e), v.clone()));
        Ok(v)
    }

    pub fn value(&mut self, var: &ClusterVar, vertex: i32) -> Result<R> {
        self.node(&var.0, vertex)
    }

    /// Values of all variables of `seed`, in report order.
    pub fn seed_values(&mut self, seed: &Seed) -> Result<Vec<(i32, R)>> {
        seed.variables()
            .into_iter()
            .map(|(v, var)| Ok((v, self.value(var, v)?)))
            .collect()
    }
}

/// Every variable of the seed evaluated exactly at `g`.
pub fn evaluate_seed<R: Ring + Measured>(seed: &Seed, g: &GroupElement<R>) -> Result<Vec<(i32, R)>> {
    Evaluator::new(g).seed_values(seed)
}

/// Coordinates for symbolic evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinates {
    /// Type A: the free entries `n_ab` of the unipotent matrices in `N_K`
    /// (entry `(a, b)` vanishes when `a, …, b-1` all lie in `K`).
    MatrixNK,
    /// Parameters `t_1, …, t_r` of `x_{i_1}(t_1) ⋯ x_{i_r}(t_r)` along the
    /// seed's word.
    Params,
}

fn entry_name(a: usize, b: usize, wide: bool) -> String {
    if wide {
        format!("n{a}_{b}")
    } else {
        format!("n{a}{b}")
    }
}

/// Generic element of `N_K` with entries `n_ab` (type A).
pub fn generic_nk_element(group: &Arc<Group>, k: &[usize]) -> Result<GroupElement<MultiPoly>> {
    let rs = group.root_system();
    if rs.family() != Family::A {
        return Err(Error::UnsupportedType(format!(
            "matrix coordinates need type A, not {}",
            rs.name()
        )));
    }
    let size = rs.rank() + 1;
    let wide = size >= 10;
    let free = |a: usize, b: usize| !(a..b).all(|l| k.contains(&l));
    let mut names = Vec::new();
    for a in 1..=size {
        for b in a + 1..=size {
            if free(a, b) {
                names.push(entry_name(a, b, wide));
            }
        }
    }
    let ring = PolyRing::new(names);
    let mut rows = vec![vec![ring.zero(); size]; size];
    for a in 1..=size {
        rows[a - 1][a - 1] = ring.one();
        for b in a + 1..=size {
            if free(a, b) {
                rows[a - 1][b - 1] = ring.var(&entry_name(a, b, wide))?;
            }
        }
    }
    GroupElement::from_matrix(group, ExactMatrix::from_rows(&ring, rows)?)
}

/// Generic `x_{i_1}(t_1) ⋯ x_{i_r}(t_r)` with polynomial variables `t_j`.
pub fn generic_param_element(group: &Arc<Group>, word: &WeylWord) -> Result<GroupElement<MultiPoly>> {
    let ring = PolyRing::new((1..=word.len()).map(|j| format!("t{j}")));
    let params: Vec<MultiPoly> = (0..word.len()).map(|j| ring.var_at(j)).collect();
    GroupElement::from_params(group, &ring, word, &params)
}

/// Every variable of the seed as an explicit polynomial.
pub fn symbolic_seed(seed: &Seed, coords: Coordinates, cap: SizeCap) -> Result<Vec<(i32, MultiPoly)>> {
    let group = Group::new(seed.rs.clone());
    let g = match coords {
        Coordinates::MatrixNK => generic_nk_element(&group, &seed.k)?,
        Coordinates::Params => generic_param_element(&group, &seed.word)?,
    };
    Evaluator::new(&g).with_cap(cap).seed_values(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_seed() -> Seed {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        Seed::initial(&rs, &WeylWord(vec![2, 1, 3, 2, 1, 3]), &[2]).unwrap()
    }

    #[test]
    fn a2_full_flag_seed() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let s = Seed::initial(&rs, &WeylWord(vec![1, 2, 1]), &[]).unwrap();
        assert_eq!(s.quiver().vertices(), &BTreeSet::from([-2, -1, 1]));
        assert_eq!(s.quiver().mutable(), vec![1]);
        assert_eq!(s.quiver().arrows(), vec![(-2, 1, 1), (1, -1, 1)]);
    }

    #[test]
    fn a3_partial_seed_shape() {
        let s = a3_seed();
        assert_eq!(s.quiver().vertices(), &BTreeSet::from([-3, -1, 1, 2, 3]));
        assert_eq!(s.quiver().mutable(), vec![2, 3]);
        assert_eq!(s.quiver().b(2, 3), 0);
        assert_eq!(s.ordered_vertices(), vec![-3, -1, 1, 2, 3]);
        assert_eq!(s.var(1).unwrap().to_string(), "D_{13,34}");
    }

    #[test]
    fn a3_symbolic_and_mutations() {
        let s = a3_seed();
        let polys = symbolic_seed(&s, Coordinates::MatrixNK, SizeCap::default()).unwrap();
        let shown: Vec<String> = polys.iter().map(|(_, p)| p.to_string()).collect();
        assert_eq!(shown.len(), 5);
        let at = |seed: &Seed, v: i32| {
            symbolic_seed(seed, Coordinates::MatrixNK, SizeCap::default())
                .unwrap()
                .into_iter()
                .find(|(w, _)| *w == v)
                .unwrap()
                .1
                .to_string()
        };
        assert_eq!(at(&s.mutate(2).unwrap(), 2), "n13");
        assert_eq!(at(&s.mutate(3).unwrap(), 3), "-n24");
    }

    #[test]
    fn mutation_errors_and_involution() {
        let s = a3_seed();
        assert!(matches!(s.mutate(-1), Err(Error::FrozenVertex(-1))));
        assert!(matches!(s.mutate(9), Err(Error::UnknownVertex(9))));
        let back = s.mutate(2).unwrap().mutate(2).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.history(), &[2, 2]);
    }

    #[test]
    fn type_e_rejected() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        let w = rs.longest_word();
        assert!(matches!(Seed::initial(&rs, &w, &[]), Err(Error::UnsupportedType(_))));
    }
}
