use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, Weight};

use super::clifford;

/// Sparse integer matrix stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, c, v) in entries {
            *acc.entry((r, c)).or_default() += v;
        }
        let mut m = SparseMatrix::zero(dim);
        for ((r, c), v) in acc {
            if v != 0 {
                m.rows[r].push((c, v));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r]
            .iter()
            .find(|(cc, _)| *cc == c)
            .map_or(0, |&(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_entries(self.dim, self.entries().map(|(r, c, v)| (c, r, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.dim]; self.dim];
        for (r, c, v) in self.entries() {
            d[r][c] = v;
        }
        d
    }

    fn from_dense(d: &[Vec<i64>]) -> Self {
        let dim = d.len();
        SparseMatrix::from_entries(
            dim,
            d.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut entries = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &other.rows[k] {
                    entries.push((r, c, a * b));
                }
            }
        }
        SparseMatrix::from_entries(self.dim, entries)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.dim,
            self.entries()
                .chain(other.entries().map(|(r, c, v)| (r, c, -v))),
        )
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    fn permuted(&self, new_of_old: &[usize]) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.dim,
            self.entries()
                .map(|(r, c, v)| (new_of_old[r], new_of_old[c], v)),
        )
    }
}

/// An irreducible fundamental representation `L(ϖ_i)` given by integer
/// matrices of the Chevalley generators in a weight basis.
///
/// The basis is ordered by decreasing height, so raising operators are
/// strictly upper triangular and elements of `N` act unitriangularly. The
/// highest-weight vector is basis vector 0.
#[derive(Debug, Clone)]
pub struct Representation {
    family: Family,
    rank: usize,
    index: usize,
    raising: Vec<SparseMatrix>,
    lowering: Vec<SparseMatrix>,
    weights: Vec<Weight>,
    subsets: Option<Vec<Vec<usize>>>,
}

impl Representation {
    /// Builds `L(ϖ_i)`: exterior powers of the natural representation in
    /// type A; in type D the vector representation for node `n`, exterior
    /// powers of it for the chain nodes `3..n-1`, and half-spin modules
    /// (Clifford construction) for the leaves 1 and 2.
    pub fn build(rs: &RootSystem, i: usize) -> Result<Representation> {
        rs.check_index(i)?;
        let n = rs.rank();
        match rs.family() {
            Family::A => {
                let natural = natural_type_a(rs)?;
                if i == 1 {
                    Ok(natural)
                } else {
                    exterior_power(rs, &natural, i, i)
                }
            }
            Family::D => {
                if i == n {
                    minuscule(rs, n)
                } else if i <= 2 {
                    clifford::half_spin(rs, i)
                } else {
                    let vector = minuscule(rs, n)?;
                    exterior_power(rs, &vector, n + 1 - i, i)
                }
            }
            Family::E => Err(Error::UnsupportedType(format!(
                "{}: representation matrices are only available for types A and D \
                 (type E is supported for root-system combinatorics only)",
                rs.name()
            ))),
        }
    }

    /// Assembles a representation from generator matrices in an arbitrary
    /// basis: computes weights from `[E_j, F_j]`, reorders by height and
    /// locates the highest-weight vector.
    pub(crate) fn from_generators(
        rs: &RootSystem,
        index: usize,
        raising: Vec<SparseMatrix>,
        lowering: Vec<SparseMatrix>,
        subsets: Option<Vec<Vec<usize>>>,
    ) -> Result<Representation> {
        let dim = raising[0].dim();
        let mut weights = vec![Weight::zero(rs.rank()); dim];
        for j in 0..rs.rank() {
            let h = raising[j].commutator(&lowering[j]);
            for (p, w) in weights.iter_mut().enumerate() {
                w.0[j] = h.get(p, p);
            }
        }
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(rs.twice_height(&weights[p])));
        let mut new_of_old = vec![0; dim];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let rep = Representation {
            family: rs.family(),
            rank: rs.rank(),
            index,
            raising: raising.iter().map(|m| m.permuted(&new_of_old)).collect(),
            lowering: lowering.iter().map(|m| m.permuted(&new_of_old)).collect(),
            weights: order.iter().map(|&p| weights[p].clone()).collect(),
            subsets: subsets.map(|s| order.iter().map(|&p| s[p].clone()).collect()),
        };
        if rep.weights[0] != rs.fundamental_weight(index) {
            return Err(Error::UnsupportedType(format!(
                "construction for ϖ_{index} of {} has highest weight {}",
                rs.name(),
                rep.weights[0]
            )));
        }
        Ok(rep)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `E_j` (1-based `j`).
    pub fn e(&self, j: usize) -> &SparseMatrix {
        &self.raising[j - 1]
    }

    /// `F_j` (1-based `j`).
    pub fn f(&self, j: usize) -> &SparseMatrix {
        &self.lowering[j - 1]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn highest_index(&self) -> usize {
        0
    }

    /// For type A: basis vector `p` is `e_S` in `Λ^i C^{n+1}` with `S` 1-based.
    pub fn subsets(&self) -> Option<&[Vec<usize>]> {
        self.subsets.as_deref()
    }

    pub fn subset_position(&self, subset: &[usize]) -> Option<usize> {
        self.subsets.as_ref()?.iter().position(|s| s == subset)
    }

    /// Checks the Chevalley, Serre and highest-weight relations exactly;
    /// returns the list of violations (empty when the module is valid).
    pub fn check_invariants(&self, rs: &RootSystem) -> Vec<String> {
        let mut bad = Vec::new();
        let n = rs.rank();
        for j in 1..=n {
            for k in 1..=n {
                let c = self.e(j).commutator(self.f(k));
                if j != k {
                    if !c.is_zero() {
                        bad.push(format!("[E{j},F{k}] != 0"));
                    }
                } else {
                    let expected = SparseMatrix::from_entries(
                        self.dim(),
                        self.weights
                            .iter()
                            .enumerate()
                            .map(|(p, w)| (p, p, w.0[j - 1])),
                    );
                    if c != expected {
                        bad.push(format!("[E{j},F{j}] is not the weight diagonal"));
                    }
                }
                if j == k {
                    continue;
                }
                for (name, gens) in [("E", &self.raising), ("F", &self.lowering)] {
                    let (x, y) = (&gens[j - 1], &gens[k - 1]);
                    let serre = match rs.a(j, k) {
                        0 => x.commutator(y),
                        -1 => x.commutator(&x.commutator(y)),
                        a => {
                            bad.push(format!("unexpected Cartan entry {a}"));
                            continue;
                        }
                    };
                    if !serre.is_zero() {
                        bad.push(format!("Serre relation fails for {name}{j},{name}{k}"));
                    }
                }
            }
            let alpha = rs.simple_root_weight(j);
            for (r, c, _) in self.e(j).entries() {
                if self.weights[r] != self.weights[c].add(&alpha) {
                    bad.push(format!("E{j} does not raise weight by α{j} at ({r},{c})"));
                }
                if r >= c {
                    bad.push(format!("E{j} is not strictly upper triangular at ({r},{c})"));
                }
            }
            for (r, c, _) in self.f(j).entries() {
                if self.weights[r].add(&alpha) != self.weights[c] {
                    bad.push(format!("F{j} does not lower weight by α{j} at ({r},{c})"));
                }
            }
            let kills = (0..self.dim()).all(|r| self.e(j).get(r, 0) == 0);
            if !kills {
                bad.push(format!("E{j} does not kill the highest-weight vector"));
            }
        }
        let top = rs.fundamental_weight(self.index);
        let count = self.weights.iter().filter(|w| **w == top).count();
        if count != 1 {
            bad.push(format!("weight ϖ{} has multiplicity {count}", self.index));
        }
        if let Some(d) = expected_dimension(rs, self.index) {
            if d != self.dim() {
                bad.push(format!("dimension {} differs from expected {d}", self.dim()));
            }
        }
        bad
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}

/// Dimension of `L(ϖ_i)` for types A and D.
pub fn expected_dimension(rs: &RootSystem, i: usize) -> Option<usize> {
    let n = rs.rank();
    match rs.family() {
        Family::A => Some(binomial(n + 1, i)),
        Family::D if i <= 2 => Some(1 << (n - 1)),
        Family::D => Some(binomial(2 * n, n + 1 - i)),
        Family::E => None,
    }
}

fn natural_type_a(rs: &RootSystem) -> Result<Representation> {
    let dim = rs.rank() + 1;
    let raising: Vec<SparseMatrix> = (1..=rs.rank())
        .map(|j| SparseMatrix::from_entries(dim, [(j - 1, j, 1)]))
        .collect();
    let lowering = raising.iter().map(SparseMatrix::transpose).collect();
    let subsets = (1..=dim).map(|a| vec![a]).collect();
    Representation::from_generators(rs, 1, raising, lowering, Some(subsets))
}

/// Minuscule module on the Weyl orbit of `ϖ_i`, all structure constants 1.
pub(crate) fn minuscule(rs: &RootSystem, i: usize) -> Result<Representation> {
    let orbit = rs.orbit(i)?;
    if orbit.iter().any(|w| w.0.iter().any(|&c| c.abs() > 1)) {
        return Err(Error::UnsupportedType(format!("ϖ_{i} of {} is not minuscule", rs.name())));
    }
    let index_of: HashMap<&Weight, usize> = orbit.iter().enumerate().map(|(p, w)| (w, p)).collect();
    let dim = orbit.len();
    let mut raising = Vec::new();
    for j in 1..=rs.rank() {
        let alpha = rs.simple_root_weight(j);
        let entries = orbit.iter().enumerate().filter(|&(_p, w)| w.0[j - 1] == -1 ).map(|(p, w)| (index_of[&w.add(&alpha)], p, 1));
        raising.push(SparseMatrix::from_entries(dim, entries));
    }
    let lowering = raising.iter().map(SparseMatrix::transpose).collect();
    Representation::from_generators(rs, i, raising, lowering, None)
}

/// `Λ^k` of `base`, generators acting as derivations.
fn exterior_power(
    rs: &RootSystem,
    base: &Representation,
    k: usize,
    index: usize,
) -> Result<Representation> {
    let subsets = k_subsets(base.dim(), k);
    let position: HashMap<&Vec<usize>, usize> =
        subsets.iter().enumerate().map(|(p, s)| (s, p)).collect();
    let lift = |m: &SparseMatrix| {
        let mut entries = Vec::new();
        for (col, s) in subsets.iter().enumerate() {
            for (slot, &a) in s.iter().enumerate() {
                // Column `a` of the base matrix sends e_a to Σ m[b][a] e_b.
                for b in 0..base.dim() {
                    let v = m.get(b, a);
                    if v == 0 || (b != a && s.contains(&b)) {
                        continue;
                    }
                    let mut t = s.clone();
                    t[slot] = b;
                    let between = s
                        .iter()
                        .filter(|&&x| x != a && (x > a.min(b) && x < a.max(b)))
                        .count();
                    t.sort_unstable();
                    let sign = if between % 2 == 0 { 1 } else { -1 };
                    entries.push((position[&t], col, sign * v));
                }
            }
        }
        SparseMatrix::from_entries(subsets.len(), entries)
    };
    let raising: Vec<SparseMatrix> = base.raising.iter().map(lift).collect();
    let lowering: Vec<SparseMatrix> = base.lowering.iter().map(lift).collect();
    let labels = base.subsets.as_ref().map(|base_sets| {
        subsets
            .iter()
            .map(|s| {
                let mut merged: Vec<usize> = s.iter().flat_map(|&p| base_sets[p].clone()).collect();
                merged.sort_unstable();
                merged
            })
            .collect()
    });
    Representation::from_generators(rs, index, raising, lowering, labels)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for x in start..n {
            current.push(x);
            rec(x + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[allow(dead_code)]
pub(crate) fn dense_to_sparse(d: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_dense(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_a2() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let rep = Representation::build(&rs, 1).unwrap();
        assert_eq!(rep.dim(), 3);
        assert_eq!(rep.e(1).to_dense(), vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        assert!(rep.check_invariants(&rs).is_empty());
    }

    #[test]
    fn all_small_fundamentals_are_valid() {
        for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 4), (Family::D, 5)] {
            let rs = RootSystem::new(f, n).unwrap();
            for i in 1..=n {
                let rep = Representation::build(&rs, i).unwrap();
                let bad = rep.check_invariants(&rs);
                assert!(bad.is_empty(), "{f}_{n} ϖ{i}: {bad:?}");
                assert_eq!(Some(rep.dim()), expected_dimension(&rs, i));
            }
        }
    }

    #[test]
    fn d4_dimensions() {
        let rs = RootSystem::new(Family::D, 4).unwrap();
        let dims: Vec<usize> = (1..=4).map(|i| Representation::build(&rs, i).unwrap().dim()).collect();
        assert_eq!(dims, vec![8, 8, 28, 8]);
    }

    #[test]
    fn exterior_subset_labels() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let rep = Representation::build(&rs, 2).unwrap();
        assert_eq!(rep.subsets().unwrap()[0], vec![1, 2]);
        assert_eq!(rep.subsets().unwrap().len(), 6);
        assert!(rep.subset_position(&[3, 4]).is_some());
    }

    #[test]
    fn type_e_rejected() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        match Representation::build(&rs, 1) {
            Err(Error::UnsupportedType(msg)) => assert!(msg.contains("root-system")),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_generator_is_detected() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let mut rep = Representation::build(&rs, 1).unwrap();
        rep.raising[0] = SparseMatrix::from_entries(3, [(0, 1, 2)]);
        assert!(!rep.check_invariants(&rs).is_empty());
    }
}
