//! Cartan data, the Weyl group action on the weight lattice, and the index
//! combinatorics of reduced words.
//!
//! Weights are stored in the fundamental-weight basis (`λ(h_j)` is the j-th
//! coordinate) and roots in the simple-root basis. Letters and fundamental
//! indices are 1-based throughout.
//!
//! A word `(i_1, …, i_m)` acts by `w(λ) = s_{i_1}(s_{i_2}(⋯ s_{i_m}(λ)))`;
//! every other module relies on this convention.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::UnsupportedType(format!(
                "family {other:?} (only the simply-laced families A, D, E are supported)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A word in the simple reflections, letters in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word of the inverse element.
    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> WeylWord {
        WeylWord(self.0[..len].to_vec())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(WeylWord::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?} in word")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

/// Length of the product of a word and whether the word is reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordStatus {
    pub length: usize,
    pub is_reduced: bool,
}

/// Cartan data of a simply-laced root system.
///
/// Type D is labeled so that vertices 1 and 2 are the two spin leaves
/// attached to vertex 3, followed by the chain `3 - 4 - ⋯ - n`; the vector
/// node is `n`. For `D_4` the central vertex is therefore 3. Type E uses the
/// Bourbaki labeling (`2` attached to `4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match (family, rank) {
            (Family::A, n) if n >= 1 => (1..n).map(|i| (i, i + 1)).collect(),
            (Family::D, n) if n >= 4 => {
                let mut e = vec![(1, 3), (2, 3)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
            (Family::E, n) if (6..=8).contains(&n) => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
            (f, n) => return Err(Error::UnsupportedType(format!("{f}_{n}"))),
        };
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in edges {
            cartan[i - 1][j - 1] = -1;
            cartan[j - 1][i - 1] = -1;
        }
        let positive_roots = generate_positive_roots(&cartan);
        let mut two_rho = vec![0i64; rank];
        for root in &positive_roots {
            for (acc, c) in two_rho.iter_mut().zip(root) {
                *acc += c;
            }
        }
        Ok(RootSystem {
            family,
            rank,
            cartan,
            positive_roots,
            two_rho,
        })
    }

    /// Parses the family name first, so `("B", 2)` reports `UnsupportedType`.
    pub fn build(family: &str, rank: usize) -> Result<Self> {
        RootSystem::new(family.parse()?, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}_{}", self.family, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `a_{ij}` with 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `ℓ(w_0)`, the number of positive roots.
    pub fn longest_length(&self) -> usize {
        self.positive_roots.len()
    }

    /// `2ρ` in simple-root coordinates.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, word: &WeylWord) -> Result<()> {
        word.letters().iter().try_for_each(|&i| self.check_index(i))
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank);
        w.0[i - 1] = 1;
        w
    }

    /// `α_i` in fundamental-weight coordinates (row `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight(self.cartan[i - 1].clone())
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let mut w = vec![0i64; self.rank];
        for (j, c) in root.iter().enumerate() {
            if *c != 0 {
                for (acc, a) in w.iter_mut().zip(&self.cartan[j]) {
                    *acc += c * a;
                }
            }
        }
        Weight(w)
    }

    /// `2⟨λ, ρ^∨⟩`; strictly increases along every raising operator.
    pub fn twice_height(&self, weight: &Weight) -> i64 {
        // ⟨λ, ρ^∨⟩ = Σ_j λ_j ⟨ϖ_j, ρ^∨⟩ and ⟨ϖ_j, ρ^∨⟩ is the j-th root coordinate of ρ
        // (simply laced), so the factor 2 keeps everything integral.
        weight.0.iter().zip(&self.two_rho).map(|(l, r)| l * r).sum()
    }

    /// `s_i(λ) = λ − λ(h_i) α_i`.
    pub fn reflect(&self, i: usize, weight: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        Ok(self.reflect_unchecked(i, weight))
    }

    fn reflect_unchecked(&self, i: usize, weight: &Weight) -> Weight {
        let c = weight.0[i - 1];
        if c == 0 {
            return weight.clone();
        }
        Weight(
            weight
                .0
                .iter()
                .zip(&self.cartan[i - 1])
                .map(|(l, a)| l - c * a)
                .collect(),
        )
    }

    pub fn apply_word(&self, word: &WeylWord, weight: &Weight) -> Result<Weight> {
        self.check_word(word)?;
        Ok(word
            .letters()
            .iter()
            .rev()
            .fold(weight.clone(), |w, &i| self.reflect_unchecked(i, &w)))
    }

    fn reflect_root(&self, i: usize, root: &mut [i64]) {
        let pairing: i64 = root
            .iter()
            .zip(&self.cartan[i - 1])
            .map(|(b, a)| b * a)
            .sum();
        root[i - 1] -= pairing;
    }

    fn apply_word_to_root(&self, word: &[usize], root: &[i64]) -> Vec<i64> {
        let mut r = root.to_vec();
        for &i in word.iter().rev() {
            self.reflect_root(i, &mut r);
        }
        r
    }

    /// Length of the product and whether the word is reduced.
    pub fn word_status(&self, word: &WeylWord) -> Result<WordStatus> {
        self.check_word(word)?;
        let length = self
            .positive_roots
            .iter()
            .filter(|root| {
                self.apply_word_to_root(word.letters(), root)
                    .iter()
                    .any(|&c| c < 0)
            })
            .count();
        Ok(WordStatus {
            length,
            is_reduced: length == word.len(),
        })
    }

    /// Two words represent the same Weyl group element iff they move `ρ`
    /// to the same weight (ρ is regular).
    pub fn same_element(&self, a: &WeylWord, b: &WeylWord) -> Result<bool> {
        let rho = Weight(vec![1; self.rank]);
        Ok(self.apply_word(a, &rho)? == self.apply_word(b, &rho)?)
    }

    pub fn is_reduced_longest(&self, word: &WeylWord) -> Result<bool> {
        Ok(word.len() == self.longest_length() && self.word_status(word)?.is_reduced)
    }

    fn check_subset(&self, k: &[usize]) -> Result<BTreeSet<usize>> {
        k.iter().try_for_each(|&i| self.check_index(i))?;
        Ok(k.iter().copied().collect())
    }

    /// `ℓ(w_0^K)`: the number of positive roots supported on `K`.
    pub fn parabolic_length(&self, k: &[usize]) -> Result<usize> {
        let k = self.check_subset(k)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|root| {
                root.iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || k.contains(&(j + 1)))
            })
            .count())
    }

    /// Extends `word` greedily with letters from `allowed` (smallest first)
    /// while the length grows; the result is reduced for the longest element
    /// of the parabolic subgroup on `allowed` times whatever `word` was.
    fn greedy_extend(&self, word: &mut Vec<usize>, allowed: &BTreeSet<usize>) {
        'grow: loop {
            for &i in allowed {
                let mut alpha = vec![0i64; self.rank];
                alpha[i - 1] = 1;
                // ℓ(w s_i) > ℓ(w) iff w(α_i) > 0.
                if self
                    .apply_word_to_root(word, &alpha)
                    .iter()
                    .all(|&c| c >= 0)
                {
                    word.push(i);
                    continue 'grow;
                }
            }
            break;
        }
    }

    /// A reduced word for `w_0^K`.
    pub fn parabolic_longest_word(&self, k: &[usize]) -> Result<WeylWord> {
        let k = self.check_subset(k)?;
        let mut word = Vec::new();
        self.greedy_extend(&mut word, &k);
        Ok(WeylWord(word))
    }

    /// A reduced word for `w_0` whose first `ℓ(w_0^K)` letters form a reduced
    /// word for `w_0^K`.
    pub fn adapted_longest_word(&self, k: &[usize]) -> Result<WeylWord> {
        let k = self.check_subset(k)?;
        let mut word = Vec::new();
        self.greedy_extend(&mut word, &k);
        let all: BTreeSet<usize> = (1..=self.rank).collect();
        self.greedy_extend(&mut word, &all);
        Ok(WeylWord(word))
    }

    pub fn longest_word(&self) -> WeylWord {
        self.adapted_longest_word(&[]).expect("empty K is always valid")
    }

    /// Whether `word` is in `R(w_0, K)`.
    pub fn is_adapted(&self, word: &WeylWord, k: &[usize]) -> Result<bool> {
        if !self.is_reduced_longest(word)? {
            return Ok(false);
        }
        let r_k = self.parabolic_length(k)?;
        let prefix = word.prefix(r_k);
        let target = self.parabolic_longest_word(k)?;
        self.same_element(&prefix, &target)
    }

    /// `i*` with `w_0(ϖ_i) = −ϖ_{i*}`.
    pub fn diagram_flip(&self, i: usize) -> Result<usize> {
        let image = self.apply_word(&self.longest_word(), &self.fundamental_weight(i))?;
        image
            .0
            .iter()
            .position(|&c| c == -1)
            .map(|p| p + 1)
            .ok_or_else(|| Error::Parse("w_0 does not map ϖ_i to minus a fundamental weight".into()))
    }

    /// A reduced word for the shortest `u` with `u(ϖ_i) = target`, or `None`
    /// when `target` is not in the orbit of `ϖ_i`.
    pub fn word_for_weight(&self, i: usize, target: &Weight) -> Result<Option<WeylWord>> {
        self.check_index(i)?;
        let goal = self.fundamental_weight(i);
        let mut current = target.clone();
        let mut letters = Vec::new();
        // Raise step by step; each raising reflection lengthens the word by one.
        while current != goal {
            match current.0.iter().position(|&c| c < 0) {
                Some(p) => {
                    letters.push(p + 1);
                    current = self.reflect_unchecked(p + 1, &current);
                }
                None => return Ok(None),
            }
        }
        Ok(Some(WeylWord(letters)))
    }

    /// The Weyl orbit of `ϖ_i`, in breadth-first order from `ϖ_i`.
    pub fn orbit(&self, i: usize) -> Result<Vec<Weight>> {
        self.check_index(i)?;
        let start = self.fundamental_weight(i);
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut out = vec![start.clone()];
        seen.insert(start);
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for j in 1..=self.rank {
                let r = self.reflect_unchecked(j, &w);
                if seen.insert(r.clone()) {
                    out.push(r);
                }
            }
        }
        Ok(out)
    }

    /// Full index combinatorics of a reduced word for `w_0`, including the
    /// data attached to `K` (pass an empty `K` for the full flag variety).
    pub fn word_indexing(&self, word: &WeylWord, k: &[usize]) -> Result<WordIndexing> {
        self.check_word(word)?;
        if !self.is_reduced_longest(word)? {
            return Err(Error::NotReduced {
                word: word.0.clone(),
            });
        }
        if !self.is_adapted(word, k)? {
            return Err(Error::NotAdapted {
                word: word.0.clone(),
                k: k.to_vec(),
            });
        }
        let n = self.rank;
        let r = word.len();
        let letters = word.letters();

        let mut last = vec![0usize; n];
        for (p, &l) in letters.iter().enumerate() {
            last[l - 1] = p + 1;
        }
        let last_set: BTreeSet<usize> = last.iter().copied().collect();
        let mutable: BTreeSet<i32> = (1..=r)
            .filter(|p| !last_set.contains(p))
            .map(|p| p as i32)
            .collect();

        let mut k_minus = Vec::with_capacity(r);
        let mut k_plus = vec![None; r];
        let mut previous: Vec<Option<usize>> = vec![None; n];
        for (p, &l) in letters.iter().enumerate() {
            let pos = p + 1;
            match previous[l - 1] {
                Some(prev) => {
                    k_minus.push(prev as i32);
                    k_plus[prev - 1] = Some(pos);
                }
                None => k_minus.push(-(l as i32)),
            }
            previous[l - 1] = Some(pos);
        }

        let kset = self.check_subset(k)?;
        let r_k = self.parabolic_length(k)?;
        let mut t_k = Vec::with_capacity(n);
        for l in 1..=n {
            if kset.contains(&l) {
                let t = letters[..r_k]
                    .iter()
                    .rposition(|&x| x == l)
                    .map(|p| p as i32 + 1)
                    .ok_or_else(|| Error::NotAdapted {
                        word: word.0.clone(),
                        k: k.to_vec(),
                    })?;
                t_k.push(t);
            } else {
                t_k.push(-(l as i32));
            }
        }
        let frozen: BTreeSet<i32> = t_k.iter().copied().collect();
        let kept_mutable: BTreeSet<i32> = mutable
            .iter()
            .copied()
            .filter(|&m| m as usize > r_k)
            .collect();

        Ok(WordIndexing {
            word: word.clone(),
            rank: n,
            last,
            mutable,
            k_minus,
            k_plus,
            k: kset.into_iter().collect(),
            r_k,
            t_k,
            frozen,
            kept_mutable,
        })
    }
}

/// Closure of the simple roots under simple reflections, keeping positive roots.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut head = 0;
    while head < roots.len() {
        let root = roots[head].clone();
        head += 1;
        for i in 0..n {
            let pairing: i64 = root.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
            let mut image = root.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && seen.insert(image.clone()) {
                roots.push(image);
            }
        }
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

/// The combinatorics of a reduced word `i ∈ R(w_0, K)`.
///
/// Positions are 1-based; the virtual positions `−j` (`j ∈ I`) carry letter
/// `j` and precede position 1 in ascending numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordIndexing {
    word: WeylWord,
    rank: usize,
    last: Vec<usize>,
    mutable: BTreeSet<i32>,
    k_minus: Vec<i32>,
    k_plus: Vec<Option<usize>>,
    k: Vec<usize>,
    r_k: usize,
    t_k: Vec<i32>,
    frozen: BTreeSet<i32>,
    kept_mutable: BTreeSet<i32>,
}

impl WordIndexing {
    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `t_l`, the right-most position carrying letter `l`.
    pub fn last_position(&self, l: usize) -> usize {
        self.last[l - 1]
    }

    /// `e(i)`: positions that are not a last occurrence.
    pub fn e(&self) -> &BTreeSet<i32> {
        &self.mutable
    }

    /// `k^-` for `k = 1..=r`; first occurrences map to minus their letter.
    pub fn k_minus(&self, k: usize) -> i32 {
        self.k_minus[k - 1]
    }

    /// Next position with the same letter, if any.
    pub fn k_plus(&self, k: usize) -> Option<usize> {
        self.k_plus[k - 1]
    }

    pub fn k_minus_image(&self) -> BTreeSet<i32> {
        self.k_minus.iter().copied().collect()
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    /// `r_K = ℓ(w_0^K)`.
    pub fn r_k(&self) -> usize {
        self.r_k
    }

    /// `t_l^{(K)}`.
    pub fn t_k(&self, l: usize) -> i32 {
        self.t_k[l - 1]
    }

    /// `I_K`, the frozen vertices of the seed attached to `(i, K)`.
    pub fn i_k(&self) -> &BTreeSet<i32> {
        &self.frozen
    }

    /// `e_K(i)`, the mutable vertices of the seed attached to `(i, K)`.
    pub fn e_k(&self) -> &BTreeSet<i32> {
        &self.kept_mutable
    }

    /// `I_K ∪ e_K(i)`.
    pub fn kept_vertices(&self) -> BTreeSet<i32> {
        self.frozen.union(&self.kept_mutable).copied().collect()
    }

    /// `−I ∪ e(i)`.
    pub fn full_vertices(&self) -> BTreeSet<i32> {
        (1..=self.rank as i32)
            .map(|j| -j)
            .chain(self.mutable.iter().copied())
            .collect()
    }

    /// Letter at a position of the extended word.
    pub fn letter(&self, pos: i32) -> usize {
        if pos < 0 {
            (-pos) as usize
        } else {
            self.word.0[pos as usize - 1]
        }
    }

    /// Next position of the extended word carrying the same letter.
    pub fn next_occurrence(&self, pos: i32) -> Option<i32> {
        if pos < 0 {
            let l = (-pos) as usize;
            self.word
                .0
                .iter()
                .position(|&x| x == l)
                .map(|p| p as i32 + 1)
        } else {
            self.k_plus[pos as usize - 1].map(|p| p as i32)
        }
    }

    /// `u_m = s_{i_1} ⋯ s_{i_m}` (empty for virtual positions).
    pub fn prefix_word(&self, pos: i32) -> WeylWord {
        if pos <= 0 {
            WeylWord::empty()
        } else {
            self.word.prefix(pos as usize)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RootSystem {
        RootSystem::new(Family::A, n).unwrap()
    }

    fn d4() -> RootSystem {
        RootSystem::new(Family::D, 4).unwrap()
    }

    #[test]
    fn cartan_and_root_counts() {
        assert_eq!(
            a(3).cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        assert_eq!(a(3).longest_length(), 6);
        let d = d4();
        for (i, j) in [(1, 3), (2, 3), (4, 3)] {
            assert_eq!(d.a(i, j), -1);
        }
        assert_eq!(d.a(1, 2), 0);
        assert_eq!(d.a(1, 4), 0);
        assert_eq!(d.a(2, 4), 0);
        assert_eq!(d.longest_length(), 12);
        for (f, n, count) in [
            (Family::A, 5, 15),
            (Family::D, 5, 20),
            (Family::D, 6, 30),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ] {
            let rs = RootSystem::new(f, n).unwrap();
            assert_eq!(rs.longest_length(), count, "{f}_{n}");
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(rs.cartan()[i][j], rs.cartan()[j][i]);
                }
            }
        }
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(RootSystem::build("B", 2), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::build("G", 2), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Family::D, 3), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Family::E, 5), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(Family::A, 0), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn reflect_examples() {
        let rs = a(2);
        assert_eq!(rs.reflect(1, &rs.fundamental_weight(1)).unwrap(), Weight(vec![-1, 1]));
        assert_eq!(rs.reflect(2, &rs.fundamental_weight(1)).unwrap(), rs.fundamental_weight(1));
        assert!(matches!(rs.reflect(3, &Weight(vec![0, 0])), Err(Error::IndexOutOfRange { .. })));

        // Oracle: α_3 expanded through Cartan row 3.
        let d = d4();
        let alpha3 = Weight(d.cartan()[2].clone());
        let expected = d.fundamental_weight(3).sub(&alpha3);
        assert_eq!(expected, Weight(vec![1, 1, -1, 1]));
        assert_eq!(d.reflect(3, &d.fundamental_weight(3)).unwrap(), expected);
    }

    #[test]
    fn apply_word_examples() {
        let rs = a(2);
        let w1 = rs.fundamental_weight(1);
        assert_eq!(rs.apply_word(&WeylWord::empty(), &w1).unwrap(), w1);
        let two_steps = rs.reflect(1, &rs.reflect(2, &w1).unwrap()).unwrap();
        assert_eq!(rs.apply_word(&WeylWord(vec![1, 2]), &w1).unwrap(), two_steps);
        // s_2 fixes ϖ_1, so only s_1 moves it.
        assert_eq!(two_steps, w1.sub(&rs.simple_root_weight(1)));
        let expect = w1
            .sub(&rs.simple_root_weight(1))
            .sub(&rs.simple_root_weight(2));
        assert_eq!(rs.apply_word(&WeylWord(vec![2, 1]), &w1).unwrap(), expect);

        let rs3 = a(3);
        let w0 = rs3.longest_word();
        assert_eq!(
            rs3.apply_word(&w0, &rs3.fundamental_weight(1)).unwrap(),
            rs3.fundamental_weight(3).neg()
        );
        assert_eq!(rs3.diagram_flip(1).unwrap(), 3);
        assert_eq!(d4().diagram_flip(1).unwrap(), 1);
    }

    #[test]
    fn word_status_examples() {
        let s = a(3).word_status(&WeylWord(vec![2, 1, 3, 2, 1, 3])).unwrap();
        assert_eq!(s, WordStatus { length: 6, is_reduced: true });
        let s = a(2).word_status(&WeylWord(vec![1, 1])).unwrap();
        assert_eq!(s, WordStatus { length: 0, is_reduced: false });
        let s = d4()
            .word_status(&WeylWord(vec![1, 2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 4]))
            .unwrap();
        assert_eq!(s, WordStatus { length: 12, is_reduced: true });
    }

    #[test]
    fn adapted_words() {
        let rs = a(3);
        let w = rs.adapted_longest_word(&[2]).unwrap();
        assert_eq!(w.0[0], 2);
        assert!(rs.is_adapted(&w, &[2]).unwrap());
        assert!(rs.is_adapted(&WeylWord(vec![2, 1, 3, 2, 1, 3]), &[2]).unwrap());
        assert!(!rs.is_adapted(&WeylWord(vec![1, 2, 1, 3, 2, 1]), &[2]).unwrap());

        let w = a(2).adapted_longest_word(&[]).unwrap();
        assert_eq!(w.len(), 3);
        assert!(a(2).is_reduced_longest(&w).unwrap());

        let d = d4();
        let w = d.adapted_longest_word(&[1, 2, 3]).unwrap();
        assert!(d.is_adapted(&w, &[1, 2, 3]).unwrap());
        assert_eq!(d.parabolic_length(&[1, 2, 3]).unwrap(), 6);
        assert!(d
            .is_adapted(&WeylWord(vec![1, 2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 4]), &[1, 2, 3])
            .unwrap());

        let all = d.adapted_longest_word(&[1, 2, 3, 4]).unwrap();
        assert!(d.is_adapted(&all, &[1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn indexing_a3() {
        let rs = a(3);
        let ix = rs
            .word_indexing(&WeylWord(vec![2, 1, 3, 2, 1, 3]), &[2])
            .unwrap();
        assert_eq!((ix.last_position(1), ix.last_position(2), ix.last_position(3)), (5, 4, 6));
        assert_eq!(ix.e(), &BTreeSet::from([1, 2, 3]));
        assert_eq!(ix.i_k(), &BTreeSet::from([-1, 1, -3]));
        assert_eq!(ix.e_k(), &BTreeSet::from([2, 3]));
        assert_eq!(ix.kept_vertices().len(), 5);
    }

    #[test]
    fn k_minus_by_direct_scan() {
        let rs = a(3);
        let word = WeylWord(vec![2, 1, 3, 2, 1, 3]);
        let ix = rs.word_indexing(&word, &[]).unwrap();
        // Direct scan of k^- = max({-i_k} ∪ {s < k : i_s = i_k}).
        let scan: Vec<i32> = (0..word.len())
            .map(|k| {
                let mut best = -(word.0[k] as i32);
                for s in 0..k {
                    if word.0[s] == word.0[k] {
                        best = best.max(s as i32 + 1);
                    }
                }
                best
            })
            .collect();
        assert_eq!(scan, vec![-2, -1, -3, 1, 2, 3]);
        let got: Vec<i32> = (1..=6).map(|k| ix.k_minus(k)).collect();
        assert_eq!(got, scan);
        assert_eq!(ix.k_minus_image(), ix.full_vertices());
        assert_eq!(ix.k_plus(1), Some(4));
        assert_eq!(ix.k_plus(4), None);
    }

    #[test]
    fn indexing_d4() {
        let d = d4();
        let ix = d
            .word_indexing(&WeylWord(vec![1, 2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 4]), &[1, 2, 3])
            .unwrap();
        assert_eq!(ix.e(), &(1..=8).collect::<BTreeSet<i32>>());
        assert_eq!(ix.i_k(), &BTreeSet::from([-4, 4, 5, 6]));
        assert_eq!(ix.e_k(), &BTreeSet::from([7, 8]));
        assert_eq!(ix.r_k(), 6);
    }

    #[test]
    fn indexing_errors() {
        let rs = a(3);
        assert!(matches!(
            rs.word_indexing(&WeylWord(vec![1, 1, 2, 3, 2, 1]), &[]),
            Err(Error::NotReduced { .. })
        ));
        assert!(matches!(
            rs.word_indexing(&WeylWord(vec![1, 2, 1, 3, 2, 1]), &[2]),
            Err(Error::NotAdapted { .. })
        ));
    }

    #[test]
    fn word_for_weight_roundtrip() {
        let d = d4();
        for i in 1..=4 {
            for target in d.orbit(i).unwrap() {
                let u = d.word_for_weight(i, &target).unwrap().unwrap();
                assert!(d.word_status(&u).unwrap().is_reduced);
                assert_eq!(d.apply_word(&u, &d.fundamental_weight(i)).unwrap(), target);
            }
        }
        assert_eq!(d.orbit(4).unwrap().len(), 8);
        assert_eq!(d.orbit(3).unwrap().len(), 24);
        assert!(d.word_for_weight(1, &Weight(vec![0, 0, 0, 0])).unwrap().is_none());
    }

    #[test]
    fn word_parse() {
        assert_eq!("2,1,3".parse::<WeylWord>().unwrap(), WeylWord(vec![2, 1, 3]));
        assert_eq!("(1, 2)".parse::<WeylWord>().unwrap(), WeylWord(vec![1, 2]));
        assert_eq!("".parse::<WeylWord>().unwrap(), WeylWord::empty());
        assert!("1,x".parse::<WeylWord>().is_err());
    }
}
