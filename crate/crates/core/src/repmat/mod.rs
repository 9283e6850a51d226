//! Fundamental representations, group elements of `N` (and of `G` through
//! one-parameter factors), Weyl representatives and generalized minors.
//!
//! Elements are kept as products of factors and applied to vectors one
//! factor at a time, so a minor costs a handful of sparse matrix-vector
//! products rather than a dense product in every representation.

mod clifford;
mod representation;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

pub use representation::{expected_dimension, Representation, SparseMatrix};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Rational, Ring};
use crate::rootsys::{Family, RootSystem, Weight, WeylWord};

/// Which nilpotent generator a one-parameter subgroup exponentiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `x_i(t) = exp(t E_i)`
    E,
    /// `y_i(t) = exp(t F_i)`
    F,
}

/// A root system together with its lazily built fundamental representations.
#[derive(Debug)]
pub struct Group {
    rs: RootSystem,
    reps: Vec<OnceLock<Result<Arc<Representation>>>>,
}

impl Group {
    pub fn new(rs: RootSystem) -> Arc<Group> {
        let reps = (0..rs.rank()).map(|_| OnceLock::new()).collect();
        Arc::new(Group { rs, reps })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// `L(ϖ_i)`, built on first use.
    pub fn rep(&self, i: usize) -> Result<Arc<Representation>> {
        self.rs.check_index(i)?;
        self.reps[i - 1]
            .get_or_init(|| Representation::build(&self.rs, i).map(Arc::new))
            .clone()
    }
}

#[derive(Debug, Clone)]
enum Factor<R: Ring> {
    OneParam { index: usize, generator: Generator, t: R },
    Natural(Arc<ExactMatrix<R>>),
}

/// Cached action of natural-matrix factors on `Λ^i`, keyed by factor and `i`.
type ExteriorCache<R> = Mutex<HashMap<(usize, usize), Arc<ExactMatrix<R>>>>;

/// An element of `G` stored as an ordered product of factors.
pub struct GroupElement<R: Ring> {
    group: Arc<Group>,
    ctx: R::Ctx,
    factors: Vec<Factor<R>>,
    exterior: ExteriorCache<R>,
}

impl<R: Ring> Clone for GroupElement<R> {
    fn clone(&self) -> Self {
        GroupElement {
            group: Arc::clone(&self.group),
            ctx: self.ctx.clone(),
            factors: self.factors.clone(),
            exterior: Mutex::new(HashMap::new()),
        }
    }
}

impl<R: Ring> fmt::Debug for GroupElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupElement")
            .field("group", &self.group.rs.name())
            .field("factors", &self.factors)
            .finish()
    }
}

impl<R: Ring> GroupElement<R> {
    pub fn identity(group: &Arc<Group>, ctx: &R::Ctx) -> Self {
        GroupElement {
            group: Arc::clone(group),
            ctx: ctx.clone(),
            factors: Vec::new(),
            exterior: Mutex::new(HashMap::new()),
        }
    }

    /// `x_{i_1}(t_1) ⋯ x_{i_k}(t_k)`.
    pub fn from_params(group: &Arc<Group>, ctx: &R::Ctx, word: &WeylWord, params: &[R]) -> Result<Self> {
        group.rs.check_word(word)?;
        if word.len() != params.len() {
            return Err(Error::LengthMismatch {
                expected: word.len(),
                got: params.len(),
            });
        }
        let mut g = Self::identity(group, ctx);
        g.factors = word
            .letters()
            .iter()
            .zip(params)
            .map(|(&index, t)| Factor::OneParam {
                index,
                generator: Generator::E,
                t: t.clone(),
            })
            .collect();
        Ok(g)
    }

    /// Type A only: the element of `N` whose natural-representation matrix
    /// is `m`.
    pub fn from_matrix(group: &Arc<Group>, m: ExactMatrix<R>) -> Result<Self> {
        let rs = &group.rs;
        if rs.family() != Family::A {
            return Err(Error::UnsupportedType(format!(
                "matrix input is only defined for type A, not {}",
                rs.name()
            )));
        }
        let size = rs.rank() + 1;
        if m.rows() != m.cols() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() != size {
            return Err(Error::LengthMismatch {
                expected: size,
                got: m.rows(),
            });
        }
        if !m.is_upper_unitriangular() {
            return Err(Error::NotUnitriangular(
                "expected ones on the diagonal and zeros below it".into(),
            ));
        }
        let mut g = Self::identity(group, &m.ctx().clone());
        g.factors.push(Factor::Natural(Arc::new(m)));
        Ok(g)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    /// `x_k(t)·self` or `y_k(t)·self`.
    pub fn left_mul(&self, k: usize, generator: Generator, t: R) -> Result<Self> {
        self.group.rs.check_index(k)?;
        let mut g = self.clone();
        g.factors.insert(0, Factor::OneParam { index: k, generator, t });
        Ok(g)
    }

    /// Group product `self·other`.
    pub fn mul(&self, other: &GroupElement<R>) -> Self {
        let mut g = self.clone();
        g.factors.extend(other.factors.iter().cloned());
        g
    }

    /// `self·v` in `L(ϖ_i)`.
    pub fn apply(&self, i: usize, v: &[R]) -> Result<Vec<R>> {
        let rep = self.group.rep(i)?;
        if v.len() != rep.dim() {
            return Err(Error::LengthMismatch {
                expected: rep.dim(),
                got: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (pos, factor) in self.factors.iter().enumerate().rev() {
            out = match factor {
                Factor::OneParam { index, generator, t } => {
                    let gen = match generator {
                        Generator::E => rep.e(*index),
                        Generator::F => rep.f(*index),
                    };
                    apply_exp(gen, t, &out, false)
                }
                Factor::Natural(m) => self.exterior_matrix(pos, m, &rep)?.mul_vec(&out)?,
            };
        }
        Ok(out)
    }

    /// Full matrix of the element in `L(ϖ_i)`.
    pub fn matrix(&self, i: usize) -> Result<ExactMatrix<R>> {
        let dim = self.group.rep(i)?.dim();
        let mut m = ExactMatrix::zeros(&self.ctx, dim, dim);
        for col in 0..dim {
            let image = self.apply(i, &basis_vector(&self.ctx, dim, col))?;
            for (row, x) in image.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        Ok(m)
    }

    fn exterior_matrix(
        &self,
        pos: usize,
        natural: &ExactMatrix<R>,
        rep: &Representation,
    ) -> Result<Arc<ExactMatrix<R>>> {
        let key = (pos, rep.index());
        if let Some(m) = self.exterior.lock().expect("cache poisoned").get(&key) {
            return Ok(Arc::clone(m));
        }
        let subsets = rep
            .subsets()
            .ok_or_else(|| Error::UnsupportedType("matrix factor outside type A".into()))?;
        let idx: Vec<Vec<usize>> = subsets
            .iter()
            .map(|s| s.iter().map(|a| a - 1).collect())
            .collect();
        let mut out = ExactMatrix::zeros(&self.ctx, idx.len(), idx.len());
        for (p, rows) in idx.iter().enumerate() {
            for (q, cols) in idx.iter().enumerate() {
                out.set(p, q, natural.submatrix(rows, cols).det()?);
            }
        }
        let out = Arc::new(out);
        self.exterior
            .lock()
            .expect("cache poisoned")
            .insert(key, Arc::clone(&out));
        Ok(out)
    }
}

fn basis_vector<R: Ring>(ctx: &R::Ctx, dim: usize, p: usize) -> Vec<R> {
    let mut v = vec![R::zero(ctx); dim];
    v[p] = R::one(ctx);
    v
}

fn times_int<R: Ring>(x: &R, k: i64) -> R {
    match k {
        1 => x.clone(),
        -1 => x.neg(),
        k => x.scale(&Rational::from_integer(k.into())),
    }
}

/// `gen·v`, or `genᵀ·v` when `transposed`.
fn apply_sparse<R: Ring>(gen: &SparseMatrix, v: &[R], transposed: bool) -> Vec<R> {
    let ctx = v[0].ctx();
    let mut out = vec![R::zero(&ctx); v.len()];
    for (r, c, k) in gen.entries() {
        let (to, from) = if transposed { (c, r) } else { (r, c) };
        if !v[from].is_zero() {
            out[to] = out[to].add(&times_int(&v[from], k));
        }
    }
    out
}

/// `exp(t·gen)·v` by the terminating power series.
fn apply_exp<R: Ring>(gen: &SparseMatrix, t: &R, v: &[R], transposed: bool) -> Vec<R> {
    if t.is_zero() || v.is_empty() {
        return v.to_vec();
    }
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    for k in 1.. {
        term = apply_sparse(gen, &term, transposed);
        if term.iter().all(Ring::is_zero) {
            break;
        }
        let inv = Rational::new(1.into(), (k as i64).into());
        for x in term.iter_mut() {
            *x = x.mul(t).scale(&inv);
        }
        for (o, x) in out.iter_mut().zip(&term) {
            *o = o.add(x);
        }
    }
    out
}

/// `x_i(t)` (generator `E`) or `y_i(t)` (generator `F`) as a matrix on `rep`.
pub fn one_param<R: Ring>(rep: &Representation, i: usize, t: &R, generator: Generator) -> Result<ExactMatrix<R>> {
    if i == 0 || i > rep.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rep.rank(),
        });
    }
    let ctx = t.ctx();
    let gen = match generator {
        Generator::E => rep.e(i),
        Generator::F => rep.f(i),
    };
    let dim = rep.dim();
    let mut m = ExactMatrix::zeros(&ctx, dim, dim);
    for col in 0..dim {
        let image = apply_exp(gen, t, &basis_vector(&ctx, dim, col), false);
        for (row, x) in image.into_iter().enumerate() {
            m.set(row, col, x);
        }
    }
    Ok(m)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(s̄_i, s̿_i) = (x_i(-1) y_i(1) x_i(-1), x_i(1) y_i(-1) x_i(1))` on `rep`.
pub fn weyl_reps(rep: &Representation, i: usize) -> Result<(ExactMatrix<Rational>, ExactMatrix<Rational>)> {
    let x = |t: i64| one_param(rep, i, &q(t), Generator::E);
    let y = |t: i64| one_param(rep, i, &q(t), Generator::F);
    let sbar = x(-1)?.mul(&y(1)?)?.mul(&x(-1)?)?;
    let sdbar = x(1)?.mul(&y(-1)?)?.mul(&x(1)?)?;
    Ok((sbar, sdbar))
}

fn apply_sbar(rep: &Representation, j: usize, v: Vec<Rational>) -> Vec<Rational> {
    let v = apply_exp(rep.e(j), &q(-1), &v, false);
    let v = apply_exp(rep.f(j), &q(1), &v, false);
    apply_exp(rep.e(j), &q(-1), &v, false)
}

fn apply_sdbar_transposed(rep: &Representation, j: usize, v: Vec<Rational>) -> Vec<Rational> {
    let v = apply_exp(rep.e(j), &q(1), &v, true);
    let v = apply_exp(rep.f(j), &q(-1), &v, true);
    apply_exp(rep.e(j), &q(1), &v, true)
}

/// Label of the generalized minor `Δ_{uϖ_i, vϖ_i}`. Equality only depends
/// on `i`, `uϖ_i` and `vϖ_i`, not on the words chosen.
#[derive(Debug, Clone)]
pub struct MinorLabel {
    index: usize,
    u: WeylWord,
    v: WeylWord,
    u_weight: Weight,
    v_weight: Weight,
    display: String,
}

impl PartialEq for MinorLabel {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for MinorLabel {}

impl Hash for MinorLabel {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Display for MinorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display)
    }
}

/// Image of `{1..i}` under the permutation of the word (type A).
fn permuted_initial_set(word: &WeylWord, i: usize) -> Vec<usize> {
    let mut set: Vec<usize> = (1..=i)
        .map(|mut x| {
            for &j in word.letters().iter().rev() {
                if x == j {
                    x = j + 1;
                } else if x == j + 1 {
                    x = j;
                }
            }
            x
        })
        .collect();
    set.sort_unstable();
    set
}

fn render_set(set: &[usize], wide: bool) -> String {
    let parts: Vec<String> = set.iter().map(usize::to_string).collect();
    if wide {
        format!("[{}]", parts.join(","))
    } else {
        parts.concat()
    }
}

impl MinorLabel {
    pub fn new(rs: &RootSystem, index: usize, u: WeylWord, v: WeylWord) -> Result<Self> {
        rs.check_index(index)?;
        let top = rs.fundamental_weight(index);
        let u_weight = rs.apply_word(&u, &top)?;
        let v_weight = rs.apply_word(&v, &top)?;
        let display = if rs.family() == Family::A {
            let wide = rs.rank() + 1 >= 10;
            format!(
                "D_{{{},{}}}",
                render_set(&permuted_initial_set(&u, index), wide),
                render_set(&permuted_initial_set(&v, index), wide)
            )
        } else {
            format!("D[ϖ{index}; {u_weight}, {v_weight}]")
        };
        Ok(MinorLabel {
            index,
            u,
            v,
            u_weight,
            v_weight,
            display,
        })
    }

    /// Type A: the minor with the given row and column sets (1-based).
    pub fn from_sets(rs: &RootSystem, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rs.family() != Family::A {
            return Err(Error::UnsupportedType("row/column sets need type A".into()));
        }
        let i = rows.len();
        if i != cols.len() {
            return Err(Error::LengthMismatch {
                expected: i,
                got: cols.len(),
            });
        }
        rs.check_index(i)?;
        let word = |set: &[usize]| -> Result<WeylWord> {
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != i || sorted.iter().any(|&a| a == 0 || a > rs.rank() + 1) {
                return Err(Error::Parse(format!("invalid index set {set:?}")));
            }
            let mut w = Weight::zero(rs.rank());
            for &a in &sorted {
                if a <= rs.rank() {
                    w.0[a - 1] += 1;
                }
                if a >= 2 {
                    w.0[a - 2] -= 1;
                }
            }
            Ok(rs.word_for_weight(i, &w)?.expect("every i-subset is an extremal weight"))
        };
        MinorLabel::new(rs, i, word(rows)?, word(cols)?)
    }

    fn key(&self) -> (usize, &Weight, &Weight) {
        (self.index, &self.u_weight, &self.v_weight)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn u(&self) -> &WeylWord {
        &self.u
    }

    pub fn v(&self) -> &WeylWord {
        &self.v
    }

    pub fn u_weight(&self) -> &Weight {
        &self.u_weight
    }

    pub fn v_weight(&self) -> &Weight {
        &self.v_weight
    }
}

/// Highest-weight matrix coefficient of `u̿⁻¹·g·v̄` in `L(ϖ_i)`.
pub fn generalized_minor<R: Ring>(g: &GroupElement<R>, label: &MinorLabel) -> Result<R> {
    let rep = g.group.rep(label.index)?;
    let dim = rep.dim();
    let top = basis_vector::<Rational>(&(), dim, rep.highest_index());

    let mut a = top.clone();
    for &j in label.v.letters().iter().rev() {
        a = apply_sbar(&rep, j, a);
    }
    let mut b = top;
    for &j in label.u.letters().iter().rev() {
        b = apply_sdbar_transposed(&rep, j, b);
    }

    let ctx = g.ctx();
    let lifted: Vec<R> = a.iter().map(|x| R::from_rational(ctx, x)).collect();
    let image = g.apply(label.index, &lifted)?;
    Ok(b.iter()
        .zip(&image)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .fold(R::zero(ctx), |acc, (c, x)| acc.add(&x.scale(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{MultiPoly, PolyRing};

    fn group(f: Family, n: usize) -> Arc<Group> {
        Group::new(RootSystem::new(f, n).unwrap())
    }

    fn ints(rows: &[Vec<i64>]) -> ExactMatrix<Rational> {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn one_param_natural() {
        let g = group(Family::A, 2);
        let rep = g.rep(1).unwrap();
        let r = PolyRing::new(["t"]);
        let t = r.var("t").unwrap();
        let m = one_param(&rep, 1, &t, Generator::E).unwrap();
        let expect = ExactMatrix::from_rows(
            &r,
            vec![
                vec![r.one(), t.clone(), r.zero()],
                vec![r.zero(), r.one(), r.zero()],
                vec![r.zero(), r.zero(), r.one()],
            ],
        )
        .unwrap();
        assert_eq!(m, expect);
        assert_eq!(
            one_param(&rep, 1, &q(0), Generator::E).unwrap(),
            ExactMatrix::identity(&(), 3)
        );
    }

    #[test]
    fn spin_one_param_squares_to_zero() {
        let g = group(Family::D, 4);
        for i in [1, 2, 4] {
            let rep = g.rep(i).unwrap();
            for j in 1..=4 {
                let m = one_param(&rep, j, &q(3), Generator::E).unwrap();
                let mut nil = m.clone();
                for p in 0..rep.dim() {
                    nil.set(p, p, m.get(p, p) - q(1));
                }
                assert!(nil.mul(&nil).unwrap().to_rows().iter().flatten().all(Ring::is_zero));
            }
        }
    }

    #[test]
    fn weyl_representatives_sl2() {
        let g = group(Family::A, 1);
        let rep = g.rep(1).unwrap();
        let (s, ss) = weyl_reps(&rep, 1).unwrap();
        assert_eq!(s, ints(&[vec![0, -1], vec![1, 0]]));
        assert_eq!(ss, ints(&[vec![0, 1], vec![-1, 0]]));
        assert_eq!(s.mul(&ss).unwrap(), ExactMatrix::identity(&(), 2));
    }

    #[test]
    fn element_from_params_a2() {
        let g = group(Family::A, 2);
        let el = GroupElement::from_params(&g, &(), &WeylWord(vec![1, 2, 1]), &[q(1), q(1), q(1)]).unwrap();
        assert_eq!(el.matrix(1).unwrap(), ints(&[vec![1, 2, 1], vec![0, 1, 1], vec![0, 0, 1]]));
        let id = GroupElement::<Rational>::from_params(&g, &(), &WeylWord::empty(), &[]).unwrap();
        assert_eq!(id.matrix(2).unwrap(), ExactMatrix::identity(&(), 3));
        assert!(matches!(
            GroupElement::from_params(&g, &(), &WeylWord(vec![1, 2]), &[q(1)]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn element_from_matrix_checks() {
        let g = group(Family::A, 3);
        let m = ints(&[vec![1, 1, 1, 2], vec![0, 1, 0, -1], vec![0, 0, 1, 1], vec![0, 0, 0, 1]]);
        let el = GroupElement::from_matrix(&g, m.clone()).unwrap();
        assert_eq!(el.matrix(1).unwrap(), m);
        let bad = ints(&[vec![2, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        assert!(matches!(GroupElement::from_matrix(&g, bad), Err(Error::NotUnitriangular(_))));
    }

    #[test]
    fn minor_of_full_a3_matrix() {
        let g = group(Family::A, 3);
        let rs = g.root_system();
        let r = PolyRing::new(["a", "b", "c", "d", "e", "f"]);
        let v = |s: &str| r.parse(s).unwrap();
        let m = ExactMatrix::from_rows(
            &r,
            vec![
                vec![v("1"), v("a"), v("b"), v("c")],
                vec![v("0"), v("1"), v("d"), v("e")],
                vec![v("0"), v("0"), v("1"), v("f")],
                vec![v("0"), v("0"), v("0"), v("1")],
            ],
        )
        .unwrap();
        let el = GroupElement::from_matrix(&g, m).unwrap();
        let minor = |rows: &[usize], cols: &[usize]| -> MultiPoly {
            generalized_minor(&el, &MinorLabel::from_sets(rs, rows, cols).unwrap()).unwrap()
        };
        let d13_34 = minor(&[1, 3], &[3, 4]);
        assert_eq!(d13_34, v("b*f - c"));
        let rhs = minor(&[1], &[2]) * minor(&[1, 2, 3], &[1, 3, 4]) - minor(&[1, 2, 3], &[2, 3, 4]);
        assert_eq!(d13_34, rhs);
        let point: Vec<Rational> = (1..=6).map(q).collect();
        assert_eq!(d13_34.eval(&point), q(9));
    }

    #[test]
    fn minor_label_display_and_equality() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let w0 = rs.longest_word();
        let l = MinorLabel::new(&rs, 2, WeylWord(vec![2]), w0.clone()).unwrap();
        assert_eq!(l.to_string(), "D_{13,34}");
        let other = MinorLabel::new(&rs, 2, WeylWord(vec![2]), WeylWord(vec![2, 1, 3, 2])).unwrap();
        assert_eq!(l, other);
        assert_eq!(MinorLabel::from_sets(&rs, &[1, 3], &[3, 4]).unwrap(), l);
    }

    #[test]
    fn type_e_minor_rejected() {
        let g = group(Family::E, 6);
        let el = GroupElement::<Rational>::identity(&g, &());
        let label = MinorLabel::new(g.root_system(), 1, WeylWord::empty(), WeylWord::empty()).unwrap();
        assert!(matches!(generalized_minor(&el, &label), Err(Error::UnsupportedType(_))));
    }
}
