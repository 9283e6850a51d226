use std::fmt;

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Dense rectangular matrix over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![R::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &R::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one(ctx);
        }
        m
    }

    /// Builds from row vectors; every row must have the same length.
    pub fn from_rows(ctx: &R::Ctx, rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            ctx: ctx.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &ExactMatrix<R>) -> Result<ExactMatrix<R>> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(R::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn transpose(&self) -> ExactMatrix<R> {
        let mut out = Self::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix<R> {
        let mut out = Self::zeros(&self.ctx, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix {
            ctx: ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => self.get(i, j).is_one(),
                    std::cmp::Ordering::Greater => self.get(i, j).is_zero(),
                    std::cmp::Ordering::Less => true,
                })
            })
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant: cofactor expansion up to 3×3, fraction-free
    /// elimination beyond.
    pub fn det(&self) -> Result<R> {
        if self.require_square()? <= 3 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Bareiss elimination with row pivoting; every division is exact.
    pub fn det_bareiss(&self) -> Result<R> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(R::one(&self.ctx));
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = R::one(&self.ctx);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(R::zero(&self.ctx)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.exact_div(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<R> {
        let n = self.require_square()?;
        Ok(cofactor(&self.to_rows(), &self.ctx, n))
    }
}

fn cofactor<R: Ring>(m: &[Vec<R>], ctx: &R::Ctx, n: usize) -> R {
    match n {
        0 => R::one(ctx),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut total = R::zero(ctx);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&cofactor(&minor, ctx, n - 1));
                total = if j % 2 == 0 {
                    total.add(&term)
                } else {
                    total.sub(&term)
                };
            }
            total
        }
    }
}

impl ExactMatrix<Rational> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            &(),
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }
}

impl<R: Ring> fmt::Display for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PolyRing;
    use proptest::prelude::*;

    #[test]
    fn determinant_examples() {
        let id = ExactMatrix::<Rational>::identity(&(), 3);
        assert_eq!(id.det().unwrap(), Rational::from_integer(1.into()));

        let r = PolyRing::new(["b", "c", "f"]);
        let v = |s: &str| r.parse(s).unwrap();
        let m = ExactMatrix::from_rows(&r, vec![vec![v("b"), v("c")], vec![v("1"), v("f")]]).unwrap();
        assert_eq!(m.det().unwrap(), v("b*f - c"));

        let r = PolyRing::new(["n12", "n14", "n24", "n34"]);
        let v = |s: &str| r.parse(s).unwrap();
        let m = ExactMatrix::from_rows(
            &r,
            vec![
                vec![v("1"), v("n12"), v("n14")],
                vec![v("0"), v("1"), v("n24")],
                vec![v("0"), v("0"), v("n34")],
            ],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), v("n34"));
        assert_eq!(m.det_bareiss().unwrap(), v("n34"));

        let rect = ExactMatrix::<Rational>::zeros(&(), 2, 3);
        assert!(matches!(rect.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_pivots_and_symbolic() {
        let m = ExactMatrix::from_i64_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 4, 1],
            vec![2, 5, 0, 1],
            vec![1, 1, 1, 0],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());

        let r = PolyRing::new(["a", "b", "c", "d"]);
        let v = |s: &str| r.parse(s).unwrap();
        let m = ExactMatrix::from_rows(
            &r,
            vec![
                vec![v("a"), v("b"), v("0"), v("1")],
                vec![v("c"), v("a"), v("d"), v("0")],
                vec![v("1"), v("0"), v("b"), v("c")],
                vec![v("d"), v("1"), v("a"), v("b")],
            ],
        )
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    fn rational_matrix() -> impl Strategy<Value = ExactMatrix<Rational>> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 16).prop_map(|cells| {
            let rows = cells
                .chunks(4)
                .map(|c| c.iter().map(|&(p, q)| Rational::new(p.into(), q.into())).collect())
                .collect();
            ExactMatrix::from_rows(&(), rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn det_is_multiplicative(a in rational_matrix(), b in rational_matrix()) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
            prop_assert_eq!(a.det_bareiss().unwrap(), a.det_cofactor().unwrap());
        }
    }
}
