//! Exact scalars, sparse multivariate polynomials and dense matrices.
//!
//! Nothing in this crate touches floating point. Scalars implement [`Ring`],
//! which carries a context (`()` for rationals, the variable set for
//! polynomials) so that constants can be created without an existing element.

mod matrix;
mod poly;
mod rational;

pub use matrix::ExactMatrix;
pub use poly::{Monomial, MultiPoly, PolyRing};
pub use rational::{parse_rational, Rational};

use std::fmt;

use crate::error::Result;

/// A commutative ring with exact (possibly failing) division.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &Rational) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;

    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Result<Self>;

    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rational(ctx, &Rational::from_integer(n.into()))
    }
}
