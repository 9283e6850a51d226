use num_bigint::BigInt;
use num_traits::{One, Zero};


use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`; anything else (floats included) is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

impl super::Ring for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_rational(_: &(), q: &Rational) -> Self {
        q.clone()
    }

    fn ctx(&self) {}

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }

    fn exact_div(&self, other: &Self) -> Result<Self> {
        if Zero::is_zero(other) {
            Err(Error::SingularEvaluation { vertex: None })
        } else {
            Ok(self / other)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::exactalg::Ring;
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-4").unwrap(), Rational::from_integer((-4).into()));
        assert_eq!(parse_rational(" 2 / -4 ").unwrap(), Rational::new((-1).into(), 2.into()));
        for bad in ["1.5", "1e3", "", "1/0", "x", "1/2/3", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn division_by_zero_is_singular() {
        let one = <Rational as Ring>::one(&());
        let zero = <Rational as Ring>::zero(&());
        assert!(matches!(one.exact_div(&zero), Err(Error::SingularEvaluation { .. })));
    }
}
