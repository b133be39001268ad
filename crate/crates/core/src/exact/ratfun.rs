use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::PolyGcd;
use super::laurent::{poly_div_rem, LaurentPoly};
use super::scalar::{CoeffFormat, Scalar};
use crate::error::{Error, Result};

/// An element of the fraction field `C(t)`.
///
/// Always reduced: numerator and denominator share no nonconstant factor, and
/// the denominator is a monic polynomial with nonzero constant term. Laurent
/// polynomials therefore have denominator exactly `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<C> {
    num: LaurentPoly<C>,
    den: LaurentPoly<C>,
}

impl<C: PolyGcd> RationalFunction<C> {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly<C>) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly<C>, den: LaurentPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low_exp().unwrap() - den.low_exp().unwrap();
        let n = num.dense();
        let d = den.dense();
        if d.len() == 1 {
            let inv = d[0].try_inv().expect("nonzero");
            return Ok(Self::from_laurent(LaurentPoly::from_dense(shift, n.to_vec()).scale(&inv)));
        }
        // fast path: exact division
        let (q, r) = poly_div_rem(n, d);
        if r.is_empty() {
            return Ok(Self::from_laurent(LaurentPoly::from_dense(shift, q)));
        }
        let g = C::poly_gcd(n, d);
        let (n, d) =
            if g.len() > 1 { (poly_div_rem(n, &g).0, poly_div_rem(d, &g).0) } else { (n.to_vec(), d.to_vec()) };
        let lc_inv = d.last().unwrap().try_inv().expect("nonzero");
        let num = LaurentPoly::from_dense(shift, n).scale(&lc_inv);
        let den = LaurentPoly::from_dense(0, d).scale(&lc_inv);
        Ok(RationalFunction { num, den })
    }

    pub fn numer(&self) -> &LaurentPoly<C> {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Succeeds iff the denominator is a unit of the Laurent ring.
    pub fn try_to_laurent(&self) -> Result<LaurentPoly<C>>
    where
        C: CoeffFormat,
    {
        if self.is_laurent() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurent(self.to_string()))
        }
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly<C>> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_laurent() && rhs.is_laurent() {
            return Self::new(self.num.clone(), rhs.num.clone());
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn mul_laurent(&self, p: &LaurentPoly<C>) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(&self.num * p);
        }
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn shift(&self, k: i64) -> Self {
        RationalFunction { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn substitute_tr(&self, r: i64) -> Self {
        Self::new(self.num.substitute_tr(r), self.den.substitute_tr(r)).expect("nonzero denominator")
    }

    pub fn eval_at(&self, x: &C) -> Result<C> {
        let d = self.den.eval_at(x)?;
        let inv = d.try_inv().ok_or(Error::DivisionByZero)?;
        Ok(self.num.eval_at(x)? * inv)
    }
}

impl<C: PolyGcd> From<LaurentPoly<C>> for RationalFunction<C> {
    fn from(p: LaurentPoly<C>) -> Self {
        Self::from_laurent(p)
    }
}

fn add_impl<C: PolyGcd>(a: &RationalFunction<C>, b: &RationalFunction<C>, neg: bool) -> RationalFunction<C> {
    let combine = |x: &LaurentPoly<C>, y: &LaurentPoly<C>| if neg { x - y } else { x + y };
    if a.den == b.den {
        if a.is_laurent() {
            return RationalFunction::from_laurent(combine(&a.num, &b.num));
        }
        return RationalFunction::new(combine(&a.num, &b.num), a.den.clone()).expect("nonzero");
    }
    let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
    RationalFunction::new(num, &a.den * &b.den).expect("nonzero")
}

fn mul_impl<C: PolyGcd>(a: &RationalFunction<C>, b: &RationalFunction<C>) -> RationalFunction<C> {
    if a.is_laurent() && b.is_laurent() {
        return RationalFunction::from_laurent(&a.num * &b.num);
    }
    RationalFunction::new(&a.num * &b.num, &a.den * &b.den).expect("nonzero")
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, C: PolyGcd> $tr<&'a RationalFunction<C>> for &'a RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: &'a RationalFunction<C>) -> RationalFunction<C> {
                $body(self, rhs)
            }
        }
        impl<C: PolyGcd> $tr<RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl<C: PolyGcd> Neg for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl<C: Scalar + CoeffFormat> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<C: Scalar> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use crate::{Poly, RatFunc};

    #[test]
    fn geometric_quotient_is_laurent() {
        let q = RatFunc::from(Poly::t_pow_minus_one(9)).try_div(&Poly::t_pow_minus_one(3).into()).unwrap();
        assert_eq!(q.try_to_laurent().unwrap().to_string(), "t^6 + t^3 + 1");
    }

    #[test]
    fn non_laurent_conversion_fails() {
        let f = RatFunc::new(Poly::one(), Poly::t_pow_minus_one(1)).unwrap();
        assert!(matches!(f.try_to_laurent(), Err(Error::NotLaurent(_))));
        assert_eq!(f.to_string(), "(1)/(t - 1)");
    }

    #[test]
    fn laurent_round_trip() {
        let p = Poly::from_terms([(2, rat(1)), (-1, rat(-1))]);
        let f = RatFunc::from(p.clone());
        assert_eq!(f.try_to_laurent().unwrap(), p);
        assert_eq!(f.to_string(), "t^2 - t^-1");
    }

    #[test]
    fn normalization_is_canonical() {
        // (2t^3 - 2t^2) / (4t^4 - 4t^2) = 1 / (2t + 2)
        let num = Poly::from_terms([(3, rat(2)), (2, rat(-2))]);
        let den = Poly::from_terms([(4, rat(4)), (2, rat(-4))]);
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.denom().to_string(), "t + 1");
        assert_eq!(f.numer().to_string(), "1/2");
        let g = RatFunc::new(Poly::one(), Poly::from_terms([(1, rat(2)), (0, rat(2))])).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFunc::one().try_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
    }
}
