use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::{CoeffFormat, FieldScalar, Scalar};
use crate::error::{Error, Result};

/// A univariate Laurent polynomial in `t` with coefficients in `C`.
///
/// Stored densely from the lowest exponent: `coeffs[k]` is the coefficient of
/// `t^(low + k)`. Both end coefficients are nonzero, and the zero polynomial
/// has no coefficients and `low == 0`, so equal values are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: i64) -> Self {
        Self::from_dense(k, vec![c])
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    /// `t^k - 1`.
    pub fn t_pow_minus_one(k: i64) -> Self {
        Self::t_pow(k) - Self::one()
    }

    /// Builds from coefficients starting at exponent `low`; zeros are trimmed.
    pub fn from_dense(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            let slot = &mut coeffs[(k - lo) as usize];
            *slot = slot.clone() + c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&C> {
        self.coeffs.first()
    }

    /// True when the value is `c * t^k` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, k: i64) -> C {
        if self.is_zero() || k < self.low {
            return C::zero();
        }
        self.coeffs.get((k - self.low) as usize).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Dense coefficients of the polynomial part `t^(-low) * self`.
    pub(crate) fn dense(&self) -> &[C] {
        &self.coeffs
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// `f(t) -> f(t^r)`: every exponent is multiplied by `r`.
    pub fn substitute_tr(&self, r: i64) -> Self {
        assert!(r >= 1, "substitute_tr needs r >= 1");
        Self::from_terms(self.terms().map(|(k, c)| (k * r, c.clone())))
    }

    /// `f(t) -> f(t^(-1))`.
    pub fn reflect(&self) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (-k, c.clone())))
    }

    pub fn map_coeffs<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<D: Scalar, E, F: Fn(&C) -> std::result::Result<D, E>>(
        &self,
        f: F,
    ) -> std::result::Result<LaurentPoly<D>, E> {
        let coeffs = self.coeffs.iter().map(f).collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(LaurentPoly::from_dense(self.low, coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation for polynomials without negative exponents.
    pub fn eval_poly(&self, x: &C) -> Result<C> {
        if self.is_zero() {
            return Ok(C::zero());
        }
        if self.low < 0 {
            return Err(Error::EvalAtZero);
        }
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        for _ in 0..self.low {
            acc = acc * x.clone();
        }
        Ok(acc)
    }

    /// True iff every exponent is a nonnegative multiple of `r`, i.e. the value
    /// lies in `C[t^r]`.
    pub fn is_poly_in_tr(&self, r: i64) -> bool {
        self.terms().all(|(k, _)| k >= 0 && k % r == 0)
    }

    /// Inverse of [`substitute_tr`](Self::substitute_tr); `None` unless every
    /// exponent is divisible by `r`.
    pub fn contract_tr(&self, r: i64) -> Option<Self> {
        if !self.terms().all(|(k, _)| k % r == 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(k, c)| (k / r, c.clone()))))
    }
}

impl<C: FieldScalar> LaurentPoly<C> {
    /// Evaluation at a point; negative powers need `x != 0`.
    pub fn eval_at(&self, x: &C) -> Result<C> {
        if self.is_zero() {
            return Ok(C::zero());
        }
        if self.low >= 0 {
            return self.eval_poly(x);
        }
        let inv = x.try_inv().ok_or(Error::EvalAtZero)?;
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        for _ in 0..(-self.low) {
            acc = acc * inv.clone();
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.try_inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d` does
    /// not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let (q, r) = poly_div_rem(&self.coeffs, &d.coeffs);
        if !r.is_empty() {
            return Ok(None);
        }
        Ok(Some(Self::from_dense(self.low - d.low, q)))
    }
}

/// Division with remainder of dense ascending coefficient vectors.
/// Both inputs are trimmed; the remainder is returned trimmed.
pub(crate) fn poly_div_rem<C: FieldScalar>(num: &[C], den: &[C]) -> (Vec<C>, Vec<C>) {
    let dn = den.len();
    assert!(dn > 0, "division by the zero polynomial");
    if num.len() < dn {
        return (Vec::new(), trim(num.to_vec()));
    }
    let lc_inv = den[dn - 1].try_inv().expect("nonzero leading coefficient");
    let monic = den[dn - 1].is_one();
    let mut rem = num.to_vec();
    let mut quot = vec![C::zero(); num.len() - dn + 1];
    for shift in (0..quot.len()).rev() {
        let top = rem[shift + dn - 1].clone();
        if top.is_zero() {
            continue;
        }
        let q = if monic { top } else { top * lc_inv.clone() };
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                let v = rem[shift + i].clone() - q.clone() * d.clone();
                rem[shift + i] = v;
            }
        }
        quot[shift] = q;
    }
    rem.truncate(dn - 1);
    (trim(quot), trim(rem))
}

fn trim<C: Scalar>(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl<C: Scalar> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Scalar> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

fn add_impl<C: Scalar>(a: &LaurentPoly<C>, b: &LaurentPoly<C>, negate_b: bool) -> LaurentPoly<C> {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.high_exp().unwrap().max(b.high_exp().unwrap());
    let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + i] = c.clone();
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - lo) as usize + i];
        *slot = if negate_b { slot.clone() - c.clone() } else { slot.clone() + c.clone() };
    }
    LaurentPoly::from_dense(lo, coeffs)
}

fn mul_impl<C: Scalar>(a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> LaurentPoly<C> {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![C::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let v = coeffs[i + j].clone() + x.clone() * y.clone();
            coeffs[i + j] = v;
        }
    }
    LaurentPoly::from_dense(a.low + b.low, coeffs)
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, C: Scalar> $tr<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                $body(self, rhs)
            }
        }
        impl<C: Scalar> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                $body(&self, &rhs)
            }
        }
        impl<'a, C: Scalar> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl<C: Scalar> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = add_impl(self, rhs, false);
    }
}

impl<C: Scalar> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        *self = add_impl(self, rhs, true);
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Scalar> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -self.clone()
    }
}

impl<C: Scalar> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<C: Scalar + CoeffFormat> LaurentPoly<C> {
    /// Canonical rendering with `var` in place of `t`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (k, c)) in self.terms().rev().enumerate() {
            let (neg, mag) = c.split_sign();
            out.push_str(match (idx, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mono = match k {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{k}")),
            };
            match (mag, mono) {
                (None, None) => out.push('1'),
                (Some(m), None) => out.push_str(&m),
                (None, Some(t)) => out.push_str(&t),
                (Some(m), Some(t)) => {
                    out.push_str(&m);
                    out.push('*');
                    out.push_str(&t);
                }
            }
        }
        out
    }
}

/// Canonical grammar: descending exponents, `t^k`, `t`, integer or `p/q`
/// coefficients, products written with `*`, e.g. `2*t^9 - t + 1/2`.
impl<C: Scalar + CoeffFormat> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl<C: Scalar> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|(k, c)| format!("{c:?}*t^{k}")).collect();
        if terms.is_empty() {
            f.write_str("LaurentPoly(0)")
        } else {
            write!(f, "LaurentPoly({})", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use crate::Poly;

    fn p(terms: &[(i64, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn substitute_tr_scales_exponents() {
        let f = p(&[(2, 1), (-1, -1)]);
        assert_eq!(f.substitute_tr(3), p(&[(6, 1), (-3, -1)]));
        assert_eq!(f.substitute_tr(3).to_string(), "t^6 - t^-3");
    }

    #[test]
    fn eval_and_shift() {
        let f = p(&[(4, 1), (1, -1)]);
        assert_eq!(f.eval_at(&rat(2)).unwrap(), rat(14));
        assert_eq!(f.shift(-1), p(&[(3, 1), (0, -1)]));
        assert_eq!(f.shift(-1).to_string(), "t^3 - 1");
    }

    #[test]
    fn eval_negative_power_at_zero_fails() {
        let f = p(&[(-1, 1)]);
        assert_eq!(f.eval_at(&rat(0)), Err(Error::EvalAtZero));
        assert_eq!(p(&[(2, 1)]).eval_at(&rat(0)).unwrap(), rat(0));
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let f = p(&[(3, 2), (-2, 5)]);
        let z = &f - &f;
        assert!(z.is_zero());
        assert_eq!(z, Poly::zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_grammar() {
        assert_eq!(p(&[(4, 1), (1, -1)]).to_string(), "t^4 - t");
        assert_eq!(p(&[(9, 2), (0, -3)]).to_string(), "2*t^9 - 3");
        assert_eq!(p(&[(1, -1)]).to_string(), "-t");
        let half = Poly::monomial(crate::exact::scalar::rat_frac(1, 2), 3);
        assert_eq!(half.to_string(), "1/2*t^3");
    }

    #[test]
    fn exact_division() {
        let num = Poly::t_pow_minus_one(9);
        let den = Poly::t_pow_minus_one(3);
        assert_eq!(num.exact_div(&den).unwrap().unwrap(), p(&[(6, 1), (3, 1), (0, 1)]));
        assert!(p(&[(1, 1), (0, 1)]).exact_div(&den).unwrap().is_none());
        assert!(num.exact_div(&Poly::zero()).is_err());
    }

    #[test]
    fn poly_in_tr() {
        assert!(p(&[(6, 1), (3, 1), (0, 1)]).is_poly_in_tr(3));
        assert!(!p(&[(4, 1), (1, 1)]).is_poly_in_tr(3));
        assert!(Poly::one().is_poly_in_tr(5));
        assert!(!p(&[(-3, 1)]).is_poly_in_tr(3));
    }
}
