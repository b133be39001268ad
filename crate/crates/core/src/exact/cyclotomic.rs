//! Elements of the cyclotomic field `Q(zeta_r) = Q[x]/(Phi_r(x))`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::poly_div_rem;
use super::scalar::{rat, CoeffFormat, FieldScalar, Scalar};
use super::PolyGcd;
use crate::error::{Error, Result};

struct FieldData {
    /// Ascending coefficients of the monic `Phi_r`.
    phi: Vec<BigRational>,
    /// `zeta^k` reduced, for `k in 0..r`.
    zeta_pows: Vec<Vec<BigRational>>,
}

fn cyclotomic_poly(r: u32) -> Vec<BigRational> {
    // x^r - 1 = prod_{d | r} Phi_d
    let mut p = vec![rat(0); r as usize + 1];
    p[0] = rat(-1);
    p[r as usize] = rat(1);
    for d in 1..r {
        if r % d == 0 {
            let (q, rem) = poly_div_rem(&p, &field(d).phi);
            debug_assert!(rem.is_empty());
            p = q;
        }
    }
    p
}

fn field(r: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&r) {
        return f.clone();
    }
    let phi = cyclotomic_poly(r);
    let deg = phi.len() - 1;
    let zeta_pows = (0..r as usize)
        .map(|k| {
            let mut v = vec![rat(0); k + 1];
            v[k] = rat(1);
            pad(poly_div_rem(&v, &phi).1, deg)
        })
        .collect();
    let data = Arc::new(FieldData { phi, zeta_pows });
    cache.write().unwrap().entry(r).or_insert(data).clone()
}

fn pad(mut v: Vec<BigRational>, len: usize) -> Vec<BigRational> {
    v.resize(len, rat(0));
    v
}

/// Euler's totient.
pub fn euler_phi(r: u32) -> u32 {
    (1..=r).filter(|k| num_integer::gcd(*k, r) == 1).count() as u32
}

/// An element of `Q(zeta_r)` in the power basis `1, zeta, ..., zeta^(phi(r)-1)`.
///
/// Rational constants built without a conductor (`zero()`, `one()`,
/// `from_int`) carry `r = 1` and are promoted on contact with any other
/// conductor. Mixing two distinct conductors above one is a programming error.
#[derive(Clone)]
pub struct Cyclotomic {
    r: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { r: 1, coords: vec![q] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(super::rat(v))
    }

    /// `zeta_r^k`, reduced modulo `Phi_r`.
    pub fn from_zeta_power(k: i64, r: u32) -> Self {
        assert!(r >= 1, "conductor must be positive");
        let idx = k.rem_euclid(r as i64) as usize;
        Cyclotomic { r, coords: field(r).zeta_pows[idx].clone() }
    }

    pub fn conductor(&self) -> u32 {
        self.r
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    fn embed(&self, r: u32) -> Self {
        if self.r == r {
            return self.clone();
        }
        assert_eq!(self.r, 1, "mixed cyclotomic conductors {} and {r}", self.r);
        let deg = field(r).phi.len() - 1;
        let mut coords = vec![rat(0); deg];
        coords[0] = self.coords[0].clone();
        Cyclotomic { r, coords }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.r == b.r {
            (a.clone(), b.clone())
        } else if a.r == 1 {
            (a.embed(b.r), b.clone())
        } else {
            (a.clone(), b.embed(a.r))
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// Succeeds iff every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coords[0].clone())
        } else {
            Err(Error::NotRational(format!("{self}")))
        }
    }

    /// Complex value under `zeta -> exp(2 pi i / r)`.
    pub fn to_complex(&self) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.r as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pw = Complex64::new(1.0, 0.0);
        for c in &self.coords {
            acc += pw * c.to_f64().unwrap_or(f64::NAN);
            pw *= w;
        }
        acc
    }

    /// Galois conjugation `zeta -> zeta^(-1)`; this is complex conjugation.
    pub fn conj(&self) -> Self {
        let mut acc = Cyclotomic::from_rational(rat(0)).embed(self.r);
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + Cyclotomic::from_zeta_power(-(k as i64), self.r).scale(c);
            }
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { r: self.r, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    fn reduce(r: u32, v: Vec<BigRational>) -> Self {
        let f = field(r);
        let deg = f.phi.len() - 1;
        let v = if v.len() > deg { poly_div_rem(&v, &f.phi).1 } else { v };
        Cyclotomic { r, coords: pad(v, deg) }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::aligned(self, other);
        a.coords == b.coords
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(rat(0))
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(rat(1))
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = Cyclotomic::aligned(&self, &rhs);
        Cyclotomic { r: a.r, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        Cyclotomic { r: self.r, coords: self.coords.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        if self.r == 1 {
            return rhs.scale(&self.coords[0]);
        }
        if rhs.r == 1 {
            return self.scale(&rhs.coords[0]);
        }
        let (a, b) = Cyclotomic::aligned(&self, &rhs);
        let mut prod = vec![rat(0); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduce(a.r, prod)
    }
}

impl Div for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inv().expect("division by zero in Q(zeta)")
    }
}

impl Scalar for Cyclotomic {
    fn from_int(v: i64) -> Self {
        Cyclotomic::from_rational(rat(v))
    }
}

impl FieldScalar for Cyclotomic {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.r == 1 || self.is_rational() {
            return Some(Cyclotomic::from_rational(self.coords[0].recip()).embed(self.r));
        }
        // extended Euclid: find u with u * a = 1 mod Phi_r
        let phi = field(self.r).phi.clone();
        let a = trim(self.coords.clone());
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (vec![], vec![rat(1)]);
        while !r1.is_empty() {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s = sub_vec(&s0, &mul_vec(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant since Phi_r is irreducible
        debug_assert_eq!(r0.len(), 1);
        let inv_c = r0[0].recip();
        let u: Vec<BigRational> = s0.into_iter().map(|c| c * &inv_c).collect();
        Some(Cyclotomic::reduce(self.r, u))
    }
}

impl PolyGcd for Cyclotomic {}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn mul_vec(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn sub_vec(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_else(|| rat(0)) - b.get(i).cloned().unwrap_or_else(|| rat(0)))
        .collect();
    trim(out)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[r={}]({})", self.r, self)
    }
}

impl CoeffFormat for Cyclotomic {
    fn split_sign(&self) -> (bool, Option<String>) {
        if self.is_rational() {
            self.coords[0].split_sign()
        } else {
            (false, Some(format!("({self})")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_degrees() {
        for r in 1..=12u32 {
            assert_eq!(field(r).phi.len() as u32 - 1, euler_phi(r), "r = {r}");
        }
        // Phi_6 = x^2 - x + 1
        assert_eq!(field(6).phi, vec![rat(1), rat(-1), rat(1)]);
    }

    #[test]
    fn zeta_cubed_is_one() {
        assert_eq!(Cyclotomic::from_zeta_power(3, 3), Cyclotomic::one());
        let prod = Cyclotomic::from_zeta_power(1, 3) * Cyclotomic::from_zeta_power(2, 3);
        assert_eq!(prod.as_rational().unwrap(), rat(1));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for r in [2u32, 3, 5, 7] {
            let s = (0..r as i64).fold(Cyclotomic::zero(), |acc, k| acc + Cyclotomic::from_zeta_power(k, r));
            assert!(s.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn non_rational_is_rejected() {
        let z = Cyclotomic::from_zeta_power(1, 3);
        assert!(matches!(z.as_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn inverse_and_conjugate() {
        for r in [3u32, 4, 5, 6, 8] {
            let a = Cyclotomic::from_zeta_power(1, r) + Cyclotomic::from_int(2);
            let inv = a.try_inv().unwrap();
            assert_eq!(a.clone() * inv, Cyclotomic::one());
            let norm = a.clone() * a.conj();
            let c = a.to_complex();
            assert!((norm.to_complex().re - c.norm_sqr()).abs() < 1e-9);
        }
    }
}
