//! Polynomial GCDs for the coefficient fields.
//!
//! Rational coefficients go through the subresultant remainder sequence over
//! the integers after clearing denominators; other fields use the plain
//! Euclidean algorithm.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::poly_div_rem;
use super::scalar::FieldScalar;

pub trait PolyGcd: FieldScalar {
    /// Monic GCD of two nonzero dense ascending coefficient vectors.
    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        euclid_gcd(a, b)
    }
}

pub fn euclid_gcd<C: FieldScalar>(a: &[C], b: &[C]) -> Vec<C> {
    let (mut x, mut y) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !y.is_empty() {
        let (_, r) = poly_div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(x)
}

fn make_monic<C: FieldScalar>(v: Vec<C>) -> Vec<C> {
    match v.last() {
        None => v,
        Some(lc) => {
            let inv = lc.try_inv().expect("nonzero leading coefficient");
            v.into_iter().map(|c| c * inv.clone()).collect()
        }
    }
}

impl PolyGcd for BigRational {
    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        let ia = primitive_int(a);
        let ib = primitive_int(b);
        let g = subresultant_gcd(ia, ib);
        make_monic(g.into_iter().map(BigRational::from_integer).collect())
    }
}

/// Clears denominators and removes the content.
fn primitive_int(a: &[BigRational]) -> Vec<BigInt> {
    let l = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = a.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    primitive_part(ints)
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(a: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&a);
    if c.is_zero() || c.is_one() {
        return a;
    }
    a.into_iter().map(|x| x / &c).collect()
}

fn degree(a: &[BigInt]) -> usize {
    a.len() - 1
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = degree(b);
    let lb = b[db].clone();
    let mut steps = degree(a) + 1 - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        steps -= 1;
    }
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c *= &lb;
        }
    }
    r
}

fn subresultant_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    a = primitive_part(a);
    b = primitive_part(b);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a) - degree(&b);
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        a = b;
        let denom = &g * num_traits::pow(h.clone(), delta);
        b = r.into_iter().map(|c| c / &denom).collect();
        g = a[degree(&a)].clone();
        // h <- g^delta / h^(delta - 1), exact
        h = if delta == 0 { h } else { num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1) };
    }
    let mut out = primitive_part(b);
    if out.last().is_some_and(|c| c.is_negative()) {
        out = out.into_iter().map(|c| -c).collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    fn v(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (t^6 - 1) and (t^9 - 1) share t^3 - 1
        let mut a = vec![rat(0); 7];
        a[0] = rat(-1);
        a[6] = rat(1);
        let mut b = vec![rat(0); 10];
        b[0] = rat(-1);
        b[9] = rat(1);
        let g = BigRational::poly_gcd(&a, &b);
        assert_eq!(g, v(&[-1, 0, 0, 1]));
        assert_eq!(euclid_gcd(&a, &b), g);
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(BigRational::poly_gcd(&v(&[1, 1]), &v(&[-1, 1])), v(&[1]));
    }

    #[test]
    fn fractional_coefficients() {
        // (t/2 + 1/3)(t - 1) and 6(t/2 + 1/3)
        let a = v(&[-2, -1, 3]).into_iter().map(|c| c / rat(6)).collect::<Vec<_>>();
        let b = v(&[2, 3]);
        assert_eq!(BigRational::poly_gcd(&a, &b), vec![crate::exact::scalar::rat_frac(2, 3), rat(1)]);
    }
}
