//! Omega entries from the double-coset sum over `S_m \ S_n / S_m'`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rpart::{ContingencyMatrix, Partition, RPartition};
use crate::symgrp::{coset_tallies, cycle_type_det, mn_character, CosetTally};
use crate::Poly;

/// `[j-i-1]`: the representative in `0..r` of `(j-1) + (r-i)`, for 1-based `i`, `j`.
pub fn bracket(j: usize, i: usize, r: usize) -> usize {
    ((j - 1) + (r - i)) % r
}

/// `A_O = sum [j-i-1] h_ij`.
pub fn a_o(h: &ContingencyMatrix, r: usize) -> i64 {
    let mut s = 0;
    for i in 1..=r {
        for j in 1..=r {
            s += bracket(j, i, r) as i64 * h.get(i - 1, j - 1) as i64;
        }
    }
    s
}

/// `sum_{i=1}^{r-1} h_{i, <=i}`.
pub fn h_diag_prefix(h: &ContingencyMatrix) -> i64 {
    (0..h.r().saturating_sub(1)).map(|i| h.row_prefix(i, i) as i64).sum()
}

/// `B_O = C(n,2) - n(lambda) - n(mu) + sum_{i<r} h_{i,<=i}`.
pub fn b_o(lambda: &RPartition, mu: &RPartition, h: &ContingencyMatrix) -> Result<i64> {
    if h.col_sums() != lambda.weight().0 || h.row_sums() != mu.weight().0 {
        return Err(Error::Mismatch(format!("margins of {h:?} do not match {lambda} and {mu}")));
    }
    let n = lambda.n() as i64;
    Ok(n * (n - 1) / 2 - lambda.n_value() as i64 - mu.n_value() as i64 + h_diag_prefix(h))
}

/// `prod_{k<=n} (t^{kr} - 1) / prod_cycles (t^{r len} - 1)`, a polynomial.
pub fn torus_quotient(ct: &[u32], r: usize) -> Poly {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (ct.to_vec(), r);
    if let Some(p) = cache.read().unwrap().get(&key) {
        return p.clone();
    }
    let n: u32 = ct.iter().sum();
    let full = (1..=n as i64).fold(Poly::one(), |acc, k| acc * Poly::t_pow_minus_one(k * r as i64));
    let q = full
        .exact_div(&cycle_type_det(ct, r))
        .expect("nonzero divisor")
        .expect("cycle-type determinant divides the degree product");
    cache.write().unwrap().insert(key, q.clone());
    q
}

fn young_char(lambda: &RPartition, class: &[Partition]) -> i64 {
    lambda.components().iter().zip(class).map(|(p, c)| mn_character(p, c).expect("matching block sizes")).product()
}

/// Character sum of one coset, grouped by cycle type of `y`:
/// `sum_{x in O, y} chi^lambda(y) chi^mu(x^-1 y x)` split by `cycle_type(y)`.
pub(crate) fn coset_character_sums(
    tally: &CosetTally,
    lambda: &RPartition,
    mu: &RPartition,
) -> Vec<(Partition, BigInt)> {
    let mut by_ct: HashMap<&Partition, BigInt> = HashMap::new();
    for ((yl, yr, ct), count) in &tally.counts {
        let v = young_char(lambda, yl) * young_char(mu, yr);
        if v != 0 {
            *by_ct.entry(ct).or_insert_with(BigInt::zero) += BigInt::from(v) * BigInt::from(*count);
        }
    }
    let mut out: Vec<_> = by_ct.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v)).collect();
    out.sort();
    out
}

/// `sum_O t^{r B_O} sum_{x,y} chi chi / det(t^r - y)` times `prod (t^{kr}-1)`,
/// divided by `|S_m| |S_m'|`.
pub(crate) fn normalized_coset_sum(lambda: &RPartition, mu: &RPartition, tallies: &[CosetTally]) -> Result<Poly> {
    let r = lambda.r();
    let mut total = Poly::zero();
    for tally in tallies {
        let b = b_o(lambda, mu, &tally.label)?;
        for (ct, v) in coset_character_sums(tally, lambda, mu) {
            let term = torus_quotient(&ct, r).scale(&BigRational::from_integer(v));
            total += &term.shift(r as i64 * b);
        }
    }
    let denom = lambda.weight().young_order() * mu.weight().young_order();
    Ok(total.scale(&BigRational::new(1.into(), BigInt::from(denom))))
}

/// `omega_{lambda,mu}(t)` by the double-coset formula.
pub fn omega_entry_cosets(lambda: &RPartition, mu: &RPartition) -> Result<Poly> {
    if lambda.r() != mu.r() || lambda.n() != mu.n() {
        return Err(Error::Mismatch(format!("{lambda} and {mu} index different groups")));
    }
    let tallies = coset_tallies(&lambda.weight(), &mu.weight())?;
    let body = normalized_coset_sum(lambda, mu, &tallies)?;
    let w = body.shift(lambda.a_value() + mu.tau().a_value());
    check_nonneg_integral(&w).map_err(|e| Error::Inconsistent(format!("omega({lambda},{mu}) = {w}: {e}")))?;
    Ok(w)
}

/// Ok iff `p` is a polynomial with nonnegative integer coefficients.
pub fn check_nonneg_integral(p: &Poly) -> std::result::Result<(), String> {
    if p.low_exp().is_some_and(|k| k < 0) {
        return Err("negative exponent".into());
    }
    for (k, c) in p.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(format!("coefficient {c} of t^{k}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(1, 1, 3), 2);
        assert_eq!(bracket(3, 2, 3), 0);
        assert_eq!(bracket(1, 3, 3), 0);
    }

    #[test]
    fn a_o_examples() {
        let h = ContingencyMatrix { h: vec![vec![4, 0, 0], vec![0, 0, 0], vec![0, 0, 0]] };
        assert_eq!(a_o(&h, 3), 8);
        let h = ContingencyMatrix { h: vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]] };
        assert_eq!(a_o(&h, 3), 0);
        let h = ContingencyMatrix { h: vec![vec![0; 3]; 3] };
        assert_eq!(a_o(&h, 3), 0);
    }

    #[test]
    fn b_o_examples() {
        let l = rp("(-;-;111)");
        let h = ContingencyMatrix { h: vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 3]] };
        assert_eq!(b_o(&l, &l, &h).unwrap(), 3 - 2 * 3);
        let a = rp("(1;-;-)");
        let h = ContingencyMatrix { h: vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]] };
        assert_eq!(b_o(&a, &a, &h).unwrap(), 1);
        assert!(b_o(&a, &rp("(-;1;-)"), &h).is_err());
    }

    #[test]
    fn quotient_is_polynomial() {
        assert_eq!(torus_quotient(&[1], 3).to_string(), "1");
        assert_eq!(torus_quotient(&[1, 1], 1).to_string(), "t + 1");
        assert_eq!(torus_quotient(&[2], 2).to_string(), "t^2 - 1");
    }

    #[test]
    fn n1_r3_entries() {
        let l1 = rp("(-;-;1)");
        let l2 = rp("(-;1;-)");
        assert_eq!(omega_entry_cosets(&l1, &l1).unwrap().to_string(), "t^4");
        assert_eq!(omega_entry_cosets(&l2, &l1).unwrap().to_string(), "t^3");
        assert_eq!(omega_entry_cosets(&l1, &l2).unwrap().to_string(), "t^2");
    }
}
