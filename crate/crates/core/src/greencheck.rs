//! Green-function inner products from double-coset data, and the exponent
//! identities tying them to `Omega`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::rat;
use crate::omega::{
    a_o, b_o, coset_character_sums, omega_entry_bruteforce, omega_entry_cosets, torus_quotient, WREATH_BOUND,
};
use crate::rpart::{enumerate_contingency, enumerate_rpartitions, n_star, ContingencyMatrix, RPartition};
use crate::symgrp::{coset_tallies, torus_order};
use crate::verify::Report;
use crate::{Poly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignPair {
    pub eps: Sign,
    pub eps_prime: Sign,
}

impl SignPair {
    pub const ALL: [SignPair; 4] = [
        SignPair { eps: Sign::Minus, eps_prime: Sign::Plus },
        SignPair { eps: Sign::Minus, eps_prime: Sign::Minus },
        SignPair { eps: Sign::Plus, eps_prime: Sign::Minus },
        SignPair { eps: Sign::Plus, eps_prime: Sign::Plus },
    ];

    pub fn minus_plus() -> Self {
        SignPair { eps: Sign::Minus, eps_prime: Sign::Plus }
    }
}

/// `a_{eps,eps'}(m, m'; n_O)` from the label `h` (rows `m'`, columns `m`).
pub fn a_exponent(pair: SignPair, h: &ContingencyMatrix) -> i64 {
    let r = h.r();
    (0..r.saturating_sub(1))
        .map(|i| {
            (match (pair.eps, pair.eps_prime) {
                (Sign::Minus, Sign::Plus) => h.row_prefix(i, i),
                (Sign::Minus, Sign::Minus) => h.block_prefix(i, i),
                (Sign::Plus, Sign::Minus) => h.col_prefix(i, i),
                (Sign::Plus, Sign::Plus) => h.get(i, i),
            }) as i64
        })
        .sum()
}

fn sign_exponent(s: Sign, lambda: &RPartition) -> u32 {
    let m = lambda.weight();
    match s {
        Sign::Minus => m.p_minus(),
        Sign::Plus => m.p_plus(),
    }
}

/// Where `q` lives.
#[derive(Clone, Debug, PartialEq)]
pub enum QValue {
    Symbolic,
    Rational(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub enum InnerValue {
    /// An element of `Q(q)`, written in the variable `t`.
    Symbolic(RatFunc),
    Numeric(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct InnerProductValue {
    pub value: InnerValue,
    /// `(p_eps(m), p_eps'(m'))`.
    pub sign_exponents: (u32, u32),
}

impl InnerProductValue {
    pub fn sign(&self) -> i64 {
        if (self.sign_exponents.0 + self.sign_exponents.1).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn group_order_poly(n: u32) -> Poly {
    let mut p = Poly::t_pow((n as i64) * (n as i64 - 1) / 2);
    for k in 1..=n as i64 {
        p = p * Poly::t_pow_minus_one(k);
    }
    p
}

/// `<Q^eps_lambda, Q^eps'_mu>` over the field with `q` elements.
pub fn green_inner_product(
    lambda: &RPartition,
    mu: &RPartition,
    pair: SignPair,
    q: &QValue,
) -> Result<InnerProductValue> {
    if lambda.r() != mu.r() || lambda.n() != mu.n() {
        return Err(Error::Mismatch(format!("{lambda} and {mu} index different groups")));
    }
    let n = lambda.n();
    let tallies = coset_tallies(&lambda.weight(), &mu.weight())?;
    let se = (sign_exponent(pair.eps, lambda), sign_exponent(pair.eps_prime, mu));
    let sign = if (se.0 + se.1).is_multiple_of(2) { rat(1) } else { rat(-1) };
    let denom = BigRational::from_integer(BigInt::from(lambda.weight().young_order() * mu.weight().young_order()));
    let value = match q {
        QValue::Symbolic => {
            // |G| / |T_w| = q^{C(n,2)} * torus_quotient
            let mut total = Poly::zero();
            for tally in tallies.iter() {
                let a = a_exponent(pair, &tally.label);
                for (ct, v) in coset_character_sums(tally, lambda, mu) {
                    total += &torus_quotient(&ct, 1).scale(&BigRational::from_integer(v)).shift(a);
                }
            }
            let shift = (n as i64) * (n as i64 - 1) / 2;
            InnerValue::Symbolic(RatFunc::from_laurent(total.shift(shift).scale(&(sign / denom))))
        }
        QValue::Rational(qv) => {
            let g = group_order_poly(n).eval_at(qv)?;
            let mut total = BigRational::zero();
            for tally in tallies.iter() {
                let qa = num_traits::pow(qv.clone(), a_exponent(pair, &tally.label) as usize);
                for (ct, v) in coset_character_sums(tally, lambda, mu) {
                    total += &qa * BigRational::from_integer(v) / torus_order(&ct, qv)?;
                }
            }
            InnerValue::Numeric(sign * g * total / denom)
        }
    };
    Ok(InnerProductValue { value, sign_exponents: se })
}

/// `N* - a(lambda) - a(tau mu) + A_O = r B_O` for every `lambda`, `mu` and label.
pub fn lemma59_check(n: u32, r: usize) -> Result<Report> {
    let all = enumerate_rpartitions(n, r);
    let ns = n_star(n, r);
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for l in &all {
        for m in &all {
            for h in enumerate_contingency(&l.weight(), &m.weight())? {
                checked += 1;
                let lhs = ns - l.a_value() - m.tau().a_value() + a_o(&h, r);
                let rhs = r as i64 * b_o(l, m, &h)?;
                if lhs != rhs {
                    violations.push(format!("({l},{m}) h={:?}: {lhs} != {rhs}", h.h));
                }
            }
        }
    }
    Ok(Report::new("lemma59", json!({"n": n, "r": r, "cases": checked}), violations))
}

/// `C + sum [j-i-1] h_ij = r sum_{i<r} h_{i,<=i}`, with `C` read off the sizes
/// of the components.
pub fn prefix_sum_check(n: u32, r: usize) -> Result<Report> {
    let all = enumerate_rpartitions(n, r);
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for l in &all {
        for m in &all {
            let lw = l.weight().0;
            let mw = m.weight().0;
            let ri = r as i64;
            let lam_part: i64 = lw.iter().enumerate().map(|(j, &x)| j as i64 * x as i64).sum();
            // |mu^(r-2)| + 2|mu^(r-3)| + ... + (r-2)|mu^(1)| + (r-1)|mu^(r)|
            let mu_part: i64 = mw
                .iter()
                .enumerate()
                .map(|(i, &x)| if i + 1 == r { (ri - 1) * x as i64 } else { (ri - 2 - i as i64) * x as i64 })
                .sum();
            let c = (ri - 1) * n as i64 - lam_part - mu_part;
            for h in enumerate_contingency(&l.weight(), &m.weight())? {
                checked += 1;
                let lhs = c + a_o(&h, r);
                let rhs = ri * (0..r.saturating_sub(1)).map(|i| h.row_prefix(i, i) as i64).sum::<i64>();
                if lhs != rhs {
                    violations.push(format!("({l},{m}) h={:?}: {lhs} != {rhs}", h.h));
                }
            }
        }
    }
    Ok(Report::new("prefix-sums", json!({"n": n, "r": r, "cases": checked}), violations))
}

#[derive(Clone, Debug, PartialEq)]
pub enum CheckMode {
    Symbolic,
    Numeric(Vec<i64>),
}

/// `omega` from the wreath oracle when it fits the bound, else the coset route.
fn omega_lhs(l: &RPartition, m: &RPartition) -> Result<(Poly, &'static str)> {
    match omega_entry_bruteforce(l, m, WREATH_BOUND) {
        Ok(p) => Ok((p, "wreath")),
        Err(Error::BoundExceeded(_)) => Ok((omega_entry_cosets(l, m)?, "cosets")),
        Err(e) => Err(e),
    }
}

/// `t^{-a(lambda)-a(tau mu)} omega_{lambda,mu}(t)` against
/// `sign * t^{-r(n(lambda)+n(mu))} <Q-_lambda, Q+_mu>` at `q = t^r`.
pub fn thm55_check(n: u32, r: usize, mode: &CheckMode) -> Result<Report> {
    let all = enumerate_rpartitions(n, r);
    let pair = SignPair::minus_plus();
    let mut violations = Vec::new();
    let mut source = "cosets";
    for l in &all {
        for m in &all {
            let (omega, src) = omega_lhs(l, m)?;
            source = src;
            let lhs = omega.shift(-l.a_value() - m.tau().a_value());
            let nshift = -(r as i64) * (l.n_value() + m.n_value()) as i64;
            match mode {
                CheckMode::Symbolic => {
                    let ip = green_inner_product(l, m, pair, &QValue::Symbolic)?;
                    let InnerValue::Symbolic(v) = &ip.value else { unreachable!() };
                    let rhs = v.substitute_tr(r as i64).shift(nshift).mul_laurent(&Poly::constant(rat(ip.sign())));
                    if RatFunc::from_laurent(lhs.clone()) != rhs {
                        violations.push(format!("({l},{m}): {lhs} != {rhs}"));
                    }
                }
                CheckMode::Numeric(qs) => {
                    for &q in qs {
                        if q < 2 {
                            return Err(Error::InvalidInput(format!("q = {q} must be at least 2")));
                        }
                        let qv = rat(q);
                        let big_q = num_traits::pow(qv.clone(), r);
                        let ip = green_inner_product(l, m, pair, &QValue::Rational(big_q))?;
                        let InnerValue::Numeric(v) = ip.value.clone() else { unreachable!() };
                        let scale = num_traits::pow(qv.clone(), (-nshift) as usize).recip();
                        let rhs = v * scale * rat(ip.sign());
                        let left = lhs.eval_at(&qv)?;
                        if left != rhs {
                            violations.push(format!("({l},{m}) at q={q}: {left} != {rhs}"));
                        }
                    }
                }
            }
        }
    }
    let mode_json = match mode {
        CheckMode::Symbolic => json!("symbolic"),
        CheckMode::Numeric(qs) => json!({"numeric": qs}),
    };
    Ok(Report::new("thm55", json!({"n": n, "r": r, "mode": mode_json, "omega": source}), violations))
}

/// Symbolic value specialized at `q` against direct numeric evaluation.
pub fn mode_consistency(lambda: &RPartition, mu: &RPartition, pair: SignPair, q: i64) -> Result<bool> {
    let s = green_inner_product(lambda, mu, pair, &QValue::Symbolic)?;
    let v = green_inner_product(lambda, mu, pair, &QValue::Rational(rat(q)))?;
    match (s.value, v.value) {
        (InnerValue::Symbolic(f), InnerValue::Numeric(x)) => Ok(f.eval_at(&rat(q))? == x),
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn sym(s: &str) -> InnerValue {
        InnerValue::Symbolic(crate::exact::parse_ratfunc(s).unwrap())
    }

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn exponents() {
        let h = ContingencyMatrix { h: vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]] };
        assert_eq!(a_exponent(SignPair::minus_plus(), &h), 3);
        let h = ContingencyMatrix { h: vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]] };
        let vals: Vec<i64> = SignPair::ALL.iter().map(|&p| a_exponent(p, &h)).collect();
        assert_eq!(vals, [1, 2, 1, 0]);
        // a single box at (s', s) contributes iff s <= s' <= r-1
        for sp in 0..3 {
            for s in 0..3 {
                let mut h = vec![vec![0; 3]; 3];
                h[sp][s] = 1;
                let want = i64::from(s <= sp && sp < 2);
                assert_eq!(a_exponent(SignPair::minus_plus(), &ContingencyMatrix { h }), want);
            }
        }
    }

    #[test]
    fn n1_r3_values() {
        let l1 = rp("(-;-;1)");
        let l2 = rp("(-;1;-)");
        let v = green_inner_product(&l2, &l2, SignPair::minus_plus(), &QValue::Symbolic).unwrap();
        assert_eq!((v.sign(), v.value), (1, sym("t")));
        // sign (-1)^{0 + 1}: the value is -1, not +1
        let v = green_inner_product(&l1, &l2, SignPair::minus_plus(), &QValue::Symbolic).unwrap();
        assert_eq!((v.value, v.sign_exponents), (sym("-1"), (0, 1)));
        let mm = SignPair { eps: Sign::Minus, eps_prime: Sign::Minus };
        let v = green_inner_product(&l2, &l2, mm, &QValue::Symbolic).unwrap();
        assert_eq!((v.sign(), v.value), (1, sym("t")));
    }

    #[test]
    fn identities_small() {
        for (n, r) in [(1, 3), (2, 3), (3, 2), (1, 6)] {
            assert!(lemma59_check(n, r).unwrap().pass);
            assert!(prefix_sum_check(n, r).unwrap().pass);
        }
    }

    #[test]
    fn inner_product_identity_small() {
        assert!(thm55_check(1, 3, &CheckMode::Symbolic).unwrap().pass);
        assert!(thm55_check(2, 2, &CheckMode::Symbolic).unwrap().pass);
        assert!(thm55_check(2, 2, &CheckMode::Numeric(vec![2, 3])).unwrap().pass);
        assert!(thm55_check(1, 3, &CheckMode::Numeric(vec![1])).is_err());
    }

    #[test]
    fn symbolic_matches_numeric() {
        let all = enumerate_rpartitions(2, 3);
        for l in &all {
            for m in &all {
                for p in SignPair::ALL {
                    assert!(mode_consistency(l, m, p, 5).unwrap());
                }
            }
        }
        let one = green_inner_product(&rp("(1)"), &rp("(1)"), SignPair::minus_plus(), &QValue::Symbolic).unwrap();
        assert_eq!(one.value, sym("1"));
        assert!(RatFunc::one() == RatFunc::from_laurent(Poly::one()) && BigRational::one() == rat(1));
    }
}
