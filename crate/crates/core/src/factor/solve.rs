use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{FieldScalar, LaurentPoly, Matrix, Scalar};
use crate::omega::OmegaMatrix;
use crate::rpart::{dominance_leq, OrderedIndex};
use crate::{Poly, RatFunc};

use super::derived::{ic_minus_matrix, ic_plus_candidate, lambda_prime, theta_matrix, IcMatrix, IcPlusCandidate};

/// `P-`, `P+` and the diagonal of `Lambda` over any coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangular<C: Scalar> {
    pub p_minus: Matrix<LaurentPoly<C>>,
    pub p_plus: Matrix<LaurentPoly<C>>,
    pub xi: Vec<LaurentPoly<C>>,
}

/// Doolittle elimination of `P- diag(xi) tP+ = omega` with
/// `p-_kk = p+_kk = t^{a_k}`. `label(k)` names index `k` in errors.
pub fn triangular_factor<C: FieldScalar>(
    omega: &Matrix<LaurentPoly<C>>,
    a: &[i64],
    label: impl Fn(usize) -> String + Sync,
) -> Result<Triangular<C>> {
    let k_len = a.len();
    if omega.rows() != k_len || omega.cols() != k_len {
        return Err(Error::Mismatch(format!("{}x{} matrix for {k_len} indices", omega.rows(), omega.cols())));
    }
    // m = diag(xi) tP+, upper triangular
    let mut m: Matrix<LaurentPoly<C>> = Matrix::filled(k_len, k_len, LaurentPoly::zero());
    let mut pm: Matrix<LaurentPoly<C>> = Matrix::filled(k_len, k_len, LaurentPoly::zero());
    for k in 0..k_len {
        let row: Vec<LaurentPoly<C>> = (k..k_len)
            .into_par_iter()
            .map(|b| {
                let mut acc = omega[(k, b)].clone();
                for g in 0..k {
                    acc = acc - &pm[(k, g)] * &m[(g, b)];
                }
                acc.shift(-a[k])
            })
            .collect();
        for (b, v) in (k..k_len).zip(row) {
            m[(k, b)] = v;
        }
        let pivot = m[(k, k)].clone();
        if pivot.is_zero() {
            return Err(Error::VanishingPivot { index: k, label: label(k) });
        }
        pm[(k, k)] = LaurentPoly::t_pow(a[k]);
        let col: Vec<LaurentPoly<C>> = (k + 1..k_len)
            .into_par_iter()
            .map(|al| {
                let mut acc = omega[(al, k)].clone();
                for g in 0..k {
                    acc = acc - &pm[(al, g)] * &m[(g, k)];
                }
                acc.exact_div(&pivot)?.ok_or_else(|| Error::NotLaurent(format!("p-({},{})", label(al), label(k))))
            })
            .collect::<Result<_>>()?;
        for (al, v) in (k + 1..k_len).zip(col) {
            pm[(al, k)] = v;
        }
    }
    let xi: Vec<LaurentPoly<C>> = (0..k_len).map(|k| m[(k, k)].shift(-a[k])).collect();
    let mut pp: Matrix<LaurentPoly<C>> = Matrix::filled(k_len, k_len, LaurentPoly::zero());
    for k in 0..k_len {
        for b in k..k_len {
            pp[(b, k)] = m[(k, b)]
                .exact_div(&xi[k])?
                .ok_or_else(|| Error::NotLaurent(format!("p+({},{})", label(b), label(k))))?;
        }
    }
    Ok(Triangular { p_minus: pm, p_plus: pp, xi })
}

/// `P- diag(xi) tP+`.
pub fn reconstruct<C: FieldScalar>(t: &Triangular<C>) -> Matrix<LaurentPoly<C>> {
    let k = t.xi.len();
    Matrix::from_fn(k, k, |i, j| {
        let mut acc = LaurentPoly::zero();
        for g in 0..=i.min(j) {
            acc += &(&(&t.p_minus[(i, g)] * &t.xi[g]) * &t.p_plus[(j, g)]);
        }
        acc
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationResult {
    pub order: OrderedIndex,
    pub omega: OmegaMatrix,
    pub p_minus: Matrix<Poly>,
    pub p_plus: Matrix<Poly>,
    pub lambda: Vec<RatFunc>,
    pub theta: Vec<Poly>,
    pub lambda_prime: Vec<RatFunc>,
    pub ic_minus: IcMatrix,
    pub ic_plus: IcPlusCandidate,
}

/// Solves `P- Lambda tP+ = Omega` in the order carried by `omega`.
pub fn solve_factorization(omega: &OmegaMatrix) -> Result<FactorizationResult> {
    let order = &omega.order;
    let a = order.a_values();
    let tri = triangular_factor(&omega.entries, &a, |k| order.items()[k].to_string())?;
    let lambda: Vec<RatFunc> = tri.xi.iter().cloned().map(RatFunc::from_laurent).collect();
    let theta = theta_matrix(order);
    let lambda_prime = lambda_prime(&lambda, &theta);
    let ic_minus = ic_minus_matrix(order, &tri.p_minus);
    let ic_plus = ic_plus_candidate(order, &tri.p_plus);
    Ok(FactorizationResult {
        order: order.clone(),
        omega: omega.clone(),
        p_minus: tri.p_minus,
        p_plus: tri.p_plus,
        lambda,
        theta,
        lambda_prime,
        ic_minus,
        ic_plus,
    })
}

/// `K(t) = t^{a(mu)} K~(t^-1)`; also maps `K` back to `K~`.
pub fn unmodify_kostka(k: &Poly, a_mu: i64) -> RatFunc {
    RatFunc::from_laurent(k.reflect().shift(a_mu))
}

impl FactorizationResult {
    pub fn xi(&self) -> Vec<Poly> {
        self.lambda.iter().map(|l| l.try_to_laurent().expect("xi is Laurent")).collect()
    }

    pub fn reconstruct(&self) -> Matrix<Poly> {
        reconstruct(&Triangular { p_minus: self.p_minus.clone(), p_plus: self.p_plus.clone(), xi: self.xi() })
    }

    /// Human-readable descriptions of every failed structural invariant.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let items = self.order.items();
        let a = self.order.a_values();
        if self.reconstruct() != self.omega.entries {
            out.push("P- Lambda tP+ != Omega".to_string());
        }
        for (i, li) in items.iter().enumerate() {
            let d = Poly::t_pow(a[i]);
            if self.p_minus[(i, i)] != d || self.p_plus[(i, i)] != d {
                out.push(format!("diagonal at {li} is not t^{}", a[i]));
            }
            for (j, lj) in items.iter().enumerate() {
                let below = dominance_leq(lj, li).expect("same group");
                for (name, p) in [("P-", &self.p_minus), ("P+", &self.p_plus)] {
                    let e = &p[(i, j)];
                    if !below && !e.is_zero() {
                        out.push(format!("{name}({li},{lj}) = {e} but {lj} is not below {li}"));
                    }
                    if e.terms().any(|(_, c)| !c.is_integer()) {
                        out.push(format!("{name}({li},{lj}) = {e} has non-integral coefficients"));
                    }
                }
            }
        }
        out
    }
}
