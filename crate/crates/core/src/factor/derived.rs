//! Diagonal rescalings `Theta`, `Lambda'`, `P''` and the IC-style normalizations.

use num_traits::Signed;

use crate::exact::Matrix;
use crate::rpart::OrderedIndex;
use crate::{Poly, RatFunc};

/// `Theta = Diag(t^{a(lambda) - a(tau lambda)})`.
pub fn theta_matrix(order: &OrderedIndex) -> Vec<Poly> {
    order.items().iter().map(|l| Poly::t_pow(l.a_value() - l.tau().a_value())).collect()
}

/// `Lambda' = Lambda Theta`.
pub fn lambda_prime(lambda: &[RatFunc], theta: &[Poly]) -> Vec<RatFunc> {
    lambda.iter().zip(theta).map(|(l, t)| l.mul_laurent(t)).collect()
}

/// `P'' = P+ Theta^-1`; `theta` must be monomials.
pub fn modified_pplus(p_plus: &Matrix<Poly>, theta: &[Poly]) -> Matrix<Poly> {
    let exps: Vec<i64> = theta.iter().map(|t| t.low_exp().expect("monomial")).collect();
    Matrix::from_fn(p_plus.rows(), p_plus.cols(), |i, j| p_plus[(i, j)].shift(-exps[j]))
}

/// A rescaled Kostka entry and, when it lies in `Z_{>=0}[s]` for `s = t^r`,
/// its expression in `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct IcEntry {
    pub value: Poly,
    pub in_s: Option<Poly>,
}

impl IcEntry {
    fn new(value: Poly, r: usize) -> Self {
        let ok = value.is_poly_in_tr(r as i64) && value.terms().all(|(_, c)| c.is_integer() && !c.is_negative());
        let in_s = if ok { value.contract_tr(r as i64) } else { None };
        IcEntry { value, in_s }
    }

    pub fn valid(&self) -> bool {
        self.in_s.is_some()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IcMatrix {
    pub entries: Matrix<IcEntry>,
}

impl IcMatrix {
    pub fn all_valid(&self) -> bool {
        self.entries.iter_rows().flatten().all(IcEntry::valid)
    }

    pub fn values(&self) -> Matrix<Poly> {
        self.entries.map(|e| e.value.clone())
    }
}

/// The `P+` normalization; an IC matrix only where `column_hypothesis` holds.
#[derive(Clone, Debug, PartialEq)]
pub struct IcPlusCandidate {
    pub entries: Matrix<IcEntry>,
    /// Column `nu` has weight `m''` with `m''_i = 0` for `i <= r-2`.
    pub column_hypothesis: Vec<bool>,
}

impl IcPlusCandidate {
    pub fn all_valid(&self) -> bool {
        self.entries.iter_rows().flatten().all(IcEntry::valid)
    }

    pub fn values(&self) -> Matrix<Poly> {
        self.entries.map(|e| e.value.clone())
    }
}

/// `t^{-a(lambda)} K~-_{lambda,mu}`.
pub fn ic_minus_matrix(order: &OrderedIndex, p_minus: &Matrix<Poly>) -> IcMatrix {
    let a = order.a_values();
    let r = order.r();
    IcMatrix { entries: Matrix::from_fn(a.len(), a.len(), |i, j| IcEntry::new(p_minus[(i, j)].shift(-a[i]), r)) }
}

/// `t^{-a(tau mu) - a(nu) + a(tau nu)} K~+_{mu,nu}`.
pub fn ic_plus_candidate(order: &OrderedIndex, p_plus: &Matrix<Poly>) -> IcPlusCandidate {
    let items = order.items();
    let r = order.r();
    let a = order.a_values();
    let at: Vec<i64> = items.iter().map(|l| l.tau().a_value()).collect();
    let entries =
        Matrix::from_fn(a.len(), a.len(), |i, j| IcEntry::new(p_plus[(i, j)].shift(-at[i] - a[j] + at[j]), r));
    let column_hypothesis =
        items.iter().map(|l| l.weight().0.iter().take(r.saturating_sub(2)).all(|&m| m == 0)).collect();
    IcPlusCandidate { entries, column_hypothesis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::solve_factorization;
    use crate::omega::omega_matrix;
    use crate::rpart::default_total_order;

    #[test]
    fn n1_general_r() {
        for r in 2..=5usize {
            let res = solve_factorization(&omega_matrix(&default_total_order(1, r)).unwrap()).unwrap();
            let th: Vec<i64> = res.theta.iter().map(|t| t.low_exp().unwrap()).collect();
            let mut expect = vec![0];
            expect.extend((1..r as i64).map(|i| r as i64 - 2 * i));
            assert_eq!(th, expect);
            for (i, l) in res.lambda_prime.iter().enumerate() {
                let want = if i == 0 { Poly::one() } else { Poly::t_pow_minus_one(r as i64) };
                assert_eq!(l.try_to_laurent().unwrap(), want);
            }
            assert!(res.ic_minus.all_valid() && res.ic_plus.all_valid());
            for i in 0..r {
                for j in 0..r {
                    let lower = if j <= i { 1 } else { 0 };
                    let plus = if i == j || (j == 0) { 1 } else { 0 };
                    assert_eq!(res.ic_minus.values()[(i, j)], Poly::constant(crate::exact::rat(lower)));
                    assert_eq!(res.ic_plus.values()[(i, j)], Poly::constant(crate::exact::rat(plus)));
                }
            }
        }
    }

    #[test]
    fn n1_r3_double_prime() {
        let res = solve_factorization(&omega_matrix(&default_total_order(1, 3)).unwrap()).unwrap();
        let pp = modified_pplus(&res.p_plus, &res.theta);
        let s: Vec<Vec<String>> = pp.map(ToString::to_string).to_rows();
        assert_eq!(s, [["t^2", "0", "0"], ["1", "1", "0"], ["t", "0", "t"]]);
        assert_eq!(res.ic_plus.column_hypothesis, [true, true, false]);
    }
}
