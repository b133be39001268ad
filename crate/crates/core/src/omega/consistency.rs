//! Per-coset check of the fake-degree factorization.
//!
//! For each double coset `O` with representative `x`, the fake degree over
//! `H = W_m cap x W_m' x^-1` computed by brute force is compared with the
//! symmetric-group sum at `t^r` times `t^{A_O}`. The coset contributions are
//! then reassembled into `t^{-N*} omega`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::cosets::{a_o, omega_entry_cosets};
use super::wreath::{det_v_value, wreath_charpoly, WreathElement};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, FieldScalar};
use crate::rpart::{n_star, ContingencyMatrix, RPartition};
use crate::symgrp::{char_perm_det, double_cosets, intersection_elements, mn_character, young_class, Perm};
use crate::{CycloPoly, Poly};

#[derive(Clone, Debug)]
pub struct CosetCheck {
    pub label: ContingencyMatrix,
    pub representative: Perm,
    /// Fake degree over `H`, by brute force.
    pub direct: Poly,
    /// `R_sym(t^r) t^{A_O}`.
    pub factored: Poly,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub cosets: Vec<CosetCheck>,
    /// `sum_O prod (t^{kr}-1) / P_H * direct_O`.
    pub assembled: Poly,
    /// `t^{-N*} omega` from the coset route.
    pub expected: Poly,
}

impl ConsistencyReport {
    pub fn holds(&self) -> bool {
        self.assembled == self.expected && self.cosets.iter().all(|c| c.direct == c.factored)
    }
}

fn cell_degree_product(h: &ContingencyMatrix, r: usize) -> Poly {
    h.h.iter()
        .flatten()
        .flat_map(|&x| 1..=x as i64)
        .fold(Poly::one(), |acc, k| acc * Poly::t_pow_minus_one(k * r as i64))
}

fn young_char(lambda: &RPartition, w: &Perm) -> i64 {
    young_class(w, &lambda.weight())
        .iter()
        .zip(lambda.components())
        .map(|(c, p)| mn_character(p, c).expect("sizes match"))
        .product()
}

fn chi_tilde(lambda: &RPartition, w: &WreathElement, r: u32) -> Cyclotomic {
    let m = lambda.weight();
    let starts = m.block_starts();
    let e: i64 =
        (0..m.r()).map(|j| j as i64 * (starts[j]..starts[j + 1]).map(|i| w.colors[i] as i64).sum::<i64>()).sum();
    Cyclotomic::from_zeta_power(e, r) * Cyclotomic::from_int(young_char(lambda, &w.sigma))
}

fn to_rational(p: &CycloPoly) -> Result<Poly> {
    p.try_map_coeffs(Cyclotomic::as_rational)
}

pub fn coset_consistency(lambda: &RPartition, mu: &RPartition) -> Result<ConsistencyReport> {
    let (n, r) = (lambda.n() as usize, lambda.r());
    let ru = r as u32;
    let m = lambda.weight();
    let mp = mu.weight();
    let colorings = (r as u64).pow(n as u32);
    let full = (1..=n as i64).fold(Poly::one(), |acc, k| acc * Poly::t_pow_minus_one(k * r as i64));
    let mut cosets = Vec::new();
    let mut assembled = Poly::zero();
    for dc in double_cosets(&m, &mp)?.iter() {
        let x = &dc.representative;
        let xw = WreathElement { sigma: x.clone(), colors: vec![0; n] };
        let xw_inv = xw.inverse(ru);
        let ph = cell_degree_product(&dc.label, r);
        let ph_c: CycloPoly = ph.map_coeffs(|c| Cyclotomic::from_rational(c.clone()));
        let sh = intersection_elements(&m, &mp, x);

        // brute force over H = S_H x| (Z/r)^n
        let mut direct = CycloPoly::zero();
        for y in &sh {
            for code in 0..colorings {
                let mut c = code;
                let colors = (0..n)
                    .map(|_| {
                        let d = (c % r as u64) as u32;
                        c /= r as u64;
                        d
                    })
                    .collect();
                let w = WreathElement { sigma: y.clone(), colors };
                let w_inv = w.inverse(ru);
                let conj_inv = xw_inv.mul(&w_inv, ru).mul(&xw, ru);
                let val = det_v_value(&w, ru)
                    * chi_tilde(lambda, &w, ru)
                    * chi_tilde(mu, &conj_inv, ru)
                    * det_v_value(&w_inv, ru);
                if val.is_zero() {
                    continue;
                }
                let q = ph_c
                    .exact_div(&wreath_charpoly(&w, ru))?
                    .ok_or_else(|| Error::Inconsistent("charpoly does not divide the cell product".into()))?;
                direct += &q.scale(&val);
            }
        }
        let h_order = Cyclotomic::from_int((sh.len() as u64 * colorings) as i64);
        let direct = to_rational(&direct.scale(&h_order.try_inv().expect("nonzero")))?;

        // symmetric-group sum evaluated at t^r, shifted by A_O
        let mut sym = Poly::zero();
        for y in &sh {
            let v = young_char(lambda, y) * young_char(mu, &y.conjugate_by(x));
            if v == 0 {
                continue;
            }
            let q = ph
                .exact_div(&char_perm_det(y, r))?
                .ok_or_else(|| Error::Inconsistent("cycle determinant does not divide the cell product".into()))?;
            sym += &q.scale(&BigRational::from_integer(BigInt::from(v)));
        }
        let factored = sym.scale(&BigRational::new(1.into(), BigInt::from(sh.len()))).shift(a_o(&dc.label, r));

        let weight = full.exact_div(&ph)?.expect("cell product divides the degree product");
        assembled += &(&weight * &direct);
        cosets.push(CosetCheck { label: dc.label.clone(), representative: x.clone(), direct, factored });
    }
    let expected = omega_entry_cosets(lambda, mu)?.shift(-n_star(n as u32, r));
    Ok(ConsistencyReport { cosets, assembled, expected })
}
