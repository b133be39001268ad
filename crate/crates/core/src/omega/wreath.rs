//! Brute-force character theory of `W = S_n x| (Z/r)^n` over `Q(zeta_r)`.
//!
//! `w = (sigma, a)` acts on `V` by `e_i -> zeta^{a_i} e_{sigma(i)}`, so
//! `(sigma, a)(tau, b) = (sigma tau, a o tau + b)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, FieldScalar, LaurentPoly};
use crate::rpart::{n_star, RPartition};
use crate::symgrp::{all_perms, mn_character, Perm};
use crate::{CycloPoly, Poly};

/// Default bound on `n * r^n` for the oracle.
pub const WREATH_BOUND: u64 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub sigma: Perm,
    pub colors: Vec<u32>,
}

/// Colored cycle type: sorted `(length, color sum mod r)` pairs.
pub type ClassKey = Vec<(u32, u32)>;

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement { sigma: Perm::identity(n), colors: vec![0; n] }
    }

    pub fn mul(&self, other: &WreathElement, r: u32) -> WreathElement {
        let colors =
            (0..self.colors.len()).map(|i| (self.colors[other.sigma.apply(i)] + other.colors[i]) % r).collect();
        WreathElement { sigma: self.sigma.compose(&other.sigma), colors }
    }

    pub fn inverse(&self, r: u32) -> WreathElement {
        let inv = self.sigma.inverse();
        let colors = (0..self.colors.len()).map(|i| (r - self.colors[inv.apply(i)]) % r).collect();
        WreathElement { sigma: inv, colors }
    }

    pub fn color_sum(&self, r: u32) -> u32 {
        self.colors.iter().sum::<u32>() % r
    }

    pub fn class_key(&self, r: u32) -> ClassKey {
        let mut k: ClassKey = self
            .sigma
            .cycles()
            .iter()
            .map(|c| (c.len() as u32, c.iter().map(|&i| self.colors[i]).sum::<u32>() % r))
            .collect();
        k.sort_unstable();
        k
    }
}

/// `delta(w) = zeta^{sum a}`.
pub fn delta_value(w: &WreathElement, r: u32) -> Cyclotomic {
    Cyclotomic::from_zeta_power(w.color_sum(r) as i64, r)
}

/// Sign of the underlying permutation.
pub fn epsilon_value(w: &WreathElement) -> i64 {
    w.sigma.sign()
}

/// `det_V(w) = epsilon(w) delta(w)`.
pub fn det_v_value(w: &WreathElement, r: u32) -> Cyclotomic {
    let d = delta_value(w, r);
    if epsilon_value(w) < 0 {
        -d
    } else {
        d
    }
}

/// `det_V(t - w) = prod over cycles (t^len - zeta^{color sum})`.
pub fn wreath_charpoly(w: &WreathElement, r: u32) -> CycloPoly {
    key_charpoly(&w.class_key(r), r)
}

fn key_charpoly(key: &ClassKey, r: u32) -> CycloPoly {
    key.iter().fold(CycloPoly::one(), |acc, &(len, s)| {
        let f =
            LaurentPoly::from_terms([(len as i64, Cyclotomic::one()), (0, -Cyclotomic::from_zeta_power(s as i64, r))]);
        acc * f
    })
}

fn check_bound(n: usize, r: u32, bound: u64) -> Result<()> {
    let size = (n as u64).saturating_mul((r as u64).saturating_pow(n as u32));
    if size > bound {
        return Err(Error::BoundExceeded(format!("n * r^n = {size} exceeds the oracle bound {bound}")));
    }
    Ok(())
}

/// All elements of `W_{n,r}`, permutation-major.
pub fn wreath_elements(n: usize, r: u32) -> Result<Vec<WreathElement>> {
    check_bound(n, r, WREATH_BOUND)?;
    Ok(enumerate_elements(n, r))
}

fn enumerate_elements(n: usize, r: u32) -> Vec<WreathElement> {
    let perms = all_perms(n);
    let total_colors = (r as usize).pow(n as u32);
    let mut out = Vec::with_capacity(perms.len() * total_colors);
    for sigma in &perms {
        for code in 0..total_colors {
            let mut c = code;
            let colors = (0..n)
                .map(|_| {
                    let d = (c % r as usize) as u32;
                    c /= r as usize;
                    d
                })
                .collect();
            out.push(WreathElement { sigma: sigma.clone(), colors });
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct WreathClass {
    pub key: ClassKey,
    pub representative: WreathElement,
    pub size: u64,
}

/// The group with its conjugacy classes.
#[derive(Debug)]
pub struct WreathGroup {
    pub n: usize,
    pub r: u32,
    pub elements: Vec<WreathElement>,
    pub classes: Vec<WreathClass>,
    class_index: HashMap<ClassKey, usize>,
}

impl WreathGroup {
    fn build(n: usize, r: u32) -> Self {
        let elements = enumerate_elements(n, r);
        let mut class_index: HashMap<ClassKey, usize> = HashMap::new();
        let mut classes: Vec<WreathClass> = Vec::new();
        for w in &elements {
            let key = w.class_key(r);
            match class_index.get(&key) {
                Some(&i) => classes[i].size += 1,
                None => {
                    class_index.insert(key.clone(), classes.len());
                    classes.push(WreathClass { key, representative: w.clone(), size: 1 });
                }
            }
        }
        WreathGroup { n, r, elements, classes, class_index }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn class_of(&self, w: &WreathElement) -> usize {
        self.class_index[&w.class_key(self.r)]
    }

    /// Index of the class of `w^-1` given the class of `w`.
    pub fn inverse_class(&self, c: usize) -> usize {
        let r = self.r;
        let mut key: ClassKey = self.classes[c].key.iter().map(|&(l, s)| (l, (r - s) % r)).collect();
        key.sort_unstable();
        self.class_index[&key]
    }
}

/// Cached group, subject to `bound` on `n * r^n`.
pub fn wreath_group(n: usize, r: u32, bound: u64) -> Result<Arc<WreathGroup>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, u32), Arc<WreathGroup>>>> = OnceLock::new();
    check_bound(n, r, bound)?;
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(g) = cache.read().unwrap().get(&(n, r)) {
        return Ok(g.clone());
    }
    let g = Arc::new(WreathGroup::build(n, r));
    Ok(cache.write().unwrap().entry((n, r)).or_insert(g).clone())
}

/// `delta_m chi^lambda` at `w` if `w in W_m`, else `None`.
fn chi_tilde(lambda: &RPartition, w: &WreathElement, r: u32) -> Option<Cyclotomic> {
    let m = lambda.weight();
    let starts = m.block_starts();
    let mut v: i64 = 1;
    let mut zeta_exp: i64 = 0;
    for j in 0..m.r() {
        let block = starts[j]..starts[j + 1];
        let ct = w.sigma.restricted_cycle_type(block.clone()).ok()?;
        v *= mn_character(lambda.component(j), &ct).expect("block size matches");
        let s: i64 = block.map(|i| w.colors[i] as i64).sum();
        zeta_exp += j as i64 * s;
    }
    if v == 0 {
        return Some(Cyclotomic::zero());
    }
    Some(Cyclotomic::from_zeta_power(zeta_exp, r) * Cyclotomic::from_int(v))
}

/// `rho^lambda(w) = (1/|W_m|) sum_{g : g^-1 w g in W_m} chi~(g^-1 w g)`, summed over all of `W`.
pub fn rho_character(lambda: &RPartition, w: &WreathElement, group: &WreathGroup) -> Cyclotomic {
    let r = group.r;
    let wm = lambda.weight().young_order() as i64 * (r as i64).pow(group.n as u32);
    let mut acc = Cyclotomic::zero();
    for g in &group.elements {
        let c = g.inverse(r).mul(w, r).mul(g, r);
        if let Some(v) = chi_tilde(lambda, &c, r) {
            acc = acc + v;
        }
    }
    acc * Cyclotomic::from_int(wm).try_inv().expect("nonzero")
}

/// `rho^lambda` on each class, cached.
pub fn rho_class_values(lambda: &RPartition, group: &WreathGroup) -> Arc<Vec<Cyclotomic>> {
    static CACHE: OnceLock<RwLock<HashMap<RPartition, Arc<Vec<Cyclotomic>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().unwrap().get(lambda) {
        return v.clone();
    }
    let v: Arc<Vec<Cyclotomic>> =
        Arc::new(group.classes.iter().map(|c| rho_character(lambda, &c.representative, group)).collect());
    cache.write().unwrap().entry(lambda.clone()).or_insert(v).clone()
}

/// `prod_{i<=n} (t^{ir} - 1) / det_V(t - w)` for the class `key`.
fn class_quotient(key: &ClassKey, n: usize, r: u32) -> CycloPoly {
    static CACHE: OnceLock<RwLock<HashMap<(ClassKey, u32), CycloPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let ck = (key.clone(), r);
    if let Some(p) = cache.read().unwrap().get(&ck) {
        return p.clone();
    }
    let full = (1..=n as i64).fold(CycloPoly::one(), |acc, i| {
        acc * LaurentPoly::from_terms([(i * r as i64, Cyclotomic::one()), (0, -Cyclotomic::one())])
    });
    let q = full
        .exact_div(&key_charpoly(key, r))
        .expect("nonzero divisor")
        .expect("characteristic polynomial divides the degree product");
    cache.write().unwrap().insert(ck, q.clone());
    q
}

/// `R(chi) = prod (t^{ir}-1)/|W| sum_w det_V(w) chi(w) / det_V(t - w)`,
/// for a class function given on `group.classes`.
pub fn fake_degree(values: &[Cyclotomic], group: &WreathGroup) -> Result<Poly> {
    let r = group.r;
    let mut acc = CycloPoly::zero();
    for (c, v) in group.classes.iter().zip(values) {
        if v.is_zero() {
            continue;
        }
        let coef = det_v_value(&c.representative, r) * v.clone() * Cyclotomic::from_int(c.size as i64);
        acc += &class_quotient(&c.key, group.n, r).scale(&coef);
    }
    let inv = Cyclotomic::from_int(group.order() as i64).try_inv().expect("nonzero");
    acc.scale(&inv).try_map_coeffs(Cyclotomic::as_rational)
}

/// `omega_{lambda,mu} = t^{N*} R(rho^lambda rho-bar^mu det-bar_V)` by brute force.
pub fn omega_entry_bruteforce(lambda: &RPartition, mu: &RPartition, bound: u64) -> Result<Poly> {
    if lambda.r() != mu.r() || lambda.n() != mu.n() {
        return Err(Error::Mismatch(format!("{lambda} and {mu} index different groups")));
    }
    let (n, r) = (lambda.n() as usize, lambda.r() as u32);
    let group = wreath_group(n, r, bound)?;
    let rl = rho_class_values(lambda, &group);
    let rm = rho_class_values(mu, &group);
    let values: Vec<Cyclotomic> = (0..group.classes.len())
        .map(|c| {
            let inv = group.inverse_class(c);
            let det_bar = det_v_value(&group.classes[inv].representative, r);
            rl[c].clone() * rm[inv].clone() * det_bar
        })
        .collect();
    Ok(fake_degree(&values, &group)?.shift(n_star(n as u32, r as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpart::enumerate_rpartitions;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn group_law_is_associative_with_inverses() {
        let g = wreath_group(2, 3, WREATH_BOUND).unwrap();
        let e = WreathElement::identity(2);
        for a in g.elements.iter().step_by(5) {
            assert_eq!(a.mul(&a.inverse(3), 3), e);
            for b in g.elements.iter().step_by(7) {
                for c in g.elements.iter().step_by(11) {
                    assert_eq!(a.mul(b, 3).mul(c, 3), a.mul(&b.mul(c, 3), 3));
                }
            }
        }
        assert_eq!(g.order(), 18);
    }

    #[test]
    fn generator_values() {
        let s0 = WreathElement { sigma: Perm::identity(2), colors: vec![1, 0] };
        assert_eq!(delta_value(&s0, 3), Cyclotomic::from_zeta_power(1, 3));
        assert_eq!(epsilon_value(&s0), 1);
        assert_eq!(det_v_value(&s0, 3), Cyclotomic::from_zeta_power(1, 3));
        assert_eq!(wreath_charpoly(&WreathElement::identity(2), 3).num_terms(), 3);
        let c = WreathElement { sigma: Perm::from_one_based(&[2, 3, 1]).unwrap(), colors: vec![1, 2, 0] };
        let p = wreath_charpoly(&c, 3).try_map_coeffs(Cyclotomic::as_rational).unwrap();
        assert_eq!(p.to_string(), "t^3 - 1");
        assert!(wreath_elements(4, 10).is_err());
    }

    #[test]
    fn linear_characters() {
        let g = wreath_group(2, 3, WREATH_BOUND).unwrap();
        for w in g.elements.iter() {
            assert_eq!(rho_character(&rp("(2;-;-)"), w, &g), Cyclotomic::one());
            assert_eq!(rho_character(&rp("(-;2;-)"), w, &g), delta_value(w, 3));
            let d2 = delta_value(w, 3) * delta_value(w, 3);
            let expect = if epsilon_value(w) < 0 { -d2 } else { d2 };
            assert_eq!(rho_character(&rp("(-;-;11)"), w, &g), expect);
        }
    }

    #[test]
    fn fake_degrees_of_delta_powers() {
        let g = wreath_group(2, 3, WREATH_BOUND).unwrap();
        for k in 0..3 {
            let vals: Vec<Cyclotomic> = g
                .classes
                .iter()
                .map(|c| Cyclotomic::from_zeta_power(k * c.representative.color_sum(3) as i64, 3))
                .collect();
            // delta^k is afforded by x_1^k ... x_n^k
            assert_eq!(fake_degree(&vals, &g).unwrap(), Poly::t_pow(2 * k));
        }
    }

    #[test]
    fn matches_coset_route_n1_r3() {
        for l in enumerate_rpartitions(1, 3) {
            for m in enumerate_rpartitions(1, 3) {
                let a = omega_entry_bruteforce(&l, &m, WREATH_BOUND).unwrap();
                let b = super::super::omega_entry_cosets(&l, &m).unwrap();
                assert_eq!(a, b, "({l},{m})");
            }
        }
    }
}
