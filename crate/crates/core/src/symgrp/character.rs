//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::exact::{rat, LaurentPoly};
use crate::rpart::{partitions, size, z_value, Composition, Partition, RPartition};
use crate::Poly;

type Key = (Partition, Partition);

fn memo() -> &'static RwLock<HashMap<Key, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi^lambda(rho)`; `rho` need not be sorted.
pub fn mn_character(lambda: &[u32], rho: &[u32]) -> Result<i64> {
    if size(lambda) != size(rho) {
        return Err(Error::Mismatch(format!("|{lambda:?}| != |{rho:?}|")));
    }
    let mut rho: Partition = rho.iter().copied().filter(|&x| x > 0).collect();
    rho.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn_rec(lambda, &rho))
}

fn mn_rec(lambda: &[u32], rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    // beta-numbers: remove a k-rim hook by moving a bead from b to b - k
    let k = rho[0] as i64;
    let l = lambda.len();
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &x)| x as i64 + (l - 1 - i) as i64).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > nb && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[idx] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let mu: Partition =
            nbeta.iter().enumerate().map(|(i, &c)| (c - (l - 1 - i) as i64) as u32).filter(|&x| x > 0).collect();
        total += sign * mn_rec(&mu, &rho[1..]);
    }
    memo().write().unwrap().insert(key, total);
    total
}

/// Character table of `S_n`: rows and columns both indexed by `partitions(n)`.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    pub z: Vec<u128>,
}

impl CharTable {
    pub fn value(&self, lambda: &[u32], rho: &[u32]) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == rho)?;
        Some(self.values[i][j])
    }

    /// `sum_rho chi^a(rho) chi^b(rho) / z_rho` for rows `a`, `b`.
    pub fn row_inner(&self, a: usize, b: usize) -> BigRational {
        (0..self.partitions.len())
            .map(|k| {
                BigRational::new((self.values[a][k] * self.values[b][k]).into(), num_bigint::BigInt::from(self.z[k]))
            })
            .fold(BigRational::zero(), |x, y| x + y)
    }

    /// `sum_lambda chi^lambda(a) chi^lambda(b)`, which is `z_a` when `a = b`, else 0.
    pub fn column_inner(&self, a: usize, b: usize) -> i64 {
        (0..self.partitions.len()).map(|i| self.values[i][a] * self.values[i][b]).sum()
    }
}

/// Cached character table of `S_n`.
pub fn char_table(n: u32) -> Arc<CharTable> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let ps = partitions(n);
    let values = ps.iter().map(|l| ps.iter().map(|c| mn_rec(l, c)).collect()).collect();
    let z = ps.iter().map(|p| z_value(p)).collect();
    let t = Arc::new(CharTable { n, partitions: ps, values, z });
    cache.write().unwrap().entry(n).or_insert(t).clone()
}

/// `chi^{lambda^(1)} x ... x chi^{lambda^(r)}` at `w in S_m`.
pub fn young_character(lambda: &RPartition, w: &Perm, m: &Composition) -> Result<i64> {
    if lambda.weight() != *m {
        return Err(Error::Mismatch(format!("{lambda} does not have weight {:?}", m.0)));
    }
    let starts = m.block_starts();
    let mut v = 1;
    for j in 0..m.r() {
        let ct = w.restricted_cycle_type(starts[j]..starts[j + 1])?;
        v *= mn_rec(lambda.component(j), &ct);
        if v == 0 {
            break;
        }
    }
    Ok(v)
}

/// `det_V(t^r - y) = prod over cycles (t^{r len} - 1)`.
pub fn char_perm_det(y: &Perm, r: usize) -> Poly {
    cycle_type_det(&y.cycle_type(), r)
}

pub fn cycle_type_det(ct: &[u32], r: usize) -> Poly {
    ct.iter().fold(LaurentPoly::one(), |acc, &l| acc * LaurentPoly::t_pow_minus_one(r as i64 * l as i64))
}

/// `|T_y| = prod (q^len - 1)`; zero is an error.
pub fn torus_order(ct: &[u32], q: &BigRational) -> Result<BigRational> {
    let v = ct.iter().fold(BigRational::one(), |acc, &l| acc * (num_traits::pow(q.clone(), l as usize) - rat(1)));
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&[2], &[2]).unwrap(), 1);
        assert_eq!(mn_character(&[1, 1], &[2]).unwrap(), -1);
        assert_eq!(mn_character(&[2, 1], &[3]).unwrap(), -1);
        assert_eq!(mn_character(&[2, 1], &[1, 1, 1]).unwrap(), 2);
        assert_eq!(mn_character(&[3, 2], &[1, 1, 1, 1, 1]).unwrap(), 5);
        assert_eq!(mn_character(&[], &[]).unwrap(), 1);
        assert!(mn_character(&[2], &[1]).is_err());
    }

    #[test]
    fn orthogonality() {
        for n in 0..=6 {
            let t = char_table(n);
            let k = t.partitions.len();
            for a in 0..k {
                for b in 0..k {
                    let expect = if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(t.row_inner(a, b), expect, "n={n}");
                    let col = if a == b { t.z[a] as i64 } else { 0 };
                    assert_eq!(t.column_inner(a, b), col, "n={n}");
                }
            }
        }
    }

    #[test]
    fn young_characters() {
        let m = Composition(vec![2, 1, 0]);
        let triv: RPartition = "(2;1;-)".parse().unwrap();
        let sgn: RPartition = "(11;1;-)".parse().unwrap();
        let s = Perm::transposition(3, 0, 1);
        assert_eq!(young_character(&triv, &s, &m).unwrap(), 1);
        assert_eq!(young_character(&sgn, &s, &m).unwrap(), -1);
        assert!(young_character(&triv, &Perm::transposition(3, 1, 2), &m).is_err());
        let one: RPartition = "(21)".parse().unwrap();
        let c = Perm::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(young_character(&one, &c, &Composition(vec![3])).unwrap(), -1);
    }

    #[test]
    fn dets_and_tori() {
        assert_eq!(char_perm_det(&Perm::from_one_based(&[2, 3, 1]).unwrap(), 3).to_string(), "t^9 - 1");
        assert_eq!(char_perm_det(&Perm::identity(2), 3).to_string(), "t^6 - 2*t^3 + 1");
        assert_eq!(cycle_type_det(&[2, 1], 3).to_string(), "t^9 - t^6 - t^3 + 1");
        assert_eq!(torus_order(&[2, 1], &rat(2)).unwrap(), rat(3));
        assert_eq!(torus_order(&[3], &rat(2)).unwrap(), rat(7));
        assert!(torus_order(&[1], &rat(1)).is_err());
    }
}
