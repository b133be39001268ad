//! Double cosets `S_m \ S_n / S_m'` by orbit search over `S_n`.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use super::perm::{all_perms, perm_rank, Perm};
use crate::error::{Error, Result};
use crate::rpart::{Composition, ContingencyMatrix, Partition};

/// Largest `n` for which `S_n` is enumerated.
pub const MAX_BRUTE_N: u32 = 8;

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCoset {
    pub label: ContingencyMatrix,
    pub representative: Perm,
    pub size: u128,
    #[serde(skip)]
    members: Vec<Perm>,
}

impl DoubleCoset {
    pub fn members(&self) -> &[Perm] {
        &self.members
    }
}

pub fn coset_members(dc: &DoubleCoset) -> impl Iterator<Item = &Perm> {
    dc.members.iter()
}

fn check(m: &Composition, m_prime: &Composition) -> Result<()> {
    if m.n() != m_prime.n() || m.r() != m_prime.r() {
        return Err(Error::Mismatch(format!("margins {:?} and {:?} disagree", m.0, m_prime.0)));
    }
    if m.n() > MAX_BRUTE_N {
        return Err(Error::BoundExceeded(format!("n = {} exceeds the enumeration bound {MAX_BRUTE_N}", m.n())));
    }
    Ok(())
}

/// `h_ij = |I_j cap x(I'_i)|` for `m`-blocks `I_j` and `m'`-blocks `I'_i`.
pub fn contingency_label(m: &Composition, m_prime: &Composition, x: &Perm) -> ContingencyMatrix {
    let r = m.r();
    let col = m.block_of();
    let mut h = vec![vec![0u32; r]; r];
    for (p, &i) in m_prime.block_of().iter().enumerate() {
        h[i][col[x.apply(p)]] += 1;
    }
    ContingencyMatrix { h }
}

/// Adjacent transpositions generating the Young subgroup `S_m`.
fn young_generators(m: &Composition) -> Vec<(usize, usize)> {
    let b = m.block_of();
    (1..b.len()).filter(|&a| b[a - 1] == b[a]).map(|a| (a - 1, a)).collect()
}

fn compute_cosets(m: &Composition, m_prime: &Composition) -> Vec<DoubleCoset> {
    let n = m.n() as usize;
    let perms = all_perms(n);
    let left = young_generators(m);
    let right = young_generators(m_prime);
    let mut visited = vec![false; perms.len()];
    let mut out = Vec::new();
    for start in 0..perms.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut members = Vec::new();
        while let Some(k) = queue.pop_front() {
            let x = &perms[k];
            members.push(x.clone());
            let mut push = |img: Vec<usize>| {
                let y = Perm::from_images(img).expect("valid");
                let ry = perm_rank(&y);
                if !visited[ry] {
                    visited[ry] = true;
                    queue.push_back(ry);
                }
            };
            for &(a, b) in &left {
                // s x: swap the values a and b
                push(
                    x.images()
                        .iter()
                        .map(|&v| {
                            if v == a {
                                b
                            } else if v == b {
                                a
                            } else {
                                v
                            }
                        })
                        .collect(),
                );
            }
            for &(a, b) in &right {
                // x s': swap positions a and b
                let mut img = x.images().to_vec();
                img.swap(a, b);
                push(img);
            }
        }
        members.sort();
        let representative = members[0].clone();
        out.push(DoubleCoset {
            label: contingency_label(m, m_prime, &representative),
            representative,
            size: members.len() as u128,
            members,
        });
    }
    out
}

type CosetKey = (Composition, Composition);

/// Cached double cosets, ordered by representative.
pub fn double_cosets(m: &Composition, m_prime: &Composition) -> Result<Arc<Vec<DoubleCoset>>> {
    static CACHE: OnceLock<RwLock<HashMap<CosetKey, Arc<Vec<DoubleCoset>>>>> = OnceLock::new();
    check(m, m_prime)?;
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (m.clone(), m_prime.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(compute_cosets(m, m_prime));
    Ok(cache.write().unwrap().entry(key).or_insert(v).clone())
}

/// Elements of `S_m cap x S_m' x^-1`: permutations of each cell `I_j cap x(I'_i)`.
pub fn intersection_elements(m: &Composition, m_prime: &Composition, x: &Perm) -> Vec<Perm> {
    let n = m.n() as usize;
    let r = m.r();
    let col = m.block_of();
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); r * r];
    for (p, &i) in m_prime.block_of().iter().enumerate() {
        let v = x.apply(p);
        cells[i * r + col[v]].push(v);
    }
    let mut acc = vec![Perm::identity(n)];
    for cell in cells.iter().filter(|c| c.len() > 1) {
        let local = all_perms(cell.len());
        acc = acc
            .iter()
            .flat_map(|base| {
                local.iter().map(move |s| {
                    let mut img = base.images().to_vec();
                    for (k, &pt) in cell.iter().enumerate() {
                        img[pt] = cell[s.apply(k)];
                    }
                    Perm::from_images(img).expect("cellwise permutation")
                })
            })
            .collect();
    }
    acc
}

/// Cycle types of `w` on each block of `m`; `w` must lie in `S_m`.
pub fn young_class(w: &Perm, m: &Composition) -> Vec<Partition> {
    let s = m.block_starts();
    (0..m.r()).map(|j| w.restricted_cycle_type(s[j]..s[j + 1]).expect("element of S_m")).collect()
}

/// Key of a pair `(x, y)`: Young class of `y` in `S_m`, Young class of
/// `x^-1 y x` in `S_m'`, cycle type of `y` in `S_n`.
pub type TallyKey = (Vec<Partition>, Vec<Partition>, Partition);

/// Per double coset, the number of pairs `(x in O, y in S_m cap x S_m' x^-1)`
/// in each class [`TallyKey`]. Character sums over the coset only depend on
/// these counts.
#[derive(Clone, Debug)]
pub struct CosetTally {
    pub label: ContingencyMatrix,
    pub size: u128,
    pub counts: Vec<(TallyKey, u128)>,
}

fn tally_pairs<'a>(
    m: &Composition,
    m_prime: &Composition,
    xs: impl Iterator<Item = &'a Perm>,
    weight: u128,
) -> Vec<(TallyKey, u128)> {
    let mut counts: HashMap<TallyKey, u128> = HashMap::new();
    for x in xs {
        for y in intersection_elements(m, m_prime, x) {
            let yc = y.conjugate_by(x);
            let key = (young_class(&y, m), young_class(&yc, m_prime), y.cycle_type());
            *counts.entry(key).or_insert(0) += weight;
        }
    }
    let mut v: Vec<_> = counts.into_iter().collect();
    v.sort();
    v
}

/// Tallies summing over every `x` in every coset.
pub fn coset_tallies(m: &Composition, m_prime: &Composition) -> Result<Arc<Vec<CosetTally>>> {
    static CACHE: OnceLock<RwLock<HashMap<CosetKey, Arc<Vec<CosetTally>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (m.clone(), m_prime.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v: Vec<CosetTally> = double_cosets(m, m_prime)?
        .iter()
        .map(|dc| CosetTally {
            label: dc.label.clone(),
            size: dc.size,
            counts: tally_pairs(m, m_prime, dc.members.iter(), 1),
        })
        .collect();
    let v = Arc::new(v);
    Ok(cache.write().unwrap().entry(key).or_insert(v).clone())
}

/// Same tallies from one representative per coset, scaled by the coset size.
pub fn coset_tallies_by_representative(m: &Composition, m_prime: &Composition) -> Result<Vec<CosetTally>> {
    Ok(double_cosets(m, m_prime)?
        .iter()
        .map(|dc| CosetTally {
            label: dc.label.clone(),
            size: dc.size,
            counts: tally_pairs(m, m_prime, std::iter::once(&dc.representative), dc.size),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpart::{enumerate_contingency, factorial};

    fn c(v: &[u32]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn trivial_and_small_cases() {
        let all = double_cosets(&c(&[3, 0]), &c(&[3, 0])).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].size, 6);
        assert_eq!(all[0].label.h, vec![vec![3, 0], vec![0, 0]]);
        let two = double_cosets(&c(&[1, 1, 0]), &c(&[1, 1, 0])).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].label.h, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        assert_eq!(two[1].label.h, vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        assert!(double_cosets(&c(&[9]), &c(&[9])).is_err());
    }

    #[test]
    fn labels_match_contingency_tables() {
        for (m, mp) in [(c(&[2, 1, 1]), c(&[1, 2, 1])), (c(&[3, 0, 2]), c(&[1, 1, 3])), (c(&[2, 2]), c(&[2, 2]))] {
            let dcs = double_cosets(&m, &mp).unwrap();
            let total: u128 = dcs.iter().map(|d| d.size).sum();
            assert_eq!(total, factorial(m.n()));
            let mut labels: Vec<_> = dcs.iter().map(|d| d.label.clone()).collect();
            labels.sort();
            let mut expect = enumerate_contingency(&m, &mp).unwrap();
            expect.sort();
            assert_eq!(labels, expect);
            for d in dcs.iter() {
                assert!(coset_members(d).all(|x| contingency_label(&m, &mp, x) == d.label));
                let inter = intersection_elements(&m, &mp, &d.representative);
                assert_eq!(inter.len() as u128, d.label.stabilizer_order());
                assert_eq!(d.size, m.young_order() * mp.young_order() / d.label.stabilizer_order());
            }
        }
    }

    #[test]
    fn representative_tally_matches_literal_sum() {
        let m = c(&[2, 1, 1]);
        let mp = c(&[1, 1, 2]);
        let a = coset_tallies(&m, &mp).unwrap();
        let b = coset_tallies_by_representative(&m, &mp).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.counts, y.counts);
        }
    }
}
