use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{self, Partition};
use crate::error::{Error, Result};

/// An r-tuple of partitions `(lambda^(1); ...; lambda^(r))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPartition {
    parts: Vec<Partition>,
}

impl RPartition {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidRPartition("r must be at least 1".into()));
        }
        for p in &parts {
            if !partition::is_partition(p) {
                return Err(Error::InvalidRPartition(format!("{p:?} is not a partition")));
            }
        }
        Ok(RPartition { parts })
    }

    /// The r-partition with `p` in slot `slot` (0-based) and empty elsewhere.
    pub fn single(r: usize, slot: usize, p: Partition) -> Result<Self> {
        let mut parts = vec![Vec::new(); r];
        if slot >= r {
            return Err(Error::InvalidRPartition(format!("slot {slot} out of range for r = {r}")));
        }
        parts[slot] = p;
        Self::new(parts)
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().map(|p| partition::size(p)).sum()
    }

    /// Component `lambda^(i+1)`.
    pub fn component(&self, i: usize) -> &[u32] {
        &self.parts[i]
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn max_length(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Interleaved sequence `(l1_1, l2_1, ..., lr_1, l1_2, ...)` of length `r * width`.
    pub fn c_sequence(&self, width: usize) -> Result<Vec<u32>> {
        if width < self.max_length() {
            return Err(Error::InvalidInput(format!(
                "width {width} is smaller than the longest component ({})",
                self.max_length()
            )));
        }
        let mut c = Vec::with_capacity(self.r() * width);
        for k in 0..width {
            for p in &self.parts {
                c.push(p.get(k).copied().unwrap_or(0));
            }
        }
        Ok(c)
    }

    /// `c_sequence` padded to the default width `n`.
    pub fn c_default(&self) -> Vec<u32> {
        self.c_sequence((self.n() as usize).max(1)).expect("n bounds the part count")
    }

    pub fn n_value(&self) -> u32 {
        self.parts.iter().map(|p| partition::n_of(p)).sum()
    }

    /// `a = r n(lambda) + sum_i (i-1) |lambda^(i)|`.
    pub fn a_value(&self) -> i64 {
        let r = self.r() as i64;
        let tail: i64 = self.parts.iter().enumerate().map(|(i, p)| i as i64 * partition::size(p) as i64).sum();
        r * self.n_value() as i64 + tail
    }

    /// `(lambda^(r-1), ..., lambda^(1), lambda^(r))`.
    pub fn tau(&self) -> RPartition {
        let r = self.r();
        let mut parts: Vec<Partition> = self.parts[..r - 1].iter().rev().cloned().collect();
        parts.push(self.parts[r - 1].clone());
        RPartition { parts }
    }

    /// Componentwise conjugate.
    pub fn transpose(&self) -> RPartition {
        RPartition { parts: self.parts.iter().map(|p| partition::conjugate(p)).collect() }
    }

    pub fn weight(&self) -> Composition {
        Composition(self.parts.iter().map(|p| partition::size(p)).collect())
    }

    /// `n^2 - n - 2 n(lambda) + sum_{i<r} (r-i) |lambda^(i)|`.
    pub fn dim_x(&self) -> i64 {
        let n = self.n() as i64;
        n * n - n - 2 * self.n_value() as i64 + self.weight().weighted_head()
    }
}

impl FromStr for RPartition {
    type Err = Error;

    /// Accepts `(21;-;1)`, `21;-;1`, `(1^2;-;3)` and comma-separated parts
    /// such as `(10,2;-;1)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidRPartition(format!("{s:?}: {msg}"));
        let t = s.trim();
        let t =
            t.strip_prefix('(').map_or(Ok(t), |u| u.strip_suffix(')').ok_or_else(|| bad("unbalanced parentheses")))?;
        let mut parts = Vec::new();
        for comp in t.split(';') {
            let comp = comp.trim();
            let mut p = Vec::new();
            if !(comp.is_empty() || comp == "-" || comp == "\u{2212}" || comp == "\u{2013}") {
                if comp.contains(',') {
                    for tok in comp.split(',') {
                        let (base, exp) = match tok.trim().split_once('^') {
                            Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad("bad exponent"))?),
                            None => (tok.trim(), 1),
                        };
                        let b: u32 = base.parse().map_err(|_| bad("bad part"))?;
                        p.extend(std::iter::repeat_n(b, exp));
                    }
                } else {
                    let chars: Vec<char> = comp.chars().collect();
                    let mut i = 0;
                    while i < chars.len() {
                        let b = chars[i].to_digit(10).ok_or_else(|| bad("unexpected character"))?;
                        i += 1;
                        let mut exp = 1usize;
                        if i < chars.len() && chars[i] == '^' {
                            i += 1;
                            let start = i;
                            while i < chars.len() && chars[i].is_ascii_digit() {
                                i += 1;
                            }
                            let e: String = chars[start..i].iter().collect();
                            exp = e.parse().map_err(|_| bad("bad exponent"))?;
                        }
                        p.extend(std::iter::repeat_n(b, exp));
                    }
                }
            }
            if p.contains(&0) {
                return Err(bad("parts must be positive"));
            }
            parts.push(p);
        }
        RPartition::new(parts)
    }
}

impl fmt::Display for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "-".to_string()
                } else if p.iter().all(|&x| x < 10) {
                    p.iter().map(u32::to_string).collect()
                } else {
                    p.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "({})", comps.join(";"))
    }
}

impl fmt::Debug for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Weights `m = (m_1, ..., m_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(m: Vec<u32>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidInput("composition needs r >= 1 entries".into()));
        }
        Ok(Composition(m))
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Partial sums `p_i = m_1 + ... + m_i`, `i = 1..r`.
    pub fn p_values(&self) -> Vec<u32> {
        self.0
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// `p_1 + ... + p_{r-1}`.
    pub fn p_minus(&self) -> u32 {
        let p = self.p_values();
        p[..p.len() - 1].iter().sum()
    }

    /// `p_{r-1}`, zero when `r = 1`.
    pub fn p_plus(&self) -> u32 {
        let p = self.p_values();
        if p.len() < 2 {
            0
        } else {
            p[p.len() - 2]
        }
    }

    /// `sum_{i<r} (r-i) m_i`.
    fn weighted_head(&self) -> i64 {
        let r = self.r() as i64;
        self.0.iter().enumerate().map(|(i, &m)| (r - 1 - i as i64) * m as i64).sum()
    }

    /// `n^2 - n + sum (r-i) m_i`.
    pub fn dim_xm_unip(&self) -> i64 {
        let n = self.n() as i64;
        n * n - n + self.weighted_head()
    }

    /// Order of the Young subgroup `S_m`.
    pub fn young_order(&self) -> u128 {
        self.0.iter().map(|&m| partition::factorial(m)).product()
    }

    /// Block boundaries: block `j` is `starts[j]..starts[j+1]` on `0..n`.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut v = vec![0usize];
        for &m in &self.0 {
            v.push(v.last().unwrap() + m as usize);
        }
        v
    }

    /// Block index of each point of `0..n`.
    pub fn block_of(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(j, &m)| std::iter::repeat_n(j, m as usize)).collect()
    }
}

/// All weak compositions of `n` into `r` parts, lexicographically descending.
pub fn compositions(n: u32, r: usize) -> Vec<Composition> {
    fn go(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for x in (0..=rem).rev() {
            cur.push(x);
            go(rem - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 {
        go(n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// All r-partitions of `n` with weight `m`.
pub fn rpartitions_of_weight(m: &Composition) -> Vec<RPartition> {
    let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
    for &mi in m.parts() {
        let ps = partition::partitions(mi);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                ps.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|parts| RPartition { parts }).collect()
}

/// Every r-partition of `n`, grouped by weight (compositions descending).
pub fn enumerate_rpartitions(n: u32, r: usize) -> Vec<RPartition> {
    compositions(n, r).iter().flat_map(rpartitions_of_weight).collect()
}

/// `N* = C(n,2) r + (r-1) n`.
pub fn n_star(n: u32, r: usize) -> i64 {
    let n = n as i64;
    let r = r as i64;
    n * (n - 1) / 2 * r + (r - 1) * n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(rp("(21;-;1)").to_string(), "(21;-;1)");
        assert_eq!(rp("(1^2;-;-)").to_string(), "(11;-;-)");
        assert_eq!(rp("-;1^3;-"), rp("(-;111;-)"));
        assert_eq!(rp("(10,2;-)").to_string(), "(10,2;-)");
        assert!("(12;-)".parse::<RPartition>().is_err());
        assert!("(2;x)".parse::<RPartition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_rpartitions(1, 3).len(), 3);
        assert_eq!(enumerate_rpartitions(2, 3).len(), 9);
        assert_eq!(enumerate_rpartitions(3, 3).len(), 22);
        assert_eq!(enumerate_rpartitions(0, 3), vec![rp("(-;-;-)")]);
    }

    #[test]
    fn c_sequence_examples() {
        assert_eq!(rp("(1;-;1)").c_sequence(2).unwrap(), vec![1, 0, 1, 0, 0, 0]);
        assert_eq!(rp("(-;11;-)").c_sequence(2).unwrap(), vec![0, 1, 0, 0, 1, 0]);
        assert_eq!(rp("(-;-;-)").c_sequence(1).unwrap(), vec![0, 0, 0]);
        assert!(rp("(-;111;-)").c_sequence(2).is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(rp("(-;111;-)").n_value(), 3);
        assert_eq!(rp("(3;-;-)").n_value(), 0);
        assert_eq!(rp("(-;1;11)").n_value(), 1);
        assert_eq!(rp("(-;-;11)").a_value(), 7);
        assert_eq!(rp("(-;111;-)").a_value(), 12);
        assert_eq!(rp("(3;-;-)").a_value(), 0);
        assert_eq!(n_star(1, 3), 2);
        assert_eq!(n_star(3, 3), 15);
        assert_eq!(n_star(4, 1), 6);
    }

    #[test]
    fn involutions() {
        assert_eq!(rp("(-;1;1)").tau(), rp("(1;-;1)"));
        assert_eq!(rp("(-;11;-)").tau(), rp("(11;-;-)"));
        assert_eq!(rp("(2;-;-)").transpose(), rp("(11;-;-)"));
        assert_eq!(rp("(21;-;-)").transpose(), rp("(21;-;-)"));
        for l in enumerate_rpartitions(3, 3) {
            assert_eq!(l.tau().tau(), l);
            assert_eq!(l.transpose().transpose(), l);
        }
    }

    #[test]
    fn p_values() {
        let m = rp("(-;1;1)").weight();
        assert_eq!(m.0, vec![0, 1, 1]);
        assert_eq!(m.p_values(), vec![0, 1, 2]);
        assert_eq!((m.p_minus(), m.p_plus()), (1, 1));
        let m = Composition(vec![4, 0, 0]);
        assert_eq!((m.p_minus(), m.p_plus()), (8, 4));
        let m = Composition(vec![0, 0, 4]);
        assert_eq!((m.p_minus(), m.p_plus()), (0, 0));
    }

    #[test]
    fn dimensions() {
        assert_eq!(rp("(1;1;1)").dim_x(), 9);
        assert_eq!(rp("(4;-;-)").dim_x(), 16 - 4 + 2 * 4);
        for l in enumerate_rpartitions(3, 3) {
            assert_eq!(l.weight().dim_xm_unip() - l.dim_x(), 2 * l.n_value() as i64);
        }
    }

    #[test]
    fn serde_as_string() {
        let l = rp("(21;-;1)");
        let js = serde_json::to_string(&l).unwrap();
        assert_eq!(js, "\"(21;-;1)\"");
        assert_eq!(serde_json::from_str::<RPartition>(&js).unwrap(), l);
    }
}
