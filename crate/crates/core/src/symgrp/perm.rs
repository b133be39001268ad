use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rpart::Partition;

/// A permutation of `0..n` in one-line form: `self.img[i]` is the image of `i`.
///
/// Serialized 1-based, as the one-line word on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("{img:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub fn from_one_based(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidInput("one-based word contains 0".into()));
        }
        Self::from_images(word.iter().map(|&x| x - 1).collect())
    }

    /// Transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.img.swap(a, b);
        p
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.img.iter().map(|x| x + 1).collect()
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Perm { img: inv }
    }

    /// `x^-1 self x`.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        x.inverse().compose(self).compose(x)
    }

    /// Cycles as lists of points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.img[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.img[x];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut t: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type of the restriction to `points`, which must be invariant.
    pub fn restricted_cycle_type(&self, points: std::ops::Range<usize>) -> Result<Partition> {
        let mut seen = vec![false; self.n()];
        let mut t = Vec::new();
        for s in points.clone() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            loop {
                if !points.contains(&x) {
                    return Err(Error::InvalidInput(format!("{self} does not stabilize {points:?}")));
                }
                seen[x] = true;
                len += 1;
                x = self.img[x];
                if x == s {
                    break;
                }
            }
            t.push(len);
        }
        t.sort_unstable_by(|a, b| b.cmp(a));
        Ok(t)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Perm { img: cur.clone() }];
    // next-permutation iteration
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm { img: cur.clone() });
    }
    out
}

/// Lexicographic rank of a permutation, a dense index into `all_perms(n)`.
pub fn perm_rank(p: &Perm) -> usize {
    let n = p.n();
    let mut rank = 0;
    let mut used = 0u32;
    let mut fact: usize = (1..n).product();
    for (k, &x) in p.img.iter().enumerate() {
        let smaller = (0..x).filter(|&y| used & (1 << y) == 0).count();
        rank += smaller * fact;
        used |= 1 << x;
        if k + 1 < n {
            fact /= n - 1 - k;
        }
    }
    rank
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Vec::<usize>::deserialize(d)?;
        Perm::from_one_based(&w).map_err(serde::de::Error::custom)
    }
}
