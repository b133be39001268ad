use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rpartition::{enumerate_rpartitions, RPartition};
use crate::error::{Error, Result};

/// Dominance: every prefix sum of `c(lambda)` is at most that of `c(mu)`.
pub fn dominance_leq(lambda: &RPartition, mu: &RPartition) -> Result<bool> {
    if lambda.r() != mu.r() || lambda.n() != mu.n() {
        return Err(Error::Mismatch(format!("cannot compare {lambda} and {mu}")));
    }
    Ok(prefix_leq(&lambda.c_default(), &mu.c_default()))
}

fn prefix_leq(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u64, 0u64);
    a.iter().zip(b).all(|(&x, &y)| {
        sa += x as u64;
        sb += y as u64;
        sa <= sb
    })
}

/// A total order on `P(n,r)` compatible with dominance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedIndex {
    items: Vec<RPartition>,
    pos: HashMap<RPartition, usize>,
}

impl OrderedIndex {
    /// Checks coverage of `P(n,r)` and compatibility with dominance.
    pub fn new(items: Vec<RPartition>) -> Result<Self> {
        let first = items.first().ok_or_else(|| Error::InvalidInput("empty order".into()))?;
        let (n, r) = (first.n(), first.r());
        let pos: HashMap<RPartition, usize> = items.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        if pos.len() != items.len() {
            return Err(Error::InvalidInput("order lists an r-partition twice".into()));
        }
        let all = enumerate_rpartitions(n, r);
        if all.len() != items.len() || all.iter().any(|l| !pos.contains_key(l)) {
            return Err(Error::InvalidInput(format!("order does not cover all r-partitions of n={n}, r={r}")));
        }
        let cs: Vec<Vec<u32>> = items.iter().map(RPartition::c_default).collect();
        for j in 0..items.len() {
            for i in j + 1..items.len() {
                if prefix_leq(&cs[i], &cs[j]) {
                    return Err(Error::InvalidInput(format!(
                        "{} is dominated by {} but listed after it",
                        items[i], items[j]
                    )));
                }
            }
        }
        Ok(OrderedIndex { items, pos })
    }

    /// Parses one r-partition per nonblank line; `#` starts a comment.
    pub fn parse_lines(text: &str) -> Result<Self> {
        let items = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<RPartition>>>()?;
        Self::new(items)
    }

    pub fn items(&self) -> &[RPartition] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position(&self, l: &RPartition) -> Option<usize> {
        self.pos.get(l).copied()
    }

    pub fn n(&self) -> u32 {
        self.items[0].n()
    }

    pub fn r(&self) -> usize {
        self.items[0].r()
    }

    pub fn a_values(&self) -> Vec<i64> {
        self.items.iter().map(RPartition::a_value).collect()
    }
}

impl Serialize for OrderedIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.items.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<RPartition>::deserialize(d)?;
        OrderedIndex::new(items).map_err(serde::de::Error::custom)
    }
}

/// Ascending lexicographic order on `c(lambda)`.
pub fn default_total_order(n: u32, r: usize) -> OrderedIndex {
    let mut items = enumerate_rpartitions(n, r);
    items.sort_by_cached_key(RPartition::c_default);
    OrderedIndex::new(items).expect("c-lex refines dominance")
}

/// Random topological sorts of dominance, reproducible under `seed`.
///
/// Orders are distinct as long as enough linear extensions exist; otherwise
/// the distinct ones found are repeated cyclically to reach `count`.
pub fn sample_linear_extensions(n: u32, r: usize, count: usize, seed: u64) -> Vec<OrderedIndex> {
    let items = default_total_order(n, r).items;
    let m = items.len();
    let cs: Vec<Vec<u32>> = items.iter().map(RPartition::c_default).collect();
    // preds[i] = strict predecessors of i under dominance
    let preds: Vec<Vec<usize>> =
        (0..m).map(|i| (0..m).filter(|&j| j != i && prefix_leq(&cs[j], &cs[i])).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let attempts = count.saturating_mul(50).max(50);
    for _ in 0..attempts {
        if found.len() == count {
            break;
        }
        let mut placed = vec![false; m];
        let mut seq = Vec::with_capacity(m);
        while seq.len() < m {
            let avail: Vec<usize> = (0..m).filter(|&i| !placed[i] && preds[i].iter().all(|&j| placed[j])).collect();
            let pick = avail[rng.gen_range(0..avail.len())];
            placed[pick] = true;
            seq.push(pick);
        }
        if seen.insert(seq.clone()) {
            found.push(seq);
        }
    }
    (0..count)
        .map(|k| {
            let seq = &found[k % found.len()];
            OrderedIndex::new(seq.iter().map(|&i| items[i].clone()).collect()).expect("topological sort")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&rp("(-;1;1)"), &rp("(1;-;1)")).unwrap());
        let a = rp("(-;11;-)");
        let b = rp("(-;-;2)");
        assert!(!dominance_leq(&a, &b).unwrap());
        assert!(!dominance_leq(&b, &a).unwrap());
        assert!(dominance_leq(&a, &a).unwrap());
        assert!(dominance_leq(&a, &rp("(2;-)")).is_err());
    }

    #[test]
    fn default_order_n1() {
        let o = default_total_order(1, 3);
        let s: Vec<String> = o.items().iter().map(ToString::to_string).collect();
        assert_eq!(s, ["(-;-;1)", "(-;1;-)", "(1;-;-)"]);
        assert_eq!(o.a_values(), vec![2, 1, 0]);
    }

    #[test]
    fn invalid_orders_rejected() {
        let mut items = default_total_order(1, 3).items().to_vec();
        items.swap(0, 2);
        assert!(OrderedIndex::new(items.clone()).is_err());
        items.pop();
        assert!(OrderedIndex::new(items).is_err());
    }

    #[test]
    fn sampled_extensions() {
        let one = sample_linear_extensions(1, 3, 4, 7);
        assert_eq!(one.len(), 4);
        assert!(one.iter().all(|o| o == &default_total_order(1, 3)));
        let a = sample_linear_extensions(2, 3, 5, 42);
        let b = sample_linear_extensions(2, 3, 5, 42);
        assert_eq!(a, b);
        let distinct: HashSet<Vec<RPartition>> = a.iter().map(|o| o.items().to_vec()).collect();
        assert_eq!(distinct.len(), 5);
    }

    #[test]
    fn parse_order_file() {
        let o = OrderedIndex::parse_lines("# n=1\n(-;-;1)\n(-;1;-)\n\n(1;-;-)\n").unwrap();
        assert_eq!(o, default_total_order(1, 3));
    }
}
