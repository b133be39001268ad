use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cosets::omega_entry_cosets;
use super::wreath::omega_entry_bruteforce;
use crate::error::{Error, Result};
use crate::exact::{parse_laurent, Matrix};
use crate::rpart::{OrderedIndex, RPartition};
use crate::Poly;

/// `Omega` over an ordered index: `entries[(i, j)] = omega(items[i], items[j])`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMatrix {
    pub n: u32,
    pub r: usize,
    pub order: OrderedIndex,
    pub entries: Matrix<Poly>,
}

#[derive(Serialize, Deserialize)]
struct OmegaJson {
    n: u32,
    r: usize,
    order: Vec<RPartition>,
    entries: Vec<Vec<String>>,
}

fn build<F>(order: &OrderedIndex, f: F) -> Result<OmegaMatrix>
where
    F: Fn(&RPartition, &RPartition) -> Result<Poly> + Sync,
{
    let items = order.items();
    let k = items.len();
    let flat: Vec<Poly> =
        (0..k * k).into_par_iter().map(|idx| f(&items[idx / k], &items[idx % k])).collect::<Result<_>>()?;
    let mut it = flat.into_iter();
    let entries = Matrix::from_fn(k, k, |_, _| it.next().expect("k*k entries"));
    Ok(OmegaMatrix { n: order.n(), r: order.r(), order: order.clone(), entries })
}

/// `Omega` by the double-coset route.
pub fn omega_matrix(order: &OrderedIndex) -> Result<OmegaMatrix> {
    build(order, omega_entry_cosets)
}

/// `Omega` by the wreath-product oracle.
pub fn omega_matrix_bruteforce(order: &OrderedIndex, bound: u64) -> Result<OmegaMatrix> {
    build(order, |l, m| omega_entry_bruteforce(l, m, bound))
}

impl OmegaMatrix {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn entry(&self, lambda: &RPartition, mu: &RPartition) -> Option<&Poly> {
        Some(&self.entries[(self.order.position(lambda)?, self.order.position(mu)?)])
    }

    /// The same entries indexed by another order on the same set.
    pub fn reorder(&self, order: &OrderedIndex) -> Result<OmegaMatrix> {
        if order.n() != self.n || order.r() != self.r {
            return Err(Error::Mismatch("orders index different groups".into()));
        }
        let idx: Vec<usize> = order.items().iter().map(|l| self.order.position(l).expect("same set")).collect();
        let entries = Matrix::from_fn(idx.len(), idx.len(), |i, j| self.entries[(idx[i], idx[j])].clone());
        Ok(OmegaMatrix { n: self.n, r: self.r, order: order.clone(), entries })
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }

    /// `omega(lambda, mu) == omega(t lambda, t mu)` for all pairs.
    pub fn is_transpose_symmetric(&self) -> bool {
        let items = self.order.items();
        items.iter().all(|l| items.iter().all(|m| self.entry(l, m) == self.entry(&l.transpose(), &m.transpose())))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(OmegaJson {
            n: self.n,
            r: self.r,
            order: self.order.items().to_vec(),
            entries: self.entries.map(ToString::to_string).to_rows(),
        })
        .expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: OmegaJson = serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let order = OrderedIndex::new(j.order)?;
        if order.n() != j.n || order.r() != j.r {
            return Err(Error::Mismatch("n or r disagrees with the order".into()));
        }
        let rows = j
            .entries
            .iter()
            .map(|row| row.iter().map(|s| parse_laurent(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let entries = Matrix::from_rows(rows).ok_or_else(|| Error::Mismatch("ragged matrix".into()))?;
        if entries.rows() != order.len() || entries.cols() != order.len() {
            return Err(Error::Mismatch("matrix size disagrees with the order".into()));
        }
        Ok(OmegaMatrix { n: j.n, r: j.r, order, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpart::default_total_order;

    #[test]
    fn n1_r3_matrix() {
        let om = omega_matrix(&default_total_order(1, 3)).unwrap();
        let s: Vec<Vec<String>> = om.entries.map(ToString::to_string).to_rows();
        assert_eq!(s, [["t^4", "t^2", "t^3"], ["t^3", "t^4", "t^2"], ["t^2", "t^3", "t^4"]]);
        assert!(!om.is_symmetric());
        assert!(om.is_transpose_symmetric());
    }

    #[test]
    fn r2_is_symmetric() {
        for n in 1..=3 {
            assert!(omega_matrix(&default_total_order(n, 2)).unwrap().is_symmetric());
        }
    }

    #[test]
    fn json_round_trip() {
        let om = omega_matrix(&default_total_order(2, 2)).unwrap();
        let back = OmegaMatrix::from_json(&om.to_json()).unwrap();
        assert_eq!(back, om);
        assert!(OmegaMatrix::from_json("{}").is_err());
    }
}
