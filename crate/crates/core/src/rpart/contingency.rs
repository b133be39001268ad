use std::fmt;

use serde::{Deserialize, Serialize};

use super::rpartition::Composition;
use crate::error::{Error, Result};

/// `r x r` table with column sums `m` and row sums `m'`.
///
/// Rows index the `m'` blocks, columns the `m` blocks; `h[i][j]` is 0-based
/// for the 1-based `h_{i+1, j+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContingencyMatrix {
    pub h: Vec<Vec<u32>>,
}

impl ContingencyMatrix {
    pub fn r(&self) -> usize {
        self.h.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.h[i][j]
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.r()).map(|j| self.h.iter().map(|row| row[j]).sum()).collect()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.h.iter().map(|row| row.iter().sum()).collect()
    }

    /// `h_{i, <=j}` with 0-based `i`, `j`.
    pub fn row_prefix(&self, i: usize, j: usize) -> u32 {
        self.h[i][..=j].iter().sum()
    }

    /// `h_{<=i, j}`.
    pub fn col_prefix(&self, i: usize, j: usize) -> u32 {
        self.h[..=i].iter().map(|row| row[j]).sum()
    }

    /// `h_{<=i, <=j}`.
    pub fn block_prefix(&self, i: usize, j: usize) -> u32 {
        self.h[..=i].iter().map(|row| row[..=j].iter().sum::<u32>()).sum()
    }

    pub fn transpose(&self) -> ContingencyMatrix {
        let r = self.r();
        ContingencyMatrix { h: (0..r).map(|i| (0..r).map(|j| self.h[j][i]).collect()).collect() }
    }

    /// `prod h_ij!`, the order of `S_m cap x S_m' x^-1`.
    pub fn stabilizer_order(&self) -> u128 {
        self.h.iter().flatten().map(|&x| crate::rpart::factorial(x)).product()
    }
}

impl fmt::Debug for ContingencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.h)
    }
}

/// All tables with column sums `m` and row sums `m_prime`, by depth-first
/// fill of rows in ascending order.
pub fn enumerate_contingency(m: &Composition, m_prime: &Composition) -> Result<Vec<ContingencyMatrix>> {
    if m.n() != m_prime.n() || m.r() != m_prime.r() {
        return Err(Error::Mismatch(format!("margins {:?} and {:?} disagree", m.0, m_prime.0)));
    }
    let r = m.r();
    let mut out = Vec::new();
    let mut h = vec![vec![0u32; r]; r];
    let mut cap = m.0.clone();
    fill(0, 0, m_prime.0[0], &m_prime.0, &mut cap, &mut h, &mut out);
    Ok(out)
}

fn fill(
    i: usize,
    j: usize,
    row_rem: u32,
    rows: &[u32],
    cap: &mut Vec<u32>,
    h: &mut Vec<Vec<u32>>,
    out: &mut Vec<ContingencyMatrix>,
) {
    let r = rows.len();
    if j == r - 1 {
        // last column takes the remainder of the row
        if row_rem > cap[j] {
            return;
        }
        h[i][j] = row_rem;
        cap[j] -= row_rem;
        if i == r - 1 {
            if cap.iter().all(|&c| c == 0) {
                out.push(ContingencyMatrix { h: h.clone() });
            }
        } else {
            fill(i + 1, 0, rows[i + 1], rows, cap, h, out);
        }
        cap[j] += row_rem;
        h[i][j] = 0;
        return;
    }
    for x in 0..=row_rem.min(cap[j]) {
        h[i][j] = x;
        cap[j] -= x;
        fill(i, j + 1, row_rem - x, rows, cap, h, out);
        cap[j] += x;
    }
    h[i][j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let hs = enumerate_contingency(&Composition(vec![1, 1, 0]), &Composition(vec![0, 1, 1])).unwrap();
        assert_eq!(hs.len(), 2);
        for h in &hs {
            assert_eq!(h.col_sums(), vec![1, 1, 0]);
            assert_eq!(h.row_sums(), vec![0, 1, 1]);
        }
        let one = enumerate_contingency(&Composition(vec![3, 0, 0]), &Composition(vec![3, 0, 0])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].h[0][0], 3);
        assert!(enumerate_contingency(&Composition(vec![1, 0]), &Composition(vec![2, 0])).is_err());
    }

    #[test]
    fn transpose_bijection() {
        let m = Composition(vec![2, 1, 1]);
        let mp = Composition(vec![1, 3, 0]);
        let a = enumerate_contingency(&m, &mp).unwrap();
        let mut b: Vec<_> = enumerate_contingency(&mp, &m).unwrap().iter().map(ContingencyMatrix::transpose).collect();
        let mut a2 = a.clone();
        a2.sort();
        b.sort();
        assert_eq!(a2, b);
    }

    #[test]
    fn prefix_sums() {
        let h = ContingencyMatrix { h: vec![vec![1, 2], vec![3, 4]] };
        assert_eq!(h.row_prefix(1, 0), 3);
        assert_eq!(h.col_prefix(1, 1), 6);
        assert_eq!(h.block_prefix(0, 1), 3);
        assert_eq!(h.block_prefix(1, 1), 10);
        assert_eq!(h.stabilizer_order(), 1 * 2 * 6 * 24);
    }
}
