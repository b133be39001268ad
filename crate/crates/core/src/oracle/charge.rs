//! Kostka-Foulkes polynomials from the charge statistic on tableaux.

use crate::exact::rat;
use crate::rpart::{n_of, size, Partition};
use crate::Poly;

/// Semistandard tableaux of `shape` and content `content`, as rows.
pub fn ssyt(shape: &[u32], content: &[u32]) -> Vec<Vec<Vec<u32>>> {
    if size(shape) != size(content) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let rows = vec![Vec::new(); shape.len()];
    fill(shape, content, 0, rows, &mut out);
    out
}

fn fill(shape: &[u32], content: &[u32], letter: usize, rows: Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    if letter == content.len() {
        if rows.iter().zip(shape).all(|(r, &s)| r.len() == s as usize) {
            out.push(rows);
        }
        return;
    }
    // place content[letter] copies of `letter + 1` as a horizontal strip
    let cur: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
    let mut add = vec![0u32; shape.len()];
    strips(shape, &cur, 0, content[letter], &mut add, &mut |add| {
        let mut next = rows.clone();
        for (i, &k) in add.iter().enumerate() {
            next[i].extend(std::iter::repeat_n(letter as u32 + 1, k as usize));
        }
        fill(shape, content, letter + 1, next, out);
    });
}

fn strips(shape: &[u32], cur: &[u32], i: usize, left: u32, add: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i == shape.len() {
        if left == 0 {
            f(add);
        }
        return;
    }
    // new row length may not exceed the old length of the row above
    let cap = if i == 0 { shape[0] } else { cur[i - 1].min(shape[i]) };
    let max = cap.saturating_sub(cur[i]).min(left);
    for k in 0..=max {
        add[i] = k;
        strips(shape, cur, i + 1, left - k, add, f);
    }
    add[i] = 0;
}

/// Rows read from the bottom up, each left to right.
pub fn reading_word(t: &[Vec<u32>]) -> Vec<u32> {
    t.iter().rev().flatten().copied().collect()
}

/// Lascoux-Schutzenberger charge of a word with partition content.
pub fn charge(word: &[u32]) -> u32 {
    let mut w: Vec<Option<u32>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while w.iter().any(Option::is_some) {
        // extract a standard subword: 1, 2, ... scanning leftward cyclically
        let len = w.len();
        let mut pos = len;
        let mut index = 0;
        let mut letter = 1;
        let mut taken = Vec::new();
        loop {
            let found = (1..=len).map(|d| (pos + len - d) % len).find(|&p| w[p] == Some(letter) && !taken.contains(&p));
            let Some(p) = found else { break };
            if letter > 1 && p > pos {
                index += 1;
            }
            total += index;
            taken.push(p);
            pos = p;
            letter += 1;
        }
        for p in taken {
            w[p] = None;
        }
    }
    total
}

/// `K_{lambda,mu}(t) = sum_T t^{charge(T)}`.
pub fn kostka_foulkes(lambda: &[u32], mu: &[u32]) -> Poly {
    let mut p = Poly::zero();
    for t in ssyt(lambda, mu) {
        p += &Poly::monomial(rat(1), charge(&reading_word(&t)) as i64);
    }
    p
}

/// `t^{n(mu)} K_{lambda,mu}(t^-1)`.
pub fn modified_kostka(lambda: &Partition, mu: &Partition) -> Poly {
    kostka_foulkes(lambda, mu).reflect().shift(n_of(mu) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpart::partitions;

    #[test]
    fn tableau_counts() {
        assert_eq!(ssyt(&[2, 1], &[1, 1, 1]).len(), 2);
        assert_eq!(ssyt(&[3, 2], &[2, 2, 1]).len(), 2);
        assert_eq!(ssyt(&[2], &[1, 1, 1]).len(), 0);
        let f5: usize = partitions(5).iter().map(|p| ssyt(p, &[1; 5]).len().pow(2)).sum();
        assert_eq!(f5, 120);
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(kostka_foulkes(&[2], &[1, 1]).to_string(), "t");
        assert_eq!(kostka_foulkes(&[1, 1], &[1, 1]).to_string(), "1");
        assert_eq!(kostka_foulkes(&[3], &[1, 1, 1]).to_string(), "t^3");
        assert_eq!(kostka_foulkes(&[2, 1], &[1, 1, 1]).to_string(), "t^2 + t");
        assert_eq!(kostka_foulkes(&[3, 1], &[2, 1, 1]).to_string(), "t^2 + t");
        assert_eq!(kostka_foulkes(&[2, 2], &[2, 1, 1]).to_string(), "t");
        assert_eq!(kostka_foulkes(&[4], &[2, 2]).to_string(), "t^2");
        assert_eq!(kostka_foulkes(&[3, 1], &[1, 1, 1, 1]).to_string(), "t^5 + t^4 + t^3");
        assert_eq!(kostka_foulkes(&[2, 2], &[1, 1, 1, 1]).to_string(), "t^4 + t^2");
        assert_eq!(kostka_foulkes(&[2, 1, 1], &[1, 1, 1, 1]).to_string(), "t^3 + t^2 + t");
        assert_eq!(charge(&[3, 4, 1, 1, 2, 2]), 5);
        assert_eq!(charge(&[2, 2, 1, 1, 3, 4]), 3);
    }
}
