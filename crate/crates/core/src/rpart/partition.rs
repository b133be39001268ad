//! Plain integer partitions, stored as weakly decreasing `Vec<u32>`.

pub type Partition = Vec<u32>;

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn size(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// `n(p) = sum (i-1) p_i`.
pub fn n_of(p: &[u32]) -> u32 {
    p.iter().enumerate().map(|(i, &x)| i as u32 * x).sum()
}

pub fn conjugate(p: &[u32]) -> Partition {
    let len = p.first().copied().unwrap_or(0);
    (1..=len).map(|k| p.iter().filter(|&&x| x >= k).count() as u32).collect()
}

pub fn is_partition(p: &[u32]) -> bool {
    p.iter().all(|&x| x > 0) && p.windows(2).all(|w| w[0] >= w[1])
}

/// Multiplicities `m_k` of each part size `k`, index 0 unused.
pub fn multiplicities(p: &[u32]) -> Vec<u32> {
    let mut m = vec![0; p.first().map_or(1, |&x| x as usize + 1)];
    for &x in p {
        m[x as usize] += 1;
    }
    m
}

/// Centralizer order `z_p = prod k^{m_k} m_k!`.
pub fn z_value(p: &[u32]) -> u128 {
    multiplicities(p)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u128).pow(m) * (1..=m as u128).product::<u128>())
        .product()
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}
