//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use particat::linalg::IntMatrix;
use particat::{Category, Limits, Partition};
use rand::Rng;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `q ⪯ p` straight from `p q = q`.
pub fn below(q: &Partition, p: &Partition) -> bool {
    q.upper() == p.upper() && q.colors() == p.colors() && p.compose(q).unwrap().partition == *q
}

/// Projectives of `C` per row length, computed once.
pub struct ProjectiveTable {
    pub by_k: HashMap<usize, Vec<Partition>>,
}

impl ProjectiveTable {
    pub fn new(c: &Category, max_k: usize) -> Self {
        let limits = Limits::default();
        let by_k = (0..=max_k).map(|k| (k, c.projectives(k, &limits).unwrap())).collect();
        ProjectiveTable { by_k }
    }

    pub fn get(&self, k: usize) -> &[Partition] {
        &self.by_k[&k]
    }
}

/// `X_C(p, q)` from its definition: projective `m ∈ C` with `m ⪯ p ⊗ q`, but not
/// `m ⪯ l ⊗ q` for any `l ≺ p` in `C`, nor `m ⪯ p ⊗ r` for any `r ≺ q` in `C`.
pub fn x_oracle(table: &ProjectiveTable, p: &Partition, q: &Partition) -> Vec<Partition> {
    let pq = p.tensor(q).unwrap();
    let smaller = |x: &Partition| -> Vec<Partition> {
        table.get(x.upper()).iter().filter(|y| *y != x && below(y, x)).cloned().collect()
    };
    let lower_p: Vec<Partition> = smaller(p).iter().map(|l| l.tensor(q).unwrap()).collect();
    let lower_q: Vec<Partition> = smaller(q).iter().map(|r| p.tensor(r).unwrap()).collect();
    let mut out: Vec<Partition> = table
        .get(pq.upper())
        .iter()
        .filter(|m| below(m, &pq))
        .filter(|m| !lower_p.iter().chain(&lower_q).any(|x| below(m, x)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Rank by Gaussian elimination over `ℚ` on a dense copy.
pub fn dense_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigRational::from_integer(m.get(r, c).into())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for j in c..cols {
                    let v = &f * &a[rank][j];
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A uniformly random restricted growth string, read as a partition of `P(k, l)`.
pub fn random_partition<R: Rng>(rng: &mut R, k: usize, l: usize) -> Partition {
    let mut labels = Vec::with_capacity(k + l);
    let mut next = 0;
    for _ in 0..k + l {
        let x = rng.gen_range(0..=next);
        if x == next {
            next += 1;
        }
        labels.push(x);
    }
    Partition::from_raw(k, &labels, None).unwrap()
}

pub fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}
