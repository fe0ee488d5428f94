//! The linear maps `T_p : (ℂ^N)^{⊗k} → (ℂ^N)^{⊗l}` attached to partitions.
//!
//! `T̊_p` has entry 1 at row `j` (lower multi-index) and column `i` (upper
//! multi-index) exactly when every block of `p` sees a single index value.
//! Multi-indices are read big-endian, so the first tensor factor is the most
//! significant digit and `T̊_{p⊗q} = T̊_p ⊗ T̊_q`.

mod brauer;
mod projection;

pub use brauer::{brauer_product, kernel_dim, xi, BrauerElement};
pub use projection::{
    class_projection, projection_p, projection_rank, psi_check, ClassProjection, ClassReport, Projection, PsiReport,
};

use serde::Serialize;

use crate::categories::Category;
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{integer_rank, IntMatrix};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMap {
    pub n: usize,
    /// `T̊_p`.
    pub matrix: IntMatrix,
    /// `T_p = N^{half_exponent / 2} T̊_p`; equals `-β(p)`.
    pub half_exponent: i64,
}

fn pow(n: usize, e: usize) -> Option<usize> {
    n.checked_pow(e as u32)
}

fn check_size(p: &Partition, n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("N must be positive".into()));
    }
    let rows = pow(n, p.upper().max(p.lower())).unwrap_or(usize::MAX);
    if rows > limits.max_rows {
        return Err(Error::Bounds { what: "matrix rows N^max(k,l)", requested: rows, limit: limits.max_rows });
    }
    Ok(())
}

/// Positions `(row, column)` of the nonzero entries of `T̊_p`.
pub fn support(p: &Partition, n: usize) -> Vec<(usize, usize)> {
    let b = p.block_count();
    let mut out = Vec::with_capacity(pow(n, b).unwrap_or(0));
    let mut v = vec![0usize; b];
    loop {
        let col = p.upper_labels().iter().fold(0, |acc, &x| acc * n + v[x as usize]);
        let row = p.lower_labels().iter().fold(0, |acc, &x| acc * n + v[x as usize]);
        out.push((row, col));
        // odometer over block values
        let mut i = b;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

pub fn t_map(p: &Partition, n: usize, limits: &Limits) -> Result<TMap> {
    check_size(p, n, limits)?;
    let mut m = IntMatrix::zeros(pow(n, p.lower()).unwrap(), pow(n, p.upper()).unwrap());
    for (r, c) in support(p, n) {
        m.set(r, c, 1);
    }
    Ok(TMap { n, matrix: m, half_exponent: -(p.stats().non_through as i64) })
}

/// Exact rank of `T̊_p` from its sparse support.
///
/// Repeated columns are dropped first, which leaves the rank unchanged.
pub fn t_rank(p: &Partition, n: usize, limits: &Limits) -> Result<usize> {
    check_size(p, n, limits)?;
    Ok(integer_rank(&distinct_columns(p, n)))
}

/// The distinct nonzero columns of `T̊_p`, as sparse 0/1 vectors.
pub fn distinct_columns(p: &Partition, n: usize) -> Vec<Vec<(usize, i64)>> {
    let mut entries = support(p, n);
    entries.sort_by_key(|&(r, c)| (c, r));
    let mut cols: Vec<Vec<(usize, i64)>> = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let c = entries[i].1;
        let mut col = Vec::new();
        while i < entries.len() && entries[i].1 == c {
            col.push((entries[i].0, 1));
            i += 1;
        }
        cols.push(col);
    }
    cols.sort();
    cols.dedup();
    cols
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub involution: bool,
    pub tensor: bool,
    pub composition: bool,
    pub partial_isometry: bool,
    /// `Some` when the bottom partition is projective.
    pub projection: Option<bool>,
}

impl FunctorReport {
    pub fn all_hold(&self) -> bool {
        self.involution && self.tensor && self.composition && self.partial_isometry && self.projection != Some(false)
    }
}

fn n_pow(n: usize, e: usize) -> Result<i64> {
    (n as i64).checked_pow(e as u32).ok_or(Error::Overflow("N^e"))
}

/// Checks the functor rules for `p ∘ q` (`q` on top, `q.lower() == p.upper()`).
pub fn check_functor(p: &Partition, q: &Partition, n: usize, limits: &Limits) -> Result<FunctorReport> {
    let tp = t_map(p, n, limits)?.matrix;
    let tq = t_map(q, n, limits)?.matrix;
    let pq = p.compose(q)?;
    let involution = t_map(&p.involution(), n, limits)?.matrix == tp.transpose()
        && t_map(&q.involution(), n, limits)?.matrix == tq.transpose();
    let tensor = match p.tensor(q) {
        Ok(x) => check_size(&x, n, limits).is_err() || t_map(&x, n, limits)?.matrix == tp.kron(&tq)?,
        Err(e) => return Err(e),
    };
    let composition = tp.mul(&tq)? == t_map(&pq.partition, n, limits)?.matrix.scale(n_pow(n, pq.loops)?)?;
    let ppstar = p.compose(&p.involution())?;
    let partial_isometry =
        tp.mul(&tp.transpose())? == t_map(&ppstar.partition, n, limits)?.matrix.scale(n_pow(n, ppstar.loops)?)?;
    let projection = if p.is_projective() {
        let beta = p.stats().non_through;
        let pp = p.compose(p)?;
        // T_p = N^{-β/2} T̊_p is a projection iff T̊_p² = N^{β/2} T̊_p and T̊_p is symmetric
        Some(
            beta % 2 == 0
                && 2 * pp.loops == beta
                && tp.mul(&tp)? == tp.scale(n_pow(n, beta / 2)?)?
                && tp.transpose() == tp,
        )
    } else {
        None
    };
    Ok(FunctorReport { involution, tensor, composition, partial_isometry, projection })
}

/// Number of blocks of the join of `p` and `q` as set partitions of the same points.
pub fn join_blocks(p: &Partition, q: &Partition) -> usize {
    let n = p.points();
    let mut uf = UnionFind::new(n);
    for x in [p, q] {
        let mut first = vec![usize::MAX; x.block_count()];
        for (i, &b) in x.labels().iter().enumerate() {
            if first[b as usize] == usize::MAX {
                first[b as usize] = i;
            } else {
                uf.union(first[b as usize], i);
            }
        }
    }
    let mut roots: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    roots.sort();
    roots.dedup();
    roots.len()
}

/// `G_pq = trace(T̊_qᵀ T̊_p) = N^{b(p ∨ q)}`.
pub fn gram_matrix(parts: &[Partition], n: usize) -> Result<IntMatrix> {
    let mut g = IntMatrix::zeros(parts.len(), parts.len());
    for (a, p) in parts.iter().enumerate() {
        for (b, q) in parts.iter().enumerate() {
            g.set(a, b, n_pow(n, join_blocks(p, q))?);
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Independence {
    pub size: usize,
    pub rank: usize,
    pub dependent: bool,
}

/// Linear independence of `{T_p : p ∈ C(k, k)}` via the rank of the Gram matrix.
pub fn independent(c: &Category, k: usize, n: usize, limits: &Limits) -> Result<Independence> {
    if n == 0 {
        return Err(Error::Invalid("N must be positive".into()));
    }
    let parts = c.enumerate(k, k, limits)?;
    let rank = gram_matrix(&parts, n)?.rank();
    Ok(Independence { size: parts.len(), rank, dependent: rank < parts.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::categories::Builtin;
    use crate::partition::set_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// `δ_p(i, j)` straight from the definition.
    fn delta(x: &Partition, upper: &[usize], lower: &[usize]) -> bool {
        let idx: Vec<usize> = upper.iter().chain(lower).copied().collect();
        (0..idx.len()).all(|a| (0..idx.len()).all(|b| x.labels()[a] != x.labels()[b] || idx[a] == idx[b]))
    }

    fn digits(mut v: usize, n: usize, len: usize) -> Vec<usize> {
        let mut out = vec![0; len];
        for i in (0..len).rev() {
            out[i] = v % n;
            v /= n;
        }
        out
    }

    #[test]
    fn matrix_matches_definition() {
        let limits = Limits::default();
        for x in set_partitions(2, 2).chain(set_partitions(1, 3)).chain(set_partitions(3, 0)) {
            for n in 1..=3 {
                let m = t_map(&x, n, &limits).unwrap().matrix;
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        let want = delta(&x, &digits(c, n, x.upper()), &digits(r, n, x.lower()));
                        assert_eq!(m.get(r, c) == 1, want, "{x} N={n} ({r},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_of_p1() {
        let limits = Limits::default();
        let x = p("aab:accc");
        assert_eq!(t_map(&x, 3, &limits).unwrap().matrix.rank(), 3);
        assert_eq!(t_rank(&x, 3, &limits).unwrap(), 3);
        assert_eq!(t_map(&x, 3, &limits).unwrap().half_exponent, -2);
    }

    #[test]
    fn functor_rules_on_small_pairs() {
        let limits = Limits::default();
        for q in set_partitions(2, 2) {
            for r in set_partitions(2, 1) {
                for n in 2..=3 {
                    let rep = check_functor(&r, &q, n, &limits).unwrap();
                    assert!(rep.all_hold(), "{r} ∘ {q} at N={n}: {rep:?}");
                }
            }
        }
        let x = p("aab:accc");
        for n in 2..=3 {
            assert!(check_functor(&x.involution(), &x, n, &limits).unwrap().all_hold());
        }
    }

    #[test]
    fn gram_entries_are_traces() {
        let limits = Limits::default();
        let parts: Vec<Partition> = set_partitions(2, 2).collect();
        let g = gram_matrix(&parts, 2).unwrap();
        for (a, x) in parts.iter().enumerate() {
            for (b, y) in parts.iter().enumerate() {
                let tx = t_map(x, 2, &limits).unwrap().matrix;
                let ty = t_map(y, 2, &limits).unwrap().matrix;
                assert_eq!(g.get(a, b), ty.frobenius(&tx).unwrap());
            }
        }
    }

    #[test]
    fn independence_thresholds() {
        let limits = Limits::default();
        assert!(!independent(&Builtin::Nc2.into(), 2, 4, &limits).unwrap().dependent);
        assert!(!independent(&Builtin::Nc.into(), 2, 4, &limits).unwrap().dependent);
        assert!(!independent(&Builtin::Nc.into(), 2, 3, &limits).unwrap().dependent);
        assert!(independent(&Builtin::Nc.into(), 2, 2, &limits).unwrap().dependent);
        assert!(!independent(&Builtin::P.into(), 1, 2, &limits).unwrap().dependent);
        assert!(!independent(&Builtin::P.into(), 2, 4, &limits).unwrap().dependent);
        assert!(independent(&Builtin::P.into(), 2, 3, &limits).unwrap().dependent);
        // Brauer diagrams on two strands stay independent down to N = 2
        assert!(!independent(&Builtin::P2.into(), 2, 2, &limits).unwrap().dependent);
        assert!(independent(&Builtin::P2.into(), 2, 1, &limits).unwrap().dependent);
    }

    #[test]
    fn size_cap() {
        let limits = Limits::default();
        assert!(matches!(t_map(&Partition::identity(7), 4, &limits), Err(Error::Bounds { .. })));
    }
}
