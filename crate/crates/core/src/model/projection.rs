//! The projections `P_p = T_p − R_p` and their class sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{distinct_columns, t_map, t_rank};
use crate::categories::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{integer_rank, orthogonal_projection, RatMatrix};
use crate::partition::Partition;
use crate::structure::{equivalence_classes, p_sigma, strictly_dominates, sym_group};

fn require_projective(p: &Partition) -> Result<()> {
    if p.is_projective() {
        Ok(())
    } else {
        Err(Error::NotProjective(p.to_string()))
    }
}

/// `T_p = N^{-β/2} T̊_p`. Only defined for even `β`.
pub(crate) fn normalized(p: &Partition, n: usize, limits: &Limits) -> Result<RatMatrix> {
    let beta = p.stats().non_through;
    if beta % 2 != 0 {
        return Err(Error::NotProjective(p.to_string()));
    }
    let m = t_map(p, n, limits)?.matrix.to_rational();
    let d = BigInt::from(n).pow(beta as u32 / 2);
    Ok(m.scale(&BigRational::new(BigInt::one(), d)))
}

fn dense(col: &[(usize, i64)], len: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); len];
    for &(r, x) in col {
        v[r] = BigRational::from_integer(x.into());
    }
    v
}

/// Projectives of `C` strictly dominated by `p`.
pub fn dominated(c: &Category, p: &Partition, limits: &Limits) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for q in c.projectives(p.upper(), limits)? {
        if strictly_dominates(p, &q)? {
            out.push(q);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub dominated: Vec<Partition>,
}

/// `P_p`, with `R_p` the orthogonal projection onto the column spaces of `T̊_q`, `q ≺ p`.
pub fn projection_p(c: &Category, p: &Partition, n: usize, limits: &Limits) -> Result<Projection> {
    require_projective(p)?;
    c.require(p)?;
    let t = normalized(p, n, limits)?;
    let dim = t.rows();
    let dom = dominated(c, p, limits)?;
    let mut vectors = Vec::new();
    for q in &dom {
        vectors.extend(distinct_columns(q, n).iter().map(|col| dense(col, dim)));
    }
    let r = orthogonal_projection(dim, &vectors);
    let matrix = t.sub(&r)?;
    let rank = matrix.rank();
    Ok(Projection { matrix, rank, dominated: dom })
}

/// `rank P_p`, without building `P_p`.
///
/// The range of `R_p` sits inside the range of `T_p`, so the rank is the
/// difference of two column-space dimensions.
pub fn projection_rank(c: &Category, p: &Partition, n: usize, limits: &Limits) -> Result<usize> {
    require_projective(p)?;
    c.require(p)?;
    let full = t_rank(p, n, limits)?;
    let mut cols = Vec::new();
    for q in dominated(c, p, limits)? {
        cols.extend(distinct_columns(&q, n));
    }
    cols.sort();
    cols.dedup();
    Ok(full - integer_rank(&cols))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub representative: Partition,
    pub members: Vec<Partition>,
    /// `rank P_[p]`.
    pub class_rank: usize,
    /// `rank P_p` for the representative.
    pub rank: usize,
    /// `class_rank / rank` when that is a positive integer.
    pub multiplicity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassProjection {
    pub dimension: usize,
    pub classes: Vec<ClassReport>,
    pub total_rank: usize,
    pub orthogonal: bool,
    /// The class projections sum to the identity.
    pub complete: bool,
}

/// Decomposes `(ℂ^N)^{⊗k}` along the `∼`-classes of projectives in `C(k, k)`.
pub fn class_projection(c: &Category, k: usize, n: usize, limits: &Limits) -> Result<ClassProjection> {
    let parts = c.projectives(k, limits)?;
    let classes = equivalence_classes(c, &parts, limits)?;
    let mut mats = Vec::new();
    let mut reports = Vec::new();
    let mut dimension = 1;
    for class in classes {
        let mut vectors = Vec::new();
        let mut rep_rank = 0;
        for (i, q) in class.iter().enumerate() {
            let pq = projection_p(c, q, n, limits)?;
            dimension = pq.matrix.rows();
            if i == 0 {
                rep_rank = pq.rank;
            }
            vectors.extend((0..pq.matrix.cols()).map(|j| pq.matrix.column(j)));
        }
        let m = orthogonal_projection(dimension, &vectors);
        let class_rank = m.rank();
        let multiplicity = (rep_rank > 0 && class_rank % rep_rank == 0 && class_rank > 0).then(|| class_rank / rep_rank);
        mats.push(m);
        reports.push(ClassReport {
            representative: class[0].clone(),
            members: class,
            class_rank,
            rank: rep_rank,
            multiplicity,
        });
    }
    let mut orthogonal = true;
    for (a, x) in mats.iter().enumerate() {
        for y in &mats[a + 1..] {
            orthogonal &= x.mul(y)?.is_zero();
        }
    }
    let mut sum = RatMatrix::zeros(dimension, dimension);
    for m in &mats {
        sum = sum.add(m)?;
    }
    Ok(ClassProjection {
        dimension,
        total_rank: reports.iter().map(|r| r.class_rank).sum(),
        classes: reports,
        orthogonal,
        complete: sum == RatMatrix::identity(dimension),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiReport {
    pub sym_order: usize,
    /// `P_p T_{p_σ} P_p · P_p T_{p_σ'} P_p = P_p T_{p_σσ'} P_p` for all pairs.
    pub multiplicative: bool,
    /// The identity permutation goes to `P_p`.
    pub unital: bool,
    /// Dimension of the span of the images.
    pub image_dim: usize,
    /// Dimension of `P_p C(k, k) P_p`.
    pub aut_dim: usize,
    /// `P_p = 0`.
    pub vanishes: bool,
}

impl PsiReport {
    pub fn holds(&self) -> bool {
        self.multiplicative && self.unital && self.aut_dim <= self.sym_order && self.image_dim == self.aut_dim
    }
}

fn flatten(m: &RatMatrix) -> Vec<BigRational> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn span_dim(ms: &[RatMatrix]) -> usize {
    let vs: Vec<Vec<BigRational>> = ms.iter().map(flatten).collect();
    crate::linalg::independent_subset(&vs).len()
}

/// Checks that `σ ↦ P_p T_{p_σ} P_p` is a unital homomorphism from the group
/// algebra of `Sym(p)` onto `P_p C(k, k) P_p`.
pub fn psi_check(c: &Category, p: &Partition, n: usize, limits: &Limits) -> Result<PsiReport> {
    require_projective(p)?;
    if p.through_count() == 0 {
        return Err(Error::Invalid("p needs a through-block".into()));
    }
    let proj = projection_p(c, p, n, limits)?.matrix;
    let sym = sym_group(c, p, limits)?;
    let sandwich = |m: &RatMatrix| -> Result<RatMatrix> { proj.mul(m)?.mul(&proj) };
    let mut images = Vec::with_capacity(sym.len());
    for s in &sym {
        images.push(sandwich(&normalized(&p_sigma(p, s)?, n, limits)?)?);
    }
    let mut multiplicative = true;
    for (a, sa) in sym.iter().enumerate() {
        for (b, sb) in sym.iter().enumerate() {
            let ab = sa.then_after(sb);
            let rhs = sandwich(&normalized(&p_sigma(p, &ab)?, n, limits)?)?;
            multiplicative &= images[a].mul(&images[b])? == rhs;
        }
    }
    let unital = sym.iter().zip(&images).all(|(s, m)| !s.is_identity() || *m == proj);
    let mut aut = Vec::new();
    for q in c.enumerate(p.upper(), p.upper(), limits)? {
        let m = t_map(&q, n, limits)?.matrix.to_rational();
        aut.push(sandwich(&m)?);
    }
    Ok(PsiReport {
        sym_order: sym.len(),
        multiplicative,
        unital,
        image_dim: span_dim(&images),
        aut_dim: span_dim(&aut),
        vanishes: proj.is_zero(),
    })
}
