//! The algebra on `C(k, k)` with the loop-weighted product, and its map to matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{gram_matrix, t_map};
use crate::categories::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::RatMatrix;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerElement {
    k: usize,
    terms: BTreeMap<Partition, BigRational>,
}

impl BrauerElement {
    pub fn zero(k: usize) -> Self {
        BrauerElement { k, terms: BTreeMap::new() }
    }

    pub fn basis(p: &Partition) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare { upper: p.upper(), lower: p.lower() });
        }
        let mut x = Self::zero(p.upper());
        x.add_term(p.clone(), BigRational::one());
        Ok(x)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn add_term(&mut self, p: Partition, c: BigRational) {
        let e = self.terms.entry(p).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_k(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero(self.k);
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect();
        }
        out
    }

    pub fn star(&self) -> Self {
        BrauerElement { k: self.k, terms: self.terms.iter().map(|(p, c)| (p.involution(), c.clone())).collect() }
    }

    fn same_k(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Arity { expected: self.k, found: other.k });
        }
        Ok(())
    }
}

/// `x · y` with `p · q = N^{rl(p, q)} p q` on basis elements.
pub fn brauer_product(x: &BrauerElement, y: &BrauerElement, n: usize) -> Result<BrauerElement> {
    x.same_k(y)?;
    let mut out = BrauerElement::zero(x.k);
    for (p, a) in &x.terms {
        for (q, b) in &y.terms {
            let pq = p.compose(q)?;
            let w = BigRational::from_integer(BigInt::from(n).pow(pq.loops as u32));
            out.add_term(pq.partition, a * b * w);
        }
    }
    Ok(out)
}

/// `Ξ(x) = Σ c_p T̊_p`.
pub fn xi(x: &BrauerElement, n: usize, limits: &Limits) -> Result<RatMatrix> {
    let dim = n.checked_pow(x.k as u32).ok_or(Error::Overflow("N^k"))?;
    let mut out = RatMatrix::zeros(dim, dim);
    for (p, c) in &x.terms {
        out = out.add(&t_map(p, n, limits)?.matrix.to_rational().scale(c))?;
    }
    Ok(out)
}

/// `dim ker Ξ = |C(k, k)| − rank {T̊_p}`.
pub fn kernel_dim(c: &Category, k: usize, n: usize, limits: &Limits) -> Result<usize> {
    if n == 0 {
        return Err(Error::Invalid("N must be positive".into()));
    }
    let rows = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    if rows > limits.max_rows {
        return Err(Error::Bounds { what: "matrix rows N^k", requested: rows, limit: limits.max_rows });
    }
    let parts = c.enumerate(k, k, limits)?;
    Ok(parts.len() - gram_matrix(&parts, n)?.rank())
}
