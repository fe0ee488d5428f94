//! Exact matrices over `ℤ` and `ℚ`.
//!
//! Ranks use fraction-free elimination on sparse rows, first with checked
//! `i128` arithmetic and, if that overflows, again with big integers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Arity { expected: self.cols, found: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let v = a.checked_mul(b).and_then(|x| x.checked_add(out.get(r, c)));
                        out.set(r, c, v.ok_or(Error::Overflow("integer matrix product"))?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` as the most significant factor.
    pub fn kron(&self, other: &IntMatrix) -> Result<IntMatrix> {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let v = a.checked_mul(other.get(r2, c2)).ok_or(Error::Overflow("kronecker product"))?;
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: i64) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.checked_mul(s).ok_or(Error::Overflow("matrix scaling")))
            .collect::<Result<_>>()?;
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.rows)
            .map(|r| (0..self.cols).filter_map(|c| Some((c, self.get(r, c))).filter(|x| x.1 != 0)).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        integer_rank(&self.sparse_rows())
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
        }
    }

    /// Sum of entrywise products, i.e. `trace(selfᵀ other)`.
    pub fn frobenius(&self, other: &IntMatrix) -> Result<i64> {
        let mut acc: i64 = 0;
        for (a, b) in self.data.iter().zip(&other.data) {
            acc = a.checked_mul(*b).and_then(|x| x.checked_add(acc)).ok_or(Error::Overflow("trace"))?;
        }
        Ok(acc)
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vec<BigRational>]) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Arity { expected: self.cols, found: other.rows });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &RatMatrix, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Arity { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &BigRational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Rows scaled to integers; scaling a row does not change the rank.
    fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, x.numer() * (&l / x.denom())))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        big_rank(&self.integer_rows())
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Inverse by Gauss–Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.get(col, col).recip();
            for c in 0..n {
                a.data[col * n + c] *= &p;
                inv.data[col * n + c] *= &p;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let x = &f * a.get(col, c);
                    a.data[r * n + c] -= x;
                    let y = &f * inv.get(col, c);
                    inv.data[r * n + c] -= y;
                }
            }
        }
        Some(inv)
    }
}

/// Orthogonal projection onto the span of the given vectors in `ℚ^n`.
pub fn orthogonal_projection(n: usize, vectors: &[Vec<BigRational>]) -> RatMatrix {
    let basis = independent_subset(vectors);
    if basis.is_empty() {
        return RatMatrix::zeros(n, n);
    }
    let b = RatMatrix::from_columns(n, &basis);
    let bt = b.transpose();
    let gram = bt.mul(&b).expect("shapes agree");
    let inv = gram.inverse().expect("gram matrix of independent vectors is invertible");
    b.mul(&inv).and_then(|x| x.mul(&bt)).expect("shapes agree")
}

/// A maximal linearly independent subset, in input order.
pub fn independent_subset(vectors: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut echelon = Echelon::<BigInt>::default();
    let mut out = Vec::new();
    for v in vectors {
        let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let row: Vec<(usize, BigInt)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.numer() * (&l / x.denom())))
            .collect();
        if echelon.insert(row).expect("big integers do not overflow") {
            out.push(v.clone());
        }
    }
    out
}

/// Integer arithmetic that may report overflow.
trait Exact: Clone + PartialEq + Zero + Signed + Integer {
    fn checked_times(&self, other: &Self) -> Option<Self>;
    fn checked_minus(&self, other: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn checked_times(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn checked_minus(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
}

impl Exact for BigInt {
    fn checked_times(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_minus(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
}

/// Row echelon form keyed by leading column.
struct Echelon<T> {
    pivots: HashMap<usize, Vec<(usize, T)>>,
}

impl<T> Default for Echelon<T> {
    fn default() -> Self {
        Echelon { pivots: HashMap::new() }
    }
}

impl<T: Exact> Echelon<T> {
    /// Reduces `row` against the pivots; returns whether it was independent.
    /// `None` signals overflow.
    fn insert(&mut self, mut row: Vec<(usize, T)>) -> Option<bool> {
        row.retain(|x| !x.1.is_zero());
        row.sort_by_key(|x| x.0);
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                return Some(false);
            };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return Some(true);
            };
            // row <- pa * row - a * pivot, then divide by the content
            let pa = p[0].1.clone();
            let g = pa.gcd(&a);
            let (sr, sp) = (pa / g.clone(), a / g);
            let mut out = Vec::with_capacity(row.len() + p.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < p.len() {
                let ci = row.get(i).map_or(usize::MAX, |x| x.0);
                let cj = p.get(j).map_or(usize::MAX, |x| x.0);
                let (c, v) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1.checked_times(&sr)?)
                } else if cj < ci {
                    j += 1;
                    (cj, T::zero().checked_minus(&p[j - 1].1.checked_times(&sp)?)?)
                } else {
                    i += 1;
                    j += 1;
                    (ci, row[i - 1].1.checked_times(&sr)?.checked_minus(&p[j - 1].1.checked_times(&sp)?)?)
                };
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            let content = out.iter().fold(T::zero(), |acc, x| acc.gcd(&x.1));
            if !content.is_zero() && content != T::one() {
                out.iter_mut().for_each(|x| x.1 = x.1.clone() / content.clone());
            }
            row = out;
        }
    }
}

fn rank_with<T: Exact>(rows: impl Iterator<Item = Vec<(usize, T)>>) -> Option<usize> {
    let mut e = Echelon::<T>::default();
    let mut r = 0;
    for row in rows {
        if e.insert(row)? {
            r += 1;
        }
    }
    Some(r)
}

fn big_rank(rows: &[Vec<(usize, BigInt)>]) -> usize {
    let small = rows.iter().all(|r| r.iter().all(|x| x.1.to_i64().is_some()));
    if small {
        let narrowed = rows.iter().map(|r| r.iter().map(|x| (x.0, x.1.to_i128().unwrap())).collect());
        if let Some(r) = rank_with::<i128>(narrowed) {
            return r;
        }
    }
    rank_with::<BigInt>(rows.iter().cloned()).expect("big integers do not overflow")
}

/// Exact rank of a sparse integer matrix given by rows.
pub fn integer_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    let narrowed = rows.iter().map(|r| r.iter().map(|x| (x.0, x.1 as i128)).collect());
    match rank_with::<i128>(narrowed) {
        Some(r) => r,
        None => rank_with::<BigInt>(rows.iter().map(|r| r.iter().map(|x| (x.0, BigInt::from(x.1))).collect()))
            .expect("big integers do not overflow"),
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by dense Gaussian elimination over `ℚ`.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] / &m[rank][c];
                    for cc in 0..cols {
                        let x = &f * &m[rank][cc];
                        m[r][cc] -= x;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn sparse(rows: &[Vec<i64>]) -> Vec<Vec<(usize, i64)>> {
        rows.iter().map(|r| r.iter().enumerate().filter(|x| *x.1 != 0).map(|(c, &x)| (c, x)).collect()).collect()
    }

    proptest! {
        #[test]
        fn rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            prop_assert_eq!(integer_rank(&sparse(&rows)), dense_rank(&rows));
        }

        #[test]
        fn projection_is_orthogonal_idempotent(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..4)) {
            let vs: Vec<Vec<BigRational>> =
                rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
            let p = orthogonal_projection(4, &vs);
            prop_assert_eq!(p.mul(&p).unwrap(), p.clone());
            prop_assert_eq!(p.transpose(), p.clone());
            prop_assert_eq!(p.rank(), dense_rank(&rows));
            for v in &vs {
                let col = RatMatrix::from_columns(4, std::slice::from_ref(v));
                prop_assert_eq!(p.mul(&col).unwrap(), col);
            }
        }
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 2;
        let rows = vec![vec![(0, big), (1, big - 1)], vec![(0, big - 1), (1, big)], vec![(0, 1), (1, 1)]];
        assert_eq!(integer_rank(&rows), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = IntMatrix { rows: 2, cols: 2, data: vec![2, 1, 1, 1] }.to_rational();
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), RatMatrix::identity(2));
        let s = IntMatrix { rows: 2, cols: 2, data: vec![1, 2, 2, 4] }.to_rational();
        assert!(s.inverse().is_none());
    }

    #[test]
    fn kron_and_product() {
        let a = IntMatrix { rows: 2, cols: 2, data: vec![1, 2, 3, 4] };
        let i = IntMatrix { rows: 1, cols: 1, data: vec![1] };
        assert_eq!(a.kron(&i).unwrap(), a);
        let k = a.kron(&a).unwrap();
        assert_eq!(k.get(3, 3), 16);
        assert_eq!(k.get(1, 2), 2 * 3);
        assert_eq!(a.mul(&a).unwrap().data, vec![7, 10, 15, 22]);
    }
}
