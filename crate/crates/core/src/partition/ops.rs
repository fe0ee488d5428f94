use serde::{Deserialize, Serialize};

use super::{Color, Partition};
use crate::dsu::UnionFind;
use crate::error::{Error, Result};

/// Result of a vertical composition: the partition and the number of removed loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub partition: Partition,
    pub loops: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Corner {
    /// Leftmost upper point moves to the left end of the lower row.
    UpperLeftDown,
    /// Leftmost lower point moves to the left end of the upper row.
    LowerLeftUp,
    /// Rightmost upper point moves to the right end of the lower row.
    UpperRightDown,
    /// Rightmost lower point moves to the right end of the upper row.
    LowerRightUp,
}

fn same_mode(a: &Partition, b: &Partition) -> Result<()> {
    if a.is_colored() != b.is_colored() {
        return Err(Error::ColorMode);
    }
    Ok(())
}

impl Partition {
    /// Horizontal concatenation `self ⊗ other`.
    pub fn tensor(&self, other: &Partition) -> Result<Partition> {
        same_mode(self, other)?;
        let off = self.block_count();
        let shift = |x: &u8| *x as usize + off;
        let labels: Vec<usize> = self
            .upper_labels()
            .iter()
            .map(|&x| x as usize)
            .chain(other.upper_labels().iter().map(shift))
            .chain(self.lower_labels().iter().map(|&x| x as usize))
            .chain(other.lower_labels().iter().map(shift))
            .collect();
        let colors = match (self.colors(), other.colors()) {
            (Some(_), Some(_)) => Some(
                self.upper_colors()
                    .unwrap()
                    .iter()
                    .chain(other.upper_colors().unwrap())
                    .chain(self.lower_colors().unwrap())
                    .chain(other.lower_colors().unwrap())
                    .copied()
                    .collect(),
            ),
            _ => None,
        };
        Partition::from_raw(self.upper() + other.upper(), &labels, colors)
    }

    /// `self ∘ top`: first `top`, then `self`. Needs `top.lower() == self.upper()`.
    pub fn compose(&self, top: &Partition) -> Result<Composition> {
        compose(self, top)
    }

    /// Upside-down reflection `p*`.
    pub fn involution(&self) -> Partition {
        let labels: Vec<usize> =
            self.lower_labels().iter().chain(self.upper_labels()).map(|&x| x as usize).collect();
        let colors = self.colors().map(|_| {
            self.lower_colors().unwrap().iter().chain(self.upper_colors().unwrap()).copied().collect()
        });
        Partition::from_raw(self.lower(), &labels, colors).expect("same block count")
    }

    /// Moves one corner point to the other row. Colors of the moved point flip.
    pub fn rotate(&self, corner: Corner) -> Result<Partition> {
        let k = self.upper();
        let n = self.points();
        let source_empty = match corner {
            Corner::UpperLeftDown | Corner::UpperRightDown => k == 0,
            Corner::LowerLeftUp | Corner::LowerRightUp => k == n,
        };
        if source_empty {
            return Err(Error::EmptyRow);
        }
        // Positions in the new point order, as indices into the old one.
        let order: Vec<usize> = match corner {
            Corner::UpperLeftDown => (1..k).chain(std::iter::once(0)).chain(k..n).collect(),
            Corner::LowerLeftUp => std::iter::once(k).chain(0..k).chain(k + 1..n).collect(),
            Corner::UpperRightDown => (0..k - 1).chain(k..n).chain(std::iter::once(k - 1)).collect(),
            Corner::LowerRightUp => (0..k).chain(std::iter::once(n - 1)).chain(k..n - 1).collect(),
        };
        let moved = match corner {
            Corner::UpperLeftDown => 0,
            Corner::LowerLeftUp => k,
            Corner::UpperRightDown => k - 1,
            Corner::LowerRightUp => n - 1,
        };
        let new_upper = match corner {
            Corner::UpperLeftDown | Corner::UpperRightDown => k - 1,
            _ => k + 1,
        };
        let labels: Vec<usize> = order.iter().map(|&i| self.labels()[i] as usize).collect();
        let colors = self.colors().map(|c| {
            order.iter().map(|&i| if i == moved { c[i].flip() } else { c[i] }).collect::<Vec<Color>>()
        });
        Partition::from_raw(new_upper, &labels, colors)
    }

    pub fn conjugate_colors(&self) -> Result<Partition> {
        let c = self.colors().ok_or(Error::Uncolored)?;
        let flipped = c.iter().map(|x| x.flip()).collect();
        Ok(Partition::from_canonical(self.upper(), self.labels().to_vec(), Some(flipped)))
    }

    /// Rotates every upper point down, giving a partition in `P(0, k + l)`.
    ///
    /// The lower row then reads the boundary `k, …, 1, 1', …, l'`.
    pub fn to_one_line(&self) -> Partition {
        let mut p = self.clone();
        while p.upper() > 0 {
            p = p.rotate(Corner::UpperLeftDown).unwrap();
        }
        p
    }

    /// Inverse of [`Partition::to_one_line`] for a target upper row of size `k`.
    pub fn from_one_line(&self, k: usize) -> Result<Partition> {
        if self.upper() != 0 {
            return Err(Error::Invalid(format!("{self} is not a one-line partition")));
        }
        if k > self.points() {
            return Err(Error::Arity { expected: k, found: self.points() });
        }
        let mut p = self.clone();
        for _ in 0..k {
            p = p.rotate(Corner::LowerLeftUp)?;
        }
        Ok(p)
    }

    /// Left-right reflection; colors are flipped as well.
    pub fn mirror(&self) -> Partition {
        let (k, n) = (self.upper(), self.points());
        let order: Vec<usize> = (0..k).rev().chain((k..n).rev()).collect();
        let labels: Vec<usize> = order.iter().map(|&i| self.labels()[i] as usize).collect();
        let colors = self.colors().map(|c| order.iter().map(|&i| c[i].flip()).collect());
        Partition::from_raw(k, &labels, colors).expect("reordering keeps the partition valid")
    }

    /// The sub-partition formed by the points of one block, keeping rows and colors.
    pub fn restrict_to_block(&self, block: u8) -> Partition {
        let mut up = 0;
        let mut colors = self.colors().map(|_| Vec::new());
        let mut n = 0;
        for (i, &x) in self.labels().iter().enumerate() {
            if x == block {
                if i < self.upper() {
                    up += 1;
                }
                n += 1;
                if let Some(c) = colors.as_mut() {
                    c.push(self.colors().unwrap()[i]);
                }
            }
        }
        Partition::from_canonical(up, vec![0; n], colors)
    }
}

pub(crate) fn compose(bottom: &Partition, top: &Partition) -> Result<Composition> {
    same_mode(bottom, top)?;
    let k = top.upper();
    let l = top.lower();
    if bottom.upper() != l {
        return Err(Error::Arity { expected: l, found: bottom.upper() });
    }
    if let (Some(a), Some(b)) = (top.lower_colors(), bottom.upper_colors()) {
        if a != b {
            return Err(Error::ColorMismatch);
        }
    }
    let m = bottom.lower();
    let n = k + l + m;
    let mut uf = UnionFind::new(n);
    let mut first = vec![usize::MAX; top.block_count().max(bottom.block_count())];
    for (i, &b) in top.labels().iter().enumerate() {
        let f = &mut first[b as usize];
        if *f == usize::MAX {
            *f = i;
        } else {
            uf.union(*f, i);
        }
    }
    first.iter_mut().for_each(|x| *x = usize::MAX);
    for (i, &b) in bottom.labels().iter().enumerate() {
        let node = k + i;
        let f = &mut first[b as usize];
        if *f == usize::MAX {
            *f = node;
        } else {
            uf.union(*f, node);
        }
    }
    let mut ids = vec![u8::MAX; n];
    let mut next = 0u8;
    let mut labels = Vec::with_capacity(k + m);
    for node in (0..k).chain(k + l..n) {
        let r = uf.find(node);
        if ids[r] == u8::MAX {
            ids[r] = next;
            next += 1;
        }
        labels.push(ids[r]);
    }
    let mut loops = 0;
    for node in k..k + l {
        let r = uf.find(node);
        if ids[r] == u8::MAX {
            ids[r] = u8::MAX - 1;
            loops += 1;
        }
    }
    let colors = top.colors().map(|_| {
        top.upper_colors().unwrap().iter().chain(bottom.lower_colors().unwrap()).copied().collect()
    });
    Ok(Composition { partition: Partition::from_canonical(k, labels, colors), loops })
}
