use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Color, Partition};

/// `p = q* · r · s` with building partitions `q`, `s` and a through-partition `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub q: Partition,
    pub r: Partition,
    pub s: Partition,
}

impl Decomposition {
    /// Recomposes `q* · r · s`.
    pub fn recompose(&self) -> Result<Partition> {
        let rs = self.r.compose(&self.s)?.partition;
        Ok(self.q.involution().compose(&rs)?.partition)
    }
}

/// Through-block ids in order of their first point within the given row.
fn through_order(row: &[u8], through: &[bool]) -> Vec<u8> {
    let mut out = Vec::new();
    for &x in row {
        if through[x as usize] && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn building(row: &[u8], order: &[u8], row_colors: Option<&[Color]>) -> Partition {
    let lower: Vec<usize> = order.iter().map(|&x| x as usize).collect();
    let upper: Vec<usize> = row.iter().map(|&x| x as usize).collect();
    match row_colors {
        Some(c) => Partition::new_colored(&upper, &lower, c, &vec![Color::White; lower.len()]),
        None => Partition::new(&upper, &lower),
    }
    .expect("subpartition of a valid partition")
}

pub fn through_block_decomposition(p: &Partition) -> Decomposition {
    let mask = p.through_mask();
    let up = through_order(p.upper_labels(), &mask);
    let down = through_order(p.lower_labels(), &mask);
    let perm: Vec<usize> = up.iter().map(|x| down.iter().position(|y| y == x).unwrap()).collect();
    Decomposition {
        q: building(p.lower_labels(), &down, p.lower_colors()),
        r: Partition::through(&perm, p.is_colored()),
        s: building(p.upper_labels(), &up, p.upper_colors()),
    }
}

/// Every lower point is its own through-block, ordered by smallest upper point.
pub fn is_building(p: &Partition) -> bool {
    let lower = p.lower_labels();
    let mask = p.through_mask();
    let mut seen = Vec::new();
    for &x in lower {
        if seen.contains(&x) || !mask[x as usize] {
            return false;
        }
        seen.push(x);
    }
    through_order(p.upper_labels(), &mask) == lower
}

/// `q* q`, a projective partition for any `q`.
pub fn projective_from(q: &Partition) -> Partition {
    q.involution().compose(q).expect("q* q is always composable").partition
}

fn require_projective(p: &Partition) -> Result<()> {
    if p.is_projective() {
        Ok(())
    } else {
        Err(Error::NotProjective(p.to_string()))
    }
}

/// `q ⪯ p`, i.e. `p q = q`.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    require_projective(p)?;
    require_projective(q)?;
    if p.upper() != q.upper() || p.colors() != q.colors() {
        return Ok(false);
    }
    Ok(p.compose(q)?.partition == *q)
}

/// `q ≺ p`.
pub fn strictly_dominates(p: &Partition, q: &Partition) -> Result<bool> {
    Ok(p != q && dominates(p, q)?)
}
