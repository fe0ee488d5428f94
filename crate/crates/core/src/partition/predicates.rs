use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub noncrossing: bool,
    pub pair: bool,
    pub all_blocks_even: bool,
    pub blocks_at_most_two: bool,
    pub symmetric: bool,
    /// `None` when the partition is not square.
    pub idempotent: Option<bool>,
    pub projective: Option<bool>,
}

impl Partition {
    fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &x in self.labels() {
            sizes[x as usize] += 1;
        }
        sizes
    }

    /// Labels read around the boundary: upper row left to right, lower row right to left.
    pub(crate) fn boundary_labels(&self) -> Vec<u8> {
        self.upper_labels().iter().chain(self.lower_labels().iter().rev()).copied().collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let seq = self.boundary_labels();
        let b = self.block_count();
        let mut last = vec![0usize; b];
        for (i, &x) in seq.iter().enumerate() {
            last[x as usize] = i;
        }
        let mut seen = vec![false; b];
        let mut stack: Vec<u8> = Vec::new();
        for (i, &x) in seq.iter().enumerate() {
            let xi = x as usize;
            if seen[xi] {
                if stack.last() != Some(&x) {
                    return false;
                }
                if last[xi] == i {
                    stack.pop();
                }
            } else {
                seen[xi] = true;
                if last[xi] != i {
                    stack.push(x);
                }
            }
        }
        true
    }

    pub fn is_pair(&self) -> bool {
        self.block_sizes().iter().all(|&s| s == 2)
    }

    pub fn all_blocks_even(&self) -> bool {
        self.block_sizes().iter().all(|&s| s % 2 == 0)
    }

    pub fn blocks_at_most_two(&self) -> bool {
        self.block_sizes().iter().all(|&s| s <= 2)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.involution() == *self
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare { upper: self.upper(), lower: self.lower() });
        }
        Ok(self.compose(self)?.partition == *self)
    }

    /// Symmetric and idempotent. Non-square partitions are never projective.
    pub fn is_projective(&self) -> bool {
        self.is_symmetric() && self.is_idempotent().unwrap_or(false)
    }

    pub fn predicates(&self) -> Predicates {
        let idempotent = self.is_idempotent().ok();
        let symmetric = self.is_symmetric();
        Predicates {
            noncrossing: self.is_noncrossing(),
            pair: self.is_pair(),
            all_blocks_even: self.all_blocks_even(),
            blocks_at_most_two: self.blocks_at_most_two(),
            symmetric,
            idempotent,
            projective: idempotent.map(|i| i && symmetric),
        }
    }
}
