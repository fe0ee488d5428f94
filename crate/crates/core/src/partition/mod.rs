//! Two-row set partitions with optional two-coloring.
//!
//! A partition in `P(k, l)` has `k` upper points and `l` lower points. Points
//! are indexed `0..k` for the upper row and `k..k+l` for the lower row. Block
//! ids are always canonical: numbered by first appearance, upper row first.

mod enumerate;
mod ops;
mod predicates;
mod text;

pub use enumerate::{all_colorings, projective_partitions, set_partitions, SetPartitions};
pub use ops::{Composition, Corner};
pub use predicates::Predicates;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of blocks, bounded by the letters available to the text form.
pub const MAX_BLOCKS: usize = 52;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stats {
    pub blocks: usize,
    pub through: usize,
    pub non_through: usize,
}

/// One block, as point positions within each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_through(&self) -> bool {
        !self.upper.is_empty() && !self.lower.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    upper: usize,
    labels: Vec<u8>,
    colors: Option<Vec<Color>>,
}

impl Partition {
    /// Builds a partition from arbitrary block labels and canonicalizes them.
    pub fn new(upper: &[usize], lower: &[usize]) -> Result<Partition> {
        let labels: Vec<usize> = upper.iter().chain(lower).copied().collect();
        Partition::from_raw(upper.len(), &labels, None)
    }

    pub fn new_colored(
        upper: &[usize],
        lower: &[usize],
        upper_colors: &[Color],
        lower_colors: &[Color],
    ) -> Result<Partition> {
        if upper_colors.len() != upper.len() {
            return Err(Error::ColorLength { expected: upper.len(), found: upper_colors.len() });
        }
        if lower_colors.len() != lower.len() {
            return Err(Error::ColorLength { expected: lower.len(), found: lower_colors.len() });
        }
        let labels: Vec<usize> = upper.iter().chain(lower).copied().collect();
        let colors: Vec<Color> = upper_colors.iter().chain(lower_colors).copied().collect();
        Partition::from_raw(upper.len(), &labels, Some(colors))
    }

    /// `labels` covers both rows, upper row first.
    pub fn from_raw(upper: usize, labels: &[usize], colors: Option<Vec<Color>>) -> Result<Partition> {
        if upper > labels.len() {
            return Err(Error::Arity { expected: upper, found: labels.len() });
        }
        if let Some(c) = &colors {
            if c.len() != labels.len() {
                return Err(Error::ColorLength { expected: labels.len(), found: c.len() });
            }
        }
        let mut map: Vec<(usize, u8)> = Vec::new();
        let mut out = Vec::with_capacity(labels.len());
        for &x in labels {
            let id = match map.iter().find(|(k, _)| *k == x) {
                Some(&(_, v)) => v,
                None => {
                    if map.len() == MAX_BLOCKS {
                        return Err(Error::TooManyBlocks(MAX_BLOCKS + 1));
                    }
                    let v = map.len() as u8;
                    map.push((x, v));
                    v
                }
            };
            out.push(id);
        }
        Ok(Partition { upper, labels: out, colors })
    }

    /// Trusted constructor for labels that are already canonical.
    pub(crate) fn from_canonical(upper: usize, labels: Vec<u8>, colors: Option<Vec<Color>>) -> Partition {
        debug_assert!(is_canonical(&labels));
        Partition { upper, labels, colors }
    }

    pub fn empty() -> Partition {
        Partition { upper: 0, labels: Vec::new(), colors: None }
    }

    pub fn empty_colored() -> Partition {
        Partition { upper: 0, labels: Vec::new(), colors: Some(Vec::new()) }
    }

    /// `|^{⊗n}`.
    pub fn identity(n: usize) -> Partition {
        let labels: Vec<u8> = (0..n as u8).chain(0..n as u8).collect();
        Partition { upper: n, labels, colors: None }
    }

    /// Identity strands carrying the given colors on both ends.
    pub fn identity_colored(colors: &[Color]) -> Partition {
        let n = colors.len();
        let labels: Vec<u8> = (0..n as u8).chain(0..n as u8).collect();
        let c: Vec<Color> = colors.iter().chain(colors).copied().collect();
        Partition { upper: n, labels, colors: Some(c) }
    }

    /// The through-partition `r_σ` connecting upper `i` to lower `perm[i]`.
    pub fn through(perm: &[usize], colored: bool) -> Partition {
        let n = perm.len();
        let mut lower = vec![0usize; n];
        for (i, &j) in perm.iter().enumerate() {
            lower[j] = i;
        }
        let upper: Vec<usize> = (0..n).collect();
        let colors = colored.then(|| vec![Color::White; 2 * n]);
        let labels: Vec<usize> = upper.iter().chain(&lower).copied().collect();
        Partition::from_raw(n, &labels, colors).expect("permutation fits")
    }

    pub fn crossing() -> Partition {
        Partition::new(&[0, 1], &[1, 0]).unwrap()
    }

    /// One lower singleton, `P(0, 1)`.
    pub fn singleton() -> Partition {
        Partition::new(&[], &[0]).unwrap()
    }

    /// `{1, 2, 1', 2'}` in `P(2, 2)`.
    pub fn four_block() -> Partition {
        Partition::new(&[0, 0], &[0, 0]).unwrap()
    }

    /// `p₀`: upper and lower singleton in `P(1, 1)`.
    pub fn disconnected_unit() -> Partition {
        Partition::new(&[0], &[1]).unwrap()
    }

    /// The pair partition `1-3', 2-2', 3-1'`.
    pub fn half_liberating() -> Partition {
        Partition::new(&[0, 1, 2], &[2, 1, 0]).unwrap()
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.labels.len() - self.upper
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn upper_labels(&self) -> &[u8] {
        &self.labels[..self.upper]
    }

    pub fn lower_labels(&self) -> &[u8] {
        &self.labels[self.upper..]
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    pub fn upper_colors(&self) -> Option<&[Color]> {
        self.colors.as_ref().map(|c| &c[..self.upper])
    }

    pub fn lower_colors(&self) -> Option<&[Color]> {
        self.colors.as_ref().map(|c| &c[self.upper..])
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    pub fn is_square(&self) -> bool {
        self.upper == self.lower()
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    pub fn blocks(&self) -> Vec<Block> {
        let mut out: Vec<Block> = (0..self.block_count())
            .map(|_| Block { upper: Vec::new(), lower: Vec::new() })
            .collect();
        for (i, &b) in self.labels.iter().enumerate() {
            if i < self.upper {
                out[b as usize].upper.push(i);
            } else {
                out[b as usize].lower.push(i - self.upper);
            }
        }
        out
    }

    /// Per-block flag: does the block meet both rows.
    pub fn through_mask(&self) -> Vec<bool> {
        let b = self.block_count();
        let mut up = vec![false; b];
        let mut down = vec![false; b];
        for &x in self.upper_labels() {
            up[x as usize] = true;
        }
        for &x in self.lower_labels() {
            down[x as usize] = true;
        }
        up.iter().zip(&down).map(|(a, b)| *a && *b).collect()
    }

    pub fn through_count(&self) -> usize {
        self.through_mask().iter().filter(|&&x| x).count()
    }

    pub fn stats(&self) -> Stats {
        let blocks = self.block_count();
        let through = self.through_count();
        Stats { blocks, through, non_through: blocks - through }
    }

    /// Bytes of the canonical text form, produced lazily for ordering.
    fn text_bytes(&self) -> impl Iterator<Item = u8> + '_ {
        let letters = |s: &'_ [u8]| s.iter().map(|&b| text::letter(b) as u8).collect::<Vec<u8>>();
        let colors = |c: Option<&[Color]>, row_len: usize, both_empty: bool| -> Vec<u8> {
            match c {
                Some(c) if row_len > 0 || both_empty => {
                    std::iter::once(b'@').chain(c.iter().map(|x| x.as_char() as u8)).collect()
                }
                _ => Vec::new(),
            }
        };
        let both_empty = self.points() == 0;
        letters(self.upper_labels())
            .into_iter()
            .chain(colors(self.upper_colors(), self.upper, both_empty))
            .chain(std::iter::once(b':'))
            .chain(letters(self.lower_labels()))
            .chain(colors(self.lower_colors(), self.lower(), both_empty))
    }
}

fn is_canonical(labels: &[u8]) -> bool {
    let mut next = 0u8;
    for &x in labels {
        if x > next {
            return false;
        }
        if x == next {
            next += 1;
        }
    }
    true
}

impl Ord for Partition {
    /// Lexicographic order on the canonical text form.
    fn cmp(&self, other: &Self) -> Ordering {
        self.text_bytes().cmp(other.text_bytes())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
