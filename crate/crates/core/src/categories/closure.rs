//! Bounded closure of a generator set.
//!
//! Members are stored as one-line partitions in `P(0, n)`; the two-line members
//! of `C(k, l)` are their rotations. On one-line partitions the category
//! operations become cyclic rotation, reflection (reverse and flip colors) and
//! gluing, which covers both tensor products and compositions.

use std::collections::{HashSet, VecDeque};

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{Color, Partition};

use super::Membership;

#[derive(Clone, Debug)]
pub struct Generated {
    generators: Vec<Partition>,
    max_points: usize,
    colored: bool,
    noncrossing: bool,
    members: HashSet<Partition>,
}

fn one_line(labels: &[u8], colors: Option<Vec<Color>>) -> Partition {
    let l: Vec<usize> = labels.iter().map(|&x| x as usize).collect();
    Partition::from_raw(0, &l, colors).expect("one-line partition")
}

/// All cyclic rotations and their reflections.
fn orbit(x: &Partition) -> Vec<Partition> {
    let n = x.points();
    let labels = x.labels();
    let colors = x.colors();
    let mut out = Vec::with_capacity(2 * n.max(1));
    for shift in 0..n.max(1) {
        let idx: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
        let l: Vec<u8> = idx.iter().map(|&i| labels[i]).collect();
        let c = colors.map(|c| idx.iter().map(|&i| c[i]).collect::<Vec<_>>());
        out.push(one_line(&l, c));
        let rl: Vec<u8> = idx.iter().rev().map(|&i| labels[i]).collect();
        let rc = colors.map(|c| idx.iter().rev().map(|&i| c[i].flip()).collect::<Vec<_>>());
        out.push(one_line(&rl, rc));
    }
    out
}

/// One-line form of a composition: the last `m` points of `x` are joined to the
/// first `m` points of `y` in nested order and removed. `m = 0` is concatenation.
/// Colored gluing needs opposite colors on every joined pair.
fn glue(x: &Partition, y: &Partition, m: usize) -> Option<Partition> {
    let n1 = x.points();
    if let (Some(cx), Some(cy)) = (x.colors(), y.colors()) {
        if (0..m).any(|i| cx[n1 - 1 - i] == cy[i]) {
            return None;
        }
    }
    let off = x.block_count();
    let mut uf = UnionFind::new(off + y.block_count());
    for i in 0..m {
        uf.union(x.labels()[n1 - 1 - i] as usize, off + y.labels()[i] as usize);
    }
    let nodes: Vec<usize> = x.labels()[..n1 - m]
        .iter()
        .map(|&b| b as usize)
        .chain(y.labels()[m..].iter().map(|&b| off + b as usize))
        .collect();
    let labels: Vec<usize> = nodes.into_iter().map(|v| uf.find(v)).collect();
    let colors = x.colors().map(|cx| cx[..n1 - m].iter().chain(&y.colors().unwrap()[m..]).copied().collect());
    Some(Partition::from_raw(0, &labels, colors).expect("one-line partition"))
}

impl Generated {
    /// Smallest set of partitions with at most `max_points` points that contains
    /// the generators and the identity and is closed under the category operations.
    pub fn closure(generators: &[Partition], max_points: usize, limits: &Limits) -> Result<Generated> {
        if max_points > limits.max_closure_points {
            return Err(Error::Bounds {
                what: "closure points",
                requested: max_points,
                limit: limits.max_closure_points,
            });
        }
        let colored = match generators.first() {
            Some(g) => g.is_colored(),
            None => false,
        };
        if generators.iter().any(|g| g.is_colored() != colored) {
            return Err(Error::ColorMode);
        }
        Generated::build(generators, max_points, colored)
    }

    /// Closure of the identity alone, colored or not.
    pub fn closure_of_identity(max_points: usize, colored: bool, limits: &Limits) -> Result<Generated> {
        if max_points > limits.max_closure_points {
            return Err(Error::Bounds {
                what: "closure points",
                requested: max_points,
                limit: limits.max_closure_points,
            });
        }
        Generated::build(&[], max_points, colored)
    }

    fn build(generators: &[Partition], max_points: usize, colored: bool) -> Result<Generated> {
        for g in generators {
            if g.points() > max_points {
                return Err(Error::Bounds { what: "generator points", requested: g.points(), limit: max_points });
            }
        }
        let unit = if colored {
            Partition::identity_colored(&[Color::White])
        } else {
            Partition::identity(1)
        };
        let mut seen: HashSet<Partition> = HashSet::new();
        let mut members: Vec<Partition> = Vec::new();
        let mut queue = VecDeque::new();
        let add = |x: Partition, seen: &mut HashSet<Partition>, members: &mut Vec<Partition>, queue: &mut VecDeque<Partition>| {
            if x.points() > max_points || seen.contains(&x) {
                return;
            }
            for y in orbit(&x) {
                if seen.insert(y.clone()) {
                    members.push(y.clone());
                    queue.push_back(y);
                }
            }
        };
        let mut start: Vec<Partition> =
            generators.iter().chain(std::iter::once(&unit)).map(|g| g.to_one_line()).collect();
        start.sort();
        for x in start {
            add(x, &mut seen, &mut members, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i].clone();
                i += 1;
                let (a, b) = (x.points(), y.points());
                let lo = (a + b).saturating_sub(max_points).div_ceil(2);
                for m in lo..=a.min(b) {
                    for z in [glue(&x, &y, m), glue(&y, &x, m)].into_iter().flatten() {
                        add(z, &mut seen, &mut members, &mut queue);
                    }
                }
            }
        }
        let noncrossing = seen.iter().all(|x| x.is_noncrossing());
        Ok(Generated { generators: generators.to_vec(), max_points, colored, noncrossing, members: seen })
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    pub fn max_points(&self) -> usize {
        self.max_points
    }

    pub fn is_colored(&self) -> bool {
        self.colored
    }

    pub fn is_noncrossing(&self) -> bool {
        self.noncrossing
    }

    /// Number of one-line members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub(super) fn contains(&self, p: &Partition) -> Membership {
        if p.points() > self.max_points {
            Membership::Unknown
        } else if self.members.contains(&p.to_one_line()) {
            Membership::Yes
        } else {
            Membership::No
        }
    }

    pub(super) fn members_of(&self, k: usize, l: usize) -> Result<Vec<Partition>> {
        if k + l > self.max_points {
            return Err(Error::Bounds { what: "points beyond closure", requested: k + l, limit: self.max_points });
        }
        self.members.iter().filter(|x| x.points() == k + l).map(|x| x.from_one_line(k)).collect()
    }
}
