//! Mixing partitions `h ∈ Proj(k + l)` and the product `p ∗_h q`.

use serde::Serialize;

use super::decomposition::through_block_decomposition;
use crate::error::{Error, Result};
use crate::partition::{Color, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Link {
    /// Upper pair `{a, b}` and lower pair `{a', b'}`.
    Cap,
    /// One block `{a, b, a', b'}`.
    Merge,
}

/// A mixing partition together with the matching it was built from.
///
/// Each link joins a left index `a < left` with a right index `b < right`
/// (position `left + b` in `h`). Unlinked points carry identity strands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixingPartition {
    pub left: usize,
    pub right: usize,
    pub links: Vec<(usize, usize, Link)>,
    pub h: Partition,
}

impl MixingPartition {
    pub fn from_links(left: usize, right: usize, links: Vec<(usize, usize, Link)>, colored: bool) -> Result<Self> {
        let n = left + right;
        let mut labels: Vec<usize> = (0..n).chain(0..n).collect();
        let mut used = vec![false; n];
        for &(a, b, link) in &links {
            let b = left + b;
            if a >= left || b >= n || used[a] || used[b] {
                return Err(Error::Invalid(format!("bad mixing link ({a}, {})", b - left)));
            }
            used[a] = true;
            used[b] = true;
            labels[b] = a;
            match link {
                Link::Merge => {
                    labels[n + a] = a;
                    labels[n + b] = a;
                }
                Link::Cap => {
                    labels[n + a] = n + a;
                    labels[n + b] = n + a;
                }
            }
        }
        let colors = colored.then(|| vec![Color::White; 2 * n]);
        let h = Partition::from_raw(n, &labels, colors)?;
        Ok(MixingPartition { left, right, links, h })
    }

    pub fn has_merge(&self) -> bool {
        self.links.iter().any(|l| l.2 == Link::Merge)
    }
}

/// All mixing partitions for `left` and `right` through-blocks, sorted by `h`.
pub fn enumerate_mixing(left: usize, right: usize, colored: bool) -> Vec<MixingPartition> {
    fn go(
        a: usize,
        left: usize,
        right: usize,
        used: &mut Vec<bool>,
        links: &mut Vec<(usize, usize, Link)>,
        out: &mut Vec<Vec<(usize, usize, Link)>>,
    ) {
        if a == left {
            out.push(links.clone());
            return;
        }
        go(a + 1, left, right, used, links, out);
        for b in 0..right {
            if used[b] {
                continue;
            }
            used[b] = true;
            for link in [Link::Cap, Link::Merge] {
                links.push((a, b, link));
                go(a + 1, left, right, used, links, out);
                links.pop();
            }
            used[b] = false;
        }
    }
    let mut all = Vec::new();
    go(0, left, right, &mut vec![false; right], &mut Vec::new(), &mut all);
    let mut out: Vec<MixingPartition> = all
        .into_iter()
        .map(|links| MixingPartition::from_links(left, right, links, colored).expect("valid links"))
        .collect();
    out.sort_by(|x, y| x.h.cmp(&y.h));
    out
}

/// `p ∗_h q = (p_u* ⊗ q_u*) h (p_u ⊗ q_u)`.
pub fn mix(p: &Partition, q: &Partition, h: &MixingPartition) -> Result<Partition> {
    for x in [p, q] {
        if !x.is_projective() {
            return Err(Error::NotProjective(x.to_string()));
        }
    }
    let (tp, tq) = (p.through_count(), q.through_count());
    if h.left != tp || h.right != tq {
        return Err(Error::Arity { expected: tp + tq, found: h.left + h.right });
    }
    let pu = through_block_decomposition(p).s;
    let qu = through_block_decomposition(q).s;
    let top = pu.tensor(&qu)?;
    let middle = match top.lower_colors() {
        // h carries the colors of the strands it is attached to
        Some(c) => {
            let colors = c.iter().chain(c).copied().collect();
            let hc = Partition::from_raw(h.h.upper(), &h.h.labels().iter().map(|&x| x as usize).collect::<Vec<_>>(), Some(colors))?;
            hc.compose(&top)?.partition
        }
        None => h.h.compose(&top)?.partition,
    };
    Ok(top.involution().compose(&middle)?.partition)
}

fn nested(p: &Partition, q: &Partition, a: usize, merge_outer: bool) -> Result<MixingPartition> {
    let (tp, tq) = (p.through_count(), q.through_count());
    if a > tp.min(tq) {
        return Err(Error::Invalid(format!("a = {a} exceeds min(t(p), t(q)) = {}", tp.min(tq))));
    }
    let links = (0..a)
        .map(|i| {
            let link = if merge_outer && i + 1 == a { Link::Merge } else { Link::Cap };
            (tp - 1 - i, i, link)
        })
        .collect();
    MixingPartition::from_links(tp, tq, links, p.is_colored())
}

/// The padded nested-cap mixing partition behind `p □^a q`.
pub fn square_mixing(p: &Partition, q: &Partition, a: usize) -> Result<MixingPartition> {
    nested(p, q, a, false)
}

/// The padded mixing partition behind `p ⧈^a q`; the outermost cap becomes a four-block.
pub fn boxvert_mixing(p: &Partition, q: &Partition, a: usize) -> Result<MixingPartition> {
    if a == 0 {
        return Err(Error::Invalid("boxvert needs a ≥ 1".into()));
    }
    nested(p, q, a, true)
}

pub fn square(p: &Partition, q: &Partition, a: usize) -> Result<Partition> {
    mix(p, q, &square_mixing(p, q, a)?)
}

pub fn boxvert(p: &Partition, q: &Partition, a: usize) -> Result<Partition> {
    mix(p, q, &boxvert_mixing(p, q, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::projective_partitions;
    use crate::structure::decomposition::dominates;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Mixing partitions by definition: projective partitions of `P(k+l, k+l)` whose
    /// blocks are vertical strands, left-right cap pairs or left-right four-blocks.
    fn mixing_oracle(k: usize, l: usize) -> Vec<Partition> {
        let n = k + l;
        let mut out: Vec<Partition> = projective_partitions(n, false)
            .into_iter()
            .filter(|h| {
                h.blocks().iter().all(|b| match (b.upper.as_slice(), b.lower.as_slice()) {
                    ([a], [c]) => a == c,
                    ([a, b], []) | ([], [a, b]) => *a < k && *b >= k,
                    ([a, b], [c, d]) => a == c && b == d && *a < k && *b >= k,
                    _ => false,
                })
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_definition() {
        for k in 0..=3 {
            for l in 0..=3 {
                let got: Vec<Partition> = enumerate_mixing(k, l, false).into_iter().map(|m| m.h).collect();
                assert_eq!(got, mixing_oracle(k, l), "({k}, {l})");
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_mixing(0, 0, false).len(), 1);
        let hs: Vec<String> = enumerate_mixing(1, 1, false).iter().map(|m| m.h.to_string()).collect();
        assert_eq!(hs, vec!["aa:aa", "aa:bb", "ab:ab"]);
        assert_eq!(enumerate_mixing(2, 2, false).len(), 17);
    }

    #[test]
    fn noncrossing_mixing_is_nested() {
        for k in 0..=3 {
            for l in 0..=3 {
                let id_k = Partition::identity(k);
                let id_l = Partition::identity(l);
                let mut expected: Vec<Partition> = (0..=k.min(l))
                    .map(|a| square_mixing(&id_k, &id_l, a).unwrap().h)
                    .chain((1..=k.min(l)).map(|a| boxvert_mixing(&id_k, &id_l, a).unwrap().h))
                    .collect();
                expected.sort();
                let mut got: Vec<Partition> = enumerate_mixing(k, l, false)
                    .into_iter()
                    .map(|m| m.h)
                    .filter(|h| h.is_noncrossing())
                    .collect();
                got.sort();
                assert_eq!(got, expected, "({k}, {l})");
            }
        }
    }

    #[test]
    fn square_and_boxvert_counts() {
        let id3 = Partition::identity(3);
        let id2 = Partition::identity(2);
        assert_eq!(square(&id3, &id2, 0).unwrap(), Partition::identity(5));
        for a in 0..=2 {
            assert_eq!(square(&id3, &id2, a).unwrap().through_count(), 5 - 2 * a);
        }
        for a in 1..=2 {
            assert_eq!(boxvert(&id3, &id2, a).unwrap().through_count(), 5 - 2 * a + 1);
        }
        assert!(boxvert(&id3, &id2, 0).is_err());
        assert_eq!(boxvert(&Partition::identity(1), &Partition::identity(1), 1).unwrap(), p("aa:aa"));
    }

    #[test]
    fn colored_mix_follows_strand_colors() {
        let w = p("a@w:a@w");
        let b = p("a@b:a@b");
        let got: Vec<String> =
            enumerate_mixing(1, 1, true).iter().map(|h| mix(&w, &b, h).unwrap().to_string()).collect();
        assert_eq!(got, vec!["aa@wb:aa@wb", "aa@wb:bb@wb", "ab@wb:ab@wb"]);
    }

    #[test]
    fn mix_is_projective_and_dominated() {
        let ps = [p("a:a"), p("aa:aa"), p("a:b"), p("ab:ab"), p("aab:aab")];
        for x in &ps {
            for y in &ps {
                let top = x.tensor(y).unwrap();
                let mut seen = Vec::new();
                for h in enumerate_mixing(x.through_count(), y.through_count(), false) {
                    let m = mix(x, y, &h).unwrap();
                    assert!(m.is_projective());
                    assert!(dominates(&top, &m).unwrap());
                    assert!(!seen.contains(&m), "{x} {y} {}", h.h);
                    seen.push(m);
                }
            }
        }
    }
}
