//! Evidence for a free labelling of a noncrossing category by single-block letters.

use serde::Serialize;

use super::semiring::FreeFusionSemiring;
use crate::categories::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::structure::{boxvert, equivalence_classes, equivalent};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Letter {
    pub name: String,
    pub representative: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub max_points: usize,
    /// Every block of every enumerated projective lies in the category.
    pub block_stable: bool,
    pub letters: Vec<Letter>,
    /// Conjugation is the mirror image, fusion is `⧈¹`.
    pub semiring: FreeFusionSemiring,
    /// Number of `∼`-classes met over all rows up to `max_points`.
    pub classes: usize,
    /// Two classes get the same word exactly when they are equivalent.
    pub injective: bool,
}

struct Letters<'a> {
    c: &'a Category,
    limits: &'a Limits,
    reps: Vec<Partition>,
}

impl Letters<'_> {
    fn find(&self, x: &Partition) -> Result<usize> {
        for (i, r) in self.reps.iter().enumerate() {
            if equivalent(self.c, r, x, self.limits)? {
                return Ok(i);
            }
        }
        Err(Error::Invalid(format!("{x} is not equivalent to an enumerated single-block partition")))
    }

    /// Through-blocks in order of their smallest upper point, each read as a letter.
    fn word(&self, p: &Partition) -> Result<Vec<usize>> {
        let mask = p.through_mask();
        let mut seen = Vec::new();
        for &b in p.upper_labels() {
            if mask[b as usize] && !seen.contains(&b) {
                seen.push(b);
            }
        }
        seen.iter().map(|&b| self.find(&p.restrict_to_block(b))).collect()
    }
}

pub fn freeness_probe(c: &Category, max_points: usize, limits: &Limits) -> Result<FreenessReport> {
    if !c.is_noncrossing() {
        return Err(Error::Invalid(format!("{c} is not noncrossing")));
    }
    let mut by_k = Vec::new();
    for k in 0..=max_points {
        by_k.push(c.projectives(k, limits)?);
    }
    let mut block_stable = true;
    for r in by_k.iter().flatten() {
        for b in 0..r.block_count() as u8 {
            block_stable &= c.has(&r.restrict_to_block(b))?;
        }
    }
    let singles: Vec<Partition> =
        by_k.iter().flatten().filter(|p| p.block_count() == 1 && p.through_count() == 1).cloned().collect();
    let reps: Vec<Partition> = equivalence_classes(c, &singles, limits)?.into_iter().map(|cl| cl[0].clone()).collect();
    let letters = Letters { c, limits, reps };
    let n = letters.reps.len();
    let mut bar = Vec::with_capacity(n);
    let mut fuse = vec![vec![None; n]; n];
    for (i, r) in letters.reps.iter().enumerate() {
        let m = r.mirror();
        if !c.has(&m)? {
            return Err(Error::Invalid(format!("mirror image of {r} is not in {c}")));
        }
        bar.push(letters.find(&m)?);
        for (j, s) in letters.reps.iter().enumerate() {
            let x = boxvert(r, s, 1)?;
            if c.has(&x)? {
                fuse[i][j] = Some(letters.find(&x)?);
            }
        }
    }
    let names: Vec<String> = letters.reps.iter().map(|r| r.to_string()).collect();
    let semiring = FreeFusionSemiring::new(names.clone(), bar, fuse)?;

    let mut classes: Vec<(Partition, Vec<usize>)> = Vec::new();
    for parts in &by_k {
        for cl in equivalence_classes(c, parts, limits)? {
            let w = letters.word(&cl[0])?;
            classes.push((cl[0].clone(), w));
        }
    }
    let mut injective = true;
    for (i, (p, w)) in classes.iter().enumerate() {
        for (q, v) in &classes[i + 1..] {
            injective &= (w == v) == equivalent(c, p, q, limits)?;
        }
    }
    Ok(FreenessReport {
        max_points,
        block_stable,
        letters: names
            .into_iter()
            .zip(letters.reps)
            .map(|(name, representative)| Letter { name, representative })
            .collect(),
        semiring,
        classes: classes.len(),
        injective,
    })
}
