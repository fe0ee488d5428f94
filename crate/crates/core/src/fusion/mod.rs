//! Fusion of projective partitions: `X_C(p, q) = Y(p, q) ∩ C`.

mod freeness;
mod labels;
mod semiring;

pub use freeness::{freeness_probe, FreenessReport, Letter};
pub use labels::{label_of, labelled_fusion, representative, Family, FusionLabel};
pub use semiring::FreeFusionSemiring;

use serde::Serialize;

use crate::categories::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::structure::{enumerate_mixing, equivalence_classes, mix, MixingPartition};

fn require_projective(p: &Partition) -> Result<()> {
    if p.is_projective() {
        Ok(())
    } else {
        Err(Error::NotProjective(p.to_string()))
    }
}

/// `Y(p, q)`: one candidate per mixing partition, paired with it.
pub fn fusion_candidates(p: &Partition, q: &Partition) -> Result<Vec<(Partition, MixingPartition)>> {
    require_projective(p)?;
    require_projective(q)?;
    if p.is_colored() != q.is_colored() {
        return Err(Error::ColorMode);
    }
    enumerate_mixing(p.through_count(), q.through_count(), p.is_colored())
        .into_iter()
        .map(|h| Ok((mix(p, q, &h)?, h)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionMember {
    pub partition: Partition,
    pub through: usize,
    pub mixing: MixingPartition,
}

/// Members ordered by through-block count, then by text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionResult {
    pub members: Vec<FusionMember>,
    pub candidates: usize,
}

impl FusionResult {
    pub fn partitions(&self) -> Vec<Partition> {
        self.members.iter().map(|m| m.partition.clone()).collect()
    }
}

/// `X_C(p, q)`. Fails if membership of some candidate cannot be decided.
pub fn fusion(c: &Category, p: &Partition, q: &Partition) -> Result<FusionResult> {
    c.require(p)?;
    c.require(q)?;
    let cands = fusion_candidates(p, q)?;
    let candidates = cands.len();
    let mut members = Vec::new();
    for (m, h) in cands {
        if c.has(&m)? {
            members.push(FusionMember { through: m.through_count(), partition: m, mixing: h });
        }
    }
    members.sort_by(|a, b| (a.through, &a.partition).cmp(&(b.through, &b.partition)));
    Ok(FusionResult { members, candidates })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerClass {
    pub representative: Partition,
    pub through: usize,
    pub size: usize,
    pub label: FusionLabel,
}

/// The `∼`-classes of `Proj_C(k)`, labelled by the closed-form labels when
/// `C` is one of the free families.
pub fn decompose_power(c: &Category, k: usize, limits: &Limits) -> Result<Vec<PowerClass>> {
    let parts = c.projectives(k, limits)?;
    let family = c.builtin().and_then(Family::of);
    let mut out = Vec::new();
    for class in equivalence_classes(c, &parts, limits)? {
        let rep = class[0].clone();
        let label = match family {
            Some(f) => label_of(f, &rep)?,
            None => FusionLabel::Class(rep.clone()),
        };
        out.push(PowerClass { through: rep.through_count(), size: class.len(), representative: rep, label });
    }
    out.sort_by(|a, b| (a.through, &a.representative).cmp(&(b.through, &b.representative)));
    Ok(out)
}
