//! Labels of irreducible classes in the free families and their closed-form fusion rules.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::categories::{Builtin, Category};
use crate::error::{Error, Result};
use crate::partition::{Color, Partition};
use crate::structure::{word_h, word_u, AltWord, Z2Word};

/// The five noncrossing families with known labellings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `NC`
    S,
    /// `NC2`
    O,
    /// `NCB`
    B,
    /// `NCEVEN`
    H,
    /// `UCOL`
    U,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::S, Family::O, Family::B, Family::H, Family::U];

    pub fn id(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::O => "O",
            Family::B => "B",
            Family::H => "H",
            Family::U => "U",
        }
    }

    pub fn from_id(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id().eq_ignore_ascii_case(s))
    }

    pub fn builtin(self) -> Builtin {
        match self {
            Family::S => Builtin::Nc,
            Family::O => Builtin::Nc2,
            Family::B => Builtin::Ncb,
            Family::H => Builtin::NcEven,
            Family::U => Builtin::UCol,
        }
    }

    pub fn category(self) -> Category {
        self.builtin().into()
    }

    pub fn of(b: Builtin) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.builtin() == b)
    }

    /// Parses a label written as the CLI prints it.
    pub fn parse_label(self, s: &str) -> Result<FusionLabel> {
        match self {
            Family::S | Family::O | Family::B => s
                .parse()
                .map(FusionLabel::Nat)
                .map_err(|_| Error::Parse { pos: 0, msg: format!("expected a natural number, got {s:?}") }),
            Family::H => s.parse().map(FusionLabel::Z2),
            Family::U => s.parse().map(FusionLabel::Alt),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FusionLabel {
    Nat(usize),
    Z2(Z2Word),
    Alt(AltWord),
    /// Any other category: the class representative itself.
    Class(Partition),
}

impl fmt::Display for FusionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionLabel::Nat(n) => write!(f, "{n}"),
            FusionLabel::Z2(w) => write!(f, "{w}"),
            FusionLabel::Alt(w) => write!(f, "{w}"),
            FusionLabel::Class(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for FusionLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn wrong(f: Family, l: &FusionLabel) -> Error {
    Error::Invalid(format!("label {l} does not belong to family {}", f.id()))
}

/// The label of a projective partition of the family's category.
pub fn label_of(f: Family, p: &Partition) -> Result<FusionLabel> {
    f.category().require(p)?;
    if !p.is_projective() {
        return Err(Error::NotProjective(p.to_string()));
    }
    Ok(match f {
        Family::S | Family::O | Family::B => FusionLabel::Nat(p.through_count()),
        Family::H => FusionLabel::Z2(word_h(p)?),
        Family::U => FusionLabel::Alt(word_u(p)?),
    })
}

/// The canonical representative of a label.
///
/// `|^⊗t` for `t > 0`; for `S` the label 0 is the pair of singletons `a:b`,
/// elsewhere the empty partition. `H` letters are `a:a` for 1 and `aa:aa` for 0.
pub fn representative(f: Family, l: &FusionLabel) -> Result<Partition> {
    match (f, l) {
        (Family::S, FusionLabel::Nat(0)) => Ok(Partition::disconnected_unit()),
        (Family::S | Family::O | Family::B, FusionLabel::Nat(t)) => Ok(Partition::identity(*t)),
        (Family::H, FusionLabel::Z2(w)) => {
            let one: Partition = "a:a".parse()?;
            let zero = Partition::four_block();
            w.0.iter().try_fold(Partition::empty(), |acc, &x| acc.tensor(if x == 0 { &zero } else { &one }))
        }
        (Family::U, FusionLabel::Alt(w)) => {
            Ok(if w.0.is_empty() { Partition::empty_colored() } else { Partition::identity_colored(&w.0) })
        }
        _ => Err(wrong(f, l)),
    }
}

fn z2_bar(z: &[u8]) -> Vec<u8> {
    z.iter().rev().copied().collect()
}

fn alt_bar(z: &[Color]) -> Vec<Color> {
    z.iter().rev().map(|c| c.flip()).collect()
}

/// `Σ_{w = az, w' = z̄b} ab (+ a∗b)`, in order of increasing `|z|`.
fn word_rule<T: Clone + PartialEq>(
    w: &[T],
    v: &[T],
    bar: impl Fn(&[T]) -> Vec<T>,
    fuse: impl Fn(&T, &T) -> Option<T>,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for len in 0..=w.len().min(v.len()) {
        let (a, z) = w.split_at(w.len() - len);
        if v[..len] != bar(z)[..] {
            continue;
        }
        let b = &v[len..];
        out.push([a, b].concat());
        if let (Some((x, a0)), Some((y, b0))) = (a.split_last(), b.split_first()) {
            if let Some(c) = fuse(x, y) {
                out.push([a0, &[c], b0].concat());
            }
        }
    }
    out
}

/// The closed-form fusion rule of a free family.
pub fn labelled_fusion(f: Family, a: &FusionLabel, b: &FusionLabel) -> Result<Vec<FusionLabel>> {
    match (f, a, b) {
        (Family::S, FusionLabel::Nat(k), FusionLabel::Nat(l)) => {
            Ok((k.abs_diff(*l)..=k + l).map(FusionLabel::Nat).collect())
        }
        (Family::O | Family::B, FusionLabel::Nat(k), FusionLabel::Nat(l)) => {
            Ok((k.abs_diff(*l)..=k + l).step_by(2).map(FusionLabel::Nat).collect())
        }
        (Family::H, FusionLabel::Z2(w), FusionLabel::Z2(v)) => Ok(word_rule(&w.0, &v.0, z2_bar, |x, y| Some(x ^ y))
            .into_iter()
            .map(|x| FusionLabel::Z2(Z2Word(x)))
            .collect()),
        (Family::U, FusionLabel::Alt(w), FusionLabel::Alt(v)) => Ok(word_rule(&w.0, &v.0, alt_bar, |_, _| None)
            .into_iter()
            .map(|x| FusionLabel::Alt(AltWord(x)))
            .collect()),
        _ => Err(wrong(f, if matches!(a, FusionLabel::Class(_)) { a } else { b })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(f: Family, a: &str, b: &str) -> Vec<String> {
        let (a, b) = (f.parse_label(a).unwrap(), f.parse_label(b).unwrap());
        labelled_fusion(f, &a, &b).unwrap().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(strings(Family::S, "2", "3"), ["1", "2", "3", "4", "5"]);
        assert_eq!(strings(Family::O, "2", "3"), ["1", "3", "5"]);
        assert_eq!(strings(Family::B, "0", "2"), ["2"]);
        assert_eq!(strings(Family::H, "0", "0"), ["00", "0", "e"]);
        assert_eq!(strings(Family::H, "01", "10"), ["0110", "000", "00", "0", "e"]);
        assert_eq!(strings(Family::H, "0", "1"), ["01", "1"]);
        assert_eq!(strings(Family::U, "w", "b"), ["1w1b", "e"]);
        assert_eq!(strings(Family::U, "w", "w"), ["2w"]);
        assert_eq!(strings(Family::U, "e", "2w1b"), ["2w1b"]);
    }

    #[test]
    fn representatives_carry_their_labels() {
        for (f, l) in [
            (Family::S, "0"),
            (Family::S, "3"),
            (Family::O, "0"),
            (Family::B, "2"),
            (Family::H, "e"),
            (Family::H, "0110"),
            (Family::U, "1w2b"),
            (Family::U, "e"),
        ] {
            let label = f.parse_label(l).unwrap();
            let r = representative(f, &label).unwrap();
            assert_eq!(label_of(f, &r).unwrap(), label, "{} {l}", f.id());
        }
    }

    #[test]
    fn label_mismatch() {
        assert!(labelled_fusion(Family::S, &FusionLabel::Nat(1), &FusionLabel::Z2(Z2Word(vec![0]))).is_err());
        assert!(Family::S.parse_label("x").is_err());
    }
}
