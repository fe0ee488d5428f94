//! Categories of partitions: predicate-defined builtins and bounded closures.

mod closure;

pub use closure::Generated;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{all_colorings, projective_partitions, set_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Builtin {
    /// All partitions.
    P,
    /// All pair partitions.
    P2,
    /// Noncrossing partitions.
    Nc,
    /// Noncrossing pair partitions.
    Nc2,
    /// Noncrossing partitions with blocks of size one or two.
    Ncb,
    /// Noncrossing partitions with blocks of even size.
    NcEven,
    /// Colored noncrossing pair partitions: through-pairs keep their color,
    /// pairs within a row join opposite colors.
    UCol,
}

impl Builtin {
    pub const ALL: [Builtin; 7] =
        [Builtin::P, Builtin::P2, Builtin::Nc, Builtin::Nc2, Builtin::Ncb, Builtin::NcEven, Builtin::UCol];

    pub fn id(self) -> &'static str {
        match self {
            Builtin::P => "p",
            Builtin::P2 => "p2",
            Builtin::Nc => "nc",
            Builtin::Nc2 => "nc2",
            Builtin::Ncb => "ncb",
            Builtin::NcEven => "nceven",
            Builtin::UCol => "ucol",
        }
    }

    pub fn from_id(id: &str) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.id() == id)
    }

    pub fn is_colored(self) -> bool {
        self == Builtin::UCol
    }

    pub fn is_noncrossing(self) -> bool {
        !matches!(self, Builtin::P | Builtin::P2)
    }

    fn admits(self, p: &Partition) -> bool {
        match self {
            Builtin::P => true,
            Builtin::P2 => p.is_pair(),
            Builtin::Nc => p.is_noncrossing(),
            Builtin::Nc2 => p.is_pair() && p.is_noncrossing(),
            Builtin::Ncb => p.blocks_at_most_two() && p.is_noncrossing(),
            Builtin::NcEven => p.all_blocks_even() && p.is_noncrossing(),
            Builtin::UCol => {
                let colors = p.colors().expect("checked by caller");
                p.is_pair()
                    && p.is_noncrossing()
                    && p.blocks().iter().all(|b| {
                        let ends: Vec<_> = b
                            .upper
                            .iter()
                            .map(|&i| colors[i])
                            .chain(b.lower.iter().map(|&i| colors[p.upper() + i]))
                            .collect();
                        (ends[0] == ends[1]) == b.is_through()
                    })
            }
        }
    }
}

/// Three-valued membership: closures cannot decide beyond their bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug)]
pub enum Category {
    Builtin(Builtin),
    Generated(Box<Generated>),
}

impl From<Builtin> for Category {
    fn from(b: Builtin) -> Self {
        Category::Builtin(b)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Category::Builtin(b) => f.write_str(b.id()),
            Category::Generated(g) => {
                write!(f, "gen[")?;
                for (i, x) in g.generators().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]@{}", g.max_points())
            }
        }
    }
}

impl Category {
    pub fn generated(generators: &[Partition], max_points: usize, limits: &Limits) -> Result<Category> {
        Ok(Category::Generated(Box::new(Generated::closure(generators, max_points, limits)?)))
    }

    /// Parses a generator file: one partition per line, `#` starts a comment.
    pub fn parse_generators(text: &str) -> Result<Vec<Partition>> {
        text.lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(|l| l.parse())
            .collect()
    }

    pub fn builtin(&self) -> Option<Builtin> {
        match self {
            Category::Builtin(b) => Some(*b),
            Category::Generated(_) => None,
        }
    }

    pub fn is_colored(&self) -> bool {
        match self {
            Category::Builtin(b) => b.is_colored(),
            Category::Generated(g) => g.is_colored(),
        }
    }

    /// Whether every member is noncrossing (for closures: every member within the bound).
    pub fn is_noncrossing(&self) -> bool {
        match self {
            Category::Builtin(b) => b.is_noncrossing(),
            Category::Generated(g) => g.is_noncrossing(),
        }
    }

    fn check_mode(&self, p: &Partition) -> Result<()> {
        if p.is_colored() != self.is_colored() {
            return Err(Error::ColorMode);
        }
        Ok(())
    }

    pub fn contains(&self, p: &Partition) -> Result<Membership> {
        self.check_mode(p)?;
        Ok(match self {
            Category::Builtin(b) => {
                if b.admits(p) {
                    Membership::Yes
                } else {
                    Membership::No
                }
            }
            Category::Generated(g) => g.contains(p),
        })
    }

    /// Two-valued membership; an unknown answer becomes an error.
    pub fn has(&self, p: &Partition) -> Result<bool> {
        match self.contains(p)? {
            Membership::Yes => Ok(true),
            Membership::No => Ok(false),
            Membership::Unknown => Err(Error::UnknownMembership(p.to_string())),
        }
    }

    pub fn require(&self, p: &Partition) -> Result<()> {
        if self.has(p)? {
            Ok(())
        } else {
            Err(Error::NotInCategory(p.to_string()))
        }
    }

    /// `C(k, l)` in canonical order, every coloring included for colored categories.
    pub fn enumerate(&self, k: usize, l: usize, limits: &Limits) -> Result<Vec<Partition>> {
        let n = k + l;
        if n > limits.max_enumeration_points {
            return Err(Error::Bounds {
                what: "points to enumerate",
                requested: n,
                limit: limits.max_enumeration_points,
            });
        }
        let mut out = match self {
            Category::Generated(g) => g.members_of(k, l)?,
            Category::Builtin(b) => {
                let shapes = set_partitions(k, l).filter(|p| match b {
                    Builtin::P2 | Builtin::Nc2 | Builtin::UCol => p.is_pair(),
                    _ => true,
                });
                if b.is_colored() {
                    let mut v = Vec::new();
                    for s in shapes.filter(|s| s.is_noncrossing()) {
                        for c in all_colorings(n) {
                            let x = Partition::from_raw(
                                k,
                                &s.labels().iter().map(|&x| x as usize).collect::<Vec<_>>(),
                                Some(c),
                            )?;
                            if b.admits(&x) {
                                v.push(x);
                            }
                        }
                    }
                    v
                } else {
                    shapes.filter(|p| b.admits(p)).collect()
                }
            }
        };
        out.sort();
        Ok(out)
    }

    /// `Proj_C(k)` in canonical order.
    pub fn projectives(&self, k: usize, limits: &Limits) -> Result<Vec<Partition>> {
        if k > limits.max_enumeration_points {
            return Err(Error::Bounds {
                what: "points per row of projective partitions",
                requested: k,
                limit: limits.max_enumeration_points,
            });
        }
        let mut out = Vec::new();
        for p in projective_partitions(k, self.is_colored()) {
            if self.has(&p)? {
                out.push(p);
            }
        }
        Ok(out)
    }
}
