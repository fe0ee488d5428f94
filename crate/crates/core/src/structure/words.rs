//! Word labels read off projective partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Color, Partition};

/// A word over `ℤ₂`, letters `0` and `1`. The empty word prints as `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Word(pub Vec<u8>);

/// A word in the free product `ℕ ∗ ℕ`, one color per generator.
/// Prints in run-length form (`2w1b`); the empty word prints as `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltWord(pub Vec<Color>);

impl fmt::Display for Z2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        self.0.iter().try_for_each(|x| write!(f, "{x}"))
    }
}

impl FromStr for Z2Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Z2Word> {
        if s.is_empty() || s == "e" {
            return Ok(Z2Word(Vec::new()));
        }
        s.bytes()
            .enumerate()
            .map(|(i, c)| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::Parse { pos: i, msg: "ℤ₂ letters are 0 and 1".into() }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Z2Word)
    }
}

impl fmt::Display for AltWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let mut i = 0;
        while i < self.0.len() {
            let c = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == c).count();
            write!(f, "{run}{}", c.as_char())?;
            i += run;
        }
        Ok(())
    }
}

impl FromStr for AltWord {
    type Err = Error;

    /// Accepts run-length form (`2w1b`) as well as plain letters (`wwb`).
    fn from_str(s: &str) -> Result<AltWord> {
        if s.is_empty() || s == "e" {
            return Ok(AltWord(Vec::new()));
        }
        let mut out = Vec::new();
        let mut count: Option<usize> = None;
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0'..=b'9' => count = Some(count.unwrap_or(0) * 10 + (c - b'0') as usize),
                b'w' | b'b' => {
                    let color = if c == b'w' { Color::White } else { Color::Black };
                    out.extend(std::iter::repeat(color).take(count.take().unwrap_or(1)));
                }
                _ => return Err(Error::Parse { pos: i, msg: "expected digits, w or b".into() }),
            }
        }
        if count.is_some() {
            return Err(Error::Parse { pos: s.len(), msg: "count without a color".into() });
        }
        Ok(AltWord(out))
    }
}

impl Serialize for Z2Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for AltWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn require_projective(p: &Partition) -> Result<()> {
    if p.is_projective() {
        Ok(())
    } else {
        Err(Error::NotProjective(p.to_string()))
    }
}

/// Through-block ids in order of their smallest upper point.
fn through_blocks(p: &Partition) -> Vec<u8> {
    let mask = p.through_mask();
    let mut out = Vec::new();
    for &x in p.upper_labels() {
        if mask[x as usize] && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Letter `0` for a through-block of size divisible by four, `1` otherwise.
pub fn word_h(p: &Partition) -> Result<Z2Word> {
    require_projective(p)?;
    if !p.all_blocks_even() {
        return Err(Error::OddBlock(p.to_string()));
    }
    let mut sizes = vec![0usize; p.block_count()];
    for &x in p.labels() {
        sizes[x as usize] += 1;
    }
    Ok(Z2Word(through_blocks(p).iter().map(|&b| u8::from(sizes[b as usize] % 4 != 0)).collect()))
}

/// Upper colors of the through-pairs, left to right.
pub fn word_u(p: &Partition) -> Result<AltWord> {
    let colors = p.upper_colors().ok_or(Error::Uncolored)?;
    require_projective(p)?;
    if !p.is_pair() {
        return Err(Error::NotPairPartition(p.to_string()));
    }
    let mask = p.through_mask();
    Ok(AltWord(
        p.upper_labels()
            .iter()
            .zip(colors)
            .filter(|(x, _)| mask[**x as usize])
            .map(|(_, c)| *c)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h_words() {
        assert_eq!(word_h(&p("aab:aab")).unwrap().to_string(), "01");
        assert_eq!(word_h(&p("abb:abb")).unwrap().to_string(), "10");
        assert_eq!(word_h(&Partition::empty()).unwrap().to_string(), "e");
        assert!(matches!(word_h(&p("a:b")), Err(Error::OddBlock(_))));
        assert!(matches!(word_h(&Partition::crossing()), Err(Error::NotProjective(_))));
    }

    #[test]
    fn u_words() {
        let q = p("abbc@wwbb:addc@wwbb");
        assert_eq!(word_u(&q).unwrap().to_string(), "1w1b");
        assert!(matches!(word_u(&p("a:a")), Err(Error::Uncolored)));
    }

    #[test]
    fn word_text_round_trip() {
        for s in ["e", "2w1b", "1b", "3w2b1w"] {
            assert_eq!(s.parse::<AltWord>().unwrap().to_string(), s);
        }
        assert_eq!("wwb".parse::<AltWord>().unwrap().to_string(), "2w1b");
        assert_eq!("0110".parse::<Z2Word>().unwrap().to_string(), "0110");
        assert!("2".parse::<AltWord>().is_err());
        assert!("012".parse::<Z2Word>().is_err());
    }
}
