//! Text form `<upper>[@<colors>]:<lower>[@<colors>]`, e.g. `aab:abbb` or `ab@wb:ba@bw`.

use std::fmt;
use std::str::FromStr;

use super::{Color, Partition};
use crate::error::{Error, Result};

pub(super) fn letter(id: u8) -> char {
    match id {
        0..=25 => (b'a' + id) as char,
        _ => (b'A' + id - 26) as char,
    }
}

fn letter_value(c: u8) -> Option<usize> {
    match c {
        b'a'..=b'z' => Some((c - b'a') as usize),
        b'A'..=b'Z' => Some((c - b'A') as usize + 26),
        _ => None,
    }
}

struct Row {
    labels: Vec<usize>,
    colors: Option<Vec<Color>>,
}

fn parse_row(s: &str, offset: usize) -> Result<Row> {
    let (word, colors) = match s.find('@') {
        Some(i) => (&s[..i], Some((&s[i + 1..], offset + i + 1))),
        None => (s, None),
    };
    let mut labels = Vec::with_capacity(word.len());
    for (i, c) in word.bytes().enumerate() {
        let v = letter_value(c).ok_or_else(|| Error::Parse {
            pos: offset + i,
            msg: format!("unexpected character {:?}", c as char),
        })?;
        labels.push(v);
    }
    let colors = match colors {
        None => None,
        Some((cs, at)) => {
            let mut out = Vec::with_capacity(cs.len());
            for (i, c) in cs.bytes().enumerate() {
                out.push(match c {
                    b'w' => Color::White,
                    b'b' => Color::Black,
                    _ => {
                        return Err(Error::Parse {
                            pos: at + i,
                            msg: format!("color must be w or b, found {:?}", c as char),
                        })
                    }
                });
            }
            if out.len() != labels.len() {
                return Err(Error::ColorLength { expected: labels.len(), found: out.len() });
            }
            Some(out)
        }
    };
    Ok(Row { labels, colors })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        let colon = s.find(':').ok_or(Error::Parse { pos: s.len(), msg: "missing ':'".into() })?;
        if let Some(extra) = s[colon + 1..].find(':') {
            return Err(Error::Parse { pos: colon + 1 + extra, msg: "second ':'".into() });
        }
        let up = parse_row(&s[..colon], 0)?;
        let down = parse_row(&s[colon + 1..], colon + 1)?;
        let colors = match (up.colors, down.colors) {
            (None, None) => None,
            (Some(a), Some(b)) => Some(a.into_iter().chain(b).collect()),
            (Some(a), None) if down.labels.is_empty() => Some(a),
            (None, Some(b)) if up.labels.is_empty() => Some(b),
            _ => return Err(Error::ColorMode),
        };
        let labels: Vec<usize> = up.labels.iter().chain(&down.labels).copied().collect();
        Partition::from_raw(up.labels.len(), &labels, colors)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bytes: Vec<u8> = self.text_bytes().collect();
        f.write_str(std::str::from_utf8(&bytes).expect("ascii"))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
