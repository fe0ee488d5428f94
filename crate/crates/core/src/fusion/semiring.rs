//! Free fusion semirings: words over a letter set with an involution and a partial fusion.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeFusionSemiring {
    pub letters: Vec<String>,
    /// `bar[i]` is the conjugate of letter `i`.
    pub bar: Vec<usize>,
    /// `fuse[i][j]` is `i ∗ j`, or `None` when the fusion is empty.
    pub fuse: Vec<Vec<Option<usize>>>,
}

impl FreeFusionSemiring {
    pub fn new(letters: Vec<String>, bar: Vec<usize>, fuse: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = letters.len();
        let bad = |m: &str| Err(Error::Invalid(format!("semiring: {m}")));
        if bar.len() != n || fuse.len() != n || fuse.iter().any(|r| r.len() != n) {
            return bad("table sizes differ from the letter count");
        }
        if bar.iter().any(|&b| b >= n) || (0..n).any(|i| bar[bar[i]] != i) {
            return bad("conjugation is not an involution");
        }
        if fuse.iter().flatten().flatten().any(|&x| x >= n) {
            return bad("fusion leaves the letter set");
        }
        Ok(FreeFusionSemiring { letters, bar, fuse })
    }

    /// `ℤ₂` with addition; every letter is its own conjugate.
    pub fn z2() -> Self {
        let fuse = vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]];
        Self::new(vec!["0".into(), "1".into()], vec![0, 1], fuse).unwrap()
    }

    /// Two mutually conjugate letters `w`, `b` without fusion.
    pub fn unitary() -> Self {
        Self::new(vec!["w".into(), "b".into()], vec![1, 0], vec![vec![None; 2]; 2]).unwrap()
    }

    /// One self-conjugate letter with `x ∗ x = x`; words `x^k` are the labels `k`.
    pub fn free_symmetric() -> Self {
        Self::new(vec!["x".into()], vec![0], vec![vec![Some(0)]]).unwrap()
    }

    /// One self-conjugate letter without fusion.
    pub fn free_orthogonal() -> Self {
        Self::new(vec!["x".into()], vec![0], vec![vec![None]]).unwrap()
    }

    pub fn conjugate(&self, w: &[usize]) -> Vec<usize> {
        w.iter().rev().map(|&x| self.bar[x]).collect()
    }

    /// `w ⊗ w' = Σ_{w = az, w' = z̄b} (ab + a∗b)` as a list of words.
    pub fn tensor(&self, w: &[usize], v: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for len in 0..=w.len().min(v.len()) {
            let (a, z) = w.split_at(w.len() - len);
            let (zbar, b) = v.split_at(len);
            if self.conjugate(z) != zbar {
                continue;
            }
            let mut ab = a.to_vec();
            ab.extend_from_slice(b);
            out.push(ab);
            if !a.is_empty() && !b.is_empty() {
                if let Some(c) = self.fuse[a[a.len() - 1]][b[0]] {
                    let mut x = a[..a.len() - 1].to_vec();
                    x.push(c);
                    x.extend_from_slice(&b[1..]);
                    out.push(x);
                }
            }
        }
        out
    }

    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        if s.is_empty() || s == "e" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            // longest letter first
            let best = (0..self.letters.len())
                .filter(|&i| rest.starts_with(self.letters[i].as_str()))
                .max_by_key(|&i| self.letters[i].len())
                .ok_or(Error::Parse { pos: s.len() - rest.len(), msg: "unknown letter".into() })?;
            out.push(best);
            rest = &rest[self.letters[best].len()..];
        }
        Ok(out)
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter().map(|&x| self.letters[x].as_str()).collect()
    }
}
