//! Exhaustive generation of partitions in canonical order of restricted growth strings.

use super::{Color, Partition};

/// Iterates all partitions of `P(k, l)` (uncolored).
pub struct SetPartitions {
    upper: usize,
    rgs: Vec<u8>,
    maxes: Vec<u8>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_canonical(self.upper, self.rgs.clone(), None);
        // maxes[i] = max(rgs[0..i]) + 1, the largest value position i may take.
        let n = self.rgs.len();
        match (1..n).rev().find(|&i| self.rgs[i] < self.maxes[i]) {
            None => self.done = true,
            Some(i) => {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j - 1] + 1);
                }
            }
        }
        Some(out)
    }
}

pub fn set_partitions(k: usize, l: usize) -> SetPartitions {
    let n = k + l;
    let maxes: Vec<u8> = (0..n).map(|j| u8::from(j > 0)).collect();
    SetPartitions { upper: k, rgs: vec![0; n], maxes, done: false }
}

/// All `2^n` color words of length `n`, white before black.
pub fn all_colorings(n: usize) -> impl Iterator<Item = Vec<Color>> {
    (0u64..1 << n).map(move |m| {
        (0..n).map(|i| if m >> (n - 1 - i) & 1 == 1 { Color::Black } else { Color::White }).collect()
    })
}

/// All projective partitions of `P(k, k)`, sorted.
///
/// A projective partition is fixed by an upper set partition and the choice of
/// which of its blocks continue through to the mirrored lower row.
pub fn projective_partitions(k: usize, colored: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    for up in set_partitions(k, 0) {
        let b = up.block_count();
        for mask in 0u64..1 << b {
            let upper: Vec<usize> = up.labels().iter().map(|&x| x as usize).collect();
            let lower: Vec<usize> =
                upper.iter().map(|&x| if mask >> x & 1 == 1 { x } else { x + b }).collect();
            if colored {
                for c in all_colorings(k) {
                    out.push(Partition::new_colored(&upper, &lower, &c, &c).expect("fits"));
                }
            } else {
                out.push(Partition::new(&upper, &lower).expect("fits"));
            }
        }
    }
    out.sort();
    out
}
