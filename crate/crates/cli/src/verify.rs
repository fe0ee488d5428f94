//! Exhaustive check suites behind `particat verify`.

use particat::fusion::{fusion, label_of, labelled_fusion, representative, Family, FusionLabel};
use particat::model::{check_functor, t_rank};
use particat::partition::{projective_partitions, set_partitions};
use particat::structure::{dominates, enumerate_mixing, is_building, mix, through_block_decomposition, AltWord, Z2Word};
use particat::{Color, Error, Limits, Partition};
use serde::Serialize;

use crate::Failure;

const SHOWN_FAILURES: usize = 20;

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < SHOWN_FAILURES {
                self.failures.push(what());
            }
        }
    }
}

/// `T̊_p T̊_q = N^{rl} T̊_{pq}`, involution and tensor rules; arities up to 2.
fn functor(r: &mut Report, max_points: usize, n: usize, limits: &Limits) -> Result<(), Failure> {
    for k in 0..=2 {
        for m in 0..=2 {
            for l in 0..=2 {
                if k + m + l > max_points {
                    continue;
                }
                for q in set_partitions(k, m) {
                    for p in set_partitions(m, l) {
                        let rep = check_functor(&p, &q, n, limits)?;
                        r.check(rep.all_hold(), || format!("functor rules fail for {p} ∘ {q}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `rank T̊_p = N^{t(p)}`.
fn rank(r: &mut Report, max_points: usize, n: usize, limits: &Limits) -> Result<(), Failure> {
    for k in 0..=max_points {
        for l in 0..=max_points - k {
            for p in set_partitions(k, l) {
                let got = t_rank(&p, n, limits)?;
                r.check(got == n.pow(p.through_count() as u32), || format!("rank of {p} is {got}"));
            }
        }
    }
    Ok(())
}

fn labels(f: Family, max: usize) -> Vec<FusionLabel> {
    match f {
        Family::S | Family::O | Family::B => (0..=max).map(FusionLabel::Nat).collect(),
        Family::H => (0..=max)
            .flat_map(|n| (0..1usize << n).map(move |b| Z2Word((0..n).map(|i| ((b >> i) & 1) as u8).collect())))
            .filter(|w| w.0.iter().map(|&x| if x == 0 { 2 } else { 1 }).sum::<usize>() <= max)
            .map(FusionLabel::Z2)
            .collect(),
        Family::U => (0..=max)
            .flat_map(|n| {
                (0..1usize << n)
                    .map(move |b| AltWord((0..n).map(|i| if (b >> i) & 1 == 0 { Color::White } else { Color::Black }).collect()))
            })
            .map(FusionLabel::Alt)
            .collect(),
    }
}

/// Partition-level fusion against the closed-form rule on representatives
/// with at most `max_points / 2` points per row.
fn fusion_suite(r: &mut Report, max_points: usize) -> Result<(), Failure> {
    for f in Family::ALL {
        let c = f.category();
        let ls = labels(f, (max_points / 2).min(3));
        for a in &ls {
            for b in &ls {
                let (p, q) = (representative(f, a)?, representative(f, b)?);
                let mut got: Vec<FusionLabel> =
                    fusion(&c, &p, &q)?.partitions().iter().map(|m| label_of(f, m)).collect::<Result<_, _>>()?;
                let mut want = labelled_fusion(f, a, b)?;
                got.sort();
                want.sort();
                r.check(got == want, || format!("{}: {a} ⊗ {b}", f.id()));
            }
        }
    }
    Ok(())
}

/// Decomposition, projectives, domination and mixing up to the given size.
fn structure(r: &mut Report, max_points: usize) -> Result<(), Failure> {
    for k in 0..=max_points {
        for l in 0..=max_points - k {
            for p in set_partitions(k, l) {
                let d = through_block_decomposition(&p);
                let ok = d.recompose()? == p && is_building(&d.s) && is_building(&d.q);
                r.check(ok, || format!("decomposition of {p}"));
            }
        }
    }
    let half = (max_points / 2).min(4);
    for k in 0..=half {
        let ps = projective_partitions(k, false);
        let dom: Vec<Vec<bool>> =
            ps.iter().map(|x| ps.iter().map(|y| dominates(x, y)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
        for (a, x) in ps.iter().enumerate() {
            r.check(x.stats().non_through % 2 == 0, || format!("odd β for {x}"));
            r.check(dom[a][a], || format!("{x} does not dominate itself"));
            for b in 0..ps.len() {
                r.check(a == b || !(dom[a][b] && dom[b][a]), || format!("⪯ cycle {x} {}", ps[b]));
                r.check(!dom[a][b] || (0..ps.len()).all(|c| !dom[b][c] || dom[a][c]), || {
                    format!("⪯ not transitive at {x} {}", ps[b])
                });
            }
        }
    }
    for kp in 0..=half {
        for kq in 0..=half - kp {
            for p in projective_partitions(kp, false) {
                for q in projective_partitions(kq, false) {
                    let top = p.tensor(&q)?;
                    let mut seen: Vec<Partition> = Vec::new();
                    for h in enumerate_mixing(p.through_count(), q.through_count(), false) {
                        let m = mix(&p, &q, &h)?;
                        let ok = m.is_projective() && dominates(&top, &m)? && !seen.contains(&m);
                        r.check(ok, || format!("mix of {p} and {q} by {}", h.h));
                        seen.push(m);
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn run(suite: &str, max_points: usize, n: usize, limits: &Limits) -> Result<Report, Failure> {
    if max_points > limits.max_enumeration_points {
        return Err(Error::Bounds {
            what: "points to enumerate",
            requested: max_points,
            limit: limits.max_enumeration_points,
        }
        .into());
    }
    let mut r = Report { passed: true, ..Default::default() };
    match suite {
        "functor" => functor(&mut r, max_points, n, limits)?,
        "rank" => rank(&mut r, max_points, n, limits)?,
        "fusion" => fusion_suite(&mut r, max_points)?,
        "structure" => structure(&mut r, max_points)?,
        "all" => {
            functor(&mut r, max_points, n, limits)?;
            rank(&mut r, max_points, n, limits)?;
            fusion_suite(&mut r, max_points)?;
            structure(&mut r, max_points)?;
        }
        _ => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("unknown suite {suite:?}; expected functor, rank, fusion, structure or all"),
            }
            .into())
        }
    }
    Ok(r)
}
