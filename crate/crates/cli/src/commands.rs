use particat::categories::{Builtin, Membership};
use particat::fusion::{
    decompose_power, fusion, label_of, labelled_fusion, representative, Family, FusionLabel,
};
use particat::model::{class_projection, independent, kernel_dim};
use particat::structure::{sym_group, AltWord, Z2Word};
use particat::{Category, Color, Error, Limits, Partition};
use serde_json::{json, Value};

use crate::{verify, Command, Failure, Output};

const DEFAULT_CLOSURE_POINTS: usize = 8;

fn category(spec: &str, max_points: Option<usize>, limits: &Limits) -> Result<Category, Failure> {
    if let Some(path) = spec.strip_prefix("gen:") {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
        let gens = Category::parse_generators(&text)?;
        return Ok(Category::generated(&gens, max_points.unwrap_or(DEFAULT_CLOSURE_POINTS), limits)?);
    }
    Builtin::from_id(&spec.to_ascii_lowercase())
        .or_else(|| Family::from_id(spec).map(Family::builtin))
        .map(Category::from)
        .ok_or_else(|| Failure::Core(Error::Parse { pos: 0, msg: format!("unknown category {spec:?}") }))
}

/// Any failure to read the text counts as a parse error.
fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(|e: Error| match e {
        Error::Parse { .. } | Error::ColorLength { .. } => Failure::Core(e),
        other => Failure::Core(Error::Parse { pos: 0, msg: other.to_string() }),
    })
}

fn family(c: &Category) -> Option<Family> {
    c.builtin().and_then(Family::of)
}

/// A partition, or a label when the category is a free family.
fn operand(c: &Category, text: &str) -> Result<Partition, Failure> {
    if text.contains(':') {
        return parse_partition(text);
    }
    let f = family(c).ok_or_else(|| {
        Failure::Core(Error::Parse { pos: 0, msg: format!("{text:?} is not a partition and {c} has no labels") })
    })?;
    Ok(representative(f, &f.parse_label(text)?)?)
}

fn sorted_strings(v: &[FusionLabel]) -> Vec<String> {
    let mut s: Vec<FusionLabel> = v.to_vec();
    s.sort();
    s.iter().map(|l| l.to_string()).collect()
}

fn fuse(c: &Category, left: &str, right: &str) -> Result<Value, Failure> {
    let p = operand(c, left)?;
    let q = operand(c, right)?;
    let r = fusion(c, &p, &q)?;
    let f = family(c);
    let mut members = Vec::new();
    let mut labels = Vec::new();
    for m in &r.members {
        let label = f.map(|f| label_of(f, &m.partition)).transpose()?;
        members.push(json!({
            "partition": m.partition,
            "through": m.through,
            "label": label,
        }));
        labels.extend(label);
    }
    let mut out = json!({
        "left": p,
        "right": q,
        "candidates": r.candidates,
        "members": members,
    });
    if let Some(f) = f {
        let rule = labelled_fusion(f, &label_of(f, &p)?, &label_of(f, &q)?)?;
        out["labels"] = json!(labels);
        out["rule"] = json!(rule);
        out["agree"] = json!(sorted_strings(&labels) == sorted_strings(&rule));
    }
    Ok(out)
}

fn decompose(c: &Category, k: usize, n: Option<usize>, limits: &Limits) -> Result<Value, Failure> {
    let classes = decompose_power(c, k, limits)?;
    let proj = n.map(|n| class_projection(c, k, n, limits)).transpose()?;
    let mut rows = Vec::new();
    for cl in &classes {
        let mut row = json!({
            "representative": cl.representative,
            "through": cl.through,
            "label": cl.label,
            "size": cl.size,
        });
        if let Some(cp) = &proj {
            let m = cp.classes.iter().find(|x| x.representative == cl.representative).expect("same classes");
            row["rank"] = json!(m.rank);
            row["class_rank"] = json!(m.class_rank);
            row["multiplicity"] = json!(m.multiplicity);
        }
        rows.push(row);
    }
    let mut out = json!({ "classes": rows });
    if let Some(cp) = proj {
        out["dimension"] = json!(cp.dimension);
        out["total_rank"] = json!(cp.total_rank);
        out["orthogonal"] = json!(cp.orthogonal);
        out["complete"] = json!(cp.complete);
    }
    Ok(out)
}

fn words(f: Family, max: usize) -> Vec<FusionLabel> {
    match f {
        Family::S | Family::O | Family::B => (0..=max).map(FusionLabel::Nat).collect(),
        Family::H => (0..=max)
            .flat_map(|n| (0..1usize << n).map(move |b| Z2Word((0..n).map(|i| ((b >> (n - 1 - i)) & 1) as u8).collect())))
            .map(FusionLabel::Z2)
            .collect(),
        Family::U => (0..=max)
            .flat_map(|n| {
                (0..1usize << n).map(move |b| {
                    AltWord((0..n).map(|i| if (b >> (n - 1 - i)) & 1 == 0 { Color::White } else { Color::Black }).collect())
                })
            })
            .map(FusionLabel::Alt)
            .collect(),
    }
}

fn table(c: &Category, max: usize) -> Result<(Value, usize), Failure> {
    let f = family(c).ok_or_else(|| Failure::Core(Error::Invalid(format!("{c} is not one of the free families"))))?;
    let ls = words(f, max);
    let mut rows = Vec::new();
    let mut all = true;
    for a in &ls {
        for b in &ls {
            let (p, q) = (representative(f, a)?, representative(f, b)?);
            let got: Vec<FusionLabel> =
                fusion(c, &p, &q)?.partitions().iter().map(|m| label_of(f, m)).collect::<Result<_, _>>()?;
            let rule = labelled_fusion(f, a, b)?;
            let agree = sorted_strings(&got) == sorted_strings(&rule);
            all &= agree;
            rows.push(json!({ "left": a, "right": b, "fusion": got, "rule": rule, "agree": agree }));
        }
    }
    let checks = rows.len();
    Ok((json!({ "family": f.id(), "agree": all, "rows": rows }), checks))
}

pub fn run(cmd: &Command, limits: &Limits) -> Result<Output, Failure> {
    let done = |inputs: Value, result: Value, checks: usize| Output { inputs, result, checks, code: 0 };
    match cmd {
        Command::Fuse { category: cat, left, right, max_points } => {
            let c = category(cat, *max_points, limits)?;
            let result = fuse(&c, left, right)?;
            let checks = result["candidates"].as_u64().unwrap_or(0) as usize;
            Ok(done(json!({ "category": c.to_string(), "left": left, "right": right }), result, checks))
        }
        Command::Decompose { category: cat, power, n, max_points } => {
            let c = category(cat, *max_points, limits)?;
            let result = decompose(&c, *power, *n, limits)?;
            Ok(done(json!({ "category": c.to_string(), "power": power, "N": n }), result, 0))
        }
        Command::Member { category: cat, partition, max_points } => {
            let c = category(cat, *max_points, limits)?;
            let p = parse_partition(partition)?;
            let m = c.contains(&p)?;
            Ok(Output {
                inputs: json!({ "category": c.to_string(), "partition": partition }),
                result: json!({ "partition": p, "member": m }),
                checks: 0,
                code: if m == Membership::Unknown { 4 } else { 0 },
            })
        }
        Command::Sym { category: cat, partition, max_points } => {
            let c = category(cat, *max_points, limits)?;
            let p = parse_partition(partition)?;
            let g = sym_group(&c, &p, limits)?;
            Ok(done(
                json!({ "category": c.to_string(), "partition": partition }),
                json!({ "partition": p, "through": p.through_count(), "order": g.len(), "permutations": g }),
                g.len(),
            ))
        }
        Command::Verify { suite, max_points, n } => {
            let report = verify::run(suite, *max_points, *n, limits)?;
            let checks = report.checks;
            Ok(done(json!({ "suite": suite, "max_points": max_points, "N": n }), serde_json::to_value(report).unwrap(), checks))
        }
        Command::Brauer { category: cat, k, n, max_points } => {
            let c = category(cat, *max_points, limits)?;
            let kernel = kernel_dim(&c, *k, *n, limits)?;
            let ind = independent(&c, *k, *n, limits)?;
            Ok(done(
                json!({ "category": c.to_string(), "k": k, "N": n }),
                json!({ "size": ind.size, "rank": ind.rank, "kernel_dim": kernel }),
                0,
            ))
        }
        Command::Table { category: cat, max_label } => {
            let c = category(cat, None, limits)?;
            let (result, checks) = table(&c, *max_label)?;
            Ok(done(json!({ "category": c.to_string(), "max_label": max_label }), result, checks))
        }
    }
}
