//! The symmetry group `Sym(p)` and the equivalence `p ∼ q` of projective partitions.

use super::decomposition::through_block_decomposition;
use super::permutation::Permutation;
use crate::categories::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;

fn require_projective(p: &Partition) -> Result<()> {
    if p.is_projective() {
        Ok(())
    } else {
        Err(Error::NotProjective(p.to_string()))
    }
}

fn check_degree(t: usize, limits: &Limits) -> Result<()> {
    if t > limits.max_sym_degree {
        return Err(Error::Bounds { what: "through-blocks to permute", requested: t, limit: limits.max_sym_degree });
    }
    Ok(())
}

/// `q_u* r_σ p_u`, which carries `p` to `q` when it lies in the category.
pub fn transport(p: &Partition, q: &Partition, sigma: &Permutation) -> Result<Partition> {
    let t = p.through_count();
    if sigma.len() != t || q.through_count() != t {
        return Err(Error::Arity { expected: t, found: sigma.len() });
    }
    let pu = through_block_decomposition(p).s;
    let qu = through_block_decomposition(q).s;
    let r = sigma.to_partition(p.is_colored());
    let rp = r.compose(&pu)?.partition;
    Ok(qu.involution().compose(&rp)?.partition)
}

/// `p_σ = p_u* r_σ p_u`.
pub fn p_sigma(p: &Partition, sigma: &Permutation) -> Result<Partition> {
    require_projective(p)?;
    transport(p, p, sigma)
}

/// `Sym(p) = {σ ∈ S_t : p_σ ∈ C}` in lexicographic order.
pub fn sym_group(c: &Category, p: &Partition, limits: &Limits) -> Result<Vec<Permutation>> {
    require_projective(p)?;
    c.require(p)?;
    let t = p.through_count();
    if c.is_noncrossing() {
        return Ok(vec![Permutation::identity(t)]);
    }
    check_degree(t, limits)?;
    let mut out = Vec::new();
    for s in Permutation::all(t) {
        if c.has(&p_sigma(p, &s)?)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// A permutation `σ` with `q_u* r_σ p_u ∈ C`, if one exists.
pub fn equivalence_witness(c: &Category, p: &Partition, q: &Partition, limits: &Limits) -> Result<Option<Permutation>> {
    require_projective(p)?;
    require_projective(q)?;
    let t = p.through_count();
    if t != q.through_count() {
        return Ok(None);
    }
    if c.is_noncrossing() {
        let id = Permutation::identity(t);
        return Ok(c.has(&transport(p, q, &id)?)?.then_some(id));
    }
    check_degree(t, limits)?;
    for s in Permutation::all(t) {
        if c.has(&transport(p, q, &s)?)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn equivalent(c: &Category, p: &Partition, q: &Partition, limits: &Limits) -> Result<bool> {
    Ok(equivalence_witness(c, p, q, limits)?.is_some())
}

/// Partitions grouped into `∼`-classes. Classes and members are sorted, so the
/// first member of each class is its lexicographically least text form.
pub fn equivalence_classes(c: &Category, parts: &[Partition], limits: &Limits) -> Result<Vec<Vec<Partition>>> {
    let mut sorted = parts.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut classes: Vec<Vec<Partition>> = Vec::new();
    'next: for p in sorted {
        for class in classes.iter_mut() {
            if equivalent(c, &class[0], &p, limits)? {
                class.push(p);
                continue 'next;
            }
        }
        classes.push(vec![p]);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::categories::Builtin;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn p_sigma_group_laws() {
        let x = p("aabc:aabc");
        for a in Permutation::all(3) {
            for b in Permutation::all(3) {
                let lhs = p_sigma(&x, &a.then_after(&b)).unwrap();
                let rhs = p_sigma(&x, &a).unwrap().compose(&p_sigma(&x, &b).unwrap()).unwrap().partition;
                assert_eq!(lhs, rhs);
            }
            assert_eq!(p_sigma(&x, &a.inverse()).unwrap(), p_sigma(&x, &a).unwrap().involution());
        }
        assert_eq!(p_sigma(&x, &Permutation::identity(3)).unwrap(), x);
    }

    #[test]
    fn symmetric_groups() {
        let limits = Limits::default();
        let id3 = Partition::identity(3);
        assert_eq!(sym_group(&Builtin::P.into(), &id3, &limits).unwrap().len(), 6);
        assert_eq!(sym_group(&Builtin::Nc.into(), &id3, &limits).unwrap().len(), 1);
        let half = Category::generated(&[Partition::half_liberating()], 6, &limits).unwrap();
        let g = sym_group(&half, &id3, &limits).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&Permutation::new(vec![2, 1, 0]).unwrap()));
    }

    #[test]
    fn nc_shortcut_agrees_with_search() {
        let limits = Limits::default();
        // the same search run through a closure, which does not take the shortcut
        let nc = Category::generated(&[Partition::singleton(), Partition::four_block()], 7, &limits).unwrap();
        for x in projectives_nc(3) {
            let full: Vec<Permutation> = Permutation::all(x.through_count())
                .into_iter()
                .filter(|s| nc.has(&p_sigma(&x, s).unwrap()).unwrap())
                .collect();
            assert_eq!(full, sym_group(&Builtin::Nc.into(), &x, &limits).unwrap(), "{x}");
        }
    }

    fn projectives_nc(k: usize) -> Vec<Partition> {
        Category::from(Builtin::Nc).projectives(k, &Limits::default()).unwrap()
    }

    #[test]
    fn nc_classes_follow_through_count() {
        let limits = Limits::default();
        let c = Category::from(Builtin::Nc);
        let v = projectives_nc(3);
        for x in &v {
            for y in &v {
                let e = equivalent(&c, x, y, &limits).unwrap();
                assert_eq!(e, x.through_count() == y.through_count(), "{x} {y}");
            }
        }
    }

    #[test]
    fn nceven_splits_by_parity() {
        let limits = Limits::default();
        let c = Category::from(Builtin::NcEven);
        assert!(!equivalent(&c, &p("aa:aa"), &p("ab:ab"), &limits).unwrap());
        assert!(!equivalent(&c, &p("aa:aa"), &p("abba:abba"), &limits).unwrap());
        assert!(equivalent(&c, &p("aa:aa"), &p("aaaa:aaaa"), &limits).unwrap());
        assert!(equivalent(&c, &p("a:a"), &p("abb:acc"), &limits).unwrap());
    }

    #[test]
    fn different_through_counts_never_equivalent() {
        let limits = Limits::default();
        assert!(!equivalent(&Builtin::P.into(), &p("a:a"), &p("ab:ab"), &limits).unwrap());
    }
}
