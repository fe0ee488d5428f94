mod common;

use common::p;
use particat::categories::Builtin;
use particat::partition::{set_partitions, Corner};
use particat::structure::{dominates, through_block_decomposition, Decomposition};
use particat::{Category, Color, Limits, Partition};
use proptest::prelude::*;

fn partition(max_k: usize, max_l: usize) -> impl Strategy<Value = Partition> {
    (0..=max_k, 0..=max_l)
        .prop_flat_map(|(k, l)| (Just(k), prop::collection::vec(0usize..12, k + l)))
        .prop_map(|(k, raw)| Partition::from_raw(k, &raw, None).unwrap())
}

fn with_arity(k: usize, l: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..8, k + l).prop_map(move |raw| Partition::from_raw(k, &raw, None).unwrap())
}

fn colored(max: usize) -> impl Strategy<Value = Partition> {
    partition(max, max).prop_flat_map(|x| {
        let n = x.points();
        (Just(x), prop::collection::vec(any::<bool>(), n))
    })
    .prop_map(|(x, bits)| {
        let colors: Vec<Color> = bits.into_iter().map(|b| if b { Color::Black } else { Color::White }).collect();
        let labels: Vec<usize> = x.labels().iter().map(|&v| v as usize).collect();
        Partition::from_raw(x.upper(), &labels, Some(colors)).unwrap()
    })
}

/// Three composable partitions `a: k → m`, `b: m → n`, `c: n → o`.
fn chain() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..=3usize, 0..=3usize, 0..=3usize, 0..=3usize)
        .prop_flat_map(|(k, m, n, o)| (with_arity(k, m), with_arity(m, n), with_arity(n, o)))
}

proptest! {
    #[test]
    fn text_round_trip(x in colored(4)) {
        prop_assert_eq!(x.to_string().parse::<Partition>().unwrap(), x);
    }

    #[test]
    fn composition_associates_with_loops((a, b, c) in chain()) {
        let ba = b.compose(&a).unwrap();
        let left = c.compose(&ba.partition).unwrap();
        let cb = c.compose(&b).unwrap();
        let right = cb.partition.compose(&a).unwrap();
        prop_assert_eq!(&left.partition, &right.partition);
        prop_assert_eq!(ba.loops + left.loops, cb.loops + right.loops);
    }

    #[test]
    fn involution_reverses_composition((a, b, _) in chain()) {
        let ba = b.compose(&a).unwrap();
        let rev = a.involution().compose(&b.involution()).unwrap();
        prop_assert_eq!(ba.partition.involution(), rev.partition);
        prop_assert_eq!(ba.loops, rev.loops);
        prop_assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn tensor_interchange((a, b, _) in chain(), (c, d, _) in chain()) {
        // (b ⊗ d)(a ⊗ c) = ba ⊗ dc
        let lhs = b.tensor(&d).unwrap().compose(&a.tensor(&c).unwrap()).unwrap();
        let ba = b.compose(&a).unwrap();
        let dc = d.compose(&c).unwrap();
        prop_assert_eq!(lhs.partition, ba.partition.tensor(&dc.partition).unwrap());
        prop_assert_eq!(lhs.loops, ba.loops + dc.loops);
    }

    #[test]
    fn rotations_invert(x in colored(4)) {
        if x.upper() > 0 {
            prop_assert_eq!(x.rotate(Corner::UpperLeftDown).unwrap().rotate(Corner::LowerLeftUp).unwrap(), x.clone());
            prop_assert_eq!(x.rotate(Corner::UpperRightDown).unwrap().rotate(Corner::LowerRightUp).unwrap(), x.clone());
        }
        prop_assert_eq!(x.to_one_line().from_one_line(x.upper()).unwrap(), x);
    }

    #[test]
    fn decomposition_recomposes(x in colored(4)) {
        let Decomposition { q, r, s } = through_block_decomposition(&x);
        prop_assert_eq!(through_block_decomposition(&x).recompose().unwrap(), x.clone());
        prop_assert_eq!(r.through_count(), x.through_count());
        prop_assert_eq!(s.lower(), x.through_count());
        prop_assert_eq!(q.lower(), x.through_count());
    }

    #[test]
    fn stats_add_up(x in partition(5, 5)) {
        let s = x.stats();
        prop_assert_eq!(s.blocks, s.through + s.non_through);
        prop_assert_eq!(s.blocks, x.block_count());
    }

    #[test]
    fn projective_from_building_is_dominated_by_identity(x in partition(4, 4)) {
        let s = through_block_decomposition(&x).s;
        let proj = s.involution().compose(&s).unwrap().partition;
        prop_assert!(proj.is_projective());
        prop_assert!(dominates(&Partition::identity(x.upper()), &proj).unwrap());
        prop_assert_eq!(proj.stats().non_through % 2, 0);
    }
}

#[test]
fn categories_are_closed_under_operations() {
    let limits = Limits::default();
    for b in [Builtin::Nc, Builtin::Nc2, Builtin::Ncb, Builtin::NcEven, Builtin::P2] {
        let c = Category::from(b);
        let ms: Vec<Partition> = (0..=2).flat_map(|k| (0..=2).map(move |l| (k, l)))
            .flat_map(|(k, l)| c.enumerate(k, l, &limits).unwrap())
            .collect();
        for x in &ms {
            assert!(c.has(&x.involution()).unwrap());
            if x.upper() > 0 {
                assert!(c.has(&x.rotate(Corner::UpperLeftDown).unwrap()).unwrap());
            }
            for y in &ms {
                assert!(c.has(&x.tensor(y).unwrap()).unwrap(), "{} {x} ⊗ {y}", b.id());
                if x.upper() == y.lower() {
                    assert!(c.has(&x.compose(y).unwrap().partition).unwrap(), "{} {x} ∘ {y}", b.id());
                }
            }
        }
    }
}

#[test]
fn noncrossing_categories_contain_no_crossing() {
    let limits = Limits::default();
    for b in [Builtin::Nc, Builtin::Nc2, Builtin::Ncb, Builtin::NcEven] {
        let c = Category::from(b);
        assert!(!c.has(&Partition::crossing()).unwrap());
        for x in c.enumerate(2, 3, &limits).unwrap() {
            assert!(x.is_noncrossing());
        }
    }
    assert!(Category::from(Builtin::P).has(&p("ab:ba")).unwrap());
}

#[test]
fn counts_match_known_sequences() {
    let limits = Limits::default();
    // Catalan numbers for NC and Fuss-Catalan for NC2
    let nc: Vec<usize> = (0..=4).map(|k| Category::from(Builtin::Nc).enumerate(k, k, &limits).unwrap().len()).collect();
    assert_eq!(nc, [1, 2, 14, 132, 1430]);
    let nc2: Vec<usize> = (0..=4).map(|k| Category::from(Builtin::Nc2).enumerate(k, k, &limits).unwrap().len()).collect();
    assert_eq!(nc2, [1, 1, 2, 5, 14]);
    let bell: Vec<usize> = (0..=4).map(|n| set_partitions(n, n).count()).collect();
    assert_eq!(bell, [1, 2, 15, 203, 4140]);
}
