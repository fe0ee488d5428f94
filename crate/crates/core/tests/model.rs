mod common;

use common::{dense_rank, p, random_partition};
use num_rational::BigRational;
use particat::categories::Builtin;
use particat::linalg::RatMatrix;
use particat::model::{
    check_functor, class_projection, independent, projection_p, psi_check, t_map, t_rank,
};
use particat::partition::set_partitions;
use particat::{Category, Limits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn sparse_rank_agrees_with_dense_elimination() {
    let limits = Limits::default();
    for k in 0..=3 {
        for l in 0..=3 {
            for x in set_partitions(k, l) {
                let m = t_map(&x, 2, &limits).unwrap().matrix;
                assert_eq!(t_rank(&x, 2, &limits).unwrap(), dense_rank(&m), "{x}");
            }
        }
    }
}

#[test]
fn maps_are_injective_at_n2() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs = 0;
    while pairs < 200 {
        let (k, l) = (rand::Rng::gen_range(&mut rng, 0..=3), rand::Rng::gen_range(&mut rng, 0..=3));
        let a = random_partition(&mut rng, k, l);
        let b = random_partition(&mut rng, k, l);
        if a == b {
            continue;
        }
        pairs += 1;
        assert_ne!(t_map(&a, 2, &limits).unwrap().matrix, t_map(&b, 2, &limits).unwrap().matrix, "{a} {b}");
    }
}

#[test]
fn projection_rule_for_projective_example() {
    let limits = Limits::default();
    let x = p("abba:acca");
    assert!(x.is_projective());
    let r = check_functor(&x, &x, 3, &limits).unwrap();
    assert_eq!(r.projection, Some(true));
    assert!(r.all_hold());
}

#[test]
fn projections_kill_lower_through_counts() {
    // P_p T_q P_p = 0 whenever t(p q p) < t(p)
    let limits = Limits::default();
    let nc = Category::from(Builtin::Nc);
    for x in nc.projectives(2, &limits).unwrap() {
        let pp = projection_p(&nc, &x, 4, &limits).unwrap().matrix;
        for q in nc.enumerate(2, 2, &limits).unwrap() {
            let pqp = x.compose(&q.compose(&x).unwrap().partition).unwrap().partition;
            if pqp.through_count() < x.through_count() {
                let tq = t_map(&q, 4, &limits).unwrap().matrix.to_rational();
                assert!(pp.mul(&tq).unwrap().mul(&pp).unwrap().is_zero(), "{x} {q}");
            }
        }
    }
}

#[test]
fn t_splits_into_orthogonal_parts() {
    let limits = Limits::default();
    for b in [Builtin::Nc, Builtin::P] {
        let c = Category::from(b);
        for x in c.projectives(2, &limits).unwrap() {
            let pr = projection_p(&c, &x, 3, &limits).unwrap();
            let m = &pr.matrix;
            assert_eq!(m.mul(m).unwrap(), *m);
            assert_eq!(m.transpose(), *m);
            // R_p = T_p - P_p is a projection orthogonal to P_p
            let beta = x.stats().non_through as u32;
            let scale = BigRational::new(1.into(), num_bigint::BigInt::from(3).pow(beta / 2));
            let t = t_map(&x, 3, &limits).unwrap().matrix.to_rational().scale(&scale);
            let r = t.sub(m).unwrap();
            assert_eq!(r.mul(&r).unwrap(), r);
            assert!(r.mul(m).unwrap().is_zero());
        }
    }
}

#[test]
fn class_decomposition_of_symmetric_group() {
    // S_3 on (ℂ^3)^{⊗2}: classes t = 0, 1, 2; sum of ranks 9
    let limits = Limits::default();
    let cp = class_projection(&Builtin::P.into(), 2, 3, &limits).unwrap();
    assert_eq!(cp.total_rank, 9);
    assert!(cp.orthogonal && cp.complete);
}

#[test]
fn psi_is_multiplicative_in_several_categories() {
    let limits = Limits::default();
    let half = Category::generated(&[particat::Partition::half_liberating()], 6, &limits).unwrap();
    for (c, n) in [(Category::from(Builtin::P), 5), (Category::from(Builtin::P2), 4), (half, 4)] {
        for k in 1..=2 {
            for x in c.projectives(k, &limits).unwrap() {
                if x.through_count() == 0 {
                    continue;
                }
                let r = psi_check(&c, &x, n, &limits).unwrap();
                assert!(r.multiplicative && r.unital, "{c} {x}");
                assert!(r.aut_dim <= r.sym_order, "{c} {x}");
            }
        }
    }
}

#[test]
fn independence_examples() {
    let limits = Limits::default();
    assert!(!independent(&Builtin::Nc2.into(), 2, 4, &limits).unwrap().dependent);
    assert!(!independent(&Builtin::P.into(), 1, 2, &limits).unwrap().dependent);
    assert!(independent(&Builtin::Nc.into(), 3, 3, &limits).unwrap().dependent);
}

#[test]
fn identity_matrix_for_a_strand() {
    let limits = Limits::default();
    let m = t_map(&particat::Partition::identity(1), 3, &limits).unwrap().matrix.to_rational();
    assert_eq!(m, RatMatrix::identity(3));
}
