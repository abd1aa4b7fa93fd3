use std::sync::Arc;

use proptest::prelude::*;

use brauerbox::ffla::{FpMatrix, PrimeField};
use brauerbox::modrep::{chop, perm_rep};
use brauerbox::permgrp::{Perm, PermAction, PermGroup};

fn field() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|p| PrimeField::new(p).unwrap())
}

fn matrix(n: usize) -> impl Strategy<Value = (PrimeField, FpMatrix)> {
    (field(), prop::collection::vec(0i64..7, n * n))
        .prop_map(move |(f, d)| (f, FpMatrix::from_vec(f, n, n, d).unwrap()))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity((_, a) in (1usize..7).prop_flat_map(matrix)) {
        prop_assert_eq!(a.rank() + a.nullspace().rows(), a.cols());
        prop_assert!((&a * &a.nullspace().transpose()).is_zero());
    }

    #[test]
    fn inverse_when_invertible((_, a) in (1usize..6).prop_flat_map(matrix)) {
        match a.inverse() {
            Ok(b) => prop_assert!((&a * &b).is_identity()),
            Err(_) => prop_assert_eq!(a.det().unwrap(), 0),
        }
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn perm_inverse_and_order(g in perm(7), h in perm(7)) {
        prop_assert!(g.mul(&g.inv()).is_identity());
        prop_assert_eq!(g.mul(&h).inv(), h.inv().mul(&g.inv()));
    }

    #[test]
    fn orbit_stabilizer(g in perm(6), h in perm(6)) {
        let grp = PermGroup::new(6, vec![g, h]).unwrap();
        let orbit = grp.orbit(0);
        let stab = grp.stabilizer(&[0]).unwrap();
        prop_assert_eq!(orbit.len() as u128 * stab.order(), grp.order());
    }

    #[test]
    fn chop_conserves_dimension(g in perm(5), h in perm(5), seed in 0u64..1000) {
        let grp = Arc::new(PermGroup::new(5, vec![g, h]).unwrap());
        let v = perm_rep(&PermAction::natural(grp), PrimeField::new(3).unwrap());
        let c = chop(&v, seed).unwrap();
        prop_assert_eq!(c.total_dim(), 5);
        prop_assert!(c.same_as(&chop(&v, seed + 1).unwrap()).unwrap());
    }
}
