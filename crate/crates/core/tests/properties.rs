use proptest::prelude::*;

use cablefloer::algebra::{mul, ColoredModule, ColoredOp, TowerBasisElt};
use cablefloer::gf2::{normalize_row, rank, rank_dense, rank_forest, rank_sparse};
use cablefloer::hfunc::{h_cable, h_colored, h_stab, h_torus, HKnot};
use cablefloer::laurent::{torus_knot_delta, LaurentPoly};

fn knot() -> impl Strategy<Value = HKnot> {
    prop_oneof![
        Just((1, 1)),
        Just((2, 3)),
        Just((2, 5)),
        Just((3, 4)),
        Just((3, 5)),
        Just((2, 7)),
    ]
    .prop_map(|(p, q)| {
        if p == 1 {
            HKnot::unknot()
        } else {
            HKnot::from_delta(&torus_knot_delta(p, q).unwrap()).unwrap()
        }
    })
}

fn tower_elt(n: usize) -> impl Strategy<Value = TowerBasisElt> {
    (0i64..=4, proptest::collection::vec(-6i64..=6, n), 0i64..=3).prop_map(move |(m, s, k)| {
        let parity = (m * (n as i64 - 1)).rem_euclid(2);
        TowerBasisElt::new(m, s.into_iter().map(|x| 2 * x + parity).collect(), k).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (TowerBasisElt, TowerBasisElt, TowerBasisElt)> {
    (1usize..=4).prop_flat_map(|n| (tower_elt(n), tower_elt(n), tower_elt(n)))
}

proptest! {
    #[test]
    fn mul_is_commutative_and_associative((x, y, z) in triple()) {
        let xy = mul(&x, &y).unwrap();
        prop_assert_eq!(&xy, &mul(&y, &x).unwrap());
        prop_assert_eq!(mul(&xy, &z).unwrap(), mul(&x, &mul(&y, &z).unwrap()).unwrap());
    }

    #[test]
    fn mul_adds_gradings((x, y, _) in triple()) {
        let xy = mul(&x, &y).unwrap();
        prop_assert_eq!(xy.grading(), &x.grading() + &y.grading());
    }

    #[test]
    fn h_symmetry(k in knot(), s in -40i64..40) {
        prop_assert_eq!(k.h(-s), k.h(s) + s);
        let step = k.h(s) - k.h(s + 1);
        prop_assert!(step == 0 || step == 1);
    }

    #[test]
    fn cable_h_is_permutation_invariant(k in knot(), m in 0i64..6, s in proptest::collection::vec(-8i64..8, 1..5), seed in any::<u64>()) {
        let n = s.len() as i64;
        let c2 = m * (n - 1);
        let s2: Vec<i64> = s.iter().map(|x| c2 + 2 * x).collect();
        let mut p = s2.clone();
        let len = p.len();
        p.rotate_left((seed as usize) % len);
        if seed & 1 == 1 {
            p.reverse();
        }
        prop_assert_eq!(h_cable(&k, n, m, &s2).unwrap().value, h_cable(&k, n, m, &p).unwrap().value);
    }

    #[test]
    fn unknot_cable_is_torus_link(m in 0i64..6, s in proptest::collection::vec(-8i64..8, 1..5)) {
        let n = s.len() as i64;
        let s2: Vec<i64> = s.iter().map(|x| m * (n - 1) + 2 * x).collect();
        prop_assert_eq!(h_cable(&HKnot::unknot(), n, m, &s2).unwrap().value, h_torus(n, m, &s2).unwrap());
    }

    #[test]
    fn h_stab_decreases_to_colored(k in knot(), s in proptest::collection::vec(-8i64..8, 1..5)) {
        let n = s.len() as i64;
        let min = *s.iter().min().unwrap();
        let stable = (k.genus() - min).max(0);
        let hs: Vec<i64> = (0..=stable + 2).map(|m| h_stab(&k, n, m, &s).unwrap().value).collect();
        prop_assert!(hs.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(hs[stable as usize..].iter().all(|&h| h == h_colored(&k, &s)));
    }

    #[test]
    fn colored_relation_u_equals_a_times_vs(k in knot(), n in 1usize..4, s in proptest::collection::vec(-6i64..6, 3), extra in 0i64..3) {
        let module = ColoredModule::new(k, n);
        let sbar = &s[..n];
        let x = module.element_at(sbar, -2 * module.h(sbar) - 2 * extra).unwrap();
        for i in 1..=n {
            let lhs = module.act(ColoredOp::U(i), &x).unwrap();
            let mut ops: Vec<ColoredOp> = (1..=n).filter(|&j| j != i).map(ColoredOp::V).collect();
            ops.push(ColoredOp::A);
            prop_assert_eq!(lhs, module.act_word(&ops, &x).unwrap());
        }
    }

    #[test]
    fn rank_strategies_agree(mut rows in proptest::collection::vec(proptest::collection::vec(0usize..24, 0..4), 0..30)) {
        rows.iter_mut().for_each(normalize_row);
        let r = rank(&rows, 24);
        prop_assert_eq!(r, rank_dense(&rows, 24));
        prop_assert_eq!(r, rank_sparse(&rows));
        let binomials: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().take(2).copied().collect()).collect();
        // truncated rows stay normalized
        prop_assert_eq!(rank_forest(&binomials, 24), rank_dense(&binomials, 24));
    }

    #[test]
    fn laurent_parse_roundtrip(terms in proptest::collection::vec((-10i64..10, -5i64..5), 0..6)) {
        let p = LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (2 * e, c)));
        let q: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(p, q);
    }
}
