mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rolecol::cograph::build_cotree;
use rolecol::role::{role_graph, role_graph_bounds_ok, validate, RoleColouring};
use rolecol::sat::{planar_tovey_transform, tovey_transform, tovey_transform_with_origin, CnfFormula};
use rolecol::{io, oracle, Graph};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges: Vec<(usize, usize)> = all.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn small_formula() -> impl Strategy<Value = CnfFormula> {
    (1usize..=4).prop_flat_map(|vars| {
        let lit = (1..=vars as i64, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        proptest::collection::vec(proptest::collection::vec(lit, 1..=3), 1..=8).prop_map(move |clauses| {
            let clauses = clauses
                .into_iter()
                .map(|mut c| {
                    c.sort_by_key(|l| l.unsigned_abs());
                    c.dedup_by_key(|l| l.unsigned_abs());
                    c
                })
                .collect();
            CnfFormula::new(vars, clauses).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_order_does_not_matter(g in small_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| if seed % 2 == 0 { (v, u) } else { (u, v) }).collect();
        edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut doubled = edges.clone();
        doubled.extend(edges.iter().copied());
        prop_assert_eq!(Graph::new(g.n(), &edges).unwrap(), g.clone());
        prop_assert_eq!(Graph::new(g.n(), &doubled).unwrap(), g);
    }

    #[test]
    fn validity_survives_colour_renaming(g in small_graph(), k_seed in any::<usize>(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let k = 1 + k_seed % g.n();
        if let Some(rc) = oracle::solve_exact(&g, k).unwrap() {
            let mut perm: Vec<usize> = (1..=k).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let renamed = RoleColouring::new(k, rc.colours.iter().map(|&c| perm[c - 1]).collect()).unwrap();
            prop_assert!(validate(&g, &renamed).unwrap());
            prop_assert!(role_graph_bounds_ok(&g, &role_graph(&g, &renamed).unwrap()));
        }
    }

    #[test]
    fn graph_text_round_trip(g in small_graph()) {
        prop_assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn cnf_text_round_trip(phi in small_formula()) {
        prop_assert_eq!(io::parse_cnf(&io::write_cnf(&phi)).unwrap(), phi);
    }

    #[test]
    fn cotree_evaluates_back(g in small_graph()) {
        if let Some(t) = build_cotree(&g) {
            prop_assert!(t.is_canonical());
            prop_assert_eq!(t.to_graph(g.n()).unwrap(), g);
        } else {
            prop_assert!(g.has_induced_p4());
        }
    }

    #[test]
    fn occurrence_splitting_is_equisatisfiable(phi in small_formula()) {
        let out = tovey_transform_with_origin(&phi);
        prop_assert!(out.formula.occurrences().iter().all(|&(p, n)| p + n <= 3));
        let before = phi.solve_by_truth_table().unwrap();
        let after = out.formula.solve_by_truth_table().unwrap();
        prop_assert_eq!(before.is_some(), after.is_some());
        if let Some(a) = after {
            prop_assert!(phi.satisfied_by(&out.project(&a, phi.num_vars)));
        }
        let planar = planar_tovey_transform(&phi, None).unwrap();
        prop_assert_eq!(planar.formula.solve_by_truth_table().unwrap().is_some(), before.is_some());
    }
}

#[test]
fn padded_contradiction_stays_unsatisfiable() {
    // x1 five times positively next to a lone negation
    let phi = CnfFormula::new(2, vec![vec![1], vec![-1], vec![1, 2], vec![1, -2], vec![1, 2], vec![1]]).unwrap();
    let out = tovey_transform(&phi);
    assert!(out.num_vars > phi.num_vars);
    assert_eq!(phi.solve_by_truth_table().unwrap(), None);
    assert_eq!(out.solve_by_truth_table().unwrap(), None);
}

#[test]
fn random_cotrees_are_recognised() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=25 {
        let mut leaves: Vec<usize> = (0..n).collect();
        let t = common::random_cotree(&mut rng, &mut leaves, n % 2 == 0);
        let g = t.to_graph(n).unwrap();
        let rebuilt = build_cotree(&g).unwrap();
        assert_eq!(common::cotree_code(&rebuilt), common::cotree_code(&t));
    }
}
