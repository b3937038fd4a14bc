use proptest::prelude::*;
use wfu_core::{Relation, RowWord, TriGraph};

fn relations(count: usize) -> impl Strategy<Value = Vec<Relation<u8>>> {
    (1usize..=7).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(any::<u8>(), n), count).prop_map(move |rs| {
            rs.into_iter()
                .map(|rows| {
                    let masked: Vec<u8> = rows.iter().map(|r| r & u8::low_mask(n)).collect();
                    Relation::from_rows(&masked).unwrap()
                })
                .collect()
        })
    })
}

/// Closure by iterated squaring, counting rounds until nothing changes.
fn squaring_fixpoint(r: &Relation<u8>) -> (Relation<u8>, usize) {
    let mut cur = r.clone();
    let mut rounds = 0;
    loop {
        let next = cur.union(&cur.compose(&cur).unwrap()).unwrap();
        if next == cur {
            return (cur, rounds);
        }
        cur = next;
        rounds += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn composition_is_associative(rs in relations(3)) {
        let (r, s, t) = (&rs[0], &rs[1], &rs[2]);
        prop_assert_eq!(
            r.compose(s).unwrap().compose(t).unwrap(),
            r.compose(&s.compose(t).unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_distributes_over_union(rs in relations(3)) {
        let (r, s, t) = (&rs[0], &rs[1], &rs[2]);
        prop_assert_eq!(
            r.compose(&s.union(t).unwrap()).unwrap(),
            r.compose(s).unwrap().union(&r.compose(t).unwrap()).unwrap()
        );
    }

    #[test]
    fn identity_is_neutral(rs in relations(1)) {
        let r = &rs[0];
        let id = Relation::identity(r.n()).unwrap();
        prop_assert_eq!(&id.compose(r).unwrap(), r);
        prop_assert_eq!(&r.compose(&id).unwrap(), r);
    }

    #[test]
    fn closure_laws(rs in relations(1)) {
        let r = &rs[0];
        let plus = r.closure(false);
        let star = r.closure(true);
        prop_assert!(r.is_subset(&plus).unwrap());
        prop_assert!(plus.is_transitive());
        prop_assert_eq!(&plus.closure(false), &plus);
        prop_assert_eq!(&star.closure(true), &star);
        let id = Relation::identity(r.n()).unwrap();
        prop_assert!(id.is_subset(&star).unwrap());
        prop_assert_eq!(&star, &plus.union(&id).unwrap());
        // R+ = R R*
        prop_assert_eq!(&plus, &r.compose(&star).unwrap());
    }

    #[test]
    fn squaring_stabilizes_within_n_rounds(rs in relations(1)) {
        let r = &rs[0];
        let (fix, rounds) = squaring_fixpoint(r);
        prop_assert!(rounds <= r.n());
        prop_assert_eq!(fix, r.closure(false));
    }

    #[test]
    fn well_founded_iff_no_cycle(rs in relations(1)) {
        let r = &rs[0];
        let plus = r.closure(false);
        let reflexive_somewhere = (0..r.n()).any(|x| plus.contains(x, x));
        prop_assert_eq!(r.is_well_founded(), !reflexive_somewhere);
        prop_assert_eq!(r.is_well_founded(), r.find_cycle().is_none());
    }

    #[test]
    fn found_cycle_is_a_shortest_simple_cycle(rs in relations(1)) {
        let r = &rs[0];
        if let Some(cycle) = r.find_cycle() {
            let len = cycle.len();
            for i in 0..len {
                prop_assert!(r.contains(cycle[i], cycle[(i + 1) % len]));
            }
            let mut distinct = cycle.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(distinct.len(), len);
            prop_assert_eq!(cycle[0], *cycle.iter().min().unwrap());
            let girth = (0..r.n())
                .filter_map(|x| r.shortest_path_plus(x, x).map(|p| p.len() - 1))
                .min()
                .unwrap();
            prop_assert_eq!(len, girth);
        }
    }

    #[test]
    fn shortest_path_steps_are_edges(rs in relations(1), from in 0usize..7, to in 0usize..7) {
        let r = &rs[0];
        prop_assume!(from < r.n() && to < r.n());
        let plus = r.closure(false);
        match r.shortest_path_plus(from, to) {
            Some(path) => {
                prop_assert!(plus.contains(from, to));
                prop_assert_eq!(path[0], from);
                prop_assert_eq!(*path.last().unwrap(), to);
                prop_assert!(path.windows(2).all(|w| r.contains(w[0], w[1])));
                prop_assert!(path.len() - 1 <= r.n());
            }
            None => prop_assert!(!plus.contains(from, to)),
        }
    }

    #[test]
    fn immortal_nodes_reach_cycles(rs in relations(1)) {
        let r = &rs[0];
        let plus = r.closure(false);
        let star = r.closure(true);
        let mask = r.immortal_mask();
        for x in 0..r.n() {
            let reaches_cycle = (0..r.n()).any(|y| star.contains(x, y) && plus.contains(y, y));
            prop_assert_eq!(mask.has(x), reaches_cycle);
        }
    }

    #[test]
    fn transpose_and_widening_round_trip(rs in relations(2)) {
        let (r, s) = (&rs[0], &rs[1]);
        prop_assert_eq!(&r.transpose().transpose(), r);
        // (RS)^T = S^T R^T
        prop_assert_eq!(
            r.compose(s).unwrap().transpose(),
            s.transpose().compose(&r.transpose()).unwrap()
        );
        let wide: Relation<u64> = r.convert().unwrap();
        prop_assert_eq!(wide.pairs().collect::<Vec<_>>(), r.pairs().collect::<Vec<_>>());
        prop_assert_eq!(&wide.convert::<u8>().unwrap(), r);
    }

    #[test]
    fn union_well_founded_iff_no_immortal_node(rs in relations(3)) {
        let g = TriGraph::new(rs[0].clone(), rs[1].clone(), rs[2].clone()).unwrap();
        prop_assert_eq!(g.union_well_founded(), g.immortal_nodes().is_empty());
        prop_assert_eq!(g.union_well_founded(), g.union().find_cycle().is_none());
    }
}

#[test]
fn dimension_mismatch_is_an_error() {
    let a = Relation::<u8>::empty(2).unwrap();
    let b = Relation::<u8>::empty(3).unwrap();
    assert!(a.compose(&b).is_err());
    assert!(a.union(&b).is_err());
    assert!(a.is_subset(&b).is_err());
}

#[test]
fn carrier_cap_follows_row_word() {
    assert!(Relation::<u8>::empty(8).is_ok());
    assert!(Relation::<u8>::empty(9).is_err());
    assert!(Relation::<u64>::empty(64).is_ok());
    assert!(Relation::<u64>::empty(65).is_err());
    let r = Relation::<u16>::from_pairs(12, [(11, 0)]).unwrap();
    assert!(r.convert::<u8>().is_err());
}
