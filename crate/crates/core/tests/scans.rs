use wfu_core::search::{
    clique_scan, compare_criteria, counterexample_search, extraction_scan, find_counterexample,
    is_counterexample, soundness_scan, ScanConfig, ScanReport,
};
use wfu_core::{evaluate_criterion, fixtures, CriterionId, TriGraph};

const SOUND: [CriterionId; 6] = [
    CriterionId::Ramsey,
    CriterionId::ThreeOfNine,
    CriterionId::Tripartite,
    CriterionId::JumpingAb,
    CriterionId::JumpingV1,
    CriterionId::JumpingV2,
];

fn revalidate(g: &TriGraph<u8>, id: CriterionId) {
    let r = evaluate_criterion(g, id).unwrap();
    assert!(r.holds, "{id} fails on {g:?}");
    assert_eq!(r.colors_wf, [true; 3]);
    assert!(!r.union_wf);
}

#[test]
fn sound_criteria_have_no_three_node_counterexample() {
    for id in SOUND {
        let r = soundness_scan::<u8>(&ScanConfig::exhaustive(3), id).unwrap();
        assert!(r.counterexamples.is_empty(), "{id}");
        assert!(r.expectation_met());
        let expected = if id.requires_empty_c() {
            1 << 12
        } else {
            1 << 18
        };
        assert_eq!(r.graphs_examined, expected);
    }
}

#[test]
fn sampled_soundness_at_four_and_five_nodes() {
    for id in SOUND {
        for n in [4, 5] {
            let r = soundness_scan::<u8>(&ScanConfig::sampled(n, 20_000, 7), id).unwrap();
            assert!(r.counterexamples.is_empty(), "{id} at {n}");
            assert_eq!(r.graphs_examined, 20_000);
            assert!(r.generator.is_some());
        }
    }
}

#[test]
fn first_counterexamples_in_canonical_order() {
    // positions found independently by brute force: 1 + 64 graphs at one
    // and two nodes, then the canonical index at three
    for (id, index) in [(CriterionId::F2, 4512u64), (CriterionId::F3, 4260)] {
        let r = counterexample_search::<u8>(&ScanConfig::exhaustive(3), id).unwrap();
        assert_eq!(r.graphs_examined, 1 + 64 + index + 1, "{id}");
        let g = r.counterexamples[0].to_graph::<u8>().unwrap();
        assert_eq!(g.n(), 3);
        revalidate(&g, id);
        assert_eq!(
            find_counterexample::<u8>(&ScanConfig::exhaustive(3), id).unwrap(),
            Some(g)
        );

        let none = counterexample_search::<u8>(&ScanConfig::exhaustive(2), id).unwrap();
        assert!(none.counterexamples.is_empty() && !none.expectation_met());
    }
}

#[test]
fn f1_needs_four_nodes() {
    assert_eq!(
        find_counterexample::<u8>(&ScanConfig::exhaustive(3), CriterionId::F1).unwrap(),
        None
    );
    let g = find_counterexample::<u8>(&ScanConfig::exhaustive(4), CriterionId::F1)
        .unwrap()
        .expect("a four-node counterexample");
    assert_eq!(g.n(), 4);
    revalidate(&g, CriterionId::F1);
    revalidate(&fixtures::multicolored_loops(), CriterionId::F1);
}

#[test]
fn fixtures_are_counterexamples_to_their_hypothesis_only() {
    let cases = [
        (fixtures::multicolored_loops::<u8>(), CriterionId::F1),
        (fixtures::double_loop(), CriterionId::F2),
        (fixtures::putative(), CriterionId::F3),
    ];
    for (g, own) in cases {
        for id in CriterionId::ALL
            .into_iter()
            .filter(|id| !id.requires_empty_c())
        {
            assert_eq!(is_counterexample(&g, id.criterion()), id == own, "{id}");
        }
    }
}

#[test]
fn sampling_finds_counterexamples_too() {
    let r =
        counterexample_search::<u8>(&ScanConfig::sampled(3, 100_000, 1), CriterionId::F3).unwrap();
    assert_eq!(r.counterexamples.len(), 1);
    revalidate(&r.counterexamples[0].to_graph().unwrap(), CriterionId::F3);
    assert!(r.graphs_examined <= 100_000);
}

#[test]
fn implications_over_three_nodes() {
    let cfg = ScanConfig::exhaustive(3);
    let r = compare_criteria::<u8>(&cfg, CriterionId::Ramsey, CriterionId::ThreeOfNine).unwrap();
    let c = r.comparison.unwrap().counts;
    assert_eq!((c.both, c.left_only), (2395, 0));
    let r =
        compare_criteria::<u8>(&cfg, CriterionId::ThreeOfNine, CriterionId::Tripartite).unwrap();
    let c = r.comparison.unwrap().counts;
    assert_eq!((c.both, c.left_only), (3952, 0));
    assert_eq!(c.both + c.left_only + c.right_only + c.neither, 1 << 18);
}

#[test]
fn tripartite_and_jumping_v2_witnesses() {
    let tri_only = TriGraph::<u8>::from_edges(3, &[(0, 2)], &[(1, 2)], &[(0, 1)]).unwrap();
    assert!(CriterionId::Tripartite.criterion().holds_on(&tri_only));
    assert!(!CriterionId::JumpingV2.criterion().holds_on(&tri_only));
    let jump_only =
        TriGraph::<u8>::from_edges(4, &[], &[(0, 3), (1, 2)], &[(0, 1), (3, 2)]).unwrap();
    assert!(CriterionId::JumpingV2.criterion().holds_on(&jump_only));
    assert!(!CriterionId::Tripartite.criterion().holds_on(&jump_only));

    let r = compare_criteria::<u8>(
        &ScanConfig::exhaustive(3),
        CriterionId::Tripartite,
        CriterionId::JumpingV2,
    )
    .unwrap();
    let cmp = r.comparison.unwrap();
    assert_eq!(cmp.counts.right_only, 0);
    let w = cmp.left_only_witness.unwrap().to_graph::<u8>().unwrap();
    assert!(CriterionId::Tripartite.criterion().holds_on(&w));
    assert!(!CriterionId::JumpingV2.criterion().holds_on(&w));

    let r = compare_criteria::<u8>(
        &ScanConfig::sampled(4, 100_000, 42),
        CriterionId::Tripartite,
        CriterionId::JumpingV2,
    )
    .unwrap();
    let w = r
        .comparison
        .unwrap()
        .right_only_witness
        .expect("sampled witness at four nodes");
    let w = w.to_graph::<u8>().unwrap();
    assert!(CriterionId::JumpingV2.criterion().holds_on(&w));
    assert!(!CriterionId::Tripartite.criterion().holds_on(&w));
}

#[test]
fn comparing_a_criterion_with_itself() {
    for id in [CriterionId::F1, CriterionId::Tripartite] {
        let r = compare_criteria::<u8>(&ScanConfig::sampled(4, 5_000, 3), id, id).unwrap();
        let cmp = r.comparison.unwrap();
        assert_eq!(cmp.counts.left_only + cmp.counts.right_only, 0);
        assert!(cmp.left_only_witness.is_none() && cmp.right_only_witness.is_none());
    }
}

fn strip_time(mut r: ScanReport) -> ScanReport {
    r.elapsed_ms = 0;
    r
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let configs = [
        ScanConfig::exhaustive(3),
        ScanConfig::sampled(4, 50_000, 9),
        ScanConfig::sampled(5, 40_000, 9).with_colors_wf(true),
    ];
    for cfg in configs {
        let base = strip_time(
            compare_criteria::<u8>(&cfg, CriterionId::Tripartite, CriterionId::JumpingV1).unwrap(),
        );
        for workers in [1, 2, 3] {
            let again = strip_time(
                compare_criteria::<u8>(
                    &cfg.clone().with_workers(workers),
                    CriterionId::Tripartite,
                    CriterionId::JumpingV1,
                )
                .unwrap(),
            );
            assert_eq!(again, base);
        }
    }
    let a = strip_time(
        counterexample_search::<u8>(&ScanConfig::sampled(3, 60_000, 5), CriterionId::F2).unwrap(),
    );
    let b = strip_time(
        counterexample_search::<u8>(
            &ScanConfig::sampled(3, 60_000, 5).with_workers(4),
            CriterionId::F2,
        )
        .unwrap(),
    );
    assert_eq!(a, b);
}

#[test]
fn seeds_change_samples() {
    let run = |seed| {
        let cfg = ScanConfig::sampled(4, 20_000, seed);
        compare_criteria::<u8>(&cfg, CriterionId::Tripartite, CriterionId::JumpingV2)
            .unwrap()
            .comparison
            .unwrap()
            .counts
    };
    assert_eq!(run(1), run(1));
    assert_ne!(run(1), run(2));
}

#[test]
fn extraction_scan_over_three_nodes() {
    for id in [CriterionId::ThreeOfNine, CriterionId::Tripartite] {
        let r = extraction_scan::<u8>(&ScanConfig::exhaustive(3), id).unwrap();
        assert!(r.applicable > 0);
        assert_eq!(r.confirmed, r.applicable, "{:?}", r.failures.first());
        assert_eq!(r.budget_exhaustions, 0);
    }
    assert!(extraction_scan::<u8>(&ScanConfig::exhaustive(2), CriterionId::F1).is_err());
}

#[test]
fn clique_scan_at_two_nodes() {
    let r = clique_scan::<u8>(2, 0).unwrap();
    // transitive relations on two points, loops allowed
    assert_eq!(r.transitive_relations, 13);
    assert_eq!(r.graphs_examined, 13 * 13 * 13);
    assert!(r.applicable > 0);
    assert_eq!(r.witnessed, r.applicable);
}

#[test]
fn usage_errors() {
    assert!(soundness_scan::<u8>(&ScanConfig::exhaustive(4), CriterionId::Ramsey).is_err());
    assert!(soundness_scan::<u8>(&ScanConfig::sampled(4, 0, 1), CriterionId::Ramsey).is_err());
    assert!(soundness_scan::<u8>(&ScanConfig::exhaustive(3), CriterionId::F3).is_err());
    assert!(soundness_scan::<u8>(&ScanConfig::sampled(9, 10, 1), CriterionId::Ramsey).is_err());
    assert!(counterexample_search::<u8>(&ScanConfig::exhaustive(6), CriterionId::F1).is_err());
}
