use std::time::Duration;

use berge_forge_core::bounds::{BaseSource, Quantity};
use berge_forge_core::detect::ForbiddenSpec;
use berge_forge_core::search::{
    oracle_solve, solve, solve_with, Budget, Extremal, Objective, SearchConfig, SearchProblem, Universe,
};
use berge_forge_core::{Error, Graph};

fn problem(universe: Universe, spec: ForbiddenSpec, objective: Objective) -> SearchProblem {
    SearchProblem::new(universe, vec![spec], objective)
}

fn graph(n: usize, spec: ForbiddenSpec) -> SearchProblem {
    problem(Universe::Graph { n }, spec, Objective::Edges)
}

fn solved(p: &SearchProblem) -> u64 {
    let r = solve(p).unwrap();
    assert!(r.optimal);
    r.verify(p).unwrap();
    r.value
}

#[test]
fn worked_examples() {
    assert_eq!(solved(&graph(5, ForbiddenSpec::cycle(4))), 6);

    let girth = graph(5, ForbiddenSpec::cycles_up_to(4));
    let r = solve(&girth).unwrap();
    assert_eq!(r.value, 5);
    assert_eq!(r.witness.as_graph().unwrap().edges().count(), 5);
    assert!(berge_forge_core::detect::find_cycle(&r.witness.as_graph().unwrap(), 5).unwrap().is_some());

    let tri = problem(Universe::Graph { n: 5 }, ForbiddenSpec::cycle(5), Objective::Triangles);
    let r = solve(&tri).unwrap();
    assert_eq!(r.value, 4);
    assert_eq!(oracle_solve(&tri).unwrap().value, 4);
    let w = r.witness.as_graph().unwrap();
    assert!((0..5).any(|skip| {
        let rest: Vec<usize> = (0..5).filter(|&v| v != skip).collect();
        rest.iter().all(|&a| rest.iter().all(|&b| a == b || w.has_edge(a, b)))
    }));

    let bip = problem(Universe::Bipartite { m: 3, n: 3 }, ForbiddenSpec::cycle(4), Objective::Edges);
    let r = solve(&bip).unwrap();
    assert_eq!(r.value, 6);
    let Extremal::Bipartite(b) = &r.witness else { panic!("bipartite witness expected") };
    let g = b.to_graph();
    assert!((0..6).all(|v| g.degree(v) == 2));
    assert_eq!(berge_forge_core::detect::count_cycles(&g, 6).unwrap(), 1);

    let berge = problem(Universe::Triples { n: 4 }, ForbiddenSpec::berge(3), Objective::Edges);
    assert_eq!(solved(&berge), oracle_solve(&berge).unwrap().value);
}

#[test]
fn trivial_oracle_cases() {
    assert_eq!(oracle_solve(&graph(0, ForbiddenSpec::cycle(3))).unwrap().value, 0);
    assert_eq!(oracle_solve(&graph(3, ForbiddenSpec::cycle(3))).unwrap().value, 2);
    assert_eq!(solved(&graph(0, ForbiddenSpec::cycle(3))), 0);
    assert!(matches!(oracle_solve(&graph(8, ForbiddenSpec::cycle(3))), Err(Error::UniverseTooLarge(_))));
}

fn grid() -> Vec<SearchProblem> {
    let graph_specs = [
        ForbiddenSpec::cycle(3),
        ForbiddenSpec::cycle(4),
        ForbiddenSpec::cycle(5),
        ForbiddenSpec::cycles_up_to(4),
        ForbiddenSpec::path(4),
        ForbiddenSpec::theta_at_least(4),
    ];
    let mut out = Vec::new();
    for n in 0..=6 {
        for s in graph_specs {
            out.push(graph(n, s));
        }
        out.push(problem(Universe::Graph { n }, ForbiddenSpec::cycle(5), Objective::Triangles));
        out.push(problem(Universe::Graph { n }, ForbiddenSpec::cycle(4), Objective::Triangles));
    }
    for m in 1..=3 {
        for n in 1..=4 {
            for s in graph_specs {
                out.push(problem(Universe::Bipartite { m, n }, s, Objective::Edges));
            }
        }
    }
    for n in 3..=5 {
        for s in [ForbiddenSpec::berge(3), ForbiddenSpec::berge(4)] {
            out.push(problem(Universe::Triples { n }, s, Objective::Edges));
        }
        out.push(problem(Universe::Triples { n }, ForbiddenSpec::berge(5), Objective::Edges).linear(true));
        out.push(problem(Universe::Triples { n }, ForbiddenSpec::berge_up_to(4), Objective::Edges));
    }
    out
}

#[test]
fn solve_matches_oracle_on_grid() {
    for p in grid() {
        let fast = solve(&p).unwrap();
        let slow = oracle_solve(&p).unwrap();
        assert!(fast.optimal);
        fast.verify(&p).unwrap();
        slow.verify(&p).unwrap();
        assert_eq!(fast.value, slow.value, "{p:?}");
    }
}

#[test]
fn symmetry_depth_does_not_change_values() {
    for p in grid().into_iter().step_by(3) {
        let plain = solve_with(&p, &SearchConfig { symmetry_depth: Some(0), ..Default::default() }).unwrap();
        let shallow = solve_with(&p, &SearchConfig { symmetry_depth: Some(2), ..Default::default() }).unwrap();
        let deep = solve(&p).unwrap();
        assert_eq!(plain.value, deep.value, "{p:?}");
        assert_eq!(shallow.value, deep.value, "{p:?}");
        assert!(deep.nodes_explored <= plain.nodes_explored);
    }
}

#[test]
fn deterministic_across_runs_and_threads() {
    let cases = [
        graph(7, ForbiddenSpec::cycle(4)),
        problem(Universe::Graph { n: 7 }, ForbiddenSpec::cycle(5), Objective::Triangles),
        problem(Universe::Triples { n: 6 }, ForbiddenSpec::berge(4), Objective::Edges),
        problem(Universe::Triples { n: 7 }, ForbiddenSpec::berge(5), Objective::Edges).linear(true),
    ];
    for p in cases {
        let a = solve(&p).unwrap();
        let b = solve(&p).unwrap();
        assert_eq!((a.value, &a.witness, a.nodes_explored), (b.value, &b.witness, b.nodes_explored));
        for threads in [2, 4] {
            for split_depth in [0, 3, 8] {
                let config = SearchConfig { threads, split_depth, ..Default::default() };
                let c = solve_with(&p, &config).unwrap();
                assert_eq!((c.value, c.optimal, &c.witness), (a.value, a.optimal, &a.witness), "{p:?} {config:?}");
            }
        }
    }
}

#[test]
fn budget_exhaustion_is_soft() {
    let p = graph(9, ForbiddenSpec::cycle(4)).with_budget(Budget { max_nodes: Some(500), max_time: None });
    let r = solve(&p).unwrap();
    assert!(!r.optimal);
    assert_eq!(r.nodes_explored, 500);
    r.verify(&p).unwrap();
    assert!(r.value > 0 && r.value <= 13);
}

#[cfg(feature = "std")]
#[test]
fn time_budget() {
    let p = graph(10, ForbiddenSpec::cycle(5)).with_budget(Budget { max_nodes: None, max_time: Some(Duration::from_millis(20)) });
    let r = solve(&p).unwrap();
    r.verify(&p).unwrap();
    assert!(r.wall_time.unwrap() < Duration::from_secs(5));
}

#[test]
fn limits_are_enforced() {
    assert!(matches!(solve(&graph(11, ForbiddenSpec::cycle(4))), Err(Error::UniverseTooLarge(_))));
    let p = problem(Universe::Triples { n: 9 }, ForbiddenSpec::berge(3), Objective::Edges);
    assert!(matches!(solve(&p), Err(Error::UniverseTooLarge(_))));
    let zero = SearchConfig { threads: 0, ..Default::default() };
    assert!(solve_with(&graph(4, ForbiddenSpec::cycle(4)), &zero).is_err());
}

#[test]
fn values_grow_with_the_universe() {
    for spec in [ForbiddenSpec::cycle(4), ForbiddenSpec::cycles_up_to(5), ForbiddenSpec::path(5), ForbiddenSpec::theta_at_least(5)] {
        let values: Vec<u64> = (0..=8).map(|n| solved(&graph(n, spec))).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{spec}: {values:?}");
    }
    for spec in [ForbiddenSpec::berge(3), ForbiddenSpec::berge(5)] {
        let values: Vec<u64> = (3..=7).map(|n| solved(&problem(Universe::Triples { n }, spec, Objective::Edges))).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{spec}: {values:?}");
    }
}

#[test]
fn known_small_extremal_numbers() {
    let c4: Vec<u64> = (1..=10).map(|n| solved(&graph(n, ForbiddenSpec::cycle(4)))).collect();
    assert_eq!(c4, [0, 1, 3, 4, 6, 7, 9, 11, 13, 16]);
    let c3: Vec<u64> = (1..=8).map(|n| solved(&graph(n, ForbiddenSpec::cycle(3)))).collect();
    assert_eq!(c3, [0, 1, 2, 4, 6, 9, 12, 16]);
    // stars for P4, two disjoint K4 for P5
    assert_eq!(solved(&graph(8, ForbiddenSpec::path(4))), 7);
    assert_eq!(solved(&graph(8, ForbiddenSpec::path(5))), 12);
}

#[test]
fn optimal_results_feed_bounds() {
    let p = graph(5, ForbiddenSpec::cycle(4));
    let r = solve(&p).unwrap();
    let base = r.as_base(&p).unwrap();
    assert_eq!(base.quantity, Quantity::ExCycle { n: 5, len: 4 });
    assert_eq!(base.source, BaseSource::Exact(6));
    let cut = solve(&p.clone().with_budget(Budget { max_nodes: Some(3), max_time: None })).unwrap();
    assert!(cut.as_base(&p).is_none());
}

#[test]
fn witnesses_are_canonical_objects() {
    let r = solve(&graph(6, ForbiddenSpec::cycle(3))).unwrap();
    assert_eq!(r.value, 9);
    let w = r.witness.as_graph().unwrap();
    assert_eq!(w.triangle_count(), 0);
    assert_eq!(Graph::from_edges(6, w.edges()).unwrap(), w);
}
