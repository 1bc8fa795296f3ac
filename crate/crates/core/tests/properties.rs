//! Solver properties checked against the brute-force oracles.

use mstcover::cover::{greedy_cover_with, weighted_greedy_cover, witness_trees};
use mstcover::instances::{generate_random, instance_from_str, instance_to_string};
use mstcover::matroid::{matroid_greedy, swap_check, PartitionMatroid};
use mstcover::oracle::{
    all_min_covers, enumerate_msts, enumerate_spanning_trees, exact_min_cover, instance_curvature,
    mask_of, members, FeasibilityChecker, Objective,
};
use mstcover::{
    greedy_cover, is_consistent, is_feasible, kruskal, perfect_cover, progress, total_progress,
    CostModel, Graph, Instance, MstMatroid, Preference, Profile, RankOracle, SolveOptions,
    WeightFunction,
};
use num_rational::Rational64;
use proptest::prelude::*;

fn small_instance() -> impl Strategy<Value = Instance> {
    (3usize..=6, 1usize..=4, 1u64..=3, any::<u64>()).prop_flat_map(|(n, k, max_rank, seed)| {
        (n - 1..=9).prop_map(move |m| generate_random(n, m, k, max_rank, seed).unwrap())
    })
}

fn tree_weight(weights: &[i64], tree: &[usize]) -> i64 {
    tree.iter().map(|&e| weights[e]).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kruskal_is_optimal_for_consistent_weights(
        (n, m, seed) in (2usize..=6).prop_flat_map(|n| (Just(n), n - 1..=9, any::<u64>())),
        raw in proptest::collection::vec(0i64..5, 9),
    ) {
        let graph = generate_random(n, m, 1, 1, seed).unwrap().graph;
        let weights: Vec<i64> = raw[..m].to_vec();
        let pref = Preference::new(weights.iter().map(|&w| w as u64 + 1).collect()).unwrap();
        let wf = WeightFunction::from_integers(weights.iter().copied()).unwrap();
        prop_assert!(is_consistent(&wf, &pref).unwrap());
        let tree = kruskal(&graph, &pref).unwrap();
        let best = enumerate_spanning_trees(&graph)
            .unwrap()
            .iter()
            .map(|t| tree_weight(&weights, t.edge_ids()))
            .min()
            .unwrap();
        prop_assert_eq!(tree_weight(&weights, tree.edge_ids()), best);
        prop_assert_eq!(kruskal(&graph, &pref).unwrap(), tree);
    }

    #[test]
    fn greedy_output_is_a_certified_cover(inst in small_instance()) {
        let (g, p) = (&inst.graph, &inst.profile);
        let sol = greedy_cover(g, p).unwrap();
        let checker = FeasibilityChecker::new(g, p).unwrap();
        prop_assert!(checker.is_feasible(mask_of(&sol.selected)));
        prop_assert_eq!(sol.witnesses.len(), p.len());
        for (pref, w) in p.agents().iter().zip(&sol.witnesses) {
            prop_assert!(enumerate_msts(g, pref).unwrap().contains(w));
            prop_assert!(w.edge_ids().iter().all(|e| sol.selected.contains(e)));
        }
        let gains: Vec<u64> = sol.rounds.iter().map(|r| r.gain).collect();
        prop_assert_eq!(gains.iter().sum::<u64>() as usize, p.len() * g.tree_size());
        prop_assert!(gains.windows(2).all(|w| w[0] >= w[1]));
        for r in &sol.rounds {
            prop_assert_eq!(r.votes.iter().max().copied(), Some(r.gain));
            prop_assert_eq!(r.votes.iter().position(|&v| v == r.gain), Some(r.edge));
        }
    }

    #[test]
    fn parallel_and_unit_weighted_runs_agree(inst in small_instance()) {
        let (g, p) = (&inst.graph, &inst.profile);
        let seq = greedy_cover(g, p).unwrap();
        let par = greedy_cover_with(g, p, SolveOptions { parallel: true }).unwrap();
        let unit = weighted_greedy_cover(g, p, &CostModel::unit(g.edge_count())).unwrap();
        prop_assert_eq!(&seq, &par);
        prop_assert_eq!(&seq, &unit);
    }

    #[test]
    fn total_progress_sums_agents(inst in small_instance(), mask in any::<u32>()) {
        let (g, p) = (&inst.graph, &inst.profile);
        let h = members(mask & ((1 << g.edge_count()) - 1));
        let each: usize = p.agents().iter().map(|a| progress(g, a, &h)).sum();
        prop_assert_eq!(total_progress(g, p, &h), each);
        prop_assert_eq!(
            is_feasible(g, p, &h),
            FeasibilityChecker::new(g, p).unwrap().is_feasible(mask_of(&h))
        );
    }

    #[test]
    fn perfect_cover_trees_are_common_msts(inst in small_instance()) {
        let (g, p) = (&inst.graph, &inst.profile);
        if let Some(tree) = perfect_cover(g, p) {
            for pref in p.agents() {
                prop_assert!(enumerate_msts(g, pref).unwrap().contains(&tree));
            }
            let exact = exact_min_cover(g, p, Objective::Cardinality).unwrap();
            prop_assert_eq!(exact.len(), g.tree_size());
        }
    }

    #[test]
    fn exact_objectives_agree_on_unit_costs(inst in small_instance()) {
        let (g, p) = (&inst.graph, &inst.profile);
        let unit = CostModel::unit(g.edge_count());
        let by_size = exact_min_cover(g, p, Objective::Cardinality).unwrap();
        let by_cost = exact_min_cover(g, p, Objective::Cost(&unit)).unwrap();
        prop_assert_eq!(&by_size, &by_cost);
        let all = all_min_covers(g, p).unwrap();
        prop_assert_eq!(&all[0], &by_size);
        prop_assert!(all.iter().all(|h| h.len() == by_size.len()));
        let witnesses = witness_trees(g, p, &by_size).unwrap();
        for (pref, w) in p.agents().iter().zip(&witnesses) {
            prop_assert!(enumerate_msts(g, pref).unwrap().contains(w));
        }
        prop_assert_eq!(instance_curvature(g, p, &unit).unwrap(), Rational64::from_integer(1));
    }

    #[test]
    fn swap_rule_matches_enumeration(inst in small_instance(), pick in any::<usize>()) {
        let g = &inst.graph;
        let pref = inst.profile.agent(0);
        let msts = enumerate_msts(g, pref).unwrap();
        let tree = &msts.trees[pick % msts.trees.len()];
        let matroid = MstMatroid::new(g, pref).unwrap();
        for e in (0..g.edge_count()).filter(|&e| !tree.contains(e)) {
            let in_some_mst = msts.trees.iter().any(|t| t.contains(e));
            match swap_check(&matroid, e, tree).unwrap() {
                Some(f) => {
                    let mut swapped: Vec<usize> =
                        tree.edge_ids().iter().copied().filter(|&x| x != f).collect();
                    swapped.push(e);
                    swapped.sort_unstable();
                    prop_assert!(msts.trees.iter().any(|t| t.edge_ids() == swapped.as_slice()));
                }
                None => prop_assert!(!in_some_mst),
            }
        }
    }

    #[test]
    fn instance_files_round_trip(inst in small_instance()) {
        let text = instance_to_string(&inst).unwrap();
        let back = instance_from_str(&text).unwrap();
        prop_assert_eq!(instance_to_string(&back).unwrap(), text);
        prop_assert_eq!(back, inst);
    }
}

/// Minimum cost of a set reaching full rank in every oracle, by enumeration.
fn exact_full_rank_cost(oracles: &[&dyn RankOracle], cost: &CostModel) -> Rational64 {
    let m = cost.len();
    let ground: Vec<usize> = (0..m).collect();
    let target: Vec<usize> = oracles.iter().map(|o| o.rank(&ground)).collect();
    (0..1u32 << m)
        .map(members)
        .filter(|s| oracles.iter().zip(&target).all(|(o, &t)| o.rank(s) == t))
        .map(|s| cost.set_cost(&s))
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partition_matroid_greedy_bound(
        blocks_a in proptest::collection::vec(0usize..3, 8),
        blocks_b in proptest::collection::vec(0usize..3, 8),
        caps in proptest::collection::vec(1usize..=2, 6),
        costs in proptest::collection::vec(1i64..=10, 8),
    ) {
        let a = PartitionMatroid::new(blocks_a, caps[..3].to_vec()).unwrap();
        let b = PartitionMatroid::new(blocks_b, caps[3..].to_vec()).unwrap();
        let cost = CostModel::additive_integers(costs).unwrap();
        let oracles: [&dyn RankOracle; 2] = [&a, &b];
        let run = matroid_greedy(&oracles, &cost).unwrap();
        let ground: Vec<usize> = (0..8).collect();
        for o in oracles {
            prop_assert_eq!(o.rank(&run.selected), o.rank(&ground));
        }
        let got = cost.set_cost(&run.selected);
        let best = exact_full_rank_cost(&oracles, &cost);
        prop_assert!(got >= best);
        let (got, best) = (*got.numer() as f64, *best.numer() as f64);
        prop_assert!(got <= (2f64.ln() + 1.0) * best);
    }
}

#[test]
fn single_edge_instances() {
    let graph = Graph::new(2, vec![(0, 1)]).unwrap();
    let profile = Profile::new(vec![Preference::new(vec![3]).unwrap(); 3]).unwrap();
    let unit = CostModel::unit(1);
    assert_eq!(perfect_cover(&graph, &profile).unwrap().edge_ids(), &[0]);
    assert_eq!(greedy_cover(&graph, &profile).unwrap().selected, vec![0]);
    assert_eq!(
        weighted_greedy_cover(&graph, &profile, &unit)
            .unwrap()
            .selected,
        vec![0]
    );
    assert_eq!(
        exact_min_cover(&graph, &profile, Objective::Cardinality).unwrap(),
        vec![0]
    );
    let matroids: Vec<MstMatroid> = profile
        .agents()
        .iter()
        .map(|p| MstMatroid::new(&graph, p).unwrap())
        .collect();
    let oracles: Vec<&dyn RankOracle> = matroids.iter().map(|m| m as &dyn RankOracle).collect();
    assert_eq!(matroid_greedy(&oracles, &unit).unwrap().selected, vec![0]);
}
