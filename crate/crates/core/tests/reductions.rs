//! Structure of set-cover reduction instances, checked exhaustively.

use mstcover::instances::{reduce_set_cover, ReductionLayout, ReductionMode};
use mstcover::oracle::{
    all_min_covers, exact_set_cover, members, subsets_of_size, FeasibilityChecker,
};
use mstcover::SetCoverInput;

/// Every family of `q` distinct non-empty subsets of `0..p` covering `0..p`.
fn inputs(p: usize, q: usize) -> Vec<SetCoverInput> {
    let full = (1u32 << p) - 1;
    subsets_of_size(full as usize, q)
        .map(|pick| {
            members(pick)
                .iter()
                .map(|&i| i as u32 + 1)
                .collect::<Vec<_>>()
        })
        .filter(|family| family.iter().fold(0, |a, s| a | s) == full)
        .map(|family| SetCoverInput::new(p, family.into_iter().map(members).collect()).unwrap())
        .collect()
}

fn tiny_inputs() -> Vec<SetCoverInput> {
    (1..=3)
        .flat_map(|p| (2..=3).flat_map(move |q| inputs(p, q)))
        .collect()
}

#[test]
fn every_feasible_cover_takes_the_spine() {
    for sc in tiny_inputs() {
        let inst = reduce_set_cover(&sc, ReductionMode::SingleCopy).unwrap();
        let layout = ReductionLayout::new(&sc, ReductionMode::SingleCopy).unwrap();
        let checker = FeasibilityChecker::new(&inst.graph, &inst.profile).unwrap();
        let spine: u32 = layout.down_edges().map(|e| 1 << e).sum();
        for mask in 0..1u32 << inst.graph.edge_count() {
            if checker.is_feasible(mask) {
                assert_eq!(mask & spine, spine, "{:?}: {:?}", sc.sets(), members(mask));
            }
        }
    }
}

#[test]
fn optimal_covers_pick_optimal_set_covers_at_every_copy() {
    for sc in tiny_inputs() {
        let optimum = exact_set_cover(sc.universe_size(), sc.sets())
            .unwrap()
            .len();
        for h in 1..=2 {
            let mode = ReductionMode::Amplified { h };
            let layout = ReductionLayout::new(&sc, mode).unwrap();
            let inst = reduce_set_cover(&sc, mode).unwrap();
            for cover in all_min_covers(&inst.graph, &inst.profile).unwrap() {
                assert!(layout.down_edges().all(|e| cover.contains(&e)));
                for copy in 0..layout.copies {
                    let chosen = layout.sets_at(&cover, copy);
                    assert_eq!(chosen.len(), optimum, "{:?} h={h}", sc.sets());
                    let mut covered = vec![false; sc.universe_size()];
                    for &i in &chosen {
                        for &x in &sc.sets()[i] {
                            covered[x] = true;
                        }
                    }
                    assert!(covered.iter().all(|&c| c), "{:?} h={h}", sc.sets());
                }
            }
        }
    }
}

#[test]
fn generated_instances_are_well_formed() {
    for sc in inputs(3, 3) {
        for mode in [ReductionMode::SingleCopy, ReductionMode::Amplified { h: 3 }] {
            let layout = ReductionLayout::new(&sc, mode).unwrap();
            let inst = reduce_set_cover(&sc, mode).unwrap();
            assert_eq!(inst.graph.node_count(), layout.node_count());
            assert_eq!(inst.graph.edge_count(), layout.edge_count());
            assert_eq!(inst.profile.len(), sc.universe_size() + 1);
            assert!(inst.profile.agents().iter().all(|p| p.kappa() <= 2));
        }
    }
}
