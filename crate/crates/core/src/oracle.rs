//! Exhaustive solvers for small instances.
//!
//! Everything here enumerates: spanning trees, edge subsets, or set-cover
//! subfamilies. The checks deliberately avoid the refinement-based progress
//! computation used by the solvers, so they can serve as ground truth for it.
//! Edge subsets are represented as `u32` bitmasks (bit `e` set iff edge `e`
//! is in the set), which bounds every routine here to at most 16 edges.

use num_rational::Rational64;

use crate::cover::CostModel;
use crate::error::{Error, Result};
use crate::graph::{kruskal, DisjointSets, Graph, SpanningTree};
use crate::preferences::{Preference, Profile};

/// Largest edge count accepted by the enumerating routines.
pub const MAX_EDGES: usize = 16;
/// Largest number of sets accepted by [`exact_set_cover`].
pub const MAX_SETS: usize = 16;

pub fn mask_of(ids: &[usize]) -> u32 {
    ids.iter().fold(0, |acc, &e| acc | 1 << e)
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&e| mask >> e & 1 == 1).collect()
}

/// All `size`-element subsets of `0..m` as bitmasks, in increasing numeric order.
pub fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << m;
    let first: u64 = if size == 0 { 0 } else { (1 << size) - 1 };
    let mut next = (size <= m).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next larger integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(cur as u32)
    })
}

/// Every subset of `0..m`, smaller sets first, numeric order within a size.
pub fn subsets_size_major(m: usize) -> impl Iterator<Item = u32> {
    (0..=m).flat_map(move |size| subsets_of_size(m, size))
}

fn guard_edges(graph: &Graph) -> Result<()> {
    if graph.edge_count() > MAX_EDGES {
        return Err(Error::SizeGuard {
            what: "edge count",
            limit: MAX_EDGES,
            found: graph.edge_count(),
        });
    }
    Ok(())
}

/// Enumerates every spanning tree by recursive edge inclusion/exclusion,
/// pruning branches that can no longer connect the graph.
pub fn enumerate_spanning_trees(graph: &Graph) -> Result<Vec<SpanningTree>> {
    guard_edges(graph)?;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(graph.tree_size());
    extend_trees(
        graph,
        0,
        &mut chosen,
        DisjointSets::new(graph.node_count()),
        &mut out,
    );
    Ok(out)
}

fn extend_trees(
    graph: &Graph,
    next: usize,
    chosen: &mut Vec<usize>,
    dsu: DisjointSets,
    out: &mut Vec<SpanningTree>,
) {
    let needed = graph.tree_size() - chosen.len();
    if needed == 0 {
        out.push(SpanningTree::from_sorted(chosen.clone()));
        return;
    }
    if graph.edge_count() - next < needed {
        return;
    }
    let (u, v) = graph.endpoints(next);
    let mut with = dsu.clone();
    if with.union(u, v) {
        chosen.push(next);
        extend_trees(graph, next + 1, chosen, with, out);
        chosen.pop();
    }
    if can_still_span(graph, next + 1, dsu.clone()) {
        extend_trees(graph, next + 1, chosen, dsu, out);
    }
}

fn can_still_span(graph: &Graph, from: usize, mut dsu: DisjointSets) -> bool {
    for &(u, v) in &graph.edges()[from..] {
        dsu.union(u, v);
    }
    (1..graph.node_count()).all(|x| dsu.same(0, x))
}

fn rank_weight(pref: &Preference, edges: &[usize]) -> u64 {
    edges.iter().map(|&e| u64::from(pref.rank(e))).sum()
}

/// All minimum spanning trees of one agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstSet {
    pub trees: Vec<SpanningTree>,
}

impl MstSet {
    /// `max |T ∩ H|` over the trees.
    pub fn max_overlap(&self, favored: &[usize]) -> usize {
        let h = mask_of(favored);
        self.trees
            .iter()
            .map(|t| (mask_of(t.edge_ids()) & h).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// The trees attaining [`MstSet::max_overlap`].
    pub fn best_for(&self, favored: &[usize]) -> Vec<&SpanningTree> {
        let h = mask_of(favored);
        let best = self.max_overlap(favored) as u32;
        self.trees
            .iter()
            .filter(|t| (mask_of(t.edge_ids()) & h).count_ones() == best)
            .collect()
    }

    pub fn contains(&self, tree: &SpanningTree) -> bool {
        self.trees.binary_search(tree).is_ok()
    }
}

/// All MSTs of `pref`, found by scoring every spanning tree with the
/// canonical consistent weights `w(e) = rank(e)`. Trees are sorted.
pub fn enumerate_msts(graph: &Graph, pref: &Preference) -> Result<MstSet> {
    check_pref(graph, pref)?;
    let trees = enumerate_spanning_trees(graph)?;
    Ok(msts_among(&trees, pref))
}

fn msts_among(trees: &[SpanningTree], pref: &Preference) -> MstSet {
    let best = trees
        .iter()
        .map(|t| rank_weight(pref, t.edge_ids()))
        .min()
        .unwrap_or(0);
    let mut trees: Vec<SpanningTree> = trees
        .iter()
        .filter(|t| rank_weight(pref, t.edge_ids()) == best)
        .cloned()
        .collect();
    trees.sort();
    MstSet { trees }
}

fn check_pref(graph: &Graph, pref: &Preference) -> Result<()> {
    if pref.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            what: "agent rank vector",
            expected: graph.edge_count(),
            found: pref.len(),
        });
    }
    Ok(())
}

fn check_profile(graph: &Graph, profile: &Profile) -> Result<()> {
    profile
        .agents()
        .iter()
        .try_for_each(|p| check_pref(graph, p))
}

/// Fast feasibility test on bitmasks: `H` contains an MST of an agent iff the
/// minimum spanning forest of `(V, H)` under `w = rank` spans the graph and
/// weighs as much as the agent's MST of the whole graph.
#[derive(Debug, Clone)]
pub struct FeasibilityChecker<'a> {
    graph: &'a Graph,
    /// Per agent: edge ids sorted by (rank, id), with the optimal MST weight.
    agents: Vec<(Vec<usize>, Vec<u64>, u64)>,
}

impl<'a> FeasibilityChecker<'a> {
    pub fn new(graph: &'a Graph, profile: &Profile) -> Result<Self> {
        guard_edges(graph)?;
        check_profile(graph, profile)?;
        let agents = profile
            .agents()
            .iter()
            .map(|pref| {
                let mut order: Vec<usize> = (0..graph.edge_count()).collect();
                order.sort_by_key(|&e| (pref.rank(e), e));
                let weights = order.iter().map(|&e| u64::from(pref.rank(e))).collect();
                let tree = kruskal(graph, pref).expect("lengths checked");
                (order, weights, rank_weight(pref, tree.edge_ids()))
            })
            .collect();
        Ok(FeasibilityChecker { graph, agents })
    }

    pub fn agent_satisfied(&self, agent: usize, mask: u32) -> bool {
        let (order, weights, optimum) = &self.agents[agent];
        let target = self.graph.tree_size();
        let mut dsu = DisjointSets::new(self.graph.node_count());
        let (mut taken, mut weight) = (0, 0);
        for (&e, &w) in order.iter().zip(weights) {
            if taken == target {
                break;
            }
            if mask >> e & 1 == 0 {
                continue;
            }
            let (u, v) = self.graph.endpoints(e);
            if dsu.union(u, v) {
                taken += 1;
                weight += w;
            }
        }
        taken == target && weight == *optimum
    }

    pub fn is_feasible(&self, mask: u32) -> bool {
        (0..self.agents.len()).all(|i| self.agent_satisfied(i, mask))
    }
}

/// What [`exact_min_cover`] minimizes.
#[derive(Debug, Clone, Copy)]
pub enum Objective<'a> {
    Cardinality,
    Cost(&'a CostModel),
}

/// An optimal MST cover by subset enumeration.
///
/// Subsets are visited size-major, then in increasing bitmask order; the
/// first feasible one wins for cardinality, and for cost the first subset of
/// strictly minimal cost in that order.
pub fn exact_min_cover(
    graph: &Graph,
    profile: &Profile,
    objective: Objective,
) -> Result<Vec<usize>> {
    let checker = FeasibilityChecker::new(graph, profile)?;
    let m = graph.edge_count();
    match objective {
        Objective::Cardinality => (graph.tree_size()..=m)
            .flat_map(|size| subsets_of_size(m, size))
            .find(|&mask| checker.is_feasible(mask))
            .map(members)
            .ok_or(Error::NoProgress {
                round: 0,
                covered: 0,
                target: profile.len() * graph.tree_size(),
            }),
        Objective::Cost(cost) => {
            check_costs(graph, cost)?;
            let mut best: Option<(Rational64, u32)> = None;
            for mask in subsets_size_major(m).filter(|&mask| checker.is_feasible(mask)) {
                let c = cost.set_cost(&members(mask));
                if best.is_none_or(|(b, _)| c < b) {
                    best = Some((c, mask));
                }
            }
            Ok(members(best.expect("the full edge set is feasible").1))
        }
    }
}

fn check_costs(graph: &Graph, cost: &CostModel) -> Result<()> {
    if cost.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            what: "cost vector",
            expected: graph.edge_count(),
            found: cost.len(),
        });
    }
    Ok(())
}

/// Every minimum-cardinality MST cover.
pub fn all_min_covers(graph: &Graph, profile: &Profile) -> Result<Vec<Vec<usize>>> {
    let checker = FeasibilityChecker::new(graph, profile)?;
    let m = graph.edge_count();
    for size in graph.tree_size()..=m {
        let found: Vec<Vec<usize>> = subsets_of_size(m, size)
            .filter(|&mask| checker.is_feasible(mask))
            .map(members)
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the full edge set is always feasible")
}

/// Every minimum-cost MST cover.
pub fn all_min_cost_covers(
    graph: &Graph,
    profile: &Profile,
    cost: &CostModel,
) -> Result<Vec<Vec<usize>>> {
    check_costs(graph, cost)?;
    let checker = FeasibilityChecker::new(graph, profile)?;
    let mut best: Option<Rational64> = None;
    let mut found = Vec::new();
    for mask in subsets_size_major(graph.edge_count()).filter(|&mask| checker.is_feasible(mask)) {
        let set = members(mask);
        let c = cost.set_cost(&set);
        match best {
            Some(b) if c > b => continue,
            Some(b) if c == b => found.push(set),
            _ => {
                best = Some(c);
                found = vec![set];
            }
        }
    }
    Ok(found)
}

/// Whether some spanning tree is an MST for every agent, decided by checking
/// every spanning tree.
pub fn perfect_cover_exists(graph: &Graph, profile: &Profile) -> Result<bool> {
    check_profile(graph, profile)?;
    let trees = enumerate_spanning_trees(graph)?;
    let sets: Vec<MstSet> = profile
        .agents()
        .iter()
        .map(|p| msts_among(&trees, p))
        .collect();
    Ok(trees.iter().any(|t| sets.iter().all(|s| s.contains(t))))
}

/// Perfect-cover test through summed weights: take `w_i = rank_i`, find an
/// MST of `Σ_i w_i`, and keep it iff it is an MST for every agent.
pub fn perfect_cover_by_weight_sum(
    graph: &Graph,
    profile: &Profile,
) -> Result<Option<SpanningTree>> {
    check_profile(graph, profile)?;
    let summed: Vec<u64> = (0..graph.edge_count())
        .map(|e| profile.agents().iter().map(|p| u64::from(p.rank(e))).sum())
        .collect();
    let tree = kruskal(graph, &Preference::new(summed)?)?;
    for pref in profile.agents() {
        let optimum = rank_weight(pref, kruskal(graph, pref)?.edge_ids());
        if rank_weight(pref, tree.edge_ids()) != optimum {
            return Ok(None);
        }
    }
    Ok(Some(tree))
}

/// Minimum-cardinality set cover by subfamily enumeration; returns set
/// indices, ascending.
pub fn exact_set_cover(universe_size: usize, sets: &[Vec<usize>]) -> Result<Vec<usize>> {
    if universe_size == 0 || sets.is_empty() {
        return Err(Error::EmptySetCover);
    }
    if sets.len() > MAX_SETS {
        return Err(Error::SizeGuard {
            what: "set count",
            limit: MAX_SETS,
            found: sets.len(),
        });
    }
    if universe_size > 64 {
        return Err(Error::SizeGuard {
            what: "universe size",
            limit: 64,
            found: universe_size,
        });
    }
    let mut set_masks = Vec::with_capacity(sets.len());
    for set in sets {
        let mut mask = 0u64;
        for &element in set {
            if element >= universe_size {
                return Err(Error::ElementOutOfRange {
                    element,
                    universe: universe_size,
                });
            }
            mask |= 1 << element;
        }
        set_masks.push(mask);
    }
    let universe = if universe_size == 64 {
        u64::MAX
    } else {
        (1u64 << universe_size) - 1
    };
    let union = set_masks.iter().fold(0, |a, s| a | s);
    if union != universe {
        let element = (!union & universe).trailing_zeros() as usize;
        return Err(Error::InfeasibleSetCover { element });
    }
    let found = subsets_size_major(sets.len())
        .find(|&pick| members(pick).iter().fold(0, |acc, &i| acc | set_masks[i]) == universe)
        .expect("the whole family covers the universe");
    Ok(members(found))
}

/// `Σ_{e ∈ H} c({e}) / c(H)`.
pub fn curvature(cost: &CostModel, set: &[usize]) -> Result<Rational64> {
    let total = cost.set_cost(set);
    if total == Rational64::from_integer(0) {
        return Err(Error::ZeroSetCost);
    }
    let singles: Rational64 = set.iter().map(|&e| cost.singleton(e)).sum();
    Ok(singles / total)
}

/// Instance-level curvature: the minimum of [`curvature`] over all
/// minimum-cost covers.
pub fn instance_curvature(
    graph: &Graph,
    profile: &Profile,
    cost: &CostModel,
) -> Result<Rational64> {
    all_min_cost_covers(graph, profile, cost)?
        .iter()
        .map(|h| curvature(cost, h))
        .try_fold(None, |best: Option<Rational64>, c| {
            let c = c?;
            Ok(Some(best.map_or(c, |b| b.min(c))))
        })
        .map(|best| best.expect("a minimum-cost cover exists"))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cover::MaxCost;

    fn example() -> (Graph, Profile) {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap();
        let p = Profile::new(vec![
            Preference::new(vec![1, 1, 2, 1]).unwrap(),
            Preference::new(vec![1, 2, 1, 1]).unwrap(),
        ])
        .unwrap();
        (g, p)
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn gosper_enumeration() {
        let all: Vec<u32> = subsets_size_major(3).collect();
        assert_eq!(all, vec![0, 1, 2, 4, 3, 5, 6, 7]);
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
        assert_eq!(subsets_of_size(16, 16).collect::<Vec<_>>(), vec![0xffff]);
    }

    #[test]
    fn cayley_counts() {
        for (n, count) in [(2, 1), (3, 3), (4, 16), (5, 125)] {
            assert_eq!(enumerate_spanning_trees(&complete(n)).unwrap().len(), count);
        }
        let k4 = complete(4);
        let tied = Preference::new(vec![1; 6]).unwrap();
        assert_eq!(enumerate_msts(&k4, &tied).unwrap().trees.len(), 16);
    }

    #[test]
    fn example_msts() {
        let (g, p) = example();
        let set = enumerate_msts(&g, p.agent(0)).unwrap();
        assert_eq!(set.trees.len(), 1);
        assert_eq!(set.trees[0].edge_ids(), &[0, 1, 3]);
        assert_eq!(set.max_overlap(&[0, 1]), 2);
    }

    #[test]
    fn triangle_with_one_worse_edge() {
        let g = complete(3);
        let set = enumerate_msts(&g, &Preference::new(vec![1, 1, 2]).unwrap()).unwrap();
        assert_eq!(set.trees.len(), 1);
        // (1,1,2) over a triangle: only {e0,e1} avoids the worse edge
        let set = enumerate_msts(&g, &Preference::new(vec![1, 2, 2]).unwrap()).unwrap();
        assert_eq!(set.trees.len(), 2);
    }

    #[test]
    fn size_guard() {
        let big = complete(7); // 21 edges
        assert!(matches!(
            enumerate_spanning_trees(&big),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn exact_cover_example() {
        let (g, p) = example();
        assert_eq!(
            exact_min_cover(&g, &p, Objective::Cardinality).unwrap(),
            vec![0, 1, 2, 3]
        );
        let single = Profile::new(vec![p.agent(0).clone()]).unwrap();
        assert_eq!(
            exact_min_cover(&g, &single, Objective::Cardinality)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(all_min_covers(&g, &p).unwrap().len(), 1);
        let cost = CostModel::additive_integers([10, 1, 1, 1]).unwrap();
        assert_eq!(
            exact_min_cover(&g, &p, Objective::Cost(&cost)).unwrap(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn weight_sum_cross_check() {
        let (g, p) = example();
        assert_eq!(perfect_cover_by_weight_sum(&g, &p).unwrap(), None);
        assert!(!perfect_cover_exists(&g, &p).unwrap());
        let same = Profile::new(vec![p.agent(1).clone(); 2]).unwrap();
        assert_eq!(
            perfect_cover_by_weight_sum(&g, &same)
                .unwrap()
                .unwrap()
                .edge_ids(),
            &[0, 2, 3]
        );
        assert!(perfect_cover_exists(&g, &same).unwrap());
    }

    #[test]
    fn set_cover_examples() {
        let three_sets = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(exact_set_cover(3, &three_sets).unwrap(), vec![0, 1]);
        assert_eq!(
            exact_set_cover(3, &[vec![1], vec![0, 1, 2]]).unwrap(),
            vec![1]
        );
        let singletons: Vec<Vec<usize>> = (0..5).map(|e| vec![e]).collect();
        assert_eq!(exact_set_cover(5, &singletons).unwrap().len(), 5);
        assert!(matches!(
            exact_set_cover(3, &[vec![0, 1]]),
            Err(Error::InfeasibleSetCover { element: 2 })
        ));
        assert!(matches!(exact_set_cover(0, &[]), Err(Error::EmptySetCover)));
        assert!(matches!(
            exact_set_cover(2, &[vec![5]]),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn curvature_examples() {
        let additive = CostModel::additive_integers([3, 5, 7]).unwrap();
        assert_eq!(curvature(&additive, &[0, 2]).unwrap(), r(1));

        let max = CostModel::from_oracle(
            3,
            Arc::new(MaxCost {
                costs: vec![r(1); 3],
            }),
        )
        .unwrap();
        assert_eq!(curvature(&max, &[0, 1, 2]).unwrap(), r(3));
        assert!(matches!(curvature(&max, &[]), Err(Error::ZeroSetCost)));

        let (g, p) = example();
        assert_eq!(
            instance_curvature(&g, &p, &CostModel::unit(4)).unwrap(),
            r(1)
        );
        let max4 = CostModel::from_oracle(
            4,
            Arc::new(MaxCost {
                costs: vec![r(1); 4],
            }),
        )
        .unwrap();
        assert_eq!(instance_curvature(&g, &p, &max4).unwrap(), r(4));
    }

    #[test]
    fn checker_agrees_with_definition_on_example() {
        let (g, p) = example();
        let checker = FeasibilityChecker::new(&g, &p).unwrap();
        for mask in 0u32..16 {
            assert_eq!(
                checker.is_feasible(mask),
                crate::cover::is_feasible(&g, &p, &members(mask)),
                "mask {mask:#b}"
            );
        }
    }
}
