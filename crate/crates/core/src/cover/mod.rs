//! MST cover solvers.
//!
//! The progress of an edge set `H` for an agent is the largest overlap
//! `|T ∩ H|` over that agent's minimum spanning trees `T`. It is computed
//! ordinally: refine the agent's preference so that edges of `H` win every
//! tie ([`degrade`]), then run Kruskal on the refined order and count the
//! edges of `H` in the result. `H` covers the agent exactly when its progress
//! reaches `n - 1`.
//!
//! The greedy solvers add, one edge per round, the edge with the largest gain
//! in total progress (optionally divided by the edge's cost). Ties go to the
//! smallest edge id.

mod cost;

pub use cost::{CostModel, CoverageCost, MaxCost, SetCost};

use num_rational::Rational64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{kruskal, Graph, SpanningTree};
use crate::preferences::{degrade, lex_aggregate, Preference, Profile};

/// One greedy round: the chosen element, its marginal gain in total
/// progress, and the marginal gain of every element at the start of the round
/// (zero for elements already selected).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Round {
    pub edge: usize,
    pub gain: u64,
    pub votes: Vec<u64>,
}

/// An MST cover together with the evidence that it is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    /// Selected edge ids, ascending.
    pub selected: Vec<usize>,
    /// One MST per agent, each contained in `selected`.
    pub witnesses: Vec<SpanningTree>,
    /// Greedy trace; empty for non-greedy solvers.
    pub rounds: Vec<Round>,
}

impl CoverSolution {
    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn cost(&self, cost: &CostModel) -> Rational64 {
        cost.set_cost(&self.selected)
    }

    /// Builds a solution from a feasible edge set, extracting witnesses.
    /// Returns `None` if `selected` is not feasible.
    pub fn from_selected(graph: &Graph, profile: &Profile, selected: Vec<usize>) -> Option<Self> {
        let mut selected = selected;
        selected.sort_unstable();
        selected.dedup();
        let witnesses = witness_trees(graph, profile, &selected)?;
        Some(CoverSolution {
            selected,
            witnesses,
            rounds: Vec::new(),
        })
    }
}

/// Execution knobs that never change results.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Evaluate candidate edges of a round concurrently.
    pub parallel: bool,
}

/// Progress `f_i(H)` of one agent: the largest `|T ∩ H|` over the agent's
/// MSTs, in `0..=n-1`.
///
/// # Panics
/// If `pref` does not rank exactly the graph's edges, or `favored` holds an
/// out-of-range id.
pub fn progress(graph: &Graph, pref: &Preference, favored: &[usize]) -> usize {
    let tree = degraded_tree(graph, pref, favored);
    let mut in_favored = vec![false; graph.edge_count()];
    for &e in favored {
        in_favored[e] = true;
    }
    tree.edge_ids().iter().filter(|&&e| in_favored[e]).count()
}

fn degraded_tree(graph: &Graph, pref: &Preference, favored: &[usize]) -> SpanningTree {
    kruskal(graph, &degrade(pref, favored)).expect("preference must rank every edge of the graph")
}

/// `F(H)`, the summed progress over all agents.
pub fn total_progress(graph: &Graph, profile: &Profile, favored: &[usize]) -> usize {
    profile
        .agents()
        .iter()
        .map(|p| progress(graph, p, favored))
        .sum()
}

/// True iff every agent has an MST inside `selected`.
pub fn is_feasible(graph: &Graph, profile: &Profile, selected: &[usize]) -> bool {
    let full = graph.tree_size();
    profile
        .agents()
        .iter()
        .all(|p| progress(graph, p, selected) == full)
}

/// Per-agent witness MSTs inside `selected`, or `None` if some agent has none.
///
/// The witness of an agent is the Kruskal tree of its preference refined
/// toward `selected`; when progress is `n - 1` every edge of it lies in
/// `selected`.
pub fn witness_trees(
    graph: &Graph,
    profile: &Profile,
    selected: &[usize],
) -> Option<Vec<SpanningTree>> {
    let mut in_selected = vec![false; graph.edge_count()];
    for &e in selected {
        in_selected[e] = true;
    }
    profile
        .agents()
        .iter()
        .map(|p| {
            let tree = degraded_tree(graph, p, selected);
            tree.edge_ids()
                .iter()
                .all(|&e| in_selected[e])
                .then_some(tree)
        })
        .collect()
}

/// A single spanning tree that is an MST for every agent, if one exists.
///
/// Runs Kruskal on the lexicographic aggregate of the profile and keeps the
/// result only if every agent accepts it.
pub fn perfect_cover(graph: &Graph, profile: &Profile) -> Option<SpanningTree> {
    let tree =
        kruskal(graph, &lex_aggregate(profile)).expect("profile must rank every edge of the graph");
    let full = graph.tree_size();
    profile
        .agents()
        .iter()
        .all(|p| progress(graph, p, tree.edge_ids()) == full)
        .then_some(tree)
}

/// Multi-round plural voting: each round adds the edge with the largest gain
/// in total progress.
pub fn greedy_cover(graph: &Graph, profile: &Profile) -> Result<CoverSolution> {
    greedy_cover_with(graph, profile, SolveOptions::default())
}

pub fn greedy_cover_with(
    graph: &Graph,
    profile: &Profile,
    options: SolveOptions,
) -> Result<CoverSolution> {
    run_greedy(graph, profile, None, options)
}

/// Cost-aware greedy: each round adds the edge maximizing
/// `(F(H ∪ {e}) - F(H)) / c(e)` using singleton costs, even when `cost`
/// carries a general set-cost oracle.
pub fn weighted_greedy_cover(
    graph: &Graph,
    profile: &Profile,
    cost: &CostModel,
) -> Result<CoverSolution> {
    weighted_greedy_cover_with(graph, profile, cost, SolveOptions::default())
}

pub fn weighted_greedy_cover_with(
    graph: &Graph,
    profile: &Profile,
    cost: &CostModel,
    options: SolveOptions,
) -> Result<CoverSolution> {
    if cost.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            what: "cost vector",
            expected: graph.edge_count(),
            found: cost.len(),
        });
    }
    if let Some(edge) = cost
        .singleton_costs()
        .iter()
        .position(|c| *c <= Rational64::from_integer(0))
    {
        return Err(Error::NonPositiveCost { edge });
    }
    run_greedy(graph, profile, Some(cost.singleton_costs()), options)
}

fn check_lengths(graph: &Graph, profile: &Profile) -> Result<()> {
    if profile.edge_count() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            what: "agent rank vector",
            expected: graph.edge_count(),
            found: profile.edge_count(),
        });
    }
    Ok(())
}

/// Picks the best candidate by `votes[e] / costs[e]`, smallest id on ties;
/// zero-vote candidates are never picked.
pub(crate) fn pick_best(votes: &[u64], costs: Option<&[Rational64]>) -> Option<usize> {
    let mut best: Option<(usize, Rational64)> = None;
    for (e, &v) in votes.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let score = match costs {
            Some(c) => Rational64::from_integer(v as i64) / c[e],
            None => Rational64::from_integer(v as i64),
        };
        if best.as_ref().is_none_or(|(_, s)| score > *s) {
            best = Some((e, score));
        }
    }
    best.map(|(e, _)| e)
}

fn run_greedy(
    graph: &Graph,
    profile: &Profile,
    costs: Option<&[Rational64]>,
    options: SolveOptions,
) -> Result<CoverSolution> {
    check_lengths(graph, profile)?;
    let m = graph.edge_count();
    let target = profile.len() * graph.tree_size();
    let mut selected: Vec<usize> = Vec::new();
    let mut in_selected = vec![false; m];
    let mut covered = 0;
    let mut rounds = Vec::new();

    while covered < target {
        let vote = |e: usize| -> u64 {
            if in_selected[e] {
                return 0;
            }
            let mut candidate = selected.clone();
            candidate.push(e);
            (total_progress(graph, profile, &candidate) - covered) as u64
        };
        let votes: Vec<u64> = if options.parallel {
            (0..m).into_par_iter().map(vote).collect()
        } else {
            (0..m).map(vote).collect()
        };
        let edge = pick_best(&votes, costs).ok_or(Error::NoProgress {
            round: rounds.len(),
            covered,
            target,
        })?;
        let gain = votes[edge];
        covered += gain as usize;
        selected.push(edge);
        in_selected[edge] = true;
        rounds.push(Round { edge, gain, votes });
    }

    selected.sort_unstable();
    let witnesses = witness_trees(graph, profile, &selected).ok_or(Error::NoProgress {
        round: rounds.len(),
        covered,
        target,
    })?;
    Ok(CoverSolution {
        selected,
        witnesses,
        rounds,
    })
}
