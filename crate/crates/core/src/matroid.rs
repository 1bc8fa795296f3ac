//! Rank oracles and matroid machinery.
//!
//! A matroid is given only through its rank function; a set is independent
//! iff its rank equals its size. For one agent, the sets contained in some
//! MST form a matroid whose rank is exactly the agent's progress function,
//! which is what [`MstMatroid`] exposes.

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::{pick_best, progress, CostModel, Round, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree};
use crate::oracle::members;
use crate::preferences::Preference;

pub trait RankOracle: Sync {
    /// Number of elements; the ground set is `0..ground_size()`.
    fn ground_size(&self) -> usize;

    /// Size of the largest independent subset of `set`.
    fn rank(&self, set: &[usize]) -> usize;

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut distinct = set.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        self.rank(&distinct) == distinct.len()
    }
}

/// The matroid of edge sets contained in some MST of one agent.
#[derive(Debug, Clone, Copy)]
pub struct MstMatroid<'a> {
    graph: &'a Graph,
    pref: &'a Preference,
}

impl<'a> MstMatroid<'a> {
    pub fn new(graph: &'a Graph, pref: &'a Preference) -> Result<Self> {
        if pref.len() != graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "agent rank vector",
                expected: graph.edge_count(),
                found: pref.len(),
            });
        }
        Ok(MstMatroid { graph, pref })
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn preference(&self) -> &'a Preference {
        self.pref
    }
}

impl RankOracle for MstMatroid<'_> {
    fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    fn rank(&self, set: &[usize]) -> usize {
        progress(self.graph, self.pref, set)
    }
}

pub fn mst_rank(matroid: &MstMatroid<'_>, set: &[usize]) -> usize {
    matroid.rank(set)
}

/// `U(rank, ground_size)`: every set of at most `rank` elements is independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformMatroid {
    pub ground_size: usize,
    pub rank: usize,
}

impl RankOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.ground_size
    }

    fn rank(&self, set: &[usize]) -> usize {
        distinct_count(set).min(self.rank)
    }
}

/// Elements are split into blocks; a set is independent iff it takes at most
/// `capacity[b]` elements from every block `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    block_of: Vec<usize>,
    capacities: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(block_of: Vec<usize>, capacities: Vec<usize>) -> Result<Self> {
        if let Some(&b) = block_of.iter().find(|&&b| b >= capacities.len()) {
            return Err(Error::InvalidParameters(format!(
                "block {b} has no capacity (only {} blocks)",
                capacities.len()
            )));
        }
        Ok(PartitionMatroid {
            block_of,
            capacities,
        })
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }
}

impl RankOracle for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn rank(&self, set: &[usize]) -> usize {
        let mut used = vec![0; self.capacities.len()];
        let mut distinct = set.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        for e in distinct {
            used[self.block_of[e]] += 1;
        }
        used.iter()
            .zip(&self.capacities)
            .map(|(&u, &c)| u.min(c))
            .sum()
    }
}

/// A matroid given by file rather than by code. A matroid file holds a JSON
/// array of these, e.g. `[{"kind": "uniform", "ground_size": 4, "rank": 2}]`
/// or `[{"kind": "partition", "blocks": [0, 0, 1], "capacities": [1, 1]}]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        ground_size: usize,
        rank: usize,
    },
    Partition {
        blocks: Vec<usize>,
        capacities: Vec<usize>,
    },
}

impl MatroidSpec {
    pub fn into_oracle(self) -> Result<Box<dyn RankOracle>> {
        Ok(match self {
            MatroidSpec::Uniform { ground_size, rank } => {
                Box::new(UniformMatroid { ground_size, rank })
            }
            MatroidSpec::Partition { blocks, capacities } => {
                Box::new(PartitionMatroid::new(blocks, capacities)?)
            }
        })
    }
}

pub fn matroids_from_str(text: &str) -> Result<Vec<MatroidSpec>> {
    Ok(serde_json::from_str(text)?)
}

fn distinct_count(set: &[usize]) -> usize {
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len()
}

/// Largest ground set [`check_matroid_axioms`] will enumerate.
pub const MAX_AXIOM_GROUND: usize = 12;

/// A witness that a rank oracle does not describe a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `rank(∅) != 0`.
    EmptyRank { rank: usize },
    /// `rank(set ∪ {element}) - rank(set)` is not 0 or 1.
    Marginal {
        set: Vec<usize>,
        element: usize,
        before: usize,
        after: usize,
    },
    /// `set` is independent but its subset `set ∖ {element}` is not.
    Hereditary { set: Vec<usize>, element: usize },
    /// Independent `larger` and `smaller` with no element of
    /// `larger ∖ smaller` that extends `smaller`.
    Augmentation {
        larger: Vec<usize>,
        smaller: Vec<usize>,
    },
    /// `rank(set)` disagrees with the size of its largest independent subset.
    RankMismatch {
        set: Vec<usize>,
        rank: usize,
        largest_independent: usize,
    },
    /// `rank(S+a) + rank(S+b) < rank(S+a+b) + rank(S)`.
    Submodularity { set: Vec<usize>, a: usize, b: usize },
}

/// Exhaustively checks that the independence system derived from `oracle`
/// is a matroid and that `oracle` is its rank function. Returns the first
/// violation found, or `None`.
pub fn check_matroid_axioms(oracle: &dyn RankOracle) -> Result<Option<AxiomViolation>> {
    let m = oracle.ground_size();
    if m > MAX_AXIOM_GROUND {
        return Err(Error::SizeGuard {
            what: "ground set",
            limit: MAX_AXIOM_GROUND,
            found: m,
        });
    }
    let full = 1usize << m;
    let rank: Vec<usize> = (0..full).map(|s| oracle.rank(&members(s as u32))).collect();

    if rank[0] != 0 {
        return Ok(Some(AxiomViolation::EmptyRank { rank: rank[0] }));
    }
    for s in 0..full {
        for e in (0..m).filter(|e| s >> e & 1 == 0) {
            let (before, after) = (rank[s], rank[s | 1 << e]);
            if after < before || after > before + 1 {
                return Ok(Some(AxiomViolation::Marginal {
                    set: members(s as u32),
                    element: e,
                    before,
                    after,
                }));
            }
        }
    }

    let independent: Vec<bool> = (0..full)
        .map(|s| rank[s] == s.count_ones() as usize)
        .collect();
    for s in (0..full).filter(|&s| independent[s]) {
        if let Some(e) = (0..m).find(|&e| s >> e & 1 == 1 && !independent[s ^ 1 << e]) {
            return Ok(Some(AxiomViolation::Hereditary {
                set: members(s as u32),
                element: e,
            }));
        }
    }

    let indep_sets: Vec<usize> = (0..full).filter(|&s| independent[s]).collect();
    for &larger in &indep_sets {
        for &smaller in &indep_sets {
            if larger.count_ones() <= smaller.count_ones() {
                continue;
            }
            let extends = (0..m)
                .filter(|&e| (larger & !smaller) >> e & 1 == 1)
                .any(|e| independent[smaller | 1 << e]);
            if !extends {
                return Ok(Some(AxiomViolation::Augmentation {
                    larger: members(larger as u32),
                    smaller: members(smaller as u32),
                }));
            }
        }
    }

    // Largest independent subset of each set, by dynamic programming over
    // subsets in increasing numeric order.
    let mut largest = vec![0usize; full];
    for s in 0..full {
        largest[s] = if independent[s] {
            s.count_ones() as usize
        } else {
            (0..m)
                .filter(|&e| s >> e & 1 == 1)
                .map(|e| largest[s ^ 1 << e])
                .max()
                .unwrap_or(0)
        };
        if largest[s] != rank[s] {
            return Ok(Some(AxiomViolation::RankMismatch {
                set: members(s as u32),
                rank: rank[s],
                largest_independent: largest[s],
            }));
        }
    }

    for s in 0..full {
        for a in (0..m).filter(|a| s >> a & 1 == 0) {
            for b in (a + 1..m).filter(|b| s >> b & 1 == 0) {
                if rank[s | 1 << a] + rank[s | 1 << b] < rank[s | 1 << a | 1 << b] + rank[s] {
                    return Ok(Some(AxiomViolation::Submodularity {
                        set: members(s as u32),
                        a,
                        b,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Output of [`matroid_greedy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyRun {
    /// Selected elements, ascending.
    pub selected: Vec<usize>,
    pub rounds: Vec<Round>,
}

/// Greedy for covering several matroids at full rank: each round adds the
/// element maximizing `(Σ_i rank_i(H ∪ {e}) - Σ_i rank_i(H)) / c(e)`, ties to
/// the smallest id, until `Σ_i rank_i(H) = Σ_i rank_i(E)`.
pub fn matroid_greedy(oracles: &[&dyn RankOracle], cost: &CostModel) -> Result<GreedyRun> {
    matroid_greedy_with(oracles, cost, SolveOptions::default())
}

pub fn matroid_greedy_with(
    oracles: &[&dyn RankOracle],
    cost: &CostModel,
    options: SolveOptions,
) -> Result<GreedyRun> {
    let m = cost.len();
    if let Some(bad) = oracles.iter().find(|o| o.ground_size() != m) {
        return Err(Error::LengthMismatch {
            what: "oracle ground set",
            expected: m,
            found: bad.ground_size(),
        });
    }
    if let Some(edge) = cost
        .singleton_costs()
        .iter()
        .position(|c| *c <= Rational64::from_integer(0))
    {
        return Err(Error::NonPositiveCost { edge });
    }

    let ground: Vec<usize> = (0..m).collect();
    let target: usize = oracles.iter().map(|o| o.rank(&ground)).sum();
    let total_rank = |set: &[usize]| -> usize { oracles.iter().map(|o| o.rank(set)).sum() };

    let mut selected = Vec::new();
    let mut in_selected = vec![false; m];
    let mut covered = total_rank(&selected);
    let mut rounds = Vec::new();
    while covered < target {
        let vote = |e: usize| -> u64 {
            if in_selected[e] {
                return 0;
            }
            let mut candidate = selected.clone();
            candidate.push(e);
            (total_rank(&candidate) - covered) as u64
        };
        let votes: Vec<u64> = if options.parallel {
            (0..m).into_par_iter().map(vote).collect()
        } else {
            (0..m).map(vote).collect()
        };
        let element = pick_best(&votes, Some(cost.singleton_costs())).ok_or(Error::NoProgress {
            round: rounds.len(),
            covered,
            target,
        })?;
        let gain = votes[element];
        covered += gain as usize;
        selected.push(element);
        in_selected[element] = true;
        rounds.push(Round {
            edge: element,
            gain,
            votes,
        });
    }
    selected.sort_unstable();
    Ok(GreedyRun { selected, rounds })
}

/// Swap rule for one agent: for an MST `tree` and an edge `edge ∉ tree`,
/// returns the smallest-id tree edge `e'` on the cycle closed by `edge` with
/// the same rank as `edge`, so that `tree + edge - e'` is again an MST.
/// Returns `None` when no such edge exists, i.e. when `edge` lies in no MST.
pub fn swap_check(
    matroid: &MstMatroid<'_>,
    edge: usize,
    tree: &SpanningTree,
) -> Result<Option<usize>> {
    let graph = matroid.graph();
    graph.check_edge_ids(&[edge])?;
    graph.check_edge_ids(tree.edge_ids())?;
    if matroid.rank(tree.edge_ids()) != graph.tree_size() || tree.len() != graph.tree_size() {
        return Err(Error::NotAnMst);
    }
    if tree.contains(edge) {
        return Err(Error::EdgeInTree { edge });
    }
    let pref = matroid.preference();
    let (u, v) = graph.endpoints(edge);
    Ok(tree
        .path(graph, u, v)
        .into_iter()
        .filter(|&f| pref.indifferent(f, edge))
        .min())
}
