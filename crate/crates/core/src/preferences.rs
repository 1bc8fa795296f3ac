//! Ordinal edge preferences.
//!
//! A [`Preference`] is a total preorder over edge ids stored as a rank vector:
//! lower rank means more preferred (cheaper). Ranks are normalized on
//! construction to the contiguous range `1..=kappa`, so two preferences are
//! order-equivalent exactly when their rank vectors are equal.

use num_rational::Rational64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preference {
    rank: Vec<u32>,
    kappa: u32,
}

impl Preference {
    /// Builds a preference from arbitrary positive ranks, normalizing them to
    /// `1..=kappa` while keeping their relative order.
    pub fn new(ranks: Vec<u64>) -> Result<Self> {
        if let Some(edge) = ranks.iter().position(|&r| r == 0) {
            return Err(Error::NonPositiveRank { edge });
        }
        Ok(Self::normalized_by_key(&ranks))
    }

    /// Normalizes any `Ord` key vector into dense ranks.
    fn normalized_by_key<K: Ord + Clone>(keys: &[K]) -> Self {
        let mut distinct: Vec<&K> = keys.iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("key present") as u32 + 1)
            .collect();
        Preference {
            rank,
            kappa: distinct.len() as u32,
        }
    }

    /// Builds a preference from ordered classes; class `j` gets rank `j + 1`.
    /// The classes must partition `0..m` for some `m`; empty classes are skipped.
    pub fn from_classes(classes: &[Vec<usize>]) -> Result<Self> {
        let m: usize = classes.iter().map(Vec::len).sum();
        let mut rank = vec![0u32; m];
        let mut kappa = 0;
        for class in classes.iter().filter(|c| !c.is_empty()) {
            kappa += 1;
            for &e in class {
                if e >= m || rank[e] != 0 {
                    return Err(Error::InvalidParameters(format!(
                        "classes do not partition 0..{m} (edge {e})"
                    )));
                }
                rank[e] = kappa;
            }
        }
        Ok(Preference { rank, kappa })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Normalized rank of `edge`, in `1..=kappa`.
    pub fn rank(&self, edge: usize) -> u32 {
        self.rank[edge]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Number of equivalence classes.
    pub fn kappa(&self) -> usize {
        self.kappa as usize
    }

    /// Equivalence classes in ascending rank order, members ascending by id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.kappa as usize];
        for (e, &r) in self.rank.iter().enumerate() {
            classes[r as usize - 1].push(e);
        }
        classes
    }

    /// Strictly prefers `a` over `b`.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn indifferent(&self, a: usize, b: usize) -> bool {
        self.rank[a] == self.rank[b]
    }
}

/// All agents' preferences over a common edge set, in a fixed agent order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    agents: Vec<Preference>,
}

impl Profile {
    pub fn new(agents: Vec<Preference>) -> Result<Self> {
        let first = agents.first().ok_or(Error::EmptyProfile)?;
        let m = first.len();
        if let Some(bad) = agents.iter().find(|p| p.len() != m) {
            return Err(Error::LengthMismatch {
                what: "agent rank vector",
                expected: m,
                found: bad.len(),
            });
        }
        Ok(Profile { agents })
    }

    pub fn agents(&self) -> &[Preference] {
        &self.agents
    }

    pub fn agent(&self, i: usize) -> &Preference {
        &self.agents[i]
    }

    /// Number of agents, `k`.
    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    /// Number of edges every preference ranks.
    pub fn edge_count(&self) -> usize {
        self.agents[0].len()
    }
}

/// Cardinal non-negative edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<Rational64>,
}

impl WeightFunction {
    pub fn new(weights: Vec<Rational64>) -> Result<Self> {
        if let Some(edge) = weights
            .iter()
            .position(|w| *w < Rational64::from_integer(0))
        {
            return Err(Error::NegativeWeight { edge });
        }
        Ok(WeightFunction { weights })
    }

    pub fn from_integers(weights: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::new(weights.into_iter().map(Rational64::from_integer).collect())
    }

    pub fn weights(&self) -> &[Rational64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// True iff `weights` orders every pair of edges exactly as `pref` does,
/// strict comparisons and ties alike.
pub fn is_consistent(weights: &WeightFunction, pref: &Preference) -> Result<bool> {
    if weights.len() != pref.len() {
        return Err(Error::LengthMismatch {
            what: "weight function",
            expected: pref.len(),
            found: weights.len(),
        });
    }
    // Consistency holds iff the weights induce the same dense ranking.
    Ok(Preference::normalized_by_key(weights.weights()) == *pref)
}

/// Aggregates a profile into one preorder by comparing rank vectors
/// `(rank_1(e), ..., rank_k(e))` lexicographically in agent order.
pub fn lex_aggregate(profile: &Profile) -> Preference {
    let m = profile.edge_count();
    let keys: Vec<Vec<u32>> = (0..m)
        .map(|e| profile.agents().iter().map(|p| p.rank(e)).collect())
        .collect();
    Preference::normalized_by_key(&keys)
}

/// Refines `pref` so that within every class the members of `favored` come
/// first: class `C` becomes `(C ∩ favored, C ∖ favored)`, empty pieces dropped.
pub fn degrade(pref: &Preference, favored: &[usize]) -> Preference {
    let mut in_favored = vec![false; pref.len()];
    for &e in favored {
        in_favored[e] = true;
    }
    let keys: Vec<(u32, bool)> = (0..pref.len())
        .map(|e| (pref.rank(e), !in_favored[e]))
        .collect();
    Preference::normalized_by_key(&keys)
}
