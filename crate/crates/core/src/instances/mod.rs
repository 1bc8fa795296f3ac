//! Problem instances: generators and file formats.

mod io;
mod random;
mod reduction;

pub use io::{
    costs_from_str, instance_from_str, instance_to_string, read_instance, read_solution,
    solution_from_str, solution_to_string, write_instance, write_solution, RoundRecord,
    SolutionFile,
};
pub use random::{generate_corpus, generate_random, generate_random_with, CorpusSpec, RandomSpec};
pub use reduction::{
    opt_identity_check, opt_identity_sides, reduce_set_cover, ReductionLayout, ReductionMode,
};

use std::collections::BTreeMap;

use crate::cover::CostModel;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::preferences::Profile;

/// Free-form provenance tags carried alongside an instance or solution.
pub type Meta = BTreeMap<String, serde_json::Value>;

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub profile: Profile,
    /// Additive edge costs, if any.
    pub costs: Option<CostModel>,
    pub meta: Meta,
}

impl Instance {
    pub fn new(
        graph: Graph,
        profile: Profile,
        costs: Option<CostModel>,
        meta: Meta,
    ) -> Result<Self> {
        if profile.edge_count() != graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "agent rank vector",
                expected: graph.edge_count(),
                found: profile.edge_count(),
            });
        }
        if let Some(c) = &costs {
            if c.len() != graph.edge_count() {
                return Err(Error::LengthMismatch {
                    what: "cost vector",
                    expected: graph.edge_count(),
                    found: c.len(),
                });
            }
            if !c.is_additive() {
                return Err(Error::InvalidParameters(
                    "instances only carry additive costs".into(),
                ));
            }
        }
        Ok(Instance {
            graph,
            profile,
            costs,
            meta,
        })
    }

    /// The instance's costs, or unit costs when it has none.
    pub fn cost_model(&self) -> CostModel {
        self.costs
            .clone()
            .unwrap_or_else(|| CostModel::unit(self.graph.edge_count()))
    }
}

/// A set cover input over the universe `0..universe_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInput {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCoverInput {
    /// Validates that the sets cover the universe; each set is sorted and
    /// deduplicated.
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if universe_size == 0 || sets.is_empty() {
            return Err(Error::EmptySetCover);
        }
        let mut covered = vec![false; universe_size];
        let mut normalized = Vec::with_capacity(sets.len());
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            for &element in &set {
                if element >= universe_size {
                    return Err(Error::ElementOutOfRange {
                        element,
                        universe: universe_size,
                    });
                }
                covered[element] = true;
            }
            normalized.push(set);
        }
        if let Some(element) = covered.iter().position(|c| !c) {
            return Err(Error::InfeasibleSetCover { element });
        }
        Ok(SetCoverInput {
            universe_size,
            sets: normalized,
        })
    }

    /// Parses `{"universe_size": p, "sets": [[...], ...]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            universe_size: usize,
            sets: Vec<Vec<usize>>,
        }
        let raw: Raw = serde_json::from_str(text)?;
        Self::new(raw.universe_size, raw.sets)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_cover_input_validation() {
        assert!(SetCoverInput::new(0, vec![vec![]]).is_err());
        assert!(SetCoverInput::new(2, vec![]).is_err());
        assert!(matches!(
            SetCoverInput::new(3, vec![vec![0, 1]]),
            Err(Error::InfeasibleSetCover { element: 2 })
        ));
        assert!(matches!(
            SetCoverInput::new(2, vec![vec![0, 1, 2]]),
            Err(Error::ElementOutOfRange { .. })
        ));
        let sc =
            SetCoverInput::from_json_str(r#"{"universe_size": 2, "sets": [[1, 0, 1]]}"#).unwrap();
        assert_eq!(sc.sets(), &[vec![0, 1]]);
        assert!(SetCoverInput::from_json_str(r#"{"universe_size": 2}"#).is_err());
    }
}
