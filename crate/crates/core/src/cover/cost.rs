use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;

use crate::error::{Error, Result};

/// A set function over edge ids. Implementations are expected to be
/// monotone and submodular with `cost(∅) = 0`.
pub trait SetCost: Send + Sync {
    fn cost(&self, set: &[usize]) -> Rational64;
}

/// Edge costs: strictly positive singleton costs plus, optionally, a general
/// set-cost oracle. Without an oracle the cost of a set is the sum of its
/// singleton costs.
#[derive(Clone)]
pub struct CostModel {
    singleton: Vec<Rational64>,
    oracle: Option<Arc<dyn SetCost>>,
}

impl CostModel {
    pub fn additive(costs: Vec<Rational64>) -> Result<Self> {
        check_positive(&costs)?;
        Ok(CostModel {
            singleton: costs,
            oracle: None,
        })
    }

    pub fn additive_integers(costs: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::additive(costs.into_iter().map(Rational64::from_integer).collect())
    }

    pub fn unit(m: usize) -> Self {
        CostModel {
            singleton: vec![Rational64::from_integer(1); m],
            oracle: None,
        }
    }

    /// Wraps a set-cost oracle over `m` elements; singleton costs are read
    /// back from the oracle and must be strictly positive.
    pub fn from_oracle(m: usize, oracle: Arc<dyn SetCost>) -> Result<Self> {
        let singleton: Vec<Rational64> = (0..m).map(|e| oracle.cost(&[e])).collect();
        check_positive(&singleton)?;
        Ok(CostModel {
            singleton,
            oracle: Some(oracle),
        })
    }

    pub fn len(&self) -> usize {
        self.singleton.len()
    }

    pub fn is_empty(&self) -> bool {
        self.singleton.is_empty()
    }

    pub fn is_additive(&self) -> bool {
        self.oracle.is_none()
    }

    pub fn singleton(&self, e: usize) -> Rational64 {
        self.singleton[e]
    }

    pub fn singleton_costs(&self) -> &[Rational64] {
        &self.singleton
    }

    pub fn set_cost(&self, set: &[usize]) -> Rational64 {
        match &self.oracle {
            Some(oracle) => oracle.cost(set),
            None => set.iter().map(|&e| self.singleton[e]).sum(),
        }
    }
}

impl PartialEq for CostModel {
    fn eq(&self, other: &Self) -> bool {
        match (&self.oracle, &other.oracle) {
            (None, None) => self.singleton == other.singleton,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl fmt::Debug for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CostModel")
            .field("singleton", &self.singleton)
            .field("additive", &self.is_additive())
            .finish()
    }
}

fn check_positive(costs: &[Rational64]) -> Result<()> {
    match costs.iter().position(|c| *c <= Rational64::from_integer(0)) {
        Some(edge) => Err(Error::NonPositiveCost { edge }),
        None => Ok(()),
    }
}

/// `c(S) = max_{e ∈ S} c(e)`, zero on the empty set.
#[derive(Debug, Clone)]
pub struct MaxCost {
    pub costs: Vec<Rational64>,
}

impl SetCost for MaxCost {
    fn cost(&self, set: &[usize]) -> Rational64 {
        set.iter()
            .map(|&e| self.costs[e])
            .max()
            .unwrap_or_else(|| Rational64::from_integer(0))
    }
}

/// Weighted coverage: each edge covers a set of items and a set pays the
/// total weight of the items its edges cover.
#[derive(Debug, Clone)]
pub struct CoverageCost {
    pub covers: Vec<Vec<usize>>,
    pub item_weights: Vec<Rational64>,
}

impl SetCost for CoverageCost {
    fn cost(&self, set: &[usize]) -> Rational64 {
        let mut hit = vec![false; self.item_weights.len()];
        for &e in set {
            for &item in &self.covers[e] {
                hit[item] = true;
            }
        }
        hit.iter()
            .zip(&self.item_weights)
            .filter(|(h, _)| **h)
            .map(|(_, w)| *w)
            .sum()
    }
}
