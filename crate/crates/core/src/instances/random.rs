//! Seeded random instances.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so an
//! instance is a pure function of its parameters.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Instance, Meta};
use crate::cover::CostModel;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::preferences::{Preference, Profile};

const MAX_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// Ranks are drawn uniformly from `1..=max_rank`.
    pub max_rank: u64,
    pub seed: u64,
    /// Forbid parallel edges.
    pub simple: bool,
    /// When set, additive costs are drawn uniformly from `1..=max_cost`.
    pub max_cost: Option<i64>,
}

impl RandomSpec {
    pub fn new(n: usize, m: usize, k: usize, max_rank: u64, seed: u64) -> Self {
        RandomSpec {
            n,
            m,
            k,
            max_rank,
            seed,
            simple: false,
            max_cost: None,
        }
    }
}

/// Random multigraph instance: `m` uniform edges without self-loops,
/// resampled until connected, and per-agent ranks uniform in `1..=max_rank`.
pub fn generate_random(n: usize, m: usize, k: usize, max_rank: u64, seed: u64) -> Result<Instance> {
    generate_random_with(&RandomSpec::new(n, m, k, max_rank, seed))
}

pub fn generate_random_with(spec: &RandomSpec) -> Result<Instance> {
    let &RandomSpec {
        n,
        m,
        k,
        max_rank,
        seed,
        simple,
        max_cost,
    } = spec;
    let invalid = |msg: String| Err(Error::InvalidParameters(msg));
    if n == 0 || k == 0 || max_rank == 0 {
        return invalid("n, k and max-rank must be positive".into());
    }
    if m + 1 < n {
        return invalid(format!("{m} edges cannot connect {n} nodes"));
    }
    if n == 1 && m > 0 {
        return invalid("a single node admits no edges without self-loops".into());
    }
    let pairs = n * (n - 1) / 2;
    if simple && m > pairs {
        return invalid(format!(
            "a simple graph on {n} nodes has at most {pairs} edges"
        ));
    }
    if matches!(max_cost, Some(c) if c < 1) {
        return invalid("max-cost must be at least 1".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = (0..MAX_ATTEMPTS)
        .find_map(|_| Graph::new(n, random_edges(&mut rng, n, m, simple)).ok())
        .ok_or_else(|| Error::InvalidParameters("no connected graph found".into()))?;

    let agents = (0..k)
        .map(|_| Preference::new((0..m).map(|_| rng.gen_range(1..=max_rank)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let costs = match max_cost {
        Some(c) => Some(CostModel::additive_integers(
            (0..m).map(|_| rng.gen_range(1..=c)).collect::<Vec<_>>(),
        )?),
        None => None,
    };

    let mut meta = Meta::new();
    meta.insert("generator".into(), json!("random"));
    meta.insert("n".into(), json!(n));
    meta.insert("m".into(), json!(m));
    meta.insert("k".into(), json!(k));
    meta.insert("max_rank".into(), json!(max_rank));
    meta.insert("seed".into(), json!(seed));
    meta.insert("simple".into(), json!(simple));
    if let Some(c) = max_cost {
        meta.insert("max_cost".into(), json!(c));
    }
    Instance::new(graph, Profile::new(agents)?, costs, meta)
}

/// Parameters for a batch of small random instances. Instance `i` draws its
/// size from the ranges below and gets its own derived seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    /// Edge counts are drawn from `n - 1..=max_m`.
    pub max_m: usize,
    pub max_k: usize,
    pub max_rank: u64,
    pub max_cost: Option<i64>,
    pub seed: u64,
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    if spec.min_n == 0 || spec.min_n > spec.max_n || spec.max_n > spec.max_m + 1 || spec.max_k == 0
    {
        return Err(Error::InvalidParameters(format!(
            "bad corpus spec {spec:?}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let n = rng.gen_range(spec.min_n..=spec.max_n);
            let m = rng.gen_range(n - 1..=spec.max_m);
            let k = rng.gen_range(1..=spec.max_k);
            let seed = rng.gen();
            generate_random_with(&RandomSpec {
                max_cost: spec.max_cost,
                ..RandomSpec::new(n, m, k, spec.max_rank, seed)
            })
        })
        .collect()
}

fn random_edges(rng: &mut ChaCha8Rng, n: usize, m: usize, simple: bool) -> Vec<(usize, usize)> {
    if simple {
        let mut all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        all.shuffle(rng);
        all.truncate(m);
        return all;
    }
    (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::instance_to_string;

    #[test]
    fn deterministic_per_seed() {
        let a = generate_random(5, 7, 3, 3, 1).unwrap();
        let b = generate_random(5, 7, 3, 3, 1).unwrap();
        assert_eq!(
            instance_to_string(&a).unwrap(),
            instance_to_string(&b).unwrap()
        );
        let c = generate_random(5, 7, 3, 3, 2).unwrap();
        assert_ne!(a, c);
        assert_eq!(a.graph.edge_count(), 7);
        assert_eq!(a.profile.len(), 3);
        assert!(a.profile.agents().iter().all(|p| p.kappa() <= 3));
    }

    #[test]
    fn single_edge() {
        let inst = generate_random(2, 1, 4, 5, 9).unwrap();
        assert_eq!(inst.graph.edges().len(), 1);
    }

    #[test]
    fn simple_mode() {
        let inst = generate_random_with(&RandomSpec {
            simple: true,
            ..RandomSpec::new(4, 6, 2, 2, 3)
        })
        .unwrap();
        let mut edges: Vec<_> = inst
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), 6);
        assert!(generate_random_with(&RandomSpec {
            simple: true,
            ..RandomSpec::new(4, 7, 2, 2, 3)
        })
        .is_err());
    }

    #[test]
    fn costs_in_range() {
        let inst = generate_random_with(&RandomSpec {
            max_cost: Some(10),
            ..RandomSpec::new(5, 8, 2, 3, 11)
        })
        .unwrap();
        let costs = inst.costs.unwrap();
        assert!(costs
            .singleton_costs()
            .iter()
            .all(|c| *c.numer() >= 1 && *c.numer() <= 10 && *c.denom() == 1));
    }

    #[test]
    fn corpus_respects_ranges() {
        let spec = CorpusSpec {
            count: 40,
            min_n: 3,
            max_n: 6,
            max_m: 10,
            max_k: 4,
            max_rank: 3,
            max_cost: None,
            seed: 7,
        };
        let corpus = generate_corpus(&spec).unwrap();
        assert_eq!(corpus.len(), 40);
        for inst in &corpus {
            let (n, m) = (inst.graph.node_count(), inst.graph.edge_count());
            assert!((3..=6).contains(&n) && (n - 1..=10).contains(&m));
            assert!((1..=4).contains(&inst.profile.len()));
        }
        assert_eq!(generate_corpus(&spec).unwrap(), corpus);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_random(5, 3, 1, 1, 0).is_err());
        assert!(generate_random(3, 3, 0, 1, 0).is_err());
        assert!(generate_random(3, 3, 1, 0, 0).is_err());
        assert!(generate_random(1, 1, 1, 1, 0).is_err());
        assert!(generate_random(1, 0, 1, 1, 0).is_ok());
    }
}
