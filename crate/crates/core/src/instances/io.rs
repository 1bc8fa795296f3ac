//! JSON instance and solution files.
//!
//! Files are written in one canonical form: UTF-8, compact, object keys
//! sorted, ranks normalized to `1..=kappa`, no trailing whitespace. Costs are
//! JSON integers, or `"p/q"` strings when not integral; on input decimals
//! such as `2.5` are also accepted and read exactly.

use std::path::Path;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Instance, Meta};
use crate::cover::{CostModel, CoverSolution, Round};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::preferences::{Preference, Profile};

// Field order is alphabetical so that serialization emits sorted keys.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    agents: Vec<RawAgent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    costs: Option<Vec<Value>>,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    meta: Meta,
    n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAgent {
    rank: Vec<u64>,
}

pub fn instance_to_string(instance: &Instance) -> Result<String> {
    let raw = RawInstance {
        agents: instance
            .profile
            .agents()
            .iter()
            .map(|p| RawAgent {
                rank: p.ranks().iter().map(|&r| u64::from(r)).collect(),
            })
            .collect(),
        costs: instance
            .costs
            .as_ref()
            .map(|c| c.singleton_costs().iter().map(cost_to_json).collect()),
        edges: instance
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| [u, v])
            .collect(),
        meta: instance.meta.clone(),
        n: instance.graph.node_count(),
    };
    Ok(serde_json::to_string(&raw)?)
}

pub fn instance_from_str(text: &str) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text)?;
    let m = raw.edges.len();
    let graph = Graph::new(raw.n, raw.edges.iter().map(|&[u, v]| (u, v)).collect())?;
    let mut agents = Vec::with_capacity(raw.agents.len());
    for agent in raw.agents {
        if agent.rank.len() != m {
            return Err(Error::LengthMismatch {
                what: "agent rank vector",
                expected: m,
                found: agent.rank.len(),
            });
        }
        agents.push(Preference::new(agent.rank)?);
    }
    let costs = raw
        .costs
        .map(|values| costs_from_values(&values, m))
        .transpose()?;
    Instance::new(graph, Profile::new(agents)?, costs, raw.meta)
}

fn costs_from_values(values: &[Value], m: usize) -> Result<CostModel> {
    if values.len() != m {
        return Err(Error::LengthMismatch {
            what: "cost vector",
            expected: m,
            found: values.len(),
        });
    }
    let parsed = values
        .iter()
        .enumerate()
        .map(|(edge, v)| cost_from_json(edge, v))
        .collect::<Result<Vec<_>>>()?;
    CostModel::additive(parsed)
}

/// Parses a standalone JSON array of `m` additive edge costs.
pub fn costs_from_str(text: &str, m: usize) -> Result<CostModel> {
    let values: Vec<Value> = serde_json::from_str(text)?;
    costs_from_values(&values, m)
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    instance_from_str(&std::fs::read_to_string(path)?)
}

pub fn write_instance(instance: &Instance, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, instance_to_string(instance)?)?;
    Ok(())
}

fn cost_to_json(c: &Rational64) -> Value {
    if c.is_integer() {
        Value::from(*c.numer())
    } else {
        Value::from(format!("{}/{}", c.numer(), c.denom()))
    }
}

fn cost_from_json(edge: usize, value: &Value) -> Result<Rational64> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Malformed(format!("cost of edge {edge}: {other}"))),
    };
    parse_rational(&text)
        .ok_or_else(|| Error::Malformed(format!("cost of edge {edge}: {text:?} is not a rational")))
}

/// Parses `"7"`, `"-3/4"` or `"2.25"` exactly.
fn parse_rational(text: &str) -> Option<Rational64> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let (n, d): (i64, i64) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        return (d != 0).then(|| Rational64::new(n, d));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return None;
        }
        let negative = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().ok()?
        };
        let scale = 10i64.checked_pow(frac.len() as u32)?;
        let frac: i64 = frac.parse().ok()?;
        let magnitude = whole.abs().checked_mul(scale)?.checked_add(frac)?;
        let numer = if negative { -magnitude } else { magnitude };
        return Some(Rational64::new(numer, scale));
    }
    text.parse::<i64>().ok().map(Rational64::from_integer)
}

/// One greedy round as stored in a solution file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoundRecord {
    pub edge: usize,
    pub gain: u64,
    pub votes: Vec<u64>,
}

impl From<&Round> for RoundRecord {
    fn from(r: &Round) -> Self {
        RoundRecord {
            edge: r.edge,
            gain: r.gain,
            votes: r.votes.clone(),
        }
    }
}

/// Solution file contents. Witnesses may be empty when none are claimed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    #[serde(default)]
    pub meta: Meta,
    #[serde(default)]
    pub rounds: Vec<RoundRecord>,
    pub selected: Vec<usize>,
    #[serde(default)]
    pub witnesses: Vec<Vec<usize>>,
}

impl SolutionFile {
    pub fn new(solution: &CoverSolution, meta: Meta) -> Self {
        SolutionFile {
            meta,
            rounds: solution.rounds.iter().map(RoundRecord::from).collect(),
            selected: solution.selected.clone(),
            witnesses: solution
                .witnesses
                .iter()
                .map(|t| t.edge_ids().to_vec())
                .collect(),
        }
    }
}

pub fn solution_to_string(solution: &SolutionFile) -> Result<String> {
    Ok(serde_json::to_string(solution)?)
}

pub fn solution_from_str(text: &str) -> Result<SolutionFile> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_solution(path: impl AsRef<Path>) -> Result<SolutionFile> {
    solution_from_str(&std::fs::read_to_string(path)?)
}

pub fn write_solution(solution: &SolutionFile, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, solution_to_string(solution)?)?;
    Ok(())
}
