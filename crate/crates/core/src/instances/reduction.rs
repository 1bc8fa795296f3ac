//! Set cover → MST cover reductions.
//!
//! Nodes are the copies `a_0..a_{c-1}` of the apex followed by the spine
//! `b_0..b_{q-1}`. Spine ("down") edges `(b_i, b_{i+1})` come first, then the
//! "up" edges `(a_t, b_i)` grouped by copy. Every agent ranks down edges 1.
//! Element agent `j` ranks `(a_t, b_i)` 1 if `j ∈ s_i` and 2 otherwise; the
//! last agent ranks every up edge 2. Any optimal cover then takes the whole
//! spine plus, at every copy, the up edges of an optimal set cover.

use std::ops::Range;

use serde_json::json;

use super::{Instance, Meta, SetCoverInput};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{exact_min_cover, exact_set_cover, Objective};
use crate::preferences::{Preference, Profile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMode {
    /// One apex node.
    SingleCopy,
    /// `h * (q - 1)` apex copies.
    Amplified { h: usize },
}

/// Edge-id bookkeeping for a reduction instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionLayout {
    pub copies: usize,
    pub set_count: usize,
}

impl ReductionLayout {
    pub fn new(sc: &SetCoverInput, mode: ReductionMode) -> Result<Self> {
        let q = sc.set_count();
        if q < 2 {
            return Err(Error::DegenerateReduction { q });
        }
        let copies = match mode {
            ReductionMode::SingleCopy => 1,
            ReductionMode::Amplified { h: 0 } => {
                return Err(Error::InvalidParameters("h must be at least 1".into()))
            }
            ReductionMode::Amplified { h } => h * (q - 1),
        };
        Ok(ReductionLayout {
            copies,
            set_count: q,
        })
    }

    pub fn node_count(&self) -> usize {
        self.copies + self.set_count
    }

    pub fn edge_count(&self) -> usize {
        self.set_count - 1 + self.copies * self.set_count
    }

    pub fn apex(&self, copy: usize) -> usize {
        copy
    }

    pub fn spine(&self, i: usize) -> usize {
        self.copies + i
    }

    pub fn down_edges(&self) -> Range<usize> {
        0..self.set_count - 1
    }

    /// Id of the up edge `(a_copy, b_set)`.
    pub fn up_edge(&self, copy: usize, set: usize) -> usize {
        self.set_count - 1 + copy * self.set_count + set
    }

    /// Sets chosen at `copy` by an edge selection: the `i` with
    /// `(a_copy, b_i)` selected.
    pub fn sets_at(&self, selected: &[usize], copy: usize) -> Vec<usize> {
        (0..self.set_count)
            .filter(|&i| selected.contains(&self.up_edge(copy, i)))
            .collect()
    }
}

pub fn reduce_set_cover(sc: &SetCoverInput, mode: ReductionMode) -> Result<Instance> {
    let layout = ReductionLayout::new(sc, mode)?;
    let q = layout.set_count;
    let mut edges = Vec::with_capacity(layout.edge_count());
    for i in 0..q - 1 {
        edges.push((layout.spine(i), layout.spine(i + 1)));
    }
    for t in 0..layout.copies {
        for i in 0..q {
            edges.push((layout.apex(t), layout.spine(i)));
        }
    }
    let graph = Graph::new(layout.node_count(), edges)?;

    let mut agents = Vec::with_capacity(sc.universe_size() + 1);
    for element in 0..sc.universe_size() {
        let mut ranks = vec![1u64; q - 1];
        for _ in 0..layout.copies {
            ranks.extend(sc.sets().iter().map(|s| {
                if s.binary_search(&element).is_ok() {
                    1
                } else {
                    2
                }
            }));
        }
        agents.push(Preference::new(ranks)?);
    }
    let mut spine_only = vec![1u64; q - 1];
    spine_only.resize(layout.edge_count(), 2);
    agents.push(Preference::new(spine_only)?);

    let mut meta = Meta::new();
    match mode {
        ReductionMode::SingleCopy => {
            meta.insert("generator".into(), json!("setcover-t1"));
        }
        ReductionMode::Amplified { h } => {
            meta.insert("generator".into(), json!("setcover-t2"));
            meta.insert("h".into(), json!(h));
        }
    }
    meta.insert("p".into(), json!(sc.universe_size()));
    meta.insert("q".into(), json!(q));
    meta.insert("sets".into(), json!(sc.sets()));
    Instance::new(graph, Profile::new(agents)?, None, meta)
}

/// Both sides of the optimum identity: the exact MST-cover optimum, and the
/// value `copies * |OPT(SC)| + (q - 1)` predicted from the exact set cover.
pub fn opt_identity_sides(sc: &SetCoverInput, mode: ReductionMode) -> Result<(usize, usize)> {
    let layout = ReductionLayout::new(sc, mode)?;
    let instance = reduce_set_cover(sc, mode)?;
    let cover = exact_min_cover(&instance.graph, &instance.profile, Objective::Cardinality)?;
    let set_cover = exact_set_cover(sc.universe_size(), sc.sets())?;
    Ok((
        cover.len(),
        layout.copies * set_cover.len() + layout.set_count - 1,
    ))
}

pub fn opt_identity_check(sc: &SetCoverInput, mode: ReductionMode) -> Result<bool> {
    let (actual, predicted) = opt_identity_sides(sc, mode)?;
    Ok(actual == predicted)
}
