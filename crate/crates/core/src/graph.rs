//! Undirected multigraphs with stable edge ids, union-find, and Kruskal's
//! algorithm driven by an ordinal edge order.
//!
//! Every [`Graph`] is connected: the constructor rejects anything else, so the
//! solvers downstream never have to deal with spanning forests.

use crate::error::{Error, Result};
use crate::preferences::Preference;

/// Disjoint-set forest with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `x` and `y`. Returns `false` if they were already
    /// in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }
}

/// A connected undirected multigraph. Edge ids are positions in the edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        for (edge, &(u, v)) in edges.iter().enumerate() {
            if u >= node_count || v >= node_count {
                return Err(Error::NodeOutOfRange {
                    edge,
                    u,
                    v,
                    n: node_count,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { edge, node: u });
            }
        }
        let mut dsu = DisjointSets::new(node_count);
        let mut components = node_count;
        for &(u, v) in &edges {
            if dsu.union(u, v) {
                components -= 1;
            }
        }
        if components != 1 {
            return Err(Error::Disconnected);
        }
        Ok(Graph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// Number of edges in any spanning tree, `n - 1`.
    pub fn tree_size(&self) -> usize {
        self.node_count - 1
    }

    pub(crate) fn check_edge_ids(&self, ids: &[usize]) -> Result<()> {
        let m = self.edges.len();
        match ids.iter().find(|&&e| e >= m) {
            Some(&edge) => Err(Error::EdgeOutOfRange { edge, m }),
            None => Ok(()),
        }
    }
}

/// Edge ids of a spanning tree, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    edge_ids: Vec<usize>,
}

impl SpanningTree {
    /// Validates that `edge_ids` form a spanning tree of `graph`.
    pub fn new(graph: &Graph, mut edge_ids: Vec<usize>) -> Result<Self> {
        graph.check_edge_ids(&edge_ids)?;
        edge_ids.sort_unstable();
        if !is_spanning_tree(graph, &edge_ids) {
            return Err(Error::InvalidParameters(format!(
                "edges {edge_ids:?} do not form a spanning tree"
            )));
        }
        Ok(SpanningTree { edge_ids })
    }

    pub(crate) fn from_sorted(edge_ids: Vec<usize>) -> Self {
        debug_assert!(edge_ids.windows(2).all(|w| w[0] < w[1]));
        SpanningTree { edge_ids }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_ids.binary_search(&edge).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Edge ids on the unique tree path between nodes `from` and `to`.
    pub fn path(&self, graph: &Graph, from: usize, to: usize) -> Vec<usize> {
        let n = graph.node_count();
        let mut adjacency = vec![Vec::new(); n];
        for &e in &self.edge_ids {
            let (u, v) = graph.endpoints(e);
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }
        // BFS from `from`, remembering the edge used to reach each node.
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &(y, e) in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while let Some((prev, e)) = via[cur] {
            path.push(e);
            cur = prev;
        }
        path.reverse();
        path
    }
}

/// True iff `edge_ids` (treated as a set) has `n - 1` members, is acyclic and
/// spans every node. Ids must be valid for `graph`.
pub fn is_spanning_tree(graph: &Graph, edge_ids: &[usize]) -> bool {
    let mut ids = edge_ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != graph.tree_size() {
        return false;
    }
    let mut dsu = DisjointSets::new(graph.node_count());
    ids.iter().all(|&e| {
        let (u, v) = graph.endpoints(e);
        dsu.union(u, v)
    })
}

/// Kruskal's algorithm over the total preorder `order`: edges are scanned by
/// ascending rank, ties broken by ascending edge id, and an edge is kept when
/// it joins two components.
pub fn kruskal(graph: &Graph, order: &Preference) -> Result<SpanningTree> {
    if order.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            what: "edge order",
            expected: graph.edge_count(),
            found: order.len(),
        });
    }
    let mut ids: Vec<usize> = (0..graph.edge_count()).collect();
    ids.sort_by_key(|&e| (order.rank(e), e));
    Ok(kruskal_scan(graph, ids))
}

/// Runs the cycle test over edges in the given scan order.
pub(crate) fn kruskal_scan(graph: &Graph, scan: impl IntoIterator<Item = usize>) -> SpanningTree {
    let target = graph.tree_size();
    let mut dsu = DisjointSets::new(graph.node_count());
    let mut tree = Vec::with_capacity(target);
    for e in scan {
        if tree.len() == target {
            break;
        }
        let (u, v) = graph.endpoints(e);
        if dsu.union(u, v) {
            tree.push(e);
        }
    }
    debug_assert_eq!(tree.len(), target, "graph is connected by construction");
    tree.sort_unstable();
    SpanningTree::from_sorted(tree)
}
