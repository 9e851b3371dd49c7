//! The directed graph associated to an evolution algebra and its
//! combinatorial invariants.
//!
//! There is an edge `i -> j` exactly when `e_j` occurs in `e_i^2`. Vertices are
//! `0..n`; every vertex set and edge list is returned in ascending order.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// Default cap on the vertex count for hereditary-subset enumeration.
pub const DEFAULT_HEREDITARY_BOUND: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    adj: Vec<Vec<usize>>,
}

/// Iterated sink removal: `strata[k]` holds the `(k+1)`-sinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkStrata {
    pub strata: Vec<VertexSet>,
    pub residue: VertexSet,
}

impl SinkStrata {
    /// Union of the first `k` strata.
    pub fn union_up_to(&self, k: usize) -> VertexSet {
        self.strata.iter().take(k).flatten().copied().collect()
    }

    pub fn stratified(&self) -> VertexSet {
        self.union_up_to(self.strata.len())
    }
}

impl DiGraph {
    /// Graph on `n` vertices with the given edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); n];
        for (s, t) in edges {
            if s >= n || t >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.max(t) + 1,
                });
            }
            adj[s].insert(t);
        }
        Ok(DiGraph {
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn from_algebra(a: &EvolutionAlgebra) -> Self {
        let m = a.structure_matrix();
        let n = a.dim();
        let adj = (0..n)
            .map(|i| (0..n).filter(|&j| !num_traits::Zero::is_zero(&m[(j, i)])).collect())
            .collect();
        DiGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        self.adj[s].binary_search(&t).is_ok()
    }

    /// All edges sorted by `(source, target)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |&t| (s, t)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// Same vertices, every edge reversed.
    pub fn reversed(&self) -> DiGraph {
        let edges = self.edges().into_iter().map(|(s, t)| (t, s));
        DiGraph::from_edges(self.vertex_count(), edges).expect("edges in range")
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_sinkless(&self) -> bool {
        self.adj.iter().all(|ts| !ts.is_empty())
    }

    /// Forward-reachable closure of `s`; `s` itself is included.
    pub fn reach(&self, s: &VertexSet) -> VertexSet {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue: VecDeque<usize> = s.iter().copied().collect();
        for &v in s {
            seen[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.vertex_count()).filter(|&v| seen[v]).collect()
    }

    pub fn reach_vertex(&self, v: usize) -> VertexSet {
        self.reach(&std::iter::once(v).collect())
    }

    pub fn hereditary_closure(&self, s: &VertexSet) -> VertexSet {
        self.reach(s)
    }

    pub fn is_hereditary(&self, s: &VertexSet) -> bool {
        s.iter().all(|&v| self.adj[v].iter().all(|w| s.contains(w)))
    }

    /// Reach sets of every vertex as bitmasks. Requires at most 64 vertices.
    pub(crate) fn reach_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64, "bitmask form needs at most 64 vertices");
        (0..self.vertex_count())
            .map(|v| self.reach_vertex(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Every hereditary subset, as unions of vertex closures, ordered by size
    /// and then lexicographically.
    pub fn hereditary_subsets(&self, bound: usize) -> Result<Vec<VertexSet>> {
        let n = self.vertex_count();
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "hereditary subset enumeration",
                limit: bound,
                actual: n,
            });
        }
        if n > 63 {
            return Err(Error::BoundExceeded {
                what: "hereditary subset enumeration",
                limit: 63,
                actual: n,
            });
        }
        // Closed sets form a union lattice generated by the vertex closures.
        let closures = self.reach_masks();
        let mut found: HashSet<u64> = HashSet::from([0]);
        let mut frontier = vec![0u64];
        while let Some(m) = frontier.pop() {
            for &c in &closures {
                let u = m | c;
                if found.insert(u) {
                    frontier.push(u);
                }
            }
        }
        let mut sets: Vec<VertexSet> = found.into_iter().map(|m| mask_to_set(m, n)).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(sets)
    }

    /// Any two vertices reach a common vertex.
    pub fn is_downward_directed(&self) -> bool {
        let n = self.vertex_count();
        let reach: Vec<Vec<bool>> = (0..n)
            .map(|v| {
                let r = self.reach_vertex(v);
                (0..n).map(|w| r.contains(&w)).collect()
            })
            .collect();
        (0..n).all(|u| (u + 1..n).all(|v| (0..n).any(|z| reach[u][z] && reach[v][z])))
    }

    /// Connected components of the underlying undirected graph; each block is
    /// sorted and blocks are ordered by their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut undirected = vec![Vec::new(); n];
        for (s, t) in self.edges() {
            undirected[s].push(t);
            undirected[t].push(s);
        }
        let mut comp = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = VertexSet::new();
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                block.insert(v);
                for &w in &undirected[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            blocks.push(block);
        }
        blocks
    }

    /// Repeatedly strips the current sinks until the remaining graph is
    /// sinkless.
    pub fn sink_strata(&self) -> SinkStrata {
        let n = self.vertex_count();
        let mut alive = vec![true; n];
        let mut strata = Vec::new();
        loop {
            let layer: VertexSet = (0..n)
                .filter(|&v| alive[v] && self.adj[v].iter().all(|&w| !alive[w]))
                .collect();
            if layer.is_empty() {
                break;
            }
            for &v in &layer {
                alive[v] = false;
            }
            strata.push(layer);
        }
        SinkStrata {
            strata,
            residue: (0..n).filter(|&v| alive[v]).collect(),
        }
    }

    /// `E / S`: the induced subgraph on the vertices outside `s`, renumbered in
    /// ascending order of the surviving vertices.
    pub fn quotient(&self, s: &VertexSet) -> DiGraph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !s.contains(v)).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`, renumbered by position in `keep`.
    pub fn induced(&self, keep: &[usize]) -> DiGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect()
            })
            .collect();
        DiGraph { adj }
    }

    /// Every vertex carries exactly one edge, a loop, and nothing else touches
    /// it.
    pub fn is_isolated_loops(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for (_, t) in self.edges() {
            indeg[t] += 1;
        }
        (0..n).all(|v| self.adj[v] == [v] && indeg[v] == 1)
    }

    /// Deterministic Graphviz text: vertices in basis order, edges sorted.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("digraph E {\n");
        for l in labels.iter().take(self.vertex_count()) {
            let _ = writeln!(out, "  {};", dot_id(l));
        }
        for (s, t) in self.edges() {
            let _ = writeln!(out, "  {} -> {};", dot_id(&labels[s]), dot_id(&labels[t]));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub(crate) fn mask_to_set(m: u64, n: usize) -> VertexSet {
    (0..n).filter(|&i| m >> i & 1 == 1).collect()
}
