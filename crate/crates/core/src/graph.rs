//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each vertex `v` owns one adjacency word whose set bits are `N(v)`, so
//! neighborhood unions, intersections and complements are single machine
//! operations.

use crate::error::{argument, Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(argument(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(argument(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(argument(format!("loop at vertex {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry, loops and
    /// out-of-range bits.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let g = Graph::empty(n)?;
        let mask = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(argument(format!("row {v} has bits at positions >= {n}")));
            }
            if (row >> v) & 1 == 1 {
                return Err(argument(format!("loop at vertex {v}")));
            }
            for u in VertexSet(row) {
                if (rows[u] >> v) & 1 == 0 {
                    return Err(argument(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph {
            adj: rows.to_vec(),
            ..g
        })
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(argument(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.neighbors(v) & s).len())
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending original order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(argument("induced subgraph of the empty vertex set"));
        }
        if !s.is_subset(self.vertices()) {
            return Err(argument(format!(
                "vertex set {s} is not contained in 0..{}",
                self.n
            )));
        }
        let order = s.to_vec();
        let mut g = Graph::empty(order.len())?;
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Copy of the graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(argument(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        g.remove_edge_unchecked(u, v);
        Ok(g)
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(argument(format!("({u}, {v}) is not a valid vertex pair")));
        }
        let mut g = self.clone();
        g.add_edge_unchecked(u, v);
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (v, &row) in other.adj.iter().enumerate() {
            g.adj[self.n + v] = row << self.n;
        }
        Ok(g)
    }

    /// Vertices reachable from `start`.
    pub fn reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.neighbors(v);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut parts = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.first() {
            let part = self.reach(v);
            left = left - part;
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertices()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [0u8; MAX_VERTICES];
        let mut seen = VertexSet::EMPTY;
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen.contains(u) {
                        seen.insert(u);
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Block decomposition of a connected graph.
    pub fn blocks(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::Disconnected(
                "block decomposition requires a connected graph; split by component first".into(),
            ));
        }
        let mut state = BlockSearch {
            g: self,
            disc: [usize::MAX; MAX_VERTICES],
            low: [0; MAX_VERTICES],
            timer: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
            cut_vertices: VertexSet::EMPTY,
        };
        state.visit(0, usize::MAX);
        let mut blocks = state.blocks;
        blocks.sort_by(|a, b| a.lex_cmp(*b));
        Ok(BlockDecomposition {
            blocks,
            cut_vertices: state.cut_vertices,
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Maximal 2-connected subgraphs and bridges of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, in lexicographic order.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Blocks whose induced subgraph is a cycle (`|E| = |V| >= 3`).
    pub fn cycle_blocks<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexSet> + 'a {
        self.blocks
            .iter()
            .copied()
            .filter(move |b| b.len() >= 3 && g.edges_within(*b) == b.len())
    }

    /// True when every block is a single edge or a cycle.
    pub fn is_cactus(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| {
            let e = g.edges_within(*b);
            (b.len() == 2 && e == 1) || (b.len() >= 3 && e == b.len())
        })
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: [usize; MAX_VERTICES],
    low: [usize; MAX_VERTICES],
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
}

impl BlockSearch<'_> {
    // Hopcroft-Tarjan; recursion depth is bounded by the 64-vertex cap.
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0;
        for u in self.g.neighbors(v) {
            if self.disc[u] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, u));
                self.visit(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    if parent != usize::MAX || children > 1 {
                        self.cut_vertices.insert(v);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if u != parent && self.disc[u] < self.disc[v] {
                self.edge_stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
        if parent == usize::MAX && children == 0 {
            // isolated root: the single-vertex graph
            self.blocks.push(VertexSet::singleton(v));
        }
    }
}
