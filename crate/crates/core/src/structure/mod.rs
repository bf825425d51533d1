//! Family recognition and structural detectors: complete bipartite
//! subgraphs, forbidden induced subgraphs, and the tree / unicyclic /
//! cactus / book decompositions the complement predictions are stated over.

mod krs;
mod patterns;

pub use krs::{contains_krs, krs_free_bound, KrsBound, KrsWitness};
pub use patterns::{
    find_induced, first_forbidden, forbidden_induced_test, Pattern, DART, FORBIDDEN, LTIMES,
    P2_P2_P2, P3_P2, P4,
};

use crate::error::{argument, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The unique cycle of a unicyclic graph and the trees hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicDecomposition {
    /// Cycle vertices in cyclic order, starting at the least vertex and
    /// continuing towards its smaller cycle neighbor.
    pub cycle: Vec<usize>,
    /// `forests[i]` holds the vertices hanging off `cycle[i]`, excluding it.
    pub forests: Vec<VertexSet>,
    /// `m[i] = |forests[i]|`.
    pub m: Vec<usize>,
    pub m_max: usize,
}

impl UnicyclicDecomposition {
    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    pub fn n(&self) -> usize {
        self.cycle.len() + self.m.iter().sum::<usize>()
    }
}

/// Decomposes a connected graph with exactly as many edges as vertices.
pub fn unicyclic_decomposition(g: &Graph) -> Result<UnicyclicDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected("unicyclic graphs are connected".into()));
    }
    if g.edge_count() != g.n() {
        return Err(argument(format!(
            "not unicyclic: {} edges on {} vertices",
            g.edge_count(),
            g.n()
        )));
    }
    // strip leaves until only the cycle is left
    let mut core = g.vertices();
    loop {
        let leaves: VertexSet = core
            .iter()
            .filter(|&v| (g.neighbors(v) & core).len() <= 1)
            .collect();
        if leaves.is_empty() {
            break;
        }
        core = core - leaves;
    }
    let start = core.first().ok_or_else(|| argument("no cycle found"))?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & core)
        .first()
        .ok_or_else(|| argument("no cycle found"))?;
    while cur != start {
        cycle.push(cur);
        let next = (g.neighbors(cur) & core).without(prev);
        prev = cur;
        cur = next.first().ok_or_else(|| argument("cycle walk broke"))?;
    }
    let off = g.vertices() - core;
    let forests: Vec<VertexSet> = cycle
        .iter()
        .map(|&v| reach_within(g, v, off.with(v)).without(v))
        .collect();
    let m: Vec<usize> = forests.iter().map(|f| f.len()).collect();
    let m_max = m.iter().copied().max().unwrap_or(0);
    Ok(UnicyclicDecomposition {
        cycle,
        forests,
        m,
        m_max,
    })
}

fn reach_within(g: &Graph, start: usize, allowed: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next | (g.neighbors(v) & allowed);
        }
        frontier = next - seen;
        seen = seen | next;
    }
    seen
}

/// Cycle blocks of a cactus with at least two cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusDecomposition {
    /// Each cycle in cyclic order, ordered by least vertex.
    pub cycles: Vec<Vec<usize>>,
    /// A star plus a matching of at least two edges among its leaves.
    pub is_book: bool,
}

/// A 4-cycle block of a graph and how the rest of the graph attaches to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C4Context {
    /// `(a, b, c, d)` in cyclic order.
    pub cycle: [usize; 4],
    pub off_cycle_neighbors: [VertexSet; 4],
    /// Cycle vertices of degree exactly 2 in the whole graph.
    pub degree2_count: usize,
    /// Two consecutive cycle vertices both have a neighbor off the cycle.
    pub adjacent_attached_pair: bool,
}

impl C4Context {
    /// Whether the degree-2 cycle vertices are consecutive on the cycle
    /// (meaningful when `degree2_count == 2`).
    pub fn degree2_adjacent(&self) -> bool {
        let bare: Vec<usize> = (0..4)
            .filter(|&i| self.off_cycle_neighbors[i].is_empty())
            .collect();
        bare.len() == 2 && (bare[1] - bare[0] == 1 || bare[1] - bare[0] == 3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Tree { is_star: bool },
    Unicyclic(UnicyclicDecomposition),
    Cactus(CactusDecomposition),
    BipartiteK22Free,
    Other,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Tree { is_star: true } => "star",
            Family::Tree { is_star: false } => "tree",
            Family::Unicyclic(_) => "unicyclic",
            Family::Cactus(d) if d.is_book => "book",
            Family::Cactus(_) => "cactus",
            Family::BipartiteK22Free => "bipartite_k22_free",
            Family::Other => "other",
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Tree { .. } => FamilyKind::Tree,
            Family::Unicyclic(_) => FamilyKind::Unicyclic,
            Family::Cactus(_) => FamilyKind::Cactus,
            Family::BipartiteK22Free => FamilyKind::BipartiteK22Free,
            Family::Other => FamilyKind::Other,
        }
    }
}

/// [`Family`] without its attached decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Tree,
    Unicyclic,
    Cactus,
    BipartiteK22Free,
    Other,
}

/// Family of a graph under the precedence
/// tree > unicyclic > cactus > K_{2,2}-free bipartite > other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    pub connected: bool,
    /// Contains `C4 = K_{2,2}` as a (not necessarily induced) subgraph.
    pub contains_c4: bool,
}

pub fn classify(g: &Graph) -> Classification {
    let connected = g.is_connected();
    let contains_c4 = g.n() >= 4 && matches!(contains_krs(g, 2, 2), Ok(Some(_)));
    let family = if !connected {
        Family::Other
    } else if g.edge_count() + 1 == g.n() {
        Family::Tree {
            is_star: g.max_degree() + 1 == g.n() || g.n() <= 2,
        }
    } else if g.edge_count() == g.n() {
        match unicyclic_decomposition(g) {
            Ok(d) => Family::Unicyclic(d),
            Err(_) => Family::Other,
        }
    } else if let Some(d) = cactus_decomposition(g) {
        Family::Cactus(d)
    } else if g.is_bipartite() && !contains_c4 {
        Family::BipartiteK22Free
    } else {
        Family::Other
    };
    Classification {
        family,
        connected,
        contains_c4,
    }
}

fn cactus_decomposition(g: &Graph) -> Option<CactusDecomposition> {
    let blocks = g.blocks().ok()?;
    if !blocks.is_cactus(g) {
        return None;
    }
    let mut cycles: Vec<Vec<usize>> = blocks.cycle_blocks(g).map(|b| cyclic_order(g, b)).collect();
    cycles.sort();
    Some(CactusDecomposition {
        cycles,
        is_book: is_book(g),
    })
}

/// Vertices of a cycle block in cyclic order from its least vertex.
fn cyclic_order(g: &Graph, block: VertexSet) -> Vec<usize> {
    let start = block.first().unwrap_or(0);
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & block).first().unwrap_or(start);
    while cur != start && order.len() < block.len() {
        order.push(cur);
        let next = (g.neighbors(cur) & block).without(prev);
        prev = cur;
        cur = next.first().unwrap_or(start);
    }
    order
}

/// Some vertex is adjacent to all others and the remaining edges form a
/// matching with at least two edges.
pub fn is_book(g: &Graph) -> bool {
    let n = g.n();
    (0..n).filter(|&h| g.degree(h) + 1 == n).any(|h| {
        let rest = g.vertices().without(h);
        let matched = rest.iter().all(|v| (g.neighbors(v) & rest).len() <= 1);
        matched && g.edges_within(rest) >= 2
    })
}

/// Every 4-cycle block of `g` with its attachment data. Empty for
/// disconnected graphs.
pub fn c4_contexts(g: &Graph) -> Vec<C4Context> {
    let Ok(blocks) = g.blocks() else {
        return Vec::new();
    };
    blocks
        .blocks
        .iter()
        .filter(|b| b.len() == 4 && g.edges_within(**b) == 4)
        .map(|&b| {
            let order = cyclic_order(g, b);
            let cycle = [order[0], order[1], order[2], order[3]];
            let off = cycle.map(|v| g.neighbors(v) - b);
            C4Context {
                cycle,
                off_cycle_neighbors: off,
                degree2_count: cycle.iter().filter(|&&v| g.degree(v) == 2).count(),
                adjacent_attached_pair: (0..4)
                    .any(|i| !off[i].is_empty() && !off[(i + 1) % 4].is_empty()),
            }
        })
        .collect()
}

/// Checks the structural consequences of the cactus property:
///
/// (a) if `v` on cycle `C` and `w` on cycle `C'` are adjacent, no other pair
///     `x` on `C`, `y` on `C'` (both outside `{v, w}`) is adjacent;
/// (b) a cycle vertex not on another cycle `C'` has at most one neighbor on `C'`;
/// (c) no off-cycle vertex has two neighbors on the same cycle;
/// (d) a cycle vertex has at most one neighbor in each hanging tree
///     (component of the graph after deleting all cycle vertices).
///
/// Errors unless `g` is a connected graph whose blocks are edges and cycles.
pub fn cactus_observations_check(g: &Graph) -> Result<bool> {
    let blocks = g.blocks()?;
    if !blocks.is_cactus(g) {
        return Err(argument(
            "not a cactus: some block is neither an edge nor a cycle",
        ));
    }
    let cycles: Vec<VertexSet> = blocks.cycle_blocks(g).collect();
    let on_cycle = cycles.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c);

    for (i, &c) in cycles.iter().enumerate() {
        for (j, &d) in cycles.iter().enumerate() {
            if i == j {
                continue;
            }
            for v in c {
                // (b)
                if !d.contains(v) && (g.neighbors(v) & d).len() > 1 {
                    return Ok(false);
                }
                // (a)
                for w in g.neighbors(v) & d {
                    let others = VertexSet::EMPTY.with(v).with(w);
                    for x in c - others {
                        if !((g.neighbors(x) & d) - others).without(x).is_empty() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        // (c)
        for t in g.vertices() - on_cycle {
            if (g.neighbors(t) & c).len() > 1 {
                return Ok(false);
            }
        }
    }

    // (d)
    let off = g.vertices() - on_cycle;
    let mut left = off;
    while let Some(t) = left.first() {
        let tree = reach_within(g, t, off);
        left = left - tree;
        for v in on_cycle {
            if (g.neighbors(v) & tree).len() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
