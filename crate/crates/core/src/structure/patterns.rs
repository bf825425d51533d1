//! Induced-subgraph matching against small fixed patterns.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A small graph given by its edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pattern {
    pub name: &'static str,
    pub n: usize,
    pub edges: &'static [(usize, usize)],
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges).expect("pattern constants are valid graphs")
    }
}

pub const P4: Pattern = Pattern {
    name: "P4",
    n: 4,
    edges: &[(0, 1), (1, 2), (2, 3)],
};

pub const P3_P2: Pattern = Pattern {
    name: "P3+P2",
    n: 5,
    edges: &[(0, 1), (1, 2), (3, 4)],
};

/// Triangle `0-1-2` with two pendants `3`, `4` both attached at `0`.
pub const LTIMES: Pattern = Pattern {
    name: "ltimes",
    n: 5,
    edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)],
};

/// Diamond on `0..4` (degree-3 vertices `0`, `1`) with a pendant `4` at `0`.
pub const DART: Pattern = Pattern {
    name: "dart",
    n: 5,
    edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4)],
};

pub const P2_P2_P2: Pattern = Pattern {
    name: "P2+P2+P2",
    n: 6,
    edges: &[(0, 1), (2, 3), (4, 5)],
};

/// The induced-minimal graphs with `Z(G) < |G| - 2`.
///
/// Obtained by enumerating every graph on at most 6 vertices, computing `Z`
/// exactly, and keeping those whose proper induced subgraphs on at least 3
/// vertices all satisfy `Z(H) >= |H| - 2`; the result is exactly these five
/// isomorphism classes. The acceptance suite repeats that derivation.
pub const FORBIDDEN: [Pattern; 5] = [P4, P3_P2, LTIMES, DART, P2_P2_P2];

/// Finds an induced copy of `pattern` in `g`, returning the image of each
/// pattern vertex.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    // most constrained pattern vertices first
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(pattern.degree(u)));
    let mut image = vec![usize::MAX; k];
    if extend(g, pattern, &order, 0, &mut image, VertexSet::EMPTY) {
        Some(image)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    p: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    'candidates: for x in g.vertices() - used {
        if g.degree(x) < p.degree(u) {
            continue;
        }
        for &w in &order[..depth] {
            if p.has_edge(u, w) != g.has_edge(x, image[w]) {
                continue 'candidates;
            }
        }
        image[u] = x;
        if extend(g, p, order, depth + 1, image, used.with(x)) {
            return true;
        }
    }
    image[u] = usize::MAX;
    false
}

/// True when `g` contains none of the [`FORBIDDEN`] patterns as an induced
/// subgraph, which for `|G| >= 3` is equivalent to `Z(G) >= |G| - 2`.
pub fn forbidden_induced_test(g: &Graph) -> bool {
    first_forbidden(g).is_none()
}

/// The first forbidden pattern found in `g`, with its embedding.
pub fn first_forbidden(g: &Graph) -> Option<(&'static Pattern, Vec<usize>)> {
    FORBIDDEN
        .iter()
        .find_map(|p| find_induced(g, &p.graph()).map(|m| (p, m)))
}
