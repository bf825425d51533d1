//! Complete bipartite subgraph (`K_{r,s}`) detection.

use crate::error::{argument, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A `K_{r,s}` subgraph: every vertex of `r_side` is adjacent to every
/// vertex of `s_side`. The sides need not be independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrsWitness {
    pub r_side: VertexSet,
    pub s_side: VertexSet,
}

impl KrsWitness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.r_side.is_disjoint(self.s_side)
            && self
                .r_side
                .iter()
                .all(|v| self.s_side.is_subset(g.neighbors(v)))
    }
}

/// Finds a `K_{r,s}` subgraph (not necessarily induced), if one exists.
///
/// Searches `r`-subsets in ascending order, carrying the common
/// neighborhood of the chosen vertices and pruning as soon as it drops
/// below `s`. For `r = 1` this is a max-degree test; for `r = 2` a
/// common-neighbor count over pairs.
pub fn contains_krs(g: &Graph, r: usize, s: usize) -> Result<Option<KrsWitness>> {
    if r == 0 || s == 0 {
        return Err(argument(format!("K_{{{r},{s}}} needs positive side sizes")));
    }
    if r + s > g.n() {
        return Err(argument(format!(
            "K_{{{r},{s}}} has {} vertices but the graph has {}",
            r + s,
            g.n()
        )));
    }
    let (r, s, swapped) = if r <= s { (r, s, false) } else { (s, r, true) };
    Ok(
        search(g, r, s, VertexSet::EMPTY, g.vertices(), 0).map(|(rs, common)| {
            let s_side: VertexSet = common.iter().take(s).collect();
            if swapped {
                KrsWitness {
                    r_side: s_side,
                    s_side: rs,
                }
            } else {
                KrsWitness { r_side: rs, s_side }
            }
        }),
    )
}

fn search(
    g: &Graph,
    r: usize,
    s: usize,
    chosen: VertexSet,
    common: VertexSet,
    from: usize,
) -> Option<(VertexSet, VertexSet)> {
    if chosen.len() == r {
        return Some((chosen, common));
    }
    let need = r - chosen.len();
    for v in from..g.n() {
        if g.n() - v < need {
            break;
        }
        let next = common & g.neighbors(v);
        if next.len() < s {
            continue;
        }
        if let Some(found) = search(g, r, s, chosen.with(v), next, v + 1) {
            return Some(found);
        }
    }
    None
}

/// Largest lower bound `n - r - s + 1` on the zero forcing number of the
/// complement obtainable from a missing `K_{r,s}` subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrsBound {
    pub bound: usize,
    /// The missing `(r, s)` that produced `bound`; `None` when every
    /// admissible `K_{r,s}` is present and `bound` is the trivial 1.
    pub pair: Option<(usize, usize)>,
}

/// Scans `t = r + s` upward and stops at the first `t` for which some
/// `K_{r,s}` (`r <= s`) is absent, trying the most balanced split first.
pub fn krs_free_bound(g: &Graph) -> KrsBound {
    let n = g.n();
    for t in 2..=n {
        for r in (1..=t / 2).rev() {
            let s = t - r;
            if matches!(contains_krs(g, r, s), Ok(None)) {
                return KrsBound {
                    bound: n - t + 1,
                    pair: Some((r, s)),
                };
            }
        }
    }
    KrsBound {
        bound: 1,
        pair: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_is_k22() {
        let w = contains_krs(&Graph::cycle(4).unwrap(), 2, 2)
            .unwrap()
            .unwrap();
        assert!(w.is_valid_in(&Graph::cycle(4).unwrap()));
        assert_eq!(w.r_side, [0, 2].iter().collect());
        assert_eq!(w.s_side, [1, 3].iter().collect());
    }

    #[test]
    fn star_is_k15() {
        let g = Graph::star(6).unwrap();
        let w = contains_krs(&g, 1, 5).unwrap().unwrap();
        assert_eq!(w.r_side, VertexSet::singleton(0));
        assert_eq!(w.s_side, [1, 2, 3, 4, 5].iter().collect());
        let w = contains_krs(&g, 5, 1).unwrap().unwrap();
        assert_eq!(w.s_side, VertexSet::singleton(0));
        assert!(contains_krs(&g, 2, 2).unwrap().is_none());
    }

    #[test]
    fn argument_errors() {
        let g = Graph::path(4).unwrap();
        assert!(contains_krs(&g, 2, 3).is_err());
        assert!(contains_krs(&g, 0, 3).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = krs_free_bound(&Graph::path(5).unwrap());
        assert_eq!(
            b,
            KrsBound {
                bound: 2,
                pair: Some((2, 2))
            }
        );
        // bare C4: K_{2,2} present, K_{1,3} missing
        let b = krs_free_bound(&Graph::cycle(4).unwrap());
        assert_eq!(
            b,
            KrsBound {
                bound: 1,
                pair: Some((1, 3))
            }
        );
        let b = krs_free_bound(&Graph::complete(4).unwrap());
        assert_eq!(
            b,
            KrsBound {
                bound: 1,
                pair: None
            }
        );
        let b = krs_free_bound(&Graph::empty(5).unwrap());
        assert_eq!(
            b,
            KrsBound {
                bound: 4,
                pair: Some((1, 1))
            }
        );
    }
}
