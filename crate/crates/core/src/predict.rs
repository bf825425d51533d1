//! Closed-form values and bounds for the zero forcing number of the
//! complement of a connected graph, keyed by the graph's family.

use std::fmt;

use crate::error::{argument, Error, Result};
use crate::forcing::zero_forcing_number;
use crate::graph::Graph;
use crate::structure::{
    c4_contexts, classify, forbidden_induced_test, krs_free_bound, unicyclic_decomposition, Family,
    UnicyclicDecomposition,
};

/// The rule that produced a [`Prediction`]. The string forms are part of
/// the report schema and do not change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Tree,
    Star,
    BipartiteK22Free,
    UniN2,
    UniGirthNot4,
    UniC4Case1,
    UniC4Case2a,
    UniC4Case2b,
    UniC4Case3,
    UniSmallN,
    CactusBook,
    CactusC4Adj,
    CactusDefault,
    GenericBounds,
}

impl Rule {
    pub const ALL: [Rule; 14] = [
        Rule::Tree,
        Rule::Star,
        Rule::BipartiteK22Free,
        Rule::UniN2,
        Rule::UniGirthNot4,
        Rule::UniC4Case1,
        Rule::UniC4Case2a,
        Rule::UniC4Case2b,
        Rule::UniC4Case3,
        Rule::UniSmallN,
        Rule::CactusBook,
        Rule::CactusC4Adj,
        Rule::CactusDefault,
        Rule::GenericBounds,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Tree => "TREE",
            Rule::Star => "STAR",
            Rule::BipartiteK22Free => "BIPARTITE_K22FREE",
            Rule::UniN2 => "UNI_N2",
            Rule::UniGirthNot4 => "UNI_GIRTH_NOT4",
            Rule::UniC4Case1 => "UNI_C4_CASE1",
            Rule::UniC4Case2a => "UNI_C4_CASE2A",
            Rule::UniC4Case2b => "UNI_C4_CASE2B",
            Rule::UniC4Case3 => "UNI_C4_CASE3",
            Rule::UniSmallN => "UNI_SMALL_N",
            Rule::CactusBook => "CACTUS_BOOK",
            Rule::CactusC4Adj => "CACTUS_C4_ADJ",
            Rule::CactusDefault => "CACTUS_DEFAULT",
            Rule::GenericBounds => "GENERIC_BOUNDS",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `lo <= Z(complement) <= hi`; exact (`lo == hi`) for every rule except
/// [`Rule::GenericBounds`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub lo: usize,
    pub hi: usize,
    pub rule: Rule,
    pub notes: String,
}

impl Prediction {
    fn exact(value: usize, rule: Rule, notes: impl Into<String>) -> Self {
        Prediction {
            lo: value,
            hi: value,
            rule,
            notes: notes.into(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.rule != Rule::GenericBounds
    }

    pub fn value(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

/// Predicts `Z` of the complement of a connected graph on at least 3 vertices.
pub fn predict_complement_zf(g: &Graph) -> Result<Prediction> {
    let n = g.n();
    if n < 3 {
        return Err(argument(format!("prediction needs n >= 3, got {n}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "predictions cover connected graphs; solve each component of the input exactly".into(),
        ));
    }
    let class = classify(g);
    Ok(match class.family {
        Family::Tree { is_star: true } => Prediction::exact(
            n - 1,
            Rule::Star,
            "star K_{1,n-1}: complement is K_{n-1} plus an isolated vertex",
        ),
        Family::Tree { is_star: false } => Prediction::exact(
            n - 3,
            Rule::Tree,
            "non-star tree: K_{2,2}-free lower bound met by an induced P4",
        ),
        Family::Unicyclic(ref d) => predict_unicyclic(g, d),
        Family::Cactus(ref d) => {
            if d.is_book {
                Prediction::exact(
                    n - 2,
                    Rule::CactusBook,
                    "book: triangles sharing one hub vertex",
                )
            } else if c4_contexts(g).iter().any(|c| c.adjacent_attached_pair) {
                Prediction::exact(
                    n - 4,
                    Rule::CactusC4Adj,
                    "cactus with a 4-cycle having two adjacent vertices with off-cycle neighbors",
                )
            } else {
                Prediction::exact(
                    n - 3,
                    Rule::CactusDefault,
                    "cactus with at least two cycles, no other case applies",
                )
            }
        }
        Family::BipartiteK22Free => Prediction::exact(
            n - 3,
            Rule::BipartiteK22Free,
            "connected K_{2,2}-free bipartite non-star graph",
        ),
        Family::Other => generic_bounds(g),
    })
}

fn predict_unicyclic(g: &Graph, d: &UnicyclicDecomposition) -> Prediction {
    let n = g.n();
    match n {
        3 => return Prediction::exact(3, Rule::UniSmallN, "C3: complement is edgeless"),
        4 => {
            let note = if d.girth() == 4 {
                "C4: complement is 2K2"
            } else {
                "paw: complement is P3 plus an isolated vertex"
            };
            return Prediction::exact(2, Rule::UniSmallN, note);
        }
        _ => {}
    }
    if g.max_degree() + 1 == n {
        return Prediction::exact(
            n - 2,
            Rule::UniN2,
            "K_{1,n-1}+e: complement is (K_{n-1} - e) plus an isolated vertex",
        );
    }
    if d.girth() != 4 {
        return Prediction::exact(
            n - 3,
            Rule::UniGirthNot4,
            "unicyclic with girth other than 4",
        );
    }
    let ctx = c4_contexts(g)
        .into_iter()
        .next()
        .expect("a unicyclic graph of girth 4 has a 4-cycle block");
    match ctx.degree2_count {
        0 | 1 => Prediction::exact(
            n - 4,
            Rule::UniC4Case1,
            "4-cycle with at most one degree-2 vertex",
        ),
        2 if ctx.degree2_adjacent() => Prediction::exact(
            n - 4,
            Rule::UniC4Case2a,
            "4-cycle with two adjacent degree-2 vertices",
        ),
        2 => Prediction::exact(
            n - 3,
            Rule::UniC4Case2b,
            "4-cycle with two opposite degree-2 vertices",
        ),
        _ => Prediction::exact(
            n - 3,
            Rule::UniC4Case3,
            "4-cycle with three degree-2 vertices",
        ),
    }
}

fn generic_bounds(g: &Graph) -> Prediction {
    let n = g.n();
    let comp = g.complement();
    let krs = krs_free_bound(g);
    let mut lo = krs.bound.max(comp.min_degree()).max(1);
    let mut notes = vec![match krs.pair {
        Some((r, s)) => format!("no K_{{{r},{s}}} subgraph gives >= {}", krs.bound),
        None => "every admissible K_{r,s} is present".to_string(),
    }];
    notes.push(format!("min degree of complement {}", comp.min_degree()));
    // Z(H) = |H| only for edgeless H
    let mut hi = if comp.edge_count() == 0 { n } else { n - 1 };
    if comp.is_connected() {
        hi = n - 3;
        notes.push("graph and complement both connected gives <= n-3".into());
    }
    if forbidden_induced_test(&comp) {
        lo = lo.max(n - 2);
        notes.push("complement has no forbidden induced subgraph gives >= n-2".into());
    } else {
        hi = hi.min(n - 3);
        notes.push("complement has a forbidden induced subgraph gives <= n-3".into());
    }
    Prediction {
        lo,
        hi,
        rule: Rule::GenericBounds,
        notes: notes.join("; "),
    }
}

/// `|G| - m_max - 3`, a lower bound on `Z` of the complement obtained from
/// the minimum degree of the complement.
pub fn unicyclic_forest_bound(d: &UnicyclicDecomposition) -> usize {
    (d.girth() + d.m.iter().sum::<usize>()).saturating_sub(d.m_max + 3)
}

/// `Z` of the complement of the sunlet on `2n` vertices (an `n`-cycle with
/// one pendant at every cycle vertex).
pub fn sunlet_prediction(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(argument(format!("sunlet base cycle needs n >= 3, got {n}"))),
        4 => Ok(2 * n - 4),
        _ => Ok(2 * n - 3),
    }
}

/// Which criterion decided [`unicyclic_self_equality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfEqualityClause {
    /// `n = 4`: C4 or the paw.
    OrderFour,
    /// `n = 5`: C5, C4 plus a pendant, a triangle with pendants at two
    /// vertices, or a triangle with a two-vertex path hanging off one vertex.
    OrderFive,
    /// `n = 6`: C4 with pendants at two consecutive cycle vertices.
    SixVertexC4AdjacentPendants,
    /// `n >= 6`: complement connected and `Z(U) = Z(complement) = n - 3`,
    /// with `Z(U)` solved exactly and `Z(complement)` predicted.
    ExactNMinus3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfEquality {
    pub holds: bool,
    pub clause: SelfEqualityClause,
}

/// Decides whether a unicyclic graph `U` on `n >= 4` vertices has
/// `Z(U) = Z(complement of U)`.
pub fn unicyclic_self_equality(g: &Graph) -> Result<SelfEquality> {
    let n = g.n();
    if n < 4 {
        return Err(argument(format!("self-equality needs n >= 4, got {n}")));
    }
    let d = unicyclic_decomposition(g)?;
    let mut m_sorted = d.m.clone();
    m_sorted.sort_unstable();
    let pendants_only = d.forests.iter().all(|f| f.iter().all(|v| g.degree(v) == 1));

    match n {
        4 => Ok(SelfEquality {
            holds: true,
            clause: SelfEqualityClause::OrderFour,
        }),
        5 => {
            // Exhaustive search at n = 5 finds exactly these four classes;
            // the cricket (two pendants at one triangle vertex) fails.
            let holds = match d.girth() {
                3 => (m_sorted == [0, 1, 1]) || (m_sorted == [0, 0, 2] && !pendants_only),
                _ => true,
            };
            Ok(SelfEquality {
                holds,
                clause: SelfEqualityClause::OrderFive,
            })
        }
        _ => {
            if n == 6 && d.girth() == 4 && pendants_only && m_sorted == [0, 0, 1, 1] {
                let i = d.m.iter().position(|&m| m == 1).unwrap_or(0);
                if d.m[(i + 1) % 4] == 1 || d.m[(i + 3) % 4] == 1 {
                    return Ok(SelfEquality {
                        holds: true,
                        clause: SelfEqualityClause::SixVertexC4AdjacentPendants,
                    });
                }
            }
            let holds = g.complement().is_connected()
                && zero_forcing_number(g).value == n - 3
                && predict_complement_zf(g)?.value() == Some(n - 3);
            Ok(SelfEquality {
                holds,
                clause: SelfEqualityClause::ExactNMinus3,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn c4_with_pendants(at: &[usize]) -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        for (i, &v) in at.iter().enumerate() {
            edges.push((v, 4 + i));
        }
        g(4 + at.len(), &edges)
    }

    fn check(graph: &Graph, value: usize, rule: Rule) {
        let p = predict_complement_zf(graph).unwrap();
        assert_eq!((p.lo, p.hi, p.rule), (value, value, rule), "{graph:?}");
    }

    #[test]
    fn family_examples() {
        check(&Graph::path(5).unwrap(), 2, Rule::Tree);
        check(&Graph::star(6).unwrap(), 5, Rule::Star);
        check(
            &Graph::star(6).unwrap().with_edge(1, 2).unwrap(),
            4,
            Rule::UniN2,
        );
        check(&Graph::cycle(7).unwrap(), 4, Rule::UniGirthNot4);
        check(&c4_with_pendants(&[0, 1, 2, 3]), 4, Rule::UniC4Case1);
        check(&c4_with_pendants(&[0, 1, 2]), 3, Rule::UniC4Case1);
        check(&c4_with_pendants(&[0, 1]), 2, Rule::UniC4Case2a);
        check(&c4_with_pendants(&[0, 2]), 3, Rule::UniC4Case2b);
        check(&c4_with_pendants(&[0]), 2, Rule::UniC4Case3);
        check(&Graph::cycle(3).unwrap(), 3, Rule::UniSmallN);
        check(&Graph::cycle(4).unwrap(), 2, Rule::UniSmallN);
        check(
            &g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
            3,
            Rule::CactusBook,
        );
    }

    #[test]
    fn cactus_examples() {
        // C4 0-1-2-3, triangle 0-4-5 hung at 0, pendant 6 at 1
        let adj = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (0, 5),
                (1, 6),
            ],
        );
        check(&adj, 3, Rule::CactusC4Adj);
        // triangles 0-1-2 and 3-4-5 joined by the bridge 2-3
        let chain = g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        check(&chain, 3, Rule::CactusDefault);
    }

    #[test]
    fn generic_is_an_interval() {
        // the complement of K5 is edgeless, so Z = 5
        let p = predict_complement_zf(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(p.rule, Rule::GenericBounds);
        assert!(p.lo <= 5 && 5 <= p.hi, "{p:?}");
        // K4 minus an edge: complement is K2 plus two isolated vertices, Z = 3
        let p = predict_complement_zf(&Graph::complete(4).unwrap().without_edge(0, 1).unwrap())
            .unwrap();
        assert!(p.lo <= 3 && 3 <= p.hi, "{p:?}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            predict_complement_zf(&g(4, &[(0, 1), (2, 3)])),
            Err(Error::Disconnected(_))
        ));
        assert!(predict_complement_zf(&Graph::path(2).unwrap()).is_err());
    }

    #[test]
    fn forest_bound_examples() {
        let d = unicyclic_decomposition(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(unicyclic_forest_bound(&d), 2);
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        let d = unicyclic_decomposition(&g(10, &edges)).unwrap();
        assert_eq!(unicyclic_forest_bound(&d), 2 * 5 - 4);
        // triangle with a 3-vertex forest at one vertex
        let d = unicyclic_decomposition(&g(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5)]))
            .unwrap();
        assert_eq!(unicyclic_forest_bound(&d), 0);
    }

    #[test]
    fn sunlet_values() {
        assert_eq!(sunlet_prediction(5).unwrap(), 7);
        assert_eq!(sunlet_prediction(4).unwrap(), 4);
        assert_eq!(sunlet_prediction(3).unwrap(), 3);
        assert!(sunlet_prediction(2).is_err());
    }

    #[test]
    fn self_equality_examples() {
        let r = unicyclic_self_equality(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(
            r,
            SelfEquality {
                holds: true,
                clause: SelfEqualityClause::OrderFour
            }
        );
        let bull = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]);
        assert!(unicyclic_self_equality(&bull).unwrap().holds);
        let tail = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]);
        assert!(unicyclic_self_equality(&tail).unwrap().holds);
        assert!(
            unicyclic_self_equality(&Graph::cycle(5).unwrap())
                .unwrap()
                .holds
        );
        let cricket = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]);
        assert!(!unicyclic_self_equality(&cricket).unwrap().holds);
        let r = unicyclic_self_equality(&c4_with_pendants(&[0, 1])).unwrap();
        assert_eq!(
            r,
            SelfEquality {
                holds: true,
                clause: SelfEqualityClause::SixVertexC4AdjacentPendants
            }
        );
        let r = unicyclic_self_equality(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(
            r,
            SelfEquality {
                holds: false,
                clause: SelfEqualityClause::ExactNMinus3
            }
        );
        assert!(unicyclic_self_equality(&Graph::path(5).unwrap()).is_err());
    }
}
