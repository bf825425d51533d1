//! Named and seeded random graph families, plus exhaustive labeled
//! enumeration for small orders.
//!
//! Every random family draws from `ChaCha8Rng::seed_from_u64(seed)`, and all
//! integer draws go through `u64` or `u32` ranges, so a given spec yields the
//! same graph on every platform.

mod enumerate;
mod prufer;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{argument, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::structure::FamilyKind;

pub use enumerate::{edge_key, enumerate_family, EnumFamily, GraphStream};
pub use prufer::{prufer_edges, prufer_tree};

pub const DEFAULT_CYCLE_BIAS: f64 = 0.5;
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.5;
pub const DEFAULT_BOOK_PAGES: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenFamily {
    Path,
    Cycle,
    Star,
    Complete,
    StarPlusEdge,
    Sunlet,
    Book,
    RandomTree,
    RandomUnicyclic,
    RandomCactus,
    RandomGraph,
}

impl GenFamily {
    pub const ALL: [GenFamily; 11] = [
        GenFamily::Path,
        GenFamily::Cycle,
        GenFamily::Star,
        GenFamily::Complete,
        GenFamily::StarPlusEdge,
        GenFamily::Sunlet,
        GenFamily::Book,
        GenFamily::RandomTree,
        GenFamily::RandomUnicyclic,
        GenFamily::RandomCactus,
        GenFamily::RandomGraph,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GenFamily::Path => "path",
            GenFamily::Cycle => "cycle",
            GenFamily::Star => "star",
            GenFamily::Complete => "complete",
            GenFamily::StarPlusEdge => "star_plus_edge",
            GenFamily::Sunlet => "sunlet",
            GenFamily::Book => "book",
            GenFamily::RandomTree => "random_tree",
            GenFamily::RandomUnicyclic => "random_unicyclic",
            GenFamily::RandomCactus => "random_cactus",
            GenFamily::RandomGraph => "random_graph",
        }
    }
}

impl fmt::Display for GenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenFamily::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| argument(format!("unknown generator family {s:?}")))
    }
}

/// Family-specific knobs. Unset fields take the documented defaults and
/// fields a family does not use are ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GenParams {
    /// Matching size of a book (default 2).
    pub pages: Option<usize>,
    /// Cycle length of a random unicyclic graph (default: unconstrained).
    pub girth: Option<usize>,
    /// Edge probability of a random graph (default 0.5).
    pub p: Option<f64>,
    /// Probability that a random cactus grows by a cycle rather than a
    /// bridge (default 0.5).
    pub cycle_bias: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub family: GenFamily,
    /// Vertex count, except for `sunlet` where it is the cycle length and
    /// the graph has `2n` vertices.
    pub n: usize,
    pub params: GenParams,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: GenFamily, n: usize) -> Self {
        GenSpec {
            family,
            n,
            params: GenParams::default(),
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_params(mut self, params: GenParams) -> Self {
        self.params = params;
        self
    }

    /// The family `classify` assigns to every graph this spec can produce,
    /// or `None` when that depends on the draw.
    pub fn declared_family(&self) -> Option<FamilyKind> {
        let n = self.n;
        Some(match self.family {
            GenFamily::Path | GenFamily::Star | GenFamily::RandomTree => FamilyKind::Tree,
            GenFamily::Cycle
            | GenFamily::StarPlusEdge
            | GenFamily::Sunlet
            | GenFamily::RandomUnicyclic => FamilyKind::Unicyclic,
            GenFamily::Complete if n <= 2 => FamilyKind::Tree,
            GenFamily::Complete if n == 3 => FamilyKind::Unicyclic,
            GenFamily::Complete => FamilyKind::Other,
            GenFamily::Book => FamilyKind::Cactus,
            GenFamily::RandomCactus if n <= 4 => FamilyKind::Unicyclic,
            GenFamily::RandomCactus => FamilyKind::Cactus,
            GenFamily::RandomGraph => return None,
        })
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        GenFamily::Path => Graph::path(n),
        GenFamily::Cycle => Graph::cycle(n),
        GenFamily::Star => Graph::star(n),
        GenFamily::Complete => Graph::complete(n),
        GenFamily::StarPlusEdge => star_plus_edge(n),
        GenFamily::Sunlet => sunlet(n),
        GenFamily::Book => book(n, spec.params.pages.unwrap_or(DEFAULT_BOOK_PAGES)),
        GenFamily::RandomTree => random_tree(n, &mut rng),
        GenFamily::RandomUnicyclic => random_unicyclic(n, spec.params.girth, &mut rng),
        GenFamily::RandomCactus => random_cactus_with(
            n,
            spec.params.cycle_bias.unwrap_or(DEFAULT_CYCLE_BIAS),
            &mut rng,
        ),
        GenFamily::RandomGraph => random_graph(
            n,
            spec.params.p.unwrap_or(DEFAULT_EDGE_PROBABILITY),
            &mut rng,
        ),
    }
}

/// `K_{1,n-1}` plus one edge between leaves `1` and `2`.
pub fn star_plus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(argument("star_plus_edge needs n >= 3"));
    }
    Graph::star(n)?.with_edge(1, 2)
}

/// Cycle `0..n` with pendant `n + i` attached to cycle vertex `i`.
pub fn sunlet(n: usize) -> Result<Graph> {
    if !(3..=MAX_VERTICES / 2).contains(&n) {
        return Err(argument(format!(
            "sunlet cycle length must be in 3..={}",
            MAX_VERTICES / 2
        )));
    }
    let mut g = Graph::cycle(n)?.disjoint_union(&Graph::empty(n)?)?;
    for i in 0..n {
        g.add_edge_unchecked(i, n + i);
    }
    Ok(g)
}

/// Hub `0` adjacent to every other vertex, plus the matching
/// `(1,2), (3,4), ..` of `pages` edges; remaining leaves stay pendant.
pub fn book(n: usize, pages: usize) -> Result<Graph> {
    if pages < 2 {
        return Err(argument("a book needs at least 2 pages"));
    }
    if n < 2 * pages + 1 {
        return Err(argument(format!(
            "a book with {pages} pages needs n >= {}",
            2 * pages + 1
        )));
    }
    let mut g = Graph::star(n)?;
    for k in 0..pages {
        g.add_edge_unchecked(2 * k + 1, 2 * k + 2);
    }
    Ok(g)
}

pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(argument(format!(
            "tree order must be in 1..={MAX_VERTICES}"
        )));
    }
    if n == 1 {
        return Graph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| below(rng, n)).collect();
    Ok(prufer_tree(n, &seq))
}

/// A random labeled tree plus one random non-edge. With a target `girth`,
/// the non-edge is drawn among pairs at tree distance `girth - 1`; trees
/// without such a pair are rejected and redrawn.
pub fn random_unicyclic(n: usize, girth: Option<usize>, rng: &mut impl Rng) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(argument(format!(
            "unicyclic order must be in 3..={MAX_VERTICES}"
        )));
    }
    if let Some(k) = girth {
        if !(3..=n).contains(&k) {
            return Err(argument(format!("girth {k} impossible on {n} vertices")));
        }
    }
    const ATTEMPTS: usize = 100_000;
    for _ in 0..ATTEMPTS {
        let tree = random_tree(n, rng)?;
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| {
                let dist = distances(&tree, u);
                (u + 1..n)
                    .filter(move |&v| match girth {
                        Some(k) => dist[v] == k - 1,
                        None => dist[v] >= 2,
                    })
                    .map(move |v| (u, v))
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let (u, v) = candidates[below(rng, candidates.len())];
        return tree.with_edge(u, v);
    }
    Err(argument(format!(
        "no unicyclic graph with girth {girth:?} found on {n} vertices"
    )))
}

/// Random cactus grown from a single vertex by attaching bridges or cycles of
/// length 3 to 6 at uniformly chosen existing vertices, then relabeled by a
/// random permutation.
///
/// The growth reserves room so that the result has at least two cycles when
/// `n >= 5` and at least one when `n` is 3 or 4. A cactus needs five
/// vertices to hold two cycles, so smaller orders yield a unicyclic graph.
pub fn random_cactus(n: usize, seed: u64, cycle_bias: f64) -> Result<Graph> {
    random_cactus_with(n, cycle_bias, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_cactus_with(n: usize, cycle_bias: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(argument(format!(
            "cactus order must be in 3..={MAX_VERTICES}"
        )));
    }
    if !(0.0..=1.0).contains(&cycle_bias) {
        return Err(argument("cycle_bias must lie in [0, 1]"));
    }
    let required = if n >= 5 { 2 } else { 1 };
    let mut edges = Vec::with_capacity(2 * n);
    let mut placed = 1;
    let mut cycles = 0usize;
    while placed < n {
        let remaining = n - placed;
        let missing = required - cycles.min(required);
        // a bridge spends one vertex; the missing cycles need two each
        let forced = missing > 0 && remaining - 1 < 2 * missing;
        let anchor = below(rng, placed);
        if remaining >= 2 && (forced || rng.gen_bool(cycle_bias)) {
            // leave two vertices for each further missing cycle
            let reserve = 2 * missing.saturating_sub(1);
            let longest = (remaining - reserve + 1).min(6);
            let len = 3 + below(rng, longest - 2);
            let mut prev = anchor;
            for v in placed..placed + len - 1 {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, anchor));
            placed += len - 1;
            cycles += 1;
        } else {
            edges.push((anchor, placed));
            placed += 1;
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (label[u], label[v])).collect();
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi `G(n, p)`; pairs are drawn in the order `(0,1), (0,2), (1,2), (0,3), ..`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(argument("edge probability must lie in [0, 1]"));
    }
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge_unchecked(i, j);
            }
        }
    }
    Ok(g)
}

/// Uniform draw from `0..bound` that does not depend on the width of `usize`.
fn below(rng: &mut impl Rng, bound: usize) -> usize {
    rng.gen_range(0..bound as u64) as usize
}

fn distances(g: &Graph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}
