use std::fmt;
use std::str::FromStr;

use super::prufer::{prufer_tree, Odometer};
use crate::error::{argument, Error, Result};
use crate::graph::Graph;

/// Families available for exhaustive labeled enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumFamily {
    Trees,
    Unicyclic,
    AllGraphs,
    ConnectedGraphs,
}

impl EnumFamily {
    pub const ALL: [EnumFamily; 4] = [
        EnumFamily::Trees,
        EnumFamily::Unicyclic,
        EnumFamily::AllGraphs,
        EnumFamily::ConnectedGraphs,
    ];

    /// Largest `n` enumerated.
    pub fn max_n(self) -> usize {
        match self {
            EnumFamily::Trees => 9,
            EnumFamily::Unicyclic => 8,
            EnumFamily::AllGraphs | EnumFamily::ConnectedGraphs => 7,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EnumFamily::Trees => "trees",
            EnumFamily::Unicyclic => "unicyclic",
            EnumFamily::AllGraphs => "all_graphs",
            EnumFamily::ConnectedGraphs => "connected_graphs",
        }
    }
}

impl fmt::Display for EnumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EnumFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnumFamily::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| argument(format!("unknown enumeration family {s:?}")))
    }
}

pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// Streams every labeled graph of `family` on `n` vertices exactly once.
pub fn enumerate_family(family: EnumFamily, n: usize) -> Result<GraphStream> {
    if n == 0 {
        return Err(argument("enumeration needs n >= 1"));
    }
    if n > family.max_n() {
        return Err(Error::Resource {
            what: match family {
                EnumFamily::Trees => "labeled tree enumeration",
                EnumFamily::Unicyclic => "labeled unicyclic enumeration",
                EnumFamily::AllGraphs => "labeled graph enumeration",
                EnumFamily::ConnectedGraphs => "labeled connected graph enumeration",
            },
            limit: family.max_n(),
            requested: n,
        });
    }
    Ok(match family {
        EnumFamily::Trees => Box::new(trees(n)),
        EnumFamily::Unicyclic => Box::new(trees(n).flat_map(move |t| unicyclic_extensions(&t))),
        EnumFamily::AllGraphs => Box::new(all_graphs(n)),
        EnumFamily::ConnectedGraphs => Box::new(all_graphs(n).filter(Graph::is_connected)),
    })
}

/// Labeled trees in Prüfer-sequence order.
fn trees(n: usize) -> Box<dyn Iterator<Item = Graph> + Send> {
    if n == 1 {
        return Box::new(std::iter::once(Graph::empty(1).expect("n = 1 is valid")));
    }
    let mut odo = Odometer::new(n - 2, n);
    Box::new(std::iter::from_fn(move || {
        let g = odo.current().map(|seq| prufer_tree(n, seq));
        odo.advance();
        g
    }))
}

/// Unicyclic graphs obtained from `tree` by adding one edge `uv`, keeping
/// only those where `uv` is the largest edge on the cycle it closes. Every
/// unicyclic graph arises from exactly one (tree, edge) pair this way.
fn unicyclic_extensions(tree: &Graph) -> Vec<Graph> {
    let n = tree.n();
    let mut out = Vec::new();
    for u in 0..n {
        let parent = bfs_parents(tree, u);
        for v in u + 1..n {
            if tree.has_edge(u, v) {
                continue;
            }
            let mut max_on_path = (0, 0);
            let mut x = v;
            while x != u {
                let p = parent[x];
                max_on_path = max_on_path.max((x.min(p), x.max(p)));
                x = p;
            }
            if (u, v) > max_on_path {
                let mut g = tree.clone();
                g.add_edge_unchecked(u, v);
                out.push(g);
            }
        }
    }
    out
}

fn bfs_parents(tree: &Graph, root: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; tree.n()];
    parent[root] = root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> + Send {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_rows(&rows).expect("symmetric rows")
    })
}

/// Edge set of a graph on at most 11 vertices packed into one word, used
/// to compare labeled graphs.
pub fn edge_key(g: &Graph) -> u64 {
    let mut key = 0u64;
    let mut k = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                key |= 1 << k;
            }
            k += 1;
        }
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(f: EnumFamily, n: usize) -> usize {
        enumerate_family(f, n).unwrap().count()
    }

    #[test]
    fn tree_counts_match_cayley() {
        for n in 1..=7usize {
            let expected = if n <= 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(count(EnumFamily::Trees, n), expected, "n = {n}");
        }
    }

    #[test]
    fn trees_are_distinct_trees() {
        let keys: HashSet<u64> = enumerate_family(EnumFamily::Trees, 6)
            .unwrap()
            .inspect(|t| assert!(t.is_connected() && t.edge_count() == 5))
            .map(|t| edge_key(&t))
            .collect();
        assert_eq!(keys.len(), 1296);
    }

    #[test]
    fn all_graph_counts() {
        assert_eq!(count(EnumFamily::AllGraphs, 4), 64);
        assert_eq!(count(EnumFamily::AllGraphs, 1), 1);
        for n in 1..=6 {
            assert_eq!(count(EnumFamily::AllGraphs, n), 1 << (n * (n - 1) / 2));
        }
        // OEIS A001187
        assert_eq!(count(EnumFamily::ConnectedGraphs, 4), 38);
        assert_eq!(count(EnumFamily::ConnectedGraphs, 5), 728);
    }

    #[test]
    fn unicyclic_matches_filtered_oracle() {
        for n in 3..=6 {
            let oracle: HashSet<u64> = enumerate_family(EnumFamily::AllGraphs, n)
                .unwrap()
                .filter(|g| g.is_connected() && g.edge_count() == n)
                .map(|g| edge_key(&g))
                .collect();
            let listed: Vec<u64> = enumerate_family(EnumFamily::Unicyclic, n)
                .unwrap()
                .map(|g| edge_key(&g))
                .collect();
            let distinct: HashSet<u64> = listed.iter().copied().collect();
            assert_eq!(listed.len(), distinct.len(), "duplicates at n = {n}");
            assert_eq!(distinct, oracle, "n = {n}");
        }
        assert_eq!(count(EnumFamily::Unicyclic, 4), 15);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_family(EnumFamily::AllGraphs, 8),
            Err(Error::Resource { limit: 7, .. })
        ));
        assert!(matches!(
            enumerate_family(EnumFamily::Trees, 10),
            Err(Error::Resource { limit: 9, .. })
        ));
        assert!("forests".parse::<EnumFamily>().is_err());
        assert_eq!(
            "unicyclic".parse::<EnumFamily>().unwrap(),
            EnumFamily::Unicyclic
        );
    }
}
