use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into the edges
/// of the labeled tree it encodes.
pub fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n.max(2));
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a Prüfer prefix always leaves a leaf");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    Graph::from_edges(n, &prufer_edges(n, seq)).expect("Prüfer sequences decode to trees")
}

/// All sequences of length `len` over `0..base`, in lexicographic order.
pub(crate) struct Odometer {
    digits: Vec<usize>,
    base: usize,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(len: usize, base: usize) -> Self {
        Odometer {
            digits: vec![0; len],
            base,
            done: base == 0 && len > 0,
        }
    }

    pub(crate) fn current(&self) -> Option<&[usize]> {
        (!self.done).then_some(self.digits.as_slice())
    }

    pub(crate) fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.base {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_known_sequences() {
        // constant sequence is a star
        assert_eq!(prufer_tree(5, &[2, 2, 2]), {
            Graph::from_edges(5, &[(2, 0), (2, 1), (2, 3), (2, 4)]).unwrap()
        });
        // 0..n-2 ascending gives a path ending at n-1
        let p = prufer_tree(5, &[1, 2, 3]);
        assert_eq!(p, Graph::path(5).unwrap());
        assert_eq!(prufer_tree(2, &[]), Graph::path(2).unwrap());
    }

    #[test]
    fn odometer_counts() {
        let mut o = Odometer::new(2, 3);
        let mut count = 0;
        while o.current().is_some() {
            count += 1;
            o.advance();
        }
        assert_eq!(count, 9);
        let o = Odometer::new(0, 1);
        assert!(o.current().is_some());
    }
}
