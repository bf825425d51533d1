//! The zero forcing process and the exact zero forcing number.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor blue.
//! [`closure`] applies this color change rule in simultaneous rounds and logs
//! every force; [`is_zfs`] is the unlogged fast path used by the solver.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One application of the color change rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
    /// 1-based index of the round in which the force happened.
    pub round: usize,
}

/// Result of running the color change rule to a fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    pub n: usize,
    pub blue: VertexSet,
    /// Number of rounds that performed at least one force.
    pub rounds: usize,
    pub log: Vec<Force>,
}

impl ColorState {
    pub fn is_complete(&self) -> bool {
        self.blue == VertexSet::full(self.n)
    }
}

/// Runs the color change rule from `start` in simultaneous rounds.
///
/// Within a round every white vertex that some blue vertex can force is
/// forced. White vertices are taken in ascending order and the recorded
/// forcer is the least-index blue vertex able to force it.
pub fn closure(g: &Graph, start: VertexSet) -> ColorState {
    let n = g.n();
    let full = VertexSet::full(n);
    let mut blue = start & full;
    let mut log = Vec::new();
    let mut rounds = 0;
    loop {
        // claimed[w] = least forcer of w in this round
        let mut claimed = [usize::MAX; 64];
        let mut targets = VertexSet::EMPTY;
        for b in blue {
            let white = g.neighbors(b) - blue;
            if white.len() == 1 {
                let w = white.first().unwrap_or_default();
                if !targets.contains(w) {
                    targets.insert(w);
                    claimed[w] = b;
                }
            }
        }
        if targets.is_empty() {
            break;
        }
        rounds += 1;
        for w in targets {
            log.push(Force {
                forcer: claimed[w],
                forced: w,
                round: rounds,
            });
        }
        blue = blue | targets;
    }
    ColorState {
        n,
        blue,
        rounds,
        log,
    }
}

/// Closure of `start` under the color change rule, without logging.
#[inline]
pub fn closure_set(rows: &[u64], start: u64) -> u64 {
    let mut blue = start;
    let mut active = blue;
    loop {
        let mut progress = false;
        let mut it = active;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let white = rows[v] & !blue;
            if white == 0 {
                active &= !(1 << v);
            } else if white & (white - 1) == 0 {
                blue |= white;
                active |= white;
                active &= !(1 << v);
                progress = true;
            }
        }
        if !progress {
            return blue;
        }
    }
}

/// True when `start` is a zero forcing set of `g`.
pub fn is_zfs(g: &Graph, start: VertexSet) -> bool {
    let full = g.vertices().bits();
    closure_set(g.rows(), start.bits() & full) == full
}

/// Forcing chains of a complete closure, one per initial blue vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingChains {
    pub chains: Vec<Vec<usize>>,
}

impl ForcingChains {
    /// Terminal vertices of all chains.
    pub fn terminals(&self) -> VertexSet {
        self.chains
            .iter()
            .filter_map(|c| c.last().copied())
            .collect()
    }
}

/// Extracts forcing chains from a logged closure that colored every vertex.
pub fn chains(state: &ColorState, start: VertexSet) -> Result<ForcingChains> {
    if !state.is_complete() {
        return Err(Error::IncompleteClosure(format!(
            "{} of {} vertices are blue",
            state.blue.len(),
            state.n
        )));
    }
    let mut next = vec![None; state.n];
    for f in &state.log {
        next[f.forcer] = Some(f.forced);
    }
    let chains: Vec<Vec<usize>> = start
        .iter()
        .map(|s| {
            let mut chain = vec![s];
            let mut v = s;
            while let Some(w) = next[v] {
                chain.push(w);
                v = w;
            }
            chain
        })
        .collect();
    let covered: usize = chains.iter().map(Vec::len).sum();
    if covered != state.n {
        return Err(Error::IncompleteClosure(format!(
            "chains from {start} cover {covered} of {} vertices; state was not produced from this start set",
            state.n
        )));
    }
    Ok(ForcingChains { chains })
}

/// The reversal zero forcing set: the last vertex of every chain.
pub fn reverse_chains(c: &ForcingChains) -> VertexSet {
    c.terminals()
}

/// Exact zero forcing number with the lexicographically least minimum set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZfResult {
    pub value: usize,
    pub witness: VertexSet,
    pub sets_examined: u64,
}

/// Limits for the exact search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    /// Maximum number of candidate sets to test across all components.
    pub max_subsets: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_subsets: None,
        deadline: None,
    };

    pub fn subsets(max: u64) -> Self {
        Budget {
            max_subsets: Some(max),
            deadline: None,
        }
    }
}

/// Exact zero forcing number without resource limits.
pub fn zero_forcing_number(g: &Graph) -> ZfResult {
    match zero_forcing_number_within(g, &Budget::UNLIMITED) {
        Ok(r) => r,
        Err(e) => unreachable!("unlimited search cannot exhaust: {e}"),
    }
}

/// Exact zero forcing number, solved per connected component.
///
/// Each component is searched by increasing candidate size starting at
/// `max(min degree, 1)`, testing subsets in lexicographic order; the first
/// success is the lexicographically least minimum set of that component,
/// and the union of these is the lexicographically least minimum set of `g`.
/// On budget exhaustion the error carries an interval that contains the
/// true value.
pub fn zero_forcing_number_within(g: &Graph, budget: &Budget) -> Result<ZfResult> {
    let parts = g.components();
    let mut examined = 0u64;
    let mut value = 0;
    let mut witness = VertexSet::EMPTY;
    for (i, &part) in parts.iter().enumerate() {
        match solve_component(g, part, budget, &mut examined) {
            Ok((k, w)) => {
                value += k;
                witness = witness | w;
            }
            Err(reached) => {
                let rest = &parts[i + 1..];
                let lo =
                    value + reached + rest.iter().map(|&p| component_lower(g, p)).sum::<usize>();
                let hi = value
                    + component_upper(part)
                    + rest.iter().map(|&p| component_upper(p)).sum::<usize>();
                return Err(Error::BudgetExhausted { lo, hi, examined });
            }
        }
    }
    Ok(ZfResult {
        value,
        witness,
        sets_examined: examined,
    })
}

fn component_lower(g: &Graph, part: VertexSet) -> usize {
    part.iter()
        .map(|v| (g.neighbors(v) & part).len())
        .min()
        .unwrap_or(0)
        .max(1)
}

// Any |part| - 1 vertices of a connected graph force the last one.
fn component_upper(part: VertexSet) -> usize {
    part.len().saturating_sub(1).max(1)
}

/// Returns `(Z, least witness)` or, on exhaustion, the size that was being
/// searched (every smaller size is refuted).
fn solve_component(
    g: &Graph,
    part: VertexSet,
    budget: &Budget,
    examined: &mut u64,
) -> std::result::Result<(usize, VertexSet), usize> {
    let verts = part.to_vec();
    let m = verts.len();
    if m == 1 {
        return Ok((1, part));
    }
    // Relabel the component to 0..m; relabeling is monotone so it preserves
    // lexicographic order of subsets.
    let mut rows = vec![0u64; m];
    for (i, &v) in verts.iter().enumerate() {
        for (j, &u) in verts.iter().enumerate() {
            if g.has_edge(v, u) {
                rows[i] |= 1 << j;
            }
        }
    }
    let full = VertexSet::full(m).bits();
    let lower = component_lower(g, part);
    let mut idx: Vec<usize> = Vec::with_capacity(m);
    for k in lower..m {
        idx.clear();
        idx.extend(0..k);
        loop {
            if budget.max_subsets.is_some_and(|max| *examined >= max) {
                return Err(k);
            }
            if examined.is_multiple_of(1024) && budget.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(k);
            }
            *examined += 1;
            let set = idx.iter().fold(0u64, |acc, &i| acc | (1 << i));
            if closure_set(&rows, set) == full {
                return Ok((k, idx.iter().map(|&i| verts[i]).collect()));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    // unreachable for m >= 2 since m - 1 vertices always force the last
    Ok((m - 1, part.without(verts[m - 1])))
}

/// Advances `idx` (a strictly increasing k-subset of `0..m`) to its
/// lexicographic successor. Returns false after the last subset.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
