//! Acceptance suite. Each criterion prints one `PASS` or `FAIL` line; the
//! process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use zf_core::forcing::{chains, closure};
use zf_core::gen::{edge_key, random_cactus, random_graph, sunlet};
use zf_core::predict::{sunlet_prediction, unicyclic_forest_bound, unicyclic_self_equality};
use zf_core::structure::{c4_contexts, forbidden_induced_test, is_book, krs_free_bound, FORBIDDEN};
use zf_core::{
    classify, enumerate_family, is_zfs, predict_complement_zf, reverse_chains, zero_forcing_number,
    zero_forcing_number_within, Budget, EnumFamily, Error, Family, Graph, Rule, VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn z(g: &Graph) -> usize {
    zero_forcing_number(g).value
}

fn zc(g: &Graph) -> usize {
    z(&g.complement())
}

fn all(family: EnumFamily, n: usize) -> Vec<Graph> {
    enumerate_family(family, n)
        .expect("within budget")
        .collect()
}

/// Runs `check` over `items` in parallel and reports the first few failures.
fn exhaust<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Result<(), String> {
    let failures: Vec<String> = items.par_iter().filter_map(check).collect();
    match failures.len() {
        0 => Ok(()),
        k => Err(format!(
            "{k} exceptions, e.g. {}",
            failures.into_iter().take(3).collect::<Vec<_>>().join("; ")
        )),
    }
}

fn criterion_trees() -> Outcome {
    let mut total = 0;
    for n in 4..=8 {
        let trees = all(EnumFamily::Trees, n);
        total += trees.len();
        exhaust(&trees, |t| {
            let star = t.max_degree() == n - 1;
            let want = if star { n - 1 } else { n - 3 };
            let got = zc(t);
            let predicted = predict_complement_zf(t).ok()?.value();
            (got != want || predicted != Some(want)).then(|| {
                format!(
                    "{} exact {got} predicted {predicted:?} want {want}",
                    t.to_graph6()
                )
            })
        })?;
    }
    Ok(format!("{total} labeled trees, n = 4..8"))
}

fn criterion_bipartite() -> Outcome {
    let mut total = 0;
    for n in 4..=7 {
        let graphs: Vec<Graph> = all(EnumFamily::ConnectedGraphs, n)
            .into_iter()
            .filter(|g| g.is_bipartite() && g.max_degree() < n - 1 && !classify(g).contains_c4)
            .collect();
        total += graphs.len();
        exhaust(&graphs, |g| {
            let got = zc(g);
            let predicted = predict_complement_zf(g).ok()?.value();
            (got != n - 3 || predicted != Some(n - 3))
                .then(|| format!("{} exact {got} predicted {predicted:?}", g.to_graph6()))
        })?;
    }
    Ok(format!(
        "{total} connected bipartite K_{{2,2}}-free non-stars, n = 4..7"
    ))
}

fn criterion_unicyclic() -> Outcome {
    let mut total = 0;
    for n in 4..=7 {
        let graphs = all(EnumFamily::Unicyclic, n);
        total += graphs.len();
        exhaust(&graphs, |g| {
            let got = zc(g);
            let p = match predict_complement_zf(g) {
                Ok(p) => p,
                Err(e) => return Some(format!("{}: {e}", g.to_graph6())),
            };
            let Family::Unicyclic(d) = classify(g).family else {
                return Some(format!("{} not classified unicyclic", g.to_graph6()));
            };
            let in_range = (n - 4..=n - 2).contains(&got);
            let forest_ok = unicyclic_forest_bound(&d) <= got;
            let girth_ok = got != n - 4 || d.girth() == 4;
            (p.value() != Some(got) || !in_range || !forest_ok || !girth_ok).then(|| {
                format!(
                    "{} exact {got} predicted {:?} ({})",
                    g.to_graph6(),
                    p.value(),
                    p.rule
                )
            })
        })?;
    }
    Ok(format!("{total} labeled unicyclic graphs, n = 4..7"))
}

fn c4_with(extra: &[(usize, usize)], n: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    edges.extend_from_slice(extra);
    Graph::from_edges(n, &edges).unwrap()
}

fn criterion_c4_constructions() -> Outcome {
    let cases = [
        (
            "pendants on all four cycle vertices",
            c4_with(&[(0, 4), (1, 5), (2, 6), (3, 7)], 8),
            4,
            Rule::UniC4Case1,
        ),
        (
            "pendants on three cycle vertices",
            c4_with(&[(0, 4), (1, 5), (2, 6)], 7),
            3,
            Rule::UniC4Case1,
        ),
        (
            "pendants on two adjacent cycle vertices",
            c4_with(&[(0, 4), (1, 5)], 6),
            2,
            Rule::UniC4Case2a,
        ),
        (
            "pendants on two opposite cycle vertices",
            c4_with(&[(0, 4), (2, 5)], 6),
            3,
            Rule::UniC4Case2b,
        ),
    ];
    for (name, g, want, rule) in cases {
        let got = zc(&g);
        let p = predict_complement_zf(&g).map_err(|e| e.to_string())?;
        if got != want || p.value() != Some(want) || p.rule != rule {
            return Err(format!(
                "{name}: exact {got}, predicted {:?} ({}), want {want}",
                p.value(),
                p.rule
            ));
        }
    }
    Ok("n-4, n-4, n-4, n-3 reproduced on n = 8, 7, 6, 6".into())
}

fn criterion_sunlets() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for n in 3..=7 {
        let g = sunlet(n).map_err(|e| e.to_string())?;
        let t = Instant::now();
        let got = zc(&g);
        let formula = if n == 4 { 2 * n - 4 } else { 2 * n - 3 };
        if got != formula || sunlet_prediction(n) != Ok(formula) {
            return Err(format!("sunlet {n}: exact {got}, formula {formula}"));
        }
        if n == 7 && t.elapsed() > Duration::from_secs(300) {
            return Err(format!("sunlet 7 took {:?}", t.elapsed()));
        }
        seen.push(got.to_string());
    }
    Ok(format!(
        "values {} for n = 3..7 in {:?}",
        seen.join(", "),
        start.elapsed()
    ))
}

fn criterion_cacti() -> Outcome {
    let start = Instant::now();
    let seeds: Vec<u64> = (0..1000).collect();
    exhaust(&seeds, |&seed| {
        let n = 6 + (seed % 7) as usize;
        let g = random_cactus(n, seed, 0.5).ok()?;
        let Family::Cactus(d) = classify(&g).family else {
            return Some(format!("seed {seed}: not a cactus"));
        };
        if d.cycles.len() < 2 {
            return Some(format!("seed {seed}: {} cycles", d.cycles.len()));
        }
        let want = if is_book(&g) {
            n - 2
        } else if c4_contexts(&g).iter().any(|c| c.adjacent_attached_pair) {
            n - 4
        } else {
            n - 3
        };
        let got = zc(&g);
        let predicted = predict_complement_zf(&g).ok()?.value();
        (got != want || predicted != Some(want))
            .then(|| format!("seed {seed} {}: exact {got} want {want}", g.to_graph6()))
    })?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("1000 seeded cacti, 6 <= n <= 12, in {elapsed:?}"))
}

fn criterion_krs_bound() -> Outcome {
    let seeds: Vec<u64> = (0..1000).collect();
    exhaust(&seeds, |&seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=10u64) as usize;
        let g = random_graph(n, rng.gen_range(0.05..0.95), &mut rng).ok()?;
        let bound = krs_free_bound(&g).bound;
        let got = zc(&g);
        (got < bound).then(|| format!("{}: exact {got} < bound {bound}", g.to_graph6()))
    })?;
    Ok("1000 random graphs, n <= 10".into())
}

/// Canonical form under relabeling: the least edge key over all permutations.
fn canonical(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        best = best.min(edge_key(&Graph::from_edges(n, &edges).unwrap()));
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return best;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn criterion_forbidden() -> Outcome {
    // contains_bad[n][key]: some induced subgraph H (|H| >= 3) has Z(H) < |H| - 2
    let mut contains_bad: Vec<Vec<bool>> = vec![Vec::new(); 7];
    let mut minimal: Vec<Graph> = Vec::new();
    let mut checked = 0;
    for n in 1..=6 {
        let graphs = all(EnumFamily::AllGraphs, n);
        let rows: Vec<(bool, bool)> = graphs
            .par_iter()
            .map(|g| {
                let bad = n >= 3 && z(g) + 2 < n;
                let below = n > 1
                    && (0..n).any(|v| {
                        let h = g.induced(g.vertices().without(v)).unwrap();
                        contains_bad[n - 1][edge_key(&h) as usize]
                    });
                (bad, below)
            })
            .collect();
        if (4..=6).contains(&n) {
            exhaust(&graphs, |g| {
                let good = z(g) + 2 >= n;
                (forbidden_induced_test(g) != good).then(|| format!("{} disagrees", g.to_graph6()))
            })?;
            checked += graphs.len();
        }
        contains_bad[n] = rows.iter().map(|&(bad, below)| bad || below).collect();
        for (g, &(bad, below)) in graphs.iter().zip(&rows) {
            if bad && !below {
                minimal.push(g.clone());
            }
        }
    }
    let classes: BTreeSet<(usize, u64)> = minimal.iter().map(|g| (g.n(), canonical(g))).collect();
    let orders: Vec<usize> = classes.iter().map(|c| c.0).collect();
    if orders != [4, 5, 5, 5, 6] {
        return Err(format!("minimal classes have orders {orders:?}"));
    }
    let listed: BTreeSet<(usize, u64)> = FORBIDDEN
        .iter()
        .map(|p| (p.n, canonical(&p.graph())))
        .collect();
    if listed != classes {
        return Err("derived classes differ from the built-in pattern list".into());
    }
    Ok(format!(
        "{checked} labeled graphs on n = 4..6; 5 minimal classes of orders 4, 5, 5, 5, 6"
    ))
}

fn criterion_forcing_properties() -> Outcome {
    let seeds: Vec<u64> = (0..500).collect();
    exhaust(&seeds, |&seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + seed);
        let n = rng.gen_range(2..=10u64) as usize;
        let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng).ok()?;
        let zr = zero_forcing_number(&g);

        let state = closure(&g, zr.witness);
        let rev = reverse_chains(&chains(&state, zr.witness).ok()?);
        if rev.len() != zr.value || !is_zfs(&g, rev) {
            return Some(format!("reversal fails on {}", g.to_graph6()));
        }
        let extra = VertexSet(rng.gen::<u64>()) & g.vertices();
        if !is_zfs(&g, zr.witness | extra) {
            return Some(format!("superset fails on {}", g.to_graph6()));
        }
        let h = random_graph(rng.gen_range(1..=6u64) as usize, 0.5, &mut rng).ok()?;
        if z(&g.disjoint_union(&h).ok()?) != zr.value + z(&h) {
            return Some(format!(
                "additivity fails on {} + {}",
                g.to_graph6(),
                h.to_graph6()
            ));
        }
        for (u, v) in g.edges() {
            if z(&g.without_edge(u, v).ok()?).abs_diff(zr.value) > 1 {
                return Some(format!("edge ({u},{v}) of {} moves Z by 2+", g.to_graph6()));
            }
        }
        None
    })?;
    Ok("reversal, superset, additivity, edge removal on 500 random graphs".into())
}

fn criterion_self_equality() -> Outcome {
    let mut total = 0;
    for n in 4..=7 {
        let graphs = all(EnumFamily::Unicyclic, n);
        total += graphs.len();
        exhaust(&graphs, |g| {
            let s = match unicyclic_self_equality(g) {
                Ok(s) => s,
                Err(e) => return Some(format!("{}: {e}", g.to_graph6())),
            };
            let equal = z(g) == zc(g);
            (s.holds != equal)
                .then(|| format!("{} says {} via {:?}", g.to_graph6(), s.holds, s.clause))
        })?;
    }
    Ok(format!("{total} labeled unicyclic graphs, n = 4..7"))
}

fn connected_random(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = random_graph(n, p, rng).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn criterion_performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    // timed one at a time so each run gets the whole machine
    let mut slowest = (Duration::ZERO, 0, 0.0);
    for p in [0.2, 0.35, 0.5, 0.65, 0.8] {
        for _ in 0..4 {
            let g = connected_random(14, p, &mut rng);
            let t = Instant::now();
            let value = z(&g);
            let took = t.elapsed();
            if took > Duration::from_secs(60) {
                return Err(format!("n = 14 ({}) took {took:?}", g.to_graph6()));
            }
            if took > slowest.0 {
                slowest = (took, value, p);
            }
        }
    }
    let mut exhausted = 0;
    for _ in 0..20 {
        let g = connected_random(16, 0.4, &mut rng);
        let exact = z(&g);
        for budget in [1, 10, 100, 1000, 10_000] {
            match zero_forcing_number_within(&g, &Budget::subsets(budget)) {
                Ok(r) if r.value != exact => {
                    return Err(format!(
                        "{}: budget {budget} gave wrong value {}",
                        g.to_graph6(),
                        r.value
                    ))
                }
                Ok(_) => {}
                Err(Error::BudgetExhausted { lo, hi, .. }) => {
                    exhausted += 1;
                    if !(lo <= exact && exact <= hi) {
                        return Err(format!(
                            "{}: interval [{lo}, {hi}] misses {exact}",
                            g.to_graph6()
                        ));
                    }
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    let (took, value, p) = slowest;
    Ok(format!(
        "20 graphs at n = 14, slowest {took:?} (Z = {value}, p = {p}); \
         n = 16 budget runs: {exhausted} intervals, all sound"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("trees", criterion_trees),
        ("bipartite K22-free", criterion_bipartite),
        ("unicyclic classification", criterion_unicyclic),
        ("C4 constructions", criterion_c4_constructions),
        ("sunlets", criterion_sunlets),
        ("cactus classification", criterion_cacti),
        ("K_{r,s}-free lower bound", criterion_krs_bound),
        ("forbidden induced subgraphs", criterion_forbidden),
        ("forcing process properties", criterion_forcing_properties),
        ("unicyclic self-equality", criterion_self_equality),
        ("performance", criterion_performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
