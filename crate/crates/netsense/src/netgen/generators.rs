//! Random and deterministic graph generators.
//!
//! All generators are pure functions of the spec: the RNG is a ChaCha8
//! stream seeded with `GraphSpec::seed` via `seed_from_u64`, structure draws
//! come first, and weights are drawn in canonical `(i, j)` edge order
//! afterwards, so regenerating with the same spec is bit-identical.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use super::{load_edge_list, Edge, GraphKind, GraphSpec, WeightDist, WeightedGraph};
use crate::error::{Error, Result};

/// Generates the graph described by `spec`. Deterministic for a fixed seed.
pub fn generate(spec: &GraphSpec) -> Result<WeightedGraph> {
    if let GraphKind::File { path, weights } = &spec.kind {
        let (graph, _report) = load_edge_list(path, *weights)?;
        return Ok(graph);
    }

    let n = spec.n;
    if n < 2 {
        return Err(Error::InvalidParameter(
            "generators require n >= 2".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let mut pairs = match &spec.kind {
        GraphKind::Er { p } => erdos_renyi(n, *p, &mut rng)?,
        GraphKind::Ba { m } => barabasi_albert(n, *m, &mut rng)?,
        GraphKind::PowerlawConfig { gamma, k_min } => {
            powerlaw_configuration(n, *gamma, *k_min, &mut rng)?
        }
        GraphKind::RingLattice { k } => ring_lattice(n, *k)?,
        GraphKind::WattsStrogatz { k, rewire } => watts_strogatz(n, *k, *rewire, &mut rng)?,
        GraphKind::RandomGeometric { radius } => random_geometric(n, *radius, &mut rng)?,
        GraphKind::Star => (1..n).map(|j| (0, j)).collect(),
        GraphKind::Path => (0..n - 1).map(|i| (i, i + 1)).collect(),
        GraphKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter("cycle requires n >= 3".into()));
            }
            let mut v: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            v.push((0, n - 1));
            v
        }
        GraphKind::Complete => {
            let mut v = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in (i + 1)..n {
                    v.push((i, j));
                }
            }
            v
        }
        GraphKind::File { .. } => unreachable!(),
    };

    // Canonical order before weight draws.
    pairs.sort_unstable();
    let edges = assign_weights(&pairs, spec.weight_dist, &mut rng);
    WeightedGraph::new(n, edges)
}

fn assign_weights(pairs: &[(usize, usize)], dist: WeightDist, rng: &mut ChaCha8Rng) -> Vec<Edge> {
    pairs
        .iter()
        .map(|&(i, j)| {
            let weight = match dist {
                WeightDist::Constant => 1.0,
                // 1 - U[0,1) lands in (0, 1].
                WeightDist::Uniform => 1.0 - rng.random::<f64>(),
            };
            Edge { i, j, weight }
        })
        .collect()
}

fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "er probability p = {p} outside (0, 1]"
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

fn barabasi_albert(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    if m < 1 || m + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "ba requires 1 <= m and m + 1 <= n (got m = {m}, n = {n})"
        )));
    }
    let mut pairs = Vec::new();
    // Complete seed graph on m + 1 nodes.
    for i in 0..=m {
        for j in (i + 1)..=m {
            pairs.push((i, j));
        }
    }
    // One entry per edge endpoint; uniform sampling is degree-proportional.
    let mut endpoints = Vec::with_capacity(2 * (pairs.len() + (n - m - 1) * m));
    for &(i, j) in &pairs {
        endpoints.push(i);
        endpoints.push(j);
    }
    let mut targets = Vec::with_capacity(m);
    for v in (m + 1)..n {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            pairs.push((t.min(v), t.max(v)));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Ok(pairs)
}

fn powerlaw_configuration(
    n: usize,
    gamma: f64,
    k_min: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(usize, usize)>> {
    if gamma <= 2.0 {
        return Err(Error::InvalidParameter(format!(
            "powerlaw-config requires gamma > 2 (got {gamma})"
        )));
    }
    if k_min < 1 || k_min >= n {
        return Err(Error::InvalidParameter(format!(
            "powerlaw-config requires 1 <= k_min < n (got k_min = {k_min}, n = {n})"
        )));
    }
    // Discrete inverse-CDF sampling of Pr(k) ~ k^(-gamma), k_min <= k <= n-1.
    let cumulative: Vec<f64> = (k_min..n)
        .scan(0.0, |acc, k| {
            *acc += (k as f64).powf(-gamma);
            Some(*acc)
        })
        .collect();
    let total = *cumulative.last().unwrap();
    let mut degrees: Vec<usize> = (0..n)
        .map(|_| {
            let u = rng.random::<f64>() * total;
            let idx = cumulative.partition_point(|&c| c < u);
            k_min + idx.min(cumulative.len() - 1)
        })
        .collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        let v = rng.random_range(0..n);
        degrees[v] += 1;
    }

    let mut stubs = Vec::with_capacity(degrees.iter().sum());
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat(v).take(d));
    }
    stubs.shuffle(rng);

    // Erased configuration model: pair stubs, drop self-loops and repeats.
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for chunk in stubs.chunks_exact(2) {
        let (a, b) = (chunk[0], chunk[1]);
        if a == b {
            continue;
        }
        let pair = (a.min(b), a.max(b));
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    Ok(pairs)
}

fn ring_lattice(n: usize, k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 1 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "ring-lattice requires 1 <= k and 2k < n (got k = {k}, n = {n})"
        )));
    }
    let mut pairs = Vec::with_capacity(n * k);
    for i in 0..n {
        for s in 1..=k {
            let j = (i + s) % n;
            pairs.push((i.min(j), i.max(j)));
        }
    }
    Ok(pairs)
}

fn watts_strogatz(
    n: usize,
    k: usize,
    rewire: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(usize, usize)>> {
    if !(0.0..=1.0).contains(&rewire) {
        return Err(Error::InvalidParameter(format!(
            "watts-strogatz rewire probability {rewire} outside [0, 1]"
        )));
    }
    let base = ring_lattice(n, k)?;
    let mut edges: HashSet<(usize, usize)> = base.iter().copied().collect();
    for i in 0..n {
        for s in 1..=k {
            let j = (i + s) % n;
            let old = (i.min(j), i.max(j));
            if !edges.contains(&old) || !rng.random_bool(rewire) {
                continue;
            }
            // Rewire the far endpoint, keeping i.
            let mut attempts = 0;
            loop {
                let t = rng.random_range(0..n);
                let candidate = (i.min(t), i.max(t));
                if t != i && !edges.contains(&candidate) {
                    edges.remove(&old);
                    edges.insert(candidate);
                    break;
                }
                attempts += 1;
                if attempts > 100 * n {
                    break; // node saturated; keep the lattice edge
                }
            }
        }
    }
    Ok(edges.into_iter().collect())
}

fn random_geometric(n: usize, radius: f64, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    if !(radius > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "random-geometric radius {radius} must be > 0"
        )));
    }
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect();
    let r2 = radius * radius;
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            if dx * dx + dy * dy < r2 {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}
