//! Graph architectures and the scaled symmetric interaction matrix.
//!
//! A network of `n` agents is stored as an undirected [`WeightedGraph`] with
//! raw interaction strengths `rho_ij` in `(0, 1]`. The coupling matrix used by
//! the dynamics is `A[i][j] = rho_ij / kappa`, where `kappa = 2E/n` is the
//! realized mean degree of the sampled graph. Dividing by the mean degree
//! keeps the spectrum of `A` bounded as the network grows.

mod edge_list;
mod generators;

pub use edge_list::{load_edge_list, save_edge_list, write_edge_list, LoadReport, WeightMode};
pub use generators::generate;

use ndarray::Array2;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::PathBuf;

use crate::error::{Error, Result};

/// One undirected edge with its raw interaction strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

/// Undirected weighted graph with per-node degrees and realized mean degree.
///
/// Invariants enforced at construction: `i < j` for every edge, indices in
/// `[0, n)`, no duplicates or self-loops, all weights in `(0, 1]`. Edges are
/// stored sorted by `(i, j)` so identical graphs compare and serialize
/// identically. Instances are immutable.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    degree: Vec<usize>,
    kappa: f64,
}

impl WeightedGraph {
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph must have n >= 1".into()));
        }
        edges.sort_unstable_by(|a, b| (a.i, a.j).cmp(&(b.i, b.j)));
        let mut seen = HashSet::with_capacity(edges.len());
        let mut degree = vec![0usize; n];
        for e in &edges {
            if e.i >= e.j {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) must satisfy i < j (self-loops forbidden)",
                    e.i, e.j
                )));
            }
            if e.j >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) out of range for n = {}",
                    e.i, e.j, n
                )));
            }
            if !(e.weight > 0.0 && e.weight <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) weight {} outside (0, 1]",
                    e.i, e.j, e.weight
                )));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({}, {})",
                    e.i, e.j
                )));
            }
            degree[e.i] += 1;
            degree[e.j] += 1;
        }
        let kappa = 2.0 * edges.len() as f64 / n as f64;
        Ok(Self {
            n,
            edges,
            degree,
            kappa,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Per-node integer degree (edge count, not weighted).
    pub fn degree(&self) -> &[usize] {
        &self.degree
    }

    /// Realized mean degree `2E/n`.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Applies a node permutation: node `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(
                "permutation length must equal n".into(),
            ));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            hit[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.i], perm[e.j]);
                Edge {
                    i: a.min(b),
                    j: a.max(b),
                    weight: e.weight,
                }
            })
            .collect();
        Self::new(self.n, edges)
    }
}

/// Dense symmetric coupling matrix `A` with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionMatrix {
    n: usize,
    a: Array2<f64>,
}

impl InteractionMatrix {
    /// The all-zeros matrix (isolated agents).
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            a: Array2::zeros((n, n)),
        }
    }

    /// Wraps an existing dense matrix, requiring bitwise symmetry and a zero
    /// diagonal.
    pub fn from_dense(a: Array2<f64>) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::InvalidParameter("matrix must be square".into()));
        }
        for i in 0..n {
            if a[[i, i]] != 0.0 {
                return Err(Error::InvalidParameter("diagonal must be zero".into()));
            }
            for j in (i + 1)..n {
                if a[[i, j]].to_bits() != a[[j, i]].to_bits() {
                    return Err(Error::InvalidParameter(
                        "matrix must be bitwise symmetric".into(),
                    ));
                }
            }
        }
        Ok(Self { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Array2<f64> {
        &self.a
    }
}

/// Builds `A[i][j] = rho_ij / kappa` from a graph with at least one edge.
pub fn interaction_matrix(g: &WeightedGraph) -> Result<InteractionMatrix> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let mut a = Array2::zeros((g.n(), g.n()));
    let kappa = g.kappa();
    for e in g.edges() {
        let v = e.weight / kappa;
        a[[e.i, e.j]] = v;
        a[[e.j, e.i]] = v;
    }
    Ok(InteractionMatrix { n: g.n(), a })
}

/// Distribution of the raw interaction strengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum WeightDist {
    /// Every edge weight is exactly 1.
    #[default]
    Constant,
    /// I.i.d. uniform on `(0, 1]`.
    Uniform,
}

/// Which architecture to generate, with its kind-specific parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphKind {
    /// G(n, p): each pair is an edge independently with probability `p`.
    Er { p: f64 },
    /// Preferential attachment: a complete seed on `m + 1` nodes, then each
    /// new node attaches `m` edges to distinct degree-weighted targets.
    Ba { m: usize },
    /// Degrees sampled from `Pr(deg = k) ~ k^(-gamma)` for `k >= k_min`,
    /// wired with the erased configuration model.
    PowerlawConfig { gamma: f64, k_min: usize },
    /// Ring where each node links to its `k` nearest neighbors per side.
    RingLattice { k: usize },
    /// Ring lattice with each edge rewired with probability `rewire`.
    WattsStrogatz { k: usize, rewire: f64 },
    /// Uniform points in the unit square, linked when closer than `radius`.
    RandomGeometric { radius: f64 },
    Star,
    Path,
    Cycle,
    Complete,
    /// Load from an edge-list file instead of sampling.
    File { path: PathBuf, weights: WeightMode },
}

/// Full recipe for one graph: kind, size, weight distribution, seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    #[serde(flatten)]
    pub kind: GraphKind,
    #[serde(default)]
    pub weight_dist: WeightDist,
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(n: usize, kind: GraphKind, weight_dist: WeightDist, seed: u64) -> Self {
        Self {
            n,
            kind,
            weight_dist,
            seed,
        }
    }

    /// Same spec at a different size (used by scaling experiments).
    pub fn with_n(&self, n: usize) -> Self {
        Self {
            n,
            ..self.clone()
        }
    }

    /// Same spec with a different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }
}

/// Derives the seed for one independent trial from a master seed.
///
/// Uses the splitmix64 finalizer on `master + (index + 1) * golden_gamma`,
/// the standard way to split a 64-bit seed into decorrelated streams.
/// Identical `(master, index)` pairs always yield the same seed.
pub fn derive_trial_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add((index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
