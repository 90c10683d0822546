//! Node and mean sensitivity across a frequency grid.
//!
//! Two routes compute the same quantities. The direct route solves
//! `(g(iw) I - A) x = 1` with a dense complex factorization per frequency;
//! the spectral route expands the same solve in the eigenbasis,
//! `x = sum_i <1, phi_i> h_i(iw) phi_i`, which after one eigendecomposition
//! costs O(N^2) per frequency and exposes the first-mode/residue split of
//! the mean response. The two must agree to high accuracy; tests enforce it.

use ndarray::{Array1, Array2};
use ndarray_linalg::{c64, Factorize, ReciprocalConditionNum, Solve};
use num_complex::Complex64;
use rayon::prelude::*;
use std::io::Write;

use crate::dynamics::{self, NodalDynamics};
use crate::error::{Error, Result};
use crate::netgen::InteractionMatrix;
use crate::spectral::SpectralDecomposition;

/// Condition estimates below this reciprocal make a frequency "near-pole".
const RCOND_FLOOR: f64 = 1e-12;

/// Strictly increasing positive frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    omegas: Vec<f64>,
}

impl FrequencyGrid {
    pub fn new(omegas: Vec<f64>) -> Result<Self> {
        if omegas.is_empty() {
            return Err(Error::InvalidParameter("empty frequency grid".into()));
        }
        if !omegas.iter().all(|w| w.is_finite() && *w > 0.0) {
            return Err(Error::InvalidParameter(
                "frequencies must be finite and > 0".into(),
            ));
        }
        if !omegas.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidParameter(
                "frequencies must be strictly increasing".into(),
            ));
        }
        Ok(Self { omegas })
    }

    /// `count` log-spaced points over `[lo, hi]`, endpoints included.
    pub fn log_spaced(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(lo > 0.0 && hi > lo) {
            return Err(Error::InvalidParameter(format!(
                "log grid needs 0 < lo < hi (got lo = {lo}, hi = {hi})"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidParameter("grid needs >= 2 points".into()));
        }
        let (la, lb) = (lo.log10(), hi.log10());
        let omegas = (0..count)
            .map(|i| 10f64.powf(la + (lb - la) * i as f64 / (count - 1) as f64))
            .collect();
        Self::new(omegas)
    }

    /// Default experiment grid: 400 log-spaced points over
    /// `[1e-2, 1e2] * omega_n`.
    pub fn default_for(omega_n: f64) -> Result<Self> {
        Self::log_spaced(1e-2 * omega_n, 1e2 * omega_n, 400)
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }
}

/// Node response vector at one frequency via a dense complex factorization
/// of `g(iw) I - A`. Errors if the system is numerically singular there or
/// the solve residual exceeds `1e-9 sqrt(N)`.
pub fn node_sensitivity(
    a: &InteractionMatrix,
    dyn_: &NodalDynamics,
    omega: f64,
) -> Result<Array1<Complex64>> {
    let n = a.n();
    let g = dyn_.g_eval(Complex64::new(0.0, omega));
    let mut m = Array2::<c64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            m[[i, j]] = c64::new(-a.matrix()[[i, j]], 0.0);
        }
        m[[i, i]] += g;
    }
    let ones = Array1::<c64>::from_elem(n, c64::new(1.0, 0.0));

    let factorized = m
        .factorize()
        .map_err(|e| Error::NearPole {
            omega,
            detail: format!("factorization failed: {e}"),
        })?;
    let rcond = factorized
        .rcond()
        .map_err(|e| Error::Lapack(e.to_string()))?;
    if rcond < RCOND_FLOOR {
        return Err(Error::NearPole {
            omega,
            detail: format!("condition estimate {:.3e} exceeds 1e12", 1.0 / rcond),
        });
    }
    let x = factorized
        .solve(&ones)
        .map_err(|e| Error::Lapack(e.to_string()))?;

    let residual = (m.dot(&x) - &ones).mapv(|z| z.norm_sqr()).sum().sqrt();
    let bound = 1e-9 * (n as f64).sqrt();
    if residual > bound {
        return Err(Error::ResidualTooLarge {
            omega,
            residual,
            bound,
        });
    }
    Ok(x)
}

/// Mean of the direct-solve node responses.
pub fn mean_sensitivity_direct(
    a: &InteractionMatrix,
    dyn_: &NodalDynamics,
    omega: f64,
) -> Result<Complex64> {
    let x = node_sensitivity(a, dyn_, omega)?;
    Ok(x.sum() / x.len() as f64)
}

/// Mean response split into the first-mode term and the explicit sum over
/// the remaining modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralMean {
    pub total: Complex64,
    pub first_mode: Complex64,
    pub residue_part: Complex64,
}

/// Mean response via the eigenbasis: `sum_i w_i h_i(iw)`. The residue part
/// is summed explicitly over modes 2..N, never obtained by subtraction.
pub fn mean_sensitivity_spectral(
    dec: &SpectralDecomposition,
    dyn_: &NodalDynamics,
    omega: f64,
) -> Result<SpectralMean> {
    let s = Complex64::new(0.0, omega);
    let g = dyn_.g_eval(s);
    if let Some(lambda) = dec
        .eigenvalues()
        .iter()
        .find(|&&l| (g - l).norm() <= 1e-12)
    {
        return Err(Error::NearPole {
            omega,
            detail: format!("g(i omega) within 1e-12 of eigenvalue {lambda}"),
        });
    }
    let h = |lambda: f64| (g - lambda).inv();
    let first_mode = dec.weights()[0] * h(dec.eigenvalues()[0]);
    let mut residue_part = Complex64::new(0.0, 0.0);
    for i in 1..dec.n() {
        let w = dec.weights()[i];
        if w != 0.0 {
            residue_part += w * h(dec.eigenvalues()[i]);
        }
    }
    Ok(SpectralMean {
        total: first_mode + residue_part,
        first_mode,
        residue_part,
    })
}

/// Node response vector at one frequency via the eigenbasis.
pub fn node_sensitivity_spectral(
    dec: &SpectralDecomposition,
    dyn_: &NodalDynamics,
    omega: f64,
) -> Result<Array1<Complex64>> {
    let s = Complex64::new(0.0, omega);
    let g = dyn_.g_eval(s);
    let n = dec.n();
    let mut re = vec![0.0f64; n];
    let mut im = vec![0.0f64; n];
    for i in 0..n {
        let c = dec.ones_overlap()[i];
        if c == 0.0 {
            continue;
        }
        let coeff = c * (g - dec.eigenvalues()[i]).inv();
        let phi = dec.eigenvector(i);
        let phi = phi.as_slice().expect("contiguous eigenvector column");
        let (cr, ci) = (coeff.re, coeff.im);
        for j in 0..n {
            re[j] += cr * phi[j];
            im[j] += ci * phi[j];
        }
    }
    Ok(Array1::from_iter(
        re.into_iter().zip(im).map(|(r, i)| Complex64::new(r, i)),
    ))
}

/// Per-frequency responses over a grid, with the first-mode/residue split
/// of the mean response.
#[derive(Debug, Clone)]
pub struct FrequencySweep {
    grid: FrequencyGrid,
    /// Row per frequency, column per node.
    node_response: Array2<Complex64>,
    mean_response: Vec<Complex64>,
    first_mode: Vec<Complex64>,
    residue_part: Vec<Complex64>,
    /// Frequencies dropped as near-pole, with the reason.
    skipped: Vec<(f64, String)>,
}

impl FrequencySweep {
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn omegas(&self) -> &[f64] {
        self.grid.omegas()
    }

    pub fn n_nodes(&self) -> usize {
        self.node_response.ncols()
    }

    /// Node responses at grid index `k`.
    pub fn node_response(&self, k: usize) -> ndarray::ArrayView1<'_, Complex64> {
        self.node_response.row(k)
    }

    pub fn mean_response(&self) -> &[Complex64] {
        &self.mean_response
    }

    pub fn first_mode(&self) -> &[Complex64] {
        &self.first_mode
    }

    pub fn residue_part(&self) -> &[Complex64] {
        &self.residue_part
    }

    pub fn skipped(&self) -> &[(f64, String)] {
        &self.skipped
    }

    /// Magnitude of the mean response in dB (20 log10).
    pub fn mean_magnitude_db(&self) -> Vec<f64> {
        self.mean_response
            .iter()
            .map(|z| 20.0 * z.norm().log10())
            .collect()
    }

    /// CSV export. Always emits the mean-response columns; per-node
    /// magnitude/phase columns are added on request.
    pub fn write_csv(&self, mut out: impl Write, per_node: bool) -> std::io::Result<()> {
        let mut header = vec![
            "omega".to_string(),
            "re_mean".into(),
            "im_mean".into(),
            "mag_mean_db".into(),
            "phase_mean_deg".into(),
            "re_first".into(),
            "im_first".into(),
            "re_residue".into(),
            "im_residue".into(),
        ];
        if per_node {
            for j in 0..self.n_nodes() {
                header.push(format!("mag_node_{j}"));
                header.push(format!("phase_node_{j}"));
            }
        }
        out.write_all(header.join(",").as_bytes())?;
        out.write_all(b"\r\n")?;
        for (k, &omega) in self.omegas().iter().enumerate() {
            let mean = self.mean_response[k];
            let first = self.first_mode[k];
            let residue = self.residue_part[k];
            let mut fields = vec![
                format!("{omega}"),
                format!("{}", mean.re),
                format!("{}", mean.im),
                format!("{}", 20.0 * mean.norm().log10()),
                format!("{}", mean.arg().to_degrees()),
                format!("{}", first.re),
                format!("{}", first.im),
                format!("{}", residue.re),
                format!("{}", residue.im),
            ];
            if per_node {
                for z in self.node_response.row(k) {
                    fields.push(format!("{}", z.norm()));
                    fields.push(format!("{}", z.arg().to_degrees()));
                }
            }
            out.write_all(fields.join(",").as_bytes())?;
            out.write_all(b"\r\n")?;
        }
        Ok(())
    }
}

/// Full sweep over a grid. Rejects unstable systems up front (the leading
/// eigenvalue must give a stable closed loop). Near-pole frequencies are
/// recorded and skipped rather than extrapolated.
pub fn sweep(
    a: &InteractionMatrix,
    dec: &SpectralDecomposition,
    dyn_: &NodalDynamics,
    grid: &FrequencyGrid,
) -> Result<FrequencySweep> {
    if a.n() != dec.n() {
        return Err(Error::InvalidParameter(
            "matrix and decomposition dimensions differ".into(),
        ));
    }
    let lambda_1 = dec.lambda_max();
    let report = dynamics::is_stable(dyn_, lambda_1)?;
    if !report.stable {
        return Err(Error::Unstable {
            lambda: lambda_1,
            margin: report.margin,
        });
    }

    // Frequencies are independent; results are assembled in grid order.
    let per_freq: Vec<(f64, Result<(SpectralMean, Array1<Complex64>)>)> = grid
        .omegas()
        .par_iter()
        .map(|&omega| {
            let out = mean_sensitivity_spectral(dec, dyn_, omega).and_then(|mean| {
                let nodes = node_sensitivity_spectral(dec, dyn_, omega)?;
                Ok((mean, nodes))
            });
            (omega, out)
        })
        .collect();

    let n = a.n();
    let mut kept_omegas = Vec::with_capacity(grid.len());
    let mut mean_response = Vec::with_capacity(grid.len());
    let mut first_mode = Vec::with_capacity(grid.len());
    let mut residue_part = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    let mut skipped = Vec::new();
    for (omega, out) in per_freq {
        match out {
            Ok((mean, nodes)) => {
                kept_omegas.push(omega);
                mean_response.push(mean.total);
                first_mode.push(mean.first_mode);
                residue_part.push(mean.residue_part);
                rows.push(nodes);
            }
            Err(Error::NearPole { detail, .. }) => skipped.push((omega, detail)),
            Err(e) => return Err(e),
        }
    }
    if kept_omegas.is_empty() {
        return Err(Error::NearPole {
            omega: grid.omegas()[0],
            detail: "every grid frequency was near a pole".into(),
        });
    }
    let mut node_response = Array2::zeros((kept_omegas.len(), n));
    for (k, row) in rows.into_iter().enumerate() {
        node_response.row_mut(k).assign(&row);
    }
    Ok(FrequencySweep {
        grid: FrequencyGrid::new(kept_omegas)?,
        node_response,
        mean_response,
        first_mode,
        residue_part,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netgen::{self, Edge, GraphKind, GraphSpec, WeightDist, WeightedGraph};
    use crate::spectral::decompose;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn star(n: usize) -> InteractionMatrix {
        let edges = (1..n)
            .map(|j| Edge {
                i: 0,
                j,
                weight: 1.0,
            })
            .collect();
        netgen::interaction_matrix(&WeightedGraph::new(n, edges).unwrap()).unwrap()
    }

    fn complete(n: usize) -> InteractionMatrix {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push(Edge {
                    i,
                    j,
                    weight: 1.0,
                });
            }
        }
        netgen::interaction_matrix(&WeightedGraph::new(n, edges).unwrap()).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(FrequencyGrid::new(vec![]).is_err());
        assert!(FrequencyGrid::new(vec![0.0, 1.0]).is_err());
        assert!(FrequencyGrid::new(vec![1.0, 1.0]).is_err());
        assert!(FrequencyGrid::new(vec![2.0, 1.0]).is_err());
        let g = FrequencyGrid::log_spaced(0.01, 100.0, 400).unwrap();
        assert_eq!(g.len(), 400);
        assert_abs_diff_eq!(g.omegas()[0], 0.01, epsilon = 1e-12);
        assert_abs_diff_eq!(g.omegas()[399], 100.0, epsilon = 1e-9);
    }

    #[test]
    fn decoupled_nodes_respond_like_f() {
        let a = InteractionMatrix::zeros(5);
        let d = NodalDynamics::second_order(1.0, 0.1, 0.8).unwrap();
        let omega = 0.7;
        let x = node_sensitivity(&a, &d, omega).unwrap();
        let f = dynamics::f_eval(&d, Complex64::new(0.0, omega)).unwrap();
        for z in &x {
            assert_relative_eq!(z.re, f.re, max_relative = 1e-12);
            assert_relative_eq!(z.im, f.im, max_relative = 1e-12);
        }
        let mean = mean_sensitivity_direct(&a, &d, omega).unwrap();
        assert_relative_eq!(mean.re, f.re, max_relative = 1e-12);

        // Spectral route: all eigenvalues zero, total = f, first = w1 f.
        let dec = decompose(&a).unwrap();
        let m = mean_sensitivity_spectral(&dec, &d, omega).unwrap();
        assert_relative_eq!(m.total.re, f.re, max_relative = 1e-10);
        assert_relative_eq!(m.total.im, f.im, max_relative = 1e-10);
        let w1f = dec.weights()[0] * f;
        assert_relative_eq!(m.first_mode.re, w1f.re, max_relative = 1e-10);
    }

    #[test]
    fn star_leaves_are_exactly_symmetric() {
        let a = star(8);
        let d = NodalDynamics::second_order(1.0, 0.05, 0.5).unwrap();
        for omega in [0.3, 1.0, 2.5] {
            let x = node_sensitivity(&a, &d, omega).unwrap();
            for leaf in 2..8 {
                assert_abs_diff_eq!(x[leaf].re, x[1].re, epsilon = 1e-12);
                assert_abs_diff_eq!(x[leaf].im, x[1].im, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn complete_graph_mean_is_h_at_lambda_one() {
        let a = complete(16);
        let d = NodalDynamics::second_order(2.0_f64.sqrt(), 0.05, 0.37949).unwrap();
        for omega in [0.1, 1.0, 1.4, 8.0] {
            let mean = mean_sensitivity_direct(&a, &d, omega).unwrap();
            let h = dynamics::h_eval(&d, 1.0, Complex64::new(0.0, omega)).unwrap();
            assert_relative_eq!(mean.re, h.re, max_relative = 1e-9);
            assert_relative_eq!(mean.im, h.im, max_relative = 1e-9);
        }
    }

    #[test]
    fn spectral_and_direct_means_agree_on_random_graphs() {
        let d = NodalDynamics::second_order(1.0, 0.08, 0.3).unwrap();
        for seed in 0..5 {
            let spec = GraphSpec::new(
                40,
                GraphKind::Er { p: 0.15 },
                WeightDist::Uniform,
                seed,
            );
            let g = netgen::generate(&spec).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let a = netgen::interaction_matrix(&g).unwrap();
            let dec = decompose(&a).unwrap();
            for omega in [0.2, 0.9, 1.1, 6.0] {
                let direct = mean_sensitivity_direct(&a, &d, omega).unwrap();
                let spectral = mean_sensitivity_spectral(&dec, &d, omega).unwrap();
                let rel = (spectral.total - direct).norm() / direct.norm();
                assert!(rel <= 1e-8, "seed {seed} omega {omega}: rel {rel}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry_at_negated_frequency() {
        let a = star(6);
        let d = NodalDynamics::second_order(1.0, 0.05, 0.5).unwrap();
        let plus = node_sensitivity(&a, &d, 0.8).unwrap();
        let minus = node_sensitivity(&a, &d, -0.8).unwrap();
        for (p, m) in plus.iter().zip(minus.iter()) {
            assert_abs_diff_eq!(p.re, m.re, epsilon = 1e-12);
            assert_abs_diff_eq!(p.im, -m.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn cycle_nodes_respond_identically() {
        // Every node of a cycle is equivalent under rotation.
        let spec = GraphSpec::new(9, GraphKind::Cycle, WeightDist::Constant, 0);
        let g = netgen::generate(&spec).unwrap();
        let a = netgen::interaction_matrix(&g).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 0.5).unwrap();
        for omega in [0.4, 1.0, 2.7] {
            let x = node_sensitivity(&a, &d, omega).unwrap();
            for v in 1..9 {
                assert!((x[v] - x[0]).norm() <= 1e-10);
            }
        }
    }

    #[test]
    fn permutation_equivariance() {
        let spec = GraphSpec::new(12, GraphKind::Er { p: 0.3 }, WeightDist::Uniform, 11);
        let g = netgen::generate(&spec).unwrap();
        let perm: Vec<usize> = (0..12).map(|i| (i + 5) % 12).collect();
        let h = g.relabel(&perm).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.1, 0.4).unwrap();
        let omega = 1.3;
        let xg = node_sensitivity(&netgen::interaction_matrix(&g).unwrap(), &d, omega).unwrap();
        let xh = node_sensitivity(&netgen::interaction_matrix(&h).unwrap(), &d, omega).unwrap();
        for v in 0..12 {
            assert_abs_diff_eq!(xg[v].re, xh[perm[v]].re, epsilon = 1e-10);
            assert_abs_diff_eq!(xg[v].im, xh[perm[v]].im, epsilon = 1e-10);
        }
        let mg: Complex64 = xg.sum() / 12.0;
        let mh: Complex64 = xh.sum() / 12.0;
        assert_abs_diff_eq!(mg.re, mh.re, epsilon = 1e-10);
        assert_abs_diff_eq!(mg.im, mh.im, epsilon = 1e-10);
    }

    #[test]
    fn sweep_invariants_on_small_graph() {
        let spec = GraphSpec::new(8, GraphKind::Er { p: 0.4 }, WeightDist::Uniform, 3);
        let g = netgen::generate(&spec).unwrap();
        let a = netgen::interaction_matrix(&g).unwrap();
        let dec = decompose(&a).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 0.3).unwrap();
        let grid = FrequencyGrid::log_spaced(0.05, 20.0, 60).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        assert!(sw.skipped().is_empty());
        assert_eq!(sw.omegas().len(), 60);
        for k in 0..sw.omegas().len() {
            let mean = sw.mean_response()[k];
            // Mean equals the average of the node responses.
            let avg: Complex64 = sw.node_response(k).sum() / 8.0;
            assert!((mean - avg).norm() / mean.norm() <= 1e-9);
            // Mean equals first + residue.
            let split = sw.first_mode()[k] + sw.residue_part()[k];
            assert!((mean - split).norm() / mean.norm() <= 1e-9);
            // And the direct dense solve agrees with the spectral rows.
            let direct = node_sensitivity(&a, &d, sw.omegas()[k]).unwrap();
            for (u, v) in sw.node_response(k).iter().zip(direct.iter()) {
                assert!((u - v).norm() <= 1e-9 * v.norm().max(1e-3));
            }
        }
    }

    #[test]
    fn single_node_peaks_near_damped_resonance() {
        let a = InteractionMatrix::zeros(1);
        let dec = decompose(&a).unwrap();
        let (omega_n, zeta) = (1.0, 0.2);
        let d = NodalDynamics::second_order(omega_n, zeta, 0.9).unwrap();
        let grid = FrequencyGrid::log_spaced(0.01, 100.0, 2000).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        let mags = sw.mean_magnitude_db();
        let k_max = (0..mags.len())
            .max_by(|&i, &j| mags[i].total_cmp(&mags[j]))
            .unwrap();
        let peak_expected = omega_n * (1.0 - 2.0 * zeta * zeta).sqrt();
        let ratio = sw.omegas()[k_max] / peak_expected;
        assert!(
            ratio > 0.99 && ratio < 1.01,
            "peak at {} vs expected {peak_expected}",
            sw.omegas()[k_max]
        );
    }

    #[test]
    fn complete_graph_sweep_matches_limit_model() {
        let a = complete(16);
        let dec = decompose(&a).unwrap();
        let d = NodalDynamics::second_order(2.0_f64.sqrt(), 0.05, 0.37949).unwrap();
        let lim = dynamics::er_limit_model(&d).unwrap();
        let grid = FrequencyGrid::log_spaced(0.05, 50.0, 100).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        for (k, &omega) in sw.omegas().iter().enumerate() {
            let expect = dynamics::f_eval(&lim, Complex64::new(0.0, omega)).unwrap();
            let got = sw.mean_response()[k];
            assert!((got - expect).norm() <= 1e-9 * expect.norm().max(1.0));
            // Residue part is exactly zero: the only weighted mode is the first.
            assert_abs_diff_eq!(sw.residue_part()[k].norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn unstable_systems_are_rejected_up_front() {
        let a = complete(4);
        let dec = decompose(&a).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 1.5).unwrap();
        let grid = FrequencyGrid::log_spaced(0.1, 10.0, 10).unwrap();
        match sweep(&a, &dec, &d, &grid) {
            Err(Error::Unstable { lambda, .. }) => {
                assert_abs_diff_eq!(lambda, 1.0, epsilon = 1e-12)
            }
            other => panic!("expected Unstable, got {other:?}"),
        }
    }

    #[test]
    fn near_pole_is_reported_for_undamped_dynamics() {
        // Zero damping puts g(i omega) exactly on the eigenvalue at the
        // closed-loop resonance; the solver must refuse rather than emit
        // garbage. from_coeffs bypasses the zeta > 0 canonical check.
        let a = complete(4);
        let d = NodalDynamics::from_coeffs(vec![1.0 / 0.5, 0.0, 1.0 / 0.5]).unwrap();
        // g(iw) - 1 = 0 at w = sqrt(1 - 0.5) = 0.7071...
        let omega = (0.5f64).sqrt();
        match node_sensitivity(&a, &d, omega) {
            Err(Error::NearPole { .. }) | Err(Error::ResidualTooLarge { .. }) => {}
            other => panic!("expected near-pole failure, got {other:?}"),
        }
        let dec = decompose(&a).unwrap();
        assert!(matches!(
            mean_sensitivity_spectral(&dec, &d, omega),
            Err(Error::NearPole { .. })
        ));
    }

    #[test]
    fn csv_export_is_stable_and_parseable() {
        let a = star(4);
        let dec = decompose(&a).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 0.5).unwrap();
        let grid = FrequencyGrid::log_spaced(0.1, 10.0, 5).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        let mut buf = Vec::new();
        sw.write_csv(&mut buf, true).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        let lines: Vec<&str> = text.trim_end().split("\r\n").collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0].split(',').count(), 9 + 2 * 4);
        // Determinism: a second export is byte-identical.
        let mut buf2 = Vec::new();
        sw.write_csv(&mut buf2, true).unwrap();
        assert_eq!(buf, buf2);
    }
}
