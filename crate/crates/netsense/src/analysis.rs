//! Experiment layer: degree-vs-response correlation and its sign crossover,
//! spectral-weight scaling in network size, peak counting, and the
//! two-class verdict on emergent macroscopic behavior.

use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;

use crate::error::{Error, Result};
use crate::netgen::{self, derive_trial_seed, GraphKind, GraphSpec, WeightedGraph};
use crate::sensitivity::FrequencySweep;
use crate::spectral;

/// Pearson correlation; 0 when either variance vanishes.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        0.0
    } else {
        sxy / (sxx * syy).sqrt()
    }
}

/// Ranks with ties averaged (1-based midranks).
fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let midrank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = midrank;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    pearson(&average_ranks(x), &average_ranks(y))
}

/// Per-frequency correlation between node degree and response magnitude.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationCurve {
    pub omegas: Vec<f64>,
    pub spearman: Vec<f64>,
    pub pearson: Vec<f64>,
}

impl CorrelationCurve {
    pub fn write_csv(&self, mut out: impl Write) -> std::io::Result<()> {
        out.write_all(b"omega,spearman,pearson\r\n")?;
        for k in 0..self.omegas.len() {
            out.write_all(
                format!(
                    "{},{},{}\r\n",
                    self.omegas[k], self.spearman[k], self.pearson[k]
                )
                .as_bytes(),
            )?;
        }
        Ok(())
    }
}

/// Correlates node degree with `|node response|` at every grid frequency.
/// Undefined (an error) when all degrees are equal.
pub fn degree_correlation(
    graph: &WeightedGraph,
    sweep: &FrequencySweep,
) -> Result<CorrelationCurve> {
    if graph.n() != sweep.n_nodes() {
        return Err(Error::InvalidParameter(
            "graph size does not match sweep".into(),
        ));
    }
    let degrees: Vec<f64> = graph.degree().iter().map(|&d| d as f64).collect();
    let first = degrees[0];
    if degrees.iter().all(|&d| d == first) {
        return Err(Error::ConstantDegrees);
    }
    let mut sp = Vec::with_capacity(sweep.omegas().len());
    let mut pe = Vec::with_capacity(sweep.omegas().len());
    for k in 0..sweep.omegas().len() {
        let mags: Vec<f64> = sweep.node_response(k).iter().map(|z| z.norm()).collect();
        sp.push(spearman(&degrees, &mags));
        pe.push(pearson(&degrees, &mags));
    }
    Ok(CorrelationCurve {
        omegas: sweep.omegas().to_vec(),
        spearman: sp,
        pearson: pe,
    })
}

/// Consecutive negative Spearman points required after a sign change.
const CROSSOVER_PERSISTENCE: usize = 5;

/// Smallest frequency where the Spearman curve flips from positive to
/// negative and stays negative for at least five grid points; linearly
/// interpolated between the bracketing grid points. `None` when the sign
/// never flips that way.
pub fn find_crossover(curve: &CorrelationCurve) -> Option<f64> {
    let s = &curve.spearman;
    for i in 1..s.len() {
        if !(s[i - 1] > 0.0 && s[i] < 0.0) {
            continue;
        }
        let run = s[i..].iter().take_while(|&&v| v < 0.0).count();
        if run >= CROSSOVER_PERSISTENCE {
            let (w0, w1) = (curve.omegas[i - 1], curve.omegas[i]);
            let t = s[i - 1] / (s[i - 1] - s[i]);
            return Some(w0 + t * (w1 - w0));
        }
    }
    None
}

/// Which scaling law to regress.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalingMode {
    /// Regress `log(1 - w1)` on `log N` (homogeneous architectures).
    Er,
    /// Regress `log w1` on `log N` (heavy-tailed architectures).
    Sf,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Regression {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Per-size spectral-weight trials and the fitted log-log regression.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingResult {
    pub mode: ScalingMode,
    pub sizes: Vec<usize>,
    /// `w1` per trial, outer index matching `sizes`.
    pub w1_trials: Vec<Vec<f64>>,
    /// Median of `w1` per size, over all trials.
    pub median_w1: Vec<f64>,
    /// Trials excluded from the regression because the transform was
    /// singular (`w1` exactly 1 in er mode, exactly 0 in sf mode).
    pub excluded_trials: usize,
    pub regression: Regression,
}

impl ScalingResult {
    pub fn write_csv(&self, mut out: impl Write) -> std::io::Result<()> {
        out.write_all(b"size,trial,w1\r\n")?;
        for (si, size) in self.sizes.iter().enumerate() {
            for (t, w1) in self.w1_trials[si].iter().enumerate() {
                out.write_all(format!("{size},{t},{w1}\r\n").as_bytes())?;
            }
        }
        Ok(())
    }
}

fn median(values: &mut Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

fn ols(x: &[f64], y: &[f64]) -> Regression {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (a, b) in x.iter().zip(y) {
        let fit = intercept + slope * a;
        ss_res += (b - fit) * (b - fit);
        ss_tot += (b - my) * (b - my);
    }
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Regression {
        slope,
        intercept,
        r_squared,
    }
}

/// Runs `trials` independent graphs at every size, collects `w1`, and fits
/// the designated log-log law on per-size trial medians.
///
/// Trial seeds derive from `(template.seed, size index * trials + trial)`,
/// so runs are reproducible and trials can execute in parallel; results are
/// aggregated in `(size, trial)` order.
pub fn weight_scaling(
    template: &GraphSpec,
    sizes: &[usize],
    trials: usize,
    mode: ScalingMode,
) -> Result<ScalingResult> {
    if sizes.len() < 3 {
        return Err(Error::InvalidParameter(
            "scaling needs at least 3 sizes".into(),
        ));
    }
    if !sizes.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::InvalidParameter(
            "sizes must be strictly increasing".into(),
        ));
    }
    if trials < 5 {
        return Err(Error::InvalidParameter(
            "scaling needs at least 5 trials per size".into(),
        ));
    }
    if matches!(template.kind, GraphKind::File { .. }) {
        return Err(Error::InvalidParameter(
            "scaling requires a generative family, not a file".into(),
        ));
    }

    let w1_trials: Vec<Vec<f64>> = sizes
        .iter()
        .enumerate()
        .map(|(si, &size)| {
            (0..trials)
                .into_par_iter()
                .map(|t| {
                    let seed =
                        derive_trial_seed(template.seed, (si * trials + t) as u64);
                    let spec = template.with_n(size).with_seed(seed);
                    let graph = netgen::generate(&spec)?;
                    let a = netgen::interaction_matrix(&graph)?;
                    let dec = spectral::decompose(&a)?;
                    Ok(dec.weights()[0])
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let median_w1: Vec<f64> = w1_trials
        .iter()
        .map(|ws| median(&mut ws.clone()))
        .collect();

    let mut excluded = 0usize;
    let mut log_sizes = Vec::with_capacity(sizes.len());
    let mut log_medians = Vec::with_capacity(sizes.len());
    for (si, ws) in w1_trials.iter().enumerate() {
        let mut transformed: Vec<f64> = ws
            .iter()
            .filter_map(|&w1| match mode {
                ScalingMode::Er => {
                    if w1 == 1.0 {
                        None
                    } else {
                        Some((1.0 - w1).ln())
                    }
                }
                ScalingMode::Sf => {
                    if w1 == 0.0 {
                        None
                    } else {
                        Some(w1.ln())
                    }
                }
            })
            .collect();
        excluded += ws.len() - transformed.len();
        if transformed.is_empty() {
            return Err(Error::DegenerateScaling { excluded });
        }
        log_sizes.push((sizes[si] as f64).ln());
        log_medians.push(median(&mut transformed));
    }

    Ok(ScalingResult {
        mode,
        sizes: sizes.to_vec(),
        w1_trials,
        median_w1,
        excluded_trials: excluded,
        regression: ols(&log_sizes, &log_medians),
    })
}

/// Default prominence filter for peak counting, in dB.
pub const DEFAULT_PEAK_PROMINENCE_DB: f64 = 3.0;

/// Indices of prominent strict local maxima of a dB magnitude series.
///
/// A maximum counts when it rises at least `prominence_db` above the higher
/// of its two flanking minima, each taken between the peak and the nearest
/// strictly higher point (or the series boundary).
pub fn prominent_peaks_db(mags_db: &[f64], prominence_db: f64) -> Vec<usize> {
    let mut peaks = Vec::new();
    if mags_db.len() < 3 {
        return peaks;
    }
    for p in 1..mags_db.len() - 1 {
        if !(mags_db[p] > mags_db[p - 1] && mags_db[p] > mags_db[p + 1]) {
            continue;
        }
        let mut left_min = f64::INFINITY;
        for j in (0..p).rev() {
            if mags_db[j] > mags_db[p] {
                break;
            }
            left_min = left_min.min(mags_db[j]);
        }
        let mut right_min = f64::INFINITY;
        for j in (p + 1)..mags_db.len() {
            if mags_db[j] > mags_db[p] {
                break;
            }
            right_min = right_min.min(mags_db[j]);
        }
        if mags_db[p] - left_min.max(right_min) >= prominence_db {
            peaks.push(p);
        }
    }
    peaks
}

/// Count of prominent peaks; see [`prominent_peaks_db`].
pub fn count_peaks_db(mags_db: &[f64], prominence_db: f64) -> usize {
    prominent_peaks_db(mags_db, prominence_db).len()
}

/// Prominent peaks of the mean response, with the default 3 dB filter.
pub fn count_peaks(sweep: &FrequencySweep) -> usize {
    count_peaks_db(&sweep.mean_magnitude_db(), DEFAULT_PEAK_PROMINENCE_DB)
}

/// Longest contiguous run of grid points past the first prominent peak
/// where the residue part of the mean response exceeds the first-mode
/// part in magnitude. Returns `(start index, length)`.
pub fn residue_dominance_band(sweep: &FrequencySweep) -> Option<(usize, usize)> {
    let mags = sweep.mean_magnitude_db();
    let first_peak = prominent_peaks_db(&mags, DEFAULT_PEAK_PROMINENCE_DB)
        .first()
        .copied()
        .unwrap_or(0);
    let mut best: Option<(usize, usize)> = None;
    let mut run_start = None;
    for k in (first_peak + 1)..sweep.omegas().len() {
        let dominant = sweep.residue_part()[k].norm() > sweep.first_mode()[k].norm();
        match (dominant, run_start) {
            (true, None) => run_start = Some(k),
            (false, Some(s)) => {
                if best.map_or(true, |(_, len)| k - s > len) {
                    best = Some((s, k - s));
                }
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = run_start {
        let len = sweep.omegas().len() - s;
        if best.map_or(true, |(_, l)| len > l) {
            best = Some((s, len));
        }
    }
    best
}

/// Classification cutoffs. These are artifact-level choices, not values
/// from the underlying theory, so they are exposed for tuning.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassifyThresholds {
    /// Emergent verdicts need an sf-mode slope at or below this.
    pub sf_slope_max: f64,
    /// ... with at least this regression quality.
    pub sf_r_squared_min: f64,
    /// ... and a residue-dominant band at least this long.
    pub residue_band_min: usize,
    /// "Toward 1" means the residual gap `1 - median(w1)` shrinks by at
    /// least this factor from the smallest to the largest size ...
    pub toward_one_shrink: f64,
    /// ... or was already below this at the largest size (families that
    /// plateau at high w1 count as converged).
    pub near_one_gap: f64,
}

impl Default for ClassifyThresholds {
    fn default() -> Self {
        Self {
            sf_slope_max: -0.2,
            sf_r_squared_min: 0.8,
            residue_band_min: 10,
            toward_one_shrink: 0.9,
            near_one_gap: 0.05,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SensitivityClass {
    /// The mean response converges to a single node's transfer function.
    #[serde(rename = "I")]
    ClassI,
    /// New macroscopic behavior emerges.
    #[serde(rename = "II")]
    ClassII,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// Everything the verdict is a function of.
#[derive(Debug, Clone, Serialize)]
pub struct Evidence {
    pub mode: ScalingMode,
    pub slope: f64,
    pub r_squared: f64,
    pub median_w1: Vec<f64>,
    pub peak_count: usize,
    pub residue_band_len: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassVerdict {
    pub class: SensitivityClass,
    pub evidence: Evidence,
}

/// Pure function of the evidence; re-running on stored evidence reproduces
/// the verdict.
pub fn verdict_from_evidence(
    evidence: &Evidence,
    thresholds: &ClassifyThresholds,
) -> SensitivityClass {
    let emergent = evidence.mode == ScalingMode::Sf
        && evidence.slope <= thresholds.sf_slope_max
        && evidence.r_squared >= thresholds.sf_r_squared_min
        && evidence.residue_band_len >= thresholds.residue_band_min;
    if emergent {
        return SensitivityClass::ClassII;
    }
    let first_gap = 1.0 - evidence.median_w1[0];
    let last_gap = 1.0 - evidence.median_w1[evidence.median_w1.len() - 1];
    let toward_one = last_gap <= thresholds.toward_one_shrink * first_gap + 1e-12
        || last_gap <= thresholds.near_one_gap;
    if toward_one && evidence.peak_count == 1 {
        return SensitivityClass::ClassI;
    }
    SensitivityClass::Inconclusive
}

pub fn classify_with(
    scaling: &ScalingResult,
    sweep: &FrequencySweep,
    thresholds: &ClassifyThresholds,
) -> ClassVerdict {
    let evidence = Evidence {
        mode: scaling.mode,
        slope: scaling.regression.slope,
        r_squared: scaling.regression.r_squared,
        median_w1: scaling.median_w1.clone(),
        peak_count: count_peaks(sweep),
        residue_band_len: residue_dominance_band(sweep).map_or(0, |(_, len)| len),
    };
    let class = verdict_from_evidence(&evidence, thresholds);
    ClassVerdict { class, evidence }
}

/// Classification with the default thresholds.
pub fn classify(scaling: &ScalingResult, sweep: &FrequencySweep) -> ClassVerdict {
    classify_with(scaling, sweep, &ClassifyThresholds::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::NodalDynamics;
    use crate::netgen::{Edge, WeightDist, WeightedGraph};
    use crate::sensitivity::{sweep, FrequencyGrid};
    use approx::assert_abs_diff_eq;

    #[test]
    fn spearman_handles_ties_with_average_ranks() {
        // Perfect monotone relation.
        assert_abs_diff_eq!(
            spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            spearman(&[1.0, 2.0, 3.0], &[30.0, 20.0, 10.0]),
            -1.0,
            epsilon = 1e-12
        );
        // Star degrees: leaves share one midrank, still monotone with size.
        let degrees = [9.0, 1.0, 1.0, 1.0];
        let mags = [5.0, 2.0, 2.0, 2.0];
        assert_abs_diff_eq!(spearman(&degrees, &mags), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn spearman_invariant_under_monotone_transform() {
        let x = [3.0, 1.0, 4.0, 1.5, 9.0, 2.0];
        let y = [0.3, 0.1, 0.9, 0.2, 0.8, 0.4];
        let y2: Vec<f64> = y.iter().map(|v| v * v).collect();
        assert_abs_diff_eq!(spearman(&x, &y), spearman(&x, &y2), epsilon = 1e-12);
    }

    #[test]
    fn crossover_on_synthetic_curve() {
        // +0.5 below omega = 1, -0.5 from 1 on; crossing interpolates to the
        // midpoint of the bracketing pair.
        let omegas: Vec<f64> = (1..=20).map(|i| i as f64 * 0.1).collect();
        let spearman_vals: Vec<f64> = omegas
            .iter()
            .map(|&w| if w < 1.0 { 0.5 } else { -0.5 })
            .collect();
        let curve = CorrelationCurve {
            pearson: spearman_vals.clone(),
            spearman: spearman_vals,
            omegas,
        };
        let cross = find_crossover(&curve).unwrap();
        assert_abs_diff_eq!(cross, 0.95, epsilon = 1e-12);
    }

    #[test]
    fn short_negative_dips_do_not_count() {
        let omegas: Vec<f64> = (1..=12).map(|i| i as f64).collect();
        let spearman_vals = vec![
            0.5, 0.4, -0.1, -0.2, 0.3, 0.4, 0.5, 0.6, 0.5, 0.4, 0.3, 0.2,
        ];
        let curve = CorrelationCurve {
            pearson: spearman_vals.clone(),
            spearman: spearman_vals,
            omegas,
        };
        assert_eq!(find_crossover(&curve), None);
    }

    #[test]
    fn constant_degrees_are_rejected() {
        let edges = (0..6)
            .map(|i| Edge {
                i: i.min((i + 1) % 6),
                j: i.max((i + 1) % 6),
                weight: 1.0,
            })
            .collect::<Vec<_>>();
        let g = WeightedGraph::new(6, edges).unwrap();
        let a = netgen::interaction_matrix(&g).unwrap();
        let dec = spectral::decompose(&a).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 0.4).unwrap();
        let grid = FrequencyGrid::log_spaced(0.1, 10.0, 20).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        assert!(matches!(
            degree_correlation(&g, &sw),
            Err(Error::ConstantDegrees)
        ));
    }

    #[test]
    fn peak_counting_with_prominence() {
        // One huge peak with a sub-threshold ripple on its shoulder.
        let mags = vec![-20.0, -5.0, 10.0, 2.0, 3.5, -10.0, -30.0];
        assert_eq!(count_peaks_db(&mags, 3.0), 1);
        // Lowering the filter admits the ripple.
        assert_eq!(count_peaks_db(&mags, 1.0), 2);
        // Two genuine peaks.
        let mags = vec![-20.0, 0.0, -15.0, -2.0, -25.0];
        assert_eq!(count_peaks_db(&mags, 3.0), 2);
        // Monotone series has none.
        let mags = vec![0.0, -1.0, -2.0, -3.0];
        assert_eq!(count_peaks_db(&mags, 3.0), 0);
    }

    #[test]
    fn scaling_argument_validation() {
        let template = GraphSpec::new(0, GraphKind::Er { p: 0.05 }, WeightDist::Constant, 1);
        assert!(weight_scaling(&template, &[16, 32], 5, ScalingMode::Er).is_err());
        assert!(weight_scaling(&template, &[16, 32, 32], 5, ScalingMode::Er).is_err());
        assert!(weight_scaling(&template, &[16, 32, 64], 4, ScalingMode::Er).is_err());
    }

    #[test]
    fn complete_family_er_mode_is_degenerate() {
        // w1 = 1 exactly at every size: every trial excluded, informative error.
        let template = GraphSpec::new(0, GraphKind::Complete, WeightDist::Constant, 1);
        match weight_scaling(&template, &[8, 16, 32], 5, ScalingMode::Er) {
            Err(Error::DegenerateScaling { excluded }) => assert_eq!(excluded, 5),
            other => panic!("expected DegenerateScaling, got {other:?}"),
        }
    }

    #[test]
    fn complete_family_sf_mode_classifies_as_class_i() {
        let template = GraphSpec::new(0, GraphKind::Complete, WeightDist::Constant, 1);
        let scaling = weight_scaling(&template, &[8, 16, 32], 5, ScalingMode::Sf).unwrap();
        assert_abs_diff_eq!(scaling.regression.slope, 0.0, epsilon = 1e-12);
        for m in &scaling.median_w1 {
            assert_abs_diff_eq!(*m, 1.0, epsilon = 1e-12);
        }
        // Sweep of one complete graph: single resonance bump.
        let g = netgen::generate(&template.with_n(32)).unwrap();
        let a = netgen::interaction_matrix(&g).unwrap();
        let dec = spectral::decompose(&a).unwrap();
        let d = NodalDynamics::second_order(1.0, 0.05, 0.5).unwrap();
        let grid = FrequencyGrid::log_spaced(0.01, 100.0, 300).unwrap();
        let sw = sweep(&a, &dec, &d, &grid).unwrap();
        let verdict = classify(&scaling, &sw);
        assert_eq!(verdict.class, SensitivityClass::ClassI);
        // Verdict is reproducible from the stored evidence.
        assert_eq!(
            verdict_from_evidence(&verdict.evidence, &ClassifyThresholds::default()),
            verdict.class
        );
    }

    #[test]
    fn scaling_is_deterministic_and_trial_counts_match() {
        let template = GraphSpec::new(0, GraphKind::Er { p: 0.2 }, WeightDist::Constant, 9);
        let a = weight_scaling(&template, &[16, 24, 32], 5, ScalingMode::Er).unwrap();
        let b = weight_scaling(&template, &[16, 24, 32], 5, ScalingMode::Er).unwrap();
        assert_eq!(a.w1_trials, b.w1_trials);
        assert!(a.w1_trials.iter().all(|t| t.len() == 5));
        assert_eq!(a.regression, b.regression);
    }

    #[test]
    fn weight_rescaling_leaves_w1_unchanged(){
        // Multiplying every rho by c only rescales A (kappa counts edges),
        // so eigenvectors and hence all w_i stay put.
        let base = GraphSpec::new(24, GraphKind::Er { p: 0.25 }, WeightDist::Uniform, 5);
        let g = netgen::generate(&base).unwrap();
        let scaled_edges: Vec<Edge> = g
            .edges()
            .iter()
            .map(|e| Edge {
                i: e.i,
                j: e.j,
                weight: e.weight * 0.25,
            })
            .collect();
        let h = WeightedGraph::new(24, scaled_edges).unwrap();
        let da = spectral::decompose(&netgen::interaction_matrix(&g).unwrap()).unwrap();
        let db = spectral::decompose(&netgen::interaction_matrix(&h).unwrap()).unwrap();
        for (wa, wb) in da.weights().iter().zip(db.weights()) {
            assert_abs_diff_eq!(wa, wb, epsilon = 1e-12);
        }
    }

    #[test]
    fn csv_exports() {
        let curve = CorrelationCurve {
            omegas: vec![0.5, 1.0],
            spearman: vec![0.4, -0.2],
            pearson: vec![0.3, -0.1],
        };
        let mut buf = Vec::new();
        curve.write_csv(&mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("omega,"));

        let template = GraphSpec::new(0, GraphKind::Complete, WeightDist::Constant, 1);
        let scaling = weight_scaling(&template, &[8, 16, 32], 5, ScalingMode::Sf).unwrap();
        let mut buf = Vec::new();
        scaling.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.trim_end().split("\r\n").count(), 1 + 15);
        let json = serde_json::to_string(&scaling).unwrap();
        assert!(json.contains("\"regression\""));
    }
}
