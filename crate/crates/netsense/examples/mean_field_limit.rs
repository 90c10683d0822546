//! How close is a finite dense random network to its large-size limit?
//!
//! For homogeneous architectures the mean response approaches
//! `f/(1 - f)` -- the transfer function of a single renormalized
//! oscillator. This example sweeps growing sizes and reports the gap, its
//! two drivers (leading-eigenvalue shift and residual spectral weight),
//! and the renormalized oscillator parameters.

use netsense::dynamics::{closed_loop_limit_eval, er_limit_model, Descriptor, NodalDynamics};
use netsense::netgen::{self, GraphKind, GraphSpec, WeightDist};
use netsense::sensitivity::{sweep, FrequencyGrid};
use netsense::spectral;
use num_complex::Complex64;

fn main() -> netsense::Result<()> {
    let dyn_ = NodalDynamics::second_order(std::f64::consts::SQRT_2, 0.05, 0.37949)?;
    let limit = er_limit_model(&dyn_)?;
    if let Some(Descriptor::SecondOrder { omega_n, zeta, k }) = limit.descriptor() {
        println!(
            "limit oscillator: omega_n = {omega_n:.6}, zeta = {zeta:.6}, k = {k:.6}\n"
        );
    }

    let grid = FrequencyGrid::log_spaced(0.05, 50.0, 400)?;
    let reference: Vec<Complex64> = grid
        .omegas()
        .iter()
        .map(|&w| closed_loop_limit_eval(&dyn_, Complex64::new(0.0, w)).unwrap())
        .collect();
    let ref_peak = reference.iter().map(|z| z.norm()).fold(0.0, f64::max);

    println!(
        "{:>6} {:>9} {:>9} {:>9} {:>9} {:>10}",
        "n", "mean deg", "lambda_1", "w1", "gap", "gap/peak"
    );
    // Connection probability held fixed, so the mean degree p*n grows and
    // the network densifies toward the limit.
    let p = 0.05;
    for n in [128usize, 256, 512, 1024, 2048] {
        let spec = GraphSpec::new(n, GraphKind::Er { p }, WeightDist::Constant, 7);
        let graph = netgen::generate(&spec)?;
        let a = netgen::interaction_matrix(&graph)?;
        let dec = spectral::decompose(&a)?;
        let sw = sweep(&a, &dec, &dyn_, &grid)?;
        let gap = sw
            .mean_response()
            .iter()
            .zip(&reference)
            .map(|(m, r)| (m - r).norm())
            .fold(0.0, f64::max);
        println!(
            "{n:>6} {:>9.2} {:>9.4} {:>9.4} {:>9.4} {:>10.4}",
            graph.kappa(),
            dec.lambda_max(),
            dec.weights()[0],
            gap,
            gap / ref_peak
        );
    }
    println!(
        "\nBoth error sources scale like 1/(p n): the leading eigenvalue sits\n\
         near (mean degree + 1)/(mean degree) and drifts toward 1, and the\n\
         residual spectral weight 1 - w1 vanishes, so the whole network\n\
         behaves like one renormalized node."
    );
    Ok(())
}
