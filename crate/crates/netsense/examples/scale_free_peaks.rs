//! Emergent behavior in heavy-tailed networks: the mean response of a
//! preferential-attachment graph grows a second peak that no single
//! oscillator can reproduce, because the residual eigenmodes keep a finite
//! share of the response.

use netsense::analysis::{count_peaks, residue_dominance_band};
use netsense::dynamics::NodalDynamics;
use netsense::netgen::{self, GraphKind, GraphSpec, WeightDist};
use netsense::sensitivity::{sweep, FrequencyGrid};
use netsense::spectral;

fn main() -> netsense::Result<()> {
    let dyn_ = NodalDynamics::second_order(std::f64::consts::SQRT_2, 0.05, 0.37949)?;
    let grid = FrequencyGrid::log_spaced(0.05, 50.0, 400)?;

    for (label, kind) in [
        ("dense random (er)", GraphKind::Er { p: 0.005 }),
        ("preferential attachment (ba)", GraphKind::Ba { m: 5 }),
    ] {
        let spec = GraphSpec::new(2048, kind, WeightDist::Constant, 7);
        let graph = netgen::generate(&spec)?;
        let a = netgen::interaction_matrix(&graph)?;
        let dec = spectral::decompose(&a)?;
        let sw = sweep(&a, &dec, &dyn_, &grid)?;
        let peaks = count_peaks(&sw);
        print!(
            "{label:<30} w1 = {:.3}, residue = {:.3}, peaks = {peaks}",
            dec.weights()[0],
            dec.residue()
        );
        match residue_dominance_band(&sw) {
            Some((start, len)) => println!(
                ", residue dominates {len} grid points from omega = {:.2}",
                sw.omegas()[start]
            ),
            None => println!(", first mode dominates everywhere"),
        }
    }
    println!(
        "\nOnly the heavy-tailed architecture shows the second bump: its leading\n\
         eigenvector concentrates on the hubs, so the ones direction spreads\n\
         over many modes and their collective response survives at high frequency."
    );
    Ok(())
}
