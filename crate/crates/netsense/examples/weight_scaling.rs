//! Classifies architectures by how the leading spectral weight
//! `w1 = <1, phi_1>^2 / N` scales with network size, then checks the
//! verdict against a frequency sweep at the largest size.

use netsense::analysis::{classify, weight_scaling, ScalingMode};
use netsense::dynamics::{max_stable_gain, NodalDynamics};
use netsense::netgen::{self, derive_trial_seed, GraphKind, GraphSpec, WeightDist};
use netsense::sensitivity::{sweep, FrequencyGrid};
use netsense::spectral;

fn main() -> netsense::Result<()> {
    let sizes = [128usize, 256, 512, 1024];
    let trials = 8;
    let (omega_n, zeta) = (std::f64::consts::SQRT_2, 0.05);
    let grid = FrequencyGrid::log_spaced(0.05, 50.0, 400)?;

    let families = [
        ("er", GraphKind::Er { p: 0.05 }, ScalingMode::Er),
        (
            "powerlaw gamma=2.5",
            GraphKind::PowerlawConfig {
                gamma: 2.5,
                k_min: 3,
            },
            ScalingMode::Sf,
        ),
        // Preferential attachment sits at the marginal exponent; its w1
        // decays only like 1/ln N at these sizes, so the verdict here is
        // honestly inconclusive.
        ("ba m=5", GraphKind::Ba { m: 5 }, ScalingMode::Sf),
        (
            "watts-strogatz",
            GraphKind::WattsStrogatz {
                k: 5,
                rewire: 0.2,
            },
            ScalingMode::Er,
        ),
        (
            "random-geometric",
            GraphKind::RandomGeometric { radius: 0.15 },
            ScalingMode::Er,
        ),
    ];

    for (name, kind, mode) in families {
        let template = GraphSpec::new(sizes[0], kind, WeightDist::Constant, 11);
        let scaling = weight_scaling(&template, &sizes, trials, mode)?;

        // Fresh sample at the largest size for the sweep-based evidence,
        // with the gain backed off from that sample's own lambda_1.
        let sweep_spec = template
            .with_n(*sizes.last().unwrap())
            .with_seed(derive_trial_seed(11, (sizes.len() * trials) as u64));
        let graph = netgen::generate(&sweep_spec)?;
        let a = netgen::interaction_matrix(&graph)?;
        let dec = spectral::decompose(&a)?;
        let k = max_stable_gain(omega_n, zeta, dec.lambda_max(), 0.1)?;
        let dyn_ = NodalDynamics::second_order(omega_n, zeta, k)?;
        let sw = sweep(&a, &dec, &dyn_, &grid)?;

        let verdict = classify(&scaling, &sw);
        println!(
            "{name:<18} mode {:?}: slope {:+.3} (R^2 {:.3}), w1 medians {:?} -> class {:?}",
            scaling.mode,
            scaling.regression.slope,
            scaling.regression.r_squared,
            scaling
                .median_w1
                .iter()
                .map(|w| (w * 1e3).round() / 1e3)
                .collect::<Vec<_>>(),
            verdict.class
        );
    }
    println!(
        "\nClass I families drive w1 to 1 (one mode carries the whole mean\n\
         response); class II families leak weight to the rest of the spectrum\n\
         at a power-law rate, and new collective behavior emerges."
    );
    Ok(())
}
