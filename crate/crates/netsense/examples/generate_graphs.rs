//! Samples every graph architecture, prints its headline stats, and round-
//! trips one of them through the edge-list format.

use netsense::netgen::{self, GraphKind, GraphSpec, WeightDist, WeightMode};

fn main() -> netsense::Result<()> {
    let n = 512;
    let seed = 42;
    let kinds = [
        ("er", GraphKind::Er { p: 0.02 }),
        ("ba", GraphKind::Ba { m: 4 }),
        (
            "powerlaw-config",
            GraphKind::PowerlawConfig {
                gamma: 2.5,
                k_min: 2,
            },
        ),
        ("ring-lattice", GraphKind::RingLattice { k: 3 }),
        (
            "watts-strogatz",
            GraphKind::WattsStrogatz {
                k: 3,
                rewire: 0.1,
            },
        ),
        (
            "random-geometric",
            GraphKind::RandomGeometric { radius: 0.08 },
        ),
        ("star", GraphKind::Star),
        ("path", GraphKind::Path),
        ("cycle", GraphKind::Cycle),
        ("complete", GraphKind::Complete),
    ];

    println!("{:<18} {:>7} {:>9} {:>8} {:>8}", "kind", "edges", "kappa", "max deg", "min deg");
    for (name, kind) in kinds {
        let spec = GraphSpec::new(n, kind, WeightDist::Uniform, seed);
        let g = netgen::generate(&spec)?;
        let max_deg = g.degree().iter().max().copied().unwrap_or(0);
        let min_deg = g.degree().iter().min().copied().unwrap_or(0);
        println!(
            "{name:<18} {:>7} {:>9.4} {:>8} {:>8}",
            g.edge_count(),
            g.kappa(),
            max_deg,
            min_deg
        );
    }

    // Edge-list round trip. The loader interns labels in first-appearance
    // order, so the reloaded graph matches up to a node relabeling.
    let g = netgen::generate(&GraphSpec::new(
        64,
        GraphKind::Er { p: 0.1 },
        WeightDist::Uniform,
        seed,
    ))?;
    let path = std::env::temp_dir().join("netsense_example_graph.edges");
    netgen::save_edge_list(&g, &path)?;
    let (reloaded, report) = netgen::load_edge_list(&path, WeightMode::FromFile)?;
    assert_eq!(g.n(), reloaded.n());
    assert_eq!(g.edge_count(), reloaded.edge_count());
    assert_eq!(g.kappa(), reloaded.kappa());
    let sorted = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    assert_eq!(sorted(g.degree()), sorted(reloaded.degree()));
    println!(
        "\nround trip through {} kept all {} edges ({} duplicates, {} self-loops)",
        path.display(),
        reloaded.edge_count(),
        report.duplicate_edges_dropped,
        report.self_loops_dropped
    );
    Ok(())
}
