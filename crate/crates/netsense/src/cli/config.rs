//! Layered configuration: JSON config file, `NETSENSE_SEED` environment
//! override for the seed, command-line flags on top. Flags win.

use serde::{Deserialize, Serialize};
use std::path::PathBuf;

use crate::dynamics::NodalDynamics;
use crate::error::{Error, Result};
use crate::netgen::{GraphKind, GraphSpec, WeightDist, WeightMode};
use crate::sensitivity::FrequencyGrid;

fn merge<T>(base: Option<T>, over: Option<T>) -> Option<T> {
    over.or(base)
}

/// Graph selection, mirrored between flags and the config file.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct GraphConfig {
    pub kind: Option<String>,
    pub n: Option<usize>,
    pub p: Option<f64>,
    pub m: Option<usize>,
    pub gamma: Option<f64>,
    pub k_min: Option<usize>,
    pub lattice_k: Option<usize>,
    pub rewire: Option<f64>,
    pub radius: Option<f64>,
    pub path: Option<PathBuf>,
    pub weight_dist: Option<WeightDist>,
    pub weight_mode: Option<WeightMode>,
}

impl GraphConfig {
    pub fn overlaid(self, over: Self) -> Self {
        Self {
            kind: merge(self.kind, over.kind),
            n: merge(self.n, over.n),
            p: merge(self.p, over.p),
            m: merge(self.m, over.m),
            gamma: merge(self.gamma, over.gamma),
            k_min: merge(self.k_min, over.k_min),
            lattice_k: merge(self.lattice_k, over.lattice_k),
            rewire: merge(self.rewire, over.rewire),
            radius: merge(self.radius, over.radius),
            path: merge(self.path, over.path),
            weight_dist: merge(self.weight_dist, over.weight_dist),
            weight_mode: merge(self.weight_mode, over.weight_mode),
        }
    }

    fn require<T: Copy>(v: Option<T>, what: &str, kind: &str) -> Result<T> {
        v.ok_or_else(|| Error::Config(format!("graph kind {kind:?} needs --{what}")))
    }

    pub fn resolve(&self, seed: u64) -> Result<GraphSpec> {
        let kind_name = self
            .kind
            .as_deref()
            .ok_or_else(|| Error::Config("no graph kind given (--kind)".into()))?;
        let kind = match kind_name {
            "er" => GraphKind::Er {
                p: Self::require(self.p, "p", kind_name)?,
            },
            "ba" => GraphKind::Ba {
                m: Self::require(self.m, "m", kind_name)?,
            },
            "powerlaw-config" => GraphKind::PowerlawConfig {
                gamma: Self::require(self.gamma, "gamma", kind_name)?,
                k_min: self.k_min.unwrap_or(1),
            },
            "ring-lattice" => GraphKind::RingLattice {
                k: Self::require(self.lattice_k, "lattice-k", kind_name)?,
            },
            "watts-strogatz" => GraphKind::WattsStrogatz {
                k: Self::require(self.lattice_k, "lattice-k", kind_name)?,
                rewire: Self::require(self.rewire, "rewire", kind_name)?,
            },
            "random-geometric" => GraphKind::RandomGeometric {
                radius: Self::require(self.radius, "radius", kind_name)?,
            },
            "star" => GraphKind::Star,
            "path" => GraphKind::Path,
            "cycle" => GraphKind::Cycle,
            "complete" => GraphKind::Complete,
            "file" => GraphKind::File {
                path: self
                    .path
                    .clone()
                    .ok_or_else(|| Error::Config("graph kind \"file\" needs --path".into()))?,
                weights: self.weight_mode.unwrap_or_default(),
            },
            other => {
                return Err(Error::Config(format!("unknown graph kind {other:?}")));
            }
        };
        let n = if matches!(kind, GraphKind::File { .. }) {
            self.n.unwrap_or(0)
        } else {
            self.n
                .ok_or_else(|| Error::Config(format!("graph kind {kind_name:?} needs --n")))?
        };
        Ok(GraphSpec::new(
            n,
            kind,
            self.weight_dist.unwrap_or_default(),
            seed,
        ))
    }
}

/// Nodal dynamics selection. `order` is 1, 2 or "custom" (numbers and
/// strings both accepted in JSON); custom dynamics take the full
/// coefficient list of `g` in ascending powers.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct DynamicsConfig {
    #[serde(deserialize_with = "order_from_number_or_string")]
    pub order: Option<String>,
    pub omega_n: Option<f64>,
    pub zeta: Option<f64>,
    pub k: Option<f64>,
    pub g_coeffs: Option<Vec<f64>>,
    /// Replace `k` with `(1 - margin)/lambda_1` of the decomposed network.
    pub auto_gain_margin: Option<f64>,
}

fn order_from_number_or_string<'de, D>(deserializer: D) -> std::result::Result<Option<String>, D::Error>
where
    D: serde::Deserializer<'de>,
{
    use serde::de::Error as _;
    match Option::<serde_json::Value>::deserialize(deserializer)? {
        None => Ok(None),
        Some(serde_json::Value::Number(n)) => Ok(Some(n.to_string())),
        Some(serde_json::Value::String(s)) => Ok(Some(s)),
        Some(other) => Err(D::Error::custom(format!(
            "order must be a number or string, got {other}"
        ))),
    }
}

impl DynamicsConfig {
    pub fn overlaid(self, over: Self) -> Self {
        Self {
            order: merge(self.order, over.order),
            omega_n: merge(self.omega_n, over.omega_n),
            zeta: merge(self.zeta, over.zeta),
            k: merge(self.k, over.k),
            g_coeffs: merge(self.g_coeffs, over.g_coeffs),
            auto_gain_margin: merge(self.auto_gain_margin, over.auto_gain_margin),
        }
    }

    /// Reference oscillator used when nothing is specified: a lightly damped
    /// second-order node that stays stable on all the stock architectures.
    pub fn resolved_order(&self) -> String {
        self.order.clone().unwrap_or_else(|| "2".into())
    }

    pub fn resolved_omega_n(&self) -> f64 {
        self.omega_n.unwrap_or(std::f64::consts::SQRT_2)
    }

    pub fn resolved_zeta(&self) -> f64 {
        self.zeta.unwrap_or(0.05)
    }

    /// Gain: explicit `k`, or `(1 - margin)/lambda_max` when auto-gain is
    /// requested, defaulting to 0.37949.
    pub fn resolved_k(&self, lambda_max: Option<f64>) -> Result<f64> {
        if let Some(margin) = self.auto_gain_margin {
            let lambda = lambda_max.ok_or_else(|| {
                Error::Config("auto gain margin needs a decomposed network".into())
            })?;
            return crate::dynamics::max_stable_gain(
                self.resolved_omega_n(),
                self.resolved_zeta(),
                lambda,
                margin,
            );
        }
        Ok(self.k.unwrap_or(0.37949))
    }

    pub fn resolve(&self, lambda_max: Option<f64>) -> Result<NodalDynamics> {
        match self.resolved_order().as_str() {
            "1" => NodalDynamics::first_order(self.resolved_omega_n(), self.resolved_k(lambda_max)?),
            "2" => NodalDynamics::second_order(
                self.resolved_omega_n(),
                self.resolved_zeta(),
                self.resolved_k(lambda_max)?,
            ),
            "custom" => {
                let coeffs = self
                    .g_coeffs
                    .clone()
                    .ok_or_else(|| Error::Config("custom dynamics need --g-coeffs".into()))?;
                NodalDynamics::from_coeffs(coeffs)
            }
            other => Err(Error::Config(format!(
                "order must be 1, 2 or custom (got {other:?})"
            ))),
        }
    }
}

/// Frequency grid bounds; defaults to 400 log-spaced points over
/// `[1e-2, 1e2] * omega_n`.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct GridConfig {
    pub omega_min: Option<f64>,
    pub omega_max: Option<f64>,
    pub points: Option<usize>,
}

impl GridConfig {
    pub fn overlaid(self, over: Self) -> Self {
        Self {
            omega_min: merge(self.omega_min, over.omega_min),
            omega_max: merge(self.omega_max, over.omega_max),
            points: merge(self.points, over.points),
        }
    }

    pub fn resolve(&self, omega_n: f64) -> Result<FrequencyGrid> {
        FrequencyGrid::log_spaced(
            self.omega_min.unwrap_or(1e-2 * omega_n),
            self.omega_max.unwrap_or(1e2 * omega_n),
            self.points.unwrap_or(400),
        )
    }
}

/// Simulation controls for the time-domain command.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct SimulateConfig {
    pub forcing_omega: Option<f64>,
    pub amplitude: Option<f64>,
    pub dt: Option<f64>,
    pub t_end: Option<f64>,
    /// CSV decimation: keep every n-th sample.
    pub every: Option<usize>,
}

impl SimulateConfig {
    pub fn overlaid(self, over: Self) -> Self {
        Self {
            forcing_omega: merge(self.forcing_omega, over.forcing_omega),
            amplitude: merge(self.amplitude, over.amplitude),
            dt: merge(self.dt, over.dt),
            t_end: merge(self.t_end, over.t_end),
            every: merge(self.every, over.every),
        }
    }
}

/// Scaling-experiment controls.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct ScalingConfig {
    pub sizes: Option<Vec<usize>>,
    pub trials: Option<usize>,
    pub mode: Option<String>,
}

impl ScalingConfig {
    pub fn overlaid(self, over: Self) -> Self {
        Self {
            sizes: merge(self.sizes, over.sizes),
            trials: merge(self.trials, over.trials),
            mode: merge(self.mode, over.mode),
        }
    }
}

/// The whole config file. Every section is optional; flags overlay fields.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub out_dir: Option<PathBuf>,
    pub graph: GraphConfig,
    pub dynamics: DynamicsConfig,
    pub grid: GridConfig,
    pub simulate: SimulateConfig,
    pub scaling: ScalingConfig,
    pub svg: Option<bool>,
    pub per_node: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Seed precedence: flag > `NETSENSE_SEED` > config file > 0.
pub fn resolve_seed(flag: Option<u64>, config: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    if let Ok(raw) = std::env::var("NETSENSE_SEED") {
        return raw
            .parse()
            .map_err(|_| Error::Config(format!("NETSENSE_SEED={raw:?} is not a u64")));
    }
    Ok(config.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_config() {
        let file = GraphConfig {
            kind: Some("er".into()),
            n: Some(100),
            p: Some(0.1),
            ..Default::default()
        };
        let flags = GraphConfig {
            p: Some(0.5),
            ..Default::default()
        };
        let merged = file.overlaid(flags);
        let spec = merged.resolve(7).unwrap();
        assert_eq!(spec.n, 100);
        assert_eq!(spec.seed, 7);
        assert!(matches!(spec.kind, GraphKind::Er { p } if p == 0.5));
    }

    #[test]
    fn missing_kind_parameters_error() {
        let cfg = GraphConfig {
            kind: Some("er".into()),
            n: Some(10),
            ..Default::default()
        };
        assert!(cfg.resolve(0).is_err());
        let cfg = GraphConfig {
            kind: Some("nope".into()),
            n: Some(10),
            ..Default::default()
        };
        assert!(cfg.resolve(0).is_err());
    }

    #[test]
    fn dynamics_defaults_are_the_reference_oscillator() {
        let cfg = DynamicsConfig::default();
        let d = cfg.resolve(None).unwrap();
        let coeffs = d.g_coeffs();
        assert_eq!(coeffs.len(), 3);
        assert!((cfg.resolved_omega_n() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn auto_gain_uses_lambda_max() {
        let cfg = DynamicsConfig {
            auto_gain_margin: Some(0.1),
            omega_n: Some(1.0),
            zeta: Some(0.05),
            ..Default::default()
        };
        assert!((cfg.resolved_k(Some(2.0)).unwrap() - 0.45).abs() < 1e-15);
        assert!(cfg.resolved_k(None).is_err());
    }

    #[test]
    fn config_json_round_trip() {
        let text = r#"{
            "seed": 11,
            "graph": {"kind": "ba", "n": 64, "m": 3},
            "dynamics": {"order": "2", "omega_n": 1.0, "zeta": 0.01, "k": 0.5},
            "grid": {"points": 100}
        }"#;
        let cfg: FileConfig = serde_json::from_str(text).unwrap();
        assert_eq!(cfg.seed, Some(11));
        let spec = cfg.graph.resolve(11).unwrap();
        assert!(matches!(spec.kind, GraphKind::Ba { m: 3 }));
        let grid = cfg.grid.resolve(1.0).unwrap();
        assert_eq!(grid.len(), 100);
    }

    #[test]
    fn order_accepts_numbers_and_strings() {
        let cfg: DynamicsConfig =
            serde_json::from_str(r#"{"order": 1, "omega_n": 2.0, "k": 0.5}"#).unwrap();
        assert_eq!(cfg.order.as_deref(), Some("1"));
        assert_eq!(cfg.resolve(None).unwrap().degree(), 1);
        let cfg: DynamicsConfig =
            serde_json::from_str(r#"{"order": "custom", "g_coeffs": [1.0, 0.5, 2.0]}"#).unwrap();
        assert_eq!(cfg.resolve(None).unwrap().degree(), 2);
        assert!(serde_json::from_str::<DynamicsConfig>(r#"{"order": true}"#).is_err());
    }
}
