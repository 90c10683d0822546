//! Nodal linear dynamics: the operator `g`, its transfer function
//! `f = 1/g`, the per-mode closed loops `h_i = 1/(g - lambda_i)`, stability,
//! and the closed-form mean-field limit for homogeneous networks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Magnitudes of `g(s)` below this count as a pole.
const POLE_THRESHOLD: f64 = 1e-300;
/// Real parts within this of zero make a root "marginal".
const STABILITY_TOL: f64 = 1e-9;

/// Tagged parameters for the two canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "order")]
pub enum Descriptor {
    /// `g(s) = (s + omega_n^2) / (k omega_n^2)`
    #[serde(rename = "1")]
    FirstOrder { omega_n: f64, k: f64 },
    /// `g(s) = (s^2 + 2 zeta omega_n s + omega_n^2) / (k omega_n^2)`
    #[serde(rename = "2")]
    SecondOrder { omega_n: f64, zeta: f64, k: f64 },
}

/// The nodal operator `g` as a real polynomial in `s` (ascending powers),
/// optionally carrying the canonical-form parameters it was built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodalDynamics {
    g_coeffs: Vec<f64>,
    descriptor: Option<Descriptor>,
}

impl NodalDynamics {
    /// `g(s) = (s + omega_n^2) / (k omega_n^2)`; DC gain `f(0) = k`.
    pub fn first_order(omega_n: f64, k: f64) -> Result<Self> {
        check_positive("omega_n", omega_n)?;
        check_positive("k", k)?;
        let scale = k * omega_n * omega_n;
        Ok(Self {
            g_coeffs: vec![1.0 / k, 1.0 / scale],
            descriptor: Some(Descriptor::FirstOrder { omega_n, k }),
        })
    }

    /// `g(s) = (s^2 + 2 zeta omega_n s + omega_n^2) / (k omega_n^2)`.
    pub fn second_order(omega_n: f64, zeta: f64, k: f64) -> Result<Self> {
        check_positive("omega_n", omega_n)?;
        check_positive("zeta", zeta)?;
        check_positive("k", k)?;
        let scale = k * omega_n * omega_n;
        Ok(Self {
            g_coeffs: vec![1.0 / k, 2.0 * zeta / (k * omega_n), 1.0 / scale],
            descriptor: Some(Descriptor::SecondOrder { omega_n, zeta, k }),
        })
    }

    /// Arbitrary polynomial `g`; needs degree >= 1 and a nonzero leading
    /// coefficient.
    pub fn from_coeffs(g_coeffs: Vec<f64>) -> Result<Self> {
        if g_coeffs.len() < 2 {
            return Err(Error::InvalidParameter(
                "g must have degree >= 1".into(),
            ));
        }
        let lead = *g_coeffs.last().unwrap();
        if lead == 0.0 || !lead.is_finite() {
            return Err(Error::InvalidParameter(
                "leading coefficient of g must be nonzero and finite".into(),
            ));
        }
        Ok(Self {
            g_coeffs,
            descriptor: None,
        })
    }

    pub fn from_descriptor(d: Descriptor) -> Result<Self> {
        match d {
            Descriptor::FirstOrder { omega_n, k } => Self::first_order(omega_n, k),
            Descriptor::SecondOrder { omega_n, zeta, k } => Self::second_order(omega_n, zeta, k),
        }
    }

    pub fn g_coeffs(&self) -> &[f64] {
        &self.g_coeffs
    }

    pub fn descriptor(&self) -> Option<Descriptor> {
        self.descriptor
    }

    pub fn degree(&self) -> usize {
        self.g_coeffs.len() - 1
    }

    /// Natural frequency when the dynamics are canonical.
    pub fn omega_n(&self) -> Option<f64> {
        match self.descriptor {
            Some(Descriptor::FirstOrder { omega_n, .. })
            | Some(Descriptor::SecondOrder { omega_n, .. }) => Some(omega_n),
            None => None,
        }
    }

    /// Horner evaluation of `g(s)`.
    pub fn g_eval(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.g_coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be > 0, got {v}")))
    }
}

/// Isolated-node transfer function `f(s) = 1/g(s)`.
pub fn f_eval(dyn_: &NodalDynamics, s: Complex64) -> Result<Complex64> {
    let g = dyn_.g_eval(s);
    if g.norm() < POLE_THRESHOLD {
        return Err(Error::Pole { s, lambda: 0.0 });
    }
    Ok(g.inv())
}

/// Per-mode closed loop `h(s) = f/(1 - lambda f)`, evaluated as
/// `1/(g(s) - lambda)` to stay stable near resonance.
pub fn h_eval(dyn_: &NodalDynamics, lambda: f64, s: Complex64) -> Result<Complex64> {
    let d = dyn_.g_eval(s) - lambda;
    if d.norm() < POLE_THRESHOLD {
        return Err(Error::Pole { s, lambda });
    }
    Ok(d.inv())
}

/// Mean response of a fully synchronizable network in the large-size limit:
/// `f/(1 - f) = 1/(g - 1)`, i.e. `h` at `lambda = 1`.
pub fn closed_loop_limit_eval(dyn_: &NodalDynamics, s: Complex64) -> Result<Complex64> {
    h_eval(dyn_, 1.0, s)
}

/// Outcome of the root test on `g(s) - lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityReport {
    /// Every root strictly in the open left half-plane (beyond tolerance).
    pub stable: bool,
    /// Some root's real part within tolerance of zero. Treated as unstable
    /// by everything that gates on stability.
    pub marginal: bool,
    /// `-max Re(root)`: positive means stable, with room to spare.
    pub margin: f64,
}

/// Stability of one closed-loop mode: all roots of `g(s) = lambda` must lie
/// strictly in the left half-plane.
pub fn is_stable(dyn_: &NodalDynamics, lambda: f64) -> Result<StabilityReport> {
    let mut coeffs = dyn_.g_coeffs.clone();
    coeffs[0] -= lambda;
    let max_re = match coeffs.len() {
        2 => -coeffs[0] / coeffs[1],
        3 => {
            let (c, b, a) = (coeffs[0], coeffs[1], coeffs[2]);
            let disc = Complex64::new(b * b - 4.0 * a * c, 0.0).sqrt();
            let r1 = (-b + disc.re) / (2.0 * a);
            let r2 = (-b - disc.re) / (2.0 * a);
            if disc.im != 0.0 || disc.re.is_nan() {
                -b / (2.0 * a)
            } else {
                r1.max(r2)
            }
        }
        _ => companion_roots_max_re(&coeffs)?,
    };
    let marginal = max_re.abs() <= STABILITY_TOL;
    Ok(StabilityReport {
        stable: max_re < -STABILITY_TOL,
        marginal,
        margin: -max_re,
    })
}

/// Largest real part among the roots of a polynomial of degree >= 3, via
/// the companion matrix.
fn companion_roots_max_re(coeffs: &[f64]) -> Result<f64> {
    use ndarray_linalg::Eig;
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let mut comp = ndarray::Array2::<f64>::zeros((deg, deg));
    for r in 1..deg {
        comp[[r, r - 1]] = 1.0;
    }
    for r in 0..deg {
        comp[[r, deg - 1]] = -coeffs[r] / lead;
    }
    let (roots, _) = comp
        .eig()
        .map_err(|e| Error::Lapack(e.to_string()))?;
    Ok(roots
        .iter()
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Largest gain that keeps the leading mode stable with safety margin `c`:
/// `k = (1 - c)/lambda_max`.
pub fn max_stable_gain(omega_n: f64, zeta: f64, lambda_max: f64, safety_c: f64) -> Result<f64> {
    if lambda_max <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "lambda_max must be > 0 (got {lambda_max})"
        )));
    }
    if !(safety_c > 0.0 && safety_c < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "safety margin must lie in (0, 1) (got {safety_c})"
        )));
    }
    let k = (1.0 - safety_c) / lambda_max;
    debug_assert!({
        let dyn_ = NodalDynamics::second_order(omega_n, zeta.max(1e-6), k).unwrap();
        is_stable(&dyn_, lambda_max).unwrap().stable
    });
    Ok(k)
}

/// Large-network limit of a second-order oscillator on a homogeneous
/// network: another oscillator with parameters
/// `omega_n' = omega_n sqrt(1-k)`, `zeta' = zeta/sqrt(1-k)`, `k' = k/(1-k)`.
/// Its transfer function equals `f/(1 - f)` of the input dynamics.
pub fn er_limit_model(dyn_: &NodalDynamics) -> Result<NodalDynamics> {
    let Some(Descriptor::SecondOrder { omega_n, zeta, k }) = dyn_.descriptor else {
        return Err(Error::InvalidParameter(
            "the closed-form limit needs second-order canonical dynamics".into(),
        ));
    };
    if k >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "limit model requires k < 1 (got k = {k})"
        )));
    }
    let root = (1.0 - k).sqrt();
    NodalDynamics::second_order(omega_n * root, zeta / root, k / (1.0 - k))
}
