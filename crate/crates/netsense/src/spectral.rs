//! Full symmetric eigendecomposition of the interaction matrix, plus the
//! spectral weights that govern the mean response.
//!
//! For eigenvectors `phi_i` (orthonormal, real) the weight
//! `w_i = <1, phi_i>^2 / N` measures how much of the all-ones direction each
//! mode carries; the weights sum to 1 and the residue `R = sum_{i>=2} w_i`
//! is everything not carried by the leading mode.

use ndarray::{Array2, ArrayView1, ShapeBuilder};
use serde_json::json;

use crate::error::{Error, Result};
use crate::netgen::InteractionMatrix;

/// Eigenvalues sorted descending, orthonormal eigenvectors, spectral weights
/// and residue. Eigenvector signs are fixed so `<1, phi_i> >= 0`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    /// Column `i` is the eigenvector for `eigenvalues[i]`.
    eigenvectors: Array2<f64>,
    /// `<1, phi_i>`, nonnegative by the sign convention.
    ones_overlap: Vec<f64>,
    weights: Vec<f64>,
    residue: f64,
}

impl SpectralDecomposition {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, i: usize) -> ArrayView1<'_, f64> {
        self.eigenvectors.column(i)
    }

    pub fn eigenvectors(&self) -> &Array2<f64> {
        &self.eigenvectors
    }

    /// `<1, phi_i>` per mode.
    pub fn ones_overlap(&self) -> &[f64] {
        &self.ones_overlap
    }

    /// `w_i = <1, phi_i>^2 / N` per mode.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Total weight of modes 2..N.
    pub fn residue(&self) -> f64 {
        self.residue
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// JSON export; eigenvectors only on request since they are O(N^2).
    pub fn export_json(&self, include_eigenvectors: bool) -> serde_json::Value {
        let mut value = json!({
            "eigenvalues": self.eigenvalues,
            "weights": self.weights,
            "residue": self.residue,
        });
        if include_eigenvectors {
            let columns: Vec<Vec<f64>> = (0..self.n())
                .map(|i| self.eigenvectors.column(i).to_vec())
                .collect();
            value["eigenvectors"] = json!(columns);
        }
        value
    }
}

/// Headline numbers of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSummary {
    pub w1: f64,
    pub residue: f64,
    pub lambda_max: f64,
    pub lambda_min: f64,
}

pub fn weight_summary(dec: &SpectralDecomposition) -> WeightSummary {
    WeightSummary {
        w1: dec.weights[0],
        residue: dec.residue,
        lambda_max: dec.lambda_max(),
        lambda_min: dec.lambda_min(),
    }
}

/// Dense symmetric eigendecomposition of `A`.
///
/// Backed by LAPACK's divide-and-conquer solver (`dsyevd`); the sort order,
/// tie-breaking and sign convention are normalized here: eigenvalues
/// descending, exact ties ordered by descending weight then original index,
/// and every eigenvector flipped so its overlap with the ones vector is
/// nonnegative.
pub fn decompose(a: &InteractionMatrix) -> Result<SpectralDecomposition> {
    let n = a.n();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    let (values, mut vectors) = syevd(a.matrix())?;

    // Sign convention and overlaps before sorting, so ties can use weights.
    let mut overlap = vec![0.0f64; n];
    for i in 0..n {
        let mut column = vectors.column_mut(i);
        let s: f64 = column.sum();
        if s < 0.0 {
            column.mapv_inplace(|x| -x);
        }
        overlap[i] = s.abs();
    }
    let weights: Vec<f64> = overlap.iter().map(|s| s * s / n as f64).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&p, &q| {
        values[q]
            .total_cmp(&values[p])
            .then(weights[q].total_cmp(&weights[p]))
            .then(p.cmp(&q))
    });

    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let ones_overlap: Vec<f64> = order.iter().map(|&i| overlap[i]).collect();
    let sorted_weights: Vec<f64> = order.iter().map(|&i| weights[i]).collect();
    let mut eigenvectors = Array2::zeros((n, n).f());
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.column_mut(dst).assign(&vectors.column(src));
    }
    let residue: f64 = sorted_weights[1..].iter().sum();
    // Parseval: the ones vector carries unit weight across the basis.
    debug_assert!(
        (sorted_weights.iter().sum::<f64>() - 1.0).abs() <= 1e-10,
        "spectral weights do not sum to 1"
    );

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        ones_overlap,
        weights: sorted_weights,
        residue,
    })
}

/// Raw `dsyevd` call. Returns ascending eigenvalues and eigenvectors as the
/// columns of a column-major array.
fn syevd(a: &Array2<f64>) -> Result<(Vec<f64>, Array2<f64>)> {
    let n = a.nrows();
    let ni = n as i32;
    // The matrix is symmetric, so the row-major/column-major distinction
    // vanishes and we can hand LAPACK the buffer directly.
    let mut m: Vec<f64> = a.iter().copied().collect();
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;
    let jobz = b'V' as std::ffi::c_char;
    let uplo = b'L' as std::ffi::c_char;

    let mut work_query = [0.0f64];
    let mut iwork_query = [0i32];
    unsafe {
        lapack_sys::dsyevd_(
            &jobz,
            &uplo,
            &ni,
            m.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work_query.as_mut_ptr(),
            &(-1),
            iwork_query.as_mut_ptr(),
            &(-1),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::EigenFailed { info });
    }
    let lwork = work_query[0] as i32;
    let liwork = iwork_query[0];
    let mut work = vec![0.0f64; lwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        lapack_sys::dsyevd_(
            &jobz,
            &uplo,
            &ni,
            m.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::EigenFailed { info });
    }
    let vectors = Array2::from_shape_vec((n, n).f(), m).expect("lapack output shape");
    Ok((w, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netgen::{self, Edge, WeightedGraph};
    use approx::assert_abs_diff_eq;

    fn star_k13() -> InteractionMatrix {
        let edges = (1..4)
            .map(|j| Edge {
                i: 0,
                j,
                weight: 1.0,
            })
            .collect();
        netgen::interaction_matrix(&WeightedGraph::new(4, edges).unwrap()).unwrap()
    }

    fn complete_k4() -> InteractionMatrix {
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                edges.push(Edge {
                    i,
                    j,
                    weight: 1.0,
                });
            }
        }
        netgen::interaction_matrix(&WeightedGraph::new(4, edges).unwrap()).unwrap()
    }

    #[test]
    fn zero_matrix_weights_sum_to_one() {
        let dec = decompose(&InteractionMatrix::zeros(3)).unwrap();
        assert_eq!(dec.eigenvalues(), &[0.0, 0.0, 0.0]);
        let sum: f64 = dec.weights().iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-10);
        let s = weight_summary(&dec);
        assert_abs_diff_eq!(s.w1 + s.residue, 1.0, epsilon = 1e-10);
        assert_eq!((s.lambda_max, s.lambda_min), (0.0, 0.0));
    }

    #[test]
    fn complete_k4_spectrum() {
        // (J - I)/3 has eigenvalues (1, -1/3, -1/3, -1/3); the ones vector
        // is the leading eigenvector so w1 = 1 and R = 0.
        let dec = decompose(&complete_k4()).unwrap();
        assert_abs_diff_eq!(dec.eigenvalues()[0], 1.0, epsilon = 1e-12);
        for i in 1..4 {
            assert_abs_diff_eq!(dec.eigenvalues()[i], -1.0 / 3.0, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(dec.weights()[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(dec.residue(), 0.0, epsilon = 1e-12);
        let s = weight_summary(&dec);
        assert_abs_diff_eq!(s.lambda_min, -1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn star_k13_frozen_values() {
        // Exact eigenstructure of the star: lambda_1 = sqrt(3)/1.5,
        // w1 = (2 + sqrt(3))/4, residue = (2 - sqrt(3))/4. The numbers below
        // were cross-checked against a Jacobi eigensolver.
        let dec = decompose(&star_k13()).unwrap();
        assert_abs_diff_eq!(dec.lambda_max(), 1.1547005383792517, epsilon = 1e-12);
        assert_abs_diff_eq!(dec.lambda_min(), -1.1547005383792517, epsilon = 1e-12);
        assert_abs_diff_eq!(dec.weights()[0], 0.9330127018922193, epsilon = 1e-4);
        assert_abs_diff_eq!(dec.residue(), 0.0669872981077807, epsilon = 1e-4);
        let s = weight_summary(&dec);
        assert_abs_diff_eq!(s.w1 + s.residue, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn invariants_on_a_random_graph() {
        let spec = netgen::GraphSpec::new(
            64,
            netgen::GraphKind::Er { p: 0.1 },
            netgen::WeightDist::Uniform,
            7,
        );
        let a = netgen::interaction_matrix(&netgen::generate(&spec).unwrap()).unwrap();
        let dec = decompose(&a).unwrap();
        let n = dec.n();
        let frob = a.matrix().iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = frob.max(1.0);
        // Eigen residual per mode.
        for i in 0..n {
            let av = a.matrix().dot(&dec.eigenvector(i));
            let lv = dec.eigenvector(i).mapv(|x| x * dec.eigenvalues()[i]);
            let resid = (&av - &lv).mapv(|x| x * x).sum().sqrt();
            assert!(resid <= 1e-10 * scale, "mode {i}: residual {resid}");
        }
        // Orthonormality.
        for i in 0..n {
            for j in i..n {
                let dot = dec.eigenvector(i).dot(&dec.eigenvector(j));
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() <= 1e-10);
            }
        }
        // Weights: nonnegative, sum to one, descending eigenvalues.
        assert!(dec.weights().iter().all(|&w| w >= 0.0));
        let sum: f64 = dec.weights().iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-10);
        assert!(dec.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
        // Sign convention.
        assert!(dec.ones_overlap().iter().all(|&s| s >= 0.0));
    }

    #[test]
    fn export_json_shape() {
        let dec = decompose(&complete_k4()).unwrap();
        let v = dec.export_json(false);
        assert!(v.get("eigenvectors").is_none());
        assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 4);
        let v = dec.export_json(true);
        assert_eq!(v["eigenvectors"].as_array().unwrap().len(), 4);
    }
}
