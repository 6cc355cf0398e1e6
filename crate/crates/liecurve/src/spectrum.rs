//! Symmetric eigenvalue extraction and multiplicity clustering.
//!
//! The solver is a cyclic Jacobi iteration without eigenvectors; the matrices
//! here never exceed a few dozen rows and the quadratic convergence of Jacobi
//! delivers eigenvalues at essentially machine precision.

use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::matrix::Matrix;

/// Default gap below which two eigenvalues are reported as one cluster.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

/// Symmetry gate for [`spectrum`] and [`symmetric_eigenvalues`].
pub const SYMMETRY_TOL: f64 = 1e-8;

const MAX_SWEEPS: usize = 64;

/// One eigenvalue cluster: representative value and total multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Clustered spectrum of a symmetric operator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Clusters in ascending order of representative value.
    pub clusters: Vec<EigenCluster>,
    pub cluster_tol: f64,
}

impl SpectrumReport {
    /// Sum of multiplicities; equals the operator dimension.
    pub fn total_multiplicity(&self) -> usize {
        self.clusters.iter().map(|c| c.multiplicity).sum()
    }

    pub fn values(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| c.value).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }
}

/// Eigenvalues of a symmetric matrix in ascending order.
///
/// Fails with [`GeomError::NonSymmetric`] when the symmetry defect exceeds
/// [`SYMMETRY_TOL`]; smaller defects are symmetrized away before iterating.
pub fn symmetric_eigenvalues(m: &Matrix) -> Result<Vec<f64>, GeomError> {
    if !m.is_square() {
        return Err(GeomError::DimensionMismatch {
            expected: m.rows(),
            got: m.cols(),
        });
    }
    let defect = m.symmetry_defect();
    if defect > SYMMETRY_TOL {
        return Err(GeomError::NonSymmetric(defect));
    }
    let n = m.rows();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (m[(i, j)] + m[(j, i)]);
        }
    }
    jacobi_in_place(&mut a, n);
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(eig)
}

/// Cyclic Jacobi sweeps; on return the diagonal of `a` holds the eigenvalues.
fn jacobi_in_place(a: &mut [f64], n: usize) {
    if n < 2 {
        return;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = f64::EPSILON * (1.0 + frob);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
            (2.0 * s).sqrt()
        };
        if off <= target {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::EPSILON * target.max(f64::MIN_POSITIVE) {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                // smaller-angle root keeps the iteration stable
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
            }
        }
    }
}

/// Eigenvalues of a symmetric matrix, clustered by single linkage on the
/// sorted list: a gap larger than `cluster_tol` starts a new cluster, and the
/// reported value is the cluster mean.
pub fn spectrum(m: &Matrix, cluster_tol: f64) -> Result<SpectrumReport, GeomError> {
    let eig = symmetric_eigenvalues(m)?;
    Ok(cluster_eigenvalues(&eig, cluster_tol))
}

/// Single-linkage clustering of an ascending eigenvalue list.
pub fn cluster_eigenvalues(sorted: &[f64], cluster_tol: f64) -> SpectrumReport {
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > cluster_tol {
            let members = &sorted[start..i];
            clusters.push(EigenCluster {
                value: members.iter().sum::<f64>() / members.len() as f64,
                multiplicity: members.len(),
            });
            start = i;
        }
    }
    SpectrumReport {
        clusters,
        cluster_tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[f64]) -> Matrix {
        let n = values.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    #[test]
    fn exact_diagonal_clusters() {
        let report = spectrum(&diag(&[0.5, 0.5, 0.75]), 1e-6).unwrap();
        assert_eq!(report.values(), vec![0.5, 0.75]);
        assert_eq!(report.multiplicities(), vec![2, 1]);
        assert_eq!(report.total_multiplicity(), 3);
    }

    #[test]
    fn identity_is_one_cluster() {
        let report = spectrum(&Matrix::identity(5), 1e-6).unwrap();
        assert_eq!(report.values(), vec![1.0]);
        assert_eq!(report.multiplicities(), vec![5]);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let mut m = Matrix::zeros(2, 2);
        m[(0, 1)] = 1.0;
        assert!(matches!(
            spectrum(&m, 1e-6),
            Err(GeomError::NonSymmetric(_))
        ));
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[1, 2], [2, -1]] has eigenvalues -sqrt(5), sqrt(5)
        let mut m = Matrix::zeros(2, 2);
        m[(0, 0)] = 1.0;
        m[(0, 1)] = 2.0;
        m[(1, 0)] = 2.0;
        m[(1, 1)] = -1.0;
        let eig = symmetric_eigenvalues(&m).unwrap();
        assert!((eig[0] + 5.0f64.sqrt()).abs() < 1e-14);
        assert!((eig[1] - 5.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn random_symmetric_matrix_matches_trace_and_frobenius() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in [3usize, 8, 16, 64] {
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..=i {
                    let v = rng.random_range(-1.0..1.0);
                    m[(i, j)] = v;
                    m[(j, i)] = v;
                }
            }
            let eig = symmetric_eigenvalues(&m).unwrap();
            let trace: f64 = (0..n).map(|i| m[(i, i)]).sum();
            assert!((eig.iter().sum::<f64>() - trace).abs() < 1e-10 * n as f64);
            let frob2: f64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| m[(i, j)] * m[(i, j)])
                .sum();
            let eig2: f64 = eig.iter().map(|e| e * e).sum();
            assert!((frob2 - eig2).abs() < 1e-10 * n as f64);
        }
    }
}
