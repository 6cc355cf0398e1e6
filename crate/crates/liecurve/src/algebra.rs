//! Generic curvature engine for metric Lie algebras.
//!
//! A [`MetricLieAlgebra`] is a finite-dimensional real Lie algebra together
//! with an inner product in which the declared basis is orthonormal. All
//! left-invariant curvature data of the corresponding Lie group — connection,
//! Riemannian curvature, Ricci operator, scalar and sectional curvature —
//! is computed here directly from the structure constants. Nothing in this
//! module knows about any particular model; it is the independent oracle
//! that every closed-form evaluator in the crate is tested against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::matrix::Matrix;
use crate::vector::{Plane, Vector};

/// Tolerance used by [`MetricLieAlgebra::validate`] for antisymmetry and the
/// Jacobi identity.
pub const VALIDATION_TOL: f64 = 1e-12;

/// Pivot threshold for the rank computations behind the nilpotency and
/// solvability checks.
pub const RANK_TOL: f64 = 1e-10;

/// One bracket entry `(i, j, coefficients)` meaning
/// `[e_i, e_j] = sum_k coeff_k e_k`, listed for `i < j` only.
pub type BracketSpec = (usize, usize, Vec<(usize, f64)>);

/// A Lie algebra with an orthonormal basis, stored as the dense rank-3
/// structure tensor `c[i][j][k]` with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    dim: usize,
    structure: Vec<f64>,
    labels: Option<Vec<String>>,
}

/// One violated structural invariant, reported by [`MetricLieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum InvariantViolation {
    /// `c[i][j][k] + c[j][i][k]` is nonzero.
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
        magnitude: f64,
    },
    /// The Jacobi identity fails on basis triple `(i, j, k)` in component `m`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
        magnitude: f64,
    },
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantViolation::Antisymmetry { i, j, k, magnitude } => write!(
                f,
                "antisymmetry violated at (i={i}, j={j}, k={k}): |c_ijk + c_jik| = {magnitude:.3e}"
            ),
            InvariantViolation::Jacobi {
                i,
                j,
                k,
                m,
                magnitude,
            } => write!(
                f,
                "Jacobi identity violated on (i={i}, j={j}, k={k}) in component {m}: {magnitude:.3e}"
            ),
        }
    }
}

impl MetricLieAlgebra {
    /// Wraps a dense structure tensor of length `dim^3`, laid out as
    /// `structure[(i * dim + j) * dim + k]`.
    pub fn new(dim: usize, structure: Vec<f64>, labels: Option<Vec<String>>) -> Self {
        assert_eq!(
            structure.len(),
            dim * dim * dim,
            "structure tensor must have dim^3 entries"
        );
        if let Some(ref l) = labels {
            assert_eq!(l.len(), dim, "need one label per basis vector");
        }
        Self {
            dim,
            structure,
            labels,
        }
    }

    /// Builds the algebra from bracket entries `[e_i, e_j] = sum coeffs[k] e_k`
    /// given only for `i < j`; the antisymmetric completion is automatic.
    pub fn from_brackets(
        dim: usize,
        brackets: &[BracketSpec],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GeomError> {
        let mut structure = vec![0.0; dim * dim * dim];
        let mut seen = vec![false; dim * dim];
        for &(i, j, ref coeffs) in brackets {
            if i >= j {
                return Err(GeomError::InvalidDefinition(format!(
                    "bracket entry ({i}, {j}) must satisfy i < j"
                )));
            }
            if j >= dim {
                return Err(GeomError::InvalidDefinition(format!(
                    "bracket entry ({i}, {j}) out of range for dim {dim}"
                )));
            }
            if seen[i * dim + j] {
                return Err(GeomError::InvalidDefinition(format!(
                    "duplicate bracket entry for ({i}, {j})"
                )));
            }
            seen[i * dim + j] = true;
            for &(k, v) in coeffs {
                if k >= dim {
                    return Err(GeomError::InvalidDefinition(format!(
                        "coefficient index {k} out of range for dim {dim}"
                    )));
                }
                structure[(i * dim + j) * dim + k] = v;
                structure[(j * dim + i) * dim + k] = -v;
            }
        }
        if let Some(ref l) = labels {
            if l.len() != dim {
                return Err(GeomError::InvalidDefinition(format!(
                    "got {} labels for dim {dim}",
                    l.len()
                )));
            }
        }
        Ok(Self {
            dim,
            structure,
            labels,
        })
    }

    /// The abelian algebra of the given dimension (all brackets zero).
    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, vec![0.0; dim * dim * dim], None)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant `c[i][j][k]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of basis vector `i`, falling back to `e{i}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    fn check_dim(&self, v: &Vector) -> Result<(), GeomError> {
        if v.dim() != self.dim {
            Err(GeomError::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            })
        } else {
            Ok(())
        }
    }

    /// Diagnoses antisymmetry and Jacobi violations; an empty list means the
    /// tensor defines a genuine metric Lie algebra to within [`VALIDATION_TOL`].
    ///
    /// Antisymmetry is reported once per unordered pair, the Jacobi identity
    /// once per strictly increasing triple (the remaining index orders carry
    /// no independent information).
    pub fn validate(&self) -> Vec<InvariantViolation> {
        let m = self.dim;
        let mut out = Vec::new();
        for i in 0..m {
            for j in i..m {
                for k in 0..m {
                    let mag = (self.c(i, j, k) + self.c(j, i, k)).abs();
                    if mag > VALIDATION_TOL {
                        out.push(InvariantViolation::Antisymmetry {
                            i,
                            j,
                            k,
                            magnitude: mag,
                        });
                    }
                }
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    for comp in 0..m {
                        let mut sum = 0.0;
                        for l in 0..m {
                            sum += self.c(i, j, l) * self.c(l, k, comp)
                                + self.c(j, k, l) * self.c(l, i, comp)
                                + self.c(k, i, l) * self.c(l, j, comp);
                        }
                        if sum.abs() > VALIDATION_TOL {
                            out.push(InvariantViolation::Jacobi {
                                i,
                                j,
                                k,
                                m: comp,
                                magnitude: sum.abs(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Lie bracket `[x, y]`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, GeomError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let m = self.dim;
        let mut out = vec![0.0; m];
        for i in 0..m {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            for j in 0..m {
                let yj = y[j];
                if yj == 0.0 {
                    continue;
                }
                let w = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += w * self.c(i, j, k);
                }
            }
        }
        Ok(Vector::new(out))
    }

    /// The symmetric bilinear form `U` determined by
    /// `2 <U(x,y), z> = <[z,x], y> + <x, [z,y]>` for every basis vector `z`.
    pub fn koszul_u(&self, x: &Vector, y: &Vector) -> Result<Vector, GeomError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let m = self.dim;
        let mut out = vec![0.0; m];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for i in 0..m {
                for l in 0..m {
                    acc += self.c(k, i, l) * (x[i] * y[l] + y[i] * x[l]);
                }
            }
            *slot = 0.5 * acc;
        }
        Ok(Vector::new(out))
    }

    /// Levi-Civita connection of the left-invariant metric,
    /// `nabla_x y = (1/2)[x, y] + U(x, y)`.
    pub fn levi_civita(&self, x: &Vector, y: &Vector) -> Result<Vector, GeomError> {
        let mut out = self.bracket(x, y)?.scale(0.5);
        let u = self.koszul_u(x, y)?;
        out.axpy(1.0, &u);
        Ok(out)
    }

    /// Riemannian curvature
    /// `R(x, y) z = nabla_{[x,y]} z - nabla_x nabla_y z + nabla_y nabla_x z`.
    pub fn riemann(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, GeomError> {
        let xy = self.bracket(x, y)?;
        let mut out = self.levi_civita(&xy, z)?;
        let yz = self.levi_civita(y, z)?;
        out.axpy(-1.0, &self.levi_civita(x, &yz)?);
        let xz = self.levi_civita(x, z)?;
        out.axpy(1.0, &self.levi_civita(y, &xz)?);
        Ok(out)
    }

    /// Matrix of the Ricci operator `Ric(x) = sum_i R(e_i, x) e_i` in the
    /// declared basis.
    pub fn ricci_matrix(&self) -> Matrix {
        let m = self.dim;
        let mut ric = Matrix::zeros(m, m);
        for j in 0..m {
            let ej = self.basis_vector(j);
            let mut image = Vector::zeros(m);
            for i in 0..m {
                let ei = self.basis_vector(i);
                let term = self
                    .riemann(&ei, &ej, &ei)
                    .expect("basis vectors have the right dimension");
                image.axpy(1.0, &term);
            }
            for k in 0..m {
                ric[(k, j)] = image[k];
            }
        }
        ric
    }

    /// Scalar curvature, the trace of the Ricci operator (taken in the same
    /// summation order, so the two agree exactly).
    pub fn scalar_curvature(&self) -> f64 {
        self.ricci_matrix().trace()
    }

    /// Sectional curvature `K = <R(x,y)x, y>` of an orthonormal plane.
    pub fn sectional(&self, plane: &Plane) -> Result<f64, GeomError> {
        self.check_dim(plane.x())?;
        let r = self.riemann(plane.x(), plane.y(), plane.x())?;
        Ok(r.dot(plane.y()))
    }

    /// Dimensions of the spans in the lower central series
    /// `g_1 = [g, g]`, `g_{k+1} = [g, g_k]`, until the dimension stabilizes.
    pub fn lower_central_series_dims(&self, tol: f64) -> Vec<usize> {
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        let mut dims = Vec::new();
        let mut current = basis.clone();
        loop {
            let mut products = Vec::new();
            for e in &basis {
                for v in &current {
                    products.push(self.bracket(e, v).expect("dimensions match"));
                }
            }
            let span = orthonormal_span(&products, tol);
            let d = span.len();
            let last = dims.last().copied();
            dims.push(d);
            if d == 0 || Some(d) == last {
                break;
            }
            current = span;
        }
        dims
    }

    /// Dimensions of the derived series `g^1 = [g, g]`, `g^{k+1} = [g^k, g^k]`.
    pub fn derived_series_dims(&self, tol: f64) -> Vec<usize> {
        let mut dims = Vec::new();
        let mut current: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        loop {
            let mut products = Vec::new();
            for (a, v) in current.iter().enumerate() {
                for w in &current[(a + 1)..] {
                    products.push(self.bracket(v, w).expect("dimensions match"));
                }
            }
            let span = orthonormal_span(&products, tol);
            let d = span.len();
            let last = dims.last().copied();
            dims.push(d);
            if d == 0 || Some(d) == last {
                break;
            }
            current = span;
        }
        dims
    }

    /// Whether the lower central series reaches zero.
    pub fn is_nilpotent(&self, tol: f64) -> bool {
        self.lower_central_series_dims(tol).last() == Some(&0)
    }

    /// Whether the derived series reaches zero.
    pub fn is_solvable(&self, tol: f64) -> bool {
        self.derived_series_dims(tol).last() == Some(&0)
    }

    /// Parses the JSON bracket-list format; see [`AlgebraDefinition`].
    pub fn from_json(text: &str) -> Result<Self, GeomError> {
        let def: AlgebraDefinition = serde_json::from_str(text)?;
        def.build()
    }

    /// Serializes the algebra into the JSON bracket-list format, listing only
    /// `i < j` pairs with nonzero coefficients.
    pub fn to_json(&self) -> String {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let mut coeffs = BTreeMap::new();
                for k in 0..self.dim {
                    let v = self.c(i, j, k);
                    if v != 0.0 {
                        coeffs.insert(k.to_string(), v);
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        let def = AlgebraDefinition {
            dim: self.dim,
            labels: self.labels.clone(),
            brackets,
        };
        serde_json::to_string_pretty(&def).expect("definition serializes")
    }
}

/// On-disk description of a metric Lie algebra: bracket entries for `i < j`
/// pairs only, keyed by target basis index.
#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraDefinition {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, f64>,
}

impl AlgebraDefinition {
    pub fn build(&self) -> Result<MetricLieAlgebra, GeomError> {
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for entry in &self.brackets {
            let mut coeffs = Vec::with_capacity(entry.coeffs.len());
            for (key, &v) in &entry.coeffs {
                let k: usize = key.parse().map_err(|_| {
                    GeomError::InvalidDefinition(format!("coefficient key {key:?} is not an index"))
                })?;
                coeffs.push((k, v));
            }
            brackets.push((entry.i, entry.j, coeffs));
        }
        MetricLieAlgebra::from_brackets(self.dim, &brackets, self.labels.clone())
    }
}

/// Modified Gram-Schmidt basis of the span of `vectors`, discarding residuals
/// with norm below `tol`.
fn orthonormal_span(vectors: &[Vector], tol: f64) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two projection passes keep the basis orthogonal near the threshold
        for _ in 0..2 {
            for b in &basis {
                let p = w.dot(b);
                w.axpy(-p, b);
            }
        }
        let n = w.norm();
        if n > tol {
            basis.push(w.scale(1.0 / n));
        }
    }
    basis
}
