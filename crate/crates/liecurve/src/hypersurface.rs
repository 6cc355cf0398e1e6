//! Codimension-one subgroup orbits of the solvable model and their geometry.
//!
//! For an angle `theta` in `[0, pi/2]` the unit normal
//! `xi = cos(theta) X1 + sin(theta) A0` singles out the codimension-one
//! subalgebra orthogonal to it. The orthonormal tangent frame is
//! `(T, Y1, X2, Y2, ..., X_{n-1}, Y_{n-1}, Z0)` with
//! `T = cos(theta) A0 - sin(theta) X1`. The family interpolates from the
//! ruled minimal hypersurface at `theta = 0` to the horosphere at
//! `theta = pi/2`, where the algebra degenerates to the Heisenberg algebra.
//!
//! Everything measurable about these hypersurfaces is implemented twice: the
//! closed forms live here, while the structure-constant oracle of
//! [`crate::algebra`] evaluates the same quantities on the induced subalgebra.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::chn::AmbientModel;
use crate::error::GeomError;
use crate::matrix::Matrix;
use crate::search::{search_extrema, SearchConfig};
use crate::spectrum::{spectrum, EigenCluster, SpectrumReport};
use crate::vector::{Plane, Vector};
use crate::MetricLieAlgebra;

/// Normal-component gate for the tangency checks.
pub const TANGENCY_TOL: f64 = 1e-8;

/// Default tolerance for the minimal/austere/Hopf classification.
pub const DEFAULT_FLAG_TOL: f64 = 1e-9;

/// A Lie hypersurface: the ambient model, the unit normal, the orthonormal
/// tangent frame and the induced metric Lie algebra in that frame.
#[derive(Debug, Clone)]
pub struct HypersurfaceFrame {
    ambient: AmbientModel,
    theta: f64,
    xi: Vector,
    t: Vector,
    tangent_basis: Vec<Vector>,
    sub: MetricLieAlgebra,
}

/// Extrinsic classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtrinsicFlags {
    pub minimal: bool,
    pub austere: bool,
    pub hopf: bool,
}

/// Closed-form sectional extrema and the comparison quantities `C`, `D`.
#[derive(Debug, Clone, Copy)]
pub struct ClosedExtrema {
    pub max: f64,
    /// Only available in complex dimension 2; higher dimensions carry no
    /// closed-form minimum and report the searched value instead.
    pub min: Option<f64>,
    pub c_cmp: f64,
    pub d_cmp: f64,
}

/// Closed-form extrema side by side with the searched ones.
#[derive(Debug, Clone)]
pub struct ExtremaReport {
    pub n: usize,
    pub theta: f64,
    pub max_closed: f64,
    pub min_closed: Option<f64>,
    pub max_search: f64,
    pub min_search: f64,
    /// Witness planes in tangent coordinates.
    pub argmax: Plane,
    pub argmin: Plane,
    pub c_cmp: f64,
    pub d_cmp: f64,
}

/// The two comparison quantities and the maximum-curvature gap between the
/// high-dimensional and the dimension-2 families.
#[derive(Debug, Clone, Copy)]
pub struct ExtremaComparison {
    pub c: f64,
    pub d: f64,
    /// `(c - d) / 8`; nonnegative, vanishing only at the endpoints.
    pub max_gap: f64,
}

impl HypersurfaceFrame {
    /// Builds the hypersurface frame for complex dimension `n >= 2` and
    /// `theta` in `[0, pi/2]` radians.
    pub fn new(n: usize, theta: f64) -> Result<Self, GeomError> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(GeomError::InvalidTheta(theta));
        }
        let ambient = AmbientModel::new(n)?;
        let (s, c) = theta.sin_cos();
        let dim = ambient.dim();
        let m = dim - 1;

        let mut xi = Vector::zeros(dim);
        xi.axpy(c, &ambient.basis_vector(ambient.x(1)));
        xi.axpy(s, &ambient.basis_vector(ambient.a0()));
        let mut t = Vector::zeros(dim);
        t.axpy(c, &ambient.basis_vector(ambient.a0()));
        t.axpy(-s, &ambient.basis_vector(ambient.x(1)));

        let mut tangent_basis = Vec::with_capacity(m);
        tangent_basis.push(t.clone());
        tangent_basis.push(ambient.basis_vector(ambient.y(1)));
        for i in 2..n {
            tangent_basis.push(ambient.basis_vector(ambient.x(i)));
            tangent_basis.push(ambient.basis_vector(ambient.y(i)));
        }
        tangent_basis.push(ambient.basis_vector(ambient.z0()));

        // structure constants of the subalgebra in the tangent frame; the
        // normal component of every bracket vanishes because the frame spans
        // a subalgebra
        let mut structure = vec![0.0; m * m * m];
        for p in 0..m {
            for q in 0..m {
                let br = ambient
                    .algebra()
                    .bracket(&tangent_basis[p], &tangent_basis[q])
                    .expect("tangent frame has ambient dimension");
                debug_assert!(br.dot(&xi).abs() < 1e-12);
                for (r, b) in tangent_basis.iter().enumerate() {
                    structure[(p * m + q) * m + r] = br.dot(b);
                }
            }
        }
        let mut labels = vec!["T".to_string(), "Y1".to_string()];
        for i in 2..n {
            labels.push(format!("X{i}"));
            labels.push(format!("Y{i}"));
        }
        labels.push("Z0".to_string());
        let sub = MetricLieAlgebra::new(m, structure, Some(labels));

        Ok(Self {
            ambient,
            theta,
            xi,
            t,
            tangent_basis,
            sub,
        })
    }

    pub fn n(&self) -> usize {
        self.ambient.n()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn ambient(&self) -> &AmbientModel {
        &self.ambient
    }

    /// The induced metric Lie algebra in the tangent frame.
    pub fn sub(&self) -> &MetricLieAlgebra {
        &self.sub
    }

    /// Unit normal, in ambient coordinates.
    pub fn xi(&self) -> &Vector {
        &self.xi
    }

    /// The tangent direction `T`, in ambient coordinates.
    pub fn t_vector(&self) -> &Vector {
        &self.t
    }

    /// Orthonormal tangent frame `(T, Y1, X2, Y2, ..., Z0)`.
    pub fn tangent_basis(&self) -> &[Vector] {
        &self.tangent_basis
    }

    /// Dimension `2n - 1` of the hypersurface.
    pub fn tangent_dim(&self) -> usize {
        self.tangent_basis.len()
    }

    /// Maps tangent coordinates to the ambient representation.
    pub fn to_ambient(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.tangent_dim());
        let mut out = Vector::zeros(self.ambient.dim());
        for (i, b) in self.tangent_basis.iter().enumerate() {
            out.axpy(v[i], b);
        }
        out
    }

    /// Expresses an ambient tangent vector in the tangent frame; fails when
    /// the normal component is above [`TANGENCY_TOL`].
    pub fn to_tangent(&self, v: &Vector) -> Result<Vector, GeomError> {
        self.check_tangent(v)?;
        Ok(Vector::new(
            self.tangent_basis.iter().map(|b| v.dot(b)).collect(),
        ))
    }

    fn check_tangent(&self, v: &Vector) -> Result<(), GeomError> {
        if v.dim() != self.ambient.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: self.ambient.dim(),
                got: v.dim(),
            });
        }
        let normal = v.dot(&self.xi).abs();
        if normal > TANGENCY_TOL {
            return Err(GeomError::NotTangent(normal));
        }
        Ok(())
    }

    /// Coefficients `(a1, a2, a3)` on `T`, `Y1`, `Z0` of an ambient tangent
    /// vector; the remainder lies in the `X2, Y2, ...` block.
    fn frame_coefficients(&self, v: &Vector) -> (f64, f64, f64) {
        let a1 = v.dot(&self.t);
        let a2 = v[self.ambient.y(1)];
        let a3 = v[self.ambient.z0()];
        (a1, a2, a3)
    }

    /// Second fundamental form as the scalar coefficient of `xi`:
    ///
    /// ```text
    /// 2 h(X, Y) = (<X,Y> + a3 b3) sin(theta) + (a2 b3 + a3 b2) cos(theta)
    /// ```
    ///
    /// with `a2, a3` (resp. `b2, b3`) the `Y1` and `Z0` coefficients of the
    /// arguments. Inputs are ambient vectors tangent to the hypersurface.
    pub fn second_fundamental_form(&self, x: &Vector, y: &Vector) -> Result<f64, GeomError> {
        self.check_tangent(x)?;
        self.check_tangent(y)?;
        let (_, a2, a3) = self.frame_coefficients(x);
        let (_, b2, b3) = self.frame_coefficients(y);
        let (s, c) = self.theta.sin_cos();
        Ok(0.5 * ((x.dot(y) + a3 * b3) * s + (a2 * b3 + a3 * b2) * c))
    }

    /// Shape operator in the tangent frame, assembled from the second
    /// fundamental form via `<A x, y> = h(x, y)`.
    pub fn shape_operator(&self) -> Matrix {
        let m = self.tangent_dim();
        let mut a = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let h = self
                    .second_fundamental_form(&self.tangent_basis[i], &self.tangent_basis[j])
                    .expect("frame vectors are tangent");
                a[(i, j)] = h;
                a[(j, i)] = h;
            }
        }
        a
    }

    /// Principal curvatures: clustered spectrum of the shape operator.
    pub fn principal_curvatures(&self, cluster_tol: f64) -> SpectrumReport {
        spectrum(&self.shape_operator(), cluster_tol).expect("shape operator is symmetric")
    }

    /// Mean curvature, `trace(A) / (2n - 1)`; equals
    /// `(n / (2n-1)) sin(theta)`.
    pub fn mean_curvature(&self) -> f64 {
        self.shape_operator().trace() / self.tangent_dim() as f64
    }

    /// Norm of the component of `A(J xi)` orthogonal to `J xi`. The
    /// hypersurface is Hopf when this vanishes; the closed form of the norm
    /// is `(1/2) cos^3(theta)`, so it decays cubically toward `pi/2`.
    pub fn hopf_defect(&self) -> f64 {
        let jxi = self
            .to_tangent(&self.ambient.apply_j(&self.xi))
            .expect("J xi is tangent");
        let image = self.shape_operator().mul_vec(&jxi);
        let mut off = image.clone();
        off.axpy(-image.dot(&jxi), &jxi);
        off.norm()
    }

    /// Minimal / austere / Hopf classification at the given tolerance.
    pub fn classify_extrinsic(&self, tol: f64) -> ExtrinsicFlags {
        let minimal = self.mean_curvature().abs() <= tol;
        let eig = crate::spectrum::symmetric_eigenvalues(&self.shape_operator())
            .expect("shape operator is symmetric");
        let m = eig.len();
        let austere = (0..m).all(|i| (eig[i] + eig[m - 1 - i]).abs() <= tol);
        let hopf = self.hopf_defect() <= tol;
        ExtrinsicFlags {
            minimal,
            austere,
            hopf,
        }
    }

    /// Induced Levi-Civita connection: the tangential part of the ambient
    /// connection, returned in ambient coordinates.
    pub fn induced_connection(&self, x: &Vector, y: &Vector) -> Result<Vector, GeomError> {
        self.check_tangent(x)?;
        self.check_tangent(y)?;
        let mut out = self.ambient.algebra().levi_civita(x, y)?;
        out.axpy(-out.dot(&self.xi), &self.xi);
        Ok(out)
    }

    /// Closed-form Ricci operator in the tangent frame:
    ///
    /// ```text
    /// Ric(T)  = -(1/4) (2 + (2n-1) cos^2) T
    /// Ric(Y1) = -(1/4) (2 + (2n-3) cos^2) Y1 + (n/2) sin cos Z0
    /// Ric(V)  = -(1/4) (2 + (2n-1) cos^2) V           for V in the X2.. block
    /// Ric(Z0) = (n/2) sin cos Y1 + (1/2) ((n-1) - 2n cos^2) Z0
    /// ```
    pub fn intrinsic_ricci(&self) -> Matrix {
        let n = self.n() as f64;
        let m = self.tangent_dim();
        let (s, c) = self.theta.sin_cos();
        let c2 = c * c;
        let mut ric = Matrix::zeros(m, m);
        let bulk = -0.25 * (2.0 + (2.0 * n - 1.0) * c2);
        ric[(0, 0)] = bulk;
        ric[(1, 1)] = -0.25 * (2.0 + (2.0 * n - 3.0) * c2);
        for i in 2..(m - 1) {
            ric[(i, i)] = bulk;
        }
        ric[(m - 1, m - 1)] = 0.5 * ((n - 1.0) - 2.0 * n * c2);
        let cross = 0.5 * n * s * c;
        ric[(1, m - 1)] = cross;
        ric[(m - 1, 1)] = cross;
        ric
    }

    /// Principal Ricci curvatures: clustered spectrum of the Ricci operator.
    pub fn principal_ricci(&self, cluster_tol: f64) -> SpectrumReport {
        spectrum(&self.intrinsic_ricci(), cluster_tol).expect("Ricci operator is symmetric")
    }

    /// Scalar curvature, `-(n-1)/2 - (n (2n-1)/2) cos^2(theta)`; negative for
    /// every `theta`.
    pub fn intrinsic_scalar(&self) -> f64 {
        closed_scalar_curvature(self.n(), self.theta)
    }

    /// Sectional curvature of a tangent plane given in ambient coordinates:
    ///
    /// ```text
    /// K = -1/4 - (3/4) <JX,Y>^2 + (1/4)(1 + a3^2 + b3^2) sin^2
    ///     + (1/2)(a2 a3 + b2 b3) sin cos - (1/4)(a2 b3 - a3 b2)^2 cos^2
    /// ```
    pub fn intrinsic_sectional(&self, plane: &Plane) -> Result<f64, GeomError> {
        self.check_tangent(plane.x())?;
        self.check_tangent(plane.y())?;
        Ok(self.sectional_formula(plane.x(), plane.y()))
    }

    /// Formula core; assumes an orthonormal tangent pair in ambient coords.
    fn sectional_formula(&self, x: &Vector, y: &Vector) -> f64 {
        let (_, a2, a3) = self.frame_coefficients(x);
        let (_, b2, b3) = self.frame_coefficients(y);
        let kahler = self.ambient.apply_j(x).dot(y);
        let (s, c) = self.theta.sin_cos();
        -0.25 - 0.75 * kahler * kahler
            + 0.25 * (1.0 + a3 * a3 + b3 * b3) * s * s
            + 0.5 * (a2 * a3 + b2 * b3) * s * c
            - 0.25 * (a2 * b3 - a3 * b2).powi(2) * c * c
    }

    /// Closed-form sectional extrema for this `(n, theta)`.
    pub fn sectional_extrema_closed(&self) -> ClosedExtrema {
        closed_sectional_extrema(self.n(), self.theta)
    }

    /// Closed-form extrema together with a seeded search over tangent planes.
    pub fn sectional_extrema(&self, cfg: &SearchConfig) -> ExtremaReport {
        let closed = self.sectional_extrema_closed();
        let m = self.tangent_dim();
        let outcome = search_extrema(
            |p: &Plane| {
                let x = self.to_ambient(p.x());
                let y = self.to_ambient(p.y());
                self.sectional_formula(&x, &y)
            },
            m,
            cfg,
        );
        ExtremaReport {
            n: self.n(),
            theta: self.theta,
            max_closed: closed.max,
            min_closed: closed.min,
            max_search: outcome.max,
            min_search: outcome.min,
            argmax: outcome.argmax,
            argmin: outcome.argmin,
            c_cmp: closed.c_cmp,
            d_cmp: closed.d_cmp,
        }
    }

    /// Assembles the full curvature report.
    ///
    /// With `cluster_tol = None` the principal curvatures and principal Ricci
    /// curvatures are reported through the exact case split at
    /// `theta = pi/2` (two clusters there, three otherwise); passing a
    /// tolerance switches to numerical clustering of the operator spectra.
    pub fn curvature_report(
        &self,
        search_cfg: &SearchConfig,
        cluster_tol: Option<f64>,
        flag_tol: f64,
    ) -> CurvatureReport {
        let n = self.n();
        let (principal_curvatures, principal_ricci) = match cluster_tol {
            Some(tol) => (
                self.principal_curvatures(tol).clusters,
                self.principal_ricci(tol).clusters,
            ),
            None => (
                case_split_clusters(n, self.theta, principal_curvature_formulas(self.theta)),
                case_split_clusters(n, self.theta, principal_ricci_formulas(n, self.theta)),
            ),
        };
        let extrema = self.sectional_extrema(search_cfg);
        CurvatureReport {
            n,
            theta: self.theta,
            principal_curvatures,
            mean_curvature: self.mean_curvature(),
            flags: self.classify_extrinsic(flag_tol),
            principal_ricci,
            scalar: self.intrinsic_scalar(),
            sectional: SectionalSummary {
                max_closed: extrema.max_closed,
                min_closed: extrema.min_closed,
                max_search: extrema.max_search,
                min_search: extrema.min_search,
                c: extrema.c_cmp,
                d: extrema.d_cmp,
            },
        }
    }
}

/// Multiplicity layout `(1, 2n-3, 1)` away from `pi/2`, `(2n-2, 1)` there.
fn case_split_clusters(n: usize, theta: f64, values: [f64; 3]) -> Vec<EigenCluster> {
    if theta == FRAC_PI_2 {
        vec![
            EigenCluster {
                value: values[1],
                multiplicity: 2 * n - 2,
            },
            EigenCluster {
                value: values[2],
                multiplicity: 1,
            },
        ]
    } else {
        vec![
            EigenCluster {
                value: values[0],
                multiplicity: 1,
            },
            EigenCluster {
                value: values[1],
                multiplicity: 2 * n - 3,
            },
            EigenCluster {
                value: values[2],
                multiplicity: 1,
            },
        ]
    }
}

/// Principal curvatures in ascending order:
/// `(3/4) sin -+ (1/4) sqrt(1 + 3 cos^2)` around the middle value
/// `(1/2) sin`. The lower pair merges exactly at `theta = pi/2`.
pub fn principal_curvature_formulas(theta: f64) -> [f64; 3] {
    let (s, c) = theta.sin_cos();
    let root = (1.0 + 3.0 * c * c).sqrt();
    [0.75 * s - 0.25 * root, 0.5 * s, 0.75 * s + 0.25 * root]
}

/// Closed-form shape operator in the tangent frame.
pub fn closed_shape_operator(n: usize, theta: f64) -> Matrix {
    let m = 2 * n - 1;
    let (s, c) = theta.sin_cos();
    let mut a = Matrix::zeros(m, m);
    for i in 0..(m - 1) {
        a[(i, i)] = 0.5 * s;
    }
    a[(m - 1, m - 1)] = s;
    a[(1, m - 1)] = 0.5 * c;
    a[(m - 1, 1)] = 0.5 * c;
    a
}

/// Discriminant of the `Y1`-`Z0` block of the Ricci operator:
/// `A = 4n^2 + 4n(2n-3) cos^2 - 3(2n+1)(2n-3) cos^4`.
pub fn ricci_discriminant(n: usize, theta: f64) -> f64 {
    let nf = n as f64;
    let c2 = theta.cos().powi(2);
    4.0 * nf * nf + 4.0 * nf * (2.0 * nf - 3.0) * c2
        - 3.0 * (2.0 * nf + 1.0) * (2.0 * nf - 3.0) * c2 * c2
}

/// Principal Ricci curvatures in ascending order:
/// `(n-2)/4 - ((6n-3)/8) cos^2 -+ (1/8) sqrt(A)` around
/// `-1/2 - ((2n-1)/4) cos^2`.
pub fn principal_ricci_formulas(n: usize, theta: f64) -> [f64; 3] {
    let nf = n as f64;
    let c2 = theta.cos().powi(2);
    let base = (nf - 2.0) / 4.0 - (6.0 * nf - 3.0) / 8.0 * c2;
    let half = ricci_discriminant(n, theta).sqrt() / 8.0;
    let middle = -0.5 - (2.0 * nf - 1.0) / 4.0 * c2;
    [base - half, middle, base + half]
}

/// Closed-form scalar curvature `-(n-1)/2 - (n(2n-1)/2) cos^2(theta)`.
pub fn closed_scalar_curvature(n: usize, theta: f64) -> f64 {
    let nf = n as f64;
    let c2 = theta.cos().powi(2);
    -(nf - 1.0) / 2.0 - nf * (2.0 * nf - 1.0) / 2.0 * c2
}

/// Closed-form sectional extrema.
///
/// For `n = 2` both extrema are available:
/// `-1/4 - (3/8) cos^2 +- (1/8) D`. For `n > 2` only the maximum,
/// `-1/4 + (3/8) sin^2 + (1/8) sin sqrt(sin^2 + 4 cos^2)`, has a closed form.
pub fn closed_sectional_extrema(n: usize, theta: f64) -> ClosedExtrema {
    let cmp = compare_extrema(theta);
    let (s, c) = theta.sin_cos();
    if n == 2 {
        let base = -0.25 - 0.375 * c * c;
        ClosedExtrema {
            max: base + cmp.d / 8.0,
            min: Some(base - cmp.d / 8.0),
            c_cmp: cmp.c,
            d_cmp: cmp.d,
        }
    } else {
        ClosedExtrema {
            max: -0.25 + 0.375 * s * s + 0.125 * s * (s * s + 4.0 * c * c).sqrt(),
            min: None,
            c_cmp: cmp.c,
            d_cmp: cmp.d,
        }
    }
}

/// Comparison quantities
/// `C = 3 + sin sqrt(sin^2 + 4 cos^2)` and
/// `D = sqrt(16 sin^4 + 9 cos^4 + 40 sin^2 cos^2)`, together with the gap
/// `(C - D)/8` between the two families' maxima.
///
/// The radicand of `D` is the expanded form of
/// `(3 cos^2 - 4 sin^2)^2 + 64 sin^2 cos^2`; the two expressions agree
/// identically, and the expanded one is used throughout.
pub fn compare_extrema(theta: f64) -> ExtremaComparison {
    let (s, c) = theta.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let big_c = 3.0 + s * (s2 + 4.0 * c2).sqrt();
    let big_d = (16.0 * s2 * s2 + 9.0 * c2 * c2 + 40.0 * s2 * c2).sqrt();
    ExtremaComparison {
        c: big_c,
        d: big_d,
        max_gap: (big_c - big_d) / 8.0,
    }
}

/// Report emitted for one hypersurface; the JSON layout is the CLI contract.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub n: usize,
    pub theta: f64,
    pub principal_curvatures: Vec<EigenCluster>,
    pub mean_curvature: f64,
    pub flags: ExtrinsicFlags,
    pub principal_ricci: Vec<EigenCluster>,
    pub scalar: f64,
    pub sectional: SectionalSummary,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectionalSummary {
    pub max_closed: f64,
    pub min_closed: Option<f64>,
    pub max_search: f64,
    pub min_search: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "D")]
    pub d: f64,
}
