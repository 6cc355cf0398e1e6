//! The solvable model of complex hyperbolic space.
//!
//! The model is the 2n-dimensional metric Lie algebra with orthonormal basis
//! `(A0, X1, Y1, ..., X_{n-1}, Y_{n-1}, Z0)`, nonzero brackets
//!
//! ```text
//! [A0, Xi] = (1/2) Xi,   [A0, Yi] = (1/2) Yi,   [A0, Z0] = Z0,   [Xi, Yi] = Z0,
//! ```
//!
//! and the orthogonal complex structure `J A0 = Z0`, `J Xi = Yi`. With this
//! normalization the holomorphic sectional curvature is the constant -1.
//! Besides the model itself this module provides the closed-form connection,
//! curvature and sectional-curvature evaluators that the generic oracle in
//! [`crate::algebra`] is checked against.

use std::ops::Range;

use crate::error::GeomError;
use crate::matrix::Matrix;
use crate::vector::{Plane, Vector};
use crate::MetricLieAlgebra;

/// Scalar-matrix gate for [`AmbientModel::einstein_constant`].
pub const EINSTEIN_TOL: f64 = 1e-9;

/// The solvable model of complex hyperbolic space of complex dimension `n`.
#[derive(Debug, Clone)]
pub struct AmbientModel {
    n: usize,
    alg: MetricLieAlgebra,
    j: Matrix,
}

impl AmbientModel {
    /// Builds the model for complex dimension `n >= 2`.
    pub fn new(n: usize) -> Result<Self, GeomError> {
        if n < 2 {
            return Err(GeomError::InvalidDimension(n));
        }
        let dim = 2 * n;
        let a0 = 0;
        let z0 = dim - 1;
        let mut labels = vec!["A0".to_string()];
        for i in 1..n {
            labels.push(format!("X{i}"));
            labels.push(format!("Y{i}"));
        }
        labels.push("Z0".to_string());

        let mut brackets: Vec<crate::algebra::BracketSpec> = Vec::new();
        for i in 1..n {
            let x = 2 * i - 1;
            let y = 2 * i;
            brackets.push((a0, x, vec![(x, 0.5)]));
            brackets.push((a0, y, vec![(y, 0.5)]));
            brackets.push((x, y, vec![(z0, 1.0)]));
        }
        brackets.push((a0, z0, vec![(z0, 1.0)]));
        let alg = MetricLieAlgebra::from_brackets(dim, &brackets, Some(labels))?;

        let mut j = Matrix::zeros(dim, dim);
        j[(z0, a0)] = 1.0;
        j[(a0, z0)] = -1.0;
        for i in 1..n {
            let x = 2 * i - 1;
            let y = 2 * i;
            j[(y, x)] = 1.0;
            j[(x, y)] = -1.0;
        }

        Ok(Self { n, alg, j })
    }

    /// Complex dimension of the modeled space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Real dimension `2n` of the algebra.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.alg
    }

    pub fn complex_structure(&self) -> &Matrix {
        &self.j
    }

    /// Basis index of `A0`.
    pub fn a0(&self) -> usize {
        0
    }

    /// Basis index of `X_i`, `1 <= i <= n-1`.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..self.n).contains(&i));
        2 * i - 1
    }

    /// Basis index of `Y_i`, `1 <= i <= n-1`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!((1..self.n).contains(&i));
        2 * i
    }

    /// Basis index of `Z0`.
    pub fn z0(&self) -> usize {
        2 * self.n - 1
    }

    /// Index range of the subspace spanned by the `X_i, Y_i`.
    pub fn v_range(&self) -> Range<usize> {
        1..(2 * self.n - 1)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.alg.basis_vector(i)
    }

    /// Applies the complex structure.
    pub fn apply_j(&self, v: &Vector) -> Vector {
        self.j.mul_vec(v)
    }

    fn check_dim(&self, v: &Vector) -> Result<(), GeomError> {
        if v.dim() != self.dim() {
            Err(GeomError::DimensionMismatch {
                expected: self.dim(),
                got: v.dim(),
            })
        } else {
            Ok(())
        }
    }

    /// Splits `x = a1 A0 + V + a2 Z0` with `V` in the `X/Y` span.
    fn decompose(&self, x: &Vector) -> (f64, Vector, f64) {
        let a1 = x[self.a0()];
        let a2 = x[self.z0()];
        let mut v = vec![0.0; self.dim()];
        for i in self.v_range() {
            v[i] = x[i];
        }
        (a1, Vector::new(v), a2)
    }

    /// Closed-form Levi-Civita connection of the model:
    ///
    /// ```text
    /// 2 nabla_X Y = (<V,W> + 2 a2 b2) A0 - b1 V - a2 JW - b2 JV
    ///               + (<JV,W> - 2 a2 b1) Z0
    /// ```
    ///
    /// for `X = a1 A0 + V + a2 Z0`, `Y = b1 A0 + W + b2 Z0`. The factor 2 on
    /// the `a2 b1` term is forced by torsion-freeness together with metric
    /// compatibility (check the pair `nabla_{Z0} A0 = -Z0`, `nabla_{Z0} Z0 = A0`).
    pub fn connection_closed(&self, x: &Vector, y: &Vector) -> Result<Vector, GeomError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let (_a1, v, a2) = self.decompose(x);
        let (b1, w, b2) = self.decompose(y);
        let jv = self.apply_j(&v);
        let jw = self.apply_j(&w);

        let mut out = Vector::zeros(self.dim());
        out.axpy(
            0.5 * (v.dot(&w) + 2.0 * a2 * b2),
            &self.basis_vector(self.a0()),
        );
        out.axpy(-0.5 * b1, &v);
        out.axpy(-0.5 * a2, &jw);
        out.axpy(-0.5 * b2, &jv);
        out.axpy(
            0.5 * (jv.dot(&w) - 2.0 * a2 * b1),
            &self.basis_vector(self.z0()),
        );
        Ok(out)
    }

    /// Closed-form Riemannian curvature of the model:
    ///
    /// ```text
    /// 4 R(X,Y)Z = <Y,Z> X - <X,Z> Y + <JY,Z> JX - <JX,Z> JY - 2 <JX,Y> JZ
    /// ```
    pub fn curvature_closed(
        &self,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector, GeomError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        let jx = self.apply_j(x);
        let jy = self.apply_j(y);
        let jz = self.apply_j(z);
        let mut out = x.scale(0.25 * y.dot(z));
        out.axpy(-0.25 * x.dot(z), y);
        out.axpy(0.25 * jy.dot(z), &jx);
        out.axpy(-0.25 * jx.dot(z), &jy);
        out.axpy(-0.5 * jx.dot(y), &jz);
        Ok(out)
    }

    /// Closed-form sectional curvature `K = -1/4 - (3/4) <JX, Y>^2`; the value
    /// lies in `[-1, -1/4]`, hitting -1 exactly on complex planes and -1/4 on
    /// totally real ones.
    pub fn sectional_closed(&self, plane: &Plane) -> Result<f64, GeomError> {
        self.check_dim(plane.x())?;
        let kahler = self.apply_j(plane.x()).dot(plane.y());
        Ok(-0.25 - 0.75 * kahler * kahler)
    }

    /// Verifies that the oracle Ricci operator is a scalar matrix and returns
    /// the scalar, which equals `-(n+1)/2` for this model.
    pub fn einstein_constant(&self) -> Result<f64, GeomError> {
        let ric = self.alg.ricci_matrix();
        let c = ric.trace() / self.dim() as f64;
        let defect = ric.scalar_matrix_defect(c);
        if defect > EINSTEIN_TOL {
            return Err(GeomError::NotEinstein(defect));
        }
        Ok(c)
    }

    /// Serializes the underlying algebra in the JSON bracket-list format.
    pub fn export_algebra(&self) -> String {
        self.alg.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::orthonormal_pair;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn model(n: usize) -> AmbientModel {
        AmbientModel::new(n).unwrap()
    }

    fn random_vector(dim: usize, rng: &mut ChaCha8Rng) -> Vector {
        Vector::new((0..dim).map(|_| rng.random_range(-1.0..1.0)).collect())
    }

    #[test]
    fn rejects_n_below_two() {
        assert!(matches!(
            AmbientModel::new(1),
            Err(GeomError::InvalidDimension(1))
        ));
    }

    #[test]
    fn n2_brackets_match_the_model() {
        let m = model(2);
        let alg = m.algebra();
        assert_eq!(alg.dim(), 4);
        assert!(alg.validate().is_empty());
        let (a0, x1, y1, z0) = (m.a0(), m.x(1), m.y(1), m.z0());
        let br = |i: usize, j: usize| {
            alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j))
                .unwrap()
        };
        assert_eq!(br(a0, x1), m.basis_vector(x1).scale(0.5));
        assert_eq!(br(a0, y1), m.basis_vector(y1).scale(0.5));
        assert_eq!(br(a0, z0), m.basis_vector(z0));
        assert_eq!(br(x1, y1), m.basis_vector(z0));
    }

    #[test]
    fn unrelated_generators_commute() {
        let m = model(3);
        let x1 = m.basis_vector(m.x(1));
        let x2 = m.basis_vector(m.x(2));
        assert_eq!(m.algebra().bracket(&x1, &x2).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn complex_structure_is_orthogonal_with_square_minus_one() {
        for n in [2, 3, 5] {
            let m = model(n);
            let j = m.complex_structure();
            let j2 = j.mul_mat(j);
            let mut neg_id = Matrix::zeros(m.dim(), m.dim());
            for i in 0..m.dim() {
                neg_id[(i, i)] = -1.0;
            }
            assert_eq!(j2.max_abs_diff(&neg_id), 0.0);
            // J e_a orthonormal: columns have unit norm and are orthogonal
            for a in 0..m.dim() {
                for b in 0..m.dim() {
                    let ja = m.apply_j(&m.basis_vector(a));
                    let jb = m.apply_j(&m.basis_vector(b));
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert_eq!(ja.dot(&jb), expected);
                }
            }
            assert_eq!(m.apply_j(&m.basis_vector(m.a0())), m.basis_vector(m.z0()));
        }
    }

    #[test]
    fn bracket_on_v_is_kahler_form_times_z0() {
        let m = model(4);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut v = Vector::zeros(m.dim());
            let mut w = Vector::zeros(m.dim());
            for i in m.v_range() {
                v.axpy(rng.random_range(-1.0..1.0), &m.basis_vector(i));
                w.axpy(rng.random_range(-1.0..1.0), &m.basis_vector(i));
            }
            let br = m.algebra().bracket(&v, &w).unwrap();
            let mut expected = Vector::zeros(m.dim());
            expected.axpy(m.apply_j(&v).dot(&w), &m.basis_vector(m.z0()));
            assert!(br.max_abs_diff(&expected) < 1e-15);
        }
    }

    #[test]
    fn derived_subalgebra_has_codimension_one() {
        // brackets of the model span X/Y/Z0; the A0 slot never appears
        for n in [2, 3] {
            let m = model(n);
            let alg = m.algebra();
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    let br = alg
                        .bracket(&alg.basis_vector(i), &alg.basis_vector(j))
                        .unwrap();
                    assert_eq!(br[m.a0()], 0.0);
                }
            }
            let dims = alg.derived_series_dims(crate::algebra::RANK_TOL);
            assert_eq!(dims[0], 2 * n - 1);
            assert_eq!(*dims.last().unwrap(), 0);
        }
    }

    #[test]
    fn koszul_examples() {
        let m = model(3);
        let alg = m.algebra();
        let a0 = m.basis_vector(m.a0());
        let z0 = m.basis_vector(m.z0());
        let x1 = m.basis_vector(m.x(1));
        let u = alg.koszul_u(&a0, &z0).unwrap();
        assert!(u.max_abs_diff(&z0.scale(-0.5)) < 1e-15);
        let u = alg.koszul_u(&x1, &x1).unwrap();
        assert!(u.max_abs_diff(&a0.scale(0.5)) < 1e-15);
    }

    #[test]
    fn oracle_connection_examples() {
        let m = model(2);
        let alg = m.algebra();
        let a0 = m.basis_vector(m.a0());
        let x1 = m.basis_vector(m.x(1));
        let y1 = m.basis_vector(m.y(1));
        let z0 = m.basis_vector(m.z0());
        assert!(alg.levi_civita(&a0, &z0).unwrap().max_abs() < 1e-15);
        assert!(
            alg.levi_civita(&x1, &y1)
                .unwrap()
                .max_abs_diff(&z0.scale(0.5))
                < 1e-15
        );
        assert!(alg.levi_civita(&z0, &z0).unwrap().max_abs_diff(&a0) < 1e-15);
    }

    #[test]
    fn closed_connection_examples() {
        let m = model(2);
        let a0 = m.basis_vector(m.a0());
        let x1 = m.basis_vector(m.x(1));
        let y1 = m.basis_vector(m.y(1));
        let z0 = m.basis_vector(m.z0());
        assert!(m.connection_closed(&a0, &a0).unwrap().max_abs() < 1e-15);
        assert!(
            m.connection_closed(&x1, &x1)
                .unwrap()
                .max_abs_diff(&a0.scale(0.5))
                < 1e-15
        );
        assert!(
            m.connection_closed(&z0, &x1)
                .unwrap()
                .max_abs_diff(&y1.scale(-0.5))
                < 1e-15
        );
    }

    #[test]
    fn closed_connection_matches_oracle_on_random_pairs() {
        for n in [2, 3] {
            let m = model(n);
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..100 {
                let x = random_vector(m.dim(), &mut rng);
                let y = random_vector(m.dim(), &mut rng);
                let closed = m.connection_closed(&x, &y).unwrap();
                let oracle = m.algebra().levi_civita(&x, &y).unwrap();
                assert!(closed.max_abs_diff(&oracle) < 1e-13);
            }
        }
    }

    #[test]
    fn curvature_examples() {
        let m = model(3);
        let a0 = m.basis_vector(m.a0());
        let x1 = m.basis_vector(m.x(1));
        let x2 = m.basis_vector(m.x(2));
        let z0 = m.basis_vector(m.z0());

        let r = m.curvature_closed(&a0, &z0, &a0).unwrap();
        assert!(r.max_abs_diff(&z0.scale(-1.0)) < 1e-15);
        let r = m.algebra().riemann(&a0, &z0, &a0).unwrap();
        assert!(r.max_abs_diff(&z0.scale(-1.0)) < 1e-15);

        let r = m.curvature_closed(&x1, &x2, &x1).unwrap();
        assert!(r.max_abs_diff(&x2.scale(-0.25)) < 1e-15);
        let r = m.algebra().riemann(&x1, &x2, &x1).unwrap();
        assert!(r.max_abs_diff(&x2.scale(-0.25)) < 1e-15);

        // antisymmetry in the first two slots
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let x = random_vector(m.dim(), &mut rng);
        let z = random_vector(m.dim(), &mut rng);
        assert!(m.curvature_closed(&x, &x, &z).unwrap().max_abs() < 1e-15);
        assert!(m.algebra().riemann(&x, &x, &z).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn einstein_constants() {
        assert!((model(2).einstein_constant().unwrap() + 1.5).abs() < 1e-12);
        assert!((model(3).einstein_constant().unwrap() + 2.0).abs() < 1e-12);
        assert!((model(5).einstein_constant().unwrap() + 3.0).abs() < 1e-12);
    }

    #[test]
    fn scalar_curvature_of_the_model() {
        for n in [2usize, 3, 5] {
            let m = model(n);
            let expected = -((n * (n + 1)) as f64);
            assert!((m.algebra().scalar_curvature() - expected).abs() < 1e-11);
        }
    }

    #[test]
    fn sectional_examples() {
        let m = model(3);
        let x1 = m.basis_vector(m.x(1));
        let y1 = m.basis_vector(m.y(1));
        let a0 = m.basis_vector(m.a0());
        let x2 = m.basis_vector(m.x(2));

        let holomorphic = Plane::new(x1.clone(), y1.clone()).unwrap();
        assert!((m.sectional_closed(&holomorphic).unwrap() + 1.0).abs() < 1e-15);
        assert!((m.algebra().sectional(&holomorphic).unwrap() + 1.0).abs() < 1e-13);

        let real = Plane::new(a0, x1.clone()).unwrap();
        assert!((m.sectional_closed(&real).unwrap() + 0.25).abs() < 1e-15);
        assert!((m.algebra().sectional(&real).unwrap() + 0.25).abs() < 1e-13);

        // mixed Kahler angle: <J X1, (Y1 + X2)/sqrt(2)> = 1/sqrt(2)
        let mixed = orthonormal_pair(&x1, &(&y1 + &x2)).unwrap();
        assert!((m.sectional_closed(&mixed).unwrap() + 0.625).abs() < 1e-14);
        assert!((m.algebra().sectional(&mixed).unwrap() + 0.625).abs() < 1e-13);
    }

    #[test]
    fn export_round_trips_through_json() {
        let m = model(3);
        let text = m.export_algebra();
        let back = MetricLieAlgebra::from_json(&text).unwrap();
        assert_eq!(back.dim(), m.dim());
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                for k in 0..m.dim() {
                    assert_eq!(back.c(i, j, k), m.algebra().c(i, j, k));
                }
            }
        }
        assert_eq!(back.label(0), "A0");
        assert_eq!(back.label(m.z0()), "Z0");
    }
}
