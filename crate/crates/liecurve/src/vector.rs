//! Coefficient vectors and orthonormal 2-planes.
//!
//! A [`Vector`] holds the coordinates of an algebra element in the declared
//! orthonormal basis, so the inner product is the plain dot product.

use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::GeomError;

/// Element of a metric Lie algebra, expressed in the declared basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coeffs: Vec<f64>,
}

impl Vector {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coeffs: vec![0.0; dim],
        }
    }

    /// `i`-th standard basis vector of an `dim`-dimensional algebra.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dim {dim}");
        let mut coeffs = vec![0.0; dim];
        coeffs[i] = 1.0;
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: f64) -> Vector {
        Vector::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Adds `s * other` in place.
    pub fn axpy(&mut self, s: f64, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += s * b;
        }
    }

    pub fn max_abs_diff(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coeffs[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul<f64> for &Vector {
    type Output = Vector;
    fn mul(self, s: f64) -> Vector {
        self.scale(s)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

/// A 2-plane given by an ordered orthonormal pair of spanning vectors.
///
/// Construction validates the pair, so every live `Plane` is orthonormal
/// to within [`Plane::ORTHONORMALITY_TOL`].
#[derive(Debug, Clone)]
pub struct Plane {
    x: Vector,
    y: Vector,
}

impl Plane {
    /// How far the spanning pair may deviate from exact orthonormality.
    pub const ORTHONORMALITY_TOL: f64 = 1e-8;

    pub fn new(x: Vector, y: Vector) -> Result<Self, GeomError> {
        if x.dim() != y.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: x.dim(),
                got: y.dim(),
            });
        }
        let defect = (x.norm() - 1.0)
            .abs()
            .max((y.norm() - 1.0).abs())
            .max(x.dot(&y).abs());
        if defect > Self::ORTHONORMALITY_TOL {
            return Err(GeomError::DegeneratePlane(format!(
                "spanning pair fails orthonormality by {defect:.3e}"
            )));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &Vector {
        &self.x
    }

    pub fn y(&self) -> &Vector {
        &self.y
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    /// The plane spanned by the same pair rotated by `angle` inside the plane.
    /// Sectional curvature must not change under this re-parametrization.
    pub fn rotated(&self, angle: f64) -> Plane {
        let (s, c) = angle.sin_cos();
        let x = &self.x.scale(c) + &self.y.scale(s);
        let y = &self.x.scale(-s) + &self.y.scale(c);
        Plane { x, y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_vectors_are_orthonormal() {
        let e0 = Vector::basis(3, 0);
        let e1 = Vector::basis(3, 1);
        assert_eq!(e0.dot(&e0), 1.0);
        assert_eq!(e0.dot(&e1), 0.0);
        assert_eq!(e0.norm(), 1.0);
    }

    #[test]
    fn plane_rejects_non_orthonormal_pairs() {
        let x = Vector::new(vec![1.0, 0.0, 0.0]);
        let y = Vector::new(vec![0.5, 0.5, 0.0]);
        assert!(Plane::new(x, y).is_err());
    }

    #[test]
    fn plane_rejects_dimension_mismatch() {
        let x = Vector::basis(3, 0);
        let y = Vector::basis(4, 1);
        assert!(matches!(
            Plane::new(x, y),
            Err(GeomError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rotation_stays_orthonormal() {
        let p = Plane::new(Vector::basis(4, 1), Vector::basis(4, 3)).unwrap();
        let q = p.rotated(0.7);
        assert!((q.x().norm() - 1.0).abs() < 1e-15);
        assert!(q.x().dot(q.y()).abs() < 1e-15);
    }
}
