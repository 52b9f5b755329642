//! Polyhedral helpers and the simplicial matrix data `(A, y)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hnf::kernel_lattice_basis;
use crate::int::{combinations, IntMat, IntVec};

/// Coordinatewise maximum of equal-length vectors.
pub fn max_vectors(vs: &[IntVec]) -> Result<IntVec> {
    let first = vs.first().ok_or_else(|| Error::DimensionMismatch("no vectors".into()))?;
    let mut out = first.clone();
    for v in &vs[1..] {
        if v.len() != out.len() {
            return Err(Error::DimensionMismatch(format!("vector lengths {} and {}", out.len(), v.len())));
        }
        for i in 0..out.len() {
            if v[i] > out[i] {
                out[i] = v[i].clone();
            }
        }
    }
    Ok(out)
}

/// Right-hand side of the smallest polyhedron `P_A(b)` containing `pts`,
/// i.e. `max(A v₁, …, A v_r)`.
pub fn body_rhs(a: &IntMat, pts: &[IntVec]) -> Result<IntVec> {
    if let Some(p) = pts.iter().find(|p| p.len() != a.cols()) {
        return Err(Error::DimensionMismatch(format!(
            "point of length {} for a matrix with {} columns",
            p.len(),
            a.cols()
        )));
    }
    let images: Vec<IntVec> = pts.iter().map(|p| a.mul_vec(p)).collect();
    max_vectors(&images)
}

/// Sign of the first nonzero coordinate.
pub fn lex_sign(w: &IntVec) -> Ordering {
    w.iter().find(|c| !c.is_zero()).map_or(Ordering::Equal, |c| c.sign().cmp(&num_bigint::Sign::NoSign))
}

/// An integral `(d+1) × d` matrix `A` with a strictly positive left
/// annihilator `y` and all `d × d` minors nonzero, so that every
/// full-dimensional `P_A(b)` is a simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialData {
    a: IntMat,
    y: IntVec,
}

impl SimplicialData {
    pub fn new(a: IntMat, y: IntVec) -> Result<Self> {
        let d = a.cols();
        if d == 0 || a.rows() != d + 1 {
            return Err(Error::NotSimplicial(format!("expected a (d+1)xd matrix, got {}x{}", a.rows(), a.cols())));
        }
        if y.len() != d + 1 {
            return Err(Error::DimensionMismatch(format!("annihilator has length {}, expected {}", y.len(), d + 1)));
        }
        if let Some(index) = y.iter().position(|c| !c.is_positive()) {
            return Err(Error::NotSimplicial(format!("annihilator entry {index} is not positive")));
        }
        if !a.left_mul_vec(&y).is_zero() {
            return Err(Error::NotSimplicial("y does not annihilate A".into()));
        }
        let cols: Vec<usize> = (0..d).collect();
        for rows in combinations(d + 1, d) {
            if a.select(&rows, &cols).det()?.is_zero() {
                return Err(Error::NotSimplicial(format!("vanishing minor on rows {rows:?}")));
            }
        }
        Ok(SimplicialData { a, y })
    }

    /// Derives the primitive positive annihilator from the signed maximal
    /// minors of `a`.
    pub fn from_matrix(a: IntMat) -> Result<Self> {
        if a.cols() == 0 || a.rows() != a.cols() + 1 {
            return Err(Error::NotSimplicial(format!("expected a (d+1)xd matrix, got {}x{}", a.rows(), a.cols())));
        }
        let minors = a.signed_maximal_minors()?;
        let g = minors.content();
        if g.is_zero() {
            return Err(Error::NotSimplicial("matrix does not have full rank".into()));
        }
        let mut y: IntVec = minors.iter().map(|c| c / &g).collect();
        if y[0].is_negative() {
            y = -&y;
        }
        Self::new(a, y)
    }

    /// The simplicial data of a Frobenius instance: `A` is a kernel-lattice
    /// basis of `a` and `y = a`.
    pub fn from_frobenius(a: &IntVec) -> Result<Self> {
        let basis = kernel_lattice_basis(a)?;
        Self::new(basis, a.clone())
    }

    pub fn matrix(&self) -> &IntMat {
        &self.a
    }

    pub fn annihilator(&self) -> &IntVec {
        &self.y
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    /// Row `a_i`.
    pub fn row(&self, i: usize) -> IntVec {
        self.a.row(i)
    }

    /// Image `A z`.
    pub fn image(&self, z: &IntVec) -> IntVec {
        self.a.mul_vec(z)
    }

    /// Recovers `z` from `w = A z` using rows `1..=d`.
    pub fn preimage(&self, w: &IntVec) -> Option<IntVec> {
        let d = self.dim();
        let rows: Vec<usize> = (1..=d).collect();
        let cols: Vec<usize> = (0..d).collect();
        let sub = self.a.select(&rows, &cols);
        let rhs: IntVec = (1..=d).map(|i| w[i].clone()).collect();
        let z = sub.solve_integral(&rhs).ok()??;
        (self.image(&z) == *w).then_some(z)
    }

    /// Coordinate change `A ↦ A U` for unimodular `U`.
    pub fn transformed(&self, u: &IntMat) -> Result<Self> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::DimensionMismatch("transformation has the wrong shape".into()));
        }
        if u.det()?.abs() != BigInt::one() {
            return Err(Error::NotUnimodular);
        }
        Self::new(self.a.mul(u)?, self.y.clone())
    }
}
