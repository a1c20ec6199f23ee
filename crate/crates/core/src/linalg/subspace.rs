//! Canonical subspaces of `Q^n`.

use std::fmt;

use num_traits::Zero;

use super::matrix::{Echelon, Matrix};
use super::scalar::Rational;
use crate::error::{Error, Result};

/// A subspace of `Q^n` held as the nonzero rows of its reduced row-echelon basis.
///
/// The RREF is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealSubspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RealSubspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = Matrix::from_rows(vectors, ambient);
        let Echelon { matrix, pivots } = m.rref();
        RealSubspace { ambient, basis: matrix, pivots }
    }

    pub fn try_span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::AmbientMismatch(ambient, v.len()));
        }
        Ok(Self::span(ambient, vectors))
    }

    pub fn zero(ambient: usize) -> Self {
        RealSubspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        RealSubspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical RREF rows.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (k, ck) in c.iter().enumerate() {
            super::matrix::axpy(&mut r, &-ck.clone(), self.basis.row(k));
        }
        r.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient");
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &RealSubspace) -> bool {
        self.check(other);
        (0..other.dim()).all(|k| self.contains(other.basis.row(k)))
    }

    pub fn sum(&self, other: &RealSubspace) -> RealSubspace {
        self.check(other);
        RealSubspace::span(self.ambient, &[self.basis(), other.basis()].concat())
    }

    pub fn try_sum(&self, other: &RealSubspace) -> Result<RealSubspace> {
        self.ensure_same(other)?;
        Ok(self.sum(other))
    }

    pub fn sum_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a RealSubspace>) -> RealSubspace {
        let mut vs = Vec::new();
        for p in parts {
            assert_eq!(p.ambient, ambient);
            vs.extend(p.basis());
        }
        RealSubspace::span(ambient, &vs)
    }

    /// `{y : y · x = 0 for all x in self}` for the standard dot product.
    pub fn annihilator(&self) -> RealSubspace {
        RealSubspace::span(self.ambient, &self.basis.kernel())
    }

    pub fn intersect(&self, other: &RealSubspace) -> RealSubspace {
        self.check(other);
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn try_intersect(&self, other: &RealSubspace) -> Result<RealSubspace> {
        self.ensure_same(other)?;
        Ok(self.intersect(other))
    }

    /// Image under `map` (acting on column vectors, codomain = map rows).
    pub fn image(&self, map: &Matrix) -> RealSubspace {
        assert_eq!(map.cols(), self.ambient, "map domain does not match ambient");
        let vs: Vec<Vec<Rational>> = (0..self.dim()).map(|k| map.apply(self.basis.row(k))).collect();
        RealSubspace::span(map.rows(), &vs)
    }

    /// `{x : map·x ∈ target}`.
    pub fn preimage(map: &Matrix, target: &RealSubspace) -> RealSubspace {
        assert_eq!(map.rows(), target.ambient);
        let ann = target.annihilator();
        if ann.is_zero() {
            return RealSubspace::full(map.cols());
        }
        let cond = ann.basis_matrix() * map;
        RealSubspace::span(map.cols(), &cond.kernel())
    }

    /// Kernel of a square or rectangular map, as a subspace of its domain.
    pub fn kernel_of(map: &Matrix) -> RealSubspace {
        RealSubspace::span(map.cols(), &map.kernel())
    }

    /// `{x ∈ self : map·x = 0}`.
    pub fn kernel_within(&self, map: &Matrix) -> RealSubspace {
        self.intersect(&RealSubspace::kernel_of(map))
    }

    /// True iff the subspaces are independent and together span `whole`.
    pub fn is_direct_sum_of(whole: &RealSubspace, parts: &[&RealSubspace]) -> bool {
        let total: usize = parts.iter().map(|p| p.dim()).sum();
        let s = RealSubspace::sum_all(whole.ambient, parts.iter().copied());
        total == s.dim() && s == *whole
    }

    fn check(&self, other: &RealSubspace) {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
    }

    fn ensure_same(&self, other: &RealSubspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

impl fmt::Debug for RealSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealSubspace(dim {} in {}) ", self.dim(), self.ambient)?;
        let rows: Vec<String> = self
            .basis()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", rows.join(" "))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}
