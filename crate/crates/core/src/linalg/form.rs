//! Symmetric bilinear forms on `Q^n`.

use num_traits::{Signed, Zero};

use super::matrix::{dot, Matrix};
use super::scalar::Rational;
use super::subspace::RealSubspace;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    gram: Matrix,
}

/// Inertia `(positive, negative, zero)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature { positive, negative, zero }
    }
}

impl SymmetricForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Input("Gram matrix is not symmetric".into()));
        }
        Ok(SymmetricForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.apply(y))
    }

    /// Gram matrix of the restriction to `s` in its canonical basis.
    pub fn restrict(&self, s: &RealSubspace) -> SymmetricForm {
        let b = s.basis_matrix();
        let g = &(b * &self.gram) * &b.transpose();
        SymmetricForm { gram: g }
    }

    pub fn is_isotropic(&self, s: &RealSubspace) -> bool {
        self.restrict(s).gram.is_zero()
    }

    /// True iff `B(a, b) = 0` for all `a ∈ s`, `b ∈ t`.
    pub fn are_orthogonal(&self, s: &RealSubspace, t: &RealSubspace) -> bool {
        (&(s.basis_matrix() * &self.gram) * &t.basis_matrix().transpose()).is_zero()
    }

    /// `{x : B(x, s) = 0}`.
    pub fn orthogonal(&self, s: &RealSubspace) -> RealSubspace {
        let cond = s.basis_matrix() * &self.gram;
        RealSubspace::span(self.dim(), &cond.kernel())
    }

    /// Congruence-diagonalizes and counts signs.
    ///
    /// Pivot choice: the first nonzero diagonal entry; failing that, the first
    /// nonzero off-diagonal entry `(i, j)` is folded in by `row_i += row_j`,
    /// `col_i += col_j`, which makes the diagonal entry `2·a_ij` nonzero.
    pub fn signature(&self) -> Signature {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut sig = Signature::new(0, 0, 0);
        for k in 0..n {
            let pivot = (k..n).find(|&i| !a[(i, i)].is_zero()).or_else(|| {
                let (i, j) =
                    (k..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero())?;
                add_congruent(&mut a, i, j);
                Some(i)
            });
            let Some(p) = pivot else {
                sig.zero += n - k;
                break;
            };
            swap_congruent(&mut a, k, p);
            let d = a[(k, k)].clone();
            for r in (k + 1)..n {
                if a[(r, k)].is_zero() {
                    continue;
                }
                let f = &a[(r, k)] / &d;
                for c in k..n {
                    let v = &f * &a[(k, c)];
                    a[(r, c)] -= v;
                }
                for c in k..n {
                    let v = &f * &a[(c, k)];
                    a[(c, r)] -= v;
                }
            }
            if d.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
        }
        sig
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.signature().zero == 0
    }
}

fn swap_congruent(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap_rows(i, j);
    for r in 0..a.rows() {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

fn add_congruent(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] += v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_signatures() {
        let id = SymmetricForm::new(Matrix::identity(2)).unwrap();
        assert_eq!(id.signature(), Signature::new(2, 0, 0));
        let d = SymmetricForm::new(Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])).unwrap();
        assert_eq!(d.signature(), Signature::new(1, 1, 1));
    }

    #[test]
    fn hyperbolic_plane_needs_off_diagonal_pivot() {
        let h = SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(h.signature(), Signature::new(1, 1, 0));
        let z = SymmetricForm::new(Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]])).unwrap();
        assert_eq!(z.signature(), Signature::new(1, 1, 1));
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn isotropy_and_orthogonal() {
        let h = SymmetricForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        let e1 = RealSubspace::coordinate(2, &[0]);
        assert!(h.is_isotropic(&e1));
        assert_eq!(h.orthogonal(&e1), e1);
    }
}
