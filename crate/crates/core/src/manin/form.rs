//! Manin forms `B = Σ Im(λ_q K_q) + center part` and the speciality test.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{GaussianRational, Matrix, Rational, RealSubspace, Signature, SymmetricForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinForm {
    lambda: Vec<GaussianRational>,
    center_gram: Matrix,
    form: SymmetricForm,
}

impl ManinForm {
    /// Builds and validates `B_λ`: symmetric, invariant, of signature `(dim_C g, dim_C g, 0)`.
    ///
    /// `center_gram` is the Gram matrix on the realified center, of size `2·center_rank`.
    pub fn new(g: &LieAlgebra, lambda: &[GaussianRational], center_gram: &Matrix) -> Result<Self> {
        if lambda.len() != g.ideals().len() {
            return Err(Error::InvalidForm(format!(
                "expected {} lambda values (one per simple ideal), got {}",
                g.ideals().len(),
                lambda.len()
            )));
        }
        if let Some(q) = lambda.iter().position(GaussianRational::is_zero) {
            return Err(Error::InvalidForm(format!(
                "lambda[{q}] = 0: Im(lambda K) is nondegenerate on a simple ideal only when lambda is nonzero"
            )));
        }
        let c = 2 * g.center_rank();
        if center_gram.rows() != c || center_gram.cols() != c {
            return Err(Error::InvalidForm(format!(
                "center Gram matrix must be {c}x{c}, got {}x{}",
                center_gram.rows(),
                center_gram.cols()
            )));
        }
        if !center_gram.is_symmetric() {
            return Err(Error::InvalidForm("center Gram matrix is not symmetric".into()));
        }
        let n = g.real_dim();
        let mut gram = Matrix::zeros(n, n);
        for (q, ideal) in g.ideals().iter().enumerate() {
            let r = 2 * ideal.offset..2 * (ideal.offset + ideal.dim());
            for a in r.clone() {
                for b in r.clone() {
                    let x = crate::linalg::subspace::unit(n, a);
                    let y = crate::linalg::subspace::unit(n, b);
                    gram[(a, b)] = (&lambda[q] * &g.killing_ideal(q, &x, &y)).im;
                }
            }
        }
        let off = 2 * g.center_offset();
        for a in 0..c {
            for b in 0..c {
                gram[(off + a, off + b)] = center_gram[(a, b)].clone();
            }
        }
        let form = SymmetricForm::new(gram)?;
        let sig = form.signature();
        if sig != Signature::new(g.dim(), g.dim(), 0) {
            return Err(Error::InvalidForm(format!(
                "signature is ({}, {}, {}), expected ({}, {}, 0)",
                sig.positive,
                sig.negative,
                sig.zero,
                g.dim(),
                g.dim()
            )));
        }
        let f = ManinForm { lambda: lambda.to_vec(), center_gram: center_gram.clone(), form };
        if !f.is_invariant(g) {
            return Err(Error::InvalidForm("form is not invariant".into()));
        }
        Ok(f)
    }

    /// `adᵀ·G + G·ad = 0` for every real basis vector.
    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        (0..g.real_dim()).all(|k| {
            let ad = g.ad_basis(k);
            (&(&ad.transpose() * self.form.gram()) + &(self.form.gram() * ad)).is_zero()
        })
    }

    /// `Im K` on a semisimple algebra with every `λ_q = 1`.
    pub fn imaginary_killing(g: &LieAlgebra) -> Result<Self> {
        let lambda = vec![GaussianRational::one(); g.ideals().len()];
        let c = 2 * g.center_rank();
        let mut center = Matrix::zeros(c, c);
        for j in 0..g.center_rank() {
            center[(2 * j, 2 * j)] = Rational::from_integer(1.into());
            center[(2 * j + 1, 2 * j + 1)] = Rational::from_integer((-1).into());
        }
        Self::new(g, &lambda, &center)
    }

    pub fn lambda(&self) -> &[GaussianRational] {
        &self.lambda
    }

    pub fn center_gram(&self) -> &Matrix {
        &self.center_gram
    }

    pub fn form(&self) -> &SymmetricForm {
        &self.form
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.form.eval(x, y)
    }

    pub fn signature(&self) -> Signature {
        self.form.signature()
    }

    pub fn is_isotropic(&self, s: &RealSubspace) -> bool {
        self.form.is_isotropic(s)
    }

    /// No nontrivial nonnegative rational combination of the `λ_q` vanishes, and
    /// the center carries a split form.
    pub fn is_special(&self, g: &LieAlgebra) -> bool {
        !has_positive_dependency(&self.lambda) && self.center_split(g)
    }

    fn center_split(&self, g: &LieAlgebra) -> bool {
        let c = g.center_rank();
        SymmetricForm::new(self.center_gram.clone()).map(|f| f.signature() == Signature::new(c, c, 0)).unwrap_or(false)
    }
}

fn cross(a: &GaussianRational, b: &GaussianRational) -> Rational {
    &a.re * &b.im - &a.im * &b.re
}

fn dot(a: &GaussianRational, b: &GaussianRational) -> Rational {
    &a.re * &b.re + &a.im * &b.im
}

/// Is `0` a nontrivial nonnegative combination of the plane vectors `λ_q`?
///
/// In the plane it suffices to look at single vectors, opposite pairs and
/// triples positively spanning the plane.
pub fn has_positive_dependency(lambda: &[GaussianRational]) -> bool {
    if lambda.iter().any(GaussianRational::is_zero) {
        return true;
    }
    let n = lambda.len();
    for a in 0..n {
        for b in a + 1..n {
            if cross(&lambda[a], &lambda[b]).is_zero() && dot(&lambda[a], &lambda[b]).is_negative() {
                return true;
            }
            for c in b + 1..n {
                let s = [cross(&lambda[a], &lambda[b]), cross(&lambda[b], &lambda[c]), cross(&lambda[c], &lambda[a])];
                if s.iter().all(Signed::is_positive) || s.iter().all(Signed::is_negative) {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::blocks::gaussian;
    use crate::lie::SimpleType;

    #[test]
    fn sl2_signatures() {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap();
        for l in [gaussian(1, 0), gaussian(0, 1), gaussian(1, 1)] {
            let f = ManinForm::new(&g, &[l], &Matrix::zeros(0, 0)).unwrap();
            assert_eq!(f.signature(), Signature::new(3, 3, 0));
        }
        assert!(matches!(ManinForm::new(&g, &[gaussian(0, 0)], &Matrix::zeros(0, 0)), Err(Error::InvalidForm(_))));
    }

    #[test]
    fn center_forms() {
        let g = LieAlgebra::build(&[], 1).unwrap();
        let split = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let f = ManinForm::new(&g, &[], &split).unwrap();
        assert!(f.is_special(&g));
        assert!(ManinForm::new(&g, &[], &Matrix::identity(2)).is_err());
    }

    #[test]
    fn speciality() {
        let g1 = LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap();
        assert!(ManinForm::new(&g1, &[gaussian(1, 0)], &Matrix::zeros(0, 0)).unwrap().is_special(&g1));
        let g2 = LieAlgebra::build(&[SimpleType::a(1), SimpleType::a(1)], 0).unwrap();
        let f = ManinForm::new(&g2, &[gaussian(1, 0), gaussian(0, 1)], &Matrix::zeros(0, 0)).unwrap();
        assert!(f.is_special(&g2));
        let f = ManinForm::new(&g2, &[gaussian(1, 0), gaussian(-1, 0)], &Matrix::zeros(0, 0)).unwrap();
        assert!(!f.is_special(&g2));
        assert!(has_positive_dependency(&[gaussian(1, 0), gaussian(-1, 1), gaussian(-1, -1)]));
        assert!(!has_positive_dependency(&[gaussian(1, 0), gaussian(0, 1), gaussian(1, 1)]));
        assert!(!has_positive_dependency(&[gaussian(1, 0), gaussian(2, 0)]));
    }

    #[test]
    fn center_is_orthogonal_to_derived() {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 1).unwrap();
        let f = ManinForm::imaginary_killing(&g).unwrap();
        assert!(f.form().are_orthogonal(&g.derived_subspace(), &g.center_subspace()));
    }
}
