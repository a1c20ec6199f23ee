//! R-linear maps of a subspace into itself, stored as ambient real matrices.

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{Matrix, Rational, RealSubspace};

/// An R-linear endomorphism of `domain`.
///
/// The matrix acts on ambient coordinates and reads only the pivot coordinates
/// of `domain`, so it is zero on a complement of `domain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealLinearMap {
    domain: RealSubspace,
    matrix: Matrix,
}

impl RealLinearMap {
    /// The map sending the `j`-th canonical basis vector of `domain` to `images[j]`.
    pub fn from_images(domain: &RealSubspace, images: &[Element]) -> Result<Self> {
        let n = domain.ambient_dim();
        if images.len() != domain.dim() {
            return Err(Error::Involution(format!(
                "{} images given for a domain of dimension {}",
                images.len(),
                domain.dim()
            )));
        }
        let mut matrix = Matrix::zeros(n, n);
        for (img, &p) in images.iter().zip(domain.pivots()) {
            if !domain.contains(img) {
                return Err(Error::Involution("map does not preserve its domain".into()));
            }
            for (r, v) in img.iter().enumerate() {
                matrix[(r, p)] = v.clone();
            }
        }
        Ok(RealLinearMap { domain: domain.clone(), matrix })
    }

    pub fn identity(domain: &RealSubspace) -> Self {
        Self::from_images(domain, &domain.basis()).expect("identity preserves its domain")
    }

    pub fn domain(&self) -> &RealSubspace {
        &self.domain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Element {
        self.matrix.apply(x)
    }

    pub fn image(&self, s: &RealSubspace) -> RealSubspace {
        s.image(&self.matrix)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RealLinearMap) -> Result<RealLinearMap> {
        if self.domain != other.domain {
            return Err(Error::Involution("composing maps with different domains".into()));
        }
        let images: Vec<Element> = self.domain.basis().iter().map(|b| self.apply(&other.apply(b))).collect();
        Self::from_images(&self.domain, &images)
    }

    pub fn is_involution(&self) -> bool {
        self.domain.basis().iter().all(|b| self.apply(&self.apply(b)) == *b)
    }

    /// `[σx, σy] = σ[x, y]` on all basis pairs of the domain.
    pub fn is_automorphism(&self, g: &LieAlgebra) -> bool {
        let basis = self.domain.basis();
        let imgs: Vec<Element> = basis.iter().map(|b| self.apply(b)).collect();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let lhs = g.bracket(&imgs[a], &imgs[b]);
                let br = g.bracket(&basis[a], &basis[b]);
                if !self.domain.contains(&br) || lhs != self.apply(&br) {
                    return false;
                }
            }
        }
        true
    }

    /// `σ(J x) = J σ(x)` on `s`.
    pub fn is_linear_on(&self, g: &LieAlgebra, s: &RealSubspace) -> bool {
        s.basis().iter().all(|b| self.apply(&g.mul_i(b)) == g.mul_i(&self.apply(b)))
    }

    /// `σ(J x) = −J σ(x)` on `s`.
    pub fn is_antilinear_on(&self, g: &LieAlgebra, s: &RealSubspace) -> bool {
        s.basis().iter().all(|b| {
            let lhs = self.apply(&g.mul_i(b));
            let rhs = g.mul_i(&self.apply(b));
            lhs.iter().zip(&rhs).all(|(x, y)| *x == -y)
        })
    }

    /// `{x ∈ domain : σx = εx}`.
    pub fn eigenspace(&self, sign: i64) -> RealSubspace {
        let n = self.domain.ambient_dim();
        let shift = Matrix::identity(n).scale(&Rational::from_integer(sign.into()));
        self.domain.kernel_within(&(&self.matrix - &shift))
    }

    pub fn fixed_set(&self) -> RealSubspace {
        self.eigenspace(1)
    }

    pub fn antifixed_set(&self) -> RealSubspace {
        self.eigenspace(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SimpleType;

    #[test]
    fn identity_and_negation() {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 1).unwrap();
        let m = g.derived_subspace();
        let id = RealLinearMap::identity(&m);
        assert!(id.is_involution());
        assert!(id.is_automorphism(&g));
        assert!(id.is_linear_on(&g, &m));
        assert_eq!(id.fixed_set(), m);
        assert!(id.antifixed_set().is_zero());
        assert!(id.apply(&g.basis_vector(3)).iter().all(|x| *x == Rational::from_integer(0.into())));
        let neg: Vec<Element> = m
            .basis()
            .iter()
            .map(|b| crate::linalg::matrix::scale_vec(b, &Rational::from_integer((-1).into())))
            .collect();
        let neg = RealLinearMap::from_images(&m, &neg).unwrap();
        assert!(neg.is_involution());
        assert!(!neg.is_automorphism(&g));
        assert_eq!(neg.compose(&neg).unwrap(), id);
    }

    #[test]
    fn images_must_stay_in_domain() {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 1).unwrap();
        let m = g.derived_subspace();
        let mut imgs = m.basis();
        imgs[0] = g.basis_vector(3);
        assert!(RealLinearMap::from_images(&m, &imgs).is_err());
    }
}
