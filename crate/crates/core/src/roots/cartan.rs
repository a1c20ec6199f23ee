//! Cartan subalgebras and their root decompositions.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::subalg;
use crate::lie::{Element, LieAlgebra};
use crate::linalg::poly::{cmp_gaussian, gaussian_roots};
use crate::linalg::{ComplexMatrix, GaussianRational, Rational, RealSubspace};

/// A root `α` of a Cartan subalgebra `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// `α(b)` for each vector `b` of the canonical real basis of `j`.
    pub values: Vec<GaussianRational>,
    /// A nonzero root vector.
    pub vector: Element,
    /// The root space `g^α` (a complex line).
    pub space: RealSubspace,
}

/// A Cartan subalgebra `j` of `g` with all roots of `j` in `g`.
#[derive(Clone, Debug)]
pub struct CartanData {
    cartan: RealSubspace,
    basis: Vec<Element>,
    roots: Vec<Root>,
}

impl CartanData {
    /// The standard Cartan `j_0` with roots read off the matrix units.
    pub fn standard(g: &LieAlgebra) -> Self {
        let cartan = g.standard_cartan();
        let basis = cartan.basis();
        let mut roots = Vec::new();
        for k in 0..g.dim() {
            if g.unit_of(k).is_some() {
                let vector = g.basis_vector(k);
                let values = basis.iter().map(|b| eigenvalue(g, b, &vector)).collect();
                roots.push(Root { values, space: g.span_of_basis(&[k]), vector });
            }
        }
        CartanData { cartan, basis, roots }
    }

    /// Verifies that `j` is a Cartan subalgebra and computes its roots.
    ///
    /// Requires `j` complex, abelian, self-centralizing, of complex dimension
    /// `rank g`, and `ad` of a generic element diagonalizable with eigenvalues in `Q(i)`.
    pub fn from_subspace(g: &LieAlgebra, j: &RealSubspace) -> Result<Self> {
        if j.dim() != 2 * g.rank() {
            return Err(Error::Verification(format!(
                "Cartan candidate has real dimension {}, expected {}",
                j.dim(),
                2 * g.rank()
            )));
        }
        if !subalg::is_complex(g, j) {
            return Err(Error::Verification("Cartan candidate is not a complex subspace".into()));
        }
        if !subalg::is_abelian(g, j) {
            return Err(Error::Verification("Cartan candidate is not abelian".into()));
        }
        if subalg::centralizer(g, j) != *j {
            return Err(Error::Verification("Cartan candidate is not self-centralizing".into()));
        }
        if *j == g.standard_cartan() {
            return Ok(Self::standard(g));
        }
        Self::by_eigenvalues(g, j)
    }

    /// Root decomposition from the spectrum of `ad h` for a regular `h ∈ j`.
    pub(crate) fn by_eigenvalues(g: &LieAlgebra, j: &RealSubspace) -> Result<Self> {
        let basis = j.basis();
        let n = g.dim();
        for attempt in 0..6i64 {
            let mut h = g.zero();
            for (k, b) in basis.iter().enumerate() {
                let c = Rational::from_integer(
                    (1 + (k as i64 + 1) * (attempt + 2) + (k as i64 % 3) * attempt * attempt).into(),
                );
                crate::linalg::matrix::axpy(&mut h, &c, b);
            }
            let ad = g.ad(&h);
            let spectrum = gaussian_roots(&ComplexMatrix::from_realified(&ad).char_poly())?;
            let mut roots = Vec::new();
            let mut total = 0;
            let mut regular = true;
            for mu in &spectrum {
                let shift = ComplexMatrix::diagonal(&vec![mu.clone(); n]).realify();
                let space = RealSubspace::kernel_of(&(&ad - &shift));
                total += space.dim();
                if mu.is_zero() {
                    if space != *j {
                        regular = false;
                    }
                    continue;
                }
                if space.dim() != 2 {
                    regular = false;
                    continue;
                }
                let vector = space.basis()[0].clone();
                let values = basis.iter().map(|b| eigenvalue(g, b, &vector)).collect();
                roots.push(Root { values, vector, space });
            }
            if total != 2 * n {
                return Err(Error::Verification("Cartan candidate is not ad-diagonalizable".into()));
            }
            if !regular {
                continue;
            }
            roots.sort_by(|a, b| cmp_values(&a.values, &b.values));
            return Ok(CartanData { cartan: j.clone(), basis, roots });
        }
        Err(Error::Verification("no regular element found in Cartan candidate".into()))
    }

    pub fn cartan(&self) -> &RealSubspace {
        &self.cartan
    }

    /// Canonical real basis of `j` on which root values are recorded.
    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `α_k(x)` for `x ∈ j`.
    pub fn eval(&self, g: &LieAlgebra, k: usize, x: &[Rational]) -> GaussianRational {
        eigenvalue(g, x, &self.roots[k].vector)
    }

    pub fn find(&self, values: &[GaussianRational]) -> Option<usize> {
        self.roots.iter().position(|r| r.values == values)
    }

    pub fn negative(&self, k: usize) -> usize {
        let neg: Vec<GaussianRational> = self.roots[k].values.iter().map(|v| -v).collect();
        self.find(&neg).expect("root system closed under negation")
    }

    /// Sum of two roots, if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<GaussianRational> =
            self.roots[a].values.iter().zip(&self.roots[b].values).map(|(x, y)| x + y).collect();
        self.find(&s)
    }

    /// Index of the root whose space contains the nonzero vector `v`.
    pub fn root_of_vector(&self, v: &[Rational]) -> Option<usize> {
        self.roots.iter().position(|r| r.space.contains(v))
    }

    /// Index of the root whose space equals `s`.
    pub fn root_of_space(&self, s: &RealSubspace) -> Option<usize> {
        self.roots.iter().position(|r| r.space == *s)
    }

    /// Roots whose root space lies in `s`.
    pub fn roots_in(&self, s: &RealSubspace) -> Vec<usize> {
        (0..self.roots.len()).filter(|&k| s.contains_subspace(&self.roots[k].space)).collect()
    }

    /// Realified sum of the given root spaces.
    pub fn span_roots(&self, ks: &[usize]) -> RealSubspace {
        let amb = self.cartan.ambient_dim();
        RealSubspace::sum_all(amb, ks.iter().map(|&k| &self.roots[k].space))
    }

    /// Coroot `H_α ∈ [g^α, g^{-α}]` normalized by `α(H_α) = 2`.
    pub fn coroot(&self, g: &LieAlgebra, k: usize) -> Element {
        let neg = self.negative(k);
        let h = g.bracket(&self.roots[k].vector, &self.roots[neg].vector);
        let a = self.eval(g, k, &h);
        let scale = &GaussianRational::from_int(2) / &a;
        g.scale_complex(&h, &scale)
    }

    /// `β(H_α)`.
    pub fn pairing(&self, g: &LieAlgebra, beta: usize, alpha: usize) -> GaussianRational {
        self.eval(g, beta, &self.coroot(g, alpha))
    }

    /// True iff `α_k` is real-valued on all of `f ⊆ j`.
    pub fn is_real_on(&self, g: &LieAlgebra, k: usize, f: &RealSubspace) -> bool {
        f.basis().iter().all(|x| self.eval(g, k, x).is_real())
    }

    /// Roots positive for the lexicographic order on `(Re α(b_1), Im α(b_1), …)`.
    pub fn lex_positive(&self, among: &[usize]) -> Vec<usize> {
        among.iter().copied().filter(|&k| is_lex_positive(&self.roots[k].values)).collect()
    }
}

/// `λ` with `[x, v] = λ v`; `v` must be a simultaneous eigenvector.
fn eigenvalue(g: &LieAlgebra, x: &[Rational], v: &[Rational]) -> GaussianRational {
    let w = g.to_complex(&g.bracket(x, v));
    let vc = g.to_complex(v);
    let k = vc.iter().position(|z| !z.is_zero()).expect("zero root vector");
    &w[k] / &vc[k]
}

fn is_lex_positive(values: &[GaussianRational]) -> bool {
    for v in values {
        for part in [&v.re, &v.im] {
            if !part.is_zero() {
                return part.is_positive();
            }
        }
    }
    false
}

pub fn cmp_values(a: &[GaussianRational], b: &[GaussianRational]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = cmp_gaussian(x, y);
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}
