//! Block constructors: real-form conjugations and C-linear or antilinear flips.

use serde::{Deserialize, Serialize};

use super::component::Component;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{ComplexMatrix, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealFormKind {
    /// `X ↦ −X̄ᵀ`, fixed set `su(n)`.
    Compact,
    /// `X ↦ X̄`, fixed set `sl(n, R)`.
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Linearity {
    Linear,
    Antilinear,
}

/// An isomorphism between two components of equal size, normalizing `j_0`:
/// `τ = Ad(w) ∘ δ^diagram ∘ Ad(t)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tau {
    /// Word in the local simple reflections; each letter `s_i` is represented by
    /// the signed permutation matrix `[[0, 1], [−1, 0]]` in rows `i, i+1`.
    pub weyl: Vec<usize>,
    /// Apply the diagram automorphism `X ↦ −J Xᵀ J⁻¹`.
    pub diagram: bool,
    /// Torus factor as one nonzero scalar per local simple root (empty means 1).
    pub torus: Vec<GaussianRational>,
}

impl Tau {
    pub fn identity() -> Self {
        Tau::default()
    }

    pub fn torus(scalars: Vec<GaussianRational>) -> Self {
        Tau { torus: scalars, ..Tau::default() }
    }

    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = x.size();
        let d = torus_matrix(n, &self.torus)?;
        let mut y = conjugate(&d, x);
        if self.diagram {
            y = diagram(&y);
        }
        Ok(conjugate(&weyl_matrix(n, &self.weyl)?, &y))
    }

    pub fn apply_inverse(&self, y: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = y.size();
        let w = weyl_matrix(n, &self.weyl)?;
        let mut x = conjugate(&w.inverse().expect("signed permutation"), y);
        if self.diagram {
            x = diagram(&x);
        }
        let d = torus_matrix(n, &self.torus)?;
        Ok(conjugate(&d.inverse().expect("nonzero torus"), &x))
    }
}

/// How σ acts on one component or one pair of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockSpec {
    /// `σ = conj_kind ∘ Ad(t)` on a single component.
    RealForm { component: usize, kind: RealFormKind, torus: Vec<GaussianRational> },
    /// `σ(X' + X'') = τ⁻¹X'' + τX'` (linear) or the same with `τ̄ = conj ∘ τ`.
    Flip { first: usize, second: usize, linearity: Linearity, tau: Tau },
}

impl BlockSpec {
    pub fn compact(component: usize) -> Self {
        BlockSpec::RealForm { component, kind: RealFormKind::Compact, torus: Vec::new() }
    }

    pub fn split(component: usize) -> Self {
        BlockSpec::RealForm { component, kind: RealFormKind::Split, torus: Vec::new() }
    }

    pub fn flip(first: usize, second: usize, linearity: Linearity, tau: Tau) -> Self {
        BlockSpec::Flip { first, second, linearity, tau }
    }

    pub fn components(&self) -> Vec<usize> {
        match self {
            BlockSpec::RealForm { component, .. } => vec![*component],
            BlockSpec::Flip { first, second, .. } => vec![*first, *second],
        }
    }

    /// Image of `x`, which must lie in component `which` of this block.
    pub(crate) fn image(&self, g: &LieAlgebra, comps: &[Component], which: usize, x: &[Rational]) -> Result<Element> {
        let c = comps[which];
        let block = c.extract(g, x);
        match self {
            BlockSpec::RealForm { kind, torus, .. } => {
                let y = conjugate(&torus_matrix(c.size, torus)?, &block);
                let z = match kind {
                    RealFormKind::Compact => -&y.conj().transpose(),
                    RealFormKind::Split => y.conj(),
                };
                Ok(c.embed(g, &z))
            }
            BlockSpec::Flip { first, second, linearity, tau } => {
                let (a, b) = (comps[*first], comps[*second]);
                if a.size != b.size {
                    return Err(Error::Involution(format!(
                        "flip between components of sizes {} and {}",
                        a.size, b.size
                    )));
                }
                if which == *first {
                    let mut y = tau.apply(&block)?;
                    if *linearity == Linearity::Antilinear {
                        y = y.conj();
                    }
                    Ok(b.embed(g, &y))
                } else {
                    let src = if *linearity == Linearity::Antilinear { block.conj() } else { block };
                    Ok(a.embed(g, &tau.apply_inverse(&src)?))
                }
            }
        }
    }
}

/// `diag(d_0, …)` with `d_0 = 1`, `d_{i+1} = d_i / s_i`, so that `Ad(d) E_{i,i+1} = s_i E_{i,i+1}`.
pub fn torus_matrix(n: usize, scalars: &[GaussianRational]) -> Result<ComplexMatrix> {
    if scalars.is_empty() {
        return Ok(ComplexMatrix::identity(n));
    }
    if scalars.len() + 1 != n {
        return Err(Error::Involution(format!("torus needs {} scalars, got {}", n - 1, scalars.len())));
    }
    let mut d = vec![GaussianRational::one()];
    for s in scalars {
        let inv = s.inv().ok_or_else(|| Error::Involution("torus scalar is zero".into()))?;
        let next = d.last().expect("nonempty") * &inv;
        d.push(next);
    }
    Ok(ComplexMatrix::diagonal(&d))
}

pub fn weyl_matrix(n: usize, word: &[usize]) -> Result<ComplexMatrix> {
    let mut w = ComplexMatrix::identity(n);
    for &i in word {
        if i + 1 >= n {
            return Err(Error::Involution(format!("simple reflection s_{i} out of range")));
        }
        let mut s = ComplexMatrix::identity(n);
        s[(i, i)] = GaussianRational::zero();
        s[(i + 1, i + 1)] = GaussianRational::zero();
        s[(i, i + 1)] = GaussianRational::one();
        s[(i + 1, i)] = -&GaussianRational::one();
        w = &w * &s;
    }
    Ok(w)
}

/// `a X a⁻¹`.
pub fn conjugate(a: &ComplexMatrix, x: &ComplexMatrix) -> ComplexMatrix {
    let inv = a.inverse().expect("invertible conjugator");
    &(a * x) * &inv
}

/// `X ↦ −J Xᵀ J⁻¹` with `J` antidiagonal of alternating signs; an involution preserving `j_0`.
pub fn diagram(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.size();
    let mut j = ComplexMatrix::zeros(n);
    for i in 0..n {
        j[(i, n - 1 - i)] = if i % 2 == 0 { GaussianRational::one() } else { -&GaussianRational::one() };
    }
    -&conjugate(&j, &x.transpose())
}

pub fn gaussian(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
}
