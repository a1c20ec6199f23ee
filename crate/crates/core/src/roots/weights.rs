//! Weight decompositions and the weight-space projections `p_V`, `p^V`.

use num_traits::{One, Zero};

use super::cartan::{cmp_values, CartanData};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{GaussianRational, Matrix, Rational, RealSubspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    /// The weight on the canonical real basis of `e`.
    pub weight: Vec<GaussianRational>,
    pub space: RealSubspace,
}

/// `V = ⊕ V^λ` for the action of `e ⊆ j` on an `ad(e)`-invariant `V`.
///
/// The zero weight comes first; the others follow in lexicographic order.
pub fn weight_decomposition(
    g: &LieAlgebra,
    v: &RealSubspace,
    e: &RealSubspace,
    cartan: &CartanData,
) -> Result<Vec<WeightSpace>> {
    if !cartan.cartan().contains_subspace(e) {
        return Err(Error::Input("e is not contained in the Cartan subalgebra".into()));
    }
    let eb = e.basis();
    for b in &eb {
        for x in v.basis() {
            if !v.contains(&g.bracket(b, &x)) {
                return Err(Error::Input("V is not ad(e)-invariant".into()));
            }
        }
    }
    let zero = vec![GaussianRational::zero(); eb.len()];
    let mut groups: Vec<(Vec<GaussianRational>, Vec<usize>)> = vec![(zero.clone(), Vec::new())];
    for k in 0..cartan.len() {
        let w: Vec<GaussianRational> = eb.iter().map(|b| cartan.eval(g, k, b)).collect();
        match groups.iter_mut().find(|(gw, _)| *gw == w) {
            Some((_, ks)) => ks.push(k),
            None => groups.push((w, vec![k])),
        }
    }
    groups[1..].sort_by(|a, b| cmp_values(&a.0, &b.0));
    let mut out = Vec::new();
    for (w, ks) in groups {
        let mut total = cartan.span_roots(&ks);
        if w == zero {
            total = total.sum(cartan.cartan());
        }
        let space = v.intersect(&total);
        if !space.is_zero() {
            out.push(WeightSpace { weight: w, space });
        }
    }
    let parts: Vec<&RealSubspace> = out.iter().map(|w| &w.space).collect();
    if !RealSubspace::is_direct_sum_of(v, &parts) {
        return Err(Error::Verification("weight spaces do not exhaust V".into()));
    }
    Ok(out)
}

/// Complex basis indices spanning `v`, if `v` is a sum of `j_0`-weight spaces.
fn weight_support(g: &LieAlgebra, v: &RealSubspace) -> Result<Vec<usize>> {
    let support: Vec<usize> = (0..g.dim()).filter(|&k| v.contains_subspace(&g.span_of_basis(&[k]))).collect();
    if g.span_of_basis(&support) != *v {
        return Err(Error::Input("subspace is not a sum of j_0-weight spaces".into()));
    }
    let cartan_ks: Vec<usize> = (0..g.dim()).filter(|&k| g.unit_of(k).is_none()).collect();
    let inside = cartan_ks.iter().filter(|k| support.contains(k)).count();
    if inside != 0 && inside != cartan_ks.len() {
        return Err(Error::Input("subspace meets j_0 in a proper nonzero subspace".into()));
    }
    Ok(support)
}

/// `p_V`: projection onto `V` along its `j_0`-invariant complement.
pub fn proj_onto(g: &LieAlgebra, v: &RealSubspace) -> Result<Matrix> {
    let support = weight_support(g, v)?;
    let mut d = vec![Rational::zero(); g.real_dim()];
    for k in support {
        d[2 * k] = Rational::one();
        d[2 * k + 1] = Rational::one();
    }
    Ok(Matrix::diagonal(&d))
}

/// `p^V = id − p_V`.
pub fn proj_along(g: &LieAlgebra, v: &RealSubspace) -> Result<Matrix> {
    Ok(&Matrix::identity(g.real_dim()) - &proj_onto(g, v)?)
}
