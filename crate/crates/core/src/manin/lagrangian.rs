//! Lagrangian subalgebras `i = h ⊕ i_a ⊕ n` under a standard parabolic.

use super::form::ManinForm;
use crate::error::{Error, Result};
use crate::involution::{components, AfInvolution};
use crate::lie::{subalg, LieAlgebra};
use crate::linalg::RealSubspace;
use crate::roots::parabolic::frame_levi;
use crate::roots::{Parabolic, Side, SimpleSet};

/// `(p, σ, i_a)` with `σ` an af-involution of `m` and `i_a ⊆ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianDatum {
    pub parabolic: Parabolic,
    pub sigma: AfInvolution,
    pub i_a: RealSubspace,
}

impl LagrangianDatum {
    pub fn h(&self) -> &RealSubspace {
        self.sigma.fixed_set()
    }

    pub fn n(&self) -> &RealSubspace {
        &self.parabolic.n
    }

    /// `h ⊕ i_a ⊕ n`, unchecked.
    pub fn subspace(&self) -> RealSubspace {
        RealSubspace::sum_all(self.i_a.ambient_dim(), [self.h(), &self.i_a, self.n()])
    }
}

/// `i = h ⊕ i_a ⊕ n`, verified to be a Lagrangian subalgebra of the frame algebra.
pub fn build_lagrangian(g: &LieAlgebra, form: &ManinForm, datum: &LagrangianDatum) -> Result<RealSubspace> {
    let p = &datum.parabolic;
    if *datum.sigma.domain() != p.m {
        return Err(Error::Lagrangian("σ is not defined on m".into()));
    }
    if !p.a.contains_subspace(&datum.i_a) {
        return Err(Error::Lagrangian("i_a is not contained in a".into()));
    }
    if 2 * datum.i_a.dim() != p.a.dim() {
        return Err(Error::Lagrangian(format!(
            "i_a has real dimension {}, expected dim_C a = {}",
            datum.i_a.dim(),
            p.a.dim() / 2
        )));
    }
    if !form.is_isotropic(&datum.i_a) {
        return Err(Error::Lagrangian("i_a is not isotropic".into()));
    }
    if !form.is_isotropic(datum.h()) {
        return Err(Error::Lagrangian("h is not isotropic".into()));
    }
    let i = datum.subspace();
    if !RealSubspace::is_direct_sum_of(&i, &[datum.h(), &datum.i_a, datum.n()]) {
        return Err(Error::Lagrangian("h, i_a and n are not in direct sum".into()));
    }
    check_lagrangian(g, form, &p.frame, &i)?;
    Ok(i)
}

/// Subalgebra of `l_T`, isotropic, of real dimension `dim_C l_T`.
pub fn check_lagrangian(g: &LieAlgebra, form: &ManinForm, frame: &SimpleSet, i: &RealSubspace) -> Result<()> {
    let levi = frame_levi(g, frame);
    if !levi.contains_subspace(i) {
        return Err(Error::Lagrangian("subspace is not contained in the frame algebra".into()));
    }
    if 2 * i.dim() != levi.dim() {
        return Err(Error::Lagrangian(format!(
            "real dimension {} differs from the complex dimension {} of the algebra",
            i.dim(),
            levi.dim() / 2
        )));
    }
    if !subalg::is_subalgebra(g, i) {
        return Err(Error::Lagrangian("subspace is not a subalgebra".into()));
    }
    if !form.is_isotropic(i) {
        return Err(Error::Lagrangian("subspace is not isotropic".into()));
    }
    Ok(())
}

/// The standard parabolic of frame `frame` equal to `p`, trying side `prefer` first.
pub fn identify_parabolic(g: &LieAlgebra, frame: &SimpleSet, p: &RealSubspace, prefer: Side) -> Result<Parabolic> {
    let mut subset = SimpleSet::new();
    for (q, ideal) in g.ideals().iter().enumerate() {
        for a in 0..ideal.kind.rank {
            let idx = ideal.simple_root_offset + a;
            if frame.contains(&idx)
                && p.contains_subspace(&g.span_of_basis(&[g.unit_index(q, a, a + 1), g.unit_index(q, a + 1, a)]))
            {
                subset.insert(idx);
            }
        }
    }
    for side in [prefer, prefer.opposite()] {
        let cand = Parabolic::standard(g, frame, side, &subset)?;
        if cand.p == *p {
            return Ok(cand);
        }
    }
    Err(Error::NotStandard("parabolic contains neither b_0 nor b_0'".into()))
}

/// The parabolic `p = N(nilrad i) ∩ l_T` of a subalgebra of the frame algebra.
pub fn parabolic_of(g: &LieAlgebra, frame: &SimpleSet, i: &RealSubspace) -> Result<(RealSubspace, RealSubspace)> {
    let levi = frame_levi(g, frame);
    let n = subalg::nilpotent_radical(g, i)?;
    let p = subalg::normalizer(g, &n).intersect(&levi);
    Ok((p, n))
}

/// Recovers `(p, σ, i_a)` from a Lagrangian subalgebra in standard position.
pub fn decompose_lagrangian(
    g: &LieAlgebra,
    form: &ManinForm,
    frame: &SimpleSet,
    i: &RealSubspace,
    prefer: Side,
) -> Result<LagrangianDatum> {
    check_lagrangian(g, form, frame, i)?;
    let (p, n) = parabolic_of(g, frame, i)?;
    let parabolic = identify_parabolic(g, frame, &p, prefer)?;
    if parabolic.n != n {
        return Err(Error::Verification("nilpotent radical of i differs from that of its parabolic".into()));
    }
    let h = i.intersect(&parabolic.m);
    let i_a = i.intersect(&parabolic.a);
    if !RealSubspace::is_direct_sum_of(i, &[&h, &i_a, &n]) {
        return Err(Error::Lagrangian("i does not split as (i∩m) ⊕ (i∩a) ⊕ n".into()));
    }
    let comps = components(g, &parabolic.subset);
    let sigma = AfInvolution::from_fixed_set(g, &comps, &h)?;
    let datum = LagrangianDatum { parabolic, sigma, i_a };
    let rebuilt = build_lagrangian(g, form, &datum)?;
    if rebuilt != *i {
        return Err(Error::Verification("rebuilt Lagrangian differs from the input".into()));
    }
    Ok(datum)
}
