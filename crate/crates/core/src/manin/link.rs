//! Fundamental Cartan subalgebras, the six link conditions, and the lift.

use serde::Serialize;

use super::form::ManinForm;
use super::lagrangian::{parabolic_of, LagrangianDatum};
use super::triple::{descend, verify_manin_triple, Certificate, ManinTriple};
use crate::error::{Error, Result};
use crate::involution::AfInvolution;
use crate::lie::{subalg, LieAlgebra};
use crate::linalg::RealSubspace;
use crate::roots::borel::enumerate_borels;
use crate::roots::parabolic::frame_levi;
use crate::roots::{CartanData, Parabolic, Side, SimpleSet};

/// The Cartan `j = z(f̃) ∩ l_T` and the roots of the Levi `l_1'` of `p_1 ⊇ j`.
#[derive(Clone, Debug)]
pub struct FundamentalData {
    pub cartan: CartanData,
    /// Roots `α` of `j` with `g^α, g^{-α} ⊆ p_1`.
    pub levi_roots: Vec<usize>,
    pub levi: RealSubspace,
    pub is_fundamental: bool,
}

/// Tests whether `f ⊆ i` is a fundamental Cartan subalgebra of the subalgebra `i ⊆ l_T`.
///
/// Errors when `f ⊄ i` or the centralizer of `f` in `l_T` is not a Cartan subalgebra.
pub fn fundamental_data(
    g: &LieAlgebra,
    frame: &SimpleSet,
    f: &RealSubspace,
    i: &RealSubspace,
) -> Result<FundamentalData> {
    if !i.contains_subspace(f) {
        return Err(Error::Input("f̃ is not contained in i".into()));
    }
    let levi_t = frame_levi(g, frame);
    let j = subalg::centralizer(g, f).intersect(&levi_t);
    let cartan = CartanData::from_subspace(g, &j)
        .map_err(|e| Error::Verification(format!("centralizer of f̃ is not a Cartan subalgebra: {e}")))?;
    let (p1, _) = parabolic_of(g, frame, i)?;
    let levi_roots: Vec<usize> = (0..cartan.len())
        .filter(|&k| {
            p1.contains_subspace(&cartan.root(k).space) && p1.contains_subspace(&cartan.root(cartan.negative(k)).space)
        })
        .collect();
    let levi = j.sum(&cartan.span_roots(&levi_roots));
    let cartan_of_i = subalg::is_abelian(g, f) && subalg::nilspace(g, f, i) == *f;
    let no_real_roots = levi_roots.iter().all(|&k| !cartan.is_real_on(g, k, f));
    Ok(FundamentalData { cartan, levi_roots, levi, is_fundamental: cartan_of_i && no_real_roots })
}

pub fn is_fundamental_csa(g: &LieAlgebra, frame: &SimpleSet, f: &RealSubspace, i: &RealSubspace) -> Result<bool> {
    Ok(fundamental_data(g, frame, f, i)?.is_fundamental)
}

/// One side of a link: the parabolic, the involution of its `m`, and `f̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDatum {
    pub side: Side,
    pub parabolic: Parabolic,
    pub sigma: AfInvolution,
    pub f_tilde: RealSubspace,
}

impl LinkDatum {
    /// `h ⊕ (f̃ ∩ a) ⊕ n`.
    pub fn lagrangian(&self) -> RealSubspace {
        let ia = self.f_tilde.intersect(&self.parabolic.a);
        RealSubspace::sum_all(ia.ambient_dim(), [self.sigma.fixed_set(), &ia, &self.parabolic.n])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    /// Sub-clauses, prefixed by the condition number (`"1.fundamental"`, …).
    pub clauses: Certificate,
    pub conditions: [bool; 6],
    /// Borel subalgebra of `m` satisfying condition 3, if any.
    #[serde(skip)]
    pub borel_witness: Option<RealSubspace>,
}

impl LinkReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }

    /// Failing condition numbers, ascending.
    pub fn failed(&self) -> Vec<u8> {
        (0..6).filter(|&k| !self.conditions[k]).map(|k| k as u8 + 1).collect()
    }
}

/// Evaluates conditions 1) to 6) for `link` against the predecessor and the other side's parabolic.
///
/// Errors only when `σ` does not normalize the Cartan `j`, since then the
/// underline map is undefined.
pub fn check_link_conditions(
    g: &LieAlgebra,
    form: &ManinForm,
    predecessor: &ManinTriple,
    link: &LinkDatum,
    other: &Parabolic,
) -> Result<LinkReport> {
    let frame = &predecessor.frame;
    let i1 = match link.side {
        Side::Upper => &predecessor.i,
        Side::Lower => &predecessor.i_prime,
    };
    let p = &link.parabolic;
    let sigma = &link.sigma;
    let f = &link.f_tilde;
    let h = sigma.fixed_set();
    let mut c = Certificate::default();

    // 1)
    let fund = fundamental_data(g, frame, f, i1);
    let fh = f.intersect(h);
    let fa = f.intersect(&p.a);
    c.push("1.f_in_i1", i1.contains_subspace(f));
    c.push("1.fundamental", fund.as_ref().is_ok_and(|d| d.is_fundamental));
    c.push("1.f_splits", RealSubspace::is_direct_sum_of(f, &[&fh, &fa]));
    c.push("1.i_a_isotropic", form.is_isotropic(&fa));
    c.push("1.i_a_dimension", 2 * fa.dim() == p.a.dim());
    c.push("1.h_isotropic", form.is_isotropic(h));
    let ll = p.l.intersect(&other.l);
    c.push("1.j_in_l_cap_l_prime", fund.as_ref().is_ok_and(|d| ll.contains_subspace(d.cartan.cartan())));
    let c1 = c.clauses.iter().all(|(_, ok)| *ok);

    // 2)
    let c2 = h.intersect(&other.n).is_zero();
    c.push("2.h_cap_n_prime_zero", c2);

    let fund = fund.ok();
    let m = &p.m;
    let (c3, c4, c5, c6, witness) = match &fund {
        None => {
            c.push("3.cartan_available", false);
            c.push("4.cartan_available", false);
            c.push("5.cartan_available", false);
            c.push("6.cartan_available", false);
            (false, false, false, false, None)
        }
        Some(d) => {
            let cartan = &d.cartan;
            let jm = cartan.cartan().intersect(m);
            let roots_m = cartan.roots_in(m);

            // 3)
            let target = m.intersect(&other.p);
            let mut witness = None;
            let mut remark_agrees = true;
            for b in enumerate_borels(cartan, &roots_m, &jm) {
                if !target.contains_subspace(&b.subspace) {
                    continue;
                }
                let sb = sigma.map().image(&b.subspace);
                let covers = sb.sum(&b.subspace) == *m;
                if covers != (sb.intersect(&b.subspace) == jm) {
                    remark_agrees = false;
                }
                if covers && witness.is_none() {
                    witness = Some(b.subspace.clone());
                }
            }
            let c3 = witness.is_some();
            c.push("3.borel_found", c3);
            c.push("3.remark_equivalence", remark_agrees);

            // 4)
            let m1 = subalg::derived(g, &d.levi);
            let ml = m.intersect(&other.l);
            let mls = ml.intersect(&sigma.map().image(&ml));
            let c4 = subalg::derived(g, &mls) == m1;
            c.push("4.m1_is_derived_of_m_l_prime_sigma", c4);

            // 5)
            let under = sigma.underline(cartan)?;
            let mn = m.intersect(&other.n);
            let mut bars = Vec::new();
            for (&a, &abar) in &under {
                if mn.contains_subspace(&cartan.root(a).space) && ml.contains_subspace(&cartan.root(abar).space) {
                    bars.push(abar);
                }
            }
            let n1 = subalg::nilpotent_radical(g, i1)?;
            let c5 = cartan.span_roots(&bars) == n1;
            c.push("5.n1_is_underline_span", c5);

            // 6)
            let stable = m.contains_subspace(&m1) && m1.contains_subspace(&sigma.map().image(&m1));
            c.push("6.m1_sigma_stable", stable);
            let fixed_match = h.intersect(&m1) == i1.intersect(&m1);
            c.push("6.fixed_set_is_h1", fixed_match);
            (c3 && remark_agrees, c4, c5, stable && fixed_match, witness)
        }
    };
    Ok(LinkReport { clauses: c, conditions: [c1, c2, c3, c4, c5, c6], borel_witness: witness })
}

/// Builds `i = h ⊕ (f̃ ∩ a) ⊕ n` and `i'` from the two links and verifies the result.
pub fn lift(
    g: &LieAlgebra,
    form: &ManinForm,
    predecessor: &ManinTriple,
    upper: &LinkDatum,
    lower: &LinkDatum,
) -> Result<ManinTriple> {
    if upper.side != Side::Upper || lower.side != Side::Lower {
        return Err(Error::Input("lift needs an upper and a lower link".into()));
    }
    let (p, pp) = (&upper.parabolic, &lower.parabolic);
    if p.frame != pp.frame {
        return Err(Error::Input("links live in different frames".into()));
    }
    let expected: SimpleSet = p.subset.intersection(&pp.subset).copied().collect();
    if predecessor.frame != expected {
        return Err(Error::Input("predecessor does not live in l ∩ l'".into()));
    }
    for (link, other) in [(upper, pp), (lower, p)] {
        let report = check_link_conditions(g, form, predecessor, link, other)?;
        if let Some(&k) = report.failed().first() {
            let detail = report
                .clauses
                .clauses
                .iter()
                .filter(|(n, ok)| !ok && n.starts_with(&format!("{k}.")))
                .map(|(n, _)| n.clone())
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::LinkCondition { condition: k, detail: format!("{} side: {detail}", link.side) });
        }
    }
    let t = ManinTriple::new(p.frame.clone(), upper.lagrangian(), lower.lagrangian());
    let cert = verify_manin_triple(g, form, &t);
    if !cert.passed() {
        return Err(Error::Verification(format!("lift is not a Manin triple: {}", cert.failures().join(", "))));
    }
    let d = descend(g, form, &t)?;
    if d.data.upper.parabolic.p != p.p || d.data.lower.parabolic.p != pp.p {
        return Err(Error::Verification("lift is not standard under (p, p')".into()));
    }
    if d.predecessor != *predecessor {
        return Err(Error::Verification("lift does not descend to the given predecessor".into()));
    }
    Ok(t)
}

/// Link of one side of a standard triple, with `f̃ = i_1 ∩ j_0`.
pub fn extract_link(
    g: &LieAlgebra,
    datum: &LagrangianDatum,
    predecessor: &ManinTriple,
    side: Side,
) -> Result<LinkDatum> {
    let i1 = match side {
        Side::Upper => &predecessor.i,
        Side::Lower => &predecessor.i_prime,
    };
    let f_tilde = i1.intersect(&g.standard_cartan());
    if !is_fundamental_csa(g, &predecessor.frame, &f_tilde, i1)? {
        return Err(Error::Verification(format!(
            "{side} side: i_1 ∩ j_0 is not a fundamental Cartan subalgebra of i_1"
        )));
    }
    Ok(LinkDatum { side, parabolic: datum.parabolic.clone(), sigma: datum.sigma.clone(), f_tilde })
}
