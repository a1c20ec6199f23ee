//! Manin triples, standard position, and descent to the predecessor triple.

use serde::Serialize;

use super::form::ManinForm;
use super::lagrangian::{decompose_lagrangian, LagrangianDatum};
use crate::error::{Error, Result};
use crate::lie::{subalg, LieAlgebra};
use crate::linalg::RealSubspace;
use crate::roots::parabolic::{frame_levi, intersection_parts};
use crate::roots::weights::proj_along;
use crate::roots::{Parabolic, Side, SimpleSet};

/// `(i, i')` in the frame algebra `l_T`; the form is carried separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple {
    pub frame: SimpleSet,
    pub i: RealSubspace,
    pub i_prime: RealSubspace,
}

impl ManinTriple {
    pub fn new(frame: SimpleSet, i: RealSubspace, i_prime: RealSubspace) -> Self {
        ManinTriple { frame, i, i_prime }
    }
}

/// Named boolean clauses; the certificate passes iff all clauses hold.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub clauses: Vec<(String, bool)>,
}

impl Certificate {
    pub fn push(&mut self, name: &str, ok: bool) {
        self.clauses.push((name.to_string(), ok));
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|(_, ok)| *ok)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.clauses.iter().find(|(n, _)| n == name).map(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.clauses.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

/// Subalgebras, isotropy, trivial intersection and complementary dimensions in `l_T`.
pub fn verify_manin_triple(g: &LieAlgebra, form: &ManinForm, t: &ManinTriple) -> Certificate {
    let levi = frame_levi(g, &t.frame);
    let mut c = Certificate::default();
    c.push("i_in_algebra", levi.contains_subspace(&t.i));
    c.push("i_prime_in_algebra", levi.contains_subspace(&t.i_prime));
    c.push("i_subalgebra", subalg::is_subalgebra(g, &t.i));
    c.push("i_prime_subalgebra", subalg::is_subalgebra(g, &t.i_prime));
    c.push("i_isotropic", form.is_isotropic(&t.i));
    c.push("i_prime_isotropic", form.is_isotropic(&t.i_prime));
    c.push("trivial_intersection", t.i.intersect(&t.i_prime).is_zero());
    c.push("dimension_sum", t.i.dim() + t.i_prime.dim() == levi.dim());
    c
}

/// Decompositions of `i` under an upper and `i'` under a lower standard parabolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardData {
    pub upper: LagrangianDatum,
    pub lower: LagrangianDatum,
}

pub fn standard_data(g: &LieAlgebra, form: &ManinForm, t: &ManinTriple) -> Result<StandardData> {
    let cert = verify_manin_triple(g, form, t);
    if !cert.passed() {
        return Err(Error::Verification(format!("not a Manin triple: {}", cert.failures().join(", "))));
    }
    let upper = decompose_lagrangian(g, form, &t.frame, &t.i, Side::Upper)?;
    let lower = decompose_lagrangian(g, form, &t.frame, &t.i_prime, Side::Lower)?;
    if upper.parabolic.side != Side::Upper || lower.parabolic.side != Side::Lower {
        return Err(Error::NotStandard("i must lie under b_0 and i' under b_0'".into()));
    }
    Ok(StandardData { upper, lower })
}

/// True iff the decompositions of `i` and `i'` yield exactly `p` and `p'`.
pub fn is_standard_under(g: &LieAlgebra, form: &ManinForm, t: &ManinTriple, p: &Parabolic, pp: &Parabolic) -> bool {
    match standard_data(g, form, t) {
        Ok(d) => d.upper.parabolic.p == p.p && d.lower.parabolic.p == pp.p,
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub data: StandardData,
    pub predecessor: ManinTriple,
}

/// `i_1 = p^{n'}(h̃ ∩ p')`, `i'_1 = p^n(h̃' ∩ p)` with `h̃ = i ∩ l`, `h̃' = i' ∩ l'`.
pub fn descend(g: &LieAlgebra, form: &ManinForm, t: &ManinTriple) -> Result<Descent> {
    let data = standard_data(g, form, t)?;
    let p = &data.upper.parabolic;
    let pp = &data.lower.parabolic;
    let (ll, _, _) = intersection_parts(p, pp)?;
    let frame: SimpleSet = p.subset.intersection(&pp.subset).copied().collect();
    if ll != frame_levi(g, &frame) {
        return Err(Error::Verification("l ∩ l' is not the standard Levi of S ∩ S'".into()));
    }
    if !p.n.intersect(data.lower.h()).is_zero() || !pp.n.intersect(data.upper.h()).is_zero() {
        return Err(Error::Verification("n ∩ h' or n' ∩ h is nonzero: the input is not a Manin triple".into()));
    }
    let ht = t.i.intersect(&p.l);
    let htp = t.i_prime.intersect(&pp.l);
    let i1 = ht.intersect(&pp.p).image(&proj_along(g, &pp.n)?);
    let i1p = htp.intersect(&p.p).image(&proj_along(g, &p.n)?);
    let predecessor = ManinTriple::new(frame, i1, i1p);
    let cert = verify_manin_triple(g, form, &predecessor);
    if !cert.passed() {
        return Err(Error::Verification(format!("predecessor is not a Manin triple: {}", cert.failures().join(", "))));
    }
    Ok(Descent { data, predecessor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SimpleType;
    use crate::linalg::matrix::{add_vec, sub_vec};
    use crate::roots::parabolic::all_simple;

    fn iwasawa() -> (LieAlgebra, ManinForm, ManinTriple) {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap();
        let f = ManinForm::imaginary_killing(&g).unwrap();
        let su2 = RealSubspace::span(
            6,
            &[
                g.i_basis_vector(0),
                sub_vec(&g.basis_vector(1), &g.basis_vector(2)),
                add_vec(&g.i_basis_vector(1), &g.i_basis_vector(2)),
            ],
        );
        let an = RealSubspace::span(6, &[g.basis_vector(0), g.basis_vector(2), g.i_basis_vector(2)]);
        let t = ManinTriple::new(all_simple(&g), su2, an);
        (g, f, t)
    }

    #[test]
    fn iwasawa_is_a_manin_triple() {
        let (g, f, t) = iwasawa();
        assert!(verify_manin_triple(&g, &f, &t).passed());
        let bad = ManinTriple::new(t.frame.clone(), t.i.clone(), t.i.clone());
        assert_eq!(verify_manin_triple(&g, &f, &bad).failures(), vec!["trivial_intersection"]);
    }

    #[test]
    fn iwasawa_standard_position() {
        let (g, f, t) = iwasawa();
        let whole = Parabolic::of_algebra(&g, Side::Upper, &all_simple(&g)).unwrap();
        let b0 = Parabolic::of_algebra(&g, Side::Upper, &SimpleSet::new()).unwrap();
        let b0p = Parabolic::of_algebra(&g, Side::Lower, &SimpleSet::new()).unwrap();
        assert!(is_standard_under(&g, &f, &t, &whole, &b0p));
        assert!(!is_standard_under(&g, &f, &t, &b0, &b0p));
    }

    #[test]
    fn iwasawa_descends_to_cartan() {
        let (g, f, t) = iwasawa();
        let d = descend(&g, &f, &t).unwrap();
        assert!(d.predecessor.frame.is_empty());
        assert_eq!(d.predecessor.i, RealSubspace::span(6, &[g.i_basis_vector(0)]));
        assert_eq!(d.predecessor.i_prime, RealSubspace::span(6, &[g.basis_vector(0)]));
    }
}
