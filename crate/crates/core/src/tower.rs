//! Towers of iterated descents, their height, and the socle in `j_0`.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::RealSubspace;
use crate::manin::link::{check_link_conditions, extract_link, LinkDatum, LinkReport};
use crate::manin::triple::{descend, verify_manin_triple};
use crate::manin::{ManinForm, ManinTriple};
use crate::roots::{Parabolic, Side};

#[derive(Clone, Debug)]
pub struct Stage {
    pub triple: ManinTriple,
    pub parabolic: Parabolic,
    pub parabolic_prime: Parabolic,
    pub link: LinkDatum,
    pub link_prime: LinkDatum,
    pub report: LinkReport,
    pub report_prime: LinkReport,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub stages: Vec<Stage>,
    /// The triple in `j_0` reached at the end.
    pub last: ManinTriple,
}

impl Tower {
    pub fn height(&self) -> usize {
        self.stages.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Socle {
    pub i: RealSubspace,
    pub i_prime: RealSubspace,
}

/// Descends until the frame is empty, extracting and checking a link at every stage.
pub fn build_tower(g: &LieAlgebra, form: &ManinForm, triple: &ManinTriple) -> Result<Tower> {
    let wrap = |stage: usize| move |e: Error| Error::TowerStage { stage, source: Box::new(e) };
    let mut stages = Vec::new();
    let mut cur = triple.clone();
    let cert = verify_manin_triple(g, form, &cur);
    if !cert.passed() {
        return Err(Error::Verification(format!("not a Manin triple: {}", cert.failures().join(", "))));
    }
    while !cur.frame.is_empty() {
        let k = stages.len();
        let d = descend(g, form, &cur).map_err(wrap(k))?;
        if d.predecessor.frame == cur.frame {
            return Err(wrap(k)(Error::Verification("descent did not shrink the algebra".into())));
        }
        let link = extract_link(g, &d.data.upper, &d.predecessor, Side::Upper).map_err(wrap(k))?;
        let link_prime = extract_link(g, &d.data.lower, &d.predecessor, Side::Lower).map_err(wrap(k))?;
        let pp = d.data.lower.parabolic.clone();
        let p = d.data.upper.parabolic.clone();
        let report = check_link_conditions(g, form, &d.predecessor, &link, &pp).map_err(wrap(k))?;
        let report_prime = check_link_conditions(g, form, &d.predecessor, &link_prime, &p).map_err(wrap(k))?;
        for r in [&report, &report_prime] {
            if let Some(&c) = r.failed().first() {
                return Err(wrap(k)(Error::LinkCondition { condition: c, detail: "extracted link fails".into() }));
            }
        }
        stages.push(Stage { triple: cur, parabolic: p, parabolic_prime: pp, link, link_prime, report, report_prime });
        cur = d.predecessor;
    }
    Ok(Tower { stages, last: cur })
}

/// The final triple, checked to be a pair of complementary isotropic real forms of `j_0`.
pub fn socle(g: &LieAlgebra, form: &ManinForm, tower: &Tower) -> Result<Socle> {
    let s = Socle { i: tower.last.i.clone(), i_prime: tower.last.i_prime.clone() };
    let j0 = g.standard_cartan();
    let ok = j0.contains_subspace(&s.i)
        && j0.contains_subspace(&s.i_prime)
        && s.i.dim() == g.rank()
        && s.i_prime.dim() == g.rank()
        && s.i.intersect(&s.i_prime).is_zero()
        && form.is_isotropic(&s.i)
        && form.is_isotropic(&s.i_prime);
    if !ok {
        return Err(Error::Verification("socle is not a pair of complementary isotropic subspaces of j_0".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SimpleType;
    use crate::linalg::matrix::{add_vec, sub_vec};
    use crate::linalg::Matrix;
    use crate::roots::parabolic::all_simple;
    use crate::roots::SimpleSet;

    #[test]
    fn iwasawa_tower() {
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
        let t = build_tower(&g, &f, &ManinTriple::new(all_simple(&g), su2, an)).unwrap();
        assert_eq!(t.height(), 1);
        let s = socle(&g, &f, &t).unwrap();
        assert_eq!(s.i, RealSubspace::span(6, &[g.i_basis_vector(0)]));
        assert_eq!(s.i_prime, RealSubspace::span(6, &[g.basis_vector(0)]));
    }

    #[test]
    fn abelian_tower_is_trivial() {
        let g = LieAlgebra::build(&[], 1).unwrap();
        let f = ManinForm::new(&g, &[], &Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap();
        let t = ManinTriple::new(
            SimpleSet::new(),
            RealSubspace::span(2, &[add_vec(&g.basis_vector(0), &g.i_basis_vector(0))]),
            RealSubspace::span(2, &[sub_vec(&g.basis_vector(0), &g.i_basis_vector(0))]),
        );
        let tower = build_tower(&g, &f, &t).unwrap();
        assert_eq!(tower.height(), 0);
        assert_eq!(socle(&g, &f, &tower).unwrap().i, t.i);
    }
}
