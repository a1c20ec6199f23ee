//! Standard parabolic subalgebras and their Langlands decompositions.
//!
//! All constructions are relative to a *frame*: a set `T` of simple roots whose
//! standard Levi subalgebra `l_T = j_0 ⊕ ⊕_{α ∈ span T} g^α` plays the role of
//! the ambient algebra. The top frame (all simple roots) is `g` itself; iterated
//! descent moves to smaller frames.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::subalg;
use crate::lie::LieAlgebra;
use crate::linalg::RealSubspace;

/// Which standard Borel the parabolic contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Contains `b_0` (upper triangular).
    Upper,
    /// Contains the opposite Borel `b_0'`.
    Lower,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Upper => "upper",
            Side::Lower => "lower",
        })
    }
}

/// A set of simple roots, by global index.
pub type SimpleSet = BTreeSet<usize>;

pub fn all_simple(g: &LieAlgebra) -> SimpleSet {
    (0..g.semisimple_rank()).collect()
}

/// Root of a matrix-unit basis vector: ideal, and the simple roots it spans.
fn unit_support(g: &LieAlgebra, k: usize) -> Option<(bool, std::ops::Range<usize>)> {
    let (q, a, b) = g.unit_of(k)?;
    let off = g.ideals()[q].simple_root_offset;
    Some((a < b, off + a.min(b)..off + a.max(b)))
}

fn in_span(g: &LieAlgebra, k: usize, set: &SimpleSet) -> bool {
    unit_support(g, k).is_some_and(|(_, r)| r.clone().all(|i| set.contains(&i)))
}

/// `l_T`: the standard Levi subalgebra of the frame `T`.
pub fn frame_levi(g: &LieAlgebra, frame: &SimpleSet) -> RealSubspace {
    let mut ks: Vec<usize> = Vec::new();
    for k in 0..g.dim() {
        if g.unit_of(k).is_none() || in_span(g, k, frame) {
            ks.push(k);
        }
    }
    g.span_of_basis(&ks)
}

/// Standard parabolic with its Langlands decomposition `p = l ⊕ n`, `l = m ⊕ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    pub side: Side,
    /// Frame `T` in which this is a parabolic of `l_T`.
    pub frame: SimpleSet,
    /// Simple roots `S ⊆ T` of the Levi factor.
    pub subset: SimpleSet,
    pub p: RealSubspace,
    pub l: RealSubspace,
    pub n: RealSubspace,
    /// Derived algebra of `l`.
    pub m: RealSubspace,
    /// Center of `l`.
    pub a: RealSubspace,
}

impl Parabolic {
    /// `p_S` in frame `T`: `j_0`, every root of `span S`, and the roots of
    /// `span T` of the given sign.
    pub fn standard(g: &LieAlgebra, frame: &SimpleSet, side: Side, subset: &SimpleSet) -> Result<Self> {
        if !subset.is_subset(frame) {
            return Err(Error::Input(format!("simple subset {subset:?} is not contained in frame {frame:?}")));
        }
        if let Some(&bad) = frame.iter().find(|&&i| i >= g.semisimple_rank()) {
            return Err(Error::Input(format!("simple root index {bad} out of range")));
        }
        let mut p_ks = Vec::new();
        let mut l_ks = Vec::new();
        let mut n_ks = Vec::new();
        let mut m_ks = Vec::new();
        for k in 0..g.dim() {
            match unit_support(g, k) {
                None => {
                    p_ks.push(k);
                    l_ks.push(k);
                }
                Some((positive, _)) => {
                    if in_span(g, k, subset) {
                        p_ks.push(k);
                        l_ks.push(k);
                        m_ks.push(k);
                    } else if in_span(g, k, frame) && (positive == (side == Side::Upper)) {
                        p_ks.push(k);
                        n_ks.push(k);
                    }
                }
            }
        }
        for (q, ideal) in g.ideals().iter().enumerate() {
            for i in 0..ideal.kind.rank {
                if subset.contains(&(ideal.simple_root_offset + i)) {
                    m_ks.push(g.h_index(q, i));
                }
            }
        }
        let l = g.span_of_basis(&l_ks);
        let a = subalg::centralizer(g, &l).intersect(&l);
        Ok(Parabolic {
            side,
            frame: frame.clone(),
            subset: subset.clone(),
            p: g.span_of_basis(&p_ks),
            l,
            n: g.span_of_basis(&n_ks),
            m: g.span_of_basis(&m_ks),
            a,
        })
    }

    /// Standard parabolic of `g` itself (top frame).
    pub fn of_algebra(g: &LieAlgebra, side: Side, subset: &SimpleSet) -> Result<Self> {
        Self::standard(g, &all_simple(g), side, subset)
    }

    /// The whole frame algebra `l_T`, viewed as a parabolic.
    pub fn whole(g: &LieAlgebra, frame: &SimpleSet, side: Side) -> Self {
        Self::standard(g, frame, side, frame).expect("frame is its own subset")
    }

    pub fn is_whole(&self) -> bool {
        self.subset == self.frame
    }
}

/// `(l∩l', n∩l', n'∩l)` for an upper `p` and lower `p'` in the same frame.
///
/// Checks `n ∩ n' = 0` and `p ∩ p' = (l∩l') ⊕ (n∩l') ⊕ (n'∩l)`.
pub fn intersection_parts(p: &Parabolic, pp: &Parabolic) -> Result<(RealSubspace, RealSubspace, RealSubspace)> {
    if p.frame != pp.frame {
        return Err(Error::Input("parabolics live in different frames".into()));
    }
    if !p.n.intersect(&pp.n).is_zero() {
        return Err(Error::Verification("n ∩ n' is nonzero".into()));
    }
    let ll = p.l.intersect(&pp.l);
    let nl = p.n.intersect(&pp.l);
    let nnl = pp.n.intersect(&p.l);
    let whole = p.p.intersect(&pp.p);
    if !RealSubspace::is_direct_sum_of(&whole, &[&ll, &nl, &nnl]) {
        return Err(Error::Verification("p ∩ p' does not split as (l∩l') ⊕ (n∩l') ⊕ (n'∩l)".into()));
    }
    Ok((ll, nl, nnl))
}

/// All subsets of a set of simple roots, in a fixed order.
pub fn subsets(set: &SimpleSet) -> Vec<SimpleSet> {
    let items: Vec<usize> = set.iter().copied().collect();
    (0..(1usize << items.len()))
        .map(|mask| items.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SimpleType;

    #[test]
    fn sl2_parabolics() {
        let g = LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap();
        let b0 = Parabolic::of_algebra(&g, Side::Upper, &SimpleSet::new()).unwrap();
        assert_eq!(b0.p, g.span_of_basis(&[0, 1]));
        assert_eq!(b0.l, g.standard_cartan());
        assert_eq!(b0.n, g.span_of_basis(&[1]));
        assert!(b0.m.is_zero());
        assert_eq!(b0.a, g.standard_cartan());
        let whole = Parabolic::of_algebra(&g, Side::Upper, &all_simple(&g)).unwrap();
        assert!(whole.p.is_full());
        assert!(whole.n.is_zero());
        assert!(whole.a.is_zero());
    }

    #[test]
    fn sl3_minimal_levi() {
        let g = LieAlgebra::build(&[SimpleType::a(2)], 0).unwrap();
        let p = Parabolic::of_algebra(&g, Side::Upper, &[0].into()).unwrap();
        assert_eq!(p.n.dim(), 4);
        assert_eq!(p.m.dim(), 6);
        assert_eq!(p.a.dim(), 2);
        assert_eq!(subalg::derived(&g, &p.l), p.m);
        assert_eq!(subalg::nilpotent_radical(&g, &p.p).unwrap(), p.n);
    }

    #[test]
    fn frame_levi_of_subset() {
        let g = LieAlgebra::build(&[SimpleType::a(2)], 0).unwrap();
        let l = frame_levi(&g, &[1].into());
        assert_eq!(l.dim(), 2 * 4);
    }
}
