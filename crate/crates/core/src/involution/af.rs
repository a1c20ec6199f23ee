//! Validated af-involutions of a semisimple Levi factor `m`.

use std::collections::BTreeMap;

use super::blocks::{conjugate, torus_matrix, BlockSpec, Linearity};
use super::component::{span_components, Component};
use super::map::RealLinearMap;
use crate::error::{Error, Result};
use crate::lie::{subalg, Element, LieAlgebra};
use crate::linalg::{GaussianRational, Matrix, Rational, RealSubspace};
use crate::roots::CartanData;

/// Block structure read off an involutive automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    /// A component mapped to itself.
    Fixed(usize),
    /// Two components exchanged, `first < second`.
    Pair { first: usize, second: usize, linearity: Linearity },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfReport {
    /// `σ(m_c) = m_{θ(c)}`.
    pub theta: Vec<usize>,
    pub blocks: Vec<Block>,
    /// Every θ-fixed component carries an antilinear restriction.
    pub is_af: bool,
}

/// Computes θ and the block report of an involutive automorphism of `m`.
pub fn is_af_involution(g: &LieAlgebra, comps: &[Component], map: &RealLinearMap) -> Result<AfReport> {
    if *map.domain() != span_components(g, comps) {
        return Err(Error::Involution("map is not defined on the given semisimple part".into()));
    }
    if !map.is_involution() {
        return Err(Error::Involution("map is not involutive".into()));
    }
    if !map.is_automorphism(g) {
        return Err(Error::Involution("map is not a Lie algebra automorphism".into()));
    }
    let spaces: Vec<RealSubspace> = comps.iter().map(|c| c.subspace(g)).collect();
    let mut theta = Vec::with_capacity(comps.len());
    for s in &spaces {
        let img = map.image(s);
        let t = spaces
            .iter()
            .position(|t| *t == img)
            .ok_or_else(|| Error::Involution("map does not permute the simple ideals".into()))?;
        theta.push(t);
    }
    let mut blocks = Vec::new();
    let mut is_af = true;
    for (c, &t) in theta.iter().enumerate() {
        if t == c {
            if !map.is_antilinear_on(g, &spaces[c]) {
                is_af = false;
            }
            blocks.push(Block::Fixed(c));
        } else if c < t {
            let linearity = if map.is_linear_on(g, &spaces[c]) {
                Linearity::Linear
            } else if map.is_antilinear_on(g, &spaces[c]) {
                Linearity::Antilinear
            } else {
                return Err(Error::Involution("flip is neither linear nor antilinear".into()));
            };
            blocks.push(Block::Pair { first: c, second: t, linearity });
        }
    }
    Ok(AfReport { theta, blocks, is_af })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfInvolution {
    map: RealLinearMap,
    components: Vec<Component>,
    report: AfReport,
    fixed: RealSubspace,
}

impl AfInvolution {
    /// Validates `map` as an af-involution of the sum of `comps`.
    pub fn new(g: &LieAlgebra, comps: &[Component], map: RealLinearMap) -> Result<Self> {
        let report = is_af_involution(g, comps, &map)?;
        if !report.is_af {
            return Err(Error::Involution("restriction to an invariant simple ideal is not antilinear".into()));
        }
        let fixed = map.fixed_set();
        Ok(AfInvolution { map, components: comps.to_vec(), report, fixed })
    }

    /// The unique involution of `m = 0`.
    pub fn trivial(g: &LieAlgebra) -> Self {
        let map = RealLinearMap::identity(&RealSubspace::zero(g.real_dim()));
        Self::new(g, &[], map).expect("zero map is an af-involution")
    }

    /// Builds σ block by block; the blocks must partition the components.
    pub fn assemble(g: &LieAlgebra, comps: &[Component], specs: &[BlockSpec]) -> Result<Self> {
        let mut owner: Vec<Option<usize>> = vec![None; comps.len()];
        for (s, spec) in specs.iter().enumerate() {
            for c in spec.components() {
                match owner.get_mut(c) {
                    None => return Err(Error::Involution(format!("block refers to missing component {c}"))),
                    Some(Some(_)) => return Err(Error::Involution(format!("component {c} used by two blocks"))),
                    Some(slot) => *slot = Some(s),
                }
            }
            if let BlockSpec::Flip { first, second, .. } = spec {
                if first == second {
                    return Err(Error::Involution("flip of a component with itself".into()));
                }
            }
        }
        if let Some(c) = owner.iter().position(Option::is_none) {
            return Err(Error::Involution(format!("component {c} is not covered by any block")));
        }
        let domain = span_components(g, comps);
        let mut which_comp = BTreeMap::new();
        for (c, comp) in comps.iter().enumerate() {
            for k in comp.indices(g) {
                which_comp.insert(k, c);
            }
        }
        let mut images = Vec::with_capacity(domain.dim());
        for (b, &p) in domain.basis().iter().zip(domain.pivots()) {
            let c = which_comp[&(p / 2)];
            let spec = &specs[owner[c].expect("covered")];
            images.push(spec.image(g, comps, c, b)?);
        }
        let map = RealLinearMap::from_images(&domain, &images)?;
        Self::new(g, comps, map)
    }

    /// The involution with fixed set `h` and antifixed set the Killing-orthogonal of `h` in `m`.
    pub fn from_fixed_set(g: &LieAlgebra, comps: &[Component], h: &RealSubspace) -> Result<Self> {
        let m = span_components(g, comps);
        if m.is_zero() && h.is_zero() {
            return Ok(Self::trivial(g));
        }
        if !m.contains_subspace(h) {
            return Err(Error::Involution("fixed set is not contained in m".into()));
        }
        let mb = m.basis();
        let to_m = |v: &[Rational]| m.coordinates(v).expect("inside m");
        let from_m = |c: &[Rational]| {
            let mut v = g.zero();
            for (ck, bk) in c.iter().zip(&mb) {
                crate::linalg::matrix::axpy(&mut v, ck, bk);
            }
            v
        };
        let killing = subalg::intrinsic_killing(g, &m);
        let h_coords: Vec<Vec<Rational>> = h.basis().iter().map(|v| to_m(v)).collect();
        let h_sub = RealSubspace::span(m.dim(), &h_coords);
        let perp = killing.orthogonal(&h_sub);
        if !RealSubspace::is_direct_sum_of(&RealSubspace::full(m.dim()), &[&h_sub, &perp]) {
            return Err(Error::Involution("m is not the sum of h and its Killing orthogonal".into()));
        }
        let mut cols = h_sub.basis();
        let split = cols.len();
        cols.extend(perp.basis());
        let p = Matrix::from_columns(&cols, m.dim());
        let pinv = p.inverse().expect("direct sum basis");
        let mut images = Vec::with_capacity(m.dim());
        for j in 0..m.dim() {
            let coeff = pinv.column(j);
            let mut img = vec![Rational::from_integer(0.into()); m.dim()];
            for (i, c) in coeff.iter().enumerate() {
                let c = if i < split { c.clone() } else { -c };
                crate::linalg::matrix::axpy(&mut img, &c, &cols[i]);
            }
            images.push(from_m(&img));
        }
        let map = RealLinearMap::from_images(&m, &images)?;
        let sigma = Self::new(g, comps, map)?;
        if sigma.fixed != *h {
            return Err(Error::Involution("fixed set of the reconstructed involution differs from h".into()));
        }
        Ok(sigma)
    }

    pub fn map(&self) -> &RealLinearMap {
        &self.map
    }

    pub fn domain(&self) -> &RealSubspace {
        self.map.domain()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn theta(&self) -> &[usize] {
        &self.report.theta
    }

    pub fn blocks(&self) -> &[Block] {
        &self.report.blocks
    }

    pub fn apply(&self, x: &[Rational]) -> Element {
        self.map.apply(x)
    }

    pub fn fixed_set(&self) -> &RealSubspace {
        &self.fixed
    }

    pub fn antifixed_set(&self) -> RealSubspace {
        self.map.antifixed_set()
    }

    /// True iff no block is a C-linear flip, i.e. the fixed set is a real form of `m`.
    pub fn is_real_form(&self) -> bool {
        self.report.blocks.iter().all(|b| !matches!(b, Block::Pair { linearity: Linearity::Linear, .. }))
    }

    /// `α ↦ ᾱ` on the roots of `j` lying in `m`, defined by `σ(m^α) = m^ᾱ`.
    pub fn underline(&self, cartan: &CartanData) -> Result<BTreeMap<usize, usize>> {
        let roots = cartan.roots_in(self.domain());
        let mut out = BTreeMap::new();
        for &k in &roots {
            let img = self.map.image(&cartan.root(k).space);
            let bar = cartan
                .root_of_space(&img)
                .filter(|b| roots.contains(b))
                .ok_or_else(|| Error::Involution("σ does not normalize the Cartan subalgebra".into()))?;
            out.insert(k, bar);
        }
        Ok(out)
    }

    /// `σ ∘ Ad(t)` for the torus element acting on the `i`-th simple root vector by `t[i]`.
    pub fn twist_by_torus(&self, g: &LieAlgebra, t: &[GaussianRational]) -> Result<Self> {
        if t.len() != g.semisimple_rank() {
            return Err(Error::Involution(format!(
                "torus element needs {} scalars, got {}",
                g.semisimple_rank(),
                t.len()
            )));
        }
        let ad = torus_action(g, &self.components, t)?;
        let map = self.map.compose(&ad)?;
        if !map.is_involution() {
            return Err(Error::Involution("torus element is not a cocycle: twisted map is not involutive".into()));
        }
        Self::new(g, &self.components, map)
    }

    /// First canonical basis vector of `fixed(σ) ∩ fixed(σ')`.
    pub fn common_fixed_vector(&self, other: &AfInvolution) -> Option<Element> {
        self.fixed.intersect(&other.fixed).basis().into_iter().next()
    }
}

/// `Ad(t)` restricted to the sum of `comps`.
pub fn torus_action(g: &LieAlgebra, comps: &[Component], t: &[GaussianRational]) -> Result<RealLinearMap> {
    let domain = span_components(g, comps);
    let mut images = Vec::with_capacity(domain.dim());
    for (b, &p) in domain.basis().iter().zip(domain.pivots()) {
        let c = comps.iter().find(|c| c.indices(g).contains(&(p / 2))).expect("basis vector in a component");
        let local: Vec<GaussianRational> = c.simple_roots(g).map(|i| t[i].clone()).collect();
        let d = torus_matrix(c.size, &local)?;
        images.push(c.embed(g, &conjugate(&d, &c.extract(g, b))));
    }
    RealLinearMap::from_images(&domain, &images)
}
