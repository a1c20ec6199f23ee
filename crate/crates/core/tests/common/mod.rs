#![allow(dead_code)]

use manin::involution::blocks::gaussian;
use manin::involution::{components, AfInvolution, BlockSpec, Component, Linearity, RealFormKind, RealLinearMap, Tau};
use manin::lie::subalg;
use manin::lie::{LieAlgebra, SimpleType};
use manin::linalg::matrix::{add_vec, sub_vec};
use manin::linalg::{ComplexMatrix, GaussianRational, Matrix, Rational, RealSubspace};
use manin::manin::{build_lagrangian, LagrangianDatum, ManinForm, ManinTriple};
use manin::roots::parabolic::{all_simple, subsets};
use manin::roots::{Parabolic, Side, SimpleSet};

pub fn algebra(ranks: &[usize], center: usize) -> LieAlgebra {
    let types: Vec<SimpleType> = ranks.iter().map(|&r| SimpleType::a(r)).collect();
    LieAlgebra::build(&types, center).unwrap()
}

pub fn form(g: &LieAlgebra, lambda: &[(i64, i64)]) -> ManinForm {
    let l: Vec<GaussianRational> = lambda.iter().map(|&(a, b)| gaussian(a, b)).collect();
    let c = 2 * g.center_rank();
    let mut center = Matrix::zeros(c, c);
    for j in 0..g.center_rank() {
        center[(2 * j, 2 * j)] = manin::linalg::int(1);
        center[(2 * j + 1, 2 * j + 1)] = manin::linalg::int(-1);
    }
    ManinForm::new(g, &l, &center).unwrap()
}

pub fn su2(g: &LieAlgebra, q: usize) -> RealSubspace {
    let h = g.h_index(q, 0);
    let e = g.unit_index(q, 0, 1);
    let f = g.unit_index(q, 1, 0);
    RealSubspace::span(
        g.real_dim(),
        &[
            g.i_basis_vector(h),
            sub_vec(&g.basis_vector(e), &g.basis_vector(f)),
            add_vec(&g.i_basis_vector(e), &g.i_basis_vector(f)),
        ],
    )
}

pub fn line(g: &LieAlgebra, v: Vec<manin::linalg::Rational>) -> RealSubspace {
    RealSubspace::span(g.real_dim(), &[v])
}

/// Iwasawa triple `(Im K, su(2), R·H ⊕ C·F)` on sl2.
pub fn iwasawa() -> (LieAlgebra, ManinForm, ManinTriple) {
    let g = algebra(&[1], 0);
    let f = form(&g, &[(1, 0)]);
    let an = RealSubspace::span(6, &[g.basis_vector(0), g.basis_vector(2), g.i_basis_vector(2)]);
    let t = ManinTriple::new(all_simple(&g), su2(&g, 0), an);
    (g, f, t)
}

/// Product of two Iwasawa triples on sl2 × sl2 with `λ = (1, 1)`.
pub fn product_iwasawa() -> (LieAlgebra, ManinForm, ManinTriple) {
    let g = algebra(&[1, 1], 0);
    let f = form(&g, &[(1, 0), (1, 0)]);
    let comps = vec![Component::whole_ideal(&g, 0), Component::whole_ideal(&g, 1)];
    let sigma = AfInvolution::assemble(&g, &comps, &[BlockSpec::compact(0), BlockSpec::compact(1)]).unwrap();
    let p = Parabolic::of_algebra(&g, Side::Upper, &all_simple(&g)).unwrap();
    let i = build_lagrangian(&g, &f, &LagrangianDatum { parabolic: p, sigma, i_a: RealSubspace::zero(12) }).unwrap();
    let pp = Parabolic::of_algebra(&g, Side::Lower, &SimpleSet::new()).unwrap();
    let i_a = RealSubspace::span(12, &[g.basis_vector(0), g.basis_vector(3)]);
    let ip =
        build_lagrangian(&g, &f, &LagrangianDatum { parabolic: pp, sigma: AfInvolution::trivial(&g), i_a }).unwrap();
    (g.clone(), f, ManinTriple::new(all_simple(&g), i, ip))
}

/// Height-two triple on sl2 × sl2 with `λ = (1, −1)`:
/// `i` the graph of `Ad(w)`, `i' = R·H_1 ⊕ su(2)_2 ⊕ C·F_1`.
pub fn height_two() -> (LieAlgebra, ManinForm, ManinTriple) {
    let g = algebra(&[1, 1], 0);
    let f = form(&g, &[(1, 0), (-1, 0)]);
    let comps = vec![Component::whole_ideal(&g, 0), Component::whole_ideal(&g, 1)];
    let tau = Tau { weyl: vec![0], ..Tau::identity() };
    let sigma = AfInvolution::assemble(&g, &comps, &[BlockSpec::flip(0, 1, Linearity::Linear, tau)]).unwrap();
    let p = Parabolic::of_algebra(&g, Side::Upper, &all_simple(&g)).unwrap();
    let i = build_lagrangian(&g, &f, &LagrangianDatum { parabolic: p, sigma, i_a: RealSubspace::zero(12) }).unwrap();
    let pp = Parabolic::of_algebra(&g, Side::Lower, &[1].into()).unwrap();
    let sigma_p = AfInvolution::assemble(&g, &components(&g, &pp.subset), &[BlockSpec::compact(0)]).unwrap();
    let i_a = RealSubspace::span(12, &[g.basis_vector(0)]);
    let ip = build_lagrangian(&g, &f, &LagrangianDatum { parabolic: pp, sigma: sigma_p, i_a }).unwrap();
    (g.clone(), f, ManinTriple::new(all_simple(&g), i, ip))
}

const TORI: [(i64, i64); 5] = [(1, 0), (-1, 0), (0, 1), (0, -1), (2, 0)];

/// Af-involutions of the whole semisimple part built from every block kind:
/// compact and split forms with torus twists, and linear or antilinear flips.
pub fn catalog(g: &LieAlgebra) -> Vec<AfInvolution> {
    let comps: Vec<Component> = (0..g.ideals().len()).map(|q| Component::whole_ideal(g, q)).collect();
    catalog_on(g, &comps, &TORI)
}

/// Same construction over arbitrary components, e.g. those of a Levi factor.
pub fn catalog_on(g: &LieAlgebra, comps: &[Component], tori: &[(i64, i64)]) -> Vec<AfInvolution> {
    labelled_catalog_on(g, comps, tori).into_iter().map(|(_, s)| s).collect()
}

/// [`catalog_on`] keeping the block specs each involution was assembled from.
pub fn labelled_catalog_on(
    g: &LieAlgebra,
    comps: &[Component],
    tori: &[(i64, i64)],
) -> Vec<(Vec<BlockSpec>, AfInvolution)> {
    let mut per_comp: Vec<Vec<BlockSpec>> = Vec::new();
    for (c, comp) in comps.iter().enumerate() {
        let mut opts = Vec::new();
        for kind in [RealFormKind::Compact, RealFormKind::Split] {
            opts.push(BlockSpec::RealForm { component: c, kind, torus: vec![] });
            for &t in tori {
                opts.push(BlockSpec::RealForm { component: c, kind, torus: vec![gaussian(t.0, t.1); comp.rank()] });
            }
        }
        per_comp.push(opts);
    }
    let mut specs: Vec<Vec<BlockSpec>> = vec![vec![]];
    for opts in &per_comp {
        specs = specs.iter().flat_map(|s| opts.iter().map(move |o| [s.clone(), vec![o.clone()]].concat())).collect();
    }
    if comps.len() == 2 && comps[0].size == comps[1].size {
        for lin in [Linearity::Linear, Linearity::Antilinear] {
            for weyl in [vec![], vec![0]] {
                for &t in tori {
                    let tau =
                        Tau { weyl: weyl.clone(), diagram: false, torus: vec![gaussian(t.0, t.1); comps[0].rank()] };
                    specs.push(vec![BlockSpec::flip(0, 1, lin, tau)]);
                }
            }
        }
    }
    specs.into_iter().filter_map(|s| AfInvolution::assemble(g, comps, &s).ok().map(|a| (s, a))).collect()
}

/// `[[1, z], [0, 1]] · [[1, 0], [w, 1]]` in SL_2(Q(i)).
pub fn unipotent(z: (i64, i64), w: (i64, i64)) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(2);
    u[(0, 1)] = gaussian(z.0, z.1);
    let mut l = ComplexMatrix::identity(2);
    l[(1, 0)] = gaussian(w.0, w.1);
    &u * &l
}

/// `Ad(x) ∘ σ ∘ Ad(x)⁻¹`, with one group element per simple ideal.
pub fn conjugate_by(g: &LieAlgebra, sigma: &AfInvolution, xs: &[ComplexMatrix]) -> AfInvolution {
    let domain = sigma.domain().clone();
    let ad = |inverse: bool| {
        let images: Vec<Vec<Rational>> = domain
            .basis()
            .iter()
            .map(|b| {
                let mut out = g.zero();
                for (q, x) in xs.iter().enumerate() {
                    let xi = x.inverse().unwrap();
                    let (a, c) = if inverse { (&xi, x) } else { (x, &xi) };
                    let y = &(a * &g.to_matrix(q, b)) * c;
                    out = add_vec(&out, &g.from_matrix(q, &y));
                }
                out
            })
            .collect();
        RealLinearMap::from_images(&domain, &images).unwrap()
    };
    let map = ad(false).compose(sigma.map()).unwrap().compose(&ad(true)).unwrap();
    AfInvolution::new(g, sigma.components(), map).unwrap()
}

pub const COEFFS: [(i64, i64); 5] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)];

/// A complex basis of `a`, taken from its real basis.
pub fn complex_basis(g: &LieAlgebra, a: &RealSubspace) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for v in a.basis() {
        let mut with = out.clone();
        with.push(v.clone());
        if subalg::complex_span(g, &RealSubspace::span(g.real_dim(), &with)).dim() == 2 * with.len() {
            out = with;
        }
    }
    out
}

/// Real spans of `{c_j z_j}`, plus sheared pairs when `a` has complex dimension two.
pub fn i_a_candidates(g: &LieAlgebra, a: &RealSubspace) -> Vec<RealSubspace> {
    let z = complex_basis(g, a);
    let n = g.real_dim();
    let scale = |v: &[Rational], c: (i64, i64)| g.scale_complex(v, &gaussian(c.0, c.1));
    let mut choices: Vec<Vec<Vec<Rational>>> = vec![vec![]];
    for zj in &z {
        choices = choices.iter().flat_map(|s| COEFFS.map(|c| [s.clone(), vec![scale(zj, c)]].concat())).collect();
    }
    let mut out: Vec<RealSubspace> = choices.iter().map(|vs| RealSubspace::span(n, vs)).collect();
    if z.len() == 2 {
        for c in COEFFS {
            for d in COEFFS {
                let u = add_vec(&z[0], &scale(&z[1], c));
                let w = add_vec(&scale(&z[0], (0, 1)), &scale(&z[1], d));
                out.push(RealSubspace::span(n, &[u, w]));
            }
        }
    }
    out
}

pub fn shipped() -> Vec<(&'static str, LieAlgebra, ManinForm)> {
    let mut out = Vec::new();
    for (name, ranks, lambda) in [
        ("sl2", &[1][..], &[(1, 0)][..]),
        ("sl2 i", &[1], &[(0, 1)]),
        ("sl2^2", &[1, 1], &[(1, 0), (1, 0)]),
        ("sl2^2 split", &[1, 1], &[(1, 0), (-1, 0)]),
        ("sl2^2 mixed", &[1, 1], &[(1, 0), (0, 1)]),
        ("sl3", &[2], &[(1, 0)]),
    ] {
        let g = algebra(ranks, 0);
        let f = form(&g, lambda);
        out.push((name, g, f));
    }
    out
}

pub fn kind_of(spec: &BlockSpec) -> &'static str {
    match spec {
        BlockSpec::RealForm { kind: RealFormKind::Compact, .. } => "compact",
        BlockSpec::RealForm { kind: RealFormKind::Split, .. } => "split",
        BlockSpec::Flip { linearity: Linearity::Linear, .. } => "linear flip",
        BlockSpec::Flip { linearity: Linearity::Antilinear, .. } => "antilinear flip",
    }
}

/// Every Lagrangian built from the catalog over the standard parabolics of `g`,
/// with the block specs of its involution.
pub fn lagrangian_corpus(g: &LieAlgebra, f: &ManinForm) -> Vec<(Vec<BlockSpec>, LagrangianDatum, RealSubspace)> {
    let mut out = Vec::new();
    for subset in subsets(&all_simple(g)) {
        for side in [Side::Upper, Side::Lower] {
            let p = Parabolic::of_algebra(g, side, &subset).unwrap();
            let sigmas = labelled_catalog_on(g, &components(g, &subset), &[(1, 0), (-1, 0), (0, 1)]);
            for i_a in i_a_candidates(g, &p.a) {
                for (specs, sigma) in &sigmas {
                    let datum = LagrangianDatum { parabolic: p.clone(), sigma: sigma.clone(), i_a: i_a.clone() };
                    if let Ok(i) = build_lagrangian(g, f, &datum) {
                        out.push((specs.clone(), datum, i));
                    }
                }
            }
        }
    }
    out
}
