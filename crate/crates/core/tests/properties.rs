mod common;

use std::sync::OnceLock;

use common::*;
use manin::involution::AfInvolution;
use manin::lie::LieAlgebra;
use manin::linalg::matrix::scale_vec;
use manin::linalg::{int, ComplexMatrix, Matrix, Rational, RealSubspace, SymmetricForm};
use manin::roots::CartanData;
use proptest::prelude::*;

fn small_rows(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_rat(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn gauss() -> impl Strategy<Value = (i64, i64)> {
    (-2i64..=2, -2i64..=2)
}

fn group_element() -> impl Strategy<Value = ComplexMatrix> {
    (gauss(), gauss(), gauss()).prop_map(|(a, b, c)| &unipotent(a, b) * &unipotent(c, (0, 0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn signature_is_a_congruence_invariant(p in small_rows(6, 6)) {
        let g = algebra(&[1], 0);
        let f = form(&g, &[(1, 1)]);
        let p = Matrix::from_rows(&to_rat(&p), 6);
        prop_assume!(RealSubspace::span(6, &p.row_vecs()).dim() == 6);
        let moved = SymmetricForm::new(&(&p.transpose() * f.form().gram()) * &p).unwrap();
        prop_assert_eq!(moved.signature(), f.signature());
    }

    #[test]
    fn rref_is_idempotent_and_dimensions_add_up(a in small_rows(3, 5), b in small_rows(3, 5)) {
        let u = RealSubspace::span(5, &to_rat(&a));
        let v = RealSubspace::span(5, &to_rat(&b));
        prop_assert_eq!(&RealSubspace::span(5, &u.basis()), &u);
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.sum(&v).contains_subspace(&u));
        prop_assert!(u.contains_subspace(&u.intersect(&v)));
        prop_assert_eq!(u.annihilator().dim(), 5 - u.dim());
    }
}

fn pair_strategy(
    n: usize,
    ideals: usize,
) -> impl Strategy<Value = (usize, usize, Vec<ComplexMatrix>, Vec<ComplexMatrix>)> {
    (0..n, 0..n, prop::collection::vec(group_element(), ideals), prop::collection::vec(group_element(), ideals))
}

fn common_fixed_vector_holds(
    g: &LieAlgebra,
    cat: &[AfInvolution],
    case: &(usize, usize, Vec<ComplexMatrix>, Vec<ComplexMatrix>),
) {
    let (a, b, x, y) = case;
    let s = conjugate_by(g, &cat[*a], x);
    let t = conjugate_by(g, &cat[*b], y);
    let v = s.common_fixed_vector(&t).expect("nonzero common fixed vector");
    assert!(v.iter().any(|c| *c != int(0)));
    assert_eq!(s.apply(&v), v);
    assert_eq!(t.apply(&v), v);
}

fn cached(ranks: &'static [usize]) -> &'static (LieAlgebra, Vec<AfInvolution>) {
    static SL2: OnceLock<(LieAlgebra, Vec<AfInvolution>)> = OnceLock::new();
    static SL2_SQ: OnceLock<(LieAlgebra, Vec<AfInvolution>)> = OnceLock::new();
    let cell = if ranks.len() == 1 { &SL2 } else { &SL2_SQ };
    cell.get_or_init(|| {
        let g = algebra(ranks, 0);
        let c = catalog(&g);
        (g, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn af_pairs_on_sl2_share_a_fixed_vector(case in pair_strategy(cached(&[1]).1.len(), 1)) {
        let (g, cat) = cached(&[1]);
        common_fixed_vector_holds(g, cat, &case);
    }

    #[test]
    fn af_pairs_on_sl2_squared_share_a_fixed_vector(case in pair_strategy(cached(&[1, 1]).1.len(), 2)) {
        let (g, cat) = cached(&[1, 1]);
        common_fixed_vector_holds(g, cat, &case);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fixed_and_antifixed_sets_are_killing_orthogonal(k in 0usize..64, x in prop::collection::vec(group_element(), 2)) {
        let (g, cat) = cached(&[1, 1]);
        let s = conjugate_by(g, &cat[k % cat.len()], &x);
        prop_assert_eq!(s.fixed_set().dim() + s.antifixed_set().dim(), s.domain().dim());
        for a in s.fixed_set().basis() {
            for b in s.antifixed_set().basis() {
                prop_assert_eq!(g.killing(&a, &b).re, int(0));
            }
        }
    }
}

#[test]
fn underline_is_an_involution_commuting_with_negation() {
    for g in [algebra(&[1, 1], 0), algebra(&[2], 0), algebra(&[1, 1, 1], 0)] {
        let cartan = CartanData::standard(&g);
        let cat = if g.ideals().len() == 3 { catalog_three(&g) } else { catalog(&g) };
        assert!(!cat.is_empty());
        for s in &cat {
            let u = s.underline(&cartan).unwrap();
            for (&a, &b) in &u {
                assert_eq!(u[&b], a);
                assert_eq!(u[&cartan.negative(a)], cartan.negative(b));
            }
        }
    }
}

/// A few three-factor involutions, mixing a flip with a real form.
fn catalog_three(g: &LieAlgebra) -> Vec<AfInvolution> {
    use manin::involution::{BlockSpec, Component, Linearity, Tau};
    let comps: Vec<Component> = (0..3).map(|q| Component::whole_ideal(g, q)).collect();
    let mut out = Vec::new();
    for lin in [Linearity::Linear, Linearity::Antilinear] {
        for weyl in [vec![], vec![0]] {
            for third in [BlockSpec::compact(2), BlockSpec::split(2)] {
                let flip = BlockSpec::flip(0, 1, lin, Tau { weyl: weyl.clone(), ..Tau::identity() });
                out.push(AfInvolution::assemble(g, &comps, &[flip, third]).unwrap());
            }
        }
    }
    out
}

#[test]
fn conjugation_preserves_involutions() {
    let g = algebra(&[1], 0);
    let x = unipotent((1, 1), (0, 2));
    for s in catalog(&g) {
        let t = conjugate_by(&g, &s, std::slice::from_ref(&x));
        assert!(t.map().is_involution());
        assert!(t.map().is_automorphism(&g));
        assert_eq!(t.fixed_set().dim(), s.fixed_set().dim());
        let v = t.fixed_set().basis()[0].clone();
        assert_eq!(t.apply(&scale_vec(&v, &int(-1))), scale_vec(&v, &int(-1)));
    }
}
