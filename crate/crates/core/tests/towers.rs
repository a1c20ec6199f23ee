mod common;

use common::*;
use manin::linalg::matrix::sub_vec;
use manin::linalg::RealSubspace;
use manin::manin::{descend, lift, verify_manin_triple};
use manin::tower::{build_tower, socle};

#[test]
fn product_tower_has_blockwise_socle() {
    let (g, f, t) = product_iwasawa();
    assert!(verify_manin_triple(&g, &f, &t).passed());
    let tower = build_tower(&g, &f, &t).unwrap();
    assert_eq!(tower.height(), 1);
    let s = socle(&g, &f, &tower).unwrap();
    assert_eq!(s.i, RealSubspace::span(12, &[g.i_basis_vector(0), g.i_basis_vector(3)]));
    assert_eq!(s.i_prime, RealSubspace::span(12, &[g.basis_vector(0), g.basis_vector(3)]));
}

#[test]
fn height_two_tower() {
    let (g, f, t) = height_two();
    assert!(verify_manin_triple(&g, &f, &t).passed());
    let d = descend(&g, &f, &t).unwrap();
    assert_eq!(d.predecessor.frame, [1].into());
    let h1_minus_h2 = sub_vec(&g.basis_vector(0), &g.basis_vector(3));
    let expected =
        RealSubspace::span(12, &[h1_minus_h2.clone(), g.mul_i(&h1_minus_h2), g.basis_vector(4), g.i_basis_vector(4)]);
    assert_eq!(d.predecessor.i, expected);
    let tower = build_tower(&g, &f, &t).unwrap();
    assert_eq!(tower.height(), 2);
    let s = socle(&g, &f, &tower).unwrap();
    assert_eq!(s.i, RealSubspace::span(12, &[h1_minus_h2.clone(), g.mul_i(&h1_minus_h2)]));
    assert_eq!(s.i_prime, RealSubspace::span(12, &[g.basis_vector(0), g.i_basis_vector(3)]));
}

#[test]
fn towers_lift_back() {
    for (g, f, t) in [iwasawa(), product_iwasawa(), height_two()] {
        let tower = build_tower(&g, &f, &t).unwrap();
        for stage in &tower.stages {
            let d = descend(&g, &f, &stage.triple).unwrap();
            let back = lift(&g, &f, &d.predecessor, &stage.link, &stage.link_prime).unwrap();
            assert_eq!(back, stage.triple);
        }
    }
}
