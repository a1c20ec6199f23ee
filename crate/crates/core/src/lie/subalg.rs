//! Subalgebra calculus: derived algebras, radicals, centralizers and normalizers.

use num_traits::Zero;

use super::algebra::{Element, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, RealSubspace, SymmetricForm};

/// `[s, t]`, the span of brackets of basis vectors.
pub fn bracket_space(g: &LieAlgebra, s: &RealSubspace, t: &RealSubspace) -> RealSubspace {
    let mut vs = Vec::new();
    for x in s.basis() {
        for y in t.basis() {
            vs.push(g.bracket(&x, &y));
        }
    }
    RealSubspace::span(g.real_dim(), &vs)
}

pub fn derived(g: &LieAlgebra, s: &RealSubspace) -> RealSubspace {
    bracket_space(g, s, s)
}

pub fn is_subalgebra(g: &LieAlgebra, s: &RealSubspace) -> bool {
    let b = s.basis();
    for (k, x) in b.iter().enumerate() {
        for y in &b[k + 1..] {
            if !s.contains(&g.bracket(x, y)) {
                return false;
            }
        }
    }
    true
}

pub fn is_solvable(g: &LieAlgebra, s: &RealSubspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = derived(g, &cur);
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

pub fn is_abelian(g: &LieAlgebra, s: &RealSubspace) -> bool {
    derived(g, s).is_zero()
}

/// True iff `s ⊆ t` and `[t, s] ⊆ s`.
pub fn is_ideal_in(g: &LieAlgebra, s: &RealSubspace, t: &RealSubspace) -> bool {
    t.contains_subspace(s) && s.contains_subspace(&bracket_space(g, t, s))
}

/// True iff `s` is stable under multiplication by `i`.
pub fn is_complex(g: &LieAlgebra, s: &RealSubspace) -> bool {
    s.image(&g.complex_structure()) == *s
}

/// `s + i·s`.
pub fn complex_span(g: &LieAlgebra, s: &RealSubspace) -> RealSubspace {
    s.sum(&s.image(&g.complex_structure()))
}

/// `{X : [X, s] = 0}`.
pub fn centralizer(g: &LieAlgebra, s: &RealSubspace) -> RealSubspace {
    let n = g.real_dim();
    let mut cond = Matrix::zeros(0, n);
    for b in s.basis() {
        cond = cond.vstack(&g.ad(&b));
    }
    if cond.rows() == 0 {
        return RealSubspace::full(n);
    }
    RealSubspace::kernel_of(&cond)
}

/// `{X : [X, s] ⊆ s}`.
pub fn normalizer(g: &LieAlgebra, s: &RealSubspace) -> RealSubspace {
    let n = g.real_dim();
    let ann = s.annihilator();
    if ann.is_zero() || s.is_zero() {
        return RealSubspace::full(n);
    }
    let a = ann.basis_matrix();
    let mut cond = Matrix::zeros(0, n);
    for b in s.basis() {
        cond = cond.vstack(&(a * &g.ad(&b)));
    }
    RealSubspace::kernel_of(&cond)
}

/// `tr(A·B)` without forming the product.
pub fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.rows();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..a.cols() {
            let x = &a[(i, j)];
            if !x.is_zero() {
                let y = &b[(j, i)];
                if !y.is_zero() {
                    acc += x * y;
                }
            }
        }
    }
    acc
}

/// `{X ∈ within : tr(ad X · M) = 0 for every M in mats}`.
fn trace_orthogonal(g: &LieAlgebra, within: &RealSubspace, mats: &[Matrix]) -> RealSubspace {
    if within.is_zero() || mats.is_empty() {
        return within.clone();
    }
    let basis = within.basis();
    let ads: Vec<Matrix> = basis.iter().map(|b| g.ad(b)).collect();
    let rows: Vec<Vec<Rational>> = mats.iter().map(|m| ads.iter().map(|a| trace_of_product(a, m)).collect()).collect();
    let cond = Matrix::from_rows(&rows, basis.len());
    let coeffs = cond.kernel();
    let vs: Vec<Element> = coeffs
        .iter()
        .map(|c| {
            let mut v = g.zero();
            for (ck, bk) in c.iter().zip(&basis) {
                crate::linalg::matrix::axpy(&mut v, ck, bk);
            }
            v
        })
        .collect();
    RealSubspace::span(g.real_dim(), &vs)
}

/// Largest solvable ideal of the subalgebra `s`.
///
/// Computed as the orthogonal of `[s, s]` in `s` for the real trace form of the
/// adjoint representation, then re-verified to be a solvable ideal.
pub fn radical(g: &LieAlgebra, s: &RealSubspace) -> Result<RealSubspace> {
    if s.is_zero() {
        return Ok(s.clone());
    }
    let d = derived(g, s);
    let mats: Vec<Matrix> = d.basis().iter().map(|y| g.ad(y)).collect();
    let r = trace_orthogonal(g, s, &mats);
    if !is_ideal_in(g, &r, s) {
        return Err(Error::Verification("radical candidate is not an ideal".into()));
    }
    if !is_solvable(g, &r) {
        return Err(Error::Verification("radical candidate is not solvable".into()));
    }
    Ok(r)
}

/// `{X ∈ rad(s) ∩ g^der : ad X nilpotent}`, the nilpotent radical of `s`.
///
/// The ad-nilpotent elements of the radical are the common kernel of the
/// diagonal characters of `ad(rad s)`. For a generic `Y` in the radical the
/// conditions `tr(ad X · ad(Y)^k) = 0`, `k < dim_C g`, taken over `C`, cut
/// out exactly that kernel; the candidate is checked element by element and a
/// different `Y` is tried if the check fails.
pub fn nilpotent_radical(g: &LieAlgebra, s: &RealSubspace) -> Result<RealSubspace> {
    let r = radical(g, s)?;
    let base = r.intersect(&g.derived_subspace());
    if base.is_zero() {
        return Ok(base);
    }
    let rb = r.basis();
    let j = g.complex_structure();
    for attempt in 0..8i64 {
        let mut y = g.zero();
        for (k, b) in rb.iter().enumerate() {
            let k = k as i64;
            let c = Rational::from_integer((1 + (k + 1) * (2 * attempt + 3) + (k * k * (attempt + 1)) % 11).into());
            crate::linalg::matrix::axpy(&mut y, &c, b);
        }
        let a = g.ad(&y);
        let mut mats = Vec::new();
        let mut p = Matrix::identity(g.real_dim());
        for _ in 0..g.dim() {
            mats.push(&p * &j);
            mats.push(p.clone());
            p = &p * &a;
        }
        let cand = trace_orthogonal(g, &base, &mats);
        if cand.basis().iter().all(|x| g.is_ad_nilpotent(x)) {
            if !is_ideal_in(g, &cand, s) {
                return Err(Error::Verification("nilpotent radical is not an ideal".into()));
            }
            if !cand.contains_subspace(&bracket_space(g, s, &r)) {
                return Err(Error::Verification("nilpotent radical does not contain [s, rad s]".into()));
            }
            return Ok(cand);
        }
    }
    Err(Error::Verification("ad-nilpotent elements of the radical do not form a subspace".into()))
}

/// Null Fitting component `{X ∈ within : (ad f)^N X = 0 for all f ∈ f_space}`.
pub fn nilspace(g: &LieAlgebra, f_space: &RealSubspace, within: &RealSubspace) -> RealSubspace {
    let mut out = within.clone();
    let n = g.real_dim() as u32;
    for b in f_space.basis() {
        let p = g.ad(&b).pow(n);
        out = out.kernel_within(&p);
    }
    out
}

/// Real trace form `tr_R(ad_m x · ad_m y)` of a subalgebra `m` acting on itself,
/// as a Gram matrix on the canonical basis of `m`.
pub fn intrinsic_killing(g: &LieAlgebra, m: &RealSubspace) -> SymmetricForm {
    let basis = m.basis();
    let d = basis.len();
    let ads: Vec<Matrix> = basis
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Rational>> =
                basis.iter().map(|y| m.coordinates(&g.bracket(x, y)).expect("not a subalgebra")).collect();
            Matrix::from_columns(&cols, d)
        })
        .collect();
    let mut gram = Matrix::zeros(d, d);
    for a in 0..d {
        for b in a..d {
            let t = trace_of_product(&ads[a], &ads[b]);
            gram[(a, b)] = t.clone();
            gram[(b, a)] = t;
        }
    }
    SymmetricForm::new(gram).expect("trace form is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::SimpleType;

    fn sl2() -> LieAlgebra {
        LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap()
    }

    fn su2(g: &LieAlgebra) -> RealSubspace {
        let ih = g.i_basis_vector(0);
        let e_minus_f: Element = crate::linalg::matrix::sub_vec(&g.basis_vector(1), &g.basis_vector(2));
        let i_e_plus_f: Element = crate::linalg::matrix::add_vec(&g.i_basis_vector(1), &g.i_basis_vector(2));
        RealSubspace::span(6, &[ih, e_minus_f, i_e_plus_f])
    }

    #[test]
    fn derived_of_borel_like() {
        let g = sl2();
        let s = RealSubspace::span(6, &[g.basis_vector(0), g.basis_vector(1)]);
        assert_eq!(derived(&g, &s), RealSubspace::span(6, &[g.basis_vector(1)]));
        assert!(is_solvable(&g, &s));
        assert_eq!(derived(&g, &g.whole()), g.whole());
        assert!(!is_solvable(&g, &g.whole()));
    }

    #[test]
    fn radicals() {
        let g = sl2();
        let s = RealSubspace::span(6, &[g.basis_vector(0), g.basis_vector(1)]);
        assert_eq!(radical(&g, &s).unwrap(), s);
        assert!(radical(&g, &su2(&g)).unwrap().is_zero());
        assert!(radical(&g, &g.whole()).unwrap().is_zero());
    }

    #[test]
    fn nilpotent_radicals() {
        let g = sl2();
        let borel = g.span_of_basis(&[0, 1]);
        assert_eq!(nilpotent_radical(&g, &borel).unwrap(), g.span_of_basis(&[1]));
        assert!(nilpotent_radical(&g, &su2(&g)).unwrap().is_zero());
        let iwasawa = RealSubspace::span(6, &[g.basis_vector(0), g.basis_vector(2), g.i_basis_vector(2)]);
        assert_eq!(nilpotent_radical(&g, &iwasawa).unwrap(), g.span_of_basis(&[2]));
    }

    #[test]
    fn nilpotent_radical_with_complex_torus_part() {
        // s = C·H ⊕ C·E. The real trace alone does not separate H from iH here.
        let g = sl2();
        let s = g.span_of_basis(&[0, 1]);
        assert_eq!(nilpotent_radical(&g, &s).unwrap().dim(), 2);
    }

    #[test]
    fn normalizers_and_centralizers() {
        let g = sl2();
        let ce = g.span_of_basis(&[1]);
        assert_eq!(normalizer(&g, &ce), g.span_of_basis(&[0, 1]));
        let j0 = g.standard_cartan();
        assert_eq!(centralizer(&g, &j0), j0);
        assert!(normalizer(&g, &RealSubspace::zero(6)).is_full());
    }

    #[test]
    fn intrinsic_killing_of_sl2() {
        let g = sl2();
        let k = intrinsic_killing(&g, &g.whole());
        // Real trace form is 2·Re K, of signature (3, 3).
        assert_eq!(k.signature(), crate::linalg::Signature::new(3, 3, 0));
    }
}
