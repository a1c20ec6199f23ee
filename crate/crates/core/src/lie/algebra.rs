//! Complex reductive Lie algebras `sl_{n_1} × … × sl_{n_k} × C^c` in Chevalley basis.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, GaussianRational, Matrix, Rational, RealSubspace};

/// Realified coordinates `(re_1, im_1, re_2, im_2, …)` over the complex basis.
pub type Element = Vec<Rational>;

/// Simple type `A_rank`, realized as `sl_{rank+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub rank: usize,
}

impl SimpleType {
    pub fn a(rank: usize) -> Self {
        SimpleType { rank }
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        self.rank + 1
    }

    pub fn dim(&self) -> usize {
        let m = self.matrix_size();
        m * m - 1
    }
}

impl FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let rank = t
            .strip_prefix('A')
            .and_then(|r| r.parse::<usize>().ok())
            .filter(|&r| r >= 1)
            .ok_or_else(|| Error::UnsupportedType(t.to_string()))?;
        Ok(SimpleType { rank })
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.rank)
    }
}

/// One simple ideal and the position of its complex basis in the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleIdeal {
    pub kind: SimpleType,
    /// Index of the first complex basis vector of this ideal.
    pub offset: usize,
    /// Global index of the first simple root of this ideal.
    pub simple_root_offset: usize,
}

impl SimpleIdeal {
    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.dim()
    }
}

type Sparse = Vec<(usize, Rational)>;

#[derive(Clone)]
pub struct LieAlgebra {
    ideals: Vec<SimpleIdeal>,
    center_rank: usize,
    dim: usize,
    labels: Vec<String>,
    /// Complex structure constants: `brackets[a][b]` lists `(k, c)` with `[e_a, e_b] = Σ c e_k`.
    brackets: Vec<Vec<Sparse>>,
    ad_real: Vec<Matrix>,
    /// Nonzero entries `(i, j, v)` of each `ad_real` matrix.
    ad_entries: Vec<Vec<(usize, usize, Rational)>>,
    /// Per ideal, Killing form on the ideal's local complex basis.
    killing: Vec<Matrix>,
    /// Per ideal, matrix units `(row, col)` of the local basis (`None` for Cartan elements).
    units: Vec<Vec<Option<(usize, usize)>>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({})", self.describe())
    }
}

impl LieAlgebra {
    /// Builds and validates the algebra. The Jacobi identity is checked on every basis triple.
    pub fn build(types: &[SimpleType], center_rank: usize) -> Result<Self> {
        let mut ideals = Vec::new();
        let mut labels = Vec::new();
        let mut units = Vec::new();
        let mut offset = 0;
        let mut root_offset = 0;
        for (q, t) in types.iter().enumerate() {
            let m = t.matrix_size();
            let mut local = Vec::new();
            for i in 0..t.rank {
                labels.push(format!("g{}.H{}", q + 1, i + 1));
                local.push(None);
            }
            for i in 0..m {
                for j in (i + 1)..m {
                    labels.push(format!("g{}.E{}{}", q + 1, i + 1, j + 1));
                    local.push(Some((i, j)));
                }
            }
            for i in 0..m {
                for j in (i + 1)..m {
                    labels.push(format!("g{}.E{}{}", q + 1, j + 1, i + 1));
                    local.push(Some((j, i)));
                }
            }
            ideals.push(SimpleIdeal { kind: *t, offset, simple_root_offset: root_offset });
            offset += t.dim();
            root_offset += t.rank;
            units.push(local);
        }
        for j in 0..center_rank {
            labels.push(format!("Z{}", j + 1));
        }
        let dim = offset + center_rank;
        let mut g = LieAlgebra {
            ideals,
            center_rank,
            dim,
            labels,
            brackets: vec![vec![Vec::new(); dim]; dim],
            ad_real: Vec::new(),
            ad_entries: Vec::new(),
            killing: Vec::new(),
            units,
        };
        g.fill_brackets();
        g.check_jacobi()?;
        g.fill_ad_and_killing();
        Ok(g)
    }

    pub fn from_names(names: &[impl AsRef<str>], center_rank: usize) -> Result<Self> {
        let types = names.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<SimpleType>>>()?;
        Self::build(&types, center_rank)
    }

    /// `"A1xA2 + C^1"`-style summary.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.ideals.iter().map(|i| i.kind.to_string()).collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        let mut s = parts.join("x");
        if self.center_rank > 0 {
            s.push_str(&format!(" + C^{}", self.center_rank));
        }
        s
    }

    fn fill_brackets(&mut self) {
        for (q, ideal) in self.ideals.iter().enumerate() {
            let r = ideal.range();
            for a in r.clone() {
                let ma = self.local_matrix(q, a - ideal.offset);
                for b in r.clone() {
                    let mb = self.local_matrix(q, b - ideal.offset);
                    let c = ma.commutator(&mb);
                    let coords = self.matrix_to_local(q, &c);
                    self.brackets[a][b] = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, z)| !z.is_zero())
                        .map(|(k, z)| (ideal.offset + k, z.re))
                        .collect();
                }
            }
        }
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut acc = vec![Rational::zero(); n];
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (k, v) in &self.brackets[y][z] {
                            for (l, w) in &self.brackets[x][*k] {
                                acc[*l] += v * w;
                            }
                        }
                    }
                    if acc.iter().any(|v| !v.is_zero()) {
                        return Err(Error::Jacobi((a, b, c)));
                    }
                }
            }
        }
        Ok(())
    }

    fn fill_ad_and_killing(&mut self) {
        let n = self.dim;
        let j = self.complex_structure();
        let mut complex_ads = Vec::with_capacity(n);
        for a in 0..n {
            let mut m = ComplexMatrix::zeros(n);
            for b in 0..n {
                for (k, v) in &self.brackets[a][b] {
                    m[(*k, b)] = GaussianRational::real(v.clone());
                }
            }
            let real = m.realify();
            let imag = &j * &real;
            self.ad_real.push(real);
            self.ad_real.push(imag);
            complex_ads.push(m);
        }
        let rn = 2 * n;
        self.ad_entries = self
            .ad_real
            .iter()
            .map(|m| {
                (0..rn)
                    .flat_map(|i| (0..rn).map(move |j| (i, j)))
                    .filter(|&(i, j)| !m[(i, j)].is_zero())
                    .map(|(i, j)| (i, j, m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        for ideal in &self.ideals {
            let r = ideal.range();
            let mut k = Matrix::zeros(r.len(), r.len());
            for a in r.clone() {
                for b in r.clone() {
                    k[(a - ideal.offset, b - ideal.offset)] = (&complex_ads[a] * &complex_ads[b]).trace().re;
                }
            }
            self.killing.push(k);
        }
    }

    pub fn ideals(&self) -> &[SimpleIdeal] {
        &self.ideals
    }

    pub fn center_rank(&self) -> usize {
        self.center_rank
    }

    /// Complex dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn real_dim(&self) -> usize {
        2 * self.dim
    }

    /// Complex rank (dimension of a Cartan subalgebra).
    pub fn rank(&self) -> usize {
        self.ideals.iter().map(|i| i.kind.rank).sum::<usize>() + self.center_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.ideals.iter().map(|i| i.kind.rank).sum()
    }

    pub fn is_abelian(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Labels of the realified basis: `e`, `i*e` for each complex basis vector `e`.
    pub fn real_labels(&self) -> Vec<String> {
        self.labels.iter().flat_map(|l| [l.clone(), format!("i*{l}")]).collect()
    }

    pub fn center_offset(&self) -> usize {
        self.dim - self.center_rank
    }

    /// Complex index of the Cartan element `H_{i+1}` of ideal `q`.
    pub fn h_index(&self, q: usize, i: usize) -> usize {
        assert!(i < self.ideals[q].kind.rank);
        self.ideals[q].offset + i
    }

    /// Complex index of the matrix unit `E_{a+1,b+1}` of ideal `q`.
    pub fn unit_index(&self, q: usize, a: usize, b: usize) -> usize {
        let local = self.units[q].iter().position(|u| *u == Some((a, b))).expect("not a root vector");
        self.ideals[q].offset + local
    }

    /// Matrix position of a root-vector basis element, if it is one.
    pub fn unit_of(&self, k: usize) -> Option<(usize, usize, usize)> {
        let q = self.ideal_of(k)?;
        self.units[q][k - self.ideals[q].offset].map(|(a, b)| (q, a, b))
    }

    /// Ideal containing complex basis vector `k` (`None` for the center).
    pub fn ideal_of(&self, k: usize) -> Option<usize> {
        self.ideals.iter().position(|i| i.range().contains(&k))
    }

    /// Realified complex basis vector `e_k`.
    pub fn basis_vector(&self, k: usize) -> Element {
        crate::linalg::subspace::unit(self.real_dim(), 2 * k)
    }

    /// Realified `i·e_k`.
    pub fn i_basis_vector(&self, k: usize) -> Element {
        crate::linalg::subspace::unit(self.real_dim(), 2 * k + 1)
    }

    pub fn zero(&self) -> Element {
        vec![Rational::zero(); self.real_dim()]
    }

    /// Element with the given complex coordinates.
    pub fn from_complex(&self, coords: &[GaussianRational]) -> Element {
        assert_eq!(coords.len(), self.dim);
        coords.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
    }

    /// Element `Σ z_k e_k` from sparse complex coordinates.
    pub fn combination(&self, terms: &[(usize, GaussianRational)]) -> Element {
        let mut x = self.zero();
        for (k, z) in terms {
            x[2 * k] += &z.re;
            x[2 * k + 1] += &z.im;
        }
        x
    }

    pub fn to_complex(&self, x: &[Rational]) -> Vec<GaussianRational> {
        x.chunks(2).map(|c| GaussianRational::new(c[0].clone(), c[1].clone())).collect()
    }

    /// The complex structure `J` (multiplication by `i`) on the realified algebra.
    pub fn complex_structure(&self) -> Matrix {
        let mut j = Matrix::zeros(self.real_dim(), self.real_dim());
        for k in 0..self.dim {
            j[(2 * k, 2 * k + 1)] = -Rational::one();
            j[(2 * k + 1, 2 * k)] = Rational::one();
        }
        j
    }

    pub fn mul_i(&self, x: &[Rational]) -> Element {
        x.chunks(2).flat_map(|c| [-c[1].clone(), c[0].clone()]).collect()
    }

    pub fn scale_complex(&self, x: &[Rational], z: &GaussianRational) -> Element {
        x.chunks(2)
            .flat_map(|c| {
                let w = &GaussianRational::new(c[0].clone(), c[1].clone()) * z;
                [w.re, w.im]
            })
            .collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Element {
        let xs = self.to_complex(x);
        let ys = self.to_complex(y);
        let mut out = vec![GaussianRational::zero(); self.dim];
        for (a, xa) in xs.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in ys.iter().enumerate() {
                if yb.is_zero() || self.brackets[a][b].is_empty() {
                    continue;
                }
                let p = xa * yb;
                for (k, c) in &self.brackets[a][b] {
                    out[*k] += &p.scale(c);
                }
            }
        }
        self.from_complex(&out)
    }

    /// Real matrix of `ad x` on the realified algebra.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.real_dim();
        let mut m = Matrix::zeros(n, n);
        for (r, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (i, j, v) in &self.ad_entries[r] {
                    m[(*i, *j)] += c * v;
                }
            }
        }
        m
    }

    /// `ad` of the `r`-th realified basis vector.
    pub fn ad_basis(&self, r: usize) -> &Matrix {
        &self.ad_real[r]
    }

    pub fn is_ad_nilpotent(&self, x: &[Rational]) -> bool {
        let a = self.ad(x);
        let mut p = a.clone();
        let mut k = 1;
        while k < self.real_dim() {
            if p.is_zero() {
                return true;
            }
            p = &p * &a;
            k += 1;
        }
        p.is_zero()
    }

    /// Killing form of simple ideal `q` evaluated on the `q`-components.
    pub fn killing_ideal(&self, q: usize, x: &[Rational], y: &[Rational]) -> GaussianRational {
        let ideal = &self.ideals[q];
        let xs = self.to_complex(x);
        let ys = self.to_complex(y);
        let k = &self.killing[q];
        let mut acc = GaussianRational::zero();
        for a in ideal.range() {
            if xs[a].is_zero() {
                continue;
            }
            for b in ideal.range() {
                let c = &k[(a - ideal.offset, b - ideal.offset)];
                if c.is_zero() || ys[b].is_zero() {
                    continue;
                }
                acc += &(&xs[a] * &ys[b]).scale(c);
            }
        }
        acc
    }

    /// `K(x, y) = tr_C(ad x ad y)`; the center contributes nothing.
    pub fn killing(&self, x: &[Rational], y: &[Rational]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for q in 0..self.ideals.len() {
            acc += &self.killing_ideal(q, x, y);
        }
        acc
    }

    /// Killing matrix of ideal `q` on its local complex basis.
    pub fn killing_matrix(&self, q: usize) -> &Matrix {
        &self.killing[q]
    }

    fn complex_coordinate_subspace(&self, ks: impl IntoIterator<Item = usize>) -> RealSubspace {
        let idx: Vec<usize> = ks.into_iter().flat_map(|k| [2 * k, 2 * k + 1]).collect();
        RealSubspace::coordinate(self.real_dim(), &idx)
    }

    /// Realified span of the given complex basis vectors.
    pub fn span_of_basis(&self, ks: &[usize]) -> RealSubspace {
        self.complex_coordinate_subspace(ks.iter().copied())
    }

    pub fn whole(&self) -> RealSubspace {
        RealSubspace::full(self.real_dim())
    }

    pub fn ideal_subspace(&self, q: usize) -> RealSubspace {
        self.complex_coordinate_subspace(self.ideals[q].range())
    }

    /// `g^der`, the sum of the simple ideals.
    pub fn derived_subspace(&self) -> RealSubspace {
        self.complex_coordinate_subspace(0..self.center_offset())
    }

    pub fn center_subspace(&self) -> RealSubspace {
        self.complex_coordinate_subspace(self.center_offset()..self.dim)
    }

    /// The standard Cartan subalgebra `j_0` (diagonal matrices plus the center).
    pub fn standard_cartan(&self) -> RealSubspace {
        let mut ks = Vec::new();
        for (q, ideal) in self.ideals.iter().enumerate() {
            ks.extend((0..ideal.kind.rank).map(|i| self.h_index(q, i)));
        }
        ks.extend(self.center_offset()..self.dim);
        self.complex_coordinate_subspace(ks)
    }

    fn local_matrix(&self, q: usize, local: usize) -> ComplexMatrix {
        let m = self.ideals[q].kind.matrix_size();
        match self.units[q][local] {
            Some((a, b)) => ComplexMatrix::unit(m, a, b),
            None => {
                let mut h = ComplexMatrix::zeros(m);
                h[(local, local)] = GaussianRational::one();
                h[(local + 1, local + 1)] = -GaussianRational::one();
                h
            }
        }
    }

    fn matrix_to_local(&self, q: usize, mat: &ComplexMatrix) -> Vec<GaussianRational> {
        let ideal = &self.ideals[q];
        let mut out = vec![GaussianRational::zero(); ideal.dim()];
        let mut cumulative = GaussianRational::zero();
        for i in 0..ideal.kind.rank {
            cumulative += &mat[(i, i)];
            out[i] = cumulative.clone();
        }
        for (local, u) in self.units[q].iter().enumerate() {
            if let Some((a, b)) = u {
                out[local] = mat[(*a, *b)].clone();
            }
        }
        out
    }

    /// Component of `x` in ideal `q` as a traceless complex matrix.
    pub fn to_matrix(&self, q: usize, x: &[Rational]) -> ComplexMatrix {
        let ideal = &self.ideals[q];
        let m = ideal.kind.matrix_size();
        let xs = self.to_complex(x);
        let mut out = ComplexMatrix::zeros(m);
        for k in ideal.range() {
            if xs[k].is_zero() {
                continue;
            }
            out = &out + &self.local_matrix(q, k - ideal.offset).scale(&xs[k]);
        }
        out
    }

    /// Element of ideal `q` represented by a traceless matrix.
    pub fn from_matrix(&self, q: usize, mat: &ComplexMatrix) -> Element {
        assert!(mat.trace().is_zero(), "matrix is not traceless");
        let ideal = &self.ideals[q];
        let local = self.matrix_to_local(q, mat);
        let mut full = vec![GaussianRational::zero(); self.dim];
        for (k, z) in local.into_iter().enumerate() {
            full[ideal.offset + k] = z;
        }
        self.from_complex(&full)
    }

    /// Projection of `x` onto ideal `q` (zero elsewhere).
    pub fn ideal_component(&self, q: usize, x: &[Rational]) -> Element {
        let r = self.ideals[q].range();
        x.iter().enumerate().map(|(i, v)| if r.contains(&(i / 2)) { v.clone() } else { Rational::zero() }).collect()
    }

    /// Projection of `x` onto the center.
    pub fn center_component(&self, x: &[Rational]) -> Element {
        let c = self.center_offset();
        x.iter().enumerate().map(|(i, v)| if i / 2 >= c { v.clone() } else { Rational::zero() }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn sl2() -> LieAlgebra {
        LieAlgebra::build(&[SimpleType::a(1)], 0).unwrap()
    }

    #[test]
    fn sl2_chevalley_relations() {
        let g = sl2();
        assert_eq!(g.labels(), &["g1.H1", "g1.E12", "g1.E21"]);
        let (h, e, f) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        let two = GaussianRational::from_int(2);
        assert_eq!(g.bracket(&h, &e), g.scale_complex(&e, &two));
        assert_eq!(g.bracket(&h, &f), g.scale_complex(&f, &-two));
        assert_eq!(g.bracket(&e, &f), h);
        assert_eq!(g.bracket(&e, &e), g.zero());
    }

    #[test]
    fn ad_e_cubed_vanishes() {
        let g = sl2();
        let ad = g.ad(&g.basis_vector(1));
        assert!(!(&ad * &ad).is_zero());
        assert!(ad.pow(3).is_zero());
        assert!(g.is_ad_nilpotent(&g.basis_vector(1)));
        assert!(!g.is_ad_nilpotent(&g.basis_vector(0)));
        assert!(g.is_ad_nilpotent(&g.zero()));
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!(matches!("B2".parse::<SimpleType>(), Err(Error::UnsupportedType(_))));
        assert!(matches!("A0".parse::<SimpleType>(), Err(Error::UnsupportedType(_))));
        assert_eq!("A2".parse::<SimpleType>().unwrap(), SimpleType::a(2));
    }

    #[test]
    fn abelian_and_products() {
        let c2 = LieAlgebra::build(&[], 2).unwrap();
        assert_eq!(c2.dim(), 2);
        assert_eq!(c2.bracket(&c2.basis_vector(0), &c2.basis_vector(1)), c2.zero());
        let g = LieAlgebra::build(&[SimpleType::a(1), SimpleType::a(1)], 0).unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(g.bracket(&g.basis_vector(1), &g.basis_vector(5)), g.zero());
    }

    #[test]
    fn matrix_roundtrip() {
        let g = LieAlgebra::build(&[SimpleType::a(2)], 1).unwrap();
        let x: Element = (0..g.real_dim()).map(|i| int(i as i64 % 5 - 2)).collect();
        let x = g.ideal_component(0, &x);
        assert_eq!(g.from_matrix(0, &g.to_matrix(0, &x)), x);
    }

    #[test]
    fn bracket_matches_matrix_commutator() {
        let g = LieAlgebra::build(&[SimpleType::a(2)], 0).unwrap();
        let x: Element = (0..16).map(|i| int((i * 7 % 5) as i64 - 2)).collect();
        let y: Element = (0..16).map(|i| int((i * 3 % 4) as i64 - 1)).collect();
        let mx = g.to_matrix(0, &x);
        let my = g.to_matrix(0, &y);
        assert_eq!(g.to_matrix(0, &g.bracket(&x, &y)), mx.commutator(&my));
    }
}
