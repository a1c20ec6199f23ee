//! Small dense matrices over `Q(i)`.

use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use super::scalar::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<GaussianRational>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, data: vec![GaussianRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn diagonal(d: &[GaussianRational]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m[(i, j)] = GaussianRational::one();
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 0..self.n {
            t += &self[(i, i)];
        }
        t
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, z: &GaussianRational) -> Self {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|x| x * z).collect() }
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    /// Gauss-Jordan inverse over `Q(i)`.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let f = a[(c, c)].inv()?;
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] * &f;
                inv[(c, j)] = &inv[(c, j)] * &f;
            }
            for r in 0..n {
                if r != c && !a[(r, c)].is_zero() {
                    let g = a[(r, c)].clone();
                    for j in 0..n {
                        let x = &a[(c, j)] * &g;
                        a[(r, j)] -= &x;
                        let y = &inv[(c, j)] * &g;
                        inv[(r, j)] -= &y;
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    /// Real `2n × 2n` matrix of this C-linear map in the basis `(e_1, i·e_1, …)`.
    pub fn realify(&self) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let z = &self[(i, j)];
                m[(2 * i, 2 * j)] = z.re.clone();
                m[(2 * i, 2 * j + 1)] = -z.im.clone();
                m[(2 * i + 1, 2 * j)] = z.im.clone();
                m[(2 * i + 1, 2 * j + 1)] = z.re.clone();
            }
        }
        m
    }

    /// Inverse of [`realify`](Self::realify); assumes the input commutes with `J`.
    pub fn from_realified(m: &Matrix) -> Self {
        let n = m.rows() / 2;
        let mut c = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                c[(i, j)] = GaussianRational::new(m[(2 * i, 2 * j)].clone(), m[(2 * i + 1, 2 * j)].clone());
            }
        }
        c
    }

    /// Coefficients `c_0, …, c_n` (low to high) of `det(t·I − A)`, by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Vec<GaussianRational> {
        let n = self.n;
        let mut coeffs = vec![GaussianRational::zero(); n + 1];
        coeffs[n] = GaussianRational::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            let c = am.trace().scale(&Rational::new((-1).into(), (k as i64).into()));
            coeffs[n - k] = c;
        }
        coeffs
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.n + j]
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, o: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        m[(i, j)] += &p;
                    }
                }
            }
        }
        m
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, o: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, o: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|a| -a).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(int(a), int(b))
    }

    #[test]
    fn char_poly_of_rotation() {
        // [[0,-1],[1,0]] has char poly t^2 + 1.
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = g(-1, 0);
        m[(1, 0)] = g(1, 0);
        assert_eq!(m.char_poly(), vec![g(1, 0), g(0, 0), g(1, 0)]);
    }

    #[test]
    fn realify_respects_products() {
        let mut a = ComplexMatrix::zeros(2);
        a[(0, 0)] = g(1, 2);
        a[(0, 1)] = g(0, 1);
        a[(1, 1)] = g(3, -1);
        let mut b = ComplexMatrix::identity(2);
        b[(1, 0)] = g(2, 5);
        assert_eq!((&a * &b).realify(), &a.realify() * &b.realify());
        assert_eq!(ComplexMatrix::from_realified(&a.realify()), a);
    }

    #[test]
    fn inverse_over_gaussian_rationals() {
        let mut a = ComplexMatrix::zeros(2);
        a[(0, 0)] = g(1, 1);
        a[(0, 1)] = g(2, 0);
        a[(1, 0)] = g(0, 1);
        a[(1, 1)] = g(1, 0);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, ComplexMatrix::identity(2));
    }
}
