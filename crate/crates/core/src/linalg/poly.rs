//! Univariate polynomials over `Q(i)` and exact root recovery.

use num_traits::{ToPrimitive, Zero};

use super::scalar::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Coefficients low to high; trailing zeros trimmed by the helpers below.
pub type Poly = Vec<GaussianRational>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(GaussianRational::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &[GaussianRational], z: &GaussianRational) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for c in p.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}

pub fn derivative(p: &[GaussianRational]) -> Poly {
    p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into()))).collect()
}

/// Quotient and remainder; panics on a zero divisor.
pub fn div_rem(a: &[GaussianRational], b: &[GaussianRational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().inv().unwrap();
    let mut q = vec![GaussianRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() * &lead_inv;
        for (k, c) in b.iter().enumerate() {
            let t = &f * c;
            r[shift + k] -= &t;
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn gcd(a: &[GaussianRational], b: &[GaussianRational]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// The product of the distinct monic linear factors of `p`.
pub fn squarefree(p: &[GaussianRational]) -> Poly {
    let g = gcd(p, &derivative(p));
    div_rem(p, &g).0
}

/// All distinct roots of `p`, which must lie in `Q(i)`.
///
/// Roots are located numerically, snapped to nearby Gaussian rationals and
/// then verified exactly; any root that does not verify is an error.
pub fn gaussian_roots(p: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    let sf = squarefree(p);
    let d = sf.len().saturating_sub(1);
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = sf[d].inv().unwrap();
    let monic: Vec<(f64, f64)> = sf.iter().map(|c| (c * &lead).to_f64()).collect();
    let approx = durand_kerner(&monic);
    let mut roots = Vec::with_capacity(d);
    for (re, im) in approx {
        let z = GaussianRational::new(snap(re), snap(im));
        if !eval(&sf, &z).is_zero() {
            return Err(Error::NonRationalSpectrum(format!("root near {re:.6}{im:+.6}i is not Gaussian rational")));
        }
        if !roots.contains(&z) {
            roots.push(z);
        }
    }
    if roots.len() != d {
        return Err(Error::NonRationalSpectrum(format!("found {} of {} roots", roots.len(), d)));
    }
    roots.sort_by(cmp_gaussian);
    Ok(roots)
}

/// Lexicographic order on `(re, im)`.
pub fn cmp_gaussian(a: &GaussianRational, b: &GaussianRational) -> std::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

fn durand_kerner(monic: &[(f64, f64)]) -> Vec<(f64, f64)> {
    type C = (f64, f64);
    let mul = |a: C, b: C| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let sub = |a: C, b: C| (a.0 - b.0, a.1 - b.1);
    let div = |a: C, b: C| {
        let n = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
    };
    let d = monic.len() - 1;
    let ev = |z: C| {
        monic.iter().rev().fold((0.0, 0.0), |acc, &c| {
            let m = mul(acc, z);
            (m.0 + c.0, m.1 + c.1)
        })
    };
    let bound = 1.0 + monic[..d].iter().map(|c| c.0.hypot(c.1)).fold(0.0, f64::max);
    let seed: C = (0.4, 0.9);
    let mut zs: Vec<C> = Vec::with_capacity(d);
    let mut w: C = (1.0, 0.0);
    for _ in 0..d {
        zs.push((w.0 * bound, w.1 * bound));
        w = mul(w, seed);
    }
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..d {
            let mut den: C = (1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den = mul(den, sub(zs[i], zs[j]));
                }
            }
            if den.0 == 0.0 && den.1 == 0.0 {
                den = (1e-12, 0.0);
            }
            let step = div(ev(zs[i]), den);
            zs[i] = sub(zs[i], step);
            delta = delta.max(step.0.hypot(step.1));
        }
        if delta < 1e-14 {
            break;
        }
    }
    zs
}

/// Nearest rational with small denominator, via continued fractions.
fn snap(x: f64) -> Rational {
    const MAX_DEN: i64 = 1_000_000;
    if !x.is_finite() {
        return Rational::zero();
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let Some(ai) = a.to_i64() else { break };
        let h2 = ai.saturating_mul(h1).saturating_add(h0);
        let k2 = ai.saturating_mul(k1).saturating_add(k0);
        if k2 > MAX_DEN || k2 <= 0 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 || frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    Rational::new(h1.into(), k1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};

    fn g(a: Rational, b: Rational) -> GaussianRational {
        GaussianRational::new(a, b)
    }

    fn from_roots(roots: &[GaussianRational]) -> Poly {
        let mut p: Poly = vec![GaussianRational::one()];
        for r in roots {
            let mut next = vec![GaussianRational::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c;
                let t = c * r;
                next[k] -= &t;
            }
            p = next;
        }
        p
    }

    #[test]
    fn recovers_repeated_gaussian_roots() {
        let roots = vec![
            g(int(2), int(0)),
            g(int(2), int(0)),
            g(int(0), int(-2)),
            g(rat(1, 3), rat(5, 2)),
            GaussianRational::zero(),
            GaussianRational::zero(),
        ];
        let p = from_roots(&roots);
        let found = gaussian_roots(&p).unwrap();
        assert_eq!(found.len(), 4);
        for r in &roots {
            assert!(found.contains(r));
        }
    }

    #[test]
    fn irrational_roots_are_rejected() {
        // t^2 - 2
        let p = vec![g(int(-2), int(0)), GaussianRational::zero(), GaussianRational::one()];
        assert!(gaussian_roots(&p).is_err());
    }

    #[test]
    fn division_identity() {
        let a = from_roots(&[g(int(1), int(1)), g(int(3), int(0)), g(int(0), int(1))]);
        let b = from_roots(&[g(int(3), int(0))]);
        let (q, r) = div_rem(&a, &b);
        assert!(r.is_empty());
        assert_eq!(q, from_roots(&[g(int(1), int(1)), g(int(0), int(1))]));
    }
}
