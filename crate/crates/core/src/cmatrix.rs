//! Square matrices over the Gaussian rationals.
//!
//! Real coordinates of gl(N, C) are laid out as `2 * (r * N + c) + part`
//! with `part = 0` for the real and `1` for the imaginary component.

use crate::linalg::QVec;
use crate::scalar::{g_is_zero, g_one, g_zero, Gaussian, Rational};
use num_complex::Complex;
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CMatrix {
    n: usize,
    data: Vec<Gaussian>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![g_zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = g_one();
        }
        m
    }

    /// `z * E_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize, z: Gaussian) -> Self {
        let mut m = Self::zeros(n);
        m.data[i * n + j] = z;
        m
    }

    pub fn from_entries(n: usize, entries: &[(usize, usize, Gaussian)]) -> Self {
        let mut m = Self::zeros(n);
        for (i, j, z) in entries {
            m.data[i * n + j] = &m.data[i * n + j] + z;
        }
        m
    }

    pub fn diag(entries: &[Gaussian]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, z) in entries.iter().enumerate() {
            m.data[i * n + i] = z.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Gaussian {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Gaussian) {
        self.data[i * self.n + j] = z;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(g_is_zero)
    }

    pub fn scale(&self, z: &Gaussian) -> Self {
        CMatrix { n: self.n, data: self.data.iter().map(|x| x * z).collect() }
    }

    pub fn scale_real(&self, q: &Rational) -> Self {
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .map(|x| Complex::new(&x.re * q, &x.im * q))
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        CMatrix { n: self.n, data: self.data.iter().map(|x| x.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> Gaussian {
        (0..self.n).fold(g_zero(), |acc, i| acc + &self.data[i * self.n + i])
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `g * self * g^{-1}` given `g` and its inverse.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        &(g * self) * g_inv
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let n = a.n + b.n;
        let mut m = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                m.data[i * n + j] = a.get(i, j).clone();
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m.data[(a.n + i) * n + a.n + j] = b.get(i, j).clone();
            }
        }
        m
    }

    /// Top-left `k x k` and bottom-right blocks of a block-diagonal matrix.
    pub fn split_blocks(&self, k: usize) -> (Self, Self) {
        let n = self.n;
        let mut a = Self::zeros(k);
        let mut b = Self::zeros(n - k);
        for i in 0..n {
            for j in 0..n {
                if i < k && j < k {
                    a.set(i, j, self.get(i, j).clone());
                } else if i >= k && j >= k {
                    b.set(i - k, j - k, self.get(i, j).clone());
                }
            }
        }
        (a, b)
    }

    pub fn real_dim(&self) -> usize {
        2 * self.n * self.n
    }

    pub fn to_real_vec(&self) -> QVec {
        let mut v = Vec::with_capacity(self.real_dim());
        for z in &self.data {
            v.push(z.re.clone());
            v.push(z.im.clone());
        }
        v
    }

    /// Nonzero real coordinates as `(index, value)`.
    pub fn to_sparse(&self) -> Vec<(usize, Rational)> {
        let mut out = Vec::new();
        for (k, z) in self.data.iter().enumerate() {
            if !z.re.is_zero() {
                out.push((2 * k, z.re.clone()));
            }
            if !z.im.is_zero() {
                out.push((2 * k + 1, z.im.clone()));
            }
        }
        out
    }

    pub fn from_real_vec(n: usize, v: &[Rational]) -> Self {
        let data = (0..n * n).map(|k| Complex::new(v[2 * k].clone(), v[2 * k + 1].clone())).collect();
        CMatrix { n, data }
    }

    /// Real basis element number `k` of gl(N, C).
    pub fn real_basis(n: usize, k: usize) -> Self {
        let e = k / 2;
        let z = if k % 2 == 0 { g_one() } else { Complex::new(Rational::zero(), num_traits::One::one()) };
        Self::unit(n, e / n, e % n, z)
    }

    /// Row echelon reduction over Q(i); returns (reduced rows, rank).
    fn eliminate(rows: &mut [Vec<Gaussian>], ncols: usize) -> usize {
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !g_is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv();
            for x in rows[r].iter_mut() {
                if !g_is_zero(x) {
                    *x = &*x * &inv;
                }
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || g_is_zero(&row[c]) {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !g_is_zero(y) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Rank over C.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut rows: Vec<Vec<Gaussian>> =
            (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        Self::eliminate(&mut rows, n)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut rows: Vec<Vec<Gaussian>> = (0..n)
            .map(|i| {
                let mut r = self.data[i * n..(i + 1) * n].to_vec();
                r.extend((0..n).map(|j| if i == j { g_one() } else { g_zero() }));
                r
            })
            .collect();
        if Self::eliminate(&mut rows, n) < n {
            return None;
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for j in 0..n {
                m.data[i * n + j] = row[n + j].clone();
            }
        }
        Some(m)
    }

    /// Largest row sum of `|re| + |im|`, a bound on every eigenvalue modulus.
    pub fn gershgorin_bound(&self) -> Rational {
        use num_traits::Signed;
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(Rational::zero(), |acc, j| {
                    let z = self.get(i, j);
                    acc + z.re.abs() + z.im.abs()
                })
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Common denominator of all entries.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::from(1);
        for z in &self.data {
            l = l.lcm(z.re.denom());
            l = l.lcm(z.im.denom());
        }
        l
    }

    /// The spectrum as a multiset of rationals, or `None` if some
    /// eigenvalue is not rational.
    pub fn rational_spectrum(&self) -> Option<Vec<(Rational, usize)>> {
        use num_traits::ToPrimitive;
        let l = self.denominator_lcm();
        let lq = Rational::from_integer(l.clone());
        let scaled = self.scale_real(&lq);
        // eigenvalues of a Gaussian-integer matrix that are rational are
        // integers bounded by the Gershgorin radius
        let bound = scaled.gershgorin_bound().ceil().to_integer().to_i64()?;
        let mut found = Vec::new();
        let mut total = 0;
        for t in -bound..=bound {
            let shifted = &scaled - &CMatrix::identity(self.n).scale_real(&Rational::from_integer(t.into()));
            let k = self.n - shifted.rank();
            if k > 0 {
                found.push((Rational::new(t.into(), l.clone()), k));
                total += k;
                if total == self.n {
                    break;
                }
            }
        }
        (total == self.n).then_some(found)
    }
}

impl<'a> Mul for &'a CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &'a CMatrix) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if g_is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !g_is_zero(b) {
                        out.data[i * n + j] = &out.data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add for &'a CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &'a CMatrix) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub for &'a CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &'a CMatrix) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Neg for &'a CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix { n: self.n, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, ratio};

    #[test]
    fn real_vec_roundtrip() {
        let m = CMatrix::from_entries(2, &[(0, 1, gauss(1, -2)), (1, 0, gauss(0, 3))]);
        assert_eq!(CMatrix::from_real_vec(2, &m.to_real_vec()), m);
    }

    #[test]
    fn inverse_gaussian() {
        let m = CMatrix::from_entries(2, &[(0, 0, gauss(1, 1)), (0, 1, gauss(2, 0)), (1, 1, gauss(0, 1))]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, CMatrix::identity(2));
    }

    #[test]
    fn spectrum_of_rational_hermitian() {
        // [[0, 1/2], [1/2, 0]] has eigenvalues +-1/2
        let h = CMatrix::from_entries(
            2,
            &[(0, 1, crate::scalar::g_real(ratio(1, 2))), (1, 0, crate::scalar::g_real(ratio(1, 2)))],
        );
        let s = h.rational_spectrum().unwrap();
        assert_eq!(s, vec![(ratio(-1, 2), 1), (ratio(1, 2), 1)]);
        // [[0, 1], [2, 0]] has eigenvalues +-sqrt 2
        let r = CMatrix::from_entries(2, &[(0, 1, gauss(1, 0)), (1, 0, gauss(2, 0))]);
        assert!(r.rational_spectrum().is_none());
    }
}
