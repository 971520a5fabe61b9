//! Dense exact linear algebra over Q: echelon forms, kernels, solves and a
//! canonical `Subspace` type whose equality is syntactic.

use crate::scalar::Rational;
use num_traits::{One, Zero};

pub type QVec = Vec<Rational>;
pub type QMat = Vec<QVec>;

pub fn zero_vec(n: usize) -> QVec {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVec {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn identity(n: usize) -> QMat {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rational, a: &[Rational]) -> QVec {
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping zeros.
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Matrix (rows) times column vector.
pub fn mat_vec(m: &[QVec], v: &[Rational]) -> QVec {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &[QVec], ncols: usize) -> QMat {
    let mut t = vec![zero_vec(m.len()); ncols];
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                t[j][i] = x.clone();
            }
        }
    }
    t
}

pub fn mat_mul(a: &[QVec], b: &[QVec], bcols: usize) -> QMat {
    a.iter()
        .map(|row| {
            let mut out = zero_vec(bcols);
            for (k, x) in row.iter().enumerate() {
                axpy(&mut out, x, &b[k]);
            }
            out
        })
        .collect()
}

/// Reduced row echelon form in place. Zero rows are dropped; the pivot
/// columns are returned in increasing order.
pub fn rref_in_place(rows: &mut QMat, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let nz: Vec<(usize, Rational)> = (c..ncols)
            .filter(|&k| !rows[r][k].is_zero())
            .map(|k| (k, rows[r][k].clone()))
            .collect();
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (k, x) in &nz {
                rows[i][*k] -= &f * x;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rref(rows: &[QVec], ncols: usize) -> (QMat, Vec<usize>) {
    let mut m = rows.to_vec();
    let p = rref_in_place(&mut m, ncols);
    (m, p)
}

pub fn rank(rows: &[QVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `ncols`.
pub fn nullspace(rows: &[QVec], ncols: usize) -> QMat {
    let (r, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(ncols);
        v[free] = Rational::one();
        for (row, &p) in r.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        out.push(v);
    }
    out
}

/// One solution of `M x = b`, if any.
pub fn solve(rows: &[QVec], ncols: usize, b: &[Rational]) -> Option<QVec> {
    let aug: QMat = rows
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = zero_vec(ncols);
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if invertible.
pub fn inverse(m: &[QVec]) -> Option<QMat> {
    let n = m.len();
    let aug: QMat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vec(n, i));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A linear subspace of Q^n stored as its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: &[QVec]) -> Self {
        let (basis, pivots) = rref(vectors, ambient);
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduced echelon basis (first-nonzero-pivot ordering).
    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the echelon basis.
    pub fn residual(&self, v: &[Rational]) -> QVec {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.residual(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<QVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn sum_all(ambient: usize, parts: &[&Subspace]) -> Subspace {
        let all: QMat = parts.iter().flat_map(|s| s.basis.iter().cloned()).collect();
        Subspace::span(ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let du = self.dim();
        let dw = other.dim();
        // columns u_1..u_du, -w_1..-w_dw
        let rows: QMat = (0..self.ambient)
            .map(|k| {
                let mut r: QVec = self.basis.iter().map(|u| u[k].clone()).collect();
                r.extend(other.basis.iter().map(|w| -w[k].clone()));
                r
            })
            .collect();
        let ker = nullspace(&rows, du + dw);
        let vecs: QMat = ker
            .iter()
            .map(|c| {
                let mut v = zero_vec(self.ambient);
                for (ci, u) in c[..du].iter().zip(&self.basis) {
                    axpy(&mut v, ci, u);
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Image under a linear map given as a closure on vectors.
    pub fn image<F: Fn(&[Rational]) -> QVec>(&self, target_dim: usize, f: F) -> Subspace {
        let vecs: QMat = self.basis.iter().map(|v| f(v)).collect();
        Subspace::span(target_dim, &vecs)
    }

    /// Orthogonal complement for the bilinear form with Gram matrix `gram`.
    pub fn orthocomplement(&self, gram: &[QVec]) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        let rows: QMat = self.basis.iter().map(|v| mat_vec_t(gram, v)).collect();
        Subspace::span(self.ambient, &nullspace(&rows, self.ambient))
    }
}

/// `v^T G` as a row (G symmetric in our uses, but computed generally).
fn mat_vec_t(g: &[QVec], v: &[Rational]) -> QVec {
    let n = g.first().map_or(0, |r| r.len());
    let mut out = zero_vec(n);
    for (vi, row) in v.iter().zip(g) {
        axpy(&mut out, vi, row);
    }
    out
}

/// Kernel of a linear map represented by a matrix acting on columns.
pub fn kernel(m: &[QVec], ncols: usize) -> Subspace {
    Subspace::span(ncols, &nullspace(m, ncols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> QVec {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![v(&[1, 2, 3])];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(is_zero_vec(&mat_vec(&m, x)));
        }
    }

    #[test]
    fn solve_and_inconsistent() {
        let m = vec![v(&[1, 1]), v(&[1, -1])];
        assert_eq!(solve(&m, 2, &v(&[3, 1])).unwrap(), v(&[2, 1]));
        let s = vec![v(&[1, 1]), v(&[2, 2])];
        assert!(solve(&s, 2, &v(&[1, 3])).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![v(&[2, 1, 0]), v(&[0, 1, 4]), v(&[1, 0, 1])];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv, 3), identity(3));
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
    }
}
