//! Exact matrix models of the classical real simple Lie algebras.
//!
//! An algebra is the real span of a list of Gaussian matrices. Elements are
//! coordinate vectors in that basis; brackets go through sparse structure
//! constants, and the Killing form is `tr(ad x ad y)` computed from them.
//! The Cartan involution is always `X -> -X*` restricted to g.

use crate::cmatrix::CMatrix;
use crate::linalg::{
    axpy, identity, is_zero_vec, kernel, nullspace, rref_in_place, solve, zero_vec, QMat, QVec,
    Subspace,
};
use crate::scalar::{g_i, g_one, g_real, gauss, rat, Gaussian, Rational};
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatlieError {
    #[error("{0} is a table-only form with no matrix model; its data comes from the root-data catalog")]
    TableOnly(String),
    #[error("no matrix model for {0:?}")]
    Unsupported(String),
    #[error("parameters out of range for {label}: {reason}")]
    Params { label: String, reason: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type SparseVec = Vec<(usize, Rational)>;

/// Classical families with a matrix model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SlR(usize),
    SlC(usize),
    SuPQ(usize, usize),
    /// su*(2n), stored by n.
    SuStar(usize),
    SoPQ(usize, usize),
    SoC(usize),
    /// so*(2n), stored by n.
    SoStar(usize),
    SpR(usize),
    SpC(usize),
    SpPQ(usize, usize),
}

const EXCEPTIONAL: [&str; 5] = ["e6", "e7", "e8", "f4", "g2"];

impl Family {
    /// Parses a literal label such as `sp(2,1)`, `su*(6)` or `so(5,C)`.
    pub fn parse(label: &str) -> Result<Family, MatlieError> {
        let s: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        let unsupported = || MatlieError::Unsupported(label.to_string());
        let open = s.find('(').ok_or_else(unsupported)?;
        if !s.ends_with(')') {
            return Err(unsupported());
        }
        let name = &s[..open];
        let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').collect();
        if EXCEPTIONAL.contains(&name) {
            return Err(MatlieError::TableOnly(label.to_string()));
        }
        let int = |a: &str| a.parse::<usize>().map_err(|_| unsupported());
        let fam = match (name, args.as_slice()) {
            ("sl", [n, "R"]) => Family::SlR(int(n)?),
            ("sl", [n, "C"]) => Family::SlC(int(n)?),
            ("su", [p, q]) => Family::SuPQ(int(p)?, int(q)?),
            ("su*", [m]) => {
                let m = int(m)?;
                if m % 2 != 0 {
                    return Err(unsupported());
                }
                Family::SuStar(m / 2)
            }
            ("so", [n, "C"]) => Family::SoC(int(n)?),
            ("so", [p, q]) => Family::SoPQ(int(p)?, int(q)?),
            ("so*", [m]) => {
                let m = int(m)?;
                if m % 2 != 0 {
                    return Err(unsupported());
                }
                Family::SoStar(m / 2)
            }
            ("sp", [n, "R"]) => Family::SpR(int(n)?),
            ("sp", [n, "C"]) => Family::SpC(int(n)?),
            ("sp", [p, q]) => Family::SpPQ(int(p)?, int(q)?),
            _ => return Err(unsupported()),
        };
        fam.check_range()?;
        Ok(fam)
    }

    fn check_range(&self) -> Result<(), MatlieError> {
        let bad = |reason: &str| {
            Err(MatlieError::Params { label: self.to_string(), reason: reason.to_string() })
        };
        match *self {
            Family::SlR(n) | Family::SlC(n) if n < 2 => bad("n >= 2 required"),
            Family::SuPQ(p, q) | Family::SpPQ(p, q) if p == 0 || q == 0 => {
                bad("both signature parameters must be positive (noncompact form)")
            }
            Family::SuPQ(p, q) if p + q < 2 => bad("p + q >= 2 required"),
            Family::SuStar(n) if n < 2 => bad("su*(2n) needs n >= 2"),
            Family::SoPQ(p, q) if p == 0 || q == 0 => bad("both signature parameters must be positive"),
            Family::SoPQ(p, q) if p + q < 3 || (p, q) == (2, 2) => bad("so(p,q) is not simple here"),
            Family::SoC(n) if n < 3 || n == 4 => bad("so(n,C) is not simple here"),
            Family::SoStar(n) if n < 3 => bad("so*(2n) needs n >= 3"),
            Family::SpR(n) | Family::SpC(n) if n < 1 => bad("n >= 1 required"),
            _ => Ok(()),
        }
    }

    pub fn ambient_size(&self) -> usize {
        match *self {
            Family::SlR(n) | Family::SlC(n) | Family::SoC(n) => n,
            Family::SuPQ(p, q) | Family::SoPQ(p, q) => p + q,
            Family::SuStar(n) | Family::SoStar(n) | Family::SpR(n) | Family::SpC(n) => 2 * n,
            Family::SpPQ(p, q) => 2 * (p + q),
        }
    }

    /// Rank of g_C's simple factor.
    pub fn complex_rank(&self) -> usize {
        match *self {
            Family::SlR(n) | Family::SlC(n) => n - 1,
            Family::SuPQ(p, q) => p + q - 1,
            Family::SuStar(n) => 2 * n - 1,
            Family::SoPQ(p, q) => (p + q) / 2,
            Family::SoC(n) => n / 2,
            Family::SoStar(n) | Family::SpR(n) | Family::SpC(n) => n,
            Family::SpPQ(p, q) => p + q,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Family::SlC(_) | Family::SoC(_) | Family::SpC(_))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::SlR(n) => write!(f, "sl({n},R)"),
            Family::SlC(n) => write!(f, "sl({n},C)"),
            Family::SuPQ(p, q) => write!(f, "su({p},{q})"),
            Family::SuStar(n) => write!(f, "su*({})", 2 * n),
            Family::SoPQ(p, q) => write!(f, "so({p},{q})"),
            Family::SoC(n) => write!(f, "so({n},C)"),
            Family::SoStar(n) => write!(f, "so*({})", 2 * n),
            Family::SpR(n) => write!(f, "sp({n},R)"),
            Family::SpC(n) => write!(f, "sp({n},C)"),
            Family::SpPQ(p, q) => write!(f, "sp({p},{q})"),
        }
    }
}

/// Real-linear constraint: the listed matrices must all vanish.
type Constraint = Box<dyn Fn(&CMatrix) -> Vec<CMatrix>>;

fn sign_diag(p: usize, q: usize) -> CMatrix {
    let d: Vec<Gaussian> = (0..p + q).map(|i| if i < p { g_one() } else { -g_one() }).collect();
    CMatrix::diag(&d)
}

/// `[[0, s I], [-s I, 0]]` of size 2n.
fn symplectic_j(n: usize, s: i64) -> CMatrix {
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, n + i, gauss(s, 0)));
        e.push((n + i, i, gauss(-s, 0)));
    }
    CMatrix::from_entries(2 * n, &e)
}

fn real_c() -> Constraint {
    Box::new(|x: &CMatrix| vec![x - &x.conj()])
}

fn traceless_c() -> Constraint {
    Box::new(|x: &CMatrix| vec![CMatrix::diag(&[x.trace()])])
}

/// `X* F + F X = 0`.
fn hermitian_form_c(f: CMatrix) -> Constraint {
    Box::new(move |x: &CMatrix| vec![&(&x.adjoint() * &f) + &(&f * x)])
}

/// `X^T F + F X = 0`.
fn bilinear_form_c(f: CMatrix) -> Constraint {
    Box::new(move |x: &CMatrix| vec![&(&x.transpose() * &f) + &(&f * x)])
}

/// `X J = J conj(X)`.
fn quaternionic_c(j: CMatrix) -> Constraint {
    Box::new(move |x: &CMatrix| vec![&(x * &j) - &(&j * &x.conj())])
}

fn offdiag_pair(n: usize, i: usize, j: usize) -> CMatrix {
    CMatrix::from_entries(n, &[(i, j, g_one()), (j, i, g_one())])
}

fn family_model(fam: Family) -> (Vec<Constraint>, Vec<CMatrix>) {
    let n = fam.ambient_size();
    match fam {
        Family::SlR(m) | Family::SlC(m) => {
            let a = (0..m - 1)
                .map(|i| CMatrix::from_entries(m, &[(i, i, g_one()), (i + 1, i + 1, -g_one())]))
                .collect();
            let mut c = vec![traceless_c()];
            if matches!(fam, Family::SlR(_)) {
                c.push(real_c());
            }
            (c, a)
        }
        Family::SuPQ(p, q) => {
            let a = (0..p.min(q)).map(|i| offdiag_pair(n, i, p + i)).collect();
            (vec![hermitian_form_c(sign_diag(p, q)), traceless_c()], a)
        }
        Family::SoPQ(p, q) => {
            let a = (0..p.min(q)).map(|i| offdiag_pair(n, i, p + i)).collect();
            (vec![real_c(), bilinear_form_c(sign_diag(p, q))], a)
        }
        Family::SuStar(m) => {
            // diag(d, d) with d traceless
            let a = (0..m - 1)
                .map(|i| {
                    CMatrix::from_entries(
                        n,
                        &[
                            (i, i, g_one()),
                            (i + 1, i + 1, -g_one()),
                            (m + i, m + i, g_one()),
                            (m + i + 1, m + i + 1, -g_one()),
                        ],
                    )
                })
                .collect();
            (vec![quaternionic_c(symplectic_j(m, -1)), traceless_c()], a)
        }
        Family::SoStar(m) => {
            // [[0, Z], [-Z, 0]] with Z the real 2x2 rotation generator in block k
            let a = (0..m / 2)
                .map(|k| {
                    let (r, s) = (2 * k, 2 * k + 1);
                    CMatrix::from_entries(
                        n,
                        &[
                            (r, m + s, g_one()),
                            (s, m + r, -g_one()),
                            (m + r, s, -g_one()),
                            (m + s, r, g_one()),
                        ],
                    )
                })
                .collect();
            (
                vec![quaternionic_c(symplectic_j(m, 1)), hermitian_form_c(sign_diag(m, m))],
                a,
            )
        }
        Family::SoC(m) => {
            let a = (0..m / 2)
                .map(|k| {
                    CMatrix::from_entries(m, &[(2 * k, 2 * k + 1, g_i()), (2 * k + 1, 2 * k, -g_i())])
                })
                .collect();
            (vec![bilinear_form_c(CMatrix::identity(m))], a)
        }
        Family::SpR(m) | Family::SpC(m) => {
            let a = (0..m)
                .map(|i| CMatrix::from_entries(n, &[(i, i, g_one()), (m + i, m + i, -g_one())]))
                .collect();
            let mut c = vec![bilinear_form_c(symplectic_j(m, 1))];
            if matches!(fam, Family::SpR(_)) {
                c.push(real_c());
            }
            (c, a)
        }
        Family::SpPQ(p, q) => {
            let m = p + q;
            let a = (0..p.min(q))
                .map(|i| {
                    CMatrix::from_entries(
                        n,
                        &[
                            (i, p + i, g_one()),
                            (p + i, i, g_one()),
                            (m + i, m + p + i, g_one()),
                            (m + p + i, m + i, g_one()),
                        ],
                    )
                })
                .collect();
            let k = CMatrix::block_diag(&sign_diag(p, q), &sign_diag(p, q));
            (vec![quaternionic_c(symplectic_j(m, -1)), hermitian_form_c(k)], a)
        }
    }
}

/// Real solution space of the constraints inside gl(n, C).
fn solve_constraints(n: usize, cons: &[Constraint]) -> Vec<CMatrix> {
    let dim = 2 * n * n;
    let cols: Vec<QVec> = (0..dim)
        .map(|k| {
            let e = CMatrix::real_basis(n, k);
            cons.iter().flat_map(|c| c(&e)).flat_map(|m| m.to_real_vec()).collect()
        })
        .collect();
    let nrows = cols.first().map_or(0, |c| c.len());
    let rows: QMat = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    nullspace(&rows, dim).into_iter().map(|v| CMatrix::from_real_vec(n, &v)).collect()
}

/// Coordinates with respect to a fixed list of independent real vectors.
#[derive(Clone, Debug)]
struct CoordMap {
    pivots: Vec<usize>,
    transform: QMat,
}

impl CoordMap {
    fn new(vectors: &[QVec]) -> Result<Self, MatlieError> {
        let len = vectors.first().map_or(0, |v| v.len());
        let d = vectors.len();
        let mut rows: QMat = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.extend((0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let piv = rref_in_place(&mut rows, len + d);
        if piv.len() < d || piv.iter().any(|&p| p >= len) {
            return Err(MatlieError::Inconsistent("basis matrices are linearly dependent".into()));
        }
        Ok(CoordMap { pivots: piv, transform: rows.into_iter().map(|r| r[len..].to_vec()).collect() })
    }

    fn coords(&self, v: &[Rational]) -> QVec {
        let d = self.transform.len();
        let mut c = zero_vec(d);
        for (row, &p) in self.transform.iter().zip(&self.pivots) {
            axpy(&mut c, &v[p], row);
        }
        c
    }
}

/// A real Lie algebra realized inside gl(N, C).
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub label: String,
    ambient_size: usize,
    basis: Vec<CMatrix>,
    basis_sparse: Vec<SparseVec>,
    coord: CoordMap,
    /// `structure[i][j]` = coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<SparseVec>>,
    theta: QMat,
    split_a: Vec<QVec>,
    complex_structure: Option<QMat>,
    killing: QMat,
    /// Dimensions of the two factors when built by `product_algebra`.
    factors: Option<(usize, usize)>,
}

fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn sparse_axpy(acc: &mut [Rational], c: &Rational, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        acc[*i] += c * x;
    }
}

impl MatrixLieAlgebra {
    /// Assembles an algebra from a basis; structure constants are
    /// computed from matrix commutators unless supplied.
    fn assemble(
        label: String,
        ambient_size: usize,
        basis: Vec<CMatrix>,
        theta: QMat,
        split_a: Vec<QVec>,
        complex_structure: Option<QMat>,
        structure: Option<Vec<Vec<SparseVec>>>,
        factors: Option<(usize, usize)>,
    ) -> Result<Self, MatlieError> {
        let real: Vec<QVec> = basis.iter().map(|b| b.to_real_vec()).collect();
        let coord = CoordMap::new(&real)?;
        let basis_sparse = basis.iter().map(|b| b.to_sparse()).collect();
        let d = basis.len();
        let mut alg = MatrixLieAlgebra {
            label,
            ambient_size,
            basis,
            basis_sparse,
            coord,
            structure: Vec::new(),
            theta,
            split_a,
            complex_structure,
            killing: Vec::new(),
            factors,
        };
        alg.structure = match structure {
            Some(s) => s,
            None => {
                let mut s = vec![vec![SparseVec::new(); d]; d];
                for i in 0..d {
                    for j in i + 1..d {
                        let c = alg.basis[i].commutator(&alg.basis[j]);
                        let v = alg.coords_of(&c).ok_or_else(|| {
                            MatlieError::Inconsistent(format!(
                                "{}: basis not closed under bracket",
                                alg.label
                            ))
                        })?;
                        let sv = to_sparse(&v);
                        s[j][i] = sv.iter().map(|(k, x)| (*k, -x.clone())).collect();
                        s[i][j] = sv;
                    }
                }
                s
            }
        };
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient_size
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn theta(&self) -> &QMat {
        &self.theta
    }

    pub fn split_a(&self) -> &[QVec] {
        &self.split_a
    }

    pub fn complex_structure(&self) -> Option<&QMat> {
        self.complex_structure.as_ref()
    }

    pub fn killing_matrix(&self) -> &QMat {
        &self.killing
    }

    pub fn factors(&self) -> Option<(usize, usize)> {
        self.factors
    }

    pub fn unit(&self, i: usize) -> QVec {
        crate::linalg::unit_vec(self.dim(), i)
    }

    /// Matrix of an element.
    pub fn element_matrix(&self, x: &[Rational]) -> CMatrix {
        let n = self.ambient_size;
        let mut v = zero_vec(2 * n * n);
        for (xi, b) in x.iter().zip(&self.basis_sparse) {
            sparse_axpy(&mut v, xi, b);
        }
        CMatrix::from_real_vec(n, &v)
    }

    /// Coordinates of a matrix, or `None` if it is not in the algebra.
    pub fn coords_of(&self, m: &CMatrix) -> Option<QVec> {
        let v = m.to_real_vec();
        let c = self.coord.coords(&v);
        let mut back = zero_vec(v.len());
        for (ci, b) in c.iter().zip(&self.basis_sparse) {
            sparse_axpy(&mut back, ci, b);
        }
        (back == v).then_some(c)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> QVec {
        let d = self.dim();
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.structure[i][j].is_empty() {
                    continue;
                }
                sparse_axpy(&mut out, &(xi * yj), &self.structure[i][j]);
            }
        }
        out
    }

    /// Matrix of `ad(x)` acting on coordinate columns.
    pub fn ad_matrix(&self, x: &[Rational]) -> QMat {
        let d = self.dim();
        let mut m = vec![zero_vec(d); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.structure[i][j] {
                    m[*k][j] += xi * c;
                }
            }
        }
        m
    }

    fn compute_killing(&self) -> QMat {
        let d = self.dim();
        // ad_i[k][l] = c_{il}^k ; tr(ad_i ad_j) = sum_{k,l} c_{il}^k c_{jk}^l
        let mut g = vec![zero_vec(d); d];
        for i in 0..d {
            for j in i..d {
                let mut s = Rational::zero();
                for l in 0..d {
                    for (k, c) in &self.structure[i][l] {
                        for (l2, c2) in &self.structure[j][*k] {
                            if *l2 == l {
                                s += c * c2;
                            }
                        }
                    }
                }
                g[i][j] = s.clone();
                g[j][i] = s;
            }
        }
        g
    }

    pub fn killing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        crate::linalg::dot(x, &crate::linalg::mat_vec(&self.killing, y))
    }

    pub fn apply_theta(&self, x: &[Rational]) -> QVec {
        crate::linalg::mat_vec(&self.theta, x)
    }

    pub fn apply_j(&self, x: &[Rational]) -> Option<QVec> {
        self.complex_structure.as_ref().map(|j| crate::linalg::mat_vec(j, x))
    }

    /// +1 eigenspace of theta.
    pub fn k(&self) -> Subspace {
        self.theta_eigenspace(1)
    }

    /// -1 eigenspace of theta.
    pub fn p(&self) -> Subspace {
        self.theta_eigenspace(-1)
    }

    fn theta_eigenspace(&self, s: i64) -> Subspace {
        let d = self.dim();
        let m: QMat = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let mut v = self.theta[r][c].clone();
                        if r == c {
                            v -= rat(s);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        kernel(&m, d)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn span(&self, vs: &[QVec]) -> Subspace {
        Subspace::span(self.dim(), vs)
    }

    /// Z_g(x): the kernel of ad(x).
    pub fn centralizer(&self, x: &[Rational]) -> Subspace {
        kernel(&self.ad_matrix(x), self.dim())
    }

    /// Common centralizer of a subspace.
    pub fn centralizer_of(&self, w: &Subspace) -> Subspace {
        let d = self.dim();
        let mut rows = QMat::new();
        for v in w.basis() {
            rows.extend(self.ad_matrix(v));
        }
        if rows.is_empty() {
            return self.full();
        }
        kernel(&rows, d)
    }

    /// Killing-orthogonal complement.
    pub fn orthocomplement(&self, w: &Subspace) -> Subspace {
        w.orthocomplement(&self.killing)
    }

    /// span{[x, w] : w in W}.
    pub fn bracket_image(&self, x: &[Rational], w: &Subspace) -> Subspace {
        let vs: QMat = w.basis().iter().map(|v| self.bracket(x, v)).collect();
        self.span(&vs)
    }

    /// span{[u, v] : u in U, v in V}.
    pub fn bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vs = QMat::new();
        for a in u.basis() {
            for b in v.basis() {
                vs.push(self.bracket(a, b));
            }
        }
        self.span(&vs)
    }

    pub fn is_subalgebra(&self, w: &Subspace) -> bool {
        w.contains_subspace(&self.bracket_spaces(w, w))
    }

    /// Exact Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let bij = self.bracket(&self.unit(i), &self.unit(j));
                for k in j + 1..d {
                    let ek = self.unit(k);
                    let mut s = self.bracket(&bij, &ek);
                    let bjk = self.bracket(&self.unit(j), &ek);
                    let t = self.bracket(&bjk, &self.unit(i));
                    let bki = self.bracket(&ek, &self.unit(i));
                    let u = self.bracket(&bki, &self.unit(j));
                    for (a, (b, c)) in s.iter_mut().zip(t.iter().zip(&u)) {
                        *a += b + c;
                    }
                    if !is_zero_vec(&s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True if the linear map `m` (on coordinates) preserves brackets.
    pub fn is_automorphism(&self, m: &QMat) -> bool {
        let d = self.dim();
        let images: Vec<QVec> = (0..d).map(|i| (0..d).map(|r| m[r][i].clone()).collect()).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = crate::linalg::mat_vec(m, &self.bracket(&self.unit(i), &self.unit(j)));
                let rhs = self.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Linear map `x -> f(matrix(x))` expressed on coordinates.
    pub fn matrix_map<F: Fn(&CMatrix) -> CMatrix>(&self, f: F) -> Result<QMat, MatlieError> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for b in &self.basis {
            let img = f(b);
            cols.push(self.coords_of(&img).ok_or_else(|| {
                MatlieError::Inconsistent(format!("{}: map leaves the algebra", self.label))
            })?);
        }
        Ok((0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
    }

    /// Ad(g) on coordinates.
    pub fn conjugate_element(&self, x: &[Rational], g: &CMatrix, g_inv: &CMatrix) -> Option<QVec> {
        self.coords_of(&self.element_matrix(x).conjugate_by(g, g_inv))
    }

    /// g_C realized as the real span of `B` and `iB` in the same gl(N, C).
    /// theta and the split subspace extend C-linearly; the complex
    /// structure is multiplication by i.
    pub fn complexify(&self) -> Result<MatrixLieAlgebra, MatlieError> {
        if self.complex_structure.is_some() {
            return Err(MatlieError::Inconsistent(format!(
                "{} already carries a complex structure",
                self.label
            )));
        }
        let d = self.dim();
        let i = g_i();
        let mut basis = self.basis.clone();
        basis.extend(self.basis.iter().map(|b| b.scale(&i)));
        let mut theta = vec![zero_vec(2 * d); 2 * d];
        let mut jmat = vec![zero_vec(2 * d); 2 * d];
        for r in 0..d {
            for c in 0..d {
                theta[r][c] = self.theta[r][c].clone();
                theta[d + r][d + c] = self.theta[r][c].clone();
            }
            // J e_r = e_{d+r}, J e_{d+r} = -e_r
            jmat[d + r][r] = Rational::one();
            jmat[r][d + r] = -Rational::one();
        }
        let split_a = self
            .split_a
            .iter()
            .map(|h| {
                let mut v = h.clone();
                v.extend(zero_vec(d));
                v
            })
            .collect();
        let mut s = vec![vec![SparseVec::new(); 2 * d]; 2 * d];
        for a in 0..d {
            for b in 0..d {
                let c = &self.structure[a][b];
                s[a][b] = c.clone();
                let shifted: SparseVec = c.iter().map(|(k, x)| (d + k, x.clone())).collect();
                s[a][d + b] = shifted.clone();
                s[d + a][b] = shifted;
                s[d + a][d + b] = c.iter().map(|(k, x)| (*k, -x.clone())).collect();
            }
        }
        MatrixLieAlgebra::assemble(
            format!("{}_C", self.label),
            self.ambient_size,
            basis,
            theta,
            split_a,
            Some(jmat),
            Some(s),
            None,
        )
    }

    /// Diagonal {(x, x)} of a product `L + L`.
    pub fn diagonal(&self) -> Result<Subspace, MatlieError> {
        let (d1, d2) = self.factors.ok_or_else(|| {
            MatlieError::Inconsistent(format!("{} is not a product algebra", self.label))
        })?;
        if d1 != d2 {
            return Err(MatlieError::Inconsistent("factors differ in dimension".into()));
        }
        let vs: QMat = (0..d1)
            .map(|i| {
                let mut v = zero_vec(2 * d1);
                v[i] = Rational::one();
                v[d1 + i] = Rational::one();
                v
            })
            .collect();
        Ok(self.span(&vs))
    }

    /// Embeds a pair of factor elements into a product algebra.
    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> QVec {
        let mut v = x.to_vec();
        v.extend(y.iter().cloned());
        v
    }

    /// Splits a product element into its factor components.
    pub fn unpair(&self, v: &[Rational]) -> (QVec, QVec) {
        let (d1, _) = self.factors.expect("product algebra");
        (v[..d1].to_vec(), v[d1..].to_vec())
    }
}

/// Direct sum, realized block-diagonally in gl(N1 + N2, C).
pub fn product_algebra(l1: &MatrixLieAlgebra, l2: &MatrixLieAlgebra) -> Result<MatrixLieAlgebra, MatlieError> {
    let (d1, d2) = (l1.dim(), l2.dim());
    let (n1, n2) = (l1.ambient_size, l2.ambient_size);
    let d = d1 + d2;
    let mut basis: Vec<CMatrix> =
        l1.basis.iter().map(|b| CMatrix::block_diag(b, &CMatrix::zeros(n2))).collect();
    basis.extend(l2.basis.iter().map(|b| CMatrix::block_diag(&CMatrix::zeros(n1), b)));
    let block = |m1: &QMat, m2: &QMat| {
        let mut m = vec![zero_vec(d); d];
        for r in 0..d1 {
            for c in 0..d1 {
                m[r][c] = m1[r][c].clone();
            }
        }
        for r in 0..d2 {
            for c in 0..d2 {
                m[d1 + r][d1 + c] = m2[r][c].clone();
            }
        }
        m
    };
    let theta = block(&l1.theta, &l2.theta);
    let cs = match (&l1.complex_structure, &l2.complex_structure) {
        (Some(a), Some(b)) => Some(block(a, b)),
        _ => None,
    };
    let mut split_a: Vec<QVec> = l1
        .split_a
        .iter()
        .map(|h| {
            let mut v = h.clone();
            v.extend(zero_vec(d2));
            v
        })
        .collect();
    split_a.extend(l2.split_a.iter().map(|h| {
        let mut v = zero_vec(d1);
        v.extend(h.iter().cloned());
        v
    }));
    let mut s = vec![vec![SparseVec::new(); d]; d];
    for a in 0..d1 {
        for b in 0..d1 {
            s[a][b] = l1.structure[a][b].clone();
        }
    }
    for a in 0..d2 {
        for b in 0..d2 {
            s[d1 + a][d1 + b] = l2.structure[a][b].iter().map(|(k, x)| (d1 + k, x.clone())).collect();
        }
    }
    MatrixLieAlgebra::assemble(
        format!("{}+{}", l1.label, l2.label),
        n1 + n2,
        basis,
        theta,
        split_a,
        cs,
        Some(s),
        Some((d1, d2)),
    )
}

/// Builds the matrix model of a classical real form from its label.
pub fn construct_classical(label: &str) -> Result<MatrixLieAlgebra, MatlieError> {
    construct_family(Family::parse(label)?)
}

pub fn construct_family(fam: Family) -> Result<MatrixLieAlgebra, MatlieError> {
    let n = fam.ambient_size();
    let (cons, split) = family_model(fam);
    let mut with_k: Vec<Constraint> = family_model(fam).0;
    with_k.push(Box::new(|x: &CMatrix| vec![x + &x.adjoint()]));
    let mut with_p: Vec<Constraint> = family_model(fam).0;
    with_p.push(Box::new(|x: &CMatrix| vec![x - &x.adjoint()]));
    let full_dim = solve_constraints(n, &cons).len();
    let kb = solve_constraints(n, &with_k);
    let pb = solve_constraints(n, &with_p);
    if kb.len() + pb.len() != full_dim {
        return Err(MatlieError::Inconsistent(format!("{fam}: g is not theta-stable")));
    }
    let dk = kb.len();
    let d = full_dim;
    let mut basis = kb;
    basis.extend(pb);
    let mut theta = identity(d);
    for (r, row) in theta.iter_mut().enumerate().skip(dk) {
        row[r] = -Rational::one();
    }
    let mut alg = MatrixLieAlgebra::assemble(fam.to_string(), n, basis, theta, Vec::new(), None, None, None)?;
    let mut a = Vec::new();
    for h in &split {
        a.push(alg.coords_of(h).ok_or_else(|| {
            MatlieError::Inconsistent(format!("{fam}: split element outside g"))
        })?);
    }
    alg.split_a = a;
    if fam.is_complex() {
        // multiplication by i preserves a complex g
        let i = g_i();
        alg.complex_structure = Some(alg.matrix_map(|m| m.scale(&i))?);
    }
    Ok(alg)
}

/// Joint eigenspace decomposition of g under ad(a).
#[derive(Clone, Debug)]
pub struct RestrictedDecomp {
    pub a_basis: Vec<QVec>,
    /// Root functionals as their values on `a_basis`, sorted decreasingly
    /// in the lexicographic order (positive roots first).
    pub roots: Vec<QVec>,
    pub root_spaces: Vec<Subspace>,
    pub zero_space: Subspace,
    /// Killing Gram matrix of `a_basis`.
    pub a_gram: QMat,
}

fn lex_positive(v: &[Rational]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x > &Rational::zero())
}

impl RestrictedDecomp {
    pub fn rank(&self) -> usize {
        self.a_basis.len()
    }

    pub fn positive_roots(&self) -> Vec<&QVec> {
        self.roots.iter().filter(|r| lex_positive(r)).collect()
    }

    pub fn root_space(&self, root: &[Rational]) -> Option<&Subspace> {
        self.roots.iter().position(|r| r.as_slice() == root).map(|i| &self.root_spaces[i])
    }

    pub fn multiplicity(&self, root: &[Rational]) -> usize {
        self.root_space(root).map_or(0, |s| s.dim())
    }

    /// The lexicographically largest root, which is the highest root.
    pub fn highest_root(&self) -> &QVec {
        &self.roots[0]
    }

    /// Killing dual form on functionals: `(l, n) = l^T G^{-1} n`.
    pub fn dual_form(&self, l: &[Rational], nu: &[Rational]) -> Rational {
        let x = solve(&self.a_gram, self.rank(), nu).expect("Killing form is definite on a");
        crate::linalg::dot(l, &x)
    }

    /// Element of g with `B(H_l, H) = l(H)` for H in a.
    pub fn killing_dual(&self, l: &[Rational], dim: usize) -> QVec {
        let c = solve(&self.a_gram, self.rank(), l).expect("Killing form is definite on a");
        let mut v = zero_vec(dim);
        for (ci, h) in c.iter().zip(&self.a_basis) {
            axpy(&mut v, ci, h);
        }
        v
    }

    /// Multiplicities grouped by squared root length, shortest first:
    /// `(squared length, number of roots, multiplicity)`.
    pub fn length_classes(&self) -> Result<Vec<(Rational, usize, usize)>, MatlieError> {
        let mut classes: Vec<(Rational, usize, usize)> = Vec::new();
        for r in &self.roots {
            let l = self.dual_form(r, r);
            let m = self.multiplicity(r);
            match classes.iter_mut().find(|(len, _, _)| *len == l) {
                Some(c) => {
                    if c.2 != m {
                        return Err(MatlieError::Inconsistent(
                            "multiplicity not constant on a length class".into(),
                        ));
                    }
                    c.1 += 1;
                }
                None => classes.push((l, 1, m)),
            }
        }
        classes.sort();
        Ok(classes)
    }
}

/// Rational eigenvalue candidates of ad(h): differences of the matrix
/// eigenvalues of h.
fn ad_candidates(l: &MatrixLieAlgebra, h: &[Rational]) -> Option<Vec<Rational>> {
    let spec = l.element_matrix(h).rational_spectrum()?;
    let mut c: Vec<Rational> = Vec::new();
    for (a, _) in &spec {
        for (b, _) in &spec {
            let v = a - b;
            if !c.contains(&v) {
                c.push(v);
            }
        }
    }
    c.sort();
    Some(c)
}

/// Splits each space of `parts` into eigenspaces of `ad(h)`.
fn refine(
    l: &MatrixLieAlgebra,
    parts: Vec<(QVec, Subspace)>,
    h: &[Rational],
) -> Result<Vec<(QVec, Subspace)>, MatlieError> {
    let cands = ad_candidates(l, h).ok_or_else(|| {
        MatlieError::Inconsistent(format!("{}: split element has irrational spectrum", l.label))
    })?;
    let ad = l.ad_matrix(h);
    let d = l.dim();
    let mut out = Vec::new();
    for (label, w) in parts {
        let images: Vec<QVec> = w.basis().iter().map(|v| crate::linalg::mat_vec(&ad, v)).collect();
        let mut found = 0;
        for c in &cands {
            // (ad h - c) sum y_j w_j = 0
            let cols: Vec<QVec> = w
                .basis()
                .iter()
                .zip(&images)
                .map(|(v, img)| {
                    let mut col = img.clone();
                    axpy(&mut col, &-c.clone(), v);
                    col
                })
                .collect();
            let rows: QMat = (0..d).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect();
            let ker = nullspace(&rows, w.dim());
            if ker.is_empty() {
                continue;
            }
            let vs: QMat = ker
                .iter()
                .map(|y| {
                    let mut v = zero_vec(d);
                    for (yj, wj) in y.iter().zip(w.basis()) {
                        axpy(&mut v, yj, wj);
                    }
                    v
                })
                .collect();
            found += vs.len();
            let mut lab = label.clone();
            lab.push(c.clone());
            out.push((lab, Subspace::span(d, &vs)));
        }
        if found != w.dim() {
            return Err(MatlieError::Inconsistent(format!(
                "{}: ad(a) is not diagonalizable over Q",
                l.label
            )));
        }
    }
    Ok(out)
}

/// Restricted root decomposition for a chosen basis of a maximal split
/// abelian subspace.
pub fn restricted_decomposition_with(
    l: &MatrixLieAlgebra,
    a_basis: &[QVec],
) -> Result<RestrictedDecomp, MatlieError> {
    if a_basis.is_empty() {
        return Err(MatlieError::Inconsistent(format!("{}: empty split subspace", l.label)));
    }
    let mut parts = vec![(QVec::new(), l.full())];
    for h in a_basis {
        parts = refine(l, parts, h)?;
    }
    let mut zero_space = Subspace::zero(l.dim());
    let mut roots = Vec::new();
    for (lab, w) in parts {
        if is_zero_vec(&lab) {
            zero_space = w;
        } else {
            roots.push((lab, w));
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    let a_gram: QMat =
        a_basis.iter().map(|x| a_basis.iter().map(|y| l.killing(x, y)).collect()).collect();
    Ok(RestrictedDecomp {
        a_basis: a_basis.to_vec(),
        roots: roots.iter().map(|r| r.0.clone()).collect(),
        root_spaces: roots.into_iter().map(|r| r.1).collect(),
        zero_space,
        a_gram,
    })
}

pub fn restricted_decomposition(l: &MatrixLieAlgebra) -> Result<RestrictedDecomp, MatlieError> {
    restricted_decomposition_with(l, l.split_a())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Triple {
    pub x: QVec,
    pub a_mu: QVec,
    pub y: QVec,
}

impl SL2Triple {
    pub fn holds(&self, l: &MatrixLieAlgebra) -> bool {
        let two = rat(2);
        l.bracket(&self.a_mu, &self.x) == crate::linalg::scale_vec(&two, &self.x)
            && l.bracket(&self.a_mu, &self.y) == crate::linalg::scale_vec(&-two, &self.y)
            && l.bracket(&self.x, &self.y) == self.a_mu
    }
}

/// Coroot `A_mu` of the highest root: `2 H_mu / mu(H_mu)`.
pub fn coroot(l: &MatrixLieAlgebra, dcmp: &RestrictedDecomp, root: &[Rational]) -> QVec {
    let h = dcmp.killing_dual(root, l.dim());
    let coeffs = solve(&dcmp.a_gram, dcmp.rank(), root).unwrap();
    let mu_h = crate::linalg::dot(&coeffs, root);
    crate::linalg::scale_vec(&(rat(2) / mu_h), &h)
}

/// `{X, A_mu, Y}` with X the first echelon vector of g(a; mu) and Y
/// solved from `[X, Y] = A_mu` inside g(a; -mu).
pub fn highest_sl2(l: &MatrixLieAlgebra, dcmp: &RestrictedDecomp) -> Result<SL2Triple, MatlieError> {
    let mu = dcmp.highest_root().clone();
    let neg: QVec = mu.iter().map(|x| -x.clone()).collect();
    let a_mu = coroot(l, dcmp, &mu);
    let x = dcmp.root_space(&mu).expect("highest root space").basis()[0].clone();
    let gm = dcmp.root_space(&neg).ok_or_else(|| {
        MatlieError::Inconsistent(format!("{}: -mu is not a root", l.label))
    })?;
    let d = l.dim();
    let cols: Vec<QVec> = gm.basis().iter().map(|v| l.bracket(&x, v)).collect();
    let rows: QMat = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let yc = solve(&rows, gm.dim(), &a_mu).ok_or_else(|| {
        MatlieError::Inconsistent(format!("{}: no Y completes the sl2-triple", l.label))
    })?;
    let mut y = zero_vec(d);
    for (c, v) in yc.iter().zip(gm.basis()) {
        axpy(&mut y, c, v);
    }
    let t = SL2Triple { x, a_mu, y };
    if !t.holds(l) {
        return Err(MatlieError::Inconsistent(format!("{}: sl2 relations fail", l.label)));
    }
    Ok(t)
}

/// Eigenspace `g_j = ker(ad(h) - j)`.
pub fn ad_eigenspace(l: &MatrixLieAlgebra, h: &[Rational], j: &Rational) -> Subspace {
    let mut ad = l.ad_matrix(h);
    for (r, row) in ad.iter_mut().enumerate() {
        row[r] -= j;
    }
    kernel(&ad, l.dim())
}

/// The compact-type centralizer m = Z_k(a).
pub fn m_subspace(l: &MatrixLieAlgebra, a_basis: &[QVec]) -> Subspace {
    l.k().intersection(&l.centralizer_of(&l.span(a_basis)))
}

/// Eigenvalue `g_real(q)` helper for callers building diagonal matrices.
pub fn real_diag(values: &[Rational]) -> CMatrix {
    CMatrix::diag(&values.iter().map(|q| g_real(q.clone())).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let su11 = construct_classical("su(1,1)").unwrap();
        assert_eq!((su11.dim(), su11.k().dim()), (3, 1));
        let sl3 = construct_classical("sl(3,R)").unwrap();
        assert_eq!((sl3.dim(), sl3.k().dim()), (8, 3));
        let sp11 = construct_classical("sp(1,1)").unwrap();
        assert_eq!((sp11.dim(), sp11.k().dim()), (10, 6));
    }

    #[test]
    fn exceptional_is_table_only() {
        assert!(matches!(construct_classical("f4(-20)"), Err(MatlieError::TableOnly(_))));
        assert!(matches!(construct_classical("u(2,1)"), Err(MatlieError::Unsupported(_))));
    }

    #[test]
    fn killing_of_sl2() {
        let l = construct_classical("sl(2,R)").unwrap();
        let h = l.coords_of(&real_diag(&[rat(1), rat(-1)])).unwrap();
        assert_eq!(l.killing(&h, &h), rat(8));
    }
}
