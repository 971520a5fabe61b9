//! Involutions of the matrix models and the data derived from them:
//! the fixed subalgebra, a sigma-split maximal split abelian subspace, the
//! sign of sigma on the highest restricted root, the characteristic
//! element of a Hermitian algebra and the holomorphic/anti-holomorphic
//! dichotomy.
//!
//! An involution recipe is `sigma(X) = A f(X) A^{-1}` with `f` one of
//! `id`, `conj`, `negT` (`-X^T`) and `negH` (`-X^*`). The text form is
//! `f` or `f[M]` where `M` is a `.`-separated product of blocks:
//!
//! * `I(n)`, `J(m)` = `[[0,-I],[I,0]]`, `S(m)` = `[[0,I],[I,0]]`
//! * `dg(e1,e2,...)` diagonal with entries `+1`, `-1`, `+i`, `-i`, each
//!   optionally repeated as `+1x3`
//! * `blk(M;M;...)` block diagonal

use crate::catalog::{matrix_family, AlgebraRecord, Catalog, PairRecord, TriState};
use crate::cmatrix::CMatrix;
use crate::families::is_five_name;
use crate::label::AlgebraLabel;
use crate::linalg::{is_zero_vec, kernel, mat_mul, mat_vec, zero_vec, QMat, QVec, Subspace};
use crate::matlie::{
    construct_family, product_algebra, restricted_decomposition_with, Family, MatlieError, MatrixLieAlgebra,
    RestrictedDecomp,
};
use crate::scalar::{g_i, g_one, rational_sqrt, Gaussian, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SympairError {
    #[error("bad involution recipe {0:?}: {1}")]
    Recipe(String, String),
    #[error("{0}")]
    Matlie(#[from] MatlieError),
    #[error("involution check failed for {label}: {reason}")]
    Invalid { label: String, reason: String },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("unknown algebra {label}; try one of: {}", suggestions.join(", "))]
    UnknownAlgebra { label: String, suggestions: Vec<String> },
    #[error("({g}, {gprime}) is not in the registry; registered for {g}: {}", known.join(", "))]
    NotRegistered { g: String, gprime: String, known: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Id,
    Conj,
    NegTranspose,
    NegAdjoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub text: String,
    pub twist: Twist,
    pub a: Option<CMatrix>,
}

fn parse_diag_entries(args: &str, text: &str) -> Result<Vec<Gaussian>, SympairError> {
    let bad = |why: &str| SympairError::Recipe(text.to_string(), why.to_string());
    let mut out = Vec::new();
    for item in args.split(',') {
        let (val, count) = match item.split_once('x') {
            Some((v, c)) => (v, c.parse::<usize>().map_err(|_| bad("bad repeat count"))?),
            None => (item, 1),
        };
        let z = match val {
            "+1" | "1" => g_one(),
            "-1" => -g_one(),
            "+i" | "i" => g_i(),
            "-i" => -g_i(),
            _ => return Err(bad("diagonal entries must be +-1 or +-i")),
        };
        out.extend(std::iter::repeat(z).take(count));
    }
    Ok(out)
}

fn split_args(s: &str, sep: char) -> Vec<&str> {
    let mut depth = 0;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_matrix(expr: &str, text: &str) -> Result<CMatrix, SympairError> {
    let bad = |why: &str| SympairError::Recipe(text.to_string(), why.to_string());
    let mut acc: Option<CMatrix> = None;
    for term in split_args(expr, '.') {
        let open = term.find('(').ok_or_else(|| bad("block needs arguments"))?;
        if !term.ends_with(')') {
            return Err(bad("unbalanced block"));
        }
        let name = &term[..open];
        let args = &term[open + 1..term.len() - 1];
        let int = || args.parse::<usize>().map_err(|_| bad("bad size"));
        let m = match name {
            "I" => CMatrix::identity(int()?),
            "J" | "S" => {
                let n = int()?;
                let s = if name == "J" { -g_one() } else { g_one() };
                let mut e = Vec::new();
                for i in 0..n {
                    e.push((i, n + i, s.clone()));
                    e.push((n + i, i, g_one()));
                }
                CMatrix::from_entries(2 * n, &e)
            }
            "dg" => CMatrix::diag(&parse_diag_entries(args, text)?),
            "blk" => {
                let mut parts = split_args(args, ';').into_iter();
                let first = parse_matrix(parts.next().ok_or_else(|| bad("empty blk"))?, text)?;
                parts.try_fold(first, |m, p| Ok::<_, SympairError>(CMatrix::block_diag(&m, &parse_matrix(p, text)?)))?
            }
            _ => return Err(bad("unknown block")),
        };
        acc = Some(match acc {
            None => m,
            Some(a) => {
                if a.size() != m.size() {
                    return Err(bad("block sizes differ in product"));
                }
                &a * &m
            }
        });
    }
    acc.ok_or_else(|| bad("empty matrix"))
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Recipe, SympairError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, mat) = match t.find('[') {
            Some(i) if t.ends_with(']') => (&t[..i], Some(&t[i + 1..t.len() - 1])),
            Some(_) => return Err(SympairError::Recipe(t.clone(), "unbalanced brackets".into())),
            None => (t.as_str(), None),
        };
        let twist = match head {
            "id" | "ad" => Twist::Id,
            "conj" => Twist::Conj,
            "negT" => Twist::NegTranspose,
            "negH" => Twist::NegAdjoint,
            _ => return Err(SympairError::Recipe(t.clone(), "unknown twist".into())),
        };
        let a = mat.map(|m| parse_matrix(m, &t)).transpose()?;
        Ok(Recipe { text: t, twist, a })
    }

    /// The matrix map `X -> A f(X) A^{-1}`.
    pub fn apply(&self, x: &CMatrix, a_inv: Option<&CMatrix>) -> CMatrix {
        let fx = match self.twist {
            Twist::Id => x.clone(),
            Twist::Conj => x.conj(),
            Twist::NegTranspose => -&x.transpose(),
            Twist::NegAdjoint => -&x.adjoint(),
        };
        match (&self.a, a_inv) {
            (Some(a), Some(ai)) => fx.conjugate_by(a, ai),
            _ => fx,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)
    }
}

/// How sigma is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionKind {
    MatrixLinear,
    MatrixConjugation,
    /// The swap on `g + g`.
    Swap,
    TableOnly,
}

/// An involution of a matrix model, on basis coordinates.
#[derive(Clone, Debug)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub recipe: Option<String>,
    pub matrix: QMat,
    pub fixed: Subspace,
    pub anti_fixed: Subspace,
}

fn eigenspace(m: &QMat, s: i64) -> Subspace {
    let d = m.len();
    let mut a = m.clone();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= Rational::from_integer(s.into());
    }
    kernel(&a, d)
}

impl Involution {
    /// Builds sigma from a recipe and checks it: maps g to g, squares to
    /// the identity, preserves brackets and commutes with theta.
    pub fn from_recipe(l: &MatrixLieAlgebra, recipe: &Recipe) -> Result<Involution, SympairError> {
        let invalid = |reason: String| SympairError::Invalid { label: l.label.clone(), reason };
        let a_inv = match &recipe.a {
            Some(a) => {
                if a.size() != l.ambient_size() {
                    return Err(invalid(format!(
                        "recipe matrix has size {} but g lives in gl({})",
                        a.size(),
                        l.ambient_size()
                    )));
                }
                Some(a.inverse().ok_or_else(|| invalid("recipe matrix is singular".into()))?)
            }
            None => None,
        };
        let m = l
            .matrix_map(|x| recipe.apply(x, a_inv.as_ref()))
            .map_err(|_| invalid(format!("{} does not preserve g", recipe.text)))?;
        let kind = match recipe.twist {
            Twist::Id | Twist::NegTranspose => InvolutionKind::MatrixLinear,
            _ => InvolutionKind::MatrixConjugation,
        };
        Self::from_matrix(l, m, kind, Some(recipe.text.clone()))
    }

    pub fn from_matrix(
        l: &MatrixLieAlgebra,
        m: QMat,
        kind: InvolutionKind,
        recipe: Option<String>,
    ) -> Result<Involution, SympairError> {
        let invalid = |reason: &str| SympairError::Invalid { label: l.label.clone(), reason: reason.into() };
        let d = l.dim();
        if mat_mul(&m, &m, d) != crate::linalg::identity(d) {
            return Err(invalid("sigma^2 is not the identity"));
        }
        if mat_mul(&m, l.theta(), d) != mat_mul(l.theta(), &m, d) {
            return Err(invalid("sigma does not commute with theta"));
        }
        if !l.is_automorphism(&m) {
            return Err(invalid("sigma does not preserve brackets"));
        }
        let fixed = eigenspace(&m, 1);
        let anti_fixed = eigenspace(&m, -1);
        Ok(Involution { kind, recipe, matrix: m, fixed, anti_fixed })
    }

    pub fn apply(&self, x: &[Rational]) -> QVec {
        mat_vec(&self.matrix, x)
    }

    /// Swap `(x, y) -> (y, x)` on a product `L + L`.
    pub fn swap(l: &MatrixLieAlgebra) -> Result<Involution, SympairError> {
        let (d1, d2) = l.factors().ok_or_else(|| SympairError::Inconsistent("swap needs a product".into()))?;
        if d1 != d2 {
            return Err(SympairError::Inconsistent("swap needs equal factors".into()));
        }
        let d = d1 + d2;
        let mut m = vec![zero_vec(d); d];
        for i in 0..d1 {
            m[i][d1 + i] = Rational::one();
            m[d1 + i][i] = Rational::one();
        }
        Self::from_matrix(l, m, InvolutionKind::Swap, None)
    }
}

/// `a = a^{-sigma} + a^{sigma}` with a basis of each, plus the
/// decomposition of g for the ordered basis (anti-fixed part first).
#[derive(Clone, Debug)]
pub struct SigmaSplit {
    pub a_minus: Vec<QVec>,
    pub a_plus: Vec<QVec>,
    pub decomposition: RestrictedDecomp,
}

impl SigmaSplit {
    pub fn a_basis(&self) -> Vec<QVec> {
        let mut v = self.a_minus.clone();
        v.extend(self.a_plus.iter().cloned());
        v
    }

    /// sigma(mu) = -mu, i.e. mu vanishes on a^sigma.
    pub fn sigma_mu_minus(&self) -> bool {
        let mu = self.decomposition.highest_root();
        mu[self.a_minus.len()..].iter().all(|x| x.is_zero())
    }
}

/// Candidates in `w` for extending the abelian set: basis vectors, then
/// pairwise sums and differences.
fn candidates(w: &Subspace) -> Vec<QVec> {
    let b = w.basis();
    let mut out: Vec<QVec> = b.to_vec();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            out.push(crate::linalg::add_vec(&b[i], &b[j]));
            out.push(crate::linalg::sub_vec(&b[i], &b[j]));
        }
    }
    out
}

/// Grows `chosen` to a maximal abelian subspace of `space` using elements
/// with rational ad-spectrum.
fn grow_abelian(
    l: &MatrixLieAlgebra,
    space: &Subspace,
    chosen: &mut Vec<QVec>,
) -> Result<(), SympairError> {
    loop {
        let span = l.span(chosen);
        let comm = space.intersection(&l.centralizer_of(&span));
        if comm.dim() == span.dim() {
            return Ok(());
        }
        // Z_space(chosen) is bigger; pick something in it outside the span.
        let pick = candidates(&comm).into_iter().find(|v| {
            !span.contains(v) && l.element_matrix(v).rational_spectrum().is_some()
        });
        match pick {
            Some(v) => {
                // candidates from the commutant commute with `chosen` but
                // not necessarily with each other; only one is added per round
                chosen.push(v);
            }
            None => {
                return Err(SympairError::Inconsistent(format!(
                    "{}: no rational semisimple element extends the abelian subspace",
                    l.label
                )))
            }
        }
    }
}

/// Real rank of the fixed subalgebra: a maximal abelian subspace of
/// `p ∩ g^sigma`.
pub fn fixed_real_rank(l: &MatrixLieAlgebra, sigma: &Involution) -> Result<usize, SympairError> {
    let space = l.p().intersection(&sigma.fixed);
    let mut chosen = Vec::new();
    grow_abelian(l, &space, &mut chosen)?;
    Ok(chosen.len())
}

/// Dimension, compact dimension and real rank of `g^sigma` against a label.
pub fn check_fixed_label(
    l: &MatrixLieAlgebra,
    sigma: &Involution,
    label: &crate::label::AlgebraLabel,
) -> Result<(), SympairError> {
    let got = (
        sigma.fixed.dim(),
        sigma.fixed.intersection(&l.k()).dim(),
        fixed_real_rank(l, sigma)?,
    );
    let want = (label.dim(), label.compact_dim(), label.real_rank());
    if got != want {
        return Err(SympairError::Invalid {
            label: l.label.clone(),
            reason: format!(
                "fixed algebra (dim, dim k, rank) = {got:?} but {} has {want:?}",
                label.canonical()
            ),
        });
    }
    Ok(())
}

/// Maximal abelian in `p ∩ g^{-sigma}`, extended to maximal abelian in `p`.
pub fn sigma_split_a(l: &MatrixLieAlgebra, sigma: &Involution) -> Result<SigmaSplit, SympairError> {
    let p = l.p();
    let p_minus = p.intersection(&sigma.anti_fixed);
    let mut minus = Vec::new();
    grow_abelian(l, &p_minus, &mut minus)?;
    let mut all = minus.clone();
    grow_abelian(l, &p, &mut all)?;
    let expected = l.split_a().len();
    if all.len() != expected {
        return Err(SympairError::Inconsistent(format!(
            "{}: sigma-split subspace has dimension {} but the real rank is {}",
            l.label,
            all.len(),
            expected
        )));
    }
    let plus_part: Vec<QVec> = all[minus.len()..].to_vec();
    // replace the extension by its sigma-fixed projection so that
    // a = a^{-sigma} + a^{sigma} is sigma-stable
    let plus: Vec<QVec> = plus_part
        .iter()
        .map(|h| {
            let s = sigma.apply(h);
            crate::linalg::scale_vec(&Rational::new(1.into(), 2.into()), &crate::linalg::add_vec(h, &s))
        })
        .collect();
    let mut basis = minus.clone();
    basis.extend(plus.iter().cloned());
    let span = l.span(&basis);
    if span.dim() != expected || !l.centralizer_of(&span).contains_subspace(&span) {
        return Err(SympairError::Inconsistent(format!(
            "{}: sigma-split subspace is not sigma-stable abelian",
            l.label
        )));
    }
    let decomposition = restricted_decomposition_with(l, &basis)?;
    Ok(SigmaSplit { a_minus: minus, a_plus: plus, decomposition })
}

/// Characteristic element and the `±i` eigenspaces in g_C.
#[derive(Clone, Debug)]
pub struct HermitianData {
    /// Z in coordinates of g, with `ad(Z)^2 = -1` on p.
    pub z: QVec,
    pub g_c: MatrixLieAlgebra,
    /// Z as an element of g_C.
    pub z_c: QVec,
    pub k_c: Subspace,
    pub p_plus: Subspace,
    pub p_minus: Subspace,
}

/// Z spanning the center of k, normalized so that `ad(Z)` has
/// eigenvalues `0, ±i`; `None` when the center of k is trivial.
pub fn characteristic_element(l: &MatrixLieAlgebra) -> Result<Option<QVec>, SympairError> {
    let k = l.k();
    let center = k.intersection(&l.centralizer_of(&k));
    match center.dim() {
        0 => return Ok(None),
        1 => {}
        n => {
            return Err(SympairError::Inconsistent(format!(
                "{}: center of k has dimension {n}",
                l.label
            )))
        }
    }
    let z0 = center.basis()[0].clone();
    let p = l.p();
    let v = &p.basis()[0];
    let w = l.bracket(&z0, &l.bracket(&z0, v));
    // w = -c^2 v
    let idx = v.iter().position(|x| !x.is_zero()).unwrap();
    let c2 = -(&w[idx] / &v[idx]);
    if !c2.is_positive() {
        return Err(SympairError::Inconsistent(format!("{}: ad(Z)^2 is not negative on p", l.label)));
    }
    let c = rational_sqrt(&c2).ok_or_else(|| {
        SympairError::Inconsistent(format!("{}: characteristic element is irrational in this model", l.label))
    })?;
    let z = crate::linalg::scale_vec(&(Rational::one() / c), &z0);
    for b in p.basis() {
        let w = l.bracket(&z, &l.bracket(&z, b));
        if w != crate::linalg::scale_vec(&-Rational::one(), b) {
            return Err(SympairError::Inconsistent(format!(
                "{}: ad(Z)^2 is not a scalar on p",
                l.label
            )));
        }
    }
    Ok(Some(z))
}

fn embed_real(x: &[Rational]) -> QVec {
    let mut v = x.to_vec();
    v.extend(zero_vec(x.len()));
    v
}

pub fn hermitian_data(l: &MatrixLieAlgebra) -> Result<Option<HermitianData>, SympairError> {
    let Some(z) = characteristic_element(l)? else { return Ok(None) };
    let g_c = l.complexify()?;
    let z_c = embed_real(&z);
    let d = g_c.dim();
    let ad = g_c.ad_matrix(&z_c);
    let j = g_c.complex_structure().expect("complexification has J").clone();
    let comb = |s: i64| -> Subspace {
        let m: QMat = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| &ad[r][c] - Rational::from_integer(s.into()) * &j[r][c])
                    .collect()
            })
            .collect();
        kernel(&m, d)
    };
    let k_c = comb(0);
    let p_plus = comb(1);
    let p_minus = comb(-1);
    if k_c.dim() + p_plus.dim() + p_minus.dim() != d {
        return Err(SympairError::Inconsistent(format!("{}: g_C != k_C + p_+ + p_-", l.label)));
    }
    if !g_c.bracket_spaces(&p_plus, &p_plus).is_zero() {
        return Err(SympairError::Inconsistent(format!("{}: p_+ is not abelian", l.label)));
    }
    Ok(Some(HermitianData { z, g_c, z_c, k_c, p_plus, p_minus }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HoloType {
    Holomorphic,
    AntiHolomorphic,
}

impl fmt::Display for HoloType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HoloType::Holomorphic => "holomorphic",
            HoloType::AntiHolomorphic => "anti-holomorphic",
        })
    }
}

/// sigma Z = Z (holomorphic) or sigma Z = -Z (anti-holomorphic).
pub fn holo_type(sigma: &Involution, z: &[Rational]) -> Result<HoloType, SympairError> {
    let s = sigma.apply(z);
    if s.as_slice() == z {
        Ok(HoloType::Holomorphic)
    } else if is_zero_vec(&crate::linalg::add_vec(&s, z)) {
        Ok(HoloType::AntiHolomorphic)
    } else {
        Err(SympairError::Inconsistent("sigma Z is neither Z nor -Z".into()))
    }
}

/// C-linear extension of sigma to g_C = g + i g.
pub fn complexify_involution(g_c: &MatrixLieAlgebra, sigma: &Involution) -> Result<Involution, SympairError> {
    let d = sigma.matrix.len();
    let mut m = vec![zero_vec(2 * d); 2 * d];
    for r in 0..d {
        for c in 0..d {
            m[r][c] = sigma.matrix[r][c].clone();
            m[d + r][d + c] = sigma.matrix[r][c].clone();
        }
    }
    Involution::from_matrix(g_c, m, sigma.kind, sigma.recipe.clone())
}

/// Where a flag value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag<T> {
    pub value: T,
    pub provenance: Provenance,
    pub source: String,
}

impl<T> Flag<T> {
    fn computed(value: T, source: &str) -> Self {
        Flag { value, provenance: Provenance::Computed, source: source.into() }
    }

    fn table(value: T, source: impl Into<String>) -> Self {
        Flag { value, provenance: Provenance::Table, source: source.into() }
    }
}

/// The serializable description of a registered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricPairSpec {
    pub g_label: String,
    pub gprime_label: String,
    pub involution: InvolutionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
    pub group_case: bool,
    /// sigma was built and verified on the matrix model.
    pub matrix_level: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_a_minus: Option<usize>,
    /// `None` in the group case, where g is not simple.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_mu_minus: Option<Flag<TriState>>,
    /// `None` unless g is of Hermitian type and the type is known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holo_type: Option<Flag<HoloType>>,
    pub tags: Vec<String>,
    pub citations: Vec<String>,
}

/// Matrix-level data behind a spec.
#[derive(Clone, Debug)]
pub struct PairModel {
    pub algebra: Arc<MatrixLieAlgebra>,
    pub sigma: Involution,
    /// Absent in the group case.
    pub split: Option<SigmaSplit>,
    pub z: Option<QVec>,
}

#[derive(Clone, Debug)]
pub struct RegisteredPair {
    pub spec: SymmetricPairSpec,
    pub model: Option<PairModel>,
}

#[derive(Clone, Debug)]
struct ModelEntry {
    algebra: Arc<MatrixLieAlgebra>,
    z: Option<QVec>,
}

const FIVE_SOURCE: &str = "sigma(mu) = -mu for every symmetric pair of the five exceptional-m algebras";

/// Symmetric pairs of the catalog, with matrix models built on demand
/// and cached per algebra.
pub struct Registry<'c> {
    pub catalog: &'c Catalog,
    /// Largest complex rank for which sigma is built on the matrix model;
    /// beyond it the flags come from the tables.
    pub matrix_rank: usize,
    models: Mutex<BTreeMap<String, Arc<ModelEntry>>>,
}

impl<'c> Registry<'c> {
    pub fn new(catalog: &'c Catalog) -> Self {
        Self::with_matrix_rank(catalog, usize::MAX)
    }

    pub fn with_matrix_rank(catalog: &'c Catalog, matrix_rank: usize) -> Self {
        Registry { catalog, matrix_rank, models: Mutex::new(BTreeMap::new()) }
    }

    pub fn algebra(&self, label: &str) -> Result<&'c AlgebraRecord, SympairError> {
        self.catalog.algebra(label).ok_or_else(|| SympairError::UnknownAlgebra {
            label: label.to_string(),
            suggestions: self.catalog.suggestions(label),
        })
    }

    fn within_bound(&self, a: &AlgebraRecord) -> Option<Family> {
        matrix_family(a).filter(|f| f.complex_rank() <= self.matrix_rank)
    }

    fn model(&self, a: &AlgebraRecord, fam: Family) -> Result<Arc<ModelEntry>, SympairError> {
        if let Some(m) = self.models.lock().expect("model cache").get(&a.label) {
            return Ok(m.clone());
        }
        let algebra = construct_family(fam)?;
        let z = characteristic_element(&algebra)?;
        if z.is_some() != a.hermitian {
            return Err(SympairError::Inconsistent(format!(
                "{}: catalog says hermitian = {} but the center of k disagrees",
                a.label, a.hermitian
            )));
        }
        let entry = Arc::new(ModelEntry { algebra: Arc::new(algebra), z });
        self.models.lock().expect("model cache").insert(a.label.clone(), entry.clone());
        Ok(entry)
    }

    /// The matrix model of a catalog algebra, when it has one.
    pub fn matrix_model(&self, label: &str) -> Result<Option<Arc<MatrixLieAlgebra>>, SympairError> {
        let a = self.algebra(label)?;
        match matrix_family(a) {
            Some(fam) => Ok(Some(self.model(a, fam)?.algebra.clone())),
            None => Ok(None),
        }
    }

    /// Looks up `(g, g')`, builds sigma when g has a matrix model and
    /// computes the flags. `g = h + h`, `g' = h` is the group case.
    pub fn register_pair(&self, g: &str, gprime: &str) -> Result<RegisteredPair, SympairError> {
        if let Some(h) = group_factor(g) {
            if canonical_or_raw(gprime) == h {
                return self.register_group(&h);
            }
        }
        let a = self.algebra(g)?;
        let rec = self.catalog.pair(g, gprime).ok_or_else(|| SympairError::NotRegistered {
            g: a.label.clone(),
            gprime: gprime.to_string(),
            known: self.catalog.pairs_of(&a.label).map(|p| p.gprime.clone()).collect(),
        })?;
        let mut spec = SymmetricPairSpec {
            g_label: a.label.clone(),
            gprime_label: rec.gprime.clone(),
            involution: InvolutionKind::TableOnly,
            recipe: rec.sigma_recipe.clone(),
            group_case: false,
            matrix_level: false,
            fixed_dim: None,
            dim_a: None,
            dim_a_minus: None,
            sigma_mu_minus: None,
            holo_type: None,
            tags: rec.tags.clone(),
            citations: rec.citations.clone(),
        };
        if let Some(flags) = &rec.table_flags {
            spec.sigma_mu_minus = Some(Flag::table(flags.sigma_mu_minus, rec.citations.join("; ")));
            spec.holo_type = flags.holo_type.map(|h| Flag::table(h, rec.citations.join("; ")));
            return Ok(RegisteredPair { spec, model: None });
        }
        let text = rec.sigma_recipe.as_deref().ok_or_else(|| {
            SympairError::Inconsistent(format!("pair ({}, {}) has neither recipe nor flags", rec.g, rec.gprime))
        })?;
        let recipe = Recipe::parse(text)?;
        spec.involution = match recipe.twist {
            Twist::Id | Twist::NegTranspose => InvolutionKind::MatrixLinear,
            _ => InvolutionKind::MatrixConjugation,
        };
        let Some(fam) = self.within_bound(a) else {
            spec.sigma_mu_minus = Some(table_sigma_mu(a, rec));
            if a.hermitian && rec.has_tag("para") {
                spec.holo_type = Some(Flag::table(HoloType::AntiHolomorphic, "para-Hermitian pairs of Hermitian g"));
            }
            return Ok(RegisteredPair { spec, model: None });
        };
        let entry = self.model(a, fam)?;
        let l = &entry.algebra;
        let sigma = Involution::from_recipe(l, &recipe)?;
        let target = AlgebraLabel::parse(&rec.gprime)
            .map_err(|e| SympairError::Recipe(text.to_string(), e.to_string()))?;
        check_fixed_label(l, &sigma, &target)?;
        let split = sigma_split_a(l, &sigma)?;
        let minus = split.sigma_mu_minus();
        if split.a_minus.len() == split.a_basis().len() && !minus {
            return Err(SympairError::Inconsistent(format!(
                "({}, {}): sigma = -1 on a but sigma(mu) != -mu",
                a.label, rec.gprime
            )));
        }
        spec.matrix_level = true;
        spec.fixed_dim = Some(sigma.fixed.dim());
        spec.dim_a = Some(split.a_basis().len());
        spec.dim_a_minus = Some(split.a_minus.len());
        spec.sigma_mu_minus = Some(Flag::computed(
            if minus { TriState::Yes } else { TriState::No },
            "highest restricted root on a sigma-split a",
        ));
        if let Some(z) = &entry.z {
            spec.holo_type = Some(Flag::computed(holo_type(&sigma, z)?, "sigma on the characteristic element"));
        }
        Ok(RegisteredPair { spec, model: Some(PairModel { algebra: l.clone(), sigma, split: Some(split), z: entry.z.clone() }) })
    }

    fn register_group(&self, h: &str) -> Result<RegisteredPair, SympairError> {
        let a = self.algebra(h)?;
        let mut spec = SymmetricPairSpec {
            g_label: format!("{0}+{0}", a.label),
            gprime_label: a.label.clone(),
            involution: InvolutionKind::Swap,
            recipe: None,
            group_case: true,
            matrix_level: false,
            fixed_dim: None,
            dim_a: None,
            dim_a_minus: None,
            sigma_mu_minus: None,
            holo_type: None,
            tags: vec!["group".into()],
            citations: vec!["diagonal in g + g, the tensor product case".into()],
        };
        let Some(fam) = self.within_bound(a) else {
            return Ok(RegisteredPair { spec, model: None });
        };
        let entry = self.model(a, fam)?;
        let l = Arc::new(product_algebra(&entry.algebra, &entry.algebra)?);
        let sigma = Involution::swap(&l)?;
        if sigma.fixed.dim() != entry.algebra.dim() {
            return Err(SympairError::Inconsistent(format!("{}: swap fixes a subspace of the wrong size", spec.g_label)));
        }
        spec.matrix_level = true;
        spec.fixed_dim = Some(sigma.fixed.dim());
        Ok(RegisteredPair { spec, model: Some(PairModel { algebra: l, sigma, split: None, z: None }) })
    }
}

/// `h` when `g` reads as `h + h` with `h` simple.
fn group_factor(g: &str) -> Option<String> {
    let l = AlgebraLabel::parse(g).ok()?;
    match l.summands.as_slice() {
        [x, y] if x == y && x.complexified.center == 0 => Some(x.canonical.clone()),
        _ => None,
    }
}

fn canonical_or_raw(s: &str) -> String {
    AlgebraLabel::parse(s).map(|l| l.canonical()).unwrap_or_else(|_| s.to_string())
}

/// sigma(mu) = -mu from the lists alone, for recipe pairs not evaluated
/// on the matrix model.
fn table_sigma_mu(a: &AlgebraRecord, rec: &PairRecord) -> Flag<TriState> {
    if a.names().any(is_five_name) {
        Flag::table(TriState::Yes, FIVE_SOURCE)
    } else if let Some(item) = rec.nonneg_item() {
        Flag::table(TriState::No, format!("pairs with sigma(mu) != -mu, item {item}"))
    } else if rec.has_tag("riemannian") || rec.has_tag("rank-equal") {
        Flag::table(TriState::Yes, "sigma is -1 on a")
    } else {
        Flag::table(TriState::Unknown, "not evaluated: complex rank above the matrix bound")
    }
}

/// Levi factors `l` with `(g, l)` para-Hermitian; empty when g is not in
/// the list or not in the catalog.
pub fn para_hermitian_levis(catalog: &Catalog, g: &str) -> Vec<String> {
    catalog.algebra(g).map(|a| a.para_levis.clone()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlie::construct_classical;

    #[test]
    fn recipe_parsing() {
        let r = Recipe::parse("ad[blk(J(1);dg(+1,-1x2))]").unwrap();
        assert_eq!(r.twist, Twist::Id);
        assert_eq!(r.a.unwrap().size(), 5);
        assert!(Recipe::parse("flip").is_err());
        assert!(Recipe::parse("ad[dg(+2)]").is_err());
    }

    #[test]
    fn theta_is_an_involution() {
        let l = construct_classical("su(2,1)").unwrap();
        let s = Involution::from_recipe(&l, &Recipe::parse("negH").unwrap()).unwrap();
        assert_eq!(s.fixed, l.k());
        let z = characteristic_element(&l).unwrap().unwrap();
        assert_eq!(holo_type(&s, &z).unwrap(), HoloType::Holomorphic);
        let split = sigma_split_a(&l, &s).unwrap();
        assert_eq!(split.a_minus.len(), 1);
        assert!(split.sigma_mu_minus());
    }

    #[test]
    fn sp11_is_not_hermitian() {
        let l = construct_classical("sp(1,1)").unwrap();
        assert!(hermitian_data(&l).unwrap().is_none());
    }
    #[test]
    fn su21_characteristic_element() {
        // independent oracle: Z = i diag(q, q, -p)/(p+q) for su(p,q), p = 2, q = 1
        let l = construct_classical("su(2,1)").unwrap();
        let z = characteristic_element(&l).unwrap().unwrap();
        let m = l.element_matrix(&z);
        let third = |k: i64| Gaussian::new(Rational::zero(), crate::scalar::ratio(k, 3));
        let expect = CMatrix::diag(&[third(1), third(1), third(-2)]);
        assert!(m == expect || m == expect.scale(&-g_one()));
        let h = hermitian_data(&l).unwrap().unwrap();
        assert_eq!((h.p_plus.dim(), h.p_minus.dim(), h.k_c.dim()), (4, 4, 8));
    }

    #[test]
    fn registry_examples() {
        let cat = Catalog::bundled();
        let reg = Registry::new(&cat);
        for (p, q) in [(1, 1), (2, 1), (1, 2)] {
            let r = reg.register_pair(&format!("sp({p},{q})"), &format!("u({p},{q})")).unwrap();
            assert_eq!(r.spec.fixed_dim, Some((p + q) * (p + q)));
            assert_eq!(r.spec.dim_a_minus, r.spec.dim_a);
            assert_eq!(r.spec.sigma_mu_minus.unwrap().value, TriState::Yes);
            assert!(r.spec.holo_type.is_none());
        }
        let r = reg.register_pair("sp(3,R)", "sp(2,R)+sp(1,R)").unwrap();
        let flag = r.spec.sigma_mu_minus.unwrap();
        assert_eq!((flag.value, flag.provenance), (TriState::No, Provenance::Computed));
        assert_eq!(r.spec.holo_type.unwrap().value, HoloType::Holomorphic);

        let r = reg.register_pair("f4(-20)", "so(8,1)").unwrap();
        assert_eq!(r.spec.involution, InvolutionKind::TableOnly);
        assert!(r.model.is_none());
        assert_eq!(r.spec.sigma_mu_minus.unwrap().provenance, Provenance::Table);

        let r = reg.register_pair("sl(3,R)+sl(3,R)", "sl(3,R)").unwrap();
        assert!(r.spec.group_case && r.spec.matrix_level);
        assert_eq!(r.spec.fixed_dim, Some(8));
        assert!(r.spec.sigma_mu_minus.is_none());

        let r = reg.register_pair("su(2,1)", "so(2,1)").unwrap();
        assert_eq!(r.spec.holo_type.unwrap().value, HoloType::AntiHolomorphic);

        assert!(matches!(reg.register_pair("sp(2,1)", "so(5)"), Err(SympairError::NotRegistered { .. })));
        assert!(matches!(reg.register_pair("bogus(3)", "so(3)"), Err(SympairError::UnknownAlgebra { .. })));
    }

    #[test]
    fn table_levis() {
        let cat = Catalog::bundled();
        assert_eq!(para_hermitian_levis(&cat, "sp(3,R)"), vec!["sl(3,R)+R".to_string()]);
        assert_eq!(para_hermitian_levis(&cat, "so(4,3)"), vec!["so(3,2)+R".to_string()]);
        assert!(para_hermitian_levis(&cat, "sp(2,1)").is_empty());
        assert!(para_hermitian_levis(&cat, "nope").is_empty());
    }

    #[test]
    fn bounded_registry_falls_back_to_tables() {
        let cat = Catalog::bundled();
        let reg = Registry::with_matrix_rank(&cat, 1);
        let r = reg.register_pair("sp(2,1)", "sp(1,1)+sp(1)").unwrap();
        assert!(!r.spec.matrix_level);
        let f = r.spec.sigma_mu_minus.unwrap();
        assert_eq!((f.value, f.provenance), (TriState::Yes, Provenance::Table));
        let r = reg.register_pair("sl(4,R)", "sp(2,R)").unwrap();
        assert_eq!(r.spec.sigma_mu_minus.unwrap().value, TriState::No);
    }
}
