//! Exact certificates for the coisotropic slice criterion: an open-orbit
//! sum test at the slice and the containment
//! `(h + Z_g(W))^perp ⊂ [W, h]` at a base point and at seeded conjugates
//! of it by rational elements of the slice group.
//!
//! Conjugators are `exp(Y)` for nilpotent matrices `Y` and Cayley
//! transforms `(I + Y)(I - Y)^{-1}` otherwise, with `Y` a random small
//! integer combination of the slice directions. Both are exact. Results
//! are point certificates, not proofs over the whole slice.

use crate::cmatrix::CMatrix;
use crate::linalg::{is_zero_vec, scale_vec, QVec, Subspace};
use crate::matlie::{
    ad_eigenspace, highest_sl2, m_subspace, product_algebra, restricted_decomposition, MatlieError,
    MatrixLieAlgebra, RestrictedDecomp, SL2Triple,
};
use crate::scalar::{g_one, rat, ratio, Rational};
use crate::sympair::{
    complexify_involution, hermitian_data, holo_type, HermitianData, HoloType, Involution, SigmaSplit,
    SympairError,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoisoError {
    #[error("request rejected: {0}")]
    Rejected(String),
    #[error("{0}")]
    Matlie(#[from] MatlieError),
    #[error("{0}")]
    Sympair(#[from] SympairError),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Inputs of one slice check.
#[derive(Clone, Debug)]
pub struct SliceCheckRequest {
    pub statement: String,
    pub algebra: Arc<MatrixLieAlgebra>,
    /// The acting subalgebra.
    pub h: Subspace,
    pub x: QVec,
    /// Lie algebra of the slice group, as elements of `algebra`.
    pub slice_directions: Vec<QVec>,
    /// Where slice points must lie; points outside are skipped.
    pub slice_target: Option<Subspace>,
    pub sample_count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumLedger {
    pub name: String,
    pub dim_g: usize,
    pub summands: Vec<(String, usize)>,
    pub sum_dim: usize,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDims {
    pub dim_h: usize,
    pub dim_centralizer: usize,
    pub dim_perp: usize,
    pub dim_bracket: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub id: usize,
    pub generator: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<PointDims>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoisoCertificate {
    pub statement: String,
    pub algebra: String,
    pub seed: u64,
    pub trials: usize,
    /// Hypotheses of the statement, as evaluated.
    pub hypotheses: Vec<(String, bool)>,
    pub openness: Vec<SumLedger>,
    pub points: Vec<PointRecord>,
    pub holds: bool,
}

impl CoisoCertificate {
    pub fn evaluated_points(&self) -> usize {
        self.points.iter().filter(|p| p.outcome != Outcome::Skipped).count()
    }

    fn finish(mut self) -> Self {
        self.holds = self.openness.iter().all(|o| o.holds)
            && self.points.iter().all(|p| p.outcome != Outcome::Fails)
            && self.evaluated_points() > 0;
        self
    }
}

/// `dim(sum of parts) = dim g`, with each part's dimension listed.
pub fn sum_ledger(l: &MatrixLieAlgebra, name: &str, parts: &[(&str, &Subspace)]) -> SumLedger {
    let refs: Vec<&Subspace> = parts.iter().map(|p| p.1).collect();
    let sum = Subspace::sum_all(l.dim(), &refs);
    SumLedger {
        name: name.into(),
        dim_g: l.dim(),
        summands: parts.iter().map(|(n, s)| (n.to_string(), s.dim())).collect(),
        sum_dim: sum.dim(),
        holds: sum.dim() == l.dim(),
    }
}

/// Linearized openness of `Ad(H) S`: `h + s + Z_g(X) = g` for the slice
/// directions `s`.
pub fn check_openness(req: &SliceCheckRequest) -> SumLedger {
    let l = &req.algebra;
    let s = l.span(&req.slice_directions);
    let z = l.centralizer(&req.x);
    sum_ledger(l, "h + slice + Z_g(X) = g", &[("h", &req.h), ("slice", &s), ("Z_g(X)", &z)])
}

/// The containment at one point, with a duality check on the perp.
pub fn containment_at(
    l: &MatrixLieAlgebra,
    h: &Subspace,
    w: &[Rational],
) -> Result<(bool, PointDims), CoisoError> {
    let z = l.centralizer(w);
    let perp = l.orthocomplement(&h.sum(&z));
    if l.orthocomplement(&perp) != h.sum(&z) {
        return Err(CoisoError::Inconsistent(format!("{}: Killing form is degenerate", l.label)));
    }
    let br = l.bracket_image(w, h);
    let dims = PointDims { dim_h: h.dim(), dim_centralizer: z.dim(), dim_perp: perp.dim(), dim_bracket: br.dim() };
    Ok((br.contains_subspace(&perp), dims))
}

fn nilpotent_exp(m: &CMatrix) -> Option<CMatrix> {
    let n = m.size();
    let mut out = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=n {
        term = (&term * m).scale_real(&ratio(1, k as i64));
        if term.is_zero() {
            return Some(out);
        }
        out = &out + &term;
    }
    None
}

fn cayley(m: &CMatrix) -> Option<CMatrix> {
    let id = CMatrix::identity(m.size());
    // both factors must be invertible for the transform to be a group element
    (&id + m).inverse()?;
    Some(&(&id + m) * &(&id - m).inverse()?)
}

/// A random slice-group element; `None` when the Cayley transform is
/// singular.
fn sample_conjugator(
    l: &MatrixLieAlgebra,
    dirs: &[QVec],
    rng: &mut ChaCha8Rng,
    single: bool,
) -> (String, Option<(CMatrix, CMatrix)>) {
    let d = l.dim();
    let mut y = vec![Rational::zero(); d];
    let mut terms = Vec::new();
    if single {
        let i = rng.gen_range(0..dirs.len());
        y = dirs[i].clone();
        terms.push(format!("d{i}"));
    } else {
        for (i, v) in dirs.iter().enumerate() {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                crate::linalg::axpy(&mut y, &rat(c), v);
                terms.push(format!("{c}*d{i}"));
            }
        }
        if terms.is_empty() {
            let i = rng.gen_range(0..dirs.len());
            y = dirs[i].clone();
            terms.push(format!("d{i}"));
        }
    }
    const T: [(i64, i64); 5] = [(1, 1), (1, 2), (-1, 2), (1, 3), (2, 1)];
    let (p, q) = T[rng.gen_range(0..T.len())];
    let t = ratio(p, q);
    let m = l.element_matrix(&scale_vec(&t, &y));
    let arg = format!("{t}*({})", terms.join(" + "));
    if let Some(g) = nilpotent_exp(&m) {
        let g_inv = nilpotent_exp(&m.scale(&-g_one())).expect("negation of a nilpotent");
        return (format!("exp({arg})"), Some((g, g_inv)));
    }
    let name = format!("cayley({arg})");
    match cayley(&m) {
        Some(g) => {
            // (1 + m)(1 - m)^-1 inverts to (1 - m)(1 + m)^-1
            let g_inv = cayley(&m.scale(&-g_one())).expect("1 + m and 1 - m are invertible");
            (name, Some((g, g_inv)))
        }
        None => (name, None),
    }
}

const MAX_REDRAWS: usize = 8;

/// Containment at `X` and at `sample_count` seeded slice points.
pub fn check_slice_containment(req: &SliceCheckRequest) -> Result<CoisoCertificate, CoisoError> {
    let l = &req.algebra;
    if is_zero_vec(&req.x) {
        return Err(CoisoError::Rejected("X = 0".into()));
    }
    if !l.is_subalgebra(&req.h) {
        return Err(CoisoError::Rejected("h is not closed under the bracket".into()));
    }
    let mut points = Vec::new();
    let (ok, dims) = containment_at(l, &req.h, &req.x)?;
    points.push(PointRecord {
        id: 0,
        generator: "base point".into(),
        outcome: if ok { Outcome::Holds } else { Outcome::Fails },
        dims: Some(dims),
        note: None,
    });
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    for id in 1..=req.sample_count {
        if req.slice_directions.is_empty() {
            break;
        }
        // redraw while the Cayley transform is singular
        let mut draw = sample_conjugator(l, &req.slice_directions, &mut rng, id % 2 == 1);
        for _ in 0..MAX_REDRAWS {
            if draw.1.is_some() {
                break;
            }
            draw = sample_conjugator(l, &req.slice_directions, &mut rng, false);
        }
        let (generator, g) = draw;
        let skipped = |note: &str| PointRecord {
            id,
            generator: generator.clone(),
            outcome: Outcome::Skipped,
            dims: None,
            note: Some(note.into()),
        };
        let Some((g, g_inv)) = g else {
            points.push(skipped("I - Y is singular"));
            continue;
        };
        let Some(w) = l.conjugate_element(&req.x, &g, &g_inv) else {
            points.push(skipped("conjugate leaves the algebra"));
            continue;
        };
        if req.slice_target.as_ref().is_some_and(|t| !t.contains(&w)) {
            points.push(skipped("conjugate leaves the slice"));
            continue;
        }
        let (ok, dims) = containment_at(l, &req.h, &w)?;
        points.push(PointRecord {
            id,
            generator,
            outcome: if ok { Outcome::Holds } else { Outcome::Fails },
            dims: Some(dims),
            note: None,
        });
    }
    Ok(CoisoCertificate {
        statement: req.statement.clone(),
        algebra: l.label.clone(),
        seed: req.seed,
        trials: req.sample_count,
        hypotheses: Vec::new(),
        openness: Vec::new(),
        points,
        holds: false,
    }
    .finish())
}

/// Openness plus containment.
pub fn certify(
    req: &SliceCheckRequest,
    hypotheses: Vec<(String, bool)>,
    extra: Vec<SumLedger>,
) -> Result<CoisoCertificate, CoisoError> {
    let mut cert = check_slice_containment(req)?;
    cert.hypotheses = hypotheses;
    cert.openness.push(check_openness(req));
    cert.openness.extend(extra);
    Ok(cert.finish())
}

/// Direct sum `U + V` inside `L + L`.
fn direct_pair(p: &MatrixLieAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let d = u.ambient();
    let z = vec![Rational::zero(); d];
    let mut vs: Vec<QVec> = u.basis().iter().map(|x| p.pair(x, &z)).collect();
    vs.extend(v.basis().iter().map(|y| p.pair(&z, y)));
    p.span(&vs)
}

fn highest_data(l: &MatrixLieAlgebra, dcmp: &RestrictedDecomp) -> Result<(SL2Triple, Subspace, Subspace), CoisoError> {
    let t = highest_sl2(l, dcmp)?;
    let mu = dcmp.highest_root().clone();
    let neg: QVec = mu.iter().map(|x| -x.clone()).collect();
    let gmu = dcmp.root_space(&mu).cloned().expect("highest root space");
    let gneg = dcmp
        .root_space(&neg)
        .cloned()
        .ok_or_else(|| CoisoError::Inconsistent(format!("{}: -mu is not a root", l.label)))?;
    Ok((t, gmu, gneg))
}

/// Restriction to `G_C^sigma` on `Ad(G_C) X`, `X ∈ p_+`, for a Hermitian
/// `g`; the statement is proved for anti-holomorphic `sigma`.
pub fn hermitian_restriction(
    l: &MatrixLieAlgebra,
    sigma: &Involution,
    trials: usize,
    seed: u64,
) -> Result<CoisoCertificate, CoisoError> {
    let hd = hermitian_data(l)?.ok_or_else(|| CoisoError::Rejected(format!("{} is not of Hermitian type", l.label)))?;
    let anti = holo_type(sigma, &hd.z)? == HoloType::AntiHolomorphic;
    let g_c = Arc::new(hd.g_c.clone());
    let sigma_c = complexify_involution(&g_c, sigma)?;
    let swaps = hd.p_plus.image(g_c.dim(), |v| sigma_c.apply(v)) == hd.p_minus;
    let x = hd.p_plus.basis()[0].clone();
    let req = SliceCheckRequest {
        statement: "G_C^sigma acts coisotropically on Ad(G_C)X for X in p_+".into(),
        algebra: g_c.clone(),
        h: sigma_c.fixed.clone(),
        x: x.clone(),
        slice_directions: hd.k_c.basis().to_vec(),
        slice_target: Some(hd.p_plus.clone()),
        sample_count: trials,
        seed,
    };
    let extra = sum_ledger(
        &g_c,
        "g_C = g_C^sigma + k_C + Z(X)",
        &[("g_C^sigma", &sigma_c.fixed), ("k_C", &hd.k_c), ("Z(X)", &g_c.centralizer(&x))],
    );
    certify(
        &req,
        vec![("sigma is anti-holomorphic".into(), anti), ("sigma p_+ = p_-".into(), swaps)],
        vec![extra],
    )
}

/// Diagonal `G_C` on `Ad(G_C)X × Ad(G_C)Y`, `X ∈ p_+`, `Y ∈ p_-`.
pub fn hermitian_diagonal(l: &MatrixLieAlgebra, trials: usize, seed: u64) -> Result<CoisoCertificate, CoisoError> {
    let hd = hermitian_data(l)?.ok_or_else(|| CoisoError::Rejected(format!("{} is not of Hermitian type", l.label)))?;
    let prod = Arc::new(product_algebra(&hd.g_c, &hd.g_c)?);
    let x = hd.p_plus.basis()[0].clone();
    let y = hd.p_minus.basis()[0].clone();
    let kk = direct_pair(&prod, &hd.k_c, &hd.k_c);
    let req = SliceCheckRequest {
        statement: "diag G_C acts coisotropically on Ad(G_C)X x Ad(G_C)Y".into(),
        algebra: prod.clone(),
        h: prod.diagonal()?,
        x: prod.pair(&x, &y),
        slice_directions: kk.basis().to_vec(),
        slice_target: Some(direct_pair(&prod, &hd.p_plus, &hd.p_minus)),
        sample_count: trials,
        seed,
    };
    certify(&req, vec![("X in p_+, Y in p_-".into(), true)], Vec::new())
}

/// Restriction to `G_C^sigma` on the complexified minimal real orbit,
/// checked on real g (all subspaces are defined over R, so the complex
/// statement follows by extension of scalars).
pub fn minimal_restriction(
    l: &Arc<MatrixLieAlgebra>,
    sigma: &Involution,
    split: &SigmaSplit,
    trials: usize,
    seed: u64,
) -> Result<CoisoCertificate, CoisoError> {
    let dcmp = &split.decomposition;
    let (t, gmu, gneg) = highest_data(l, dcmp)?;
    let m = m_subspace(l, &dcmp.a_basis);
    let mut dirs = m.basis().to_vec();
    dirs.push(t.a_mu.clone());
    let ma = l.span(&dirs);
    let z = l.centralizer(&t.x);
    let xg = l.bracket_image(&t.x, &gneg);
    let req = SliceCheckRequest {
        statement: "G_C^sigma acts coisotropically on the complexified minimal real orbit".into(),
        algebra: l.clone(),
        h: sigma.fixed.clone(),
        x: t.x.clone(),
        slice_directions: dirs,
        slice_target: Some(gmu),
        sample_count: trials,
        seed,
    };
    let second = sum_ledger(l, "g = g^sigma + Z(X) + [X, g_-2]", &[("g^sigma", &sigma.fixed), ("Z(X)", &z), ("[X,g_-2]", &xg)]);
    let first = sum_ledger(l, "g = g^sigma + (m + R A_mu) + Z(X)", &[("g^sigma", &sigma.fixed), ("m+RA", &ma), ("Z(X)", &z)]);
    certify(&req, vec![("sigma mu = -mu".into(), split.sigma_mu_minus())], vec![first, second])
}

/// Diagonal action on a product of two copies of the complexified
/// minimal real orbit at `(X, Y')`, with slice points
/// `(Ad(l)X, Ad(l^{-1})Y')` for `l` in `M exp(R A_mu)`.
pub fn check_diag_product(
    l: &MatrixLieAlgebra,
    dcmp: &RestrictedDecomp,
    x: &[Rational],
    yprime: &[Rational],
    trials: usize,
    seed: u64,
) -> Result<CoisoCertificate, CoisoError> {
    let (t, gmu, gneg) = highest_data(l, dcmp)?;
    if is_zero_vec(x) || is_zero_vec(yprime) {
        return Err(CoisoError::Rejected("X and Y' must be nonzero".into()));
    }
    if !gmu.contains(x) || !gneg.contains(yprime) {
        return Err(CoisoError::Rejected("X must lie in g(a; mu) and Y' in g(a; -mu)".into()));
    }
    let prod = Arc::new(product_algebra(l, l)?);
    let m = m_subspace(l, &dcmp.a_basis);
    let mut single = m.basis().to_vec();
    single.push(t.a_mu.clone());
    let dirs: Vec<QVec> = single.iter().map(|v| prod.pair(v, &scale_vec(&-Rational::one(), v))).collect();
    let ma = l.span(&single);
    let zglmd = sum_ledger(
        l,
        "g = Z(Y) + (m + R A_mu) + Z(X)",
        &[("Z(Y)", &l.centralizer(yprime)), ("m+RA", &ma), ("Z(X)", &l.centralizer(x))],
    );
    let req = SliceCheckRequest {
        statement: "diag G_C acts coisotropically on two copies of the complexified minimal real orbit".into(),
        algebra: prod.clone(),
        h: prod.diagonal()?,
        x: prod.pair(x, yprime),
        slice_directions: dirs,
        slice_target: Some(direct_pair(&prod, &gmu, &gneg)),
        sample_count: trials,
        seed,
    };
    certify(&req, Vec::new(), vec![zglmd])
}

/// `check_diag_product` at the highest `sl2`-triple of the default
/// restricted decomposition.
pub fn minimal_diagonal(l: &MatrixLieAlgebra, trials: usize, seed: u64) -> Result<CoisoCertificate, CoisoError> {
    let dcmp = restricted_decomposition(l)?;
    let t = highest_sl2(l, &dcmp)?;
    check_diag_product(l, &dcmp, &t.x, &t.y, trials, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianIdentity {
    /// dim `[X, p_-]`.
    pub lhs_dim: usize,
    /// dim of the perp of `Z_{k_C}(X)` in `k_C`.
    pub rhs_dim: usize,
    pub equal: bool,
    /// dim `[X, g_C]` and dim `[X, k_C]`.
    pub orbit_dim: usize,
    pub k_orbit_dim: usize,
    pub rank_identity: bool,
    pub holds: bool,
}

/// `[X, p_-]` equals the Killing perp of `Z_{k_C}(X)` inside `k_C`, and
/// `dim Ad(G_C)X = 2 dim Ad(K_C)X`.
pub fn check_hermitian_identity(hd: &HermitianData, x: &[Rational]) -> Result<HermitianIdentity, CoisoError> {
    if is_zero_vec(x) || !hd.p_plus.contains(x) {
        return Err(CoisoError::Rejected("X must be a nonzero element of p_+".into()));
    }
    let g = &hd.g_c;
    let lhs = g.bracket_image(x, &hd.p_minus);
    let zk = hd.k_c.intersection(&g.centralizer(x));
    let rhs = hd.k_c.intersection(&g.orthocomplement(&zk));
    let orbit = g.bracket_image(x, &g.full()).dim();
    let k_orbit = g.bracket_image(x, &hd.k_c).dim();
    let equal = lhs == rhs;
    let rank_identity = orbit == 2 * k_orbit;
    Ok(HermitianIdentity {
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        equal,
        orbit_dim: orbit,
        k_orbit_dim: k_orbit,
        rank_identity,
        holds: equal && rank_identity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingLedger {
    /// dims of `g_j`, `j = -2..=2`.
    pub dims: [usize; 5],
    pub a: usize,
    pub b: usize,
    pub rank_ad_x: usize,
    pub triple: bool,
    /// `Z_g(X) = Z_g(sl2^X) + g_1 + g_2`, direct.
    pub centralizer_identity: bool,
    /// `g_0 = Z_g(sl2^X) + (m + R A_mu)`.
    pub g0_identity: bool,
}

impl GradingLedger {
    pub fn holds(&self) -> bool {
        self.triple
            && self.centralizer_identity
            && self.g0_identity
            && self.rank_ad_x == self.a + 2 * self.b
            && self.dims[0] == self.dims[4]
            && self.dims[1] == self.dims[3]
    }
}

/// Eigenspaces of `ad(A_mu)` and the subspace identities around them.
pub fn grading_check(l: &MatrixLieAlgebra, dcmp: &RestrictedDecomp) -> Result<GradingLedger, CoisoError> {
    let t = highest_sl2(l, dcmp)?;
    let spaces: Vec<Subspace> = (-2..=2).map(|j| ad_eigenspace(l, &t.a_mu, &rat(j))).collect();
    let total: usize = spaces.iter().map(|s| s.dim()).sum();
    if total != l.dim() {
        return Err(CoisoError::Inconsistent(format!(
            "{}: ad(A_mu) has eigenvalues outside {{0, ±1, ±2}} ({} of {} dimensions accounted for)",
            l.label,
            total,
            l.dim()
        )));
    }
    let sl2 = l.span(&[t.x.clone(), t.a_mu.clone(), t.y.clone()]);
    let zsl2 = l.centralizer_of(&sl2);
    let zx = l.centralizer(&t.x);
    let graded = Subspace::sum_all(l.dim(), &[&zsl2, &spaces[3], &spaces[4]]);
    let centralizer_identity = graded == zx && zsl2.dim() + spaces[3].dim() + spaces[4].dim() == zx.dim();
    let mut ma = m_subspace(l, &dcmp.a_basis).basis().to_vec();
    ma.push(t.a_mu.clone());
    let g0 = zsl2.sum(&l.span(&ma));
    let rank_ad_x = l.bracket_image(&t.x, &l.full()).dim();
    Ok(GradingLedger {
        dims: [spaces[0].dim(), spaces[1].dim(), spaces[2].dim(), spaces[3].dim(), spaces[4].dim()],
        a: spaces[3].dim(),
        b: spaces[4].dim(),
        rank_ad_x,
        triple: t.holds(l),
        centralizer_identity,
        g0_identity: g0 == spaces[2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::matlie::construct_classical;
    use crate::sympair::Registry;

    fn trivial_request(label: &str) -> SliceCheckRequest {
        let l = Arc::new(construct_classical(label).unwrap());
        let t = highest_sl2(&l, &restricted_decomposition(&l).unwrap()).unwrap();
        SliceCheckRequest {
            statement: "h = g".into(),
            h: l.full(),
            x: t.x,
            slice_directions: l.k().basis().to_vec(),
            slice_target: None,
            sample_count: 3,
            seed: 0,
            algebra: l,
        }
    }

    #[test]
    fn whole_algebra_is_trivially_coisotropic() {
        let req = trivial_request("sl(3,R)");
        assert!(check_openness(&req).holds);
        let c = check_slice_containment(&req).unwrap();
        assert!(c.holds);
        assert!(c.points.iter().filter_map(|p| p.dims.as_ref()).all(|d| d.dim_perp == 0));
    }

    #[test]
    fn zero_point_is_rejected() {
        let mut req = trivial_request("sl(2,R)");
        req.x = vec![Rational::zero(); 3];
        assert!(matches!(check_slice_containment(&req), Err(CoisoError::Rejected(_))));
        let l = construct_classical("sl(2,R)").unwrap();
        let d = restricted_decomposition(&l).unwrap();
        let t = highest_sl2(&l, &d).unwrap();
        assert!(check_diag_product(&l, &d, &req.x, &t.y, 2, 0).is_err());
    }

    #[test]
    fn grading_examples() {
        let cases = [("sl(2,R)", [1, 0, 1, 0, 1]), ("sl(3,R)", [1, 2, 2, 2, 1])];
        for (label, dims) in cases {
            let l = construct_classical(label).unwrap();
            let g = grading_check(&l, &restricted_decomposition(&l).unwrap()).unwrap();
            assert_eq!(g.dims, dims, "{label}");
            assert!(g.holds());
        }
        let l = construct_classical("sp(2,1)").unwrap();
        let g = grading_check(&l, &restricted_decomposition(&l).unwrap()).unwrap();
        // a = 4(p+q-2), b = 3
        assert_eq!(g.dims, [3, 4, 7, 4, 3]);
        assert_eq!(g.rank_ad_x, 10);
    }

    #[test]
    fn su11_identity_is_all_of_k() {
        let l = construct_classical("sl(2,R)").unwrap();
        let hd = hermitian_data(&l).unwrap().unwrap();
        let x = hd.p_plus.basis()[0].clone();
        let r = check_hermitian_identity(&hd, &x).unwrap();
        // Z_{k_C}(X) = 0, so both sides are k_C (real dimension 2)
        assert_eq!((r.lhs_dim, r.rhs_dim), (2, 2));
        assert!(r.holds);
        let y = hd.p_minus.basis()[0].clone();
        assert!(check_hermitian_identity(&hd, &y).is_err());
    }

    #[test]
    fn theorem_instances() {
        let cat = Catalog::bundled();
        let reg = Registry::new(&cat);
        let r = reg.register_pair("sl(2,R)", "so(1,1)").unwrap();
        let m = r.model.unwrap();
        assert!(hermitian_restriction(&m.algebra, &m.sigma, 3, 7).unwrap().holds);

        let r = reg.register_pair("sp(1,2)", "sp(1,1)+sp(0,1)").unwrap();
        let m = r.model.unwrap();
        let c = minimal_restriction(&m.algebra, &m.sigma, m.split.as_ref().unwrap(), 3, 7).unwrap();
        assert!(c.holds && c.hypotheses[0].1);

        let l = construct_classical("sl(2,R)").unwrap();
        let c = minimal_diagonal(&l, 3, 7).unwrap();
        assert!(c.holds);
        assert_eq!(c.evaluated_points(), 4);
    }

    #[test]
    fn certificates_are_reproducible() {
        let l = construct_classical("sp(1,1)").unwrap();
        let a = serde_json::to_string(&minimal_diagonal(&l, 4, 11).unwrap()).unwrap();
        let b = serde_json::to_string(&minimal_diagonal(&l, 4, 11).unwrap()).unwrap();
        assert_eq!(a, b);
        let back: CoisoCertificate = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
    }
}
