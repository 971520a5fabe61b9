//! Route-by-route decision engine. For a symmetric pair `(g, g')`, or for
//! the tensor product question on `g`, every route is evaluated
//! independently and the passing ones are reported together with the
//! witness representation family and the provenance of each condition.

use crate::catalog::{AlgebraRecord, Catalog, TriState};
use crate::families::{is_five_name, is_hermitian_name, is_mingk_excluded_name, is_type_a_split_name, m_formula};
use crate::label::{shape_a, shape_so, AlgebraLabel};
use crate::matlie::Family;
use crate::rootdata::{m_real, n_for, CartanType};
use crate::sympair::{para_hermitian_levis, Provenance, RegisteredPair, Registry, SymmetricPairSpec, SympairError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerdictError {
    #[error(transparent)]
    Sympair(#[from] SympairError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RepKind {
    HighestWeight,
    DegeneratePrincipalSeries,
    MinimalGKDim,
    AqLambda,
    /// Every irreducible representation; used by the BB-pair route.
    AllIrreducible,
}

/// A GK dimension, exact or as a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GkDim {
    Exact(u32),
    Formula(String),
}

impl GkDim {
    pub fn exact(&self) -> Option<u32> {
        match self {
            GkDim::Exact(d) => Some(*d),
            GkDim::Formula(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFamily {
    pub kind: RepKind,
    pub gk_dim: GkDim,
    pub notes: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RouteId {
    #[serde(rename = "BB-pair")]
    BbPair,
    #[serde(rename = "HW-restriction")]
    HwRestriction,
    #[serde(rename = "ParaHermitian")]
    ParaHermitian,
    #[serde(rename = "MinimalGK")]
    MinimalGk,
    #[serde(rename = "SmallRep")]
    SmallRep,
    #[serde(rename = "HW-tensor")]
    HwTensor,
    #[serde(rename = "Para-tensor")]
    ParaTensor,
    #[serde(rename = "MinimalGK-tensor")]
    MinimalGkTensor,
    #[serde(rename = "SmallRep-tensor")]
    SmallRepTensor,
}

impl RouteId {
    pub fn name(self) -> &'static str {
        match self {
            RouteId::BbPair => "BB-pair",
            RouteId::HwRestriction => "HW-restriction",
            RouteId::ParaHermitian => "ParaHermitian",
            RouteId::MinimalGk => "MinimalGK",
            RouteId::SmallRep => "SmallRep",
            RouteId::HwTensor => "HW-tensor",
            RouteId::ParaTensor => "Para-tensor",
            RouteId::MinimalGkTensor => "MinimalGK-tensor",
            RouteId::SmallRepTensor => "SmallRep-tensor",
        }
    }

    pub const RESTRICTION: [RouteId; 5] =
        [RouteId::BbPair, RouteId::HwRestriction, RouteId::ParaHermitian, RouteId::MinimalGk, RouteId::SmallRep];
    pub const TENSOR: [RouteId; 4] =
        [RouteId::HwTensor, RouteId::ParaTensor, RouteId::MinimalGkTensor, RouteId::SmallRepTensor];
}

impl std::fmt::Display for RouteId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub condition: String,
    pub result: TriState,
    pub provenance: Provenance,
    pub source: String,
}

impl Condition {
    fn new(condition: impl Into<String>, result: TriState, provenance: Provenance, source: impl Into<String>) -> Self {
        Condition { condition: condition.into(), result, provenance, source: source.into() }
    }

    fn bool(condition: impl Into<String>, result: bool, provenance: Provenance, source: impl Into<String>) -> Self {
        let r = if result { TriState::Yes } else { TriState::No };
        Self::new(condition, r, provenance, source)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RouteStatus {
    Passes,
    /// Hypotheses hold but no witness representation is registered.
    Conditional,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub theorem_id: RouteId,
    pub status: RouteStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<RepFamily>,
    pub conditions_checked: Vec<Condition>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Route {
    fn all_computed(&self) -> bool {
        self.conditions_checked.iter().all(|c| c.provenance == Provenance::Computed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bounded {
    Certified,
    TableCertified,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pair: SymmetricPairSpec,
    /// `true` for the tensor product question on `g`.
    pub tensor: bool,
    /// Passing routes, in evaluation order.
    pub routes: Vec<Route>,
    /// Routes evaluated but not passing.
    pub other_routes: Vec<Route>,
    pub bounded: Bounded,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
    pub caveats: Vec<String>,
}

impl Verdict {
    pub fn route_ids(&self) -> Vec<RouteId> {
        self.routes.iter().map(|r| r.theorem_id).collect()
    }

    pub fn route(&self, id: RouteId) -> Option<&Route> {
        self.routes.iter().find(|r| r.theorem_id == id)
    }

    pub fn has(&self, id: RouteId) -> bool {
        self.route(id).is_some()
    }
}

pub const CAVEATS: [&str; 2] = [
    "Lie algebra level: G is taken simply connected; covering and component questions are not decided",
    "a route certifies bounded multiplicity for the witness family, not for every irreducible representation",
];

const UNITARY_NOTE: &str =
    "for unitary witnesses the direct integral decomposition of the restriction has bounded multiplicity as well (analytic, not computed)";

/// Outcome of the minimal-GK-dimension existence test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalGk {
    pub exists: bool,
    /// Witness family when `exists`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<RepFamily>,
    /// Name (label or alias) that put g on the exclusion list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded_by: Option<String>,
}

fn n_of(a: &AlgebraRecord) -> u32 {
    n_for(a.complex_type, a.is_complex) as u32
}

/// Whether g carries an infinite-dimensional unitary representation with
/// GK dimension `n(g_C)`. The exclusion list is applied to every alias.
pub fn minimal_gk_exists(catalog: &Catalog, g: &str) -> Result<MinimalGk, VerdictError> {
    let a = catalog.algebra(g).ok_or_else(|| SympairError::UnknownAlgebra {
        label: g.to_string(),
        suggestions: catalog.suggestions(g),
    })?;
    Ok(minimal_gk_of(a))
}

fn minimal_gk_of(a: &AlgebraRecord) -> MinimalGk {
    if let Some(name) = a.names().find(|n| is_mingk_excluded_name(n)) {
        return MinimalGk { exists: false, witness: None, excluded_by: Some(name.to_string()) };
    }
    let n = GkDim::Exact(n_of(a));
    let witness = if let Some(name) = a.names().find(|n| is_type_a_split_name(n)) {
        RepFamily {
            kind: RepKind::DegeneratePrincipalSeries,
            gk_dim: n,
            notes: format!("degenerate principal series induced from a mirabolic subgroup of {name}"),
        }
    } else if let Some(name) = a.names().find(|n| matches!(Family::parse(n), Ok(Family::SuPQ(..)))) {
        RepFamily {
            kind: RepKind::HighestWeight,
            gk_dim: n,
            notes: format!("highest weight module of smallest GK dimension of {name}"),
        }
    } else {
        RepFamily { kind: RepKind::MinimalGKDim, gk_dim: n, notes: "minimal representation".into() }
    };
    MinimalGk { exists: true, witness: Some(witness), excluded_by: None }
}

type Types = Vec<CartanType>;

fn bb_blocks(max_rank: usize) -> Vec<(Types, Types)> {
    let mut out: Vec<(Types, Types)> = Vec::new();
    for n in 2..=max_rank + 1 {
        out.push((shape_a(n).types, shape_a(n - 1).types));
    }
    for n in 3..=2 * max_rank + 2 {
        out.push((shape_so(n).types, shape_so(n - 1).types));
    }
    out.sort();
    out.dedup();
    out
}

fn take(pool: &[CartanType], part: &[CartanType]) -> Option<Types> {
    let mut rest = pool.to_vec();
    for t in part {
        let i = rest.iter().position(|x| x == t)?;
        rest.remove(i);
    }
    Some(rest)
}

fn bb_match(g: &[CartanType], h: &[CartanType], blocks: &[(Types, Types)]) -> bool {
    let Some(first) = g.first() else {
        return h.is_empty();
    };
    blocks.iter().filter(|(bg, _)| bg.contains(first)).any(|(bg, bh)| {
        match (take(g, bg), take(h, bh)) {
            (Some(g2), Some(h2)) => bb_match(&g2, &h2, blocks),
            _ => false,
        }
    })
}

/// `(g_C, g'_C)` is a direct sum of `(sl_n, gl_{n-1})`, `(so_n, so_{n-1})`
/// and `(so_8, spin_7)` up to abelian ideals. Shapes are compared on
/// simple factors; `spin_7` and `so_7` have the same shape.
pub fn is_bb_pair(g: &str, gprime: &str) -> Option<bool> {
    let gc = AlgebraLabel::parse(g).ok()?.complexified();
    let hc = AlgebraLabel::parse(gprime).ok()?.complexified();
    let max_rank = gc.types.iter().map(|t| t.rank).max().unwrap_or(0);
    Some(bb_match(&gc.types, &hc.types, &bb_blocks(max_rank)))
}

fn hermitian_flag(a: &AlgebraRecord) -> Result<bool, VerdictError> {
    let listed = a.names().any(is_hermitian_name);
    if listed != a.hermitian {
        return Err(VerdictError::Inconsistent(format!(
            "{}: catalog hermitian = {} but the Hermitian list says {}",
            a.label, a.hermitian, listed
        )));
    }
    Ok(listed)
}

/// `m(g)` from the root datum, checked against the closed formulas.
fn m_of(a: &AlgebraRecord) -> Result<u32, VerdictError> {
    let m = m_real(&a.datum()).map_err(|e| VerdictError::Inconsistent(e.to_string()))?;
    if let Some(f) = a.names().find_map(m_formula) {
        if f != m {
            return Err(VerdictError::Inconsistent(format!("{}: m = {m} from the root datum, {f} from the table", a.label)));
        }
    }
    Ok(m)
}

fn dim_p_plus(a: &AlgebraRecord) -> Option<usize> {
    let l = AlgebraLabel::parse(&a.label).ok()?;
    Some((l.dim() - l.compact_dim()) / 2)
}

/// A witness with DIM = m(g): the cohomologically induced modules for
/// sp(p,q) and f4(-20), or a minimal-GK witness when m = n.
fn small_witness(a: &AlgebraRecord, m: u32, mingk: &MinimalGk) -> Option<RepFamily> {
    if let Some(name) = a.names().find(|n| matches!(Family::parse(n), Ok(Family::SpPQ(..)))) {
        return Some(RepFamily {
            kind: RepKind::AqLambda,
            gk_dim: GkDim::Exact(m),
            notes: format!("A_q(lambda) of {name} with DIM = 2(p+q)-1"),
        });
    }
    if a.names().any(|n| n.replace(' ', "") == "f4(-20)") {
        return Some(RepFamily {
            kind: RepKind::AqLambda,
            gk_dim: GkDim::Exact(m),
            notes: "A_q(lambda) of f4(-20); K_C-orbit dimensions 0, 22, 30 leave DIM = 11".into(),
        });
    }
    if m == n_of(a) {
        return mingk.witness.clone();
    }
    None
}

fn route(id: RouteId, status: RouteStatus, witness: Option<RepFamily>, conditions: Vec<Condition>) -> Route {
    let notes = if status == RouteStatus::Passes { vec![UNITARY_NOTE.to_string()] } else { vec![] };
    let witness = if status == RouteStatus::Passes { witness } else { None };
    Route { theorem_id: id, status, witness, conditions_checked: conditions, notes }
}

fn pass_if(b: bool) -> RouteStatus {
    if b {
        RouteStatus::Passes
    } else {
        RouteStatus::Fails
    }
}

/// The routes shared by restriction and tensor questions.
struct Common {
    hermitian: bool,
    hermitian_prov: Provenance,
    levis: Vec<String>,
    mingk: MinimalGk,
    m: u32,
    n: u32,
}

fn common(cat: &Catalog, a: &AlgebraRecord, matrix_level: bool) -> Result<Common, VerdictError> {
    Ok(Common {
        hermitian: hermitian_flag(a)?,
        hermitian_prov: if matrix_level { Provenance::Computed } else { Provenance::Table },
        levis: para_hermitian_levis(cat, &a.label),
        mingk: minimal_gk_of(a),
        m: m_of(a)?,
        n: n_of(a),
    })
}

fn hw_route(id: RouteId, a: &AlgebraRecord, c: &Common) -> Route {
    let source = if c.hermitian_prov == Provenance::Computed {
        "center of k on the matrix model, cross-checked with the algebras of Hermitian type"
    } else {
        "algebras of Hermitian type"
    };
    let witness = dim_p_plus(a).map(|d| RepFamily {
        kind: RepKind::HighestWeight,
        gk_dim: GkDim::Formula(format!("at most dim p_+ = {d}")),
        notes: "irreducible unitary highest weight representations".into(),
    });
    route(
        id,
        pass_if(c.hermitian),
        witness,
        vec![Condition::bool("g is of Hermitian type", c.hermitian, c.hermitian_prov, source)],
    )
}

fn para_route(id: RouteId, a: &AlgebraRecord, c: &Common) -> Route {
    let witness = c.levis.first().and_then(|l| {
        let dl = AlgebraLabel::parse(l).ok()?.dim();
        let dn = (a.datum().dim_g() - dl) / 2;
        Some(RepFamily {
            kind: RepKind::DegeneratePrincipalSeries,
            gk_dim: GkDim::Exact(dn as u32),
            notes: if c.levis.len() > 1 {
                format!("Ind_P^G(xi) with Levi factor {l}; other Levi factors {}", c.levis[1..].join(", "))
            } else {
                format!("Ind_P^G(xi) with Levi factor {l}")
            },
        })
    });
    let cond = Condition::bool(
        "g is the transformation algebra of a para-Hermitian symmetric space",
        !c.levis.is_empty(),
        Provenance::Table,
        "list of para-Hermitian symmetric pairs",
    );
    route(id, pass_if(!c.levis.is_empty()), witness, vec![cond])
}

fn mingk_route(id: RouteId, c: &Common) -> Route {
    let source = match &c.mingk.excluded_by {
        Some(name) => format!("exclusion list of the minimal GK dimension lemma, via {name}"),
        None => "exclusion list of the minimal GK dimension lemma".into(),
    };
    let cond = Condition::bool(
        "g has an irreducible unitary representation with DIM = n(g_C)",
        c.mingk.exists,
        Provenance::Table,
        source,
    );
    route(id, pass_if(c.mingk.exists), c.mingk.witness.clone(), vec![cond])
}

fn small_route(id: RouteId, a: &AlgebraRecord, c: &Common, sigma_mu: Option<Condition>) -> Route {
    let witness = small_witness(a, c.m, &c.mingk);
    let mut conds = Vec::new();
    let hyp = match sigma_mu {
        Some(cond) => {
            let r = cond.result;
            conds.push(cond);
            r
        }
        None => TriState::Yes,
    };
    conds.push(Condition::bool(
        format!("a representation with DIM = m(g) = {} is registered", c.m),
        witness.is_some(),
        Provenance::Table,
        if witness.is_some() && c.m != c.n {
            "GK dimension of A_q(lambda) for sp(p,q) and f4(-20)"
        } else {
            "minimal GK witnesses when m(g) = n(g_C)"
        },
    ));
    let status = match (hyp, witness.is_some()) {
        (TriState::Yes, true) => RouteStatus::Passes,
        (TriState::Yes, false) => RouteStatus::Conditional,
        _ => RouteStatus::Fails,
    };
    route(id, status, witness, conds)
}

fn finish(pair: SymmetricPairSpec, tensor: bool, all: Vec<Route>) -> Verdict {
    let (routes, other_routes): (Vec<Route>, Vec<Route>) =
        all.into_iter().partition(|r| r.status == RouteStatus::Passes);
    let bounded = if routes.is_empty() {
        Bounded::Unknown
    } else if routes.iter().any(Route::all_computed) {
        Bounded::Certified
    } else {
        Bounded::TableCertified
    };
    let mut diagnostics = Vec::new();
    if routes.is_empty() {
        diagnostics.push(format!(
            "no route applies to ({}, {}); every symmetric pair of a simple algebra should have one, so the catalog is suspect",
            pair.g_label, pair.gprime_label
        ));
    }
    for r in other_routes.iter().filter(|r| r.status == RouteStatus::Conditional) {
        diagnostics.push(format!("{} is conditional: hypotheses hold but no witness with DIM = m(g) is registered", r.theorem_id));
    }
    Verdict { pair, tensor, routes, other_routes, bounded, diagnostics, caveats: CAVEATS.iter().map(|s| s.to_string()).collect() }
}

/// All restriction routes for a registered pair, no short-circuiting.
/// The group case `(h + h, h)` is answered by [`decide_tensor`].
pub fn decide_pair(reg: &Registry, g: &str, gprime: &str) -> Result<Verdict, VerdictError> {
    let rp = reg.register_pair(g, gprime)?;
    if rp.spec.group_case {
        return decide_tensor_on(reg, rp);
    }
    let a = reg.algebra(&rp.spec.g_label)?;
    let c = common(reg.catalog, a, rp.model.is_some())?;
    let spec = &rp.spec;

    let bb = is_bb_pair(&spec.g_label, &spec.gprime_label);
    let bb_route = route(
        RouteId::BbPair,
        pass_if(bb == Some(true)),
        Some(RepFamily {
            kind: RepKind::AllIrreducible,
            gk_dim: GkDim::Formula("any".into()),
            notes: "multiplicities bounded uniformly over all irreducible representations".into(),
        }),
        vec![Condition::new(
            "(g_C, g'_C) is a sum of (sl_n, gl_{n-1}), (so_n, so_{n-1}), (so_8, spin_7) up to abelian ideals",
            match bb {
                Some(true) => TriState::Yes,
                Some(false) => TriState::No,
                None => TriState::Unknown,
            },
            Provenance::Computed,
            "complexified shapes of the labels",
        )],
    );

    let sigma_mu = spec.sigma_mu_minus.as_ref().map(|f| {
        Condition::new("sigma(mu) = -mu", f.value, f.provenance, f.source.clone())
    });
    let sigma_mu = sigma_mu.unwrap_or_else(|| {
        Condition::new("sigma(mu) = -mu", TriState::Unknown, Provenance::Table, "no flag registered")
    });

    let all = vec![
        bb_route,
        hw_route(RouteId::HwRestriction, a, &c),
        para_route(RouteId::ParaHermitian, a, &c),
        mingk_route(RouteId::MinimalGk, &c),
        small_route(RouteId::SmallRep, a, &c, Some(sigma_mu)),
    ];
    Ok(finish(rp.spec, false, all))
}

/// Tensor product routes for `g`.
pub fn decide_tensor(reg: &Registry, g: &str) -> Result<Verdict, VerdictError> {
    let a = reg.algebra(g)?;
    let rp = reg.register_pair(&format!("{0}+{0}", a.label), &a.label)?;
    decide_tensor_on(reg, rp)
}

fn decide_tensor_on(reg: &Registry, rp: RegisteredPair) -> Result<Verdict, VerdictError> {
    let a = reg.algebra(&rp.spec.gprime_label)?;
    let c = common(reg.catalog, a, rp.model.is_some())?;
    let all = vec![
        hw_route(RouteId::HwTensor, a, &c),
        para_route(RouteId::ParaTensor, a, &c),
        mingk_route(RouteId::MinimalGkTensor, &c),
        // No sigma(mu) hypothesis for the diagonal action.
        small_route(RouteId::SmallRepTensor, a, &c, None),
    ];
    Ok(finish(rp.spec, true, all))
}

/// One line of the coverage report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub g: String,
    /// Empty for tensor entries.
    pub gprime: String,
    pub routes: Vec<RouteId>,
    pub bounded: Bounded,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub small_rep_gk: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub catalog_version: String,
    pub matrix_rank: Option<usize>,
    pub pairs: usize,
    pub algebras: usize,
    pub route_counts: BTreeMap<RouteId, usize>,
    pub tensor_route_counts: BTreeMap<RouteId, usize>,
    pub zero_route: Vec<(String, String)>,
    pub tensor_zero_route: Vec<String>,
    /// Algebras whose witnesses are only conditional for SmallRep.
    pub conditional: Vec<(String, String)>,
    pub errors: Vec<String>,
    pub entries: Vec<SweepEntry>,
    pub tensor_entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.zero_route.is_empty() && self.tensor_zero_route.is_empty() && self.errors.is_empty()
    }
}

fn entry(v: &Verdict, g: &str, gprime: &str) -> SweepEntry {
    SweepEntry {
        g: g.to_string(),
        gprime: gprime.to_string(),
        routes: v.route_ids(),
        bounded: v.bounded,
        small_rep_gk: v
            .route(RouteId::SmallRep)
            .or_else(|| v.route(RouteId::SmallRepTensor))
            .and_then(|r| r.witness.as_ref()?.gk_dim.exact()),
    }
}

/// Decides every catalog pair and every tensor question. Results do not
/// depend on the thread schedule.
pub fn sweep_catalog(reg: &Registry) -> SweepReport {
    let cat = reg.catalog;
    let pair_results: Vec<_> = cat
        .pairs
        .par_iter()
        .map(|p| (p.g.clone(), p.gprime.clone(), decide_pair(reg, &p.g, &p.gprime)))
        .collect();
    let tensor_results: Vec<_> =
        cat.algebras.par_iter().map(|a| (a.label.clone(), decide_tensor(reg, &a.label))).collect();

    let mut rep = SweepReport {
        catalog_version: cat.version.clone(),
        matrix_rank: (reg.matrix_rank != usize::MAX).then_some(reg.matrix_rank),
        pairs: cat.pairs.len(),
        algebras: cat.algebras.len(),
        route_counts: RouteId::RESTRICTION.iter().map(|r| (*r, 0)).collect(),
        tensor_route_counts: RouteId::TENSOR.iter().map(|r| (*r, 0)).collect(),
        zero_route: vec![],
        tensor_zero_route: vec![],
        conditional: vec![],
        errors: vec![],
        entries: vec![],
        tensor_entries: vec![],
    };
    for (g, gp, res) in pair_results {
        match res {
            Ok(v) => {
                for id in v.route_ids() {
                    *rep.route_counts.entry(id).or_default() += 1;
                }
                if v.routes.is_empty() {
                    rep.zero_route.push((g.clone(), gp.clone()));
                }
                if v.other_routes.iter().any(|r| r.status == RouteStatus::Conditional) {
                    rep.conditional.push((g.clone(), gp.clone()));
                }
                rep.entries.push(entry(&v, &g, &gp));
            }
            Err(e) => rep.errors.push(format!("({g}, {gp}): {e}")),
        }
    }
    for (g, res) in tensor_results {
        match res {
            Ok(v) => {
                for id in v.route_ids() {
                    *rep.tensor_route_counts.entry(id).or_default() += 1;
                }
                if v.routes.is_empty() {
                    rep.tensor_zero_route.push(g.clone());
                }
                rep.tensor_entries.push(entry(&v, &g, ""));
            }
            Err(e) => rep.errors.push(format!("tensor {g}: {e}")),
        }
    }
    rep
}

/// Algebras for which only the small-representation route is expected:
/// the five exceptional-m algebras minus those reached otherwise.
pub fn is_remaining_name(name: &str) -> bool {
    is_five_name(name) && (matches!(Family::parse(name), Ok(Family::SpPQ(..))) || name.replace(' ', "") == "f4(-20)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg(cat: &Catalog) -> Registry<'_> {
        Registry::with_matrix_rank(cat, 3)
    }

    #[test]
    fn bb_list_shapes() {
        assert_eq!(is_bb_pair("sl(4,R)", "gl(3,R)"), Some(true));
        assert_eq!(is_bb_pair("su(2,1)", "u(1,1)"), Some(true));
        assert_eq!(is_bb_pair("so(5,2)", "so(5,1)"), Some(true));
        assert_eq!(is_bb_pair("so(4,4)", "so(4,3)"), Some(true));
        // so_6 > so_5 seen as sl_4 > sp_4
        assert_eq!(is_bb_pair("sl(4,R)", "sp(2,R)"), Some(true));
        assert_eq!(is_bb_pair("sl(4,R)", "so(2,2)"), Some(false));
        assert_eq!(is_bb_pair("sp(2,R)", "gl(2,R)"), Some(false));
        // so_4 > so_3 is the diagonal in sl_2 + sl_2
        assert_eq!(is_bb_pair("sl(2,R)+sl(2,R)", "sl(2,R)"), Some(true));
        assert_eq!(is_bb_pair("sl(3,R)+sl(3,R)", "sl(3,R)"), Some(false));
        assert_eq!(is_bb_pair("sl(3,C)", "gl(2,C)"), Some(true));
        assert_eq!(is_bb_pair("sl(3,C)", "su(2,1)"), Some(false));
    }

    #[test]
    fn minimal_gk_examples() {
        let cat = Catalog::bundled();
        let sl = minimal_gk_exists(&cat, "sl(4,R)").unwrap();
        assert_eq!(sl.witness.unwrap().kind, RepKind::DegeneratePrincipalSeries);
        assert!(!minimal_gk_exists(&cat, "sp(2,1)").unwrap().exists);
        let sp2c = minimal_gk_exists(&cat, "sp(2,C)").unwrap();
        assert_eq!(sp2c.witness.unwrap().kind, RepKind::MinimalGKDim);
        assert_eq!(minimal_gk_exists(&cat, "su(2,1)").unwrap().witness.unwrap().kind, RepKind::HighestWeight);
        // so(5,1) is excluded through su*(4)
        let s51 = minimal_gk_exists(&cat, "so(5,1)").unwrap();
        assert_eq!(s51.excluded_by.as_deref(), Some("su*(4)"));
        assert!(minimal_gk_exists(&cat, "bogus").is_err());
    }

    #[test]
    fn pair_examples() {
        let cat = Catalog::bundled();
        let r = reg(&cat);
        let v = decide_pair(&r, "sp(1,2)", "u(1,2)").unwrap();
        assert_eq!(v.route_ids(), vec![RouteId::SmallRep]);
        let w = v.route(RouteId::SmallRep).unwrap().witness.as_ref().unwrap();
        assert_eq!((w.kind, w.gk_dim.exact()), (RepKind::AqLambda, Some(5)));

        let v = decide_pair(&r, "f4(-20)", "so(8,1)").unwrap();
        assert_eq!(v.route_ids(), vec![RouteId::SmallRep]);
        assert_eq!(v.route(RouteId::SmallRep).unwrap().witness.as_ref().unwrap().gk_dim.exact(), Some(11));
        assert_eq!(v.bounded, Bounded::TableCertified);

        let v = decide_pair(&r, "su(2,2)", "sp(2,R)").unwrap();
        assert!(v.has(RouteId::HwRestriction));
        assert_eq!(v.bounded, Bounded::Certified);

        let v = decide_pair(&r, "sl(4,R)", "so(2,2)").unwrap();
        assert!(v.has(RouteId::ParaHermitian) && v.has(RouteId::MinimalGk));

        assert!(matches!(decide_pair(&r, "sl(4,R)", "su(4)"), Err(VerdictError::Sympair(SympairError::NotRegistered { .. }))));
    }

    #[test]
    fn tensor_examples() {
        let cat = Catalog::bundled();
        let r = reg(&cat);
        let v = decide_tensor(&r, "sp(2,R)").unwrap();
        assert!(v.has(RouteId::HwTensor) && v.has(RouteId::ParaTensor));
        let v = decide_tensor(&r, "sp(2,1)").unwrap();
        assert_eq!(v.route_ids(), vec![RouteId::SmallRepTensor]);
        // sp(n,n) is also para-Hermitian
        let v = decide_tensor(&r, "sp(1,1)").unwrap();
        assert_eq!(v.route_ids(), vec![RouteId::ParaTensor, RouteId::SmallRepTensor]);
        let v = decide_tensor(&r, "sl(3,R)").unwrap();
        assert!(v.has(RouteId::ParaTensor) && v.has(RouteId::MinimalGkTensor));
        // the group case through decide_pair
        let v = decide_pair(&r, "su(2,1)+su(2,1)", "su(2,1)").unwrap();
        assert!(v.tensor && v.has(RouteId::HwTensor));
    }

    #[test]
    fn conditional_small_rep() {
        let cat = Catalog::bundled();
        let r = reg(&cat);
        let v = decide_tensor(&r, "su*(4)").unwrap();
        let s = v.other_routes.iter().find(|x| x.theorem_id == RouteId::SmallRepTensor).unwrap();
        assert_eq!(s.status, RouteStatus::Conditional);
        assert!(v.has(RouteId::ParaTensor));
    }

    #[test]
    fn verdict_json_round_trip() {
        let cat = Catalog::bundled();
        let r = reg(&cat);
        let v = decide_pair(&r, "sp(2,1)", "sp(1,1)+sp(1)").unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
    }
}
