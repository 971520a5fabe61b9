//! Reports: the serializable result of one query, with the catalog
//! version and query echoed so that identical inputs give identical bytes.
//! The command-line front end only parses arguments and prints these.

use crate::catalog::{Catalog, Table, TriState};
use crate::coiso::{hermitian_diagonal, hermitian_restriction, minimal_diagonal, minimal_restriction, CoisoCertificate, CoisoError};
use crate::rootdata::{grading_profile, m_real, n_for, CaseCR};
use crate::sympair::{para_hermitian_levis, HoloType, Provenance, RegisteredPair, Registry, SympairError};
use crate::verdict::{decide_pair, decide_tensor, minimal_gk_exists, sweep_catalog, MinimalGk, RouteId, SweepReport, Verdict, VerdictError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const SCHEMA: &str = "liebound-report/1";

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INCONSISTENT: i32 = 3;
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Verdict(#[from] VerdictError),
    #[error(transparent)]
    Coiso(#[from] CoisoError),
    #[error("no matrix model for {0}: the pair is known from the tables only")]
    NoMatrixModel(String),
    #[error("unknown table {name:?}; known tables: {}", .known.join(", "))]
    UnknownTable { name: String, known: Vec<String> },
}

impl From<SympairError> for ReportError {
    fn from(e: SympairError) -> Self {
        ReportError::Verdict(VerdictError::Sympair(e))
    }
}

impl ReportError {
    pub fn exit_code(&self) -> i32 {
        let inconsistent = match self {
            ReportError::Verdict(VerdictError::Inconsistent(_)) => true,
            ReportError::Verdict(VerdictError::Sympair(SympairError::Inconsistent(_))) => true,
            ReportError::Coiso(CoisoError::Inconsistent(_)) => true,
            _ => false,
        };
        if inconsistent {
            exit::INCONSISTENT
        } else {
            exit::USAGE
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
    #[serde(default)]
    pub verify: bool,
}

impl Query {
    pub fn new(command: &str, args: &[&str]) -> Self {
        Query {
            command: command.into(),
            args: args.iter().map(|s| s.to_string()).collect(),
            trials: None,
            seed: None,
            max_rank: None,
            verify: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraInfo {
    pub label: String,
    pub aliases: Vec<String>,
    pub dim: usize,
    pub real_rank: usize,
    pub restricted_type: String,
    pub mult: BTreeMap<String, u32>,
    pub complex_type: String,
    pub is_complex: bool,
    /// `n(g_C)`, doubled for complex g.
    pub n: u32,
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub hermitian: bool,
    pub para_hermitian_levis: Vec<String>,
    pub case: CaseCR,
    pub matrix_model: bool,
    pub minimal_gk: MinimalGk,
    pub symmetric_pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableDump {
    pub name: String,
    pub table: Table,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Info(AlgebraInfo),
    Verdict(Box<Verdict>),
    Table(TableDump),
    Certificates,
    Sweep(Box<SweepReport>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub catalog_version: String,
    pub query: Query,
    pub result: Payload,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CoisoCertificate>,
    pub provenance: Vec<String>,
    pub exit_status: i32,
}

impl Report {
    fn new(cat: &Catalog, query: Query, result: Payload) -> Self {
        Report {
            schema: SCHEMA.into(),
            catalog_version: cat.version.clone(),
            query,
            result,
            certificates: Vec::new(),
            provenance: vec![format!("catalog version {}", cat.version)],
            exit_status: exit::OK,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn info(cat: &Catalog, query: Query, g: &str) -> Result<Report, ReportError> {
    let reg = Registry::new(cat);
    let a = reg.algebra(g)?;
    let d = a.datum();
    let profile = grading_profile(&d).map_err(|e| VerdictError::Inconsistent(e.to_string()))?;
    let m = m_real(&d).map_err(|e| VerdictError::Inconsistent(e.to_string()))?;
    let info = AlgebraInfo {
        label: a.label.clone(),
        aliases: a.aliases.clone(),
        dim: d.dim_g(),
        real_rank: a.rank,
        restricted_type: a.restricted_type.to_string(),
        mult: a.mult.clone(),
        complex_type: a.complex_type.to_string(),
        is_complex: a.is_complex,
        n: n_for(a.complex_type, a.is_complex) as u32,
        m,
        a: profile.a,
        b: profile.b,
        hermitian: a.hermitian,
        para_hermitian_levis: para_hermitian_levis(cat, &a.label),
        case: d.case_cr(),
        matrix_model: a.matrix_model,
        minimal_gk: minimal_gk_exists(cat, &a.label)?,
        symmetric_pairs: cat.pairs_of(&a.label).count(),
    };
    let mut r = Report::new(cat, query, Payload::Info(info));
    r.provenance.push("n, m and (a, b) computed from the restricted root datum".into());
    Ok(r)
}

fn verdict_status(v: &Verdict) -> i32 {
    if v.routes.is_empty() {
        exit::NEGATIVE
    } else {
        exit::OK
    }
}

/// Exit status from certificates: a failing certificate whose hypotheses
/// all hold contradicts a proved statement.
fn certificate_status(certs: &[CoisoCertificate]) -> i32 {
    let mut status = exit::OK;
    for c in certs {
        if !c.holds {
            let proved = c.hypotheses.iter().all(|(_, h)| *h);
            status = status.max(if proved { exit::INCONSISTENT } else { exit::NEGATIVE });
        }
    }
    status
}

fn restriction_certificates(
    rp: &RegisteredPair,
    v: &Verdict,
    trials: usize,
    seed: u64,
) -> Result<Vec<CoisoCertificate>, ReportError> {
    let Some(model) = &rp.model else { return Ok(Vec::new()) };
    let mut certs = Vec::new();
    let anti = rp.spec.holo_type.as_ref().map(|h| h.value) == Some(HoloType::AntiHolomorphic);
    if v.has(RouteId::HwRestriction) && anti {
        certs.push(hermitian_restriction(&model.algebra, &model.sigma, trials, seed)?);
    }
    if let (true, Some(split)) = (v.has(RouteId::SmallRep), &model.split) {
        certs.push(minimal_restriction(&model.algebra, &model.sigma, split, trials, seed)?);
    }
    Ok(certs)
}

fn tensor_certificates(reg: &Registry, g: &str, v: &Verdict, trials: usize, seed: u64) -> Result<Vec<CoisoCertificate>, ReportError> {
    let Some(l) = reg.matrix_model(g)? else { return Ok(Vec::new()) };
    let mut certs = Vec::new();
    if v.has(RouteId::HwTensor) {
        certs.push(hermitian_diagonal(&l, trials, seed)?);
    }
    if v.has(RouteId::SmallRepTensor) {
        certs.push(minimal_diagonal(&l, trials, seed)?);
    }
    Ok(certs)
}

pub const DEFAULT_TRIALS: usize = 5;
pub const DEFAULT_SEED: u64 = 1;

pub fn pair(cat: &Catalog, query: Query, g: &str, gprime: &str) -> Result<Report, ReportError> {
    let reg = Registry::new(cat);
    let v = decide_pair(&reg, g, gprime)?;
    let mut certs = Vec::new();
    let mut notes = Vec::new();
    if query.verify {
        let trials = query.trials.unwrap_or(DEFAULT_TRIALS);
        let seed = query.seed.unwrap_or(DEFAULT_SEED);
        certs = if v.tensor {
            tensor_certificates(&reg, &v.pair.gprime_label, &v, trials, seed)?
        } else {
            let rp = reg.register_pair(g, gprime)?;
            restriction_certificates(&rp, &v, trials, seed)?
        };
        if certs.is_empty() {
            notes.push("--verify: no certificate backs the passing routes of this pair at the matrix level".to_string());
        }
    }
    let status = verdict_status(&v).max(certificate_status(&certs));
    let mut r = Report::new(cat, query, Payload::Verdict(Box::new(v)));
    r.provenance.extend(notes);
    r.certificates = certs;
    r.exit_status = status;
    Ok(r)
}

pub fn tensor(cat: &Catalog, query: Query, g: &str) -> Result<Report, ReportError> {
    let reg = Registry::new(cat);
    let v = decide_tensor(&reg, g)?;
    let mut certs = Vec::new();
    if query.verify {
        let trials = query.trials.unwrap_or(DEFAULT_TRIALS);
        let seed = query.seed.unwrap_or(DEFAULT_SEED);
        certs = tensor_certificates(&reg, &v.pair.gprime_label, &v, trials, seed)?;
    }
    let status = verdict_status(&v).max(certificate_status(&certs));
    let mut r = Report::new(cat, query, Payload::Verdict(Box::new(v)));
    r.certificates = certs;
    r.exit_status = status;
    Ok(r)
}

pub fn tables(cat: &Catalog, query: Query, which: &str) -> Result<Report, ReportError> {
    let t = cat.table(which).ok_or_else(|| ReportError::UnknownTable {
        name: which.to_string(),
        known: cat.tables.keys().cloned().collect(),
    })?;
    Ok(Report::new(cat, query, Payload::Table(TableDump { name: which.to_string(), table: t.clone() })))
}

/// Runs the certificate matching the pair: the Hermitian statement when g
/// is Hermitian and sigma anti-holomorphic, the minimal-orbit statement
/// when sigma(mu) = -mu, the tensor statements in the group case. Other
/// pairs get a negative control whose hypotheses are recorded as false.
pub fn verify_coiso(cat: &Catalog, query: Query, g: &str, gprime: &str) -> Result<Report, ReportError> {
    let reg = Registry::new(cat);
    let trials = query.trials.unwrap_or(DEFAULT_TRIALS);
    let seed = query.seed.unwrap_or(DEFAULT_SEED);
    let rp = reg.register_pair(g, gprime)?;
    let Some(model) = &rp.model else {
        return Err(ReportError::NoMatrixModel(rp.spec.g_label.clone()));
    };
    let certs = if rp.spec.group_case {
        let l = reg.matrix_model(&rp.spec.gprime_label)?.ok_or_else(|| ReportError::NoMatrixModel(rp.spec.gprime_label.clone()))?;
        let mut c = Vec::new();
        if model.z.is_some() || reg.algebra(&rp.spec.gprime_label)?.hermitian {
            c.push(hermitian_diagonal(&l, trials, seed)?);
        }
        c.push(minimal_diagonal(&l, trials, seed)?);
        c
    } else {
        let anti = rp.spec.holo_type.as_ref().map(|h| h.value) == Some(HoloType::AntiHolomorphic);
        let minus = rp.spec.sigma_mu_minus.as_ref().map(|f| f.value) == Some(TriState::Yes);
        let split = model.split.as_ref().ok_or_else(|| CoisoError::Inconsistent("pair model without a sigma-split".into()))?;
        let mut c = Vec::new();
        if anti {
            c.push(hermitian_restriction(&model.algebra, &model.sigma, trials, seed)?);
        }
        if minus {
            c.push(minimal_restriction(&model.algebra, &model.sigma, split, trials, seed)?);
        }
        if c.is_empty() {
            if model.z.is_some() {
                c.push(hermitian_restriction(&model.algebra, &model.sigma, trials, seed)?);
            } else {
                c.push(minimal_restriction(&model.algebra, &model.sigma, split, trials, seed)?);
            }
        }
        c
    };
    let status = certificate_status(&certs);
    let mut r = Report::new(cat, query, Payload::Certificates);
    r.provenance.push(format!("matrix model of {}; sigma from recipe {}", rp.spec.g_label, rp.spec.recipe.as_deref().unwrap_or("swap")));
    if certs.iter().any(|c| c.hypotheses.iter().any(|(_, h)| !h)) {
        r.provenance.push("negative control: a hypothesis fails, the outcome is descriptive only".into());
    }
    r.certificates = certs;
    r.exit_status = status;
    Ok(r)
}

pub fn sweep(cat: &Catalog, query: Query, matrix_rank: usize) -> Report {
    let reg = Registry::with_matrix_rank(cat, matrix_rank);
    let rep = sweep_catalog(&reg);
    let status = if !rep.errors.is_empty() {
        exit::INCONSISTENT
    } else if !rep.is_clean() {
        exit::NEGATIVE
    } else {
        exit::OK
    };
    let mut r = Report::new(cat, query, Payload::Sweep(Box::new(rep)));
    r.provenance.push(format!("sigma built on matrix models up to complex rank {matrix_rank}, table flags beyond"));
    r.exit_status = status;
    r
}

/// Provenance summary of a verdict, for text output.
pub fn provenance_of(v: &Verdict) -> Vec<(RouteId, Provenance)> {
    v.routes
        .iter()
        .map(|r| {
            let p = if r.conditions_checked.iter().all(|c| c.provenance == Provenance::Computed) {
                Provenance::Computed
            } else {
                Provenance::Table
            };
            (r.theorem_id, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_examples() {
        let cat = Catalog::bundled();
        let r = info(&cat, Query::new("info", &["sp(2,1)"]), "sp(2,1)").unwrap();
        let Payload::Info(i) = &r.result else { panic!() };
        assert_eq!((i.m, i.a, i.b, i.case), (5, 4, 3, CaseCR::Case1));
        assert!(i.para_hermitian_levis.is_empty());
        let r = info(&cat, Query::new("info", &["e7(C)"]), "e7(C)").unwrap();
        let Payload::Info(i) = &r.result else { panic!() };
        assert_eq!(i.n, 34);
        let e = info(&cat, Query::new("info", &["bogus"]), "bogus").unwrap_err();
        assert_eq!(e.exit_code(), exit::USAGE);
    }

    #[test]
    fn reports_round_trip_and_repeat() {
        let cat = Catalog::bundled();
        let mut q = Query::new("pair", &["sp(1,2)", "u(1,2)"]);
        q.verify = true;
        let a = pair(&cat, q.clone(), "sp(1,2)", "u(1,2)").unwrap();
        let b = pair(&cat, q, "sp(1,2)", "u(1,2)").unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(serde_json::from_str::<Report>(&a.to_json()).unwrap(), a);
        assert!(!a.certificates.is_empty() && a.certificates.iter().all(|c| c.holds));
        assert_eq!(a.exit_status, exit::OK);
    }

    #[test]
    fn verify_coiso_examples() {
        let cat = Catalog::bundled();
        let mut q = Query::new("verify-coiso", &["su(2,1)", "so(2,1)"]);
        q.trials = Some(3);
        let r = verify_coiso(&cat, q, "su(2,1)", "so(2,1)").unwrap();
        assert_eq!(r.exit_status, exit::OK);
        let e = verify_coiso(&cat, Query::new("verify-coiso", &[]), "f4(-20)", "so(9)").unwrap_err();
        assert!(matches!(e, ReportError::NoMatrixModel(_)));
        assert!(tables(&cat, Query::new("tables", &["x"]), "x").is_err());
    }
}
