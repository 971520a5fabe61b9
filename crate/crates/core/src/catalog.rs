//! The bundled catalog: restricted root data, the symmetric-pair registry
//! and the reference tables, with load-time validation.
//!
//! The default catalog is compiled in; `LIEBOUND_CATALOG` points at a
//! replacement file.

use crate::label::AlgebraLabel;
use crate::matlie::{construct_family, m_subspace, restricted_decomposition, Family, MatlieError};
use crate::rootdata::{CartanType, RestrictedRootDatum, RestrictedType};
use crate::sympair::{HoloType, Recipe};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const BUNDLED: &str = include_str!("../data/catalog.json");
pub const CATALOG_ENV: &str = "LIEBOUND_CATALOG";
/// Default complex-rank bound for the matrix cross-check at load time.
pub const DEFAULT_CHECK_RANK: usize = 3;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("catalog does not parse: {0}")]
    Parse(String),
    #[error("catalog has {} schema problem(s):\n  {}", .0.len(), .0.join("\n  "))]
    Schema(Vec<String>),
    #[error("catalog entry {label} disagrees with the matrix model: {reason}")]
    CrossCheck { label: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraRecord {
    pub label: String,
    pub restricted_type: RestrictedType,
    pub rank: usize,
    pub mult: BTreeMap<String, u32>,
    pub hermitian: bool,
    pub dim_m: Option<usize>,
    #[serde(with = "cartan_str")]
    pub complex_type: CartanType,
    pub is_complex: bool,
    pub matrix_model: bool,
    #[serde(default)]
    pub aliases: Vec<String>,
    #[serde(default)]
    pub para_levis: Vec<String>,
}

mod cartan_str {
    use crate::rootdata::CartanType;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &CartanType, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&t.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CartanType, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl AlgebraRecord {
    pub fn datum(&self) -> RestrictedRootDatum {
        RestrictedRootDatum {
            label: self.label.clone(),
            restricted_type: self.restricted_type,
            mult: self.mult.clone(),
            hermitian: self.hermitian,
            dim_m: self.dim_m,
            complex_type: self.complex_type,
            is_complex: self.is_complex,
        }
    }

    /// Every name under which this algebra is known, itself first.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.label.as_str()).chain(self.aliases.iter().map(|s| s.as_str()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFlags {
    pub sigma_mu_minus: TriState,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holo_type: Option<HoloType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub g: String,
    pub gprime: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_recipe: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_flags: Option<TableFlags>,
    #[serde(default)]
    pub tags: Vec<String>,
    #[serde(default)]
    pub citations: Vec<String>,
}

impl PairRecord {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// Item number of the non-negative list this pair belongs to.
    pub fn nonneg_item(&self) -> Option<u32> {
        self.tags.iter().find_map(|t| t.strip_prefix("nonneg(")?.strip_suffix(')')?.parse().ok())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub citation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    version: String,
    algebras: Vec<AlgebraRecord>,
    pairs: Vec<PairRecord>,
    tables: BTreeMap<String, Table>,
}

const REQUIRED_TABLES: [&str; 10] =
    ["n", "m", "para", "remaining", "hermitian", "bblist", "five", "mingk_exclusions", "nonneg", "f4_orbits"];

#[derive(Clone, Debug)]
pub struct Catalog {
    pub version: String,
    pub algebras: Vec<AlgebraRecord>,
    pub pairs: Vec<PairRecord>,
    pub tables: BTreeMap<String, Table>,
    by_label: BTreeMap<String, usize>,
    by_pair: BTreeMap<(String, String), usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct LoadOptions {
    /// Complex-rank bound for the matrix cross-check; 0 disables it.
    pub check_rank: usize,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { check_rank: DEFAULT_CHECK_RANK }
    }
}

fn canonical_or_raw(s: &str) -> String {
    AlgebraLabel::parse(s).map(|l| l.canonical()).unwrap_or_else(|_| s.to_string())
}

impl Catalog {
    pub fn from_json(text: &str, opts: LoadOptions) -> Result<Catalog, CatalogError> {
        let file: CatalogFile = serde_json::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        let mut diags = Vec::new();
        let mut by_label = BTreeMap::new();
        for (i, a) in file.algebras.iter().enumerate() {
            if by_label.insert(a.label.clone(), i).is_some() {
                diags.push(format!("algebra {}: duplicate label", a.label));
            }
            validate_algebra(a, &mut diags);
        }
        let mut by_pair = BTreeMap::new();
        for (i, p) in file.pairs.iter().enumerate() {
            let key = (p.g.clone(), canonical_or_raw(&p.gprime));
            if by_pair.insert(key, i).is_some() {
                diags.push(format!("pair ({}, {}): registered twice", p.g, p.gprime));
            }
            validate_pair(p, &file.algebras, &by_label, &mut diags);
        }
        for name in REQUIRED_TABLES {
            match file.tables.get(name) {
                None => diags.push(format!("table {name}: missing")),
                Some(t) if t.citation.trim().is_empty() => diags.push(format!("table {name}: no citation")),
                Some(_) => {}
            }
        }
        if file.version.trim().is_empty() {
            diags.push("version: empty".into());
        }
        if !diags.is_empty() {
            return Err(CatalogError::Schema(diags));
        }
        let cat = Catalog {
            version: file.version,
            algebras: file.algebras,
            pairs: file.pairs,
            tables: file.tables,
            by_label,
            by_pair,
        };
        if opts.check_rank > 0 {
            for a in &cat.algebras {
                if let Some(fam) = matrix_family(a) {
                    if fam.complex_rank() <= opts.check_rank {
                        cross_check(a, fam)?;
                    }
                }
            }
        }
        Ok(cat)
    }

    pub fn load(path: &Path, opts: LoadOptions) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })?;
        Self::from_json(&text, opts)
    }

    pub fn bundled() -> Catalog {
        Self::from_json(BUNDLED, LoadOptions { check_rank: 0 }).expect("bundled catalog is valid")
    }

    /// `path`, else `$LIEBOUND_CATALOG`, else the bundled file.
    pub fn load_default(path: Option<&Path>, opts: LoadOptions) -> Result<Catalog, CatalogError> {
        match path {
            Some(p) => Self::load(p, opts),
            None => match std::env::var_os(CATALOG_ENV) {
                Some(p) => Self::load(Path::new(&p), opts),
                None => Self::from_json(BUNDLED, opts),
            },
        }
    }

    /// Exact label lookup, falling back to the canonical spelling.
    pub fn algebra(&self, label: &str) -> Option<&AlgebraRecord> {
        let idx = self.by_label.get(label).or_else(|| self.by_label.get(&canonical_or_raw(label)))?;
        Some(&self.algebras[*idx])
    }

    pub fn pair(&self, g: &str, gprime: &str) -> Option<&PairRecord> {
        let g = self.algebra(g)?.label.clone();
        self.by_pair.get(&(g, canonical_or_raw(gprime))).map(|i| &self.pairs[*i])
    }

    pub fn pairs_of<'a>(&'a self, g: &'a str) -> impl Iterator<Item = &'a PairRecord> + 'a {
        self.pairs.iter().filter(move |p| p.g == g)
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.get(name)
    }

    /// Catalog labels closest to an unknown one, for error messages.
    pub fn suggestions(&self, label: &str) -> Vec<String> {
        let head: String = label.chars().take_while(|c| *c != '(').collect::<String>().to_lowercase();
        let mut out: Vec<String> = self
            .algebras
            .iter()
            .filter(|a| !head.is_empty() && a.label.starts_with(&head))
            .map(|a| a.label.clone())
            .take(8)
            .collect();
        if out.is_empty() {
            out = ["sl(3,R)", "su(2,1)", "sp(2,1)", "so(4,1)", "f4(-20)", "e6(C)"].map(String::from).to_vec();
        }
        out
    }
}

fn validate_algebra(a: &AlgebraRecord, diags: &mut Vec<String>) {
    let d = a.datum();
    if let Err(e) = d.validate() {
        diags.push(format!("algebra {}: {e}", a.label));
    }
    if a.rank != a.restricted_type.rank() {
        diags.push(format!("algebra {}: rank {} but restricted type {}", a.label, a.rank, a.restricted_type));
    }
    match AlgebraLabel::parse(&a.label) {
        Ok(l) => {
            if !l.is_simple() {
                diags.push(format!("algebra {}: label is not simple", a.label));
            } else if l.dim() != d.dim_g() {
                diags.push(format!("algebra {}: label has dim {} but datum has {}", a.label, l.dim(), d.dim_g()));
            } else if l.real_rank() != a.rank {
                diags.push(format!("algebra {}: label has real rank {} but datum {}", a.label, l.real_rank(), a.rank));
            }
        }
        Err(e) => diags.push(format!("algebra {}: {e}", a.label)),
    }
    for lv in &a.para_levis {
        if let Err(e) = AlgebraLabel::parse(lv) {
            diags.push(format!("algebra {}: para-Hermitian Levi {lv}: {e}", a.label));
        }
    }
    if a.matrix_model && Family::parse(&a.label).is_err() {
        diags.push(format!("algebra {}: marked as matrix model but no family parses", a.label));
    }
}

fn validate_pair(
    p: &PairRecord,
    algebras: &[AlgebraRecord],
    by_label: &BTreeMap<String, usize>,
    diags: &mut Vec<String>,
) {
    let name = format!("pair ({}, {})", p.g, p.gprime);
    let Some(g) = by_label.get(&p.g).map(|i| &algebras[*i]) else {
        diags.push(format!("{name}: g is not a catalog algebra"));
        return;
    };
    match AlgebraLabel::parse(&p.gprime) {
        Ok(l) if l.dim() >= g.datum().dim_g() => diags.push(format!("{name}: g' is not a proper subalgebra")),
        Ok(_) => {}
        Err(e) => diags.push(format!("{name}: {e}")),
    }
    match (&p.sigma_recipe, &p.table_flags) {
        (Some(r), None) => {
            if !g.matrix_model {
                diags.push(format!("{name}: recipe given but g has no matrix model"));
            }
            if let Err(e) = Recipe::parse(r) {
                diags.push(format!("{name}: {e}"));
            }
        }
        (None, Some(_)) => {}
        _ => diags.push(format!("{name}: needs exactly one of sigma_recipe and table_flags")),
    }
    if p.citations.is_empty() {
        diags.push(format!("{name}: no citation"));
    }
}

/// The matrix family of a record, when it has one.
pub fn matrix_family(a: &AlgebraRecord) -> Option<Family> {
    if !a.matrix_model {
        return None;
    }
    Family::parse(&a.label).ok()
}

fn cross_check(a: &AlgebraRecord, fam: Family) -> Result<(), CatalogError> {
    let fail = |reason: String| CatalogError::CrossCheck { label: a.label.clone(), reason };
    let mat = |e: MatlieError| fail(e.to_string());
    let l = construct_family(fam).map_err(mat)?;
    let datum = a.datum();
    if l.dim() != datum.dim_g() {
        return Err(fail(format!("matrix model has dim {} but the record implies {}", l.dim(), datum.dim_g())));
    }
    let dcmp = restricted_decomposition(&l).map_err(mat)?;
    if dcmp.rank() != a.rank {
        return Err(fail(format!("real rank {} computed, {} recorded", dcmp.rank(), a.rank)));
    }
    let computed: Vec<(usize, usize)> =
        dcmp.length_classes().map_err(mat)?.into_iter().map(|(_, n, m)| (n, m)).collect();
    let (_, tagged) = a.restricted_type.roots();
    let recorded: Vec<(usize, usize)> = a
        .restricted_type
        .classes()
        .into_iter()
        .map(|c| (tagged.iter().filter(|(_, t)| *t == c).count(), datum.multiplicity(c) as usize))
        .collect();
    if computed != recorded {
        return Err(fail(format!(
            "(roots, multiplicity) per length class: computed {computed:?}, recorded {recorded:?}"
        )));
    }
    let dm = m_subspace(&l, &dcmp.a_basis).dim();
    if a.dim_m.is_some_and(|d| d != dm) {
        return Err(fail(format!("dim m computed {dm}, recorded {:?}", a.dim_m)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_loads_with_cross_check() {
        let c = Catalog::from_json(BUNDLED, LoadOptions { check_rank: 2 }).unwrap();
        assert!(c.algebra("sp(2,1)").is_some());
        assert!(c.algebra("sp(1,2)").is_some());
        assert!(c.pair("f4(-20)", "so(9)").is_some());
    }

    #[test]
    fn edited_multiplicity_is_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(BUNDLED).unwrap();
        for a in v["algebras"].as_array_mut().unwrap() {
            if a["label"] == "sp(2,1)" {
                a["mult"]["long"] = 5.into();
                // without dim m the record is self-consistent, so only the
                // matrix check can catch it
                a["dim_m"] = serde_json::Value::Null;
            }
        }
        let err = Catalog::from_json(&v.to_string(), LoadOptions { check_rank: 3 }).unwrap_err();
        assert!(err.to_string().contains("sp(2,1)"), "{err}");
    }
}
