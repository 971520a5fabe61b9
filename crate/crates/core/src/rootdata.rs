//! Complex root systems and restricted root data.
//!
//! Roots live in simple-root coordinates. The invariant form is fixed by
//! giving each simple root its squared length (long roots have length 2)
//! and setting `(a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2` on Dynkin edges.
//! Numbering follows Bourbaki.

use crate::linalg::QMat;
use crate::scalar::{rat, ratio, to_i64, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid Cartan type {0}: {1}")]
    InvalidRank(String, &'static str),
    #[error("cannot parse Cartan type {0:?}")]
    Parse(String),
    #[error("root system is reducible (Dynkin diagram has {0} components)")]
    Reducible(usize),
    #[error("inconsistent multiplicity table for {label}: {reason}")]
    Multiplicity { label: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let name = format!("{series:?}{rank}");
        let bad = |why| Err(RootError::InvalidRank(name.clone(), why));
        match series {
            Series::A | Series::C if rank < 1 => bad("rank must be at least 1"),
            Series::B if rank < 2 => bad("type B needs rank >= 2"),
            Series::D if rank < 3 => bad("type D needs rank >= 3"),
            Series::E if !(6..=8).contains(&rank) => bad("type E needs rank 6, 7 or 8"),
            Series::F if rank != 4 => bad("type F needs rank 4"),
            Series::G if rank != 2 => bad("type G needs rank 2"),
            _ => Ok(CartanType { series, rank }),
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
            || (self.series == Series::C && self.rank == 1)
    }

    /// Number of roots by the classical formulas.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => [72, 126, 240][n - 6],
            Series::F => 48,
            Series::G => 12,
        }
    }

    pub fn dimension(&self) -> usize {
        self.root_count() + self.rank
    }

    fn squared_lengths(&self) -> Vec<Rational> {
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![rat(2); n],
            Series::B => (0..n).map(|i| if i + 1 < n { rat(2) } else { rat(1) }).collect(),
            Series::C if n == 1 => vec![rat(2)],
            Series::C => (0..n).map(|i| if i + 1 < n { rat(1) } else { rat(2) }).collect(),
            Series::F => vec![rat(2), rat(2), rat(1), rat(1)],
            Series::G => vec![ratio(2, 3), rat(2)],
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                (1..n).map(|i| (i - 1, i)).collect()
            }
            Series::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Series::E => {
                // 1-3, 3-4, 4-5, ..., and 2-4 (1-based Bourbaki labels)
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Gram matrix of the simple roots.
    pub fn simple_gram(&self) -> QMat {
        let len = self.squared_lengths();
        let n = self.rank;
        let mut g = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            g[i][i] = len[i].clone();
        }
        for (i, j) in self.edges() {
            let m = if len[i] > len[j] { len[i].clone() } else { len[j].clone() };
            let v = -m / rat(2);
            g[i][j] = v.clone();
            g[j][i] = v;
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(RootError::Parse(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| RootError::Parse(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// A root system given by a simple-root Gram matrix. Roots are integer
/// coefficient vectors in the simple roots, sorted lexicographically.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRootSystem {
    pub cartan_type: Option<CartanType>,
    pub gram: QMat,
    pub roots: Vec<Vec<i64>>,
}

pub type Root = Vec<i64>;

impl ComplexRootSystem {
    /// Reflection closure of the simple roots of `gram`.
    pub fn from_gram(cartan_type: Option<CartanType>, gram: QMat) -> Self {
        let n = gram.len();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let c = coroot_pairing_gram(&gram, &r, i);
                let mut s = r.clone();
                s[i] -= c;
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        ComplexRootSystem { cartan_type, gram, roots: seen.into_iter().collect() }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn form(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 && !self.gram[i][j].is_zero() {
                    s += &self.gram[i][j] * rat(x * y);
                }
            }
        }
        s
    }

    /// `<a, b^vee> = 2(a,b)/(b,b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Rational {
        rat(2) * self.form(a, b) / self.form(b, b)
    }

    pub fn is_positive(r: &[i64]) -> bool {
        r.iter().all(|&c| c >= 0)
    }

    pub fn positive_roots(&self) -> Vec<&Root> {
        self.roots.iter().filter(|r| Self::is_positive(r)).collect()
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        self.roots.binary_search_by(|x| x.as_slice().cmp(r)).is_ok()
    }

    pub fn reflect(&self, r: &[i64], by: &[i64]) -> Root {
        let c = to_i64(&self.pairing(r, by)).expect("root pairings are integral");
        r.iter().zip(by).map(|(x, y)| x - c * y).collect()
    }

    pub fn components(&self) -> usize {
        let n = self.rank();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if comp[j] == usize::MAX && !self.gram[i][j].is_zero() {
                        comp[j] = count;
                        stack.push(j);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }
}

fn coroot_pairing_gram(gram: &QMat, r: &[i64], i: usize) -> i64 {
    let mut s = Rational::zero();
    for (j, c) in r.iter().enumerate() {
        if *c != 0 {
            s += &gram[j][i] * rat(*c);
        }
    }
    let v = rat(2) * s / &gram[i][i];
    to_i64(&v).expect("Cartan integers are integral")
}

pub fn build_root_system(t: CartanType) -> ComplexRootSystem {
    ComplexRootSystem::from_gram(Some(t), t.simple_gram())
}

/// The highest root: the positive root of maximal height, checked to
/// dominate every positive root and to be dominant.
pub fn highest_root(rs: &ComplexRootSystem) -> Result<Root, RootError> {
    let comps = rs.components();
    if comps != 1 {
        return Err(RootError::Reducible(comps));
    }
    let mu = rs
        .positive_roots()
        .into_iter()
        .max_by_key(|r| ComplexRootSystem::height(r))
        .cloned()
        .expect("nonempty root system");
    debug_assert!(rs
        .positive_roots()
        .iter()
        .all(|b| b.iter().zip(&mu).all(|(x, m)| x <= m)));
    Ok(mu)
}

/// Half the dimension of the minimal nilpotent orbit:
/// `#{a > 0 : <a, mu^vee> = 1} / 2 + 1`.
pub fn n_complex(rs: &ComplexRootSystem) -> Result<usize, RootError> {
    let mu = highest_root(rs)?;
    let one = rat(1);
    let k = rs.positive_roots().into_iter().filter(|a| rs.pairing(a, &mu) == one).count();
    Ok(k / 2 + 1)
}

/// n(g_C) for a complex simple type; doubled when g itself is complex.
pub fn n_for(t: CartanType, complex: bool) -> usize {
    let n = n_complex(&build_root_system(t)).expect("Cartan types are irreducible");
    if complex {
        2 * n
    } else {
        n
    }
}

/// Restricted root system type: reduced (a Cartan type) or BC_r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RestrictedType {
    Reduced(CartanType),
    BC(usize),
}

impl RestrictedType {
    pub fn rank(&self) -> usize {
        match self {
            RestrictedType::Reduced(t) => t.rank,
            RestrictedType::BC(r) => *r,
        }
    }

    /// Root classes (Weyl orbits) in increasing length.
    pub fn classes(&self) -> Vec<&'static str> {
        match self {
            RestrictedType::Reduced(t) if t.is_simply_laced() => vec!["long"],
            RestrictedType::Reduced(_) => vec!["short", "long"],
            RestrictedType::BC(1) => vec!["short", "long"],
            RestrictedType::BC(_) => vec!["short", "middle", "long"],
        }
    }

    /// The (possibly non-reduced) root system together with the class of
    /// each root.
    pub fn roots(&self) -> (ComplexRootSystem, Vec<(Root, &'static str)>) {
        match self {
            RestrictedType::Reduced(t) => {
                let rs = build_root_system(*t);
                let classes = self.classes();
                let max_len = rs.roots.iter().map(|r| rs.form(r, r)).max().unwrap();
                let tagged = rs
                    .roots
                    .iter()
                    .map(|r| {
                        let c = if classes.len() == 1 || rs.form(r, r) == max_len {
                            "long"
                        } else {
                            "short"
                        };
                        (r.clone(), c)
                    })
                    .collect();
                (rs, tagged)
            }
            RestrictedType::BC(r) => {
                // B_r (or A_1 when r = 1) with short roots of length 1, plus
                // twice each short root.
                let base = if *r == 1 {
                    ComplexRootSystem::from_gram(None, vec![vec![rat(1)]])
                } else {
                    build_root_system(CartanType::new(Series::B, *r).unwrap())
                };
                let one = rat(1);
                let mut tagged: Vec<(Root, &'static str)> = Vec::new();
                for root in &base.roots {
                    let l = base.form(root, root);
                    if l == one {
                        tagged.push((root.clone(), "short"));
                        tagged.push((root.iter().map(|x| 2 * x).collect(), "long"));
                    } else {
                        tagged.push((root.clone(), "middle"));
                    }
                }
                tagged.sort();
                (base, tagged)
            }
        }
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedType::Reduced(t) => write!(f, "{t}"),
            RestrictedType::BC(r) => write!(f, "BC{r}"),
        }
    }
}

impl FromStr for RestrictedType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(r) = s.strip_prefix("BC") {
            let r: usize = r.parse().map_err(|_| RootError::Parse(s.to_string()))?;
            if r == 0 {
                return Err(RootError::InvalidRank(s.to_string(), "rank must be at least 1"));
            }
            return Ok(RestrictedType::BC(r));
        }
        Ok(RestrictedType::Reduced(s.parse()?))
    }
}

impl Serialize for RestrictedType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RestrictedType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseCR {
    Case1,
    Case2,
    Case3,
}

/// Restricted root datum of a real form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRootDatum {
    pub label: String,
    pub restricted_type: RestrictedType,
    pub mult: BTreeMap<String, u32>,
    pub hermitian: bool,
    pub dim_m: Option<usize>,
    /// Type of a simple factor of g_C.
    pub complex_type: CartanType,
    /// g itself carries a complex structure.
    pub is_complex: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingProfile {
    pub a: u32,
    pub b: u32,
}

impl GradingProfile {
    pub fn m(&self) -> u32 {
        self.a / 2 + self.b
    }

    /// dim of the adjoint orbit of a highest root vector, `a + 2b`.
    pub fn orbit_dim(&self) -> u32 {
        self.a + 2 * self.b
    }
}

impl RestrictedRootDatum {
    /// Checks that the multiplicity keys match the root classes and that
    /// the dimension count closes up when `dim_m` is known.
    pub fn validate(&self) -> Result<(), RootError> {
        let bad = |reason: String| RootError::Multiplicity { label: self.label.clone(), reason };
        let classes: BTreeSet<&str> = self.restricted_type.classes().into_iter().collect();
        let keys: BTreeSet<&str> = self.mult.keys().map(|k| k.as_str()).collect();
        if classes != keys {
            return Err(bad(format!(
                "{} expects classes {:?}, got {:?}",
                self.restricted_type, classes, keys
            )));
        }
        if let Some((k, _)) = self.mult.iter().find(|(_, &v)| v == 0) {
            return Err(bad(format!("multiplicity of class {k} is zero")));
        }
        if let Some(dm) = self.dim_m {
            let total = self.root_dim_total() + self.restricted_type.rank() + dm;
            let expect = self.dim_g();
            if total != expect {
                return Err(bad(format!(
                    "roots + rank + dim m = {total} but dim g = {expect}"
                )));
            }
        }
        let profile = grading_profile(self)?;
        if profile.a % 2 != 0 {
            return Err(bad(format!("dim g_1 = {} is odd", profile.a)));
        }
        if self.complex_type.rank == 0 {
            return Err(bad("empty complex type".into()));
        }
        Ok(())
    }

    /// Real dimension of g.
    pub fn dim_g(&self) -> usize {
        let d = self.complex_type.dimension();
        if self.is_complex {
            2 * d
        } else {
            d
        }
    }

    pub fn multiplicity(&self, class: &str) -> u32 {
        self.mult.get(class).copied().unwrap_or(0)
    }

    /// Sum of multiplicities over all restricted roots.
    pub fn root_dim_total(&self) -> usize {
        let (_, tagged) = self.restricted_type.roots();
        tagged.iter().map(|(_, c)| self.multiplicity(c) as usize).sum()
    }

    pub fn case_cr(&self) -> CaseCR {
        classify_case(self, n_for(self.complex_type, self.is_complex))
    }
}

/// Pairings of all restricted roots with the coroot of the highest one,
/// each weighted by multiplicity: `(pairing, class, mult)`.
fn graded_roots(d: &RestrictedRootDatum) -> Result<Vec<(Rational, u32)>, RootError> {
    let (base, tagged) = d.restricted_type.roots();
    let mu = tagged
        .iter()
        .filter(|(r, _)| ComplexRootSystem::is_positive(r))
        .max_by_key(|(r, _)| ComplexRootSystem::height(r))
        .map(|(r, _)| r.clone())
        .ok_or_else(|| RootError::Multiplicity {
            label: d.label.clone(),
            reason: "no restricted roots".into(),
        })?;
    Ok(tagged.iter().map(|(r, c)| (base.pairing(r, &mu), d.multiplicity(c))).collect())
}

/// `(a, b)`: total multiplicity of restricted roots pairing to 1 and 2
/// with the coroot of the highest restricted root.
pub fn grading_profile(d: &RestrictedRootDatum) -> Result<GradingProfile, RootError> {
    let mut a = 0;
    let mut b = 0;
    for (p, m) in graded_roots(d)? {
        if p.abs() > rat(2) || !p.is_integer() {
            return Err(RootError::Multiplicity {
                label: d.label.clone(),
                reason: format!("restricted root pairs to {p} with the highest coroot"),
            });
        }
        if p == rat(1) {
            a += m;
        } else if p == rat(2) {
            b += m;
        }
    }
    if b == 0 {
        return Err(RootError::Multiplicity {
            label: d.label.clone(),
            reason: "highest restricted root has multiplicity zero".into(),
        });
    }
    Ok(GradingProfile { a, b })
}

pub fn m_real(d: &RestrictedRootDatum) -> Result<u32, RootError> {
    let p = grading_profile(d)?;
    if p.a % 2 != 0 {
        return Err(RootError::Multiplicity {
            label: d.label.clone(),
            reason: format!("dim g_1 = {} is odd", p.a),
        });
    }
    Ok(p.m())
}

pub fn classify_case(d: &RestrictedRootDatum, n: usize) -> CaseCR {
    let m = m_real(d).expect("validated datum") as usize;
    if m > n {
        CaseCR::Case1
    } else if d.hermitian {
        CaseCR::Case3
    } else {
        CaseCR::Case2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(build_root_system(t("A2")).roots.len(), 6);
        assert_eq!(build_root_system(t("G2")).roots.len(), 12);
    }

    #[test]
    fn rank_constraints_named() {
        let e = CartanType::new(Series::D, 2).unwrap_err();
        assert!(e.to_string().contains("rank >= 3"));
        assert!(CartanType::new(Series::E, 9).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!("Q3".parse::<CartanType>().is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(&build_root_system(t("A2"))).unwrap(), vec![1, 1]);
        assert_eq!(highest_root(&build_root_system(t("C3"))).unwrap(), vec![2, 2, 1]);
        assert_eq!(highest_root(&build_root_system(t("G2"))).unwrap(), vec![3, 2]);
    }

    #[test]
    fn reducible_rejected() {
        let gram = vec![vec![rat(2), rat(0)], vec![rat(0), rat(2)]];
        let rs = ComplexRootSystem::from_gram(None, gram);
        assert_eq!(highest_root(&rs), Err(RootError::Reducible(2)));
    }

    fn datum(label: &str, ty: &str, mult: &[(&str, u32)], ct: &str) -> RestrictedRootDatum {
        RestrictedRootDatum {
            label: label.into(),
            restricted_type: ty.parse().unwrap(),
            mult: mult.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            hermitian: false,
            dim_m: None,
            complex_type: ct.parse().unwrap(),
            is_complex: false,
        }
    }

    #[test]
    fn profiles() {
        let f4 = datum("f4(-20)", "BC1", &[("short", 8), ("long", 7)], "F4");
        assert_eq!(grading_profile(&f4).unwrap(), GradingProfile { a: 8, b: 7 });
        let so41 = datum("so(4,1)", "A1", &[("long", 3)], "B2");
        assert_eq!(grading_profile(&so41).unwrap(), GradingProfile { a: 0, b: 3 });
        let sp21 = datum("sp(2,1)", "BC1", &[("short", 4), ("long", 3)], "C3");
        assert_eq!(grading_profile(&sp21).unwrap(), GradingProfile { a: 4, b: 3 });
        assert_eq!(m_real(&sp21).unwrap(), 5);
    }

    #[test]
    fn bad_classes_rejected() {
        let d = datum("x", "BC2", &[("short", 1), ("long", 1)], "A3");
        assert!(d.validate().is_err());
    }
}
