//! Labels of real reductive Lie algebras, as they appear on either side of
//! a symmetric pair: `sp(2,1)+sp(1)`, `s(u(2,1)+u(1))`, `sl(3,C)+C`, ...
//!
//! Canonical form: signature parameters ordered `p >= q`, compact forms
//! written without the zero (`so(5)`, `sp(2)`), one-dimensional pieces
//! written `R` (split), `T` (compact) or `C` (complex), trivial summands
//! dropped, and summands sorted by decreasing dimension.

use crate::rootdata::{CartanType, Series};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse Lie algebra label {0:?}")]
pub struct LabelError(pub String);

/// Shape of a complex reductive algebra: simple factors and center.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexShape {
    /// Canonical simple types, sorted.
    pub types: Vec<CartanType>,
    pub center: usize,
}

impl ComplexShape {
    fn push(&mut self, other: ComplexShape) {
        self.types.extend(other.types);
        self.center += other.center;
        self.types.sort();
    }

    pub fn dim(&self) -> usize {
        self.types.iter().map(|t| t.dimension()).sum::<usize>() + self.center
    }
}

impl fmt::Display for ComplexShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.types.iter().map(|t| t.to_string()).collect();
        if self.center > 0 {
            parts.push(format!("T{}", self.center));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

fn ct(series: Series, rank: usize) -> CartanType {
    canonical_type(CartanType { series, rank })
}

/// Identifies low-rank coincidences: B1 = C1 = A1, B2 = C2, D3 = A3.
pub fn canonical_type(t: CartanType) -> CartanType {
    match (t.series, t.rank) {
        (Series::B | Series::C, 1) => CartanType { series: Series::A, rank: 1 },
        (Series::B, 2) => CartanType { series: Series::C, rank: 2 },
        (Series::D, 3) => CartanType { series: Series::A, rank: 3 },
        _ => t,
    }
}

/// sl(n) over C.
pub fn shape_a(n: usize) -> ComplexShape {
    if n < 2 {
        ComplexShape::default()
    } else {
        ComplexShape { types: vec![ct(Series::A, n - 1)], center: 0 }
    }
}

/// so(n) over C.
pub fn shape_so(n: usize) -> ComplexShape {
    match n {
        0 | 1 => ComplexShape::default(),
        2 => ComplexShape { types: vec![], center: 1 },
        4 => ComplexShape { types: vec![ct(Series::A, 1), ct(Series::A, 1)], center: 0 },
        n if n % 2 == 1 => ComplexShape { types: vec![ct(Series::B, n / 2)], center: 0 },
        n => ComplexShape { types: vec![ct(Series::D, n / 2)], center: 0 },
    }
}

fn shape_c(n: usize) -> ComplexShape {
    if n == 0 {
        ComplexShape::default()
    } else {
        ComplexShape { types: vec![ct(Series::C, n)], center: 0 }
    }
}

fn shape_exc(series: Series) -> ComplexShape {
    let rank = match series {
        Series::E => unreachable!(),
        Series::F => 4,
        _ => 2,
    };
    ComplexShape { types: vec![CartanType { series, rank }], center: 0 }
}

/// One summand of a reductive label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub canonical: String,
    pub dim: usize,
    /// Dimension of a maximal compact subalgebra.
    pub compact_dim: usize,
    pub real_rank: usize,
    /// Shape of the summand's complexification.
    pub complexified: ComplexShape,
    /// The summand carries its own complex structure.
    pub is_complex: bool,
}

impl Summand {
    fn new(
        canonical: String,
        dim: usize,
        compact_dim: usize,
        real_rank: usize,
        shape: ComplexShape,
        is_complex: bool,
    ) -> Self {
        let complexified = if is_complex {
            let mut s = shape.clone();
            s.push(shape);
            s
        } else {
            shape
        };
        Summand { canonical, dim, compact_dim, real_rank, complexified, is_complex }
    }

    /// As a complex Lie algebra, when the summand is complex.
    pub fn complex_shape(&self) -> Option<ComplexShape> {
        self.is_complex.then(|| ComplexShape {
            types: self.complexified.types.iter().step_by(2).copied().collect(),
            center: self.complexified.center / 2,
        })
    }
}

/// A parsed, canonicalized reductive label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraLabel {
    pub summands: Vec<Summand>,
}

impl AlgebraLabel {
    pub fn parse(s: &str) -> Result<Self, LabelError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(LabelError(s));
        }
        let mut summands = Vec::new();
        for part in split_top(&s, '+').map_err(|_| LabelError(s.clone()))? {
            if let Some(inner) = part.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
                summands.extend(parse_s_u(inner).ok_or_else(|| LabelError(s.clone()))?);
            } else {
                summands.extend(parse_atom(part).ok_or_else(|| LabelError(s.clone()))?);
            }
        }
        summands.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.canonical.cmp(&b.canonical)));
        Ok(AlgebraLabel { summands })
    }

    pub fn canonical(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands.iter().map(|s| s.canonical.as_str()).collect::<Vec<_>>().join("+")
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.dim).sum()
    }

    pub fn compact_dim(&self) -> usize {
        self.summands.iter().map(|s| s.compact_dim).sum()
    }

    pub fn real_rank(&self) -> usize {
        self.summands.iter().map(|s| s.real_rank).sum()
    }

    pub fn complexified(&self) -> ComplexShape {
        let mut out = ComplexShape::default();
        for s in &self.summands {
            out.push(s.complexified.clone());
        }
        out
    }

    /// The label read as a complex Lie algebra; `None` unless every
    /// summand is complex.
    pub fn complex_shape(&self) -> Option<ComplexShape> {
        let mut out = ComplexShape::default();
        for s in &self.summands {
            out.push(s.complex_shape()?);
        }
        Some(out)
    }

    pub fn is_simple(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].complexified.center == 0
    }
}

/// Canonical spelling of a label.
pub fn canonicalize(s: &str) -> Result<String, LabelError> {
    Ok(AlgebraLabel::parse(s)?.canonical())
}

fn split_top(s: &str, sep: char) -> Result<Vec<&str>, ()> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(());
                }
            }
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(());
    }
    out.push(&s[start..]);
    if out.iter().any(|p| p.is_empty()) {
        return Err(());
    }
    Ok(out)
}

fn sig(p: usize, q: usize) -> (usize, usize) {
    if p >= q {
        (p, q)
    } else {
        (q, p)
    }
}

fn abelian(kind: char) -> Summand {
    match kind {
        'R' => Summand::new("R".into(), 1, 0, 1, ComplexShape { types: vec![], center: 1 }, false),
        'T' => Summand::new("T".into(), 1, 1, 0, ComplexShape { types: vec![], center: 1 }, false),
        _ => Summand::new("C".into(), 2, 1, 1, ComplexShape { types: vec![], center: 1 }, true),
    }
}

fn parse_s_u(inner: &str) -> Option<Vec<Summand>> {
    let parts = split_top(inner, '+').ok()?;
    let mut sigs = Vec::new();
    for p in parts {
        let args = p.strip_prefix("u(")?.strip_suffix(')')?;
        let v: Vec<usize> = args.split(',').map(|a| a.parse().ok()).collect::<Option<_>>()?;
        let (a, b) = match v.as_slice() {
            [n] => (*n, 0),
            [a, b] => sig(*a, *b),
            _ => return None,
        };
        if a + b == 0 {
            return None;
        }
        sigs.push((a, b));
    }
    if sigs.len() < 2 {
        return None;
    }
    sigs.sort_by(|x, y| y.cmp(x));
    let name = |&(a, b): &(usize, usize)| if b == 0 { format!("u({a})") } else { format!("u({a},{b})") };
    let canonical = format!("s({})", sigs.iter().map(name).collect::<Vec<_>>().join("+"));
    let dim = sigs.iter().map(|(a, b)| (a + b) * (a + b)).sum::<usize>() - 1;
    let compact = sigs.iter().map(|(a, b)| a * a + b * b).sum::<usize>() - 1;
    let mut shape = ComplexShape { types: vec![], center: sigs.len() - 1 };
    for (a, b) in &sigs {
        shape.push(shape_a(a + b));
    }
    let rank = sigs.iter().map(|(a, b)| *a.min(b)).sum();
    Some(vec![Summand::new(canonical, dim, compact, rank, shape, false)])
}

/// Parses one summand; `Some(vec![])` for a trivial one.
fn parse_atom(s: &str) -> Option<Vec<Summand>> {
    match s {
        "R" | "so(1,1)" | "gl(1,R)" => return Some(vec![abelian('R')]),
        "T" | "so(2)" | "u(1)" | "so(2,0)" | "so(0,2)" | "u(1,0)" | "u(0,1)" => {
            return Some(vec![abelian('T')])
        }
        "C" | "gl(1,C)" | "so(2,C)" => return Some(vec![abelian('C')]),
        _ => {}
    }
    if let Some(c) = parse_compact_exceptional(s) {
        return Some(vec![c]);
    }
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    let name = &s[..open];
    let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').collect();
    if let Some(ex) = parse_exceptional(name, &args) {
        return Some(vec![ex]);
    }
    let int = |a: &str| a.parse::<usize>().ok();
    let one = |v: Summand| Some(vec![v]);
    match (name, args.as_slice()) {
        ("sl", [n, "R"]) => {
            let n = int(n)?;
            if n < 2 {
                return Some(vec![]);
            }
            one(Summand::new(format!("sl({n},R)"), n * n - 1, n * (n - 1) / 2, n - 1, shape_a(n), false))
        }
        ("sl", [n, "C"]) => {
            let n = int(n)?;
            if n < 2 {
                return Some(vec![]);
            }
            one(Summand::new(format!("sl({n},C)"), 2 * (n * n - 1), n * n - 1, n - 1, shape_a(n), true))
        }
        ("gl", [n, f]) => {
            let n = int(n)?;
            let mut v = parse_atom(&format!("sl({n},{f})"))?;
            v.push(abelian(if *f == "C" { 'C' } else { 'R' }));
            Some(v)
        }
        ("su", [n]) => {
            let n = int(n)?;
            if n < 2 {
                return Some(vec![]);
            }
            one(Summand::new(format!("su({n})"), n * n - 1, n * n - 1, 0, shape_a(n), false))
        }
        ("su", [p, q]) => {
            let (p, q) = sig(int(p)?, int(q)?);
            if q == 0 {
                return parse_atom(&format!("su({p})"));
            }
            let n = p + q;
            one(Summand::new(format!("su({p},{q})"), n * n - 1, p * p + q * q - 1, q, shape_a(n), false))
        }
        ("u", [n]) => {
            let n = int(n)?;
            let mut v = parse_atom(&format!("su({n})"))?;
            if n > 0 {
                v.push(abelian('T'));
            }
            Some(v)
        }
        ("u", [p, q]) => {
            let (p, q) = sig(int(p)?, int(q)?);
            if q == 0 {
                return parse_atom(&format!("u({p})"));
            }
            let mut v = parse_atom(&format!("su({p},{q})"))?;
            v.push(abelian('T'));
            Some(v)
        }
        ("su*", [m]) => {
            let m = int(m)?;
            if m % 2 != 0 || m == 0 {
                return None;
            }
            if m == 2 {
                return parse_atom("su(2)");
            }
            let n = m / 2;
            one(Summand::new(format!("su*({m})"), m * m - 1, n * (2 * n + 1), n - 1, shape_a(m), false))
        }
        ("so", [n]) => {
            let n = int(n)?;
            match n {
                0 | 1 => Some(vec![]),
                2 => Some(vec![abelian('T')]),
                _ => one(Summand::new(format!("so({n})"), n * (n - 1) / 2, n * (n - 1) / 2, 0, shape_so(n), false)),
            }
        }
        ("so", [n, "C"]) => {
            let n = int(n)?;
            match n {
                0 | 1 => Some(vec![]),
                2 => Some(vec![abelian('C')]),
                _ => one(Summand::new(format!("so({n},C)"), n * (n - 1), n * (n - 1) / 2, n / 2, shape_so(n), true)),
            }
        }
        ("so", [p, q]) => {
            let (p, q) = sig(int(p)?, int(q)?);
            if q == 0 {
                return parse_atom(&format!("so({p})"));
            }
            if p + q == 2 {
                return Some(vec![abelian('R')]);
            }
            let n = p + q;
            one(Summand::new(
                format!("so({p},{q})"),
                n * (n - 1) / 2,
                p * (p - 1) / 2 + q * (q - 1) / 2,
                q,
                shape_so(n),
                false,
            ))
        }
        ("so*", [m]) => {
            let m = int(m)?;
            if m % 2 != 0 || m == 0 {
                return None;
            }
            let n = m / 2;
            if n == 1 {
                return Some(vec![abelian('T')]);
            }
            one(Summand::new(format!("so*({m})"), n * (2 * n - 1), n * n, n / 2, shape_so(m), false))
        }
        ("sp", [n]) => {
            let n = int(n)?;
            if n == 0 {
                return Some(vec![]);
            }
            one(Summand::new(format!("sp({n})"), n * (2 * n + 1), n * (2 * n + 1), 0, shape_c(n), false))
        }
        ("sp", [n, "R"]) => {
            let n = int(n)?;
            if n == 0 {
                return Some(vec![]);
            }
            one(Summand::new(format!("sp({n},R)"), n * (2 * n + 1), n * n, n, shape_c(n), false))
        }
        ("sp", [n, "C"]) => {
            let n = int(n)?;
            if n == 0 {
                return Some(vec![]);
            }
            one(Summand::new(format!("sp({n},C)"), 2 * n * (2 * n + 1), n * (2 * n + 1), n, shape_c(n), true))
        }
        ("sp", [p, q]) => {
            let (p, q) = sig(int(p)?, int(q)?);
            if q == 0 {
                return parse_atom(&format!("sp({p})"));
            }
            let n = p + q;
            one(Summand::new(
                format!("sp({p},{q})"),
                n * (2 * n + 1),
                p * (2 * p + 1) + q * (2 * q + 1),
                q,
                shape_c(n),
                false,
            ))
        }
        _ => None,
    }
}

/// Exceptional real forms: (name, index, dim k, real rank).
const EXCEPTIONAL_FORMS: [(&str, &str, usize, usize); 12] = [
    ("e6", "6", 36, 6),
    ("e6", "2", 38, 4),
    ("e6", "-14", 46, 2),
    ("e6", "-26", 52, 2),
    ("e7", "7", 63, 7),
    ("e7", "-5", 69, 4),
    ("e7", "-25", 79, 3),
    ("e8", "8", 120, 8),
    ("e8", "-24", 136, 4),
    ("f4", "4", 24, 4),
    ("f4", "-20", 36, 1),
    ("g2", "2", 6, 2),
];

fn exceptional_type(name: &str) -> Option<CartanType> {
    Some(match name {
        "e6" => CartanType { series: Series::E, rank: 6 },
        "e7" => CartanType { series: Series::E, rank: 7 },
        "e8" => CartanType { series: Series::E, rank: 8 },
        "f4" => shape_exc(Series::F).types[0],
        "g2" => shape_exc(Series::G).types[0],
        _ => return None,
    })
}

fn parse_exceptional(name: &str, args: &[&str]) -> Option<Summand> {
    let t = exceptional_type(name)?;
    let d = t.dimension();
    let shape = ComplexShape { types: vec![t], center: 0 };
    match args {
        ["C"] => Some(Summand::new(format!("{name}(C)"), 2 * d, d, t.rank, shape, true)),
        [idx] => {
            let (_, i, k, r) = EXCEPTIONAL_FORMS.iter().find(|(n, i, _, _)| *n == name && i == idx)?;
            Some(Summand::new(format!("{name}({i})"), d, *k, *r, shape, false))
        }
        _ => None,
    }
}

/// Compact exceptional algebras are written bare: `f4`, `e6`.
pub fn parse_compact_exceptional(s: &str) -> Option<Summand> {
    let t = exceptional_type(s)?;
    let d = t.dimension();
    Some(Summand::new(s.to_string(), d, d, 0, ComplexShape { types: vec![t], center: 0 }, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize("sp(1,2)").unwrap(), "sp(2,1)");
        assert_eq!(canonicalize("sp(1,1) + sp(0,1)").unwrap(), "sp(1,1)+sp(1)");
        assert_eq!(canonicalize("R+sl(2,R)+sl(3,R)").unwrap(), "sl(3,R)+sl(2,R)+R");
        assert_eq!(canonicalize("su*(2)+R").unwrap(), "su(2)+R");
        assert_eq!(canonicalize("so(1,3)+so(1,1)").unwrap(), "so(3,1)+R");
        assert_eq!(canonicalize("s(u(1)+u(1,2))").unwrap(), "s(u(2,1)+u(1))");
        assert_eq!(canonicalize("so(9,0)").unwrap(), "so(9)");
        assert_eq!(canonicalize("sp(2,1)+sp(1)").unwrap(), "sp(2,1)+sp(1)");
    }

    #[test]
    fn dimensions() {
        let l = AlgebraLabel::parse("u(2,1)").unwrap();
        assert_eq!((l.dim(), l.compact_dim()), (9, 5));
        let l = AlgebraLabel::parse("s(u(2,1)+u(1))").unwrap();
        assert_eq!((l.dim(), l.compact_dim()), (9, 5));
        let l = AlgebraLabel::parse("sl(2,C)+so(2)").unwrap();
        assert_eq!(l.dim(), 7);
        assert_eq!(l.complexified().to_string(), "A1+A1+T1");
        assert_eq!(l.complex_shape(), None);
        let l = AlgebraLabel::parse("sl(3,C)+C").unwrap();
        assert_eq!(l.complex_shape().unwrap().to_string(), "A2+T1");
        let l = AlgebraLabel::parse("f4(-20)").unwrap();
        assert_eq!((l.dim(), l.compact_dim()), (52, 36));
    }

    #[test]
    fn rejects_garbage() {
        assert!(AlgebraLabel::parse("bogus").is_err());
        assert!(AlgebraLabel::parse("sp(2,1)+").is_err());
        assert!(AlgebraLabel::parse("su*(3)").is_err());
    }
}
