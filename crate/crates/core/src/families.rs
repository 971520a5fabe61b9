//! Membership tests for the named lists of simple real Lie algebras used
//! by the verdict logic, on literal labels. Callers that want
//! isomorphism-invariant answers run them over every alias of a record.

use crate::matlie::Family;

fn family(name: &str) -> Option<Family> {
    Family::parse(name).ok()
}

fn sorted(p: usize, q: usize) -> (usize, usize) {
    (p.max(q), p.min(q))
}

fn squash(name: &str) -> String {
    name.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Simple algebras of Hermitian type.
pub fn is_hermitian_name(name: &str) -> bool {
    match family(name) {
        Some(Family::SuPQ(..)) | Some(Family::SpR(_)) | Some(Family::SoStar(_)) => true,
        Some(Family::SoPQ(p, q)) => {
            let (p, q) = sorted(p, q);
            q == 2 && p != 2 || q == 1 && p == 2
        }
        Some(_) => false,
        None => matches!(squash(name).as_str(), "e6(-14)" | "e7(-25)"),
    }
}

/// The algebras with `m(g) > n(g_C)`.
pub fn is_five_name(name: &str) -> bool {
    match family(name) {
        Some(Family::SuStar(_)) | Some(Family::SpPQ(..)) => true,
        Some(Family::SoPQ(p, q)) => sorted(p, q).1 == 1 && sorted(p, q).0 >= 4,
        Some(_) => false,
        None => matches!(squash(name).as_str(), "f4(-20)" | "e6(-26)"),
    }
}

/// Algebras with no representation of minimal Gelfand-Kirillov dimension.
pub fn is_mingk_excluded_name(name: &str) -> bool {
    match family(name) {
        Some(Family::SuStar(_)) | Some(Family::SpPQ(..)) => true,
        Some(Family::SoPQ(p, q)) => {
            let (p, q) = sorted(p, q);
            (q == 1 && p >= 6) || (q >= 4 && (p + q) % 2 == 1)
        }
        Some(_) => false,
        None => matches!(squash(name).as_str(), "f4(-20)" | "e6(-26)"),
    }
}

/// `sl(n, F)` for some field; the mirabolic witness applies to these.
pub fn is_type_a_split_name(name: &str) -> bool {
    matches!(family(name), Some(Family::SlR(_)) | Some(Family::SlC(_)))
}

/// `m(g)` for the five families, from the closed formulas.
pub fn m_formula(name: &str) -> Option<u32> {
    match family(name) {
        Some(Family::SuStar(n)) => Some(4 * n as u32 - 4),
        Some(Family::SoPQ(p, q)) if sorted(p, q).1 == 1 && sorted(p, q).0 >= 4 => Some(sorted(p, q).0 as u32 - 1),
        Some(Family::SpPQ(p, q)) => Some(2 * (p + q) as u32 - 1),
        Some(_) => None,
        None => match squash(name).as_str() {
            "f4(-20)" => Some(11),
            "e6(-26)" => Some(16),
            _ => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_lists() {
        assert!(is_hermitian_name("so(5,2)") && !is_hermitian_name("so(2,2)"));
        assert!(is_hermitian_name("e7(-25)") && !is_hermitian_name("e7(-5)"));
        assert!(is_five_name("so(4,1)") && !is_five_name("so(3,1)"));
        assert!(is_mingk_excluded_name("so(6,1)") && !is_mingk_excluded_name("so(5,1)"));
        assert!(is_mingk_excluded_name("so(5,4)") && !is_mingk_excluded_name("so(4,4)"));
        assert!(is_mingk_excluded_name("su*(4)"));
        // so(n-1,1) -> n-2
        assert_eq!(m_formula("so(9,1)"), Some(8));
        assert_eq!(m_formula("sp(2,1)"), Some(5));
        assert_eq!(m_formula("sl(3,R)"), None);
    }
}
