use liebound::catalog::{matrix_family, Catalog};
use liebound::label::{canonicalize, AlgebraLabel};
use liebound::linalg::{QVec, Subspace};
use liebound::matlie::{construct_classical, MatrixLieAlgebra};
use liebound::scalar::rat;
use liebound::sympair::{hermitian_data, holo_type, Involution, Recipe, Registry};
use liebound::verdict::{decide_pair, is_bb_pair, Bounded, RouteId, RouteStatus};
use proptest::prelude::*;
use std::sync::OnceLock;

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::bundled)
}

/// Small matrix-level pairs with their algebra and involution.
fn small_pairs() -> &'static Vec<(String, MatrixLieAlgebra, Involution)> {
    static PAIRS: OnceLock<Vec<(String, MatrixLieAlgebra, Involution)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let cat = catalog();
        let mut out = Vec::new();
        for p in &cat.pairs {
            let Some(r) = &p.sigma_recipe else { continue };
            let Some(f) = cat.algebra(&p.g).and_then(matrix_family) else { continue };
            if f.complex_rank() > 2 {
                continue;
            }
            let l = construct_classical(&p.g).unwrap();
            let s = Involution::from_recipe(&l, &Recipe::parse(r).unwrap()).unwrap();
            out.push((format!("({}, {})", p.g, p.gprime), l, s));
        }
        out
    })
}

fn small_algebras() -> &'static Vec<MatrixLieAlgebra> {
    static ALGS: OnceLock<Vec<MatrixLieAlgebra>> = OnceLock::new();
    ALGS.get_or_init(|| ["sl(2,R)", "su(2,1)", "sp(2,R)", "so(3,2)", "sp(1,1)"].iter().map(|g| construct_classical(g).unwrap()).collect())
}

fn int_vec(d: usize, coeffs: &[i64]) -> QVec {
    (0..d).map(|i| rat(coeffs[i % coeffs.len()])).collect()
}

fn summand() -> impl Strategy<Value = String> {
    prop_oneof![
        (2usize..6).prop_map(|n| format!("sl({n},R)")),
        (1usize..4, 1usize..4).prop_map(|(p, q)| format!("su({p},{q})")),
        (1usize..5, 1usize..5).prop_map(|(p, q)| format!("so({p},{q})")),
        (1usize..4, 0usize..3).prop_map(|(p, q)| format!("sp({p},{q})")),
        (1usize..4).prop_map(|n| format!("sp({n},R)")),
        (1usize..4).prop_map(|n| format!("u({n})")),
        Just("gl(1,R)".to_string()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_labels_are_fixed_points(parts in prop::collection::vec(summand(), 1..4), rot in 0usize..4) {
        let s = parts.join("+");
        let c = canonicalize(&s).unwrap();
        prop_assert_eq!(canonicalize(&c).unwrap(), c.clone());
        let mut rotated = parts.clone();
        rotated.rotate_left(rot % parts.len());
        prop_assert_eq!(canonicalize(&rotated.join(" + ")).unwrap(), c);
        let l = AlgebraLabel::parse(&s).unwrap();
        prop_assert_eq!(l.dim(), l.complexified().dim());
    }

    #[test]
    fn bb_test_ignores_summand_order(a in summand(), b in summand(), g in prop::sample::select(vec!["sl(3,R)", "su(2,1)", "so(3,1)", "so(4,2)", "su(3,1)", "sl(4,R)"])) {
        prop_assert_eq!(is_bb_pair(g, &format!("{a}+{b}")), is_bb_pair(g, &format!("{b}+{a}")));
    }

    #[test]
    fn involutions_are_automorphisms(i in any::<prop::sample::Index>(), xs in prop::collection::vec(-3i64..=3, 1..8), ys in prop::collection::vec(-3i64..=3, 1..8)) {
        let pairs = small_pairs();
        let (name, l, s) = &pairs[i.index(pairs.len())];
        let d = l.dim();
        let x = int_vec(d, &xs);
        let y = int_vec(d, &ys);
        prop_assert_eq!(s.apply(&s.apply(&x)), x.clone(), "{}", name);
        prop_assert_eq!(s.apply(&l.bracket(&x, &y)), l.bracket(&s.apply(&x), &s.apply(&y)), "{}", name);
        prop_assert_eq!(s.apply(&l.apply_theta(&x)), l.apply_theta(&s.apply(&x)), "{}", name);
        prop_assert_eq!(s.fixed.dim() + s.anti_fixed.dim(), d);
        if let Some(hd) = hermitian_data(l).unwrap() {
            prop_assert!(holo_type(s, &hd.z).is_ok(), "{} has no holomorphy type", name);
        }
    }

    #[test]
    fn killing_orthocomplement_is_an_involution(i in 0usize..5, rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..4)) {
        let l = &small_algebras()[i];
        let d = l.dim();
        let vs: Vec<QVec> = rows.iter().map(|c| int_vec(d, c)).collect();
        let w = Subspace::span(d, &vs);
        let perp = l.orthocomplement(&w);
        prop_assert_eq!(w.dim() + perp.dim(), d);
        let back = l.orthocomplement(&perp);
        prop_assert!(back.contains_subspace(&w) && w.contains_subspace(&back));
        for u in w.basis() {
            for v in perp.basis() {
                prop_assert_eq!(l.killing(u, v), rat(0));
            }
        }
    }

    #[test]
    fn verdict_routes_partition(i in any::<prop::sample::Index>()) {
        let cat = catalog();
        let reg = Registry::with_matrix_rank(cat, 2);
        let p = &cat.pairs[i.index(cat.pairs.len())];
        let v = decide_pair(&reg, &p.g, &p.gprime).unwrap();
        prop_assert!(v.routes.iter().all(|r| r.status == RouteStatus::Passes && r.witness.is_some()));
        prop_assert!(v.other_routes.iter().all(|r| r.status != RouteStatus::Passes));
        let mut ids: Vec<RouteId> = v.routes.iter().chain(&v.other_routes).map(|r| r.theorem_id).collect();
        ids.sort();
        let mut want = if v.tensor { RouteId::TENSOR.to_vec() } else { RouteId::RESTRICTION.to_vec() };
        want.sort();
        prop_assert_eq!(ids, want);
        prop_assert_eq!(v.bounded == Bounded::Unknown, v.routes.is_empty());
    }
}
