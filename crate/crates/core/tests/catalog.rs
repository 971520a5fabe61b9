use liebound::catalog::{matrix_family, Catalog, LoadOptions, BUNDLED};
use liebound::label::AlgebraLabel;
use liebound::matlie::construct_classical;
use liebound::sympair::{characteristic_element, check_fixed_label, holo_type, sigma_split_a, Involution, Recipe};
use std::collections::BTreeMap;

/// Every record with a matrix model, at every rank, agrees with its
/// constructed restricted root system.
#[test]
fn bundled_catalog_cross_checks_at_full_rank() {
    Catalog::from_json(BUNDLED, LoadOptions { check_rank: usize::MAX }).unwrap();
}

/// Each recipe is an involution with the recorded fixed algebra.
#[test]
fn recipes_fix_the_recorded_subalgebra() {
    let cat = Catalog::bundled();
    let mut models = BTreeMap::new();
    let mut checked = 0;
    for p in &cat.pairs {
        let Some(r) = &p.sigma_recipe else { continue };
        let fam = matrix_family(cat.algebra(&p.g).unwrap()).unwrap();
        if fam.complex_rank() > 4 {
            continue;
        }
        let l = models.entry(p.g.clone()).or_insert_with(|| construct_classical(&p.g).unwrap());
        let s = Involution::from_recipe(l, &Recipe::parse(r).unwrap())
            .unwrap_or_else(|e| panic!("({}, {}): {e}", p.g, p.gprime));
        check_fixed_label(l, &s, &AlgebraLabel::parse(&p.gprime).unwrap())
            .unwrap_or_else(|e| panic!("({}, {}): {e}", p.g, p.gprime));
        sigma_split_a(l, &s).unwrap();
        if let Some(z) = characteristic_element(l).unwrap() {
            holo_type(&s, &z).unwrap();
        }
        checked += 1;
    }
    assert!(checked > 100, "only {checked} recipes at complex rank <= 4");
}
