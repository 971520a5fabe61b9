//! The nine acceptance criteria, one pass/fail line each. Time limits are
//! wall-clock bounds on the criterion's own work.

use liebound::catalog::{matrix_family, Catalog, TriState};
use liebound::coiso::{
    check_hermitian_identity, grading_check, hermitian_diagonal, hermitian_restriction, minimal_diagonal,
    minimal_restriction, CoisoCertificate, Outcome,
};
use liebound::families::is_five_name;
use liebound::linalg::{add_vec, is_zero_vec, scale_vec, zero_vec};
use liebound::matlie::{construct_classical, construct_family, restricted_decomposition, Family};
use liebound::rootdata::{build_root_system, grading_profile, m_real, n_complex, n_for, CartanType, Series};
use liebound::scalar::rat;
use liebound::sympair::{hermitian_data, sigma_split_a, HoloType, Involution, Provenance, Recipe, Registry};
use liebound::verdict::{is_remaining_name, sweep_catalog, RouteId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::time::{Duration, Instant};

const SEEDS: [u64; 3] = [1, 2, 3];
const SAMPLES: usize = 5;
/// Complex-rank bound for matrix-level sigma in the sweep.
const SWEEP_MATRIX_RANK: usize = 3;

struct Checked {
    pass: bool,
    report: Value,
    detail: String,
}

fn outcome(failures: Vec<String>, report: Value, summary: String) -> Checked {
    let pass = failures.is_empty();
    let detail = if pass { summary } else { failures.join("; ") };
    Checked { pass, report, detail }
}

/// n(g_C) from the closed formulas of the table.
fn n_formula(t: CartanType) -> usize {
    let r = t.rank;
    match t.series {
        Series::A => r,
        Series::B => 2 * r - 2,
        Series::C => r,
        Series::D => 2 * r - 3,
        Series::G => 3,
        Series::F => 8,
        Series::E => [11, 17, 29][r - 6],
    }
}

fn all_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for s in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        for r in 1..=max_rank {
            if let Ok(t) = CartanType::new(s, r) {
                out.push(t);
            }
        }
    }
    out
}

fn criterion_1() -> Checked {
    let mut fails = Vec::new();
    let mut rows = Vec::new();
    let types = all_types(8);
    for t in &types {
        let n = n_complex(&build_root_system(*t)).unwrap();
        if n != n_formula(*t) {
            fails.push(format!("{t}: computed {n}, table {}", n_formula(*t)));
        }
        rows.push(json!([t.to_string(), n]));
    }
    outcome(fails, json!(rows), format!("{} Cartan types of rank <= 8", types.len()))
}

fn criterion_2(cat: &Catalog) -> Checked {
    let mut want: Vec<(String, u32)> = Vec::new();
    for n in 2..=6 {
        want.push((format!("su*({})", 2 * n), 4 * n as u32 - 4));
    }
    for n in 5..=10 {
        want.push((format!("so({},1)", n - 1), n as u32 - 2));
    }
    for m in 1..=5usize {
        for n in 1..=m {
            if m + n <= 6 {
                want.push((format!("sp({m},{n})"), 2 * (m + n) as u32 - 1));
            }
        }
    }
    want.push(("f4(-20)".into(), 11));
    want.push(("e6(-26)".into(), 16));
    let mut fails = Vec::new();
    let mut rows = Vec::new();
    for (label, m) in &want {
        match cat.algebra(label) {
            None => fails.push(format!("{label} missing from the catalog")),
            Some(a) => {
                let got = m_real(&a.datum()).unwrap();
                if got != *m {
                    fails.push(format!("{label}: computed {got}, table {m}"));
                }
                rows.push(json!([label, got]));
            }
        }
    }
    outcome(fails, json!(rows), format!("{} algebras", want.len()))
}

fn criterion_3(cat: &Catalog) -> Checked {
    let mut fails = Vec::new();
    let mut strict = Vec::new();
    for a in &cat.algebras {
        let n = n_for(a.complex_type, a.is_complex) as u32;
        let m = m_real(&a.datum()).unwrap();
        let five = a.names().any(is_five_name);
        if n > m {
            fails.push(format!("{}: n = {n} > m = {m}", a.label));
        }
        if (m > n) != five {
            fails.push(format!("{}: m = {m}, n = {n}, listed = {five}", a.label));
        }
        if m > n {
            strict.push(a.label.clone());
        }
    }
    let summary = format!("{} algebras, strict on {}", cat.algebras.len(), strict.len());
    outcome(fails, json!(strict), summary)
}

fn low_rank_families(cat: &Catalog, max: usize) -> Vec<(String, Family)> {
    cat.algebras
        .iter()
        .filter_map(|a| matrix_family(a).filter(|f| f.complex_rank() <= max).map(|f| (a.label.clone(), f)))
        .collect()
}

fn criterion_4(cat: &Catalog) -> Checked {
    let mut fails = Vec::new();
    let mut rows = Vec::new();
    for (label, fam) in low_rank_families(cat, 4) {
        let a = cat.algebra(&label).unwrap();
        let l = construct_family(fam).unwrap();
        let dcmp = restricted_decomposition(&l).unwrap();
        let classes: Vec<(usize, usize)> =
            dcmp.length_classes().unwrap().into_iter().map(|(_, n, m)| (n, m)).collect();
        let d = a.datum();
        let (_, tagged) = a.restricted_type.roots();
        let recorded: Vec<(usize, usize)> = a
            .restricted_type
            .classes()
            .into_iter()
            .map(|c| (tagged.iter().filter(|(_, t)| *t == c).count(), d.multiplicity(c) as usize))
            .collect();
        if classes != recorded {
            fails.push(format!("{label}: classes {classes:?} vs catalog {recorded:?}"));
        }
        let gl = grading_check(&l, &dcmp).unwrap();
        let p = grading_profile(&d).unwrap();
        if (gl.a as u32, gl.b as u32) != (p.a, p.b) {
            fails.push(format!("{label}: (a,b) = ({}, {}) vs catalog ({}, {})", gl.a, gl.b, p.a, p.b));
        }
        if gl.rank_ad_x != gl.a + 2 * gl.b {
            fails.push(format!("{label}: rank ad X = {} but a + 2b = {}", gl.rank_ad_x, gl.a + 2 * gl.b));
        }
        // sp(p,q): a = 4(p+q-2), b = 3
        if let Family::SpPQ(pp, q) = fam {
            if (gl.a, gl.b) != (4 * (pp + q - 2), 3) {
                fails.push(format!("{label}: (a,b) = ({}, {}) vs 4(p+q-2), 3", gl.a, gl.b));
            }
        }
        rows.push(json!([label, classes, gl.a, gl.b, gl.rank_ad_x]));
    }
    let summary = format!("{} classical algebras of complex rank <= 4", rows.len());
    outcome(fails, json!(rows), summary)
}

fn criterion_5(cat: &Catalog) -> Checked {
    let mut fails = Vec::new();
    let mut rows = Vec::new();
    for (label, fam) in low_rank_families(cat, 4) {
        let l = construct_family(fam).unwrap();
        let dcmp = restricted_decomposition(&l).unwrap();
        match grading_check(&l, &dcmp) {
            Ok(gl) => {
                if !gl.holds() {
                    fails.push(format!("{label}: {gl:?}"));
                }
                rows.push(json!([label, gl.dims, gl.holds()]));
            }
            Err(e) => fails.push(format!("{label}: {e}")),
        }
    }
    let summary = format!("{} algebras", rows.len());
    outcome(fails, json!(rows), summary)
}

fn criterion_6(cat: &Catalog) -> Checked {
    let reg = Registry::new(cat);
    let mut cases: Vec<(String, String, bool)> = Vec::new();
    for (p, q) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        cases.push((format!("sp({p},{q})"), format!("u({p},{q})"), true));
    }
    for (g, gp) in [
        ("sp(1,1)", "sp(1)+sp(1)"),
        ("sp(2,1)", "sp(1,1)+sp(1)"),
        ("sp(2,1)", "sp(2)+sp(1)"),
        ("sp(3,1)", "sp(2,1)+sp(1)"),
        ("sp(3,1)", "sp(2)+sp(1,1)"),
        ("sp(3,1)", "sp(3)+sp(1)"),
        ("sp(2,2)", "sp(1,1)+sp(1,1)"),
        ("sp(2,2)", "sp(2,1)+sp(1)"),
        ("sp(2,2)", "sp(2)+sp(2)"),
    ] {
        cases.push((g.into(), gp.into(), true));
    }
    for (g, gp) in [
        ("sl(4,R)", "sp(2,R)"),
        ("sp(2,R)", "sp(1,R)+sp(1,R)"),
        ("sp(3,R)", "sp(2,R)+sp(1,R)"),
        ("su(2,2)", "sp(1,1)"),
        ("so(5,2)", "so(4,2)"),
        ("so(5,2)", "so(5,1)"),
        ("so(4,3)", "so(3,3)"),
        ("so(4,3)", "so(4,2)"),
        ("so(4,4)", "so(4,3)"),
    ] {
        cases.push((g.into(), gp.into(), false));
    }
    let mut fails = Vec::new();
    let mut rows = Vec::new();
    for (g, gp, want) in &cases {
        let rp = reg.register_pair(g, gp).unwrap();
        let f = rp.spec.sigma_mu_minus.clone().unwrap();
        let got = f.value == TriState::Yes;
        if f.provenance != Provenance::Computed {
            fails.push(format!("({g}, {gp}) not computed on the matrix model"));
        }
        if got != *want {
            fails.push(format!("({g}, {gp}): sigma(mu) = -mu is {got}"));
        }
        rows.push(json!([g, gp, got]));
    }
    // (sl(2,R), sp(1,R)): sigma is the identity, evaluated from the recipe
    let l = construct_classical("sl(2,R)").unwrap();
    let s = Involution::from_recipe(&l, &Recipe::parse("negT[J(1)]").unwrap()).unwrap();
    let split = sigma_split_a(&l, &s).unwrap();
    if split.sigma_mu_minus() {
        fails.push("(sl(2,R), sp(1,R)): sigma(mu) = -mu".into());
    }
    rows.push(json!(["sl(2,R)", "sp(1,R)", split.sigma_mu_minus()]));
    let summary = format!("{} pairs", rows.len());
    outcome(fails, json!(rows), summary)
}

fn sampled(c: &CoisoCertificate) -> usize {
    c.points.iter().filter(|p| p.id > 0 && p.outcome != Outcome::Skipped).count()
}

fn cert_check(name: &str, c: &CoisoCertificate, fails: &mut Vec<String>) -> Value {
    if !c.holds {
        fails.push(format!("{name} seed {}: fails", c.seed));
    }
    if !c.hypotheses.iter().all(|(_, h)| *h) {
        fails.push(format!("{name} seed {}: hypothesis false", c.seed));
    }
    if sampled(c) < SAMPLES {
        fails.push(format!("{name} seed {}: only {} sampled points", c.seed, sampled(c)));
    }
    serde_json::to_value(c).unwrap()
}

/// Random nonzero element of `p_+` with small integer coordinates.
fn random_p_plus(basis: &[Vec<liebound::scalar::Rational>], rng: &mut ChaCha8Rng) -> Vec<liebound::scalar::Rational> {
    loop {
        let mut v = zero_vec(basis[0].len());
        for b in basis {
            let c: i64 = rng.gen_range(-2..=2);
            v = add_vec(&v, &scale_vec(&rat(c), b));
        }
        if !is_zero_vec(&v) {
            return v;
        }
    }
}

fn criterion_7(cat: &Catalog) -> Checked {
    let reg = Registry::new(cat);
    let mut fails = Vec::new();
    let mut certs = Vec::new();
    let mut count = 0;
    for g in ["su(1,1)", "su(2,1)", "sp(2,R)"] {
        let mut anti = 0;
        for p in cat.pairs_of(g) {
            let rp = reg.register_pair(g, &p.gprime).unwrap();
            if rp.spec.holo_type.as_ref().map(|h| h.value) != Some(HoloType::AntiHolomorphic) {
                continue;
            }
            anti += 1;
            let m = rp.model.unwrap();
            for seed in SEEDS {
                let c = hermitian_restriction(&m.algebra, &m.sigma, SAMPLES, seed).unwrap();
                certs.push(cert_check(&format!("restriction ({g}, {})", p.gprime), &c, &mut fails));
                count += 1;
            }
        }
        if anti == 0 {
            fails.push(format!("{g}: no anti-holomorphic pair"));
        }
    }
    for g in ["su(1,1)", "sp(2,R)"] {
        let l = construct_classical(g).unwrap();
        for seed in SEEDS {
            let c = hermitian_diagonal(&l, SAMPLES, seed).unwrap();
            certs.push(cert_check(&format!("Hermitian diagonal {g}"), &c, &mut fails));
            count += 1;
        }
    }
    for (g, gp) in [("sp(1,1)", "u(1,1)"), ("sp(1,2)", "sp(1,1)+sp(0,1)")] {
        let rp = reg.register_pair(g, gp).unwrap();
        let m = rp.model.unwrap();
        for seed in SEEDS {
            let c = minimal_restriction(&m.algebra, &m.sigma, m.split.as_ref().unwrap(), SAMPLES, seed).unwrap();
            certs.push(cert_check(&format!("minimal restriction ({g}, {gp})"), &c, &mut fails));
            count += 1;
        }
    }
    for g in ["sl(2,R)", "sl(3,R)", "sp(1,1)"] {
        let l = construct_classical(g).unwrap();
        for seed in SEEDS {
            let c = minimal_diagonal(&l, SAMPLES, seed).unwrap();
            // openness: the slice ledger and g = Z(Y) + (m + R A_mu) + Z(X)
            if c.openness.len() < 2 || !c.openness.iter().all(|o| o.holds) {
                fails.push(format!("{g}: openness ledger {:?}", c.openness));
            }
            certs.push(cert_check(&format!("minimal diagonal {g}"), &c, &mut fails));
            count += 1;
        }
    }
    let mut ids = Vec::new();
    for g in ["su(1,1)", "su(2,1)", "sp(2,R)"] {
        let l = construct_classical(g).unwrap();
        let hd = hermitian_data(&l).unwrap().unwrap();
        for seed in SEEDS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut xs = vec![hd.p_plus.basis()[0].clone()];
            for _ in 0..SAMPLES {
                xs.push(random_p_plus(hd.p_plus.basis(), &mut rng));
            }
            for x in &xs {
                let id = check_hermitian_identity(&hd, x).unwrap();
                if !id.holds {
                    fails.push(format!("[X, p_-] identity on {g} seed {seed}: {id:?}"));
                }
                ids.push(json!([g, seed, id.lhs_dim, id.rhs_dim, id.orbit_dim, id.holds]));
            }
        }
    }
    let summary = format!("{count} certificates, {} identity points", ids.len());
    outcome(fails, json!({"certificates": certs, "identity": ids}), summary)
}

fn criterion_8(cat: &Catalog) -> Checked {
    let reg = Registry::with_matrix_rank(cat, SWEEP_MATRIX_RANK);
    let rep = sweep_catalog(&reg);
    let mut fails = Vec::new();
    if !rep.zero_route.is_empty() {
        fails.push(format!("zero-route pairs {:?}", rep.zero_route));
    }
    if !rep.tensor_zero_route.is_empty() {
        fails.push(format!("tensor zero-route {:?}", rep.tensor_zero_route));
    }
    if !rep.errors.is_empty() {
        fails.push(format!("errors {:?}", rep.errors));
    }
    let pair_tags: std::collections::BTreeMap<(String, String), &Vec<String>> =
        cat.pairs.iter().map(|p| ((p.g.clone(), p.gprime.clone()), &p.tags)).collect();
    let mut table2 = 0;
    for e in &rep.entries {
        let a = cat.algebra(&e.g).unwrap();
        let tags = pair_tags[&(e.g.clone(), e.gprime.clone())];
        if tags.iter().any(|t| t == "remaining") {
            table2 += 1;
            let expect = match Family::parse(&a.label) {
                Ok(Family::SpPQ(p, q)) => 2 * (p + q) as u32 - 1,
                _ => 11,
            };
            if !e.routes.contains(&RouteId::SmallRep) || e.small_rep_gk != Some(expect) {
                fails.push(format!("({}, {}): {:?} gk {:?}", e.g, e.gprime, e.routes, e.small_rep_gk));
            }
        }
        if a.names().any(is_remaining_name) && (a.para_levis.is_empty()) {
            let others = [RouteId::HwRestriction, RouteId::ParaHermitian, RouteId::MinimalGk];
            if others.iter().any(|r| e.routes.contains(r)) {
                fails.push(format!("({}, {}): unexpected route in {:?}", e.g, e.gprime, e.routes));
            }
        }
        if a.hermitian && !e.routes.contains(&RouteId::HwRestriction) {
            fails.push(format!("({}, {}): Hermitian g without HW-restriction", e.g, e.gprime));
        }
        if !a.para_levis.is_empty() && !e.routes.contains(&RouteId::ParaHermitian) {
            fails.push(format!("({}, {}): para-Hermitian g without ParaHermitian", e.g, e.gprime));
        }
    }
    if table2 == 0 {
        fails.push("no remaining pairs in the catalog".into());
    }
    let summary = format!("{} pairs ({} remaining), {} tensor questions", rep.pairs, table2, rep.algebras);
    outcome(fails, serde_json::to_value(&rep).unwrap(), summary)
}

type Criterion = (usize, &'static str, Duration, fn(&Catalog) -> Checked);

const CRITERIA: [Criterion; 8] = [
    (1, "n(g_C) table", Duration::from_secs(5), |_| criterion_1()),
    (2, "m(g) table", Duration::from_secs(5), criterion_2),
    (3, "n <= m, strict on the five families", Duration::from_secs(5), criterion_3),
    (4, "matrix / catalog multiplicities and (a, b)", Duration::from_secs(60), criterion_4),
    (5, "sl2 and grading identities", Duration::from_secs(60), criterion_5),
    (6, "sigma(mu) = -mu cases", Duration::from_secs(30), criterion_6),
    (7, "coisotropic certificates", Duration::from_secs(120), criterion_7),
    (8, "verdict exhaustiveness", Duration::from_secs(10), criterion_8),
];

#[test]
fn acceptance() {
    let cat = Catalog::bundled();
    let mut all_pass = true;
    let mut first = Vec::new();
    for (id, name, limit, run) in CRITERIA {
        let t = Instant::now();
        let o = run(&cat);
        let dt = t.elapsed();
        let pass = o.pass && dt <= limit;
        all_pass &= pass;
        println!(
            "criterion {id} [{}] {name}: {} ({:.2} s, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            dt.as_secs_f64(),
            limit.as_secs()
        );
        first.push(serde_json::to_string(&json!({"criterion": id, "report": o.report})).unwrap());
    }
    let mut identical = true;
    for ((id, _, _, run), before) in CRITERIA.iter().zip(&first) {
        let again = serde_json::to_string(&json!({"criterion": id, "report": run(&cat).report})).unwrap();
        if &again != before {
            identical = false;
            println!("criterion {id} report changed between runs");
        }
    }
    let bytes: usize = first.iter().map(|s| s.len()).sum();
    println!(
        "criterion 9 [{}] determinism: {} ({bytes} bytes of JSON compared)",
        if identical { "PASS" } else { "FAIL" },
        if identical { "criteria 1-8 reports byte-identical on rerun" } else { "reports differ" }
    );
    assert!(all_pass && identical, "acceptance criteria failed");
}
