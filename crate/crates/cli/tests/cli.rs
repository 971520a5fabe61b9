use liebound::report::Report;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebound"))
        .args(args)
        .env_remove("LIEBOUND_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (r, o.status.code().unwrap())
}

fn value(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&run(&all))).unwrap()
}

fn routes(v: &serde_json::Value) -> Vec<String> {
    v["result"]["routes"].as_array().unwrap().iter().map(|r| r["theorem_id"].as_str().unwrap().to_string()).collect()
}

#[test]
fn info_reports_invariants() {
    let v = value(&["info", "sp(2,1)"]);
    let i = &v["result"];
    assert_eq!(i["m"], 5);
    assert_eq!((i["a"].as_u64(), i["b"].as_u64()), (Some(4), Some(3)));
    assert_eq!(i["case"], "Case1");
    assert_eq!(i["para_hermitian_levis"].as_array().unwrap().len(), 0);
    assert_eq!(value(&["info", "e7(C)"])["result"]["n"], 34);
    let text = stdout(&run(&["info", "sp(2,1)"]));
    assert!(text.contains("m(g) = 5") && text.contains("para-Hermitian: no"));
}

#[test]
fn unknown_label_suggests() {
    let o = run(&["info", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("try one of"));
    let o = run(&["info", "sp(9,1)"]);
    assert!(stderr(&o).contains("sp(1,1)") || stderr(&o).contains("sp(2,R)"), "{}", stderr(&o));
}

#[test]
fn pair_examples() {
    let (r, code) = json(&["pair", "sp(1,2)", "u(1,2)", "--verify"]);
    assert_eq!(code, 0);
    assert!(!r.certificates.is_empty() && r.certificates.iter().all(|c| c.holds));
    let v = value(&["pair", "sp(1,2)", "u(1,2)"]);
    assert_eq!(routes(&v), ["SmallRep"]);
    assert_eq!(v["result"]["routes"][0]["witness"]["gk_dim"], 5);

    let v = value(&["pair", "f4(-20)", "so(9)"]);
    assert_eq!(routes(&v), ["SmallRep"]);
    let conds = v["result"]["routes"][0]["conditions_checked"].as_array().unwrap();
    assert!(conds.iter().all(|c| c["provenance"] == "table"));

    let v = value(&["pair", "sl(4,R)", "so(2,2)"]);
    let rs = routes(&v);
    assert!(rs.contains(&"ParaHermitian".into()) && rs.contains(&"MinimalGK".into()));

    let o = run(&["pair", "sl(4,R)", "sp(5,R)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not in the registry"), "{}", stderr(&o));
}

#[test]
fn tensor_examples() {
    assert!(routes(&value(&["tensor", "sp(1,1)"])).contains(&"SmallRep-tensor".into()));
    assert!(routes(&value(&["tensor", "su(2,1)"])).contains(&"HW-tensor".into()));
    assert!(routes(&value(&["tensor", "so(3,3)"])).contains(&"Para-tensor".into()));
    let (r, code) = json(&["tensor", "su(1,1)", "--verify", "--trials", "3"]);
    assert_eq!(code, 0);
    assert!(r.certificates.len() == 2 && r.certificates.iter().all(|c| c.holds));
}

#[test]
fn table_dumps() {
    let rows = |w: &str| value(&["tables", w])["result"]["table"]["rows"].as_array().unwrap().clone();
    let m = rows("m");
    assert_eq!(m.len(), 5);
    assert_eq!(m[3]["formula"], "11");
    assert_eq!(m[4]["formula"], "16");
    assert_eq!(rows("remaining").len(), 2);
    assert_eq!(rows("bblist").len(), 3);
    assert!(!rows("n").is_empty() && !rows("para").is_empty());
    assert_eq!(run(&["tables", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_coiso_examples() {
    let (r, code) = json(&["verify-coiso", "sp(1,1)", "u(1,1)", "--trials", "5", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(r.certificates.iter().all(|c| c.holds && c.seed == 7 && c.evaluated_points() >= 5));
    let (r, code) = json(&["verify-coiso", "su(2,1)", "so(2,1)", "--trials", "3"]);
    assert_eq!(code, 0);
    assert!(r.certificates[0].statement.contains("p_+"));
    let o = run(&["verify-coiso", "f4(-20)", "so(9)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no matrix model"));
}

#[test]
fn holomorphic_control_is_descriptive() {
    // sigma = theta on su(2,1) is holomorphic; the outcome is reported, not asserted
    let (r, code) = json(&["verify-coiso", "su(2,1)", "s(u(2)+u(1))", "--trials", "2"]);
    assert!(code == 0 || code == 1);
    assert!(r.provenance.iter().any(|p| p.contains("negative control")) || r.certificates.iter().all(|c| c.holds));
}

#[test]
fn json_is_byte_identical() {
    let args = ["pair", "sp(1,1)", "u(1,1)", "--verify", "--seed", "3", "--json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let r: Report = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", a);
}

#[test]
fn catalog_loading() {
    let o = run(&["--catalog", "/nonexistent/cat.json", "info", "sl(2,R)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/cat.json"));

    let mut doc: serde_json::Value = serde_json::from_str(liebound::catalog::BUNDLED).unwrap();
    for a in doc["algebras"].as_array_mut().unwrap() {
        if a["label"] == "sp(2,1)" {
            a["mult"]["short"] = 5.into();
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edited.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run(&["--catalog", path.to_str().unwrap(), "info", "sl(2,R)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sp(2,1)"), "{}", stderr(&o));

    // the environment variable names the default catalog
    let o = Command::new(env!("CARGO_BIN_EXE_liebound"))
        .args(["info", "sl(2,R)"])
        .env("LIEBOUND_CATALOG", "/nonexistent/env.json")
        .output()
        .unwrap();
    assert!(stderr(&o).contains("/nonexistent/env.json"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["pair", "sl(2,R)"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
