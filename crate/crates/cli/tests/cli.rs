use std::process::{Command, Output};

use serde_json::{json, Value};

fn immaculate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(args)
        .env_remove("IMMACULATE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn kostka_prints_the_number() {
    let o = immaculate(&["kostka", "--shape", "[4,2,3]", "--content", "[3,1,2,3]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn kostka_size_mismatch_is_usage_error() {
    let o = immaculate(&["kostka", "--shape", "[2]", "--content", "[1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_composition_is_usage_error() {
    for bad in ["[2,0,1]", "[a]", "2,1", "[2,1"] {
        let o = immaculate(&["char", "--alpha", bad, "--kind", "quotient"]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
    assert_eq!(immaculate(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn characteristic_of_one_row() {
    let o = immaculate(&["char", "--alpha", "[3]", "--kind", "quotient"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o), json!({"F": {"[3]": "1"}}));
}

#[test]
fn characteristic_of_word_module() {
    let o = immaculate(&["char", "--alpha", "[1,1]", "--kind", "word"]);
    assert_eq!(json_of(&o), json!({"F": {"[1,1]": "1", "[2]": "1"}}));
}

#[test]
fn expansions() {
    let o = immaculate(&["expand", "--what", "dual-immaculate", "--alpha", "[1,2]", "--basis", "m"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json_of(&o),
        json!({"algebra":"QSym","basis":"M","degree":3,"coeffs":{"[1,1,1]":"1","[1,2]":"1"}})
    );
    let f = json_of(&immaculate(&["expand", "--what", "dual-immaculate", "--alpha", "[1,2]", "--basis", "f"]));
    assert_eq!(f["basis"], "F");
    let h = json_of(&immaculate(&["expand", "--what", "immaculate", "--alpha", "[1,2]", "--basis", "h"]));
    assert_eq!(h["algebra"], "NSym");
    let o = immaculate(&["expand", "--what", "immaculate", "--alpha", "[1,2]", "--basis", "m"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_export_of_quotient() {
    let o = immaculate(&["module", "--alpha", "[2,2,3]", "--kind", "quotient", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph \"V[2,2,3]\" {"));
    let vertices = dot.lines().filter(|l| l.trim_start().starts_with('t') && !l.contains("->")).count();
    assert_eq!(vertices, 24);
    assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with("\"0\" [")).count(), 1);
}

#[test]
fn module_json_dump() {
    let v = json_of(&immaculate(&["module", "--alpha", "[1,1]", "--kind", "word", "--json"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["label"], "M");
    assert_eq!(v["generators"]["1"], json!([{"to": 1}, {"fixed": true}]));
    let o = immaculate(&["module", "--alpha", "[1,1]", "--kind", "word", "--json", "--dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_single_and_sweep() {
    let o = immaculate(&["certify", "--alpha", "[2,2,3]"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["commutant_dim"], 1);
    assert_eq!(v["dim"], 24);

    let o = immaculate(&["certify", "--all-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let all = json_of(&o);
    assert_eq!(all.as_array().unwrap().len(), 16);
    assert!(all.as_array().unwrap().iter().all(|c| c["valid"] == true));

    assert_eq!(immaculate(&["certify"]).status.code(), Some(2));
    assert_eq!(immaculate(&["certify", "--alpha", "[2]", "--all-n", "2"]).status.code(), Some(2));
}

#[test]
fn verify_sweep_passes() {
    let o = immaculate(&["verify", "--all-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["passed"], true);
}

#[test]
fn sweep_cap_is_enforced() {
    let o = immaculate(&["verify", "--all-n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(["certify", "--all-n", "4"])
        .env("IMMACULATE_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(["verify", "--all-n", "3"])
        .env("IMMACULATE_MAX_N", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["module", "--alpha", "[2,2,3]", "--kind", "quotient", "--dot"][..],
        &["certify", "--all-n", "4"][..],
        &["char", "--alpha", "[2,1,2]", "--kind", "word"][..],
    ] {
        assert_eq!(immaculate(args).stdout, immaculate(args).stdout);
    }
}

#[test]
fn library_entry_point() {
    let out = immaculate_cli::run(["immaculate", "kostka", "--shape", "[2,1]", "--content", "[2,1]"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1\n");
    let help = immaculate_cli::run(["immaculate", "--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("certify"));
}
