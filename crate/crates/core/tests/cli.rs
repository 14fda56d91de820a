use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ultracrystal")).args(args).output().expect("binary runs")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn validated(name: &str, args: &[&str]) -> (i32, Value) {
    let o = bin(args);
    let v: Value = serde_json::from_slice(&o.stdout).expect("json report");
    let errs: Vec<String> = schema(name).iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errs.is_empty(), "{name}: {errs:?}");
    (o.status.code().unwrap(), v)
}

#[test]
fn reports_match_schemas() {
    let (code, v) = validated("verify-iso", &["verify-iso", "--radius", "1"]);
    assert_eq!((code, &v["pass"]), (0, &Value::Bool(true)));
    let (code, _) = validated("verify-ud", &["verify-ud", "--radius", "1", "--span", "1"]);
    assert_eq!(code, 0);
    let (code, _) = validated("verify-geom", &["verify-geom", "--samples", "3", "--seed", "11"]);
    assert_eq!(code, 0);
    let (code, v) = validated("verify-axioms", &["verify-axioms", "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["targets"][0]["elements"], ultracrystal::perfect::enumerate(2).unwrap().len());
}

#[test]
fn axioms_default_targets() {
    let (code, v) = validated("verify-axioms", &["verify-axioms", "--radius", "1"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["targets"].as_array().unwrap().iter().map(|t| t["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["B_1", "B_2", "B_inf", "X"]);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["nonsense"]).status.code(), Some(2));
    assert_eq!(bin(&["enumerate", "--level", "-1"]).status.code(), Some(2));
    let o = bin(&["trop", "eval", "--file", "/nonexistent/expr", "--at", "x=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    let a = bin(&["verify-iso", "--radius", "1"]).stdout;
    let b = bin(&["verify-iso", "--radius", "1"]).stdout;
    assert_eq!(a, b);
    assert!(a.ends_with(b"\n"));
}

#[test]
fn freeze_reproduces_tables() {
    let frozen = include_str!("../src/ud/tables.rs");
    assert_eq!(String::from_utf8(bin(&["trop", "freeze"]).stdout).unwrap(), frozen);
}
