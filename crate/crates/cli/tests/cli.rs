use std::process::{Command, Output};

use serde_json::Value;

fn genassoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genassoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = genassoc(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const A3: &str = "1->2; 3->2";

#[test]
fn arq_dump_of_running_example() {
    let v = json(&["arq", "--quiver", A3]);
    assert_eq!(v["indices"].as_array().unwrap().len(), 9);
    assert_eq!(v["dims"]["(1,3)"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["gvecs"]["(2,1)"], serde_json::json!([0, 0, -1]));
    assert_eq!(v["column_bounds"]["1"], 1);
    assert!(!v["slices"].as_array().unwrap().is_empty());
}

#[test]
fn arq_sizes() {
    assert_eq!(json(&["arq", "--quiver", "A1"])["indices"].as_array().unwrap().len(), 2);
    assert_eq!(json(&["arq", "--type", "E6"])["indices"].as_array().unwrap().len(), 42);
}

#[test]
fn gvectors_for_one_index() {
    let v = json(&["gvectors", "--quiver", A3, "--alpha", "1,2"]);
    assert_eq!(v["(1,2)"], serde_json::json!([-1, 1, -1]));
}

#[test]
fn polytope_of_running_example() {
    let v = json(&["polytope", "--quiver", A3]);
    let verts = v["vertices"].as_array().unwrap();
    assert_eq!(verts.len(), 14);
    assert!(verts.contains(&serde_json::json!(["3", "4", "3"])));
    let seg = json(&["polytope", "--quiver", "A1"]);
    assert_eq!(seg["vertices"].as_array().unwrap().len(), 2);
    let d4 = json(&["polytope", "--type", "D4"]);
    assert_eq!(d4["vertices"].as_array().unwrap().len(), 50);
}

#[test]
fn polytope_for_unit_parameters_and_off_export() {
    let v = json(&["polytope", "--quiver", A3, "--alpha", "0,2"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    let out = genassoc(&["polytope", "--quiver", A3, "--format", "off"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OFF\n14 9 0\n"));
    let bad = genassoc(&["polytope", "--type", "A4", "--format", "off"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn fpoly_and_universal_strings() {
    let v = json(&["fpoly", "--quiver", A3, "--alpha", "1,2"]);
    assert_eq!(v["(1,2)"], "y1*y2*y3 + y1*y3 + y1 + y3 + 1");
    let v = json(&["fpoly", "--quiver", A3, "--alpha", "0,1"]);
    assert_eq!(v["(0,1)"], "1");
    let v = json(&["universal", "--quiver", A3, "--alpha", "1,1"]);
    assert_eq!(v["(1,1)"], "z0_1 + z1_1*z1_2*z2_3");
}

#[test]
fn separation_with_one_frozen_vertex() {
    let ice = r#"{"base": {"n": 3, "arrows": [[1,2],[3,2]]}, "rows": [[1,0,-1]], "names": ["z"]}"#;
    let v = json(&["separation", "--quiver", A3, "--ice", ice, "--alpha", "2,3"]);
    assert_eq!(v["f_trop"]["(2,3)"], "1");
    // (x1*x3*z + x2 + z)/(x1*x2)
    assert_eq!(v["variables"]["(2,3)"], "x2^-1*x3*z + x1^-1 + x1^-1*x2^-1*z");
}

#[test]
fn verify_all_passes_and_is_reproducible() {
    let a = genassoc(&["verify", "--all", "--type", "A3", "--seed", "5"]);
    let b = genassoc(&["verify", "--all", "--type", "A3", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    for line in text.lines() {
        let r: Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["status"], "pass");
    }
}

#[test]
fn verify_single_check() {
    let out = genassoc(&["verify", "--quiver", A3, "--check", "th2", "--alpha", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["check"], "theorem_two");
    assert_eq!(r["details"]["vertices"], 5);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(genassoc(&["arq", "--quiver", "1->2; 2->3; 3->1"]).status.code(), Some(2));
    assert_eq!(genassoc(&["arq", "--quiver", "garbage"]).status.code(), Some(2));
    assert_eq!(genassoc(&["verify", "--type", "A3"]).status.code(), Some(2));
    assert_eq!(genassoc(&["verify", "--type", "A3", "--check", "th2", "--alpha", "2,2"]).status.code(), Some(2));
    assert_eq!(genassoc(&["polytope", "--type", "A3", "--c", "1,2"]).status.code(), Some(2));
    assert_eq!(genassoc(&["arq", "--type", "E8", "--max-rank", "6"]).status.code(), Some(2));
}

#[test]
fn out_file_is_written() {
    let dir = std::env::temp_dir().join(format!("genassoc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.json");
    let out = genassoc(&["polytope", "--quiver", A3, "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
