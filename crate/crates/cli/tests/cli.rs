use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadpoisson")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("quadpoisson-cli-{}-{name}", std::process::id()))
}

#[test]
fn catalog_lists_thirteen_classes() {
    let o = run(&["catalog", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 13);
    assert_eq!(entries[12]["srmi"], "never");
    assert_eq!(entries[0]["srmi"], "always");

    let o = run(&["catalog", "--index", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("iff a = -1/3"));
}

#[test]
fn bad_inputs_exit_with_two() {
    assert_eq!(run(&["catalog", "--index", "14"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "--structure", "dhc:3", "--param", "zz=1"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "--structure", "nowhere"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum"]).status.code(), Some(2), "missing required flag");
    // non-SRMI classes have no spectrum
    assert_eq!(run(&["spectrum", "--structure", "dhc:13"]).status.code(), Some(2));

    let path = temp_path("zero-alpha.json");
    std::fs::write(&path, r#"{"n": 2, "alpha": ["0","0","0","0"], "frame": [["1","0","0","0"],["0","0","0","1"]]}"#)
        .unwrap();
    let arg = format!("file:{}", path.display());
    let o = run(&["cohomology", "--structure", &arg, "--rmax", "2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
}

#[test]
fn spectrum_of_the_nilpotent_example() {
    let o = run(&["spectrum", "--structure", "dhc:3", "--param", "a=0", "-r", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mu"], 3);
    assert_eq!(v["s"], 3);
    assert_eq!(v["formula_matches"], true);
    assert_eq!(v["kernel_dims"], serde_json::json!([1, 1, 1]));
    let lines: Vec<String> = v["kernel_lines"]
        .as_array()
        .unwrap()
        .iter()
        .map(|level| level[0].as_object().unwrap().keys().next().unwrap().clone())
        .collect();
    assert_eq!(lines, ["2,0,1", "1,1,1", "0,2,1"]);
}

#[test]
fn spectrum_of_the_rotation_example() {
    let o = run(&["spectrum", "--structure", "dhc:2", "--param", "a=1", "--param", "b=0", "-r", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mu"], 1);
    assert_eq!(v["s"], 1);
    assert_eq!(v["formula_matches"], true);
}

#[test]
fn cohomology_report_is_written_and_deterministic() {
    let path = temp_path("lambda3.json");
    let out = path.to_str().unwrap();
    let args = ["cohomology", "--structure", "dhc:3", "--param", "a=1", "--rmax", "3", "--out", out, "--json"];
    let first = run(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, first.stdout);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_file(&path).ok();

    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["params"]["a"], "1");
    let slices = v["slices"].as_array().unwrap();
    assert!(!slices.is_empty());
    for s in slices {
        for k in ["les", "assemble", "subcomplex", "complement_independent"] {
            assert_eq!(s["checks"][k], true);
        }
    }
    // functions of degree 0: only constants are Casimirs of a nonzero structure
    let table = v["real_table"].as_array().unwrap();
    let h00 = table.iter().find(|e| e["p"] == 0 && e["d"] == 0).unwrap();
    assert_eq!(h00["dim"], 1);

    let text = run(&["cohomology", "--structure", "dhc:3", "--param", "a=1", "--rmax", "3"]);
    assert!(text.status.success());
    assert!(stdout(&text).contains("all checks: pass"));
}

#[test]
fn bivector_files_use_the_direct_path() {
    let path = temp_path("bivector.json");
    std::fs::write(&path, r#"{"n": 3, "bivector": [{"indices": [1, 2], "poly": {"0,0,2": "1"}}]}"#).unwrap();
    let arg = format!("file:{}", path.display());
    let o = run(&["cohomology", "--structure", &arg, "--rmax", "2", "--json"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["slices"].as_array().unwrap().is_empty());
    assert_eq!(v["real_table"].as_array().unwrap().len(), 4 * 3);
}

#[test]
fn verify_runs_a_single_suite() {
    let o = run(&["verify", "--suite", "minors", "--json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["suite"], "minors");
}
