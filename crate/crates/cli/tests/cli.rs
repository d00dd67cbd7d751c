use std::path::PathBuf;
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../presentations").join(format!("{name}.sgp"))
}

fn absolute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absolute")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn describe_prints_summary() {
    let o = absolute(&["describe", golden("z2").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dimension: 2"));
    assert!(s.contains("μ(a)·μ(b) = μ(c)·μ(d)"));
    assert!(s.contains("topology: closed_disk(2)"));
}

#[test]
fn describe_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tripod.json");
    let o = absolute(&["describe", golden("tripod").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["absolute_dimension"], 1);
    assert_eq!(v["branching"], true);
    assert_eq!(v["strata"].as_array().unwrap().len(), 5);
}

#[test]
fn equations_lists_the_chain() {
    let o = absolute(&["equations", golden("z3").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn check_measure_exit_codes() {
    let z2 = golden("z2");
    let ok = absolute(&["check-measure", z2.to_str().unwrap(), "--mu", "4/9,1/9,2/9,2/9"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = absolute(&["check-measure", z2.to_str().unwrap(), "--mu", "1/2,1/8,1/4,1/8"]);
    assert_eq!(bad.status.code(), Some(1));
    let named = absolute(&["check-measure", z2.to_str().unwrap(), "--mu", "a=1/4,b=1/4,c=1/4,d=1/4"]);
    assert_eq!(named.status.code(), Some(0));
    let short = absolute(&["check-measure", z2.to_str().unwrap(), "--mu", "1/2,1/2"]);
    assert_eq!(short.status.code(), Some(2));
    let unnormalized = absolute(&["check-measure", z2.to_str().unwrap(), "--mu", "1/2,1/2,1/2,1/2"]);
    assert_eq!(unnormalized.status.code(), Some(2));
}

#[test]
fn verify_reports_witnesses() {
    let z5 = golden("z5");
    let ok = absolute(&["verify", z5.to_str().unwrap(), "--mu", "1/2,1/2", "--depth", "7"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = absolute(&["verify", z5.to_str().unwrap(), "--mu", "1/3,2/3", "--depth", "7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("level 5"));
}

#[test]
fn simulate_is_reproducible() {
    let z = golden("z");
    let args = ["simulate", z.to_str().unwrap(), "--mu", "1/2,1/2", "--steps", "6", "--trials", "5000", "--seed", "3"];
    let a = absolute(&args);
    let b = absolute(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["exact"]["0"], "5/16");
    assert!(v["max_sigma"].as_f64().unwrap() < 5.0);
}

#[test]
fn compare_quotients() {
    let same = absolute(&["compare", golden("z_times_z2").to_str().unwrap(), golden("z_with_unit").to_str().unwrap()]);
    assert_eq!(same.status.code(), Some(0));
    let different = absolute(&["compare", golden("z").to_str().unwrap(), golden("z5").to_str().unwrap()]);
    assert_eq!(different.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(absolute(&[]).status.code(), Some(2));
    assert_eq!(absolute(&["describe", "/nonexistent.sgp"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.sgp");
    std::fs::write(&broken, "generators: a b\nrelations: a + = b\n").unwrap();
    assert_eq!(absolute(&["describe", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(absolute(&["--help"]).status.code(), Some(0));
}

#[test]
fn class_mismatch_is_a_failure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("tripod_group.sgp");
    std::fs::write(&p, "generators: a b c\nrelations: a + b = a + c\nclass: group\n").unwrap();
    assert_eq!(absolute(&["describe", p.to_str().unwrap()]).status.code(), Some(1));
}
