use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cohopf"))
}

fn catalog_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/catalog").join(format!("{name}.json"))
}

fn status(cmd: &mut Command) -> i32 {
    cmd.output().expect("binary runs").status.code().expect("exit code")
}

#[test]
fn verify_hopf_exit_codes() {
    assert_eq!(status(bin().arg("verify-hopf").arg(catalog_file("c2"))), 0);
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(catalog_file("c2")).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let out = bin().arg("verify-hopf").arg(&truncated).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn corrupted_antipode_fails_with_axiom_id() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(catalog_file("c2")).unwrap()).unwrap();
    v["antipode"] = serde_json::json!(["1", "0", "0", "-1"]);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let out = bin().arg("verify-hopf").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hopf.antipode"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn double_output_verifies_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert_eq!(status(bin().arg("double").arg(catalog_file("c2")).arg("--out").arg(p)), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(status(bin().arg("verify-hopf").arg(&a)), 0);
}

#[test]
fn run_theorems_reports_are_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4", "4"] {
        let p = dir.path().join(format!("r{}.json", outputs.len()));
        let code = status(
            bin().args(["run-theorems", "catalog:c2xc2", "--threads", threads, "--report"]).arg(&p),
        );
        assert_eq!(code, 0);
        outputs.push(std::fs::read(&p).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn run_theorems_on_c2_double() {
    let out = bin().arg("run-theorems").arg(catalog_file("c2")).args(["--map", "double-inclusion"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let suite = |name: &str| v["suites"].as_array().unwrap().iter().find(|s| s["name"] == name).unwrap().clone();
    let check = |s: &serde_json::Value, id: &str| {
        s["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap()["status"].clone()
    };
    assert_eq!(check(&suite("separability"), "theorem.separable"), "pass");
    assert_eq!(check(&suite("pivotal"), "theorem.pivotal"), "pass");
    assert_eq!(suite("ribbon")["checks"][0]["status"], "skipped");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn run_theorems_identity_and_map_file() {
    assert_eq!(status(bin().args(["run-theorems", "catalog:trivial", "--map", "identity"])), 0);
    let code = status(bin().args([
        "run-theorems",
        "catalog:c2_super",
        "--map",
        "file",
        "--map-file",
        "catalog:c2_diagonal_map",
        "--normalize-form",
        "off",
    ]));
    assert_eq!(code, 0);
}

#[test]
fn sweedler_double_skips_frobenius_suites() {
    let out = bin().args(["run-theorems", "catalog:sweedler"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let construction = v["suites"].as_array().unwrap().iter().find(|s| s["name"] == "construction").unwrap();
    assert_eq!(construction["checks"][0]["status"], "skipped");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(status(bin().args(["run-theorems", "catalog:c2", "--seeds", "missing"])), 2);
    assert_eq!(status(bin().args(["run-theorems", "catalog:c2", "--map", "file"])), 2);
    assert_eq!(status(bin().args(["run-theorems", "catalog:c2", "--depth"])), 2);
    assert_eq!(status(bin().args(["verify-hopf", "/nonexistent/file.json"])), 2);
}
