use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } =
        Command::new(env!("CARGO_BIN_EXE_tensor-eigen")).args(args).output().expect("binary runs");
    (status.code().expect("exit code"), String::from_utf8(stdout).unwrap(), String::from_utf8(stderr).unwrap())
}

#[test]
fn count() {
    assert_eq!(run(&["count", "6", "3"]), (0, "31\n".into(), String::new()));
    assert_eq!(run(&["count", "2", "5"]).1, "5\n");
    assert_eq!(run(&["count", "3", "3"]).1, "7\n");
    assert_eq!(run(&["count", "1", "3"]).0, 1);
}

#[test]
fn eig_diagonal_is_clean() {
    let (code, out, _) = run(&["eig", &data("diagonal_3_2.json"), "--format", "machine"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["summary"]["total_multiplicity"], 3);
    let (code, human, _) = run(&["eig", &data("diagonal_3_2.json")]);
    assert_eq!(code, 0);
    assert!(human.contains("3 classes, total multiplicity 3 (expected 3)"));
}

#[test]
fn eig_family_is_degenerate() {
    let (code, out, _) = run(&["eig", &data("line_family.json"), "--format", "machine"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["positive_dimensional"], true);
}

#[test]
fn malformed_input() {
    assert_eq!(run(&["eig", &data("truncated.json")]).0, 1);
    assert_eq!(run(&["eig", &data("missing.json")]).0, 1);
    assert_eq!(run(&["hyperdet", &data("nilpotent_matrix.json")]).0, 1);
    assert_eq!(run(&["eig"]).0, 1);
}

#[test]
fn machine_output_is_byte_stable() {
    let a = run(&["eig", &data("symmetric_isotropic.json"), "--format", "machine"]);
    let b = run(&["eig", &data("symmetric_isotropic.json"), "--format", "machine"]);
    assert_eq!(a, b);
    let c = run(&["eig", &data("symmetric_isotropic.json"), "--format", "machine", "--seed", "7"]);
    assert_eq!(c.0, 0);
}

#[test]
fn hyperdet() {
    assert_eq!(run(&["hyperdet", &data("all_ones.json")]), (0, "0\n".into(), String::new()));
    assert_eq!(run(&["hyperdet", &data("listed_222.json")]).1, "-1\n");
}

#[test]
fn psd() {
    assert_eq!(run(&["psd", &data("motzkin.json")]), (0, "PSD: true\n".into(), String::new()));
    assert_eq!(run(&["psd", &data("neg_quartic.json")]).1, "PSD: false\n");
}

#[test]
fn singular_reports_probe_and_certificate() {
    let (code, out, _) = run(&["singular", &data("fineprint.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("probe: cofinite"), "{out}");
    assert!(out.contains("exact: singular"), "{out}");
    let (code, out, _) = run(&["singular", &data("diagonal_3_2.json"), "--format", "machine", "--trials", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["probe"]["kind"], "finite");
    assert_eq!(v["exact"]["singular"], false);
}

#[test]
fn charpoly() {
    let (code, out, _) = run(&["charpoly", &data("diagonal_3_2.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("exact: C2 = 2, C4 = -5, C6 = 4, C8 = -1"), "{out}");
    let (code, out, _) = run(&["charpoly", &data("fineprint.json")]);
    assert_eq!(code, 2);
    assert!(out.contains("indeterminate") && out.contains("C2 = 0, C4 = 0, C6 = 0, C8 = 0"), "{out}");
}

#[test]
fn dynamics() {
    let (code, out, _) = run(&["dynamics", &data("translation.json"), "--start", "1,0.5", "--kmax", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("undetermined"));
    let records: Vec<&str> =
        out.lines().filter(|l| l.split_whitespace().next().is_some_and(|t| t.parse::<usize>().is_ok())).collect();
    assert_eq!(records.len(), 9);
    assert!(records[0].starts_with("0 "));
    let (code, out, _) = run(&["dynamics", &data("nilpotent_matrix.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("nilpotent at iterate 3"));
    let (code, out, _) = run(&["dynamics", &data("cremona.json"), "--format", "machine"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["base_locus"].as_array().unwrap().len(), 3);
}

#[test]
fn output_file_and_config() {
    let dir = std::env::temp_dir().join(format!("tensor-eigen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("count.json");
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"seed": 11, "max_step": 0.05}"#).unwrap();
    let (code, stdout, _) = run(&["count", "4", "3", "--output", out.to_str().unwrap(), "--format", "machine"]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["expected_count"], 13);
    assert_eq!(run(&["eig", &data("diagonal_3_2.json"), "--config", cfg.to_str().unwrap()]).0, 0);
    std::fs::write(&cfg, r#"{"sed": 11}"#).unwrap();
    assert_eq!(run(&["eig", &data("diagonal_3_2.json"), "--config", cfg.to_str().unwrap()]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
