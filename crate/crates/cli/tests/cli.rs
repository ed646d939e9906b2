use assert_cmd::Command;
use serde_json::Value;
use std::path::PathBuf;

fn liedef() -> Command {
    Command::cargo_bin("liedef").unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "core",
        "data",
        "objects",
        &format!("{name}.json"),
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

fn stdout(cmd: &mut Command) -> (String, i32) {
    let out = cmd.output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn jacobi_on_builtin_algebra() {
    let (out, code) = stdout(liedef().args(["jacobi", "heisenberg.json"]));
    assert_eq!(code, 0);
    assert!(out.contains("J(c) = 0"), "{out}");
}

#[test]
fn vessiot_constants_of_contact_section() {
    let (out, code) = stdout(liedef().args(["vessiot", &fixture("contact_special")]));
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "family=contact_density c=1 residual=0");
}

#[test]
fn vessiot_json_prints_rationals_as_strings() {
    let (out, code) = stdout(liedef().args(["--format", "json", "vessiot", &fixture("metric_sphere")]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.to_string().contains("\"1\""), "{v}");
}

#[test]
fn report_matches_golden() {
    let (out, code) = stdout(liedef().arg("report-paper"));
    assert_eq!(code, 0);
    let golden = include_str!("../golden/report_paper.txt");
    assert_eq!(out.trim_end(), golden.trim_end());
}

#[test]
fn report_json_round_trips() {
    let (out, code) = stdout(liedef().args(["report-paper", "--format", "json"]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["golden_match"], Value::Bool(true));
    assert_eq!(v["obstruction"]["order"], 2);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    let table = v["normalizer_table"].as_array().unwrap();
    assert!(
        table
            .iter()
            .all(|r| r["normalizer_quotient"]
                == r["centralizer_mod_center"].as_u64().unwrap() + r["h0"].as_u64().unwrap())
    );
}

#[test]
fn report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.txt");
    let (_, code) = stdout(liedef().args(["report-paper", "--out", &p.to_string_lossy()]));
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(p).unwrap();
    assert_eq!(
        written.trim_end(),
        include_str!("../golden/report_paper.txt").trim_end()
    );
}

#[test]
fn seed_does_not_change_reports() {
    let (a, _) = stdout(liedef().args(["report-paper", "--seed", "1"]));
    let (b, _) = stdout(liedef().args(["report-paper", "--seed", "7"]));
    assert_eq!(a, b);
    let (a, _) = stdout(liedef().args(["involutive", &fixture("unimodular_special"), "--seed", "3"]));
    let (b, _) = stdout(liedef().args(["involutive", &fixture("unimodular_special"), "--seed", "99"]));
    assert_eq!(a, b);
}

#[test]
fn jacobi_violation_in_fixture_directory() {
    let dir = tempfile::tempdir().unwrap();
    write(&dir, "bad.json", r#"{"family":"unimodular_contact","c1":"1","c2":"1"}"#);
    let out = liedef()
        .args(["report-paper", "--fixtures", &dir.path().to_string_lossy()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi violated: c′c″ = 1"));
}

#[test]
fn fixture_directory_report() {
    let dir = tempfile::tempdir().unwrap();
    write(
        &dir,
        "flat.json",
        r#"{"family":"unimodular_contact","c1":"0","c2":"0"}"#,
    );
    let (out, code) = stdout(liedef().args(["report-paper", "--fixtures", &dir.path().to_string_lossy()]));
    assert_eq!(code, 0);
    assert!(out.contains("flat"), "{out}");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", "{ not json");
    assert_eq!(liedef().args(["jacobi", &bad]).output().unwrap().status.code(), Some(2));
    let fam = write(&dir, "fam.json", r#"{"family":"symplectic","n":2,"omega":["1","0"]}"#);
    assert_eq!(
        liedef().args(["vessiot", &fam]).output().unwrap().status.code(),
        Some(2)
    );
    let dim = write(
        &dir,
        "dim.json",
        r#"{"family":"contact_density","n":2,"omega":["1","0"]}"#,
    );
    assert_eq!(
        liedef().args(["vessiot", &dim]).output().unwrap().status.code(),
        Some(2)
    );
    assert_eq!(
        liedef()
            .args(["jacobi", "no_such_file.json"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    assert_eq!(liedef().args(["no-such-verb"]).output().unwrap().status.code(), Some(2));
}

#[test]
fn non_structure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "o.json",
        r#"{"family":"contact_density","n":3,"omega":["1","-x3^2","0"]}"#,
    );
    assert_eq!(liedef().args(["vessiot", &p]).output().unwrap().status.code(), Some(1));
}

#[test]
fn sequence_and_normalizer() {
    let (out, code) = stdout(liedef().args(["sequence", &fixture("unimodular_third")]));
    assert_eq!(code, 0);
    assert!(
        out.contains("D  = [0; 1]") && out.contains("N/Θ = C/Z + H0: 1 = 1 + 0 (holds)"),
        "{out}"
    );
    let (out, code) = stdout(liedef().args(["normalizer", &fixture("unimodular_special")]));
    assert_eq!(code, 0);
    assert!(out.contains("dim N(Θ)/Θ = 1") && out.contains("A - B = 0"), "{out}");
}

#[test]
fn unimodular_obstruction_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(&dir, "c.json", r#"{"family":"unimodular_contact","c1":"0","c2":"0"}"#);
    let k = write(&dir, "k.json", r#"{"C1":"1","C2":"1"}"#);
    let (out, code) = stdout(liedef().args(["deform", &c, &k, "--order", "3"]));
    assert_eq!(code, 1);
    assert!(out.contains("obstruction at order 2"), "{out}");
    let k = write(&dir, "k2.json", r#"{"C1":"1","C2":"0"}"#);
    assert_eq!(stdout(liedef().args(["deform", &c, &k])).1, 0);
}

#[test]
fn labels_apply_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "c.json",
        r#"{"family":"unimodular_contact","c1":"1","c2":"0","label_params":{"a":"2","b":"1"}}"#,
    );
    let (out, code) = stdout(liedef().args(["--format", "json", "labels", &p]));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.to_string().contains("\"2\""), "{v}");
}

#[test]
fn cohomology_and_rigidity() {
    let (out, code) = stdout(liedef().args(["cohomology", "sl2"]));
    assert_eq!(code, 0);
    assert!(
        out.lines()
            .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["2", "9", "6", "6", "0"]),
        "{out}"
    );
    assert_eq!(stdout(liedef().args(["rigidity", "sl2"])).1, 0);
}

#[test]
fn integrability_of_medolaghi_system() {
    let (out, code) = stdout(liedef().args(["integrability", &fixture("contact_special")]));
    assert_eq!(code, 0);
    assert!(
        out.contains("formally integrable (up to r = 2): yes") && out.contains("closed"),
        "{out}"
    );
    let (out, _) = stdout(liedef().args(["prolong", &fixture("coframe_affine"), "--order", "1"]));
    assert!(out.contains("= 0"), "{out}");
}
