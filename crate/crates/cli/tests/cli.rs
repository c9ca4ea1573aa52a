use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chirotrop"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn relations_count() {
    let o = run(&["relations", "--k", "3", "--n", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("105 relations"));
    let lines = stdout(&o).lines().filter(|l| l.starts_with("L=")).count();
    assert_eq!(lines, 105);
}

#[test]
fn dressian_all_classes_writes_fans_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fans");
    let rays = data("rays_3_6.txt");
    let o = run(&[
        "dressian", "--k", "3", "--n", "6", "--rays", rays.to_str().unwrap(), "--all-classes", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.iter().filter(|f| f.to_string_lossy().ends_with(".json")).count(), 4);
    let summary = std::fs::read_to_string(out.join("summary.tsv")).unwrap();
    let rows: Vec<&str> = summary.lines().skip(1).collect();
    assert!(rows[0].contains("(15, 60, 90, 45)"));
    assert!(rows[1].contains("(15, 60, 89, 44)"));
    assert!(rows[2].contains("(14, 55, 82, 41)"));
    assert!(rows[3].contains("(16, 66, 98, 48)"));

    let fan: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("++++++++++++++++++++.json")).unwrap()).unwrap();
    assert_eq!(fan["f_vector"], serde_json::json!([16, 66, 98, 48]));
    assert_eq!(fan["pure"], true);
    assert_eq!(fan["two_determined"], true);
    assert_eq!(fan["rays"].as_object().unwrap().len(), 16);
    assert_eq!(fan["faces_by_dim"]["4"].as_array().unwrap().len(), 48);
}

#[test]
fn output_is_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for t in ["1", "3"] {
        let out = dir.path().join(t);
        let o = bin()
            .env("CHIROTROP_THREADS", t)
            .args(["dressian", "--k", "3", "--n", "6", "--negative-triples", "(356,456)", "--out"])
            .arg(&out)
            .output()
            .unwrap();
        assert!(o.status.success());
        texts.push(std::fs::read_to_string(out.join("++++++++++++++++++--.json")).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn counterexample_reports_dimension() {
    let o = run(&["verify", "counterexample-48"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dim 12 > 9: non-realizable cone confirmed"));
    let j = run(&["--json", "verify", "counterexample-48"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_subcommands_pass() {
    for args in [
        vec!["verify", "fano", "--n", "7"],
        vec!["verify", "covering", "--n", "6"],
        vec!["verify", "two-determined", "--n", "6"],
        vec!["charts", "verify", "--samples", "100", "--seed", "5"],
    ] {
        let o = run(&args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn orbit_size() {
    let o = run(&["chirotope", "orbit", "--k", "3", "--n", "6", "--all-classes"]);
    assert_eq!(stdout(&o).trim(), "372 chirotopes");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad_format = dir.path().join("bad_format.txt");
    std::fs::write(&bad_format, "3 6 1\n0 0 x\n").unwrap();
    let mut neg = vec!["0"; 20];
    neg[0] = "-1";
    let not_in_dressian = dir.path().join("neg.txt");
    std::fs::write(&not_in_dressian, format!("3 6 1\n{}\n", neg.join(" "))).unwrap();
    let two = dir.path().join("two.txt");
    let mut a = vec!["0"; 20];
    a[0] = "1";
    let mut b = vec!["0"; 20];
    b[9] = "1";
    std::fs::write(&two, format!("3 6 2\n{}\n{}\n", a.join(" "), b.join(" "))).unwrap();

    let code = |args: &[&str]| run(args).status.code().unwrap();
    let dressian = |rays: &PathBuf| {
        code(&["dressian", "--k", "3", "--n", "6", "--negative-triples", "+", "--rays", rays.to_str().unwrap()])
    };
    assert_eq!(dressian(&bad_format), 2);
    assert_eq!(dressian(&not_in_dressian), 3);
    // e_123 and e_345: one 2-dimensional cone where dimension 4 is required.
    assert_eq!(dressian(&two), 5);
    assert_eq!(
        code(&["chirotope", "validate", "--k", "3", "--n", "6", "--chirotope", "++++++++++++++++++-+"]),
        3
    );
    assert_eq!(code(&["verify", "covering", "--n", "7"]), 2);
    assert_eq!(code(&["relations", "--k", "3"]), 2);
}
