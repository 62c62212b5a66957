use std::path::Path;
use std::process::{Command, Output};

fn tori(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tori")).args(args).env_remove("TORI_OUT_DIR").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn groups_table_has_a_row_per_class() {
    let o = tori(&["groups", "table"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# tori "));
    assert_eq!(lines.next().unwrap(), "label,order,iso,a,b");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 72);
    assert!(rows.iter().any(|r| r.starts_with("\"H_{4,e}\",")));
}

#[test]
fn usage_errors_exit_2_with_a_json_record() {
    for args in [&["bogus"][..], &["count", "--family", "4e", "--X", "ten"], &["verify", "identities", "--lemma", "9.9", "--in", "x.csv"]] {
        let o = tori(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(err["error"], "usage");
    }
    let o = tori(&["count", "--family", "H_{9,z}"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_does_not_depend_on_workers() {
    let args = ["count", "--family", "4e", "--X", "1e7", "--grid"];
    let one = tori(&[&args[..], &["--workers", "1"]].concat());
    let four = tori(&[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let all1 = tori(&["count", "--all-implemented", "--X", "1e5", "--workers", "1"]);
    let all4 = tori(&["count", "--all-implemented", "--X", "1e5", "--workers", "4"]);
    assert!(all1.status.success());
    assert_eq!(all1.stdout, all4.stdout);
}

#[test]
fn count_report_fields() {
    let o = tori(&["count", "--family", "H_4_e", "--X", "1e9", "--grid"]);
    let v = json(&o);
    assert_eq!(v["label"], "H_{4,e}");
    assert_eq!(v["grid"].as_array().unwrap().len(), 11);
    let a = v["a_hat"].as_f64().unwrap();
    assert!((a - 1.0).abs() < 0.05, "{a}");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys[0], "header");
}

#[test]
fn expand_then_fit() {
    let dir = tempfile::tempdir().unwrap();
    let coeffs = dir.path().join("l25.csv");
    let report = dir.path().join("fit.json");
    let o = tori(&["dirichlet", "expand", "--series", "lemma25", "--N", "1e6", "--out", path(&coeffs)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&coeffs).unwrap();
    assert!(text.lines().nth(2).unwrap() == "1,1");
    let o = tori(&["dirichlet", "fit", "--in", path(&coeffs), "--report", path(&report)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["n_max"], 1_000_000);
    let a = v["a_hat"].as_f64().unwrap();
    assert!((a - 1.0).abs() < 0.1, "{a}");
}

#[test]
fn identities_report_failing_rows() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.csv");
    let bad = dir.path().join("bad.csv");
    std::fs::write(&good, "# biquadratic fields\nK1,K2,K3,L\n-3,-4,12,144\n5,-3,-15,225\n5,-4,-20,400\n").unwrap();
    std::fs::write(&bad, "K1,K2,K3,L\n-3,-4,12,144\n-3,-4,12,145\n").unwrap();

    let o = tori(&["verify", "identities", "--lemma", "22a", "--in", path(&good)]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["rows"].as_u64(), v["holding"].as_u64()), (Some(3), Some(3)));

    let o = tori(&["verify", "identities", "--lemma", "22a", "--in", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["failures"][0]["row"], 2);

    let o = tori(&["verify", "identities", "--lemma", "3.2", "--in", path(&good)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_and_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("tori.conf");
    std::fs::write(&cfg, format!("# small run\nbound.quad = 50\nout_dir = {}\nworkers = 2\n", dir.path().display())).unwrap();
    let o = tori(&["fields", "enum", "--kind", "quad", "--config", path(&cfg), "--out", "quad.csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(dir.path().join("quad.csv")).unwrap();
    // 30 fundamental discriminants with |d| <= 50.
    assert_eq!(text.lines().count(), 2 + 30);

    // A flag overrides the file.
    let o = tori(&["fields", "enum", "--kind", "quad", "--config", path(&cfg), "--bound", "10", "--out", "q10.csv"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("q10.csv")).unwrap();
    // -3, -4, 5, -7, -8, 8.
    assert_eq!(text.lines().count(), 2 + 6);
}

#[test]
fn enumerated_fields_import_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s3.csv");
    let o = tori(&["fields", "enum", "--kind", "s3", "--bound", "500", "--out", path(&out)]);
    assert!(o.status.success());
    let imported = fields::import_fields_csv(&out, fields::LMFDB_NF_V1).unwrap();
    let direct = fields::enum_cubic_s3(500, fields::Signature::Negative).count()
        + fields::enum_cubic_s3(500, fields::Signature::Positive).count();
    assert_eq!(imported.len(), direct);
    assert_eq!(imported[0].disc_i128(), Some(-23));
}

#[test]
fn header_hash_ignores_workers() {
    let a = tori(&["groups", "table", "--workers", "1"]);
    let b = tori(&["--workers", "3", "groups", "table"]);
    assert_eq!(a.stdout, b.stdout);
    let c = tori(&["fields", "enum", "--kind", "quad", "--bound", "20"]);
    let d = tori(&["fields", "enum", "--kind", "quad", "--bound", "21"]);
    assert_ne!(stdout(&c).lines().next(), stdout(&d).lines().next());
}
