use std::process::{Command, Output};

fn latbounce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latbounce"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = latbounce(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coeffs_plain() {
    assert_eq!(
        stdout(&["coeffs", "--series", "f_ee", "--alpha", "2", "--beta", "1", "--order", "5"]),
        "1 4 18 89 466\n"
    );
    assert_eq!(stdout(&["coeffs", "--series", "g", "--alpha", "2", "--beta", "3", "--order", "1"]), "10\n");
}

#[test]
fn coeffs_bfile_is_one_indexed() {
    assert_eq!(
        stdout(&["coeffs", "--series", "H", "--alpha", "2", "--order", "4", "--format", "oeis-bfile"]),
        "1 2\n2 6\n3 24\n4 110\n"
    );
}

#[test]
fn fuss_catalan_constant_term_on_request() {
    assert_eq!(
        stdout(&["coeffs", "--series", "c_alpha", "--alpha", "2", "--order", "4", "--with-constant"]),
        "1 1 3 12 55\n"
    );
}

#[test]
fn restriction_flag_matches_suffix() {
    let by_flag = stdout(&["coeffs", "--series", "f_ab", "--restriction", "en", "--alpha", "2", "--order", "6"]);
    let by_name = stdout(&["coeffs", "--series", "f_en", "--alpha", "2", "--order", "6"]);
    assert_eq!(by_flag, by_name);
    assert_eq!(by_name, "1 3 13 63 326 1761\n");
}

#[test]
fn table_csv_rows() {
    let csv = stdout(&["table", "--order", "2", "--max-left", "1", "--max-right", "1", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "l,r,k,count");
    let k2: Vec<&str> = lines.iter().copied().filter(|l| l.contains(",2,")).collect();
    assert_eq!(k2, ["0,0,2,4", "0,1,2,1", "1,0,2,1", "1,1,2,0"]);
}

#[test]
fn table_restricted_en() {
    let csv = stdout(&[
        "table", "--order", "2", "--max-left", "1", "--max-right", "1", "--restriction", "en", "--format", "csv",
    ]);
    assert!(csv.contains("0,0,2,1\n"));
    assert!(csv.contains("0,1,2,1\n"));
    assert!(csv.contains("1,0,2,0\n"));
}

#[test]
fn zero_bounds_give_bounce_free_series() {
    let json = stdout(&[
        "table", "--alpha", "2", "--order", "5", "--max-left", "0", "--max-right", "0", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["slope"], serde_json::json!([2, 1]));
    assert_eq!(doc["order"], 5);
    let cell: Vec<String> = doc["table"][0][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let f = stdout(&["coeffs", "--series", "f", "--alpha", "2", "--order", "5"]);
    assert_eq!(cell.join(" "), f.trim_end());
}

#[test]
fn output_is_byte_stable() {
    let args = ["table", "--alpha", "3", "--beta", "2", "--order", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn invalid_inputs_exit_nonzero() {
    for args in [
        &["coeffs", "--series", "g", "--alpha", "2", "--beta", "4"][..],
        &["coeffs", "--series", "nope"],
        &["coeffs", "--series", "H", "--alpha", "2", "--beta", "3"],
        &["verify", "--suite", "nope"],
    ] {
        let out = latbounce(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "--suite", "eq1", "--alpha", "2", "--beta", "3", "--order", "10"]);
    assert!(out.starts_with("PASS eq1"), "{out}");
    let out = stdout(&["verify", "--suite", "syt", "--n-max", "10"]);
    assert!(out.starts_with("PASS syt"), "{out}");
    let out = stdout(&["verify", "--suite", "oracle-vs-G", "--max-steps", "22"]);
    assert!(out.starts_with("PASS oracle-vs-G"), "{out}");
}
