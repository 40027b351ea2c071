use std::process::Command;

fn sepprob(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sepprob")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_values(stdout: &str) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(stdout).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap().to_string())
        .collect()
}

fn csv_values(stdout: &str) -> Vec<String> {
    let mut r = csv::Reader::from_reader(stdout.as_bytes());
    r.records().map(|rec| rec.unwrap()[2].to_string()).collect()
}

#[test]
fn json_and_csv_agree() {
    let queries: &[&[&str]] = &[
        &["count", "p-ncycle", "--n", "6", "--m", "2", "--k", "all"],
        &["count", "i-lambda", "--lambda", "3+2+1", "--m", "1"],
        &["count", "p-lambda", "--lambda", "4+2", "--m", "2", "--base", "closed-form"],
        &["count", "stirling", "--n", "12"],
        &["count", "alpha", "--alpha", "2,1,3", "--oracle"],
        &["prob", "moments", "--n", "9"],
    ];
    for q in queries {
        let (code, json, _) = sepprob(q);
        assert_eq!(code, 0, "{q:?}");
        let mut args = vec!["--format", "csv"];
        args.extend_from_slice(q);
        let (code, csv, _) = sepprob(&args);
        assert_eq!(code, 0);
        assert_eq!(json_values(&json), csv_values(&csv), "{q:?}");
    }
}

#[test]
fn big_values_are_strings() {
    let (_, out, _) = sepprob(&["count", "p-ncycle", "--n", "12", "--m", "0", "--k", "2"]);
    assert!(out.contains("\"value\": \"760692860928000\""), "{out}");
}

#[test]
fn verify_exit_status() {
    let (code, _, _) = sepprob(&["verify", "--max-n", "5", "--suite", "closed-forms"]);
    assert_eq!(code, 0);
    let (code, _, _) = sepprob(&["verify", "--max-n", "6", "--suite", "identities"]);
    assert_eq!(code, 0);
    let (code, _, err) = sepprob(&["verify", "--max-n", "4", "--suite", "recurrences", "--inject-fault"]);
    assert_eq!(code, 1);
    assert!(err.contains("mismatch: [recurrences]") && err.contains("formula=2 oracle=1"), "{err}");
    let (code, _, err) = sepprob(&["verify", "--max-n", "8"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn table_output() {
    let (code, out, _) = sepprob(&["table", "--n", "4", "--m", "1", "--source", "oracle"]);
    assert_eq!(code, 0);
    let t = sepprob::CountTable::from_json(&out).unwrap();
    assert_eq!(t.source, sepprob::Source::Oracle);
    let (_, rec, _) = sepprob(&["table", "--n", "4", "--m", "1"]);
    let r = sepprob::CountTable::from_json(&rec).unwrap();
    assert!(r.diff(&t).is_empty());
    let (_, iso, _) = sepprob(&["--format", "csv", "table", "--n", "4", "--m", "2", "--kind", "isolated"]);
    assert!(iso.starts_with("n,m,kind,source,lambda,k,value\n4,2,isolated,recurrence,"), "{iso}");
}

#[test]
fn out_file_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    let (code, stdout, _) = sepprob(&["--out", path.to_str().unwrap(), "prob", "fpf", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(json_values(&std::fs::read_to_string(&path).unwrap()), ["1/2"]);

    let (code, _, err) = sepprob(&["count", "alpha", "--alpha", "1,,3"]);
    assert_eq!(code, 2);
    assert!(err.contains("position"), "{err}");
    let (code, _, err) = sepprob(&["count", "i-ncycle", "--n", "4", "--m", "4", "--k", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("m < n"), "{err}");
}
