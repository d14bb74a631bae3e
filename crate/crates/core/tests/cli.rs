use std::process::Command;

use k3_secant::cli::{parse_class, run};
use k3_secant::schubert::plucker_degree;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_k3-secant"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn lib(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("k3-secant").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn binary_exit_codes() {
    assert_eq!(
        bin(&["secant", "--t", "5"]),
        (0, "12\n".into(), String::new())
    );
    let (code, _, err) = bin(&["tangent", "--t", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("requires t >= 6"));
    assert_eq!(bin(&["tangent", "--t", "10"]).1, "96\n");
    assert_eq!(bin(&["nonsense"]).0, 1);
}

#[test]
fn csv_rows() {
    let (code, out, _) = bin(&["table", "--t-min", "4", "--t-max", "6", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = header.iter().position(|&h| h == "deg_sec").unwrap();
    let deg_sec: Vec<String> = lines
        .map(|l| l.split(',').nth(col).unwrap().to_string())
        .collect();
    assert_eq!(deg_sec, ["4", "12", "24"]);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let (code, out) = lib(&["table", "--t-min", "4", "--t-max", "40", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, out);
    assert!(!out.contains('.'), "no floats");
    for row in v.as_array().unwrap() {
        let keys: Vec<&String> = row.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}

#[test]
fn class_output_resums_to_table_degrees() {
    let (_, table) = lib(&["table", "--t-min", "4", "--t-max", "20", "--format", "json"]);
    let rows: Value = serde_json::from_str(&table).unwrap();
    for row in rows.as_array().unwrap() {
        let t = row["t"].to_string();
        for (which, key) in [
            ("sigma", "plucker_sigma"),
            ("x", "plucker_x"),
            ("tan", "plucker_t"),
        ] {
            let (code, listing) = lib(&["class", "--t", &t, "--which", which]);
            match row.get(key) {
                Some(expected) => {
                    assert_eq!(code, 0);
                    let class = parse_class(&listing).unwrap();
                    assert_eq!(
                        plucker_degree(&class).unwrap().to_string(),
                        expected.to_string()
                    );
                }
                None => assert_eq!(code, 2, "t = {t}, {which}"),
            }
        }
    }
}
