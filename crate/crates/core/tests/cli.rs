use std::process::{Command, Output};

fn stci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enumerate_quartic_markdown() {
    let o = stci(&["enumerate", "--d", "4", "--g", "0", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<_> = out.lines().skip(2).collect();
    assert_eq!(rows.len(), 15);
    assert_eq!(rows[0], "| 7 | (3,4) | 3 | 19 |");
    assert_eq!(rows[14], "| 1 | (28,33) | 231 | 26335 |");
    assert!(stderr(&o).is_empty());
}

#[test]
fn enumerate_line_is_empty() {
    let o = stci(&["enumerate", "--d", "1", "--g", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn enumerate_reports_degenerate_family_on_stderr() {
    let o = stci(&["enumerate", "--d", "8", "--g", "9", "--bmax", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("degenerate-family l=16 a=4"));
    assert!(!stdout(&o).contains("degenerate"));
}

#[test]
fn enumerate_csv_and_json() {
    let o = stci(&["enumerate", "--d", "4", "--g", "0", "--format", "csv"]);
    let out = stdout(&o);
    assert!(out.starts_with("d,g,a,b,m,l,pa\n4,0,3,4,3,7,19\n"));
    assert_eq!(out.lines().count(), 16);

    let o = stci(&["enumerate", "--d", "4", "--g", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 15);
    assert_eq!(v[14]["m"], 231);
}

fn verdicts(json: &str) -> Vec<((i64, i64), String)> {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                (r["a"].as_i64().unwrap(), r["b"].as_i64().unwrap()),
                r["verdict"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

#[test]
fn screen_quartic_weak() {
    let o = stci(&["screen", "--d", "4", "--g", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json = stdout(&o);
    let v = verdicts(&json);
    let excluded: Vec<_> = v
        .iter()
        .filter(|(_, s)| s == "excluded-by-condition5")
        .map(|(ab, _)| *ab)
        .collect();
    assert_eq!(excluded, vec![(4, 4), (13, 16), (28, 33)]);
    assert_eq!(v.iter().filter(|(_, s)| s == "survives").count(), 12);

    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    for row in parsed.as_array().unwrap() {
        let ab = (row["a"].as_i64().unwrap(), row["b"].as_i64().unwrap());
        let flagged = row["flags"]
            .as_array()
            .unwrap()
            .iter()
            .any(|f| f == "published-list-discrepancy");
        assert_eq!(flagged, ab == (3, 4) || ab == (3, 8), "{ab:?}");
    }
}

#[test]
fn screen_quartic_strong() {
    let o = stci(&[
        "screen", "--d", "4", "--g", "0", "--strong", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = verdicts(&stdout(&o));
    let excluded: Vec<_> = v
        .iter()
        .filter(|(_, s)| s == "excluded-by-condition5")
        .map(|(ab, _)| *ab)
        .collect();
    assert_eq!(excluded, vec![(4, 4), (13, 16), (28, 33)]);
    assert!(v.contains(&((3, 4), "unscreened-b-le-4".to_string())));

    let md = stdout(&stci(&["screen", "--d", "4", "--g", "0", "--strong"]));
    assert!(md.contains("19xA_6^1, 1xA_132^19"));
}

#[test]
fn screen_small_degrees_do_not_crash() {
    for (d, g) in [(2, 0), (3, 0), (1, 0), (5, 2)] {
        let o = stci(&["screen", "--d", &d.to_string(), "--g", &g.to_string()]);
        assert_eq!(o.status.code(), Some(0), "{d},{g}: {}", stderr(&o));
    }
}

#[test]
fn output_is_byte_identical() {
    let args = [
        "screen", "--d", "6", "--g", "4", "--strong", "--format", "json",
    ];
    assert_eq!(stci(&args).stdout, stci(&args).stdout);
    let mut one_thread = Command::new(env!("CARGO_BIN_EXE_stci"));
    one_thread.args(args).env("STCI_THREADS", "1");
    assert_eq!(one_thread.output().unwrap().stdout, stci(&args).stdout);
}

#[test]
fn witness_command() {
    let o = stci(&["witness", "--d", "4", "--g", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(a=17, b=220, m=935, l=1): all five conditions hold"));

    let o = stci(&["witness", "--d", "4", "--g", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn profile_command() {
    let o = stci(&[
        "profile", "--d", "4", "--g", "0", "--a", "4", "--b", "7", "--l", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("2 profile(s)"));
    assert!(out.contains("agrees"));

    let o = stci(&[
        "profile", "--d", "4", "--g", "0", "--a", "3", "--b", "4", "--l", "7",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let o = stci(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(stci(&["enumerate", "--d", "4"]).status.code(), Some(1));
    assert_eq!(
        stci(&["enumerate", "--d", "4", "--g", "0", "--format", "xml"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        stci(&["enumerate", "--d", "0", "--g", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(stci(&["--help"]).status.code(), Some(0));
}
