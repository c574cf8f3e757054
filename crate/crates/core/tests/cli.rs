use std::path::PathBuf;
use std::process::{Command, Output};

use effect_logic::dsl::parse_algebra;

fn effalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effalg"))
        .args(args)
        .output()
        .expect("spawn effalg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("effalg-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_exit_codes() {
    assert_eq!(effalg(&["validate", "fixture:E9"]).status.code(), Some(0));

    let dir = scratch("validate");
    let bad = dir.join("bad.alg");
    std::fs::write(
        &bad,
        "algebra X\nelements 0 1\nzero 0\none 1\nsum 1 1 = 1\n",
    )
    .unwrap();
    let o = effalg(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let all = format!("{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert!(all.contains("E4"), "{all}");

    let syn = dir.join("syn.alg");
    std::fs::write(&syn, "algebra X\nfoo\n").unwrap();
    let o = effalg(&["validate", syn.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(effalg(&["fixture", "NOPE"]).status.code(), Some(2));
    assert_eq!(
        effalg(&["check", "fixture:E9", "--suite", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        effalg(&["implies", "fixture:E9", "a", "zz"]).status.code(),
        Some(2)
    );
    assert_eq!(
        effalg(&["validate", "/nonexistent/x.alg"]).status.code(),
        Some(2)
    );
}

#[test]
fn fixture_output_is_a_loadable_file() {
    let o = effalg(&["fixture", "E6"]);
    assert_eq!(o.status.code(), Some(0));
    let e = parse_algebra(&stdout(&o)).unwrap();
    assert_eq!(e.len(), 6);
}

#[test]
fn implies_prints_a_subset() {
    let o = effalg(&["implies", "fixture:E9", "a", "b"]);
    assert_eq!(stdout(&o).trim(), "{g}");
}

#[test]
fn csv_table_matches_golden() {
    let o = effalg(&["table", "fixture:E9", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/e9_implication.csv"));
}

#[test]
fn contraposition_failures_are_reported() {
    let o = effalg(&["laws", "fixture:E9", "--contraposition"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(a,d) incomparable"), "{out}");
    assert!(out.contains("[pass] comparable"));
}

#[test]
fn deductive_systems_of_e9() {
    let o = effalg(&["ded", "fixture:E9", "--enumerate"]);
    assert!(stdout(&o).starts_with("28 deductive systems"));
    let o = effalg(&["ded", "fixture:E6", "--enumerate"]);
    assert!(stdout(&o).starts_with("10 deductive systems"));
}

#[test]
fn check_selected_and_all_suites() {
    let o = effalg(&["check", "fixture:E9", "--suite", "th2,th4,roundtrip"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all suites pass"));
    assert_eq!(
        effalg(&["check", "fixture:BOOL-2", "--suite", "all"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn enumerate_emits_loadable_files() {
    let dir = scratch("emit");
    let o = effalg(&[
        "enumerate",
        "5",
        "--up-to-iso",
        "--emit",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|f| f.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 4);
    for f in files {
        let e = parse_algebra(&std::fs::read_to_string(&f).unwrap()).unwrap();
        assert_eq!(e.len(), 5);
        let v = effalg(&["validate", f.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0));
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn count_only() {
    let o = effalg(&["enumerate", "6", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "n=6 labeled=142 iso=10");
}
