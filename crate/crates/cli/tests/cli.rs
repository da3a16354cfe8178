use std::process::{Command, Output};

use bicrystal::crystal::is_uglov;
use bicrystal::{Bipartition, Charge, CrystalParams, Modulus};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicrystal")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_rank_zero() {
    assert_eq!(stdout(&["enumerate", "--n", "0"]), "-,-\ncount 1\n");
}

#[test]
fn enumerate_contains_the_rank_eleven_example() {
    let out = stdout(&["--e", "3", "--charge", "0,1", "enumerate", "--n", "11"]);
    assert!(out.lines().any(|l| l == "6.1,2.2"));
}

#[test]
fn enumerate_matches_a_filter() {
    let p = CrystalParams::new(Modulus::Finite(2), Charge::new(0, 0));
    let want: Vec<String> = Bipartition::all_of_rank(4)
        .into_iter()
        .filter(|b| is_uglov(b, &p))
        .map(|b| b.to_string())
        .collect();
    let out = stdout(&["--e", "2", "--charge", "0,0", "--format", "json", "enumerate", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut got: Vec<String> = v["bipartitions"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    let mut want = want;
    got.sort();
    want.sort();
    assert_eq!(v["count"], want.len());
    assert_eq!(got, want);
}

#[test]
fn verify_modes_pass() {
    for args in [
        &["verify", "--mode", "forward", "--n", "6"][..],
        &["--e", "2", "--charge", "0,0", "verify", "--mode", "converse", "--n", "4"],
        &["verify", "--mode", "psi-nature", "--n", "5"],
        &["--charge", "0,2", "verify", "--mode", "corollary", "--n", "6"],
        &["--e", "2", "verify", "--mode", "propb", "--n", "6"],
    ] {
        let out = stdout(args);
        assert!(out.trim_end().ends_with("PASS"), "{args:?}: {out}");
    }
}

#[test]
fn corollary_counterexample_exits_one() {
    let out = run(&["--charge", "0,0", "verify", "--mode", "corollary", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("counterexample {")));
    assert!(text.trim_end().ends_with("FAIL"));
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        &["enumerate"][..],
        &["--e", "1", "enumerate", "--n", "2"],
        &["--charge", "0", "enumerate", "--n", "2"],
        &["show", "2.3,1", "natures"],
        &["show", "1,1", "sideways"],
        &["--e", "inf", "verify", "--mode", "converse", "--n", "2"],
        &["show", "1.1.1.1,-", "adm"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn non_uglov_error_names_the_test() {
    let out = run(&["show", "1.1.1.1,-", "psi:1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an Uglov bipartition"));
}

#[test]
fn show_natures_row() {
    let out = stdout(&["--window=-3,6", "show", "6.1,2.2", "natures"]);
    let row: Vec<&str> = out.lines().last().unwrap().split('|').skip(1).map(str::trim).collect();
    assert_eq!(row.join(" "), "Bv Bv Bv A A R Bh A R Bh Bv Bh A Bh Bh Bh Bh R Bh A");
}

#[test]
fn show_adm_and_psi() {
    assert_eq!(stdout(&["show", "6.1,2.2", "adm"]), "1,0,0,2,2,1,1,2,0,1,2\n");
    assert_eq!(stdout(&["show", "6.1,2.2", "psi:1,0"]), "5.2.1,3\n");
    assert_eq!(stdout(&["show", "6.1,2.2", "psi:0,4"]), "3,5.2.1\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "show", "6.1,2.2", "adm"])).unwrap();
    assert_eq!(v["flotw"], "6.1,2.2");
    assert_eq!(v["adm"].as_array().unwrap().len(), 11);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "verify", "--mode", "forward", "--n", "6"][..],
        &["--charge", "0,0", "verify", "--mode", "corollary", "--n", "6"],
        &["--e", "2", "enumerate", "--n", "7"],
    ] {
        let a = run(args).stdout;
        let b = run(args).stdout;
        let mut more = vec!["--workers", "4"];
        more.extend_from_slice(args);
        let c = run(&more).stdout;
        assert_eq!(a, b);
        assert_eq!(a, c, "{args:?}");
    }
}

#[test]
fn dot_output() {
    let out = stdout(&["--e", "2", "dot", "--n", "2"]);
    assert!(out.starts_with("digraph crystal {"));
    assert_eq!(out.matches("->").count(), 4);
    assert!(out.contains("\"-,-\" -> \"1,-\" [label=\"0\"];"));
}
