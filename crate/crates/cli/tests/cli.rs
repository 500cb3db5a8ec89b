use clap::Parser;
use jhp_cli::{run, Cli};

fn invoke(args: &[&str]) -> (String, i32) {
    let mut argv = vec!["jhp"];
    argv.extend_from_slice(args);
    run(&Cli::parse_from(argv)).expect("invocation succeeds")
}

#[test]
fn table_output_is_deterministic() {
    let (a, code_a) = invoke(&["jhp", "table", "--quiver", "><"]);
    let (b, code_b) = invoke(&["jhp", "table", "--quiver", "><"]);
    assert_eq!(a, b);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(a, include_str!("golden/jhp_table_fan3.txt"));
}

#[test]
fn table_formats_agree_on_content() {
    let (json, _) = invoke(&["jhp", "table", "--quiver", "><", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 14);
    assert_eq!(rows[10]["one-line"], "3412");
    assert_eq!(rows[10]["dagger"], "1");
    assert_eq!(rows[10]["ddagger"], "2");
    let (csv, _) = invoke(&["jhp", "table", "--quiver", "><", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("word,one-line,sequence,image,dagger,ddagger"));
    assert_eq!(csv.lines().count(), 15);
    assert!(csv.contains("s2·s1,3124,\"2,1\",e = 1234,2,2"));
}

#[test]
fn negative_verdicts_exit_one() {
    assert_eq!(invoke(&["sortable", "check", "--quiver", "<", "--perm", "312"]).1, 1);
    assert_eq!(invoke(&["sortable", "check", "--quiver", "<", "--perm", "231"]).1, 0);
    assert_eq!(invoke(&["jhp", "check", "--quiver", "><", "--perm", "3412"]).1, 1);
    assert_eq!(invoke(&["jhp", "check", "--quiver", "><", "--perm", "4312"]).1, 0);
    assert_eq!(invoke(&["jhp", "bb", "--quiver", "<>", "--perm", "1342"]).1, 1);
    assert_eq!(invoke(&["tf", "oracle", "--quiver", "<", "--class", "[1,3)"]).1, 1);
    assert_eq!(
        invoke(&["filt", "jhp", "--quiver", "<", "--members", "[1,3) [1,2) [2,3)"]).1,
        1
    );
    assert_eq!(invoke(&["filt", "jhp", "--quiver", "<", "--members", "[1,2) [2,3)"]).1, 0);
}

#[test]
fn verify_suites_run_from_the_cli() {
    let (out, code) = invoke(&["verify", "example"]);
    assert_eq!(code, 0);
    assert!(out.contains("example: pass"));
}

#[test]
fn usage_errors_are_reported() {
    let cli = Cli::parse_from(["jhp", "verify", "no-such-suite"]);
    assert!(run(&cli).is_err());
    let cli = Cli::parse_from(["jhp", "binv", "31x2"]);
    assert!(run(&cli).is_err());
}
