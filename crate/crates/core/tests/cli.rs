use std::path::PathBuf;
use std::process::Command;

use skelbetti::cli::{self, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skelbetti").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skelbetti-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn info_reports_shape() {
    let (code, out, _) = run(&["info", &fixture("rp2.facets")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("n=6 d=2 f=(1,6,15,10) pure"), "{out}");

    let (code, out, _) = run(&["info", &fixture("M.bases")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("n=8 r=5"), "{out}");
}

#[test]
fn betti_formats() {
    let (code, out, _) = run(&["betti", &fixture("rp2.facets"), "-p", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "i,j,beta");
    assert!(rows.contains(&"1,3,10"));
    assert!(rows.contains(&"3,5,6"));

    let (code, out, _) = run(&["betti", &fixture("rp2.facets"), "-p", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("betti table (ring, GF(2), n=6)"), "{out}");
}

#[test]
fn json_table_feeds_transfer() {
    let (code, json, _) = run(&["betti", &fixture("rp2.facets"), "-p", "3", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let path = scratch("rp2.json", &json);
    let (code, out, _) = run(&["transfer", "--table", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    for line in ["1,3,20", "2,4,45", "3,5,36", "4,6,10"] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }

    let (code, out, _) = run(&["transfer", "--complex", &fixture("rp2.facets"), "-p", "3", "--steps", "2", "--verify"]);
    assert_eq!(code, EXIT_PASS, "{out}");
}

#[test]
fn inconsistent_table_is_a_failure_not_a_crash() {
    let path = scratch("bad.json", r#"{"p":2,"convention":"ring","n":4,"entries":[[0,0,1],[1,3,5]]}"#);
    let (code, _, err) = run(&["transfer", "--table", path.to_str().unwrap(), "--dim", "1"]);
    assert_eq!(code, EXIT_FAIL, "{err}");
    assert!(!err.is_empty());
}

#[test]
fn bad_input_is_a_usage_error() {
    let empty = scratch("empty.facets", "");
    let (code, _, err) = run(&["info", empty.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());

    let out_of_range = scratch("range.facets", "n = 3\n1 2 4\n");
    assert_eq!(run(&["betti", out_of_range.to_str().unwrap()]).0, EXIT_USAGE);
    assert_eq!(run(&["betti", &fixture("rp2.facets"), "-p", "4"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);

    let not_matroid = scratch("bad.bases", "n = 4\n1 2\n3 4\n");
    assert_eq!(run(&["matroid", "dual", not_matroid.to_str().unwrap()]).0, EXIT_USAGE);
}

#[test]
fn matroid_subcommands() {
    let (code, out, _) = run(&["matroid", "counterexample"]);
    assert_eq!(code, EXIT_PASS, "{out}");

    let (code, out, _) = run(&["matroid", "truncate", "-i", "1", &fixture("M.bases")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.lines().any(|l| l.trim() == "n = 8"), "{out}");

    let (code, _, _) = run(&["matroid", "shift-check", &fixture("N.bases")]);
    assert_eq!(code, EXIT_PASS);

    let (code, _, _) = run(&["matroid", "elongate", "-i", "9", &fixture("M.bases")]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn check_random_passes() {
    let (code, out, _) = run(&["check", "--random", "10", "--n", "6", "--seed", "3"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let (code, out, _) = run(&["check", &fixture("rp2.facets"), "-p", "2"]);
    assert_eq!(code, EXIT_PASS, "{out}");
}

#[test]
fn binary_honours_thread_setting() {
    let output = Command::new(env!("CARGO_BIN_EXE_skelbetti"))
        .args(["betti", &fixture("rp2.facets"), "-p", "3", "--format", "csv"])
        .env("SKELBETTI_THREADS", "1")
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("2,4,15"));

    let help = Command::new(env!("CARGO_BIN_EXE_skelbetti")).arg("--help").output().unwrap();
    assert!(help.status.success());
    assert!(String::from_utf8_lossy(&help.stdout).contains("transfer"));
}
