//! The command-line interface, driven in-process.

use semigroups::cli::run;
use semigroups::text::{parse_element, parse_file, parse_word};
use semigroups::Semigroup;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the CLI and returns (exit code, stdout, stderr).
fn cli(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("semigroups").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn size_of_the_examples() {
    assert_eq!(cli(&["size", &data("T.gens")]), (0, "75\n".into(), String::new()));
    assert_eq!(cli(&["size", &data("S.gens")]).1, "172\n");
    assert_eq!(cli(&["size", &data("P3.gens")]).1, "203\n");
    let (code, out, _) = cli(&["size", &data("T.gens"), "--breakdown"]);
    assert_eq!(code, 0);
    assert_eq!(out, "75\n1 x 1 x 12 = 12\n3 x 1 x 6 = 18\n7 x 3 x 2 = 42\n1 x 3 x 1 = 3\n");
}

#[test]
fn classes_output_is_line_stable() {
    // Counts agree with the exhaustive listing (see the golden tests).
    assert_eq!(cli(&["classes", &data("T.gens")]).1, "R 12\nL 19\nH 46\nD 5\n");
    assert_eq!(cli(&["classes", &data("S.gens")]).1, "R 16\nL 16\nH 96\nD 5\n");
}

#[test]
fn membership_exit_codes() {
    assert_eq!(cli(&["contains", &data("T.gens"), "t [1,2,3,4,5]"]), (0, "true\n".into(), String::new()));
    assert_eq!(cli(&["contains", &data("T.gens"), "t [1,2,3,3,1]"]).0, 1);
    assert_eq!(cli(&["contains", &data("S.gens"), "p [5,7,9,0,0,0,0,0,0]"]).0, 0);
    // A different degree is a well-formed element that is simply not a member.
    assert_eq!(cli(&["contains", &data("T.gens"), "t [1,2,3]"]).0, 1);
    let (code, _, err) = cli(&["contains", &data("T.gens"), "t [1,2,9,4,5]"]);
    assert_eq!(code, 2);
    assert!(err.contains("element"), "{err}");
}

#[test]
fn factorization_evaluates_back() {
    let file = parse_file(&std::fs::read_to_string(data("T.gens")).unwrap()).unwrap();
    let sg = Semigroup::new(file.generators).unwrap();
    let (code, out, _) = cli(&["factorize", &data("T.gens"), "t [2,3,3,2,2]"]);
    assert_eq!(code, 0);
    let word = parse_word(&out).unwrap();
    assert_eq!(sg.evaluate(&word), parse_element("t [2,3,3,2,2]", None).unwrap());
    let (code, _, err) = cli(&["factorize", &data("T.gens"), "t [1,2,3,3,1]"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a member"), "{err}");
}

#[test]
fn rees_matrix_file() {
    let (code, out, _) = cli(&["contains", &data("B21.gens"), "r (1, (1 2 3), 1)"]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, _, err) = cli(&["contains", &data("B21.gens"), "r (3, (), 1)"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(cli(&["size", &data("B21.gens")]).0, 0);
}

#[test]
fn idempotents_and_regularity() {
    let (code, out, _) = cli(&["idempotents", &data("S.gens")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 16);
    assert!(out.lines().all(|l| l.starts_with("p [")));
    assert_eq!(cli(&["idempotents", &data("S.gens"), "--count"]).1, "16\n");
    assert_eq!(cli(&["regular", &data("S.gens")]), (0, "true\n".into(), String::new()));
    assert_eq!(cli(&["regular", &data("T.gens")]), (1, "false\n".into(), String::new()));
}

#[test]
fn dorder_dot() {
    let (code, out, _) = cli(&["dorder", &data("S.gens")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph dorder {\n"));
    assert!(out.ends_with("}\n"));
    assert_eq!(out.matches(" -> ").count(), 5);
    assert_eq!(out.matches("[label=").count(), 5);
    let path = std::env::temp_dir().join(format!("dorder-{}.dot", std::process::id()));
    let (code, printed, _) = cli(&["dorder", &data("T.gens"), "--dot", path.to_str().unwrap()]);
    assert_eq!((code, printed.as_str()), (0, ""));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.starts_with("digraph dorder {"));
    assert_eq!(written.matches("[label=").count(), 5);
}

#[test]
fn mode_flag_and_directive() {
    // The file says inverse; the flag cannot override it.
    assert_eq!(cli(&["--mode", "generic", "size", &data("S.gens")]).1, "172\n");
    assert_eq!(cli(&["size", &data("T.gens"), "--mode", "regular"]).1, "75\n");
    let (code, _, err) = cli(&["--mode", "inverse", "size", &data("T.gens")]);
    assert_eq!(code, 1);
    assert!(err.contains("mode violation"), "{err}");
    assert_eq!(cli(&["--mode", "sideways", "size", &data("T.gens")]).0, 2);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(cli(&[]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["size"]).0, 2);
    assert_eq!(cli(&["size", "/nonexistent/file.gens"]).0, 2);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("selftest"));
    let path = std::env::temp_dir().join(format!("bad-{}.gens", std::process::id()));
    std::fs::write(&path, "t [1,2,3]\n# fine so far\nt [1,2,4]\n").unwrap();
    let (code, _, err) = cli(&["size", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn selftest_passes() {
    let (code, out, _) = cli(&["selftest", "--seed", "3", "--rounds", "40"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("ok")), "{out}");
    assert!(out.contains("40 of 40 instances agree (seed 3)"));
}
