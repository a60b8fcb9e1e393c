//! Behavior of the binary: exit codes, report determinism, and the printed
//! formats of the main subcommands.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hankelcf"))
}

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8"),
        String::from_utf8(out.stderr).expect("utf8"),
        out.status.code(),
    )
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: all records pass.
    let (_, _, code) = run(&["verify", "sumcc", "--n-max", "4"]);
    assert_eq!(code, Some(0));
    // 2: usage error (unknown suite).
    let (_, err, code) = run(&["verify", "not-a-suite"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("unknown suite"));
    // 2: clap-level usage error.
    let (_, _, code) = run(&["det", "--m", "2"]);
    assert_eq!(code, Some(2));
    // 1: error records make the run fail (bounds exclude a theorem's range).
    let (out, _, code) = run(&["verify", "main-dets", "--m-max", "1", "--n-max", "2"]);
    assert_eq!(code, Some(1));
    assert!(out.contains("\terror\t"));
    assert!(out.contains("requires m >= 3"));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip = |report: &str| {
        report
            .lines()
            .map(|line| {
                let mut fields: Vec<&str> = line.split('\t').collect();
                fields.pop(); // elapsed_us
                fields.join("\t")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    let (first, _, code_a) = run(&["verify", "cigler", "--n-max", "5"]);
    let (second, _, code_b) = run(&["verify", "cigler", "--n-max", "5"]);
    assert_eq!(code_a, Some(0));
    assert_eq!(code_b, Some(0));
    assert_eq!(strip(&first), strip(&second));
    // Fixed field order: suite, params, status, expected, actual, elapsed.
    let line = first.lines().next().expect("nonempty report");
    let fields: Vec<&str> = line.split('\t').collect();
    assert_eq!(fields.len(), 6);
    assert_eq!(fields[0], "cigler");
    assert_eq!(fields[2], "pass");
    assert_eq!(fields[3], fields[4]);
}

#[test]
fn report_file_matches_stdout() {
    let dir = std::env::temp_dir().join("hankelcf-cli-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("sumcc.tsv");
    let (stdout, _, code) = run(&[
        "verify",
        "sumcc",
        "--n-max",
        "3",
        "--report",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(code, Some(0));
    let written = std::fs::read_to_string(&path).expect("report written");
    assert_eq!(stdout, written);
    std::fs::remove_file(&path).ok();
}

#[test]
fn sequence_and_determinant_outputs() {
    let (out, _, code) = run(&["seq", "narayana", "--n", "4"]);
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4], "4\t1 + 6*t + 6*t^2 + t^3");

    let (out, _, _) = run(&["seq", "narayana", "--n", "2", "--tau", "4"]);
    assert_eq!(out.lines().next(), Some("0\t1"));

    // The three determinant routes agree in canonical text.
    let (brute, _, _) = run(&["det", "--m", "2", "--shift", "2", "--size", "3"]);
    let (cig, _, _) = run(&["det", "cigler", "--variant", "4", "--size", "3"]);
    let (closed, _, _) = run(&["closed", "det", "--m", "2", "--shift", "2", "--size", "3"]);
    assert_eq!(brute.trim(), "-t^2 - t^4");
    assert_eq!(cig.trim(), "-t^2 - t^4");
    assert!(closed.starts_with("-t^2 - t^4\tcase="));
}

#[test]
fn hfrac_subcommands_agree() {
    let (expanded, _, code) = run(&[
        "hfrac", "expand", "--m", "2", "--shift", "1", "--terms", "3", "--order", "16",
    ]);
    assert_eq!(code, Some(0));
    let (expected, _, _) = run(&["hfrac", "expected", "--m", "2", "--shift", "1", "--terms", "3"]);
    let quotient_lines = |text: &str| {
        text.lines()
            .filter(|l| l.starts_with("k="))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(quotient_lines(&expanded), quotient_lines(&expected));
    assert!(expanded.lines().any(|l| l.starts_with("status=")));

    let (series, _, _) = run(&[
        "hfrac", "eval", "--m", "1", "--shift", "1", "--terms", "5", "--order", "6",
    ]);
    assert!(series.contains("+ O(q^6)"));

    let (trace, _, code) = run(&["nextabc", "--m", "2", "--shift", "2", "--steps", "2"]);
    assert_eq!(code, Some(0));
    assert!(trace.starts_with("step=0\tk=0\ta=-1\t"));
    assert_eq!(trace.lines().count(), 2);
}
