//! End-to-end tests of the `qmcodes` binary: output formats, exit codes,
//! file formats and seeded determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qmcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("qmcodes-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn prime_command() {
    let out = qmcodes(&["prime", "--p", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "pi = 2+1w  (norm 7)\n");

    let out = qmcodes(&["prime", "--p", "13"]);
    assert_eq!(stdout(&out), "pi = 1+2w  (norm 13)\n");

    let out = qmcodes(&["prime", "--p", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no H(K1) representation"));
}

#[test]
fn usage_errors_exit_one() {
    let out = qmcodes(&["prime"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qmcodes(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = qmcodes(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_golden_fixture() {
    let out = qmcodes(&[
        "table", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--limit", "24",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("fixtures/table1.tsv"));
}

#[test]
fn table_rejects_bad_candidate() {
    let out = qmcodes(&[
        "table", "--pi", "2,1", "--power", "2", "--alpha", "7", "--limit", "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("does not generate"));
}

#[test]
fn build_writes_exact_json() {
    let path = tmp_path("build.json");
    let out = qmcodes(&[
        "build", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        "{\"family\":\"prime_square\",\"pi\":[2,1],\"power\":2,\"modulus\":[1,4],\
         \"ring_norm\":49,\"length\":21,\"quotient_sign\":1,\"root\":[1,-1]}\n"
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn build_crt_writes_exact_json() {
    let path = tmp_path("crt.json");
    let out = qmcodes(&[
        "build-crt", "--pi1", "2,1", "--pi2", "1,2", "--target", "2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        "{\"family\":\"two_primes\",\"pi1\":[2,1],\"pi2\":[1,2],\"target\":2,\
         \"modulus\":[-4,5],\"ring_norm\":91,\"length\":12,\"quotient_sign\":-1,\
         \"root\":[-4,1]}\n"
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn build_rejects_p_three() {
    let path = tmp_path("p3.json");
    let out = qmcodes(&[
        "build", "--pi", "0,1", "--power", "2", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!path.exists());
}

fn write_example_code(name: &str) -> PathBuf {
    let path = tmp_path(name);
    let out = qmcodes(&[
        "build", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    path
}

#[test]
fn encode_decode_cycle() {
    let code = write_example_code("cycle.json");
    let code_str = code.to_str().unwrap();

    // Message 1 encodes to the first generator-matrix row.
    let out = qmcodes(&["encode", "--code", code_str, "--message", "1"]);
    assert!(out.status.success());
    let row0 = stdout(&out);
    assert_eq!(row0, format!("-1+1w,1{}\n", ",0".repeat(19)));

    let word = row0.trim();
    let out = qmcodes(&[
        "corrupt", "--code", code_str, "--word", word, "--pos", "5", "--sign", "+1",
    ]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("injected: +1 @ 5"));
    let corrupted = stdout(&out);

    let out = qmcodes(&["decode", "--code", code_str, "--word", corrupted.trim()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("corrected: yes  error: +1 @ 5"));
    assert_eq!(lines.next(), Some(word));

    // Clean word.
    let out = qmcodes(&["decode", "--code", code_str, "--word", word]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("clean\n"));

    // A constant 7 is a zero-divisor syndrome: uncorrectable, exit 2.
    let out = qmcodes(&["decode", "--code", code_str, "--word", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("uncorrectable\n"));

    std::fs::remove_file(&code).ok();
}

#[test]
fn corrupt_is_deterministic_under_seed() {
    let code = write_example_code("seed.json");
    let code_str = code.to_str().unwrap();
    let args = ["corrupt", "--code", code_str, "--word", "1,1", "--seed", "9"];
    let first = qmcodes(&args);
    let second = qmcodes(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
    // A different seed lands elsewhere (for this particular pair).
    let third = qmcodes(&["corrupt", "--code", code_str, "--word", "1,1", "--seed", "10"]);
    assert_ne!(first.stdout, third.stdout);
    std::fs::remove_file(&code).ok();
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = qmcodes(&["verify", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("decode round-trip: 473/473"));
    assert!(text.contains("iso exhaustive N=91: 8281/8281 pairs ok"));
    assert!(text.contains("primitive root certificate p=43: ok (order 1806)"));
    assert!(text.ends_with("verification passed\n"));

    // Identical invocations produce byte-identical output.
    let again = qmcodes(&["verify", "--trials", "10"]);
    assert_eq!(out.stdout, again.stdout);

    // Tampering with the stored root is caught and exits 3.
    let code = write_example_code("verify.json");
    let json = std::fs::read_to_string(&code).unwrap();
    let tampered = tmp_path("verify-tampered.json");
    std::fs::write(&tampered, json.replace("\"root\":[1,-1]", "\"root\":[2,0]")).unwrap();
    let out = qmcodes(&["verify", "--code", tampered.to_str().unwrap(), "--trials", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("code validation: FAILED"));

    std::fs::remove_file(&code).ok();
    std::fs::remove_file(&tampered).ok();
}

#[test]
fn verify_default_includes_full_round_trip() {
    let out = qmcodes(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("decode round-trip: 8643/8643"));
}
