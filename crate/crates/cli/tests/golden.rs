//! Golden-file tests for the CLI. Each case runs one command and compares
//! exit code, stdout and stderr with `tests/golden/<name>.out`.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the expected files.

use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::{env, fs, io::Write};

use leibniz_cli::run;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// Arguments starting with `@` name files in `tests/golden/inputs`.
fn resolve(args: &[&str]) -> Vec<String> {
    let inputs = golden_dir().join("inputs");
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => inputs.join(name).display().to_string(),
            None => a.to_string(),
        })
        .collect()
}

fn transcript(code: i32, stdout: &str, stderr: &str) -> String {
    format!("# exit {code}\n# stdout\n{stdout}# stderr\n{stderr}")
}

fn golden(name: &str, args: &[&str]) {
    golden_stdin(name, args, "");
}

fn golden_stdin(name: &str, args: &[&str], stdin: &str) {
    let out = run(&resolve(args), stdin);
    // Running twice must give identical bytes.
    assert_eq!(
        run(&resolve(args), stdin),
        out,
        "{name}: nondeterministic output"
    );
    let actual = transcript(out.code, &out.stdout, &out.stderr);
    let path = golden_dir().join(format!("{name}.out"));
    if env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    if expected != actual {
        panic!(
            "{name}: output differs from {}\n--- expected\n{expected}\n--- actual\n{actual}",
            path.display()
        );
    }
}

#[test]
fn check_sl2() {
    golden("check_sl2", &["check", "@sl2.json"]);
    golden("check_sl2_json", &["--json", "check", "@sl2.json"]);
}

#[test]
fn check_not_leibniz() {
    golden(
        "check_not_leibniz",
        &["check", "--json", "@not_leibniz.json"],
    );
}

#[test]
fn structure_commands() {
    golden("kernel_example_5_3", &["kernel", "@example_5_3.json"]);
    golden("series_simple_ext_6", &["series", "@simple_ext_6.json"]);
    golden(
        "radical_example_5_3",
        &["radical", "--json", "@example_5_3.json"],
    );
    golden(
        "semisimple_example_5_3",
        &["semisimple", "@example_5_3.json"],
    );
    golden("simple_example_5_3", &["simple", "@example_5_3.json"]);
    golden("derivations_sl2", &["derivations", "@sl2.json"]);
    golden(
        "levi_simple_ext_6",
        &["levi", "--json", "@simple_ext_6.json"],
    );
}

#[test]
fn rep_commands() {
    golden("rep_check_irrep", &["rep", "check", "@sl2_irrep_2.json"]);
    golden(
        "rep_check_injected",
        &["rep", "check", "--json", "@injected_lambda_f.json"],
    );
    golden(
        "rep_irreducible_anti",
        &["rep", "irreducible", "@sl2_irrep_2_anti.json"],
    );
    golden(
        "rep_irreducible_sum",
        &["rep", "irreducible", "@example_5_5.json"],
    );
    golden(
        "rep_equivalent_variants",
        &[
            "rep",
            "equivalent",
            "@sl2_irrep_2.json",
            "@sl2_irrep_2_anti.json",
        ],
    );
    golden(
        "rep_decompose_example_5_5",
        &["rep", "decompose", "--json", "@example_5_5.json"],
    );
    golden(
        "rep_decompose_example_5_3",
        &["rep", "decompose", "@example_5_3_adjoint.json"],
    );
    golden(
        "rep_restrict_adjoint",
        &[
            "rep",
            "restrict",
            "@example_5_3_adjoint.json",
            "--basis",
            "e,f,h",
        ],
    );
}

#[test]
fn classify_from_stdin() {
    let alg = fs::read_to_string(golden_dir().join("inputs/simple_ext_5.json")).unwrap();
    golden_stdin(
        "rep_classify_simple_ext_5",
        &["--json", "rep", "classify", "--m", "1", "-"],
        &alg,
    );
}

#[test]
fn generators() {
    golden("gen_sl2_irrep_1", &["gen", "sl2-irrep", "--m", "1"]);
    golden(
        "gen_example_5_5",
        &["gen", "example-5-5", "--first", "anti-symmetric"],
    );
}

#[test]
fn input_errors() {
    golden(
        "error_duplicate_bracket",
        &["check", "@duplicate_bracket.json"],
    );
    golden("error_not_leibniz_kernel", &["kernel", "@not_leibniz.json"]);
    golden("error_bad_m", &["gen", "simple-ext", "--n", "3"]);
    golden("error_levi_not_semisimple", &["levi", "@abelian_2.json"]);
    golden(
        "error_unknown_label",
        &["rep", "restrict", "@sl2_irrep_1.json", "--basis", "q"],
    );
    golden(
        "error_classify_sl2_rep_as_algebra",
        &["rep", "classify", "--m", "1", "@sl2_irrep_1.json"],
    );
}

#[test]
fn missing_file_is_an_input_error() {
    let out = run(&["check", "/definitely/not/here.json"], "");
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out
        .stderr
        .starts_with("error: io error on /definitely/not/here.json"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"], "").code, 1);
    assert_eq!(run(&["gen", "sl2-irrep"], "").code, 1);
    let help = run(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("Usage"));
}

/// The generator output can be piped into another command.
#[test]
fn binary_pipeline() {
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let gen = Command::new(bin)
        .args(["gen", "simple-ext", "--n", "5"])
        .output()
        .unwrap();
    assert!(gen.status.success());
    let mut child = Command::new(bin)
        .args(["--json", "rep", "classify", "--m", "2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["count"], 2);
    assert_eq!(
        report["variants"],
        serde_json::json!(["zero_lambda", "anti_symmetric"])
    );
}
