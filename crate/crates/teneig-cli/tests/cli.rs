//! End-to-end checks of the `teneig` binary: output shapes, flag handling
//! and the documented exit codes under fault injection.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use teneig::fixtures;
use teneig_cli::{serialize_tensor, Layout};

static DIR_COUNTER: AtomicUsize = AtomicUsize::new(0);

fn scratch_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "teneig-cli-{}-{}",
        std::process::id(),
        DIR_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_fixture(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn teneig(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teneig"))
        .args(args)
        .current_dir(dir)
        .env_remove("TENEIG_EPS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn eig_reports_the_dominant_eigenvalue() {
    let dir = scratch_dir();
    write_fixture(&dir, "a.json", &serialize_tensor(&fixtures::example1(), Layout::Dense));
    let output = teneig(&["eig", "a.json"], &dir);
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("lambda = 36.2757"), "{text}");
    assert!(text.contains("converged = true"), "{text}");
}

#[test]
fn eig_trace_prints_the_iteration_table() {
    let dir = scratch_dir();
    write_fixture(&dir, "a.json", &serialize_tensor(&fixtures::example1(), Layout::Dense));
    let output = teneig(&["eig", "a.json", "--trace"], &dir);
    let text = stdout(&output);
    assert!(text.contains("residual"), "{text}");
    assert!(text.lines().count() >= 9, "table plus summary expected: {text}");
}

#[test]
fn eig_json_matches_text_digits() {
    let dir = scratch_dir();
    write_fixture(&dir, "a.json", &serialize_tensor(&fixtures::example2(), Layout::Coo));
    let text_run = teneig(&["eig", "a.json"], &dir);
    let json_run = teneig(&["eig", "a.json", "--json"], &dir);
    assert_eq!(json_run.status.code(), Some(0));

    let value: serde_json::Value = serde_json::from_str(&stdout(&json_run)).unwrap();
    let lambda = value["lambda"].as_f64().unwrap();
    let printed = stdout(&text_run);
    let text_lambda = printed
        .lines()
        .find_map(|l| l.strip_prefix("lambda = "))
        .unwrap();
    assert_eq!(format!("{lambda:.4}"), text_lambda);
    assert!(value["converged"].as_bool().unwrap());
    assert_eq!(value["trace"].as_array().unwrap().len(), value["iterations"].as_u64().unwrap() as usize);
}

#[test]
fn eig_honors_x0_and_stop_eps() {
    let dir = scratch_dir();
    write_fixture(&dir, "a.json", &serialize_tensor(&fixtures::example1(), Layout::Dense));
    write_fixture(&dir, "x0.json", "[0.5, 1.5, 2.5]");
    let output = teneig(
        &["eig", "a.json", "--x0", "x0.json", "--stop-eps", "1e-4"],
        &dir,
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert!(stdout(&output).contains("lambda = 36.27"), "{}", stdout(&output));

    let bad_x0 = write_fixture(&dir, "bad_x0.json", "[0.5, -1.5, 2.5]");
    let output = teneig(&["eig", "a.json", "--x0", bad_x0.to_str().unwrap()], &dir);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn check_prints_reducibility_with_witness() {
    let dir = scratch_dir();
    write_fixture(&dir, "ex3.json", &serialize_tensor(&fixtures::example3(), Layout::Coo));
    let output = teneig(&["check", "ex3.json"], &dir);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("structure: reducible"), "{text}");
    assert!(text.contains("reducing set: {4}"), "{text}");

    write_fixture(&dir, "ex2.json", &serialize_tensor(&fixtures::example2(), Layout::Coo));
    let output = teneig(&["check", "ex2.json"], &dir);
    assert!(stdout(&output).contains("structure: irreducible"));
}

#[test]
fn examples_writes_three_parseable_files() {
    let dir = scratch_dir();
    let output = teneig(&["examples"], &dir);
    assert_eq!(output.status.code(), Some(0));
    for name in ["example1.json", "example2.json", "example3.json"] {
        let text = fs::read_to_string(dir.join(name)).unwrap();
        teneig_cli::parse_tensor(&text).unwrap();
    }
    // and the files feed straight back into eig
    let output = teneig(&["eig", "example3.json"], &dir);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("lambda = 0.8225"));
}

#[test]
fn props_runs_and_reports() {
    let dir = scratch_dir();
    let output = teneig(
        &["props", "minimax", "--seed", "7", "--samples", "3"],
        &dir,
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert!(stdout(&output).contains("minimax: pass"));

    let output = teneig(
        &["props", "all", "--seed", "7", "--samples", "2", "--json"],
        &dir,
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 5);
}

#[test]
fn exit_codes_under_fault_injection() {
    let dir = scratch_dir();

    // malformed document
    write_fixture(&dir, "broken.json", "{\"order\": 3, nope");
    let output = teneig(&["eig", "broken.json"], &dir);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("error:"));

    // missing file
    let output = teneig(&["eig", "no-such-file.json"], &dir);
    assert_eq!(output.status.code(), Some(2));

    // duplicate coo entry
    write_fixture(
        &dir,
        "dup.json",
        r#"{"order":3,"dim":3,"layout":"coo","entries":[[[1,1,1],1],[[1,1,1],2]]}"#,
    );
    let output = teneig(&["check", "dup.json"], &dir);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("duplicate"));

    // tensor outside the solver's domain
    write_fixture(
        &dir,
        "negoff.json",
        r#"{"order":3,"dim":3,"layout":"coo","entries":[[[1,2,2],-1]]}"#,
    );
    let output = teneig(&["eig", "negoff.json"], &dir);
    assert_eq!(output.status.code(), Some(2));

    // non-convergent cap
    write_fixture(&dir, "ex3.json", &serialize_tensor(&fixtures::example3(), Layout::Coo));
    let output = teneig(&["eig", "ex3.json", "--max-iter", "2"], &dir);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("converged = false"));

    // usage errors
    let output = teneig(&["eig"], &dir);
    assert_eq!(output.status.code(), Some(2));
    let output = teneig(&["eig", "ex3.json", "--no-such-flag"], &dir);
    assert_eq!(output.status.code(), Some(2));
    let output = teneig(&["props", "no-such-suite"], &dir);
    assert_eq!(output.status.code(), Some(2));
    let output = teneig(&["frobnicate"], &dir);
    assert_eq!(output.status.code(), Some(2));

    // help is not an error
    let output = teneig(&["--help"], &dir);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn eps_environment_variable_is_lowest_precedence() {
    let dir = scratch_dir();
    write_fixture(&dir, "a.json", &serialize_tensor(&fixtures::example3(), Layout::Coo));

    let coarse = Command::new(env!("CARGO_BIN_EXE_teneig"))
        .args(["eig", "a.json", "--json"])
        .current_dir(&dir)
        .env("TENEIG_EPS", "1e-3")
        .output()
        .unwrap();
    let coarse_val: serde_json::Value = serde_json::from_str(&stdout(&coarse)).unwrap();

    let default_run = teneig(&["eig", "a.json", "--json"], &dir);
    let default_val: serde_json::Value = serde_json::from_str(&stdout(&default_run)).unwrap();
    assert!(
        coarse_val["iterations"].as_u64().unwrap() < default_val["iterations"].as_u64().unwrap(),
        "coarse eps from the environment must stop earlier"
    );

    // the flag wins over the environment
    let flag_run = Command::new(env!("CARGO_BIN_EXE_teneig"))
        .args(["eig", "a.json", "--json", "--eps", "1e-9"])
        .current_dir(&dir)
        .env("TENEIG_EPS", "1e-3")
        .output()
        .unwrap();
    let flag_val: serde_json::Value = serde_json::from_str(&stdout(&flag_run)).unwrap();
    assert_eq!(
        flag_val["iterations"].as_u64(),
        default_val["iterations"].as_u64()
    );

    // unparseable environment value is a usage error
    let bad = Command::new(env!("CARGO_BIN_EXE_teneig"))
        .args(["eig", "a.json"])
        .current_dir(&dir)
        .env("TENEIG_EPS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
