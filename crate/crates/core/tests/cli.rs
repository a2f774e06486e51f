//! End-to-end checks of the command-line binary: golden outputs pinned byte
//! for byte, the stdout/stderr split, exit codes for usage errors and failed
//! verifications, environment-variable defaults, and the rule that every
//! command writes its output before it judges it.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prime-interference"));
    cmd.env_remove("PI_TMAX").env_remove("PI_POINTS");
    cmd
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cli-test-{}-{name}", std::process::id()))
}

// ---- golden outputs ----

#[test]
fn golden_svg_is_reproduced() {
    let zeros = golden("zeros_4_3_t15.txt");
    let out = temp_path("mod4.svg");
    let status = binary()
        .args(["reconstruct", "--modulus", "4", "--label", "3", "--points", "320"])
        .arg("--zeros-file")
        .arg(&zeros)
        .args(["--format", "svg", "--out"])
        .arg(&out)
        .status()
        .expect("binary runs");
    assert!(status.success(), "svg reconstruction exits cleanly");
    let produced = std::fs::read(&out).expect("svg written");
    let expected = std::fs::read(golden("mod4_small.svg")).expect("golden svg present");
    let _ = std::fs::remove_file(&out);
    assert_eq!(produced, expected, "svg bytes drifted from the golden file");
}

#[test]
fn golden_csv_is_reproduced() {
    let zeros = golden("zeros_4_3_t15.txt");
    let out = temp_path("mod4.csv");
    let status = binary()
        .args(["reconstruct", "--modulus", "4", "--label", "3", "--points", "320"])
        .arg("--zeros-file")
        .arg(&zeros)
        .arg("--out")
        .arg(&out)
        .status()
        .expect("binary runs");
    assert!(status.success(), "csv reconstruction exits cleanly");
    let produced = std::fs::read(&out).expect("csv written");
    let expected = std::fs::read(golden("mod4_small.csv")).expect("golden csv present");
    let _ = std::fs::remove_file(&out);
    assert_eq!(produced, expected, "csv bytes drifted from the golden file");
}

// ---- zeros command ----

#[test]
fn zeros_export_lists_known_ordinates() {
    let out = run(&["zeros", "--modulus", "3", "--label", "2", "--tmax", "12"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    assert!(stdout.starts_with("# character 3.2\n# t_max 12\n"), "header lines:\n{stdout}");
    assert!(
        stdout.contains("8.039737156\n") && stdout.contains("11.249206208\n"),
        "first two ordinates at nine decimals:\n{stdout}"
    );
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("found 2 zeros"), "progress note goes to stderr: {stderr}");
}

#[test]
fn mismatched_zero_list_is_refused() {
    let zeros = golden("zeros_4_3_t15.txt");
    let out = binary()
        .args(["reconstruct", "--modulus", "3", "--label", "2", "--zeros-file"])
        .arg(&zeros)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "wrong-character list is an input error");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.starts_with("zeros:") && stderr.contains("4.3"),
        "error names the stage and the offending character: {stderr}"
    );
}

// ---- usage errors ----

#[test]
fn usage_errors_exit_two() {
    let missing = run(&["reconstruct"]);
    assert_eq!(missing.status.code(), Some(2), "missing required arguments");
    let unknown = run(&["reconstruct", "--modulus", "3", "--label", "2", "--frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2), "unknown flag");
    assert!(
        String::from_utf8_lossy(&unknown.stderr).contains("--frobnicate"),
        "usage error names the flag"
    );
}

// ---- verification failures still deliver their output ----

#[test]
fn analyze_flags_wrong_component_peaks() {
    let out_path = temp_path("an52.csv");
    let out = binary()
        .args(["analyze", "--modulus", "5", "--label", "2", "--tmax", "100", "--out"])
        .arg(&out_path)
        .output()
        .expect("binary runs");
    // At the loose default prominence a truncation ripple beside a prime
    // power of the wrong component survives; the run must report it and
    // fail, but only after writing the peak table.
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("analysis:") && stderr.contains("violation"),
        "failure is attributed to the analysis stage: {stderr}"
    );
    let table = std::fs::read_to_string(&out_path).expect("peak table written despite failure");
    let _ = std::fs::remove_file(&out_path);
    assert!(table.starts_with("component,x,amplitude"), "peak table header:\n{table}");
}

#[test]
fn figure_output_lands_before_verification_fails() {
    let out_path = temp_path("fig2.svg");
    let out = binary()
        .args(["figure", "2", "--tmax", "30", "--out"])
        .arg(&out_path)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "too few zeros to pass verification");
    let svg = std::fs::read_to_string(&out_path).expect("figure written despite failure");
    let _ = std::fs::remove_file(&out_path);
    assert!(svg.starts_with("<svg"), "file holds a complete drawing");
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("verification for 4.3 failed"),
        "failure names the character"
    );
}

// ---- characters command ----

#[test]
fn characters_csv_lists_the_induction_map() {
    let out = run(&["characters", "--modulus", "6", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    assert_eq!(
        stdout,
        "id,order,parity,real,conductor,primitive,induced_from\n\
         6.1,1,even,true,1,false,1.1\n\
         6.5,2,odd,true,3,false,3.2\n"
    );
}

#[test]
fn report_format_prints_table_and_records() {
    let out = run(&[
        "analyze", "--modulus", "4", "--label", "3", "--tmax", "40", "--points", "600",
        "--format", "report",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    assert!(stdout.contains("violations: none"), "human summary:\n{stdout}");
    assert!(stdout.contains("report character=4.3"), "machine records:\n{stdout}");
}

// ---- pipes ----

#[test]
fn closing_the_output_pipe_is_not_an_error() {
    use std::io::Read;
    let zeros = golden("zeros_4_3_t15.txt");
    let mut child = binary()
        .args(["reconstruct", "--modulus", "4", "--label", "3", "--points", "4000"])
        .arg("--zeros-file")
        .arg(&zeros)
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary spawns");
    // Read one line's worth, then drop the pipe; the CSV is far larger than
    // the pipe buffer, so the writer is still mid-stream when it closes.
    let mut head = [0u8; 64];
    child.stdout.take().expect("piped stdout").read_exact(&mut head).expect("stream starts");
    let out = child.wait_with_output().expect("binary exits");
    assert!(out.status.success(), "a consumer that stops reading is not a failure");
    assert!(
        String::from_utf8_lossy(&out.stderr).trim().is_empty(),
        "no complaint on stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

// ---- environment defaults ----

#[test]
fn env_variables_fill_in_cli_defaults() {
    let by_flag = run(&["zeros", "--modulus", "3", "--label", "2", "--tmax", "12"]);
    let by_env = binary()
        .args(["zeros", "--modulus", "3", "--label", "2"])
        .env("PI_TMAX", "12")
        .output()
        .expect("binary runs");
    assert!(by_env.status.success());
    assert_eq!(by_flag.stdout, by_env.stdout, "PI_TMAX matches an explicit --tmax");
}
