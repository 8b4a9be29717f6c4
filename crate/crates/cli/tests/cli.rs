//! End-to-end tests of the `gonality` binary: parsing, exit codes, output
//! shapes, and the census round trip with resume.

use std::path::Path;
use std::process::{Command, Output};

fn gonality(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gonality"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn classify_known_forms() {
    let out = gonality(&["classify", "vw+xy", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type\tII"));
    assert!(text.contains("points_k1\t19"));
    assert!(text.contains("id\t0402"));

    let out = gonality(&["classify", "x^2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not geometrically irreducible"));

    let out = gonality(&["classify", "vw + x^2 + xy + y^2", "--format", "machine"]);
    assert!(stdout(&out).contains("type\tIII"));
    assert!(stdout(&out).contains("normal_shape\tnorm-tail"));
}

#[test]
fn classify_rejects_garbage() {
    let out = gonality(&["classify", ""]);
    assert_eq!(out.status.code(), Some(2));
    let out = gonality(&["classify", "a+b"]);
    assert_eq!(out.status.code(), Some(2));
    // A cubic is not a quadratic form.
    let out = gonality(&["classify", "x^3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orth_methods_agree_in_p3() {
    let fast = gonality(&["orth", "xy+zw", "--ambient", "p3", "--format", "machine", "--elements"]);
    let naive =
        gonality(&["orth", "xy+zw", "--ambient", "p3", "--method", "naive", "--format", "machine", "--elements"]);
    assert!(fast.status.success() && naive.status.success());
    assert_eq!(stdout(&fast), stdout(&naive));
    assert!(stdout(&fast).contains("order\t72"));
}

#[test]
fn count_subcommand() {
    let out = gonality(&[
        "count",
        "--k",
        "4",
        "--ambient",
        "p3",
        "xy + z^2 + zw + w^2",
        "x^3 + y^3 + z^3 + y^2w + xzw",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "points\t4");
}

#[test]
fn verify_scopes_without_census() {
    for scope in ["genus1", "genus2", "genus3", "genus4", "appendixA"] {
        let out = gonality(&["verify", "--scope", scope]);
        assert!(out.status.success(), "scope {} failed:\n{}", scope, stdout(&out));
    }
    // Census-derived entries are reported as skipped, not failed.
    let out = gonality(&["verify", "--scope", "genus5", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("skipped"));
    assert!(text.contains("result\tpass"));
}

#[test]
fn tables_without_census_marks_unverified_cells() {
    let out = gonality(&["tables"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-inf"));
    assert!(text.contains("[unverified]"));
}

#[test]
fn census_type_iv_round_trip_with_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("iv.tsv");
    let run = gonality(&[
        "census",
        "--q1",
        "4",
        "--jobs",
        "8",
        "--out",
        out_path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let text = stdout(&run);
    assert!(text.contains("iv.curves\t8296"), "summary:\n{}", text);
    assert!(text.contains("iv.points3\t8296"));
    assert!(text.contains("max_points\t3"));

    let records = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(records.lines().count(), 8296);
    let summary = std::fs::read_to_string(summary_file(&out_path)).unwrap();
    assert!(summary.contains("iv.curves\t8296"));

    // Resume on a complete journal is a no-op with identical output.
    let rerun = gonality(&[
        "census",
        "--q1",
        "4",
        "--jobs",
        "2",
        "--resume",
        "--out",
        out_path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(rerun.status.success());
    let records_again = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(records, records_again);
    let summary_again = std::fs::read_to_string(summary_file(&out_path)).unwrap();
    assert_eq!(comparable(&summary), comparable(&summary_again));

    // A truncated journal resumes to the same record file.
    let jpath = journal_file(&out_path);
    let journal = std::fs::read_to_string(&jpath).unwrap();
    let keep: String = {
        // Drop the last complete block and everything after it.
        let cut = journal.rfind("\nB ").unwrap_or(0);
        journal[..cut + 1].to_string()
    };
    std::fs::write(&jpath, keep).unwrap();
    let resumed = gonality(&[
        "census",
        "--q1",
        "4",
        "--jobs",
        "3",
        "--resume",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(resumed.status.success());
    assert_eq!(std::fs::read_to_string(&out_path).unwrap(), records);
}

fn summary_file(p: &Path) -> std::path::PathBuf {
    let mut os = p.as_os_str().to_owned();
    os.push(".summary");
    os.into()
}

fn journal_file(p: &Path) -> std::path::PathBuf {
    let mut os = p.as_os_str().to_owned();
    os.push(".journal");
    os.into()
}

/// The summary body above the informational (timing) marker.
fn comparable(summary: &str) -> &str {
    summary.split("# informational").next().unwrap()
}
