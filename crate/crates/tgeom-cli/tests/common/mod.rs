//! Shared driver for CLI integration tests: runs the real binary and
//! compares captured output against committed golden files.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

/// Runs the compiled `tgeom` binary with the given arguments.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tgeom"))
        .args(args)
        .output()
        .expect("the tgeom binary should run")
}

/// Runs the binary, requires a clean exit, and returns stdout as text.
pub fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(
        out.stderr.is_empty(),
        "successful runs keep stderr empty, got: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

/// Runs the binary expecting a failure with the given exit code; asserts
/// stdout stays empty and returns stderr for message checks.
pub fn run_err(args: &[&str], expected_code: i32) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(expected_code),
        "command {args:?}\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(
        out.stdout.is_empty(),
        "failed runs must not write to stdout, got: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    String::from_utf8(out.stderr).expect("stderr is UTF-8")
}

/// Absolute path of a fixture file shipped with the tests.
pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    path.to_str().expect("fixture paths are UTF-8").to_owned()
}

/// Compares `actual` against the committed golden file, or rewrites the
/// golden file when the env var UPDATE_GOLDEN is set.
pub fn check_golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().expect("golden files live in a directory"))
            .expect("golden directory is writable");
        fs::write(&path, actual).expect("golden file is writable");
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| {
        panic!(
            "missing golden file {}; run the tests once with UPDATE_GOLDEN=1 to create it",
            path.display()
        )
    });
    assert_eq!(
        actual,
        expected,
        "output differs from {}; rerun with UPDATE_GOLDEN=1 after an intended change",
        path.display()
    );
}
