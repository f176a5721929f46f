//! Running the binary against the fixed configs in `tests/golden`.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub config: &'static str,
    pub subcommand: &'static str,
    pub expected: &'static str,
}

pub const CASES: &[Case] = &[
    Case { config: "seq.json", subcommand: "seq", expected: "seq.csv" },
    Case { config: "sums.json", subcommand: "sums", expected: "sums.txt" },
    Case { config: "spiral.json", subcommand: "spiral", expected: "spiral.svg" },
    Case { config: "spiral_csv.json", subcommand: "spiral", expected: "spiral.csv" },
    Case { config: "curve.json", subcommand: "curve", expected: "curve.csv" },
    Case { config: "verify.json", subcommand: "verify", expected: "verify.txt" },
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn exponacci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exponacci"))
        .args(args)
        .env_remove("EXPONACCI_SEED")
        .output()
        .expect("binary runs")
}

/// `(stdout, golden file contents)`; with `UPDATE_GOLDEN` set the golden
/// file is rewritten first.
pub fn run_case(case: &Case) -> (Vec<u8>, Vec<u8>) {
    let dir = golden_dir();
    let config = dir.join(case.config);
    let out = exponacci(&[case.subcommand, "--config", config.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}: {}",
        case.config,
        String::from_utf8_lossy(&out.stderr)
    );
    let path = dir.join(case.expected);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_default();
    (out.stdout, expected)
}
