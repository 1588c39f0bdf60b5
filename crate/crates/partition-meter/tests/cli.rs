//! End-to-end tests of the `partition-meter` binary: output formats, exit
//! codes, and the stdout/stderr split.

mod common;

use std::process::{Command, Output};

use common::brute_sac;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-meter"))
        .args(args)
        .env_remove("PARTITION_METER_MEMO_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn enumerate_lines() {
    let out = run(&["enumerate", "--n", "5", "--m", "2", "--format", "lines"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2+3\n5\n");

    let out = run(&["enumerate", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn enumerate_json_round_trips() {
    let out = run(&["enumerate", "--n", "9", "--format", "json"]);
    assert!(out.status.success());
    let parsed: Vec<Vec<u64>> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, brute_sac(9, 1));
}

#[test]
fn enumerate_csv_has_header() {
    let out = run(&["enumerate", "--n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "part1,part2,part3,part4,part5");
    assert_eq!(lines.next().unwrap(), "1,1,1,1,1");
    assert_eq!(lines.next().unwrap(), "1,1,1,2,");
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn enumerate_usage_errors() {
    let out = run(&["enumerate", "--n", "5", "--m", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("m must satisfy 1 \u{2264} m \u{2264} n"));

    let out = run(&["enumerate", "--n", "5", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["enumerate", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_basic_and_oracle() {
    let out = run(&["count", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");

    let out = run(&["count", "--n", "5", "--m", "2"]);
    assert_eq!(stdout(&out), "2\n");

    let out = run(&["count", "--n", "10", "--oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "42 42 MATCH\n");

    let out = run(&["count", "--n", "10", "--m", "2", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_sweeps_exit_zero() {
    let out = run(&["verify", "eq1", "--max-n", "20"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "n,m,lhs,rhs,pass");
    assert!(text.contains("5,1,13,13,true"));
    assert!(stderr(&out).contains("20/20 rows pass"));

    let out = run(&["verify", "theorem1", "--max-n", "12"]);
    assert!(out.status.success());

    let out = run(&["verify", "eq6", "--max-n", "12"]);
    assert!(out.status.success());
}

#[test]
fn verify_parallel_matches_serial() {
    let serial = run(&["verify", "eq6", "--max-n", "15"]);
    let parallel = run(&["verify", "eq6", "--max-n", "15", "--jobs", "4"]);
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(stdout(&serial), stdout(&parallel));
}

#[test]
fn verify_literal_reading_exits_one() {
    let out = run(&["verify", "eq6-literal", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("5,2,3,10,false"));
}

#[test]
fn boxes_footer_and_cap() {
    let out = run(&["boxes", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim_end().ends_with("boxes=13 = 2*7-1"));

    let out = run(&["boxes", "--n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("boxes=1"));

    let out = run(&["boxes", "--n", "5", "--m", "2"]);
    assert!(stdout(&out).contains("boxes=3 = 2*2-1"));

    let out = run(&["boxes", "--n", "31"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["boxes", "--n", "31", "--render-cap", "40"]);
    assert!(out.status.success());
}

#[test]
fn boxes_svg_keeps_stdout_clean() {
    let out = run(&["boxes", "--n", "5", "--format", "svg"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("<svg"));
    assert!(text.trim_end().ends_with("</svg>"));
    assert!(stderr(&out).contains("boxes=13"));
}

#[test]
fn meter_output() {
    let out = run(&["meter", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("writes=13 compositions=7 amortized=13/7"));

    let out = run(&["meter", "--n", "1"]);
    assert!(stdout(&out).starts_with("writes=1 compositions=1 amortized=1/1"));

    let out = run(&["meter", "--n", "10"]);
    assert!(stdout(&out).starts_with("writes=83 compositions=42 amortized=83/42"));
}

#[test]
fn memo_limit_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_partition-meter"))
        .args(["count", "--n", "100"])
        .env("PARTITION_METER_MEMO_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("memo table entry limit"));

    let out = Command::new(env!("CARGO_BIN_EXE_partition-meter"))
        .args(["count", "--n", "100"])
        .env("PARTITION_METER_MEMO_LIMIT", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
