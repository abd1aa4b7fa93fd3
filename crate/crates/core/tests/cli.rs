use std::path::PathBuf;
use std::process::{Command, Output};

use brauerbox::cli::data::{bootstrap, data_dir};
use brauerbox::permgrp::SearchBound;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauerbox"))
        .args(args)
        .env("BRAUERBOX_DATA", data_dir())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("brauerbox-test-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn brauer_quotient_of_omega8() {
    let o = run(&["brauer", "quotient", "--group", "a8.grp", "--sub", "p.grp", "--rep", "omega8.rep"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("quotient dim 2"), "{s}");
    assert!(s.contains("dim V^P = 4"), "{s}");
}

#[test]
fn chop_and_marks() {
    let o = run(&["mod", "chop", "--rep", "d8modc4.rep"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("constituent dims [1, 1]"));
    let o = run(&["brauer", "marks", "--group", "a8.grp", "--sub", "a7.grp", "--k", "p.grp"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains('2'));
}

#[test]
fn group_info() {
    let o = run(&["group", "info", "--group", "hprime.grp"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("72"), "{}", stdout(&o));
}

#[test]
fn errors_exit_nonzero() {
    let o = run(&["mod", "chop", "--rep", "no-such-file.rep"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-file.rep"));
    let o = run(&["mod", "frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    let dir = scratch("bad");
    let bad = dir.join("bad.grp");
    std::fs::write(&bad, "permgroup degree=3\n(1,2)\n(1,4)\n").unwrap();
    let o = run(&["group", "info", "--group", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":3"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn scenarios_pass_and_reports_are_deterministic() {
    let dir = scratch("json");
    for name in ["a8-green", "a8-f13", "j4-local"] {
        let a = dir.join(format!("{name}-a.json"));
        let b = dir.join(format!("{name}-b.json"));
        for path in [&a, &b] {
            let o = run(&["--no-timings", "--json", path.to_str().unwrap(), "scenario", "run", name]);
            assert!(o.status.success(), "{name}: {}", stdout(&o));
        }
        let ta = std::fs::read_to_string(&a).unwrap();
        let tb = std::fs::read_to_string(&b).unwrap();
        let va: serde_json::Value = serde_json::from_str(&ta).unwrap();
        let vb: serde_json::Value = serde_json::from_str(&tb).unwrap();
        assert_eq!(va["result"], vb["result"]);
        assert_eq!(va["format_version"], 1);
        assert!(va.get("timings_ms").is_none());
    }
}

#[test]
fn bootstrap_reproduces_shipped_data() {
    let dir = scratch("bootstrap");
    let written = bootstrap(&dir, SearchBound::default()).unwrap();
    assert!(!written.is_empty());
    for path in written {
        let name = path.file_name().unwrap();
        let fresh = std::fs::read_to_string(&path).unwrap();
        let shipped = std::fs::read_to_string(data_dir().join(name)).unwrap();
        assert_eq!(fresh, shipped, "{}", name.to_string_lossy());
    }
}
