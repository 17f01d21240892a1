use std::io::Write;
use std::process::{Command, Output};

use vknot::{parse_gauss, parse_poly};

fn vknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vknot")).args(args).output().expect("run vknot")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn quiet_output_reparses() {
    let o = vknot(&["compute", "--spec", "VT[a](7,4,3,5,9)", "--quiet"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let p = parse_poly(text.trim()).unwrap();
    assert_eq!(p.to_string(), text.trim());
}

#[test]
fn trefoil_report_is_zero() {
    let o = vknot(&["compute", "--gauss", "O1+U2+O3+U1+O2+U3+", "--machine"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("delta0=0\n"));
    assert!(text.contains("odd_writhe=0\n"));
    assert!(text.contains("conjecture=holds\n"));
}

#[test]
fn virtual_trefoil_report() {
    let o = vknot(&["compute", "--gauss", "O1+U2+U1+O2+"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("Delta0bar normalized") && l.ends_with(" 1")));
    assert!(text.lines().any(|l| l.starts_with("odd writhe") && l.ends_with(" 2")));
    assert!(text.contains("holds"));
}

#[test]
fn machine_output_is_stable() {
    let args = ["compute", "--spec", "VT[a](-7,3,-5,-2,3)", "--machine"];
    assert_eq!(vknot(&args).stdout, vknot(&args).stdout);
}

#[test]
fn twist_codes() {
    let code_of = |spec: &str| {
        let o = vknot(&["twist", spec]);
        assert!(o.status.success(), "{spec}");
        let text = stdout(&o);
        let line = text.lines().find(|l| !l.starts_with('#')).unwrap().to_string();
        parse_gauss(&line).unwrap()
    };
    assert_eq!(code_of("VT[a](1)").crossing_count(), 2);
    assert_eq!(code_of("VT[a](0)").crossing_count(), 1);
    let ab = code_of("VT[ab](1,1)");
    let r = vknot::invariant_report(&ab).unwrap();
    assert!(r.delta_bar_normalized.is_one());
}

#[test]
fn verify_grid_summary() {
    let o = vknot(&["verify", "--n", "2", "--range", "-3..3"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("all 56 specs passed\n"));
}

#[test]
fn verify_one_block_table() {
    let o = vknot(&["verify", "--n", "1", "--range", "0..10", "--machine"]);
    let text = stdout(&o);
    for k in 0..=10 {
        let want = if k % 2 == 0 { k / 2 } else { k / 2 + 1 };
        assert!(text.contains(&format!("spec=VT[a]({k}), dbar={want}, pass=true")), "{k}");
    }
}

#[test]
fn verify_thread_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_vknot"))
        .args(["verify", "--n", "1", "--range", "0..3"])
        .env("VA_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_vknot"))
        .args(["verify", "--n", "1", "--range", "0..3"])
        .env("VA_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn batch_file_verdicts() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# comment\nO1+U2+U1+O2+\n\nO1+U2+O3+U1+O2+U3+").unwrap();
    let path = f.path().to_str().unwrap();
    let o = vknot(&["verify", "--file", path, "--machine"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("line=2, knot=O1+U2+U1+O2+, ow=2, dbar=1, holds=true"));
    assert!(text.contains("line=4, "));
    assert_eq!(vknot(&["batch", path]).status.code(), Some(0));
}

#[test]
fn batch_file_with_bad_line_fails() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "O1+U2+U1+O2+\nO1+U2+").unwrap();
    let o = vknot(&["batch", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("line 2: error"));
}

#[test]
fn exit_codes() {
    assert_eq!(vknot(&["verify", "--file", "/nonexistent/knots.txt"]).status.code(), Some(1));
    assert_eq!(vknot(&["compute", "--gauss", "O1+U2+"]).status.code(), Some(1));
    assert_eq!(vknot(&["compute"]).status.code(), Some(2));
    assert_eq!(vknot(&["twist", "VT(x)"]).status.code(), Some(2));
    assert_eq!(vknot(&[]).status.code(), Some(2));
    assert_eq!(vknot(&["--help"]).status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let o = vknot(&["selftest"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("selftest: all "));
    assert_eq!(vknot(&["selftest"]).stdout, o.stdout);
}
