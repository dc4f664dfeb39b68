use std::process::{Command, Output};

fn twofold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twofold")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = twofold(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sum100h_reports() {
    let out = stdout(&["demo", "sum100h"]);
    assert!(out.contains("test: type=float, hours=100"), "{out}");
    assert!(out.contains("result: 96.3958[3.54008] hours"), "{out}");
    assert!(out.contains("test: type=double, hours=100"), "{out}");
    assert!(out.contains("result: 100[3.33695e-09] hours"), "{out}");
    // Float comes before double.
    assert!(out.find("type=float").unwrap() < out.find("type=double").unwrap());
}

#[test]
fn sum100h_single_format_and_hours() {
    let out = stdout(&["demo", "sum100h", "--format", "f64", "--hours", "1"]);
    assert!(out.contains("hours=1\n"), "{out}");
    assert!(!out.contains("type=float"), "{out}");
}

#[test]
fn gauss_ill3_float() {
    let out = stdout(&["demo", "gauss", "--case", "ill3", "--format", "f32"]);
    assert!(out.contains("test, float, ill3"), "{out}");
    assert!(out.contains("939.026[60.9742]  1000.06[-0.0609741]  1000[6.10351e-05]"), "{out}");
}

#[test]
fn quadratic_reports_both_formats() {
    let out = stdout(&["demo", "quadratic"]);
    assert!(out.contains("test: type=float"), "{out}");
    assert!(out.contains("  x1: 0[-5e-09]"), "{out}");
    assert!(out.contains("test: type=double"), "{out}");
}

#[test]
fn quadratic_nan_case() {
    let out = stdout(&["demo", "quadratic", "--c", "1+1e-8", "--format", "f64"]);
    assert!(out.contains("  d: nan[nan]"), "{out}");
}

#[test]
fn digits_option() {
    let out = stdout(&["demo", "sum100h", "--format", "f32", "--digits", "3"]);
    assert!(out.contains("result: 96.4[3.54] hours"), "{out}");
}

#[test]
fn eval_shapes() {
    assert_eq!(stdout(&["eval", "tadd", "1", "0", "1", "0"]), "2[0]\n");
    assert_eq!(stdout(&["eval", "tsub", "-1", "-2"]), "1[0]\n");
    assert_eq!(stdout(&["eval", "tdiv", "1", "3"]), "0.333333[1.85037e-17]\n");
    assert_eq!(stdout(&["eval", "--format", "f32", "tmul", "3", "0.1[-1.49012e-09]"]), "0.3[-1.19209e-08]\n");
    assert_eq!(stdout(&["eval", "padd", "1", "1e-17", "1"]), "2[1e-17]\n");
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["eval", "tadd", "1"][..],
        &["eval", "frob", "1", "2"],
        &["eval", "tadd", "x", "2"],
        &["eval", "padd", "1", "1", "1"],
        &["demo", "gauss", "--case", "big"],
        &["bench", "--ops", "nope"],
        &["bench", "--reps", "2"],
    ] {
        let out = twofold(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty(), "{args:?} should explain");
    }
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let path_str = path.to_str().unwrap();
    let out = stdout(&[
        "bench", "--ops", "vtadd2,vpmul1", "--sizes", "small", "--format", "f32", "--reps", "3", "--min-time-ms", "1",
        "--csv", path_str,
    ]);
    assert!(out.contains("vtadd2"), "{out}");
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("op,shape,format,size_class,elements,mega_ops,ratio_vs_dotted"));
    let rows: Vec<_> = lines.collect();
    let ops: Vec<_> = rows.iter().map(|r| r.split(',').next().unwrap()).collect();
    assert_eq!(ops, ["vmem", "vadd", "vmul", "vtadd2", "vpmul1"]);
    for row in rows {
        let fields: Vec<_> = row.split(',').collect();
        assert_eq!(fields.len(), 7, "{row}");
        assert_eq!(fields[2], "f32");
        assert_eq!(fields[3], "small");
        assert_eq!(fields[4], "100");
        assert!(fields[5].parse::<f64>().unwrap() > 0.0);
        assert!(fields[6].parse::<f64>().unwrap() > 0.0);
    }
}
