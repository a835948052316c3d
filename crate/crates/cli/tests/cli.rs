use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn script(name: &str) -> String {
    root().join("scripts").join(name).to_string_lossy().into_owned()
}

fn vlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vlink")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn temp_script(tag: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("vlink-{}-{tag}.vl", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_shipped_scripts() {
    for name in ["parallel.vl", "clasped.vl", "braided.vl"] {
        let o = vlink(&["validate", &script(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o), "OK\n");
    }
}

#[test]
fn validate_reports_fib_on_fiber() {
    let text = "manifold genus=2 euler=0\nfield k=1 dual=\"A2\"\ncomponent K1 base=\"f\" kinks=0\n\
                begin homotopy h\n  fib K1 n=1\nend\n";
    let o = vlink(&["validate", &temp_script("fib", text)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("error: "), "{out}");
    assert!(out.contains("fiber"), "{out}");
}

#[test]
fn syntax_error_names_line_and_token() {
    let text = "manifold genus=2 euler=0\nfield k=1 dual=\"A2\"\nwibble K1\n";
    let o = vlink(&["validate", &temp_script("syntax", text)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("line 3") && out.contains("wibble"), "{out}");
}

#[test]
fn nu_on_clasped_family() {
    let o = vlink(&["nu", &script("clasped.vl")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("nu = ZERO (no inter-component double points)\n"));
}

#[test]
fn nu_golden() {
    assert_eq!(stdout(&vlink(&["nu", &script("parallel.vl")])), golden("nu_parallel.txt"));
    assert_eq!(stdout(&vlink(&["nu", &script("braided.vl"), "--homotopy", "braided"])), golden("nu_braided.txt"));
    let o = vlink(&["nu", &script("braided.vl"), "--homotopy", "nope"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hv_of_a_drag() {
    let o = vlink(&["hv", &script("parallel.vl"), "--loop", "drag K1 path=B2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = vlink(&[
        "hv",
        &script("parallel.vl"),
        "--loop",
        "drag K1 path=\"B2\"; drag K2 path=\"-3*B2 + A1\"; rot K2 n=4",
    ]);
    assert_eq!(stdout(&o), "-2\n");
}

#[test]
fn normal_form_and_obstruction() {
    let o = vlink(&["normal-form", &script("parallel.vl"), "--loop", "rot K1 n=2; drag K1 path=A1; kinkslide K1 n=-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(2,A1,-1)\n");
    let o = vlink(&["normal-form", &script("parallel.vl"), "--loop", "drag K1 path=B2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("obstruction = 1"));
}

#[test]
fn verdict_and_legendrian_golden() {
    assert_eq!(stdout(&vlink(&["verdict", &script("parallel.vl")])), golden("verdict_parallel.txt"));
    assert_eq!(stdout(&vlink(&["verdict", &script("clasped.vl")])), golden("verdict_clasped.txt"));
    let o = vlink(&["legendrian", &script("braided.vl"), "--loose-link"]);
    assert_eq!(stdout(&o), golden("legendrian_braided.txt"));
}

#[test]
fn table_all_rows() {
    let o = vlink(&["table", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out, golden("table_all.txt"));
    assert_eq!(out.lines().count(), 8);
    assert_eq!(out.lines().filter(|l| l.contains(",?,")).count(), 1);
    assert!(out.lines().nth(4).unwrap().ends_with(",?,yes,?"));
}

#[test]
fn table_single_row() {
    let o = vlink(&["table", "--family", "parallel", "--g", "3", "--k", "2", "--i1", "-2", "--i2", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1), Some("1,parallel,i1!=i2,-2,4,no,yes,no"));
    let o = vlink(&["table", "--family", "parallel", "--k", "2", "--i1", "1", "--i2", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reports_are_deterministic() {
    let a = vlink(&["verdict", &script("braided.vl")]);
    let b = vlink(&["verdict", &script("braided.vl")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["table"], &["nu"], &["table", "--all", "--family", "parallel"], &["hv", "x.vl"]]
    {
        let o = vlink(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = vlink(&["nu", "/nonexistent/file.vl"]);
    assert_eq!(o.status.code(), Some(1));
}
