use std::path::PathBuf;
use std::process::{Command, Output};

fn graded(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graded"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("graded-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn catalog_file(name: &str, param: Option<&str>) -> PathBuf {
    let mut args = vec!["catalog", name];
    if let Some(p) = param {
        args.extend(["--param", p]);
    }
    let out = graded(&args);
    assert_eq!(out.status.code(), Some(0));
    write(
        &format!("{name}-{}.ring", param.unwrap_or("")),
        &stdout(&out),
    )
}

#[test]
fn validate_reports_and_exits_zero() {
    let f = catalog_file("example2", None);
    let out = graded(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("ring example2: order 4"));
}

#[test]
fn broken_file_exits_one() {
    let f = write("broken.ring", "ring r\norder 2\nunity none\nadd\n0 1\n1\n");
    let out = graded(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 6"));

    let missing = graded(&["validate", "/nonexistent/ring"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn axiom_violation_exits_one() {
    let text = stdout(&graded(&["catalog", "example2"])).replace("g1: 0 3", "g1: 0 2");
    let f = write("bad-grading.ring", &text);
    let out = graded(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid grading"));
}

#[test]
fn cap_exceeded_exits_three() {
    let f = catalog_file("gaussian-mod", Some("12"));
    let out = graded(&["--max-order", "100", "validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // Validation passes under the default cap, enumeration does not.
    let big = catalog_file("gaussian-mod", Some("17"));
    assert_eq!(
        graded(&["validate", big.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert_eq!(
        graded(&["ideals", big.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn ideals_lists_in_canonical_order() {
    let f = catalog_file("example2", None);
    let right = graded(&["ideals", f.to_str().unwrap()]);
    assert_eq!(stdout(&right), "{0}\n{0,1}\n{0,3}\n{0,1,2,3}  (improper)\n");
    let two = graded(&["ideals", f.to_str().unwrap(), "--twosided"]);
    assert_eq!(stdout(&two), "{0}\n{0,3}\n{0,1,2,3}  (improper)\n");
}

#[test]
fn machine_classification_is_tab_separated() {
    let f = catalog_file("matrix-z2", None);
    let out = graded(&["classify", f.to_str().unwrap(), "--machine"]);
    let text = stdout(&out);
    let records: Vec<&str> = text.lines().skip(1).collect();
    assert!(!records.is_empty());
    for r in records {
        assert_eq!(r.split('\t').count(), 9);
    }
}

#[test]
fn quotient_emits_a_valid_ring_file() {
    let f = catalog_file("example2", None);
    let out = graded(&["quotient", f.to_str().unwrap(), "--ideal", "0,3"]);
    assert_eq!(out.status.code(), Some(0));
    let q = write("quotient.ring", &stdout(&out));
    let report = graded(&["classify", q.to_str().unwrap(), "--machine"]);
    assert_eq!(
        stdout(&report).lines().nth(1).unwrap(),
        "{0}\t1\t1\t1\t1\t1\t-\t-\t-"
    );

    let not_two_sided = graded(&["quotient", f.to_str().unwrap(), "--ideal", "0,1"]);
    assert_eq!(not_two_sided.status.code(), Some(1));
}

#[test]
fn audit_on_a_file_and_on_the_corpus() {
    let f = catalog_file("example2", None);
    let out = graded(&[
        "audit",
        f.to_str().unwrap(),
        "--theorems",
        "square-zero-ideal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "PASS square-zero-ideal checked=2 skipped=1\n");

    let corpus = graded(&["audit", "--corpus", "--reading", "xr"]);
    assert_eq!(corpus.status.code(), Some(0));
    let text = stdout(&corpus);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 16);
    assert!(text.contains("note: reading xr: "));
    assert!(!text.contains("reading rxr"));

    let unknown = graded(&["audit", "--corpus", "--theorems", "nope"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn catalog_errors_and_listing() {
    assert_eq!(graded(&["catalog", "nope"]).status.code(), Some(1));
    assert_eq!(
        graded(&["catalog", "upper-tri", "--param", "4"])
            .status
            .code(),
        Some(1)
    );
    let list = stdout(&graded(&["catalog", "list"]));
    assert_eq!(list.lines().count(), 5);
}

#[test]
fn usage_errors_exit_one_not_two() {
    assert_eq!(graded(&["classify"]).status.code(), Some(1));
    assert_eq!(graded(&["--help"]).status.code(), Some(0));
}
