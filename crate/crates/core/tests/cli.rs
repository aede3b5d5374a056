use std::path::Path;
use std::process::{Command, Output};

use fuzzy_balance::io::{read_graph, read_record};

fn fzb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fzb"))
        .args(args)
        .output()
        .expect("run fzb")
}

fn code(args: &[&str]) -> i32 {
    fzb(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(fzb(args).stdout).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn generate_and_measure() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = path(dir.path(), "k3.json");
    assert_eq!(code(&["gen", "kn", "--n", "3", "--c", "1/2", "-o", &k3]), 0);
    assert_eq!(code(&["validate", &k3]), 0);
    let out = stdout(&["density", &k3]);
    assert!(out.starts_with("D* = 2/1\n"), "{out}");
    assert_eq!(code(&["balance", &k3, "--method", "enum"]), 0);
    assert_eq!(code(&["balance", &k3, "--method", "flow"]), 0);
    let out = stdout(&["classify", &k3]);
    assert!(out.contains("regular:         1/1"), "{out}");
    assert!(out.contains("totally regular: 3/2"), "{out}");
}

#[test]
fn unbalanced_graph_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "g.json");
    // A heavy edge plus a light isolated vertex.
    std::fs::write(
        &file,
        r#"{"vertices":[{"id":"a","sigma":"1"},{"id":"b","sigma":"1"},{"id":"c","sigma":"1"}],
            "edges":[{"u":"a","v":"b","mu":"1"}]}"#,
    )
    .unwrap();
    let out = fzb(&["balance", &file, "--witness"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("witness: {a, b}"), "{text}");
}

#[test]
fn operations_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = path(dir.path(), "g1.json");
    let g2 = path(dir.path(), "g2.json");
    let out = path(dir.path(), "out.json");
    assert_eq!(code(&["gen", "cn", "--n", "4", "--c", "1/3", "-o", &g1]), 0);
    assert_eq!(code(&["gen", "path", "--n", "2", "--c", "1", "-o", &g2]), 0);
    assert_eq!(code(&["op", "cartesian", &g1, &g2, "-o", &out]), 0);
    let g = read_graph(Path::new(&out)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
    // Both operands name their vertices v1, v2, ...
    assert_eq!(code(&["op", "union", &g1, &g2, "-o", &out]), 2);
    assert_eq!(code(&["complement", &g1, "-o", &out]), 0);
    assert_eq!(code(&["iso", &g1, &g1]), 0);
    assert_eq!(code(&["iso", &g1, &out]), 1);
}

#[test]
fn self_complementary_path() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = path(dir.path(), "p4.json");
    let c = path(dir.path(), "c.json");
    assert_eq!(code(&["gen", "path", "--n", "4", "--c", "1", "-o", &p4]), 0);
    assert_eq!(code(&["complement", &p4, "-o", &c]), 0);
    let out = fzb(&["iso", &p4, &c]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.json");
    std::fs::write(
        &bad,
        r#"{"vertices":[{"id":"a","sigma":"1/2"},{"id":"b","sigma":"1"}],
            "edges":[{"u":"a","v":"b","mu":"0.6"}]}"#,
    )
    .unwrap();
    let out = fzb(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("edges[0].mu"));
    assert_eq!(code(&["density", &path(dir.path(), "missing.json")]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["gen", "kn", "--n", "3", "--c", "3/2", "-o", &bad]), 2);
    assert_eq!(code(&["gen", "cn", "--n", "2", "--c", "1/2", "-o", &bad]), 2);
    assert_eq!(code(&["balance", &bad, "--method", "simplex"]), 2);
    assert_eq!(code(&["audit", "--property", "P-NOPE"]), 2);
    assert_eq!(code(&["search", "N-NOPE"]), 2);
    assert_eq!(code(&["audit", "--property", "P-KN", "--grid", "1"]), 2);
}

#[test]
fn audit_exit_codes() {
    assert_eq!(
        code(&["audit", "--property", "P-SELFCOMP-SUM", "--samples", "50", "--seed", "3"]),
        0
    );
    let dir = tempfile::tempdir().unwrap();
    let out_dir = path(dir.path(), "corpus");
    // Four equal vertices already break the density bound.
    let args = [
        "audit", "--property", "P-SELFCOMP-D1", "--samples", "100", "--max-vertices", "6",
        "--out", &out_dir,
    ];
    assert_eq!(code(&args), 1);
    let record = read_record(&Path::new(&out_dir).join("p-selfcomp-d1.record.json")).unwrap();
    assert!(fuzzy_balance::revalidate(&record).unwrap());
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = path(dir.path(), "cx");
    assert_eq!(code(&["search", "N-CONVERSE-D1", "--out", &out_dir]), 1);
    assert!(Path::new(&out_dir).join("n-converse-d1.record.json").exists());
    assert!(Path::new(&out_dir).join("n-converse-d1.g0.json").exists());
    assert_eq!(code(&["search", "N-STRONG-NOT-COMPLETE", "--budget", "0"]), 0);
}
