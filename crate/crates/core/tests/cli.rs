use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resolvedim")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_writes_headers() {
    let dir = tempfile::tempdir().unwrap();
    for (spec, header) in [("jfg:3,2", "9 9"), ("cp:4", "8 24"), ("cayley-zn:8,3", "8 24")] {
        let path = dir.path().join("g.txt");
        let o = bin(&["gen", spec, "-o", path.to_str().unwrap()]);
        assert!(o.status.success(), "{spec}");
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().next().unwrap(), header, "{spec}");
    }
    assert_eq!(bin(&["gen", "jfg:2,2"]).status.code(), Some(2));
    assert_eq!(bin(&["gen", "wheel:5"]).status.code(), Some(2));
}

fn dim_value(args: &[&str]) -> String {
    let mut full = vec!["dim"];
    full.extend_from_slice(args);
    full.push("--csv");
    let o = bin(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let record = out.lines().nth(1).unwrap().to_string();
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(record.as_bytes());
    reader.records().next().unwrap().unwrap()[3].to_string()
}

#[test]
fn dim_values() {
    assert_eq!(dim_value(&["jfg:3,2", "--invariant", "beta"]), "3");
    assert_eq!(dim_value(&["jfg:3,2", "--invariant", "sdim", "--method", "mmd"]), "5");
    assert_eq!(dim_value(&["cp:4", "--invariant", "psi"]), "4");
    assert_eq!(dim_value(&["cp:4", "--invariant", "adjdim", "--method", "brute"]), "4");
    let text = stdout(&bin(&["dim", "jfg:3,2"]));
    assert!(text.contains("β = 3"));
    assert!(text.contains("β̂"));
}

#[test]
fn dim_reads_edge_lists_and_reports_errors() {
    let dir = tempfile::tempdir().unwrap();
    let split = dir.path().join("split.txt");
    std::fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
    let path = split.to_str().unwrap();
    assert_eq!(bin(&["dim", path, "--invariant", "beta"]).status.code(), Some(3));
    assert_eq!(dim_value(&[path, "--invariant", "adjdim"]), "2");
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 7\n").unwrap();
    assert_eq!(bin(&["dim", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(bin(&["dim", "cycle:15", "--method", "brute"]).status.code(), Some(4));
    assert_eq!(bin(&["dim", "jfg:3,2", "--invariant", "beta", "--method", "mmd"]).status.code(), Some(2));
    assert_eq!(bin(&["dim", "jfg:3,2", "--invariant", "gamma"]).status.code(), Some(2));
}

fn sweep_rows(args: &[&str]) -> Vec<csv::StringRecord> {
    let mut full = vec!["sweep"];
    full.extend_from_slice(args);
    let o = bin(&full);
    assert!(o.status.success(), "{args:?}");
    csv::Reader::from_reader(o.stdout.as_slice()).records().map(Result::unwrap).collect()
}

#[test]
fn sweep_row_counts_and_status() {
    let rows = sweep_rows(&["--family", "jfg", "--n", "3..5", "--m", "2..3", "--invariants", "beta,psi,sdim,adjdim"]);
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| &r[5] == "PASS"));
    let rows = sweep_rows(&["--family", "cp", "--n", "8..12:2", "--invariants", "beta,psi,sdim"]);
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| &r[5] == "PASS"));
    let rows = sweep_rows(&["--family", "jfg", "--n", "3", "--m", "1", "--invariants", "beta"]);
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][5], "OUTSIDE_GUARD");
    assert_eq!(&rows[0][4], "n/a");
    assert!(rows[0][3].parse::<usize>().is_ok());
}

#[test]
fn sweep_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    let o = bin(&["sweep", "--family", "cayley-d2n", "--n", "4..5", "--invariants", "beta", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("family,n_vertices,invariant,solver_value,closed_form_value,match,witness,elapsed_ms,nodes_explored"));
    assert_eq!(text.lines().count(), 3);
    assert_eq!(bin(&["sweep", "--family", "jfg", "--n", "5..3"]).status.code(), Some(2));
}

#[test]
fn verify_runs() {
    let o = bin(&["verify"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(!out.contains("FAIL "));
    let o = bin(&["verify", "--claim", "JFG-psi"]);
    let out = stdout(&o);
    let checks: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|l| l.contains("JFG-psi")));
    let list = stdout(&bin(&["verify", "--list"]));
    assert_eq!(list.lines().count(), 11);
    assert!(list.contains("guard"));
    assert_eq!(bin(&["verify", "--claim", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&[]).status.code(), Some(2));
}
