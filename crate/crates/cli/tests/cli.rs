use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn rw_lab(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rw-lab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rw-lab");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let o = rw_lab(args, stdin);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const GEN: [&str; 13] = ["gen", "--n", "8", "--alpha", "2", "--beta", "1", "--variant", "dir-edge", "--C", "2", "--seed", "1"];

#[test]
fn gen_then_solve_is_deterministic() {
    let inst = ok(&GEN, None);
    assert_eq!(inst, ok(&GEN, None));
    let a = ok(&["solve", "--solver", "dp"], Some(&inst));
    assert!(a == "YES\n" || a == "NO\n", "{a}");
    assert_eq!(a, ok(&["solve", "--solver", "dp"], Some(&inst)));
    assert_eq!(a, ok(&["solve", "--solver", "matrix-chain"], Some(&inst)));
    assert_eq!(a, ok(&["solve", "--solver", "oracle"], Some(&inst)));
}

#[test]
fn reduce_preserves_answers_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..6 {
        let inst = dir.path().join(format!("inst{seed}.txt"));
        let out = dir.path().join(format!("out{seed}.txt"));
        let s = seed.to_string();
        ok(&["gen", "--n", "6", "--alpha", "1.2", "--beta", "1", "--seed", &s, "--out", path(&inst)], None);
        for name in ["red_walk_to_wordbreak", "red_walk_to_cfl", "red_diredgeC_to_nfa"] {
            ok(&["reduce", "--name", name, path(&inst), "--out", path(&out)], None);
            assert_eq!(ok(&["solve", path(&out)], None), ok(&["solve", path(&inst)], None), "{name} seed {seed}");
        }
    }
}

#[test]
fn padding_honours_targets() {
    let inst = ok(&["gen", "--n", "5", "--alpha", "1.2", "--beta", "1", "--seed", "2"], None);
    let out = ok(&["reduce", "--name", "pad_instance", "--target-n", "9", "--target-l", "10"], Some(&inst));
    assert!(out.contains("graph directed edge n=9 "), "{out}");
    assert_eq!(ok(&["solve"], Some(&out)), ok(&["solve"], Some(&inst)));
}

#[test]
fn certify_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, cert) = (dir.path().join("i.txt"), dir.path().join("c.txt"));
    ok(&["gen", "--n", "7", "--alpha", "1.5", "--beta", "1", "--seed", "5", "--out", path(&inst)], None);
    ok(&["certify", path(&inst), "--out", path(&cert)], None);
    assert_eq!(ok(&["verify", path(&inst), path(&cert)], None), "VALID\n");

    let text = std::fs::read_to_string(&cert).unwrap();
    let flipped = if text.contains("claim=1") {
        text.replacen("claim=1", "claim=0", 1)
    } else {
        text.replacen("claim=0", "claim=1", 1)
    };
    std::fs::write(&cert, flipped).unwrap();
    assert_eq!(ok(&["verify", path(&inst), path(&cert)], None), "INVALID\n");
}

#[test]
fn crosscheck_reports_and_exits() {
    let out = ok(&["crosscheck", "red_walk_to_cfl", "--seeds", "200", "--max-n", "6", "--max-l", "6"], None);
    assert!(out.ends_with("red_walk_to_cfl: 200/200 pass\n"), "{out}");
    assert_eq!(out.lines().count(), 201);

    let empty = ok(&["crosscheck", "red_walk_to_cfl", "--seeds", "0"], None);
    assert_eq!(empty, "red_walk_to_cfl: 0/0 pass\n");

    let bad = rw_lab(&["crosscheck", "red_walk_to_cfl", "--seeds", "10", "--corrupt"], None);
    assert!(!bad.status.success());
    assert!(stdout(&bad).contains("FAIL"));

    let unknown = rw_lab(&["crosscheck", "red_walk_to_sat"], None);
    assert!(!unknown.status.success());
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("unknown"));
}

#[test]
fn audit_csv() {
    let csv = ok(&["audit", "all", "--seeds", "20"], None);
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert_eq!(header, "reduction,seed,n,m,l,n_out,m_out,l_out,bound_n,bound_m,bound_l,formula,ok");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 17 * 20);
    for r in &rows {
        assert_eq!(r.split(',').count(), 13, "{r}");
        assert!(r.ends_with(",true"), "{r}");
    }
}

#[test]
fn bench_csv_and_slope() {
    let out = ok(&["bench", "--ns", "16,24", "--repetitions", "1", "--solvers", "dp,matrix-chain,uniform-power", "--slope"], None);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("solver,n,m,l,variant,seed,time_ns,answer"));
    let records: Vec<&str> = out.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(records.len(), 4);
    for n in ["16", "24"] {
        let answers: Vec<&str> = records.iter().filter(|r| r.split(',').nth(1) == Some(n)).map(|r| r.rsplit(',').next().unwrap()).collect();
        assert_eq!(answers.len(), 2);
        assert_eq!(answers[0], answers[1]);
    }
    assert!(out.contains("# skipped uniform-power n=16"));
    assert!(out.contains("# slope dp dir-edge "));
}

#[test]
fn malformed_input_is_an_error() {
    let o = rw_lab(&["solve"], Some("kind walk\ngraph directed edge n=2 C=1\nedge 0 1 0\nst 0 1\nseq 1\n"));
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    let o = rw_lab(&["solve"], Some("kind walk\nst zero\n"));
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn list_names_every_reduction() {
    let out = ok(&["list"], None);
    assert_eq!(out.lines().count(), 17);
    assert!(out.contains("red_clique_to_nfa clique"));
}
