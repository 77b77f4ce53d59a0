use std::path::Path;
use std::process::{Command, Output};

fn cbo(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbo"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn gen_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let out = cbo(dir.path(), &["gen", "wheel", "--n", "6", "-o", "w6.graph"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(dir.path().join("w6.graph")).unwrap();
    assert!(text.starts_with("# family: wheel n=6\n6 10\n"));

    // Parsing and re-serializing reproduces the data lines exactly.
    let g = cbo_core::io::parse_graph(&text).unwrap();
    let data: String = text.lines().filter(|l| !l.starts_with('#')).fold(
        String::new(),
        |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        },
    );
    assert_eq!(cbo_core::io::graph_to_string(&g, &[]), data);
}

#[test]
fn construct_then_verify_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = cbo(dir.path(), &["cbo", "prism", "--n", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    for engine in ["naive", "lct"] {
        let v = cbo(
            dir.path(),
            &[
                "verify",
                "prism_n8.graph",
                "prism_n8.ord",
                "--engine",
                engine,
            ],
        );
        assert!(v.status.success());
        assert_eq!(stdout(&v), "CBO\n");
    }
}

#[test]
fn prism_parameter_error_names_the_congruence() {
    let dir = tempfile::tempdir().unwrap();
    let out = cbo(dir.path(), &["cbo", "prism", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("n ≡ 2 (mod 3)"),
        "stderr was: {}",
        stderr(&out)
    );
}

#[test]
fn verify_reports_failure_with_start_and_reason() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("k4.graph"),
        "4 6\n1 2\n1 3\n2 3\n1 4\n2 4\n3 4\n",
    )
    .unwrap();
    std::fs::write(dir.path().join("k4.ord"), "0\n1\n2\n3\n4\n5\n").unwrap();
    let out = cbo(dir.path(), &["verify", "k4.graph", "k4.ord"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NOT-CBO start=1 reason=cycle-in-window\n");
}

#[test]
fn fixtures_emit_and_all_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = cbo(dir.path(), &["fixtures", "--dir", "fx"]);
    assert!(out.status.success());
    let listed: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(listed.len(), 26);
    for f in cbo_core::fixtures::ALL {
        let g = format!("fx/{}.graph", f.name);
        let o = format!("fx/{}.ord", f.name);
        let v = cbo(dir.path(), &["verify", &g, &o]);
        assert!(v.status.success(), "{} failed verification", f.name);
    }
}

#[test]
fn density_output_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = cbo(dir.path(), &["fixtures", "--dir", "fx"]);
    assert!(out.status.success());
    let d = cbo(dir.path(), &["density", "fx/petersen.graph"]);
    assert_eq!(stdout(&d), "5/3\n");

    let u = cbo(dir.path(), &["density", "fx/petersen.graph", "--uniform"]);
    assert!(u.status.success());
    assert_eq!(stdout(&u), "5/3\nuniformly-dense\n");

    std::fs::write(
        dir.path().join("k4p.graph"),
        "5 7\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n",
    )
    .unwrap();
    let w = cbo(dir.path(), &["density", "k4p.graph", "--uniform"]);
    assert_eq!(w.status.code(), Some(1));
    assert_eq!(stdout(&w), "7/4\nnot-uniformly-dense witness=1,2,3,4\n");
}

#[test]
fn search_prints_ordering_or_none()
{
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c4.graph"), "4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
    let out = cbo(dir.path(), &["search", "c4.graph"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n1\n2\n3\n");

    std::fs::write(
        dir.path().join("k4p.graph"),
        "5 7\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n",
    )
    .unwrap();
    let none = cbo(dir.path(), &["search", "k4p.graph"]);
    assert_eq!(none.status.code(), Some(1));
    assert_eq!(stdout(&none), "NONE\n");

    let tiny = cbo(dir.path(), &["search", "c4.graph", "--node-limit", "1"]);
    assert_eq!(tiny.status.code(), Some(3));
    assert_eq!(stdout(&tiny), "INCONCLUSIVE\n");
}

#[test]
fn dot_labels_follow_the_ordering() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k3.graph"), "3 3\n1 2\n2 3\n3 1\n").unwrap();
    std::fs::write(dir.path().join("k3.ord"), "2\n0\n1\n").unwrap();

    let plain = cbo(dir.path(), &["dot", "k3.graph"]);
    assert_eq!(
        stdout(&plain),
        "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n  3 -- 1;\n}\n"
    );

    let labeled = cbo(dir.path(), &["dot", "k3.graph", "--ordering", "k3.ord"]);
    let text = stdout(&labeled);
    assert!(text.contains("1 -- 2 [label=\"2\"];"));
    assert!(text.contains("2 -- 3 [label=\"3\"];"));
    assert!(text.contains("3 -- 1 [label=\"1\"];"));
}

#[test]
fn malformed_files_report_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.graph"), "3 3\n1 2\n2 2\n3 1\n").unwrap();
    std::fs::write(dir.path().join("bad.ord"), "0\n1\n2\n").unwrap();
    let out = cbo(dir.path(), &["verify", "bad.graph", "bad.ord"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "stderr: {}", stderr(&out));
}

#[test]
fn max2deg_generation_is_seed_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = cbo(
        dir.path(),
        &["gen", "max2deg", "--n", "12", "--seed", "7", "-o", "a.graph"],
    );
    let b = cbo(
        dir.path(),
        &["gen", "max2deg", "--n", "12", "--seed", "7", "-o", "b.graph"],
    );
    assert!(a.status.success() && b.status.success());
    let ta = std::fs::read_to_string(dir.path().join("a.graph")).unwrap();
    let tb = std::fs::read_to_string(dir.path().join("b.graph")).unwrap();
    assert_eq!(ta, tb);

    // The seed is required, not implicit.
    let missing = cbo(dir.path(), &["gen", "max2deg", "--n", "12"]);
    assert!(!missing.status.success());
}
