//! End-to-end tests of the command-line interface, driving the built
//! binary through files in a temporary directory.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posetdist"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const M_TEXT: &str = "# the pentagon\n0 < 1\n0 < 2\n2 < 3\n1 < 4\n3 < 4\nlabel 0 z\nlabel 1 w\nlabel 2 y\nlabel 3 x\nlabel 4 v\n";

#[test]
fn analyze_reports_m_facts() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("m.txt"), M_TEXT).unwrap();
    let out = run(&["analyze", "m.txt"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("points: 5"));
    assert!(text.contains("lattice: yes"));
    assert!(text.contains("distributive: no"));
    assert!(text.contains("|Aut|: 1"));
    assert!(text.contains("ranked: no"));
    assert!(text.contains("width: 2"));
}

#[test]
fn analyze_empty_file_is_empty_poset() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.txt"), "").unwrap();
    let out = run(&["analyze", "empty.txt"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("points: 0"));
}

#[test]
fn analyze_parse_error_has_line_number_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "0 < 1\nwat\n").unwrap();
    let out = run(&["analyze", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn analyze_l150_reports_irreducibles() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(&["gen", "divisibility", "150", "-o", "l150.json"], dir.path());
    assert!(gen.status.success());
    let out = run(&["analyze", "l150.json"], dir.path());
    let text = stdout(&out);
    assert!(text.contains("|Q_L|: 4"));
    assert!(text.contains("|J(Q_L)|: 12"));
    assert!(text.contains("distributive: yes"));
}

#[test]
fn gen_boolean_writes_eight_points() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "boolean", "3", "-o", "b3.json"], dir.path());
    assert!(out.status.success());
    let json = std::fs::read_to_string(dir.path().join("b3.json")).unwrap();
    let p = posetdist::io::parse_poset_json(&json).unwrap();
    assert_eq!(p.n(), 8);
}

#[test]
fn gen_chains_and_downset() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "chains", "3x2", "-o", "c.txt"], dir.path());
    assert!(out.status.success());
    let p = posetdist::io::parse_poset_text(
        &std::fs::read_to_string(dir.path().join("c.txt")).unwrap(),
    )
    .unwrap();
    assert_eq!(p.n(), 6);
    assert_eq!(p.covers().len(), 3);

    // downsets of a 2-antichain form the 4-point diamond
    std::fs::write(dir.path().join("anti.txt"), "label 0 a\nlabel 1 b\n").unwrap();
    let out = run(&["gen", "downset", "anti.txt", "-o", "d.json"], dir.path());
    assert!(out.status.success());
    let d = posetdist::io::parse_poset_json(
        &std::fs::read_to_string(dir.path().join("d.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(d.n(), 4);
    assert_eq!(d.label(0), Some("{}"));
    assert_eq!(d.label(3), Some("{a,b}"));
}

#[test]
fn gen_respects_size_cap_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["gen", "boolean", "10"])
        .env("POSETDIST_SIZE_CAP", "100")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("size cap"));
}

#[test]
fn color_linext_on_l150_passes() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "150", "-o", "l150.json"], dir.path());
    let out = run(&["color", "linext", "l150.json", "-o", "c.json"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("colors: 2"));
    assert!(text.contains("red points: 3"));
    assert!(text.contains("distinguishing: PASS"));
    assert!(text.contains("result: PASS"));
    let c = posetdist::io::parse_coloring_json(
        &std::fs::read_to_string(dir.path().join("c.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(c.len(), 12);
}

#[test]
fn color_linext_extension_flag_changes_reds() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "150", "-o", "l150.json"], dir.path());
    let a = run(&["color", "linext", "l150.json"], dir.path());
    let b = run(&["color", "linext", "l150.json", "--extension", "3"], dir.path());
    assert!(a.status.success() && b.status.success());
    assert_ne!(stdout(&a), stdout(&b));
    // out-of-range extension index is a usage error
    let c = run(&["color", "linext", "l150.json", "--extension", "99"], dir.path());
    assert_eq!(c.status.code(), Some(2));
}

#[test]
fn color_dilworth_on_m_passes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("m.txt"), M_TEXT).unwrap();
    let out = run(&["color", "dilworth", "m.txt"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("colors: 2"));
    assert!(text.contains("chain-proper: PASS"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn color_boolean_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "boolean", "4", "-o", "b4.json"], dir.path());
    let out = run(&["color", "boolean", "b4.json"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("proper: PASS"));
    assert!(text.contains("distinguishing: PASS"));
}

#[test]
fn color_divis_via_n_flag_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let via_flag = run(&["color", "divis", "--n", "150"], dir.path());
    assert!(via_flag.status.success());
    assert!(stdout(&via_flag).contains("new colors: 1"));

    run(&["gen", "divisibility", "150", "-o", "l150.json"], dir.path());
    let via_file = run(&["color", "divis", "l150.json"], dir.path());
    assert!(via_file.status.success());
    assert!(stdout(&via_file).contains("result: PASS"));
}

#[test]
fn color_improved_needs_three_colors() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "6", "-o", "l6.json"], dir.path());
    let out = run(&["color", "improved", "l6.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least 3 colors"));
}

#[test]
fn color_leftmost_with_embedding() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "36", "-o", "l36.json"], dir.path());
    // diamond drawing of the divisors of 36: ranks by descending power of 2
    let json = std::fs::read_to_string(dir.path().join("l36.json")).unwrap();
    let p = posetdist::io::parse_poset_json(&json).unwrap();
    let idx = |label: &str| (0..p.n()).find(|&i| p.label(i) == Some(label)).unwrap();
    let emb = format!(
        "rank 0: {}\nrank 1: {} {}\nrank 2: {} {} {}\nrank 3: {} {}\nrank 4: {}\n",
        idx("1"),
        idx("2"),
        idx("3"),
        idx("4"),
        idx("6"),
        idx("9"),
        idx("12"),
        idx("18"),
        idx("36"),
    );
    std::fs::write(dir.path().join("l36.emb"), emb).unwrap();
    let out = run(
        &["color", "leftmost", "l36.json", "--embedding", "l36.emb"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("result: PASS"));

    // without the flag: usage error
    let out = run(&["color", "leftmost", "l36.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dnum_values_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("m.txt"), M_TEXT).unwrap();
    let out = run(&["dnum", "m.txt"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("D = 1"));

    let out = run(&["dnum", "m.txt", "--chromatic"], dir.path());
    assert!(stdout(&out).contains("chi_D = 4"));
    assert!(stdout(&out).contains("witness:"));

    // a single point
    std::fs::write(dir.path().join("one.txt"), "label 0 only\n").unwrap();
    let out = run(&["dnum", "one.txt"], dir.path());
    assert!(stdout(&out).contains("D = 1"));

    // cap exceeded is a failure exit
    std::fs::write(dir.path().join("anti.txt"), "label 0 a\nlabel 1 b\nlabel 2 c\n").unwrap();
    let out = run(&["dnum", "anti.txt", "--cap", "2"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dnum_s4_and_b3() {
    let dir = tempfile::tempdir().unwrap();
    let mut s4 = String::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s4.push_str(&format!("{i} < {}\n", 4 + j));
            }
        }
    }
    std::fs::write(dir.path().join("s4.txt"), s4).unwrap();
    let out = run(&["dnum", "s4.txt"], dir.path());
    assert!(stdout(&out).contains("D = 2"));

    run(&["gen", "boolean", "3", "-o", "b3.json"], dir.path());
    let out = run(&["dnum", "b3.json", "--chromatic"], dir.path());
    assert!(stdout(&out).contains("chi_D = 5"));
}

#[test]
fn dot_output_is_layered_and_colored() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "12", "-o", "l12.json"], dir.path());
    let out = run(&["gen", "divisibility", "12", "-o", "l12.dot"], dir.path());
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("l12.dot")).unwrap();
    assert!(dot.contains("rankdir=BT"));
    assert!(dot.contains("rank=same"));

    let out = run(&["color", "dilworth", "l12.json", "-o", "c.dot"], dir.path());
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("c.dot")).unwrap();
    assert!(dot.contains("fillcolor"));
}

#[test]
fn manifest_records_digest_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "divisibility", "150", "-o", "l150.json"], dir.path());
    let out = run(
        &[
            "color",
            "linext",
            "l150.json",
            "-o",
            "c.json",
            "--manifest",
            "run.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["seedless"], true);
    assert_eq!(manifest["outputs"][0], "c.json");
    assert_eq!(manifest["input_digest"].as_str().unwrap().len(), 64);

    // replaying byte-reproduces the output
    let first = std::fs::read(dir.path().join("c.json")).unwrap();
    run(
        &["color", "linext", "l150.json", "-o", "c.json"],
        dir.path(),
    );
    assert_eq!(first, std::fs::read(dir.path().join("c.json")).unwrap());
}
