use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use novikov_cli::{parse_problem, Report};

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn novikov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_novikov")).args(args).output().expect("binary runs")
}

fn example(name: &str) -> String {
    corpus().join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

#[test]
fn every_corpus_file_reports_cleanly_and_matches_its_golden_output() {
    let files = corpus_files();
    assert!(files.len() >= 10);
    for f in files {
        let path = f.to_string_lossy();
        let out = novikov(&["report", &path, "--format", "machine"]);
        assert_eq!(out.status.code(), Some(0), "{path}: {}", stderr(&out));
        let golden = corpus().join("expected").join(f.file_name().unwrap());
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            fs::write(&golden, &out.stdout).unwrap();
        }
        let expected = fs::read_to_string(&golden).unwrap_or_else(|_| panic!("missing {}", golden.display()));
        assert_eq!(stdout(&out), expected, "{path}");
        let report: Report = serde_json::from_str(&expected).unwrap();
        if let Some(e) = report.equivariant {
            assert!(e.regular_identity, "{path}: regular-representation identity");
            assert_eq!(e.regular, report.twisted.unwrap(), "{path}");
        }
    }
}

#[test]
fn machine_reports_round_trip() {
    for f in corpus_files() {
        let out = novikov(&["report", &f.to_string_lossy(), "--format", "machine", "--grid", "1/2,1,2"]);
        let text = stdout(&out);
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
        assert_eq!(report.sample.as_ref().map(Vec::len), Some(3));
    }
}

#[test]
fn output_is_deterministic() {
    let a = novikov(&["report", &example("s3_triangle.json"), "--format", "machine"]);
    let b = novikov(&["report", &example("s3_triangle.json"), "--format", "machine"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn betti_of_hollow_triangle() {
    let out = novikov(&["betti", &example("hollow_triangle.json")]);
    assert_eq!(stdout(&out), "1 1\n");
    let out = novikov(&["betti", &example("hollow_triangle.json"), "--degree", "1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn twisted_circle_vanishes_generically() {
    let out = novikov(&["twisted", &example("twisted_circle.json")]);
    assert_eq!(stdout(&out), "0 0\n");
}

#[test]
fn jumps_show_factors_and_logarithms() {
    let out = novikov(&["jumps", &example("twisted_annulus.json")]);
    let text = stdout(&out);
    assert!(text.contains("jump factor s - 1"), "{text}");
    assert!(text.contains("(approx)"), "{text}");
}

#[test]
fn cubic_monodromy_has_one_positive_and_two_complex_jumps() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circle.json");
    fs::write(
        &path,
        r#"{"vertices": 3, "simplices": [[0,1],[1,2],[0,2]], "cocycle": [{"edge": [0,1], "value": 3}]}"#,
    )
    .unwrap();
    let out = novikov(&["jumps", &path.to_string_lossy(), "--format", "machine"]);
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let degree0 = &report.jumps.unwrap()[0];
    assert_eq!(degree0.factors[0].display, "s^3 - 1");
    assert_eq!(degree0.positive_real_jumps.len(), 1);
    assert!(degree0.positive_real_jumps[0].exact);
    assert_eq!(degree0.complex_jumps, 2);
}

#[test]
fn rational_cocycles_are_scaled() {
    let out = novikov(&["jumps", &example("rational_circle.json"), "--format", "machine"]);
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.cocycle_scale, 6);
    assert_eq!(report.jumps.unwrap()[0].factors[0].display, "s^5 - 1");
}

#[test]
fn sample_prints_csv() {
    let out = novikov(&["sample", &example("twisted_circle.json"), "--grid", "-1,1/2,1,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "s,dim0,dim1\n-1,1,1\n1/2,0,0\n1,1,1\n2,0,0\n");
    let out = novikov(&["sample", &example("twisted_circle.json"), "--grid", "1:2:1/2", "--format", "machine"]);
    assert_eq!(stdout(&out), "s,dim0,dim1\n1,1,1\n3/2,0,0\n2,0,0\n");
}

#[test]
fn sample_without_grid_is_a_usage_error() {
    let out = novikov(&["sample", &example("twisted_circle.json")]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn unknown_command_is_a_usage_error() {
    let out = novikov(&["frobnicate", &example("hollow_triangle.json")]);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("unknown command"));
    assert_eq!(novikov(&["betti"]).status.code(), Some(64));
}

#[test]
fn morse_check_exit_codes() {
    let out = novikov(&["morse-check", &example("no_critical_points.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("remainder -1"));
    assert_eq!(novikov(&["morse-check", &example("twisted_circle.json")]).status.code(), Some(0));
    assert_eq!(novikov(&["morse-check", &example("hollow_triangle.json")]).status.code(), Some(2));
    // report never fails on a verdict
    assert_eq!(novikov(&["report", &example("no_critical_points.json")]).status.code(), Some(0));
}

#[test]
fn morse_check_per_representation() {
    let out = novikov(&["morse-check", &example("reflected_path.json"), "--rep", "sign", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let morse = report.morse.unwrap();
    assert_eq!(morse.representations.len(), 1);
    assert_eq!(morse.representations[0].verdict.quotient.display(), "1");
    assert!(morse.regular.is_none());
}

#[test]
fn equivariant_specialized_at_one() {
    let out = novikov(&["equivariant", &example("antipodal_hexagon.json"), "--at", "1", "--format", "machine"]);
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let e = report.equivariant.unwrap();
    assert_eq!(e.dimensions, vec![1, 1]);
    assert_eq!(e.representations[0].novikov_numbers, vec![1, 1]);
    assert_eq!(e.representations[1].novikov_numbers, vec![0, 0]);
    assert!(e.regular_identity);
}

#[test]
fn unknown_representation_is_rejected() {
    let out = novikov(&["equivariant", &example("s3_triangle.json"), "--rep", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn double_check_reports_both_conventions() {
    let out = novikov(&["double-check", &example("disk_negative_rim.json"), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let d = report.double.unwrap();
    assert!(d.lemma.holds);
    let b = d.boundary_morse.unwrap();
    assert_eq!(b.minus.valid_conventions, vec!["M - N".to_string()]);
    assert_eq!(b.plus.valid_conventions.len(), 2);
    assert!(d.double_route.unwrap().holds);
    assert_eq!(novikov(&["double-check", &example("hollow_triangle.json")]).status.code(), Some(2));
}

#[test]
fn validation_collects_every_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{
            "vertices": ["a", "b", "c"],
            "simplices": [["a", "b"], ["b", "x"]],
            "cocycle": [{"edge": ["a", "c"], "value": 1}],
            "group": {"builtin": "Z7"},
            "critical": [{"id": "p", "index": 0, "stabilizer_index": 5}]
        }"#,
    )
    .unwrap();
    let out = novikov(&["betti", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("simplices[1][1]: unknown vertex \"x\""), "{err}");
    assert!(err.contains("cocycle[0].edge: [a,c] is not an edge"), "{err}");
    assert!(err.contains("group.builtin"), "{err}");
}

#[test]
fn parse_problem_reports_paths() {
    let errors = parse_problem(r#"{"simplices": []}"#).unwrap_err();
    assert_eq!(errors[0].path, "vertices");
    let errors = parse_problem(r#"{"vertices": 2, "unknown": 1}"#).unwrap_err();
    assert!(errors[0].reason.contains("unknown"));
    let errors = parse_problem(
        r#"{"vertices": 3, "simplices": [[0,1,2]], "cocycle": [{"edge": [0,1], "value": 1}]}"#,
    )
    .unwrap_err();
    assert_eq!(errors[0].path, "cocycle");
    let errors = parse_problem(
        r#"{"vertices": 2, "simplices": [[0,1]], "group": {"builtin": "Z2"}, "action": {"g1": {"0": 0, "1": 0}}}"#,
    )
    .unwrap_err();
    assert_eq!(errors[0].path, "action");
    let errors = parse_problem(
        r#"{"vertices": 2, "group": {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]}, "action": {}}"#,
    )
    .unwrap_err();
    assert!(errors.iter().any(|e| e.path == "characters"));
}

#[test]
fn non_invariant_cocycle_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hex.json");
    let text = fs::read_to_string(corpus().join("antipodal_hexagon.json"))
        .unwrap()
        .replace(r#"{"edge": [3, 4], "value": 1}"#, r#"{"edge": [3, 4], "value": 2}"#);
    fs::write(&path, text).unwrap();
    let out = novikov(&["equivariant", &path.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not invariant"), "{}", stderr(&out));
}
